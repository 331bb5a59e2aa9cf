#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pfkit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a denominator is divisible by the working prime. The prime
// belongs to the bad set S of the computation that triggered it.
class DenominatorNotInvertible : public Error {
public:
    DenominatorNotInvertible(std::uint64_t p, const std::string& what)
        : Error(what), prime(p) {}
    std::uint64_t prime;
};

class NotPrime : public Error { using Error::Error; };
class NonFieldRing : public Error { using Error::Error; };
class FieldTooLarge : public Error { using Error::Error; };
class MixedRings : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };

class NonUnitLeadingRecursionCoefficient : public Error {
public:
    NonUnitLeadingRecursionCoefficient(long n_, std::uint64_t p_, const std::string& what)
        : Error(what), n(n_), p(p_) {}
    long n;
    std::uint64_t p;
};

class WrongExponents : public Error { using Error::Error; };
class UnsupportedOperator : public Error { using Error::Error; };
class NonStabilizing : public Error { using Error::Error; };
class DegreesTooLarge : public Error { using Error::Error; };
class DanglingCoefficients : public Error { using Error::Error; };
class DescriptorError : public Error { using Error::Error; };
class BadFiber : public Error { using Error::Error; };
class ClassificationUnavailable : public Error { using Error::Error; };
class RamifiedPrime : public Error { using Error::Error; };

}  // namespace pfkit
