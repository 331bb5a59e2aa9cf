#pragma once

#include <optional>
#include <set>
#include <vector>

#include "pfkit/descriptor.hpp"

namespace pfkit {

// Residue degrees of the primes of the real multiplication field over p.
struct SplittingData {
    std::vector<unsigned> f;
};

SplittingData splitting_data(const CurveFamilyDescriptor& d, u64 p);

// Block-cyclic shift by m inside each block; entry j holds j' (0-based).
std::vector<unsigned> index_permutation(const SplittingData& s, unsigned m);

struct DegreePrediction {
    Rational j_degree;      // pole of the Hauptmodul at the cusp
    bool triangle = false;  // pole at the order-m elliptic point instead
    Rational t_raw;         // first summand of the elliptic-pole variant
    long epsilon = 0;
    Rational t_corrected;   // t_raw - n * epsilon / m
    bool integral = true;   // the applicable value is an integer
    // degree applicable to the t-expansion congruence
    Rational applicable() const { return triangle ? t_corrected : j_degree; }
};

DegreePrediction predicted_degree(const CurveFamilyDescriptor& d, u64 p, unsigned j);

// Exponent N in y_j^N = alpha * y_j'(t^p)^N for the descriptor's Hauptmodul.
unsigned congruence_exponent(const CurveFamilyDescriptor& d);

// Holomorphic solutions y_1..y_g over Q modulo t^order (cached per descriptor hash).
std::vector<SeriesQ> family_solutions(const CurveFamilyDescriptor& d, size_t order);

struct AlphaComputation {
    PolyF alpha;                 // over F_p
    long last_nonzero = -1;      // index of the last nonzero coefficient of the quotient
    bool stabilized = false;     // quotient vanishes on (deg alpha, order) with at least p zeros of slack
};

// alpha := y_j^N / y_j'(t^p)^N mod p, read off to the given order.
AlphaComputation compute_alpha(const SeriesQ& yj, const SeriesQ& yjp, u64 p, unsigned N, size_t order);

struct CongruenceCertificate {
    std::string family;
    u64 p = 0;
    unsigned j = 0, j_prime = 0;  // 0-based
    unsigned N = 0;
    PolyF alpha;
    size_t verified_order = 0;
    DegreePrediction predicted;
    long observed_degree = -1;
    bool stabilized = false;
    bool degree_match = false;
    bool permutation_fallback = false;  // j' found by scanning rather than from the permutation
};

size_t default_congruence_order(const CurveFamilyDescriptor& d, u64 p);

CongruenceCertificate certify(const CurveFamilyDescriptor& d, u64 p, unsigned j, size_t order = 0);

struct CompositionCheck {
    unsigned j = 0, j_prime = 0, j_second = 0;
    size_t order = 0;
    bool ok = false;
};

// y_j^N = alpha_j(t) alpha_j'(t^p) y_j''(t^{p^2})^N mod p.
CompositionCheck verify_composition(const CurveFamilyDescriptor& d, u64 p, unsigned j, size_t order = 0);

struct IntegralityReport {
    std::set<u64> primes;      // primes dividing some denominator
    BigInt unfactored = 1;     // cofactor left after trial division
    bool pass = false;         // primes within S and nothing unfactored
};

IntegralityReport verify_integrality(const SeriesQ& y, const std::set<u64>& S, size_t order);

// L applied to the degree < p truncation of y vanishes modulo (p, t^{p-2}).
bool truncation_solves_mod_p(const FuchsianOperator& L, const SeriesQ& y, u64 p);

}  // namespace pfkit
