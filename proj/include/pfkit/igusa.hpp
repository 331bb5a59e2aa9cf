#pragma once

#include <string>
#include <vector>

#include "pfkit/locus.hpp"

namespace pfkit {

// J3 is kept as a + b*sqrt5 with a, b in the field of J.
struct IgusaTriple {
    GF J1, J2, J3a, J3b;
    IgusaTriple conj() const { return {J1, J2, J3a, -J3b}; }
    std::string str() const;
};

bool operator==(const IgusaTriple& x, const IgusaTriple& y);
// Equal after possibly sending sqrt5 to -sqrt5.
bool equal_up_to_sqrt5(const IgusaTriple& x, const IgusaTriple& y);

// Rejects characteristic 2, 3 and 7.
IgusaTriple igusa_restrict(const GF& J);

struct IgusaExact {
    QuadraticElement J1, J2, J3;
};
IgusaExact igusa_restrict(const Rational& J);

struct IgusaRow {
    GF J;                // representative of a Galois orbit of supersingular J-values
    unsigned degree = 1; // size of the orbit
    IgusaTriple triple;
};

struct IgusaTable {
    std::string family, hash;
    u64 p = 0;
    std::vector<IgusaRow> rows;
};

// One row per Frobenius orbit of roots of the supersingular polynomial.
IgusaTable igusa_table(const CurveFamilyDescriptor& d, u64 p);

// Row given as integers (J1, J2, a, b) with J3 = a + b*sqrt5, reduced mod p.
IgusaTriple igusa_triple_from_ints(u64 p, long j1, long j2, long a, long b);

}  // namespace pfkit
