#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfkit/congruence.hpp"

namespace pfkit {

// Cusp-at-zero, cusp-at-pole Hauptmodul: lcm / gcd of [y_j^N]_p.
PolyF nonordinary_poly_cusp_pole(const CurveFamilyDescriptor& d, u64 p);
PolyF superspecial_poly(const CurveFamilyDescriptor& d, u64 p);

struct TriangleComponent {
    PolyF truncation;        // [y_j^n]_p in t
    DegreePrediction predicted;
    long j_power = 0;        // exponent of J in alpha_j(J)
    PolyF alpha_J;           // J^{j_power} * rev(truncation)^m
};

struct TriangleLocus {
    std::vector<TriangleComponent> components;
    PolyF no, sp;
};

// Pole of t at the order-m point; polynomials in J = 1/t.
TriangleLocus triangle_locus_poly(const CurveFamilyDescriptor& d, u64 p);

struct Bounds {
    std::string kind;          // which locus the main bounds refer to
    long lower = 0, upper = 0;
    long upper_sum_inside_floor = 0;  // single floor around the whole sum
    std::optional<long> secondary_upper;  // superspecial (inert) or supersingular (split) bound
    std::string secondary_kind;
};

Bounds cardinality_bounds(const CurveFamilyDescriptor& d, u64 p, unsigned n_p = 1);

struct DegreeRow {
    unsigned j = 0, j_prime = 0;
    DegreePrediction predicted;
    long observed_t_degree = -1;  // degree of the truncation
    long observed_j_degree = -1;  // degree of alpha_j(J) where applicable
    bool match = false;
};

struct FactorInfo {
    unsigned degree;
    PolyF factor;
};

struct LocusReport {
    std::string family;
    std::string hash;
    u64 p = 0;
    std::string splitting;  // "split", "inert" or "rational"
    std::string variable;   // "J" or the Hauptmodul name
    PolyF no, sp, ss;
    std::string ss_source;  // which polynomial the supersingular locus is read from
    std::vector<FactorInfo> ss_factors;
    std::vector<std::pair<unsigned, PolyF>> ss_ddf;
    std::vector<GF> roots_prime_field;
    std::vector<DegreeRow> degrees;
    Bounds bounds;
    long count_no = 0, count_sp = 0, count_ss = 0;
    bool bounds_ok = false;
};

// Supersingular polynomial from the splitting behaviour: inert -> no, split -> sp, g = 1 -> no.
PolyF classify_locus(const CurveFamilyDescriptor& d, u64 p, const PolyF& no, const PolyF& sp, std::string* source = nullptr);

LocusReport locus_report(const CurveFamilyDescriptor& d, u64 p);

}  // namespace pfkit
