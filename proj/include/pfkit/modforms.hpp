#pragma once

#include <set>
#include <string>
#include <vector>

#include "pfkit/congruence.hpp"

namespace pfkit {

struct TExpansion {
    std::string label;
    SeriesQ series;
    std::vector<Rational> weight;  // one entry per embedding
};

// Unit part U of the Wronskian W = t^{-1} U, U(0) = 1. Needs exponents (0, 0) at t = 0.
SeriesQ wronskian_series(const FuchsianOperator& L, size_t order);

// t' = t y_1^2 / U_1, normalized to t + O(t^2).
TExpansion hauptmodul_derivative(const FuchsianOperator& L1, const SeriesQ& y1, size_t order, unsigned g);

// phi_j' = U_j t' / (t y_j^2); j is 0-based and j = 0 gives 1.
TExpansion modular_embedding_derivative(const FuchsianOperator& Lj, const SeriesQ& yj, const TExpansion& t_prime,
                                        unsigned j, size_t order);

// d/dtau realized as t' d/dt.
SeriesQ tau_derivative(const SeriesQ& h, const TExpansion& t_prime);

// Brackets of order 1 or 2 using the first weight component.
TExpansion rankin_cohen(const TExpansion& f, const TExpansion& g, int bracket, const TExpansion& t_prime);

struct RoundTrip {
    unsigned j = 0;
    size_t order = 0;
    SeriesQ tA, t2B, t2X;       // t*A, t^2*B and t^2*X from brackets of F = (phi_j')^{1/2} y_j
    SeriesQ tq, t2r;            // t*Q/P and t^2*R/P of the operator
    SeriesQ t2r_recovered;      // -t^2 B / 2 + t^2 X
    bool q_ok = false, r_ok = false;
    bool b_equals_r = false;    // B read literally as the zeroth-order coefficient
};

RoundTrip demo_round_trip(const CurveFamilyDescriptor& d, unsigned j, size_t order);

// Generators from the radical formula in t' and the elliptic and cusp values.
std::vector<TExpansion> radical_generators(const CurveFamilyDescriptor& d, size_t order);

// Descriptor generators Q_l = y_l^{q_l}.
std::vector<TExpansion> q_generators(const CurveFamilyDescriptor& d, size_t order);

struct TwistedCongruence {
    unsigned j = 0, j_prime = 0;
    unsigned N = 0, M = 0;
    size_t order = 0;
    PolyF alpha;
    bool ok = false;
};

// f_j^{NM/k_j} = alpha^M f_j'(t^p)^{NM/k_j'} mod p with f_j = y_j^{k_j}.
TwistedCongruence twisted_congruence(const CurveFamilyDescriptor& d, u64 p, unsigned j, size_t order = 0);

std::set<u64> denominator_support(const SeriesQ& s, size_t order);

}  // namespace pfkit
