#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pfkit/descriptor.hpp"

namespace pfkit {

// y^2 = f(x) over the field of f's coefficients; genus 1 (deg 3, 4) or 2 (deg 5, 6).
struct HyperellipticCurve {
    PolyF f;
    unsigned genus = 0;
    const FieldContext* base() const { return f.zero().ctx(); }
};

// Throws BadFiber for characteristic 2, unsupported degree or repeated roots.
HyperellipticCurve hyperelliptic(const PolyF& f);
HyperellipticCurve base_change(const HyperellipticCurve& c, const FieldContext* target);

constexpr u64 kCountEnvelope = u64(1) << 22;

// Projective points on the smooth model.
u64 count_points(const HyperellipticCurve& c);

using FMatrix = std::vector<std::vector<GF>>;

// M[i][j] = coefficient of x^{(i+1)p - (j+1)} in f^{(p-1)/2}.
FMatrix cartier_manin(const HyperellipticCurve& c);
unsigned matrix_rank(FMatrix m);
// Rank of M^{(p^{g-1})} ... M^{(p)} M.
unsigned p_rank(const FMatrix& m);
bool is_zero_matrix(const FMatrix& m);

struct LPolynomial {
    u64 q = 0;
    std::vector<BigInt> c;  // c_1 .. c_g
    BigInt jacobian_order;  // L(1)
    bool weil_ok = false;
};

// From counts over F_q and (for g = 2) F_{q^2}.
LPolynomial l_polynomial(const HyperellipticCurve& c);
// Newton polygon of slope 1/2 only.
bool l_supersingular(const LPolynomial& L, u64 p, unsigned e);
unsigned l_p_rank(const LPolynomial& L, u64 p, unsigned e);

enum class FiberClass { ordinary, nonordinary_not_ss, supersingular, superspecial, bad };
std::string to_string(FiberClass c);

struct FiberClassification {
    FiberClass cls = FiberClass::bad;
    unsigned p_rank = 0;
    bool superspecial = false;  // Cartier-Manin matrix vanishes
    std::optional<LPolynomial> L;
    bool consistent = true;     // p-rank and L-polynomial agree
    std::string route;          // "p-rank" or "p-rank+L-polynomial"
};

// L-polynomial cross-check when q^2 <= count_limit.
FiberClassification classify_fiber(const HyperellipticCurve& c, u64 count_limit = u64(1) << 16);

// Cartier-Manin entries as polynomials over F_p in the family parameter.
std::vector<std::vector<PolyF>> cartier_manin_family(const FiberModel& m, unsigned genus, u64 p);

struct ScanRow {
    unsigned ext = 0;             // parameter ranges over F_{p^ext}
    bool at_infinity = false;
    GF param;                     // s (square of the fiber parameter under square symmetry) or t
    std::optional<GF> root;       // fiber parameter when s = root^2
    unsigned curve_degree = 0;    // curve defined over F_{p^curve_degree}
    std::optional<GF> J;          // empty at a pole of the J map
    FiberClassification cls;
};

struct ScanResult {
    std::string family, hash, model;
    u64 p = 0;
    std::vector<unsigned> exts;
    std::string key;                                  // "J" or the parameter name
    std::vector<ScanRow> rows;
    std::map<unsigned, std::vector<GF>> supersingular;  // per ext: sorted keys of supersingular fibers
    std::vector<std::string> notes;
};

ScanResult scan_family(const CurveFamilyDescriptor& d, u64 p, const std::vector<unsigned>& exts,
                       const std::string& model = "");

struct Agreement {
    unsigned ext = 0;
    std::vector<GF> locus_roots, oracle_values;
    bool equal = false;
};

// Roots of the locus polynomial in each scanned field against the scan's supersingular keys.
std::vector<Agreement> compare_with_polynomial(const ScanResult& s, const PolyF& ss);

}  // namespace pfkit
