#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pfkit/fuchsian.hpp"

namespace pfkit {

// Hyperelliptic or elliptic model y^2 = sum_i c_i(param) x^i.
struct FiberModel {
    std::string label;
    std::vector<PolyQ> coefficients;  // index i: coefficient of x^i as a polynomial in the parameter
};

struct FiberData {
    std::string parameter;  // name of the family parameter
    unsigned genus = 0;
    FiberModel model;
    std::vector<FiberModel> alternates;
    std::optional<std::vector<Rational>> at_infinity;  // model at parameter = infinity
    bool square_symmetry = false;                      // fibers depend on parameter^2 only
};

// J = num(s) / den(s), where s is the parameter (or its square under square symmetry).
struct ParamToJ {
    PolyQ num, den;
};

struct EllipticPoint {
    unsigned order;
    std::optional<Rational> value;  // Hauptmodul value; empty at the pole
};

struct HauptmodulConvention {
    std::string zero_at;  // "cusp" or "elliptic:<n>"
    std::string pole_at;
    std::vector<EllipticPoint> elliptic;
    std::vector<Rational> other_cusps;  // finite cusp values besides t = 0
};

struct TriangleData {
    unsigned n = 0, m = 0;  // pole of t at the order-m point
};

struct ModularData {
    std::vector<long> weights;            // k_j with f_j = y_j^{k_j} of trivial multiplier
    std::vector<Rational> q_exponents;    // Q_l = y_l^{e_l}
};

struct CurveFamilyDescriptor {
    std::string name;
    unsigned g = 0;
    long rm_disc = 1;
    Rational euler_char;
    std::vector<Rational> lyapunov;
    std::vector<unsigned> elliptic_orders;
    unsigned cusp_count = 0;
    std::set<u64> bad_primes;
    std::vector<FuchsianOperator> operators;
    HauptmodulConvention hauptmodul;
    std::optional<TriangleData> triangle;
    std::optional<FiberData> fiber;
    std::optional<ParamToJ> param_to_J;
    std::optional<ModularData> modular;
    std::string source;  // file the descriptor was read from
    std::string hash;    // FNV-1a 64 of the canonical JSON, hex

    // lcm of the elliptic orders (1 without elliptic points)
    unsigned lcm_elliptic() const;
    bool cusp_pole() const { return hauptmodul.pole_at == "cusp"; }
};

std::string data_directory();
CurveFamilyDescriptor parse_descriptor(const std::string& json_text, const std::string& source = "<memory>");
CurveFamilyDescriptor load_descriptor_file(const std::string& path);
// Looks up <data>/descriptors/<name>.json.
CurveFamilyDescriptor load_family(const std::string& name);
std::vector<CurveFamilyDescriptor> builtin_descriptors();

void require_good_prime(const CurveFamilyDescriptor& d, u64 p);

std::string fnv1a_hex(const std::string& bytes);

}  // namespace pfkit
