#include "pfkit/descriptor.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace pfkit {

using nlohmann::json;

namespace {

Rational rat(const json& v) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(BigInt(std::to_string(v.get<long long>())));
    throw DescriptorError("expected a rational (string or integer), got " + v.dump());
}

PolyQ poly(const json& v) {
    if (!v.is_array()) throw DescriptorError("expected a coefficient array, got " + v.dump());
    std::vector<Rational> c;
    for (const auto& x : v) c.push_back(rat(x));
    return polyq(c);
}

FiberModel fiber_model(const json& v, const std::string& label) {
    FiberModel m;
    m.label = v.value("label", label);
    for (const auto& c : v.at("coefficients")) m.coefficients.push_back(poly(c));
    return m;
}

const json& req(const json& j, const char* key) {
    if (!j.contains(key)) throw DescriptorError(std::string("missing field '") + key + "'");
    return j.at(key);
}

void validate(const CurveFamilyDescriptor& d) {
    if (d.g == 0) throw DescriptorError("g must be positive");
    if (d.lyapunov.size() != d.g || d.operators.size() != d.g)
        throw DescriptorError("lyapunov and operators must both have g entries");
    if (d.lyapunov.front() != Rational(1)) throw DescriptorError("lambda_1 must be 1");
    for (const auto& l : d.lyapunov)
        if (l <= Rational(0) || l > Rational(1)) throw DescriptorError("Lyapunov exponents must lie in (0, 1]");
    if (d.euler_char.sign() >= 0) throw DescriptorError("Euler characteristic must be negative");
    if (d.rm_disc != 1 && d.rm_disc != 5)
        throw DescriptorError("real multiplication field outside Q(sqrt 5) is not supported");
    if (d.g == 2 && d.rm_disc == 1) throw DescriptorError("g = 2 needs a real quadratic field");
    for (const auto& L : d.operators) {
        auto chk = fuchs_relation_check(riemann_scheme(L));
        if (!chk.ok) throw DescriptorError("operator violates the Fuchs relation by " + chk.discrepancy.str());
    }
    if (d.fiber) {
        if (d.fiber->genus < 1 || d.fiber->genus > 2) throw DescriptorError("fiber genus must be 1 or 2");
        size_t deg = d.fiber->model.coefficients.size();
        if (deg == 0 || deg - 1 < 2 * d.fiber->genus + 1 || deg - 1 > 2 * d.fiber->genus + 2)
            throw DescriptorError("fiber degree does not match its genus");
    }
}

}  // namespace

unsigned CurveFamilyDescriptor::lcm_elliptic() const {
    unsigned l = 1;
    for (unsigned o : elliptic_orders) l = std::lcm(l, o);
    return l;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string data_directory() {
    if (const char* env = std::getenv("PFKIT_DATA"); env && *env) return env;
    return PFKIT_DEFAULT_DATA_DIR;
}

CurveFamilyDescriptor parse_descriptor(const std::string& text, const std::string& source) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DescriptorError(source + ": " + e.what());
    }
    CurveFamilyDescriptor d;
    try {
        d.name = req(j, "name").get<std::string>();
        d.g = req(j, "g").get<unsigned>();
        d.rm_disc = j.value("rm_disc", 1L);
        d.euler_char = rat(req(j, "euler_char"));
        for (const auto& l : req(j, "lyapunov")) d.lyapunov.push_back(rat(l));
        for (const auto& o : j.value("elliptic_orders", json::array())) d.elliptic_orders.push_back(o.get<unsigned>());
        d.cusp_count = req(j, "cusp_count").get<unsigned>();
        for (const auto& p : req(j, "bad_primes")) d.bad_primes.insert(p.get<u64>());
        for (const auto& op : req(j, "operators"))
            d.operators.emplace_back(poly(req(op, "p")), poly(req(op, "q")), poly(req(op, "r")));
        const json& h = req(j, "hauptmodul");
        d.hauptmodul.zero_at = req(h, "zero_at").get<std::string>();
        d.hauptmodul.pole_at = req(h, "pole_at").get<std::string>();
        for (const auto& e : h.value("elliptic", json::array())) {
            EllipticPoint pt{e.at("order").get<unsigned>(), std::nullopt};
            if (e.contains("value") && !e.at("value").is_null()) pt.value = rat(e.at("value"));
            d.hauptmodul.elliptic.push_back(pt);
        }
        for (const auto& c : h.value("other_cusps", json::array())) d.hauptmodul.other_cusps.push_back(rat(c));
        if (j.contains("triangle")) d.triangle = TriangleData{j["triangle"].at("n").get<unsigned>(), j["triangle"].at("m").get<unsigned>()};
        if (j.contains("fiber")) {
            const json& f = j["fiber"];
            FiberData fd;
            fd.parameter = req(f, "parameter").get<std::string>();
            fd.genus = req(f, "genus").get<unsigned>();
            fd.model = fiber_model(f, "main");
            for (const auto& a : f.value("alternates", json::array())) fd.alternates.push_back(fiber_model(a, "alternate"));
            if (f.contains("at_infinity")) {
                std::vector<Rational> c;
                for (const auto& x : f["at_infinity"]) c.push_back(rat(x));
                fd.at_infinity = c;
            }
            fd.square_symmetry = f.value("symmetry", std::string()) == "square";
            d.fiber = fd;
        }
        if (j.contains("param_to_J")) d.param_to_J = ParamToJ{poly(j["param_to_J"].at("num")), poly(j["param_to_J"].at("den"))};
        if (j.contains("modular")) {
            ModularData md;
            for (const auto& w : j["modular"].value("weights", json::array())) md.weights.push_back(w.get<long>());
            for (const auto& e : j["modular"].value("q_exponents", json::array())) md.q_exponents.push_back(rat(e));
            d.modular = md;
        }
    } catch (const json::exception& e) {
        throw DescriptorError(source + ": " + e.what());
    } catch (const DescriptorError& e) {
        throw DescriptorError(source + ": " + e.what());
    } catch (const Error& e) {
        throw DescriptorError(source + ": invalid operator data: " + e.what());
    }
    try {
        validate(d);
    } catch (const Error& e) {
        throw DescriptorError(source + ": " + e.what());
    }
    d.source = source;
    d.hash = fnv1a_hex(j.dump());
    return d;
}

CurveFamilyDescriptor load_descriptor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DescriptorError("cannot read descriptor file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_descriptor(ss.str(), path);
}

CurveFamilyDescriptor load_family(const std::string& name) {
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-')
            throw DescriptorError("invalid family name '" + name + "'");
    std::filesystem::path p = std::filesystem::path(data_directory()) / "descriptors" / (name + ".json");
    if (!std::filesystem::exists(p)) throw DescriptorError("unknown family '" + name + "' (no " + p.string() + ")");
    return load_descriptor_file(p.string());
}

std::vector<CurveFamilyDescriptor> builtin_descriptors() {
    std::vector<CurveFamilyDescriptor> out;
    for (const char* n : {"W5", "Gamma1_5", "Legendre", "SL2Z"}) out.push_back(load_family(n));
    return out;
}

void require_good_prime(const CurveFamilyDescriptor& d, u64 p) {
    require_prime(p);
    if (d.bad_primes.count(p))
        throw RamifiedPrime("p = " + std::to_string(p) + " lies in the bad set S of " + d.name);
    if (d.rm_disc > 1 && splitting_type(p, d.rm_disc) == SplittingType::ramified)
        throw RamifiedPrime("p = " + std::to_string(p) + " ramifies in the real multiplication field");
}

}  // namespace pfkit
