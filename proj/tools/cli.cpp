#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "pfkit/report.hpp"

namespace pfkit_cli {

using namespace pfkit;

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string family = "W5", descriptor;
    std::string primes;
    size_t order = 0;
    std::string format = "json", output;
    unsigned jobs = 1;
    std::string exts = "1,2";
    std::string model;
    std::string emit = "tprime";
    int j = 0;
    std::string allow;
};

std::vector<u64> parse_list(const std::string& s, const char* what) {
    std::vector<u64> out;
    std::stringstream ss(s);
    std::string item;
    try {
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            auto dots = item.find("..");
            if (dots == std::string::npos) {
                out.push_back(std::stoull(item));
            } else {
                u64 lo = std::stoull(item.substr(0, dots)), hi = std::stoull(item.substr(dots + 2));
                for (u64 x = lo; x <= hi; ++x) out.push_back(x);
            }
        }
    } catch (const std::logic_error&) {
        throw Usage(std::string("cannot parse ") + what + " '" + s + "'");
    }
    return out;
}

CurveFamilyDescriptor descriptor(const Config& c) {
    if (!c.descriptor.empty()) {
        if (!std::filesystem::exists(c.descriptor)) throw Usage("no descriptor file " + c.descriptor);
        return load_descriptor_file(c.descriptor);
    }
    auto path = std::filesystem::path(data_directory()) / "descriptors" / (c.family + ".json");
    if (c.family.find_first_of("/\\.") != std::string::npos || !std::filesystem::exists(path))
        throw Usage("unknown family '" + c.family + "' (looked in " + (std::filesystem::path(data_directory()) / "descriptors").string() + ")");
    return load_family(c.family);
}

// Primes must be prime and outside S; anything else is refused before work starts.
std::vector<u64> checked_primes(const CurveFamilyDescriptor& d, const std::string& s, bool allow_skip) {
    std::vector<u64> out;
    for (u64 p : parse_list(s, "prime list")) {
        try {
            require_good_prime(d, p);
            out.push_back(p);
        } catch (const Error& e) {
            if (!allow_skip) throw Usage(e.what());
        }
    }
    if (out.empty()) throw Usage("no usable prime given");
    return out;
}

u64 single_prime(const CurveFamilyDescriptor& d, const Config& c) {
    if (c.primes.empty()) throw Usage("--prime is required");
    auto ps = checked_primes(d, c.primes, false);
    if (ps.size() != 1) throw Usage("exactly one prime expected");
    return ps[0];
}

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<unsigned> ext_list(const std::string& s) {
    std::vector<unsigned> out;
    for (u64 e : parse_list(s, "extension list")) {
        if (e < 1 || e > 8) throw Usage("extension degree " + std::to_string(e) + " outside 1..8");
        out.push_back(static_cast<unsigned>(e));
    }
    return out;
}

Report dispatch(const std::string& cmd, const Config& c) {
    auto d = descriptor(c);
    if (cmd == "solve") {
        SolveOptions o;
        o.order = c.order ? c.order : 30;
        if (o.order > 10000) throw Usage("order above the 10000-term envelope");
        for (u64 p : parse_list(c.allow, "prime list")) o.extra_primes.insert(p);
        return solve_report(d, o);
    }
    if (cmd == "congruence") {
        u64 p = single_prime(d, c);
        if (c.j < 0 || c.j > static_cast<int>(d.g)) throw Usage("--j must lie in 1.." + std::to_string(d.g));
        return congruence_report(d, p, c.order, c.j - 1);
    }
    if (cmd == "locus") return locus_document(locus_report(d, single_prime(d, c)));
    if (cmd == "oracle") {
        OracleOptions o;
        o.exts = ext_list(c.exts);
        o.model = c.model;
        return oracle_report(d, single_prime(d, c), o);
    }
    if (cmd == "igusa") return igusa_report(d, single_prime(d, c));
    if (cmd == "modforms") {
        ModformsOptions o;
        o.order = c.order ? c.order : 100;
        if (o.order > 2000) throw Usage("order above the 2000-term envelope for modular expansions");
        o.emit = split_names(c.emit);
        if (!c.primes.empty()) o.primes = checked_primes(d, c.primes, false);
        return modforms_report(d, o);
    }
    if (cmd == "bounds") {
        auto ps = c.primes.empty() ? good_primes(d, 3, 100) : checked_primes(d, c.primes, true);
        return bounds_report(d, ps, c.jobs);
    }
    if (cmd == "crosscheck") return crosscheck_report(d, single_prime(d, c), ext_list(c.exts));
    throw Usage("unknown command");
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"Picard-Fuchs congruences, loci and oracles"};
    app.set_version_flag("--version", std::string("pfkit ") + tool_version());
    app.require_subcommand(1);
    Config c;
    auto common = [&](CLI::App* s, bool prime) {
        s->add_option("--family", c.family, "descriptor name under $PFKIT_DATA/descriptors")->capture_default_str();
        s->add_option("--descriptor", c.descriptor, "descriptor JSON file");
        if (prime) s->add_option("--prime,--primes", c.primes, "prime, list a,b,c or range a..b");
        s->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
        s->add_option("--output,-o", c.output, "write the report here instead of stdout");
        s->add_option("--jobs", c.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    };
    auto* solve = app.add_subcommand("solve", "holomorphic solutions and their denominators");
    common(solve, false);
    solve->add_option("--order", c.order, "number of coefficients");
    solve->add_option("--allow-primes", c.allow, "primes accepted in denominators besides S");
    auto* cong = app.add_subcommand("congruence", "alpha polynomials and degree checks");
    common(cong, true);
    cong->add_option("--order", c.order, "verification order (default from the degree prediction)");
    cong->add_option("--j", c.j, "1-based solution index (default all)");
    auto* loc = app.add_subcommand("locus", "non-ordinary, superspecial and supersingular polynomials");
    common(loc, true);
    auto* orc = app.add_subcommand("oracle", "fiberwise Cartier-Manin and point-count classification");
    common(orc, true);
    orc->add_option("--ext", c.exts, "extension degrees to scan")->capture_default_str();
    orc->add_option("--model", c.model, "alternate fiber model label");
    auto* ig = app.add_subcommand("igusa", "restricted Igusa invariants of supersingular points");
    common(ig, true);
    auto* mf = app.add_subcommand("modforms", "t-expansions of modular objects");
    common(mf, true);
    mf->add_option("--order", c.order, "number of coefficients");
    mf->add_option("--emit", c.emit, "comma list: tprime, phi<j>prime, Q<l>, Qrad<l>, y<j>")->capture_default_str();
    auto* bd = app.add_subcommand("bounds", "cardinality bounds against counted loci");
    common(bd, true);
    auto* cc = app.add_subcommand("crosscheck", "congruence, locus, oracle and modular checks at one prime");
    common(cc, true);
    cc->add_option("--ext", c.exts, "extension degrees for the oracle scan")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    std::string cmd = app.get_subcommands().front()->get_name();
    Report r;
    try {
        r = dispatch(cmd, c);
    } catch (const Usage& e) {
        std::cerr << "pfkit: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "pfkit: " << e.what() << "\n";
        return kUsage;
    } catch (const RamifiedPrime& e) {
        std::cerr << "pfkit: " << e.what() << "\n";
        return kUsage;
    } catch (const UnsupportedOperator& e) {
        std::cerr << "pfkit: " << e.what() << "\n";
        return kUsage;
    } catch (const DegreesTooLarge& e) {
        std::cerr << "pfkit: " << e.what() << "\n";
        return kUsage;
    } catch (const DescriptorError& e) {
        std::cerr << "pfkit: descriptor rejected: " << e.what() << "\n";
        return kValidation;
    } catch (const Error& e) {
        std::cerr << "pfkit: " << e.what() << "\n";
        return kValidation;
    }
    std::string text = render(r, parse_format(c.format));
    if (c.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(c.output, std::ios::binary);
        if (!out) {
            std::cerr << "pfkit: cannot write " << c.output << "\n";
            return kUsage;
        }
        out << text;
    }
    if (!r.ok) {
        std::cerr << "pfkit: validation failed\n";
        return kValidation;
    }
    return kOk;
}

}  // namespace pfkit_cli
