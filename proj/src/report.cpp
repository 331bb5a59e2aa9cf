#include "pfkit/report.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "pfkit/catalog.hpp"

namespace pfkit {

namespace {

Json envelope(const std::string& kind, const CurveFamilyDescriptor& d) {
    Json j;
    j["schema"] = "pfkit." + kind + "/" + std::to_string(kReportSchemaVersion);
    j["tool_version"] = tool_version();
    j["family"] = d.name;
    j["descriptor_hash"] = d.hash;
    return j;
}

std::string field_name(const FieldContext* c) {
    return c->e() == 1 ? "F_" + std::to_string(c->p()) : "F_" + std::to_string(c->p()) + "^" + std::to_string(c->e());
}

Json strings(const std::vector<GF>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

Json series_json(const SeriesQ& s) {
    Json a = Json::array();
    for (const auto& c : s.coeffs()) a.push_back(c.str());
    return a;
}

Json prediction_json(const DegreePrediction& p) {
    Json j;
    j["j_degree"] = p.j_degree.str();
    j["triangle"] = p.triangle;
    if (p.triangle) {
        j["t_raw"] = p.t_raw.str();
        j["epsilon"] = p.epsilon;
        j["t_corrected"] = p.t_corrected.str();
    }
    j["integral"] = p.integral;
    j["applicable"] = p.applicable().str();
    return j;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::string b(bool x) { return x ? "true" : "false"; }

// Linear factors over F_p are written as (x - root).
std::string factored_string(const std::vector<FactorInfo>& fs, const std::string& v) {
    if (fs.empty()) return "1";
    std::vector<FactorInfo> sorted = fs;
    auto key = [](const FactorInfo& f) { return std::make_pair(f.degree, f.degree == 1 ? (-f.factor.coeffs()[0]).index() : 0); };
    std::stable_sort(sorted.begin(), sorted.end(), [&](const FactorInfo& a, const FactorInfo& b) { return key(a) < key(b); });
    std::vector<std::string> parts;
    for (const auto& f : sorted) {
        const auto& c = f.factor.coeffs();
        if (f.degree == 1 && c[0].ctx()->e() == 1) {
            GF root = -c[0];
            parts.push_back(root.is_zero() ? v : "(" + v + " - " + root.str() + ")");
        } else {
            parts.push_back("(" + poly_string(f.factor, v) + ")");
        }
    }
    return join(parts, "*");
}

std::string one_based(unsigned j) { return std::to_string(j + 1); }

}  // namespace

const char* tool_version() { return PFKIT_VERSION; }

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "text") return Format::text;
    throw std::invalid_argument("unknown format '" + s + "'");
}

std::string render(const Report& r, Format f) {
    std::ostringstream out;
    if (f == Format::json) {
        out << r.doc.dump(2) << "\n";
        return out.str();
    }
    if (f == Format::csv) {
        for (auto it = r.doc.begin(); it != r.doc.end(); ++it)
            if (it.value().is_primitive()) out << "# " << it.key() << ": " << scalar_text(it.value()) << "\n";
        std::vector<std::string> cells;
        for (const auto& c : r.table.columns) cells.push_back(csv_cell(c));
        out << join(cells, ",") << "\n";
        for (const auto& row : r.table.rows) {
            cells.clear();
            for (const auto& c : row) cells.push_back(csv_cell(c));
            out << join(cells, ",") << "\n";
        }
        return out.str();
    }
    for (auto it = r.doc.begin(); it != r.doc.end(); ++it)
        if (it.value().is_primitive()) out << it.key() << ": " << scalar_text(it.value()) << "\n";
    if (!r.table.columns.empty()) {
        std::vector<size_t> w(r.table.columns.size());
        for (size_t i = 0; i < w.size(); ++i) w[i] = r.table.columns[i].size();
        for (const auto& row : r.table.rows)
            for (size_t i = 0; i < row.size() && i < w.size(); ++i) w[i] = std::max(w[i], row[i].size());
        auto line = [&](const std::vector<std::string>& row) {
            std::string s;
            for (size_t i = 0; i < row.size(); ++i) {
                s += row[i];
                if (i + 1 < row.size()) s += std::string(w[i] - row[i].size() + 2, ' ');
            }
            out << s << "\n";
        };
        out << "\n";
        line(r.table.columns);
        for (const auto& row : r.table.rows) line(row);
    }
    return out.str();
}

std::string poly_string(const PolyF& f, const std::string& var) { return f.is_zero() ? "0" : f.str(var); }

Json coefficient_array(const PolyF& f) { return strings(f.coeffs()); }

std::vector<u64> good_primes(const CurveFamilyDescriptor& d, u64 lo, u64 hi) {
    std::vector<u64> out;
    for (u64 p : primes_in_range(lo, hi)) {
        try {
            require_good_prime(d, p);
            out.push_back(p);
        } catch (const RamifiedPrime&) {
        }
    }
    return out;
}

Report solve_report(const CurveFamilyDescriptor& d, const SolveOptions& o) {
    Report r;
    r.doc = envelope("solve", d);
    r.doc["order"] = o.order;
    std::set<u64> S = d.bad_primes;
    S.insert(o.extra_primes.begin(), o.extra_primes.end());
    Json ops = Json::array();
    auto sols = family_solutions(d, o.order);
    r.table.columns = {"n"};
    for (unsigned j = 0; j < d.g; ++j) {
        const auto& L = d.operators[j];
        Json op;
        op["j"] = j + 1;
        Json scheme = Json::array();
        for (const auto& row : riemann_scheme(L).rows) scheme.push_back({{"point", row.label()}, {"exponents", row.exponents.str()}});
        op["riemann_scheme"] = scheme;
        auto integ = verify_integrality(sols[j], S, o.order);
        Json primes = Json::array();
        for (u64 p : integ.primes) primes.push_back(p);
        op["denominator_primes"] = primes;
        op["unfactored"] = integ.unfactored.get_str();
        op["integral"] = integ.pass;
        op["coefficients"] = series_json(sols[j]);
        r.ok = r.ok && integ.pass;
        ops.push_back(op);
        r.table.columns.push_back("y" + one_based(j));
    }
    Json S_json = Json::array();
    for (u64 p : S) S_json.push_back(p);
    r.doc["S"] = S_json;
    r.doc["integral"] = r.ok;
    r.doc["operators"] = ops;
    for (size_t n = 0; n < o.order; ++n) {
        std::vector<std::string> row{std::to_string(n)};
        for (unsigned j = 0; j < d.g; ++j) row.push_back(sols[j][n].str());
        r.table.rows.push_back(row);
    }
    return r;
}

Report congruence_report(const CurveFamilyDescriptor& d, u64 p, size_t order, int j) {
    require_good_prime(d, p);
    Report r;
    r.doc = envelope("congruence", d);
    r.doc["p"] = p;
    r.table.columns = {"j", "j_prime", "N", "alpha", "degree", "predicted", "verified_order", "stabilized", "degree_match"};
    Json certs = Json::array();
    for (unsigned k = 0; k < d.g; ++k) {
        if (j >= 0 && static_cast<unsigned>(j) != k) continue;
        auto c = certify(d, p, k, order);
        Json cj;
        cj["j"] = c.j + 1;
        cj["j_prime"] = c.j_prime + 1;
        cj["N"] = c.N;
        cj["alpha"] = poly_string(c.alpha, "t");
        cj["alpha_coefficients"] = coefficient_array(c.alpha);
        cj["verified_order"] = c.verified_order;
        cj["predicted"] = prediction_json(c.predicted);
        cj["observed_degree"] = c.observed_degree;
        cj["stabilized"] = c.stabilized;
        cj["degree_match"] = c.degree_match;
        cj["permutation_fallback"] = c.permutation_fallback;
        r.ok = r.ok && c.stabilized && c.degree_match && !c.permutation_fallback;
        certs.push_back(cj);
        r.table.rows.push_back({one_based(c.j), one_based(c.j_prime), std::to_string(c.N), poly_string(c.alpha, "t"),
                                std::to_string(c.observed_degree), c.predicted.applicable().str(),
                                std::to_string(c.verified_order), b(c.stabilized), b(c.degree_match)});
    }
    r.doc["ok"] = r.ok;
    r.doc["certificates"] = certs;
    return r;
}

Report locus_document(const LocusReport& rep) {
    Report r;
    r.doc["schema"] = "pfkit.locus/" + std::to_string(kReportSchemaVersion);
    r.doc["tool_version"] = tool_version();
    r.doc["family"] = rep.family;
    r.doc["descriptor_hash"] = rep.hash;
    r.doc["p"] = rep.p;
    r.doc["splitting"] = rep.splitting;
    r.doc["variable"] = rep.variable;
    const std::string& v = rep.variable;
    r.doc["no"] = poly_string(rep.no, v);
    r.doc["sp"] = poly_string(rep.sp, v);
    r.doc["ss"] = poly_string(rep.ss, v);
    r.doc["ss_factored"] = factored_string(rep.ss_factors, v);
    r.doc["ss_source"] = rep.ss_source;
    r.doc["count_no"] = rep.count_no;
    r.doc["count_sp"] = rep.count_sp;
    r.doc["count_ss"] = rep.count_ss;
    r.doc["bounds_ok"] = rep.bounds_ok;
    Json polys;
    polys["no"] = coefficient_array(rep.no);
    polys["sp"] = coefficient_array(rep.sp);
    polys["ss"] = coefficient_array(rep.ss);
    r.doc["coefficients"] = polys;
    Json factors = Json::array();
    r.table.columns = {"factor", "degree"};
    for (const auto& f : rep.ss_factors) {
        factors.push_back({{"degree", f.degree}, {"factor", poly_string(f.factor, v)}});
        r.table.rows.push_back({poly_string(f.factor, v), std::to_string(f.degree)});
    }
    r.doc["ss_factors"] = factors;
    Json ddf = Json::array();
    for (const auto& [deg, f] : rep.ss_ddf) ddf.push_back({{"degree", deg}, {"product", poly_string(f, v)}});
    r.doc["ss_distinct_degree"] = ddf;
    r.doc["roots_prime_field"] = strings(rep.roots_prime_field);
    Json degs = Json::array();
    for (const auto& row : rep.degrees) {
        Json dj;
        dj["j"] = row.j + 1;
        dj["j_prime"] = row.j_prime + 1;
        dj["predicted"] = prediction_json(row.predicted);
        dj["observed_t_degree"] = row.observed_t_degree;
        if (row.observed_j_degree >= 0) dj["observed_j_degree"] = row.observed_j_degree;
        dj["match"] = row.match;
        degs.push_back(dj);
    }
    r.doc["degrees"] = degs;
    Json bj;
    bj["kind"] = rep.bounds.kind;
    bj["lower"] = rep.bounds.lower;
    bj["upper"] = rep.bounds.upper;
    bj["upper_sum_inside_floor"] = rep.bounds.upper_sum_inside_floor;
    if (rep.bounds.secondary_upper) {
        bj["secondary_kind"] = rep.bounds.secondary_kind;
        bj["secondary_upper"] = *rep.bounds.secondary_upper;
    }
    r.doc["bounds"] = bj;
    r.ok = rep.bounds_ok;
    for (const auto& row : rep.degrees) r.ok = r.ok && row.match;
    return r;
}

Report oracle_report(const CurveFamilyDescriptor& d, u64 p, const OracleOptions& o) {
    if (!d.fiber) throw UnsupportedOperator(d.name + " has no fiber model");
    auto scan = scan_family(d, p, o.exts, o.model);
    Report r;
    r.doc = envelope("oracle", d);
    r.doc["p"] = p;
    r.doc["model"] = scan.model;
    r.doc["key"] = scan.key;
    Json exts = Json::array();
    for (unsigned e : scan.exts) exts.push_back(e);
    r.doc["exts"] = exts;
    const auto& fd = *d.fiber;
    r.table.columns = {"parameter", "field", "J", "p_rank", "c1", "c2", "class"};
    Json rows = Json::array();
    for (const auto& row : scan.rows) {
        std::string param, fieldn;
        if (row.at_infinity) {
            param = "inf";
            fieldn = field_name(field(p, 1));
        } else if (fd.square_symmetry) {
            param = row.root ? row.root->str() : "sqrt(" + row.param.str() + ")";
            fieldn = field_name(row.root ? row.root->ctx() : field(p, 2 * row.ext));
        } else {
            param = row.param.str();
            fieldn = field_name(row.param.ctx());
        }
        std::string J = row.J ? row.J->str() : (d.param_to_J ? "inf" : "");
        std::string c1, c2;
        if (row.cls.L) {
            if (!row.cls.L->c.empty()) c1 = row.cls.L->c[0].get_str();
            if (row.cls.L->c.size() > 1) c2 = row.cls.L->c[1].get_str();
        }
        r.table.rows.push_back({param, fieldn, J, std::to_string(row.cls.p_rank), c1, c2, to_string(row.cls.cls)});
        Json rj;
        rj["ext"] = row.ext;
        rj["parameter"] = param;
        if (fd.square_symmetry && !row.at_infinity) rj["parameter_squared"] = row.param.str();
        rj["field"] = fieldn;
        rj["curve_field"] = field_name(field(p, row.curve_degree));
        rj["J"] = J;
        rj["p_rank"] = row.cls.p_rank;
        rj["superspecial"] = row.cls.superspecial;
        rj["class"] = to_string(row.cls.cls);
        rj["route"] = row.cls.route;
        if (row.cls.L) {
            Json c = Json::array();
            for (const auto& x : row.cls.L->c) c.push_back(x.get_str());
            rj["L_coefficients"] = c;
            rj["jacobian_order"] = row.cls.L->jacobian_order.get_str();
            rj["weil_ok"] = row.cls.L->weil_ok;
        }
        rj["consistent"] = row.cls.consistent;
        r.ok = r.ok && row.cls.consistent;
        rows.push_back(rj);
    }
    Json ss;
    for (const auto& [e, v] : scan.supersingular) ss[std::to_string(e)] = strings(v);
    r.doc["supersingular"] = ss;
    try {
        auto loc = locus_report(d, p);
        auto agree = compare_with_polynomial(scan, loc.ss);
        bool all = true;
        Json aj = Json::array();
        for (const auto& a : agree) {
            aj.push_back({{"ext", a.ext}, {"locus_roots", strings(a.locus_roots)}, {"oracle", strings(a.oracle_values)}, {"equal", a.equal}});
            all = all && a.equal;
        }
        r.doc["oracle_agreement"] = all;
        r.doc["agreement"] = aj;
        r.doc["locus_ss"] = poly_string(loc.ss, loc.variable);
        r.ok = r.ok && all;
    } catch (const Error& e) {
        r.doc["agreement_unavailable"] = e.what();
    }
    r.doc["notes"] = scan.notes;
    r.doc["rows"] = rows;
    r.doc["ok"] = r.ok;
    return r;
}

Report igusa_report(const CurveFamilyDescriptor& d, u64 p) {
    if (d.g != 2 || d.rm_disc != 5) throw UnsupportedOperator("Igusa restriction needs a genus-2 family with real multiplication by Q(sqrt 5)");
    auto t = igusa_table(d, p);
    Report r;
    r.doc = envelope("igusa", d);
    r.doc["p"] = p;
    r.table.columns = {"J", "orbit_degree", "J1", "J2", "J3"};
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        IgusaTriple c = row.triple;
        std::string j3 = c.J3a.str() + (c.J3b.is_zero() ? "" : "+" + c.J3b.str() + "*sqrt5");
        rows.push_back({{"J", row.J.str()}, {"orbit_degree", row.degree}, {"J1", c.J1.str()}, {"J2", c.J2.str()},
                        {"J3", {{"a", c.J3a.str()}, {"b", c.J3b.str()}}}, {"triple", c.str()}});
        r.table.rows.push_back({row.J.str(), std::to_string(row.degree), c.J1.str(), c.J2.str(), j3});
    }
    r.doc["rows"] = rows;
    return r;
}

Report modforms_report(const CurveFamilyDescriptor& d, const ModformsOptions& o) {
    Report r;
    r.doc = envelope("modforms", d);
    r.doc["order"] = o.order;
    size_t N = o.order;
    auto sols = family_solutions(d, N + 8);
    auto tp = hauptmodul_derivative(d.operators[0], sols[0], N + 4, d.g);
    std::vector<TExpansion> q, rad;
    auto need_q = [&] {
        if (q.empty()) q = q_generators(d, N);
        return q;
    };
    auto need_rad = [&] {
        if (rad.empty()) rad = radical_generators(d, N);
        return rad;
    };
    auto index_of = [&](const std::string& name, const std::string& prefix, const std::string& suffix, unsigned bound) -> int {
        if (name.size() <= prefix.size() + suffix.size() || name.compare(0, prefix.size(), prefix) != 0 ||
            name.compare(name.size() - suffix.size(), suffix.size(), suffix) != 0)
            return -1;
        std::string mid = name.substr(prefix.size(), name.size() - prefix.size() - suffix.size());
        if (mid.empty() || !std::all_of(mid.begin(), mid.end(), ::isdigit)) return -1;
        unsigned k = static_cast<unsigned>(std::stoul(mid));
        if (k < 1 || k > bound) throw std::invalid_argument("index out of range in '" + name + "'");
        return static_cast<int>(k - 1);
    };
    Json series = Json::array();
    std::vector<TExpansion> emitted;
    for (const auto& name : o.emit) {
        TExpansion e;
        int k;
        if (name == "tprime") {
            e = tp;
            e.series = e.series.truncated(N);
        } else if ((k = index_of(name, "phi", "prime", d.g)) >= 0) {
            e = modular_embedding_derivative(d.operators[k], sols[k], tp, k, N);
        } else if ((k = index_of(name, "Qrad", "", 2)) >= 0) {
            auto g = need_rad();
            if (static_cast<size_t>(k) >= g.size()) throw std::invalid_argument("no generator " + name);
            e = g[k];
        } else if ((k = index_of(name, "Q", "", 2)) >= 0) {
            auto g = need_q();
            if (static_cast<size_t>(k) >= g.size()) throw std::invalid_argument("no generator " + name);
            e = g[k];
        } else if ((k = index_of(name, "y", "", d.g)) >= 0) {
            e = TExpansion{"y" + one_based(k), sols[k].truncated(N), {}};
        } else {
            throw std::invalid_argument("unknown series '" + name + "'");
        }
        e.label = name;
        Json w = Json::array();
        for (const auto& x : e.weight) w.push_back(x.str());
        Json primes = Json::array();
        for (u64 p : denominator_support(e.series, N)) primes.push_back(p);
        series.push_back({{"label", name}, {"weight", w}, {"denominator_primes", primes}, {"coefficients", series_json(e.series)}});
        emitted.push_back(e);
    }
    r.doc["series"] = series;
    r.table.columns = {"n"};
    for (const auto& e : emitted) r.table.columns.push_back(e.label);
    for (size_t n = 0; n < N; ++n) {
        std::vector<std::string> row{std::to_string(n)};
        for (const auto& e : emitted) row.push_back(e.series[n].str());
        r.table.rows.push_back(row);
    }
    if (!o.primes.empty()) {
        Json tw = Json::array();
        for (u64 p : o.primes)
            for (unsigned j = 0; j < d.g; ++j) {
                auto c = twisted_congruence(d, p, j);
                tw.push_back({{"p", p}, {"j", c.j + 1}, {"j_prime", c.j_prime + 1}, {"N", c.N}, {"M", c.M},
                              {"order", c.order}, {"alpha", poly_string(c.alpha, "t")}, {"ok", c.ok}});
                r.ok = r.ok && c.ok;
            }
        r.doc["twisted_congruences"] = tw;
    }
    r.doc["ok"] = r.ok;
    return r;
}

Report bounds_report(const CurveFamilyDescriptor& d, const std::vector<u64>& primes, unsigned jobs) {
    struct Unit {
        u64 p;
        std::optional<LocusReport> rep;
        std::string error;
    };
    auto work = [&d](u64 p) {
        Unit u{p, std::nullopt, ""};
        try {
            u.rep = locus_report(d, p);
        } catch (const DegreesTooLarge& e) {
            u.error = e.what();
        } catch (const DanglingCoefficients& e) {
            u.error = e.what();
        }
        return u;
    };
    std::vector<Unit> units;
    jobs = std::max(1u, jobs);
    for (size_t i = 0; i < primes.size(); i += jobs) {
        std::vector<std::future<Unit>> fs;
        for (size_t k = i; k < primes.size() && k < i + jobs; ++k) fs.push_back(std::async(std::launch::async, work, primes[k]));
        for (auto& f : fs) units.push_back(f.get());
    }
    Report r;
    r.doc = envelope("bounds", d);
    r.table.columns = {"p", "splitting", "kind", "lower", "count", "upper", "secondary_kind", "secondary_count", "secondary_upper", "ok"};
    Json rows = Json::array();
    for (const auto& u : units) {
        if (!u.rep) {
            rows.push_back({{"p", u.p}, {"skipped", u.error}});
            r.table.rows.push_back({std::to_string(u.p), "", "", "", "", "", "", "", "", "skipped"});
            continue;
        }
        const auto& rep = *u.rep;
        const auto& bd = rep.bounds;
        long count = bd.kind == "supersingular" ? rep.count_ss : rep.count_no;
        Json rj{{"p", u.p}, {"splitting", rep.splitting}, {"kind", bd.kind}, {"lower", bd.lower}, {"count", count},
                {"upper", bd.upper}, {"upper_sum_inside_floor", bd.upper_sum_inside_floor}};
        std::string sk, sc, su;
        if (bd.secondary_upper) {
            long sec = bd.secondary_kind == "superspecial" ? rep.count_sp : rep.count_ss;
            sk = bd.secondary_kind;
            sc = std::to_string(sec);
            su = std::to_string(*bd.secondary_upper);
            rj["secondary_kind"] = sk;
            rj["secondary_count"] = sec;
            rj["secondary_upper"] = *bd.secondary_upper;
        }
        rj["ok"] = rep.bounds_ok;
        r.ok = r.ok && rep.bounds_ok;
        rows.push_back(rj);
        r.table.rows.push_back({std::to_string(u.p), rep.splitting, bd.kind, std::to_string(bd.lower), std::to_string(count),
                                std::to_string(bd.upper), sk, sc, su, b(rep.bounds_ok)});
    }
    r.doc["ok"] = r.ok;
    r.doc["rows"] = rows;
    return r;
}

Report crosscheck_report(const CurveFamilyDescriptor& d, u64 p, const std::vector<unsigned>& exts) {
    require_good_prime(d, p);
    Report r;
    r.doc = envelope("crosscheck", d);
    r.doc["p"] = p;
    r.table.columns = {"check", "ok", "detail"};
    Json checks = Json::array();
    auto add = [&](const std::string& name, bool ok, const std::string& detail) {
        checks.push_back({{"check", name}, {"ok", ok}, {"detail", detail}});
        r.table.rows.push_back({name, b(ok), detail});
        r.ok = r.ok && ok;
    };
    for (unsigned j = 0; j < d.g; ++j) {
        auto c = certify(d, p, j);
        add("congruence j=" + one_based(j), c.stabilized && c.degree_match && !c.permutation_fallback,
            "alpha = " + poly_string(c.alpha, "t") + ", j' = " + one_based(c.j_prime));
        try {
            auto comp = verify_composition(d, p, j);
            add("composition j=" + one_based(j), comp.ok, "order " + std::to_string(comp.order));
        } catch (const NonStabilizing& e) {
            add("composition j=" + one_based(j), false, e.what());
        }
    }
    std::optional<LocusReport> loc;
    try {
        loc = locus_report(d, p);
        Report ld = locus_document(*loc);
        add("locus degrees and bounds", ld.ok, loc->variable + ": ss = " + poly_string(loc->ss, loc->variable));
    } catch (const DegreesTooLarge& e) {
        r.doc["locus_unavailable"] = e.what();
    } catch (const UnsupportedOperator& e) {
        r.doc["locus_unavailable"] = e.what();
    }
    if (d.fiber && loc) {
        auto scan = scan_family(d, p, exts);
        bool all = true;
        std::string detail;
        for (const auto& a : compare_with_polynomial(scan, loc->ss)) {
            all = all && a.equal;
            detail += (detail.empty() ? "" : "; ") + field_name(field(p, a.ext)) + ": " + std::to_string(a.oracle_values.size()) + " values";
        }
        bool consistent = true;
        for (const auto& row : scan.rows) consistent = consistent && row.cls.consistent;
        add("oracle agreement", all, detail);
        add("p-rank vs L-polynomial", consistent, std::to_string(scan.rows.size()) + " fibers");
        r.doc["oracle_agreement"] = all;
        r.doc["notes"] = scan.notes;
    }
    if (d.g == 2 && d.rm_disc == 5 && d.triangle && loc && p != 3 && p != 7) {
        auto t = igusa_table(d, p);
        Json rows = Json::array();
        for (const auto& row : t.rows) rows.push_back({{"J", row.J.str()}, {"orbit_degree", row.degree}, {"triple", row.triple.str()}});
        r.doc["igusa"] = rows;
    }
    if (d.modular && !d.modular->weights.empty()) {
        for (unsigned j = 0; j < d.g; ++j) {
            auto c = twisted_congruence(d, p, j);
            add("twisted congruence j=" + one_based(j), c.ok, "M = " + std::to_string(c.M) + ", N = " + std::to_string(c.N));
        }
    }
    r.doc["ok"] = r.ok;
    r.doc["checks"] = checks;
    return r;
}

}  // namespace pfkit
