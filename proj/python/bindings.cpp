#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pfkit/report.hpp"

namespace py = pybind11;
using namespace pfkit;

namespace {

CurveFamilyDescriptor family(const std::string& name_or_path) {
    if (name_or_path.find('/') != std::string::npos || name_or_path.size() > 5 && name_or_path.substr(name_or_path.size() - 5) == ".json")
        return load_descriptor_file(name_or_path);
    return load_family(name_or_path);
}

std::string dump(const Report& r) { return r.doc.dump(); }

std::vector<std::string> coefficients(const SeriesQ& s) {
    std::vector<std::string> out;
    for (const auto& c : s.coeffs()) out.push_back(c.str());
    return out;
}

PolyQ poly_from(const std::vector<std::string>& c) {
    std::vector<Rational> v;
    for (const auto& s : c) v.push_back(Rational::parse(s));
    return polyq(v);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Picard-Fuchs series, congruences, loci and oracles";
    m.attr("__version__") = tool_version();

    // Translators run newest first, so the base class goes first.
    auto base = py::register_exception<Error>(m, "PfkitError");
    py::register_exception<DescriptorError>(m, "DescriptorError", base.ptr());
    py::register_exception<RamifiedPrime>(m, "RamifiedPrime", base.ptr());

    m.def("data_directory", &data_directory);
    m.def("descriptor_hash", [](const std::string& f) { return family(f).hash; });

    m.def("frobenius_solution",
          [](const std::vector<std::string>& p, const std::vector<std::string>& q, const std::vector<std::string>& r, size_t n) {
              return coefficients(frobenius_solution(FuchsianOperator(poly_from(p), poly_from(q), poly_from(r)), n));
          },
          py::arg("p"), py::arg("q"), py::arg("r"), py::arg("order"),
          "Coefficients of the holomorphic solution at 0, as rational strings.");

    m.def("solve_json",
          [](const std::string& f, size_t order) { return dump(solve_report(family(f), SolveOptions{order, {}})); },
          py::arg("family"), py::arg("order") = 30);
    m.def("congruence_json",
          [](const std::string& f, u64 p, size_t order) { return dump(congruence_report(family(f), p, order)); },
          py::arg("family"), py::arg("prime"), py::arg("order") = 0);
    m.def("locus_json", [](const std::string& f, u64 p) { return dump(locus_document(locus_report(family(f), p))); },
          py::arg("family"), py::arg("prime"));
    m.def("oracle_json",
          [](const std::string& f, u64 p, std::vector<unsigned> exts, const std::string& model) {
              py::gil_scoped_release release;
              return dump(oracle_report(family(f), p, OracleOptions{exts, model}));
          },
          py::arg("family"), py::arg("prime"), py::arg("exts") = std::vector<unsigned>{1}, py::arg("model") = "");
    m.def("igusa_json", [](const std::string& f, u64 p) { return dump(igusa_report(family(f), p)); }, py::arg("family"),
          py::arg("prime"));
    m.def("modforms_json",
          [](const std::string& f, size_t order, std::vector<std::string> emit, std::vector<u64> primes) {
              return dump(modforms_report(family(f), ModformsOptions{order, emit, primes}));
          },
          py::arg("family"), py::arg("order") = 100, py::arg("emit") = std::vector<std::string>{"tprime"},
          py::arg("primes") = std::vector<u64>{});
    m.def("bounds_json",
          [](const std::string& f, std::vector<u64> primes, unsigned jobs) {
              auto d = family(f);
              if (primes.empty()) primes = good_primes(d, 3, 100);
              py::gil_scoped_release release;
              return dump(bounds_report(d, primes, jobs));
          },
          py::arg("family"), py::arg("primes") = std::vector<u64>{}, py::arg("jobs") = 1);
    m.def("crosscheck_json",
          [](const std::string& f, u64 p, std::vector<unsigned> exts) {
              py::gil_scoped_release release;
              return dump(crosscheck_report(family(f), p, exts));
          },
          py::arg("family"), py::arg("prime"), py::arg("exts") = std::vector<unsigned>{1, 2});
}
