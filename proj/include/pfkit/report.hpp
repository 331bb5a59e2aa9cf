#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pfkit/igusa.hpp"
#include "pfkit/locus.hpp"
#include "pfkit/modforms.hpp"
#include "pfkit/oracle.hpp"

namespace pfkit {

using Json = nlohmann::ordered_json;

constexpr int kReportSchemaVersion = 1;
const char* tool_version();

enum class Format { json, csv, text };
Format parse_format(const std::string& s);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

// doc carries the full content; table is the flat view used for csv and text.
struct Report {
    Json doc;
    Table table;
    bool ok = true;  // false on a scientific mismatch
};

std::string render(const Report& r, Format f);

std::string poly_string(const PolyF& f, const std::string& var);
Json coefficient_array(const PolyF& f);

struct SolveOptions {
    size_t order = 30;
    std::set<u64> extra_primes;  // accepted in denominators besides S
};
Report solve_report(const CurveFamilyDescriptor& d, const SolveOptions& o);

// j = -1 runs every index.
Report congruence_report(const CurveFamilyDescriptor& d, u64 p, size_t order, int j = -1);

Report locus_document(const LocusReport& rep);

struct OracleOptions {
    std::vector<unsigned> exts{1};
    std::string model;  // alternate fiber model label
};
Report oracle_report(const CurveFamilyDescriptor& d, u64 p, const OracleOptions& o);

Report igusa_report(const CurveFamilyDescriptor& d, u64 p);

struct ModformsOptions {
    size_t order = 100;
    std::vector<std::string> emit{"tprime"};
    std::vector<u64> primes;  // twisted congruences
};
Report modforms_report(const CurveFamilyDescriptor& d, const ModformsOptions& o);

Report bounds_report(const CurveFamilyDescriptor& d, const std::vector<u64>& primes, unsigned jobs);

Report crosscheck_report(const CurveFamilyDescriptor& d, u64 p, const std::vector<unsigned>& exts);

// Good primes of d in [lo, hi].
std::vector<u64> good_primes(const CurveFamilyDescriptor& d, u64 lo, u64 hi);

}  // namespace pfkit
