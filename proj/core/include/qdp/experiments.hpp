#pragma once

#include "qdp/circuits.hpp"
#include "qdp/oracle.hpp"
#include "qdp/topo.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qdp {

enum class OracleKind { group, geometric, statevector, constant1 };

OracleKind oracle_kind_from_string(const std::string& s);
std::string to_string(OracleKind k);

// Parsed "key = value" sections of the experiment config file.
struct ExperimentConfig {
    LatticeConfig lattice{12, 2};

    PartitionKind partition_kind = PartitionKind::annular;
    AnnularSpec annular;
    StripsSpec strips;

    // String generation (theorem suite) or explicit string files.
    int string_count = 100;
    int string_depth = 6;
    std::vector<DomainShape> shapes{DomainShape::plaquette, DomainShape::disk1};
    std::uint64_t string_seed = 7;
    std::vector<std::string> string_files;

    OracleKind oracle = OracleKind::group;

    int mc_samples = 10000;
    std::uint64_t mc_seed = 11;

    std::size_t combo_cap = kDefaultComboCap;
    std::int64_t amplitude_cap = kDefaultAmplitudeCap;

    std::string csv_path;

    // Hash of the canonicalized config text; embedded in every CSV.
    std::uint64_t config_hash = 0;

    static ExperimentConfig from_text(const std::string& text);
    static ExperimentConfig from_file(const std::string& path);
};

struct ResultRow {
    int string_id = 0;
    bool safe = false;
    std::string condition;  // "-" when safe
    // Exact evolved swap expectations per region, serialized symbolically.
    std::string exp_ab, exp_bc, exp_b, exp_abc;
    std::string ratio_exact;  // "d^-k" or "num/den"
    double ratio_value = 0.0;
    std::string trivial_ratio_exact;  // same string against the constant-1 oracle
    long long runtime_ms = 0;
    std::size_t terms_ab = 0, terms_bc = 0, terms_b = 0, terms_abc = 0;
    std::string error;  // budget violations recorded per row
};

struct SuiteResult {
    std::vector<ResultRow> rows;
    std::string csv;  // full CSV body including comment header
    int failures = 0;
};

// Theorem-reproduction suite: generates/loads strings, classifies each,
// evolves the topological purity against the ground-state (group) oracle
// and the constant-1 oracle.  Safe rows are asserted to give exactly
// d^-2 and 1; unsafe rows are recorded, not asserted.
SuiteResult run_theorem_suite(const ExperimentConfig& config);

// Oracle cross-validation: random regions compared across the group,
// geometric (when in the validity family) and state-vector engines, and
// random shallow strings compared symbolic-vs-Monte-Carlo.
struct OracleRow {
    std::string kind;  // "region" or "string"
    int id = 0;
    std::string spec;
    std::string group_exact;
    std::string geometric_exact;  // "-" outside the family
    double statevector = 0.0;
    double mc_mean = 0.0;
    double mc_se = 0.0;
    bool pass = false;
};

struct OracleSuiteResult {
    std::vector<OracleRow> rows;
    std::string csv;
    int failures = 0;
};

OracleSuiteResult run_oracle_suite(const ExperimentConfig& config, int region_count = 30,
                                   int string_count = 10);

// FNV-1a over the canonicalized text.
std::uint64_t config_text_hash(const std::string& text);

int worker_count();  // QDPURITY_WORKERS env var, else hardware concurrency

}  // namespace qdp
