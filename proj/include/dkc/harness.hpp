#pragma once

#include "dkc/characters.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dkc {

enum class CheckKind { Identities, Exactness, Commutativity, Equivariance, Spectra, Splittings, Constructions, Characters };

std::string to_string(CheckKind k);
/// Throws ConfigError on unknown names.
CheckKind parse_check_kind(const std::string& s);
std::vector<CheckKind> all_check_kinds();
std::set<CheckKind> all_check_set();

class ConfigError : public Error {
public:
    using Error::Error;
};

struct VerificationPlan {
    Alphabet alphabet;
    int max_k = 4;
    int max_l = 4;
    int max_i = 2;
    int max_a = 2;
    int max_pr = 6;  ///< bound on p + r for the L complexes
    std::set<CheckKind> checks = all_check_set();
    unsigned jobs = 1;
    std::optional<std::filesystem::path> cache_dir;

    /// Throws ConfigError when a bound is below 1 or no check is selected.
    void validate() const;
    nlohmann::json to_json() const;
};

/// Stable claim ids with a one-line statement of what is checked.
struct Claim {
    std::string id;
    std::string statement;
};
const std::vector<Claim>& claim_registry();
const Claim& claim(const std::string& id);

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

struct Record {
    std::string claim;
    nlohmann::json params = nlohmann::json::object();
    Status status = Status::Pass;
    nlohmann::json witness;  ///< set on failure (and on skip, the reason)
    nlohmann::json data = nlohmann::json::object();
    double seconds = 0;
};

struct Report {
    VerificationPlan plan;
    std::vector<Record> records;

    std::size_t count(Status s) const;
    bool all_pass() const { return count(Status::Fail) == 0; }
    /// Deterministic part under "records"/"summary"; wall-clock times only under "timings".
    nlohmann::json to_json() const;
};

Report run(const VerificationPlan& plan);

/// Exit status of a report: 0 all pass, 1 at least one failure.
int exit_code(const Report& r);

/// FNV-1a, 64 bit.
std::uint64_t fnv1a(const std::string& bytes);

/// On-disk store of exact matrices, one checksummed file per key, replaced atomically.
class DiskCache {
public:
    explicit DiskCache(std::filesystem::path dir);
    /// DKC_CACHE_DIR when set.
    static std::optional<std::filesystem::path> env_dir();

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path path_for(const std::string& key) const;
    /// nullopt when absent or when the checksum does not match.
    std::optional<SparseMap> load(const std::string& key) const;
    void store(const std::string& key, const SparseMap& m) const;

private:
    std::filesystem::path dir_;
};

/// Key of a differential, e.g. "d_S0.L1.S1*_3-1".
std::string differential_key(DiffKind kind, const Spot& s, const Alphabet& v);
/// Cached differential: load, or compute and store. `fresh_hit` tells which happened.
SparseMap cached_differential(DiffKind kind, const Spot& s, const Alphabet& v, const DiskCache* cache,
                              bool* from_cache = nullptr);

/// `count` typical, dominant, integrable labels with entries in [lo, hi], spread
/// evenly through the lexicographic list of all of them.
std::vector<WeightLabel> sample_typical_weights(std::size_t count, int lo = -3, int hi = 3);

/// Module report: name, dim, weight table, singular lines, highest weight, irreducibility
/// and both characters.
nlohmann::json module_json(const ConstructedModule& c, bool with_irreducibility = true);

/// Closed formula and stated highest weight for a (3|1) construction, where there is one.
struct ConstructionClaims {
    std::optional<CharFraction> closed_formula;
    std::string closed_formula_name;
    std::vector<int> stated_label;  ///< empty when no highest weight is stated
};
ConstructionClaims construction_claims(const Construction& c);

/// The three-way comparison: weight enumeration vs closed formula vs V(stated λ),
/// plus the stated vs computed highest weight.
nlohmann::json construction_comparison(const ConstructedModule& c);

}  // namespace dkc
