#include "dkc/harness.hpp"

#include "doctest.h"

#include <fstream>
#include <set>

using namespace dkc;

namespace {

std::filesystem::path fresh_dir(const std::string& tag)
{
    auto dir = std::filesystem::temp_directory_path() / ("dkc-test-" + tag);
    std::filesystem::remove_all(dir);
    return dir;
}

VerificationPlan small_plan()
{
    VerificationPlan p;
    p.max_k = 2;
    p.max_l = 2;
    p.max_i = 1;
    p.max_a = 1;
    p.max_pr = 3;
    p.checks = {CheckKind::Identities, CheckKind::Exactness, CheckKind::Commutativity, CheckKind::Splittings};
    return p;
}

}  // namespace

TEST_CASE("fnv1a reference values")
{
    CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("plan validation")
{
    VerificationPlan p;
    CHECK_NOTHROW(p.validate());
    CHECK(p.checks.size() == all_check_kinds().size());
    p.max_k = 0;
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p.max_k = 1;
    p.checks.clear();
    CHECK_THROWS_AS(p.validate(), ConfigError);
    CHECK_THROWS_AS(parse_check_kind("nonsense"), ConfigError);
    CHECK(parse_check_kind("spectra") == CheckKind::Spectra);
}

TEST_CASE("claim ids are unique and resolvable")
{
    std::set<std::string> ids;
    for (const auto& c : claim_registry()) {
        CHECK(ids.insert(c.id).second);
        CHECK(!c.statement.empty());
        CHECK(&claim(c.id) == &c);
    }
    CHECK_THROWS_AS(claim("NOPE"), Error);
}

TEST_CASE("cache round trip and corruption")
{
    const auto dir = fresh_dir("cache");
    DiskCache cache(dir);
    const Alphabet v;
    const Spot s = Spot::K(1, 1);
    bool hit = true;
    const auto first = cached_differential(DiffKind::D, s, v, &cache, &hit);
    CHECK(!hit);
    const auto second = cached_differential(DiffKind::D, s, v, &cache, &hit);
    CHECK(hit);
    CHECK(first == second);
    CHECK(first == differential(DiffKind::D, s, v));

    // Flip one payload byte: the checksum catches it and the map is recomputed.
    const auto path = cache.path_for(differential_key(DiffKind::D, s, v));
    std::string bytes;
    {
        std::ifstream in(path, std::ios::binary);
        bytes.assign(std::istreambuf_iterator<char>(in), {});
    }
    bytes[bytes.size() - 2] = bytes[bytes.size() - 2] == '1' ? '2' : '1';
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << bytes;
    }
    CHECK(!cache.load(differential_key(DiffKind::D, s, v)));
    const auto third = cached_differential(DiffKind::D, s, v, &cache, &hit);
    CHECK(!hit);
    CHECK(third == first);
    CHECK(cache.load(differential_key(DiffKind::D, s, v)));
    std::filesystem::remove_all(dir);
}

TEST_CASE("reports do not depend on the number of workers")
{
    auto plan = small_plan();
    const auto one = run(plan);
    plan.jobs = 3;
    const auto three = run(plan);
    auto strip = [](nlohmann::json j) {
        j.erase("timings");
        j["plan"].erase("jobs");
        return j.dump();
    };
    CHECK(strip(one.to_json()) == strip(three.to_json()));
    CHECK(one.all_pass());
    CHECK(exit_code(one) == 0);
    CHECK(one.records.size() > 50);
}

TEST_CASE("failing records carry a witness")
{
    VerificationPlan plan;
    plan.max_i = 1;
    plan.max_a = 1;
    plan.checks = {CheckKind::Spectra};
    const auto r = run(plan);
    CHECK(!r.all_pass());
    CHECK(exit_code(r) == 1);
    for (const auto& rec : r.records)
        if (rec.status == Status::Fail)
            CHECK(!rec.witness.is_null());
}

TEST_CASE("(2|1) runs the identities and sees homology at Λ_2 S_1*")
{
    auto plan = small_plan();
    plan.alphabet = {2, 1};
    plan.checks = {CheckKind::Identities, CheckKind::Exactness};
    const auto r = run(plan);
    CHECK(r.all_pass());
    bool seen = false;
    for (const auto& rec : r.records)
        if (rec.claim == "EXACT-K" && rec.params["k"] == 2 && rec.params["l"] == 1) {
            CHECK(rec.data["homology"] == 1);
            seen = true;
        }
    CHECK(seen);
}

TEST_CASE("(3|1)-only checks are skipped elsewhere")
{
    auto plan = small_plan();
    plan.alphabet = {2, 1};
    plan.checks = {CheckKind::Constructions};
    const auto r = run(plan);
    CHECK(r.count(Status::Skipped) == r.records.size());
    CHECK(r.all_pass());
}

TEST_CASE("cache cells agree with fresh computation")
{
    auto plan = small_plan();
    plan.checks = {CheckKind::Identities};
    plan.cache_dir = fresh_dir("grid");
    const auto cold = run(plan);
    const auto warm = run(plan);
    std::size_t hits = 0, cells = 0;
    for (const auto& rec : warm.records)
        if (rec.claim == "CACHE-COHERENCE") {
            ++cells;
            hits += rec.data["from_cache"].get<bool>();
            CHECK(rec.status == Status::Pass);
        }
    CHECK(cells > 0);
    CHECK(hits == cells);
    CHECK(cold.all_pass());
    std::filesystem::remove_all(*plan.cache_dir);
}

TEST_CASE("module report")
{
    const auto j = module_json(construct({"Mmp", {1, 1}}), true);
    CHECK(j["dim"].get<std::size_t>() > 0);
    CHECK(j["highest_weight"] == nlohmann::json({1, 1, -1, 0}));
    CHECK(j["irreducibility"]["pass"] == true);
    CHECK(j["comparison"]["highest_weight_match"] == true);
    CHECK(j["comparison"]["closed_formula"]["matched"] == "unsigned");
}
