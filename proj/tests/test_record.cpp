#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "nestcount/record.hpp"

using namespace nestcount;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("nestcount_test_" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

} // namespace

TEST_CASE("engine names") {
    for (Engine e : {Engine::oracle, Engine::gtree, Engine::useries, Engine::xseries})
        CHECK(parse_engine(engine_name(e)) == e);
    CHECK_THROWS_AS(parse_engine("maple"), std::invalid_argument);
}

TEST_CASE("compute_sequence dispatches to every engine") {
    const std::vector<BigInt> expected{1, 1, 2, 5, 15, 52, 202};
    for (Engine e : {Engine::oracle, Engine::gtree, Engine::useries, Engine::xseries})
        CHECK(compute_sequence(e, 2, 6) == expected);
    CHECK_THROWS_AS(compute_sequence(Engine::oracle, 2, 20), ResourceLimitError);
    CHECK_THROWS_AS(compute_sequence(Engine::gtree, 0, 5), std::invalid_argument);
}

TEST_CASE("JSON round trip") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        SequenceRecord r;
        r.m = 1 + static_cast<int>(rng() % 9);
        r.engine = static_cast<Engine>(rng() % 4);
        r.terms.push_back("1");
        const int len = static_cast<int>(rng() % 30);
        BigInt value = 1;
        for (int i = 0; i < len; ++i) {
            value = value * static_cast<unsigned long>(rng() % 1000 + 1) + static_cast<unsigned long>(rng() % 17);
            r.terms.push_back(to_decimal(value));
        }
        r.meta.version = "0.1.0";
        if (rng() % 2) {
            r.meta.timestamp = "2026-01-01T00:00:00Z";
            r.meta.wall_time_seconds = 0.25;
        }
        CHECK(record_from_json(nlohmann::json::parse(to_json(r).dump())) == r);
    }
}

TEST_CASE("records reject malformed input") {
    auto j = nlohmann::json::parse(R"({"m":2,"engine":"gtree","terms":["1","1"],"meta":{"version":"x"}})");
    CHECK(record_from_json(j).terms.size() == 2);
    j["terms"] = {"2"};
    CHECK_THROWS_AS(record_from_json(j), std::invalid_argument);
    j["terms"] = {"1", "-4"};
    CHECK_THROWS_AS(record_from_json(j), std::invalid_argument);
    j["terms"] = {"1"};
    j["engine"] = "abacus";
    CHECK_THROWS_AS(record_from_json(j), std::invalid_argument);
    CHECK_THROWS_AS(record_from_json(nlohmann::json::parse(R"({"m":2})")), std::invalid_argument);
}

TEST_CASE("CSV layout") {
    SequenceRecord r;
    r.terms = {"1", "1", "2"};
    CHECK(to_csv(r) == "n,count\n0,1\n1,1\n2,2\n");
}

TEST_CASE("cache store, load and revalidation") {
    const auto dir = scratch_dir("cache");
    CHECK(cache_file_name(3, Engine::useries) == "m3_useries.json");

    std::string why;
    CHECK_FALSE(load_cached(dir, 2, Engine::gtree, 5, &why));

    SequenceRecord r;
    r.m = 2;
    r.engine = Engine::gtree;
    for (const auto& c : compute_sequence(Engine::gtree, 2, 12)) r.terms.push_back(to_decimal(c));
    r.meta.version = version_string();
    store_cached(dir, r);
    REQUIRE(std::filesystem::exists(dir / "m2_gtree.json"));

    auto hit = load_cached(dir, 2, Engine::gtree, 10);
    REQUIRE(hit);
    CHECK(hit->terms.size() == 11);
    CHECK(hit->terms.back() == "97566");

    CHECK_FALSE(load_cached(dir, 2, Engine::gtree, 13, &why));
    CHECK(why == "cache too short");

    // A tampered early term fails revalidation.
    auto bad = r;
    bad.terms[4] = "16";
    store_cached(dir, bad);
    CHECK_FALSE(load_cached(dir, 2, Engine::gtree, 10, &why));
    CHECK(why.find("n = 4") != std::string::npos);

    // A late term beyond the Bell number fails too.
    bad = r;
    bad.terms[12] = "99999999999";
    store_cached(dir, bad);
    CHECK_FALSE(load_cached(dir, 2, Engine::gtree, 12, &why));

    std::ofstream(dir / "m2_gtree.json") << "{ not json";
    CHECK_FALSE(load_cached(dir, 2, Engine::gtree, 5, &why));
    CHECK(why.find("unreadable") != std::string::npos);
    std::filesystem::remove_all(dir);
}
