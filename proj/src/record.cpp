#include "nestcount/record.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nestcount/gtree.hpp"
#include "nestcount/partition.hpp"
#include "nestcount/series.hpp"

#ifndef NESTCOUNT_VERSION
#define NESTCOUNT_VERSION "0.0.0"
#endif

namespace nestcount {

namespace {

constexpr int kRevalidatedPrefix = 8;

bool is_decimal(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

} // namespace

std::string_view engine_name(Engine e) {
    switch (e) {
    case Engine::oracle: return "oracle";
    case Engine::gtree: return "gtree";
    case Engine::useries: return "useries";
    case Engine::xseries: return "xseries";
    }
    return "?";
}

Engine parse_engine(std::string_view name) {
    for (Engine e : {Engine::oracle, Engine::gtree, Engine::useries, Engine::xseries})
        if (engine_name(e) == name) return e;
    throw std::invalid_argument("unknown engine '" + std::string(name) + "'");
}

std::vector<BigInt> compute_sequence(Engine engine, int m, int N) {
    if (m < 1) throw std::invalid_argument("--max-nesting must be at least 1");
    if (N < 0) throw std::invalid_argument("--terms must be non-negative");
    switch (engine) {
    case Engine::oracle: {
        std::vector<BigInt> out;
        for (int n = 0; n <= N; ++n) out.push_back(count_nonnesting_parallel(n, m));
        return out;
    }
    case Engine::gtree: return gtree::sequence(m, N);
    case Engine::useries: return series::u_engine(m, N);
    case Engine::xseries: return series::x_engine(m, N);
    }
    throw std::invalid_argument("unknown engine");
}

bool SequenceRecord::is_valid() const {
    if (terms.empty() || terms.front() != "1") return false;
    return std::all_of(terms.begin(), terms.end(), is_decimal);
}

nlohmann::json to_json(const SequenceRecord& record) {
    nlohmann::json meta{{"version", record.meta.version}};
    if (record.meta.timestamp) meta["timestamp"] = *record.meta.timestamp;
    if (record.meta.wall_time_seconds) meta["wall_time_seconds"] = *record.meta.wall_time_seconds;
    return nlohmann::json{{"m", record.m},
                          {"engine", std::string(engine_name(record.engine))},
                          {"terms", record.terms},
                          {"meta", meta}};
}

SequenceRecord record_from_json(const nlohmann::json& j) {
    try {
        SequenceRecord r;
        r.m = j.at("m").get<int>();
        r.engine = parse_engine(j.at("engine").get<std::string>());
        r.terms = j.at("terms").get<std::vector<std::string>>();
        const auto& meta = j.at("meta");
        r.meta.version = meta.at("version").get<std::string>();
        if (meta.contains("timestamp")) r.meta.timestamp = meta.at("timestamp").get<std::string>();
        if (meta.contains("wall_time_seconds")) r.meta.wall_time_seconds = meta.at("wall_time_seconds").get<double>();
        if (!r.is_valid()) throw std::invalid_argument("terms are not a counting sequence");
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed sequence record: ") + e.what());
    }
}

std::string to_csv(const SequenceRecord& record) {
    std::string out = "n,count\n";
    for (std::size_t n = 0; n < record.terms.size(); ++n) out += std::to_string(n) + "," + record.terms[n] + "\n";
    return out;
}

std::string version_string() { return NESTCOUNT_VERSION; }

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string cache_file_name(int m, Engine engine) {
    return "m" + std::to_string(m) + "_" + std::string(engine_name(engine)) + ".json";
}

std::optional<SequenceRecord> load_cached(const std::filesystem::path& dir, int m, Engine engine, int N,
                                          std::string* diagnostic) {
    auto note = [&](std::string msg) {
        if (diagnostic) *diagnostic = std::move(msg);
        return std::nullopt;
    };
    const auto path = dir / cache_file_name(m, engine);
    std::ifstream in(path);
    if (!in) return note("no cache file");
    SequenceRecord record;
    try {
        record = record_from_json(nlohmann::json::parse(in));
    } catch (const std::exception& e) {
        return note(std::string("unreadable cache: ") + e.what());
    }
    if (record.m != m || record.engine != engine) return note("cache key mismatch");
    if (static_cast<int>(record.terms.size()) < N + 1) return note("cache too short");

    const int check = std::min(N, kRevalidatedPrefix);
    const auto fresh = gtree::sequence(m, check, false);
    for (int n = 0; n <= check; ++n)
        if (record.terms[static_cast<std::size_t>(n)] != to_decimal(fresh[static_cast<std::size_t>(n)]))
            return note("cache disagrees with a fresh computation at n = " + std::to_string(n));
    const auto bell = bell_numbers(N);
    for (int n = 0; n <= N; ++n)
        if (BigInt(record.terms[static_cast<std::size_t>(n)]) > bell[static_cast<std::size_t>(n)])
            return note("cached term exceeds the Bell number at n = " + std::to_string(n));

    record.terms.resize(static_cast<std::size_t>(N) + 1);
    return record;
}

void store_cached(const std::filesystem::path& dir, const SequenceRecord& record) {
    std::filesystem::create_directories(dir);
    const auto path = dir / cache_file_name(record.m, record.engine);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp);
        out << to_json(record).dump(2) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

} // namespace nestcount
