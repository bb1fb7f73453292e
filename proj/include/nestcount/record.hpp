#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nestcount/bigint.hpp"

namespace nestcount {

enum class Engine { oracle, gtree, useries, xseries };

std::string_view engine_name(Engine e);
/// Throws std::invalid_argument for unknown names.
Engine parse_engine(std::string_view name);

/// Counts for n = 0..N from the chosen engine.
std::vector<BigInt> compute_sequence(Engine engine, int m, int N);

struct RecordMeta {
    std::string version;
    std::optional<std::string> timestamp; ///< ISO-8601 UTC
    std::optional<double> wall_time_seconds;
    bool operator==(const RecordMeta&) const = default;
};

struct SequenceRecord {
    int m = 1;
    Engine engine = Engine::gtree;
    std::vector<std::string> terms; ///< decimal strings, index n
    RecordMeta meta;

    /// terms[0] == "1" and every term is a non-negative decimal.
    bool is_valid() const;
    bool operator==(const SequenceRecord&) const = default;
};

nlohmann::json to_json(const SequenceRecord& record);
/// Throws std::invalid_argument on schema violations.
SequenceRecord record_from_json(const nlohmann::json& j);

/// "n,count" header then one LF-terminated row per term.
std::string to_csv(const SequenceRecord& record);

std::string version_string();
std::string utc_timestamp();

/// m{M}_{engine}.json
std::string cache_file_name(int m, Engine engine);

/// Cached record covering at least N+1 terms, or nullopt when missing, stale
/// or failing revalidation (the first terms are recomputed with the
/// generating tree and every term is checked against the Bell bound).
std::optional<SequenceRecord> load_cached(const std::filesystem::path& dir, int m, Engine engine, int N,
                                          std::string* diagnostic = nullptr);
void store_cached(const std::filesystem::path& dir, const SequenceRecord& record);

} // namespace nestcount
