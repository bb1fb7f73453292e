#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nestcount/gtree.hpp"
#include "nestcount/partition.hpp"
#include "nestcount/record.hpp"
#include "nestcount/verify.hpp"

namespace {

using namespace nestcount;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

const char* kMaxNestingHelp =
    "m: count partitions whose maximal nesting number is at most m, "
    "i.e. partitions with no (m+1)-nesting";

int run_sequence(int m, int N, const std::string& engine_arg, const std::string& format,
                 const std::string& cache_dir, bool reproducible) {
    const Engine engine = parse_engine(engine_arg);
    std::optional<SequenceRecord> record;
    if (!cache_dir.empty()) {
        std::string why;
        record = load_cached(cache_dir, m, engine, N, &why);
        if (!record && why != "no cache file" && why != "cache too short")
            std::cerr << "nestcount: ignoring cache: " << why << '\n';
    }
    if (!record) {
        const auto start = std::chrono::steady_clock::now();
        const auto counts = compute_sequence(engine, m, N);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        SequenceRecord fresh;
        fresh.m = m;
        fresh.engine = engine;
        for (const auto& c : counts) fresh.terms.push_back(to_decimal(c));
        fresh.meta.version = version_string();
        fresh.meta.timestamp = utc_timestamp();
        fresh.meta.wall_time_seconds = elapsed.count();
        if (!cache_dir.empty()) store_cached(cache_dir, fresh);
        record = std::move(fresh);
    }
    if (reproducible) {
        record->meta.timestamp.reset();
        record->meta.wall_time_seconds.reset();
    }
    if (format == "json")
        std::cout << to_json(*record).dump() << '\n';
    else
        std::cout << to_csv(*record);
    return 0;
}

int run_verify(const std::string& suite, int m, int N) {
    const auto report = verify::run_suite(suite, m, N);
    std::cout << report.render();
    return report.passed() ? 0 : kExitFail;
}

int run_labels(int m, int n, const std::string& engine, const std::string& format) {
    std::map<Label, BigInt> dist;
    if (engine == "oracle")
        dist = label_distribution(n, m);
    else if (engine == "gtree")
        dist = gtree::levels(m, n).back().counts;
    else
        throw std::invalid_argument("labels supports --engine oracle|gtree");
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& [l, c] : dist) rows.push_back({{"label", l.values()}, {"count", to_decimal(c)}});
        std::cout << nlohmann::json{{"m", m}, {"size", n}, {"labels", rows}}.dump() << '\n';
    } else {
        std::cout << "label,count\n";
        for (const auto& [l, c] : dist) std::cout << l.to_string() << ',' << to_decimal(c) << '\n';
    }
    return 0;
}

int run_stats(int n, const std::string& format) {
    const auto joint = nesting_crossing_distribution(n);
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& [key, c] : joint)
            rows.push_back({{"max_nesting", key.first}, {"max_crossing", key.second}, {"count", to_decimal(c)}});
        std::cout << nlohmann::json{{"size", n}, {"joint", rows}}.dump() << '\n';
    } else {
        std::cout << "max_nesting,max_crossing,count\n";
        for (const auto& [key, c] : joint) std::cout << key.first << ',' << key.second << ',' << to_decimal(c) << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of set partitions avoiding long nestings.\n"
                 "Sequences are indexed from n = 0 (the empty partition, count 1)."};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "OpenMP worker count (0 = runtime default)")->check(CLI::NonNegativeNumber);

    int m = 1;
    int terms = 15;
    int size = 0;
    std::string engine = "gtree";
    std::string format = "csv";
    std::string cache_dir;
    std::string suite;
    bool reproducible = false;

    auto* seq = app.add_subcommand("sequence", "Print counts for n = 0..N");
    seq->add_option("--max-nesting", m, kMaxNestingHelp)->required()->check(CLI::PositiveNumber);
    seq->add_option("--terms", terms, "Largest n to compute (default 15)")->check(CLI::NonNegativeNumber);
    seq->add_option("--engine", engine, "oracle | gtree | useries | xseries")
        ->check(CLI::IsMember({"oracle", "gtree", "useries", "xseries"}));
    seq->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    seq->add_option("--cache-dir", cache_dir, "Directory for m{M}_{engine}.json cache files");
    seq->add_flag("--reproducible", reproducible, "Omit timestamp and wall time from JSON output");

    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    ver->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(verify::suite_names()));
    ver->add_option("--max-nesting", m, kMaxNestingHelp)->check(CLI::PositiveNumber);
    ver->add_option("--terms", terms, "Largest n to check (default 15)")->check(CLI::NonNegativeNumber);

    auto* lab = app.add_subcommand("labels", "Dump the label distribution at one size");
    lab->add_option("--max-nesting", m, kMaxNestingHelp)->required()->check(CLI::PositiveNumber);
    lab->add_option("--size", size, "Partition size n")->required()->check(CLI::NonNegativeNumber);
    lab->add_option("--engine", engine, "gtree | oracle")->check(CLI::IsMember({"gtree", "oracle"}));
    lab->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    auto* st = app.add_subcommand("stats", "Joint (max nesting, max crossing) distribution");
    st->add_option("--size", size, "Partition size n")->required()->check(CLI::NonNegativeNumber);
    st->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    try {
        if (*seq) return run_sequence(m, terms, engine, format, cache_dir, reproducible);
        if (*ver) return run_verify(suite, m, terms);
        if (*lab) return run_labels(m, size, engine, format);
        if (*st) return run_stats(size, format);
    } catch (const ConsistencyError& e) {
        std::cerr << "nestcount: internal consistency error: " << e.what() << '\n';
        return kExitFail;
    } catch (const ResourceLimitError& e) {
        std::cerr << "nestcount: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "nestcount: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "nestcount: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
