#include "pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "phonostat/corpus/profile_json.hpp"
#include "phonostat/corpus/tokenize.hpp"

namespace phonostat::cli {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

void run_parallel(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    if (count == 0)
        return;
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t workers = jobs > 0 ? static_cast<std::size_t>(jobs) : (hw ? hw : 4);
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count || failed.load())
                    return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!first_error)
                        first_error = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        });
    }
    for (std::thread& t : pool)
        t.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

bool CorpusData::all_ok() const {
    for (const std::string& e : errors)
        if (!e.empty())
            return false;
    return true;
}

std::vector<std::string> CorpusData::ids(const RunConfig& config) const {
    std::vector<std::string> out;
    for (const TextEntry& t : config.texts)
        out.push_back(t.id);
    return out;
}

namespace {

fs::path cache_path(const RunConfig& config, const std::string& text_hash,
                    const std::string& lexicon_hash, const std::string& mode) {
    fs::path dir = config.cache_dir.empty() ? fs::path(config.out_dir) / "cache"
                                            : fs::path(config.cache_dir);
    return dir / (text_hash + "-" + lexicon_hash + "-" + mode + ".json");
}

std::optional<corpus::PhonemeProfile> try_cache_read(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    try {
        auto j = nlohmann::ordered_json::parse(in);
        return corpus::profile_from_json(j);
    } catch (const std::exception&) {
        return std::nullopt;  // stale or corrupt entries are recomputed
    }
}

void cache_write(const fs::path& path, const corpus::PhonemeProfile& profile) {
    fs::create_directories(path.parent_path());
    fs::path tmp = path;
    // unique per thread: duplicate inputs may race on the same cache key
    tmp += "." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        out << corpus::profile_to_json(profile, true).dump(2) << '\n';
    }
    fs::rename(tmp, path);
}

}  // namespace

CorpusData load_corpus(const RunConfig& config) {
    if (config.lexicon_path.empty())
        throw ConfigError("--lexicon is required");
    if (config.texts.empty())
        throw ConfigError("no input texts; supply --authors FILE with at least one row");

    std::string lexicon_bytes = read_file(config.lexicon_path);
    CorpusData corpus;
    corpus.lexicon_hash = fnv1a_hex(lexicon_bytes);
    {
        std::istringstream in(lexicon_bytes);
        auto loaded = corpus::load_lexicon(in);
        for (const std::string& w : loaded.warnings)
            std::fprintf(stderr, "warning: %s: %s\n", config.lexicon_path.c_str(), w.c_str());
        corpus.lexicon.emplace(std::move(loaded.lexicon));
    }

    std::size_t n = config.texts.size();
    corpus.all_profiles.resize(n);
    corpus.type_profiles.resize(n);
    corpus.errors.resize(n);

    run_parallel(n, config.jobs, [&](std::size_t i) {
        const TextEntry& entry = config.texts[i];
        try {
            std::string bytes = read_file(entry.path);
            std::string text_hash = fnv1a_hex(bytes);
            std::optional<corpus::TokenizeResult> tokens;
            auto profile_for = [&](corpus::WordMode kind, const std::string& label) {
                fs::path cpath = cache_path(config, text_hash, corpus.lexicon_hash, label);
                if (auto cached = try_cache_read(cpath)) {
                    cached->text_id = entry.id;  // cache is content-addressed
                    return *std::move(cached);
                }
                if (!tokens)
                    tokens = corpus::tokenize(bytes);
                auto profile =
                    corpus::build_profile(entry.id, tokens->tokens, *corpus.lexicon, kind);
                cache_write(cpath, profile);
                return profile;
            };
            corpus.all_profiles[i] = profile_for(corpus::WordMode::AllTokens, "all");
            corpus.type_profiles[i] = profile_for(corpus::WordMode::DistinctTypes, "types");
        } catch (const std::exception& e) {
            corpus.errors[i] = e.what();
        }
    });
    return corpus;
}

std::vector<TextFit> fit_corpus(const RunConfig& config, const CorpusData& corpus,
                                const std::string& mode) {
    const auto& profiles = mode == "types" ? corpus.type_profiles : corpus.all_profiles;
    std::vector<std::size_t> ok;
    for (std::size_t i = 0; i < config.texts.size(); ++i)
        if (corpus.errors[i].empty())
            ok.push_back(i);

    std::vector<std::optional<TextFit>> slots(ok.size());
    stylometry::BetaRange range{config.beta_min, config.beta_max};
    numerics::Tolerance tol;
    tol.abs = config.tol;
    run_parallel(ok.size(), config.jobs, [&](std::size_t k) {
        std::size_t i = ok[k];
        auto spectrum = corpus::rank_spectrum(corpus::to_frequency_vector(profiles[i]));
        slots[k] = TextFit{config.texts[i].id, config.texts[i].author,
                           stylometry::fit_beta(spectrum, range, tol, mode)};
    });

    std::vector<TextFit> out;
    out.reserve(slots.size());
    for (auto& s : slots)
        out.push_back(*std::move(s));
    return out;
}

stylometry::DistanceMatrix aligned_distances(const RunConfig& config, const CorpusData& corpus,
                                             const std::string& mode) {
    const auto& profiles = mode == "types" ? corpus.type_profiles : corpus.all_profiles;
    std::vector<corpus::FrequencyVector> fvs;
    for (const auto& p : profiles)
        fvs.push_back(corpus::to_frequency_vector(p));
    return stylometry::distance_matrix(corpus.ids(config), fvs);
}

stylometry::DistanceMatrix exclusive_distances(const RunConfig& config, const CorpusData& corpus) {
    return stylometry::exclusive_distance_matrix(corpus.ids(config), corpus.type_profiles,
                                                 *corpus.lexicon);
}

stylometry::PairTable common_fraction_table(const RunConfig& config, const CorpusData& corpus) {
    stylometry::PairTable table(corpus.ids(config));
    const auto& profiles = corpus.type_profiles;
    for (std::size_t i = 0; i < profiles.size(); ++i)
        for (std::size_t j = i + 1; j < profiles.size(); ++j)
            table.set(profiles[i].text_id, profiles[j].text_id,
                      corpus::common_fraction(profiles[i], profiles[j]));
    return table;
}

}  // namespace phonostat::cli
