#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phonostat/corpus/lexicon.hpp"
#include "phonostat/corpus/profile.hpp"
#include "phonostat/stylometry/distance.hpp"
#include "phonostat/stylometry/fit.hpp"

#include "run_config.hpp"

namespace phonostat::cli {

std::string read_file(const std::string& path);  // throws ConfigError
std::string fnv1a_hex(std::string_view bytes);

// Runs fn(0..count-1) on at most `jobs` worker threads (0 = hardware count).
// fn must confine itself to its own index; exceptions propagate after all
// workers finish, keeping partial results usable.
void run_parallel(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

// Lexicon, per-text profiles for the all and types modes, and per-text error
// strings (empty = ok), all aligned with config.texts.
struct CorpusData {
    std::optional<corpus::Lexicon> lexicon;
    std::string lexicon_hash;
    std::vector<corpus::PhonemeProfile> all_profiles;
    std::vector<corpus::PhonemeProfile> type_profiles;
    std::vector<std::string> errors;

    bool all_ok() const;
    std::vector<std::string> ids(const RunConfig& config) const;
};

// Loads the lexicon and builds (or reads back from the cache directory) both
// per-text profiles. Profile construction runs in the worker pool; cache
// files are keyed by (text hash, lexicon hash, mode) so renames and repeated
// ids reuse the transcription.
CorpusData load_corpus(const RunConfig& config);

struct TextFit {
    std::string id;
    std::string author;
    stylometry::FitResult fit;
};

// Fits every ok text in the given mode ("all" or "types") in parallel.
std::vector<TextFit> fit_corpus(const RunConfig& config, const CorpusData& corpus,
                                const std::string& mode);

stylometry::DistanceMatrix aligned_distances(const RunConfig& config, const CorpusData& corpus,
                                             const std::string& mode);
stylometry::DistanceMatrix exclusive_distances(const RunConfig& config, const CorpusData& corpus);
stylometry::PairTable common_fraction_table(const RunConfig& config, const CorpusData& corpus);

}  // namespace phonostat::cli
