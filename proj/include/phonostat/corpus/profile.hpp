#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "phonostat/corpus/lexicon.hpp"
#include "phonostat/model/dirichlet.hpp"

namespace phonostat::corpus {

enum class WordMode {
    AllTokens,      // every token occurrence counts
    DistinctTypes,  // each word type counts once
    ExclusiveTypes  // distinct types minus another text's types
};

struct ProfileMode {
    WordMode kind = WordMode::AllTokens;
    std::string versus;  // the other text_id, ExclusiveTypes only

    std::string label() const;
};

// Parses "all", "types", "exclusive-types"; throws std::invalid_argument otherwise.
WordMode parse_word_mode(const std::string& label);

struct PhonemeProfile {
    std::string text_id;
    ProfileMode mode;
    std::shared_ptr<const PhonemeInventory> inventory;
    std::vector<std::int64_t> counts;  // aligned with inventory symbols
    std::int64_t total = 0;
    std::set<std::string> word_types;  // in-lexicon distinct words
    std::int64_t token_count = 0;      // all tokens, in-lexicon or not
    std::int64_t in_lexicon_tokens = 0;
    std::set<std::string> oov;

    double coverage() const {
        return token_count > 0 ? static_cast<double>(in_lexicon_tokens) / token_count : 0.0;
    }
};

// Thrown when a text yields no usable phoneme counts.
class ProfileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Counts phonemes over the tokens under AllTokens or DistinctTypes;
// ExclusiveTypes profiles come from exclusive_profile below. OOV tokens are
// skipped and recorded. Throws ProfileError if no token is in the lexicon.
PhonemeProfile build_profile(const std::string& text_id, std::span<const std::string> tokens,
                             const Lexicon& lexicon, WordMode mode);

// Recomputes both profiles over the word types unique to each text
// (types_i \ types_j and vice versa). Inputs must be DistinctTypes profiles
// over the same lexicon; throws ProfileError if either difference is empty.
std::pair<PhonemeProfile, PhonemeProfile> exclusive_profile(const PhonemeProfile& profile_i,
                                                            const PhonemeProfile& profile_j,
                                                            const Lexicon& lexicon);

// Jaccard fraction of shared word types, n(ij) / (n(i)+n(j)-n(ij)).
double common_fraction(const PhonemeProfile& profile_i, const PhonemeProfile& profile_j);

// Normalized frequencies aligned with an inventory; zero-count phonemes stay
// present so spectra remain comparable across texts.
class FrequencyVector {
public:
    FrequencyVector(std::shared_ptr<const PhonemeInventory> inventory, std::vector<double> freqs);

    const std::vector<double>& freqs() const { return freqs_; }
    const PhonemeInventory& inventory() const { return *inventory_; }
    std::shared_ptr<const PhonemeInventory> inventory_ptr() const { return inventory_; }
    std::size_t size() const { return freqs_.size(); }

private:
    std::shared_ptr<const PhonemeInventory> inventory_;
    std::vector<double> freqs_;
};

FrequencyVector to_frequency_vector(const PhonemeProfile& profile);

// Frequencies sorted nonincreasing; ties broken by phoneme symbol so the
// rank ownership is deterministic (the values are tie-order independent).
model::RankedSpectrum rank_spectrum(const FrequencyVector& fv);

// (symbol, frequency) pairs in rank order, same tie rule; feeds table output.
std::vector<std::pair<std::string, double>> ranked_entries(const FrequencyVector& fv);

}  // namespace phonostat::corpus
