#include "phonostat/corpus/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace phonostat::corpus {

std::string ProfileMode::label() const {
    switch (kind) {
        case WordMode::AllTokens:
            return "all";
        case WordMode::DistinctTypes:
            return "types";
        case WordMode::ExclusiveTypes:
            return "exclusive-types";
    }
    return "?";
}

WordMode parse_word_mode(const std::string& label) {
    if (label == "all")
        return WordMode::AllTokens;
    if (label == "types")
        return WordMode::DistinctTypes;
    if (label == "exclusive-types")
        return WordMode::ExclusiveTypes;
    throw std::invalid_argument("unknown word mode '" + label +
                                "' (expected all, types or exclusive-types)");
}

namespace {

void add_phonemes(std::vector<std::int64_t>& counts, const std::vector<std::uint16_t>& phones) {
    for (std::uint16_t p : phones)
        ++counts[p];
}

}  // namespace

PhonemeProfile build_profile(const std::string& text_id, std::span<const std::string> tokens,
                             const Lexicon& lexicon, WordMode mode) {
    if (mode == WordMode::ExclusiveTypes)
        throw std::invalid_argument("build_profile: exclusive-types profiles come from exclusive_profile");
    if (lexicon.size() == 0)
        throw std::invalid_argument("build_profile: empty lexicon");

    PhonemeProfile profile;
    profile.text_id = text_id;
    profile.mode.kind = mode;
    profile.inventory = lexicon.inventory_ptr();
    profile.counts.assign(profile.inventory->size(), 0);
    profile.token_count = static_cast<std::int64_t>(tokens.size());

    for (const std::string& token : tokens) {
        const std::vector<std::uint16_t>* phones = lexicon.find(token);
        if (!phones) {
            profile.oov.insert(token);
            continue;
        }
        profile.in_lexicon_tokens += 1;
        profile.word_types.insert(token);
        if (mode == WordMode::AllTokens)
            add_phonemes(profile.counts, *phones);
    }
    if (mode == WordMode::DistinctTypes) {
        for (const std::string& word : profile.word_types)
            add_phonemes(profile.counts, *lexicon.find(word));
    }

    profile.total = std::accumulate(profile.counts.begin(), profile.counts.end(), std::int64_t{0});
    if (profile.in_lexicon_tokens == 0 || profile.total == 0)
        throw ProfileError("text '" + text_id + "': no tokens found in the lexicon (" +
                           std::to_string(profile.oov.size()) + " distinct OOV words)");
    return profile;
}

namespace {

PhonemeProfile rebuild_over_types(const PhonemeProfile& base, std::set<std::string> types,
                                  const Lexicon& lexicon, const std::string& versus) {
    PhonemeProfile out = base;
    out.mode = ProfileMode{WordMode::ExclusiveTypes, versus};
    out.counts.assign(out.inventory->size(), 0);
    for (const std::string& word : types) {
        const std::vector<std::uint16_t>* phones = lexicon.find(word);
        if (phones)
            add_phonemes(out.counts, *phones);
    }
    out.word_types = std::move(types);
    out.total = std::accumulate(out.counts.begin(), out.counts.end(), std::int64_t{0});
    if (out.total == 0)
        throw ProfileError("exclusive profile for '" + base.text_id + "' vs '" + versus +
                           "' has no in-lexicon phonemes");
    return out;
}

}  // namespace

std::pair<PhonemeProfile, PhonemeProfile> exclusive_profile(const PhonemeProfile& profile_i,
                                                            const PhonemeProfile& profile_j,
                                                            const Lexicon& lexicon) {
    if (profile_i.mode.kind != WordMode::DistinctTypes ||
        profile_j.mode.kind != WordMode::DistinctTypes)
        throw std::invalid_argument("exclusive_profile: inputs must be distinct-types profiles");
    if (!(*profile_i.inventory == *profile_j.inventory) ||
        !(*profile_i.inventory == lexicon.inventory()))
        throw std::invalid_argument("exclusive_profile: profiles built over different lexicons");

    std::set<std::string> only_i, only_j;
    std::set_difference(profile_i.word_types.begin(), profile_i.word_types.end(),
                        profile_j.word_types.begin(), profile_j.word_types.end(),
                        std::inserter(only_i, only_i.begin()));
    std::set_difference(profile_j.word_types.begin(), profile_j.word_types.end(),
                        profile_i.word_types.begin(), profile_i.word_types.end(),
                        std::inserter(only_j, only_j.begin()));

    return {rebuild_over_types(profile_i, std::move(only_i), lexicon, profile_j.text_id),
            rebuild_over_types(profile_j, std::move(only_j), lexicon, profile_i.text_id)};
}

double common_fraction(const PhonemeProfile& profile_i, const PhonemeProfile& profile_j) {
    const auto& a = profile_i.word_types;
    const auto& b = profile_j.word_types;
    if (a.empty() && b.empty())
        throw std::invalid_argument("common_fraction: both word-type sets are empty");
    std::size_t shared = 0;
    for (const std::string& w : a)
        shared += b.count(w);
    return static_cast<double>(shared) / static_cast<double>(a.size() + b.size() - shared);
}

FrequencyVector::FrequencyVector(std::shared_ptr<const PhonemeInventory> inventory,
                                 std::vector<double> freqs)
    : inventory_(std::move(inventory)), freqs_(std::move(freqs)) {
    if (!inventory_)
        throw std::invalid_argument("FrequencyVector: null inventory");
    if (freqs_.size() != inventory_->size())
        throw std::invalid_argument("FrequencyVector: size does not match inventory");
    long double sum = 0.0L;
    for (double f : freqs_) {
        if (!(f >= 0.0) || f > 1.0 + 1e-12)
            throw std::invalid_argument("FrequencyVector: frequencies must lie in [0, 1]");
        sum += f;
    }
    if (std::fabs(static_cast<double>(sum) - 1.0) > 1e-12)
        throw std::invalid_argument("FrequencyVector: frequencies must sum to 1");
}

FrequencyVector to_frequency_vector(const PhonemeProfile& profile) {
    if (profile.total <= 0)
        throw std::invalid_argument("to_frequency_vector: profile has no counts");
    std::vector<double> freqs(profile.counts.size());
    for (std::size_t i = 0; i < freqs.size(); ++i)
        freqs[i] = static_cast<double>(profile.counts[i]) / static_cast<double>(profile.total);
    return FrequencyVector(profile.inventory, std::move(freqs));
}

std::vector<std::pair<std::string, double>> ranked_entries(const FrequencyVector& fv) {
    std::vector<std::pair<std::string, double>> entries;
    entries.reserve(fv.size());
    for (std::size_t i = 0; i < fv.size(); ++i)
        entries.emplace_back(fv.inventory().symbols()[i], fv.freqs()[i]);
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second)
            return a.second > b.second;
        return a.first < b.first;
    });
    return entries;
}

model::RankedSpectrum rank_spectrum(const FrequencyVector& fv) {
    std::vector<std::pair<std::string, double>> entries = ranked_entries(fv);
    std::vector<double> freqs(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        freqs[i] = entries[i].second;
    return model::RankedSpectrum::from_sorted(std::move(freqs));
}

}  // namespace phonostat::corpus
