#include "phonostat/corpus/profile_json.hpp"

#include <cmath>
#include <stdexcept>

namespace phonostat::corpus {

nlohmann::ordered_json profile_to_json(const PhonemeProfile& profile, bool include_word_sets) {
    nlohmann::ordered_json j;
    j["text_id"] = profile.text_id;
    j["mode"] = profile.mode.label();
    if (profile.mode.kind == WordMode::ExclusiveTypes)
        j["vs"] = profile.mode.versus;
    j["inventory"] = profile.inventory->symbols();
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < profile.counts.size(); ++i)
        counts[profile.inventory->symbols()[i]] = profile.counts[i];
    j["counts"] = std::move(counts);
    j["total"] = profile.total;
    j["token_count"] = profile.token_count;
    j["type_count"] = profile.word_types.size();
    j["oov_count"] = profile.oov.size();
    j["coverage"] = profile.coverage();
    if (include_word_sets) {
        j["in_lexicon_tokens"] = profile.in_lexicon_tokens;
        j["word_types"] = profile.word_types;
        j["oov"] = profile.oov;
    }
    return j;
}

PhonemeProfile profile_from_json(const nlohmann::ordered_json& j) {
    PhonemeProfile profile;
    profile.text_id = j.at("text_id").get<std::string>();
    profile.mode.kind = parse_word_mode(j.at("mode").get<std::string>());
    if (j.contains("vs"))
        profile.mode.versus = j.at("vs").get<std::string>();
    profile.inventory = std::make_shared<const PhonemeInventory>(
        j.at("inventory").get<std::vector<std::string>>());
    profile.counts.assign(profile.inventory->size(), 0);
    for (const auto& [symbol, count] : j.at("counts").items()) {
        auto idx = profile.inventory->index_of(symbol);
        if (!idx)
            throw std::invalid_argument("profile_from_json: count for unknown phoneme " + symbol);
        profile.counts[*idx] = count.get<std::int64_t>();
    }
    profile.total = j.at("total").get<std::int64_t>();
    profile.token_count = j.at("token_count").get<std::int64_t>();
    if (j.contains("in_lexicon_tokens")) {
        profile.in_lexicon_tokens = j.at("in_lexicon_tokens").get<std::int64_t>();
    } else {
        profile.in_lexicon_tokens =
            std::llround(j.at("coverage").get<double>() * profile.token_count);
    }
    if (j.contains("word_types"))
        profile.word_types = j.at("word_types").get<std::set<std::string>>();
    if (j.contains("oov"))
        profile.oov = j.at("oov").get<std::set<std::string>>();
    return profile;
}

}  // namespace phonostat::corpus
