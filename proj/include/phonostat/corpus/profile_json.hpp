#pragma once

#include <json.hpp>

#include "phonostat/corpus/profile.hpp"

namespace phonostat::corpus {

// Persisted profile object: {text_id, mode, inventory, counts, total,
// token_count, type_count, oov_count, coverage}; "vs" is added for
// exclusive-types profiles. include_word_sets additionally stores the word
// type and OOV sets, which the on-disk cache needs (exclusive-types profiles
// are recomputed from type sets) but the published schema omits.
nlohmann::ordered_json profile_to_json(const PhonemeProfile& profile,
                                       bool include_word_sets = false);

// Inverse of profile_to_json. Word sets are restored when present; otherwise
// word_types/oov stay empty and only the persisted counters are available.
PhonemeProfile profile_from_json(const nlohmann::ordered_json& j);

}  // namespace phonostat::corpus
