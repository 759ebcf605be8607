#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace phonostat::corpus {

struct TokenizeResult {
    std::vector<std::string> tokens;
    std::size_t invalid_bytes = 0;  // malformed UTF-8 replaced and counted
};

// Splits UTF-8 text into case-folded word tokens: a token is a maximal run of
// letters plus internal apostrophes; digits, hyphens and all other
// punctuation separate tokens; leading/trailing apostrophes are stripped.
TokenizeResult tokenize(std::string_view text);

// Case-folds a single word with the tokenizer's folding rules (ASCII and
// Latin-1 lowercasing, typographic apostrophe normalized to '). Used for
// lexicon keys so lookups agree with token output.
std::string fold_word(std::string_view word);

}  // namespace phonostat::corpus
