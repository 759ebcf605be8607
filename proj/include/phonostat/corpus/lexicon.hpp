#pragma once

#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace phonostat::corpus {

// Ordered list of distinct phoneme symbols; indices are stable and shared by
// profiles and frequency vectors built from the owning lexicon.
class PhonemeInventory {
public:
    explicit PhonemeInventory(std::vector<std::string> symbols);

    const std::vector<std::string>& symbols() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }
    std::optional<std::size_t> index_of(std::string_view symbol) const;

    bool operator==(const PhonemeInventory& other) const { return symbols_ == other.symbols_; }

private:
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, std::size_t> index_;
};

class LexiconParseError : public std::runtime_error {
public:
    LexiconParseError(int line, const std::string& what)
        : std::runtime_error("lexicon line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Immutable word -> pronunciation map over a fixed inventory; shareable
// across threads after construction.
class Lexicon {
public:
    Lexicon(std::shared_ptr<const PhonemeInventory> inventory,
            std::unordered_map<std::string, std::vector<std::uint16_t>> entries);

    const PhonemeInventory& inventory() const { return *inventory_; }
    std::shared_ptr<const PhonemeInventory> inventory_ptr() const { return inventory_; }
    // phoneme indices for a case-folded word, or nullptr when absent
    const std::vector<std::uint16_t>* find(const std::string& folded_word) const;
    std::size_t size() const { return entries_.size(); }

private:
    std::shared_ptr<const PhonemeInventory> inventory_;
    std::unordered_map<std::string, std::vector<std::uint16_t>> entries_;
};

struct LexiconOptions {
    // "AH0" -> "AH"; stress digits are never interpreted either way
    bool strip_stress_digits = true;
};

struct LexiconLoadResult {
    Lexicon lexicon;
    std::vector<std::string> warnings;  // one entry per duplicate word kept-first
};

// Reads `word<TAB>PH1 PH2 ...` lines (any whitespace split also accepted,
// which covers CMU-style double-space files). Lines starting with ";;;" are
// comments; an optional `;;; INVENTORY: PH1 PH2 ...` header pre-declares
// symbols. The inventory is the declared symbols followed by the remaining
// ones in order of first appearance. format selects the parser; "dict" is
// the only format implemented.
LexiconLoadResult load_lexicon(std::istream& source, const std::string& format = "dict",
                               const LexiconOptions& options = {});

}  // namespace phonostat::corpus
