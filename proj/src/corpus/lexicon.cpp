#include "phonostat/corpus/lexicon.hpp"

#include <algorithm>
#include <cctype>

#include "phonostat/corpus/tokenize.hpp"

namespace phonostat::corpus {

PhonemeInventory::PhonemeInventory(std::vector<std::string> symbols)
    : symbols_(std::move(symbols)) {
    if (symbols_.size() < 2)
        throw std::invalid_argument("PhonemeInventory: needs at least 2 symbols");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i].empty())
            throw std::invalid_argument("PhonemeInventory: empty symbol");
        if (!index_.emplace(symbols_[i], i).second)
            throw std::invalid_argument("PhonemeInventory: duplicate symbol " + symbols_[i]);
    }
}

std::optional<std::size_t> PhonemeInventory::index_of(std::string_view symbol) const {
    auto it = index_.find(std::string(symbol));
    return it == index_.end() ? std::nullopt : std::optional<std::size_t>(it->second);
}

Lexicon::Lexicon(std::shared_ptr<const PhonemeInventory> inventory,
                 std::unordered_map<std::string, std::vector<std::uint16_t>> entries)
    : inventory_(std::move(inventory)), entries_(std::move(entries)) {
    if (!inventory_)
        throw std::invalid_argument("Lexicon: null inventory");
}

const std::vector<std::uint16_t>* Lexicon::find(const std::string& folded_word) const {
    auto it = entries_.find(folded_word);
    return it == entries_.end() ? nullptr : &it->second;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> parts;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t')
            ++i;
        if (i > start)
            parts.push_back(s.substr(start, i - start));
    }
    return parts;
}

// CMU-style alternate pronunciations are written WORD(1), WORD(2), ...;
// they collapse onto the base word and fall under the first-wins rule.
std::string_view strip_variant_suffix(std::string_view word) {
    if (word.size() >= 3 && word.back() == ')') {
        std::size_t open = word.rfind('(');
        if (open != std::string_view::npos && open + 1 < word.size() - 1) {
            bool digits = true;
            for (std::size_t i = open + 1; i + 1 < word.size(); ++i)
                digits = digits && std::isdigit(static_cast<unsigned char>(word[i]));
            if (digits)
                return word.substr(0, open);
        }
    }
    return word;
}

std::string normalize_symbol(std::string_view raw, bool strip_stress, int line) {
    std::string_view s = raw;
    if (strip_stress) {
        while (!s.empty() && std::isdigit(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
    }
    if (s.empty())
        throw LexiconParseError(line, "phoneme symbol '" + std::string(raw) +
                                          "' is empty after stress stripping");
    return std::string(s);
}

}  // namespace

LexiconLoadResult load_lexicon(std::istream& source, const std::string& format,
                               const LexiconOptions& options) {
    if (format != "dict")
        throw std::invalid_argument("load_lexicon: unknown format '" + format + "'");

    std::vector<std::string> inventory_order;
    std::unordered_map<std::string, std::uint16_t> symbol_index;
    auto intern = [&](const std::string& symbol) -> std::uint16_t {
        auto it = symbol_index.find(symbol);
        if (it != symbol_index.end())
            return it->second;
        if (inventory_order.size() >= 0xFFFF)
            throw std::runtime_error("load_lexicon: more than 65534 distinct phonemes");
        auto idx = static_cast<std::uint16_t>(inventory_order.size());
        inventory_order.push_back(symbol);
        symbol_index.emplace(symbol, idx);
        return idx;
    };

    std::unordered_map<std::string, std::vector<std::uint16_t>> entries;
    std::vector<std::string> warnings;

    std::string raw_line;
    int line_no = 0;
    while (std::getline(source, raw_line)) {
        ++line_no;
        std::string_view line = trim(raw_line);
        if (line.empty())
            continue;
        if (line.starts_with(";;;")) {
            std::string_view rest = trim(line.substr(3));
            if (rest.starts_with("INVENTORY:")) {
                for (std::string_view sym : split_ws(rest.substr(10)))
                    intern(normalize_symbol(sym, options.strip_stress_digits, line_no));
            }
            continue;
        }
        std::vector<std::string_view> parts = split_ws(line);
        if (parts.size() < 2)
            throw LexiconParseError(line_no, "expected `word<TAB>PH1 PH2 ...`");
        std::string word = fold_word(strip_variant_suffix(parts[0]));
        if (word.empty())
            throw LexiconParseError(line_no, "empty word");
        std::vector<std::uint16_t> phones;
        phones.reserve(parts.size() - 1);
        for (std::size_t i = 1; i < parts.size(); ++i)
            phones.push_back(intern(normalize_symbol(parts[i], options.strip_stress_digits, line_no)));
        auto [it, inserted] = entries.emplace(std::move(word), std::move(phones));
        if (!inserted)
            warnings.push_back("line " + std::to_string(line_no) + ": duplicate entry for '" +
                               it->first + "', first pronunciation kept");
    }

    if (entries.empty())
        throw LexiconParseError(line_no, "empty lexicon");

    auto inventory = std::make_shared<const PhonemeInventory>(std::move(inventory_order));
    return LexiconLoadResult{Lexicon(std::move(inventory), std::move(entries)), std::move(warnings)};
}

}  // namespace phonostat::corpus
