#include "phonostat/corpus/tokenize.hpp"

namespace phonostat::corpus {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

// Decodes one UTF-8 sequence starting at i, advancing i past it. Malformed
// bytes decode to U+FFFD one byte at a time.
char32_t decode_utf8(std::string_view s, std::size_t& i, bool& bad) {
    bad = false;
    unsigned char b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int len;
    char32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++i;
        bad = true;
        return kReplacement;
    }
    if (i + len > s.size()) {
        ++i;
        bad = true;
        return kReplacement;
    }
    for (int k = 1; k < len; ++k) {
        unsigned char bk = static_cast<unsigned char>(s[i + k]);
        if ((bk & 0xC0) != 0x80) {
            ++i;
            bad = true;
            return kReplacement;
        }
        cp = (cp << 6) | (bk & 0x3F);
    }
    // reject overlong forms and surrogates
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
        (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
        ++i;
        bad = true;
        return kReplacement;
    }
    i += len;
    return cp;
}

bool is_letter(char32_t cp) {
    if ((cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z'))
        return true;
    // Latin-1 letters, skipping the multiplication/division signs
    if (cp >= 0xC0 && cp <= 0xFF)
        return cp != 0xD7 && cp != 0xF7;
    // Latin Extended-A and Extended-B
    return cp >= 0x0100 && cp <= 0x024F;
}

bool is_apostrophe(char32_t cp) {
    return cp == '\'' || cp == 0x2019;  // typographic right quote doubles as apostrophe
}

char32_t fold(char32_t cp) {
    if (cp >= 'A' && cp <= 'Z')
        return cp + 0x20;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7)
        return cp + 0x20;
    if (cp == 0x2019)
        return '\'';
    return cp;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

}  // namespace

TokenizeResult tokenize(std::string_view text) {
    TokenizeResult result;
    std::string current;
    int pending_apostrophes = 0;

    auto flush = [&] {
        if (!current.empty())
            result.tokens.push_back(std::move(current));
        current.clear();
        pending_apostrophes = 0;
    };

    std::size_t i = 0;
    while (i < text.size()) {
        bool bad = false;
        char32_t cp = decode_utf8(text, i, bad);
        if (bad)
            ++result.invalid_bytes;
        if (is_letter(cp)) {
            // apostrophes are kept only between letters; a run of them is
            // flushed once the next letter arrives
            for (; pending_apostrophes > 0; --pending_apostrophes)
                current.push_back('\'');
            append_utf8(current, fold(cp));
        } else if (is_apostrophe(cp) && !current.empty()) {
            ++pending_apostrophes;
        } else {
            flush();
        }
    }
    flush();
    return result;
}

std::string fold_word(std::string_view word) {
    std::string out;
    out.reserve(word.size());
    std::size_t i = 0;
    while (i < word.size()) {
        bool bad = false;
        char32_t cp = decode_utf8(word, i, bad);
        append_utf8(out, fold(cp));
    }
    return out;
}

}  // namespace phonostat::corpus
