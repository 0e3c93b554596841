#include "corpuscope/tokenizer.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>

namespace corpuscope {

namespace {

struct Utf32Range {
    std::uint32_t first;
    std::uint32_t last;
};

struct Utf32Pair {
    std::uint32_t from;
    std::uint32_t to;
};

#include "unicode_tables.inc"

// Decodes one UTF-8 sequence starting at text[pos]. Malformed sequences
// decode as U+FFFD with a one-byte advance so the scan always progresses.
char32_t decode_utf8(std::string_view text, std::size_t& pos) {
    const auto byte = [&](std::size_t i) { return static_cast<std::uint8_t>(text[i]); };
    const std::uint8_t b0 = byte(pos);
    if (b0 < 0x80) {
        ++pos;
        return b0;
    }
    int len = 0;
    char32_t cp = 0;
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
        ++pos;
        return 0xFFFD;
    }
    if (pos + static_cast<std::size_t>(len) > text.size()) {
        ++pos;
        return 0xFFFD;
    }
    for (int i = 1; i < len; ++i) {
        const std::uint8_t b = byte(pos + static_cast<std::size_t>(i));
        if ((b & 0xC0) != 0x80) {
            ++pos;
            return 0xFFFD;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    // overlong encodings and surrogates are invalid
    static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
        ++pos;
        return 0xFFFD;
    }
    pos += static_cast<std::size_t>(len);
    return cp;
}

void encode_utf8(char32_t cp, std::string& out) {
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

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

}  // namespace

bool is_letter_codepoint(char32_t cp) {
    const auto it = std::upper_bound(
        std::begin(kLetterRanges), std::end(kLetterRanges), static_cast<std::uint32_t>(cp),
        [](std::uint32_t value, const Utf32Range& range) { return value < range.first; });
    if (it == std::begin(kLetterRanges)) return false;
    return cp <= std::prev(it)->last;
}

char32_t lowercase_codepoint(char32_t cp) {
    const auto it = std::lower_bound(
        std::begin(kLowerPairs), std::end(kLowerPairs), static_cast<std::uint32_t>(cp),
        [](const Utf32Pair& pair, std::uint32_t value) { return pair.from < value; });
    if (it != std::end(kLowerPairs) && it->from == cp) return it->to;
    return cp;
}

std::vector<std::string> tokenize_text(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char32_t cp = decode_utf8(text, pos);
        if (is_letter_codepoint(cp)) {
            encode_utf8(lowercase_codepoint(cp), current);
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

std::size_t count_sentences(std::string_view text) {
    if (text.empty()) return 0;
    std::size_t segments = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        // one maximal segment, possibly empty, up to the next terminator run
        std::size_t start = i;
        while (i < text.size() && !is_terminator(text[i])) ++i;
        const bool at_end = (i == text.size());
        if (!(at_end && i == start)) ++segments;  // trailing empty segment dropped
        while (i < text.size() && is_terminator(text[i])) ++i;
        if (i == text.size() && !at_end) {
            // text ended on a terminator run: the segment after it is empty
            break;
        }
    }
    return segments;
}

std::vector<TokenizedPost> tokenize_corpus(const Corpus& corpus) {
    std::vector<TokenizedPost> out;
    out.reserve(corpus.posts.size());
    for (const Post& post : corpus.posts) {
        out.push_back({post.id, tokenize_text(post.text), count_sentences(post.text)});
    }
    return out;
}

}  // namespace corpuscope
