#ifndef CORPUSCOPE_TOKENIZER_HPP
#define CORPUSCOPE_TOKENIZER_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "corpuscope/corpus.hpp"

namespace corpuscope {

struct TokenizedPost {
    std::string post_id;
    std::vector<std::string> tokens;
    std::size_t sentence_count = 0;
};

// Replaces every non-letter character by a space, lowercases, and splits on
// whitespace runs. "Letter" means Unicode general category L*; lowercasing is
// the simple one-to-one case mapping. Invalid UTF-8 bytes act as separators.
std::vector<std::string> tokenize_text(std::string_view text);

// Number of maximal segments separated by runs of '.', '!', '?' in the raw
// text. A trailing empty segment is not counted; non-empty text without a
// terminator counts as one sentence; empty text has zero.
std::size_t count_sentences(std::string_view text);

std::vector<TokenizedPost> tokenize_corpus(const Corpus& corpus);

// Token-level character predicates, shared with stop-word and lexicon
// normalization.
bool is_letter_codepoint(char32_t cp);
char32_t lowercase_codepoint(char32_t cp);

}  // namespace corpuscope

#endif
