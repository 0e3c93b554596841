#include "corpuscope/spectrum.hpp"

#include <algorithm>
#include <functional>

#include "corpuscope/error.hpp"

namespace corpuscope {

FrequencySpectrum build_spectrum(std::span<const TokenizedPost> tokenized) {
    FrequencySpectrum spectrum;
    for (const TokenizedPost& post : tokenized) {
        for (const std::string& token : post.tokens) {
            ++spectrum.freq[token];
            ++spectrum.tokens;
        }
    }
    if (spectrum.tokens == 0) fail(ErrorCode::invalid_argument, "no tokens: all posts are empty");
    for (const auto& [token, count] : spectrum.freq) {
        ++spectrum.types_by_count[count];
    }
    return spectrum;
}

CorpusDescriptives descriptives_from_counts(std::uint64_t words, std::uint64_t types,
                                            std::uint64_t posts, std::uint64_t sentences) {
    if (posts == 0) fail(ErrorCode::invalid_argument, "empty corpus");
    if (sentences == 0) fail(ErrorCode::invalid_argument, "zero sentences");
    CorpusDescriptives d;
    d.words = words;
    d.types = types;
    d.sentences = sentences;
    d.posts = posts;
    d.words_per_post = static_cast<double>(words) / static_cast<double>(posts);
    d.sentences_per_post = static_cast<double>(sentences) / static_cast<double>(posts);
    d.words_per_sentence = static_cast<double>(words) / static_cast<double>(sentences);
    return d;
}

CorpusDescriptives corpus_descriptives(const Corpus& corpus) {
    if (corpus.posts.empty()) fail(ErrorCode::invalid_argument, "empty corpus");
    const auto tokenized = tokenize_corpus(corpus);
    const auto spectrum = build_spectrum(tokenized);
    std::uint64_t sentences = 0;
    for (const TokenizedPost& post : tokenized) sentences += post.sentence_count;
    return descriptives_from_counts(spectrum.tokens, spectrum.types(), corpus.posts.size(),
                                    sentences);
}

PostLengthSeries post_length_series(std::span<const TokenizedPost> tokenized) {
    if (tokenized.empty()) fail(ErrorCode::invalid_argument, "no posts");
    PostLengthSeries series;
    series.lengths.reserve(tokenized.size());
    for (const TokenizedPost& post : tokenized) series.lengths.push_back(post.tokens.size());
    std::sort(series.lengths.begin(), series.lengths.end(), std::greater<>());
    return series;
}

}  // namespace corpuscope
