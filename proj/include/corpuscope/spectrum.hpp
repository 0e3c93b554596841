#ifndef CORPUSCOPE_SPECTRUM_HPP
#define CORPUSCOPE_SPECTRUM_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "corpuscope/corpus.hpp"
#include "corpuscope/tokenizer.hpp"

namespace corpuscope {

// Word-frequency spectrum: token count N, per-type occurrence counts, and the
// sparse V(m,N) map (types_by_count[m] = number of types occurring m times).
struct FrequencySpectrum {
    std::uint64_t tokens = 0;  // N
    std::map<std::string, std::uint64_t, std::less<>> freq;
    std::map<std::uint64_t, std::uint64_t> types_by_count;  // V(m,N), sparse

    std::uint64_t types() const { return freq.size(); }  // V
};

// Table 2 shaped descriptive statistics.
struct CorpusDescriptives {
    std::uint64_t words = 0;
    std::uint64_t types = 0;
    std::uint64_t sentences = 0;
    std::uint64_t posts = 0;
    double words_per_post = 0.0;
    double sentences_per_post = 0.0;
    double words_per_sentence = 0.0;
};

// Figure 1: per-post token counts, sorted descending.
struct PostLengthSeries {
    std::vector<std::size_t> lengths;
};

FrequencySpectrum build_spectrum(std::span<const TokenizedPost> tokenized);

CorpusDescriptives corpus_descriptives(const Corpus& corpus);
CorpusDescriptives descriptives_from_counts(std::uint64_t words, std::uint64_t types,
                                            std::uint64_t posts, std::uint64_t sentences);

PostLengthSeries post_length_series(std::span<const TokenizedPost> tokenized);

}  // namespace corpuscope

#endif
