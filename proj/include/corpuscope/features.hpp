#ifndef CORPUSCOPE_FEATURES_HPP
#define CORPUSCOPE_FEATURES_HPP

#include <cstdint>
#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "corpuscope/corpus.hpp"

namespace corpuscope {

// Ordered feature terms; a term is a single token or a space-joined phrase.
struct FeatureSpace {
    std::vector<std::string> terms;
    std::unordered_map<std::string, std::uint32_t> index;

    std::size_t size() const { return terms.size(); }
    void add(std::string term);
    static FeatureSpace from_terms(std::vector<std::string> terms);
};

struct Lexicon {
    std::string name;
    std::set<std::string> entries;  // normalized, space-joined phrases allowed
};

struct SparseVector {
    // (feature id, count), ids strictly increasing, counts > 0
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
};

struct Dataset {
    FeatureSpace space;
    struct Row {
        SparseVector vec;
        SentimentLabel label;
        std::string post_id;
    };
    std::vector<Row> rows;
};

// Frequency dictionary over all posts of all supplied corpora; keeps types
// with total occurrence >= min_count, ordered by descending frequency then
// alphabetically.
FeatureSpace build_bow_space(std::span<const Corpus> corpora, std::uint64_t min_count = 2);

// One entry per line, optional TAB + polarity field (read and ignored).
// Entries are normalized by the tokenizer; multi-token lines become phrases.
Lexicon load_lexicon(const std::filesystem::path& path, std::string name);

Lexicon merge_lexicons(std::span<const Lexicon> lexicons);

// Keeps entries whose token sequence occurs contiguously in at least one
// tokenized post of the corpora. Resulting terms are sorted alphabetically.
FeatureSpace build_lexicon_space(const Lexicon& merged, std::span<const Corpus> corpora);

// BOW terms first, then lexicon-only terms; duplicates dropped.
FeatureSpace combine_spaces(const FeatureSpace& bow, const FeatureSpace& lexicon);

// Occurrence counts per feature. Phrases are matched first (longest match at
// each position, non-overlapping, left to right); matched positions are not
// recounted for their constituent tokens.
SparseVector vectorize(const Post& post, const FeatureSpace& space);
SparseVector vectorize_tokens(std::span<const std::string> tokens, const FeatureSpace& space);

// Rows for every post of the corpus; posts must carry labels.
Dataset build_dataset(const Corpus& corpus, const FeatureSpace& space);

// Correlation-based feature subset selection (symmetric-uncertainty merit,
// best-first forward search, stale limit 5). Returns the selected sub-space
// in original feature order.
FeatureSpace cfs_select(const Dataset& dataset);

enum class FeatureSetKind { bow, lexicon, selected };

FeatureSetKind parse_feature_set(std::string_view text);
std::string_view feature_set_name(FeatureSetKind kind);

struct FeatureConfig {
    FeatureSetKind kind = FeatureSetKind::bow;
    std::uint64_t bow_min_count = 2;
    std::vector<Lexicon> lexicons;  // required for the lexicon set
};

// bow: frequency dictionary over the supplied corpora; lexicon: merged
// lexicon entries present in the corpora; selected: CFS over the combined
// bow+lexicon space (labels required).
FeatureSpace build_feature_space(const FeatureConfig& config, std::span<const Corpus> corpora);

}  // namespace corpuscope

#endif
