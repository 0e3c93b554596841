#ifndef CORPUSCOPE_CORPUS_HPP
#define CORPUSCOPE_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace corpuscope {

enum class SentimentLabel : std::uint8_t {
    confusion = 0,
    encouragement = 1,
    gratitude = 2,
    facts = 3,
};

inline constexpr std::size_t kLabelCount = 4;

SentimentLabel parse_label(std::string_view text);
std::string_view label_name(SentimentLabel label);
const std::vector<SentimentLabel>& all_labels();

struct Post {
    std::string id;
    std::string author_id;
    std::string topic_id;
    std::string text;
    std::optional<SentimentLabel> label;
    std::optional<std::vector<SentimentLabel>> annotations;
};

struct Corpus {
    std::string name;
    std::vector<Post> posts;
    // "path#fnv1a" of the source file, or a derivation tag for filtered
    // corpora; embedded in report headers.
    std::string source;
};

enum class AmbiguityRule {
    unanimous,
    strict_majority,
};

AmbiguityRule parse_ambiguity_rule(std::string_view text);
std::string_view ambiguity_rule_name(AmbiguityRule rule);

struct CorpusSummary {
    std::size_t authors = 0;
    std::size_t topics = 0;
    std::size_t posts = 0;
    double posts_per_topic = 0.0;
    double posts_per_author = 0.0;
    std::size_t ambiguous = 0;
    std::size_t unambiguous = 0;
};

// Reads a line-delimited JSON corpus: one post object per line, UTF-8.
// Rejects empty files, duplicate ids, unknown labels; parse errors carry the
// offending line number.
Corpus load_corpus(const std::filesystem::path& path, std::string name);

// Keeps posts whose annotations satisfy the rule, with the agreed (or
// majority) label filled in. Posts without annotations but with a label pass
// unchanged; a post with neither is an error.
Corpus filter_unambiguous(const Corpus& corpus, AmbiguityRule rule = AmbiguityRule::unanimous);

CorpusSummary corpus_summary(const Corpus& corpus, AmbiguityRule rule = AmbiguityRule::unanimous);

// |authors(a) ∩ authors(b)|
std::size_t author_overlap(const Corpus& a, const Corpus& b);

// FNV-1a 64 of a file's bytes, as fixed-width hex. Used for report headers.
std::string file_digest(const std::filesystem::path& path);

}  // namespace corpuscope

#endif
