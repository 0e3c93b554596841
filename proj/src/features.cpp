#include "corpuscope/features.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <queue>
#include <unordered_map>

#include "corpuscope/error.hpp"
#include "corpuscope/tokenizer.hpp"

namespace corpuscope {

namespace {

std::vector<std::string> split_tokens(std::string_view term) {
    std::vector<std::string> tokens;
    std::size_t pos = 0;
    while (pos < term.size()) {
        const std::size_t space = term.find(' ', pos);
        if (space == std::string_view::npos) {
            tokens.emplace_back(term.substr(pos));
            break;
        }
        tokens.emplace_back(term.substr(pos, space - pos));
        pos = space + 1;
    }
    return tokens;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) out.push_back(' ');
        out += tokens[i];
    }
    return out;
}

}  // namespace

void FeatureSpace::add(std::string term) {
    if (index.count(term)) return;
    index.emplace(term, static_cast<std::uint32_t>(terms.size()));
    terms.push_back(std::move(term));
}

FeatureSpace FeatureSpace::from_terms(std::vector<std::string> in) {
    FeatureSpace space;
    for (std::string& term : in) space.add(std::move(term));
    return space;
}

FeatureSpace build_bow_space(std::span<const Corpus> corpora, std::uint64_t min_count) {
    std::unordered_map<std::string, std::uint64_t> counts;
    bool any_posts = false;
    for (const Corpus& corpus : corpora) {
        for (const Post& post : corpus.posts) {
            any_posts = true;
            for (std::string& token : tokenize_text(post.text)) ++counts[std::move(token)];
        }
    }
    if (!any_posts) fail(ErrorCode::invalid_argument, "empty combined corpus");

    std::vector<std::pair<std::string, std::uint64_t>> kept;
    for (auto& [token, count] : counts) {
        if (count >= min_count) kept.emplace_back(token, count);
    }
    std::sort(kept.begin(), kept.end(), [](const auto& lhs, const auto& rhs) {
        if (lhs.second != rhs.second) return lhs.second > rhs.second;
        return lhs.first < rhs.first;
    });

    FeatureSpace space;
    for (auto& [token, count] : kept) space.add(std::move(token));
    return space;
}

Lexicon load_lexicon(const std::filesystem::path& path, std::string name) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::io, "cannot open " + path.string());
    Lexicon lexicon;
    lexicon.name = std::move(name);
    std::string line;
    while (std::getline(in, line)) {
        // optional TAB + polarity field, read and ignored
        const std::size_t tab = line.find('\t');
        if (tab != std::string::npos) line.resize(tab);
        const auto tokens = tokenize_text(line);
        if (tokens.empty()) continue;
        lexicon.entries.insert(join_tokens(tokens));
    }
    return lexicon;
}

Lexicon merge_lexicons(std::span<const Lexicon> lexicons) {
    if (lexicons.empty()) fail(ErrorCode::invalid_argument, "no lexicons to merge");
    Lexicon merged;
    merged.name = "merged";
    for (const Lexicon& lexicon : lexicons) {
        merged.entries.insert(lexicon.entries.begin(), lexicon.entries.end());
    }
    return merged;
}

FeatureSpace build_lexicon_space(const Lexicon& merged, std::span<const Corpus> corpora) {
    if (merged.entries.empty()) fail(ErrorCode::invalid_argument, "empty merged lexicon");

    // token -> (post index, position) over all corpora
    std::vector<std::vector<std::string>> post_tokens;
    std::unordered_map<std::string, std::vector<std::pair<std::uint32_t, std::uint32_t>>> positions;
    for (const Corpus& corpus : corpora) {
        for (const Post& post : corpus.posts) {
            const auto post_idx = static_cast<std::uint32_t>(post_tokens.size());
            post_tokens.push_back(tokenize_text(post.text));
            const auto& tokens = post_tokens.back();
            for (std::uint32_t i = 0; i < tokens.size(); ++i) {
                positions[tokens[i]].emplace_back(post_idx, i);
            }
        }
    }

    FeatureSpace space;
    for (const std::string& entry : merged.entries) {  // std::set: alphabetical
        const auto entry_tokens = split_tokens(entry);
        const auto it = positions.find(entry_tokens.front());
        if (it == positions.end()) continue;
        for (const auto& [post_idx, start] : it->second) {
            const auto& tokens = post_tokens[post_idx];
            if (start + entry_tokens.size() > tokens.size()) continue;
            bool match = true;
            for (std::size_t k = 1; k < entry_tokens.size(); ++k) {
                if (tokens[start + k] != entry_tokens[k]) {
                    match = false;
                    break;
                }
            }
            if (match) {
                space.add(entry);
                break;
            }
        }
    }
    return space;
}

FeatureSpace combine_spaces(const FeatureSpace& bow, const FeatureSpace& lexicon) {
    FeatureSpace space;
    for (const std::string& term : bow.terms) space.add(term);
    for (const std::string& term : lexicon.terms) space.add(term);
    return space;
}

namespace {

// Phrase-aware matcher: longest phrase starting at each position wins;
// matched positions are consumed.
struct FeatureMatcher {
    explicit FeatureMatcher(const FeatureSpace& space) : space(space) {
        for (std::uint32_t id = 0; id < space.terms.size(); ++id) {
            auto tokens = split_tokens(space.terms[id]);
            if (tokens.size() == 1) {
                singles.emplace(space.terms[id], id);
            } else {
                phrases_by_first[tokens.front()].push_back({id, std::move(tokens)});
            }
        }
        for (auto& [first, list] : phrases_by_first) {
            std::sort(list.begin(), list.end(), [](const auto& lhs, const auto& rhs) {
                return lhs.tokens.size() > rhs.tokens.size();
            });
        }
    }

    SparseVector match(std::span<const std::string> tokens) const {
        std::unordered_map<std::uint32_t, std::uint32_t> counts;
        std::size_t i = 0;
        while (i < tokens.size()) {
            std::size_t advance = 1;
            bool phrase_matched = false;
            if (const auto it = phrases_by_first.find(tokens[i]); it != phrases_by_first.end()) {
                for (const auto& candidate : it->second) {
                    const auto len = candidate.tokens.size();
                    if (i + len > tokens.size()) continue;
                    bool match = true;
                    for (std::size_t k = 1; k < len; ++k) {
                        if (tokens[i + k] != candidate.tokens[k]) {
                            match = false;
                            break;
                        }
                    }
                    if (match) {
                        ++counts[candidate.id];
                        advance = len;
                        phrase_matched = true;
                        break;
                    }
                }
            }
            if (!phrase_matched) {
                if (const auto it = singles.find(tokens[i]); it != singles.end()) {
                    ++counts[it->second];
                }
            }
            i += advance;
        }

        SparseVector vec;
        vec.pairs.assign(counts.begin(), counts.end());
        std::sort(vec.pairs.begin(), vec.pairs.end());
        return vec;
    }

    struct Phrase {
        std::uint32_t id;
        std::vector<std::string> tokens;
    };

    const FeatureSpace& space;
    std::unordered_map<std::string, std::uint32_t> singles;
    std::unordered_map<std::string, std::vector<Phrase>> phrases_by_first;
};

}  // namespace

SparseVector vectorize_tokens(std::span<const std::string> tokens, const FeatureSpace& space) {
    return FeatureMatcher(space).match(tokens);
}

SparseVector vectorize(const Post& post, const FeatureSpace& space) {
    const auto tokens = tokenize_text(post.text);
    return vectorize_tokens(tokens, space);
}

Dataset build_dataset(const Corpus& corpus, const FeatureSpace& space) {
    Dataset dataset;
    dataset.space = space;
    const FeatureMatcher matcher(dataset.space);
    dataset.rows.reserve(corpus.posts.size());
    for (const Post& post : corpus.posts) {
        if (!post.label) {
            fail(ErrorCode::data, "post \"" + post.id + "\" has no label; filter the corpus first");
        }
        const auto tokens = tokenize_text(post.text);
        dataset.rows.push_back({matcher.match(tokens), *post.label, post.id});
    }
    return dataset;
}

// ---------------------------------------------------------------------------
// Correlation-based feature subset selection.

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }

void set_bit(Bits& bits, std::size_t i) { bits[i >> 6] |= std::uint64_t{1} << (i & 63); }

std::uint64_t popcount_and(const Bits& a, const Bits& b) {
    std::uint64_t total = 0;
    for (std::size_t w = 0; w < a.size(); ++w) total += std::popcount(a[w] & b[w]);
    return total;
}

double entropy_term(std::uint64_t count, double n) {
    if (count == 0) return 0.0;
    const double p = static_cast<double>(count) / n;
    return -p * std::log(p);
}

// Symmetric uncertainty between binary feature presence vectors.
double su_feature_feature(const Bits& a, std::uint64_t ca, const Bits& b, std::uint64_t cb,
                          std::uint64_t n) {
    const double dn = static_cast<double>(n);
    const std::uint64_t n11 = popcount_and(a, b);
    const std::uint64_t n10 = ca - n11;
    const std::uint64_t n01 = cb - n11;
    const std::uint64_t n00 = n - ca - n01;
    const double hx = entropy_term(ca, dn) + entropy_term(n - ca, dn);
    const double hy = entropy_term(cb, dn) + entropy_term(n - cb, dn);
    const double hxy = entropy_term(n11, dn) + entropy_term(n10, dn) + entropy_term(n01, dn) +
                       entropy_term(n00, dn);
    const double denom = hx + hy;
    if (denom <= 0.0) return 0.0;
    return 2.0 * (hx + hy - hxy) / denom;
}

double su_feature_class(const Bits& feat, std::uint64_t cf, std::span<const Bits> class_bits,
                        std::span<const std::uint64_t> class_counts, std::uint64_t n) {
    const double dn = static_cast<double>(n);
    const double hx = entropy_term(cf, dn) + entropy_term(n - cf, dn);
    double hy = 0.0;
    double hxy = 0.0;
    for (std::size_t c = 0; c < class_bits.size(); ++c) {
        hy += entropy_term(class_counts[c], dn);
        const std::uint64_t present = popcount_and(feat, class_bits[c]);
        hxy += entropy_term(present, dn) + entropy_term(class_counts[c] - present, dn);
    }
    const double denom = hx + hy;
    if (denom <= 0.0) return 0.0;
    return 2.0 * (hx + hy - hxy) / denom;
}

struct SubsetKey {
    std::vector<std::uint32_t> features;  // sorted

    bool operator==(const SubsetKey&) const = default;
};

struct SubsetKeyHash {
    std::size_t operator()(const SubsetKey& key) const {
        std::size_t h = 1469598103934665603ull;
        for (const std::uint32_t f : key.features) {
            h ^= f;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

FeatureSpace cfs_select(const Dataset& dataset) {
    const std::size_t n_features = dataset.space.size();
    const std::size_t n_rows = dataset.rows.size();
    if (n_features < 2) fail(ErrorCode::invalid_argument, "feature selection needs >= 2 features");
    if (n_rows == 0) fail(ErrorCode::invalid_argument, "empty dataset");

    // presence bitsets and class partition
    std::vector<Bits> feature_bits(n_features, make_bits(n_rows));
    std::vector<std::uint64_t> feature_counts(n_features, 0);
    std::vector<Bits> class_bits(kLabelCount, make_bits(n_rows));
    std::vector<std::uint64_t> class_counts(kLabelCount, 0);
    for (std::size_t r = 0; r < n_rows; ++r) {
        const auto& row = dataset.rows[r];
        for (const auto& [id, count] : row.vec.pairs) {
            set_bit(feature_bits[id], r);
            ++feature_counts[id];
        }
        const auto c = static_cast<std::size_t>(row.label);
        set_bit(class_bits[c], r);
        ++class_counts[c];
    }
    const auto distinct_classes = static_cast<std::size_t>(
        std::count_if(class_counts.begin(), class_counts.end(), [](std::uint64_t c) { return c > 0; }));
    if (distinct_classes < 2) fail(ErrorCode::invalid_argument, "degenerate dataset: single class");

    std::vector<double> su_class(n_features);
    for (std::size_t f = 0; f < n_features; ++f) {
        su_class[f] = su_feature_class(feature_bits[f], feature_counts[f], class_bits, class_counts,
                                       n_rows);
    }

    // pairwise SU, computed lazily
    std::unordered_map<std::uint64_t, double> su_pair_cache;
    const auto su_pair = [&](std::uint32_t i, std::uint32_t j) {
        if (i > j) std::swap(i, j);
        const std::uint64_t key = (static_cast<std::uint64_t>(i) << 32) | j;
        if (const auto it = su_pair_cache.find(key); it != su_pair_cache.end()) return it->second;
        const double su = su_feature_feature(feature_bits[i], feature_counts[i], feature_bits[j],
                                             feature_counts[j], n_rows);
        su_pair_cache.emplace(key, su);
        return su;
    };

    const auto merit = [&](const std::vector<std::uint32_t>& subset) {
        if (subset.empty()) return 0.0;
        double sum_cf = 0.0;
        double sum_ff = 0.0;
        for (std::size_t i = 0; i < subset.size(); ++i) {
            sum_cf += su_class[subset[i]];
            for (std::size_t j = i + 1; j < subset.size(); ++j) {
                sum_ff += su_pair(subset[i], subset[j]);
            }
        }
        const double k = static_cast<double>(subset.size());
        return sum_cf / std::sqrt(k + 2.0 * sum_ff);
    };

    // best-first forward search, stop after 5 expansions without improvement
    constexpr int kStaleLimit = 5;

    struct OpenNode {
        double merit;
        std::size_t seq;  // FIFO among equal merits
        std::vector<std::uint32_t> features;
    };
    const auto worse = [](const OpenNode& lhs, const OpenNode& rhs) {
        if (lhs.merit != rhs.merit) return lhs.merit < rhs.merit;
        return lhs.seq > rhs.seq;
    };
    std::priority_queue<OpenNode, std::vector<OpenNode>, decltype(worse)> open(worse);
    std::unordered_map<SubsetKey, bool, SubsetKeyHash> visited;

    std::vector<std::uint32_t> best_subset;
    double best_merit = 0.0;
    std::size_t seq = 0;

    open.push({0.0, seq++, {}});
    visited.emplace(SubsetKey{{}}, true);

    int stale = 0;
    while (!open.empty() && stale < kStaleLimit) {
        const OpenNode node = open.top();
        open.pop();

        bool improved = false;
        for (std::uint32_t f = 0; f < n_features; ++f) {
            if (std::binary_search(node.features.begin(), node.features.end(), f)) continue;
            std::vector<std::uint32_t> child = node.features;
            child.insert(std::lower_bound(child.begin(), child.end(), f), f);
            if (!visited.emplace(SubsetKey{child}, true).second) continue;
            const double m = merit(child);
            if (m > best_merit) {
                best_merit = m;
                best_subset = child;
                improved = true;
            }
            open.push({m, seq++, std::move(child)});
        }
        stale = improved ? 0 : stale + 1;
    }

    std::vector<std::string> terms;
    terms.reserve(best_subset.size());
    for (const std::uint32_t f : best_subset) terms.push_back(dataset.space.terms[f]);
    return FeatureSpace::from_terms(std::move(terms));
}

FeatureSetKind parse_feature_set(std::string_view text) {
    if (text == "bow") return FeatureSetKind::bow;
    if (text == "lexicon") return FeatureSetKind::lexicon;
    if (text == "selected") return FeatureSetKind::selected;
    fail(ErrorCode::invalid_argument, "unknown feature set \"" + std::string(text) + "\"");
}

std::string_view feature_set_name(FeatureSetKind kind) {
    switch (kind) {
        case FeatureSetKind::bow: return "bow";
        case FeatureSetKind::lexicon: return "lexicon";
        case FeatureSetKind::selected: return "selected";
    }
    return "unknown";
}

FeatureSpace build_feature_space(const FeatureConfig& config, std::span<const Corpus> corpora) {
    const auto lexicon_space = [&] {
        if (config.lexicons.empty()) {
            fail(ErrorCode::invalid_argument,
                 "the lexicon feature set needs at least one lexicon file");
        }
        const Lexicon merged = merge_lexicons(config.lexicons);
        return build_lexicon_space(merged, corpora);
    };

    switch (config.kind) {
        case FeatureSetKind::bow:
            return build_bow_space(corpora, config.bow_min_count);
        case FeatureSetKind::lexicon:
            return lexicon_space();
        case FeatureSetKind::selected: {
            FeatureSpace combined = build_bow_space(corpora, config.bow_min_count);
            if (!config.lexicons.empty()) {
                combined = combine_spaces(combined, lexicon_space());
            }
            // selection is supervised: one dataset over all supplied corpora
            Dataset dataset;
            dataset.space = std::move(combined);
            for (const Corpus& corpus : corpora) {
                Dataset part = build_dataset(corpus, dataset.space);
                for (auto& row : part.rows) dataset.rows.push_back(std::move(row));
            }
            return cfs_select(dataset);
        }
    }
    fail(ErrorCode::invalid_argument, "unknown feature set kind");
}

}  // namespace corpuscope
