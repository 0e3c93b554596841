#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <set>

#include "corpuscope/error.hpp"
#include "corpuscope/features.hpp"
#include "corpuscope/tokenizer.hpp"
#include "test_util.hpp"

using namespace corpuscope;

namespace {

Corpus corpus_from_texts(const char* name, std::vector<std::string> texts,
                         std::vector<SentimentLabel> labels = {}) {
    Corpus corpus;
    corpus.name = name;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        Post post;
        post.id = std::string(name) + std::to_string(i);
        post.author_id = "u";
        post.topic_id = "t";
        post.text = std::move(texts[i]);
        if (!labels.empty()) post.label = labels[i];
        corpus.posts.push_back(std::move(post));
    }
    return corpus;
}

// --- independent CFS oracle -------------------------------------------------
// Recomputes symmetric uncertainty from scratch (dense contingency counting)
// and scans every subset in ascending bitmask order, keeping strict
// improvements only.

double oracle_entropy(const std::vector<int>& values, int cardinality) {
    std::vector<int> counts(cardinality, 0);
    for (const int v : values) ++counts[v];
    double h = 0.0;
    for (const int c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / static_cast<double>(values.size());
        h -= p * std::log(p);
    }
    return h;
}

double oracle_su(const std::vector<int>& xs, int cx, const std::vector<int>& ys, int cy) {
    const double hx = oracle_entropy(xs, cx);
    const double hy = oracle_entropy(ys, cy);
    std::vector<int> joint(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) joint[i] = xs[i] * cy + ys[i];
    const double hxy = oracle_entropy(joint, cx * cy);
    const double denom = hx + hy;
    if (denom <= 0.0) return 0.0;
    return 2.0 * (hx + hy - hxy) / denom;
}

std::vector<std::uint32_t> oracle_cfs(const Dataset& dataset) {
    const std::size_t n_features = dataset.space.size();
    const std::size_t n = dataset.rows.size();
    std::vector<std::vector<int>> presence(n_features, std::vector<int>(n, 0));
    std::vector<int> classes(n);
    for (std::size_t r = 0; r < n; ++r) {
        classes[r] = static_cast<int>(dataset.rows[r].label);
        for (const auto& [id, count] : dataset.rows[r].vec.pairs) presence[id][r] = 1;
    }

    std::vector<double> su_cf(n_features);
    for (std::size_t f = 0; f < n_features; ++f) {
        su_cf[f] = oracle_su(presence[f], 2, classes, 4);
    }
    std::vector<std::vector<double>> su_ff(n_features, std::vector<double>(n_features, 0.0));
    for (std::size_t i = 0; i < n_features; ++i) {
        for (std::size_t j = i + 1; j < n_features; ++j) {
            su_ff[i][j] = su_ff[j][i] = oracle_su(presence[i], 2, presence[j], 2);
        }
    }

    double best_merit = 0.0;
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 1; mask < (1u << n_features); ++mask) {
        double sum_cf = 0.0;
        double sum_ff = 0.0;
        int k = 0;
        for (std::size_t i = 0; i < n_features; ++i) {
            if (!(mask & (1u << i))) continue;
            ++k;
            sum_cf += su_cf[i];
            for (std::size_t j = i + 1; j < n_features; ++j) {
                if (mask & (1u << j)) sum_ff += su_ff[i][j];
            }
        }
        const double merit = sum_cf / std::sqrt(static_cast<double>(k) + 2.0 * sum_ff);
        if (merit > best_merit) {
            best_merit = merit;
            best_mask = mask;
        }
    }
    std::vector<std::uint32_t> selected;
    for (std::size_t i = 0; i < n_features; ++i) {
        if (best_mask & (1u << i)) selected.push_back(static_cast<std::uint32_t>(i));
    }
    return selected;
}

Dataset dataset_from_rows(std::vector<std::string> terms,
                          const std::vector<std::pair<std::vector<std::uint32_t>, SentimentLabel>>& rows) {
    Dataset dataset;
    dataset.space = FeatureSpace::from_terms(std::move(terms));
    std::size_t i = 0;
    for (const auto& [counts, label] : rows) {
        SparseVector vec;
        for (std::uint32_t f = 0; f < counts.size(); ++f) {
            if (counts[f] > 0) vec.pairs.emplace_back(f, counts[f]);
        }
        dataset.rows.push_back({std::move(vec), label, "r" + std::to_string(i++)});
    }
    return dataset;
}

}  // namespace

TEST_CASE("build_bow_space keeps frequent types in stable order") {
    const Corpus corpus = corpus_from_texts("c", {"a a a c", "c b"});
    const std::array<Corpus, 1> corpora = {corpus};
    const FeatureSpace space = build_bow_space(corpora, 2);
    CHECK(space.terms == std::vector<std::string>{"a", "c"});

    const FeatureSpace all = build_bow_space(corpora, 1);
    CHECK(all.terms == std::vector<std::string>{"a", "c", "b"});  // freq desc, ties alpha

    const FeatureSpace again = build_bow_space(corpora, 1);
    CHECK(again.terms == all.terms);  // deterministic
}

TEST_CASE("build_bow_space combines all supplied corpora") {
    const Corpus a = corpus_from_texts("a", {"x x"});
    const Corpus b = corpus_from_texts("b", {"x y y"});
    const std::array<Corpus, 2> corpora = {a, b};
    const FeatureSpace space = build_bow_space(corpora, 2);
    CHECK(space.terms == std::vector<std::string>{"x", "y"});  // x:3, y:2
    CHECK_THROWS_AS(build_bow_space(std::span<const Corpus>{}, 2), Error);
}

TEST_CASE("load_lexicon normalizes entries and ignores polarity") {
    const Lexicon lexicon = load_lexicon(testutil::data_path("demo_lexicon.txt"), "demo");
    CHECK(lexicon.entries.count("happy") == 1);
    CHECK(lexicon.entries.count("give up") == 1);
    CHECK(lexicon.entries.count("thank you") == 1);
    CHECK(lexicon.entries.count("positive") == 0);  // polarity column dropped
}

TEST_CASE("merge_lexicons unions normalized entries") {
    Lexicon l1{"l1", {"good", "bad"}};
    Lexicon l2{"l2", {"bad", "happy"}};
    const std::array<Lexicon, 2> lexicons = {l1, l2};
    const Lexicon merged = merge_lexicons(lexicons);
    CHECK(merged.entries == std::set<std::string>{"bad", "good", "happy"});

    const std::array<Lexicon, 1> single = {l1};
    CHECK(merge_lexicons(single).entries == l1.entries);

    // case and punctuation variants collapse after normalization
    Lexicon raw;
    raw.name = "raw";
    for (const char* entry : {"Thank You", "thank-you", "THANK you"}) {
        const auto tokens = tokenize_text(entry);
        std::string joined;
        for (const auto& token : tokens) {
            if (!joined.empty()) joined += " ";
            joined += token;
        }
        raw.entries.insert(joined);
    }
    CHECK(raw.entries.size() == 1);
}

TEST_CASE("merge_lexicons needs at least one lexicon") {
    CHECK_THROWS_AS(merge_lexicons(std::span<const Lexicon>{}), Error);
}

TEST_CASE("merge_lexicons is commutative and associative up to set equality") {
    Lexicon l1{"l1", {"a", "b"}};
    Lexicon l2{"l2", {"b", "c"}};
    Lexicon l3{"l3", {"d"}};
    const std::array<Lexicon, 3> abc = {l1, l2, l3};
    const std::array<Lexicon, 3> cba = {l3, l2, l1};
    CHECK(merge_lexicons(abc).entries == merge_lexicons(cba).entries);
}

TEST_CASE("build_lexicon_space keeps entries found in the corpora") {
    Lexicon merged{"m", {"happy", "give up"}};
    const Corpus corpus = corpus_from_texts("c", {"don't give up"});
    const std::array<Corpus, 1> corpora = {corpus};
    const FeatureSpace space = build_lexicon_space(merged, corpora);
    CHECK(space.terms == std::vector<std::string>{"give up"});

    Lexicon disjoint{"d", {"unrelated", "missing phrase"}};
    CHECK(build_lexicon_space(disjoint, corpora).size() == 0);
}

TEST_CASE("combine_spaces drops duplicates, bow order first") {
    const FeatureSpace bow = FeatureSpace::from_terms({"alpha", "beta"});
    const FeatureSpace lex = FeatureSpace::from_terms({"beta", "give up"});
    const FeatureSpace combined = combine_spaces(bow, lex);
    CHECK(combined.terms == std::vector<std::string>{"alpha", "beta", "give up"});
}

TEST_CASE("vectorize counts feature occurrences") {
    const FeatureSpace space = FeatureSpace::from_terms({"a", "b"});
    Post post;
    post.id = "p";
    post.text = "a b a";
    const SparseVector vec = vectorize(post, space);
    REQUIRE(vec.pairs.size() == 2);
    CHECK(vec.pairs[0] == std::pair<std::uint32_t, std::uint32_t>{0, 2});
    CHECK(vec.pairs[1] == std::pair<std::uint32_t, std::uint32_t>{1, 1});

    Post unrelated;
    unrelated.id = "q";
    unrelated.text = "zz yy";
    CHECK(vectorize(unrelated, space).pairs.empty());
}

TEST_CASE("phrases match before their constituent tokens") {
    const FeatureSpace space = FeatureSpace::from_terms({"give up", "up"});
    Post post;
    post.id = "p";
    post.text = "give up give up";
    const SparseVector vec = vectorize(post, space);
    REQUIRE(vec.pairs.size() == 1);
    CHECK(vec.pairs[0].first == space.index.at("give up"));
    CHECK(vec.pairs[0].second == 2);

    // the longest phrase wins at a shared start
    const FeatureSpace nested = FeatureSpace::from_terms({"give", "give up", "give up hope"});
    Post post2;
    post2.id = "q";
    post2.text = "give up hope give up give";
    const SparseVector vec2 = vectorize(post2, nested);
    std::map<std::uint32_t, std::uint32_t> got(vec2.pairs.begin(), vec2.pairs.end());
    CHECK(got.at(nested.index.at("give up hope")) == 1);
    CHECK(got.at(nested.index.at("give up")) == 1);
    CHECK(got.at(nested.index.at("give")) == 1);
}

TEST_CASE("vectorize ids are valid and counts bounded by token count") {
    std::mt19937 rng(43);
    const FeatureSpace space = FeatureSpace::from_terms({"a", "b", "c", "b c"});
    std::uniform_int_distribution<int> len(0, 12);
    const char* words[] = {"a", "b", "c", "d"};
    for (int iter = 0; iter < 200; ++iter) {
        Post post;
        post.id = "p";
        const int n = len(rng);
        for (int i = 0; i < n; ++i) {
            if (i) post.text += " ";
            post.text += words[rng() % 4];
        }
        const SparseVector vec = vectorize(post, space);
        std::uint32_t total = 0;
        std::uint32_t last_id = 0;
        bool first = true;
        for (const auto& [id, count] : vec.pairs) {
            CHECK(id < space.size());
            CHECK(count > 0);
            if (!first) CHECK(id > last_id);
            last_id = id;
            first = false;
            total += count;
        }
        CHECK(total <= static_cast<std::uint32_t>(n));
    }
}

TEST_CASE("build_dataset requires labels") {
    const Corpus unlabeled = corpus_from_texts("c", {"a b"});
    const FeatureSpace space = FeatureSpace::from_terms({"a"});
    CHECK_THROWS_AS(build_dataset(unlabeled, space), Error);
}

TEST_CASE("cfs_select keeps a perfectly correlated feature and drops a constant") {
    // feature 0 mirrors the class, feature 1 is constant
    std::vector<std::pair<std::vector<std::uint32_t>, SentimentLabel>> rows;
    for (int i = 0; i < 10; ++i) {
        const bool positive = i % 2 == 0;
        rows.push_back({{positive ? 1u : 0u, 1u},
                        positive ? SentimentLabel::facts : SentimentLabel::confusion});
    }
    const Dataset dataset = dataset_from_rows({"signal", "constant"}, rows);
    const FeatureSpace selected = cfs_select(dataset);
    CHECK(selected.terms == std::vector<std::string>{"signal"});
}

TEST_CASE("cfs_select picks one duplicate and never the noise") {
    std::mt19937 rng(3);
    std::vector<std::pair<std::vector<std::uint32_t>, SentimentLabel>> rows;
    for (int i = 0; i < 40; ++i) {
        const bool positive = i % 2 == 0;
        const std::uint32_t informative = positive ? 1u : 0u;
        const std::uint32_t noise = rng() % 2;
        rows.push_back({{informative, informative, noise},
                        positive ? SentimentLabel::encouragement : SentimentLabel::gratitude});
    }
    const Dataset dataset = dataset_from_rows({"dup1", "dup2", "noise"}, rows);
    const FeatureSpace selected = cfs_select(dataset);
    REQUIRE(selected.size() == 1);
    CHECK(selected.terms[0] == "dup1");

    // matches the exhaustive oracle
    const auto oracle = oracle_cfs(dataset);
    REQUIRE(oracle.size() == 1);
    CHECK(dataset.space.terms[oracle[0]] == selected.terms[0]);
}

TEST_CASE("cfs_select equals exhaustive search on small random fixtures") {
    std::mt19937 rng(2024);
    for (int iter = 0; iter < 25; ++iter) {
        const std::size_t n_features = 4 + iter % 3;  // 4..6
        const std::size_t n_rows = 30;
        std::vector<std::pair<std::vector<std::uint32_t>, SentimentLabel>> rows;
        for (std::size_t r = 0; r < n_rows; ++r) {
            const auto label = static_cast<SentimentLabel>(r % 3);
            std::vector<std::uint32_t> counts(n_features);
            for (std::size_t f = 0; f < n_features; ++f) {
                // class-dependent presence probability keeps features informative
                const unsigned roll = rng() % 100;
                const unsigned threshold = 20 + 20 * ((static_cast<unsigned>(label) + f) % 3);
                counts[f] = roll < threshold ? 1 + rng() % 2 : 0;
            }
            rows.push_back({counts, label});
        }
        std::vector<std::string> terms;
        for (std::size_t f = 0; f < n_features; ++f) terms.push_back("f" + std::to_string(f));
        const Dataset dataset = dataset_from_rows(terms, rows);

        const FeatureSpace selected = cfs_select(dataset);
        const auto oracle = oracle_cfs(dataset);
        std::vector<std::string> oracle_terms;
        for (const std::uint32_t f : oracle) oracle_terms.push_back(dataset.space.terms[f]);
        CHECK(selected.terms == oracle_terms);
    }
}

TEST_CASE("cfs_select rejects degenerate datasets") {
    std::vector<std::pair<std::vector<std::uint32_t>, SentimentLabel>> rows;
    for (int i = 0; i < 6; ++i) rows.push_back({{1u, 0u}, SentimentLabel::facts});
    const Dataset single_class = dataset_from_rows({"f0", "f1"}, rows);
    CHECK_THROWS_AS(cfs_select(single_class), Error);

    std::vector<std::pair<std::vector<std::uint32_t>, SentimentLabel>> two_rows = {
        {{1u}, SentimentLabel::facts}, {{0u}, SentimentLabel::confusion}};
    const Dataset one_feature = dataset_from_rows({"f0"}, two_rows);
    CHECK_THROWS_AS(cfs_select(one_feature), Error);
}

TEST_CASE("feature set parsing") {
    CHECK(parse_feature_set("bow") == FeatureSetKind::bow);
    CHECK(parse_feature_set("lexicon") == FeatureSetKind::lexicon);
    CHECK(parse_feature_set("selected") == FeatureSetKind::selected);
    CHECK_THROWS_AS(parse_feature_set("tfidf"), Error);
}

TEST_CASE("build_feature_space selected runs CFS over the combined space") {
    const Corpus corpus = testutil::separable_corpus("sel", 12, 5);
    FeatureConfig config;
    config.kind = FeatureSetKind::selected;
    const std::array<Corpus, 1> corpora = {corpus};
    const FeatureSpace selected = build_feature_space(config, corpora);
    CHECK(selected.size() >= 1);
    const FeatureSpace bow = build_bow_space(corpora, 2);
    CHECK(selected.size() <= bow.size());
    for (const auto& term : selected.terms) CHECK(bow.index.count(term) == 1);
}
