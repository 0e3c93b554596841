#ifndef CORPUSCOPE_EVALUATION_HPP
#define CORPUSCOPE_EVALUATION_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "corpuscope/classifiers.hpp"
#include "corpuscope/features.hpp"
#include "corpuscope/stats.hpp"

namespace corpuscope {

// Rows gold, columns predicted, over the four sentiment labels.
struct ConfusionMatrix {
    std::array<std::array<std::uint64_t, kLabelCount>, kLabelCount> counts{};

    void add(SentimentLabel gold, SentimentLabel predicted) {
        ++counts[static_cast<std::size_t>(gold)][static_cast<std::size_t>(predicted)];
    }
    std::uint64_t total() const;
};

struct PerClassMetrics {
    SentimentLabel label = SentimentLabel::confusion;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::uint64_t support = 0;
};

struct EvalReport {
    std::vector<PerClassMetrics> per_class;  // one entry per label
    double weighted_precision = 0.0;
    double weighted_recall = 0.0;
    double weighted_f1 = 0.0;
    std::uint64_t evaluated = 0;
    std::string scheme;       // "cv" or "cross_corpus"
    std::string train_name;
    std::string test_name;
    std::string classifier;
    std::string feature_set;
    std::string note;         // e.g. stratification degradation
};

// Support-weighted precision/recall/F over the matrix. Classes never
// predicted get precision 0; classes without gold support get recall 0.
EvalReport weighted_prf(const ConfusionMatrix& matrix);

// Fold index per row. Stratified: seeded shuffle within each class, then
// round-robin dealing; degrades to plain shuffled folds when the smallest
// class has fewer than k members (degraded set to true).
std::vector<std::size_t> fold_assignment(std::span<const SentimentLabel> labels, std::size_t k,
                                         std::uint64_t seed, bool* degraded = nullptr);

EvalReport cross_validate(const Corpus& corpus, std::span<const Corpus> space_corpora,
                          const FeatureConfig& features, const ClassifierConfig& classifier,
                          std::size_t k = 10, std::uint64_t seed = 1);

// Train on the full first corpus, test on the full second one; the feature
// space is built over space_corpora (both corpora, following the protocol).
EvalReport cross_corpus_eval(const Corpus& train, const Corpus& test,
                             std::span<const Corpus> space_corpora, const FeatureConfig& features,
                             const ClassifierConfig& classifier);

// Shared-space variants used by the protocol runner.
EvalReport evaluate_cv(const Dataset& dataset, const ClassifierConfig& classifier, std::size_t k,
                       std::uint64_t seed);
EvalReport evaluate_train_test(const Dataset& train, const Dataset& test,
                               const ClassifierConfig& classifier);

// The four evaluation schemes of the 2x2 protocol, in report order.
inline constexpr const char* kSchemeAToB = "a-to-b";
inline constexpr const char* kSchemeCvA = "cv-a";
inline constexpr const char* kSchemeBToA = "b-to-a";
inline constexpr const char* kSchemeCvB = "cv-b";

struct BestRow {
    FeatureSetKind feature_set = FeatureSetKind::bow;
    std::string scheme;
    std::string classifier;
    double f1 = 0.0;
    double precision = 0.0;
    double recall = 0.0;
};

struct BatteryEntry {
    std::string name;
    std::vector<double> sample_a;
    std::vector<double> sample_b;
    TTestResult result;
};

struct ProtocolConfig {
    std::vector<FeatureSetKind> feature_sets;
    std::vector<ClassifierConfig> classifiers;
    std::vector<Lexicon> lexicons;
    std::uint64_t bow_min_count = 2;
    std::size_t folds = 10;
    std::uint64_t seed = 1;
};

struct ProtocolCell {
    FeatureSetKind feature_set = FeatureSetKind::bow;
    std::string scheme;
    EvalReport report;
};

struct ProtocolReport {
    std::vector<EvalReport> baselines;  // majority under the four schemes
    std::vector<ProtocolCell> cells;    // feature set x scheme x classifier
    std::vector<BestRow> best_rows;     // best F per feature set x scheme
    std::vector<BatteryEntry> battery;
    std::size_t folds = 10;
    std::uint64_t seed = 1;
};

// The significance tests of the protocol: CV F, pooled CV F+Pr, cross-corpus
// F, cross-corpus Recall; computed from best rows grouped by scheme.
std::vector<BatteryEntry> significance_battery(std::span<const BestRow> rows);

ProtocolReport run_protocol(const Corpus& a, const Corpus& b, const ProtocolConfig& config);

}  // namespace corpuscope

#endif
