#include "corpuscope/evaluation.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "corpuscope/error.hpp"
#include "corpuscope/parallel.hpp"

namespace corpuscope {

namespace {

EvalReport run_scheme(std::string_view scheme, const Dataset& dataset_a, const Dataset& dataset_b,
                      const ClassifierConfig& classifier, const ProtocolConfig& config) {
    if (scheme == kSchemeAToB) return evaluate_train_test(dataset_a, dataset_b, classifier);
    if (scheme == kSchemeCvA) return evaluate_cv(dataset_a, classifier, config.folds, config.seed);
    if (scheme == kSchemeBToA) return evaluate_train_test(dataset_b, dataset_a, classifier);
    return evaluate_cv(dataset_b, classifier, config.folds, config.seed);
}

std::string scheme_train_name(std::string_view scheme, const Corpus& a, const Corpus& b) {
    return (scheme == kSchemeAToB || scheme == kSchemeCvA) ? a.name : b.name;
}

std::string scheme_test_name(std::string_view scheme, const Corpus& a, const Corpus& b) {
    return (scheme == kSchemeBToA || scheme == kSchemeCvA) ? a.name : b.name;
}

}  // namespace

std::uint64_t ConfusionMatrix::total() const {
    std::uint64_t total = 0;
    for (const auto& row : counts) {
        for (const std::uint64_t count : row) total += count;
    }
    return total;
}

EvalReport weighted_prf(const ConfusionMatrix& matrix) {
    const std::uint64_t total = matrix.total();
    if (total == 0) fail(ErrorCode::invalid_argument, "empty confusion matrix");

    EvalReport report;
    report.evaluated = total;
    double weighted_p = 0.0;
    double weighted_r = 0.0;
    double weighted_f = 0.0;
    for (std::size_t c = 0; c < kLabelCount; ++c) {
        std::uint64_t tp = matrix.counts[c][c];
        std::uint64_t fp = 0;
        std::uint64_t support = 0;
        for (std::size_t other = 0; other < kLabelCount; ++other) {
            if (other != c) fp += matrix.counts[other][c];
            support += matrix.counts[c][other];
        }
        const std::uint64_t predicted = tp + fp;
        PerClassMetrics m;
        m.label = static_cast<SentimentLabel>(c);
        m.support = support;
        m.precision = predicted > 0 ? static_cast<double>(tp) / static_cast<double>(predicted) : 0.0;
        m.recall = support > 0 ? static_cast<double>(tp) / static_cast<double>(support) : 0.0;
        m.f1 = (m.precision + m.recall) > 0.0
                   ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
                   : 0.0;
        weighted_p += static_cast<double>(support) * m.precision;
        weighted_r += static_cast<double>(support) * m.recall;
        weighted_f += static_cast<double>(support) * m.f1;
        report.per_class.push_back(m);
    }
    report.weighted_precision = weighted_p / static_cast<double>(total);
    report.weighted_recall = weighted_r / static_cast<double>(total);
    report.weighted_f1 = weighted_f / static_cast<double>(total);
    return report;
}

std::vector<std::size_t> fold_assignment(std::span<const SentimentLabel> labels, std::size_t k,
                                         std::uint64_t seed, bool* degraded) {
    if (k < 2) fail(ErrorCode::invalid_argument, "cross-validation needs k >= 2");
    if (labels.size() < k) fail(ErrorCode::invalid_argument, "fewer posts than folds");

    std::vector<std::vector<std::size_t>> by_class(kLabelCount);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        by_class[static_cast<std::size_t>(labels[i])].push_back(i);
    }
    bool stratify = true;
    for (const auto& members : by_class) {
        if (!members.empty() && members.size() < k) stratify = false;
    }
    if (degraded) *degraded = !stratify;

    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
    std::vector<std::size_t> order;
    order.reserve(labels.size());
    if (stratify) {
        for (auto& members : by_class) {
            std::shuffle(members.begin(), members.end(), rng);
            order.insert(order.end(), members.begin(), members.end());
        }
    } else {
        order.resize(labels.size());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
    }

    std::vector<std::size_t> fold_of(labels.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        fold_of[order[pos]] = pos % k;
    }
    return fold_of;
}

EvalReport evaluate_cv(const Dataset& dataset, const ClassifierConfig& classifier, std::size_t k,
                       std::uint64_t seed) {
    std::vector<SentimentLabel> labels;
    labels.reserve(dataset.rows.size());
    for (const auto& row : dataset.rows) labels.push_back(row.label);

    bool degraded = false;
    const auto fold_of = fold_assignment(labels, k, seed, &degraded);

    ConfusionMatrix matrix;
    for (std::size_t fold = 0; fold < k; ++fold) {
        Dataset train;
        train.space = dataset.space;
        std::vector<const Dataset::Row*> test_rows;
        for (std::size_t i = 0; i < dataset.rows.size(); ++i) {
            if (fold_of[i] == fold) {
                test_rows.push_back(&dataset.rows[i]);
            } else {
                train.rows.push_back(dataset.rows[i]);
            }
        }
        const TrainedModel model = train_classifier(classifier, train);
        for (const Dataset::Row* row : test_rows) {
            matrix.add(row->label, predict(model, row->vec));
        }
    }

    EvalReport report = weighted_prf(matrix);
    report.scheme = "cv";
    report.classifier = std::string(classifier_kind_name(classifier.kind));
    if (degraded) report.note = "stratification degraded: smallest class smaller than fold count";
    return report;
}

EvalReport evaluate_train_test(const Dataset& train, const Dataset& test,
                               const ClassifierConfig& classifier) {
    const TrainedModel model = train_classifier(classifier, train);
    ConfusionMatrix matrix;
    for (const auto& row : test.rows) {
        matrix.add(row.label, predict(model, row.vec));
    }
    EvalReport report = weighted_prf(matrix);
    report.scheme = "cross_corpus";
    report.classifier = std::string(classifier_kind_name(classifier.kind));
    return report;
}

EvalReport cross_validate(const Corpus& corpus, std::span<const Corpus> space_corpora,
                          const FeatureConfig& features, const ClassifierConfig& classifier,
                          std::size_t k, std::uint64_t seed) {
    const FeatureSpace space = build_feature_space(features, space_corpora);
    const Dataset dataset = build_dataset(corpus, space);
    EvalReport report = evaluate_cv(dataset, classifier, k, seed);
    report.train_name = corpus.name;
    report.test_name = corpus.name;
    report.feature_set = std::string(feature_set_name(features.kind));
    return report;
}

EvalReport cross_corpus_eval(const Corpus& train, const Corpus& test,
                             std::span<const Corpus> space_corpora, const FeatureConfig& features,
                             const ClassifierConfig& classifier) {
    const FeatureSpace space = build_feature_space(features, space_corpora);
    const Dataset train_dataset = build_dataset(train, space);
    const Dataset test_dataset = build_dataset(test, space);
    EvalReport report = evaluate_train_test(train_dataset, test_dataset, classifier);
    report.train_name = train.name;
    report.test_name = test.name;
    report.feature_set = std::string(feature_set_name(features.kind));
    return report;
}

std::vector<BatteryEntry> significance_battery(std::span<const BestRow> rows) {
    const auto gather = [&](const char* scheme, auto pick) {
        std::vector<double> values;
        for (const BestRow& row : rows) {
            if (row.scheme == scheme) values.push_back(pick(row));
        }
        return values;
    };
    const auto f1 = [](const BestRow& r) { return r.f1; };
    const auto precision = [](const BestRow& r) { return r.precision; };
    const auto recall = [](const BestRow& r) { return r.recall; };

    std::vector<BatteryEntry> battery;
    const auto add = [&](std::string name, std::vector<double> xs, std::vector<double> ys) {
        if (xs.size() < 2 || ys.size() < 2) return;  // not enough feature sets
        BatteryEntry entry;
        entry.name = std::move(name);
        entry.result = student_t_unpaired(xs, ys);
        entry.sample_a = std::move(xs);
        entry.sample_b = std::move(ys);
        battery.push_back(std::move(entry));
    };

    // CV F: corpus A vs corpus B
    add("cv_f", gather(kSchemeCvA, f1), gather(kSchemeCvB, f1));

    // CV F and Precision pooled
    auto pooled_a = gather(kSchemeCvA, f1);
    for (const double v : gather(kSchemeCvA, precision)) pooled_a.push_back(v);
    auto pooled_b = gather(kSchemeCvB, f1);
    for (const double v : gather(kSchemeCvB, precision)) pooled_b.push_back(v);
    add("cv_f_pr", std::move(pooled_a), std::move(pooled_b));

    // cross-corpus F: A->B vs B->A
    add("cross_f", gather(kSchemeAToB, f1), gather(kSchemeBToA, f1));

    // cross-corpus Recall: B->A vs A->B
    add("cross_recall", gather(kSchemeBToA, recall), gather(kSchemeAToB, recall));

    return battery;
}

ProtocolReport run_protocol(const Corpus& a, const Corpus& b, const ProtocolConfig& config) {
    ProtocolReport report;
    report.folds = config.folds;
    report.seed = config.seed;

    const std::array<const char*, 4> schemes = {kSchemeAToB, kSchemeCvA, kSchemeBToA, kSchemeCvB};

    // majority baselines: features are irrelevant, an empty space suffices
    {
        const FeatureSpace empty_space;
        const Dataset dataset_a = build_dataset(a, empty_space);
        const Dataset dataset_b = build_dataset(b, empty_space);
        const ClassifierConfig majority{ClassifierKind::majority, 1.0, 1, 1.0};
        for (const char* scheme : schemes) {
            EvalReport r = run_scheme(scheme, dataset_a, dataset_b, majority, config);
            r.feature_set = "none";
            r.train_name = scheme_train_name(scheme, a, b);
            r.test_name = scheme_test_name(scheme, a, b);
            report.baselines.push_back(std::move(r));
        }
    }

    if (config.feature_sets.empty() || config.classifiers.empty()) return report;

    // one shared feature space (built over both corpora) per feature set
    const std::array<Corpus, 2> both = {a, b};
    std::vector<Dataset> datasets_a;
    std::vector<Dataset> datasets_b;
    for (const FeatureSetKind kind : config.feature_sets) {
        FeatureConfig fc;
        fc.kind = kind;
        fc.bow_min_count = config.bow_min_count;
        fc.lexicons = config.lexicons;
        const FeatureSpace space = build_feature_space(fc, both);
        datasets_a.push_back(build_dataset(a, space));
        datasets_b.push_back(build_dataset(b, space));
    }

    // all protocol cells, evaluated in parallel into indexed slots
    struct CellJob {
        std::size_t feature_index;
        std::size_t classifier_index;
        std::size_t scheme_index;
    };
    std::vector<CellJob> jobs;
    for (std::size_t f = 0; f < config.feature_sets.size(); ++f) {
        for (std::size_t c = 0; c < config.classifiers.size(); ++c) {
            for (std::size_t s = 0; s < schemes.size(); ++s) jobs.push_back({f, c, s});
        }
    }
    std::vector<ProtocolCell> cells(jobs.size());
    parallel_for_index(jobs.size(), [&](std::size_t i) {
        const CellJob& job = jobs[i];
        const char* scheme = schemes[job.scheme_index];
        EvalReport r = run_scheme(scheme, datasets_a[job.feature_index],
                                  datasets_b[job.feature_index],
                                  config.classifiers[job.classifier_index], config);
        r.feature_set = std::string(feature_set_name(config.feature_sets[job.feature_index]));
        r.train_name = scheme_train_name(scheme, a, b);
        r.test_name = scheme_test_name(scheme, a, b);
        cells[i] = {config.feature_sets[job.feature_index], scheme, std::move(r)};
    });
    report.cells = std::move(cells);

    // best F per feature set x scheme; ties keep the earlier classifier
    for (std::size_t f = 0; f < config.feature_sets.size(); ++f) {
        for (std::size_t s = 0; s < schemes.size(); ++s) {
            const EvalReport* best = nullptr;
            for (std::size_t c = 0; c < config.classifiers.size(); ++c) {
                const std::size_t index =
                    (f * config.classifiers.size() + c) * schemes.size() + s;
                const EvalReport& candidate = report.cells[index].report;
                if (!best || candidate.weighted_f1 > best->weighted_f1) best = &candidate;
            }
            report.best_rows.push_back({config.feature_sets[f], schemes[s], best->classifier,
                                        best->weighted_f1, best->weighted_precision,
                                        best->weighted_recall});
        }
    }

    report.battery = significance_battery(report.best_rows);
    return report;
}

}  // namespace corpuscope
