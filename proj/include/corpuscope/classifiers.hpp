#ifndef CORPUSCOPE_CLASSIFIERS_HPP
#define CORPUSCOPE_CLASSIFIERS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "corpuscope/features.hpp"

namespace corpuscope {

enum class ClassifierKind {
    majority,
    mnb,
    dmnb,
    gnb,
    svm,
};

ClassifierKind parse_classifier_kind(std::string_view text);
std::string_view classifier_kind_name(ClassifierKind kind);

struct MajorityParams {
    std::size_t class_index = 0;
};

struct MnbParams {
    std::vector<double> log_prior;                    // [class]
    std::vector<std::vector<double>> log_likelihood;  // [class][feature]
};

// Discriminative frequency estimate: MNB-shaped model over learned
// pseudo-counts, kept alongside for inspection and reruns.
struct DmnbParams {
    MnbParams model;
    std::vector<double> class_pseudo;               // [class]
    std::vector<std::vector<double>> term_pseudo;   // [class][feature]
    std::size_t iterations = 1;
};

struct GnbParams {
    std::vector<double> log_prior;            // [class]
    std::vector<std::vector<double>> mean;    // [class][feature]
    std::vector<std::vector<double>> var;     // [class][feature], floored
    std::vector<double> zero_density;         // [class]: sum of log N(0 | mean, var)
};

// One linear machine per unordered class pair, trained on standardized
// features; weights are in standardized space, folded back so that
// decision(x) = sum_j weights[j] * x[j] / scale[j] + intercept.
struct SvmPairMachine {
    std::size_t positive_class = 0;  // earlier class in declaration order
    std::size_t negative_class = 0;
    std::vector<double> weights;
    double intercept = 0.0;
    double duality_gap = 0.0;
};

struct SvmParams {
    std::vector<double> offset;  // per-feature mean (0 for constant features)
    std::vector<double> scale;   // per-feature sd   (1 for constant features)
    std::vector<SvmPairMachine> machines;
};

struct TrainedModel {
    ClassifierKind kind = ClassifierKind::majority;
    std::vector<SentimentLabel> classes;  // observed labels, declaration order
    std::uint32_t dim = 0;
    std::variant<MajorityParams, MnbParams, DmnbParams, GnbParams, SvmParams> params;
};

TrainedModel train_majority(const Dataset& dataset);
TrainedModel train_mnb(const Dataset& dataset, double alpha = 1.0);
TrainedModel train_dmnb(const Dataset& dataset, std::size_t iterations = 1);
TrainedModel train_gnb(const Dataset& dataset);
TrainedModel train_svm(const Dataset& dataset, double c = 1.0);

struct ClassifierConfig {
    ClassifierKind kind = ClassifierKind::mnb;
    double mnb_alpha = 1.0;
    std::size_t dmnb_iterations = 1;
    double svm_c = 1.0;
};

TrainedModel train_classifier(const ClassifierConfig& config, const Dataset& dataset);

SentimentLabel predict(const TrainedModel& model, const SparseVector& vec);

std::string model_to_json(const TrainedModel& model);
TrainedModel model_from_json(std::string_view json_text);

}  // namespace corpuscope

#endif
