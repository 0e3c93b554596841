#include "corpuscope/classifiers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <json.hpp>

#include "corpuscope/error.hpp"

namespace corpuscope {

namespace {

constexpr double kGnbVarianceFloor = 1e-9;
constexpr double kSvmDualityGapTarget = 1e-3;

std::vector<SentimentLabel> observed_classes(const Dataset& dataset) {
    if (dataset.rows.empty()) fail(ErrorCode::invalid_argument, "empty dataset");
    bool seen[kLabelCount] = {false, false, false, false};
    for (const auto& row : dataset.rows) seen[static_cast<std::size_t>(row.label)] = true;
    std::vector<SentimentLabel> classes;
    for (const SentimentLabel label : all_labels()) {
        if (seen[static_cast<std::size_t>(label)]) classes.push_back(label);
    }
    return classes;
}

std::size_t class_index_of(const std::vector<SentimentLabel>& classes, SentimentLabel label) {
    return static_cast<std::size_t>(
        std::find(classes.begin(), classes.end(), label) - classes.begin());
}

void check_vector(const TrainedModel& model, const SparseVector& vec) {
    for (const auto& [id, count] : vec.pairs) {
        if (id >= model.dim) {
            fail(ErrorCode::invalid_argument,
                 "feature id " + std::to_string(id) + " out of range (model dim " +
                     std::to_string(model.dim) + ")");
        }
    }
}

std::size_t argmax_scores(const std::vector<double>& scores) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < scores.size(); ++c) {
        if (scores[c] > scores[best]) best = c;  // ties keep the earlier class
    }
    return best;
}

// Log-posterior scores of an MNB-shaped parameter set.
std::vector<double> mnb_scores(const MnbParams& params, const SparseVector& vec) {
    std::vector<double> scores = params.log_prior;
    for (const auto& [id, count] : vec.pairs) {
        for (std::size_t c = 0; c < scores.size(); ++c) {
            scores[c] += count * params.log_likelihood[c][id];
        }
    }
    return scores;
}

std::vector<double> posterior_from_log_scores(std::vector<double> scores) {
    const double max_score = *std::max_element(scores.begin(), scores.end());
    double total = 0.0;
    for (double& s : scores) {
        s = std::exp(s - max_score);
        total += s;
    }
    for (double& s : scores) s /= total;
    return scores;
}

// MNB-style probability tables from (possibly fractional) counts with
// add-one smoothing.
MnbParams smoothed_tables(const std::vector<double>& class_weight,
                          const std::vector<std::vector<double>>& term_weight, std::size_t dim,
                          double alpha) {
    const std::size_t n_classes = class_weight.size();
    MnbParams params;
    params.log_prior.resize(n_classes);
    params.log_likelihood.assign(n_classes, std::vector<double>(dim, 0.0));
    const double total_class =
        std::accumulate(class_weight.begin(), class_weight.end(), 0.0) +
        alpha * static_cast<double>(n_classes);
    for (std::size_t c = 0; c < n_classes; ++c) {
        params.log_prior[c] = std::log((class_weight[c] + alpha) / total_class);
        const double total_terms =
            std::accumulate(term_weight[c].begin(), term_weight[c].end(), 0.0) +
            alpha * static_cast<double>(dim);
        for (std::size_t f = 0; f < dim; ++f) {
            params.log_likelihood[c][f] = std::log((term_weight[c][f] + alpha) / total_terms);
        }
    }
    return params;
}

}  // namespace

ClassifierKind parse_classifier_kind(std::string_view text) {
    if (text == "majority") return ClassifierKind::majority;
    if (text == "mnb") return ClassifierKind::mnb;
    if (text == "dmnb") return ClassifierKind::dmnb;
    if (text == "gnb") return ClassifierKind::gnb;
    if (text == "svm") return ClassifierKind::svm;
    fail(ErrorCode::invalid_argument, "unknown classifier \"" + std::string(text) + "\"");
}

std::string_view classifier_kind_name(ClassifierKind kind) {
    switch (kind) {
        case ClassifierKind::majority: return "majority";
        case ClassifierKind::mnb: return "mnb";
        case ClassifierKind::dmnb: return "dmnb";
        case ClassifierKind::gnb: return "gnb";
        case ClassifierKind::svm: return "svm";
    }
    return "unknown";
}

TrainedModel train_majority(const Dataset& dataset) {
    TrainedModel model;
    model.kind = ClassifierKind::majority;
    model.classes = observed_classes(dataset);
    model.dim = static_cast<std::uint32_t>(dataset.space.size());

    std::size_t counts[kLabelCount] = {0, 0, 0, 0};
    for (const auto& row : dataset.rows) ++counts[static_cast<std::size_t>(row.label)];
    std::size_t best = 0;
    for (std::size_t c = 1; c < kLabelCount; ++c) {
        if (counts[c] > counts[best]) best = c;  // ties keep declaration order
    }
    model.params = MajorityParams{
        class_index_of(model.classes, static_cast<SentimentLabel>(best))};
    return model;
}

TrainedModel train_mnb(const Dataset& dataset, double alpha) {
    TrainedModel model;
    model.kind = ClassifierKind::mnb;
    model.classes = observed_classes(dataset);
    model.dim = static_cast<std::uint32_t>(dataset.space.size());
    const std::size_t n_classes = model.classes.size();

    std::vector<double> class_counts(n_classes, 0.0);
    std::vector<std::vector<double>> term_counts(n_classes, std::vector<double>(model.dim, 0.0));
    for (const auto& row : dataset.rows) {
        const std::size_t c = class_index_of(model.classes, row.label);
        class_counts[c] += 1.0;
        for (const auto& [id, count] : row.vec.pairs) term_counts[c][id] += count;
    }

    // priors are plain class frequencies (no smoothing: every class observed)
    MnbParams params = smoothed_tables(class_counts, term_counts, model.dim, alpha);
    const double total = static_cast<double>(dataset.rows.size());
    for (std::size_t c = 0; c < n_classes; ++c) {
        params.log_prior[c] = std::log(class_counts[c] / total);
    }
    model.params = std::move(params);
    return model;
}

TrainedModel train_dmnb(const Dataset& dataset, std::size_t iterations) {
    if (iterations < 1) fail(ErrorCode::invalid_argument, "dmnb needs iterations >= 1");
    TrainedModel model;
    model.kind = ClassifierKind::dmnb;
    model.classes = observed_classes(dataset);
    model.dim = static_cast<std::uint32_t>(dataset.space.size());
    const std::size_t n_classes = model.classes.size();

    DmnbParams params;
    params.iterations = iterations;
    params.class_pseudo.assign(n_classes, 0.0);
    params.term_pseudo.assign(n_classes, std::vector<double>(model.dim, 0.0));

    // discriminative frequency estimate: weight every count by the current
    // residual 1 - P(class | doc), in dataset order
    std::vector<double> term_totals(n_classes, 0.0);
    for (std::size_t pass = 0; pass < iterations; ++pass) {
        for (const auto& row : dataset.rows) {
            const std::size_t c = class_index_of(model.classes, row.label);
            std::vector<double> scores(n_classes);
            for (std::size_t k = 0; k < n_classes; ++k) {
                scores[k] = std::log((params.class_pseudo[k] + 1.0) /
                                     (std::accumulate(params.class_pseudo.begin(),
                                                      params.class_pseudo.end(), 0.0) +
                                      static_cast<double>(n_classes)));
                const double denom = term_totals[k] + static_cast<double>(model.dim);
                for (const auto& [id, count] : row.vec.pairs) {
                    scores[k] += count * std::log((params.term_pseudo[k][id] + 1.0) / denom);
                }
            }
            const double posterior = posterior_from_log_scores(std::move(scores))[c];
            const double weight = 1.0 - posterior;
            params.class_pseudo[c] += weight;
            for (const auto& [id, count] : row.vec.pairs) {
                params.term_pseudo[c][id] += weight * count;
                term_totals[c] += weight * count;
            }
        }
    }

    params.model = smoothed_tables(params.class_pseudo, params.term_pseudo, model.dim, 1.0);
    model.params = std::move(params);
    return model;
}

TrainedModel train_gnb(const Dataset& dataset) {
    TrainedModel model;
    model.kind = ClassifierKind::gnb;
    model.classes = observed_classes(dataset);
    model.dim = static_cast<std::uint32_t>(dataset.space.size());
    const std::size_t n_classes = model.classes.size();

    GnbParams params;
    params.log_prior.resize(n_classes);
    params.mean.assign(n_classes, std::vector<double>(model.dim, 0.0));
    params.var.assign(n_classes, std::vector<double>(model.dim, 0.0));
    params.zero_density.assign(n_classes, 0.0);

    // population mean/variance per class and feature; absent features are zeros
    std::vector<double> class_counts(n_classes, 0.0);
    std::vector<std::vector<double>> sq_sums(n_classes, std::vector<double>(model.dim, 0.0));
    for (const auto& row : dataset.rows) {
        const std::size_t c = class_index_of(model.classes, row.label);
        class_counts[c] += 1.0;
        for (const auto& [id, count] : row.vec.pairs) {
            params.mean[c][id] += count;
            sq_sums[c][id] += static_cast<double>(count) * count;
        }
    }
    for (std::size_t c = 0; c < n_classes; ++c) {
        for (std::size_t f = 0; f < model.dim; ++f) {
            params.mean[c][f] /= class_counts[c];
            const double var = sq_sums[c][f] / class_counts[c] - params.mean[c][f] * params.mean[c][f];
            params.var[c][f] = std::max(var, kGnbVarianceFloor);
        }
    }

    const double total = static_cast<double>(dataset.rows.size());
    for (std::size_t c = 0; c < n_classes; ++c) {
        params.log_prior[c] = std::log(class_counts[c] / total);
        for (std::size_t f = 0; f < model.dim; ++f) {
            const double var = params.var[c][f];
            const double mean = params.mean[c][f];
            params.zero_density[c] +=
                -0.5 * std::log(2.0 * M_PI * var) - mean * mean / (2.0 * var);
        }
    }

    model.params = std::move(params);
    return model;
}

// ---------------------------------------------------------------------------
// Linear soft-margin SVM, one machine per class pair, dual coordinate descent.

namespace {

struct StandardizedInstance {
    // values x_j / scale_j over the nonzero features
    std::vector<std::pair<std::uint32_t, double>> scaled;
    double zz = 0.0;  // |z|^2
    double zm = 0.0;  // z . m
    double label = 0.0;
};

SvmPairMachine train_pair(const std::vector<StandardizedInstance>& instances,
                          const std::vector<double>& m, double m2, double c_param,
                          std::size_t dim) {
    const std::size_t n = instances.size();
    std::vector<double> alpha(n, 0.0);
    std::vector<double> wz(dim, 0.0);
    double a_sum = 0.0;  // sum alpha_i y_i
    double wzm = 0.0;    // wz . m

    std::vector<double> q_diag(n);
    for (std::size_t i = 0; i < n; ++i) {
        q_diag[i] = instances[i].zz - 2.0 * instances[i].zm + m2 + 1.0;  // +1: bias feature
        if (q_diag[i] <= 0.0) q_diag[i] = 1.0;  // all-zero instance
    }

    const auto decision = [&](const StandardizedInstance& inst) {
        double dot = 0.0;
        for (const auto& [id, value] : inst.scaled) dot += wz[id] * value;
        return dot - a_sum * inst.zm - wzm + a_sum * m2 + a_sum;
    };

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937 rng(1u);  // fixed: training must be deterministic

    constexpr std::size_t kMaxEpochs = 100000;
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t epoch = 0; epoch < kMaxEpochs; ++epoch) {
        std::shuffle(order.begin(), order.end(), rng);
        for (const std::size_t i : order) {
            const auto& inst = instances[i];
            const double g = inst.label * decision(inst) - 1.0;
            double pg = g;
            if (alpha[i] <= 0.0) {
                pg = std::min(g, 0.0);
            } else if (alpha[i] >= c_param) {
                pg = std::max(g, 0.0);
            }
            if (pg == 0.0) continue;
            const double old = alpha[i];
            alpha[i] = std::clamp(old - g / q_diag[i], 0.0, c_param);
            const double delta = (alpha[i] - old) * inst.label;
            if (delta == 0.0) continue;
            for (const auto& [id, value] : inst.scaled) wz[id] += delta * value;
            a_sum += delta;
            wzm += delta * inst.zm;
        }

        // duality gap: primal - dual
        double w_norm2 = -2.0 * a_sum * wzm + a_sum * a_sum * m2 + a_sum * a_sum;
        for (const double w : wz) w_norm2 += w * w;
        double hinge = 0.0;
        double alpha_sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            hinge += std::max(0.0, 1.0 - instances[i].label * decision(instances[i]));
            alpha_sum += alpha[i];
        }
        const double primal = 0.5 * w_norm2 + c_param * hinge;
        const double dual = alpha_sum - 0.5 * w_norm2;
        gap = primal - dual;
        if (gap <= kSvmDualityGapTarget) break;
    }

    SvmPairMachine machine;
    machine.duality_gap = gap;
    // fold the -m correction into a dense weight vector + intercept:
    // decision(x) = sum_j v_j x_j/scale_j + (a_sum - v . m)
    machine.weights.resize(dim);
    double vm = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
        machine.weights[j] = wz[j] - a_sum * m[j];
        vm += machine.weights[j] * m[j];
    }
    machine.intercept = a_sum - vm;
    return machine;
}

}  // namespace

TrainedModel train_svm(const Dataset& dataset, double c_param) {
    TrainedModel model;
    model.kind = ClassifierKind::svm;
    model.classes = observed_classes(dataset);
    model.dim = static_cast<std::uint32_t>(dataset.space.size());
    if (model.classes.size() < 2) {
        fail(ErrorCode::invalid_argument, "svm needs at least 2 classes present");
    }
    const std::size_t dim = model.dim;
    const double n = static_cast<double>(dataset.rows.size());

    SvmParams params;
    params.offset.assign(dim, 0.0);
    params.scale.assign(dim, 1.0);

    // per-feature mean and population sd over the full training set;
    // constant features pass through unscaled
    std::vector<double> sq_sum(dim, 0.0);
    for (const auto& row : dataset.rows) {
        for (const auto& [id, count] : row.vec.pairs) {
            params.offset[id] += count;
            sq_sum[id] += static_cast<double>(count) * count;
        }
    }
    for (std::size_t j = 0; j < dim; ++j) {
        params.offset[j] /= n;
        const double var = sq_sum[j] / n - params.offset[j] * params.offset[j];
        if (var > 1e-12) {
            params.scale[j] = std::sqrt(var);
        } else {
            params.offset[j] = 0.0;
            params.scale[j] = 1.0;
        }
    }

    std::vector<double> m(dim);
    double m2 = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
        m[j] = params.offset[j] / params.scale[j];
        m2 += m[j] * m[j];
    }

    // standardized sparse views, grouped per class
    std::vector<std::vector<StandardizedInstance>> per_class(model.classes.size());
    for (const auto& row : dataset.rows) {
        StandardizedInstance inst;
        inst.scaled.reserve(row.vec.pairs.size());
        for (const auto& [id, count] : row.vec.pairs) {
            const double value = count / params.scale[id];
            inst.scaled.emplace_back(id, value);
            inst.zz += value * value;
            inst.zm += value * m[id];
        }
        per_class[class_index_of(model.classes, row.label)].push_back(std::move(inst));
    }

    for (std::size_t a = 0; a < model.classes.size(); ++a) {
        for (std::size_t b = a + 1; b < model.classes.size(); ++b) {
            std::vector<StandardizedInstance> pair_instances;
            pair_instances.reserve(per_class[a].size() + per_class[b].size());
            for (const auto& inst : per_class[a]) {
                pair_instances.push_back(inst);
                pair_instances.back().label = 1.0;
            }
            for (const auto& inst : per_class[b]) {
                pair_instances.push_back(inst);
                pair_instances.back().label = -1.0;
            }
            SvmPairMachine machine = train_pair(pair_instances, m, m2, c_param, dim);
            machine.positive_class = a;
            machine.negative_class = b;
            params.machines.push_back(std::move(machine));
        }
    }

    model.params = std::move(params);
    return model;
}

TrainedModel train_classifier(const ClassifierConfig& config, const Dataset& dataset) {
    switch (config.kind) {
        case ClassifierKind::majority: return train_majority(dataset);
        case ClassifierKind::mnb: return train_mnb(dataset, config.mnb_alpha);
        case ClassifierKind::dmnb: return train_dmnb(dataset, config.dmnb_iterations);
        case ClassifierKind::gnb: return train_gnb(dataset);
        case ClassifierKind::svm: return train_svm(dataset, config.svm_c);
    }
    fail(ErrorCode::invalid_argument, "unknown classifier kind");
}

SentimentLabel predict(const TrainedModel& model, const SparseVector& vec) {
    check_vector(model, vec);
    switch (model.kind) {
        case ClassifierKind::majority: {
            const auto& params = std::get<MajorityParams>(model.params);
            return model.classes[params.class_index];
        }
        case ClassifierKind::mnb: {
            const auto& params = std::get<MnbParams>(model.params);
            return model.classes[argmax_scores(mnb_scores(params, vec))];
        }
        case ClassifierKind::dmnb: {
            const auto& params = std::get<DmnbParams>(model.params);
            return model.classes[argmax_scores(mnb_scores(params.model, vec))];
        }
        case ClassifierKind::gnb: {
            const auto& params = std::get<GnbParams>(model.params);
            std::vector<double> scores(model.classes.size());
            for (std::size_t c = 0; c < scores.size(); ++c) {
                double score = params.log_prior[c] + params.zero_density[c];
                for (const auto& [id, count] : vec.pairs) {
                    const double var = params.var[c][id];
                    const double mean = params.mean[c][id];
                    const double dev = count - mean;
                    // swap the x=0 contribution for the actual value
                    score += (-dev * dev + mean * mean) / (2.0 * var);
                }
                scores[c] = score;
            }
            return model.classes[argmax_scores(scores)];
        }
        case ClassifierKind::svm: {
            const auto& params = std::get<SvmParams>(model.params);
            std::vector<std::size_t> votes(model.classes.size(), 0);
            for (const auto& machine : params.machines) {
                double decision = machine.intercept;
                for (const auto& [id, count] : vec.pairs) {
                    decision += machine.weights[id] * (count / params.scale[id]);
                }
                ++votes[decision >= 0.0 ? machine.positive_class : machine.negative_class];
            }
            std::size_t best = 0;
            for (std::size_t c = 1; c < votes.size(); ++c) {
                if (votes[c] > votes[best]) best = c;
            }
            return model.classes[best];
        }
    }
    fail(ErrorCode::invalid_argument, "unknown model kind");
}

// ---------------------------------------------------------------------------
// JSON round trip

namespace {

nlohmann::ordered_json classes_to_json(const std::vector<SentimentLabel>& classes) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const SentimentLabel label : classes) out.push_back(std::string(label_name(label)));
    return out;
}

}  // namespace

std::string model_to_json(const TrainedModel& model) {
    nlohmann::ordered_json j;
    j["kind"] = std::string(classifier_kind_name(model.kind));
    j["classes"] = classes_to_json(model.classes);
    j["dim"] = model.dim;
    switch (model.kind) {
        case ClassifierKind::majority:
            j["class_index"] = std::get<MajorityParams>(model.params).class_index;
            break;
        case ClassifierKind::mnb: {
            const auto& params = std::get<MnbParams>(model.params);
            j["log_prior"] = params.log_prior;
            j["log_likelihood"] = params.log_likelihood;
            break;
        }
        case ClassifierKind::dmnb: {
            const auto& params = std::get<DmnbParams>(model.params);
            j["iterations"] = params.iterations;
            j["class_pseudo"] = params.class_pseudo;
            j["term_pseudo"] = params.term_pseudo;
            j["log_prior"] = params.model.log_prior;
            j["log_likelihood"] = params.model.log_likelihood;
            break;
        }
        case ClassifierKind::gnb: {
            const auto& params = std::get<GnbParams>(model.params);
            j["log_prior"] = params.log_prior;
            j["mean"] = params.mean;
            j["var"] = params.var;
            j["zero_density"] = params.zero_density;
            break;
        }
        case ClassifierKind::svm: {
            const auto& params = std::get<SvmParams>(model.params);
            j["offset"] = params.offset;
            j["scale"] = params.scale;
            nlohmann::ordered_json machines = nlohmann::ordered_json::array();
            for (const auto& machine : params.machines) {
                machines.push_back({{"positive_class", machine.positive_class},
                                    {"negative_class", machine.negative_class},
                                    {"weights", machine.weights},
                                    {"intercept", machine.intercept},
                                    {"duality_gap", machine.duality_gap}});
            }
            j["machines"] = std::move(machines);
            break;
        }
    }
    return j.dump(2);
}

TrainedModel model_from_json(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorCode::parse, std::string("model JSON: ") + e.what());
    }
    try {
        TrainedModel model;
        model.kind = parse_classifier_kind(j.at("kind").get<std::string>());
        for (const auto& name : j.at("classes")) {
            model.classes.push_back(parse_label(name.get<std::string>()));
        }
        model.dim = j.at("dim").get<std::uint32_t>();
        switch (model.kind) {
            case ClassifierKind::majority:
                model.params = MajorityParams{j.at("class_index").get<std::size_t>()};
                break;
            case ClassifierKind::mnb: {
                MnbParams params;
                params.log_prior = j.at("log_prior").get<std::vector<double>>();
                params.log_likelihood =
                    j.at("log_likelihood").get<std::vector<std::vector<double>>>();
                model.params = std::move(params);
                break;
            }
            case ClassifierKind::dmnb: {
                DmnbParams params;
                params.iterations = j.at("iterations").get<std::size_t>();
                params.class_pseudo = j.at("class_pseudo").get<std::vector<double>>();
                params.term_pseudo = j.at("term_pseudo").get<std::vector<std::vector<double>>>();
                params.model.log_prior = j.at("log_prior").get<std::vector<double>>();
                params.model.log_likelihood =
                    j.at("log_likelihood").get<std::vector<std::vector<double>>>();
                model.params = std::move(params);
                break;
            }
            case ClassifierKind::gnb: {
                GnbParams params;
                params.log_prior = j.at("log_prior").get<std::vector<double>>();
                params.mean = j.at("mean").get<std::vector<std::vector<double>>>();
                params.var = j.at("var").get<std::vector<std::vector<double>>>();
                params.zero_density = j.at("zero_density").get<std::vector<double>>();
                model.params = std::move(params);
                break;
            }
            case ClassifierKind::svm: {
                SvmParams params;
                params.offset = j.at("offset").get<std::vector<double>>();
                params.scale = j.at("scale").get<std::vector<double>>();
                for (const auto& mj : j.at("machines")) {
                    SvmPairMachine machine;
                    machine.positive_class = mj.at("positive_class").get<std::size_t>();
                    machine.negative_class = mj.at("negative_class").get<std::size_t>();
                    machine.weights = mj.at("weights").get<std::vector<double>>();
                    machine.intercept = mj.at("intercept").get<double>();
                    machine.duality_gap = mj.at("duality_gap").get<double>();
                    params.machines.push_back(std::move(machine));
                }
                model.params = std::move(params);
                break;
            }
        }
        return model;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::parse, std::string("model JSON: ") + e.what());
    }
}

}  // namespace corpuscope
