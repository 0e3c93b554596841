// Acceptance suite: runs every acceptance criterion and prints one PASS/FAIL
// line per criterion. Exit status is nonzero when any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "corpuscope/classifiers.hpp"
#include "corpuscope/evaluation.hpp"
#include "corpuscope/features.hpp"
#include "corpuscope/lexical.hpp"
#include "corpuscope/report.hpp"
#include "corpuscope/spectrum.hpp"
#include "corpuscope/stats.hpp"
#include "corpuscope/tokenizer.hpp"
#include "test_util.hpp"

using namespace corpuscope;

namespace {

int failures = 0;

void report(int number, const char* title, bool ok, const std::string& detail = "") {
    std::printf("%s  criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", number, title,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

bool close(double value, double expected, double tolerance) {
    return std::fabs(value - expected) <= tolerance;
}

// ---- criterion 1: Table 3 reproduction ------------------------------------

void criterion_1() {
    bool ok = true;
    std::string detail;
    const LexicalProfile a = profile_from_counts(120077, 6375, 2738, 988, 491, 2105);
    const LexicalProfile b = profile_from_counts(108245, 6297, 2870, 904, 448, 1999);
    const struct {
        const char* name;
        double got;
        double expected;
    } checks[] = {
        {"A V/N", a.ttr, 0.05309},       {"A mid", a.mid_density, 0.33020},
        {"A p1", a.p1, 0.42949},         {"A p2", a.p2, 0.15498},
        {"A p3", a.p3, 0.07702},         {"B V/N", b.ttr, 0.05817},
        {"B mid", b.mid_density, 0.31745}, {"B p1", b.p1, 0.45577},
        {"B p2", b.p2, 0.14356},         {"B p3", b.p3, 0.07115},
    };
    for (const auto& check : checks) {
        // agreement at five-decimal granularity (one unit in the last place)
        if (!close(check.got, check.expected, 1e-5)) {
            ok = false;
            detail += std::string(check.name) + " off; ";
        }
    }
    report(1, "Table 3 lexical measures from the published counts (5 decimals)", ok, detail);
}

// ---- criterion 2: Table 2 ratio reproduction -------------------------------

void criterion_2() {
    const CorpusDescriptives a = descriptives_from_counts(120077, 6375, 984, 8853);
    const CorpusDescriptives b = descriptives_from_counts(108245, 6297, 970, 7973);
    const bool ok = format_fixed(a.words_per_post, 0) == "122" &&
                    format_fixed(a.sentences_per_post, 1) == "9.0" &&
                    format_fixed(a.words_per_sentence, 1) == "13.6" &&
                    format_fixed(b.words_per_post, 0) == "112" &&
                    format_fixed(b.sentences_per_post, 1) == "8.2" &&
                    format_fixed(b.words_per_sentence, 1) == "13.6";
    report(2, "Table 2 ratios under report rounding (122/112, 9.0/8.2, 13.6/13.6)", ok);
}

// ---- criterion 3: p-value battery ------------------------------------------

void criterion_3() {
    bool ok = true;
    std::string detail;

    const std::vector<double> col_a = {0.05309, 0.33020, 0.42949, 0.15498, 0.07702};
    const std::vector<double> col_b = {0.05817, 0.31745, 0.45577, 0.14356, 0.07115};
    const TTestResult t1 = student_t_unpaired(col_a, col_b);
    if (!close(t1.p_two_tailed, 0.9981, 1e-3)) {
        ok = false;
        detail += "table3 p; ";
    }

    const TTestResult t2 = student_t_unpaired(std::vector<double>{0.628, 0.641, 0.744},
                                              std::vector<double>{0.560, 0.573, 0.630});
    if (t2.df != 4 || !close(t2.p_two_tailed, 0.1216, 1e-3)) {
        ok = false;
        detail += "cv F p/df; ";
    }

    const TTestResult t3 =
        student_t_unpaired(std::vector<double>{0.628, 0.641, 0.744, 0.629, 0.644, 0.745},
                           std::vector<double>{0.560, 0.573, 0.630, 0.568, 0.576, 0.632});
    if (t3.df != 10 || !close(t3.p_two_tailed, 0.0117, 1e-3)) {
        ok = false;
        detail += "pooled F+Pr p/df; ";
    }

    const TTestResult t4 = student_t_unpaired(std::vector<double>{0.473, 0.510, 0.537},
                                              std::vector<double>{0.475, 0.525, 0.565});
    if (!close(t4.p_two_tailed, 0.6633, 1e-3)) {
        ok = false;
        detail += "cross F p; ";
    }

    const TTestResult t5 = student_t_unpaired(std::vector<double>{0.506, 0.547, 0.579},
                                              std::vector<double>{0.484, 0.509, 0.539});
    if (!close(t5.p_two_tailed, 0.2759, 1e-3)) {
        ok = false;
        detail += "cross R p; ";
    }

    report(3, "published p values 0.9981 / 0.1216 / 0.0117 / 0.6633 / 0.2759 (±0.001)", ok,
           detail);
}

// ---- criterion 4: Table 4 reproduction --------------------------------------

void criterion_4() {
    const Corpus a = testutil::corpus_with_distribution("a", 117, 310, 124, 433);
    const Corpus b = testutil::corpus_with_distribution("b", 146, 494, 69, 261);
    ProtocolConfig config;  // baselines only
    const ProtocolReport protocol = run_protocol(a, b, config);

    const char* expected[4][3] = {
        {"0.114", "0.072", "0.269"},  // train A, test B
        {"0.269", "0.194", "0.440"},  // A cross-validation
        {"0.151", "0.099", "0.315"},  // train B, test A
        {"0.344", "0.259", "0.509"},  // B cross-validation
    };
    bool ok = protocol.baselines.size() == 4;
    std::string detail;
    for (std::size_t i = 0; ok && i < 4; ++i) {
        const EvalReport& row = protocol.baselines[i];
        if (format_fixed(row.weighted_f1, 3) != expected[i][0] ||
            format_fixed(row.weighted_precision, 3) != expected[i][1] ||
            format_fixed(row.weighted_recall, 3) != expected[i][2]) {
            ok = false;
            detail = "row " + std::to_string(i) + ": got " + format_fixed(row.weighted_f1, 3) +
                     "/" + format_fixed(row.weighted_precision, 3) + "/" +
                     format_fixed(row.weighted_recall, 3);
        }
    }
    report(4, "Table 4 majority baselines, all 12 values exact to 3 decimals", ok, detail);
}

// ---- criterion 5: learners on a separable corpus ----------------------------

void criterion_5() {
    const Corpus corpus = testutil::separable_corpus("acc5", 50, 424242);  // 200 posts
    const std::array<Corpus, 1> corpora = {corpus};
    FeatureConfig features;
    features.bow_min_count = 2;

    // analytic majority score for a balanced four-class corpus
    const double p = 0.25;
    const double majority_f = 2.0 * p * p / (1.0 + p);
    const ClassifierConfig majority{ClassifierKind::majority, 1.0, 1, 1.0};
    const EvalReport base = cross_validate(corpus, corpora, features, majority, 10, 1);

    bool ok = close(base.weighted_f1, majority_f, 1e-9) &&
              close(base.weighted_recall, p, 1e-9) &&
              close(base.weighted_precision, p * p, 1e-9);
    std::string detail = ok ? "" : "majority baseline off its analytic value; ";

    for (const ClassifierKind kind :
         {ClassifierKind::mnb, ClassifierKind::dmnb, ClassifierKind::gnb, ClassifierKind::svm}) {
        ClassifierConfig config;
        config.kind = kind;
        const EvalReport result = cross_validate(corpus, corpora, features, config, 10, 1);
        if (result.weighted_f1 < 0.95 || result.weighted_f1 <= base.weighted_f1) {
            ok = false;
            detail += std::string(classifier_kind_name(kind)) + " F=" +
                      format_fixed(result.weighted_f1, 3) + "; ";
        }
    }
    report(5, "MNB/DMNB/GNB/SVM weighted F >= 0.95 under 10-fold CV, beating the baseline", ok,
           detail);
}

// ---- criterion 6: oracle equivalences ----------------------------------------

double oracle_entropy(const std::vector<int>& values, int cardinality) {
    std::vector<int> counts(cardinality, 0);
    for (const int v : values) ++counts[v];
    double h = 0.0;
    for (const int c : counts) {
        if (c == 0) continue;
        const double prob = static_cast<double>(c) / static_cast<double>(values.size());
        h -= prob * std::log(prob);
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

std::vector<std::string> oracle_cfs_terms(const Dataset& dataset) {
    const std::size_t n_features = dataset.space.size();
    const std::size_t n = dataset.rows.size();
    std::vector<std::vector<int>> presence(n_features, std::vector<int>(n, 0));
    std::vector<int> classes(n);
    for (std::size_t r = 0; r < n; ++r) {
        classes[r] = static_cast<int>(dataset.rows[r].label);
        for (const auto& [id, count] : dataset.rows[r].vec.pairs) presence[id][r] = 1;
    }
    std::vector<double> su_cf(n_features);
    for (std::size_t f = 0; f < n_features; ++f) su_cf[f] = oracle_su(presence[f], 2, classes, 4);
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
    std::vector<std::string> terms;
    for (std::size_t i = 0; i < n_features; ++i) {
        if (best_mask & (1u << i)) terms.push_back(dataset.space.terms[i]);
    }
    return terms;
}

void criterion_6() {
    bool ok = true;
    std::string detail;

    // weighted_prf against a brute-force per-class oracle, 1000 matrices
    std::mt19937 rng(606060);
    std::uniform_int_distribution<std::uint64_t> cell(0, 25);
    for (int iter = 0; iter < 1000; ++iter) {
        ConfusionMatrix matrix;
        std::uint64_t total = 0;
        for (std::size_t g = 0; g < kLabelCount; ++g) {
            for (std::size_t p = 0; p < kLabelCount; ++p) {
                matrix.counts[g][p] = cell(rng);
                total += matrix.counts[g][p];
            }
        }
        if (total == 0) matrix.counts[1][2] = 3;
        const EvalReport fast = weighted_prf(matrix);

        double wp = 0.0;
        double wr = 0.0;
        double wf = 0.0;
        std::uint64_t oracle_total = 0;
        for (std::size_t c = 0; c < kLabelCount; ++c) {
            std::uint64_t tp = 0;
            std::uint64_t predicted = 0;
            std::uint64_t support = 0;
            for (std::size_t g = 0; g < kLabelCount; ++g) {
                for (std::size_t q = 0; q < kLabelCount; ++q) {
                    if (g == c && q == c) tp += matrix.counts[g][q];
                    if (q == c) predicted += matrix.counts[g][q];
                    if (g == c) support += matrix.counts[g][q];
                }
            }
            oracle_total += support;
            const double precision =
                predicted > 0 ? static_cast<double>(tp) / static_cast<double>(predicted) : 0.0;
            const double recall =
                support > 0 ? static_cast<double>(tp) / static_cast<double>(support) : 0.0;
            const double f1 =
                precision + recall > 0.0 ? 2.0 * precision * recall / (precision + recall) : 0.0;
            wp += static_cast<double>(support) * precision;
            wr += static_cast<double>(support) * recall;
            wf += static_cast<double>(support) * f1;
        }
        wp /= static_cast<double>(oracle_total);
        wr /= static_cast<double>(oracle_total);
        wf /= static_cast<double>(oracle_total);
        if (fast.weighted_precision != wp || fast.weighted_recall != wr ||
            fast.weighted_f1 != wf) {
            ok = false;
            detail += "weighted_prf mismatch at iter " + std::to_string(iter) + "; ";
            break;
        }
    }

    // cfs_select against exhaustive search on <=6 feature fixtures
    std::mt19937 cfs_rng(717171);
    for (int iter = 0; ok && iter < 40; ++iter) {
        const std::size_t n_features = 4 + iter % 3;
        Dataset dataset;
        std::vector<std::string> terms;
        for (std::size_t f = 0; f < n_features; ++f) terms.push_back("f" + std::to_string(f));
        dataset.space = FeatureSpace::from_terms(terms);
        for (std::size_t r = 0; r < 36; ++r) {
            SparseVector vec;
            const auto label = static_cast<SentimentLabel>(r % 3);
            for (std::size_t f = 0; f < n_features; ++f) {
                const unsigned threshold = 20 + 20 * ((static_cast<unsigned>(label) + f) % 3);
                if (cfs_rng() % 100 < threshold) {
                    vec.pairs.emplace_back(static_cast<std::uint32_t>(f), 1u + cfs_rng() % 2);
                }
            }
            dataset.rows.push_back({std::move(vec), label, "r" + std::to_string(r)});
        }
        const FeatureSpace selected = cfs_select(dataset);
        const auto oracle_terms = oracle_cfs_terms(dataset);
        if (selected.terms != oracle_terms) {
            ok = false;
            detail += "cfs mismatch at iter " + std::to_string(iter) + "; ";
        }
    }

    // build_spectrum against an independent counting oracle
    std::mt19937 spec_rng(828282);
    for (int iter = 0; ok && iter < 200; ++iter) {
        std::vector<TokenizedPost> posts;
        const std::size_t n_posts = 1 + spec_rng() % 10;
        bool any = false;
        for (std::size_t p = 0; p < n_posts; ++p) {
            TokenizedPost post;
            post.post_id = "p" + std::to_string(p);
            const std::size_t len = spec_rng() % 25;
            for (std::size_t i = 0; i < len; ++i) {
                post.tokens.push_back("w" + std::to_string(spec_rng() % 15));
                any = true;
            }
            posts.push_back(std::move(post));
        }
        if (!any) posts[0].tokens.push_back("w0");
        const FrequencySpectrum spectrum = build_spectrum(posts);
        std::map<std::string, std::uint64_t> counts;
        std::uint64_t tokens = 0;
        for (const auto& post : posts) {
            for (const auto& token : post.tokens) {
                ++counts[token];
                ++tokens;
            }
        }
        if (spectrum.tokens != tokens || spectrum.types() != counts.size()) {
            ok = false;
            detail += "spectrum counts; ";
            break;
        }
        for (const auto& [token, count] : counts) {
            if (spectrum.freq.at(token) != count) {
                ok = false;
                detail += "spectrum freq; ";
                break;
            }
        }
    }

    report(6, "oracle equivalence: weighted_prf x1000, cfs_select <=6 features, build_spectrum",
           ok, detail);
}

// ---- criterion 7: spectrum identities ----------------------------------------

void criterion_7() {
    bool ok = true;
    std::mt19937 rng(737373);
    for (int iter = 0; iter < 1000 && ok; ++iter) {
        std::vector<TokenizedPost> posts;
        const std::size_t n_posts = 1 + rng() % 8;
        bool any = false;
        for (std::size_t p = 0; p < n_posts; ++p) {
            TokenizedPost post;
            post.post_id = "p";
            const std::size_t len = rng() % 30;
            for (std::size_t i = 0; i < len; ++i) {
                post.tokens.push_back("w" + std::to_string(rng() % 12));
                any = true;
            }
            posts.push_back(std::move(post));
        }
        if (!any) posts[0].tokens.push_back("w0");
        const FrequencySpectrum spectrum = build_spectrum(posts);
        std::uint64_t v_sum = 0;
        std::uint64_t n_sum = 0;
        for (const auto& [m, v] : spectrum.types_by_count) {
            v_sum += v;
            n_sum += m * v;
        }
        ok = v_sum == spectrum.types() && n_sum == spectrum.tokens;
    }
    report(7, "spectrum identities sum(V_of)=V and sum(m*V_of)=N on 1000 random corpora", ok);
}

// ---- criterion 8: t_cdf accuracy ----------------------------------------------

void criterion_8() {
    bool ok = std::fabs(t_cdf(2.776, 4) - 0.975) <= 1e-4;
    for (std::uint64_t df = 1; df <= 30; ++df) {
        if (t_cdf(0.0, df) != 0.5) ok = false;
    }
    report(8, "t_cdf(2.776,4) within 1e-4 of 0.975; t_cdf(0,df) exactly 0.5 for df 1..30", ok);
}

// ---- criterion 9: tokenizer contract -------------------------------------------

void criterion_9() {
    bool ok = tokenize_text("Don't stop!") == std::vector<std::string>{"don", "t", "stop"};
    std::string detail = ok ? "" : "\"Don't stop!\" example; ";
    std::mt19937 rng(909090);
    for (int iter = 0; iter < 10000 && ok; ++iter) {
        const std::string text = testutil::random_utf8(rng);
        const auto tokens = tokenize_text(text);
        std::string joined;
        for (const auto& token : tokens) {
            if (tokenize_text(token) != std::vector<std::string>{token}) {
                ok = false;
                detail = "closure broken on iter " + std::to_string(iter);
                break;
            }
            if (!joined.empty()) joined += " ";
            joined += token;
        }
        if (ok && tokenize_text(joined) != tokens) {
            ok = false;
            detail = "idempotence broken on iter " + std::to_string(iter);
        }
    }
    report(9, "tokenizer closure and idempotence on 10000 random UTF-8 strings", ok, detail);
}

// ---- criterion 10: divergence sanity --------------------------------------------

void criterion_10() {
    bool ok = true;
    std::string detail;

    FrequencySpectrum self;
    self.freq = {{"a", 5}, {"b", 2}, {"c", 1}};
    self.tokens = 8;
    self.types_by_count = {{5, 1}, {2, 1}, {1, 1}};
    const DivergenceReport identical = divergences(self, self);
    if (identical.js != 0.0 || identical.kl_ab != 0.0) {
        ok = false;
        detail += "JS(a,a) != 0; ";
    }

    FrequencySpectrum x;
    x.freq = {{"x", 2}};
    x.tokens = 2;
    x.types_by_count = {{2, 1}};
    FrequencySpectrum y;
    y.freq = {{"y", 2}};
    y.tokens = 2;
    y.types_by_count = {{2, 1}};
    const DivergenceReport hand = divergences(x, y);
    if (std::fabs(hand.kl_ab - 0.5 * std::log(3.0)) > 1e-12) {
        ok = false;
        detail += "KL hand example; ";
    }

    std::mt19937 rng(111111);
    for (int iter = 0; iter < 300 && ok; ++iter) {
        FrequencySpectrum a;
        FrequencySpectrum b;
        const int types = 1 + static_cast<int>(rng() % 12);
        for (int t = 0; t < types; ++t) {
            if (rng() % 2) {
                const std::uint64_t c = 1 + rng() % 9;
                a.freq["w" + std::to_string(t)] = c;
                a.tokens += c;
            }
            if (rng() % 2) {
                const std::uint64_t c = 1 + rng() % 9;
                b.freq["w" + std::to_string(t)] = c;
                b.tokens += c;
            }
        }
        if (a.tokens == 0 || b.tokens == 0) continue;
        const DivergenceReport r = divergences(a, b);
        if (r.js < 0.0 || r.js > std::log(2.0) + 1e-12) {
            ok = false;
            detail += "JS bound; ";
        }
    }
    report(10, "JS(a,a)=0, JS <= ln 2, KL hand example = 0.5 ln 3 within 1e-12", ok, detail);
}

}  // namespace

int main() {
    std::printf("corpuscope acceptance suite\n");
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", failures);
    return 1;
}
