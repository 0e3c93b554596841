#include "corpuscope/report.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "corpuscope/error.hpp"
#include "corpuscope/lexical.hpp"
#include "corpuscope/spectrum.hpp"
#include "corpuscope/stats.hpp"
#include "corpuscope/tokenizer.hpp"
#include "corpuscope/version.hpp"

namespace corpuscope {

namespace {

using nlohmann::ordered_json;

struct InputRef {
    std::string name;
    std::string source;
};

struct Meta {
    std::uint64_t seed = 1;
    std::vector<InputRef> inputs;
};

std::string csv_header(const Meta& meta) {
    std::ostringstream out;
    out << "# tool: corpuscope " << kVersion << "\n";
    out << "# seed: " << meta.seed << "\n";
    for (const InputRef& input : meta.inputs) {
        out << "# input: " << input.name << "=" << input.source << "\n";
    }
    return out.str();
}

ordered_json json_meta(const Meta& meta) {
    ordered_json j;
    j["tool"] = "corpuscope";
    j["version"] = kVersion;
    j["seed"] = meta.seed;
    ordered_json inputs = ordered_json::array();
    for (const InputRef& input : meta.inputs) {
        inputs.push_back({{"name", input.name}, {"source", input.source}});
    }
    j["inputs"] = std::move(inputs);
    return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// Corpora as the report sees them: optionally reduced to unambiguous posts.
Corpus prepared(const Corpus& corpus, const ReportOptions& options, bool needs_labels) {
    if (options.filter_rule) return filter_unambiguous(corpus, *options.filter_rule);
    if (needs_labels) return filter_unambiguous(corpus, AmbiguityRule::unanimous);
    return corpus;
}

StopWordList load_stops(const ReportOptions& options, Meta& meta) {
    if (options.stopwords_path.empty()) {
        meta.inputs.push_back({"stopwords", "builtin-english"});
        return StopWordList::default_english();
    }
    meta.inputs.push_back({"stopwords", options.stopwords_path.filename().string() + "#" +
                                            file_digest(options.stopwords_path)});
    return StopWordList::load(options.stopwords_path);
}

std::vector<Lexicon> load_lexicons(const ReportOptions& options, Meta& meta) {
    std::vector<Lexicon> lexicons;
    for (const auto& path : options.lexicon_paths) {
        const std::string name = path.stem().string();
        meta.inputs.push_back(
            {"lexicon:" + name, path.filename().string() + "#" + file_digest(path)});
        lexicons.push_back(load_lexicon(path, name));
    }
    return lexicons;
}

struct CorpusStats {
    CorpusSummary summary;
    CorpusDescriptives descriptives;
};

CorpusStats compute_stats(const Corpus& corpus, AmbiguityRule rule) {
    return {corpus_summary(corpus, rule), corpus_descriptives(corpus)};
}

struct ProfileData {
    FrequencySpectrum spectrum;
    LexicalProfile profile;
};

ProfileData compute_profile(const Corpus& corpus, const StopWordList& stops,
                            std::uint64_t mid_threshold) {
    ProfileData data;
    const auto tokenized = tokenize_corpus(corpus);
    data.spectrum = build_spectrum(tokenized);
    data.profile = lexical_profile(data.spectrum, stops, mid_threshold);
    return data;
}

ordered_json eval_to_json(const EvalReport& report) {
    ordered_json j;
    j["scheme"] = report.scheme;
    j["train"] = report.train_name;
    j["test"] = report.test_name;
    j["classifier"] = report.classifier;
    j["feature_set"] = report.feature_set;
    j["weighted"] = {{"precision", report.weighted_precision},
                     {"recall", report.weighted_recall},
                     {"f1", report.weighted_f1}};
    ordered_json per_class = ordered_json::array();
    for (const PerClassMetrics& m : report.per_class) {
        per_class.push_back({{"label", std::string(label_name(m.label))},
                             {"precision", m.precision},
                             {"recall", m.recall},
                             {"f1", m.f1},
                             {"support", m.support}});
    }
    j["per_class"] = std::move(per_class);
    j["evaluated"] = report.evaluated;
    if (!report.note.empty()) j["note"] = report.note;
    return j;
}

void eval_csv_row(std::ostringstream& out, std::string_view scheme_id, const EvalReport& report) {
    out << scheme_id << "," << report.train_name << "," << report.test_name << ","
        << report.feature_set << "," << report.classifier << ","
        << format_fixed(report.weighted_f1, 3) << "," << format_fixed(report.weighted_precision, 3)
        << "," << format_fixed(report.weighted_recall, 3) << "\n";
}

ClassifierConfig classifier_config(std::string_view name) {
    ClassifierConfig config;
    config.kind = parse_classifier_kind(name);
    return config;
}

}  // namespace

ReportFormat parse_report_format(std::string_view text) {
    if (text == "csv") return ReportFormat::csv;
    if (text == "json") return ReportFormat::json;
    fail(ErrorCode::invalid_argument, "unknown format \"" + std::string(text) + "\"");
}

std::string format_fixed(double value, int decimals) {
    double scale = 1.0;
    for (int i = 0; i < decimals; ++i) scale *= 10.0;
    const double scaled = value * scale;
    long long rounded = static_cast<long long>(std::llround(std::fabs(scaled)));
    std::string digits = std::to_string(rounded);
    std::string out;
    if (scaled < 0 && rounded != 0) out.push_back('-');
    if (decimals == 0) {
        out += digits;
        return out;
    }
    if (digits.size() <= static_cast<std::size_t>(decimals)) {
        digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
    }
    out += digits.substr(0, digits.size() - static_cast<std::size_t>(decimals));
    out.push_back('.');
    out += digits.substr(digits.size() - static_cast<std::size_t>(decimals));
    return out;
}

std::string report_stats(const Corpus& input_a, const Corpus* input_b,
                         const ReportOptions& options) {
    const AmbiguityRule rule = options.filter_rule.value_or(AmbiguityRule::unanimous);
    const Corpus a = prepared(input_a, options, false);
    std::optional<Corpus> b;
    if (input_b) b = prepared(*input_b, options, false);

    Meta meta;
    meta.seed = options.seed;
    meta.inputs.push_back({a.name, a.source});
    if (b) meta.inputs.push_back({b->name, b->source});

    std::vector<std::pair<std::string, CorpusStats>> stats;
    stats.emplace_back(a.name, compute_stats(a, rule));
    if (b) stats.emplace_back(b->name, compute_stats(*b, rule));

    if (options.format == ReportFormat::json) {
        ordered_json j;
        j["meta"] = json_meta(meta);
        ordered_json corpora = ordered_json::array();
        for (const auto& [name, s] : stats) {
            corpora.push_back({{"corpus", name},
                               {"authors", s.summary.authors},
                               {"topics", s.summary.topics},
                               {"posts", s.summary.posts},
                               {"posts_per_topic", s.summary.posts_per_topic},
                               {"posts_per_author", s.summary.posts_per_author},
                               {"ambiguous", s.summary.ambiguous},
                               {"unambiguous", s.summary.unambiguous},
                               {"words", s.descriptives.words},
                               {"types", s.descriptives.types},
                               {"sentences", s.descriptives.sentences},
                               {"words_per_post", s.descriptives.words_per_post},
                               {"sentences_per_post", s.descriptives.sentences_per_post},
                               {"words_per_sentence", s.descriptives.words_per_sentence}});
        }
        j["corpora"] = std::move(corpora);
        return dump(j);
    }

    std::ostringstream out;
    out << csv_header(meta);
    out << "parameter";
    for (const auto& [name, s] : stats) out << "," << name;
    out << "\n";
    const auto row = [&](const char* key, auto value_of) {
        out << key;
        for (const auto& [name, s] : stats) out << "," << value_of(s);
        out << "\n";
    };
    row("authors", [](const CorpusStats& s) { return std::to_string(s.summary.authors); });
    row("topics", [](const CorpusStats& s) { return std::to_string(s.summary.topics); });
    row("posts", [](const CorpusStats& s) { return std::to_string(s.summary.posts); });
    row("posts_per_topic",
        [](const CorpusStats& s) { return format_fixed(s.summary.posts_per_topic, 1); });
    row("posts_per_author",
        [](const CorpusStats& s) { return format_fixed(s.summary.posts_per_author, 1); });
    row("ambiguous", [](const CorpusStats& s) { return std::to_string(s.summary.ambiguous); });
    row("unambiguous", [](const CorpusStats& s) { return std::to_string(s.summary.unambiguous); });
    row("words", [](const CorpusStats& s) { return std::to_string(s.descriptives.words); });
    row("types", [](const CorpusStats& s) { return std::to_string(s.descriptives.types); });
    row("sentences", [](const CorpusStats& s) { return std::to_string(s.descriptives.sentences); });
    row("words_per_post",
        [](const CorpusStats& s) { return format_fixed(s.descriptives.words_per_post, 0); });
    row("sentences_per_post",
        [](const CorpusStats& s) { return format_fixed(s.descriptives.sentences_per_post, 1); });
    row("words_per_sentence",
        [](const CorpusStats& s) { return format_fixed(s.descriptives.words_per_sentence, 1); });
    return out.str();
}

namespace {

ordered_json profile_to_json(const std::string& name, const ProfileData& data) {
    return {{"corpus", name},
            {"tokens", data.spectrum.tokens},
            {"types", data.spectrum.types()},
            {"ttr", data.profile.ttr},
            {"mid_density", data.profile.mid_density},
            {"p1", data.profile.p1},
            {"p2", data.profile.p2},
            {"p3", data.profile.p3},
            {"mid_count", data.profile.mid_count}};
}

}  // namespace

std::string report_profile(const Corpus& input_a, const Corpus* input_b,
                           const ReportOptions& options) {
    const Corpus a = prepared(input_a, options, false);
    std::optional<Corpus> b;
    if (input_b) b = prepared(*input_b, options, false);

    Meta meta;
    meta.seed = options.seed;
    meta.inputs.push_back({a.name, a.source});
    if (b) meta.inputs.push_back({b->name, b->source});
    const StopWordList stops = load_stops(options, meta);

    std::vector<std::pair<std::string, ProfileData>> profiles;
    profiles.emplace_back(a.name, compute_profile(a, stops, options.mid_threshold));
    if (b) profiles.emplace_back(b->name, compute_profile(*b, stops, options.mid_threshold));

    if (options.format == ReportFormat::json) {
        ordered_json j;
        j["meta"] = json_meta(meta);
        j["mid_threshold"] = options.mid_threshold;
        ordered_json corpora = ordered_json::array();
        for (const auto& [name, data] : profiles) corpora.push_back(profile_to_json(name, data));
        j["corpora"] = std::move(corpora);
        return dump(j);
    }

    std::ostringstream out;
    out << csv_header(meta);
    out << "# mid_count and mid_density depend on the stop-word list\n";
    out << "measure";
    for (const auto& [name, data] : profiles) out << "," << name;
    out << "\n";
    const auto row = [&](const char* key, auto value_of) {
        out << key;
        for (const auto& [name, data] : profiles) out << "," << value_of(data);
        out << "\n";
    };
    row("ttr", [](const ProfileData& d) { return format_fixed(d.profile.ttr, 5); });
    row("mid_density", [](const ProfileData& d) { return format_fixed(d.profile.mid_density, 5); });
    row("p1", [](const ProfileData& d) { return format_fixed(d.profile.p1, 5); });
    row("p2", [](const ProfileData& d) { return format_fixed(d.profile.p2, 5); });
    row("p3", [](const ProfileData& d) { return format_fixed(d.profile.p3, 5); });
    row("mid_count", [](const ProfileData& d) { return std::to_string(d.profile.mid_count); });
    row("tokens", [](const ProfileData& d) { return std::to_string(d.spectrum.tokens); });
    row("types", [](const ProfileData& d) { return std::to_string(d.spectrum.types()); });
    return out.str();
}

std::string report_compare(const Corpus& input_a, const Corpus& input_b,
                           const ReportOptions& options) {
    const Corpus a = prepared(input_a, options, false);
    const Corpus b = prepared(input_b, options, false);

    Meta meta;
    meta.seed = options.seed;
    meta.inputs.push_back({a.name, a.source});
    meta.inputs.push_back({b.name, b.source});
    const StopWordList stops = load_stops(options, meta);

    const ProfileData pa = compute_profile(a, stops, options.mid_threshold);
    const ProfileData pb = compute_profile(b, stops, options.mid_threshold);

    // Table 3 measure order
    struct MeasureRow {
        const char* name;
        double a_value;
        double b_value;
        bool stopword_dependent;
    };
    const std::vector<MeasureRow> measures = {
        {"ttr", pa.profile.ttr, pb.profile.ttr, false},
        {"mid_density", pa.profile.mid_density, pb.profile.mid_density, true},
        {"p1", pa.profile.p1, pb.profile.p1, false},
        {"p2", pa.profile.p2, pb.profile.p2, false},
        {"p3", pa.profile.p3, pb.profile.p3, false},
    };

    std::vector<double> sample_a;
    std::vector<double> sample_b;
    for (const MeasureRow& m : measures) {
        sample_a.push_back(m.a_value);
        sample_b.push_back(m.b_value);
    }
    const TTestResult ttest = student_t_unpaired(sample_a, sample_b);
    const DivergenceReport div = divergences(pa.spectrum, pb.spectrum);
    const std::size_t overlap = author_overlap(a, b);

    const auto higher = [&](const MeasureRow& m) {
        if (m.a_value > m.b_value) return a.name;
        if (m.b_value > m.a_value) return b.name;
        return std::string("equal");
    };

    if (options.format == ReportFormat::json) {
        ordered_json j;
        j["meta"] = json_meta(meta);
        j["mid_threshold"] = options.mid_threshold;
        j["profiles"] = ordered_json::array({profile_to_json(a.name, pa), profile_to_json(b.name, pb)});
        ordered_json rows = ordered_json::array();
        for (const MeasureRow& m : measures) {
            rows.push_back({{"measure", m.name},
                            {a.name, m.a_value},
                            {b.name, m.b_value},
                            {"higher", higher(m)},
                            {"stopword_dependent", m.stopword_dependent}});
        }
        j["measures"] = std::move(rows);
        j["ttest"] = {{"t", ttest.t},         {"df", ttest.df},       {"p_two_tailed", ttest.p_two_tailed},
                      {"mean_a", ttest.mean_a}, {"mean_b", ttest.mean_b}, {"sd_a", ttest.sd_a},
                      {"sd_b", ttest.sd_b}};
        j["divergences"] = {{"kl_ab", div.kl_ab},
                            {"kl_ba", div.kl_ba},
                            {"cross_entropy_ab", div.cross_entropy_ab},
                            {"js", div.js}};
        j["author_overlap"] = overlap;
        return dump(j);
    }

    std::ostringstream out;
    out << csv_header(meta);
    out << "section,measure," << a.name << "," << b.name << ",higher,stopword_dependent\n";
    for (const MeasureRow& m : measures) {
        out << "profile," << m.name << "," << format_fixed(m.a_value, 5) << ","
            << format_fixed(m.b_value, 5) << "," << higher(m) << ","
            << (m.stopword_dependent ? "yes" : "no") << "\n";
    }
    out << "ttest,t," << format_fixed(ttest.t, 4) << ",,,\n";
    out << "ttest,df," << ttest.df << ",,,\n";
    out << "ttest,p_two_tailed," << format_fixed(ttest.p_two_tailed, 4) << ",,,\n";
    out << "divergence,kl_ab," << format_fixed(div.kl_ab, 6) << ",,,\n";
    out << "divergence,kl_ba," << format_fixed(div.kl_ba, 6) << ",,,\n";
    out << "divergence,cross_entropy_ab," << format_fixed(div.cross_entropy_ab, 6) << ",,,\n";
    out << "divergence,js," << format_fixed(div.js, 6) << ",,,\n";
    out << "authors,overlap," << overlap << ",,,\n";
    return out.str();
}

std::string report_zipf(const Corpus& input_a, const ReportOptions& options) {
    const Corpus a = prepared(input_a, options, false);
    Meta meta;
    meta.seed = options.seed;
    meta.inputs.push_back({a.name, a.source});

    const auto tokenized = tokenize_corpus(a);
    const PostLengthSeries series = post_length_series(tokenized);

    if (options.format == ReportFormat::json) {
        ordered_json j;
        j["meta"] = json_meta(meta);
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < series.lengths.size(); ++i) {
            rows.push_back({{"rank", i + 1}, {"length", series.lengths[i]}});
        }
        j["series"] = std::move(rows);
        return dump(j);
    }

    std::ostringstream out;
    out << csv_header(meta);
    out << "rank,length\n";
    for (std::size_t i = 0; i < series.lengths.size(); ++i) {
        out << (i + 1) << "," << series.lengths[i] << "\n";
    }
    return out.str();
}

std::string report_baseline(const Corpus& input_a, const Corpus& input_b,
                            const ReportOptions& options) {
    const Corpus a = prepared(input_a, options, true);
    const Corpus b = prepared(input_b, options, true);

    Meta meta;
    meta.seed = options.seed;
    meta.inputs.push_back({a.name, a.source});
    meta.inputs.push_back({b.name, b.source});

    ProtocolConfig config;
    config.folds = options.folds;
    config.seed = options.seed;
    const ProtocolReport protocol = run_protocol(a, b, config);  // baselines only

    if (options.format == ReportFormat::json) {
        ordered_json j;
        j["meta"] = json_meta(meta);
        j["folds"] = options.folds;
        ordered_json rows = ordered_json::array();
        static const char* kSchemes[4] = {kSchemeAToB, kSchemeCvA, kSchemeBToA, kSchemeCvB};
        for (std::size_t i = 0; i < protocol.baselines.size(); ++i) {
            ordered_json row = eval_to_json(protocol.baselines[i]);
            row["scheme_id"] = kSchemes[i];
            rows.push_back(std::move(row));
        }
        j["baselines"] = std::move(rows);
        return dump(j);
    }

    std::ostringstream out;
    out << csv_header(meta);
    out << "scheme,train,test,feature_set,classifier,F,Pr,R\n";
    static const char* kSchemes[4] = {kSchemeAToB, kSchemeCvA, kSchemeBToA, kSchemeCvB};
    for (std::size_t i = 0; i < protocol.baselines.size(); ++i) {
        eval_csv_row(out, kSchemes[i], protocol.baselines[i]);
    }
    return out.str();
}

std::string report_classify(const Corpus& input_a, const Corpus* input_b,
                            const ReportOptions& options) {
    const Corpus a = prepared(input_a, options, true);
    std::optional<Corpus> b;
    if (input_b) b = prepared(*input_b, options, true);

    Meta meta;
    meta.seed = options.seed;
    meta.inputs.push_back({a.name, a.source});
    if (b) meta.inputs.push_back({b->name, b->source});
    const std::vector<Lexicon> lexicons = load_lexicons(options, meta);

    if (options.classifiers.size() != 1) {
        fail(ErrorCode::invalid_argument, "classify needs exactly one classifier");
    }
    if (options.feature_sets.size() != 1) {
        fail(ErrorCode::invalid_argument, "classify needs exactly one feature set");
    }
    FeatureConfig features;
    features.kind = parse_feature_set(options.feature_sets.front());
    features.bow_min_count = options.bow_min_count;
    features.lexicons = lexicons;
    const ClassifierConfig classifier = classifier_config(options.classifiers.front());

    const bool needs_b =
        options.scheme == kSchemeAToB || options.scheme == kSchemeBToA || options.scheme == kSchemeCvB;
    if (needs_b && !b) {
        fail(ErrorCode::invalid_argument,
             "scheme \"" + options.scheme + "\" needs a second corpus");
    }

    std::vector<Corpus> space_corpora;
    space_corpora.push_back(a);
    if (b) space_corpora.push_back(*b);

    EvalReport report;
    if (options.scheme == kSchemeAToB) {
        report = cross_corpus_eval(a, *b, space_corpora, features, classifier);
    } else if (options.scheme == kSchemeBToA) {
        report = cross_corpus_eval(*b, a, space_corpora, features, classifier);
    } else if (options.scheme == kSchemeCvA) {
        report = cross_validate(a, space_corpora, features, classifier, options.folds, options.seed);
    } else if (options.scheme == kSchemeCvB) {
        report = cross_validate(*b, space_corpora, features, classifier, options.folds, options.seed);
    } else {
        fail(ErrorCode::invalid_argument, "unknown scheme \"" + options.scheme + "\"");
    }

    if (options.format == ReportFormat::json) {
        ordered_json j;
        j["meta"] = json_meta(meta);
        j["scheme_id"] = options.scheme;
        j["result"] = eval_to_json(report);
        return dump(j);
    }

    std::ostringstream out;
    out << csv_header(meta);
    out << "section,label,precision,recall,f1,support\n";
    for (const PerClassMetrics& m : report.per_class) {
        out << "per_class," << label_name(m.label) << "," << format_fixed(m.precision, 3) << ","
            << format_fixed(m.recall, 3) << "," << format_fixed(m.f1, 3) << "," << m.support
            << "\n";
    }
    out << "weighted,all," << format_fixed(report.weighted_precision, 3) << ","
        << format_fixed(report.weighted_recall, 3) << "," << format_fixed(report.weighted_f1, 3)
        << "," << report.evaluated << "\n";
    if (!report.note.empty()) out << "# note: " << report.note << "\n";
    return out.str();
}

std::string report_protocol(const Corpus& input_a, const Corpus& input_b,
                            const ReportOptions& options) {
    const Corpus a = prepared(input_a, options, true);
    const Corpus b = prepared(input_b, options, true);

    Meta meta;
    meta.seed = options.seed;
    meta.inputs.push_back({a.name, a.source});
    meta.inputs.push_back({b.name, b.source});
    const std::vector<Lexicon> lexicons = load_lexicons(options, meta);

    ProtocolConfig config;
    for (const std::string& name : options.feature_sets) {
        config.feature_sets.push_back(parse_feature_set(name));
    }
    for (const std::string& name : options.classifiers) {
        config.classifiers.push_back(classifier_config(name));
    }
    config.lexicons = lexicons;
    config.bow_min_count = options.bow_min_count;
    config.folds = options.folds;
    config.seed = options.seed;

    const ProtocolReport protocol = run_protocol(a, b, config);

    static const char* kSchemes[4] = {kSchemeAToB, kSchemeCvA, kSchemeBToA, kSchemeCvB};

    if (options.format == ReportFormat::json) {
        ordered_json j;
        j["meta"] = json_meta(meta);
        j["folds"] = protocol.folds;
        ordered_json baselines = ordered_json::array();
        for (std::size_t i = 0; i < protocol.baselines.size(); ++i) {
            ordered_json row = eval_to_json(protocol.baselines[i]);
            row["scheme_id"] = kSchemes[i];
            baselines.push_back(std::move(row));
        }
        j["baselines"] = std::move(baselines);
        ordered_json cells = ordered_json::array();
        for (const ProtocolCell& cell : protocol.cells) {
            ordered_json row = eval_to_json(cell.report);
            row["scheme_id"] = cell.scheme;
            cells.push_back(std::move(row));
        }
        j["cells"] = std::move(cells);
        ordered_json best = ordered_json::array();
        for (const BestRow& row : protocol.best_rows) {
            best.push_back({{"feature_set", std::string(feature_set_name(row.feature_set))},
                            {"scheme_id", row.scheme},
                            {"classifier", row.classifier},
                            {"f1", row.f1},
                            {"precision", row.precision},
                            {"recall", row.recall}});
        }
        j["best_rows"] = std::move(best);
        ordered_json battery = ordered_json::array();
        for (const BatteryEntry& entry : protocol.battery) {
            battery.push_back({{"name", entry.name},
                               {"sample_a", entry.sample_a},
                               {"sample_b", entry.sample_b},
                               {"t", entry.result.t},
                               {"df", entry.result.df},
                               {"p_two_tailed", entry.result.p_two_tailed}});
        }
        j["battery"] = std::move(battery);
        return dump(j);
    }

    std::ostringstream out;
    out << csv_header(meta);
    out << "section,scheme,train,test,feature_set,classifier,F,Pr,R\n";
    for (std::size_t i = 0; i < protocol.baselines.size(); ++i) {
        out << "baseline,";
        eval_csv_row(out, kSchemes[i], protocol.baselines[i]);
    }
    for (const ProtocolCell& cell : protocol.cells) {
        out << "cell,";
        eval_csv_row(out, cell.scheme, cell.report);
    }
    for (const BestRow& row : protocol.best_rows) {
        out << "best," << row.scheme << ",,," << feature_set_name(row.feature_set) << ","
            << row.classifier << "," << format_fixed(row.f1, 3) << ","
            << format_fixed(row.precision, 3) << "," << format_fixed(row.recall, 3) << "\n";
    }
    for (const BatteryEntry& entry : protocol.battery) {
        out << "battery," << entry.name << ",,,,t=" << format_fixed(entry.result.t, 4)
            << ",df=" << entry.result.df << ",p=" << format_fixed(entry.result.p_two_tailed, 4)
            << ",\n";
    }
    return out.str();
}

}  // namespace corpuscope
