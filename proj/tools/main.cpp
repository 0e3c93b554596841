// corpuscope command line tool. Talks to the core exclusively through the
// shared library's C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "corpuscope.h"

namespace {

struct CommonArgs {
    std::string corpus_a;
    std::string corpus_b;
    std::string name_a;
    std::string name_b;
    std::string ambiguity_rule;
    std::string format = "csv";
    std::string output;
    std::string stopwords;
    std::vector<std::string> lexicons;
    unsigned long long mid_threshold = 4;
    unsigned long long min_count = 2;
    std::size_t folds = 10;
    unsigned long long seed = 1;
    std::string features = "bow";
    std::string classifiers = "mnb,dmnb,gnb,svm";
    std::string scheme = "cv-a";
};

class CorpusHandle {
public:
    CorpusHandle() = default;
    ~CorpusHandle() { corpuscope_corpus_free(handle_); }
    CorpusHandle(const CorpusHandle&) = delete;
    CorpusHandle& operator=(const CorpusHandle&) = delete;

    corpuscope_status open(const std::string& path, const std::string& name) {
        return corpuscope_corpus_open(path.c_str(), name.empty() ? nullptr : name.c_str(),
                                      &handle_);
    }
    const corpuscope_corpus* get() const { return handle_; }

private:
    corpuscope_corpus* handle_ = nullptr;
};

int fail_with(corpuscope_status status) {
    std::cerr << "error: " << corpuscope_last_error() << "\n";
    return status == CORPUSCOPE_ERR_INVALID_ARGUMENT ? 2 : 1;
}

int write_report(const CommonArgs& args, char* text) {
    if (args.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(args.output, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << args.output << "\n";
            corpuscope_string_free(text);
            return 1;
        }
        out << text;
    }
    corpuscope_string_free(text);
    return 0;
}

corpuscope_options make_options(const CommonArgs& args,
                                std::vector<const char*>& lexicon_ptrs) {
    corpuscope_options options;
    corpuscope_options_init(&options);
    options.format =
        args.format == "json" ? CORPUSCOPE_FORMAT_JSON : CORPUSCOPE_FORMAT_CSV;
    if (!args.ambiguity_rule.empty()) options.ambiguity_rule = args.ambiguity_rule.c_str();
    if (!args.stopwords.empty()) options.stopwords_path = args.stopwords.c_str();
    for (const std::string& path : args.lexicons) lexicon_ptrs.push_back(path.c_str());
    options.lexicon_paths = lexicon_ptrs.empty() ? nullptr : lexicon_ptrs.data();
    options.lexicon_count = lexicon_ptrs.size();
    options.mid_threshold = args.mid_threshold;
    options.bow_min_count = args.min_count;
    options.folds = args.folds;
    options.seed = args.seed;
    options.feature_sets = args.features.c_str();
    options.classifiers = args.classifiers.c_str();
    options.scheme = args.scheme.c_str();
    return options;
}

void add_common_flags(CLI::App* cmd, CommonArgs& args, bool needs_b, bool allows_b) {
    cmd->add_option("--corpus-a,-a", args.corpus_a, "corpus A (JSONL)")->required();
    if (needs_b) {
        cmd->add_option("--corpus-b,-b", args.corpus_b, "corpus B (JSONL)")->required();
    } else if (allows_b) {
        cmd->add_option("--corpus-b,-b", args.corpus_b, "corpus B (JSONL)");
    }
    cmd->add_option("--name-a", args.name_a, "display name for corpus A");
    if (allows_b || needs_b) cmd->add_option("--name-b", args.name_b, "display name for corpus B");
    cmd->add_option("--ambiguity-rule", args.ambiguity_rule,
                    "reduce corpora to unambiguous posts first (unanimous|strict-majority)");
    cmd->add_option("--format", args.format, "output format (csv|json)")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output,-o", args.output, "write the report to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"corpuscope: corpus statistics and cross-corpus sentiment classification"};
    app.set_version_flag("--version", std::string("corpuscope ") + corpuscope_version());
    app.require_subcommand(1);

    CommonArgs args;

    CLI::App* stats = app.add_subcommand("stats", "data-set and corpus statistics");
    add_common_flags(stats, args, false, true);

    CLI::App* profile = app.add_subcommand("profile", "lexical richness profile");
    add_common_flags(profile, args, false, true);
    profile->add_option("--stopwords", args.stopwords, "stop-word file (default: built-in list)");
    profile->add_option("--mid-threshold", args.mid_threshold, "mid-range frequency threshold");

    CLI::App* compare = app.add_subcommand("compare",
                                           "two-corpus comparison: profiles, t-test, divergences");
    add_common_flags(compare, args, true, true);
    compare->add_option("--stopwords", args.stopwords, "stop-word file (default: built-in list)");
    compare->add_option("--mid-threshold", args.mid_threshold, "mid-range frequency threshold");

    CLI::App* zipf = app.add_subcommand("zipf", "post lengths sorted descending");
    add_common_flags(zipf, args, false, false);

    CLI::App* baseline = app.add_subcommand("baseline", "majority baselines for the four schemes");
    add_common_flags(baseline, args, true, true);
    baseline->add_option("--folds", args.folds, "cross-validation folds");
    baseline->add_option("--seed", args.seed, "fold shuffle seed");

    CLI::App* classify = app.add_subcommand("classify", "one classification scheme");
    add_common_flags(classify, args, false, true);
    classify->add_option("--scheme", args.scheme, "a-to-b|cv-a|b-to-a|cv-b");
    classify->add_option("--features", args.features, "feature set (bow|lexicon|selected)");
    classify->add_option("--classifiers", args.classifiers,
                         "classifier (majority|mnb|dmnb|gnb|svm)");
    classify->add_option("--lexicon", args.lexicons, "lexicon file (repeatable)");
    classify->add_option("--folds", args.folds, "cross-validation folds");
    classify->add_option("--seed", args.seed, "fold shuffle seed");
    classify->add_option("--min-count", args.min_count, "BOW minimum occurrence count");

    CLI::App* protocol =
        app.add_subcommand("protocol", "full 2x2 protocol with significance battery");
    add_common_flags(protocol, args, true, true);
    protocol->add_option("--features", args.features,
                         "comma list of feature sets (bow,lexicon,selected)");
    protocol->add_option("--classifiers", args.classifiers,
                         "comma list of classifiers (mnb,dmnb,gnb,svm)");
    protocol->add_option("--lexicon", args.lexicons, "lexicon file (repeatable)");
    protocol->add_option("--folds", args.folds, "cross-validation folds");
    protocol->add_option("--seed", args.seed, "fold shuffle seed");
    protocol->add_option("--min-count", args.min_count, "BOW minimum occurrence count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return 2;
    }

    // default classifier choice for `classify` is a single learner
    if (classify->parsed() && args.classifiers == "mnb,dmnb,gnb,svm") args.classifiers = "mnb";

    CorpusHandle a;
    if (corpuscope_status status = a.open(args.corpus_a, args.name_a); status != CORPUSCOPE_OK) {
        return fail_with(status);
    }
    CorpusHandle b;
    const bool has_b = !args.corpus_b.empty();
    if (has_b) {
        if (corpuscope_status status = b.open(args.corpus_b, args.name_b);
            status != CORPUSCOPE_OK) {
            return fail_with(status);
        }
    }

    std::vector<const char*> lexicon_ptrs;
    const corpuscope_options options = make_options(args, lexicon_ptrs);

    char* text = nullptr;
    corpuscope_status status = CORPUSCOPE_OK;
    if (stats->parsed()) {
        status = corpuscope_report_stats(a.get(), has_b ? b.get() : nullptr, &options, &text);
    } else if (profile->parsed()) {
        status = corpuscope_report_profile(a.get(), has_b ? b.get() : nullptr, &options, &text);
    } else if (compare->parsed()) {
        status = corpuscope_report_compare(a.get(), b.get(), &options, &text);
    } else if (zipf->parsed()) {
        status = corpuscope_report_zipf(a.get(), &options, &text);
    } else if (baseline->parsed()) {
        status = corpuscope_report_baseline(a.get(), b.get(), &options, &text);
    } else if (classify->parsed()) {
        status = corpuscope_report_classify(a.get(), has_b ? b.get() : nullptr, &options, &text);
    } else if (protocol->parsed()) {
        status = corpuscope_report_protocol(a.get(), b.get(), &options, &text);
    }

    if (status != CORPUSCOPE_OK) return fail_with(status);
    return write_report(args, text);
}
