#include "corpuscope.h"

#include <cstring>
#include <new>
#include <string>

#include "corpuscope/corpus.hpp"
#include "corpuscope/error.hpp"
#include "corpuscope/report.hpp"
#include "corpuscope/version.hpp"

struct corpuscope_corpus {
    corpuscope::Corpus corpus;
};

namespace {

thread_local std::string g_last_error;

corpuscope_status status_of(corpuscope::ErrorCode code) {
    switch (code) {
        case corpuscope::ErrorCode::invalid_argument: return CORPUSCOPE_ERR_INVALID_ARGUMENT;
        case corpuscope::ErrorCode::io: return CORPUSCOPE_ERR_IO;
        case corpuscope::ErrorCode::parse: return CORPUSCOPE_ERR_PARSE;
        case corpuscope::ErrorCode::data: return CORPUSCOPE_ERR_DATA;
    }
    return CORPUSCOPE_ERR_INTERNAL;
}

template <typename Fn>
corpuscope_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return CORPUSCOPE_OK;
    } catch (const corpuscope::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return CORPUSCOPE_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CORPUSCOPE_ERR_INTERNAL;
    }
}

char* copy_string(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

corpuscope_status invalid(const char* message) {
    g_last_error = message;
    return CORPUSCOPE_ERR_INVALID_ARGUMENT;
}

std::vector<std::string> split_list(const char* csv) {
    std::vector<std::string> out;
    if (!csv) return out;
    const std::string text(csv);
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item =
            comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        if (!item.empty()) out.push_back(item);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

corpuscope::ReportOptions to_report_options(const corpuscope_options* options) {
    corpuscope::ReportOptions out;
    if (!options) return out;
    out.format = options->format == CORPUSCOPE_FORMAT_JSON ? corpuscope::ReportFormat::json
                                                           : corpuscope::ReportFormat::csv;
    if (options->ambiguity_rule) {
        out.filter_rule = corpuscope::parse_ambiguity_rule(options->ambiguity_rule);
    }
    if (options->stopwords_path) out.stopwords_path = options->stopwords_path;
    for (size_t i = 0; i < options->lexicon_count; ++i) {
        out.lexicon_paths.emplace_back(options->lexicon_paths[i]);
    }
    out.mid_threshold = options->mid_threshold;
    out.bow_min_count = options->bow_min_count;
    out.folds = options->folds;
    out.seed = options->seed;
    if (options->feature_sets) out.feature_sets = split_list(options->feature_sets);
    if (options->classifiers) out.classifiers = split_list(options->classifiers);
    if (options->scheme) out.scheme = options->scheme;
    return out;
}

template <typename Fn>
corpuscope_status report_call(char** out, Fn&& fn) {
    if (!out) return invalid("out may not be NULL");
    *out = nullptr;
    return guarded([&] { *out = copy_string(fn()); });
}

}  // namespace

extern "C" {

const char* corpuscope_version(void) { return corpuscope::kVersion; }

const char* corpuscope_last_error(void) { return g_last_error.c_str(); }

void corpuscope_string_free(char* text) { delete[] text; }

corpuscope_status corpuscope_corpus_open(const char* path, const char* name,
                                         corpuscope_corpus** out) {
    if (!path || !out) return invalid("path and out may not be NULL");
    *out = nullptr;
    return guarded([&] {
        const std::filesystem::path fs_path(path);
        const std::string corpus_name = name ? name : fs_path.stem().string();
        *out = new corpuscope_corpus{corpuscope::load_corpus(fs_path, corpus_name)};
    });
}

void corpuscope_corpus_free(corpuscope_corpus* corpus) { delete corpus; }

corpuscope_status corpuscope_corpus_post_count(const corpuscope_corpus* corpus, size_t* out) {
    if (!corpus || !out) return invalid("corpus and out may not be NULL");
    *out = corpus->corpus.posts.size();
    g_last_error.clear();
    return CORPUSCOPE_OK;
}

corpuscope_status corpuscope_corpus_filter(const corpuscope_corpus* corpus, const char* rule,
                                           corpuscope_corpus** out) {
    if (!corpus || !out) return invalid("corpus and out may not be NULL");
    *out = nullptr;
    return guarded([&] {
        const corpuscope::AmbiguityRule parsed =
            rule ? corpuscope::parse_ambiguity_rule(rule) : corpuscope::AmbiguityRule::unanimous;
        *out = new corpuscope_corpus{corpuscope::filter_unambiguous(corpus->corpus, parsed)};
    });
}

void corpuscope_options_init(corpuscope_options* options) {
    if (!options) return;
    options->format = CORPUSCOPE_FORMAT_CSV;
    options->ambiguity_rule = nullptr;
    options->stopwords_path = nullptr;
    options->lexicon_paths = nullptr;
    options->lexicon_count = 0;
    options->mid_threshold = 4;
    options->bow_min_count = 2;
    options->folds = 10;
    options->seed = 1;
    options->feature_sets = nullptr;
    options->classifiers = nullptr;
    options->scheme = nullptr;
}

corpuscope_status corpuscope_report_stats(const corpuscope_corpus* a, const corpuscope_corpus* b,
                                          const corpuscope_options* options, char** out) {
    if (!a) return invalid("corpus a may not be NULL");
    return report_call(out, [&] {
        return corpuscope::report_stats(a->corpus, b ? &b->corpus : nullptr,
                                        to_report_options(options));
    });
}

corpuscope_status corpuscope_report_profile(const corpuscope_corpus* a, const corpuscope_corpus* b,
                                            const corpuscope_options* options, char** out) {
    if (!a) return invalid("corpus a may not be NULL");
    return report_call(out, [&] {
        return corpuscope::report_profile(a->corpus, b ? &b->corpus : nullptr,
                                          to_report_options(options));
    });
}

corpuscope_status corpuscope_report_compare(const corpuscope_corpus* a, const corpuscope_corpus* b,
                                            const corpuscope_options* options, char** out) {
    if (!a || !b) return invalid("compare needs two corpora");
    return report_call(out, [&] {
        return corpuscope::report_compare(a->corpus, b->corpus, to_report_options(options));
    });
}

corpuscope_status corpuscope_report_zipf(const corpuscope_corpus* a,
                                         const corpuscope_options* options, char** out) {
    if (!a) return invalid("corpus a may not be NULL");
    return report_call(
        out, [&] { return corpuscope::report_zipf(a->corpus, to_report_options(options)); });
}

corpuscope_status corpuscope_report_baseline(const corpuscope_corpus* a,
                                             const corpuscope_corpus* b,
                                             const corpuscope_options* options, char** out) {
    if (!a || !b) return invalid("baseline needs two corpora");
    return report_call(out, [&] {
        return corpuscope::report_baseline(a->corpus, b->corpus, to_report_options(options));
    });
}

corpuscope_status corpuscope_report_classify(const corpuscope_corpus* a,
                                             const corpuscope_corpus* b,
                                             const corpuscope_options* options, char** out) {
    if (!a) return invalid("corpus a may not be NULL");
    return report_call(out, [&] {
        return corpuscope::report_classify(a->corpus, b ? &b->corpus : nullptr,
                                           to_report_options(options));
    });
}

corpuscope_status corpuscope_report_protocol(const corpuscope_corpus* a,
                                             const corpuscope_corpus* b,
                                             const corpuscope_options* options, char** out) {
    if (!a || !b) return invalid("protocol needs two corpora");
    return report_call(out, [&] {
        return corpuscope::report_protocol(a->corpus, b->corpus, to_report_options(options));
    });
}

}  // extern "C"
