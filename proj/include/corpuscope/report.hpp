#ifndef CORPUSCOPE_REPORT_HPP
#define CORPUSCOPE_REPORT_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corpuscope/corpus.hpp"
#include "corpuscope/evaluation.hpp"

namespace corpuscope {

enum class ReportFormat { csv, json };

ReportFormat parse_report_format(std::string_view text);

// Options shared by the report subcommands; unused fields are ignored.
struct ReportOptions {
    ReportFormat format = ReportFormat::csv;
    // When set, corpora are reduced to rule-unambiguous posts before any
    // computation. Classification reports always resolve labels, using this
    // rule or the unanimous default.
    std::optional<AmbiguityRule> filter_rule;
    std::filesystem::path stopwords_path;  // empty: built-in English list
    std::vector<std::filesystem::path> lexicon_paths;
    std::uint64_t mid_threshold = 4;
    std::uint64_t bow_min_count = 2;
    std::size_t folds = 10;
    std::uint64_t seed = 1;
    std::vector<std::string> feature_sets = {"bow"};
    std::vector<std::string> classifiers = {"mnb", "dmnb", "gnb", "svm"};
    std::string scheme = "cv-a";  // classify: a-to-b | cv-a | b-to-a | cv-b
};

// Fixed-decimal formatting, rounding half away from zero.
std::string format_fixed(double value, int decimals);

// Table 1 + Table 2 statistics for one or two corpora.
std::string report_stats(const Corpus& a, const Corpus* b, const ReportOptions& options);

// Table 3 lexical profile.
std::string report_profile(const Corpus& a, const Corpus* b, const ReportOptions& options);

// Profile diff, t-test over the five measures, divergences, author overlap.
std::string report_compare(const Corpus& a, const Corpus& b, const ReportOptions& options);

// Post-length series, descending (rank, length).
std::string report_zipf(const Corpus& a, const ReportOptions& options);

// Majority baselines under the four schemes.
std::string report_baseline(const Corpus& a, const Corpus& b, const ReportOptions& options);

// One scheme x feature set x classifier evaluation.
std::string report_classify(const Corpus& a, const Corpus* b, const ReportOptions& options);

// Full 2x2 protocol with the significance battery.
std::string report_protocol(const Corpus& a, const Corpus& b, const ReportOptions& options);

}  // namespace corpuscope

#endif
