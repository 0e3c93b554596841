#ifndef CORPUSCOPE_LEXICAL_HPP
#define CORPUSCOPE_LEXICAL_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "corpuscope/spectrum.hpp"

namespace corpuscope {

class StopWordList {
public:
    StopWordList() = default;

    // Shipped default: standard English list, pre-normalized.
    static StopWordList default_english();

    // One entry per line, UTF-8; each line is normalized by the tokenizer and
    // every resulting token becomes an entry.
    static StopWordList load(const std::filesystem::path& path);

    void insert_normalized(std::string_view raw);
    bool contains(std::string_view token) const;
    std::size_t size() const { return entries_.size(); }

private:
    std::unordered_set<std::string> entries_;
};

// The Table 3 measures for one corpus.
struct LexicalProfile {
    double ttr = 0.0;          // V/N
    double p1 = 0.0;           // V(1,N)/V
    double p2 = 0.0;           // V(2,N)/V
    double p3 = 0.0;           // V(3,N)/V
    std::uint64_t mid_count = 0;  // non-stopword types with freq >= threshold
    double mid_density = 0.0;     // mid_count/V
};

struct DivergenceReport {
    double kl_ab = 0.0;
    double kl_ba = 0.0;
    double cross_entropy_ab = 0.0;
    double js = 0.0;
};

LexicalProfile lexical_profile(const FrequencySpectrum& spectrum, const StopWordList& stops,
                               std::uint64_t mid_threshold = 4);

// Ratio arithmetic alone, for published count tables.
LexicalProfile profile_from_counts(std::uint64_t n_tokens, std::uint64_t n_types,
                                   std::uint64_t v1, std::uint64_t v2, std::uint64_t v3,
                                   std::uint64_t mid_count);

std::uint64_t mid_m_count(const FrequencySpectrum& spectrum, const StopWordList& stops,
                          std::uint64_t threshold);

// Types more frequent than the anchor, sorted by descending frequency
// (ties alphabetical). Supports the manual mid-range upper-bound inspection.
std::vector<std::pair<std::string, std::uint64_t>> anchor_report(const FrequencySpectrum& spectrum,
                                                                 std::string_view anchor);

// KL / cross-entropy / Jensen-Shannon between the two token distributions,
// add-one smoothed over the union vocabulary. Natural log.
DivergenceReport divergences(const FrequencySpectrum& a, const FrequencySpectrum& b);

}  // namespace corpuscope

#endif
