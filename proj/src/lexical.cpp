#include "corpuscope/lexical.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "corpuscope/error.hpp"
#include "corpuscope/tokenizer.hpp"

namespace corpuscope {

namespace {
#include "stopwords_default.inc"
}

StopWordList StopWordList::default_english() {
    StopWordList list;
    for (const char* word : kDefaultStopWords) list.entries_.insert(word);
    return list;
}

StopWordList StopWordList::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::io, "cannot open " + path.string());
    StopWordList list;
    std::string line;
    while (std::getline(in, line)) list.insert_normalized(line);
    return list;
}

void StopWordList::insert_normalized(std::string_view raw) {
    for (std::string& token : tokenize_text(raw)) entries_.insert(std::move(token));
}

bool StopWordList::contains(std::string_view token) const {
    return entries_.count(std::string(token)) > 0;
}

LexicalProfile profile_from_counts(std::uint64_t n_tokens, std::uint64_t n_types,
                                   std::uint64_t v1, std::uint64_t v2, std::uint64_t v3,
                                   std::uint64_t mid_count) {
    if (n_tokens == 0 || n_types == 0) fail(ErrorCode::invalid_argument, "empty spectrum");
    const double v = static_cast<double>(n_types);
    LexicalProfile profile;
    profile.ttr = v / static_cast<double>(n_tokens);
    profile.p1 = static_cast<double>(v1) / v;
    profile.p2 = static_cast<double>(v2) / v;
    profile.p3 = static_cast<double>(v3) / v;
    profile.mid_count = mid_count;
    profile.mid_density = static_cast<double>(mid_count) / v;
    return profile;
}

LexicalProfile lexical_profile(const FrequencySpectrum& spectrum, const StopWordList& stops,
                               std::uint64_t mid_threshold) {
    if (mid_threshold < 1) fail(ErrorCode::invalid_argument, "mid threshold must be >= 1");
    const auto v_of = [&](std::uint64_t m) {
        const auto it = spectrum.types_by_count.find(m);
        return it == spectrum.types_by_count.end() ? std::uint64_t{0} : it->second;
    };
    return profile_from_counts(spectrum.tokens, spectrum.types(), v_of(1), v_of(2), v_of(3),
                               mid_m_count(spectrum, stops, mid_threshold));
}

std::uint64_t mid_m_count(const FrequencySpectrum& spectrum, const StopWordList& stops,
                          std::uint64_t threshold) {
    std::uint64_t count = 0;
    for (const auto& [type, freq] : spectrum.freq) {
        if (freq >= threshold && !stops.contains(type)) ++count;
    }
    return count;
}

std::vector<std::pair<std::string, std::uint64_t>> anchor_report(const FrequencySpectrum& spectrum,
                                                                 std::string_view anchor) {
    const auto it = spectrum.freq.find(anchor);
    if (it == spectrum.freq.end()) {
        fail(ErrorCode::invalid_argument, "anchor \"" + std::string(anchor) + "\" not in spectrum");
    }
    const std::uint64_t anchor_freq = it->second;
    std::vector<std::pair<std::string, std::uint64_t>> above;
    for (const auto& [type, freq] : spectrum.freq) {
        if (freq > anchor_freq) above.emplace_back(type, freq);
    }
    std::sort(above.begin(), above.end(), [](const auto& lhs, const auto& rhs) {
        if (lhs.second != rhs.second) return lhs.second > rhs.second;
        return lhs.first < rhs.first;
    });
    return above;
}

DivergenceReport divergences(const FrequencySpectrum& a, const FrequencySpectrum& b) {
    if (a.tokens == 0 || b.tokens == 0) fail(ErrorCode::invalid_argument, "empty spectrum");

    // union vocabulary, add-one smoothing
    std::map<std::string, std::pair<std::uint64_t, std::uint64_t>, std::less<>> joint;
    for (const auto& [type, freq] : a.freq) joint[type].first = freq;
    for (const auto& [type, freq] : b.freq) joint[type].second = freq;

    const double denom_a = static_cast<double>(a.tokens) + static_cast<double>(joint.size());
    const double denom_b = static_cast<double>(b.tokens) + static_cast<double>(joint.size());

    DivergenceReport report;
    for (const auto& [type, counts] : joint) {
        const double p = (static_cast<double>(counts.first) + 1.0) / denom_a;
        const double q = (static_cast<double>(counts.second) + 1.0) / denom_b;
        const double m = 0.5 * (p + q);
        report.kl_ab += p * std::log(p / q);
        report.kl_ba += q * std::log(q / p);
        report.cross_entropy_ab -= p * std::log(q);
        report.js += 0.5 * p * std::log(p / m) + 0.5 * q * std::log(q / m);
    }
    return report;
}

}  // namespace corpuscope
