#include "corpuscope/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <unordered_set>

#include <json.hpp>

#include "corpuscope/error.hpp"

namespace corpuscope {

namespace {

const char* kLabelNames[kLabelCount] = {"confusion", "encouragement", "gratitude", "facts"};

bool line_is_blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(),
                       [](unsigned char c) { return c == ' ' || c == '\t' || c == '\r'; });
}

std::string require_string(const nlohmann::json& obj, const char* key, std::size_t line_no) {
    const auto it = obj.find(key);
    if (it == obj.end() || !it->is_string()) {
        fail(ErrorCode::parse,
             "line " + std::to_string(line_no) + ": missing or non-string field \"" + key + "\"");
    }
    return it->get<std::string>();
}

// Label agreed on by the annotations under the rule, or nullopt if ambiguous.
std::optional<SentimentLabel> resolve_annotations(const std::vector<SentimentLabel>& annotations,
                                                  AmbiguityRule rule) {
    if (rule == AmbiguityRule::unanimous) {
        for (const SentimentLabel a : annotations) {
            if (a != annotations.front()) return std::nullopt;
        }
        return annotations.front();
    }
    std::size_t counts[kLabelCount] = {0, 0, 0, 0};
    for (const SentimentLabel a : annotations) ++counts[static_cast<std::size_t>(a)];
    for (std::size_t i = 0; i < kLabelCount; ++i) {
        if (2 * counts[i] > annotations.size()) return static_cast<SentimentLabel>(i);
    }
    return std::nullopt;
}

enum class PostResolution { agreed, ambiguous, unlabeled };

PostResolution resolve_post(const Post& post, AmbiguityRule rule, SentimentLabel& out) {
    if (post.annotations && !post.annotations->empty()) {
        if (const auto resolved = resolve_annotations(*post.annotations, rule)) {
            out = *resolved;
            return PostResolution::agreed;
        }
        return PostResolution::ambiguous;
    }
    if (post.label) {
        out = *post.label;
        return PostResolution::agreed;
    }
    return PostResolution::unlabeled;
}

}  // namespace

SentimentLabel parse_label(std::string_view text) {
    for (std::size_t i = 0; i < kLabelCount; ++i) {
        if (text == kLabelNames[i]) return static_cast<SentimentLabel>(i);
    }
    fail(ErrorCode::data, "unknown sentiment label \"" + std::string(text) + "\"");
}

std::string_view label_name(SentimentLabel label) {
    return kLabelNames[static_cast<std::size_t>(label)];
}

const std::vector<SentimentLabel>& all_labels() {
    static const std::vector<SentimentLabel> labels = {
        SentimentLabel::confusion, SentimentLabel::encouragement, SentimentLabel::gratitude,
        SentimentLabel::facts};
    return labels;
}

AmbiguityRule parse_ambiguity_rule(std::string_view text) {
    if (text == "unanimous") return AmbiguityRule::unanimous;
    if (text == "strict-majority") return AmbiguityRule::strict_majority;
    fail(ErrorCode::invalid_argument, "unknown ambiguity rule \"" + std::string(text) + "\"");
}

std::string_view ambiguity_rule_name(AmbiguityRule rule) {
    return rule == AmbiguityRule::unanimous ? "unanimous" : "strict-majority";
}

std::string file_digest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::io, "cannot open " + path.string());
    std::uint64_t hash = 0xcbf29ce484222325ull;
    char buffer[4096];
    while (in.read(buffer, sizeof buffer) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            hash ^= static_cast<unsigned char>(buffer[i]);
            hash *= 0x100000001b3ull;
        }
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(hash));
    return hex;
}

Corpus load_corpus(const std::filesystem::path& path, std::string name) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::io, "cannot open " + path.string());

    Corpus corpus;
    corpus.name = std::move(name);

    std::unordered_set<std::string> seen_ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line_is_blank(line)) continue;

        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            fail(ErrorCode::parse,
                 path.string() + ": line " + std::to_string(line_no) + ": " + e.what());
        }
        if (!obj.is_object()) {
            fail(ErrorCode::parse,
                 path.string() + ": line " + std::to_string(line_no) + ": not a JSON object");
        }

        Post post;
        try {
            post.id = require_string(obj, "id", line_no);
            post.author_id = require_string(obj, "author", line_no);
            post.topic_id = require_string(obj, "topic", line_no);
            post.text = require_string(obj, "text", line_no);
            if (const auto it = obj.find("label"); it != obj.end() && !it->is_null()) {
                if (!it->is_string()) {
                    fail(ErrorCode::parse, "line " + std::to_string(line_no) + ": label must be a string");
                }
                post.label = parse_label(it->get<std::string>());
            }
            if (const auto it = obj.find("annotations"); it != obj.end() && !it->is_null()) {
                if (!it->is_array()) {
                    fail(ErrorCode::parse,
                         "line " + std::to_string(line_no) + ": annotations must be an array");
                }
                std::vector<SentimentLabel> annotations;
                for (const auto& entry : *it) {
                    if (!entry.is_string()) {
                        fail(ErrorCode::parse,
                             "line " + std::to_string(line_no) + ": annotation must be a string");
                    }
                    annotations.push_back(parse_label(entry.get<std::string>()));
                }
                post.annotations = std::move(annotations);
            }
        } catch (const Error& e) {
            // prepend the file for downstream "file and line" diagnostics
            fail(e.code(), path.string() + ": " + e.what());
        }

        if (post.id.empty()) {
            fail(ErrorCode::data, path.string() + ": line " + std::to_string(line_no) + ": empty post id");
        }
        if (!seen_ids.insert(post.id).second) {
            fail(ErrorCode::data, path.string() + ": line " + std::to_string(line_no) +
                                      ": duplicate post id \"" + post.id + "\"");
        }
        corpus.posts.push_back(std::move(post));
    }

    if (corpus.posts.empty()) fail(ErrorCode::data, path.string() + ": empty corpus");
    corpus.source = path.filename().string() + "#" + file_digest(path);
    return corpus;
}

Corpus filter_unambiguous(const Corpus& corpus, AmbiguityRule rule) {
    Corpus out;
    out.name = corpus.name;
    out.source = corpus.source + "|" + std::string(ambiguity_rule_name(rule));
    for (const Post& post : corpus.posts) {
        SentimentLabel label;
        switch (resolve_post(post, rule, label)) {
            case PostResolution::agreed: {
                Post kept = post;
                kept.label = label;
                out.posts.push_back(std::move(kept));
                break;
            }
            case PostResolution::ambiguous:
                break;
            case PostResolution::unlabeled:
                fail(ErrorCode::data,
                     "post \"" + post.id + "\" has neither label nor annotations");
        }
    }
    return out;
}

CorpusSummary corpus_summary(const Corpus& corpus, AmbiguityRule rule) {
    if (corpus.posts.empty()) fail(ErrorCode::invalid_argument, "empty corpus");

    std::set<std::string> authors;
    std::set<std::string> topics;
    CorpusSummary summary;
    summary.posts = corpus.posts.size();
    for (const Post& post : corpus.posts) {
        authors.insert(post.author_id);
        topics.insert(post.topic_id);
        // unlabeled posts carry no disagreement, so they count as unambiguous
        SentimentLabel label;
        if (resolve_post(post, rule, label) == PostResolution::ambiguous) {
            ++summary.ambiguous;
        } else {
            ++summary.unambiguous;
        }
    }
    summary.authors = authors.size();
    summary.topics = topics.size();
    summary.posts_per_topic = static_cast<double>(summary.posts) / static_cast<double>(summary.topics);
    summary.posts_per_author =
        static_cast<double>(summary.posts) / static_cast<double>(summary.authors);
    return summary;
}

std::size_t author_overlap(const Corpus& a, const Corpus& b) {
    std::set<std::string> authors_a;
    for (const Post& post : a.posts) authors_a.insert(post.author_id);
    std::set<std::string> authors_b;
    for (const Post& post : b.posts) authors_b.insert(post.author_id);
    std::size_t overlap = 0;
    for (const std::string& author : authors_a) overlap += authors_b.count(author);
    return overlap;
}

}  // namespace corpuscope
