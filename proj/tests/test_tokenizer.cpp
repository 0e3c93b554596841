#include <doctest.h>

#include <random>

#include "corpuscope/tokenizer.hpp"
#include "test_util.hpp"

using namespace corpuscope;

TEST_CASE("tokenize_text replaces non-letters and lowercases") {
    CHECK(tokenize_text("Don't stop!") == std::vector<std::string>{"don", "t", "stop"});
    CHECK(tokenize_text("").empty());
    CHECK(tokenize_text("Visit www.clinic.org 2x/day") ==
          std::vector<std::string>{"visit", "www", "clinic", "org", "x", "day"});
    CHECK(tokenize_text("   \t\n ").empty());
    CHECK(tokenize_text("123 456") == std::vector<std::string>{});
}

TEST_CASE("tokenize_text handles non-ASCII letters") {
    CHECK(tokenize_text("Café ÉCOLE") == std::vector<std::string>{"café", "école"});
    // Greek and Cyrillic lowercase
    CHECK(tokenize_text("ΑΒΓ") == std::vector<std::string>{"αβγ"});
    CHECK(tokenize_text("МИР") == std::vector<std::string>{"мир"});
    // digits, emoji and punctuation separate words
    CHECK(tokenize_text("a\U0001F600b") == std::vector<std::string>{"a", "b"});
}

TEST_CASE("tokenize_text survives malformed UTF-8") {
    std::string bad = "ab";
    bad.push_back(static_cast<char>(0xC3));  // truncated sequence
    bad += " cd";
    bad.push_back(static_cast<char>(0xFF));
    CHECK(tokenize_text(bad) == std::vector<std::string>{"ab", "cd"});
}

TEST_CASE("count_sentences splits on terminator runs") {
    CHECK(count_sentences("Hi. How are you?") == 2);
    CHECK(count_sentences("no terminator") == 1);
    CHECK(count_sentences("Wow!!! Really?! Yes.") == 3);
    CHECK(count_sentences("") == 0);
    CHECK(count_sentences(".") == 1);
    CHECK(count_sentences("a.b.") == 2);
}

TEST_CASE("tokenize_corpus preserves ids and order") {
    Corpus corpus;
    corpus.name = "c";
    corpus.posts = {{"p1", "u1", "t1", "One two. Three!", std::nullopt, std::nullopt},
                    {"p2", "u1", "t1", "", std::nullopt, std::nullopt},
                    {"p3", "u2", "t1", "Four", std::nullopt, std::nullopt}};
    const auto tokenized = tokenize_corpus(corpus);
    REQUIRE(tokenized.size() == 3);
    CHECK(tokenized[0].post_id == "p1");
    CHECK(tokenized[1].post_id == "p2");
    CHECK(tokenized[2].post_id == "p3");
    CHECK(tokenized[0].tokens == std::vector<std::string>{"one", "two", "three"});
    CHECK(tokenized[0].sentence_count == 2);
    CHECK(tokenized[1].tokens.empty());
    CHECK(tokenized[1].sentence_count == 0);
    // per-post results equal direct tokenize_text calls
    for (std::size_t i = 0; i < corpus.posts.size(); ++i) {
        CHECK(tokenized[i].tokens == tokenize_text(corpus.posts[i].text));
    }
}

TEST_CASE("tokenizer closure and idempotence on random strings") {
    std::mt19937 rng(20240811);
    for (int iter = 0; iter < 500; ++iter) {
        const std::string text = testutil::random_utf8(rng);
        const auto tokens = tokenize_text(text);
        std::string joined;
        for (const auto& token : tokens) {
            // closure: each produced token tokenizes to itself
            CHECK(tokenize_text(token) == std::vector<std::string>{token});
            if (!joined.empty()) joined += " ";
            joined += token;
        }
        // idempotence over the joined token list
        CHECK(tokenize_text(joined) == tokens);
    }
}

TEST_CASE("tokens appear in original text order") {
    const auto tokens = tokenize_text("zebra Apple; mango!");
    CHECK(tokens == std::vector<std::string>{"zebra", "apple", "mango"});
}
