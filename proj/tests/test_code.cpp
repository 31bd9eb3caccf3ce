#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "neurotop/code.hpp"

using namespace neurotop;

namespace {

Code make_code(int n, const std::vector<std::string>& words) {
    std::vector<Codeword> parsed;
    for (const auto& w : words)
        parsed.push_back(Codeword::from_string(w));
    return Code(n, std::move(parsed));
}

// independent completion oracle: scan every word of {0,1}^n and keep those
// whose support lies under some input support
Code completion_oracle(const Code& code) {
    std::vector<Codeword> words;
    const std::uint64_t full = (std::uint64_t{1} << code.length()) - 1;
    for (std::uint64_t m = 0; m <= full; ++m) {
        bool under = false;
        for (const Codeword& w : code.words())
            if ((m & w.mask()) == m) {
                under = true;
                break;
            }
        if (under)
            words.emplace_back(m, code.length());
    }
    return Code(code.length(), std::move(words));
}

Code random_code(std::mt19937_64& rng, int n, int max_words) {
    std::uniform_int_distribution<int> count(0, max_words);
    std::uniform_int_distribution<std::uint64_t> word(0, (std::uint64_t{1} << n) - 1);
    std::vector<Codeword> words;
    const int k = count(rng);
    for (int i = 0; i < k; ++i)
        words.emplace_back(word(rng), n);
    return Code(n, std::move(words));
}

}  // namespace

TEST_CASE("codeword basics") {
    const Codeword w = Codeword::from_string("110");
    CHECK(w.length() == 3);
    CHECK(w.mask() == 0b011);
    CHECK(w.weight() == 2);
    CHECK(w.bit(1));
    CHECK(w.bit(2));
    CHECK_FALSE(w.bit(3));
    CHECK(w.support() == std::vector<int>{1, 2});
    CHECK(w.to_string() == "110");
    CHECK(Codeword(0, 3).support().empty());
}

TEST_CASE("codeword order matches string order") {
    std::vector<std::string> strings = {"000", "001", "010", "011", "100", "101", "110", "111"};
    for (std::size_t i = 0; i < strings.size(); ++i)
        for (std::size_t j = 0; j < strings.size(); ++j) {
            const bool expect = strings[i] < strings[j];
            CHECK(expect == (Codeword::from_string(strings[i]) <
                             Codeword::from_string(strings[j])));
        }
}

TEST_CASE("codeword contract errors") {
    CHECK_THROWS_AS(Codeword(0, 0), Error);
    CHECK_THROWS_AS(Codeword(0, 64), Error);
    CHECK_THROWS_AS(Codeword(0b100, 2), Error);
    CHECK_THROWS_AS(Codeword::from_string("1a0"), Error);
}

TEST_CASE("parse_code reads plain words") {
    const Code code = parse_code("110\n011\n");
    CHECK(code.length() == 3);
    CHECK(code.size() == 2);
    CHECK(code.contains(Codeword::from_string("110")));
    CHECK(code.contains(Codeword::from_string("011")));
}

TEST_CASE("parse_code skips comments and blanks, collapses duplicates") {
    const Code code = parse_code("# a comment\n\n110\n   \n110\n011\n");
    CHECK(code.size() == 2);
    CHECK(code == parse_code("110\r\n011\r\n"));  // CRLF tolerated
}

TEST_CASE("parse_code error reporting") {
    SUBCASE("mixed length") {
        try {
            parse_code("10\n110\n");
            FAIL("expected error");
        } catch (const Error& e) {
            CHECK(e.code() == errc::mixed_length);
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("bad character") {
        try {
            parse_code("1a0\n");
            FAIL("expected error");
        } catch (const Error& e) {
            CHECK(e.code() == errc::bad_character);
            CHECK(e.line() == 1);
        }
    }
    SUBCASE("empty input") {
        try {
            parse_code("# nothing\n\n");
            FAIL("expected error");
        } catch (const Error& e) {
            CHECK(e.code() == errc::empty_code);
        }
    }
    SUBCASE("line number counts blanks and comments") {
        try {
            parse_code("# header\n10\n\n1a\n");
            FAIL("expected error");
        } catch (const Error& e) {
            CHECK(e.code() == errc::bad_character);
            CHECK(e.line() == 4);
        }
    }
    SUBCASE("capacity") {
        try {
            parse_code(std::string(64, '0') + "\n");
            FAIL("expected error");
        } catch (const Error& e) {
            CHECK(e.code() == errc::capacity_exceeded);
        }
    }
}

TEST_CASE("is_simplicial examples") {
    CHECK(is_simplicial(make_code(3, {"000", "100"})));
    CHECK_FALSE(is_simplicial(make_code(3, {"110"})));

    std::vector<Codeword> cube;
    for (std::uint64_t m = 0; m < 8; ++m)
        cube.emplace_back(m, 3);
    CHECK(is_simplicial(Code(3, cube)));
}

TEST_CASE("simplicial_completion examples") {
    CHECK(simplicial_completion(make_code(3, {"110", "011"})) ==
          make_code(3, {"000", "100", "010", "001", "110", "011"}));
    CHECK(simplicial_completion(make_code(3, {"000"})) == make_code(3, {"000"}));
    CHECK(simplicial_completion(make_code(3, {"111"})).size() == 8);
}

TEST_CASE("completion agrees with the subset-scan oracle, all codes n<=3") {
    for (std::uint64_t subset = 1; subset < 256; ++subset) {
        std::vector<Codeword> words;
        for (int m = 0; m < 8; ++m)
            if ((subset >> m) & 1)
                words.emplace_back(static_cast<std::uint64_t>(m), 3);
        const Code code(3, std::move(words));
        CHECK(simplicial_completion(code) == completion_oracle(code));
    }
}

TEST_CASE("completion properties on random codes") {
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> length(1, 6);
        const Code code = random_code(rng, length(rng), 12);
        const Code completed = simplicial_completion(code);
        CAPTURE(code.render());

        // idempotence
        CHECK(simplicial_completion(completed) == completed);
        // closure characterizes completion fixpoints
        CHECK(is_simplicial(completed));
        CHECK(is_simplicial(code) == (completed == code));
        // oracle agreement
        if (!code.empty())
            CHECK(completed == completion_oracle(code));
    }
}

TEST_CASE("completion minimality, brute force n<=4") {
    // dropping a completed word breaks closure exactly when its support
    // sits strictly under another support of the completion
    std::mt19937_64 rng(77);
    auto check_one = [](const Code& code) {
        const Code completed = simplicial_completion(code);
        for (const Codeword& w : completed.words()) {
            std::vector<Codeword> rest;
            for (const Codeword& v : completed.words())
                if (!(v == w))
                    rest.push_back(v);
            if (rest.empty())
                continue;
            const Code dropped(completed.length(), rest);
            bool proper_subset = false;
            for (const Codeword& v : completed.words())
                if (v.mask() != w.mask() && (w.mask() & v.mask()) == w.mask())
                    proper_subset = true;
            CHECK(is_simplicial(dropped) == !proper_subset);
        }
    };
    for (std::uint64_t subset = 1; subset < 256; ++subset) {
        std::vector<Codeword> words;
        for (int m = 0; m < 8; ++m)
            if ((subset >> m) & 1)
                words.emplace_back(static_cast<std::uint64_t>(m), 3);
        check_one(Code(3, std::move(words)));
    }
    for (int trial = 0; trial < 100; ++trial) {
        const Code code = random_code(rng, 4, 8);
        if (!code.empty())
            check_one(code);
    }
}

TEST_CASE("render and parse round-trip") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> length(1, 8);
        const Code code = random_code(rng, length(rng), 20);
        if (code.empty())
            continue;
        CHECK(parse_code(code.render()) == code);
    }
}

TEST_CASE("render is sorted with a trailing newline") {
    CHECK(make_code(3, {"110", "000", "011"}).render() == "000\n011\n110\n");
}

TEST_CASE("completion rejects oversized supports") {
    std::vector<Codeword> words;
    words.emplace_back((std::uint64_t{1} << 30) - 1, 30);  // weight 30
    const Code code(30, std::move(words));
    CHECK_THROWS_AS(simplicial_completion(code), Error);
}
