#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "shp/core.hpp"

using namespace shp;

namespace {
constexpr auto P = Polarity::positive;
constexpr auto M = Polarity::negative;
}  // namespace

TEST_CASE("parse_word") {
  SUBCASE("plain tokens") {
    auto w = parse_word("2+ 1-", 2);
    REQUIRE(w.size() == 2);
    CHECK(w[0] == Letter{2, P});
    CHECK(w[1] == Letter{1, M});
    CHECK(w.arity() == 2);
  }
  SUBCASE("empty text") {
    auto w = parse_word("", 3);
    CHECK(w.empty());
    CHECK(w.arity() == 3);
    CHECK(parse_word("  \t ", 3).empty());
  }
  SUBCASE("multi-digit values") {
    auto w = parse_word("10+ 0-", 10);
    REQUIRE(w.size() == 2);
    CHECK(w[0] == Letter{10, P});
    CHECK(w[1] == Letter{0, M});
  }
  SUBCASE("commas and mixed blanks") {
    CHECK(parse_word("2+,1-,  0+", 2) == parse_word("2+ 1- 0+", 2));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_word("3+", 2), ParseError);
    CHECK_THROWS_AS(parse_word("2", 2), ParseError);
    CHECK_THROWS_AS(parse_word("+", 2), ParseError);
    CHECK_THROWS_AS(parse_word("x+", 2), ParseError);
    CHECK_THROWS_AS(parse_word("2*", 2), ParseError);
    CHECK_THROWS_AS(parse_word("-1+", 2), ParseError);
    CHECK_THROWS_AS(parse_word("99999999999+", 2), ParseError);
  }
}

TEST_CASE("format_word") {
  CHECK(format_word(Word(2, {{2, P}, {1, M}})) == "2+ 1-");
  CHECK(format_word(Word(2)) == "");
  CHECK(format_word(Word(2, {{0, M}})) == "0-");
}

TEST_CASE("format/parse round trip normalizes and is then a fixed point") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 12);
    std::string text;
    const auto len = rng() % 8;
    for (std::size_t i = 0; i < len; ++i) {
      text += std::to_string(rng() % (k + 1));
      text += (rng() & 1) ? '+' : '-';
      text += (rng() % 3 == 0) ? ", " : (rng() & 1 ? "  " : "\t");
    }
    const auto once = format_word(parse_word(text, k));
    CHECK(format_word(parse_word(once, k)) == once);
    CHECK(parse_word(once, k) == parse_word(text, k));
  }
}

TEST_CASE("words of different arity do not mix") {
  CHECK_THROWS_AS((void)(Word(2) == Word(3)), ArityMismatch);
  CHECK_THROWS_AS((void)(Word(2) < Word(3)), ArityMismatch);
  CHECK_THROWS_AS(Word(2, {{3, P}}), std::invalid_argument);
  CHECK_THROWS_AS(Word(0), std::invalid_argument);
}

TEST_CASE("counts") {
  auto c = counts(parse_word("2+ 1-", 2));
  CHECK(c.count(2, P) == 1);
  CHECK(c.count(1, M) == 1);
  CHECK(c.count(2, M) == 0);
  CHECK(c.count(0, P) == 0);
  CHECK(c.total() == 2);

  CHECK(counts(Word(2)).total() == 0);
  CHECK(counts(parse_word("2+ 2+", 2)).count(2, P) == 2);
  CHECK(counts(parse_word("2+ 2-", 2)).count(2) == 2);
}

TEST_CASE("lambda values") {
  CHECK(lambda_plus(parse_word("2+", 2)) == 1);
  CHECK(lambda_plus(parse_word("2+ 1-", 2)) == 0);
  CHECK(lambda_plus(parse_word("2+ 0-", 2)) == -1);
  CHECK(lambda_minus(parse_word("2- 1+", 2)) == 0);
  CHECK(lambda_minus(parse_word("2+ 1-", 2)) == 1);
  CHECK(lambda_plus(Word(3)) == 0);
}

TEST_CASE("lambda matches idle insertions of every history") {
  // Survivor reading: lambda(+) counts positive insertions that killed nothing.
  for (int k = 1; k <= 3; ++k) {
    for (std::size_t n = 0; n <= 4; ++n) {
      oracle::for_each_history(k, n, [&](const oracle::HistoryOutcome& h) {
        REQUIRE(lambda_plus(h.word) == h.idle_plus);
        REQUIRE(lambda_minus(h.word) == h.idle_minus);
      });
    }
  }
}

TEST_CASE("lambda depends on the Parikh vector only") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 4);
    std::vector<Letter> letters;
    for (auto len = rng() % 9; len > 0; --len) {
      letters.push_back({static_cast<int>(rng() % (k + 1)), (rng() & 1) ? P : M});
    }
    auto shuffled = letters;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const Word a(k, letters), b(k, shuffled);
    CHECK(lambda_plus(a) == lambda_plus(b));
    CHECK(lambda_minus(a) == lambda_minus(b));
  }
}

TEST_CASE("for_each_word covers the alphabet in order") {
  std::vector<Word> seen;
  for_each_word(1, 2, [&](const Word& w) {
    seen.push_back(w);
    return true;
  });
  CHECK(seen.size() == 16);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  int empty = 0;
  for_each_word(3, 0, [&](const Word& w) {
    empty += w.empty();
    return true;
  });
  CHECK(empty == 1);
}

TEST_CASE("signed permutation parsing") {
  auto p = parse_signed_permutation("1,8,15", "-,+,-");
  CHECK(p.size() == 3);
  CHECK(p.value(2) == 15);
  CHECK(p.sign(1) == P);
  CHECK(format_values(p.values()) == "1,8,15");
  CHECK(format_signs(p.signs()) == "-,+,-");

  CHECK(parse_signed_permutation("", "").size() == 0);
  CHECK_THROWS_AS(parse_signed_permutation("1,2", "+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_signed_permutation("1,1", "+,-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_signed_permutation("1,,2", "+,-,+"), ParseError);
  CHECK_THROWS_AS(parse_signed_permutation("1,a", "+,-"), ParseError);
  CHECK_THROWS_AS(parse_signed_permutation("1,2", "+,x"), ParseError);
}
