#include <doctest.h>

#include <random>

#include "lrm/codec.hpp"
#include "support/oracles.hpp"

using namespace lrm;

namespace {

Codeword word(int t, std::vector<int> digits) { return Codeword{t, std::move(digits)}; }
BaseWord base(int t, std::vector<int> symbols) { return BaseWord{t, std::move(symbols)}; }

// Realizable base-words behind g, found by trying every head order and
// checking the constraint graph; independent of the state chain.
std::vector<BaseWord> decode_by_graph(const Codeword& g) {
  std::vector<BaseWord> out;
  for (const Permutation& head : all_permutations(g.t - 1)) {
    auto b = propagate_base_word(g, head);
    if (b && realizable(*b).realizable) out.push_back(*b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("demodulate reads one symbol per cyclic window") {
  const ChargeProfile p{{3, 5, 2, 7, 10}};
  CHECK(demodulate(p, 3) == base(3, {3, 4, 6, 3, 2}));
  CHECK(demodulate(ChargeProfile{{0, 1, 2, 3, 4}}, 3) == base(3, {6, 6, 6, 3, 2}));
  // t = 2 symbols are [1,2] -> 1 and [2,1] -> 2; the codeword is the ascent indicator.
  CHECK(demodulate(p, 2) == base(2, {2, 1, 2, 2, 1}));
  CHECK(encode(demodulate(p, 2)) == word(2, {1, 0, 1, 1, 0}));
  CHECK_THROWS_AS(demodulate(ChargeProfile{{1, 2, 1, 3}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(demodulate(ChargeProfile{{1, 2}}, 3), std::invalid_argument);
}

TEST_CASE("encode applies the window digit rule") {
  CHECK(encode(base(3, {3, 4, 6, 3, 2})) == word(3, {0, 2, 2, 0, 1}));
  CHECK(encode(base(3, {6, 6, 6, 3, 2})) == word(3, {2, 2, 2, 0, 1}));
  for (int n = 3; n <= 8; ++n) {
    CHECK(encode(base(3, std::vector<int>(n, 1))) == word(3, std::vector<int>(n, 0)));
  }
  // s1 = [1,2,3] cannot follow s2 = [1,3,2]: they disagree on the shared cells.
  CHECK_FALSE(is_consistent(base(3, {2, 1, 1, 1})));
  CHECK_THROWS_AS(encode(base(3, {2, 1, 1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(encode(base(3, {1, 7, 1})), std::out_of_range);
}

TEST_CASE("encode agrees with the t = 3 encoding key") {
  const SymbolTable& table = symbol_table(3);
  const std::vector<int> odd_row{1, 2, 4};
  const std::vector<int> even_row{3, 5, 6};
  for (int prev = 1; prev <= 6; ++prev) {
    for (int g = 0; g < 3; ++g) {
      const int next = (prev % 2 == 1 ? odd_row : even_row)[g];
      CHECK(window_digit(table.permutation(next)) == g);
      CHECK(table.successors(prev)[g] == next);
    }
  }
}

TEST_CASE("realizable detects cyclic contradictions") {
  CHECK_FALSE(realizable(base(3, {1, 1, 1, 1, 1})).realizable);
  CHECK_FALSE(realizable(base(3, {6, 6, 6, 6})).realizable);
  CHECK_FALSE(realizable(base(3, {2, 5, 2, 5})).realizable);
  CHECK_FALSE(realizable(base(3, {2, 5, 2, 5, 2, 5})).realizable);

  const Realization r = realizable(base(3, {3, 4, 6, 3, 2}));
  REQUIRE(r.realizable);
  REQUIRE(r.witness);
  CHECK(demodulate(*r.witness, 3) == base(3, {3, 4, 6, 3, 2}));
  CHECK(*std::min_element(r.witness->levels.begin(), r.witness->levels.end()) == 0);
}

TEST_CASE("realizable witnesses reproduce the base-word") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int t = 2 + trial % 4;
    const int n = t + trial % 6;
    const BaseWord b = demodulate(ChargeProfile{oracle::random_distinct_levels(n, rng)}, t);
    const Realization r = realizable(b);
    REQUIRE(r.realizable);
    CHECK(demodulate(*r.witness, t) == b);
    // Longest-path levels never exceed n-1.
    CHECK(*std::max_element(r.witness->levels.begin(), r.witness->levels.end()) < n);
  }
}

TEST_CASE("decode3 inverts the encoding key") {
  CHECK(decode3(word(3, {2, 2, 2, 0, 1})) == base(3, {6, 6, 6, 3, 2}));
  CHECK(decode3(word(3, {0, 2, 2, 0, 1})) == base(3, {3, 4, 6, 3, 2}));
  for (int n = 3; n <= 9; ++n) {
    CHECK_FALSE(decode3(word(3, std::vector<int>(n, 0))));
    CHECK_FALSE(decode3(word(3, std::vector<int>(n, 1))));
  }
  CHECK_THROWS_AS(decode3(word(4, {0, 1, 2, 3})), std::invalid_argument);
}

TEST_CASE("decode3 round-trips every ranking (t = 3, n <= 7)") {
  for (int n = 3; n <= 7; ++n) {
    ChargeProfile p{std::vector<Level>(n)};
    std::iota(p.levels.begin(), p.levels.end(), 0);
    do {
      const BaseWord b = demodulate(p, 3);
      CHECK(decode3(encode(b)) == b);
    } while (std::next_permutation(p.levels.begin(), p.levels.end()));
  }
}

TEST_CASE("decode_general matches decode3 for t = 3") {
  for (int n = 4; n <= 7; ++n) {
    for (const auto& digits : oracle::all_words(3, n)) {
      const Codeword g = word(3, digits);
      const auto unique = decode3(g);
      const auto all = decode_general(g);
      if (unique) {
        REQUIRE(all.size() == 1);
        CHECK(all.front() == *unique);
      } else {
        CHECK(all.empty());
      }
    }
  }
  CHECK(decode_general(word(3, {1, 1, 1, 1, 1, 1})).empty());
}

TEST_CASE("decode_general state chain agrees with the constraint-graph route") {
  for (int t = 2; t <= 4; ++t) {
    for (int n = t; n <= t + 4; ++n) {
      for (const auto& digits : oracle::all_words(t, n)) {
        const Codeword g = word(t, digits);
        CHECK(decode_general(g) == decode_by_graph(g));
      }
    }
  }
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 8 + trial % 3;
    Codeword g{5, std::vector<int>(n)};
    for (int& d : g.digits) d = static_cast<int>(rng() % 5);
    if (trial % 2 == 0) g = encode(demodulate(ChargeProfile{oracle::random_distinct_levels(n, rng)}, 5));
    CHECK(decode_general(g) == decode_by_graph(g));
  }
}

TEST_CASE("decode_general contains the base-word of every profile") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int t = 2 + trial % 5;
    const int n = 2 * t - 2 + trial % 4;
    if (n < t) continue;
    const BaseWord b = demodulate(ChargeProfile{oracle::random_distinct_levels(n, rng)}, t);
    const auto decoded = decode_general(encode(b));
    CHECK(std::find(decoded.begin(), decoded.end(), b) != decoded.end());
  }
}

TEST_CASE("is_legal known verdicts") {
  CHECK_FALSE(is_legal(word(3, {1, 1, 1, 1, 1})));
  CHECK_FALSE(is_legal(word(3, {0, 0, 0, 0, 0})));
  CHECK(is_legal(word(3, {0, 2, 2, 0, 1})));
  CHECK(is_legal(word(3, {2, 2, 2, 0, 1})));
  // n < 2t-2 falls back to rankings.
  CHECK(is_legal(word(3, {0, 1, 2})));
  CHECK_FALSE(is_legal(word(3, {2, 2, 1})));
  CHECK_FALSE(is_legal(word(3, {1, 1, 1})));
  CHECK_THROWS_AS(is_legal(word(3, {0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(is_legal(word(3, {0, 3, 1})), std::invalid_argument);
}

TEST_CASE("is_legal agrees with the ranking oracle") {
  const std::vector<std::pair<int, int>> cases{{2, 2}, {2, 5}, {2, 8}, {3, 3}, {3, 4},
                                               {3, 6}, {3, 8}, {4, 4}, {4, 5}, {4, 7}};
  for (auto [t, n] : cases) {
    const auto images = oracle::ranking_codewords(t, n);
    for (const auto& digits : oracle::all_words(t, n)) {
      CHECK(is_legal(word(t, digits)) == (images.count(digits) == 1));
    }
  }
}

TEST_CASE("t = 2 legal codewords are all words but 0^n and 1^n") {
  for (int n = 2; n <= 10; ++n) {
    int legal = 0;
    for (const auto& digits : oracle::all_words(2, n)) {
      const bool constant = std::all_of(digits.begin(), digits.end(), [&](int d) { return d == digits[0]; });
      const bool verdict = is_legal(word(2, digits));
      CHECK(verdict == !constant);
      legal += verdict ? 1 : 0;
    }
    CHECK(legal == (1 << n) - 2);
  }
}

TEST_CASE("propagate_base_word fixes the head order") {
  const auto b = propagate_base_word(word(3, {2, 2, 2, 0, 1}), Permutation({2, 1}));
  REQUIRE(b);
  CHECK(*b == base(3, {6, 6, 6, 3, 2}));
  // The other head order yields nothing realizable.
  const auto other = propagate_base_word(word(3, {2, 2, 2, 0, 1}), Permutation({1, 2}));
  CHECK((!other || !realizable(*other).realizable));
}
