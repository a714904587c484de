#include <doctest.h>

#include <map>

#include "lrm/state_oracle.hpp"
#include "lrm/states.hpp"
#include "support/oracles.hpp"

using namespace lrm;

namespace {

State state(std::vector<int> perm, std::vector<std::vector<int>> tuples) {
  const int t = static_cast<int>(perm.size()) + 1;
  std::vector<int> codes;
  for (const auto& x : tuples) codes.push_back(tuple_code(x, t));
  std::sort(codes.begin(), codes.end());
  return State{Permutation(std::move(perm)), std::move(codes)};
}

const State kState1 = state({1, 2}, {{0, 0}, {1, 1}, {1, 0}, {2, 2}, {2, 1}, {2, 0}});
const State kState2 = state({2, 1}, {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}});

}  // namespace

TEST_CASE("tuple codes order tuples lexicographically") {
  CHECK(tuple_code(std::vector{0, 0}, 3) == 0);
  CHECK(tuple_code(std::vector{1, 2}, 3) == 5);
  CHECK(tuple_from_code(5, 3) == RelationTuple{1, 2});
  CHECK(tuple_from_code(tuple_code(std::vector{3, 0, 2}, 4), 4) == RelationTuple{3, 0, 2});
}

TEST_CASE("initial states for t = 3") {
  CHECK(initial_state(std::vector{2, 2}, 3) == state({2, 1}, {{2, 2}}));
  CHECK(initial_state(std::vector{0, 0}, 3) == state({1, 2}, {{0, 0}}));
  CHECK(initial_state(std::vector{2, 0}, 3) == state({1, 2}, {{2, 0}, {2, 1}}));
  CHECK_THROWS_AS(initial_state(std::vector{2}, 3), std::invalid_argument);
  CHECK_THROWS_AS(initial_state(std::vector{2, 3}, 3), std::invalid_argument);
}

TEST_CASE("head-conditioned initial states partition the unconditioned one") {
  for (int t = 2; t <= 4; ++t) {
    for (const auto& digits : oracle::all_words(t, t - 1)) {
      std::set<Permutation> orders;
      std::vector<int> merged;
      for (const Permutation& head : all_permutations(t - 1)) {
        const State part = initial_state(digits, t, head);
        orders.insert(part.perm);
        merged.insert(merged.end(), part.tuples.begin(), part.tuples.end());
      }
      if (orders.size() > 1) {
        CHECK_THROWS_AS(initial_state(digits, t), std::domain_error);
        continue;
      }
      const State all = initial_state(digits, t);
      CHECK(all.perm == *orders.begin());
      std::sort(merged.begin(), merged.end());
      merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
      CHECK(merged == all.tuples);
    }
  }
}

TEST_CASE("successor reproduces the complete-state transition table") {
  CHECK(successor(kState1, 0) == kState1);
  CHECK(successor(kState1, 1) == kState2);
  CHECK(successor(kState1, 2) == kState2);
  CHECK(successor(kState2, 0) == kState1);
  CHECK(successor(kState2, 1) == kState1);
  CHECK(successor(kState2, 2) == kState2);
  const State rising = state({2, 1}, {{2, 2}});
  CHECK(successor(rising, 2) == rising);
  CHECK_THROWS_AS(successor(rising, 3), std::invalid_argument);
}

TEST_CASE("chained successors equal the exhaustive oracle") {
  // t = 3 up to 7 digits (9 cells), t = 4 up to 5 digits (8 cells).
  for (auto [t, max_len] : {std::pair{2, 8}, std::pair{3, 7}, std::pair{4, 5}}) {
    for (int len = t - 1; len <= max_len; ++len) {
      const StateOracleTable table = state_oracle_table(len, t);
      const auto prefixes = oracle::all_words(t, len);
      for (std::size_t code = 0; code < prefixes.size(); ++code) {
        if (table.unconditioned[code]) {
          CHECK(run_chain(prefixes[code], t) == *table.unconditioned[code]);
        } else {
          CHECK_THROWS_AS(run_chain(prefixes[code], t), std::domain_error);
        }
        for (const Permutation& head : all_permutations(t - 1)) {
          CHECK(run_chain(prefixes[code], t, head) == table.by_head[head.lex_index()][code]);
        }
      }
    }
  }
}

TEST_CASE("state_oracle single-prefix form") {
  CHECK(state_oracle(std::vector{2, 2}, 3) == state({2, 1}, {{2, 2}}));
  CHECK(state_oracle(std::vector{2, 0, 1, 1}, 3) == kState1);
  CHECK(state_oracle(std::vector{2, 2}, 3, Permutation({1, 2})) == state({2, 1}, {{2, 2}}));
  CHECK_THROWS_AS(state_oracle(std::vector{0}, 3), std::invalid_argument);
  // The order of cells 2 and 3 follows the head order.
  CHECK_THROWS_AS(state_oracle(std::vector{1, 1}, 3), std::domain_error);
  CHECK(state_oracle(std::vector{1, 1}, 3, Permutation({1, 2})).perm == Permutation({1, 2}));
  CHECK(state_oracle(std::vector{1, 1}, 3, Permutation({2, 1})).perm == Permutation({2, 1}));
  CHECK(state_oracle(std::vector{1, 1, 2}, 3) == run_chain(std::vector{1, 1, 2}, 3));
  CHECK_THROWS(state_oracle(std::vector<int>(10, 0), 3));
}

TEST_CASE("complete states") {
  const auto t3 = complete_states(3);
  REQUIRE(t3.size() == 2);
  CHECK(t3[0] == kState1);
  CHECK(t3[1] == kState2);
  CHECK(is_complete(kState1));
  CHECK_FALSE(is_complete(state({2, 1}, {{2, 2}})));

  CHECK(complete_states(4).size() == 6);
  for (const State& s : complete_states(4)) CHECK(s.tuples.size() == 20);
  const auto t2 = complete_states(2);
  REQUIRE(t2.size() == 1);
  CHECK(t2[0] == state({1}, {{0}, {1}}));

  // Closed form against direct counting of monotone tuples.
  for (int t = 2; t <= 6; ++t) {
    CHECK(monotone_tuple_codes(Permutation::identity(t - 1)).size() == complete_tuple_count(t));
  }
}

TEST_CASE("complete states are closed under successor and mutually reachable") {
  for (int t = 2; t <= 5; ++t) {
    const auto complete = complete_states(t);
    std::map<Permutation, std::set<Permutation>> edges;
    for (const State& s : complete) {
      for (int d = 0; d < t; ++d) {
        const State next = successor(s, d);
        CHECK(is_complete(next));
        edges[s.perm].insert(next.perm);
      }
    }
    for (const State& from : complete) {
      std::set<Permutation> seen{from.perm};
      std::vector<Permutation> stack{from.perm};
      while (!stack.empty()) {
        const Permutation p = stack.back();
        stack.pop_back();
        for (const Permutation& q : edges[p]) {
          if (seen.insert(q).second) stack.push_back(q);
        }
      }
      CHECK(seen.size() == complete.size());
    }
  }
}

TEST_CASE("reachable states never lose every tuple") {
  for (int t = 2; t <= 4; ++t) {
    for (const State& s : reachable_states(t)) {
      CHECK_FALSE(s.tuples.empty());
      for (const RelationTuple& x : s.relation_tuples()) CHECK(is_monotone(s.perm, x));
    }
  }
}

TEST_CASE("wrap digits and the t = 3 tail table") {
  const TailTable table = tail_table(3);
  REQUIRE(table.rows.size() == 2);
  REQUIRE(table.heads.size() == 2);
  CHECK(table.count(0, 0) == 5);
  CHECK(table.count(0, 1) == 4);
  CHECK(table.count(1, 0) == 4);
  CHECK(table.count(1, 1) == 5);
  CHECK(table.tails[0][0] == std::set<Digits>{{2, 1}, {2, 0}, {1, 1}, {1, 0}, {0, 0}});
  CHECK_THROWS_AS(wrap_digits(Permutation({1, 2}), Permutation({1, 2}), std::vector{0, 2}),
                  std::invalid_argument);
}

TEST_CASE("tail tables partition all t^(t-1) tails") {
  // Frozen from a brute-force merge of every head/tail ordering.
  const std::vector<std::vector<std::size_t>> t4_counts{
      {14, 12, 11, 9, 10, 8}, {11, 13, 9, 9, 12, 10}, {12, 11, 13, 10, 9, 9},
      {10, 9, 12, 13, 9, 11}, {9, 10, 9, 11, 13, 12}, {8, 9, 10, 12, 11, 14}};
  for (int t = 2; t <= 5; ++t) {
    const TailTable table = tail_table(t);
    std::size_t full = 1;
    for (int i = 0; i < t - 1; ++i) full *= static_cast<std::size_t>(t);
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      std::set<Digits> all;
      std::size_t row = 0;
      for (std::size_t c = 0; c < table.heads.size(); ++c) {
        row += table.count(r, c);
        all.insert(table.tails[r][c].begin(), table.tails[r][c].end());
        if (t == 4) CHECK(table.count(r, c) == t4_counts[r][c]);
      }
      CHECK(row == full);
      CHECK(all.size() == full);
    }
    for (std::size_t c = 0; c < table.heads.size(); ++c) {
      std::size_t column = 0;
      for (std::size_t r = 0; r < table.rows.size(); ++r) column += table.count(r, c);
      CHECK(column == full);
    }
  }
}

TEST_CASE("forcing patterns") {
  const ForcingResult t3_result = pattern_forces_complete(std::vector{2, 0, 1, 1}, 3);
  CHECK(t3_result.forces);
  REQUIRE(t3_result.landing);
  CHECK(*t3_result.landing == kState1);
  CHECK(pattern_forces_complete(std::vector{3, 3, 0, 1, 2, 1}, 4).forces);
  CHECK_FALSE(pattern_forces_complete(std::vector{0, 1, 1}, 3).forces);
  CHECK_THROWS_AS(pattern_forces_complete(std::vector{0, 1}, 3), std::invalid_argument);
}

TEST_CASE("a forcing pattern also completes when it starts the word") {
  // Placements overlapping the first t-1 digits are not covered by the
  // reachable-state closure; check them from every possible lead-in.
  for (auto [t, pattern] : {std::pair{3, Digits{2, 0, 1, 1}}, std::pair{4, Digits{3, 3, 0, 1, 2, 1}}}) {
    for (int lead = 0; lead < t - 1; ++lead) {
      for (const auto& before : oracle::all_words(t, lead)) {
        Digits digits = before;
        digits.insert(digits.end(), pattern.begin(), pattern.end());
        for (const Permutation& head : all_permutations(t - 1)) CHECK(is_complete(run_chain(digits, t, head)));
      }
    }
  }
}

TEST_CASE("completing-pattern search") {
  CHECK(find_completing_patterns(3, 3).empty());
  const auto t3 = find_completing_patterns(3, 4);
  CHECK(std::find(t3.begin(), t3.end(), Digits{2, 0, 1, 1}) != t3.end());
  CHECK(std::find(t3.begin(), t3.end(), Digits{0, 1, 1}) == t3.end());
  // Independent bounded-context brute force finds 12 forcing patterns of length 4.
  CHECK(t3.size() == 12);
  for (const Digits& p : t3) CHECK(pattern_forces_complete(p, 3).forces);

  const auto t4 = find_completing_patterns(4, 6);
  CHECK(std::find(t4.begin(), t4.end(), Digits{3, 3, 0, 1, 2, 1}) != t4.end());
  CHECK_THROWS_AS(find_completing_patterns(5, 5), std::domain_error);
  CHECK_THROWS_AS(find_completing_patterns(3, 9), std::domain_error);
}

TEST_CASE("state rendering") {
  CHECK(to_string(state({2, 1}, {{2, 2}})) == "([2,1], {(2,2)})");
  CHECK(to_string(kState1) == "([1,2], {(0,0),(1,0),(1,1),(2,0),(2,1),(2,2)})");
}
