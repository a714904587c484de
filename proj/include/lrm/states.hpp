#ifndef LRM_STATES_HPP
#define LRM_STATES_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lrm/permutation.hpp"

namespace lrm {

using Digits = std::vector<int>;

/// Entry j counts the head cells (the first t-1 cells) lying strictly below
/// tracked cell j.
using RelationTuple = std::vector<int>;

/// Tuples are stored as base-t codes with the first entry most significant,
/// so numeric order of codes is lexicographic order of tuples.
int tuple_code(std::span<const int> tuple, int t);
RelationTuple tuple_from_code(int code, int t);

/// Order of the last t-1 cells read so far (label 1 = oldest) together with
/// every relation tuple those cells can have against the head cells.
struct State {
  Permutation perm;
  std::vector<int> tuples;  // sorted, unique codes

  int t() const { return perm.size() + 1; }
  std::vector<RelationTuple> relation_tuples() const;

  auto operator<=>(const State&) const = default;
};

std::string to_string(const State& s);

/// Number of tuples that respect a fixed order of t-1 cells: C(2t-2, t-1).
std::uint64_t complete_tuple_count(int t);

bool is_monotone(const Permutation& perm, std::span<const int> tuple);
std::vector<int> monotone_tuple_codes(const Permutation& perm);

/// State after the first t-1 digits, optionally with the head cells fixed
/// to the order `head`. Exact (computed by enumeration, cached per t).
/// Throws std::domain_error when, without `head`, the digits leave the
/// order of the last cells open.
State initial_state(std::span<const int> digits, int t,
                    const std::optional<Permutation>& head = std::nullopt);

/// Consumes one more digit: the new cell enters the window at rank `digit`.
State successor(const State& s, int digit);

/// initial_state on digits[0..t-2] followed by successor on the rest.
/// Without `head` this is the union over head orders, and throws
/// std::domain_error when they disagree on the order of the last cells.
State run_chain(std::span<const int> digits, int t,
                const std::optional<Permutation>& head = std::nullopt);

bool is_complete(const State& s);

/// One complete state per order of the last t-1 cells, in lexicographic
/// order of that order; for t = 3 these are state 1 ([1,2]) and state 2.
std::vector<State> complete_states(int t);

/// Digits g_{n-t+1}..g_{n-1} produced when the tail cells (order `tail`,
/// relations `tuple`) wrap around onto head cells ordered by `head`.
Digits wrap_digits(const Permutation& head, const Permutation& tail,
                   std::span<const int> tuple);

/// For every complete state (row) and head order (column), the distinct
/// wrap-digit tails that state can produce.
struct TailTable {
  int t = 0;
  std::vector<State> rows;
  std::vector<Permutation> heads;
  std::vector<std::vector<std::set<Digits>>> tails;  // [row][column]

  std::size_t count(std::size_t row, std::size_t column) const {
    return tails[row][column].size();
  }
};

TailTable tail_table(int t);

/// Every state reachable from an initial state (any digits, any or no head
/// order) under any digit sequence.
const std::vector<State>& reachable_states(int t);

struct ForcingResult {
  bool forces = false;
  std::optional<State> landing;  // set when all reachable states land on one state
};

/// Whether reading `pattern` from any reachable state ends in a complete
/// state.
ForcingResult pattern_forces_complete(std::span<const int> pattern, int t);

/// All patterns of length t..max_len that force a complete state and whose
/// avoiding language grows strictly slower than t^m. Lexicographic by
/// (length, digits).
std::vector<Digits> find_completing_patterns(int t, int max_len);

}  // namespace lrm

#endif  // LRM_STATES_HPP
