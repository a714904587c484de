#include "lrm/states.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <sstream>

#include "lrm/automaton.hpp"
#include "lrm/state_oracle.hpp"

namespace lrm {
namespace {

int ipow(int base, int exp) {
  int r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

void check_digit(int d, int t) {
  if (d < 0 || d >= t) throw std::invalid_argument("digit outside 0..t-1");
}

}  // namespace

int tuple_code(std::span<const int> tuple, int t) {
  int code = 0;
  for (int x : tuple) {
    check_digit(x, t);
    code = code * t + x;
  }
  return code;
}

RelationTuple tuple_from_code(int code, int t) {
  RelationTuple tuple(t - 1);
  for (int j = t - 2; j >= 0; --j) {
    tuple[j] = code % t;
    code /= t;
  }
  return tuple;
}

std::vector<RelationTuple> State::relation_tuples() const {
  std::vector<RelationTuple> out;
  out.reserve(tuples.size());
  for (int code : tuples) out.push_back(tuple_from_code(code, t()));
  return out;
}

std::string to_string(const State& s) {
  std::ostringstream os;
  os << "([";
  for (int i = 0; i < s.perm.size(); ++i) os << (i ? "," : "") << s.perm[i];
  os << "], {";
  bool first = true;
  for (const RelationTuple& tuple : s.relation_tuples()) {
    os << (first ? "" : ",") << '(';
    for (std::size_t j = 0; j < tuple.size(); ++j) os << (j ? "," : "") << tuple[j];
    os << ')';
    first = false;
  }
  os << "})";
  return os.str();
}

std::uint64_t complete_tuple_count(int t) {
  // C(2t-2, t-1)
  std::uint64_t c = 1;
  for (int i = 1; i <= t - 1; ++i) c = c * static_cast<std::uint64_t>(t - 1 + i) / i;
  return c;
}

bool is_monotone(const Permutation& perm, std::span<const int> tuple) {
  for (int i = 1; i < perm.size(); ++i) {
    if (tuple[perm[i - 1] - 1] < tuple[perm[i] - 1]) return false;
  }
  return true;
}

std::vector<int> monotone_tuple_codes(const Permutation& perm) {
  const int t = perm.size() + 1;
  std::vector<int> out;
  for (int code = 0; code < ipow(t, t - 1); ++code) {
    if (is_monotone(perm, tuple_from_code(code, t))) out.push_back(code);
  }
  return out;
}

namespace {

struct InitialCache {
  std::once_flag once;
  StateOracleTable table;
};

const StateOracleTable& initial_table(int t) {
  static std::array<InitialCache, kMaxWindow + 1> caches;
  InitialCache& cache = caches[t];
  std::call_once(cache.once, [&] { cache.table = state_oracle_table(t - 1, t); });
  return cache.table;
}

}  // namespace

State initial_state(std::span<const int> digits, int t, const std::optional<Permutation>& head) {
  check_window_size(t);
  if (static_cast<int>(digits.size()) != t - 1) {
    throw std::invalid_argument("initial state needs exactly t-1 digits");
  }
  int code = 0;
  for (int d : digits) {
    check_digit(d, t);
    code = code * t + d;
  }
  const StateOracleTable& table = initial_table(t);
  if (!head) {
    if (!table.unconditioned[code]) throw std::domain_error("prefix leaves the order of the last cells open");
    return *table.unconditioned[code];
  }
  if (head->size() != t - 1) throw std::invalid_argument("head order must have t-1 labels");
  return table.by_head[head->lex_index()][code];
}

State successor(const State& s, int digit) {
  const int t = s.t();
  check_digit(digit, t);

  std::vector<int> window = s.perm.order();
  const int at = t - 1 - digit;
  window.insert(window.begin() + at, t);
  const int above = at > 0 ? window[at - 1] : 0;
  const int below = at + 1 < t ? window[at + 1] : 0;

  std::vector<int> order;
  order.reserve(t - 1);
  for (int label : window) {
    if (label != 1) order.push_back(label - 1);
  }

  const int keep = ipow(t, t - 2);
  std::vector<int> tuples;
  for (int code : s.tuples) {
    const RelationTuple x = tuple_from_code(code, t);
    const int lo = below ? x[below - 1] : 0;
    const int hi = above ? x[above - 1] : t - 1;
    for (int z = lo; z <= hi; ++z) tuples.push_back((code % keep) * t + z);
  }
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  return State{Permutation(std::move(order)), std::move(tuples)};
}

State run_chain(std::span<const int> digits, int t, const std::optional<Permutation>& head) {
  if (static_cast<int>(digits.size()) < t - 1) {
    throw std::invalid_argument("state chain needs at least t-1 digits");
  }
  if (head) {
    State s = initial_state(digits.first(t - 1), t, head);
    for (int d : digits.subspan(t - 1)) s = successor(s, d);
    return s;
  }
  // Orderings split by head order, so the unconditioned state is the union
  // of the conditioned ones, defined when they agree on the tail order.
  std::optional<State> merged;
  for (const Permutation& p : all_permutations(t - 1)) {
    const State part = run_chain(digits, t, p);
    if (!merged) {
      merged = part;
      continue;
    }
    if (merged->perm != part.perm) throw std::domain_error("prefix leaves the order of the last cells open");
    merged->tuples.insert(merged->tuples.end(), part.tuples.begin(), part.tuples.end());
  }
  std::sort(merged->tuples.begin(), merged->tuples.end());
  merged->tuples.erase(std::unique(merged->tuples.begin(), merged->tuples.end()), merged->tuples.end());
  return *merged;
}

bool is_complete(const State& s) {
  return s.tuples.size() == complete_tuple_count(s.t());
}

std::vector<State> complete_states(int t) {
  check_window_size(t);
  std::vector<State> out;
  for (Permutation& perm : all_permutations(t - 1)) {
    std::vector<int> codes = monotone_tuple_codes(perm);
    out.push_back(State{std::move(perm), std::move(codes)});
  }
  return out;
}

Digits wrap_digits(const Permutation& head, const Permutation& tail, std::span<const int> tuple) {
  const int t = head.size() + 1;
  if (tail.size() != t - 1 || static_cast<int>(tuple.size()) != t - 1) {
    throw std::invalid_argument("head, tail and tuple sizes disagree");
  }
  if (!is_monotone(tail, tuple)) throw std::invalid_argument("tuple contradicts tail order");

  // Merged height: heads sit on odd rungs by rank, tails on the even rung
  // of their band, ties inside a band broken by the tail order.
  auto head_key = [&](int label) { return std::pair{2 * head.rank_of(label) + 1, 0}; };
  auto tail_key = [&](int label) { return std::pair{2 * tuple[label - 1], tail.rank_of(label)}; };

  Digits out;
  out.reserve(t - 1);
  for (int k = 0; k < t - 1; ++k) {
    const auto newest = head_key(k + 1);
    int below = 0;
    for (int j = k + 1; j <= t - 1; ++j) below += tail_key(j) < newest ? 1 : 0;
    for (int h = 1; h <= k; ++h) below += head_key(h) < newest ? 1 : 0;
    out.push_back(below);
  }
  return out;
}

TailTable tail_table(int t) {
  TailTable table;
  table.t = t;
  table.rows = complete_states(t);
  table.heads = all_permutations(t - 1);
  table.tails.assign(table.rows.size(), std::vector<std::set<Digits>>(table.heads.size()));
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    for (std::size_t c = 0; c < table.heads.size(); ++c) {
      for (const RelationTuple& tuple : table.rows[r].relation_tuples()) {
        table.tails[r][c].insert(wrap_digits(table.heads[c], table.rows[r].perm, tuple));
      }
    }
  }
  return table;
}

namespace {

/// Reachable states interned by id with their full transition table.
struct StateGraph {
  std::vector<State> states;
  std::vector<std::vector<int>> next;  // [id][digit]
  std::vector<bool> complete;
};

StateGraph build_state_graph(int t) {
  StateGraph g;
  std::map<State, int> ids;
  std::vector<int> frontier;
  auto intern = [&](State s) {
    auto [it, inserted] = ids.emplace(std::move(s), static_cast<int>(g.states.size()));
    if (inserted) {
      g.states.push_back(it->first);
      frontier.push_back(it->second);
    }
    return it->second;
  };

  const StateOracleTable& starts = initial_table(t);
  for (const auto& s : starts.unconditioned) {
    if (s) intern(*s);
  }
  for (const auto& row : starts.by_head) {
    for (const State& s : row) intern(s);
  }

  while (!frontier.empty()) {
    const int id = frontier.back();
    frontier.pop_back();
    std::vector<int> row(t);
    for (int d = 0; d < t; ++d) row[d] = intern(successor(g.states[id], d));
    if (static_cast<int>(g.next.size()) <= id) g.next.resize(id + 1);
    g.next[id] = std::move(row);
  }
  g.next.resize(g.states.size());
  for (const State& s : g.states) g.complete.push_back(is_complete(s));
  return g;
}

struct GraphCache {
  std::once_flag once;
  StateGraph graph;
};

const StateGraph& state_graph(int t) {
  check_window_size(t);
  static std::array<GraphCache, kMaxWindow + 1> caches;
  GraphCache& cache = caches[t];
  std::call_once(cache.once, [&] { cache.graph = build_state_graph(t); });
  return cache.graph;
}

std::vector<int> all_ids(const StateGraph& g) {
  std::vector<int> ids(g.states.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  return ids;
}

std::vector<int> step_all(const StateGraph& g, const std::vector<int>& ids, int d) {
  std::vector<int> out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(g.next[id][d]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool all_complete(const StateGraph& g, const std::vector<int>& ids) {
  return std::all_of(ids.begin(), ids.end(), [&](int id) { return g.complete[id]; });
}

}  // namespace

const std::vector<State>& reachable_states(int t) { return state_graph(t).states; }

ForcingResult pattern_forces_complete(std::span<const int> pattern, int t) {
  const StateGraph& g = state_graph(t);
  if (static_cast<int>(pattern.size()) < t) {
    throw std::invalid_argument("forcing pattern must have at least t digits");
  }
  std::vector<int> ids = all_ids(g);
  for (int d : pattern) {
    check_digit(d, t);
    ids = step_all(g, ids, d);
  }
  ForcingResult result;
  result.forces = all_complete(g, ids);
  if (ids.size() == 1) result.landing = g.states[ids.front()];
  return result;
}

std::vector<Digits> find_completing_patterns(int t, int max_len) {
  if (t > 4) throw std::domain_error("forcing-pattern search is limited to t <= 4");
  if (max_len > 8) throw std::domain_error("forcing-pattern search is limited to length 8");
  const StateGraph& g = state_graph(t);

  std::vector<Digits> found;
  Digits prefix;
  // Depth-first over the pattern trie; each node carries the distinct
  // states the prefix can lead to.
  auto visit = [&](auto&& self, const std::vector<int>& ids) -> void {
    const int len = static_cast<int>(prefix.size());
    if (len >= t && all_complete(g, ids)) {
      const SpectralResult beta = spectral_radius(factor_automaton(prefix, t).matrix);
      if (beta.value < t) found.push_back(prefix);
    }
    if (len == max_len) return;
    for (int d = 0; d < t; ++d) {
      prefix.push_back(d);
      self(self, step_all(g, ids, d));
      prefix.pop_back();
    }
  };
  visit(visit, all_ids(g));

  std::stable_sort(found.begin(), found.end(), [](const Digits& a, const Digits& b) {
    return a.size() < b.size();
  });
  return found;
}

}  // namespace lrm
