#include "lrm/codec.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "lrm/rankings.hpp"
#include "lrm/states.hpp"

namespace lrm {

void validate(const BaseWord& b) {
  check_window_size(b.t);
  if (b.size() < b.t) throw std::invalid_argument("base-word shorter than the window");
  const SymbolTable& table = symbol_table(b.t);
  for (int s : b.symbols) table.permutation(s);
}

void validate(const Codeword& g) {
  check_window_size(g.t);
  if (g.size() < g.t) throw std::invalid_argument("codeword shorter than the window");
  for (int d : g.digits) {
    if (d < 0 || d >= g.t) throw std::invalid_argument("digit outside 0..t-1");
  }
}

BaseWord demodulate(const ChargeProfile& profile, int t) {
  check_window_size(t);
  const int n = profile.size();
  if (n < t) throw std::invalid_argument("profile has fewer cells than the window");
  const SymbolTable& table = symbol_table(t);
  BaseWord b{t, std::vector<int>(n)};
  for (int i = 0; i < n; ++i) {
    b.symbols[i] = table.symbol(rank_to_permutation(window_levels(profile, i, t)));
  }
  return b;
}

std::vector<Permutation> window_permutations(const BaseWord& b) {
  validate(b);
  const SymbolTable& table = symbol_table(b.t);
  std::vector<Permutation> out;
  out.reserve(b.symbols.size());
  for (int s : b.symbols) out.push_back(table.permutation(s));
  return out;
}

bool is_consistent(const BaseWord& b) {
  const std::vector<Permutation> windows = window_permutations(b);
  const int n = b.size();
  for (int i = 0; i < n; ++i) {
    if (windows[i].restrict_to(2, b.t - 1) != windows[(i + 1) % n].restrict_to(1, b.t - 1)) {
      return false;
    }
  }
  return true;
}

Codeword encode(const BaseWord& b) {
  if (!is_consistent(b)) throw std::invalid_argument("base-word windows disagree on shared cells");
  Codeword g{b.t, {}};
  g.digits.reserve(b.symbols.size());
  for (const Permutation& p : window_permutations(b)) g.digits.push_back(window_digit(p));
  return g;
}

ConstraintGraph ConstraintGraph::from(const BaseWord& b) {
  const std::vector<Permutation> windows = window_permutations(b);
  ConstraintGraph graph;
  graph.n = b.size();
  graph.above.assign(graph.n, {});
  for (int i = 0; i < graph.n; ++i) {
    const Permutation& p = windows[i];
    for (int k = 0; k + 1 < p.size(); ++k) {
      const int hi = (i + p[k] - 1) % graph.n;
      const int lo = (i + p[k + 1] - 1) % graph.n;
      graph.above[hi].push_back(lo);
    }
  }
  for (auto& out : graph.above) {
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return graph;
}

Realization realizable(const BaseWord& b) {
  const ConstraintGraph graph = ConstraintGraph::from(b);
  const int n = graph.n;

  // Kahn's algorithm from the highest cells down.
  std::vector<int> in_degree(n, 0);
  for (const auto& out : graph.above) {
    for (int v : out) ++in_degree[v];
  }
  std::vector<int> order;
  order.reserve(n);
  for (int v = 0; v < n; ++v) {
    if (in_degree[v] == 0) order.push_back(v);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int v : graph.above[order[head]]) {
      if (--in_degree[v] == 0) order.push_back(v);
    }
  }
  if (static_cast<int>(order.size()) != n) return {};

  ChargeProfile witness{std::vector<Level>(n, 0)};
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (int v : graph.above[*it]) {
      witness.levels[*it] = std::max(witness.levels[*it], witness.levels[v] + 1);
    }
  }
  return {true, std::move(witness)};
}

std::optional<BaseWord> decode3(const Codeword& g) {
  validate(g);
  if (g.t != 3) throw std::invalid_argument("decode3 handles t = 3 only");
  const int n = g.size();
  const auto start = std::find_if(g.digits.begin(), g.digits.end(), [](int d) { return d != 1; });
  if (start == g.digits.end()) return std::nullopt;
  const int i = static_cast<int>(start - g.digits.begin());

  // Rows of the encoding key: next symbol given the parity of the previous
  // one and the digit.
  const SymbolTable& table = symbol_table(3);
  const std::vector<int> after_odd = table.successors(1);   // {1,2,4}
  const std::vector<int> after_even = table.successors(2);  // {3,5,6}

  BaseWord b{3, std::vector<int>(n, 0)};
  bool previous_odd = g[i] == 0;
  for (int k = 1; k <= n; ++k) {
    const int idx = (i + k) % n;
    const int s = (previous_odd ? after_odd : after_even)[g[idx]];
    b.symbols[idx] = s;
    previous_odd = s % 2 == 1;
  }
  const std::array<int, 2> seed = g[i] == 0 ? std::array{1, 3} : std::array{4, 6};
  if (std::find(seed.begin(), seed.end(), b.symbols[i]) == seed.end()) return std::nullopt;
  if (!realizable(b).realizable) return std::nullopt;
  return b;
}

std::optional<BaseWord> propagate_base_word(const Codeword& g, const Permutation& head) {
  validate(g);
  const int t = g.t;
  const int n = g.size();
  if (head.size() != t - 1) throw std::invalid_argument("head order must have t-1 labels");
  const SymbolTable& table = symbol_table(t);

  // Cells currently in view, highest first.
  std::vector<int> view;
  for (int label : head.order()) view.push_back(label - 1);

  BaseWord b{t, std::vector<int>(n)};
  std::vector<int> order(t);
  for (int j = 0; j < n; ++j) {
    view.insert(view.begin() + (t - 1 - g[j]), (j + t - 1) % n);
    for (int k = 0; k < t; ++k) order[k] = (view[k] - j + n) % n + 1;
    b.symbols[j] = table.symbol(Permutation(order));
    view.erase(std::find(view.begin(), view.end(), j));
  }
  for (int k = 0; k < t - 1; ++k) {
    if (view[k] != head[k] - 1) return std::nullopt;
  }
  return b;
}

bool legal_for_head(const Codeword& g, const Permutation& head) {
  validate(g);
  const int t = g.t;
  const int n = g.size();
  if (n < 2 * t - 2) throw std::invalid_argument("state chain needs n >= 2t-2");
  const std::span<const int> digits(g.digits);
  const State last = run_chain(digits.first(n - t + 1), t, head);
  const std::span<const int> tail = digits.last(t - 1);
  for (const RelationTuple& tuple : last.relation_tuples()) {
    const Digits wrap = wrap_digits(head, last.perm, tuple);
    if (std::equal(wrap.begin(), wrap.end(), tail.begin())) return true;
  }
  return false;
}

std::vector<BaseWord> decode_general(const Codeword& g) {
  validate(g);
  const bool chain = g.size() >= 2 * g.t - 2;
  std::vector<BaseWord> out;
  for (const Permutation& head : all_permutations(g.t - 1)) {
    if (chain && !legal_for_head(g, head)) continue;
    std::optional<BaseWord> b = propagate_base_word(g, head);
    if (!b) {
      if (chain) throw std::logic_error("state chain accepted a non-closing codeword");
      continue;
    }
    if (!chain && !realizable(*b).realizable) continue;
    out.push_back(std::move(*b));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_legal(const Codeword& g) {
  validate(g);
  if (g.size() < 2 * g.t - 2) return is_legal_by_rankings(g);
  for (const Permutation& head : all_permutations(g.t - 1)) {
    if (legal_for_head(g, head)) return true;
  }
  return false;
}

bool is_legal_by_rankings(const Codeword& g) {
  validate(g);
  const int n = g.size();
  if (factorial(n) > enumeration_budget(factorial(10))) {
    throw BudgetExceeded("ranking enumeration over " + std::to_string(n) + " cells");
  }
  ChargeProfile profile{std::vector<Level>(n)};
  std::iota(profile.levels.begin(), profile.levels.end(), 0);
  do {
    if (encode(demodulate(profile, g.t)) == g) return true;
  } while (std::next_permutation(profile.levels.begin(), profile.levels.end()));
  return false;
}

}  // namespace lrm
