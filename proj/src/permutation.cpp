#include "lrm/permutation.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace lrm {

void check_window_size(int t) {
  if (t < kMinWindow || t > kMaxWindow) {
    throw std::domain_error("window size t=" + std::to_string(t) +
                            " outside supported range 2..6");
  }
}

Permutation::Permutation(std::vector<int> order) : order_(std::move(order)) {
  std::vector<bool> seen(order_.size() + 1, false);
  for (int label : order_) {
    if (label < 1 || label > size() || seen[label]) {
      throw std::invalid_argument("not a permutation of 1..k");
    }
    seen[label] = true;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 1);
  return Permutation(std::move(order));
}

int Permutation::position_of(int label) const {
  auto it = std::find(order_.begin(), order_.end(), label);
  if (it == order_.end()) throw std::out_of_range("label not in permutation");
  return static_cast<int>(it - order_.begin());
}

int Permutation::lex_index() const {
  // Lehmer code.
  int index = 0;
  const int k = size();
  for (int i = 0; i < k; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < k; ++j) {
      if (order_[j] < order_[i]) ++smaller;
    }
    index = index * (k - i) + smaller;
  }
  return index;
}

Permutation Permutation::from_lex_index(int k, int index) {
  std::vector<int> pool(k);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> radix(k, 1);
  for (int i = k - 2; i >= 0; --i) radix[i] = radix[i + 1] * (k - 1 - i);
  std::vector<int> order;
  order.reserve(k);
  for (int i = 0; i < k; ++i) {
    const int digit = index / radix[i];
    index %= radix[i];
    order.push_back(pool[digit]);
    pool.erase(pool.begin() + digit);
  }
  return Permutation(std::move(order));
}

Permutation Permutation::restrict_to(int first, int count) const {
  std::vector<int> order;
  order.reserve(count);
  for (int label : order_) {
    if (label >= first && label < first + count) order.push_back(label - first + 1);
  }
  return Permutation(std::move(order));
}

std::vector<Permutation> all_permutations(int k) {
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

Permutation rank_to_permutation(std::span<const Level> window) {
  if (window.empty()) throw std::invalid_argument("empty window");
  std::vector<int> order(window.size());
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return window[a - 1] > window[b - 1]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (window[order[i - 1] - 1] == window[order[i] - 1]) {
      throw std::invalid_argument("window levels are not pairwise distinct");
    }
  }
  return Permutation(std::move(order));
}

int window_digit(const Permutation& p) {
  return p.size() - 1 - p.position_of(p.size());
}

SymbolTable::SymbolTable(int t) : t_(t) {
  check_window_size(t);
  if (t == 3) {
    for (auto order : {std::vector{1, 2, 3}, std::vector{1, 3, 2}, std::vector{2, 1, 3},
                       std::vector{3, 1, 2}, std::vector{2, 3, 1}, std::vector{3, 2, 1}}) {
      entries_.emplace_back(std::move(order));
    }
  } else {
    entries_ = all_permutations(t);
  }
  symbol_by_lex_.assign(entries_.size(), 0);
  for (std::size_t s = 0; s < entries_.size(); ++s) {
    symbol_by_lex_[entries_[s].lex_index()] = static_cast<int>(s) + 1;
  }
}

const Permutation& SymbolTable::permutation(int symbol) const {
  if (symbol < 1 || symbol > symbol_count()) {
    throw std::out_of_range("symbol " + std::to_string(symbol) + " outside 1.." +
                            std::to_string(symbol_count()));
  }
  return entries_[symbol - 1];
}

int SymbolTable::symbol(const Permutation& p) const {
  if (p.size() != t_) throw std::invalid_argument("permutation size differs from t");
  return symbol_by_lex_[p.lex_index()];
}

std::vector<int> SymbolTable::overlap_class(int symbol) const {
  const Permutation tail = permutation(symbol).restrict_to(2, t_ - 1);
  std::vector<int> out;
  for (int s = 1; s <= symbol_count(); ++s) {
    if (entries_[s - 1].restrict_to(2, t_ - 1) == tail) out.push_back(s);
  }
  return out;
}

std::vector<int> SymbolTable::successors(int symbol) const {
  const Permutation tail = permutation(symbol).restrict_to(2, t_ - 1);
  std::vector<int> out;
  for (int digit = 0; digit < t_; ++digit) {
    std::vector<int> order = tail.order();
    order.insert(order.begin() + (t_ - 1 - digit), t_);
    out.push_back(this->symbol(Permutation(std::move(order))));
  }
  return out;
}

const SymbolTable& symbol_table(int t) {
  static const std::array<SymbolTable, kMaxWindow - kMinWindow + 1> tables{
      SymbolTable(2), SymbolTable(3), SymbolTable(4), SymbolTable(5), SymbolTable(6)};
  check_window_size(t);
  return tables[t - kMinWindow];
}

std::vector<Level> window_levels(const ChargeProfile& profile, int i, int t) {
  const int n = profile.size();
  std::vector<Level> out(t);
  for (int k = 0; k < t; ++k) out[k] = profile[(i + k) % n];
  return out;
}

ChargeProfile apply_push(const ChargeProfile& profile, int i, int t) {
  const int n = profile.size();
  if (i < 0 || i >= n) throw std::out_of_range("cell index outside profile");
  Level top = profile[i];
  for (int d = 1; d < t; ++d) {
    top = std::max({top, profile[(i + d) % n], profile[((i - d) % n + n) % n]});
  }
  ChargeProfile out = profile;
  out.levels[i] = top + 1;
  return out;
}

}  // namespace lrm
