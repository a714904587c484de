#include "lrm/graycode.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>

#include "lrm/rankings.hpp"

namespace lrm {

std::string_view to_string(Adjacency a) {
  switch (a) {
    case Adjacency::push: return "push";
    case Adjacency::swap: return "swap";
    case Adjacency::any_pair: return "any_pair";
  }
  return "?";
}

std::optional<Adjacency> parse_adjacency(std::string_view name) {
  for (Adjacency a : {Adjacency::push, Adjacency::swap, Adjacency::any_pair}) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

std::string_view to_string(CycleDefect d) {
  switch (d) {
    case CycleDefect::none: return "none";
    case CycleDefect::empty: return "empty";
    case CycleDefect::length: return "length";
    case CycleDefect::weight: return "weight";
    case CycleDefect::duplicate: return "duplicate";
    case CycleDefect::adjacency: return "adjacency";
    case CycleDefect::wrap: return "wrap";
  }
  return "?";
}

int weight(const Codeword& g) { return std::accumulate(g.digits.begin(), g.digits.end(), 0); }

std::vector<Codeword> weight_class(int n, int w) {
  if (n < 1 || w < 0 || w > n) throw std::invalid_argument("need 0 <= w <= n, n >= 1");
  std::vector<int> bits(n, 0);
  std::fill(bits.end() - w, bits.end(), 1);
  std::vector<Codeword> out;
  do {
    out.push_back(Codeword{2, bits});
  } while (std::next_permutation(bits.begin(), bits.end()));
  return out;
}

bool gray_adjacent(const Codeword& u, const Codeword& v, Adjacency a) {
  if (u.size() != v.size()) throw std::invalid_argument("words differ in length");
  if (weight(u) != weight(v)) throw std::invalid_argument("words differ in weight");
  const int n = u.size();
  std::vector<int> diff;
  for (int i = 0; i < n; ++i) {
    if (u[i] != v[i]) diff.push_back(i);
  }
  if (diff.size() != 2) return false;
  if (a == Adjacency::any_pair) return true;

  const int lo = diff[0];
  const int hi = diff[1];
  // (i, j) with j the cyclic successor of i.
  std::vector<std::pair<int, int>> pairs;
  if (hi == lo + 1) pairs.emplace_back(lo, hi);
  if ((hi + 1) % n == lo) pairs.emplace_back(hi, lo);
  for (auto [i, j] : pairs) {
    if (a == Adjacency::swap) return true;
    if (u[i] == 0 && u[j] == 1) return true;
  }
  return false;
}

namespace {

constexpr std::uint64_t key_of(int length, int task) {
  return (static_cast<std::uint64_t>(length) << 32) | (0xFFFFFFFFull - static_cast<std::uint64_t>(task));
}

struct CycleSearch {
  int vertices = 0;
  int min_length = 3;
  std::vector<std::vector<int>> out;
  std::vector<std::vector<char>> edge;
  std::atomic<std::uint64_t> best{0};

  void offer(std::uint64_t key) {
    std::uint64_t seen = best.load(std::memory_order_relaxed);
    while (key > seen && !best.compare_exchange_weak(seen, key, std::memory_order_relaxed)) {
    }
  }
};

struct TaskResult {
  std::uint64_t key = 0;
  std::vector<int> cycle;
};

class CycleTask {
public:
  CycleTask(CycleSearch& search, int task, int start, int first)
      : search_(search), task_(task), start_(start), visited_(search.vertices, 0) {
    path_ = {start, first};
    visited_[start] = visited_[first] = 1;
  }

  TaskResult run() {
    extend(path_.back());
    return std::move(result_);
  }

private:
  // Unvisited vertices above the start that the path could still absorb.
  int reach_from(int from) {
    std::vector<int> stack{from};
    std::vector<char> seen = visited_;
    int count = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : search_.out[v]) {
        if (w > start_ && !seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count;
  }

  void extend(int current) {
    const int length = static_cast<int>(path_.size());
    if (length >= search_.min_length && search_.edge[current][start_]) {
      const std::uint64_t key = key_of(length, task_);
      if (key > result_.key) {
        result_.key = key;
        result_.cycle = path_;
        search_.offer(key);
      }
    }
    const std::uint64_t bar = std::max(result_.key, search_.best.load(std::memory_order_relaxed));
    if (key_of(length + reach_from(current), task_) <= bar) return;
    for (int next : search_.out[current]) {
      if (next <= start_ || visited_[next]) continue;
      visited_[next] = 1;
      path_.push_back(next);
      extend(next);
      path_.pop_back();
      visited_[next] = 0;
    }
  }

  CycleSearch& search_;
  int task_;
  int start_;
  std::vector<int> path_;
  std::vector<char> visited_;
  TaskResult result_;
};

std::uint64_t binomial(int n, int k) {
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return c;
}

}  // namespace

GrayCycle longest_cycle(int n, int w, Adjacency a, Execution exec) {
  if (n < 1 || w < 0 || w > n) throw std::invalid_argument("need 0 <= w <= n, n >= 1");
  if (binomial(n, w) > enumeration_budget(120)) {
    throw BudgetExceeded("C(" + std::to_string(n) + "," + std::to_string(w) +
                         ") words exceed the cycle-search budget");
  }
  const std::vector<Codeword> words = weight_class(n, w);

  CycleSearch search;
  search.vertices = static_cast<int>(words.size());
  search.min_length = a == Adjacency::push ? 2 : 3;
  search.out.assign(search.vertices, {});
  search.edge.assign(search.vertices, std::vector<char>(search.vertices, 0));
  for (int u = 0; u < search.vertices; ++u) {
    for (int v = 0; v < search.vertices; ++v) {
      if (u != v && gray_adjacent(words[u], words[v], a)) {
        search.out[u].push_back(v);
        search.edge[u][v] = 1;
      }
    }
  }

  std::vector<std::pair<int, int>> tasks;
  for (int s = 0; s < search.vertices; ++s) {
    for (int v : search.out[s]) {
      if (v > s) tasks.emplace_back(s, v);
    }
  }
  std::vector<TaskResult> results(tasks.size());
  const auto task_count = static_cast<std::int64_t>(tasks.size());
  if (exec == Execution::serial) {
    for (std::int64_t k = 0; k < task_count; ++k) {
      results[k] = CycleTask(search, static_cast<int>(k), tasks[k].first, tasks[k].second).run();
    }
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t k = 0; k < task_count; ++k) {
      results[k] = CycleTask(search, static_cast<int>(k), tasks[k].first, tasks[k].second).run();
    }
  }

  GrayCycle cycle{n, w, {}};
  auto winner = std::max_element(results.begin(), results.end(),
                                 [](const TaskResult& x, const TaskResult& y) { return x.key < y.key; });
  if (winner != results.end() && winner->key != 0) {
    for (int v : winner->cycle) cycle.words.push_back(words[v]);
  }
  return cycle;
}

CycleCheck validate_cycle(std::span<const Codeword> words, int n, int w, Adjacency a) {
  if (words.empty()) return {false, CycleDefect::empty, -1};
  const int count = static_cast<int>(words.size());
  for (int i = 0; i < count; ++i) {
    const Codeword& g = words[i];
    const bool binary = std::all_of(g.digits.begin(), g.digits.end(), [](int d) { return d == 0 || d == 1; });
    if (g.size() != n || !binary) return {false, CycleDefect::length, i};
    if (weight(g) != w) return {false, CycleDefect::weight, i};
  }
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < i; ++j) {
      if (words[i].digits == words[j].digits) return {false, CycleDefect::duplicate, i};
    }
  }
  for (int i = 0; i + 1 < count; ++i) {
    if (!gray_adjacent(words[i], words[i + 1], a)) return {false, CycleDefect::adjacency, i};
  }
  if (!gray_adjacent(words[count - 1], words[0], a)) return {false, CycleDefect::wrap, count - 1};
  return {true, CycleDefect::none, -1};
}

}  // namespace lrm
