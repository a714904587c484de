#include "lrm/state_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lrm/rankings.hpp"

namespace lrm {
namespace {

struct Bucket {
  std::optional<Permutation> perm;
  std::vector<int> tuples;
  bool open = false;
};

int ipow(int base, int exp) {
  int r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

State to_state(Bucket& bucket) {
  std::sort(bucket.tuples.begin(), bucket.tuples.end());
  return State{*bucket.perm, bucket.tuples};
}

}  // namespace

StateOracleTable state_oracle_table(int length, int t) {
  check_window_size(t);
  if (length < t - 1) throw std::invalid_argument("oracle prefix shorter than t-1 digits");
  const int cells = length + t - 1;
  const std::uint64_t budget = enumeration_budget(factorial(10));
  if (cells > 20 || factorial(cells) > budget) {
    throw BudgetExceeded("state oracle over " + std::to_string(cells) +
                         " cells exceeds the enumeration budget");
  }

  const int codes = ipow(t, length);
  const int heads = static_cast<int>(factorial(t - 1));
  std::vector<std::vector<Bucket>> buckets(heads, std::vector<Bucket>(codes));

  std::vector<Level> levels(cells);
  std::iota(levels.begin(), levels.end(), 0);
  do {
    int code = 0;
    for (int j = 0; j < length; ++j) {
      const Level newest = levels[j + t - 1];
      int below = 0;
      for (int k = j; k < j + t - 1; ++k) below += levels[k] < newest ? 1 : 0;
      code = code * t + below;
    }
    const int head = rank_to_permutation(std::span(levels).first(t - 1)).lex_index();
    const std::span<const Level> tail = std::span(levels).last(t - 1);
    Permutation perm = rank_to_permutation(tail);

    int tuple = 0;
    for (Level level : tail) {
      int below = 0;
      for (int h = 0; h < t - 1; ++h) below += levels[h] < level ? 1 : 0;
      tuple = tuple * t + below;
    }

    Bucket& bucket = buckets[head][code];
    if (!bucket.perm) {
      bucket.perm = std::move(perm);
    } else if (*bucket.perm != perm) {
      throw std::logic_error("digit prefix does not determine the order of the last cells");
    }
    if (std::find(bucket.tuples.begin(), bucket.tuples.end(), tuple) == bucket.tuples.end()) {
      bucket.tuples.push_back(tuple);
    }
  } while (std::next_permutation(levels.begin(), levels.end()));

  StateOracleTable table;
  table.t = t;
  table.length = length;
  table.by_head.resize(heads);
  std::vector<Bucket> merged(codes);
  for (int h = 0; h < heads; ++h) {
    table.by_head[h].reserve(codes);
    for (int c = 0; c < codes; ++c) {
      Bucket& bucket = buckets[h][c];
      if (!bucket.perm) throw std::logic_error("digit prefix with no realizing order");
      Bucket& all = merged[c];
      if (!all.perm) all.perm = bucket.perm;
      if (*all.perm != *bucket.perm) all.open = true;
      all.tuples.insert(all.tuples.end(), bucket.tuples.begin(), bucket.tuples.end());
      table.by_head[h].push_back(to_state(bucket));
    }
  }
  table.unconditioned.reserve(codes);
  for (Bucket& all : merged) {
    if (all.open) {
      table.unconditioned.emplace_back();
      continue;
    }
    std::sort(all.tuples.begin(), all.tuples.end());
    all.tuples.erase(std::unique(all.tuples.begin(), all.tuples.end()), all.tuples.end());
    table.unconditioned.push_back(to_state(all));
  }
  return table;
}

State state_oracle(std::span<const int> prefix, int t, const std::optional<Permutation>& head) {
  check_window_size(t);
  int code = 0;
  for (int d : prefix) {
    if (d < 0 || d >= t) throw std::invalid_argument("digit outside 0..t-1");
    code = code * t + d;
  }
  const StateOracleTable table = state_oracle_table(static_cast<int>(prefix.size()), t);
  if (!head) {
    if (!table.unconditioned[code]) throw std::domain_error("prefix leaves the order of the last cells open");
    return *table.unconditioned[code];
  }
  if (head->size() != t - 1) throw std::invalid_argument("head order must have t-1 labels");
  return table.by_head[head->lex_index()][code];
}

}  // namespace lrm
