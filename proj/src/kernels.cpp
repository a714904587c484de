#include "lrm/kernels.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include <omp.h>

#include "lrm/rankings.hpp"

namespace lrm {

std::uint64_t codeword_index(const Codeword& g) {
  std::uint64_t index = 0;
  for (int d : g.digits) index = index * static_cast<std::uint64_t>(g.t) + static_cast<std::uint64_t>(d);
  return index;
}

Codeword codeword_at(int t, int n, std::uint64_t index) {
  Codeword g{t, std::vector<int>(n)};
  for (int i = n - 1; i >= 0; --i) {
    g.digits[i] = static_cast<int>(index % static_cast<std::uint64_t>(t));
    index /= static_cast<std::uint64_t>(t);
  }
  return g;
}

namespace kernels {
namespace {

using BaseWordKey = std::pair<std::uint64_t, std::uint64_t>;

std::uint64_t word_count(int t, int n) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(t);
  return total;
}

void check_sizes(int t, int n) {
  check_window_size(t);
  if (n < t) throw std::invalid_argument("n must be at least t");
}

// Symbols fit in 10 bits; up to 12 windows fit in two words.
BaseWordKey pack(const BaseWord& b) {
  BaseWordKey key{0, 0};
  for (int i = 0; i < b.size(); ++i) {
    std::uint64_t& word = i < 6 ? key.first : key.second;
    word = (word << 10) | static_cast<std::uint64_t>(b.symbols[i]);
  }
  return key;
}

// Visits rankings [begin, end) in lexicographic order.
template <class Visit>
void for_rankings(int n, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  if (begin >= end) return;
  ChargeProfile profile{unrank_ranking(n, begin)};
  for (std::uint64_t r = begin; r < end; ++r) {
    visit(profile);
    std::next_permutation(profile.levels.begin(), profile.levels.end());
  }
}

void check_ranking_budget(int t, int n) {
  check_sizes(t, n);
  if (n > 12 || factorial(n) > enumeration_budget(factorial(10))) {
    throw BudgetExceeded("ranking enumeration over " + std::to_string(n) + " cells");
  }
}

void check_codeword_budget(int t, int n) {
  check_sizes(t, n);
  if (n > 40 || word_count(t, n) > enumeration_budget(5'000'000)) {
    throw BudgetExceeded("codeword space " + std::to_string(t) + "^" + std::to_string(n));
  }
}

std::uint64_t distinct(std::vector<BaseWordKey>& keys) {
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys.size();
}

}  // namespace

namespace serial {

std::vector<std::uint8_t> legal_mask(int t, int n) {
  check_codeword_budget(t, n);
  const std::uint64_t total = word_count(t, n);
  std::vector<std::uint8_t> mask(total, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    mask[idx] = is_legal(codeword_at(t, n, idx)) ? 1 : 0;
  }
  return mask;
}

RankingImage ranking_image(int t, int n) {
  check_ranking_budget(t, n);
  RankingImage image;
  image.codewords.assign(word_count(t, n), 0);
  std::vector<BaseWordKey> keys;
  for_rankings(n, 0, factorial(n), [&](const ChargeProfile& profile) {
    const BaseWord b = demodulate(profile, t);
    image.codewords[codeword_index(encode(b))] = 1;
    keys.push_back(pack(b));
  });
  image.base_words = distinct(keys);
  return image;
}

}  // namespace serial

namespace omp {

std::vector<std::uint8_t> legal_mask(int t, int n) {
  check_codeword_budget(t, n);
  // Builds the shared caches before the workers race for them.
  is_legal(codeword_at(t, n, 0));
  const auto total = static_cast<std::int64_t>(word_count(t, n));
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(total), 0);
#pragma omp parallel for schedule(dynamic, 1024)
  for (std::int64_t idx = 0; idx < total; ++idx) {
    mask[idx] = is_legal(codeword_at(t, n, static_cast<std::uint64_t>(idx))) ? 1 : 0;
  }
  return mask;
}

RankingImage ranking_image(int t, int n) {
  check_ranking_budget(t, n);
  symbol_table(t);
  const std::uint64_t total = factorial(n);
  const std::int64_t chunks =
      static_cast<std::int64_t>(std::min<std::uint64_t>(total, 64ull * omp_get_max_threads()));

  RankingImage image;
  image.codewords.assign(word_count(t, n), 0);
  std::vector<BaseWordKey> keys;
#pragma omp parallel
  {
    std::vector<BaseWordKey> local;
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = total * static_cast<std::uint64_t>(c) / chunks;
      const std::uint64_t end = total * static_cast<std::uint64_t>(c + 1) / chunks;
      for_rankings(n, begin, end, [&](const ChargeProfile& profile) {
        const BaseWord b = demodulate(profile, t);
        const std::uint64_t idx = codeword_index(encode(b));
#pragma omp atomic write
        image.codewords[idx] = 1;
        local.push_back(pack(b));
      });
    }
    distinct(local);
#pragma omp critical
    keys.insert(keys.end(), local.begin(), local.end());
  }
  image.base_words = distinct(keys);
  return image;
}

}  // namespace omp

std::vector<std::uint8_t> legal_mask(int t, int n, Execution exec) {
  return exec == Execution::serial ? serial::legal_mask(t, n) : omp::legal_mask(t, n);
}

RankingImage ranking_image(int t, int n, Execution exec) {
  return exec == Execution::serial ? serial::ranking_image(t, n) : omp::ranking_image(t, n);
}

}  // namespace kernels
}  // namespace lrm
