#include "lrm/rankings.hpp"

#include <cstdlib>
#include <numeric>

namespace lrm {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t enumeration_budget(std::uint64_t fallback) {
  if (const char* env = std::getenv("LRM_MAX_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return fallback;
}

BudgetExceeded::BudgetExceeded(std::string what) : what_(std::move(what)) {}

std::vector<std::int64_t> unrank_ranking(int n, std::uint64_t index) {
  std::vector<std::int64_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<std::int64_t> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t block = factorial(n - 1 - i);
    const auto digit = static_cast<std::size_t>(index / block);
    index %= block;
    out.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return out;
}

}  // namespace lrm
