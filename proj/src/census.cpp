#include "lrm/census.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <numeric>

#include "lrm/rankings.hpp"

namespace lrm {
namespace {

struct PatternCache {
  std::once_flag once;
  std::optional<Digits> pattern;
  std::optional<double> growth;
};

PatternCache& pattern_cache(int t) {
  static std::array<PatternCache, kMaxWindow + 1> caches;
  check_window_size(t);
  PatternCache& cache = caches[t];
  std::call_once(cache.once, [&] {
    if (t == 2) {
      const std::vector<Digits> found = find_completing_patterns(2, 4);
      if (!found.empty()) cache.pattern = found.front();
    } else if (t == 3) {
      cache.pattern = Digits{2, 0, 1, 1};
    } else if (t == 4) {
      cache.pattern = Digits{3, 3, 0, 1, 2, 1};
    }
    if (cache.pattern) cache.growth = spectral_radius(factor_automaton(*cache.pattern, t).matrix).value;
  });
  return cache;
}

std::uint64_t to_u64(const BigInt& v) { return v.convert_to<std::uint64_t>(); }

CountReport finish(int t, int n, std::uint64_t legal, std::string method) {
  CountReport report;
  report.t = t;
  report.n = n;
  report.legal_count = legal;
  report.total = to_u64(power_of(t, n));
  report.density = static_cast<double>(legal) / static_cast<double>(report.total);
  report.method = std::move(method);

  const PatternCache& cache = pattern_cache(t);
  if (cache.pattern) {
    const BigInt m_prime = containing_count(*cache.pattern, t, n - t + 1);
    report.m_prime = to_u64(m_prime);
    report.bound_ok = BigInt(legal) >= power_of(t, t - 1) * m_prime;
    report.growth_rate = cache.growth;
  }
  return report;
}

std::uint64_t ones(const std::vector<std::uint8_t>& mask) {
  return std::accumulate(mask.begin(), mask.end(), std::uint64_t{0});
}

}  // namespace

CountReport count_by_rankings(int t, int n, Execution exec) {
  const kernels::RankingImage image = kernels::ranking_image(t, n, exec);
  CountReport report = finish(t, n, ones(image.codewords), "rankings");
  report.base_word_count = image.base_words;
  return report;
}

CountReport count_by_legality(int t, int n, Execution exec) {
  return finish(t, n, ones(kernels::legal_mask(t, n, exec)), "legality");
}

std::optional<Digits> forcing_pattern(int t) { return pattern_cache(t).pattern; }

std::vector<CountReport> density_report(int t, int n_lo, int n_hi, Execution exec) {
  check_window_size(t);
  if (n_lo < t || n_hi < n_lo) throw std::invalid_argument("need t <= n_lo <= n_hi");
  const double ranking_budget = static_cast<double>(enumeration_budget(factorial(10)));
  const double codeword_budget = static_cast<double>(enumeration_budget(5'000'000));

  std::vector<CountReport> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    const double words = std::pow(static_cast<double>(t), n);
    const double rankings = static_cast<double>(factorial(std::min(n, 20)));
    const bool by_words = words <= codeword_budget;
    const bool by_rankings = n <= 12 && rankings <= ranking_budget;
    // Rough per-item costs: one state chain per head order vs one
    // demodulation per ranking.
    const double word_cost = words * static_cast<double>(factorial(t - 1)) * n;
    const double ranking_cost = rankings * n * t;
    if (by_words && (!by_rankings || word_cost <= ranking_cost)) {
      out.push_back(count_by_legality(t, n, exec));
    } else if (by_rankings) {
      out.push_back(count_by_rankings(t, n, exec));
    } else {
      throw BudgetExceeded("no oracle fits the budget for t=" + std::to_string(t) +
                           " n=" + std::to_string(n));
    }
  }
  return out;
}

}  // namespace lrm
