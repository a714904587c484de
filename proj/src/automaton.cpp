#include "lrm/automaton.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lrm {

FactorAutomaton factor_automaton(std::span<const int> pattern, int t) {
  if (pattern.empty()) throw std::invalid_argument("empty pattern");
  if (t < 1) throw std::invalid_argument("alphabet must be nonempty");
  for (int a : pattern) {
    if (a < 0 || a >= t) throw std::invalid_argument("pattern digit outside 0..t-1");
  }
  const int r = static_cast<int>(pattern.size());

  std::vector<int> failure(r, 0);
  for (int i = 1, k = 0; i < r; ++i) {
    while (k > 0 && pattern[i] != pattern[k]) k = failure[k - 1];
    if (pattern[i] == pattern[k]) ++k;
    failure[i] = k;
  }

  FactorAutomaton automaton;
  automaton.pattern.assign(pattern.begin(), pattern.end());
  automaton.t = t;
  automaton.next.assign(r, std::vector<int>(t, -1));
  automaton.matrix.assign(r, std::vector<std::uint64_t>(r, 0));
  for (int q = 0; q < r; ++q) {
    for (int a = 0; a < t; ++a) {
      int k = q;
      while (k > 0 && pattern[k] != a) k = failure[k - 1];
      if (pattern[k] == a) ++k;
      if (k == r) continue;
      automaton.next[q][a] = k;
      ++automaton.matrix[q][k];
    }
  }
  return automaton;
}

namespace {

std::vector<double> multiply(const CountMatrix& m, const std::vector<double>& x) {
  std::vector<double> y(x.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += static_cast<double>(m[i][j]) * x[j];
  }
  return y;
}

double sum(const std::vector<double>& x) { return std::accumulate(x.begin(), x.end(), 0.0); }

double counting_ratio(const CountMatrix& m, int steps) {
  std::vector<double> y(m.size(), 1.0);
  for (int s = 0; s < steps; ++s) {
    y = multiply(m, y);
    const double total = sum(y);
    if (total == 0.0) return 0.0;
    for (double& v : y) v /= total;
  }
  const double before = sum(y);
  return before == 0.0 ? 0.0 : sum(multiply(m, y)) / before;
}

}  // namespace

SpectralResult spectral_radius(const CountMatrix& matrix) {
  const std::size_t k = matrix.size();
  if (k == 0) throw std::invalid_argument("empty matrix");
  for (const auto& row : matrix) {
    if (row.size() != k) throw std::invalid_argument("matrix is not square");
  }

  constexpr double kTolerance = 1e-10;
  constexpr int kMaxIterations = 100000;
  constexpr double kCrossCheck = 1e-3;

  SpectralResult result;
  result.dp_ratio = counting_ratio(matrix, 60);

  std::vector<double> x(k, 1.0);
  double previous = std::nan("");
  for (int it = 1; it <= kMaxIterations; ++it) {
    const std::vector<double> y = multiply(matrix, x);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      num += x[i] * y[i];
      den += x[i] * x[i];
    }
    const double quotient = num / den;
    result.iterations = it;
    if (std::abs(quotient - previous) < kTolerance) {
      result.value = quotient;
      result.converged = true;
      break;
    }
    previous = quotient;
    const double total = sum(y);
    if (total == 0.0) {
      result.value = 0.0;
      result.converged = true;
      break;
    }
    for (std::size_t i = 0; i < k; ++i) x[i] = y[i] / total;
  }

  if (!result.converged || std::abs(result.value - result.dp_ratio) >= kCrossCheck) {
    result.converged = false;
    result.value = result.dp_ratio;
  }
  return result;
}

BigInt power_of(int base, int exponent) {
  BigInt r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

BigInt avoiding_count(const FactorAutomaton& automaton, int m) {
  if (m < 0) throw std::invalid_argument("negative word length");
  const int r = automaton.states();
  std::vector<BigInt> ways(r, 0);
  ways[0] = 1;
  for (int step = 0; step < m; ++step) {
    std::vector<BigInt> next(r, 0);
    for (int q = 0; q < r; ++q) {
      if (ways[q] == 0) continue;
      for (int to = 0; to < r; ++to) {
        if (automaton.matrix[q][to] != 0) next[to] += ways[q] * automaton.matrix[q][to];
      }
    }
    ways = std::move(next);
  }
  BigInt total = 0;
  for (const BigInt& w : ways) total += w;
  return total;
}

BigInt containing_count(std::span<const int> pattern, int t, int m) {
  return power_of(t, m) - avoiding_count(factor_automaton(pattern, t), m);
}

}  // namespace lrm
