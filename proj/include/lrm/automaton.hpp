#ifndef LRM_AUTOMATON_HPP
#define LRM_AUTOMATON_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lrm {

using BigInt = boost::multiprecision::cpp_int;
using CountMatrix = std::vector<std::vector<std::uint64_t>>;

/// Automaton accepting the words over {0..t-1} that avoid `pattern` as a
/// contiguous factor. State q means the longest suffix read so far that is
/// a proper prefix of the pattern has length q.
struct FactorAutomaton {
  std::vector<int> pattern;
  int t = 0;
  std::vector<std::vector<int>> next;  // [q][symbol], -1 when the symbol completes the pattern
  CountMatrix matrix;                  // [q][q'] = symbols moving q to q'

  int states() const { return static_cast<int>(pattern.size()); }
};

FactorAutomaton factor_automaton(std::span<const int> pattern, int t);

struct SpectralResult {
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
  double dp_ratio = 0.0;  // a_{61} / a_{60} with a_m = 1' A^m 1
};

/// Dominant eigenvalue of a nonnegative matrix by power iteration from the
/// all-ones vector, stopped when successive Rayleigh quotients differ by
/// less than 1e-10. If it does not settle within 1e5 steps, or disagrees
/// with the counting ratio by 1e-3 or more, `converged` is false and
/// `value` holds the counting ratio instead.
SpectralResult spectral_radius(const CountMatrix& matrix);

BigInt power_of(int base, int exponent);

/// Words of length m avoiding the automaton's pattern.
BigInt avoiding_count(const FactorAutomaton& automaton, int m);

/// Words of length m over {0..t-1} containing `pattern` somewhere.
BigInt containing_count(std::span<const int> pattern, int t, int m);

}  // namespace lrm

#endif  // LRM_AUTOMATON_HPP
