#ifndef LRM_CENSUS_HPP
#define LRM_CENSUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrm/automaton.hpp"
#include "lrm/kernels.hpp"
#include "lrm/states.hpp"

namespace lrm {

struct CountReport {
  int t = 0;
  int n = 0;
  std::uint64_t legal_count = 0;  // M_t(n)
  std::uint64_t total = 0;        // t^n
  double density = 0.0;
  std::optional<std::uint64_t> base_word_count;  // ranking oracle only
  // Forcing-pattern lower bound: words of length n-t+1 containing the
  // pattern (M') and whether M >= t^(t-1) M'.
  std::optional<std::uint64_t> m_prime;
  std::optional<bool> bound_ok;
  std::optional<double> growth_rate;
  std::string method;
};

/// Codeword images of all n! rankings.
CountReport count_by_rankings(int t, int n, Execution exec = Execution::parallel);

/// Legality test over all t^n codewords.
CountReport count_by_legality(int t, int n, Execution exec = Execution::parallel);

/// Pattern used for the lower bound: (2,0,1,1) for t = 3, (3,3,0,1,2,1)
/// for t = 4, the first pattern found by search for t = 2.
std::optional<Digits> forcing_pattern(int t);

/// One report per n in [n_lo, n_hi], each counted with whichever oracle
/// is cheaper within budget.
std::vector<CountReport> density_report(int t, int n_lo, int n_hi,
                                        Execution exec = Execution::parallel);

}  // namespace lrm

#endif  // LRM_CENSUS_HPP
