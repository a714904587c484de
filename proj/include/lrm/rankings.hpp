#ifndef LRM_RANKINGS_HPP
#define LRM_RANKINGS_HPP

#include <cstdint>
#include <exception>
#include <string>
#include <vector>

namespace lrm {

std::uint64_t factorial(int n);

/// Budget for exhaustive enumerations. LRM_MAX_BUDGET overrides the
/// default when set (larger values may run long).
std::uint64_t enumeration_budget(std::uint64_t fallback);

class BudgetExceeded : public std::exception {
public:
  explicit BudgetExceeded(std::string what);
  const char* what() const noexcept override { return what_.c_str(); }

private:
  std::string what_;
};

/// Ranking with lexicographic index `index` among all n! arrangements of
/// the levels 0..n-1 over n cells.
std::vector<std::int64_t> unrank_ranking(int n, std::uint64_t index);

}  // namespace lrm

#endif  // LRM_RANKINGS_HPP
