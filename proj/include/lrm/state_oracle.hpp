#ifndef LRM_STATE_ORACLE_HPP
#define LRM_STATE_ORACLE_HPP

#include <optional>
#include <span>
#include <vector>

#include "lrm/permutation.hpp"
#include "lrm/states.hpp"

namespace lrm {

/// Exhaustive reference for the state reached after reading `prefix`
/// (g_0..g_{L-1}, L >= t-1): every ordering of the L+t-1 cells involved is
/// enumerated, the ones producing `prefix` are kept, and their last t-1
/// cells are projected onto (order, relation tuple). Limited to 10 cells
/// unless LRM_MAX_BUDGET allows more. Without `head` the digits may leave
/// the order of the last cells open (t = 3, prefix 1,1); that throws
/// std::domain_error.
State state_oracle(std::span<const int> prefix, int t,
                   const std::optional<Permutation>& head = std::nullopt);

/// Same enumeration for all t^L prefixes of length L in one pass.
/// Entry k belongs to the prefix whose base-t code (first digit most
/// significant) is k.
struct StateOracleTable {
  int t = 0;
  int length = 0;
  std::vector<std::optional<State>> unconditioned;  // empty when the order is open
  std::vector<std::vector<State>> by_head;  // [lex index of head order][code]
};

StateOracleTable state_oracle_table(int length, int t);

}  // namespace lrm

#endif  // LRM_STATE_ORACLE_HPP
