#ifndef LRM_PERMUTATION_HPP
#define LRM_PERMUTATION_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace lrm {

using Level = std::int64_t;

/// Smallest and largest window size the library supports (t! <= 720).
inline constexpr int kMinWindow = 2;
inline constexpr int kMaxWindow = 6;

void check_window_size(int t);

/// A permutation of {1..k} written as the list of window labels ordered from
/// the highest charge to the lowest, e.g. [5,4,2,1,3].
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> order);

  static Permutation identity(int k);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }
  int operator[](int position) const { return order_[position]; }

  /// 0-based position of `label` counted from the top.
  int position_of(int label) const;

  /// Number of labels strictly below `label`.
  int rank_of(int label) const { return size() - 1 - position_of(label); }

  /// Index of this permutation in lexicographic order of one-line lists.
  int lex_index() const;
  static Permutation from_lex_index(int k, int index);

  /// Order of labels first..first+count-1 relabelled to 1..count.
  Permutation restrict_to(int first, int count) const;

  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> order_;
};

/// All k! permutations in lexicographic order.
std::vector<Permutation> all_permutations(int k);

/// Orders window positions (1-based) by decreasing charge.
Permutation rank_to_permutation(std::span<const Level> window);

/// Number of labels that follow label t (the newest cell) in the order.
int window_digit(const Permutation& p);

/// Bijection between symbols {1..t!} and S_t. For t = 3 the table is
/// s1=[1,2,3] s2=[1,3,2] s3=[2,1,3] s4=[3,1,2] s5=[2,3,1] s6=[3,2,1];
/// for the other sizes symbols follow lexicographic order.
class SymbolTable {
public:
  explicit SymbolTable(int t);

  int t() const { return t_; }
  int symbol_count() const { return static_cast<int>(entries_.size()); }

  const Permutation& permutation(int symbol) const;
  int symbol(const Permutation& p) const;

  /// Symbols whose windows order the last t-1 cells the same way as
  /// `symbol`'s window; for t = 3 these are {1,3,5} and {2,4,6}.
  std::vector<int> overlap_class(int symbol) const;

  /// The t symbols that may follow `symbol`, indexed by the next digit.
  std::vector<int> successors(int symbol) const;

private:
  int t_;
  std::vector<Permutation> entries_;
  std::vector<int> symbol_by_lex_;
};

/// Shared immutable table for 2 <= t <= 6.
const SymbolTable& symbol_table(int t);

/// Charge levels of n cells read cyclically.
struct ChargeProfile {
  std::vector<Level> levels;

  int size() const { return static_cast<int>(levels.size()); }
  Level operator[](int i) const { return levels[i]; }
  bool operator==(const ChargeProfile&) const = default;
};

/// Levels of cells i..i+t-1 (cyclic).
std::vector<Level> window_levels(const ChargeProfile& profile, int i, int t);

/// Push-to-the-top: cell i is raised to one above the highest cell that
/// shares a window with it (cyclic distance < t).
ChargeProfile apply_push(const ChargeProfile& profile, int i, int t);

}  // namespace lrm

#endif  // LRM_PERMUTATION_HPP
