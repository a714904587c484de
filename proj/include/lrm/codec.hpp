#ifndef LRM_CODEC_HPP
#define LRM_CODEC_HPP

#include <compare>
#include <optional>
#include <vector>

#include "lrm/permutation.hpp"

namespace lrm {

/// One symbol of {1..t!} per window; window i covers cells i..i+t-1.
struct BaseWord {
  int t = 0;
  std::vector<int> symbols;

  int size() const { return static_cast<int>(symbols.size()); }
  auto operator<=>(const BaseWord&) const = default;
};

/// Digit i is the number of cells in window i lying below its newest cell.
struct Codeword {
  int t = 0;
  std::vector<int> digits;

  int size() const { return static_cast<int>(digits.size()); }
  int operator[](int i) const { return digits[i]; }
  auto operator<=>(const Codeword&) const = default;
};

void validate(const BaseWord& b);
void validate(const Codeword& g);

BaseWord demodulate(const ChargeProfile& profile, int t);

std::vector<Permutation> window_permutations(const BaseWord& b);

/// Neighbouring windows agree on the order of the t-1 cells they share.
bool is_consistent(const BaseWord& b);

/// Throws std::invalid_argument for an inconsistent base-word.
Codeword encode(const BaseWord& b);

/// Edge u -> v whenever some window places cell u directly above cell v.
struct ConstraintGraph {
  int n = 0;
  std::vector<std::vector<int>> above;

  static ConstraintGraph from(const BaseWord& b);
};

struct Realization {
  bool realizable = false;
  std::optional<ChargeProfile> witness;  // longest-path levels from 0
};

Realization realizable(const BaseWord& b);

/// Unique realizable base-word behind a t = 3 codeword (table-driven).
std::optional<BaseWord> decode3(const Codeword& g);

/// The base-word g induces once the first t-1 cells are ordered by `head`,
/// or nothing if the windows fail to close up consistently around the
/// cycle. Realizability is not checked.
std::optional<BaseWord> propagate_base_word(const Codeword& g, const Permutation& head);

/// Every realizable base-word that encodes to g, in increasing order.
/// Uses the state chain for n >= 2t-2, direct realizability below that.
std::vector<BaseWord> decode_general(const Codeword& g);

/// Whether some head order lets the state chain close around the cycle.
bool legal_for_head(const Codeword& g, const Permutation& head);

/// State chain for n >= 2t-2, ranking enumeration for shorter words.
bool is_legal(const Codeword& g);

/// Exhaustive reference: g = encode(demodulate(r)) for some ranking r of
/// the n cells.
bool is_legal_by_rankings(const Codeword& g);

}  // namespace lrm

#endif  // LRM_CODEC_HPP
