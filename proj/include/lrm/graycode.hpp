#ifndef LRM_GRAYCODE_HPP
#define LRM_GRAYCODE_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lrm/codec.hpp"
#include "lrm/kernels.hpp"

namespace lrm {

/// What counts as one Gray-code step between binary (t = 2) codewords of
/// equal weight.
///   push      a "01" at cyclic positions (i, i+1) becomes "10": one
///             push-to-the-top on cell i+1. Directed.
///   swap      push in either direction (symmetric).
///   any_pair  the words differ in exactly two positions (symmetric).
enum class Adjacency { push, swap, any_pair };

std::string_view to_string(Adjacency a);
std::optional<Adjacency> parse_adjacency(std::string_view name);

int weight(const Codeword& g);

/// Binary words of length n and weight w, lexicographically ordered.
std::vector<Codeword> weight_class(int n, int w);

/// Whether v may follow u. Throws on length or weight mismatch.
bool gray_adjacent(const Codeword& u, const Codeword& v, Adjacency a = Adjacency::push);

struct GrayCycle {
  int n = 0;
  int w = 0;
  std::vector<Codeword> words;

  int length() const { return static_cast<int>(words.size()); }
};

/// Longest simple cycle among the weight-w words by exhaustive
/// backtracking. Among longest cycles the witness is the lexicographically
/// smallest word sequence, which starts at its smallest word. Length 0 when
/// there is no cycle. Limited to C(n, w) <= 120.
GrayCycle longest_cycle(int n, int w, Adjacency a = Adjacency::push,
                        Execution exec = Execution::parallel);

enum class CycleDefect { none, empty, length, weight, duplicate, adjacency, wrap };

std::string_view to_string(CycleDefect d);

struct CycleCheck {
  bool ok = false;
  CycleDefect defect = CycleDefect::none;
  int index = -1;  // offending position
};

CycleCheck validate_cycle(std::span<const Codeword> words, int n, int w,
                          Adjacency a = Adjacency::push);

}  // namespace lrm

#endif  // LRM_GRAYCODE_HPP
