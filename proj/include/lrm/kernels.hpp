#ifndef LRM_KERNELS_HPP
#define LRM_KERNELS_HPP

#include <cstdint>
#include <vector>

#include "lrm/codec.hpp"

namespace lrm {

enum class Execution { serial, parallel };

/// Codewords of length n are indexed in base t, first digit most significant.
std::uint64_t codeword_index(const Codeword& g);
Codeword codeword_at(int t, int n, std::uint64_t index);

namespace kernels {

/// What the n! rankings of n cells map to.
struct RankingImage {
  std::vector<std::uint8_t> codewords;  // indicator over codeword indices
  std::uint64_t base_words = 0;         // distinct base-words seen
};

// Serial reference implementations, kept for testing and benchmarking.
namespace serial {
std::vector<std::uint8_t> legal_mask(int t, int n);
RankingImage ranking_image(int t, int n);
}  // namespace serial

// OpenMP versions; output is identical to the serial ones for any thread count.
namespace omp {
std::vector<std::uint8_t> legal_mask(int t, int n);
RankingImage ranking_image(int t, int n);
}  // namespace omp

std::vector<std::uint8_t> legal_mask(int t, int n, Execution exec);
RankingImage ranking_image(int t, int n, Execution exec);

}  // namespace kernels
}  // namespace lrm

#endif  // LRM_KERNELS_HPP
