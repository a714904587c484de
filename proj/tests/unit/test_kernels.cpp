#include <doctest.h>

#include <omp.h>

#include "lrm/kernels.hpp"

using namespace lrm;

TEST_CASE("codeword indices") {
  const Codeword g{3, {0, 2, 2, 0, 1}};
  CHECK(codeword_index(g) == 2 * 27 + 2 * 9 + 1);
  CHECK(codeword_at(3, 5, codeword_index(g)) == g);
  CHECK(codeword_at(4, 4, 0) == Codeword{4, {0, 0, 0, 0}});
}

TEST_CASE("parallel kernels match the serial reference") {
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    for (auto [t, n] : {std::pair{2, 9}, std::pair{3, 7}, std::pair{4, 6}, std::pair{5, 6}}) {
      CHECK(kernels::omp::legal_mask(t, n) == kernels::serial::legal_mask(t, n));
      const auto a = kernels::omp::ranking_image(t, n);
      const auto b = kernels::serial::ranking_image(t, n);
      CHECK(a.codewords == b.codewords);
      CHECK(a.base_words == b.base_words);
    }
  }
}

TEST_CASE("legality mask equals the ranking image") {
  for (auto [t, n] : {std::pair{3, 8}, std::pair{4, 7}}) {
    CHECK(kernels::legal_mask(t, n, Execution::parallel) == kernels::ranking_image(t, n, Execution::parallel).codewords);
  }
}
