#include <doctest.h>

#include <sstream>

#include "lrm/text.hpp"

using namespace lrm;

TEST_CASE("integer lists") {
  CHECK(parse_integer_list("3, 5,2 ,7,10") == std::vector<long long>{3, 5, 2, 7, 10});
  CHECK(parse_integer_list("-4") == std::vector<long long>{-4});
  CHECK_THROWS_AS(parse_integer_list(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_integer_list("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_integer_list("1,x"), std::invalid_argument);
}

TEST_CASE("round trips") {
  CHECK(format_profile(parse_profile("3,5,2,7,10")) == "3,5,2,7,10");
  CHECK(format_permutation(parse_permutation("[5,4,2,1,3]")) == "[5,4,2,1,3]");
  CHECK(format_base_word(parse_base_word("3,4,6,3,2", 3)) == "3,4,6,3,2");
  CHECK(format_codeword(parse_codeword("02201", 3)) == "02201");
  CHECK(format_digits({2, 0, 1, 1}, ",") == "2,0,1,1");
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_permutation("5,4,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("[1,1]"), std::invalid_argument);
  CHECK_THROWS(parse_base_word("3,7,1", 3));
  CHECK_THROWS_AS(parse_codeword("0a1", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_codeword("031", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_codeword("01", 3), std::invalid_argument);
}

TEST_CASE("report serialization") {
  CountReport r;
  r.t = 3;
  r.n = 6;
  r.legal_count = 426;
  r.total = 729;
  r.density = 426.0 / 729.0;
  r.m_prime = 1;
  r.bound_ok = true;
  r.growth_rate = 2.9615;
  r.method = "legality";
  const auto j = to_json(r);
  CHECK(j.dump().rfind(R"({"t":3,"n":6,"legal_count":426,"total":729,)", 0) == 0);
  CHECK(j["bound_ok"] == true);
  CHECK_FALSE(j.contains("base_word_count"));
  CHECK(to_csv(r).rfind("3,6,426,729,", 0) == 0);
  CHECK(to_csv(r).find(",1,true,2.9615") != std::string::npos);
  CHECK(csv_header() == "t,n,legal_count,total,density,m_prime,bound_ok,growth_rate");

  CountReport empty = r;
  empty.m_prime.reset();
  empty.bound_ok.reset();
  empty.growth_rate.reset();
  CHECK(to_json(empty)["m_prime"].is_null());
  CHECK(to_csv(empty).ends_with(",,,"));
}

TEST_CASE("cycle files") {
  GrayCycle c{4, 2, {Codeword{2, {0, 0, 1, 1}}, Codeword{2, {0, 1, 0, 1}}}};
  std::stringstream ss;
  write_cycle(ss, c);
  CHECK(ss.str() == "n=4 w=2 len=2\n0011\n0101\n");
  const GrayCycle back = read_cycle(ss);
  CHECK(back.n == 4);
  CHECK(back.w == 2);
  CHECK(back.words == c.words);

  std::istringstream wrong_len("n=4 w=2 len=3\n0011\n");
  CHECK_THROWS_AS(read_cycle(wrong_len), std::invalid_argument);
  std::istringstream bad_word("n=4 w=2 len=1\n0021\n");
  CHECK_THROWS_AS(read_cycle(bad_word), std::invalid_argument);
  std::istringstream no_header("");
  CHECK_THROWS_AS(read_cycle(no_header), std::invalid_argument);
}
