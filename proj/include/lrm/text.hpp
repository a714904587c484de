#ifndef LRM_TEXT_HPP
#define LRM_TEXT_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lrm/census.hpp"
#include "lrm/codec.hpp"
#include "lrm/graycode.hpp"
#include "lrm/permutation.hpp"

namespace lrm {

// Text forms shared by the CLI and the file formats:
//   ChargeProfile  3,5,2,7,10
//   Permutation    [5,4,2,1,3]
//   BaseWord       3,4,6,3,2
//   Codeword       02201
// Parsers throw std::invalid_argument on malformed input.

std::vector<long long> parse_integer_list(std::string_view text);

ChargeProfile parse_profile(std::string_view text);
std::string format_profile(const ChargeProfile& profile);

Permutation parse_permutation(std::string_view text);
std::string format_permutation(const Permutation& p);

BaseWord parse_base_word(std::string_view text, int t);
std::string format_base_word(const BaseWord& b);

Codeword parse_codeword(std::string_view text, int t);
std::string format_codeword(const Codeword& g);

std::string format_digits(const std::vector<int>& digits, std::string_view separator = "");

nlohmann::ordered_json to_json(const CountReport& report);
std::string csv_header();
std::string to_csv(const CountReport& report);

/// Header "n=<n> w=<w> len=<len>", then one word per line in cycle order.
void write_cycle(std::ostream& os, const GrayCycle& cycle);
GrayCycle read_cycle(std::istream& is);

}  // namespace lrm

#endif  // LRM_TEXT_HPP
