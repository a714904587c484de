#include "lrm/text.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace lrm {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <class T>
std::string join(const std::vector<T>& values, std::string_view separator) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? separator : "") << values[i];
  return os.str();
}

}  // namespace

std::vector<long long> parse_integer_list(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty list");
  std::vector<long long> out;
  while (true) {
    const std::size_t comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    long long value = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size()) {
      throw std::invalid_argument("not an integer: '" + std::string(item) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

ChargeProfile parse_profile(std::string_view text) {
  ChargeProfile profile;
  for (long long v : parse_integer_list(text)) profile.levels.push_back(v);
  return profile;
}

std::string format_profile(const ChargeProfile& profile) { return join(profile.levels, ","); }

Permutation parse_permutation(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("permutation must be written as [a,b,...]");
  }
  std::vector<int> order;
  for (long long v : parse_integer_list(text.substr(1, text.size() - 2))) order.push_back(static_cast<int>(v));
  return Permutation(std::move(order));
}

std::string format_permutation(const Permutation& p) { return "[" + join(p.order(), ",") + "]"; }

BaseWord parse_base_word(std::string_view text, int t) {
  BaseWord b{t, {}};
  for (long long v : parse_integer_list(text)) b.symbols.push_back(static_cast<int>(v));
  validate(b);
  return b;
}

std::string format_base_word(const BaseWord& b) { return join(b.symbols, ","); }

Codeword parse_codeword(std::string_view text, int t) {
  text = trim(text);
  Codeword g{t, {}};
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("codeword must be a digit string");
    g.digits.push_back(c - '0');
  }
  validate(g);
  return g;
}

std::string format_codeword(const Codeword& g) { return format_digits(g.digits); }

std::string format_digits(const std::vector<int>& digits, std::string_view separator) {
  return join(digits, separator);
}

nlohmann::ordered_json to_json(const CountReport& r) {
  nlohmann::ordered_json j;
  j["t"] = r.t;
  j["n"] = r.n;
  j["legal_count"] = r.legal_count;
  j["total"] = r.total;
  j["density"] = r.density;
  j["m_prime"] = r.m_prime ? nlohmann::ordered_json(*r.m_prime) : nlohmann::ordered_json();
  j["bound_ok"] = r.bound_ok ? nlohmann::ordered_json(*r.bound_ok) : nlohmann::ordered_json();
  j["growth_rate"] = r.growth_rate ? nlohmann::ordered_json(*r.growth_rate) : nlohmann::ordered_json();
  if (r.base_word_count) j["base_word_count"] = *r.base_word_count;
  j["method"] = r.method;
  return j;
}

std::string csv_header() { return "t,n,legal_count,total,density,m_prime,bound_ok,growth_rate"; }

std::string to_csv(const CountReport& r) {
  std::ostringstream os;
  os.precision(10);
  os << r.t << ',' << r.n << ',' << r.legal_count << ',' << r.total << ',' << r.density << ',';
  if (r.m_prime) os << *r.m_prime;
  os << ',';
  if (r.bound_ok) os << (*r.bound_ok ? "true" : "false");
  os << ',';
  if (r.growth_rate) os << *r.growth_rate;
  return os.str();
}

void write_cycle(std::ostream& os, const GrayCycle& cycle) {
  os << "n=" << cycle.n << " w=" << cycle.w << " len=" << cycle.length() << '\n';
  for (const Codeword& g : cycle.words) os << format_codeword(g) << '\n';
}

GrayCycle read_cycle(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("missing cycle header");
  GrayCycle cycle;
  int len = -1;
  std::istringstream header(line);
  std::string field;
  while (header >> field) {
    const std::size_t eq = field.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad header field: " + field);
    const std::string key = field.substr(0, eq);
    const int value = static_cast<int>(parse_integer_list(field.substr(eq + 1)).at(0));
    if (key == "n") cycle.n = value;
    else if (key == "w") cycle.w = value;
    else if (key == "len") len = value;
    else throw std::invalid_argument("unknown header field: " + key);
  }
  if (cycle.n <= 0 || len < 0) throw std::invalid_argument("header needs n=<n> w=<w> len=<len>");
  while (std::getline(is, line)) {
    const std::string_view word = trim(line);
    if (word.empty()) continue;
    Codeword g{2, {}};
    for (char c : word) {
      if (c != '0' && c != '1') throw std::invalid_argument("cycle words must be binary");
      g.digits.push_back(c - '0');
    }
    cycle.words.push_back(std::move(g));
  }
  if (cycle.length() != len) throw std::invalid_argument("len= does not match the number of words");
  return cycle;
}

}  // namespace lrm
