#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "lrm/automaton.hpp"
#include "lrm/census.hpp"
#include "lrm/codec.hpp"
#include "lrm/graycode.hpp"
#include "lrm/rankings.hpp"
#include "lrm/state_oracle.hpp"
#include "lrm/states.hpp"
#include "lrm/text.hpp"

namespace lrm::cli {
namespace {

using Json = nlohmann::ordered_json;

// Thrown for bad flag values found after CLI11 has accepted the syntax.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  int t = 3;
  int jobs = 0;
  bool serial = false;
  std::string format = "json";
  std::string method;

  std::string profile;
  std::vector<int> pushes;
  std::string base_word;
  std::string word;
  std::string head;
  std::string pattern;
  std::string range;
  std::string adjacency = "push";
  std::string out_file;
  std::string pair;
  std::string file;
  std::string words;
  std::optional<int> n;
  std::optional<int> w;
  std::optional<int> m;
  std::optional<int> max_len;
  bool complete = false;
  bool tails = false;
  bool oracle = false;
  bool reachable = false;
};

struct Reply {
  int exit_code = kOk;
  Json json;
  std::string text;  // used instead of json when set (CSV)
};

Json header(const std::string& command, int t) {
  Json j;
  j["command"] = command;
  j["t"] = t;
  j["ok"] = true;
  return j;
}

Execution execution(const Options& o) { return o.serial ? Execution::serial : Execution::parallel; }

Codeword need_word(const Options& o) {
  if (o.word.empty()) throw UsageError("--word is required");
  return parse_codeword(o.word, o.t);
}

Json state_json(const State& s) {
  Json j;
  j["perm"] = format_permutation(s.perm);
  j["tuples"] = s.tuples.size();
  j["complete"] = is_complete(s);
  j["text"] = to_string(s);
  return j;
}

std::optional<Permutation> optional_head(const Options& o) {
  if (o.head.empty()) return std::nullopt;
  return parse_permutation(o.head);
}

std::pair<int, int> parse_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("--range must look like lo..hi");
  const auto lo = parse_integer_list(text.substr(0, dots));
  const auto hi = parse_integer_list(text.substr(dots + 2));
  if (lo.size() != 1 || hi.size() != 1) throw UsageError("--range must look like lo..hi");
  return {static_cast<int>(lo[0]), static_cast<int>(hi[0])};
}

Reply run_demodulate(const Options& o) {
  if (o.profile.empty()) throw UsageError("--profile is required");
  ChargeProfile profile = parse_profile(o.profile);
  for (int i : o.pushes) {
    if (i < 0 || i >= profile.size()) throw UsageError("--push index outside the profile");
    profile = apply_push(profile, i, o.t);
  }
  const BaseWord b = demodulate(profile, o.t);
  Reply r{kOk, header("demodulate", o.t), {}};
  r.json["profile"] = format_profile(profile);
  r.json["base_word"] = format_base_word(b);
  r.json["codeword"] = format_codeword(encode(b));
  return r;
}

Reply run_encode(const Options& o) {
  if (o.base_word.empty()) throw UsageError("--base-word is required");
  const BaseWord b = parse_base_word(o.base_word, o.t);
  Reply r{kOk, header("encode", o.t), {}};
  Json windows = Json::array();
  for (const Permutation& p : window_permutations(b)) windows.push_back(format_permutation(p));
  r.json["windows"] = windows;
  const bool consistent = is_consistent(b);
  r.json["consistent"] = consistent;
  r.json["codeword"] = consistent ? Json(format_codeword(encode(b))) : Json();
  const Realization real = realizable(b);
  r.json["realizable"] = real.realizable;
  r.json["witness"] = real.witness ? Json(format_profile(*real.witness)) : Json();
  if (!real.realizable) {
    r.json["ok"] = false;
    r.exit_code = kNegative;
  }
  return r;
}

Reply run_decode(const Options& o) {
  const Codeword g = need_word(o);
  const std::string method = o.method.empty() ? (o.t == 3 ? "t3" : "general") : o.method;
  std::vector<BaseWord> found;
  if (method == "t3") {
    if (auto b = decode3(g)) found.push_back(*b);
  } else if (method == "general") {
    found = decode_general(g);
  } else {
    throw UsageError("--method must be t3 or general");
  }
  Reply r{kOk, header("decode", o.t), {}};
  r.json["codeword"] = format_codeword(g);
  r.json["method"] = method;
  r.json["base_word"] = found.size() == 1 ? Json(format_base_word(found.front())) : Json();
  Json all = Json::array();
  for (const BaseWord& b : found) all.push_back(format_base_word(b));
  r.json["base_words"] = all;
  if (found.empty()) {
    r.json["ok"] = false;
    r.exit_code = kNegative;
  }
  return r;
}

Reply run_check(const Options& o) {
  const Codeword g = need_word(o);
  const std::string method = o.method.empty() ? "chain" : o.method;
  bool legal = false;
  if (method == "chain") {
    legal = is_legal(g);
  } else if (method == "rankings") {
    legal = is_legal_by_rankings(g);
  } else {
    throw UsageError("--method must be chain or rankings");
  }
  Reply r{legal ? kOk : kNegative, header("check", o.t), {}};
  r.json["ok"] = legal;
  r.json["codeword"] = format_codeword(g);
  r.json["method"] = method;
  r.json["legal"] = legal;
  return r;
}

Reply run_count(const Options& o) {
  int lo = 0;
  int hi = 0;
  if (!o.range.empty()) {
    std::tie(lo, hi) = parse_range(o.range);
  } else if (o.n) {
    lo = hi = *o.n;
  } else {
    throw UsageError("--n or --range is required");
  }
  const std::string method = o.method.empty() ? "auto" : o.method;
  std::vector<CountReport> reports;
  if (method == "auto") {
    reports = density_report(o.t, lo, hi, execution(o));
  } else if (method == "rankings" || method == "legality") {
    if (lo < o.t || hi < lo) throw UsageError("need t <= lo <= hi");
    for (int n = lo; n <= hi; ++n) {
      reports.push_back(method == "rankings" ? count_by_rankings(o.t, n, execution(o))
                                             : count_by_legality(o.t, n, execution(o)));
    }
  } else {
    throw UsageError("--method must be auto, rankings or legality");
  }

  Reply r{kOk, header("count", o.t), {}};
  if (o.format == "csv") {
    r.text = csv_header() + "\n";
    for (const CountReport& c : reports) r.text += to_csv(c) + "\n";
    return r;
  }
  Json rows = Json::array();
  for (const CountReport& c : reports) rows.push_back(to_json(c));
  r.json["reports"] = rows;
  return r;
}

Reply run_spectral(const Options& o) {
  if (o.pattern.empty()) throw UsageError("--pattern is required");
  Digits pattern;
  for (long long v : parse_integer_list(o.pattern)) pattern.push_back(static_cast<int>(v));
  const FactorAutomaton a = factor_automaton(pattern, o.t);
  const SpectralResult s = spectral_radius(a.matrix);
  Reply r{kOk, header("spectral", o.t), {}};
  r.json["pattern"] = format_digits(pattern, ",");
  r.json["states"] = a.states();
  r.json["matrix"] = a.matrix;
  r.json["growth_rate"] = s.value;
  r.json["converged"] = s.converged;
  r.json["iterations"] = s.iterations;
  r.json["dp_ratio"] = s.dp_ratio;
  if (o.m) {
    r.json["m"] = *o.m;
    r.json["containing"] = containing_count(pattern, o.t, *o.m).str();
    r.json["avoiding"] = avoiding_count(a, *o.m).str();
    r.json["total"] = power_of(o.t, *o.m).str();
  }
  return r;
}

Reply run_states(const Options& o) {
  Reply r{kOk, header("states", o.t), {}};
  if (o.complete) {
    Json rows = Json::array();
    for (const State& s : complete_states(o.t)) rows.push_back(state_json(s));
    r.json["complete_states"] = rows;
    r.json["tuples_per_state"] = complete_tuple_count(o.t);
    return r;
  }
  if (o.tails) {
    const TailTable table = tail_table(o.t);
    if (o.format == "csv") {
      r.text = "state,head,count\n";
      for (std::size_t i = 0; i < table.rows.size(); ++i) {
        for (std::size_t j = 0; j < table.heads.size(); ++j) {
          r.text += "\"" + format_permutation(table.rows[i].perm) + "\",\"" + format_permutation(table.heads[j]) +
                    "\"," + std::to_string(table.count(i, j)) + "\n";
        }
      }
      return r;
    }
    Json rows = Json::array();
    Json heads = Json::array();
    Json counts = Json::array();
    for (const State& s : table.rows) rows.push_back(format_permutation(s.perm));
    for (const Permutation& h : table.heads) heads.push_back(format_permutation(h));
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < table.heads.size(); ++j) row.push_back(table.count(i, j));
      counts.push_back(row);
    }
    r.json["rows"] = rows;
    r.json["heads"] = heads;
    r.json["counts"] = counts;
    return r;
  }
  if (o.reachable) {
    const auto& all = reachable_states(o.t);
    r.json["reachable"] = all.size();
    r.json["complete"] = std::count_if(all.begin(), all.end(), [](const State& s) { return is_complete(s); });
    return r;
  }

  if (o.word.empty()) throw UsageError("states needs --word, --complete, --tails or --reachable");
  Digits digits;
  for (char c : o.word) {
    if (c < '0' || c >= '0' + o.t) throw UsageError("--word digits must lie in 0..t-1");
    digits.push_back(c - '0');
  }
  if (static_cast<int>(digits.size()) < o.t - 1) throw UsageError("--word needs at least t-1 digits");
  const std::optional<Permutation> head = optional_head(o);
  const std::span<const int> all(digits);
  // Without a head order a prefix may leave the tail order open; that step
  // is reported as null.
  std::optional<State> last;
  Json chain = Json::array();
  for (std::size_t k = static_cast<std::size_t>(o.t - 1); k <= digits.size(); ++k) {
    try {
      last = run_chain(all.first(k), o.t, head);
      chain.push_back(state_json(*last));
    } catch (const std::domain_error&) {
      last.reset();
      chain.push_back(nullptr);
    }
  }
  r.json["word"] = o.word;
  r.json["head"] = head ? Json(format_permutation(*head)) : Json();
  r.json["chain"] = chain;
  if (o.oracle) {
    std::optional<State> expected;
    try {
      expected = state_oracle(digits, o.t, head);
    } catch (const std::domain_error&) {
    }
    const bool match = expected == last;
    r.json["oracle_match"] = match;
    if (!match) {
      r.json["ok"] = false;
      r.exit_code = kNegative;
    }
  }
  return r;
}

Reply run_pattern(const Options& o) {
  Reply r{kOk, header("pattern", o.t), {}};
  if (!o.pattern.empty()) {
    Digits pattern;
    for (long long v : parse_integer_list(o.pattern)) pattern.push_back(static_cast<int>(v));
    const ForcingResult f = pattern_forces_complete(pattern, o.t);
    r.json["pattern"] = format_digits(pattern, ",");
    r.json["forces_complete"] = f.forces;
    r.json["landing"] = f.landing ? Json(to_string(*f.landing)) : Json();
    if (!f.forces) {
      r.json["ok"] = false;
      r.exit_code = kNegative;
    }
    return r;
  }
  if (!o.max_len) throw UsageError("--pattern or --max-len is required");
  Json found = Json::array();
  for (const Digits& p : find_completing_patterns(o.t, *o.max_len)) found.push_back(format_digits(p, ","));
  r.json["max_len"] = *o.max_len;
  r.json["patterns"] = found;
  return r;
}

Adjacency need_adjacency(const Options& o) {
  const auto a = parse_adjacency(o.adjacency);
  if (!a) throw UsageError("--adjacency must be push, swap or any_pair");
  return *a;
}

Json words_json(const std::vector<Codeword>& words) {
  Json out = Json::array();
  for (const Codeword& g : words) out.push_back(format_codeword(g));
  return out;
}

Codeword parse_bits(std::string_view text) { return parse_codeword(text, 2); }

Reply run_gray(const Options& o) {
  const Adjacency a = need_adjacency(o);
  Reply r{kOk, header("gray", 2), {}};
  r.json["adjacency"] = std::string(to_string(a));
  if (!o.pair.empty()) {
    const std::size_t comma = o.pair.find(',');
    if (comma == std::string::npos) throw UsageError("--pair must look like u,v");
    const Codeword u = parse_bits(o.pair.substr(0, comma));
    const Codeword v = parse_bits(o.pair.substr(comma + 1));
    const bool adjacent = gray_adjacent(u, v, a);
    r.json["pair"] = o.pair;
    r.json["adjacent"] = adjacent;
    if (!adjacent) {
      r.json["ok"] = false;
      r.exit_code = kNegative;
    }
    return r;
  }
  if (!o.n) throw UsageError("--n is required");
  const int w = o.w.value_or(2);
  const GrayCycle c = longest_cycle(*o.n, w, a, execution(o));
  r.json["n"] = c.n;
  r.json["w"] = c.w;
  r.json["length"] = c.length();
  if (w == 2) {
    r.json["bound"] = 2 * c.n;
    r.json["within_bound"] = c.length() <= 2 * c.n;
  }
  r.json["words"] = words_json(c.words);
  if (!o.out_file.empty()) {
    std::ofstream file(o.out_file);
    if (!file) throw UsageError("cannot write " + o.out_file);
    write_cycle(file, c);
    r.json["out"] = o.out_file;
  }
  return r;
}

Reply run_validate(const Options& o) {
  const Adjacency a = need_adjacency(o);
  GrayCycle c;
  if (!o.file.empty()) {
    std::ifstream file(o.file);
    if (!file) throw UsageError("cannot read " + o.file);
    c = read_cycle(file);
  } else if (!o.words.empty()) {
    if (!o.n || !o.w) throw UsageError("--words needs --n and --w");
    c.n = *o.n;
    c.w = *o.w;
    std::string_view rest = o.words;
    while (true) {
      const std::size_t comma = rest.find(',');
      c.words.push_back(parse_bits(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  } else {
    throw UsageError("--file or --words is required");
  }
  const CycleCheck check = validate_cycle(c.words, c.n, c.w, a);
  Reply r{check.ok ? kOk : kNegative, header("validate", 2), {}};
  r.json["ok"] = check.ok;
  r.json["adjacency"] = std::string(to_string(a));
  r.json["n"] = c.n;
  r.json["w"] = c.w;
  r.json["length"] = c.length();
  r.json["defect"] = std::string(to_string(check.defect));
  r.json["index"] = check.index;
  return r;
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Local rank modulation toolkit", "lrm"};
  app.require_subcommand(1);
  Options o;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--t", o.t, "window size")->check(CLI::Range(kMinWindow, kMaxWindow));
    sub->add_option("--jobs", o.jobs, "OpenMP threads (0 = default)")->check(CLI::NonNegativeNumber);
    return sub;
  };
  std::map<std::string, std::function<Reply(const Options&)>> handlers;

  auto* demod = common(app.add_subcommand("demodulate", "charge profile to base-word and codeword"));
  demod->add_option("--profile", o.profile, "charge levels, e.g. 3,5,2,7,10");
  demod->add_option("--push", o.pushes, "cells pushed to the top first, in order");
  handlers["demodulate"] = run_demodulate;

  auto* enc = common(app.add_subcommand("encode", "base-word to codeword, with realizability"));
  enc->add_option("--base-word", o.base_word, "symbols, e.g. 3,4,6,3,2");
  handlers["encode"] = run_encode;

  auto* dec = common(app.add_subcommand("decode", "codeword to base-word(s)"));
  dec->add_option("--word", o.word, "digit string, e.g. 22201");
  dec->add_option("--method", o.method, "t3 or general");
  handlers["decode"] = run_decode;

  auto* chk = common(app.add_subcommand("check", "legality of a codeword"));
  chk->add_option("--word", o.word, "digit string");
  chk->add_option("--method", o.method, "chain or rankings");
  handlers["check"] = run_check;

  auto* cnt = common(app.add_subcommand("count", "legal codeword counts"));
  cnt->add_option("--n", o.n, "length");
  cnt->add_option("--range", o.range, "lengths lo..hi");
  cnt->add_option("--method", o.method, "auto, rankings or legality");
  cnt->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cnt->add_flag("--serial", o.serial, "use the serial reference kernels");
  handlers["count"] = run_count;

  auto* spectral = common(app.add_subcommand("spectral", "pattern-avoidance automaton and growth rate"));
  spectral->add_option("--pattern", o.pattern, "digits, e.g. 2,0,1,1");
  spectral->add_option("--m", o.m, "also count words of this length")->check(CLI::NonNegativeNumber);
  handlers["spectral"] = run_spectral;

  auto* st = common(app.add_subcommand("states", "relation-state machinery"));
  st->add_option("--word", o.word, "digit prefix to run through the state chain");
  st->add_option("--head", o.head, "fix the order of the first t-1 cells, e.g. [2,1]");
  st->add_flag("--oracle", o.oracle, "compare the chain with exhaustive enumeration");
  st->add_flag("--complete", o.complete, "list complete states");
  st->add_flag("--tails", o.tails, "wrap-digit tail counts");
  st->add_flag("--reachable", o.reachable, "count reachable states");
  st->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  handlers["states"] = run_states;

  auto* pat = common(app.add_subcommand("pattern", "complete-state forcing patterns"));
  pat->add_option("--pattern", o.pattern, "digits to test");
  pat->add_option("--max-len", o.max_len, "search all patterns up to this length");
  handlers["pattern"] = run_pattern;

  auto* gray = common(app.add_subcommand("gray", "longest constant-weight Gray cycle"));
  gray->add_option("--n", o.n, "word length");
  gray->add_option("--w", o.w, "weight (default 2)");
  gray->add_option("--adjacency", o.adjacency, "push, swap or any_pair");
  gray->add_option("--out", o.out_file, "write the cycle to this file");
  gray->add_option("--pair", o.pair, "only test whether u,v are adjacent");
  gray->add_flag("--serial", o.serial, "single-threaded search");
  handlers["gray"] = run_gray;

  auto* val = common(app.add_subcommand("validate", "check a Gray cycle"));
  val->add_option("--file", o.file, "cycle file");
  val->add_option("--words", o.words, "comma-separated words");
  val->add_option("--n", o.n, "word length");
  val->add_option("--w", o.w, "weight");
  val->add_option("--adjacency", o.adjacency, "push, swap or any_pair");
  handlers["validate"] = run_validate;

  CommandResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    if (code != 0) {
      result.err += app.help();
      result.exit_code = kUsage;
    }
    return result;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  if (o.jobs > 0) omp_set_num_threads(o.jobs);
  Reply reply;
  try {
    reply = handlers.at(command)(o);
  } catch (const std::exception& e) {
    Json j = header(command, o.t);
    j["ok"] = false;
    j["error"] = e.what();
    result.out = j.dump() + "\n";
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = kUsage;
    return result;
  }
  result.exit_code = reply.exit_code;
  result.out = reply.text.empty() ? reply.json.dump() + "\n" : reply.text;
  return result;
}

}  // namespace lrm::cli
