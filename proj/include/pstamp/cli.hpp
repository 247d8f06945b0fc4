#pragma once
// Command-line front end. Human-readable text by default, one self-contained
// JSON record per line with --json (stable field names: command, input,
// result, witness, n_range, elapsed_ms, plus per-command extras).
//
// Exit codes: 0 computed result (whatever the verdict), 2 usage or parse
// error, 3 precondition violation, 4 budget exceeded.

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pstamp/base.hpp"
#include "pstamp/bounds.hpp"
#include "pstamp/common.hpp"
#include "pstamp/construct.hpp"
#include "pstamp/reach.hpp"
#include "pstamp/representation.hpp"
#include "pstamp/search.hpp"
#include "pstamp/text.hpp"

namespace pstamp::cli {

namespace detail {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

inline int exit_code_for(Errc code) {
  switch (code) {
    case Errc::parse_error:
    case Errc::empty_input:
    case Errc::not_strictly_increasing:
      return 2;
    case Errc::budget_exceeded:
      return 4;
    default:
      return 3;
  }
}

inline const char* status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::proven_compact: return "proven_compact";
    case VerdictStatus::proven_not_compact: return "proven_not_compact";
    case VerdictStatus::checked_compact: return "checked_compact";
    default: return "checked_not_compact";
  }
}

inline const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::ratio_theorem_lower: return "ratio-lower";
    case Provenance::ratio_theorem_upper: return "ratio-upper";
    case Provenance::counting_bound: return "counting-bound";
    default: return "oracle-dp";
  }
}

struct Emitter {
  bool json_mode = false;
  std::ostream& out;
  Clock::time_point start = Clock::now();

  void record(json rec) const {
    for (const char* key : {"witness", "n_range"})
      if (!rec.contains(key)) rec[key] = nullptr;
    rec["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    out << rec.dump() << '\n';
  }
};

inline json verdict_fields(const Verdict& v) {
  json rec;
  rec["result"] = v.compact() ? "compact" : "not_compact";
  rec["status"] = status_name(v.status);
  rec["provenance"] = provenance_name(v.provenance);
  rec["witness"] = v.witness ? json(*v.witness) : json(nullptr);
  rec["n_range"] = v.n_range_value ? json(*v.n_range_value) : json(nullptr);
  return rec;
}

// All base-taking commands accept either an inline base or --file with one
// base per line; `sink` runs once per base with a label used in multi-base
// human output.
inline void for_each_base(const std::string& base_text, const std::string& file,
                          const std::function<void(const std::vector<Value>&, bool)>& sink) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) fail(Errc::parse_error, "cannot open file: " + file);
    std::string line;
    bool any = false;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
      any = true;
      sink(parse_elements(line), true);
    }
    if (!any) fail(Errc::empty_input, "file holds no bases: " + file);
    return;
  }
  sink(parse_elements(base_text), false);
}

inline std::string n_of_k(std::size_t k, Value value) {
  return "N(" + std::to_string(k) + ") = " + std::to_string(value);
}

inline void emit_check(const Emitter& em, const std::vector<Value>& elements, bool labelled) {
  const Verdict v = is_compact(elements);
  const std::string input = format_elements(elements);
  if (em.json_mode) {
    json rec = verdict_fields(v);
    rec["command"] = "check";
    rec["input"] = input;
    em.record(std::move(rec));
    return;
  }
  if (labelled) em.out << input << ": ";
  if (v.compact())
    em.out << "compact, " << n_of_k(elements.size(), *v.n_range_value) << '\n';
  else
    em.out << "not compact, witness " << *v.witness << '\n';
}

inline void emit_nrange(const Emitter& em, const std::vector<Value>& elements, Value h,
                        bool labelled) {
  const Value n = n_range(elements, h);
  if (em.json_mode) {
    json rec;
    rec["command"] = "nrange";
    rec["input"] = format_elements(elements);
    rec["h"] = h;
    rec["result"] = n;
    rec["n_range"] = n;
    em.record(std::move(rec));
    return;
  }
  if (labelled) em.out << format_elements(elements) << ": ";
  em.out << n << '\n';
}

inline void emit_classify(const Emitter& em, const std::vector<Value>& elements, bool labelled) {
  const std::optional<SymmetricBase> base = recognize(elements);
  if (!base) fail(Errc::not_symmetric, "not a symmetric base: " + format_elements(elements));
  const Verdict v = classify(*base);
  if (em.json_mode) {
    json rec = verdict_fields(v);
    rec["result"] = status_name(v.status);
    rec["command"] = "classify";
    rec["input"] = format_elements(elements);
    em.record(std::move(rec));
    return;
  }
  if (labelled) em.out << format_elements(elements) << ": ";
  switch (v.status) {
    case VerdictStatus::proven_compact:
      em.out << "proven compact via " << provenance_name(v.provenance) << ", "
             << n_of_k(base->k(), *v.n_range_value) << '\n';
      break;
    case VerdictStatus::proven_not_compact:
      em.out << "proven not compact via " << provenance_name(v.provenance);
      if (v.witness) em.out << ", witness " << *v.witness;
      em.out << '\n';
      break;
    case VerdictStatus::checked_compact:
      em.out << "compact (checked), " << n_of_k(base->k(), *v.n_range_value) << '\n';
      break;
    case VerdictStatus::checked_not_compact:
      em.out << "not compact (checked), witness " << *v.witness << '\n';
      break;
  }
}

inline json trace_json(const DecompositionTrace& trace) {
  json steps = json::array();
  for (const TraceStep& s : trace.steps) {
    const char* kind = s.kind == TraceStep::Kind::case1   ? "1"
                       : s.kind == TraceStep::Kind::case2 ? "2"
                       : s.kind == TraceStep::Kind::case3 ? "3"
                                                          : "base";
    steps.push_back({{"r", s.r}, {"i", s.i}, {"j", s.j}, {"case", kind}, {"next", s.next_n}});
  }
  json rec;
  rec["steps"] = std::move(steps);
  if (trace.balance)
    rec["balance"] = {{"q_hat", trace.balance->q_hat}, {"q", trace.balance->q},
                      {"rem", trace.balance->rem}};
  else
    rec["balance"] = nullptr;
  return rec;
}

// Shared by the --dp route: the table contract still caps n at k * a_k.
inline void reach_check(const std::vector<Value>& elements, Value n) {
  const Value kak = checked_mul(elements.size(), elements.back());
  if (n > kak) fail(Errc::out_of_range, "target beyond k * a_k = " + std::to_string(kak));
}

inline void emit_represent(const Emitter& em, const std::vector<Value>& elements, Value n,
                           bool use_table, bool with_trace, bool labelled) {
  Representation rep;
  DecompositionTrace trace;
  if (use_table) {
    reach_check(elements, n);
    const ReachTable t = min_stamps_table(elements, n);
    rep = representation_from_table(t, n);
  } else {
    const std::optional<SymmetricBase> base = recognize(elements);
    if (!base)
      fail(Errc::not_symmetric,
           "not a symmetric base (pass --dp for the table route): " + format_elements(elements));
    if (!growth_conditions_hold(*base))
      fail(Errc::growth_condition_violated,
           "base fails the ratio-3 growth conditions; pass --dp for the exact table route");
    auto [r, t] = represent(*base, n);
    rep = std::move(r);
    trace = std::move(t);
  }
  if (em.json_mode) {
    json rec;
    rec["command"] = "represent";
    rec["input"] = format_elements(elements);
    rec["n"] = n;
    rec["result"] = format_parts(rep);
    rec["count"] = rep.count;
    if (with_trace) rec["trace"] = trace_json(trace);
    em.record(std::move(rec));
    return;
  }
  if (labelled) em.out << format_elements(elements) << ": ";
  em.out << n << " = " << format_parts(rep) << " (" << rep.count
         << (rep.count == 1 ? " stamp)" : " stamps)") << '\n';
  if (with_trace) {
    if (trace.balance)
      em.out << "  balance: q_hat=" << trace.balance->q_hat << " q=" << trace.balance->q
             << " rem=" << trace.balance->rem << '\n';
    for (const TraceStep& s : trace.steps) {
      em.out << "  r=" << s.r << ": i=" << s.i << " j=" << s.j;
      if (s.kind == TraceStep::Kind::base_case)
        em.out << " base\n";
      else
        em.out << " case="
               << (s.kind == TraceStep::Kind::case1 ? 1 : s.kind == TraceStep::Kind::case2 ? 2 : 3)
               << " next=" << s.next_n << '\n';
    }
    if (trace.steps.empty() && !trace.balance) em.out << "  (table route, no recursion trace)\n";
  }
}

inline void emit_search(const Emitter& em, std::size_t k, bool all, const SearchOptions& options) {
  const SearchResult result = search_extremal(k, options);
  std::vector<SymmetricBase> everything;
  if (all) everything = enumerate_compact_symmetric(k, options);
  const Value n_at_max = checked_mul(k, result.max_a_k) + 1;
  if (em.json_mode) {
    json rec;
    rec["command"] = "search";
    rec["input"] = "k=" + std::to_string(k);
    json extremal = json::array();
    for (const SymmetricBase& b : result.extremal_bases) extremal.push_back(format_elements(b.elements()));
    json payload;
    payload["k"] = k;
    payload["max_a_k"] = result.max_a_k;
    payload["extremal"] = std::move(extremal);
    if (all) {
      json everything_json = json::array();
      for (const SymmetricBase& b : everything) everything_json.push_back(format_elements(b.elements()));
      payload["all"] = std::move(everything_json);
    }
    rec["result"] = std::move(payload);
    rec["n_range"] = n_at_max;
    rec["nodes_explored"] = result.nodes_explored;
    rec["oracle_calls"] = result.oracle_calls;
    rec["theorem_accepts"] = result.theorem_accepts;
    rec["counting_rejects"] = result.counting_rejects;
    em.record(std::move(rec));
    return;
  }
  em.out << "k=" << k << ": max a_k = " << result.max_a_k << ", " << n_of_k(k, n_at_max) << '\n';
  for (const SymmetricBase& b : result.extremal_bases)
    em.out << "  " << format_elements(b.elements()) << '\n';
  if (all) {
    em.out << "all " << everything.size() << " compact symmetric bases:\n";
    for (const SymmetricBase& b : everything) em.out << "  " << format_elements(b.elements()) << '\n';
  }
  em.out << "nodes=" << result.nodes_explored << " oracle=" << result.oracle_calls
         << " theorem=" << result.theorem_accepts << " counting=" << result.counting_rejects
         << '\n';
}

inline void emit_bounds(const Emitter& em, std::size_t m, Parity parity) {
  const Value limit = counting_limit(m, parity);
  const CountingChainReport chain = verify_counting_chain(m, parity);
  const char* parity_name = parity == Parity::even ? "even" : "odd";
  if (em.json_mode) {
    json rec;
    rec["command"] = "bounds";
    rec["input"] = "m=" + std::to_string(m) + " " + parity_name;
    rec["result"] = {{"counting_limit", limit},
                     {"sum_bound", chain.sum_bound},
                     {"divisor_bound", chain.divisor_bound},
                     {"below_power", chain.below_power},
                     {"holds", chain.holds()}};
    em.record(std::move(rec));
    return;
  }
  const unsigned top = parity == Parity::even ? 3 * unsigned(m) - 1 : 3 * unsigned(m);
  em.out << "m=" << m << " parity=" << parity_name << '\n';
  em.out << "counting limit: C(" << top << "," << m - 1 << ") = " << limit << '\n';
  em.out << "chain: sum bound " << (chain.sum_bound ? "true" : "false") << ", divisor bound "
         << (chain.divisor_bound ? "true" : "false") << ", below 8^(m-1) "
         << (chain.below_power ? "true" : "false") << " -> "
         << (chain.holds() ? "holds" : "fails") << '\n';
  em.out << "thresholds: compact at ratio <= " << ThresholdSet::ratio_cap
         << " (odd: x <= " << ThresholdSet::odd_x_cap << " a_m); not compact at ratio >= "
         << ThresholdSet::ratio_floor << " (odd: x >= " << ThresholdSet::odd_x_floor
         << " a_m); floor believed improvable to " << ThresholdSet::improvable_floor.str()
         << " (unused)\n";
}

}  // namespace detail

// Dispatches one invocation; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"compact symmetric stamp bases: reach tables, h-ranges, constructive "
               "representations, growth-rate classification, extremal search"};
  app.name("pstamp");
  app.fallthrough();
  // `nrange --h` needs the short -h freed up
  app.set_help_flag("--help", "print help");
  bool json_mode = false;
  app.add_flag("--json", json_mode, "one machine-readable record per line");

  std::vector<std::string> base_tokens;
  std::string file;
  Value opt_h = 1;
  Value opt_n = 0;
  bool use_table = false;
  bool with_trace = false;
  std::size_t opt_k = 1;
  bool all = false;
  SearchOptions search_options;
  std::size_t opt_m = 1;
  std::string parity_text;

  const auto make_sub = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->set_help_flag("--help", "print help");
    return sub;
  };
  const auto add_base = [&](CLI::App* sub) {
    sub->add_option("base", base_tokens, "base elements, ascending (comma or space separated)");
    sub->add_option("--file", file, "file with one base per line");
  };

  CLI::App* cmd_check = make_sub("check", "oracle compactness verdict");
  add_base(cmd_check);
  CLI::App* cmd_nrange = make_sub("nrange", "h-range N(h, A)");
  cmd_nrange->add_option("--h", opt_h, "number of stamps")->required();
  add_base(cmd_nrange);
  CLI::App* cmd_represent = make_sub("represent", "write n as a sum of base elements");
  cmd_represent->add_option("--n", opt_n, "target value")->required();
  cmd_represent->add_flag("--dp", use_table, "use the exact table instead of the constructive route");
  cmd_represent->add_flag("--trace", with_trace, "show the decomposition trace");
  add_base(cmd_represent);
  CLI::App* cmd_classify = make_sub("classify", "theorem-level verdict");
  add_base(cmd_classify);
  CLI::App* cmd_search = make_sub("search", "extremal compact symmetric bases");
  cmd_search->add_option("--k", opt_k, "element count")->required();
  cmd_search->add_flag("--all", all, "list every compact base, not just the extremal ones");
  cmd_search->add_option("--budget", search_options.node_budget, "node budget");
  cmd_search->add_option("--threads", search_options.threads, "worker threads");
  CLI::App* cmd_bounds = make_sub("bounds", "counting limit and inequality chain");
  cmd_bounds->add_option("--m", opt_m, "half-length")->required();
  cmd_bounds->add_option("--parity", parity_text, "even or odd")->required();

  app.require_subcommand(1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  detail::Emitter em{json_mode, out};
  std::string base_text;
  for (const std::string& tok : base_tokens) {
    base_text += tok;
    base_text += ' ';
  }

  try {
    if (cmd_check->parsed()) {
      detail::for_each_base(base_text, file,
                            [&](const std::vector<Value>& e, bool l) { detail::emit_check(em, e, l); });
    } else if (cmd_nrange->parsed()) {
      detail::for_each_base(base_text, file, [&](const std::vector<Value>& e, bool l) {
        detail::emit_nrange(em, e, opt_h, l);
      });
    } else if (cmd_represent->parsed()) {
      detail::for_each_base(base_text, file, [&](const std::vector<Value>& e, bool l) {
        detail::emit_represent(em, e, opt_n, use_table, with_trace, l);
      });
    } else if (cmd_classify->parsed()) {
      detail::for_each_base(base_text, file, [&](const std::vector<Value>& e, bool l) {
        detail::emit_classify(em, e, l);
      });
    } else if (cmd_search->parsed()) {
      detail::emit_search(em, opt_k, all, search_options);
    } else if (cmd_bounds->parsed()) {
      Parity parity;
      if (parity_text == "even") parity = Parity::even;
      else if (parity_text == "odd") parity = Parity::odd;
      else {
        err << "error: --parity must be 'even' or 'odd'\n";
        return 2;
      }
      detail::emit_bounds(em, opt_m, parity);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return detail::exit_code_for(e.code());
  }
  return 0;
}

}  // namespace pstamp::cli
