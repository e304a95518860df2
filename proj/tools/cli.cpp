#include "cli.hpp"

#include "gea/dice.hpp"
#include "gea/error.hpp"
#include "gea/gasolver.hpp"
#include "gea/io.hpp"
#include "gea/laurent.hpp"
#include "gea/tales.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace gea::cli {

namespace {

/// Bad user input attributed to a flag; exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  bool timing = false;
  std::string poly;
  long k = 0;
  long a = 0;
  long n = 0;
  long N = 0;
  long j = 0;
  long fit_window = 8;
  long horizon = 40;
  std::string faces;
  long max_k = kDefaultMaxModulus;
};

/// What a subcommand produced: the JSON payload plus its text rendering.
struct Output {
  Json inputs;
  Json result;
  std::string text;
};

LaurentPoly poly_flag(const std::string& text) {
  try {
    return parse_laurent(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("-P: ") + e.what());
  }
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw DomainError(msg);
}

void check_k(long k) { require(k >= 1, "-k: must be a positive integer, got " + std::to_string(k)); }

void check_residue(long a, long k) {
  require(a >= 0 && a < k, "-a: residue must satisfy 0 <= a < k, got " + std::to_string(a));
}

void check_nonnegative(const char* flag, long v) {
  require(v >= 0, std::string(flag) + ": must be nonnegative, got " + std::to_string(v));
}

std::string join(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out;
}

std::size_t distinct_count(const GASolution& sol) {
  std::set<std::string> seen;
  for (const auto& f : sol.gfs) seen.insert(f.to_string());
  return seen.size();
}

std::string render(const GASolution& sol) {
  std::ostringstream os;
  os << "P = " << sol.P.to_string() << "\n";
  os << "k = " << sol.k << "\n";
  os << "symmetric = " << (sol.symmetric ? "true" : "false") << "\n";
  os << "common_den = " << sol.common_den.to_string() << "\n";
  os << "distinct = " << distinct_count(sol) << "\n";
  for (std::size_t a = 0; a < sol.gfs.size(); ++a) os << "f[" << a << "] = " << sol.gfs[a].to_string() << "\n";
  return os.str();
}

std::string render(const LinearRecurrence& rec) {
  std::ostringstream os;
  os << "order " << rec.order() << ", s(n) =";
  if (rec.rec_coeffs.empty()) os << " 0";
  for (std::size_t j = 0; j < rec.rec_coeffs.size(); ++j) {
    os << (j ? " + " : " ") << "(" << to_string(rec.rec_coeffs[j]) << ")*s(n-" << j + 1 << ")";
  }
  os << " for n >= " << rec.start() << "; initials [" << join(rec.initials) << "]";
  return os.str();
}

std::string render(const Tale& t) {
  std::ostringstream os;
  os << t.label << "\n";
  os << "candidate: " << render(t.candidate) << "\n";
  os << "agreement: " << t.prefix_len << " values, " << t.index_offset << " <= n <= "
     << t.index_offset + t.prefix_len - 1 << "\n";
  os << "first failure: n = " << t.first_failure_n << ", actual " << to_string(t.actual) << ", expected "
     << to_string(t.expected) << "\n";
  os << "true terms:      " << join(t.true_terms) << "\n";
  os << "candidate terms: " << join(t.candidate_terms) << "\n";
  return os.str();
}

std::string render(const GeorgeReport& r) {
  std::ostringstream os;
  auto mark = [](bool ok) { return ok ? "ok" : "FAILED"; };
  os << "rewriting identity, 0 <= n <= " << r.rewrite_horizon << ": " << mark(r.rewriting_holds) << "\n";
  os << "only j = 0 summands for n < 8: " << mark(r.only_central_summands_below_8)
     << " (first outer summand at n = " << r.first_n_with_outer_summand << ")\n";
  os << "finite check, 0 <= n <= " << r.euler_window << ": " << mark(r.euler_window_holds) << "\n";
  os << "rigorous check over " << r.rigorous.window << " terms (orders " << r.left_recurrence.order() << " and "
     << r.right_recurrence.order() << "): " << (r.rigorous.equal ? "equal" : "first_difference") << "\n";
  os << "brute force, 0 <= n <= " << r.oracle_horizon << ": " << mark(r.oracle_holds) << "\n";
  os << "verdict: " << (r.all_hold() ? "identity holds for all n >= 0" : "identity NOT verified") << "\n";
  return os.str();
}

Output cmd_ga(const Options& o, bool symmetric_path) {
  const LaurentPoly P = poly_flag(o.poly);
  check_k(o.k);
  require(!P.is_zero(), "-P: polynomial must be nonzero");
  if (symmetric_path)
    require(P.is_symmetric(), "-P: gas requires a symmetric polynomial (P(x) = P(1/x)), got " + P.to_string());
  const GASolution sol = symmetric_path ? gas(P, o.k) : ga(P, o.k);
  Output out;
  out.inputs["P"] = P.to_string();
  out.inputs["k"] = o.k;
  out.result = to_json(sol);
  out.text = render(sol);
  return out;
}

Output cmd_coeff(const Options& o) {
  const LaurentPoly P = poly_flag(o.poly);
  check_nonnegative("-n", o.n);
  const Rational c = pow(P, o.n).coeff(o.j);
  Output out;
  out.inputs["P"] = P.to_string();
  out.inputs["n"] = o.n;
  out.inputs["j"] = o.j;
  out.result = to_json(c);
  out.text = to_string(c) + "\n";
  return out;
}

Output cmd_sum(const Options& o) {
  const LaurentPoly P = poly_flag(o.poly);
  check_k(o.k);
  check_residue(o.a, o.k);
  check_nonnegative("-n", o.n);
  const Rational s = residue_sum(P, o.k, o.a, o.n);
  Output out;
  out.inputs["P"] = P.to_string();
  out.inputs["k"] = o.k;
  out.inputs["a"] = o.a;
  out.inputs["n"] = o.n;
  out.result = to_json(s);
  out.text = to_string(s) + "\n";
  return out;
}

Output cmd_series(const Options& o) {
  const LaurentPoly P = poly_flag(o.poly);
  check_k(o.k);
  check_residue(o.a, o.k);
  check_nonnegative("-N", o.N);
  require(!P.is_zero(), "-P: polynomial must be nonzero");
  const GASolution sol = ga(P, o.k);
  const auto values = series(sol.gfs[static_cast<std::size_t>(o.a)], o.N);
  Output out;
  out.inputs["P"] = P.to_string();
  out.inputs["k"] = o.k;
  out.inputs["a"] = o.a;
  out.inputs["N"] = o.N;
  out.result = to_json(values);
  out.text = join(values) + "\n";
  return out;
}

Output cmd_george() {
  const GeorgeReport r = george_check();
  if (!r.all_hold()) throw InternalError("verify-george: identity check failed\n" + render(r));
  Output out;
  out.inputs = Json::object();
  out.result = to_json(r);
  out.text = render(r);
  return out;
}

Output cmd_euler() {
  const Tale t = euler_tale();
  Output out;
  out.inputs = Json::object();
  out.result = to_json(t);
  out.text = render(t);
  return out;
}

Output cmd_tale(const Options& o) {
  const LaurentPoly P = poly_flag(o.poly);
  check_k(o.k);
  check_residue(o.a, o.k);
  require(!P.is_zero(), "-P: polynomial must be nonzero");
  require(o.fit_window >= 4, "--fit-window: must be at least 4, got " + std::to_string(o.fit_window));
  require(o.horizon > o.fit_window, "--horizon: must exceed --fit-window");
  const TaleSearch s = find_tale(P, o.k, o.a, o.fit_window, o.horizon);
  Output out;
  out.inputs["P"] = P.to_string();
  out.inputs["k"] = o.k;
  out.inputs["a"] = o.a;
  out.inputs["fit_window"] = o.fit_window;
  out.inputs["horizon"] = o.horizon;
  out.result = to_json(s);
  out.text = s.tale ? render(*s.tale) : "none (" + std::string(to_string(s.outcome)) + "): " + s.note + "\n";
  return out;
}

DieSpec faces_flag(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '@') {
    std::ifstream in(body.substr(1));
    if (!in) throw UsageError("--faces: cannot read " + body.substr(1));
    body.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return die_from_json(parse_json(body));
  } catch (const ParseError& e) {
    throw UsageError(std::string("--faces: ") + e.what());
  } catch (const DomainError& e) {
    throw DomainError(std::string("--faces: ") + e.what());
  }
}

Output cmd_dice(const Options& o, bool have_n) {
  const DieSpec die = faces_flag(o.faces);
  check_k(o.k);
  require(o.k <= o.max_k, "-k: exceeds the --max-k ceiling " + std::to_string(o.max_k));
  if (have_n) check_nonnegative("-n", o.n);
  const GASolution sol = modular_prob_gf(die, o.k, o.max_k);

  Output out;
  out.inputs["faces"] = to_json(die)["faces"];
  out.inputs["k"] = o.k;
  if (have_n) out.inputs["n"] = o.n;
  out.result["die_poly"] = die_poly(die).to_string();
  out.result["gf"] = to_json(sol);

  std::ostringstream os;
  os << "die polynomial = " << die_poly(die).to_string() << "\n";
  for (std::size_t a = 0; a < sol.gfs.size(); ++a) os << "b[" << a << "](t) = " << sol.gfs[a].to_string() << "\n";
  if (have_n) {
    const Rational even = break_even_prob(die, o.n);
    const auto probs = modular_probs(sol, o.n);
    out.result["break_even_prob"] = to_json(even);
    out.result["modular_probs"] = to_json(probs);
    os << "break even after " << o.n << " throws = " << to_string(even) << "\n";
    for (std::size_t a = 0; a < probs.size(); ++a)
      os << "P(total = " << a << " mod " << o.k << " after " << o.n << ") = " << to_string(probs[a]) << "\n";
  }
  out.text = os.str();
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generating functions for residue-class sums of Laurent polynomial powers", "gea"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--timing", o.timing, "Report wall-clock time in the JSON envelope (otherwise 0)");
  };

  auto* ga_cmd = app.add_subcommand("ga", "Generating functions f_{k,a}(t) for all residues a");
  auto* gas_cmd = app.add_subcommand("gas", "Same as ga, using the symmetric fast path");
  for (auto* sub : {ga_cmd, gas_cmd}) {
    sub->add_option("-P", o.poly, "Laurent polynomial, e.g. \"x^-1+1+x\"")->required();
    sub->add_option("-k", o.k, "Modulus")->required();
    add_format(sub);
  }

  auto* coeff_cmd = app.add_subcommand("coeff", "Coefficient of x^j in P^n");
  coeff_cmd->add_option("-P", o.poly, "Laurent polynomial")->required();
  coeff_cmd->add_option("-n", o.n, "Power")->required();
  coeff_cmd->add_option("-j", o.j, "Exponent")->required();
  add_format(coeff_cmd);

  auto* sum_cmd = app.add_subcommand("sum", "A(n,k,a) by direct expansion");
  sum_cmd->add_option("-P", o.poly, "Laurent polynomial")->required();
  sum_cmd->add_option("-k", o.k, "Modulus")->required();
  sum_cmd->add_option("-a", o.a, "Residue")->required();
  sum_cmd->add_option("-n", o.n, "Power")->required();
  add_format(sum_cmd);

  auto* series_cmd = app.add_subcommand("series", "A(0..N,k,a) from the generating function");
  series_cmd->add_option("-P", o.poly, "Laurent polynomial")->required();
  series_cmd->add_option("-k", o.k, "Modulus")->required();
  series_cmd->add_option("-a", o.a, "Residue")->required();
  series_cmd->add_option("-N", o.N, "Last index")->required();
  add_format(series_cmd);

  auto* george_cmd = app.add_subcommand("verify-george", "Verify the mod-10 trinomial identity for all n");
  add_format(george_cmd);

  auto* euler_cmd = app.add_subcommand("euler-tale", "Reproduce Euler's misleading induction");
  add_format(euler_cmd);

  auto* tale_cmd = app.add_subcommand("tale", "Search for a misleading constant-coefficient law");
  tale_cmd->add_option("-P", o.poly, "Laurent polynomial")->required();
  tale_cmd->add_option("-k", o.k, "Modulus")->required();
  tale_cmd->add_option("-a", o.a, "Residue")->required();
  tale_cmd->add_option("--fit-window", o.fit_window, "Terms used to fit the candidate")->capture_default_str();
  tale_cmd->add_option("--horizon", o.horizon, "Last index scanned for a failure")->capture_default_str();
  add_format(tale_cmd);

  auto* dice_cmd = app.add_subcommand("dice", "Residue-class probabilities for a loaded die");
  dice_cmd->add_option("--faces", o.faces, "JSON faces, inline or @file")->required();
  dice_cmd->add_option("-k", o.k, "Modulus")->required();
  auto* dice_n = dice_cmd->add_option("-n", o.n, "Number of throws");
  dice_cmd->add_option("--max-k", o.max_k, "Ceiling on k")->capture_default_str();
  add_format(dice_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  const std::map<CLI::App*, std::function<Output()>> handlers = {
      {ga_cmd, [&] { return cmd_ga(o, false); }},
      {gas_cmd, [&] { return cmd_ga(o, true); }},
      {coeff_cmd, [&] { return cmd_coeff(o); }},
      {sum_cmd, [&] { return cmd_sum(o); }},
      {series_cmd, [&] { return cmd_series(o); }},
      {george_cmd, [&] { return cmd_george(); }},
      {euler_cmd, [&] { return cmd_euler(); }},
      {tale_cmd, [&] { return cmd_tale(o); }},
      {dice_cmd, [&] { return cmd_dice(o, dice_n->count() > 0); }},
  };
  CLI::App* chosen = app.get_subcommands().front();

  try {
    const auto start = std::chrono::steady_clock::now();
    Output result = handlers.at(chosen)();
    const auto elapsed = std::chrono::steady_clock::now() - start;
    if (o.format == "json") {
      Json env;
      env["command"] = chosen->get_name();
      env["inputs"] = std::move(result.inputs);
      env["result"] = std::move(result.result);
      env["timing_ms"] = o.timing ? std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() : 0;
      out << env.dump(2) << "\n";
    } else {
      out << result.text;
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace gea::cli
