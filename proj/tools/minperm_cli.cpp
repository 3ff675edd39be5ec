// minperm: counting, enumeration, bijection and RSK front end.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 usage or parse error,
// 3 brute-force cap exceeded.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "minperm/bijection.hpp"
#include "minperm/counting.hpp"
#include "minperm/enumerate.hpp"
#include "minperm/error.hpp"
#include "minperm/json_io.hpp"
#include "minperm/rsk.hpp"
#include "minperm/tableau.hpp"
#include "minperm/verify.hpp"

namespace {

using namespace minperm;
using nlohmann::json;

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2, kCap = 3 };

struct Common {
  std::optional<std::size_t> max_brute_n;
  unsigned threads = 0;

  BruteForceLimits limits() const {
    BruteForceLimits l = BruteForceLimits::from_environment();
    if (max_brute_n) l.max_n = *max_brute_n;
    l.threads = threads;
    return l;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--max-brute-n", c.max_brute_n, "largest n for exhaustive scans (env MINPERM_MAX_BRUTE_N)");
  cmd->add_option("--threads", c.threads, "worker threads for S_n scans (0 = all cores)");
}

struct CountArgs {
  long n = 0;
  std::optional<long> d;
  std::string ascents;
  std::string method = "det";
  std::string format = "csv";
};

void emit_count_header(const CountArgs& a, bool with_ascents) {
  if (a.format == "csv") std::cout << (with_ascents ? "n,ascents,count\n" : "n,d,count\n");
}

void emit_count(const CountArgs& a, long d, const Count& count) {
  if (a.format == "csv") {
    std::cout << a.n << ',' << d << ',' << count.get_str() << '\n';
  } else {
    std::cout << json{{"n", a.n}, {"d", d}, {"count", count_to_json(count)}}.dump() << '\n';
  }
}

int run_count(const CountArgs& a, const Common& common) {
  if (a.n < 1) throw InvalidInput("--n must be at least 1");
  if (!a.ascents.empty()) {
    const AscentSequence seq = parse_ascent_sequence(a.ascents);
    if (seq.total() != static_cast<int>(a.n)) {
      throw InvalidInput("--ascents " + a.ascents + " sums to " + std::to_string(seq.total()) +
                         ", not --n " + std::to_string(a.n));
    }
    if (a.d && *a.d != a.n - static_cast<long>(seq.length())) {
      throw InvalidInput("--d " + std::to_string(*a.d) + " disagrees with --ascents, which force d = " +
                         std::to_string(a.n - static_cast<long>(seq.length())));
    }
    Count count;
    if (a.method == "det") {
      count = seq.all_parts_at_least_two() ? count_by_ascents(seq) : Count(0);
    } else if (a.method == "brute") {
      const auto limits = common.limits();
      require_within_cap(static_cast<std::size_t>(a.n), limits.max_n, "count --method brute");
      MinimalFilter filter;
      filter.ascents = seq;
      count = static_cast<unsigned long>(enumerate_minimal(static_cast<std::size_t>(a.n), filter, limits).size());
    } else {
      throw InvalidInput("--method closed has no per-ascent-sequence formula; use det or brute");
    }
    emit_count_header(a, true);
    if (a.format == "csv") {
      std::cout << a.n << ",\"" << format_ascent_sequence(seq) << "\"," << count.get_str() << '\n';
    } else {
      std::cout << json{{"n", a.n}, {"ascents", seq.parts()}, {"count", count_to_json(count)}}.dump() << '\n';
    }
    return kOk;
  }

  long d_lo = 1;
  long d_hi = a.n - 1;
  if (a.d) {
    if (*a.d < 0 || *a.d >= a.n) {
      throw InvalidInput("--d must lie in 0.." + std::to_string(a.n - 1));
    }
    d_lo = d_hi = *a.d;
  }

  std::vector<std::pair<long, Count>> rows;
  if (a.method == "det") {
    for (long d = d_lo; d <= d_hi; ++d) rows.emplace_back(d, count_minimal(d, a.n));
  } else if (a.method == "closed") {
    for (long d = d_lo; d <= d_hi; ++d) {
      if (auto v = closed_form(d, a.n)) rows.emplace_back(d, *v);
    }
    if (a.d && rows.empty()) {
      throw InvalidInput("no closed form is known for d=" + std::to_string(*a.d) + ", n=" + std::to_string(a.n));
    }
  } else {
    const auto limits = common.limits();
    require_within_cap(static_cast<std::size_t>(a.n), limits.max_n, "count --method brute");
    const auto counts = brute_counts_by_descents(static_cast<std::size_t>(a.n), limits);
    for (long d = d_lo; d <= d_hi; ++d) {
      rows.emplace_back(d, Count(static_cast<unsigned long>(counts[static_cast<std::size_t>(d)])));
    }
  }
  emit_count_header(a, false);
  for (const auto& [d, c] : rows) emit_count(a, d, c);
  return kOk;
}

struct RefinedArgs {
  long n = 0;
  std::optional<long> i;
  std::string method = "formula";
  std::string format = "csv";
};

int run_refined(const RefinedArgs& a, const Common& common) {
  if (a.n < 1) throw InvalidInput("--n must be at least 1");
  if (a.i && (*a.i < 1 || *a.i > a.n)) throw InvalidInput("--i must lie in 1.." + std::to_string(a.n));
  const long lo = a.i.value_or(1);
  const long hi = a.i.value_or(a.n);
  if (a.method == "brute") {
    require_within_cap(static_cast<std::size_t>(2 * a.n + 1), common.limits().max_n, "refined --method brute");
  }
  if (a.format == "csv") std::cout << "n,i,count\n";
  for (long i = lo; i <= hi; ++i) {
    Count count;
    if (a.method == "formula") {
      count = count_refined(a.n, i);
    } else if (a.method == "aitken") {
      std::vector<int> inner;
      if (i > 1) inner.push_back(static_cast<int>(i - 1));
      count = aitken_count(SkewShape(Partition({static_cast<int>(a.n), static_cast<int>(a.n), static_cast<int>(i)}),
                                     Partition(inner)));
    } else {
      MinimalFilter filter;
      filter.descents = static_cast<std::size_t>(a.n + 1);
      filter.consecutive_descents_at = static_cast<std::size_t>(2 * i - 1);
      count = static_cast<unsigned long>(
          enumerate_minimal(static_cast<std::size_t>(2 * a.n + 1), filter, common.limits()).size());
    }
    if (a.format == "csv") {
      std::cout << a.n << ',' << i << ',' << count.get_str() << '\n';
    } else {
      std::cout << json{{"n", a.n}, {"i", i}, {"count", count_to_json(count)}}.dump() << '\n';
    }
  }
  return kOk;
}

struct EnumerateArgs {
  std::size_t n = 0;
  std::optional<std::size_t> d;
  std::string ascents;
  std::string format = "text";
};

int run_enumerate(const EnumerateArgs& a, const Common& common) {
  MinimalFilter filter;
  filter.descents = a.d;
  if (!a.ascents.empty()) {
    filter.ascents = parse_ascent_sequence(a.ascents);
    if (filter.ascents->total() != static_cast<int>(a.n)) throw InvalidInput("--ascents must sum to --n");
  }
  for (const Permutation& p : enumerate_minimal(a.n, filter, common.limits())) {
    if (a.format == "json") {
      std::cout << json{{"perm", p.word()}, {"descents", descent_count(p)},
                        {"ascents", maximal_decreasing_runs(p).parts()}}
                       .dump()
                << '\n';
    } else {
      std::cout << format_permutation(p) << '\n';
    }
  }
  return kOk;
}

struct BijectionArgs {
  std::string perm;
  std::string tableau;
};

int run_bijection(const BijectionArgs& a) {
  if (a.perm.empty() == a.tableau.empty()) throw InvalidInput("give exactly one of --perm and --tableau");
  json out;
  bool round_trip = false;
  if (!a.perm.empty()) {
    const Permutation p = parse_permutation(a.perm);
    const SkewTableau t = perm_to_tableau(p);
    round_trip = tableau_to_perm(t) == p;
    out = {{"perm", format_permutation(p)}, {"ascents", format_ascent_sequence(maximal_decreasing_runs(p))},
           {"tableau", tableau_to_json(t)}};
  } else {
    json parsed;
    try {
      parsed = json::parse(a.tableau);
    } catch (const json::parse_error& e) {
      throw ParseError("tableau is not valid JSON", e.byte);
    }
    const SkewTableau t = tableau_from_json(parsed);
    const Permutation p = tableau_to_perm(t);
    round_trip = perm_to_tableau(p) == t;
    out = {{"tableau", tableau_to_json(t)}, {"perm", format_permutation(p)},
           {"ascents", format_ascent_sequence(maximal_decreasing_runs(p))}};
  }
  out["round_trip"] = round_trip;
  std::cout << out.dump() << '\n';
  return round_trip ? kOk : kMismatch;
}

int run_rsk(const std::string& perm_text) {
  const Permutation p = parse_permutation(perm_text);
  const RskResult r = rsk(p);
  json paths = json::array();
  for (const auto& path : r.paths) paths.push_back(path_to_json(path));
  std::cout << json{{"perm", format_permutation(p)},
                    {"P", young_to_json(r.insertion)},
                    {"Q", young_to_json(r.recording)},
                    {"shape", r.insertion.shape().parts()},
                    {"paths", paths}}
                   .dump()
            << '\n';
  return kOk;
}

int run_knuth_chain(const std::string& perm_text) {
  const Permutation p = parse_permutation(perm_text);
  const auto idx = refined_index(p);
  if (!idx) {
    throw InvalidInput("permutation " + format_permutation(p) + " is not minimal of length 2n+1 with n+1 descents");
  }
  json moves = json::array();
  Permutation w = p;
  for (const KnuthMove& m : knuth_chain(p)) {
    w = apply_knuth_move(w, m);
    moves.push_back({{"position", m.position}, {"kind", to_string(m.kind)}, {"word", format_permutation(w)}});
  }
  const Permutation target = rearrange_tail(p);
  if (!(w == target)) throw InternalError("Knuth chain ended at " + format_permutation(w));
  std::cout << json{{"perm", format_permutation(p)},
                    {"n", idx->n},
                    {"i", idx->i},
                    {"moves", moves},
                    {"final", format_permutation(w)},
                    {"P", young_to_json(forward_map(p))}}
                   .dump()
            << '\n';
  return kOk;
}

int run_verify(VerifyOptions opts, const Common& common) {
  opts.limits = common.limits();
  const VerifyReport report = run_verification(opts);
  std::cout << report.to_json().dump(2) << '\n';
  if (const CheckResult* bad = report.first_failure()) {
    std::cerr << "FAIL " << bad->name << ": " << bad->counterexample << '\n';
    return kMismatch;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal permutations with d descents: counting, bijections and RSK checks"};
  app.require_subcommand(1);
  Common common;

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "f_d(n) or F_a tables");
  count->add_option("--n", count_args.n, "permutation length")->required();
  count->add_option("--d", count_args.d, "number of descents (default: all)");
  count->add_option("--ascents", count_args.ascents, "ascent sequence a1,a2,...");
  count->add_option("--method", count_args.method)->check(CLI::IsMember({"det", "closed", "brute"}));
  count->add_option("--format", count_args.format)->check(CLI::IsMember({"csv", "json"}));
  add_common(count, common);

  RefinedArgs refined_args;
  auto* refined = app.add_subcommand("refined", "sizes of the refined classes of length 2n+1");
  refined->add_option("--n", refined_args.n)->required();
  refined->add_option("--i", refined_args.i);
  refined->add_option("--method", refined_args.method)->check(CLI::IsMember({"formula", "aitken", "brute"}));
  refined->add_option("--format", refined_args.format)->check(CLI::IsMember({"csv", "json"}));
  add_common(refined, common);

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "list minimal permutations");
  enumerate->add_option("--n", enum_args.n)->required();
  enumerate->add_option("--d", enum_args.d);
  enumerate->add_option("--ascents", enum_args.ascents);
  enumerate->add_option("--format", enum_args.format)->check(CLI::IsMember({"text", "json"}));
  add_common(enumerate, common);

  BijectionArgs bij_args;
  auto* bijection = app.add_subcommand("bijection", "permutation <-> 2-regular skew tableau");
  bijection->add_option("--perm", bij_args.perm, "e.g. \"2 1 4 3\"");
  bijection->add_option("--tableau", bij_args.tableau, "JSON {\"shape\":..., \"rows\":[[null,1],...]}");

  std::string rsk_perm;
  auto* rsk_cmd = app.add_subcommand("rsk", "insertion and recording tableaux with paths");
  rsk_cmd->add_option("--perm", rsk_perm)->required();

  std::string chain_perm;
  auto* chain = app.add_subcommand("knuth-chain", "Knuth moves from pi to its rearranged form");
  chain->add_option("--perm", chain_perm)->required();

  VerifyOptions verify_opts;
  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "cross-check every counting and bijection law");
  verify->add_option("--max-n", verify_opts.max_n, "largest length for exhaustive checks");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"all", "counts", "bijection", "rsk"}));
  verify->add_option("--seed", verify_opts.seed);
  verify->add_flag("--inject-fault", verify_opts.inject_fault, "perturb the ascent matrices (harness self-test)");
  add_common(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*count) return run_count(count_args, common);
    if (*refined) return run_refined(refined_args, common);
    if (*enumerate) return run_enumerate(enum_args, common);
    if (*bijection) return run_bijection(bij_args);
    if (*rsk_cmd) return run_rsk(rsk_perm);
    if (*chain) return run_knuth_chain(chain_perm);
    if (*verify) {
      verify_opts.suite = parse_suite(suite);
      return run_verify(verify_opts, common);
    }
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCap;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kMismatch;
  }
  return kUsage;
}
