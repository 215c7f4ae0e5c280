#include "ghostnum/cli.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "ghostnum/bounds.hpp"
#include "ghostnum/catalog.hpp"
#include "ghostnum/error.hpp"
#include "ghostnum/jennings.hpp"
#include "ghostnum/radical.hpp"
#include "ghostnum/report.hpp"
#include "ghostnum/stmod.hpp"
#include "ghostnum/verify.hpp"

namespace ghostnum {

using nlohmann::json;

namespace {

constexpr std::size_t kCapWarning = 512;

struct Options {
  std::string spec;
  std::size_t cap = 0;
  std::string oracle = "jennings";
  int p = 0;
  int max_n = 0;
  std::string format = "json";
  unsigned jobs = 1;
  int m = 0;
  int L = 0;
  std::size_t budget = SearchBudget{}.max_nodes;
  int blocks = SearchBudget{}.max_blocks;
  bool certify_exact = false;
};

std::size_t effective_cap(const Options& o, int p) { return o.cap ? o.cap : default_size_cap(p); }

GroupTable build_within_cap(const Options& o) {
  const GroupSpec spec = parse_spec(o.spec);
  validate(spec);
  const std::size_t cap = effective_cap(o, spec.prime());
  if (spec.order() > static_cast<long long>(cap))
    throw Error(ErrorKind::SizeCapExceeded, "order of " + spec.to_string() + " exceeds cap " + std::to_string(cap) +
                                                " (raise with --cap-order)");
  return build(spec);
}

int cmd_info(const Options& o, std::ostream& out) {
  const GroupTable g = build_within_cap(o);
  out << dump(make_report({{"name", "info"}, {"spec", o.spec}}, group_info_json(g), summary_json(0, 0, 0)));
  return kExitOk;
}

int cmd_tindex(const Options& o, std::ostream& out) {
  const GroupTable g = build_within_cap(o);
  json result = {{"spec", g.label()}, {"oracle", o.oracle}};
  std::optional<long long> tj, tr;
  if (o.oracle != "radical") result["jennings"] = *(tj = jennings_series(g).t);
  if (o.oracle != "jennings") result["radical"] = *(tr = nilpotency_index_radical(g, effective_cap(o, g.prime())));
  int code = kExitOk;
  json summary = summary_json(0, 0, 0);
  if (tj && tr) {
    const bool agree = *tj == *tr;
    result["agree"] = agree;
    summary = summary_json(agree, !agree, 0);
    if (!agree) code = kExitCheckFailed;
  }
  out << dump(make_report({{"name", "tindex"}, {"spec", o.spec}, {"oracle", o.oracle}}, result, summary));
  return code;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const GroupTable g = build_within_cap(o);
  BoundsOptions opts;
  opts.cap = effective_cap(o, g.prime());
  out << dump(make_report({{"name", "bounds"}, {"spec", o.spec}}, bounds_json(ghost_bounds(g, opts)),
                          summary_json(0, 0, 0)));
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (!is_prime(o.p)) throw Error(ErrorKind::InvalidSpec, "--p must be prime, got " + std::to_string(o.p));
  if (o.max_n < 1) throw Error(ErrorKind::InvalidSpec, "--max-n must be at least 1");
  VerifyOptions opts;
  opts.cap = o.cap;
  opts.jobs = std::max(1u, o.jobs);
  const VerificationReport r = verify_theorems(o.p, o.max_n, opts);
  if (o.format == "csv") {
    out << verification_csv(r);
  } else if (o.format == "md") {
    out << verification_markdown(r);
  } else {
    const json command = {{"name", "verify"}, {"p", o.p}, {"max_n", o.max_n}};
    out << dump(make_report(command, verification_json(r),
                            summary_json(r.count(CheckStatus::Pass), r.count(CheckStatus::Fail),
                                         r.count(CheckStatus::Skipped))));
  }
  return r.all_passed() ? kExitOk : kExitCheckFailed;
}

int cmd_ghost_chain(const Options& o, std::ostream& out) {
  const int p = prime_of_modulus(o.m);
  if (o.m > desk_scale_limit(p))
    throw Error(ErrorKind::InvalidModulus, "modulus " + std::to_string(o.m) + " beyond the search limit " +
                                               std::to_string(desk_scale_limit(p)));
  if (o.L < 0) throw Error(ErrorKind::InvalidSpec, "--L must be positive");
  SearchBudget budget;
  budget.max_nodes = o.budget;
  budget.max_blocks = o.blocks;
  const long long expected = ghost_number_cyclic(p, log_p(static_cast<std::size_t>(o.m), p));

  json command = {{"name", "ghost-chain"}, {"m", o.m}, {"budget", o.budget}, {"blocks", o.blocks},
                  {"certify_exact", o.certify_exact}};
  json result = {{"modulus", o.m}, {"p", p}};
  long long bound = 1;
  std::optional<ChainCertificate> certificate;
  if (o.L > 0) {
    command["L"] = o.L;
    const ChainSearchResult r = ghost_chain_search(o.m, o.L, budget);
    result["method"] = r.method;
    result["nodes_examined"] = r.nodes;
    if (r.certificate) {
      bound = o.L + 1;
      certificate = r.certificate;
      result["status"] = "certificate";
    } else if (r.exhausted) {
      result["status"] = "exhausted";
      result["note"] = o.L == 1 ? "no stably nontrivial ghost among the modules searched"
                                : "no chain among the modules and maps searched";
    } else {
      result["status"] = "budget-exceeded";
      result["note"] = "search stopped at the node budget; not evidence of absence";
    }
  } else {
    const CertifiedBound c = certified_lower_bound(o.m, budget);
    bound = c.bound;
    certificate = c.certificate;
    result["status"] = certificate ? "certificate" : "no-chain";
  }
  result["certified_lower_bound"] = bound;
  result["certificate"] = certificate ? certificate_json(*certificate) : json(nullptr);
  if (certificate) result["certificate_checked"] = check_certificate(*certificate);

  int code = kExitOk;
  json summary = summary_json(0, 0, 0);
  if (o.certify_exact) {
    const bool ok = bound == expected && (!certificate || check_certificate(*certificate));
    result["expected"] = expected;
    summary = summary_json(ok, !ok, 0);
    if (!ok) code = kExitCheckFailed;
  }
  out << dump(make_report(command, result, summary));
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nilpotency indices and ghost-number bounds for p-group algebras", "ghostnum"};
  app.require_subcommand(1);
  Options o;

  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap-order", o.cap, "largest group order to build (default depends on p)");
  };

  auto* info = app.add_subcommand("info", "structure and classification of a group");
  info->add_option("spec", o.spec, "group spec, e.g. Q(8) or C(2)xD(8)")->required();
  add_cap(info);

  auto* tindex = app.add_subcommand("tindex", "nilpotency index of the radical");
  tindex->add_option("spec", o.spec, "group spec")->required();
  tindex->add_option("--oracle", o.oracle, "jennings, radical or both")
      ->check(CLI::IsMember({"jennings", "radical", "both"}));
  add_cap(tindex);

  auto* bounds = app.add_subcommand("bounds", "ghost number interval with its sources");
  bounds->add_option("spec", o.spec, "group spec")->required();
  add_cap(bounds);

  auto* verify = app.add_subcommand("verify", "run every check over the catalog");
  verify->add_option("--p", o.p, "prime")->required();
  verify->add_option("--max-n", o.max_n, "largest exponent n of |G| = p^n")->required();
  verify->add_option("--format", o.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
  verify->add_option("--jobs", o.jobs, "worker threads");
  add_cap(verify);

  auto* chain = app.add_subcommand("ghost-chain", "certify ghost chains over k[x]/(x^m)");
  chain->add_option("--m", o.m, "modulus p^n")->required();
  chain->add_option("--L", o.L, "chain length; omitted means find the longest");
  chain->add_option("--budget", o.budget, "maps examined before giving up");
  chain->add_option("--blocks", o.blocks, "non-projective blocks per module");
  chain->add_flag("--certify-exact", o.certify_exact, "fail unless the bound equals ceil((m-1)/2)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (o.cap > kCapWarning)
    err << "warning: --cap-order " << o.cap << " is above " << kCapWarning
        << "; tables and radical computations grow quadratically and may exhaust memory\n";

  try {
    if (*info) return cmd_info(o, out);
    if (*tindex) return cmd_tindex(o, out);
    if (*bounds) return cmd_bounds(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*chain) return cmd_ghost_chain(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace ghostnum
