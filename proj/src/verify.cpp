#include "ghostnum/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "ghostnum/catalog.hpp"
#include "ghostnum/jennings.hpp"

namespace ghostnum {

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

std::size_t VerificationReport::count(CheckStatus status) const {
  std::size_t total = 0;
  for (const auto& g : groups)
    for (const auto& c : g.checks) total += c.status == status;
  for (const auto& o : orders)
    for (const auto& c : o.checks) total += c.status == status;
  return total;
}

namespace {

long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

CheckResult verdict(std::string id, bool ok, std::string detail) {
  return {std::move(id), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

CheckResult skipped(std::string id, std::string reason) {
  return {std::move(id), CheckStatus::Skipped, std::move(reason)};
}

template <typename... Ts>
std::string cat(const Ts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

}  // namespace

GroupVerification verify_group(const std::string& spec, const GroupTable& g, std::size_t cap) {
  GroupVerification out;
  out.spec = spec;
  BoundsOptions options;
  options.cap = cap;
  out.bounds = ghost_bounds(g, options);
  const BoundsReport& b = out.bounds;
  const ClassificationFlags& f = b.flags;
  const int p = b.p, n = b.n;
  const long long t = b.t_jennings;
  const long long order = static_cast<long long>(b.order);
  const long long t_ea = t_elementary_abelian(p, n);
  auto& checks = out.checks;

  if (b.t_radical)
    checks.push_back(verdict("t", *b.t_radical == t, cat("jennings ", t, ", radical ", *b.t_radical)));
  else
    checks.push_back(skipped("t", "radical oracle not run"));

  // a
  checks.push_back(verdict("a", b.ghost_upper < t && t <= order,
                           cat("ghost_upper ", b.ghost_upper, " < t ", t, " <= |G| ", order)));

  // b
  if (f.cyclic) {
    checks.push_back(skipped("b", "cyclic"));
  } else {
    const long long cyc = ghost_number_cyclic(p, n);
    if (order == 9) {
      const bool ok = b.ghost_exact && *b.ghost_exact == 3 && 3 < cyc && b.ghost_upper <= cyc;
      checks.push_back(verdict("b", ok, cat("order 9: exact ", b.ghost_exact.value_or(-1), " < ", cyc)));
    } else {
      bool ok = t - 1 <= cyc && b.ghost_upper <= cyc;
      if (p != 2) ok = ok && t - 1 <= ipow(p, n - 1) + p - 2 && ipow(p, n - 1) + p - 2 < cyc;
      checks.push_back(verdict("b", ok, cat("t-1 = ", t - 1, ", ghost_upper ", b.ghost_upper, " <= ", cyc)));
    }
  }

  // c
  if (p == 2) {
    checks.push_back(verdict("c", b.ghost_lower >= n, cat("ghost_lower ", b.ghost_lower, " >= n = ", n)));
  } else if (f.excluded_from_lower_bound) {
    checks.push_back(skipped("c", "excluded extraspecial group; lower bound not established"));
  } else if (f.elementary_abelian) {
    checks.push_back(skipped("c", "G is elementary abelian"));
  } else if (f.cyclic && order == 9) {
    checks.push_back(verdict("c", b.ghost_exact && *b.ghost_exact >= 3,
                             cat("C9: exact ", b.ghost_exact.value_or(-1), " >= 3 = ghost(C3xC3)")));
  } else {
    checks.push_back(verdict("c", b.ghost_lower >= t_ea,
                             cat("ghost_lower ", b.ghost_lower, " >= n(p-1)+1 = ", t_ea, " > ghost((C_p)^n)")));
  }

  // c+
  {
    std::string reason;
    if (f.elementary_abelian) reason = "elementary abelian";
    else if (p == 2 && f.extraspecial) reason = "extraspecial 2-group";
    else if (p == 2 && f.almost_extraspecial) reason = "almost extraspecial 2-group";
    else if (p != 2 && f.is_exponent_p_extraspecial) reason = "extraspecial of exponent p";
    else if (f.is_p1plus2_minus && (p == 3 || p == 5)) reason = "p^(1+2)_- for p in {3,5}";
    else if (f.cyclic && (order == 4 || order == 9)) reason = "C4 or C9";
    if (!reason.empty())
      checks.push_back(skipped("c+", reason));
    else
      checks.push_back(verdict("c+", b.ghost_lower >= t_ea, cat("ghost_lower ", b.ghost_lower, " >= ", t_ea)));
  }

  // e
  if (n >= 2) {
    const long long pn1 = ipow(p, n - 1);
    const bool formula = t == pn1 + p - 1;
    const bool sandwich = pn1 < t && t < order;
    const bool structure = !f.cyclic && f.has_cyclic_maximal_subgroup;
    checks.push_back(verdict("e", formula == sandwich && sandwich == structure,
                             cat("formula ", formula, ", sandwich ", sandwich, ", structure ", structure)));
  } else {
    checks.push_back(skipped("e", "n < 2"));
  }

  // f
  checks.push_back(verdict("f", (t == order) == f.cyclic, cat("t ", t, ", |G| ", order, ", cyclic ", f.cyclic)));

  // g
  if (f.frattini_order == static_cast<std::size_t>(p)) {
    long long expected = f.exponent == static_cast<std::size_t>(p) ? static_cast<long long>(n + 1) * (p - 1) + 1
                                                                    : static_cast<long long>(p + n - 1) * (p - 1) + 1;
    bool ok = t == expected;
    if (p == 2) ok = ok && t == n + 2;
    checks.push_back(verdict("g", ok, cat("t ", t, ", formula ", expected)));
  } else {
    checks.push_back(skipped("g", "|Phi| != p"));
  }

  // h
  if (auto split = (p == 2 ? find_c2_direct_factor(g) : std::nullopt)) {
    const long long th = jennings_series(as_group(split->complement, "H")).t;
    const bool ok = t == th + 1 && b.ghost_exact && *b.ghost_exact == th;
    checks.push_back(verdict("h", ok, cat("t(G) ", t, ", t(H) ", th, ", exact ", b.ghost_exact.value_or(-1))));
  } else {
    checks.push_back(skipped("h", "no direct factor C2"));
  }

  // i
  if (f.frattini_order > static_cast<std::size_t>(p)) {
    const Subgroup phi = structural_subgroups(g).frattini;
    long long best = 0;
    for (const Subgroup& c : central_order_p_subgroups(g))
      if (c.is_subset_of(phi)) best = std::max(best, jennings_series(quotient(g, c)).t);
    checks.push_back(verdict("i", best >= t_ea, cat("max t(G/C), C <= Phi: ", best, " >= ", t_ea)));
  } else {
    checks.push_back(skipped("i", "|Phi| <= p"));
  }
  return out;
}

namespace {

OrderVerification verify_order(int p, int n, const std::vector<GroupVerification>& groups) {
  OrderVerification out{n, {}};
  if (n < 2) {
    out.checks.push_back(skipped("d", "no noncyclic groups of order p"));
    return out;
  }
  const long long cyc = ghost_number_cyclic(p, n);
  std::set<std::string> radical_reach, final_reach;
  for (const auto& g : groups) {
    if (g.bounds.flags.cyclic) continue;
    if (g.bounds.t_jennings - 1 >= cyc) radical_reach.insert(g.spec);
    if (g.bounds.ghost_upper >= cyc) final_reach.insert(g.spec);
  }
  auto join = [](const std::set<std::string>& s) {
    std::string r = "{";
    for (const auto& x : s) r += (r.size() > 1 ? ", " : "") + x;
    return r + "}";
  };

  if (p != 2) {
    out.checks.push_back(verdict("d", final_reach.empty(), cat("noncyclic groups reaching ", cyc, ": ", join(final_reach))));
    return out;
  }
  const long long order = ipow(2, n);
  std::set<std::string> expected;
  const std::string dihedral = "D(" + std::to_string(order) + ")";
  if (n == 2) {
    expected = {"EA(2,2)"};
  } else {
    expected = {"C(2)xC(" + std::to_string(order / 2) + ")", dihedral, "Q(" + std::to_string(order) + ")"};
    if (n >= 4) {
      expected.insert("SD(" + std::to_string(order) + ")");
      expected.insert("Mod(" + std::to_string(order) + ")");
    }
  }
  bool ok = radical_reach == expected;
  std::string detail = cat("t-1 reaches ", cyc, ": ", join(radical_reach));
  if (n >= 3) {
    const auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.spec == dihedral; });
    const long long dihedral_value = (1LL << (n - 2)) + 1;
    const bool eliminated = it != groups.end() && it->bounds.ghost_exact && *it->bounds.ghost_exact == dihedral_value &&
                            dihedral_value < cyc;
    std::set<std::string> survivors = expected;
    survivors.erase(dihedral);
    ok = ok && eliminated && final_reach == survivors;
    detail += cat("; dihedral exact ", dihedral_value, " < ", cyc, "; attaining: ", join(final_reach));
  } else {
    ok = ok && final_reach == expected;
  }
  out.checks.push_back(verdict("d", ok, detail));
  return out;
}

}  // namespace

VerificationReport verify_theorems(int p, int n_max, const VerifyOptions& options) {
  VerificationReport report;
  report.p = p;
  report.n_max = n_max;
  // fail fast on the cap before doing any work
  catalog_specs(p, n_max);
  for (int n = 1; n <= n_max; ++n) {
    const auto entries = catalog_of_order(p, n, options.cap);
    std::vector<GroupVerification> results(entries.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      for (std::size_t i = next++; i < entries.size(); i = next++) {
        try {
          results[i] = verify_group(entries[i].spec.to_string(), entries[i].group, options.cap);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> threads;
      for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker);
      for (auto& th : threads) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    report.orders.push_back(verify_order(p, n, results));
    for (auto& r : results) report.groups.push_back(std::move(r));
  }
  return report;
}

}  // namespace ghostnum
