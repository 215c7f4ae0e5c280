#include "ghostnum/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "ghostnum/catalog.hpp"
#include "ghostnum/error.hpp"
#include "ghostnum/jennings.hpp"
#include "ghostnum/radical.hpp"

namespace ghostnum {

long long ghost_number_cyclic(int p, int n) {
  if (n <= 0) return 1;
  long long power = 1;
  for (int i = 0; i < n; ++i) power *= p;
  return p == 2 ? power / 2 : (power - 1) / 2;
}

std::string_view to_string(BoundRole role) {
  switch (role) {
    case BoundRole::Lower: return "lower";
    case BoundRole::Upper: return "upper";
    case BoundRole::Exact: return "exact";
  }
  return "?";
}

std::optional<ExactGhost> exact_ghost_number(const GroupTable& g, const ClassificationFlags& flags) {
  const int p = g.prime();
  const int n = g.log_order();
  if (g.order() == 1) return ExactGhost{1, "trivial group: every map is detected (convention)"};
  if (flags.cyclic)
    return ExactGhost{ghost_number_cyclic(p, n), "cyclic group: ceil((p^n - 1)/2)"};
  if (p == 3 && n == 2 && flags.elementary_abelian) return ExactGhost{3, "C3xC3 has ghost number 3"};
  if (is_dihedral(g)) return ExactGhost{(1LL << (n - 2)) + 1, "dihedral 2-group: 2^(n-2) + 1"};
  if (p == 2 && flags.frattini_order == 2 && !flags.extraspecial && !flags.almost_extraspecial)
    return ExactGhost{n + 1, "2-group with Frattini subgroup of order 2, not (almost) extraspecial: n + 1"};
  if (p == 2) {
    if (auto split = find_c2_direct_factor(g)) {
      const long long t = jennings_series(g).t;
      return ExactGhost{t - 1, "direct factor C2 (central involution " + std::to_string(split->involution) +
                                   " outside Frattini): t(G) - 1"};
    }
  }
  return std::nullopt;
}

CentralQuotientBound best_central_quotient(const GroupTable& g) {
  CentralQuotientBound best;
  if (g.order() == 1) return best;
  for (Subgroup& c : central_order_p_subgroups(g)) {
    const long long t = jennings_series(quotient(g, c)).t;
    if (t > best.t) {
      best.t = t;
      best.witness = std::move(c);
    }
  }
  return best;
}

BoundsReport ghost_bounds(const GroupTable& g, const BoundsOptions& options) {
  const std::size_t cap = options.cap ? options.cap : default_size_cap(g.prime());
  if (g.order() > cap)
    throw Error(ErrorKind::SizeCapExceeded, "order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));

  BoundsReport r;
  r.spec = g.label();
  r.order = g.order();
  r.p = g.prime();
  r.n = g.log_order();
  r.flags = classify(g);
  r.t_jennings = jennings_series(g).t;
  if (options.compute_radical) r.t_radical = nilpotency_index_radical(g, cap);
  const int p = r.p, n = r.n;

  if (g.order() == 1) {
    r.ghost_lower = r.ghost_upper = 1;
    r.ghost_exact = 1;
    r.sources.push_back({BoundRole::Exact, 1, "trivial group: every map is detected (convention)"});
    return r;
  }

  // upper bounds
  r.ghost_upper = r.t_jennings - 1;
  r.sources.push_back({BoundRole::Upper, r.t_jennings - 1, "ghost number < t(G)"});
  if (!r.flags.cyclic) {
    const long long cyc = ghost_number_cyclic(p, n);
    r.sources.push_back({BoundRole::Upper, cyc, "ghost number <= ghost number of the cyclic group of the same order"});
    r.ghost_upper = std::min(r.ghost_upper, cyc);
  }

  // lower bounds
  r.ghost_lower = 1;
  const bool is_c2_or_c3 = r.flags.cyclic && n == 1 && (p == 2 || p == 3);
  if (!is_c2_or_c3) {
    r.ghost_lower = 2;
    r.sources.push_back({BoundRole::Lower, 2, "nontrivial ghosts exist unless G is C2 or C3"});
  }
  const CentralQuotientBound central = best_central_quotient(g);
  if (central.witness) {
    r.sources.push_back({BoundRole::Lower, central.t,
                         "t(G/C) for central C of order p generated by element " +
                             std::to_string(central.witness->elements()[1])});
    r.ghost_lower = std::max(r.ghost_lower, central.t);
  }
  {
    const int e = log_p(r.flags.exponent, p);
    const long long cyc = ghost_number_cyclic(p, e);
    r.sources.push_back({BoundRole::Lower, cyc,
                         "ghost number of a cyclic subgroup of order " + std::to_string(r.flags.exponent)});
    r.ghost_lower = std::max(r.ghost_lower, cyc);
  }

  const auto exact = exact_ghost_number(g, r.flags);

  if (options.use_maximal_subgroups && !exact && r.ghost_lower < r.ghost_upper) {
    long long best = 0;
    std::size_t best_index = 0;
    const auto maximal = maximal_subgroups(g);
    for (std::size_t i = 0; i < maximal.size(); ++i) {
      const GroupTable sub = as_group(maximal[i], g.label() + "/max" + std::to_string(i));
      const long long t = best_central_quotient(sub).t;
      if (t > best) {
        best = t;
        best_index = i;
      }
      if (best >= r.ghost_upper) break;
    }
    if (best > 0) {
      r.sources.push_back({BoundRole::Lower, best,
                           "t(L/C) for maximal subgroup L (#" + std::to_string(best_index) +
                               ") and central C of order p in L, via subgroup monotonicity"});
      r.ghost_lower = std::max(r.ghost_lower, best);
    }
  }

  if (r.ghost_lower > r.ghost_upper)
    throw std::logic_error("inconsistent ghost interval for " + g.label());
  if (exact) {
    if (exact->value < r.ghost_lower || exact->value > r.ghost_upper)
      throw std::logic_error("exact ghost number outside the derived interval for " + g.label());
    r.sources.push_back({BoundRole::Exact, exact->value, exact->source});
    r.ghost_exact = exact->value;
    r.ghost_lower = r.ghost_upper = exact->value;
  }
  return r;
}

}  // namespace ghostnum
