#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ghostnum/classify.hpp"
#include "ghostnum/group.hpp"

namespace ghostnum {

// Ghost number of k C_{p^n}: ceil((p^n - 1) / 2), and 1 for the trivial group.
long long ghost_number_cyclic(int p, int n);

struct ExactGhost {
  long long value;
  std::string source;
};

// Exact ghost number for the families where it is known; never claims a
// value without a structural witness.
std::optional<ExactGhost> exact_ghost_number(const GroupTable& g, const ClassificationFlags& flags);

enum class BoundRole { Lower, Upper, Exact };
std::string_view to_string(BoundRole role);

struct BoundSource {
  BoundRole role;
  long long value;
  std::string provenance;
};

struct BoundsReport {
  std::string spec;
  std::size_t order = 1;
  int p = 0;
  int n = 0;
  long long t_jennings = 0;
  std::optional<long long> t_radical;
  ClassificationFlags flags;
  long long ghost_lower = 1;
  long long ghost_upper = 1;
  std::optional<long long> ghost_exact;
  std::vector<BoundSource> sources;
};

struct BoundsOptions {
  bool compute_radical = true;
  std::size_t cap = 0;  // 0 selects the per-prime default
  // Lower bounds from central quotients of maximal subgroups; skipped once
  // the interval has already closed.
  bool use_maximal_subgroups = true;
};

BoundsReport ghost_bounds(const GroupTable& g, const BoundsOptions& options = {});

// Largest t(G/C) over central subgroups C of order p, with the maximizing C.
struct CentralQuotientBound {
  long long t = 0;
  std::optional<Subgroup> witness;
};
CentralQuotientBound best_central_quotient(const GroupTable& g);

}  // namespace ghostnum
