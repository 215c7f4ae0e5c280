#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ghostnum/classify.hpp"
#include "ghostnum/group.hpp"

namespace ghostnum {

// The Jennings (dimension subgroup) series G = Gamma_1 >= Gamma_2 >= ...
// ending in the trivial group, with d_s = log_p |Gamma_s : Gamma_{s+1}| and
// the radical nilpotency index t = 1 + (p-1) * sum_s s * d_s.
struct JenningsData {
  GroupTable group;
  std::vector<Subgroup> series;  // series[s-1] is Gamma_s; the last entry is trivial
  std::vector<int> dims;         // dims[s-1] is d_s; one fewer entry than series
  long long t = 1;
};

JenningsData jennings_series(const GroupTable& g);

enum class ClosedFormSource { Cyclic, ElementaryAbelian, CyclicMaximal, FrattiniOrderP, DirectProductC2 };

std::string_view to_string(ClosedFormSource source);

struct ClosedFormT {
  long long t;
  ClosedFormSource source;
};

// Nilpotency index from the known closed-form families, or nothing when G
// matches none of them.
std::optional<ClosedFormT> t_closed_form(const GroupTable& g, const ClassificationFlags& flags);

// Smallest nilpotency index among groups of order p^n (that of (C_p)^n).
inline long long t_elementary_abelian(int p, int n) { return static_cast<long long>(n) * (p - 1) + 1; }

}  // namespace ghostnum
