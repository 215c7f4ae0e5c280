#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ghostnum/bounds.hpp"

namespace ghostnum {

enum class CheckStatus { Pass, Fail, Skipped };
std::string_view to_string(CheckStatus status);

struct CheckResult {
  std::string id;
  CheckStatus status;
  std::string detail;
};

struct GroupVerification {
  std::string spec;
  BoundsReport bounds;
  std::vector<CheckResult> checks;
};

// Checks that quantify over all catalog groups of one order.
struct OrderVerification {
  int n;
  std::vector<CheckResult> checks;
};

struct VerificationReport {
  int p = 0;
  int n_max = 0;
  std::vector<GroupVerification> groups;
  std::vector<OrderVerification> orders;

  std::size_t count(CheckStatus status) const;
  bool all_passed() const { return count(CheckStatus::Fail) == 0; }
};

struct VerifyOptions {
  std::size_t cap = 0;
  unsigned jobs = 1;
};

// Per-group checks (ids):
//   a  ghost_upper < t(G) <= |G|
//   b  noncyclic groups sit below the cyclic ghost number (exact values at order 9)
//   c  ghost number of (C_p)^n is a lower bound, outside the excluded groups
//   c+ the stronger bound t((C_p)^n) = n(p-1)+1 where its hypotheses hold
//   e  t = p^(n-1)+p-1  <=>  noncyclic with a cyclic maximal subgroup  <=>  p^(n-1) < t < p^n
//   f  t = |G|  <=>  cyclic
//   g  |Phi| = p  =>  t matches the exponent formula
//   h  G = H x C2  =>  t(G) = t(H)+1 and ghost(G) = t(H)
//   i  |Phi| > p  =>  t(G/C) >= n(p-1)+1 for central C of order p inside Phi
//   t  Jennings and radical nilpotency indices agree
// Per-order check:
//   d  noncyclic groups whose radical bound reaches the cyclic ghost number
//      are exactly C2 x C_{2^(n-1)}, D, Q, SD, Mod, and D drops out by its exact value
VerificationReport verify_theorems(int p, int n_max, const VerifyOptions& options = {});

// The checks for one group, exposed for targeted tests.
GroupVerification verify_group(const std::string& spec, const GroupTable& g, std::size_t cap = 0);

}  // namespace ghostnum
