#include "ghostnum/classify.hpp"

#include <algorithm>

namespace ghostnum {

namespace {

struct FrattiniCoordinates {
  Subgroup frattini;
  std::vector<Element> basis;            // lifts of a basis of G/Phi
  std::vector<std::vector<int>> coords;  // coordinates of each element in G/Phi
};

FrattiniCoordinates frattini_coordinates(const GroupTable& g, Subgroup frattini,
                                         std::vector<Element> preferred = {}) {
  const int p = g.prime();
  std::vector<Element> basis;
  Subgroup span = frattini;
  for (Element x : preferred)
    if (!span.contains(x)) {
      basis.push_back(x);
      span = join(span, std::span<const Element>(&x, 1));
    }
  for (Element x = 0; x < g.order(); ++x)
    if (!span.contains(x)) {
      basis.push_back(x);
      span = join(span, std::span<const Element>(&x, 1));
    }

  const std::size_t d = basis.size();
  std::vector<std::vector<int>> coords(g.order(), std::vector<int>(d, 0));
  std::vector<int> a(d, 0);
  for (;;) {
    Element x = kIdentity;
    for (std::size_t i = 0; i < d; ++i) x = g.mul(x, g.power(basis[i], a[i]));
    for (Element f : frattini.elements()) coords[g.mul(x, f)] = a;
    std::size_t i = 0;
    while (i < d && ++a[i] == p) a[i++] = 0;
    if (i == d) break;
  }
  return {std::move(frattini), std::move(basis), std::move(coords)};
}

}  // namespace

ClassificationFlags classify(const GroupTable& g) {
  const auto s = structural_subgroups(g);
  const auto p = static_cast<std::size_t>(g.prime());
  const int n = g.log_order();
  ClassificationFlags f;
  f.exponent = s.exponent;
  f.frattini_order = s.frattini.order();
  f.center_order = s.center.order();
  f.derived_order = s.derived.order();
  f.cyclic = s.exponent == g.order();
  f.abelian = s.center.order() == g.order();
  f.elementary_abelian = f.abelian && s.exponent <= p;
  f.extraspecial = s.center.order() == p && s.frattini == s.center && s.derived == s.center;
  const bool center_cyclic_p2 =
      s.center.order() == p * p &&
      std::any_of(s.center.elements().begin(), s.center.elements().end(),
                  [&](Element z) { return g.element_order_unchecked(z) == p * p; });
  f.almost_extraspecial = s.frattini == s.derived && s.frattini.order() == p && center_cyclic_p2;

  if (n >= 1) {
    std::size_t target = 1;
    for (int i = 0; i < n - 1; ++i) target *= p;
    for (Element x = 0; x < g.order() && !f.has_cyclic_maximal_subgroup; ++x)
      f.has_cyclic_maximal_subgroup = g.element_order_unchecked(x) == target;
  }

  f.is_exponent_p_extraspecial = f.extraspecial && s.exponent == p;
  if (f.extraspecial && n == 3) {
    if (p == 2) {
      std::size_t involutions = 0;
      for (Element x = 1; x < g.order(); ++x) involutions += g.element_order_unchecked(x) == 2;
      f.is_p1plus2_minus = involutions == 1;
    } else {
      f.is_p1plus2_minus = s.exponent == p * p;
    }
  }
  f.excluded_from_lower_bound = (f.is_exponent_p_extraspecial && p != 2) ||
                     (f.extraspecial && n == 3 && s.exponent == p * p && (p == 3 || p == 5));
  return f;
}

std::vector<Subgroup> maximal_subgroups(const GroupTable& g) {
  if (g.order() == 1) return {};
  const int p = g.prime();
  auto fc = frattini_coordinates(g, structural_subgroups(g).frattini);
  const std::size_t d = fc.basis.size();
  std::vector<Subgroup> out;
  std::vector<int> lambda(d, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < d && ++lambda[i] == p) lambda[i++] = 0;
    if (i == d) break;
    // one functional per hyperplane: leading nonzero coefficient equal to 1
    auto lead = std::find_if(lambda.begin(), lambda.end(), [](int v) { return v != 0; });
    if (*lead != 1) continue;
    std::vector<Element> members;
    for (Element x = 0; x < g.order(); ++x) {
      long long dot = 0;
      for (std::size_t k = 0; k < d; ++k) dot += static_cast<long long>(lambda[k]) * fc.coords[x][k];
      if (dot % p == 0) members.push_back(x);
    }
    out.push_back(join(fc.frattini, members));
  }
  return out;
}

std::optional<DirectFactorSplit> find_c2_direct_factor(const GroupTable& g) {
  if (g.prime() != 2 || g.order() == 1) return std::nullopt;
  const auto s = structural_subgroups(g);
  for (Element z : s.center.elements()) {
    if (g.element_order_unchecked(z) != 2 || s.frattini.contains(z)) continue;
    auto fc = frattini_coordinates(g, s.frattini, {z});
    std::vector<Element> rest(fc.basis.begin() + 1, fc.basis.end());
    Subgroup complement = join(fc.frattini, rest);
    if (complement.order() * 2 == g.order() && !complement.contains(z))
      return DirectFactorSplit{std::move(complement), z};
  }
  return std::nullopt;
}

bool is_dihedral(const GroupTable& g) {
  if (g.prime() != 2 || g.log_order() < 3) return false;
  const std::size_t half = g.order() / 2;
  for (Element r = 0; r < g.order(); ++r) {
    if (g.element_order_unchecked(r) != half) continue;
    Subgroup c = subgroup_generated(g, std::span<const Element>(&r, 1));
    bool all_involutions = true;
    for (Element x = 0; x < g.order() && all_involutions; ++x)
      if (!c.contains(x)) all_involutions = g.element_order_unchecked(x) == 2;
    if (all_involutions) return true;
  }
  return false;
}

}  // namespace ghostnum
