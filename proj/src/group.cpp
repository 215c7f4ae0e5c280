#include "ghostnum/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ghostnum/error.hpp"

namespace ghostnum {

bool is_prime(long long value) {
  if (value < 2) return false;
  for (long long d = 2; d * d <= value; ++d)
    if (value % d == 0) return false;
  return true;
}

int log_p(std::size_t value, int p) {
  if (value == 0 || p < 2) return -1;
  int n = 0;
  while (value % static_cast<std::size_t>(p) == 0) {
    value /= static_cast<std::size_t>(p);
    ++n;
  }
  return value == 1 ? n : -1;
}

namespace {

// Smallest prime factor q of value when value is a power of q, else 0.
long long prime_power_base(std::size_t value) {
  if (value < 2) return 0;
  for (std::size_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return log_p(value, static_cast<int>(d)) >= 0 ? static_cast<long long>(d) : 0;
  }
  return static_cast<long long>(value);
}

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << "(" << a << "," << b << "," << c << ")";
  return os.str();
}

}  // namespace

Element GroupTable::power(Element g, long long k) const {
  const auto ord = static_cast<long long>(element_order_unchecked(g));
  k %= ord;
  if (k < 0) k += ord;
  Element result = kIdentity;
  for (long long i = 0; i < k; ++i) result = mul(result, g);
  return result;
}

Element GroupTable::commutator(Element a, Element b) const {
  return mul(mul(inverse(a), inverse(b)), mul(a, b));
}

bool GroupTable::is_abelian() const {
  const auto n = static_cast<Element>(order());
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

GroupTable GroupTable::with_label(std::string label) const {
  auto copy = std::make_shared<Data>(*data_);
  copy->label = std::move(label);
  return GroupTable(std::move(copy));
}

GroupTable make_group(const std::vector<std::vector<Element>>& table, int p, std::string label) {
  const std::size_t order = table.size();
  std::vector<Element> flat;
  flat.reserve(order * order);
  for (std::size_t r = 0; r < order; ++r) {
    if (table[r].size() != order)
      throw Error(ErrorKind::NotAGroup, "table is not square (row " + std::to_string(r) + ")");
    flat.insert(flat.end(), table[r].begin(), table[r].end());
  }
  return make_group_flat(std::move(flat), order, p, std::move(label));
}

GroupTable make_group_flat(std::vector<Element> table, std::size_t order, int p,
                           std::string label) {
  if (order == 0 || table.size() != order * order)
    throw Error(ErrorKind::NotAGroup, "table is not a non-empty square array");
  if (!is_prime(p)) throw Error(ErrorKind::WrongPrime, std::to_string(p) + " is not prime");
  const int n = log_p(order, p);
  if (n < 0) {
    if (prime_power_base(order) != 0)
      throw Error(ErrorKind::WrongPrime,
                  "order " + std::to_string(order) + " is not a power of " + std::to_string(p));
    throw Error(ErrorKind::OrderNotPrimePower, "order " + std::to_string(order));
  }
  for (Element v : table)
    if (v >= order) throw Error(ErrorKind::NotAGroup, "entry out of range: " + std::to_string(v));

  auto at = [&](std::size_t a, std::size_t b) -> Element& { return table[a * order + b]; };

  std::size_t identity = order;
  for (std::size_t e = 0; e < order && identity == order; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < order && ok; ++g) ok = at(e, g) == g && at(g, e) == g;
    if (ok) identity = e;
  }
  if (identity == order) throw Error(ErrorKind::NotAGroup, "identity law fails: no two-sided identity");
  if (identity != 0) {
    // swap the labels 0 and identity
    auto relabel = [&](Element x) -> Element {
      if (x == 0) return static_cast<Element>(identity);
      if (x == identity) return 0;
      return x;
    };
    std::vector<Element> fresh(order * order);
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        fresh[relabel(static_cast<Element>(a)) * order + relabel(static_cast<Element>(b))] =
            relabel(at(a, b));
    table = std::move(fresh);
  }

  std::vector<Element> inverses(order);
  for (std::size_t g = 0; g < order; ++g) {
    std::size_t count = 0;
    for (std::size_t h = 0; h < order; ++h)
      if (at(g, h) == 0) {
        inverses[g] = static_cast<Element>(h);
        ++count;
      }
    if (count != 1 || at(inverses[g], g) != 0)
      throw Error(ErrorKind::NotAGroup, "inverse law fails for element " + std::to_string(g));
  }

  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      const Element ab = at(a, b);
      for (std::size_t c = 0; c < order; ++c)
        if (at(ab, c) != at(a, at(b, c)))
          throw Error(ErrorKind::NotAGroup, "associativity fails at " + triple(a, b, c));
    }

  std::vector<std::size_t> orders(order, 1);
  std::size_t exponent = 1;
  for (std::size_t g = 0; g < order; ++g) {
    Element x = static_cast<Element>(g);
    std::size_t k = 1;
    while (x != 0 && k <= order) {
      x = at(x, g);
      ++k;
    }
    if (x != 0 || log_p(k, p) < 0)
      throw Error(ErrorKind::WrongPrime,
                  "element " + std::to_string(g) + " has order " + std::to_string(k) +
                      ", not a power of " + std::to_string(p));
    orders[g] = k;
    exponent = std::max(exponent, k);
  }

  auto data = std::make_shared<GroupTable::Data>();
  data->p = p;
  data->n = n;
  data->order = order;
  data->label = std::move(label);
  data->table = std::move(table);
  data->inverses = std::move(inverses);
  data->orders = std::move(orders);
  data->exponent = exponent;
  return GroupTable(std::move(data));
}

std::size_t element_order(const GroupTable& g, Element x) {
  if (x >= g.order())
    throw Error(ErrorKind::IndexOutOfRange, "element " + std::to_string(x) + " of group of order " +
                                                std::to_string(g.order()));
  return g.element_order_unchecked(x);
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(GroupTable parent, std::vector<Element> elements, std::vector<Element> generators)
    : parent_(std::move(parent)),
      elements_(std::move(elements)),
      generators_(std::move(generators)),
      member_(parent_.order(), false) {
  std::sort(elements_.begin(), elements_.end());
  for (Element x : elements_) member_[x] = true;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](Element x) { return other.contains(x); });
}

namespace {

// Closure of `seed` under right multiplication by gens; seed must already
// be a subgroup (or {e}), so the result is a subgroup.
std::vector<Element> close(const GroupTable& g, std::vector<bool>& member,
                           std::vector<Element> elements, std::span<const Element> gens) {
  std::size_t head = 0;
  while (head < elements.size()) {
    const Element x = elements[head++];
    for (Element s : gens) {
      const Element y = g.mul(x, s);
      if (!member[y]) {
        member[y] = true;
        elements.push_back(y);
      }
    }
  }
  return elements;
}

void check_indices(const GroupTable& g, std::span<const Element> xs) {
  for (Element x : xs)
    if (x >= g.order())
      throw Error(ErrorKind::IndexOutOfRange, "element " + std::to_string(x) +
                                                  " of group of order " + std::to_string(g.order()));
}

}  // namespace

Subgroup join(const Subgroup& base, std::span<const Element> candidates) {
  const GroupTable& g = base.parent();
  check_indices(g, candidates);
  std::vector<bool> member(g.order(), false);
  std::vector<Element> elements = base.elements();
  for (Element x : elements) member[x] = true;
  std::vector<Element> gens = base.generators();
  for (Element c : candidates) {
    if (member[c]) continue;
    gens.push_back(c);
    elements = close(g, member, std::move(elements), gens);
  }
  return Subgroup(g, std::move(elements), std::move(gens));
}

Subgroup subgroup_generated(const GroupTable& g, std::span<const Element> gens) {
  return join(trivial_subgroup(g), gens);
}

Subgroup trivial_subgroup(const GroupTable& g) { return Subgroup(g, {kIdentity}, {}); }

Subgroup whole_group(const GroupTable& g) {
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), Element{0});
  // generators: a minimal-ish witness list
  Subgroup gen = subgroup_generated(g, all);
  return gen;
}

Subgroup center(const GroupTable& g) {
  const auto n = static_cast<Element>(g.order());
  std::vector<Element> zs;
  for (Element z = 0; z < n; ++z) {
    bool central = true;
    for (Element x = 0; x < n && central; ++x) central = g.mul(z, x) == g.mul(x, z);
    if (central) zs.push_back(z);
  }
  return subgroup_generated(g, zs);
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  const GroupTable& g = a.parent();
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> comms;
  for (Element x : a.elements())
    for (Element y : b.elements()) {
      const Element c = g.commutator(x, y);
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  return subgroup_generated(g, comms);
}

Subgroup agemo(const Subgroup& s) {
  const GroupTable& g = s.parent();
  std::vector<Element> powers;
  for (Element x : s.elements()) powers.push_back(g.power(x, g.prime()));
  return subgroup_generated(g, powers);
}

StructuralSubgroups structural_subgroups(const GroupTable& g) {
  Subgroup all = whole_group(g);
  Subgroup z = center(g);
  Subgroup derived = commutator_subgroup(all, all);
  Subgroup frattini = join(derived, agemo(all).elements());
  std::vector<Element> small;
  for (Element x : z.elements())
    if (g.element_order_unchecked(x) <= static_cast<std::size_t>(g.prime())) small.push_back(x);
  Subgroup omega = subgroup_generated(g, small);
  return {std::move(z), std::move(derived), std::move(frattini), std::move(omega), g.exponent()};
}

bool is_normal(const Subgroup& n) {
  const GroupTable& g = n.parent();
  const auto order = static_cast<Element>(g.order());
  for (Element x = 0; x < order; ++x)
    for (Element y : n.elements())
      if (!n.contains(g.mul(g.mul(x, y), g.inverse(x)))) return false;
  return true;
}

GroupTable quotient(const GroupTable& g, const Subgroup& n) {
  if (!n.parent().same_object(g) && n.parent().order() != g.order())
    throw Error(ErrorKind::NotNormal, "subgroup belongs to a different group");
  if (!is_normal(n)) throw Error(ErrorKind::NotNormal, "subgroup of order " + std::to_string(n.order()) +
                                                          " in " + g.label());
  const std::size_t order = g.order();
  constexpr Element unassigned = static_cast<Element>(-1);
  std::vector<Element> coset(order, unassigned);
  std::vector<Element> reps;
  for (Element x = 0; x < order; ++x) {
    if (coset[x] != unassigned) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element y : n.elements()) coset[g.mul(x, y)] = id;
  }
  const std::size_t qorder = reps.size();
  std::vector<Element> table(qorder * qorder);
  for (std::size_t a = 0; a < qorder; ++a)
    for (std::size_t b = 0; b < qorder; ++b) table[a * qorder + b] = coset[g.mul(reps[a], reps[b])];
  return make_group_flat(std::move(table), qorder, g.prime(),
                         g.label() + "/N" + std::to_string(n.order()));
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  if (g.prime() != h.prime())
    throw Error(ErrorKind::PrimeMismatch,
                std::to_string(g.prime()) + " vs " + std::to_string(h.prime()));
  const std::size_t gn = g.order(), hn = h.order(), order = gn * hn;
  std::vector<Element> table(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      const auto x = g.mul(static_cast<Element>(a / hn), static_cast<Element>(b / hn));
      const auto y = h.mul(static_cast<Element>(a % hn), static_cast<Element>(b % hn));
      table[a * order + b] = static_cast<Element>(x * hn + y);
    }
  return make_group_flat(std::move(table), order, g.prime(), g.label() + "x" + h.label());
}

namespace {
bool is_central(const GroupTable& g, Element z) {
  for (Element x = 0; x < g.order(); ++x)
    if (g.mul(x, z) != g.mul(z, x)) return false;
  return true;
}
}  // namespace

GroupTable central_product(const GroupTable& g, const GroupTable& h, Element zg, Element zh) {
  check_indices(g, std::span<const Element>(&zg, 1));
  check_indices(h, std::span<const Element>(&zh, 1));
  if (!is_central(g, zg)) throw Error(ErrorKind::NotCentral, "element " + std::to_string(zg) + " of " + g.label());
  if (!is_central(h, zh)) throw Error(ErrorKind::NotCentral, "element " + std::to_string(zh) + " of " + h.label());
  const std::size_t og = g.element_order_unchecked(zg), oh = h.element_order_unchecked(zh);
  if (og != oh)
    throw Error(ErrorKind::OrderMismatch,
                "central elements have orders " + std::to_string(og) + " and " + std::to_string(oh));
  if (og != static_cast<std::size_t>(g.prime()))
    throw Error(ErrorKind::OrderMismatch, "central elements must have order p");
  GroupTable prod = direct_product(g, h);
  const auto anti = static_cast<Element>(zg * h.order() + h.inverse(zh));
  GroupTable q = quotient(prod, subgroup_generated(prod, std::span<const Element>(&anti, 1)));
  return q.with_label(g.label() + "*" + h.label());
}

std::vector<Subgroup> central_order_p_subgroups(const GroupTable& g) {
  if (g.order() == 1) throw Error(ErrorKind::TrivialGroup, "the trivial group has no central subgroup of order p");
  Subgroup z = center(g);
  std::vector<Subgroup> out;
  std::vector<bool> covered(g.order(), false);
  for (Element x : z.elements()) {
    if (covered[x] || g.element_order_unchecked(x) != static_cast<std::size_t>(g.prime())) continue;
    Subgroup c = subgroup_generated(g, std::span<const Element>(&x, 1));
    for (Element y : c.elements()) covered[y] = true;
    out.push_back(std::move(c));
  }
  return out;
}

GroupTable as_group(const Subgroup& s, std::string label) {
  const GroupTable& g = s.parent();
  const auto& elems = s.elements();
  std::vector<Element> index(g.order(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<Element>(i);
  const std::size_t order = elems.size();
  std::vector<Element> table(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) table[a * order + b] = index[g.mul(elems[a], elems[b])];
  return make_group_flat(std::move(table), order, g.prime(), std::move(label));
}

}  // namespace ghostnum
