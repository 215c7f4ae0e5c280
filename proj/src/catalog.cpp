#include "ghostnum/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <sstream>

#include "ghostnum/error.hpp"

namespace ghostnum {

namespace {

long long ipow(long long base, long long exp) {
  long long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

long long prime_of_power(long long m) {
  if (m < 2) return 0;
  for (long long d = 2; d * d <= m; ++d)
    if (m % d == 0) return log_p(static_cast<std::size_t>(m), static_cast<int>(d)) >= 0 ? d : 0;
  return m;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Cyclic: return "C";
    case Family::ElementaryAbelian: return "EA";
    case Family::Dihedral: return "D";
    case Family::Quaternion: return "Q";
    case Family::SemiDihedral: return "SD";
    case Family::Modular: return "Mod";
    case Family::Extraspecial: return "ES";
    case Family::AlmostExtraspecial: return "AES";
  }
  return "?";
}

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidSpec, what); }

void validate_atom(const Atom& a, std::size_t position) {
  const std::string where = " (term at position " + std::to_string(position) + ")";
  auto need_args = [&](std::size_t k) {
    if (a.args.size() != k)
      invalid(std::string(family_name(a.family)) + " takes " + std::to_string(k) + " argument(s)" + where);
  };
  switch (a.family) {
    case Family::Cyclic:
      need_args(1);
      if (prime_of_power(a.args[0]) == 0) invalid("order not a prime power: C(" + std::to_string(a.args[0]) + ")" + where);
      break;
    case Family::ElementaryAbelian:
      need_args(2);
      if (!is_prime(a.args[0])) invalid("EA prime " + std::to_string(a.args[0]) + " is not prime" + where);
      if (a.args[1] < 1) invalid("EA rank must be at least 1" + where);
      break;
    case Family::Dihedral:
    case Family::Quaternion:
    case Family::SemiDihedral:
    case Family::Modular: {
      need_args(1);
      const int k = log_p(static_cast<std::size_t>(std::max<long long>(a.args[0], 0)), 2);
      const int min_k = (a.family == Family::SemiDihedral || a.family == Family::Modular) ? 4 : 3;
      if (k < 0) invalid("order not a power of 2: " + a.to_string() + where);
      if (k < min_k)
        invalid(a.to_string() + " needs order at least " + std::to_string(1 << min_k) + where);
      break;
    }
    case Family::Extraspecial:
      need_args(2);
      if (!is_prime(a.args[0])) invalid("ES prime " + std::to_string(a.args[0]) + " is not prime" + where);
      if (a.args[1] < 1) invalid("ES rank must be at least 1" + where);
      if (a.sign != '+' && a.sign != '-') invalid("ES sign must be + or -" + where);
      break;
    case Family::AlmostExtraspecial:
      need_args(2);
      if (!is_prime(a.args[0])) invalid("AES prime " + std::to_string(a.args[0]) + " is not prime" + where);
      if (a.args[1] < 1) invalid("AES rank must be at least 1" + where);
      break;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec spec;
    std::vector<std::size_t> positions;
    skip_ws();
    positions.push_back(pos_);
    spec.factors.push_back(term());
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == 'x') {
      ++pos_;
      skip_ws();
      positions.push_back(pos_);
      spec.factors.push_back(term());
      skip_ws();
    }
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    for (std::size_t i = 0; i < spec.factors.size(); ++i) validate_atom(spec.factors[i], positions[i]);
    const int p = spec.factors.front().prime();
    for (std::size_t i = 1; i < spec.factors.size(); ++i)
      if (spec.factors[i].prime() != p)
        invalid("mixed primes " + std::to_string(p) + " and " + std::to_string(spec.factors[i].prime()) +
                " (term at position " + std::to_string(positions[i]) + ")");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    invalid("at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Atom term() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    Atom atom{};
    if (name == "C") atom.family = Family::Cyclic;
    else if (name == "EA") atom.family = Family::ElementaryAbelian;
    else if (name == "D") atom.family = Family::Dihedral;
    else if (name == "Q") atom.family = Family::Quaternion;
    else if (name == "SD") atom.family = Family::SemiDihedral;
    else if (name == "Mod") atom.family = Family::Modular;
    else if (name == "ES") atom.family = Family::Extraspecial;
    else if (name == "AES") atom.family = Family::AlmostExtraspecial;
    else {
      pos_ = start;
      fail("unknown group name '" + std::string(name) + "'");
    }
    expect('(');
    for (;;) {
      skip_ws();
      if (atom.family == Family::Extraspecial && atom.args.size() == 2) {
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
          atom.sign = text_[pos_++];
        } else {
          fail("expected sign '+' or '-'");
        }
      } else {
        atom.args.push_back(number());
      }
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    expect(')');
    if (atom.family == Family::Extraspecial && atom.sign == 0) fail("ES needs three arguments");
    return atom;
  }

  long long number() {
    skip_ws();
    std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > (1LL << 40)) fail("number too large");
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Element first_central_of_order_p(const GroupTable& g) {
  for (Element z = 1; z < g.order(); ++z) {
    if (g.element_order_unchecked(z) != static_cast<std::size_t>(g.prime())) continue;
    bool central = true;
    for (Element x = 0; x < g.order() && central; ++x) central = g.mul(x, z) == g.mul(z, x);
    if (central) return z;
  }
  throw Error(ErrorKind::NotCentral, "no central element of order p in " + g.label());
}

GroupTable elementary_abelian(int p, long long n) {
  const long long order = ipow(p, n);
  std::vector<Element> table(static_cast<std::size_t>(order * order));
  for (long long a = 0; a < order; ++a)
    for (long long b = 0; b < order; ++b) {
      long long x = a, y = b, out = 0, place = 1;
      for (long long i = 0; i < n; ++i) {
        out += ((x % p + y % p) % p) * place;
        x /= p;
        y /= p;
        place *= p;
      }
      table[static_cast<std::size_t>(a * order + b)] = static_cast<Element>(out);
    }
  return make_group_flat(std::move(table), static_cast<std::size_t>(order), p,
                         "EA(" + std::to_string(p) + "," + std::to_string(n) + ")");
}

GroupTable extraspecial_rank_one(int p, char sign) {
  if (p == 2) {
    const std::string label = std::string("ES(2,1,") + sign + ")";
    return sign == '+' ? metacyclic_group(4, 2, 3, 0, 2, label) : metacyclic_group(4, 2, 3, 2, 2, label);
  }
  if (sign == '+') return heisenberg_group(p);
  return metacyclic_group(static_cast<long long>(p) * p, p, 1 + p, 0, p,
                          "ES(" + std::to_string(p) + ",1,-)");
}

GroupTable extraspecial(int p, long long r, char sign) {
  GroupTable g = extraspecial_rank_one(p, sign);
  const GroupTable plus = extraspecial_rank_one(p, '+');
  for (long long i = 1; i < r; ++i)
    g = central_product(g, plus, first_central_of_order_p(g), first_central_of_order_p(plus));
  return g.with_label("ES(" + std::to_string(p) + "," + std::to_string(r) + "," + sign + ")");
}

GroupTable build_atom(const Atom& a) {
  switch (a.family) {
    case Family::Cyclic: return cyclic_group(a.args[0], static_cast<int>(prime_of_power(a.args[0])));
    case Family::ElementaryAbelian: return elementary_abelian(static_cast<int>(a.args[0]), a.args[1]);
    case Family::Dihedral: {
      const long long n = a.args[0] / 2;
      return metacyclic_group(n, 2, n - 1, 0, 2, a.to_string());
    }
    case Family::Quaternion: {
      const long long n = a.args[0] / 2;
      return metacyclic_group(n, 2, n - 1, n / 2, 2, a.to_string());
    }
    case Family::SemiDihedral: {
      const long long n = a.args[0] / 2;
      return metacyclic_group(n, 2, n / 2 - 1, 0, 2, a.to_string());
    }
    case Family::Modular: {
      const long long n = a.args[0] / 2;
      return metacyclic_group(n, 2, n / 2 + 1, 0, 2, a.to_string());
    }
    case Family::Extraspecial: return extraspecial(static_cast<int>(a.args[0]), a.args[1], a.sign);
    case Family::AlmostExtraspecial: {
      const int p = static_cast<int>(a.args[0]);
      GroupTable es = extraspecial(p, a.args[1], '+');
      GroupTable cyc = cyclic_group(static_cast<long long>(p) * p, p);
      return central_product(es, cyc, first_central_of_order_p(es), static_cast<Element>(p))
          .with_label(a.to_string());
    }
  }
  invalid("unknown family");
}

}  // namespace

std::string Atom::to_string() const {
  std::ostringstream os;
  os << family_name(family) << "(";
  for (std::size_t i = 0; i < args.size(); ++i) os << (i ? "," : "") << args[i];
  if (sign) os << "," << sign;
  os << ")";
  return os.str();
}

int Atom::prime() const {
  switch (family) {
    case Family::Cyclic: return static_cast<int>(prime_of_power(args.at(0)));
    case Family::Dihedral:
    case Family::Quaternion:
    case Family::SemiDihedral:
    case Family::Modular: return 2;
    default: return static_cast<int>(args.at(0));
  }
}

namespace {

long long saturating_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) return std::numeric_limits<long long>::max();
  return r;
}

}  // namespace

long long Atom::order() const {
  auto power = [](long long base, long long e) {
    long long r = 1;
    for (long long i = 0; i < e && r != std::numeric_limits<long long>::max(); ++i) r = saturating_mul(r, base);
    return r;
  };
  switch (family) {
    case Family::Cyclic:
    case Family::Dihedral:
    case Family::Quaternion:
    case Family::SemiDihedral:
    case Family::Modular: return args.at(0);
    case Family::ElementaryAbelian: return power(args.at(0), args.at(1));
    case Family::Extraspecial: return power(args.at(0), 1 + 2 * args.at(1));
    case Family::AlmostExtraspecial: return power(args.at(0), 2 + 2 * args.at(1));
  }
  return 0;
}

long long GroupSpec::order() const {
  long long r = 1;
  for (const Atom& a : factors) r = saturating_mul(r, a.order());
  return r;
}

std::string GroupSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "x" : "") + factors[i].to_string();
  return out;
}

int GroupSpec::prime() const { return factors.empty() ? 0 : factors.front().prime(); }

GroupSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

void validate(const GroupSpec& spec) {
  if (spec.factors.empty()) invalid("empty spec");
  for (const Atom& a : spec.factors) validate_atom(a, 0);
  for (const Atom& a : spec.factors)
    if (a.prime() != spec.prime()) invalid("mixed primes in " + spec.to_string());
}

GroupTable build(const GroupSpec& spec) {
  validate(spec);
  GroupTable g = build_atom(spec.factors.front());
  for (std::size_t i = 1; i < spec.factors.size(); ++i) g = direct_product(g, build_atom(spec.factors[i]));
  return g.with_label(spec.to_string());
}

GroupTable cyclic_group(long long m, int p) {
  std::vector<Element> table(static_cast<std::size_t>(m * m));
  for (long long a = 0; a < m; ++a)
    for (long long b = 0; b < m; ++b) table[static_cast<std::size_t>(a * m + b)] = static_cast<Element>((a + b) % m);
  return make_group_flat(std::move(table), static_cast<std::size_t>(m), p, "C(" + std::to_string(m) + ")");
}

// Elements r^i s^j (index i + rorder*j) with s r s^-1 = r^action and
// s^sorder = r^spower.
GroupTable metacyclic_group(long long rorder, long long sorder, long long action, long long spower, int p,
                            std::string label) {
  const long long order = rorder * sorder;
  std::vector<long long> act_pow(static_cast<std::size_t>(sorder), 1);
  for (long long j = 1; j < sorder; ++j) act_pow[j] = (act_pow[j - 1] * action) % rorder;
  std::vector<Element> table(static_cast<std::size_t>(order * order));
  for (long long x = 0; x < order; ++x)
    for (long long y = 0; y < order; ++y) {
      const long long i = x % rorder, j = x / rorder, k = y % rorder, l = y / rorder;
      long long r = i + k * act_pow[static_cast<std::size_t>(j)];
      long long s = j + l;
      if (s >= sorder) {
        s -= sorder;
        r += spower;
      }
      r %= rorder;
      table[static_cast<std::size_t>(x * order + y)] = static_cast<Element>(r + rorder * s);
    }
  return make_group_flat(std::move(table), static_cast<std::size_t>(order), p, std::move(label));
}

// Upper unitriangular 3x3 matrices over GF(p): (x, y, z) <-> [[1,x,z],[0,1,y],[0,0,1]].
GroupTable heisenberg_group(int p) {
  const long long order = static_cast<long long>(p) * p * p;
  std::vector<Element> table(static_cast<std::size_t>(order * order));
  for (long long a = 0; a < order; ++a)
    for (long long b = 0; b < order; ++b) {
      const long long x1 = a % p, y1 = (a / p) % p, z1 = a / (p * p);
      const long long x2 = b % p, y2 = (b / p) % p, z2 = b / (p * p);
      const long long x = (x1 + x2) % p, y = (y1 + y2) % p, z = (z1 + z2 + x1 * y2) % p;
      table[static_cast<std::size_t>(a * order + b)] = static_cast<Element>(x + p * y + p * p * z);
    }
  return make_group_flat(std::move(table), static_cast<std::size_t>(order), p,
                         "ES(" + std::to_string(p) + ",1,+)");
}

std::size_t default_size_cap(int p) {
  switch (p) {
    case 2: return 256;
    case 3: return 243;
    case 5: return 125;
    default: return static_cast<std::size_t>(p) * static_cast<std::size_t>(p);
  }
}

namespace {

Atom cyc(int p, long long e) { return Atom{Family::Cyclic, {ipow(p, e)}, 0}; }

// C(p) for k = 1, EA(p,k) for k >= 2.
Atom elementary(int p, long long k) {
  return k == 1 ? cyc(p, 1) : Atom{Family::ElementaryAbelian, {p, k}, 0};
}

void partitions(int n, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(n - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<GroupSpec> catalog_specs(int p, int n) {
  std::vector<GroupSpec> specs;
  if (n < 1) return specs;

  std::vector<std::vector<int>> parts;
  std::vector<int> scratch;
  partitions(n, n, scratch, parts);
  for (const auto& partition : parts) {
    GroupSpec spec;
    const auto ones = std::count(partition.begin(), partition.end(), 1);
    if (ones > 0) spec.factors.push_back(elementary(p, ones));
    for (auto it = partition.rbegin(); it != partition.rend(); ++it)
      if (*it > 1) spec.factors.push_back(cyc(p, *it));
    specs.push_back(std::move(spec));
  }

  const long long order = ipow(p, n);
  if (p == 2 && n >= 3) {
    specs.push_back({{Atom{Family::Dihedral, {order}, 0}}});
    specs.push_back({{Atom{Family::Quaternion, {order}, 0}}});
  }
  if (p == 2 && n >= 4) {
    specs.push_back({{Atom{Family::SemiDihedral, {order}, 0}}});
    specs.push_back({{Atom{Family::Modular, {order}, 0}}});
  }
  // D8 and Q8 already cover the rank-one extraspecial 2-groups.
  auto es_allowed = [p](long long r) { return p != 2 || r >= 2; };
  if (n % 2 == 1 && n >= 3 && es_allowed((n - 1) / 2)) {
    specs.push_back({{Atom{Family::Extraspecial, {p, (n - 1) / 2}, '+'}}});
    specs.push_back({{Atom{Family::Extraspecial, {p, (n - 1) / 2}, '-'}}});
  }
  if (n % 2 == 0 && n >= 4) specs.push_back({{Atom{Family::AlmostExtraspecial, {p, (n - 2) / 2}, 0}}});

  // products with an elementary abelian factor
  if (p == 2) {
    for (int m = 3; m < n; ++m) {
      specs.push_back({{Atom{Family::Dihedral, {ipow(2, m)}, 0}, elementary(2, n - m)}});
      specs.push_back({{Atom{Family::Quaternion, {ipow(2, m)}, 0}, elementary(2, n - m)}});
    }
  }
  for (long long r = 1; 2 * r + 1 < n; ++r) {
    if (!es_allowed(r)) continue;
    specs.push_back({{Atom{Family::Extraspecial, {p, r}, '+'}, elementary(p, n - 2 * r - 1)}});
    specs.push_back({{Atom{Family::Extraspecial, {p, r}, '-'}, elementary(p, n - 2 * r - 1)}});
  }
  for (long long r = 1; 2 * r + 2 < n; ++r)
    specs.push_back({{Atom{Family::AlmostExtraspecial, {p, r}, 0}, elementary(p, n - 2 * r - 2)}});
  return specs;
}

std::vector<CatalogEntry> catalog_of_order(int p, int n, std::size_t cap) {
  if (!is_prime(p)) invalid(std::to_string(p) + " is not prime");
  if (cap == 0) cap = default_size_cap(p);
  const long long order = ipow(p, n);
  if (n < 0 || order > static_cast<long long>(cap))
    throw Error(ErrorKind::SizeCapExceeded,
                "order " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
  std::vector<CatalogEntry> out;
  for (GroupSpec& spec : catalog_specs(p, n)) {
    GroupTable g = build(spec);
    out.push_back({std::move(spec), std::move(g)});
  }
  return out;
}

}  // namespace ghostnum
