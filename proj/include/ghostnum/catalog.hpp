#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ghostnum/group.hpp"

namespace ghostnum {

enum class Family { Cyclic, ElementaryAbelian, Dihedral, Quaternion, SemiDihedral, Modular, Extraspecial, AlmostExtraspecial };

// One named family member, e.g. C(8), EA(3,2), ES(3,1,-).
struct Atom {
  Family family;
  std::vector<long long> args;
  char sign = 0;  // '+' or '-' for Extraspecial, 0 otherwise

  std::string to_string() const;
  int prime() const;
  // Group order, saturating at LLONG_MAX; only meaningful after validate().
  long long order() const;
  friend bool operator==(const Atom&, const Atom&) = default;
};

// A direct product of atoms; a single atom is a product of length one.
struct GroupSpec {
  std::vector<Atom> factors;

  std::string to_string() const;
  int prime() const;
  long long order() const;
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// Grammar: spec := term ("x" term)*, term := NAME "(" args ")". Whitespace
// is ignored and names are case-sensitive. Syntax errors and constraint
// violations both throw Error(InvalidSpec) with the offending position.
GroupSpec parse_spec(std::string_view text);
void validate(const GroupSpec& spec);

GroupTable build(const GroupSpec& spec);
inline GroupTable build(std::string_view text) { return build(parse_spec(text)); }

struct CatalogEntry {
  GroupSpec spec;
  GroupTable group;
};

std::size_t default_size_cap(int p);

// Every catalog family of order p^n (not all isomorphism types). Throws
// SizeCapExceeded when p^n is above `cap` (0 selects the default cap).
std::vector<CatalogEntry> catalog_of_order(int p, int n, std::size_t cap = 0);
std::vector<GroupSpec> catalog_specs(int p, int n);

// Building blocks, exposed for tests.
GroupTable cyclic_group(long long m, int p);
GroupTable metacyclic_group(long long rorder, long long sorder, long long action, long long spower, int p,
                            std::string label);
GroupTable heisenberg_group(int p);

}  // namespace ghostnum
