#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ghostnum/group.hpp"

namespace ghostnum {

struct ClassificationFlags {
  bool cyclic = false;
  bool abelian = false;
  bool elementary_abelian = false;
  bool extraspecial = false;
  bool almost_extraspecial = false;
  bool has_cyclic_maximal_subgroup = false;
  bool is_exponent_p_extraspecial = false;
  bool is_p1plus2_minus = false;
  // Groups for which the elementary-abelian lower bound is not established.
  bool excluded_from_lower_bound = false;
  std::size_t exponent = 1;
  std::size_t frattini_order = 1;
  std::size_t center_order = 1;
  std::size_t derived_order = 1;
};

ClassificationFlags classify(const GroupTable& g);

// A decomposition G = M x <z> with z a central involution and M maximal.
struct DirectFactorSplit {
  Subgroup complement;
  Element involution;
};

// Finds a central involution outside the Frattini subgroup together with a
// complementing maximal subgroup. Only meaningful for p = 2.
std::optional<DirectFactorSplit> find_c2_direct_factor(const GroupTable& g);

// True for D(2^n), n >= 3: a cyclic subgroup of index 2 whose complement
// consists of involutions.
bool is_dihedral(const GroupTable& g);

// All maximal subgroups, i.e. preimages of hyperplanes of G/Phi(G).
std::vector<Subgroup> maximal_subgroups(const GroupTable& g);

}  // namespace ghostnum
