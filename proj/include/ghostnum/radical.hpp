#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ghostnum/fp_linalg.hpp"
#include "ghostnum/group.hpp"

namespace ghostnum {

// A subspace of GF(p)^N held as its reduced row-echelon basis, so equal
// subspaces have identical representations.
class FpSubspace {
 public:
  FpSubspace(int p, std::size_t ambient_dim) : p_(p), ambient_(ambient_dim) {}

  // Row-reduced span of the given vectors (entries taken mod p).
  static FpSubspace span(int p, std::size_t ambient_dim, const std::vector<std::vector<int>>& vectors);

  int prime() const { return p_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<std::vector<std::uint8_t>>& rows() const { return rows_; }
  fp::FpMatrix basis() const;

  friend bool operator==(const FpSubspace&, const FpSubspace&) = default;

 private:
  friend class EchelonBuilder;
  int p_;
  std::size_t ambient_;
  std::vector<std::vector<std::uint8_t>> rows_;
};

// Incremental Gaussian elimination; add() vectors, then take() the RREF.
// Over GF(2) rows are bit-packed.
class EchelonBuilder {
 public:
  EchelonBuilder(int p, std::size_t ambient_dim);

  // Returns true if the vector was independent of those added so far.
  bool add(std::span<const std::uint8_t> v);
  std::size_t rank() const { return pivots_.size(); }
  FpSubspace take();

 private:
  bool add_gf2(std::vector<std::uint64_t> v);
  bool add_fp(std::vector<std::uint8_t> v);

  int p_;
  std::size_t ambient_;
  std::size_t words_;
  std::vector<std::size_t> pivots_;
  std::vector<std::ptrdiff_t> row_at_col_;
  std::vector<std::vector<std::uint64_t>> bits_;
  std::vector<std::vector<std::uint8_t>> bytes_;
};

FpSubspace augmentation_ideal(const GroupTable& g);

// Span of { v * (e_g - e_1) : v in basis(V), g != 1 }.
FpSubspace ideal_power_step(const GroupTable& g, const FpSubspace& v);
// Same with g restricted to `multipliers`. For a right ideal V and a
// generating set of G this gives the same subspace as the full step.
FpSubspace ideal_power_step(const GroupTable& g, const FpSubspace& v, std::span<const Element> multipliers);

// Smallest s with J(kG)^s = 0, by repeated multiplication starting from the
// augmentation ideal. Throws SizeCapExceeded above `cap` (0 = default).
long long nilpotency_index_radical(const GroupTable& g, std::size_t cap = 0);

// dim J^s for s = 1, 2, ... down to the first zero.
std::vector<std::size_t> radical_power_dims(const GroupTable& g, std::size_t cap = 0);

}  // namespace ghostnum
