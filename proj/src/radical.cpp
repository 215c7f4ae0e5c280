#include "ghostnum/radical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "ghostnum/catalog.hpp"
#include "ghostnum/error.hpp"

namespace ghostnum {

fp::FpMatrix FpSubspace::basis() const {
  fp::FpMatrix m(static_cast<fp::Index>(rows_.size()), static_cast<fp::Index>(ambient_));
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < ambient_; ++c) m(static_cast<fp::Index>(r), static_cast<fp::Index>(c)) = rows_[r][c];
  return m;
}

FpSubspace FpSubspace::span(int p, std::size_t ambient_dim, const std::vector<std::vector<int>>& vectors) {
  EchelonBuilder builder(p, ambient_dim);
  std::vector<std::uint8_t> row(ambient_dim);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim)
      throw Error(ErrorKind::DimensionMismatch,
                  "vector of length " + std::to_string(v.size()) + " in GF(p)^" + std::to_string(ambient_dim));
    for (std::size_t i = 0; i < ambient_dim; ++i) row[i] = static_cast<std::uint8_t>(fp::mod(v[i], p));
    builder.add(row);
  }
  return builder.take();
}

EchelonBuilder::EchelonBuilder(int p, std::size_t ambient_dim)
    : p_(p), ambient_(ambient_dim), words_((ambient_dim + 63) / 64), row_at_col_(ambient_dim, -1) {}

bool EchelonBuilder::add(std::span<const std::uint8_t> v) {
  if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
  if (p_ == 2) {
    std::vector<std::uint64_t> packed(words_, 0);
    for (std::size_t i = 0; i < ambient_; ++i)
      if (v[i] & 1) packed[i / 64] |= std::uint64_t{1} << (i % 64);
    return add_gf2(std::move(packed));
  }
  return add_fp(std::vector<std::uint8_t>(v.begin(), v.end()));
}

bool EchelonBuilder::add_gf2(std::vector<std::uint64_t> v) {
  std::size_t w = 0;
  for (;;) {
    while (w < words_ && v[w] == 0) ++w;
    if (w == words_) return false;
    const std::size_t col = w * 64 + static_cast<std::size_t>(std::countr_zero(v[w]));
    const std::ptrdiff_t r = row_at_col_[col];
    if (r < 0) {
      row_at_col_[col] = static_cast<std::ptrdiff_t>(bits_.size());
      bits_.push_back(std::move(v));
      pivots_.push_back(col);
      return true;
    }
    const auto& row = bits_[static_cast<std::size_t>(r)];
    for (std::size_t k = w; k < words_; ++k) v[k] ^= row[k];
  }
}

bool EchelonBuilder::add_fp(std::vector<std::uint8_t> v) {
  const int p = p_;
  for (std::size_t col = 0; col < ambient_; ++col) {
    if (v[col] == 0) continue;
    const std::ptrdiff_t r = row_at_col_[col];
    if (r < 0) {
      const int inv = static_cast<int>(fp::inverse<long long>(v[col], p));
      for (std::size_t k = col; k < ambient_; ++k) v[k] = static_cast<std::uint8_t>((v[k] * inv) % p);
      row_at_col_[col] = static_cast<std::ptrdiff_t>(bytes_.size());
      bytes_.push_back(std::move(v));
      pivots_.push_back(col);
      return true;
    }
    const auto& row = bytes_[static_cast<std::size_t>(r)];
    const int factor = p - v[col];
    for (std::size_t k = col; k < ambient_; ++k) v[k] = static_cast<std::uint8_t>((v[k] + factor * row[k]) % p);
  }
  return false;
}

FpSubspace EchelonBuilder::take() {
  FpSubspace out(p_, ambient_);
  std::vector<std::size_t> order(pivots_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });

  // back substitution: clear each pivot column from every row above it
  if (p_ == 2) {
    for (std::size_t i = order.size(); i-- > 0;) {
      const std::size_t col = pivots_[order[i]];
      const auto& pivot_row = bits_[order[i]];
      for (std::size_t j = 0; j < i; ++j) {
        auto& other = bits_[order[j]];
        if ((other[col / 64] >> (col % 64)) & 1)
          for (std::size_t k = 0; k < words_; ++k) other[k] ^= pivot_row[k];
      }
    }
    for (std::size_t idx : order) {
      std::vector<std::uint8_t> row(ambient_);
      for (std::size_t c = 0; c < ambient_; ++c) row[c] = (bits_[idx][c / 64] >> (c % 64)) & 1;
      out.rows_.push_back(std::move(row));
    }
  } else {
    const int p = p_;
    for (std::size_t i = order.size(); i-- > 0;) {
      const std::size_t col = pivots_[order[i]];
      const auto& pivot_row = bytes_[order[i]];
      for (std::size_t j = 0; j < i; ++j) {
        auto& other = bytes_[order[j]];
        if (other[col] == 0) continue;
        const int factor = p - other[col];
        for (std::size_t k = col; k < ambient_; ++k)
          other[k] = static_cast<std::uint8_t>((other[k] + factor * pivot_row[k]) % p);
      }
    }
    for (std::size_t idx : order) out.rows_.push_back(std::move(bytes_[idx]));
  }
  pivots_.clear();
  bits_.clear();
  bytes_.clear();
  std::fill(row_at_col_.begin(), row_at_col_.end(), -1);
  return out;
}

FpSubspace augmentation_ideal(const GroupTable& g) {
  const int p = g.prime();
  EchelonBuilder builder(p, g.order());
  std::vector<std::uint8_t> row(g.order(), 0);
  for (Element x = 1; x < g.order(); ++x) {
    std::fill(row.begin(), row.end(), 0);
    row[x] = 1;
    row[0] = static_cast<std::uint8_t>(p - 1);
    builder.add(row);
  }
  return builder.take();
}

FpSubspace ideal_power_step(const GroupTable& g, const FpSubspace& v, std::span<const Element> multipliers) {
  if (v.ambient_dim() != g.order() || v.prime() != g.prime())
    throw Error(ErrorKind::DimensionMismatch, "subspace does not live in the group algebra of " + g.label());
  const int p = g.prime();
  const std::size_t n = g.order();
  EchelonBuilder builder(p, n);
  std::vector<std::uint8_t> product(n);
  for (const auto& row : v.rows()) {
    for (Element x : multipliers) {
      if (x == kIdentity) continue;
      // (v * e_x)_{hx} = v_h, minus v itself
      std::fill(product.begin(), product.end(), 0);
      for (std::size_t h = 0; h < n; ++h) {
        if (row[h] == 0) continue;
        const Element hx = g.mul(static_cast<Element>(h), x);
        product[hx] = static_cast<std::uint8_t>((product[hx] + row[h]) % p);
        product[h] = static_cast<std::uint8_t>((product[h] + p - row[h]) % p);
      }
      builder.add(product);
    }
  }
  return builder.take();
}

FpSubspace ideal_power_step(const GroupTable& g, const FpSubspace& v) {
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), Element{0});
  return ideal_power_step(g, v, all);
}

std::vector<std::size_t> radical_power_dims(const GroupTable& g, std::size_t cap) {
  if (cap == 0) cap = default_size_cap(g.prime());
  if (g.order() > cap)
    throw Error(ErrorKind::SizeCapExceeded,
                "order " + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));
  // J^{s+1} = J^s * J and J = sum over generators x of kG (x - 1), so right
  // multiplication by x - 1 for a generating set suffices.
  const std::vector<Element> gens = whole_group(g).generators();
  FpSubspace power = augmentation_ideal(g);
  std::vector<std::size_t> dims{power.dimension()};
  while (power.dimension() > 0) {
    FpSubspace next = ideal_power_step(g, power, gens);
    if (next.dimension() >= power.dimension())
      throw std::logic_error("radical powers stopped decreasing in " + g.label());
    power = std::move(next);
    dims.push_back(power.dimension());
  }
  return dims;
}

long long nilpotency_index_radical(const GroupTable& g, std::size_t cap) {
  // dims lists J^1, ..., J^t with J^t the first zero power
  return static_cast<long long>(radical_power_dims(g, cap).size());
}

}  // namespace ghostnum
