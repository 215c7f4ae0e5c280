#include "ghostnum/stmod.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "ghostnum/error.hpp"
#include "ghostnum/group.hpp"
#include "ghostnum/radical.hpp"

namespace ghostnum {

using fp::FpMatrix;
using fp::Index;

int prime_of_modulus(int m) {
  if (m < 2) throw Error(ErrorKind::InvalidModulus, "modulus must be a prime power >= 2, got " + std::to_string(m));
  int p = 2;
  while (m % p != 0) ++p;
  if (log_p(static_cast<std::size_t>(m), p) < 0)
    throw Error(ErrorKind::InvalidModulus, "modulus is not a prime power: " + std::to_string(m));
  return p;
}

JordanModule::JordanModule(int m, std::vector<int> blocks) : m_(m), p_(prime_of_modulus(m)), blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw Error(ErrorKind::DimensionMismatch, "a module needs at least one block");
  for (int b : blocks_) {
    if (b < 1 || b > m_)
      throw Error(ErrorKind::DimensionMismatch,
                  "block size " + std::to_string(b) + " outside [1, " + std::to_string(m_) + "]");
    offsets_.push_back(dim_);
    dim_ += b;
  }
}

FpMatrix JordanModule::shift() const {
  FpMatrix x = FpMatrix::Zero(dim_, dim_);
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    for (int j = 0; j + 1 < blocks_[i]; ++j) x(offsets_[i] + j + 1, offsets_[i] + j) = 1;
  return x;
}

std::string JordanModule::to_string() const {
  std::string s;
  for (int b : blocks_) s += (s.empty() ? "J" : "+J") + std::to_string(b);
  return s + " (m=" + std::to_string(m_) + ")";
}

ModuleMap ModuleMap::identity(const JordanModule& m) {
  return {m, m, FpMatrix::Identity(m.dimension(), m.dimension())};
}

ModuleMap ModuleMap::zero(const JordanModule& source, const JordanModule& target) {
  return {source, target, FpMatrix::Zero(target.dimension(), source.dimension())};
}

ModuleMap ModuleMap::shift_power(const JordanModule& m, int k) {
  return {m, m, fp::power(m.shift(), k, m.prime())};
}

namespace {

void check_shape(const ModuleMap& f) {
  if (f.source.modulus() != f.target.modulus())
    throw Error(ErrorKind::ShapeMismatch, "source and target have different moduli");
  if (f.matrix.rows() != f.target.dimension() || f.matrix.cols() != f.source.dimension())
    throw Error(ErrorKind::ShapeMismatch, "matrix is " + std::to_string(f.matrix.rows()) + "x" +
                                              std::to_string(f.matrix.cols()) + ", expected " +
                                              std::to_string(f.target.dimension()) + "x" +
                                              std::to_string(f.source.dimension()));
}

void require_equivariant(const ModuleMap& f) {
  if (!f.is_equivariant())
    throw Error(ErrorKind::NotEquivariant,
                "map " + f.source.to_string() + " -> " + f.target.to_string() + " does not commute with x");
}

std::vector<std::uint8_t> to_bytes(const FpMatrix& m, int p) {
  const fp::FpVector v = fp::flatten(m);
  std::vector<std::uint8_t> out(static_cast<std::size_t>(v.size()));
  for (Index i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(fp::mod<fp::Scalar>(v(i), p));
  return out;
}

// Span of the maps factoring through projectives, with a membership test.
class FactoringSpan {
 public:
  FactoringSpan(const JordanModule& source, const JordanModule& target)
      : p_(source.prime()), builder_(source.prime(), static_cast<std::size_t>(source.dimension() * target.dimension())) {
    for (const ModuleMap& f : projective_factoring_maps(source, target)) builder_.add(to_bytes(f.matrix, p_));
  }
  std::size_t rank() const { return builder_.rank(); }
  // Rank after adding f.
  std::size_t rank_with(const FpMatrix& f) const {
    EchelonBuilder copy = builder_;
    copy.add(to_bytes(f, p_));
    return copy.rank();
  }
  bool contains(const FpMatrix& f) const { return rank_with(f) == rank(); }

 private:
  int p_;
  EchelonBuilder builder_;
};

// Columns of `pick` that are independent modulo the column span of `base`.
FpMatrix complement_columns(const FpMatrix& base, const FpMatrix& pick, int p) {
  FpMatrix joined(base.rows(), base.cols() + pick.cols());
  joined << base, pick;
  const auto pivots = fp::rref_in_place(joined, static_cast<fp::Scalar>(p));
  std::vector<Index> chosen;
  for (Index c : pivots)
    if (c >= base.cols()) chosen.push_back(c - base.cols());
  FpMatrix out(pick.rows(), static_cast<Index>(chosen.size()));
  for (std::size_t i = 0; i < chosen.size(); ++i) out.col(static_cast<Index>(i)) = pick.col(chosen[i]);
  return out;
}

FpMatrix induced_unchecked(const ModuleMap& f, int d) {
  const int p = f.source.prime();
  const TateBasis s = tate_basis(f.source, d);
  const TateBasis t = tate_basis(f.target, d);
  const Index rs = s.representatives.cols();
  const Index rt = t.representatives.cols();
  if (rs == 0 || rt == 0) return FpMatrix::Zero(rt, rs);
  const FpMatrix images = fp::multiply(f.matrix, s.representatives, static_cast<fp::Scalar>(p));
  // solve [reps | divided] c = images; the system has full column rank
  const Index k = rt + t.divided.cols();
  FpMatrix aug(f.target.dimension(), k + rs);
  aug << t.representatives, t.divided, images;
  fp::rref_in_place(aug, static_cast<fp::Scalar>(p));
  return aug.block(0, k, rt, rs);
}

bool ghost_unchecked(const ModuleMap& f) {
  const int p = f.source.prime();
  return fp::is_zero(induced_unchecked(f, 0), static_cast<fp::Scalar>(p)) &&
         fp::is_zero(induced_unchecked(f, -1), static_cast<fp::Scalar>(p));
}

}  // namespace

bool ModuleMap::is_equivariant() const {
  check_shape(*this);
  const fp::Scalar p = source.prime();
  return fp::is_zero(FpMatrix(matrix * source.shift() - target.shift() * matrix), p);
}

TateBasis tate_basis(const JordanModule& m, int d) {
  const fp::Scalar p = m.prime();
  const FpMatrix x = m.shift();
  const FpMatrix norm = fp::power(x, m.modulus() - 1, p);
  const bool even = d % 2 == 0;
  const FpMatrix kernel = fp::nullspace(even ? x : norm, p);
  const FpMatrix divided = fp::column_space(even ? norm : x, p);
  return {complement_columns(divided, kernel, m.prime()), divided};
}

int tate_dimension(const JordanModule& m, int d) {
  return static_cast<int>(tate_basis(m, d).representatives.cols());
}

FpMatrix induced_tate_map(const ModuleMap& f, int d) {
  require_equivariant(f);
  return induced_unchecked(f, d);
}

bool is_ghost(const ModuleMap& f) {
  require_equivariant(f);
  return ghost_unchecked(f);
}

bool is_stably_trivial(const ModuleMap& f) {
  require_equivariant(f);
  return FactoringSpan(f.source, f.target).contains(f.matrix);
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (!(f.target == g.source))
    throw Error(ErrorKind::ShapeMismatch, "cannot compose: " + f.target.to_string() + " vs " + g.source.to_string());
  return {f.source, g.target, fp::multiply(g.matrix, f.matrix, static_cast<fp::Scalar>(f.source.prime()))};
}

std::vector<FpMatrix> block_hom_basis(int a, int b) {
  std::vector<FpMatrix> out;
  for (int k = std::max(0, b - a); k < b; ++k) {
    FpMatrix h = FpMatrix::Zero(b, a);
    for (int j = 0; j < a && k + j < b; ++j) h(k + j, j) = 1;
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<ModuleMap> hom_basis(const JordanModule& source, const JordanModule& target) {
  std::vector<ModuleMap> out;
  for (std::size_t i = 0; i < source.blocks().size(); ++i)
    for (std::size_t j = 0; j < target.blocks().size(); ++j)
      for (const FpMatrix& h : block_hom_basis(source.blocks()[i], target.blocks()[j])) {
        ModuleMap f = ModuleMap::zero(source, target);
        f.matrix.block(target.offset(j), source.offset(i), h.rows(), h.cols()) = h;
        out.push_back(std::move(f));
      }
  return out;
}

std::vector<ModuleMap> hom_basis_by_nullspace(const JordanModule& source, const JordanModule& target) {
  const Index ds = source.dimension(), dt = target.dimension();
  const FpMatrix xs = source.shift(), xt = target.shift();
  // vec(F Xs - Xt F) = (Xs^T (x) I - I (x) Xt) vec(F), column-major
  FpMatrix op = FpMatrix::Zero(ds * dt, ds * dt);
  for (Index c = 0; c < ds; ++c)
    for (Index r = 0; r < dt; ++r) {
      const Index col = c * dt + r;  // unknown F(r, c)
      for (Index c2 = 0; c2 < ds; ++c2)
        if (xs(c, c2)) op(c2 * dt + r, col) += xs(c, c2);
      for (Index r2 = 0; r2 < dt; ++r2)
        if (xt(r2, r)) op(c * dt + r2, col) -= xt(r2, r);
    }
  const FpMatrix null = fp::nullspace(op, static_cast<fp::Scalar>(source.prime()));
  std::vector<ModuleMap> out;
  for (Index k = 0; k < null.cols(); ++k) {
    ModuleMap f = ModuleMap::zero(source, target);
    for (Index c = 0; c < ds; ++c)
      for (Index r = 0; r < dt; ++r) f.matrix(r, c) = null(c * dt + r, k);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<ModuleMap> projective_factoring_maps(const JordanModule& source, const JordanModule& target) {
  const int m = source.modulus();
  const fp::Scalar p = source.prime();
  std::vector<ModuleMap> out;
  for (std::size_t i = 0; i < source.blocks().size(); ++i)
    for (std::size_t j = 0; j < target.blocks().size(); ++j) {
      const int a = source.blocks()[i], b = target.blocks()[j];
      const auto into = block_hom_basis(a, m);
      const auto out_of = block_hom_basis(m, b);
      for (const FpMatrix& u : into)
        for (const FpMatrix& v : out_of) {
          ModuleMap f = ModuleMap::zero(source, target);
          f.matrix.block(target.offset(j), source.offset(i), b, a) = fp::multiply(v, u, p);
          out.push_back(std::move(f));
        }
    }
  return out;
}

int stable_endomorphism_dimension(int a, int m) {
  const JordanModule block(m, {a});
  const std::size_t hom = hom_basis(block, block).size();
  return static_cast<int>(hom - FactoringSpan(block, block).rank());
}

namespace {

ChainCertificate make_certificate(std::vector<JordanModule> nodes, std::vector<ModuleMap> edges) {
  ChainCertificate c{nodes.front().modulus(), nodes.front().prime(), std::move(nodes), std::move(edges), {}, 0, 0};
  ModuleMap composite = ModuleMap::identity(c.nodes.front());
  for (const ModuleMap& e : c.edges) {
    const bool eq = e.is_equivariant();
    const fp::Scalar p = c.p;
    c.edge_checks.push_back({eq, eq && fp::is_zero(induced_unchecked(e, 0), p),
                             eq && fp::is_zero(induced_unchecked(e, -1), p)});
    composite = compose(e, composite);
  }
  const FactoringSpan span(composite.source, composite.target);
  c.factoring_rank = span.rank();
  c.augmented_rank = span.rank_with(composite.matrix);
  return c;
}

bool certificate_ok(const ChainCertificate& c) {
  if (c.edges.empty() || c.nodes.size() != c.edges.size() + 1) return false;
  for (const EdgeCheck& e : c.edge_checks)
    if (!e.equivariant || !e.degree0_zero || !e.degree_minus1_zero) return false;
  return c.composite_stably_nontrivial();
}

// Ghost maps source -> target as a basis of the ghost subspace of Hom.
std::vector<FpMatrix> ghost_basis(const JordanModule& source, const JordanModule& target) {
  const fp::Scalar p = source.prime();
  const auto homs = hom_basis(source, target);
  if (homs.empty()) return {};
  std::vector<fp::FpVector> columns;
  Index rows = 0;
  for (const ModuleMap& h : homs) {
    const FpMatrix t0 = induced_unchecked(h, 0), t1 = induced_unchecked(h, -1);
    fp::FpVector v(t0.size() + t1.size());
    v << fp::flatten(t0), fp::flatten(t1);
    rows = v.size();
    columns.push_back(std::move(v));
  }
  FpMatrix tate(rows, static_cast<Index>(homs.size()));
  for (std::size_t k = 0; k < homs.size(); ++k) tate.col(static_cast<Index>(k)) = columns[k];
  const FpMatrix null = fp::nullspace(tate, p);
  std::vector<FpMatrix> out;
  for (Index k = 0; k < null.cols(); ++k) {
    FpMatrix g = FpMatrix::Zero(target.dimension(), source.dimension());
    for (std::size_t i = 0; i < homs.size(); ++i) g += null(static_cast<Index>(i), k) * homs[i].matrix;
    out.push_back(fp::reduced(g, p));
  }
  return out;
}

std::optional<ChainCertificate> shift_chain(int m, int L, std::size_t& nodes) {
  for (int a = 1; a < m; ++a) {
    ++nodes;
    const JordanModule block(m, {a});
    const ModuleMap x = ModuleMap::shift_power(block, 1);
    if (!ghost_unchecked(x)) continue;
    if (FactoringSpan(block, block).contains(ModuleMap::shift_power(block, L).matrix)) continue;
    return make_certificate(std::vector<JordanModule>(static_cast<std::size_t>(L) + 1, block),
                            std::vector<ModuleMap>(static_cast<std::size_t>(L), x));
  }
  return std::nullopt;
}

}  // namespace

bool check_certificate(const ChainCertificate& c) {
  if (c.edges.empty() || c.nodes.size() != c.edges.size() + 1) return false;
  for (std::size_t i = 0; i < c.edges.size(); ++i)
    if (!(c.edges[i].source == c.nodes[i]) || !(c.edges[i].target == c.nodes[i + 1])) return false;
  try {
    return certificate_ok(make_certificate(c.nodes, c.edges));
  } catch (const Error&) {
    return false;
  }
}

std::vector<JordanModule> nonprojective_modules(int m, int max_blocks) {
  prime_of_modulus(m);
  std::vector<JordanModule> out;
  std::vector<int> blocks;
  std::function<void(int)> extend = [&](int smallest) {
    if (!blocks.empty()) out.emplace_back(m, blocks);
    if (static_cast<int>(blocks.size()) == max_blocks) return;
    for (int b = smallest; b < m; ++b) {
      blocks.push_back(b);
      extend(b);
      blocks.pop_back();
    }
  };
  extend(1);
  std::stable_sort(out.begin(), out.end(),
                   [](const JordanModule& a, const JordanModule& b) { return a.blocks().size() < b.blocks().size(); });
  return out;
}

ChainSearchResult ghost_chain_search(int m, int L, const SearchBudget& budget) {
  const int p = prime_of_modulus(m);
  if (L < 1) throw Error(ErrorKind::InvalidSpec, "chain length must be at least 1, got " + std::to_string(L));
  if (budget.max_blocks < 1) throw Error(ErrorKind::BudgetExceeded, "block budget must be at least 1");
  ChainSearchResult result;

  result.method = "multiplication-by-x chain";
  if (auto c = shift_chain(m, L, result.nodes)) {
    result.certificate = std::move(c);
    return result;
  }

  const auto modules = nonprojective_modules(m, budget.max_blocks);
  std::map<std::pair<std::size_t, std::size_t>, std::vector<FpMatrix>> ghosts;
  auto ghosts_between = [&](std::size_t i, std::size_t j) -> const std::vector<FpMatrix>& {
    auto it = ghosts.find({i, j});
    if (it == ghosts.end()) it = ghosts.emplace(std::pair{i, j}, ghost_basis(modules[i], modules[j])).first;
    return it->second;
  };

  if (L == 1) {
    result.method = "ghost subspace scan";
    for (std::size_t i = 0; i < modules.size(); ++i)
      for (std::size_t j = 0; j < modules.size(); ++j) {
        if (++result.nodes > budget.max_nodes) return result;
        const auto& basis = ghosts_between(i, j);
        if (basis.empty()) continue;
        const FactoringSpan span(modules[i], modules[j]);
        for (const FpMatrix& g : basis)
          if (!span.contains(g)) {
            result.certificate = make_certificate({modules[i], modules[j]}, {ModuleMap{modules[i], modules[j], g}});
            return result;
          }
      }
    result.exhausted = true;
    return result;
  }

  // Depth-first over chains, combining ghost basis maps with coefficients
  // normalised to a leading 1; a stably trivial partial composite is pruned
  // since ghosts form an ideal.
  result.method = "bounded chain search";
  std::map<std::pair<std::size_t, std::size_t>, FactoringSpan> spans;
  auto span_between = [&](std::size_t i, std::size_t j) -> const FactoringSpan& {
    auto it = spans.find({i, j});
    if (it == spans.end()) it = spans.emplace(std::pair{i, j}, FactoringSpan(modules[i], modules[j])).first;
    return it->second;
  };
  std::vector<std::size_t> path;
  std::vector<FpMatrix> maps;
  bool out_of_budget = false;

  std::function<bool(std::size_t, const FpMatrix&)> dfs = [&](std::size_t current, const FpMatrix& composite) {
    if (maps.size() == static_cast<std::size_t>(L)) return true;
    for (std::size_t next = 0; next < modules.size(); ++next) {
      const auto& basis = ghosts_between(current, next);
      const std::size_t r = basis.size();
      if (r == 0) continue;
      std::vector<int> coeff(r, 0);
      // enumerate nonzero coefficient vectors whose first nonzero entry is 1
      for (std::size_t lead = 0; lead < r; ++lead) {
        std::fill(coeff.begin(), coeff.end(), 0);
        coeff[lead] = 1;
        for (;;) {
          if (++result.nodes > budget.max_nodes) {
            out_of_budget = true;
            return false;
          }
          FpMatrix g = FpMatrix::Zero(modules[next].dimension(), modules[current].dimension());
          for (std::size_t k = 0; k < r; ++k)
            if (coeff[k]) g += coeff[k] * basis[k];
          g = fp::reduced(g, static_cast<fp::Scalar>(p));
          const FpMatrix extended = fp::multiply(g, composite, static_cast<fp::Scalar>(p));
          if (!span_between(path.front(), next).contains(extended)) {
            path.push_back(next);
            maps.push_back(g);
            if (dfs(next, extended)) return true;
            if (out_of_budget) return false;
            path.pop_back();
            maps.pop_back();
          }
          std::size_t k = r;
          while (k-- > lead + 1) {
            if (++coeff[k] < p) break;
            coeff[k] = 0;
          }
          if (k == lead) break;
        }
      }
    }
    return false;
  };

  for (std::size_t start = 0; start < modules.size(); ++start) {
    path = {start};
    maps.clear();
    if (dfs(start, FpMatrix::Identity(modules[start].dimension(), modules[start].dimension()))) {
      std::vector<JordanModule> nodes;
      std::vector<ModuleMap> edges;
      for (std::size_t k = 0; k < path.size(); ++k) {
        nodes.push_back(modules[path[k]]);
        if (k > 0) edges.push_back({modules[path[k - 1]], modules[path[k]], maps[k - 1]});
      }
      result.certificate = make_certificate(std::move(nodes), std::move(edges));
      return result;
    }
    if (out_of_budget) return result;
  }
  result.exhausted = true;
  return result;
}

int desk_scale_limit(int p) {
  switch (p) {
    case 2: return 32;
    case 3: return 27;
    case 5: return 25;
    default: return p * p;
  }
}

CertifiedBound certified_lower_bound(int m, const SearchBudget& budget) {
  const int p = prime_of_modulus(m);
  if (m > desk_scale_limit(p))
    throw Error(ErrorKind::InvalidModulus, "modulus " + std::to_string(m) + " beyond the search limit " +
                                               std::to_string(desk_scale_limit(p)) + " for p = " + std::to_string(p));
  CertifiedBound out{1, std::nullopt};
  for (int L = 1;; ++L) {
    ChainSearchResult r = ghost_chain_search(m, L, budget);
    if (!r.certificate) break;
    out.bound = L + 1;
    out.certificate = std::move(r.certificate);
  }
  return out;
}

}  // namespace ghostnum
