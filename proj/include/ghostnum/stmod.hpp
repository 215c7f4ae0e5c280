#pragma once

// Modules over k C_{p^n} = k[x]/(x^m) as sums of Jordan blocks, and the
// pieces of the stable module category needed to recognise ghosts.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ghostnum/fp_linalg.hpp"

namespace ghostnum {

class JordanModule {
 public:
  // m must be a prime power; the prime is read off m. Blocks in [1, m].
  JordanModule(int m, std::vector<int> blocks);

  int modulus() const { return m_; }
  int prime() const { return p_; }
  const std::vector<int>& blocks() const { return blocks_; }
  int dimension() const { return dim_; }
  // Offset of block i in the standard basis {x^j g_i}.
  int offset(std::size_t block) const { return offsets_[block]; }

  // Matrix of multiplication by x in the standard basis.
  fp::FpMatrix shift() const;
  std::string to_string() const;

  friend bool operator==(const JordanModule& a, const JordanModule& b) {
    return a.m_ == b.m_ && a.blocks_ == b.blocks_;
  }

 private:
  int m_;
  int p_;
  std::vector<int> blocks_;
  std::vector<int> offsets_;
  int dim_ = 0;
};

struct ModuleMap {
  JordanModule source;
  JordanModule target;
  fp::FpMatrix matrix;  // dim(target) x dim(source)

  static ModuleMap identity(const JordanModule& m);
  static ModuleMap zero(const JordanModule& source, const JordanModule& target);
  // Multiplication by x^k on a module.
  static ModuleMap shift_power(const JordanModule& m, int k);

  bool is_equivariant() const;
};

// Infers p from a prime-power modulus; throws InvalidModulus otherwise.
int prime_of_modulus(int m);

// Tate cohomology in degree d (only d mod 2 matters): ker x / im x^{m-1} for
// even d, ker x^{m-1} / im x for odd d.
int tate_dimension(const JordanModule& m, int d);

// Matrix of f_* on Tate cohomology in the quotient bases built by
// tate_basis below. Throws NotEquivariant.
fp::FpMatrix induced_tate_map(const ModuleMap& f, int d);

// Representatives (columns) of a basis of the Tate group in degree d, and a
// basis of the subspace being divided out.
struct TateBasis {
  fp::FpMatrix representatives;
  fp::FpMatrix divided;
};
TateBasis tate_basis(const JordanModule& m, int d);

bool is_ghost(const ModuleMap& f);
bool is_stably_trivial(const ModuleMap& f);
// g o f; throws ShapeMismatch unless target(f) == source(g).
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

// Basis of Hom(J_a, J_b): generator to x^k g_b for max(0, b-a) <= k < b.
std::vector<fp::FpMatrix> block_hom_basis(int a, int b);
// Basis of all equivariant maps source -> target, assembled from block pairs.
std::vector<ModuleMap> hom_basis(const JordanModule& source, const JordanModule& target);
// The same space found as a nullspace of F X - X F; kept as a cross-check.
std::vector<ModuleMap> hom_basis_by_nullspace(const JordanModule& source, const JordanModule& target);
// Spanning set of maps factoring through a free module: for each block pair
// the compositions J_a -> J_m -> J_b.
std::vector<ModuleMap> projective_factoring_maps(const JordanModule& source, const JordanModule& target);
// Dimension of the stable endomorphism space of J_a over k[x]/(x^m).
int stable_endomorphism_dimension(int a, int m);

struct EdgeCheck {
  bool equivariant;
  bool degree0_zero;
  bool degree_minus1_zero;
};

struct ChainCertificate {
  int m;
  int p;
  std::vector<JordanModule> nodes;
  std::vector<ModuleMap> edges;  // edges[i]: nodes[i] -> nodes[i+1]
  std::vector<EdgeCheck> edge_checks;
  // rank of the factoring maps, and rank once the composite is added
  std::size_t factoring_rank = 0;
  std::size_t augmented_rank = 0;

  std::size_t length() const { return edges.size(); }
  bool composite_stably_nontrivial() const { return augmented_rank > factoring_rank; }
};

// Rechecks every claim in a certificate from scratch.
bool check_certificate(const ChainCertificate& c);

struct SearchBudget {
  int max_blocks = 1;              // non-projective blocks per module
  std::size_t max_nodes = 20000;   // maps examined before giving up
};

struct ChainSearchResult {
  std::optional<ChainCertificate> certificate;
  // True when the whole search space for this budget was covered, so a
  // missing certificate means no chain exists among those modules.
  bool exhausted = false;
  std::size_t nodes = 0;
  std::string method;
};

// Looks for L ghosts with stably nontrivial composite. Multiplication-by-x
// chains on single blocks go first; L = 1 is then settled by linear algebra
// over all modules within the budget, longer chains by a bounded search.
ChainSearchResult ghost_chain_search(int m, int L, const SearchBudget& budget = {});

// Largest m accepted by certified_lower_bound for the prime of m.
int desk_scale_limit(int p);

struct CertifiedBound {
  long long bound;                              // 1 + longest chain found
  std::optional<ChainCertificate> certificate;  // for the longest chain
};
// Throws InvalidModulus outside desk scale.
CertifiedBound certified_lower_bound(int m, const SearchBudget& budget = {});

// All modules with 1..max_blocks blocks of size < m, as sorted multisets.
std::vector<JordanModule> nonprojective_modules(int m, int max_blocks);

}  // namespace ghostnum
