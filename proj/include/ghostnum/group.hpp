#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ghostnum {

using Element = std::uint32_t;
inline constexpr Element kIdentity = 0;

// A finite p-group stored as its full multiplication table. Instances are
// immutable and share their storage, so copies are cheap.
class GroupTable {
 public:
  int prime() const { return data_->p; }
  int log_order() const { return data_->n; }
  std::size_t order() const { return data_->order; }
  const std::string& label() const { return data_->label; }

  Element mul(Element a, Element b) const { return data_->table[a * data_->order + b]; }
  Element inverse(Element g) const { return data_->inverses[g]; }
  Element power(Element g, long long k) const;
  Element commutator(Element a, Element b) const;  // a^-1 b^-1 a b

  // Cached element orders, filled in during validation.
  std::size_t element_order_unchecked(Element g) const { return data_->orders[g]; }
  std::size_t exponent() const { return data_->exponent; }

  std::span<const Element> row(Element a) const {
    return {data_->table.data() + a * data_->order, data_->order};
  }
  bool is_abelian() const;

  // Identity of the underlying storage, not group isomorphism.
  bool same_object(const GroupTable& other) const { return data_ == other.data_; }

  GroupTable with_label(std::string label) const;

 private:
  struct Data {
    int p = 0;
    int n = 0;
    std::size_t order = 0;
    std::string label;
    std::vector<Element> table;
    std::vector<Element> inverses;
    std::vector<std::size_t> orders;
    std::size_t exponent = 1;
  };
  explicit GroupTable(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;

  friend GroupTable make_group_flat(std::vector<Element> table, std::size_t order, int p,
                                    std::string label);
};

// Validates every group axiom eagerly. Throws Error with kind NotAGroup,
// OrderNotPrimePower or WrongPrime. If the identity is not at index 0 the
// elements are relabelled so that it is.
GroupTable make_group(const std::vector<std::vector<Element>>& table, int p, std::string label);
GroupTable make_group_flat(std::vector<Element> table, std::size_t order, int p,
                           std::string label);

std::size_t element_order(const GroupTable& g, Element x);

class Subgroup {
 public:
  Subgroup(GroupTable parent, std::vector<Element> elements, std::vector<Element> generators);

  const GroupTable& parent() const { return parent_; }
  const std::vector<Element>& elements() const { return elements_; }
  const std::vector<Element>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Element x) const { return x < member_.size() && member_[x]; }
  bool is_trivial() const { return elements_.size() == 1; }
  bool is_subset_of(const Subgroup& other) const;

  // Element-set equality; generator witnesses are never compared.
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }

 private:
  GroupTable parent_;
  std::vector<Element> elements_;
  std::vector<Element> generators_;
  std::vector<bool> member_;
};

Subgroup subgroup_generated(const GroupTable& g, std::span<const Element> gens);
Subgroup whole_group(const GroupTable& g);
Subgroup trivial_subgroup(const GroupTable& g);

// Smallest subgroup containing every element of `candidates` together with
// `base`; generator witnesses are kept minimal-ish (only elements that grew
// the closure are recorded).
Subgroup join(const Subgroup& base, std::span<const Element> candidates);

struct StructuralSubgroups {
  Subgroup center;
  Subgroup derived;
  Subgroup frattini;
  Subgroup omega1_center;
  std::size_t exponent;
};

StructuralSubgroups structural_subgroups(const GroupTable& g);
Subgroup center(const GroupTable& g);

bool is_normal(const Subgroup& n);
// [A, B] for subgroups of the same group.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);
// Subgroup generated by p-th powers of elements of s.
Subgroup agemo(const Subgroup& s);

GroupTable quotient(const GroupTable& g, const Subgroup& n);
GroupTable direct_product(const GroupTable& g, const GroupTable& h);
GroupTable central_product(const GroupTable& g, const GroupTable& h, Element zg, Element zh);
std::vector<Subgroup> central_order_p_subgroups(const GroupTable& g);

// The subgroup as a standalone group, elements renumbered in sorted order.
GroupTable as_group(const Subgroup& s, std::string label);

// log_p(value) when value is a power of p, otherwise -1.
int log_p(std::size_t value, int p);
bool is_prime(long long value);

}  // namespace ghostnum
