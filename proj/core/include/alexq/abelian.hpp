#pragma once

// Finite abelian groups in invariant-factor form ⊕ ℤ_{d_i}, d_1 | d_2 | ... | d_k.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace alexq {

struct GroupElement {
  std::vector<int> coords;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

class AbelianGroup {
 public:
  // The trivial group.
  AbelianGroup() = default;

  // Requires a divisibility chain of factors >= 2; throws InvalidArgument otherwise.
  explicit AbelianGroup(std::vector<int> invariant_factors);

  // Accepts any list of positive cyclic orders (1s allowed, any order, any
  // primary/mixed decomposition) and returns the isomorphic group in
  // invariant-factor form.
  static AbelianGroup normalized(const std::vector<int>& cyclic_orders);

  // "4,4", "2,2,2,2"; "1" is the trivial group. Normalizes the factor list.
  static AbelianGroup parse(std::string_view text);

  const std::vector<int>& factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  std::size_t order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return factors_.empty(); }

  // Exponent (lcm of the factors, i.e. the last factor).
  int exponent() const noexcept { return factors_.empty() ? 1 : factors_.back(); }

  // True when every factor equals the same prime p (elementary abelian); p is stored in *prime.
  bool is_elementary(int* prime = nullptr) const;

  GroupElement zero() const;
  GroupElement generator(std::size_t i) const;
  bool contains(const GroupElement& x) const noexcept;

  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement sub(const GroupElement& x, const GroupElement& y) const;
  GroupElement neg(const GroupElement& x) const;
  GroupElement scalar_mul(long long k, const GroupElement& x) const;
  int element_order(const GroupElement& x) const;

  // Elements are indexed lexicographically by coordinates (first coordinate most significant).
  std::size_t index_of(const GroupElement& x) const;
  GroupElement element_at(std::size_t index) const;
  std::vector<GroupElement> elements() const;

  std::string to_string() const;     // "4,4" or "1"
  std::string pretty() const;        // "ℤ4⊕ℤ4" or "0"
  std::string element_to_string(const GroupElement& x) const;  // "(3,2)"
  GroupElement parse_element(std::string_view text) const;     // "(3,2)" or "3,2"

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) { return a.factors_ == b.factors_; }
  friend auto operator<=>(const AbelianGroup& a, const AbelianGroup& b) { return a.factors_ <=> b.factors_; }

 private:
  void check(const GroupElement& x) const;

  std::vector<int> factors_;
  std::size_t order_ = 1;
};

// Every abelian group of the given order, once each, sorted lexicographically by factor list.
std::vector<AbelianGroup> enumerate_groups(std::size_t order);

struct SubgroupStructure {
  // Sorted ascending.
  std::vector<GroupElement> elements;
  std::vector<int> factors;
  // basis[j] has order factors[j]; (a_j) ↦ Σ a_j·basis[j] is a bijection onto elements.
  std::vector<GroupElement> basis;
  // For each parent element index: index of its coordinate vector in AbelianGroup(factors),
  // or npos when the element is not in the subgroup.
  std::vector<std::size_t> local_index;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  AbelianGroup group() const { return AbelianGroup(factors); }
  bool contains(const AbelianGroup& parent, const GroupElement& x) const {
    return local_index[parent.index_of(x)] != npos;
  }
  // Coordinates of a member with respect to the basis.
  GroupElement coordinates(const AbelianGroup& parent, const GroupElement& x) const;
};

// Closure of the generators plus an invariant-factor basis of the result.
SubgroupStructure subgroup_structure(const AbelianGroup& group, const std::vector<GroupElement>& generators);

// Prime factorisation as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<int, int>> factorize(std::size_t n);

}  // namespace alexq
