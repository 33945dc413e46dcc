#pragma once

// Λ-modules (Λ = ℤ[t, t⁻¹]) of finite order: an abelian group together with the
// automorphism by which t acts.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "alexq/abelian.hpp"
#include "alexq/autgroup.hpp"

namespace alexq {

class LambdaModule {
 public:
  // The zero module.
  LambdaModule() : t_(Automorphism::identity(AbelianGroup())) {}
  explicit LambdaModule(Automorphism t) : t_(std::move(t)) {}

  const AbelianGroup& group() const noexcept { return t_.group(); }
  const Automorphism& t() const noexcept { return t_; }
  std::size_t order() const noexcept { return group().order(); }

  // "<group>|<images>", e.g. "4,4|0,1;3,2".
  std::string to_string() const { return group().to_string() + "|" + t_.to_string(); }

  friend bool operator==(const LambdaModule&, const LambdaModule&) = default;
  friend auto operator<=>(const LambdaModule& a, const LambdaModule& b) { return a.t_ <=> b.t_; }

 private:
  Automorphism t_;
};

// {x − t(x)} as a module in its own right, in an invariant-factor basis of the subgroup.
LambdaModule image_one_minus_t(const LambdaModule& module);

// A group isomorphism h with h∘t = t'∘h, if one exists.
std::optional<Automorphism> is_lambda_isomorphic(const LambdaModule& a, const LambdaModule& b);

bool is_connected(const LambdaModule& module);

// Cheap isomorphism invariants, used to bucket modules before pairwise tests.
struct ModuleInvariants {
  std::vector<int> factors;
  std::size_t t_order = 1;
  std::vector<std::size_t> cycle_type;
  std::size_t image_size = 1;

  friend auto operator<=>(const ModuleInvariants&, const ModuleInvariants&) = default;
};
ModuleInvariants module_invariants(const LambdaModule& module);

struct ModuleLabel {
  std::string text;

  friend auto operator<=>(const ModuleLabel&, const ModuleLabel&) = default;
};

// Human-readable name that is the same for two modules exactly when they are Λ-isomorphic:
//   "0" for the zero module;
//   over (ℤ2)^k, the invariant-factor chain of t, e.g. "(Λ2/t+1)^2⊕Λ2/t^2+1";
//   when t is diagonalisable, the cyclic summands Λn/(t−a), e.g. "Λ8/t-3" or "Λ4/t+3";
//   otherwise "(ℤ4⊕ℤ4; t=0,1;1,1)" with the least conjugate of t.
ModuleLabel canonical_label(const LambdaModule& module);

// Name of the cyclic module ℤ_n with t acting as multiplication by the unit a.
std::string cyclic_label(int n, int a);

}  // namespace alexq
