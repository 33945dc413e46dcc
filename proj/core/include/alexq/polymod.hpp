#pragma once

// Polynomials over ℤ_p and the modules ⊕ Λ_p/(h_i) they present.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "alexq/lambda.hpp"

namespace alexq {

class PolyOverZp {
 public:
  // Coefficients constant term first; trailing zeros are stripped. p must be prime.
  PolyOverZp(int p, std::vector<int> coeffs);
  static PolyOverZp zero(int p) { return PolyOverZp(p, {}); }
  // "1+t+t^4" (ascending powers; coefficients may be written as "2t^3" or "2*t^3").
  static PolyOverZp parse(int p, std::string_view text);

  int modulus() const noexcept { return p_; }
  const std::vector<int>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  int coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  std::size_t term_count() const;

  std::string to_string() const;          // ascending: "1+t+t^4"
  std::string to_string_descending() const;  // "t^4+t+1"

  friend bool operator==(const PolyOverZp&, const PolyOverZp&) = default;
  // Degree first, then coefficients from the constant term up.
  friend std::strong_ordering operator<=>(const PolyOverZp& a, const PolyOverZp& b);

 private:
  int p_;
  std::vector<int> coeffs_;
};

PolyOverZp poly_add(const PolyOverZp& a, const PolyOverZp& b);
PolyOverZp poly_sub(const PolyOverZp& a, const PolyOverZp& b);
PolyOverZp poly_mul(const PolyOverZp& a, const PolyOverZp& b);
// Quotient and remainder; throws InvalidArgument for a zero divisor or mismatched moduli.
std::pair<PolyOverZp, PolyOverZp> poly_divmod(const PolyOverZp& a, const PolyOverZp& m);
PolyOverZp poly_mod(const PolyOverZp& a, const PolyOverZp& m);
bool poly_divides(const PolyOverZp& d, const PolyOverZp& a);

// A divisibility chain h_1 | h_2 | ... of monic polynomials with unit constant term,
// presenting ⊕ Λ_p/(h_i).
struct PolySpec {
  int p = 2;
  std::vector<PolyOverZp> chain;

  int total_degree() const;
  // Chain joined by " | ", each factor ascending: "1+t | 1+t+t^2+t^3".
  std::string to_string() const;
  // Module name: "(Λ2/t+1)^2⊕Λ2/t^2+1".
  std::string label() const;
  static PolySpec parse(int p, std::string_view text);

  friend bool operator==(const PolySpec&, const PolySpec&) = default;
};

// Checks the chain invariants; throws InvalidArgument on violation.
void validate(const PolySpec& spec);

// All chains of total degree `total_degree`, ordered by number of parts then factor lists.
std::vector<PolySpec> enumerate_specs(int p, int total_degree);

// (ℤ_p)^{Σ deg h_i} with t acting on each block as multiplication by t modulo h_i,
// in the basis 1, t, ..., t^{deg-1}.
LambdaModule build(const PolySpec& spec);

// Unique spec whose module is Λ-isomorphic to `module`, which must have carrier (ℤ_p)^k.
PolySpec match_spec(const LambdaModule& module);

}  // namespace alexq
