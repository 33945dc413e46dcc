#pragma once

// Linear Alexander quandles Λ_n/(t − a): ℤ_n with t acting as multiplication by a unit a.

#include <string>
#include <string_view>
#include <vector>

#include "alexq/lambda.hpp"

namespace alexq {

struct LinearQuandleSpec {
  int n = 1;
  int a = 0;

  // Throws InvalidArgument unless n >= 1, 0 <= a < n and gcd(a, n) = 1.
  LinearQuandleSpec(int n, int a);

  // "L16/3"
  static LinearQuandleSpec parse(std::string_view text);
  std::string to_string() const { return "L" + std::to_string(n) + "/" + std::to_string(a); }
};

// N(n, a) = n / gcd(n, 1 − a), with gcd(n, 0) = n.
int capital_n(int n, int a);

// Λ_n/(t−a) ≅ Λ_n/(t−b) iff N(n,a) = N(n,b) and a ≡ b mod N(n,a).
bool linear_isomorphic(int n, int a, int b);

// Units mod n partitioned into isomorphism classes, each sorted, classes sorted by least member.
std::vector<std::vector<int>> classify_linear(int n);

LambdaModule build_linear(const LinearQuandleSpec& spec);

}  // namespace alexq
