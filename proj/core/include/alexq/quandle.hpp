#pragma once

// Finite quandles as Cayley tables, plus a brute-force isomorphism test that does not rely on
// any module theory.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alexq/lambda.hpp"

namespace alexq {

class CayleyTable {
 public:
  CayleyTable() = default;
  // Row-major n×n entries; throws InvalidArgument if the size or an entry is out of range.
  CayleyTable(std::size_t n, std::vector<std::uint32_t> entries);

  std::size_t size() const noexcept { return n_; }
  // a ▷ b
  std::uint32_t op(std::size_t a, std::size_t b) const noexcept { return entries_[a * n_ + b]; }
  const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> entries_;
};

// a ▷ b = t(a) + b − t(b), elements indexed lexicographically by coordinates.
CayleyTable alexander_table(const LambdaModule& module);

struct AxiomVerdict {
  bool ok = true;
  int axiom = 0;  // 1 idempotence, 2 right invertibility, 3 right self-distributivity
  std::vector<std::size_t> witness;
  std::string message;
};

AxiomVerdict check_axioms(const CayleyTable& table);

// Blocks of the equivalence generated by a ~ a▷b, sorted by least element.
// Throws InvalidArgument if the table is not a quandle.
std::vector<std::vector<std::size_t>> orbits(const CayleyTable& table);

// A bijection f with f(a▷b) = f(a)▷f(b), as f[a]. Different sizes compare as not isomorphic.
std::optional<std::vector<std::size_t>> brute_force_isomorphic(const CayleyTable& q1, const CayleyTable& q2);

}  // namespace alexq
