#pragma once

// Arithmetic on element indices of an AbelianGroup, avoiding GroupElement allocations in hot loops.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "alexq/abelian.hpp"

namespace alexq::detail {

class IndexArith {
 public:
  explicit IndexArith(const AbelianGroup& group) : factors_(group.factors().begin(), group.factors().end()), n_(group.order()) {
    strides_.assign(factors_.size(), 1);
    for (std::size_t i = factors_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * factors_[i];
  }

  std::size_t order() const noexcept { return n_; }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const noexcept {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const std::uint32_t xi = (x / strides_[i]) % factors_[i];
      const std::uint32_t yi = (y / strides_[i]) % factors_[i];
      r += ((xi + yi) % factors_[i]) * strides_[i];
    }
    return r;
  }

  std::uint32_t neg(std::uint32_t x) const noexcept {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const std::uint32_t xi = (x / strides_[i]) % factors_[i];
      r += ((factors_[i] - xi) % factors_[i]) * strides_[i];
    }
    return r;
  }

  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const noexcept { return add(x, neg(y)); }

  std::uint32_t mul(std::uint32_t k, std::uint32_t x) const noexcept {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const std::uint64_t xi = (x / strides_[i]) % factors_[i];
      r += static_cast<std::uint32_t>((xi * k) % factors_[i]) * strides_[i];
    }
    return r;
  }

  std::uint32_t coord(std::uint32_t x, std::size_t i) const noexcept { return (x / strides_[i]) % factors_[i]; }

  std::uint32_t generator(std::size_t i) const noexcept { return strides_[i]; }

  // Image of every element under the linear map with the given generator images.
  std::vector<std::uint32_t> linear_table(const std::vector<std::uint32_t>& gen_images) const {
    std::vector<std::uint32_t> table(n_, 0);
    // Walk elements in index order; x = y + e_i for the last nonzero coordinate i.
    for (std::uint32_t x = 1; x < n_; ++x) {
      std::size_t i = factors_.size();
      while (i-- > 0)
        if (coord(x, i) != 0) break;
      table[x] = add(table[x - strides_[i]], gen_images[i]);
    }
    return table;
  }

 private:
  std::vector<std::uint32_t> factors_;
  std::vector<std::uint32_t> strides_;
  std::size_t n_;
};

}  // namespace alexq::detail
