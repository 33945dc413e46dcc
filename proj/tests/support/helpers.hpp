#pragma once

#include <vector>

#include "alexq/abelian.hpp"
#include "alexq/quandle.hpp"
#include "oracles.hpp"

namespace testing_support {

inline oracle::Tuple to_tuple(const alexq::GroupElement& x) { return x.coords; }

inline std::vector<std::vector<int>> table_rows(const alexq::CayleyTable& t) {
  std::vector<std::vector<int>> rows(t.size(), std::vector<int>(t.size()));
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b) rows[a][b] = static_cast<int>(t.op(a, b));
  return rows;
}

// Every Alexander structure of every carrier of the given order, in carrier order.
inline std::vector<alexq::LambdaModule> all_structures(std::size_t order) {
  std::vector<alexq::LambdaModule> out;
  for (const auto& g : alexq::enumerate_groups(order))
    for (const auto& phi : alexq::enumerate_automorphisms(g)) out.emplace_back(phi);
  return out;
}

}  // namespace testing_support
