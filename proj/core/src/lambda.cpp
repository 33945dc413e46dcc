#include "alexq/lambda.hpp"

#include <algorithm>
#include <numeric>

#include "alexq/error.hpp"
#include "alexq/polymod.hpp"
#include "index_arith.hpp"

namespace alexq {

LambdaModule image_one_minus_t(const LambdaModule& module) {
  const auto& group = module.group();
  const auto& t = module.t();
  std::vector<GroupElement> generators;
  for (const auto& x : group.elements()) {
    const auto y = group.sub(x, t.apply(x));
    if (y != group.zero()) generators.push_back(y);
  }
  const SubgroupStructure sub = subgroup_structure(group, generators);
  const AbelianGroup local = sub.group();
  std::vector<GroupElement> images;
  for (const auto& b : sub.basis) {
    const auto tb = t.apply(b);
    if (!sub.contains(group, tb)) throw InternalError("Im(1-t) is not stable under t in module " + module.to_string());
    images.push_back(sub.coordinates(group, tb));
  }
  return LambdaModule(Automorphism(local, std::move(images)));
}

namespace {

// Backtracking over images of the standard generators of a into b.
class IsomorphismSearch {
 public:
  IsomorphismSearch(const LambdaModule& a, const LambdaModule& b) : group_(a.group()), arith_(a.group()) {
    const auto& factors = group_.factors();
    const std::size_t k = factors.size();
    ta_ = a.t().permutation();
    tb_ = b.t().permutation();
    const auto period_a = periods(ta_);
    const auto period_b = periods(tb_);

    std::vector<int> orders(group_.order());
    for (std::uint32_t x = 0; x < group_.order(); ++x) orders[x] = group_.element_order(group_.element_at(x));

    candidates_.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint32_t e = arith_.generator(i);
      for (std::uint32_t x = 0; x < group_.order(); ++x)
        if (orders[x] == factors[i] && period_b[x] == period_a[e]) candidates_[i].push_back(x);
    }

    // t(e_i) = Σ_j c_ij e_j. The constraint h(t(e_i)) = t'(h(e_i)) is decidable once
    // every e_j with c_ij ≠ 0, and e_i itself, has an image.
    coeffs_.assign(k, std::vector<std::uint32_t>(k, 0));
    checks_at_.assign(k, {});
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint32_t te = ta_[arith_.generator(i)];
      std::size_t ready = i;
      for (std::size_t j = 0; j < k; ++j) {
        coeffs_[i][j] = arith_.coord(te, j);
        if (coeffs_[i][j] != 0) ready = std::max(ready, j);
      }
      checks_at_[ready].push_back(i);
    }
  }

  std::optional<std::vector<std::uint32_t>> run() {
    std::vector<char> span(group_.order(), 0);
    span[0] = 1;
    std::vector<std::uint32_t> members{0};
    if (descend(0, span, members)) return chosen_;
    return std::nullopt;
  }

 private:
  static std::vector<std::size_t> periods(const std::vector<std::uint32_t>& perm) {
    std::vector<std::size_t> out(perm.size(), 0);
    for (std::uint32_t x = 0; x < perm.size(); ++x) {
      if (out[x]) continue;
      std::size_t len = 0;
      std::uint32_t y = x;
      do {
        y = perm[y];
        ++len;
      } while (y != x);
      y = x;
      do {
        out[y] = len;
        y = perm[y];
      } while (y != x);
    }
    return out;
  }

  bool constraints_hold(std::size_t level) const {
    for (std::size_t i : checks_at_[level]) {
      std::uint32_t lhs = 0;
      for (std::size_t j = 0; j < coeffs_[i].size(); ++j)
        if (coeffs_[i][j]) lhs = arith_.add(lhs, arith_.mul(coeffs_[i][j], chosen_[j]));
      if (lhs != tb_[chosen_[i]]) return false;
    }
    return true;
  }

  bool descend(std::size_t level, const std::vector<char>& span, const std::vector<std::uint32_t>& members) {
    const auto& factors = group_.factors();
    if (level == factors.size()) return true;
    const auto d = static_cast<std::uint32_t>(factors[level]);
    for (const std::uint32_t c : candidates_[level]) {
      if (span[c]) continue;
      chosen_.push_back(c);
      if (!constraints_hold(level)) {
        chosen_.pop_back();
        continue;
      }
      std::vector<char> next(span.size(), 0);
      std::vector<std::uint32_t> next_members;
      bool direct = true;
      std::uint32_t multiple = 0;
      for (std::uint32_t a = 0; a < d && direct; ++a) {
        for (auto m : members) {
          const std::uint32_t s = arith_.add(m, multiple);
          if (next[s]) {
            direct = false;
            break;
          }
          next[s] = 1;
          next_members.push_back(s);
        }
        multiple = arith_.add(multiple, c);
      }
      if (direct && descend(level + 1, next, next_members)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const AbelianGroup& group_;
  detail::IndexArith arith_;
  std::vector<std::uint32_t> ta_;
  std::vector<std::uint32_t> tb_;
  std::vector<std::vector<std::uint32_t>> candidates_;
  std::vector<std::vector<std::uint32_t>> coeffs_;
  std::vector<std::vector<std::size_t>> checks_at_;
  std::vector<std::uint32_t> chosen_;
};

}  // namespace

std::optional<Automorphism> is_lambda_isomorphic(const LambdaModule& a, const LambdaModule& b) {
  if (a.group() != b.group()) return std::nullopt;
  if (a.group().is_trivial()) return Automorphism::identity(a.group());
  IsomorphismSearch search(a, b);
  const auto found = search.run();
  if (!found) return std::nullopt;
  std::vector<GroupElement> images;
  for (auto idx : *found) images.push_back(a.group().element_at(idx));
  return Automorphism(a.group(), std::move(images));
}

bool is_connected(const LambdaModule& module) {
  return conjugacy_invariants(module.t()).image_one_minus_size == module.order();
}

ModuleInvariants module_invariants(const LambdaModule& module) {
  const auto inv = conjugacy_invariants(module.t());
  return ModuleInvariants{module.group().factors(), inv.order, inv.cycle_type, inv.image_one_minus_size};
}

std::string cyclic_label(int n, int a) {
  a = ((a % n) + n) % n;
  // Small moduli are written t+(n−a), larger ones t−a.
  if (n <= 4) return "Λ" + std::to_string(n) + "/t+" + std::to_string(n - a);
  return "Λ" + std::to_string(n) + "/t-" + std::to_string(a);
}

namespace {

std::optional<std::string> diagonal_label(const LambdaModule& module) {
  const auto& group = module.group();
  const auto& factors = group.factors();
  std::vector<std::vector<int>> units(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (int a = 1; a < factors[i]; ++a)
      if (std::gcd(a, factors[i]) == 1) units[i].push_back(a);

  // Least unit tuple (a_i), lexicographically, with ⊕ Λ_{d_i}/(t − a_i) ≅ module.
  std::vector<std::size_t> pick(factors.size(), 0);
  while (true) {
    std::vector<GroupElement> images;
    for (std::size_t i = 0; i < factors.size(); ++i) images.push_back(group.scalar_mul(units[i][pick[i]], group.generator(i)));
    const LambdaModule diagonal{Automorphism(group, std::move(images))};
    if (is_lambda_isomorphic(diagonal, module)) {
      std::string s;
      for (std::size_t i = 0; i < factors.size();) {
        std::size_t j = i;
        while (j < factors.size() && factors[j] == factors[i] && units[j][pick[j]] == units[i][pick[i]]) ++j;
        const std::string name = cyclic_label(factors[i], units[i][pick[i]]);
        if (!s.empty()) s += "⊕";
        s += j - i == 1 ? name : "(" + name + ")^" + std::to_string(j - i);
        i = j;
      }
      return s;
    }
    std::size_t i = factors.size();
    while (i-- > 0) {
      if (++pick[i] < units[i].size()) break;
      pick[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) return std::nullopt;
  }
}

}  // namespace

ModuleLabel canonical_label(const LambdaModule& module) {
  const auto& group = module.group();
  if (group.is_trivial()) return {"0"};
  int p = 0;
  if (group.is_elementary(&p) && p == 2) return {match_spec(module).label()};
  if (auto diag = diagonal_label(module)) return {*diag};
  const auto auts = enumerate_automorphisms(group);
  return {"(" + group.pretty() + "; t=" + least_conjugate(module.t(), auts).to_string() + ")"};
}

}  // namespace alexq
