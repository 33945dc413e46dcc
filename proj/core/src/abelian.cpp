#include "alexq/abelian.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>

#include "alexq/error.hpp"
#include "parse_util.hpp"

namespace alexq {

namespace {

long long mod(long long x, int m) {
  long long r = x % m;
  return r < 0 ? r + m : r;
}

// Partitions of n into parts <= max_part, parts listed in non-increasing order.
void partitions(int n, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(n - part, part, current, out);
    current.pop_back();
  }
}

int ipow(int base, int exp) {
  int r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace

std::vector<std::pair<int, int>> factorize(std::size_t n) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(static_cast<int>(p), e);
  }
  if (n > 1) out.emplace_back(static_cast<int>(n), 1);
  return out;
}

AbelianGroup::AbelianGroup(std::vector<int> invariant_factors) : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw InvalidArgument("invariant factor must be >= 2, got " + std::to_string(factors_[i]));
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw InvalidArgument("invariant factors must form a divisibility chain: " + std::to_string(factors_[i - 1]) +
                            " does not divide " + std::to_string(factors_[i]));
    order_ *= static_cast<std::size_t>(factors_[i]);
  }
}

AbelianGroup AbelianGroup::normalized(const std::vector<int>& cyclic_orders) {
  // prime -> exponents of its cyclic p-parts
  std::vector<std::pair<int, std::vector<int>>> primary;
  for (int c : cyclic_orders) {
    if (c < 1) throw InvalidArgument("cyclic order must be positive, got " + std::to_string(c));
    for (auto [p, e] : factorize(static_cast<std::size_t>(c))) {
      auto it = std::find_if(primary.begin(), primary.end(), [p = p](const auto& entry) { return entry.first == p; });
      if (it == primary.end()) {
        primary.push_back({p, {}});
        it = std::prev(primary.end());
      }
      it->second.push_back(e);
    }
  }
  std::size_t rank = 0;
  for (auto& [p, exps] : primary) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    rank = std::max(rank, exps.size());
  }
  // The largest p-parts all go into the last invariant factor, and so on downwards.
  std::vector<int> factors(rank, 1);
  for (const auto& [p, exps] : primary)
    for (std::size_t j = 0; j < exps.size(); ++j) factors[rank - 1 - j] *= ipow(p, exps[j]);
  return AbelianGroup(std::move(factors));
}

AbelianGroup AbelianGroup::parse(std::string_view text) {
  const auto fields = detail::split(detail::trim(text), ',');
  std::vector<int> orders;
  for (const auto& field : fields) {
    const auto token = detail::trim(field);
    int value = 0;
    if (!detail::parse_int(token, value) || value < 1)
      throw ParseError("invalid group factor '" + std::string(token) + "' in group spec '" + std::string(text) + "'");
    orders.push_back(value);
  }
  if (orders.empty()) throw ParseError("empty group spec");
  return normalized(orders);
}

bool AbelianGroup::is_elementary(int* prime) const {
  if (factors_.empty()) return false;
  const int p = factors_.front();
  if (factors_.back() != p) return false;
  if (factorize(static_cast<std::size_t>(p)).size() != 1 || factorize(static_cast<std::size_t>(p)).front().second != 1)
    return false;
  if (prime != nullptr) *prime = p;
  return true;
}

void AbelianGroup::check(const GroupElement& x) const {
  if (!contains(x))
    throw InvalidArgument("element " + element_to_string(x) + " does not belong to group " + to_string());
}

bool AbelianGroup::contains(const GroupElement& x) const noexcept {
  if (x.coords.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (x.coords[i] < 0 || x.coords[i] >= factors_[i]) return false;
  return true;
}

GroupElement AbelianGroup::zero() const { return GroupElement{std::vector<int>(factors_.size(), 0)}; }

GroupElement AbelianGroup::generator(std::size_t i) const {
  if (i >= factors_.size()) throw InvalidArgument("generator index out of range");
  GroupElement e = zero();
  e.coords[i] = 1;
  return e;
}

GroupElement AbelianGroup::add(const GroupElement& x, const GroupElement& y) const {
  check(x);
  check(y);
  GroupElement r = x;
  for (std::size_t i = 0; i < factors_.size(); ++i) r.coords[i] = (x.coords[i] + y.coords[i]) % factors_[i];
  return r;
}

GroupElement AbelianGroup::sub(const GroupElement& x, const GroupElement& y) const { return add(x, neg(y)); }

GroupElement AbelianGroup::neg(const GroupElement& x) const {
  check(x);
  GroupElement r = x;
  for (std::size_t i = 0; i < factors_.size(); ++i) r.coords[i] = (factors_[i] - x.coords[i]) % factors_[i];
  return r;
}

GroupElement AbelianGroup::scalar_mul(long long k, const GroupElement& x) const {
  check(x);
  GroupElement r = x;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    r.coords[i] = static_cast<int>(mod(mod(k, factors_[i]) * x.coords[i], factors_[i]));
  return r;
}

int AbelianGroup::element_order(const GroupElement& x) const {
  check(x);
  int order = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) order = std::lcm(order, factors_[i] / std::gcd(factors_[i], x.coords[i]));
  return order;
}

std::size_t AbelianGroup::index_of(const GroupElement& x) const {
  check(x);
  std::size_t index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) index = index * static_cast<std::size_t>(factors_[i]) + x.coords[i];
  return index;
}

GroupElement AbelianGroup::element_at(std::size_t index) const {
  if (index >= order_) throw InvalidArgument("element index out of range");
  GroupElement x = zero();
  for (std::size_t i = factors_.size(); i-- > 0;) {
    x.coords[i] = static_cast<int>(index % factors_[i]);
    index /= factors_[i];
  }
  return x;
}

std::vector<GroupElement> AbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

std::string AbelianGroup::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(factors_[i]);
  }
  return s;
}

std::string AbelianGroup::pretty() const {
  if (factors_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += "⊕";
    s += "ℤ" + std::to_string(factors_[i]);
  }
  return s;
}

std::string AbelianGroup::element_to_string(const GroupElement& x) const {
  std::string s = "(";
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(x.coords[i]);
  }
  return s + ")";
}

GroupElement AbelianGroup::parse_element(std::string_view text) const {
  auto body = detail::trim(text);
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw ParseError("unbalanced parentheses in element '" + std::string(text) + "'");
    body = detail::trim(body.substr(1, body.size() - 2));
  }
  GroupElement x;
  if (!body.empty()) {
    for (const auto& field : detail::split(body, ',')) {
      int value = 0;
      if (!detail::parse_int(detail::trim(field), value))
        throw ParseError("invalid coordinate '" + std::string(detail::trim(field)) + "' in element '" + std::string(text) + "'");
      x.coords.push_back(value);
    }
  }
  if (x.coords.size() != factors_.size())
    throw ParseError("element '" + std::string(text) + "' has " + std::to_string(x.coords.size()) +
                     " coordinates, group " + to_string() + " needs " + std::to_string(factors_.size()));
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (x.coords[i] < 0 || x.coords[i] >= factors_[i])
      throw ParseError("coordinate " + std::to_string(x.coords[i]) + " out of range [0," + std::to_string(factors_[i]) +
                       ") in element '" + std::string(text) + "'");
  return x;
}

std::vector<AbelianGroup> enumerate_groups(std::size_t order) {
  if (order < 1) throw InvalidArgument("group order must be positive");
  // One list of partitions per prime; cross-combine.
  std::vector<std::pair<int, std::vector<std::vector<int>>>> per_prime;
  for (auto [p, e] : factorize(order)) {
    std::vector<std::vector<int>> parts;
    std::vector<int> current;
    partitions(e, e, current, parts);
    per_prime.emplace_back(p, std::move(parts));
  }

  std::vector<AbelianGroup> groups;
  std::vector<std::size_t> choice(per_prime.size(), 0);
  while (true) {
    std::vector<int> cyclic;
    for (std::size_t i = 0; i < per_prime.size(); ++i)
      for (int exp : per_prime[i].second[choice[i]]) cyclic.push_back(ipow(per_prime[i].first, exp));
    groups.push_back(AbelianGroup::normalized(cyclic));

    std::size_t i = 0;
    for (; i < choice.size(); ++i) {
      if (++choice[i] < per_prime[i].second.size()) break;
      choice[i] = 0;
    }
    if (i == choice.size()) break;
  }
  std::sort(groups.begin(), groups.end());
  return groups;
}

GroupElement SubgroupStructure::coordinates(const AbelianGroup& parent, const GroupElement& x) const {
  const std::size_t local = local_index[parent.index_of(x)];
  if (local == npos) throw InvalidArgument("element " + parent.element_to_string(x) + " is not in the subgroup");
  return group().element_at(local);
}

SubgroupStructure subgroup_structure(const AbelianGroup& group, const std::vector<GroupElement>& generators) {
  const std::size_t n = group.order();
  std::vector<GroupElement> all = group.elements();

  // Closure: the subgroup generated by a set is the set of sums reachable from 0.
  std::vector<char> member(n, 0);
  std::vector<std::size_t> frontier{group.index_of(group.zero())};
  member[frontier.front()] = 1;
  std::vector<GroupElement> gens;
  for (const auto& g : generators) {
    if (!group.contains(g)) throw InvalidArgument("generator " + group.element_to_string(g) + " not in group " + group.to_string());
    gens.push_back(g);
  }
  while (!frontier.empty()) {
    const std::size_t cur = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      const std::size_t next = group.index_of(group.add(all[cur], g));
      if (!member[next]) {
        member[next] = 1;
        frontier.push_back(next);
      }
    }
  }

  // Greedy basis: repeatedly take the member whose order modulo the span found so far is
  // maximal, then shift it within its coset to an element of exactly that order. Such an
  // element exists because the span is a direct summand at every step.
  std::vector<char> span(n, 0);
  span[group.index_of(group.zero())] = 1;
  std::size_t span_size = 1;
  std::vector<GroupElement> basis_desc;
  std::vector<int> orders_desc;
  const std::size_t target = static_cast<std::size_t>(std::count(member.begin(), member.end(), 1));

  auto quotient_order = [&](const GroupElement& x) {
    int m = 1;
    GroupElement acc = x;
    while (!span[group.index_of(acc)]) {
      acc = group.add(acc, x);
      ++m;
    }
    return m;
  };

  while (span_size < target) {
    int best_order = 1;
    std::size_t best = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!member[i] || span[i]) continue;
      const int q = quotient_order(all[i]);
      if (q > best_order) {
        best_order = q;
        best = i;
      }
    }
    std::optional<GroupElement> lifted;
    for (std::size_t k = 0; k < n && !lifted; ++k) {
      if (!span[k]) continue;
      GroupElement candidate = group.sub(all[best], all[k]);
      if (group.element_order(candidate) == best_order) lifted = candidate;
    }
    if (!lifted) throw InternalError("subgroup basis extraction failed to lift a coset representative");

    // span += <lifted>
    std::vector<char> next(n, 0);
    GroupElement multiple = group.zero();
    for (int a = 0; a < best_order; ++a) {
      for (std::size_t k = 0; k < n; ++k)
        if (span[k]) next[group.index_of(group.add(all[k], multiple))] = 1;
      multiple = group.add(multiple, *lifted);
    }
    span.swap(next);
    const std::size_t new_size = static_cast<std::size_t>(std::count(span.begin(), span.end(), 1));
    if (new_size != span_size * static_cast<std::size_t>(best_order))
      throw InternalError("subgroup basis extraction produced a non-direct sum");
    span_size = new_size;
    basis_desc.push_back(*lifted);
    orders_desc.push_back(best_order);
  }

  SubgroupStructure out;
  out.factors.assign(orders_desc.rbegin(), orders_desc.rend());
  out.basis.assign(basis_desc.rbegin(), basis_desc.rend());
  for (std::size_t i = 0; i < n; ++i)
    if (member[i]) out.elements.push_back(all[i]);

  const AbelianGroup local(out.factors);
  out.local_index.assign(n, SubgroupStructure::npos);
  for (std::size_t li = 0; li < local.order(); ++li) {
    const GroupElement coords = local.element_at(li);
    GroupElement x = group.zero();
    for (std::size_t j = 0; j < out.basis.size(); ++j) x = group.add(x, group.scalar_mul(coords.coords[j], out.basis[j]));
    const std::size_t pi = group.index_of(x);
    if (out.local_index[pi] != SubgroupStructure::npos) throw InternalError("subgroup basis map is not injective");
    out.local_index[pi] = li;
  }
  return out;
}

}  // namespace alexq
