#include "alexq/autgroup.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "alexq/error.hpp"
#include "index_arith.hpp"
#include "parse_util.hpp"

namespace alexq {

Endomorphism::Endomorphism(AbelianGroup group, std::vector<GroupElement> images)
    : group_(std::move(group)), images_(std::move(images)) {
  if (images_.size() != group_.rank())
    throw InvalidArgument("endomorphism of " + group_.to_string() + " needs " + std::to_string(group_.rank()) +
                          " generator images, got " + std::to_string(images_.size()));
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!group_.contains(images_[i]))
      throw InvalidArgument("image " + group_.element_to_string(images_[i]) + " is not an element of " + group_.to_string());
    if (group_.factors()[i] % group_.element_order(images_[i]) != 0)
      throw InvalidArgument("image " + group_.element_to_string(images_[i]) + " of generator " + std::to_string(i + 1) +
                            " has order not dividing " + std::to_string(group_.factors()[i]));
  }
}

Endomorphism Endomorphism::identity(const AbelianGroup& group) { return scalar(group, 1); }

Endomorphism Endomorphism::scalar(const AbelianGroup& group, long long k) {
  std::vector<GroupElement> images;
  for (std::size_t i = 0; i < group.rank(); ++i) images.push_back(group.scalar_mul(k, group.generator(i)));
  return Endomorphism(group, std::move(images));
}

Endomorphism Endomorphism::parse(const AbelianGroup& group, std::string_view text) {
  const auto body = detail::trim(text);
  std::vector<GroupElement> images;
  if (!body.empty()) {
    for (const auto& field : detail::split(body, ';')) images.push_back(group.parse_element(field));
  }
  if (images.size() != group.rank())
    throw ParseError("automorphism spec '" + std::string(text) + "' gives " + std::to_string(images.size()) +
                     " images, group " + group.to_string() + " has " + std::to_string(group.rank()) + " generators");
  try {
    return Endomorphism(group, std::move(images));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

GroupElement Endomorphism::apply(const GroupElement& x) const {
  if (!group_.contains(x)) throw InvalidArgument("element " + group_.element_to_string(x) + " not in " + group_.to_string());
  GroupElement r = group_.zero();
  for (std::size_t i = 0; i < images_.size(); ++i) r = group_.add(r, group_.scalar_mul(x.coords[i], images_[i]));
  return r;
}

std::vector<std::uint32_t> Endomorphism::permutation() const {
  const detail::IndexArith arith(group_);
  std::vector<std::uint32_t> gens;
  for (const auto& img : images_) gens.push_back(static_cast<std::uint32_t>(group_.index_of(img)));
  return arith.linear_table(gens);
}

bool Endomorphism::is_bijective() const {
  const auto table = permutation();
  std::vector<char> seen(table.size(), 0);
  for (auto v : table) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::string Endomorphism::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ';';
    for (std::size_t j = 0; j < images_[i].coords.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(images_[i].coords[j]);
    }
  }
  return s;
}

Automorphism::Automorphism(Endomorphism f) : Endomorphism(std::move(f)) {
  if (!is_bijective()) throw InvalidArgument("map " + to_string() + " is not an automorphism of " + group().to_string());
}

Endomorphism compose(const Endomorphism& f, const Endomorphism& g) {
  if (f.group() != g.group()) throw InvalidArgument("cannot compose endomorphisms of different groups");
  std::vector<GroupElement> images;
  for (const auto& img : g.images()) images.push_back(f.apply(img));
  return Endomorphism(f.group(), std::move(images));
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  return Automorphism(compose(static_cast<const Endomorphism&>(f), static_cast<const Endomorphism&>(g)));
}

Automorphism invert(const Endomorphism& f) {
  const auto& group = f.group();
  const auto table = f.permutation();
  std::vector<std::uint32_t> inverse(table.size(), 0);
  std::vector<char> seen(table.size(), 0);
  for (std::uint32_t x = 0; x < table.size(); ++x) {
    if (seen[table[x]]) throw InvalidArgument("cannot invert non-bijective map " + f.to_string());
    seen[table[x]] = 1;
    inverse[table[x]] = x;
  }
  std::vector<GroupElement> images;
  for (std::size_t i = 0; i < group.rank(); ++i) images.push_back(group.element_at(inverse[group.index_of(group.generator(i))]));
  return Automorphism(group, std::move(images));
}

namespace {

// Depth-first search over generator images of exact order d_i, keeping the partial map injective.
class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const AbelianGroup& group) : group_(group), arith_(group) {
    const auto& factors = group.factors();
    candidates_.resize(factors.size());
    for (std::uint32_t x = 0; x < group.order(); ++x) {
      const int ord = group.element_order(group.element_at(x));
      for (std::size_t i = 0; i < factors.size(); ++i)
        if (ord == factors[i]) candidates_[i].push_back(x);
    }
  }

  const std::vector<std::uint32_t>& first_candidates() const { return candidates_.front(); }

  // Runs the search with the first image restricted to first_candidates()[lo, hi).
  std::vector<Automorphism> run(std::size_t lo, std::size_t hi) const {
    std::vector<Automorphism> out;
    std::vector<std::uint32_t> chosen;
    std::vector<char> span(group_.order(), 0);
    span[0] = 1;
    std::vector<std::uint32_t> members{0};
    descend(0, lo, hi, chosen, span, members, out);
    return out;
  }

 private:
  void descend(std::size_t level, std::size_t lo, std::size_t hi, std::vector<std::uint32_t>& chosen,
               const std::vector<char>& span, const std::vector<std::uint32_t>& members,
               std::vector<Automorphism>& out) const {
    const auto& factors = group_.factors();
    if (level == factors.size()) {
      std::vector<GroupElement> images;
      for (auto c : chosen) images.push_back(group_.element_at(c));
      out.emplace_back(group_, std::move(images));
      return;
    }
    const auto& cands = candidates_[level];
    const std::size_t begin = level == 0 ? lo : 0;
    const std::size_t end = level == 0 ? hi : cands.size();
    const auto d = static_cast<std::uint32_t>(factors[level]);
    for (std::size_t ci = begin; ci < end; ++ci) {
      const std::uint32_t c = cands[ci];
      // span + <c> must be a direct sum of size |span|·d.
      std::vector<char> next(span.size(), 0);
      std::vector<std::uint32_t> next_members;
      next_members.reserve(members.size() * d);
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
      if (!direct) continue;
      chosen.push_back(c);
      descend(level + 1, lo, hi, chosen, next, next_members, out);
      chosen.pop_back();
    }
  }

  const AbelianGroup& group_;
  detail::IndexArith arith_;
  std::vector<std::vector<std::uint32_t>> candidates_;
};

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

// Generator-image indices of an automorphism, packed base |G|; monotone in the lexicographic order.
std::uint64_t pack(const std::vector<std::uint32_t>& table, const std::vector<std::uint32_t>& gens, std::uint64_t n) {
  std::uint64_t key = 0;
  for (auto g : gens) key = key * n + table[g];
  return key;
}

}  // namespace

std::vector<Automorphism> enumerate_automorphisms(const AbelianGroup& group, const EnumerationOptions& options) {
  const std::uint64_t tuples = checked_power(group.order(), group.rank(), options.budget);
  if (tuples > options.budget)
    throw BudgetError("automorphism enumeration of " + group.to_string() + " needs " + std::to_string(group.order()) + "^" +
                      std::to_string(group.rank()) + " candidate tuples, budget is " + std::to_string(options.budget));
  if (group.is_trivial()) return {Automorphism::identity(group)};

  const AutomorphismSearch search(group);
  const std::size_t n_first = search.first_candidates().size();
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(n_first)));
  if (threads == 1) return search.run(0, n_first);

  std::vector<std::vector<Automorphism>> chunks(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t lo = n_first * t / threads;
      const std::size_t hi = n_first * (t + 1) / threads;
      workers.emplace_back([&, t, lo, hi] { chunks[t] = search.run(lo, hi); });
    }
  }
  // Chunks partition the first-image range in order, so concatenation is already sorted.
  std::vector<Automorphism> out;
  for (auto& chunk : chunks) std::move(chunk.begin(), chunk.end(), std::back_inserter(out));
  return out;
}

std::vector<ConjugacyClass> conjugacy_classes(const AbelianGroup& group, const EnumerationOptions& options) {
  const auto auts = enumerate_automorphisms(group, options);
  const std::uint64_t n = group.order();
  std::vector<std::uint32_t> gens;
  for (std::size_t i = 0; i < group.rank(); ++i) gens.push_back(static_cast<std::uint32_t>(group.index_of(group.generator(i))));

  std::vector<std::vector<std::uint32_t>> tables;
  std::vector<std::vector<std::uint32_t>> inverses;
  std::vector<std::uint64_t> keys;
  tables.reserve(auts.size());
  inverses.reserve(auts.size());
  keys.reserve(auts.size());
  for (const auto& a : auts) {
    auto table = a.permutation();
    std::vector<std::uint32_t> inverse(table.size());
    for (std::uint32_t x = 0; x < table.size(); ++x) inverse[table[x]] = x;
    keys.push_back(pack(table, gens, n));
    tables.push_back(std::move(table));
    inverses.push_back(std::move(inverse));
  }

  // Orbit expansion in enumeration order: the first unvisited automorphism is the least of its class.
  std::vector<char> visited(auts.size(), 0);
  std::vector<ConjugacyClass> classes;
  for (std::size_t i = 0; i < auts.size(); ++i) {
    if (visited[i]) continue;
    std::size_t size = 0;
    const auto& g = tables[i];
    for (std::size_t h = 0; h < auts.size(); ++h) {
      // h⁻¹ ∘ g ∘ h on generators
      std::uint64_t key = 0;
      for (auto e : gens) key = key * n + inverses[h][g[tables[h][e]]];
      const auto it = std::lower_bound(keys.begin(), keys.end(), key);
      if (it == keys.end() || *it != key) throw InternalError("conjugate of an automorphism left the automorphism group");
      const auto j = static_cast<std::size_t>(it - keys.begin());
      if (!visited[j]) {
        visited[j] = 1;
        ++size;
      }
    }
    classes.push_back({auts[i], size});
  }
  return classes;
}

std::vector<Automorphism> conjugacy_representatives(const AbelianGroup& group, const EnumerationOptions& options) {
  std::vector<Automorphism> reps;
  for (auto& c : conjugacy_classes(group, options)) reps.push_back(std::move(c.representative));
  return reps;
}

ConjugacyInvariants conjugacy_invariants(const Endomorphism& f) {
  const auto table = f.permutation();
  const detail::IndexArith arith(f.group());
  ConjugacyInvariants inv;
  std::vector<char> seen(table.size(), 0);
  for (std::uint32_t x = 0; x < table.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    std::uint32_t y = x;
    while (!seen[y]) {
      seen[y] = 1;
      y = table[y];
      ++len;
    }
    inv.cycle_type.push_back(len);
    inv.order = std::lcm(inv.order, len);
  }
  std::sort(inv.cycle_type.begin(), inv.cycle_type.end());
  std::vector<char> image(table.size(), 0);
  for (std::uint32_t x = 0; x < table.size(); ++x) image[arith.sub(x, table[x])] = 1;
  inv.image_one_minus_size = static_cast<std::size_t>(std::count(image.begin(), image.end(), 1));
  return inv;
}

std::optional<Automorphism> is_conjugate(const AbelianGroup& group, const Automorphism& f, const Automorphism& g,
                                         std::span<const Automorphism> automorphisms) {
  if (f.group() != group || g.group() != group) throw InvalidArgument("automorphisms belong to a different group");
  if (f == g) return Automorphism::identity(group);
  if (conjugacy_invariants(f) != conjugacy_invariants(g)) return std::nullopt;

  const auto ft = f.permutation();
  const auto gt = g.permutation();
  std::vector<std::uint32_t> gens;
  for (std::size_t i = 0; i < group.rank(); ++i) gens.push_back(static_cast<std::uint32_t>(group.index_of(group.generator(i))));
  for (const auto& h : automorphisms) {
    // f = h⁻¹ g h  ⟺  h∘f = g∘h, checked on generators.
    const auto ht = h.permutation();
    bool ok = true;
    for (auto e : gens) {
      if (ht[ft[e]] != gt[ht[e]]) {
        ok = false;
        break;
      }
    }
    if (ok) return h;
  }
  return std::nullopt;
}

std::optional<Automorphism> is_conjugate(const AbelianGroup& group, const Automorphism& f, const Automorphism& g) {
  if (f == g) return Automorphism::identity(group);
  if (conjugacy_invariants(f) != conjugacy_invariants(g)) return std::nullopt;
  const auto auts = enumerate_automorphisms(group);
  return is_conjugate(group, f, g, auts);
}

Automorphism least_conjugate(const Automorphism& f, std::span<const Automorphism> automorphisms) {
  const auto& group = f.group();
  const auto ft = f.permutation();
  std::vector<std::uint32_t> gens;
  for (std::size_t i = 0; i < group.rank(); ++i) gens.push_back(static_cast<std::uint32_t>(group.index_of(group.generator(i))));
  std::vector<std::uint32_t> best;
  for (const auto& h : automorphisms) {
    const auto ht = h.permutation();
    std::vector<std::uint32_t> inverse(ht.size());
    for (std::uint32_t x = 0; x < ht.size(); ++x) inverse[ht[x]] = x;
    std::vector<std::uint32_t> images;
    for (auto e : gens) images.push_back(inverse[ft[ht[e]]]);
    if (best.empty() || images < best) best = std::move(images);
  }
  std::vector<GroupElement> images;
  for (auto idx : best) images.push_back(group.element_at(idx));
  if (images.size() != group.rank()) return f;
  return Automorphism(group, std::move(images));
}

}  // namespace alexq
