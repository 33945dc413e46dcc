#include "alexq/quandle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "alexq/error.hpp"
#include "index_arith.hpp"

namespace alexq {

CayleyTable::CayleyTable(std::size_t n, std::vector<std::uint32_t> entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_)
    throw InvalidArgument("Cayley table of order " + std::to_string(n_) + " needs " + std::to_string(n_ * n_) +
                          " entries, got " + std::to_string(entries_.size()));
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] >= n_)
      throw InvalidArgument("entry " + std::to_string(entries_[i]) + " at row " + std::to_string(i / n_) + ", column " +
                            std::to_string(i % n_) + " is out of range");
}

CayleyTable alexander_table(const LambdaModule& module) {
  const std::size_t n = module.order();
  const detail::IndexArith arith(module.group());
  const auto t = module.t().permutation();
  std::vector<std::uint32_t> entries(n * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) entries[a * n + b] = arith.add(t[a], arith.sub(b, t[b]));
  return CayleyTable(n, std::move(entries));
}

AxiomVerdict check_axioms(const CayleyTable& q) {
  const std::size_t n = q.size();
  for (std::size_t a = 0; a < n; ++a)
    if (q.op(a, a) != a)
      return {false, 1, {a}, "idempotence fails: " + std::to_string(a) + "▷" + std::to_string(a) + " = " + std::to_string(q.op(a, a))};
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<std::size_t> first(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t c = q.op(a, b);
      if (first[c] != n)
        return {false, 2, {first[c], a, b},
                "right translation by " + std::to_string(b) + " is not injective: " + std::to_string(first[c]) + "▷" +
                    std::to_string(b) + " = " + std::to_string(a) + "▷" + std::to_string(b)};
      first[c] = a;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (q.op(q.op(a, b), c) != q.op(q.op(a, c), q.op(b, c)))
          return {false, 3, {a, b, c},
                  "self-distributivity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")"};
  return {};
}

std::vector<std::vector<std::size_t>> orbits(const CayleyTable& q) {
  if (const auto verdict = check_axioms(q); !verdict.ok) throw InvalidArgument("not a quandle: " + verdict.message);
  const std::size_t n = q.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // Right translations are permutations, so linking a with a▷b also covers a▷⁻¹b.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto ra = find(a);
      const auto rc = find(q.op(a, b));
      if (ra != rc) parent[std::max(ra, rc)] = std::min(ra, rc);
    }
  std::map<std::size_t, std::vector<std::size_t>> blocks;
  for (std::size_t a = 0; a < n; ++a) blocks[find(a)].push_back(a);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : blocks) out.push_back(std::move(members));
  return out;
}

namespace {

using Fingerprint = std::vector<std::size_t>;

// Per-element isomorphism invariants: orbit size, fixed points of the row, the multiplicity
// profile of the row, and the cycle type of the right translation by the element.
std::vector<Fingerprint> fingerprints(const CayleyTable& q) {
  const std::size_t n = q.size();
  std::vector<std::size_t> orbit_size(n, 0);
  for (const auto& block : orbits(q))
    for (auto a : block) orbit_size[a] = block.size();

  std::vector<Fingerprint> out(n);
  for (std::size_t a = 0; a < n; ++a) {
    Fingerprint fp{orbit_size[a]};
    std::size_t fixed = 0;
    std::vector<std::size_t> mult(n, 0);
    for (std::size_t b = 0; b < n; ++b) {
      ++mult[q.op(a, b)];
      if (q.op(a, b) == a) ++fixed;
    }
    fp.push_back(fixed);
    std::sort(mult.begin(), mult.end());
    fp.insert(fp.end(), mult.begin(), mult.end());

    std::vector<char> seen(n, 0);
    std::vector<std::size_t> cycles;
    for (std::size_t x = 0; x < n; ++x) {
      if (seen[x]) continue;
      std::size_t len = 0;
      for (std::size_t y = x; !seen[y]; y = q.op(y, a)) {
        seen[y] = 1;
        ++len;
      }
      cycles.push_back(len);
    }
    std::sort(cycles.begin(), cycles.end());
    fp.push_back(n + 1);  // separator
    fp.insert(fp.end(), cycles.begin(), cycles.end());
    out[a] = std::move(fp);
  }
  return out;
}

class OracleSearch {
 public:
  OracleSearch(const CayleyTable& q1, const CayleyTable& q2)
      : q1_(q1), q2_(q2), n_(q1.size()), f_(n_, kUnset), finv_(n_, kUnset) {
    fp1_ = fingerprints(q1);
    fp2_ = fingerprints(q2);
    std::map<Fingerprint, std::size_t> count;
    for (const auto& fp : fp1_) ++count[fp];
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    // Rarest fingerprints first: fewest branches near the root.
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      if (count[fp1_[a]] != count[fp1_[b]]) return count[fp1_[a]] < count[fp1_[b]];
      return fp1_[a] < fp1_[b];
    });
  }

  bool fingerprints_compatible() const {
    auto a = fp1_;
    auto b = fp2_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  std::optional<std::vector<std::size_t>> run() {
    if (!fingerprints_compatible()) return std::nullopt;
    if (!descend()) return std::nullopt;
    return f_;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool assign(std::size_t x, std::size_t y, std::vector<std::size_t>& trail) {
    if (f_[x] != kUnset) return f_[x] == y;
    if (finv_[y] != kUnset) return false;
    if (fp1_[x] != fp2_[y]) return false;
    f_[x] = y;
    finv_[y] = x;
    trail.push_back(x);
    assigned_.push_back(x);
    return true;
  }

  // Close the partial map under f(a▷b) = f(a)▷f(b).
  bool propagate(std::size_t start, std::vector<std::size_t>& trail) {
    std::size_t cursor = start;
    while (cursor < assigned_.size()) {
      const std::size_t u = assigned_[cursor++];
      for (std::size_t i = 0; i < cursor; ++i) {
        const std::size_t v = assigned_[i];
        if (!assign(q1_.op(u, v), q2_.op(f_[u], f_[v]), trail)) return false;
        if (!assign(q1_.op(v, u), q2_.op(f_[v], f_[u]), trail)) return false;
      }
    }
    return true;
  }

  void undo(std::vector<std::size_t>& trail) {
    for (auto x : trail) {
      finv_[f_[x]] = kUnset;
      f_[x] = kUnset;
    }
    assigned_.resize(assigned_.size() - trail.size());
    trail.clear();
  }

  bool descend() {
    std::size_t next = kUnset;
    for (auto a : order_)
      if (f_[a] == kUnset) {
        next = a;
        break;
      }
    if (next == kUnset) return true;
    for (std::size_t y = 0; y < n_; ++y) {
      if (finv_[y] != kUnset || fp1_[next] != fp2_[y]) continue;
      std::vector<std::size_t> trail;
      const std::size_t start = assigned_.size();
      if (assign(next, y, trail) && propagate(start, trail) && descend()) return true;
      undo(trail);
    }
    return false;
  }

  const CayleyTable& q1_;
  const CayleyTable& q2_;
  std::size_t n_;
  std::vector<std::size_t> f_;
  std::vector<std::size_t> finv_;
  std::vector<std::size_t> assigned_;
  std::vector<Fingerprint> fp1_;
  std::vector<Fingerprint> fp2_;
  std::vector<std::size_t> order_;
};

}  // namespace

std::optional<std::vector<std::size_t>> brute_force_isomorphic(const CayleyTable& q1, const CayleyTable& q2) {
  if (q1.size() != q2.size()) return std::nullopt;
  OracleSearch search(q1, q2);
  auto f = search.run();
  if (!f) return std::nullopt;
  for (std::size_t a = 0; a < q1.size(); ++a)
    for (std::size_t b = 0; b < q1.size(); ++b)
      if ((*f)[q1.op(a, b)] != q2.op((*f)[a], (*f)[b])) throw InternalError("oracle produced an invalid witness");
  return f;
}

}  // namespace alexq
