#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "alexq/autgroup.hpp"
#include "alexq/error.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace alexq;

namespace {

// h⁻¹∘g∘h evaluated on every element.
bool conjugates_pointwise(const AbelianGroup& g, const Automorphism& f, const Automorphism& target, const Automorphism& h) {
  const auto hinv = invert(h);
  for (const auto& x : g.elements())
    if (hinv.apply(target.apply(h.apply(x))) != f.apply(x)) return false;
  return true;
}

}  // namespace

TEST_CASE("automorphism counts match the brute-force oracle") {
  CHECK(enumerate_automorphisms(AbelianGroup({16})).size() == 8);
  CHECK(enumerate_automorphisms(AbelianGroup({4, 4})).size() == 96);
  CHECK(enumerate_automorphisms(AbelianGroup({2, 2, 2, 2})).size() == 20160);
  CHECK(enumerate_automorphisms(AbelianGroup()).size() == 1);

  for (std::size_t n : {4u, 8u, 9u, 12u, 16u}) {
    for (const auto& g : enumerate_groups(n)) {
      if (g.rank() == 4) continue;  // covered by the GL(4,2) order above
      CHECK_MESSAGE(enumerate_automorphisms(g).size() == oracle::automorphism_count(g.factors()), g.to_string());
    }
  }
}

TEST_CASE("enumerated automorphisms are distinct, sorted and bijective") {
  for (const auto& g : enumerate_groups(16)) {
    const auto auts = enumerate_automorphisms(g);
    CHECK(std::is_sorted(auts.begin(), auts.end()));
    CHECK(std::adjacent_find(auts.begin(), auts.end()) == auts.end());
    for (const auto& f : auts) {
      auto perm = f.permutation();
      std::sort(perm.begin(), perm.end());
      bool ok = true;
      for (std::size_t i = 0; i < perm.size(); ++i) ok &= perm[i] == i;
      REQUIRE(ok);
    }
  }
}

TEST_CASE("threaded enumeration returns the same list") {
  const AbelianGroup g({2, 2, 2, 2});
  EnumerationOptions opts;
  opts.threads = 4;
  CHECK(enumerate_automorphisms(g, opts) == enumerate_automorphisms(g));
}

TEST_CASE("budget guard") {
  EnumerationOptions opts;
  opts.budget = 1000;
  CHECK_THROWS_AS(enumerate_automorphisms(AbelianGroup({2, 2, 2, 2}), opts), BudgetError);
  CHECK_THROWS_AS(conjugacy_classes(AbelianGroup({2, 2, 2, 2}), opts), BudgetError);
  CHECK_NOTHROW(enumerate_automorphisms(AbelianGroup({16}), opts));
}

TEST_CASE("apply, compose and invert") {
  const AbelianGroup g({4, 4});
  const auto phi = Automorphism::parse(g, "0,1;3,2");
  CHECK(phi.apply({{1, 1}}) == GroupElement{{3, 3}});
  CHECK(phi.to_string() == "0,1;3,2");
  const auto id = Automorphism::identity(g);
  for (const auto& x : g.elements()) CHECK(id.apply(x) == x);

  const AbelianGroup h({2, 8});
  for (const auto& f : enumerate_automorphisms(h)) {
    CHECK(compose(f, invert(f)) == Automorphism::identity(h));
    CHECK(compose(invert(f), f) == Automorphism::identity(h));
  }
  // compose applies its second argument first.
  const auto a = Automorphism::parse(g, "0,1;1,0");
  const auto b = Automorphism::parse(g, "1,1;0,1");
  const GroupElement x{{1, 0}};
  CHECK(compose(a, b).apply(x) == a.apply(b.apply(x)));
}

TEST_CASE("malformed endomorphisms are rejected") {
  const AbelianGroup g({2, 4});
  CHECK_THROWS_AS(Endomorphism(g, {GroupElement{{0, 1}}, GroupElement{{0, 1}}}), InvalidArgument);  // 2·(0,1) ≠ 0
  CHECK_THROWS_AS(Automorphism::parse(g, "1,0;1,0"), InvalidArgument);
  CHECK_THROWS_AS(Automorphism::parse(g, "1,0"), ParseError);
  CHECK_THROWS_AS(invert(Endomorphism::scalar(AbelianGroup({4}), 2)), InvalidArgument);
  CHECK(Automorphism::parse(AbelianGroup(), "").images().empty());
}

TEST_CASE("conjugacy examples") {
  const AbelianGroup z16({16});
  const auto m3 = Automorphism(Endomorphism::scalar(z16, 3));
  const auto m5 = Automorphism(Endomorphism::scalar(z16, 5));
  const auto same = is_conjugate(z16, m3, m3);
  REQUIRE(same);
  CHECK(conjugates_pointwise(z16, m3, m3, *same));
  CHECK_FALSE(is_conjugate(z16, m3, m5));

  const AbelianGroup g({4, 4});
  CHECK_FALSE(is_conjugate(g, Automorphism::parse(g, "0,1;1,1"), Automorphism::parse(g, "0,1;3,1")));
  const auto id = is_conjugate(g, Automorphism::identity(g), Automorphism::identity(g));
  REQUIRE(id);
}

TEST_CASE("conjugacy class counts") {
  CHECK(conjugacy_representatives(AbelianGroup({16})).size() == 8);
  CHECK(conjugacy_representatives(AbelianGroup({2, 2, 2, 2})).size() == 14);
  const auto trivial = conjugacy_representatives(AbelianGroup());
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].images().empty());
}

TEST_CASE("class partition agrees with pairwise testing and sizes sum to |Aut|") {
  for (std::size_t n : {4u, 8u, 9u, 12u, 16u}) {
    for (const auto& g : enumerate_groups(n)) {
      if (g.rank() == 4) continue;
      const auto auts = enumerate_automorphisms(g);
      const auto classes = conjugacy_classes(g);
      CHECK(std::is_sorted(classes.begin(), classes.end(),
                           [](const auto& a, const auto& b) { return a.representative < b.representative; }));
      std::size_t total = 0;
      for (const auto& c : classes) total += c.size;
      CHECK(total == auts.size());

      // Naive partition: conjugate every automorphism by every automorphism.
      std::vector<int> assigned(auts.size(), -1);
      int next_class = 0;
      for (std::size_t i = 0; i < auts.size(); ++i) {
        if (assigned[i] >= 0) continue;
        for (const auto& h : auts) {
          const auto c = compose(invert(h), compose(auts[i], h));
          assigned[std::lower_bound(auts.begin(), auts.end(), c) - auts.begin()] = next_class;
        }
        ++next_class;
      }
      CHECK(static_cast<std::size_t>(next_class) == classes.size());
      for (const auto& c : classes) {
        const auto least = least_conjugate(c.representative, auts);
        CHECK(least == c.representative);
      }
    }
  }
}

TEST_CASE("conjugacy is an equivalence with sound witnesses (sampled)") {
  std::mt19937 rng(99);
  for (const auto& g : {AbelianGroup({4, 4}), AbelianGroup({2, 2, 4}), AbelianGroup({2, 8})}) {
    const auto auts = enumerate_automorphisms(g);
    for (int trial = 0; trial < 150; ++trial) {
      const auto& f = auts[rng() % auts.size()];
      const auto& h = auts[rng() % auts.size()];
      const auto k = auts[rng() % auts.size()];
      const auto g1 = compose(invert(h), compose(f, h));  // conjugate of f
      const auto g2 = compose(invert(k), compose(g1, k));  // conjugate of g1

      const auto w = is_conjugate(g, g1, f, auts);
      REQUIRE(w);
      CHECK(conjugates_pointwise(g, g1, f, *w));
      CHECK(is_conjugate(g, f, g1, auts).has_value());  // symmetry
      CHECK(is_conjugate(g, f, g2, auts).has_value());  // transitivity
      CHECK(conjugacy_invariants(f) == conjugacy_invariants(g1));

      const auto& other = auts[rng() % auts.size()];
      const auto v = is_conjugate(g, f, other, auts);
      if (v) CHECK(conjugates_pointwise(g, f, other, *v));
      CHECK(v.has_value() == (least_conjugate(f, auts) == least_conjugate(other, auts)));
    }
  }
}
