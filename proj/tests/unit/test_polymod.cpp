#include <set>

#include "alexq/error.hpp"
#include "alexq/polymod.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace alexq;

namespace {

PolyOverZp P(const char* s) { return PolyOverZp::parse(2, s); }

}  // namespace

TEST_CASE("parse and print") {
  CHECK(P("1+t+t^4").coeffs() == std::vector<int>{1, 1, 0, 0, 1});
  CHECK(P("1+t+t^4").to_string() == "1+t+t^4");
  CHECK(P("1+t+t^4").to_string_descending() == "t^4+t+1");
  CHECK(PolyOverZp::parse(3, "2t^3+1").coeffs() == std::vector<int>{1, 0, 0, 2});
  CHECK(PolyOverZp::parse(3, "2*t^3").coeffs() == std::vector<int>{0, 0, 0, 2});
  CHECK(P("0").is_zero());
  CHECK(P("0").degree() == -1);
  CHECK(P("t+t").is_zero());
  CHECK_THROWS_AS(P("1+x"), ParseError);
  CHECK_THROWS_AS(PolyOverZp(4, {1, 1}), InvalidArgument);
  CHECK(P("1+t^2+t^3").term_count() == 3);
}

TEST_CASE("arithmetic over Z2") {
  CHECK(poly_mul(P("1+t"), P("1+t^3")) == P("1+t+t^3+t^4"));
  CHECK(poly_mul(P("1+t+t^2"), P("1+t+t^2")) == P("1+t^2+t^4"));
  CHECK(poly_add(P("1+t"), P("t+t^2")) == P("1+t^2"));
  CHECK(poly_sub(P("1"), P("1")).is_zero());
  CHECK(poly_divides(P("1+t+t^4"), P("1+t+t^4")));
  CHECK(poly_divides(P("1+t"), P("1+t^4")));
  CHECK_FALSE(poly_divides(P("1+t"), P("1+t+t^4")));
  CHECK(poly_mod(P("t^4"), P("1+t+t^4")) == P("1+t"));
  CHECK_THROWS_AS(poly_mod(P("t"), P("0")), InvalidArgument);
  CHECK_THROWS_AS(poly_add(P("t"), PolyOverZp(3, {1})), InvalidArgument);
}

TEST_CASE("divmod identity over Z2 and Z3 for all small pairs") {
  for (int p : {2, 3}) {
    std::vector<PolyOverZp> polys;
    for (const auto& c : oracle::all_tuples(std::vector<int>(4, p))) polys.emplace_back(p, c);
    for (const auto& a : polys)
      for (const auto& m : polys) {
        if (m.is_zero()) continue;
        const auto [q, r] = poly_divmod(a, m);
        CHECK(poly_add(poly_mul(q, m), r) == a);
        CHECK(r.degree() < m.degree());
      }
  }
}

TEST_CASE("enumerate_specs counts") {
  CHECK(enumerate_specs(2, 4).size() == 14);
  const auto one = enumerate_specs(2, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].to_string() == "1+t");
  const auto two = enumerate_specs(2, 2);
  std::set<std::string> names;
  for (const auto& s : two) names.insert(s.to_string());
  CHECK(names == std::set<std::string>{"1+t^2", "1+t+t^2", "1+t | 1+t"});
}

TEST_CASE("enumerate_specs yields valid chains with matching module orders") {
  for (int p : {2, 3}) {
    for (int d = 1; d <= (p == 2 ? 4 : 3); ++d) {
      std::set<std::string> seen;
      for (const auto& s : enumerate_specs(p, d)) {
        CHECK_NOTHROW(validate(s));
        CHECK(s.total_degree() == d);
        CHECK(seen.insert(s.to_string()).second);
        const auto m = build(s);
        std::size_t expected = 1;
        for (int i = 0; i < d; ++i) expected *= static_cast<std::size_t>(p);
        CHECK(m.order() == expected);
        CHECK(m.t().is_bijective());
        CHECK(match_spec(m) == s);
      }
    }
  }
}

TEST_CASE("validate rejects bad chains") {
  CHECK_THROWS_AS(validate(PolySpec{2, {P("t+t^2")}}), InvalidArgument);
  CHECK_THROWS_AS(validate(PolySpec{2, {P("1+t^2"), P("1+t+t^3")}}), InvalidArgument);
  CHECK_THROWS_AS(validate(PolySpec{2, {P("1")}}), InvalidArgument);
  CHECK_THROWS_AS(validate(PolySpec{2, {PolyOverZp(3, {1, 1})}}), InvalidArgument);
  CHECK_THROWS_AS(validate(PolySpec{3, {PolyOverZp(3, {1, 2})}}), InvalidArgument);  // not monic
  CHECK_NOTHROW(validate(PolySpec{2, {P("1+t+t^2"), P("1+t^3")}}));
  CHECK_THROWS_AS(PolySpec::parse(2, "1+t^2 | 1+t+t^3"), ParseError);
}

TEST_CASE("build examples") {
  const auto lin = build(PolySpec::parse(2, "1+t"));
  CHECK(lin.group().factors() == std::vector<int>{2});
  CHECK(lin.t() == Automorphism::identity(lin.group()));

  const auto quad = build(PolySpec::parse(2, "1+t+t^2"));
  CHECK(quad.t().to_string() == "0,1;1,1");

  const auto twice = build(PolySpec::parse(2, "1+t | 1+t"));
  CHECK(twice.t() == Automorphism::identity(AbelianGroup({2, 2})));
}

TEST_CASE("quotient identity for single-polynomial specs") {
  const PolyOverZp one_plus_t = P("1+t");
  for (int d = 1; d <= 4; ++d)
    for (const auto& s : enumerate_specs(2, d)) {
      if (s.chain.size() != 1) continue;
      const auto& h = s.chain[0];
      const auto image = image_one_minus_t(build(s));
      if (poly_divides(one_plus_t, h)) {
        const auto quotient = poly_divmod(h, one_plus_t).first;
        if (quotient.degree() == 0)
          CHECK(image.order() == 1);
        else
          CHECK(is_lambda_isomorphic(image, build(PolySpec{2, {quotient}})));
      } else {
        CHECK(is_lambda_isomorphic(image, build(s)));
      }
    }
}

TEST_CASE("images of degree-4 single polynomials coincide as sets by term parity") {
  std::vector<std::set<oracle::Tuple>> even_terms;
  std::vector<std::set<oracle::Tuple>> odd_terms;
  for (const auto& s : enumerate_specs(2, 4)) {
    if (s.chain.size() != 1) continue;
    const auto m = build(s);
    std::set<oracle::Tuple> image;
    for (const auto& x : m.group().elements()) image.insert(m.group().sub(x, m.t().apply(x)).coords);
    (s.chain[0].term_count() % 2 == 0 ? even_terms : odd_terms).push_back(image);
  }
  REQUIRE(even_terms.size() == 4);
  REQUIRE(odd_terms.size() == 4);
  for (const auto& s : even_terms) CHECK(s == even_terms.front());
  for (const auto& s : odd_terms) CHECK(s == odd_terms.front());
}

TEST_CASE("connectivity criterion over Z2") {
  const PolyOverZp one_plus_t = P("1+t");
  std::size_t connected = 0;
  for (const auto& s : enumerate_specs(2, 4)) {
    bool divisible = false;
    bool odd = true;
    for (const auto& h : s.chain) {
      divisible |= poly_divides(one_plus_t, h);
      odd &= h.term_count() % 2 == 1;
    }
    const bool c = is_connected(build(s));
    CHECK(c == !divisible);
    CHECK(c == odd);
    connected += c;
  }
  CHECK(connected == 5);
}

TEST_CASE("labels and match_spec") {
  const auto s = PolySpec::parse(2, "1+t | 1+t | 1+t^2");
  CHECK(s.label() == "(Λ2/t+1)^2⊕Λ2/t^2+1");
  CHECK(PolySpec::parse(2, "1+t+t^4").label() == "Λ2/t^4+t+1");
  CHECK(match_spec(build(s)) == s);
}
