#include <algorithm>

#include "doctest.h"
#include "tpa/grammar.hpp"
#include "tpa/repmod.hpp"

using namespace tpa;

namespace {

FDAlgebra ka2() { return quotient_algebra(parse_presentation("quiver A2 { vertices: 1 2; arrows: a: 1 -> 2; }")); }

FDAlgebra pi_a2() {
  return quotient_algebra(parse_presentation(
      "quiver PiA2 { vertices: 1 2; arrows: a: 1 -> 2; s: 2 -> 1; } relations { s*a; a*s; }"));
}

FDAlgebra semisimple2() { return quotient_algebra(AlgebraPresentation{Quiver("k2", {"1", "2"}, {}), {}}); }

FDAlgebra a3_relation() {
  return quotient_algebra(parse_presentation(
      "quiver G { vertices: 1 2 3; arrows: a: 1 -> 2; b: 2 -> 3; } relations { b*a; }"));
}

std::vector<Representation> ka2_indecomposables(const FDAlgebra& a) {
  return {projective(a, 0), projective(a, 1), injective(a, 1)};
}

std::vector<std::size_t> sorted_totals(const std::vector<Representation>& xs) {
  std::vector<std::size_t> out;
  for (const auto& x : xs) out.push_back(x.total_dim());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("projective examples") {
  auto a = ka2();
  auto ps = std::vector<Representation>{projective(a, 0), projective(a, 1)};
  CHECK(sorted_totals(ps) == std::vector<std::size_t>{1, 2});
  for (const auto& p : ps) CHECK_NOTHROW(validate(a, p));

  auto ss = semisimple2();
  for (std::size_t v = 0; v < 2; ++v) CHECK(projective(ss, v) == simple(ss, v));

  auto pi = pi_a2();
  for (std::size_t v = 0; v < 2; ++v) {
    CHECK(projective(pi, v).total_dim() == 2);
    CHECK_NOTHROW(validate(pi, projective(pi, v)));
  }
}

TEST_CASE("injective examples") {
  auto a = ka2();
  std::vector<Representation> is{injective(a, 0), injective(a, 1)};
  CHECK(sorted_totals(is) == std::vector<std::size_t>{1, 2});
  int proj_inj = 0;
  for (const auto& i : is) {
    CHECK_NOTHROW(validate(a, i));
    for (std::size_t v = 0; v < 2; ++v) proj_inj += is_isomorphic(a, i, projective(a, v)).isomorphic;
  }
  CHECK(proj_inj == 1);

  auto ss = semisimple2();
  for (std::size_t v = 0; v < 2; ++v) CHECK(injective(ss, v) == simple(ss, v));

  auto pi = pi_a2();
  for (std::size_t v = 0; v < 2; ++v) {
    int matches = 0;
    for (std::size_t w = 0; w < 2; ++w) matches += is_isomorphic(pi, injective(pi, v), projective(pi, w)).isomorphic;
    CHECK(matches == 1);
  }
}

TEST_CASE("dualize examples") {
  auto a = a3_relation();
  auto op = opposite(a);
  for (std::size_t v = 0; v < 3; ++v) {
    CHECK(dualize(a, simple(a, v)) == simple(op, v));
    auto dp = dualize(a, projective(a, v));
    CHECK_NOTHROW(validate(op, dp));
    CHECK(is_isomorphic(op, dp, injective(op, v)).isomorphic);
    auto x = injective(a, v);
    CHECK(dualize(op, dualize(a, x)) == x);
  }
}

TEST_CASE("hom_basis examples") {
  auto a = ka2();
  auto ind = ka2_indecomposables(a);
  std::size_t total = 0;
  for (const auto& x : ind) {
    CHECK(hom_basis(a, x, x).size() == 1);
    auto xx = direct_sum(a, {x, x}).sum;
    CHECK(hom_basis(a, x, xx).size() == 2 * hom_basis(a, x, x).size());
    for (const auto& y : ind) {
      auto hs = hom_basis(a, x, y);
      for (const auto& f : hs) CHECK(is_morphism(a, x, y, f));
      total += hs.size();
    }
  }
  CHECK(total == 5);
}

TEST_CASE("projectives represent evaluation") {
  for (const auto& a : {ka2(), pi_a2(), a3_relation()}) {
    std::vector<Representation> ys;
    for (std::size_t v = 0; v < a.vertex_count(); ++v) {
      ys.push_back(projective(a, v));
      ys.push_back(injective(a, v));
      ys.push_back(simple(a, v));
    }
    ys.push_back(regular_module(a));
    ys.push_back(dual_module(a));
    for (std::size_t v = 0; v < a.vertex_count(); ++v)
      for (const auto& y : ys) CHECK(hom_basis(a, projective(a, v), y).size() == y.dims[v]);
  }
}

TEST_CASE("direct_sum examples") {
  auto a = ka2();
  auto ind = ka2_indecomposables(a);
  auto x = ind[1];
  CHECK(direct_sum(a, {x, zero_module(a)}).sum == x);
  auto s = direct_sum(a, ind);
  CHECK(s.sum.total_dim() == 4);
  CHECK(s.sum.dims == std::vector<std::size_t>{2, 2});
  for (std::size_t k = 0; k < ind.size(); ++k) {
    CHECK(is_morphism(a, ind[k], s.sum, s.injections[k]));
    CHECK(is_morphism(a, s.sum, ind[k], s.projections[k]));
    CHECK(compose(s.projections[k], s.injections[k]) == identity_morphism(ind[k]));
  }
}

TEST_CASE("is_isomorphic examples and equivalence") {
  auto a = ka2();
  auto ind = ka2_indecomposables(a);
  for (const auto& x : ind) {
    auto r = is_isomorphic(a, x, x);
    REQUIRE(r.isomorphic);
    CHECK(is_morphism(a, x, x, *r.witness));
    CHECK(inverse(*r.witness).has_value());
  }
  CHECK_FALSE(is_isomorphic(a, ind[0], ind[1]).isomorphic);
  auto s1 = simple(a, 0), s2 = simple(a, 1);
  auto r = is_isomorphic(a, s1, s2);
  CHECK_FALSE(r.isomorphic);
  CHECK(r.certified);

  auto b = a3_relation();
  std::vector<Representation> xs;
  for (std::size_t v = 0; v < 3; ++v) {
    xs.push_back(projective(b, v));
    xs.push_back(injective(b, v));
  }
  for (const auto& x : xs)
    for (const auto& y : xs) {
      auto xy = is_isomorphic(b, x, y);
      auto yx = is_isomorphic(b, y, x);
      CHECK(xy.isomorphic == yx.isomorphic);
      if (xy.isomorphic) {
        auto inv = inverse(*xy.witness);
        REQUIRE(inv);
        CHECK(is_morphism(b, y, x, *inv));
      }
      auto s = direct_sum(b, {x, y}).sum, t = direct_sum(b, {y, x}).sum;
      CHECK(is_isomorphic(b, s, t).isomorphic);
    }
}

TEST_CASE("indecomposability") {
  auto b = a3_relation();
  for (std::size_t v = 0; v < 3; ++v) {
    CHECK(is_indecomposable(b, projective(b, v)));
    CHECK(is_indecomposable(b, injective(b, v)));
  }
  CHECK_FALSE(is_indecomposable(b, regular_module(b)));
  CHECK_FALSE(is_indecomposable(b, zero_module(b)));
}

TEST_CASE("validation rejects broken modules") {
  auto pi = pi_a2();
  Representation x;
  x.dims = {1, 1};
  x.actions = {Matrix{{1}}, Matrix{{1}}};  // s*a acts as 1, violating the relation
  CHECK_THROWS_AS(validate(pi, x), InputError);
  x.actions = {Matrix{{1, 0}}, Matrix{{0}}};
  CHECK_THROWS_AS(validate(pi, x), InputError);
}
