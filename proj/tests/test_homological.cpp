#include <random>

#include "doctest.h"
#include "tpa/grammar.hpp"
#include "tpa/homological.hpp"

using namespace tpa;

namespace {

FDAlgebra path_algebra(const std::string& type, const std::vector<bool>& reversed = {}) {
  return quotient_algebra(AlgebraPresentation{build_dynkin(DynkinType::parse(type), reversed), {}});
}

FDAlgebra ka2() { return path_algebra("A2"); }

// Auslander algebra of kA_2: the linear A_3 quiver with its zero relation.
FDAlgebra auslander_a2() {
  return quotient_algebra(parse_presentation(
      "quiver G { vertices: 1 2 3; arrows: a: 1 -> 2; b: 2 -> 3; } relations { b*a; }"));
}

FDAlgebra pi_a2() {
  return quotient_algebra(parse_presentation(
      "quiver PiA2 { vertices: 1 2; arrows: a: 1 -> 2; s: 2 -> 1; } relations { s*a; a*s; }"));
}

FDAlgebra semisimple2() { return quotient_algebra(AlgebraPresentation{Quiver("k2", {"1", "2"}, {}), {}}); }

std::vector<long> dims_of(const Representation& x) { return {x.dims.begin(), x.dims.end()}; }

std::size_t rank_at(const ModuleMorphism& f, std::size_t v) { return rank(f.maps[v]); }

void check_resolution(const FDAlgebra& a, const ProjectiveResolution& r) {
  CHECK(r.minimal);
  const auto& x = r.module;
  for (std::size_t n = 0; n < r.terms.size(); ++n) {
    CHECK(is_morphism(a, r.terms[n].module, n == 0 ? x : r.terms[n - 1].module, r.differentials[n]));
    for (std::size_t v = 0; v < x.dims.size(); ++v) {
      const std::size_t dim_here = r.terms[n].module.dims[v];
      const std::size_t next_rank = n + 1 < r.terms.size() ? rank_at(r.differentials[n + 1], v) : 0;
      if (n == 0) CHECK(rank_at(r.differentials[0], v) == x.dims[v]);
      // Exactness at P_n.
      if (n + 1 < r.terms.size() || r.complete) CHECK(dim_here - rank_at(r.differentials[n], v) == next_rank);
    }
    if (n > 0) CHECK(compose(r.differentials[n - 1], r.differentials[n]).is_zero());
  }
}

}  // namespace

TEST_CASE("minimal_resolution examples") {
  auto a = ka2();
  for (std::size_t v = 0; v < 2; ++v) {
    auto r = minimal_resolution(a, projective(a, v), 3);
    CHECK(r.complete);
    CHECK(r.terms.size() == 1);
    check_resolution(a, r);
  }
  // S_2 is the non-projective simple: 0 -> P_1 -> P_2 -> S_2 -> 0.
  auto r = minimal_resolution(a, simple(a, 1), 3);
  CHECK(r.complete);
  REQUIRE(r.terms.size() == 2);
  CHECK(r.terms[0].generators == std::vector<std::size_t>{1});
  CHECK(r.terms[1].generators == std::vector<std::size_t>{0});
  check_resolution(a, r);

  for (const auto& h : {path_algebra("A3"), path_algebra("A3", {false, true}), path_algebra("D4"),
                        path_algebra("D4", {true, false, true})}) {
    for (std::size_t v = 0; v < h.vertex_count(); ++v)
      for (const auto& x : {simple(h, v), injective(h, v)}) {
        auto res = minimal_resolution(h, x, 4);
        CHECK(res.complete);
        CHECK(res.terms.size() <= 2);
        check_resolution(h, res);
      }
  }

  auto g = auslander_a2();
  for (std::size_t v = 0; v < 3; ++v) check_resolution(g, minimal_resolution(g, simple(g, v), 4));
  auto pi = pi_a2();
  auto rp = minimal_resolution(pi, simple(pi, 0), 5);
  CHECK_FALSE(rp.complete);
  CHECK(rp.terms.size() == 6);
  check_resolution(pi, rp);
}

TEST_CASE("ext_space examples") {
  auto a = ka2();
  std::vector<Representation> mods{projective(a, 0), projective(a, 1), simple(a, 1), simple(a, 0)};
  for (std::size_t v = 0; v < 2; ++v)
    for (const auto& y : mods)
      for (std::size_t i = 1; i < 3; ++i) CHECK(ext_space(a, i, projective(a, v), y).dim == 0);
  auto e = ext_space(a, 1, simple(a, 1), simple(a, 0));
  CHECK(e.dim == 1);
  CHECK(e.cocycles.size() == 1);
  CHECK(ext_space(a, 1, simple(a, 1), simple(a, 1)).dim == 0);

  auto g = auslander_a2();
  std::vector<Representation> gm;
  for (std::size_t v = 0; v < 3; ++v) {
    gm.push_back(projective(g, v));
    gm.push_back(injective(g, v));
    gm.push_back(simple(g, v));
  }
  std::mt19937 rng(7);
  for (int t = 0; t < 10; ++t) {
    const auto& x = gm[rng() % gm.size()];
    const auto& y = gm[rng() % gm.size()];
    CHECK(ext_space(g, 0, x, y).dim == hom_basis(g, x, y).size());
  }
  // S_3 resolves as P_3 -> S_3, then S_2, then P_1: projective dimension 2.
  CHECK(ext_space(g, 2, simple(g, 2), simple(g, 0)).dim == 1);
}

TEST_CASE("tau_minus examples on kA_2") {
  auto a = ka2();
  auto td = tau_functor_data(a, 1);
  // P_1 is the projective simple, S_2 the injective simple.
  auto t = tau_minus(td, projective(a, 0));
  CHECK_NOTHROW(validate(a, t));
  CHECK(is_isomorphic(a, t, simple(a, 1)).isomorphic);
  CHECK(tau_minus(td, projective(a, 1)).is_zero());
  CHECK(tau_minus(td, simple(a, 1)).is_zero());
  for (std::size_t v = 0; v < 2; ++v) CHECK(tau_minus(td, injective(a, v)).is_zero());
  CHECK_THROWS_AS(tau_functor_data(pi_a2(), 1), DomainError);
  CHECK_THROWS_AS(tau_functor_data(auslander_a2(), 1), DomainError);
  CHECK_NOTHROW(tau_functor_data(auslander_a2(), 2));
}

TEST_CASE("tau_minus agrees with knitting") {
  for (const auto& h : {path_algebra("A2"), path_algebra("A3"), path_algebra("A3", {true, false}),
                        path_algebra("A4"), path_algebra("A4", {false, true, false}), path_algebra("D4"),
                        path_algebra("D4", {false, true, true})}) {
    auto ar = knit_ar_quiver(h);
    auto td = tau_functor_data(h, 1);
    std::size_t modules = 0;
    for (std::size_t v = 0; v < h.vertex_count(); ++v) {
      std::size_t node = v;
      Representation x = projective(h, v);
      while (true) {
        ++modules;
        CHECK(dims_of(x) == ar.dimension_vectors[node]);
        CHECK(is_indecomposable(h, x));
        Representation next = tau_minus(td, x);
        CHECK_NOTHROW(validate(h, next));
        CHECK(next.is_zero() == ar.injective[node]);
        if (next.is_zero() || !ar.tau_minus[node]) break;
        node = *ar.tau_minus[node];
        x = std::move(next);
      }
    }
    CHECK(modules == ar.quiver.vertex_count());
  }
}

TEST_CASE("tau_minus is a functor") {
  for (const auto& h : {path_algebra("A3"), path_algebra("D4", {false, true, false}), auslander_a2()}) {
    const std::size_t d = h.presentation->relations.empty() ? 1 : 2;
    auto td = tau_functor_data(h, d);
    std::vector<Representation> mods;
    for (std::size_t v = 0; v < h.vertex_count(); ++v) {
      mods.push_back(projective(h, v));
      mods.push_back(simple(h, v));
      mods.push_back(injective(h, v));
    }
    mods.push_back(regular_module(h));
    for (const auto& x : mods) {
      auto tx = tau_minus(td, x);
      CHECK(tau_minus_morphism(td, x, x, identity_morphism(x)) == identity_morphism(tx));
    }
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coeff(-3, 3);
    int tested = 0;
    for (int t = 0; t < 200 && tested < 20; ++t) {
      const auto& x = mods[rng() % mods.size()];
      const auto& y = mods[rng() % mods.size()];
      const auto& z = mods[rng() % mods.size()];
      auto hxy = hom_basis(h, x, y), hyz = hom_basis(h, y, z);
      if (hxy.empty() || hyz.empty()) continue;
      Vector c1(hxy.size()), c2(hyz.size());
      for (auto& c : c1) c = Scalar(coeff(rng));
      for (auto& c : c2) c = Scalar(coeff(rng));
      auto f = combine(hxy, c1, x, y), g = combine(hyz, c2, y, z);
      auto tf = tau_minus_morphism(td, x, y, f), tg = tau_minus_morphism(td, y, z, g);
      CHECK(tau_minus_morphism(td, x, z, compose(g, f)) == compose(tg, tf));
      CHECK(is_morphism(h, tau_minus(td, x), tau_minus(td, y), tf));
      ++tested;
    }
    CHECK(tested == 20);
  }
}

TEST_CASE("global and dominant dimension") {
  auto ss = semisimple2();
  CHECK(global_dimension(ss) == std::optional<std::size_t>(0));
  auto dss = dominant_dimension(ss);
  CHECK(dss.at_bound);
  CHECK(dss.value == default_domdim_bound(ss));

  CHECK(global_dimension(ka2()) == std::optional<std::size_t>(1));
  auto dk = dominant_dimension(ka2());
  CHECK(dk.value == 1);
  CHECK_FALSE(dk.at_bound);

  auto g = auslander_a2();
  CHECK(global_dimension(g) == std::optional<std::size_t>(2));
  auto dg = dominant_dimension(g);
  CHECK(dg.value == 2);
  CHECK_FALSE(dg.at_bound);

  CHECK_FALSE(global_dimension(pi_a2()).has_value());
  CHECK(dominant_dimension(pi_a2()).at_bound);  // self-injective

  for (const auto& t : {"A1", "A2", "A3", "A4", "D4", "D5", "E6"}) CHECK(*global_dimension(path_algebra(t)) <= 1);
}

TEST_CASE("knit_ar_quiver examples") {
  auto a2 = knit_ar_quiver(path_algebra("A2"));
  CHECK(a2.quiver.vertex_count() == 3);
  CHECK(a2.quiver.arrow_count() == 2);
  CHECK(std::count_if(a2.tau_minus.begin(), a2.tau_minus.end(), [](auto t) { return t.has_value(); }) == 1);
  CHECK(knit_ar_quiver(path_algebra("A3")).quiver.vertex_count() == 6);
  CHECK(knit_ar_quiver(path_algebra("A4")).quiver.vertex_count() == 10);
  CHECK(knit_ar_quiver(path_algebra("E6")).quiver.vertex_count() == 36);

  auto d4 = knit_ar_quiver(path_algebra("D4"));
  CHECK(d4.quiver.vertex_count() == 12);
  CHECK(d4.quiver.arrow_count() == 15);
  // Three-spoke shape: the central orbit carries the branching.
  std::size_t central = 0;
  for (std::size_t m = 0; m < 12; ++m) {
    auto in = d4.quiver.arrows_to(m).size(), out = d4.quiver.arrows_from(m).size();
    CHECK(std::max(in, out) <= 3);
    if (std::max(in, out) == 3) ++central;
  }
  CHECK(central == 3);
  auto dot = ar_quiver_to_dot(d4);
  CHECK(dot.find("style=dashed") != std::string::npos);

  CHECK_THROWS_AS(knit_ar_quiver(auslander_a2()), DomainError);
  auto kron = quotient_algebra(parse_presentation("quiver K { vertices: 1 2; arrows: a: 1 -> 2; b: 1 -> 2; }"));
  CHECK_THROWS_AS(knit_ar_quiver(kron), DomainError);
}
