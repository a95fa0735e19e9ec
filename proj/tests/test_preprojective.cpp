#include "doctest.h"
#include "tpa/grammar.hpp"
#include "tpa/preprojective.hpp"

using namespace tpa;

namespace {

FDAlgebra path_algebra(const std::string& type, const std::vector<bool>& reversed = {}) {
  return quotient_algebra(AlgebraPresentation{build_dynkin(DynkinType::parse(type), reversed), {}});
}

FDAlgebra semisimple2() { return quotient_algebra(AlgebraPresentation{Quiver("k2", {"1", "2"}, {}), {}}); }

std::vector<Representation> indecomposables_a2(const FDAlgebra& a) {
  return {projective(a, 0), projective(a, 1), simple(a, 1)};
}

long knitted_total(const FDAlgebra& h) {
  long total = 0;
  for (const auto& dv : knit_ar_quiver(h).dimension_vectors)
    for (auto c : dv) total += c;
  return total;
}

}  // namespace

TEST_CASE("pi_combinatorial examples") {
  CHECK(pi_combinatorial(DynkinType::parse("A1")).dim() == 1);
  CHECK(pi_combinatorial(DynkinType::parse("A2")).dim() == 4);
  CHECK(pi_combinatorial(DynkinType::parse("A3")).dim() == 10);
  auto d4 = pi_combinatorial(DynkinType::parse("D4"));
  CHECK(d4.dim() == 28);
  CHECK(knitted_total(path_algebra("A3")) == 10);
  CHECK(knitted_total(path_algebra("D4")) == 28);
  CHECK_NOTHROW(d4.check_structure());
  // Outside Dynkin type the Groebner bound fires.
  auto affine = quotient_algebra(parse_presentation("quiver K { vertices: 1 2; arrows: a: 1 -> 2; b: 1 -> 2; }"));
  CHECK_THROWS_AS(quotient_algebra(preprojective_presentation(affine.quiver)), BoundExceeded);
}

TEST_CASE("preprojective algebra does not depend on orientation") {
  for (const auto& [t, rev] : std::vector<std::pair<std::string, std::vector<bool>>>{
           {"A3", {true, false}}, {"D4", {false, true, false}}}) {
    auto p1 = pi_combinatorial(DynkinType::parse(t));
    auto p2 = pi_combinatorial(DynkinType::parse(t), rev);
    CHECK(p1.graded_dims() == p2.graded_dims());
    CHECK(p1.cartan() == p2.cartan());
  }
}

TEST_CASE("psi_x examples") {
  auto ss = semisimple2();
  auto e = psi_x(ss, {projective(ss, 0), projective(ss, 1)}, 1);
  CHECK(e.graded_dims() == std::vector<std::size_t>{2});

  auto a = path_algebra("A2");
  auto pi = psi_x(a, {projective(a, 0), projective(a, 1)}, 1);
  CHECK(pi.graded_dims() == std::vector<std::size_t>{3, 1});
  CHECK_NOTHROW(pi.algebra.check_structure());

  auto psi = psi_x(a, indecomposables_a2(a), 1);
  CHECK(psi.graded_dims() == std::vector<std::size_t>{5, 2});
  CHECK(psi.algebra.dim() == 7);
  CHECK_NOTHROW(psi.algebra.check_structure());
  REQUIRE(psi.algebra.presentation);
  CHECK(quotient_algebra(*psi.algebra.presentation).dim() == 7);
  // Degree 0 is End(X).
  auto x = direct_sum(a, indecomposables_a2(a)).sum;
  CHECK(psi.graded_dims()[0] == hom_basis(a, x, x).size());
}

TEST_CASE("pi_graded agrees with pi_combinatorial") {
  CHECK(pi_graded(semisimple2(), 1).algebra.dim() == 2);
  for (const auto& t : {"A2", "A3", "D4"}) {
    auto h = path_algebra(t);
    auto g = pi_graded(h, 1);
    auto c = pi_combinatorial(DynkinType::parse(t));
    CHECK(g.algebra.dim() == c.dim());
    CHECK(g.algebra.cartan() == c.cartan());
    CHECK(g.graded_dims().front() == h.dim());
    CHECK_NOTHROW(g.algebra.check_structure());
  }
}

TEST_CASE("morita_reduce examples") {
  auto a = path_algebra("A2");
  auto psi = psi_x(a, indecomposables_a2(a), 1);
  auto same = morita_reduce(psi, indecomposables_a2(a));
  CHECK(same.dim() == psi.algebra.dim());
  auto corner = morita_reduce(psi, {projective(a, 1), projective(a, 0)});
  CHECK(corner.dim() == 4);
  CHECK(corner.graded_dims() == std::vector<std::size_t>{3, 1});
  CHECK_NOTHROW(corner.check_structure());
  // P_2 is projective-injective, so its corner sits in degree 0.
  auto pinj = morita_reduce(psi, {projective(a, 1)});
  CHECK(pinj.graded_dims() == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(morita_reduce(psi, {direct_sum(a, {simple(a, 0), simple(a, 1)}).sum}), InputError);
}

TEST_CASE("auslander_algebra examples") {
  auto a2 = auslander_algebra(path_algebra("A2"), 1);
  CHECK(a2.gamma.algebra.dim() == 5);
  CHECK(a2.presentation.quiver.vertex_count() == 3);
  CHECK(a2.presentation.quiver.arrow_count() == 2);
  CHECK(a2.presentation.relations.size() == 1);
  CHECK(quotient_algebra(a2.presentation).dim() == 5);

  for (const auto& [t, count] : std::vector<std::pair<std::string, std::size_t>>{{"A2", 3}, {"A3", 6}, {"D4", 12}}) {
    auto h = path_algebra(t);
    auto r = auslander_algebra(h, 1);
    CHECK(r.catalog.entries.size() == count);
    CHECK(knit_ar_quiver(h).quiver.vertex_count() == count);
    CHECK(r.presentation.quiver.vertex_count() == count);
    CHECK(quotient_algebra(r.presentation).dim() == r.gamma.algebra.dim());
    for (std::size_t k = 0; k < r.catalog.entries.size(); ++k) {
      const auto& e = r.catalog.entries[k];
      CHECK(is_indecomposable(h, e.module));
      if (k > 0) {
        const auto& prev = r.catalog.entries[k - 1];
        CHECK(std::make_pair(prev.tau_power, prev.projective) < std::make_pair(e.tau_power, e.projective));
      }
      if (!e.injective) {
        REQUIRE(e.successor);
        CHECK(*e.successor < r.catalog.entries.size());
      }
      for (std::size_t l = k + 1; l < r.catalog.entries.size(); ++l)
        CHECK_FALSE(is_isomorphic(h, e.module, r.catalog.entries[l].module).isomorphic);
    }
  }
  auto d4 = auslander_algebra(path_algebra("D4"), 1);
  CHECK(d4.presentation.quiver.arrow_count() == 15);
}
