#include <algorithm>

#include "doctest.h"
#include "tpa/grammar.hpp"
#include "tpa/total.hpp"

using namespace tpa;

namespace {

FDAlgebra path_algebra(const std::string& type) {
  return quotient_algebra(AlgebraPresentation{build_dynkin(DynkinType::parse(type)), {}});
}

FDAlgebra field_algebra() { return quotient_algebra(AlgebraPresentation{Quiver("k", {"1"}, {}), {}}); }

BimoduleData zero_bimodule(const FDAlgebra& a) {
  BimoduleData m;
  m.base = a;
  m.module.left.assign(a.quiver.arrow_count(), Matrix());
  m.module.right.assign(a.quiver.arrow_count(), Matrix());
  return m;
}

}  // namespace

TEST_CASE("tensor_algebra examples") {
  auto a2 = path_algebra("A2");
  auto t0 = tensor_algebra(zero_bimodule(a2));
  CHECK(t0.algebra.dim() == 3);
  CHECK(t0.algebra.graded_dims() == std::vector<std::size_t>{3});

  BimoduleData k;
  k.base = field_algebra();
  k.module.left_vertex = {0};
  k.module.right_vertex = {0};
  CHECK_THROWS_AS(tensor_algebra(k), BoundExceeded);

  auto m = tau_bimodule(a2, 1);
  CHECK(m.module.dim() == 1);
  CHECK_NOTHROW(check_bimodule(a2, a2, m.module));
  auto t = tensor_algebra(m);
  CHECK(t.algebra.graded_dims() == std::vector<std::size_t>{3, 1});
  CHECK(t.m.nilpotency == 2u);
  CHECK_NOTHROW(t.algebra.check_structure());
}

TEST_CASE("three routes to Pi agree") {
  for (const auto& type : {"A1", "A2", "A3", "D4"}) {
    auto h = path_algebra(type);
    auto comb = pi_combinatorial(DynkinType::parse(type));
    auto graded = pi_graded(h, 1);
    auto tens = pi_tensor(h, 1);
    CHECK_NOTHROW(check_bimodule(h, h, tens.m.module));
    CHECK(tens.algebra.dim() == comb.dim());
    CHECK(tens.algebra.cartan() == comb.cartan());
    CHECK(tens.algebra.cartan() == graded.algebra.cartan());
    CHECK(tens.algebra.graded_dims() == graded.graded_dims());
    CHECK_NOTHROW(tens.algebra.check_structure());
  }
}

TEST_CASE("extended_tensor_algebra examples") {
  auto a2 = path_algebra("A2");
  auto u0 = extended_tensor_algebra(zero_bimodule(a2));
  CHECK(u0.u.graded_dims() == std::vector<std::size_t>{3});

  auto t = tensor_algebra(tau_bimodule(a2, 1));
  auto u = extended_tensor_algebra(t);
  CHECK(u.u.graded_dims() == std::vector<std::size_t>{5, 2});
  CHECK_NOTHROW(u.u.algebra.check_structure());
  // U_0 is End(T) with ordinary composition.
  auto tm = direct_sum(a2, u.u.summands).sum;
  CHECK(u.u.graded_dims()[0] == hom_basis(a2, tm, tm).size());

  auto a3 = path_algebra("A3");
  auto u3 = extended_tensor_algebra(tensor_algebra(tau_bimodule(a3, 1)));
  CHECK_NOTHROW(u3.u.algebra.check_structure());
  auto psi3 = psi_x(a3, auslander_algebra(a3, 1).catalog.modules(), 1);
  CHECK(u3.u.graded_dims() == psi3.graded_dims());
}

TEST_CASE("end_of_pi_tensor_pi examples") {
  auto ss = quotient_algebra(AlgebraPresentation{Quiver("k2", {"1", "2"}, {}), {}});
  auto es = end_of_pi_tensor_pi(pi_with_base(pi_graded(ss, 1)));
  CHECK(es.end.graded_dims() == std::vector<std::size_t>{2});

  auto a2 = path_algebra("A2");
  auto e2 = end_of_pi_tensor_pi(pi_with_base(pi_graded(a2, 1)));
  CHECK(e2.end.graded_dims() == std::vector<std::size_t>{5, 2});
  CHECK(e2.negative_degrees_vanish);
  CHECK(e2.ungraded_dim == 7);
  CHECK_NOTHROW(e2.end.algebra.check_structure());

  auto a3 = path_algebra("A3");
  auto e3 = end_of_pi_tensor_pi(pi_with_base(pi_graded(a3, 1)));
  auto psi3 = psi_x(a3, auslander_algebra(a3, 1).catalog.modules(), 1);
  CHECK(e3.end.graded_dims() == psi3.graded_dims());
  CHECK(e3.ungraded_dim == psi3.algebra.dim());
  CHECK(e3.negative_degrees_vanish);
}

TEST_CASE("degree one generates U and alpha is an isomorphism") {
  auto a2 = path_algebra("A2");
  auto r0 = u_is_tensor_of_degree_one(extended_tensor_algebra(zero_bimodule(a2)).u);
  CHECK(r0.ok);
  CHECK(r0.steps.empty());
  for (const auto& type : {"A2", "A3"}) {
    auto h = path_algebra(type);
    auto t = tensor_algebra(tau_bimodule(h, 1));
    auto u = extended_tensor_algebra(t);
    auto rep = u_is_tensor_of_degree_one(u.u);
    CHECK(rep.ok);
    CHECK(rep.steps.size() + 1 == rep.dims.size());
    auto e = end_of_pi_tensor_pi(pi_with_base(t));
    auto alpha = check_alpha(t, u, e);
    CHECK(alpha.bijective);
    CHECK(alpha.multiplicative);
    CHECK(alpha.products_checked == u.u.algebra.dim() * u.u.algebra.dim());
  }
}

namespace {

AlgebraPresentation chain_with_extra_arrow() {
  return parse_presentation(R"(quiver L { vertices: 1 2 3; arrows: a: 1 -> 2; c: 1 -> 2; b: 2 -> 3; }
relations { b*a; })");
}

PathElement arrow_element(const Quiver& q, const std::string& name) {
  return PathElement::of_path(Path::of_arrow(q, q.arrow_index(name)));
}

void check_total(const FDAlgebra& alg, std::size_t d) {
  auto tp = total_presentation(alg, d);
  auto psi = total_psi(alg, d, tp.auslander.catalog);
  auto rep = verify_iso_via_surjection(tp, psi);
  CHECK(rep.failed_relations.empty());
  CHECK(rep.surjective);
  CHECK(rep.quotient_dim == rep.psi_dim);
  CHECK(rep.quotient_graded == rep.psi_graded);
  CHECK(rep.ok());
}

}  // namespace

TEST_CASE("tensor_presentation_via_phi") {
  auto pres = chain_with_extra_arrow();
  const Quiver& q = pres.quiver;

  PhiData empty;
  empty.presentation = pres;
  empty.vertex_map.assign(3, std::nullopt);
  empty.arrow_images.assign(q.arrow_count(), PathElement());
  auto same = tensor_presentation_via_phi(empty);
  CHECK(same.quiver == q);
  CHECK(same.relations == pres.relations);

  PhiData id = empty;
  id.vertex_map = {0, 1, 2};
  for (std::size_t a = 0; a < q.arrow_count(); ++a) id.arrow_images[a] = arrow_element(q, q.arrow(a).name);
  auto t = tensor_presentation_via_phi(id);
  CHECK(t.quiver.arrow_count() == 6);
  CHECK(t.relations.size() == 1 + 3);
  CHECK(t.quiver.find_arrow("q_2").has_value());

  PhiData bad = id;
  bad.arrow_images[q.arrow_index("a")] = arrow_element(q, "c");
  CHECK_THROWS_AS(validate_phi(bad), DomainError);

  PhiData clash = id;
  clash.vertex_map = {1, 1, std::nullopt};
  CHECK_THROWS_AS(validate_phi(clash), DomainError);
}

TEST_CASE("total presentation of A2 is the 3-cycle") {
  auto a2 = path_algebra("A2");
  auto tp = total_presentation(a2, 1);
  const Quiver& q = tp.presentation.quiver;
  CHECK(q.vertex_count() == 3);
  CHECK(q.arrow_count() == 3);
  CHECK(tp.presentation.relations.size() == 2);
  for (std::size_t v = 0; v < 3; ++v) {
    CHECK(q.arrows_from(v).size() == 1);
    CHECK(q.arrows_to(v).size() == 1);
  }
  auto quot = quotient_algebra(tp.presentation);
  CHECK(quot.dim() == 7);
  check_total(a2, 1);
}

TEST_CASE("total presentation without translates adds nothing") {
  auto k = field_algebra();
  auto tp = total_presentation(k, 1);
  CHECK(tp.presentation.quiver.arrow_count() == 0);
  CHECK(tp.presentation.relations.empty());
  check_total(k, 1);
}

TEST_CASE("total presentation of A3 is a presentation of Psi") { check_total(path_algebra("A3"), 1); }

TEST_CASE("total presentation of D4 matches the reference") {
  auto d4 = path_algebra("D4");
  auto tp = total_presentation(d4, 1);
  auto golden = parse_presentation(R"(
quiver G {
  vertices: 1 2 3 4 5 6 7 8 9 10 11 12;
  arrows: a: 1 -> 4; b: 2 -> 4; c: 3 -> 4; d: 4 -> 5; e: 4 -> 6; f: 4 -> 7;
    a': 5 -> 8; b': 6 -> 8; c': 7 -> 8; d': 8 -> 9; e': 8 -> 10; f': 8 -> 11;
    a'': 9 -> 12; b'': 10 -> 12; c'': 11 -> 12;
    q_1: 5 -> 1; q_2: 6 -> 2; q_3: 7 -> 3; q_4: 8 -> 4;
    q_5: 9 -> 5; q_6: 10 -> 6; q_7: 11 -> 7; q_8: 12 -> 8;
}
relations {
  d*a; e*b; f*c; a'*d + b'*e + c'*f; d'*a'; e'*b'; f'*c'; a''*d' + b''*e' + c''*f';
  a*q_1 - q_4*a'; b*q_2 - q_4*b'; c*q_3 - q_4*c';
  d*q_4 - q_5*d'; e*q_4 - q_6*e'; f*q_4 - q_7*f';
  a'*q_5 - q_8*a''; b'*q_6 - q_8*b''; c'*q_7 - q_8*c'';
  d'*q_8; e'*q_8; f'*q_8;
})");
  std::vector<std::size_t> vmap(12);
  for (std::size_t k = 0; k < 12; ++k) vmap[k] = k;
  auto m = compare_presentations(tp.presentation, golden, vmap);
  INFO(m.detail);
  CHECK(m.quiver_match);
  CHECK(m.relations_match);

  // Dropping a term must be detected.
  auto broken = golden;
  const Quiver& gq = golden.quiver;
  broken.relations[3] = compose(gq, arrow_element(gq, "d"), arrow_element(gq, "a'")) +
                        compose(gq, arrow_element(gq, "e"), arrow_element(gq, "b'"));
  CHECK_FALSE(compare_presentations(tp.presentation, broken, vmap).ok());
  auto twisted = golden;
  twisted.relations[8] = compose(gq, arrow_element(gq, "q_1"), arrow_element(gq, "a")) +
                         compose(gq, arrow_element(gq, "a'"), arrow_element(gq, "q_4")) * Scalar(2);
  auto tw = compare_presentations(tp.presentation, twisted, vmap);
  // A single binomial rescaling is absorbed by the arrows.
  CHECK(tw.ok());
  CHECK(std::any_of(tw.scale.begin(), tw.scale.end(), [](const Scalar& c) { return c == Scalar(2) || c == Scalar(1, 2) || c == Scalar(-2) || c == Scalar(-1, 2); }));
}

TEST_CASE("total presentation of a 3-representation-finite algebra matches the reference") {
  auto lam = quotient_algebra(parse_presentation(R"(
quiver L {
  vertices: 1 2 3 4 5 6 7 8;
  arrows: a: 1 -> 2; b: 1 -> 3; c: 1 -> 4; d: 2 -> 5; e: 3 -> 5; f: 4 -> 5; g: 5 -> 6; h: 5 -> 7; i: 5 -> 8;
}
relations { d*a - e*b; d*a - f*c; g*d; h*d; g*e; i*e; h*f; i*f; })"));
  auto tp = total_presentation(lam, 3);
  const auto& cat = tp.auslander.catalog;
  REQUIRE(cat.entries.size() == 12);

  // Translates of projectives are the injectives I5, I8, I7, I6.
  const std::vector<std::string> gnames = {"1", "2", "3", "4", "5", "6", "7", "8", "I5", "I6", "I7", "I8"};
  const std::map<std::size_t, std::size_t> expected = {{0, 4}, {1, 7}, {2, 6}, {3, 5}};
  std::vector<std::size_t> vmap(12);
  for (std::size_t k = 0; k < 12; ++k) {
    const auto& e = cat.entries[k];
    if (e.tau_power == 0) {
      CHECK(e.projective == k);
      vmap[k] = k;
      continue;
    }
    CHECK(e.tau_power == 1);
    const auto v = expected.at(e.projective);
    CHECK(is_isomorphic(lam, e.module, injective(lam, v)).isomorphic);
    vmap[k] = static_cast<std::size_t>(std::find(gnames.begin(), gnames.end(), "I" + lam.vertices[v]) - gnames.begin());
  }

  auto golden = parse_presentation(R"(
quiver G {
  vertices: 1 2 3 4 5 6 7 8 I5 I6 I7 I8;
  arrows: a: 1 -> 2; b: 1 -> 3; c: 1 -> 4; d: 2 -> 5; e: 3 -> 5; f: 4 -> 5; g: 5 -> 6; h: 5 -> 7; i: 5 -> 8;
    d': 6 -> I5; e': 7 -> I5; f': 8 -> I5; g': I5 -> I8; h': I5 -> I7; i': I5 -> I6;
    q_1: I5 -> 1; q_2: I8 -> 2; q_3: I7 -> 3; q_4: I6 -> 4;
}
relations {
  d*a - e*b; d*a - f*c; g*d; h*d; g*e; i*e; h*f; i*f;
  d'*g - e'*h; d'*g - f'*i; g'*d'; h'*d'; g'*e'; i'*e'; h'*f'; i'*f';
  a*q_1 - q_2*g'; b*q_1 - q_3*h'; c*q_1 - q_4*i'; d*q_2; e*q_3; f*q_4;
})");
  auto m = compare_presentations(tp.presentation, golden, vmap);
  INFO(m.detail);
  CHECK(m.quiver_match);
  CHECK(m.relations_match);
}

TEST_CASE("Psi is a 3-Auslander-type algebra") {
  for (const auto& type : {"A2", "A3"}) {
    CAPTURE(type);
    auto psi = quotient_algebra(total_presentation(path_algebra(type), 1).presentation);
    auto gd = global_dimension(psi);
    REQUIRE(gd.has_value());
    CHECK(*gd <= 3);
    CHECK(dominant_dimension(psi).value >= 3);
  }
  auto k = quotient_algebra(total_presentation(field_algebra(), 1).presentation);
  CHECK(global_dimension(k) == std::optional<std::size_t>(0));
  CHECK(dominant_dimension(k).at_bound);
}

TEST_CASE("Pi tensor Pi is rigid over Pi") {
  for (const auto& type : {"A2", "A3"}) {
    CAPTURE(type);
    auto pw = pi_with_base(pi_graded(path_algebra(type), 1));
    auto e = end_of_pi_tensor_pi(pw);
    CHECK(pi_tensor_pi_self_ext(pw, e, 1) == 0);
    // Degree 0 recovers the endomorphism algebra.
    CHECK(pi_tensor_pi_self_ext(pw, e, 0) == e.ungraded_dim);
  }
}
