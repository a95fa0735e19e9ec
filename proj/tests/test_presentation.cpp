#include "doctest.h"
#include "tpa/algebra.hpp"
#include "tpa/grammar.hpp"

using namespace tpa;

namespace {

const char* kPiA2 = R"(
quiver PiA2 { vertices: 1 2; arrows: a: 1 -> 2; s: 2 -> 1; }
relations { s*a; a*s; }
)";

const char* kAuslanderA2 = R"(
quiver GammaA2 { vertices: 1 2 3; arrows: a: 1 -> 2; b: 2 -> 3; }
relations { b*a; }
)";

const char* kPsiA2 = R"(
quiver PsiA2 { vertices: 1 2 3; arrows: a: 1 -> 2; b: 2 -> 3; q: 3 -> 1; }
relations { b*a; a*q; }
)";

const char* kLambdaD4Dual = R"(
quiver L {
  vertices: 1 2 3 4 5 6 7 8;
  arrows: a: 1 -> 2; b: 1 -> 3; c: 1 -> 4; d: 2 -> 5; e: 3 -> 5; f: 4 -> 5;
          g: 5 -> 6; h: 5 -> 7; i: 5 -> 8;
}
relations { d*a - e*b; d*a - f*c; g*d; h*d; g*e; i*e; h*f; i*f; }
)";

std::vector<std::string> labels(const FDAlgebra& a) {
  std::vector<std::string> out;
  for (const auto& b : a.basis) out.push_back(b.label);
  return out;
}

// Forgets paths and generators, leaving only the multiplication table.
FDAlgebra abstract_copy(FDAlgebra a) {
  for (auto& b : a.basis) b.path.reset();
  a.quiver = Quiver(a.name, a.vertices, {});
  a.arrow_elements.clear();
  a.presentation.reset();
  return a;
}

FDAlgebra semisimple(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  return quotient_algebra(AlgebraPresentation{Quiver("k", v, {}), {}});
}

}  // namespace

TEST_CASE("groebner_complete examples") {
  auto pi = parse_presentation(kPiA2);
  auto gb = groebner_complete(pi);
  CHECK(gb.complete());
  CHECK(gb.elements().size() == 2);
  CHECK(gb.normal_paths(10).first.size() == 4);

  auto a3 = parse_presentation(kAuslanderA2);
  auto gb3 = groebner_complete(a3);
  CHECK(gb3.elements().size() == 1);
  CHECK(gb3.normal_paths(10).first.size() == 5);

  AlgebraPresentation cycle{Quiver("c", {"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}}), {}};
  CHECK_THROWS_AS(groebner_complete(cycle, 5), GroebnerBoundExceeded);
  try {
    groebner_complete(cycle, 5);
  } catch (const GroebnerBoundExceeded& e) {
    CHECK(std::string(e.what()).find("possibly infinite-dimensional") != std::string::npos);
  }
}

TEST_CASE("groebner completion adds overlap consequences") {
  // a loop x with x*x*x - x*x: the overlap produces nothing new, but
  // the quotient is infinite, while x*x*x alone is finite.
  AlgebraPresentation p{Quiver("l", {"1"}, {{"x", "1", "1"}}), {}};
  p.relations.push_back(PathElement::of_path(Path{0, {0, 0, 0}}));
  auto gb = groebner_complete(p);
  CHECK(gb.normal_paths(10).first.size() == 3);

  // Non-monomial overlap: y*x - x*y style commutativity on a two-loop quiver
  // plus x*x and y*y gives the exterior algebra of dimension 4.
  auto ext = parse_presentation(R"(
    quiver E { vertices: 1; arrows: x: 1 -> 1; y: 1 -> 1; }
    relations { x*x; y*y; y*x + x*y; }
  )");
  auto alg = quotient_algebra(ext);
  CHECK(alg.dim() == 4);
  CHECK_NOTHROW(alg.check_structure());
}

TEST_CASE("quotient_algebra examples") {
  auto pi = quotient_algebra(parse_presentation(kPiA2));
  CHECK(pi.dim() == 4);
  CHECK(labels(pi) == std::vector<std::string>{"e_1", "e_2", "a", "s"});

  AlgebraPresentation ka2{Quiver("A2", {"1", "2"}, {{"a", "1", "2"}}), {}};
  CHECK(quotient_algebra(ka2).dim() == 3);

  auto psi = quotient_algebra(parse_presentation(kPsiA2));
  CHECK(psi.dim() == 7);
  CHECK(labels(psi) == std::vector<std::string>{"e_1", "e_2", "e_3", "a", "b", "q", "q*b"});
  CHECK_NOTHROW(psi.check_structure());
}

TEST_CASE("normal form is idempotent, linear and kills relations") {
  for (const char* text : {kPiA2, kPsiA2, kLambdaD4Dual}) {
    auto p = parse_presentation(text);
    auto gb = groebner_complete(p);
    for (const auto& r : p.relations) CHECK(gb.normal_form(r).is_zero());
    auto paths = enumerate_paths(p.quiver, 4);
    for (std::size_t i = 0; i + 1 < paths.size(); ++i) {
      if (paths[i].source() != paths[i + 1].source()) continue;
      auto x = PathElement::of_path(paths[i], Scalar(2)) + PathElement::of_path(paths[i + 1], Scalar(-3));
      auto nx = gb.normal_form(x);
      CHECK(gb.normal_form(nx) == nx);
      auto sum = gb.normal_form(PathElement::of_path(paths[i])) * Scalar(2) -
                 gb.normal_form(PathElement::of_path(paths[i + 1])) * Scalar(3);
      CHECK(nx == sum);
    }
    auto alg = quotient_algebra(p, gb);
    std::size_t total = 0;
    for (const auto& row : alg.cartan())
      for (auto c : row) total += c;
    CHECK(total == alg.dim());
    CHECK_NOTHROW(alg.check_structure());
  }
}

TEST_CASE("algebra_quiver examples") {
  auto ss = semisimple(3);
  auto q0 = algebra_quiver(abstract_copy(ss));
  CHECK(q0.vertex_count() == 3);
  CHECK(q0.arrow_count() == 0);

  auto gamma = abstract_copy(quotient_algebra(parse_presentation(kAuslanderA2)));
  CHECK(gamma.dim() == 5);
  auto qg = algebra_quiver(gamma);
  CHECK(qg.vertex_count() == 3);
  REQUIRE(qg.arrow_count() == 2);
  CHECK(qg.is_acyclic());

  auto pi = abstract_copy(quotient_algebra(parse_presentation(kPiA2)));
  auto qp = algebra_quiver(pi);
  CHECK(qp.arrow_count() == 2);
  CHECK(qp.arrows_from(0).size() == 1);
  CHECK(qp.arrows_from(1).size() == 1);
}

TEST_CASE("recover_presentation examples and invariants") {
  auto gamma = abstract_copy(quotient_algebra(parse_presentation(kAuslanderA2)));
  auto rec = recover_presentation(gamma);
  REQUIRE(rec.presentation.relations.size() == 1);
  CHECK(rec.presentation.relations[0].size() == 1);
  CHECK(rec.presentation.relations[0].leading_path().length() == 2);

  auto ss = recover_presentation(abstract_copy(semisimple(2)));
  CHECK(ss.presentation.quiver.arrow_count() == 0);
  CHECK(ss.presentation.relations.empty());

  for (const char* text : {kPiA2, kAuslanderA2, kPsiA2, kLambdaD4Dual}) {
    auto original = quotient_algebra(parse_presentation(text));
    auto abstract = abstract_copy(original);
    auto r = recover_presentation(abstract);
    auto back = quotient_algebra(r.presentation);
    CHECK(back.dim() == original.dim());
    CHECK(back.cartan() == original.cartan());
    CHECK(r.presentation.quiver.arrow_count() == original.quiver.arrow_count());
    for (std::size_t s = 0; s < original.vertex_count(); ++s)
      for (std::size_t t = 0; t < original.vertex_count(); ++t) {
        std::size_t n1 = 0, n2 = 0;
        for (const auto& a : original.quiver.arrows()) n1 += a.source == s && a.target == t;
        for (const auto& a : r.presentation.quiver.arrows()) n2 += a.source == s && a.target == t;
        CHECK(n1 == n2);
      }
  }

  // Relations of the recovered D4-dual algebra: eight, all quadratic.
  auto d4 = recover_presentation(abstract_copy(quotient_algebra(parse_presentation(kLambdaD4Dual))));
  CHECK(d4.presentation.relations.size() == 8);
}

TEST_CASE("recover keeps own generators when they fit") {
  auto pi = quotient_algebra(parse_presentation(kPiA2));
  auto rec = recover_presentation(pi);
  CHECK(rec.presentation.quiver == pi.quiver);
  CHECK(rec.presentation.relations.size() == 2);
}

TEST_CASE("opposite algebra") {
  auto psi = quotient_algebra(parse_presentation(kPsiA2));
  auto op = opposite(psi);
  CHECK_NOTHROW(op.check_structure());
  CHECK(op.dim() == psi.dim());
  CHECK(quotient_algebra(*op.presentation).dim() == 7);
  auto c = psi.cartan(), co = op.cartan();
  for (std::size_t s = 0; s < 3; ++s)
    for (std::size_t t = 0; t < 3; ++t) CHECK(c[s][t] == co[t][s]);
}

TEST_CASE("grammar parse examples") {
  auto a2 = parse_presentation("quiver A2 { vertices: 1 2; arrows: a: 1 -> 2; }");
  CHECK(a2.quiver.vertex_count() == 2);
  CHECK(a2.quiver.arrow_count() == 1);
  CHECK(a2.relations.empty());

  CHECK_THROWS_AS(parse_presentation("quiver A2 { vertices: 1 2; arrows: a: 1 -> 2; } relations { b*a; }"),
                  InputError);
  try {
    parse_presentation("quiver A2 { vertices: 1 2;\n arrows: a: 1 -> 3; }");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_presentation(kPiA2 + std::string(" relations")), InputError);
  CHECK_THROWS_AS(parse_presentation("quiver Q { vertices: 1 2 3; arrows: a: 1 -> 2; b: 1 -> 3; } "
                                     "relations { a - b; }"),
                  InputError);

  auto d4dual = parse_presentation(kLambdaD4Dual);
  CHECK(d4dual.quiver.vertex_count() == 8);
  CHECK(d4dual.quiver.arrow_count() == 9);
  CHECK(d4dual.relations.size() == 8);

  auto frac = parse_presentation("quiver Q { vertices: 1 2 3; arrows: a: 1 -> 2; b: 2 -> 3; c: 1 -> 2; } "
                                 "relations { 1/2*b*a - 3*b*c; }");
  REQUIRE(frac.relations.size() == 1);
  CHECK(frac.relations[0].terms().size() == 2);
  auto mod = parse_presentation("quiver Q { vertices: 1 2 3; arrows: a: 1 -> 2; b: 2 -> 3; c: 1 -> 2; } "
                                "relations { 1/2*b*a - 3*b*c; }",
                                5);
  CHECK(mod.relations[0].terms().begin()->second.modulus() == 5);
}

TEST_CASE("grammar round trip") {
  for (const char* text : {kPiA2, kAuslanderA2, kPsiA2, kLambdaD4Dual}) {
    auto p = parse_presentation(text);
    auto again = parse_presentation(render_presentation(p));
    CHECK(again.quiver == p.quiver);
    CHECK(again.relations == p.relations);
  }
  auto rec = recover_presentation(abstract_copy(quotient_algebra(parse_presentation(kPsiA2))));
  auto again = parse_presentation(render_presentation(rec.presentation));
  CHECK(again.quiver == rec.presentation.quiver);
  CHECK(again.relations == rec.presentation.relations);
}
