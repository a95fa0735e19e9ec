#include "doctest.h"
#include "tpa/grammar.hpp"
#include "tpa/serialize.hpp"

using namespace tpa;

namespace {

FDAlgebra path_algebra(const std::string& type) {
  return quotient_algebra(AlgebraPresentation{build_dynkin(DynkinType::parse(type)), {}});
}

void check_round_trip(const AlgebraPresentation& p) {
  CAPTURE(p.quiver.name());
  auto back = parse_presentation(render_presentation(p));
  CHECK(back.quiver == p.quiver);
  CHECK(back.relations == p.relations);
}

}  // namespace

TEST_CASE("presentations produced by the modules round-trip through the grammar") {
  check_round_trip(preprojective_presentation(build_dynkin(DynkinType::parse("D4"))));
  check_round_trip(auslander_algebra(path_algebra("A3"), 1).presentation);
  check_round_trip(total_presentation(path_algebra("D4"), 1).presentation);
  for (auto [d, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 3}, {3, 3}, {1, 12}}) {
    check_round_trip(pi_dn(d, n));
    check_round_trip(lambda_dn(d, n));
    check_round_trip(psi_dn(d, n));
  }
}

TEST_CASE("algebra JSON") {
  auto pi = quotient_algebra(preprojective_presentation(build_dynkin(DynkinType::parse("A2"))));
  auto j = algebra_json(pi);
  CHECK(j["dim"] == 4);
  CHECK(j["basis"].size() == 4);
  auto back = algebra_from_json(j);
  CHECK(back.dim() == pi.dim());
  for (std::size_t i = 0; i < pi.dim(); ++i)
    for (std::size_t k = 0; k < pi.dim(); ++k) CHECK(back.product(i, k) == pi.product(i, k));
  CHECK(algebra_json(back).dump() == j.dump());
  CHECK_NOTHROW(back.check_structure());
  // Identical inputs give identical bytes.
  CHECK(algebra_json(quotient_algebra(preprojective_presentation(build_dynkin(DynkinType::parse("A2"))))).dump() ==
        j.dump());
  CHECK_THROWS_AS(algebra_from_json(Json{{"name", "x"}}), InputError);
}

TEST_CASE("representation JSON") {
  auto a3 = path_algebra("A3");
  auto p = projective(a3, 2);
  auto j = representation_json(a3.quiver, p);
  CHECK(j["dims"] == Json::array({1, 1, 1}));
  CHECK(representation_from_json(a3.quiver, j) == p);
  Representation half = p;
  half.actions[0] = half.actions[0] * Scalar(1, 2);
  auto hj = representation_json(a3.quiver, half);
  CHECK(hj.dump().find("\"1/2\"") != std::string::npos);
  CHECK(representation_from_json(a3.quiver, hj) == half);
  hj["dims"] = Json::array({1, 1});
  CHECK_THROWS_AS(representation_from_json(a3.quiver, hj), InputError);
}

TEST_CASE("catalog and report JSON") {
  auto ar = auslander_algebra(path_algebra("A2"), 1);
  auto j = catalog_json(ar.catalog);
  REQUIRE(j["entries"].size() == 3);
  std::size_t injective = 0;
  for (const auto& e : j["entries"]) injective += e["injective"].get<bool>();
  CHECK(injective == 2);
  auto rep = verify_family_proposition(1, 2);
  auto fj = family_json(rep);
  CHECK(fj["pass"] == true);
  CHECK(fj["checks"].size() == 3);
  for (const auto& c : fj["checks"])
    for (const auto& n : c["surjection"]["relation_image_norms"]) CHECK(n == 0);
}
