#include "doctest.h"
#include "tpa/errors.hpp"
#include "tpa/quiver.hpp"

using namespace tpa;

namespace {

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("build_dynkin examples") {
  auto a2 = build_dynkin(DynkinType::parse("A2"));
  CHECK(a2.vertex_count() == 2);
  REQUIRE(a2.arrow_count() == 1);
  CHECK(a2.vertex(a2.arrow(0).source) == "1");
  CHECK(a2.vertex(a2.arrow(0).target) == "2");

  auto a1 = build_dynkin(DynkinType::parse("A1"));
  CHECK(a1.vertex_count() == 1);
  CHECK(a1.arrow_count() == 0);

  auto d4 = build_dynkin(DynkinType::parse("D4"));
  CHECK(d4.vertex_count() == 4);
  CHECK(d4.arrows_to(d4.vertex_index("4")).size() == 3);
  CHECK(d4.arrows_from(d4.vertex_index("4")).empty());

  CHECK_THROWS_AS(build_dynkin(DynkinType::parse("D3")), InputError);
  CHECK(build_dynkin(DynkinType::parse("E8")).arrow_count() == 7);
  CHECK(build_dynkin(DynkinType::parse("D6")).arrow_count() == 5);
}

TEST_CASE("double_quiver examples") {
  auto a2 = double_quiver(build_dynkin(DynkinType::parse("A2")));
  CHECK(a2.quiver.vertex_count() == 2);
  REQUIRE(a2.quiver.arrow_count() == 2);
  auto s = a2.quiver.arrow_index("a_star");
  CHECK(a2.quiver.vertex(a2.quiver.arrow(s).source) == "2");
  CHECK(a2.starred[s]);
  CHECK(a2.partner[s] == a2.quiver.arrow_index("a"));

  auto d4 = double_quiver(build_dynkin(DynkinType::parse("D4")), {{"a", "d"}, {"b", "e"}, {"c", "f"}});
  CHECK(d4.quiver.arrow_count() == 6);
  CHECK(d4.quiver.arrow(d4.quiver.arrow_index("d")).source == d4.quiver.vertex_index("4"));
  CHECK(d4.quiver.arrow(d4.quiver.arrow_index("d")).target == d4.quiver.vertex_index("1"));

  auto empty = double_quiver(Quiver("empty", {}, {}));
  CHECK(empty.quiver.vertex_count() == 0);
  CHECK(empty.quiver.arrow_count() == 0);

  for (const char* t : {"A4", "D5", "E6"}) {
    auto q = build_dynkin(DynkinType::parse(t));
    auto dq = double_quiver(q);
    CHECK(dq.quiver.arrow_count() == 2 * q.arrow_count());
    CHECK(dq.quiver.vertices() == q.vertices());
  }
}

TEST_CASE("build_q_dn examples") {
  auto q13 = build_q_dn(1, 3);
  CHECK(q13.vertices() == std::vector<std::string>{"20", "11", "02"});
  CHECK(q13.arrow_count() == 4);
  CHECK(build_q_dn(2, 3).vertex_count() == 6);
  CHECK(build_q_dn(3, 3).vertex_count() == 10);
  for (int d = 1; d <= 4; ++d)
    for (int n = 1; n <= 4; ++n)
      CHECK(static_cast<long>(build_q_dn(d, n).vertex_count()) == binomial(n - 1 + d, d));
  auto a = q13.arrow(q13.arrow_index("a_20_1"));
  CHECK(q13.vertex(a.target) == "11");
  auto b = q13.arrow(q13.arrow_index("a_11_2"));
  CHECK(q13.vertex(b.target) == "20");
}

TEST_CASE("enumerate_paths examples") {
  auto a2 = build_dynkin(DynkinType::parse("A2"));
  auto p = enumerate_paths(a2, 1);
  REQUIRE(p.size() == 3);
  CHECK(render_path(a2, p[0]) == "e_1");
  CHECK(render_path(a2, p[1]) == "e_2");
  CHECK(render_path(a2, p[2]) == "a");

  auto dq = double_quiver(a2).quiver;
  auto p2 = enumerate_paths(dq, 2);
  CHECK(p2.size() == 6);
  std::vector<std::string> names;
  for (std::size_t i = 4; i < p2.size(); ++i) names.push_back(render_path(dq, p2[i]));
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"a*a_star", "a_star*a"});

  auto d4 = build_dynkin(DynkinType::parse("D4"));
  CHECK(enumerate_paths(d4, 0).size() == 4);
}

TEST_CASE("path composition is associative and unital") {
  auto dq = double_quiver(build_dynkin(DynkinType::parse("A3"))).quiver;
  auto paths = enumerate_paths(dq, 2);
  for (const auto& x : paths) {
    CHECK(concat(dq, Path::trivial(x.source()), x) == x);
    CHECK(concat(dq, x, Path::trivial(x.target(dq))) == x);
    for (const auto& y : paths) {
      if (x.target(dq) != y.source()) {
        CHECK_THROWS_AS(concat(dq, x, y), InputError);
        continue;
      }
      for (const auto& z : paths)
        if (y.target(dq) == z.source())
          CHECK(concat(dq, concat(dq, x, y), z) == concat(dq, x, concat(dq, y, z)));
    }
  }
}

TEST_CASE("quiver validation and DOT") {
  CHECK_THROWS_AS(Quiver("q", {"1", "1"}, {}), InputError);
  CHECK_THROWS_AS(Quiver("q", {"1"}, {{"a", "1", "2"}}), InputError);
  CHECK_THROWS_AS(Quiver("q", {"1", "2"}, {{"a", "1", "2"}, {"a", "2", "1"}}), InputError);
  auto dot = quiver_to_dot(build_dynkin(DynkinType::parse("A2")));
  CHECK(dot.find("\"1\" -> \"2\" [label=\"a\"]") != std::string::npos);
}
