#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sierpinski/error.hpp"
#include "sierpinski/gasket.hpp"
#include "sierpinski/ifs.hpp"

using namespace sierpinski;

namespace {

const double kHalfRoot3 = std::sqrt(3.0) / 2.0;

std::vector<Complex> gasket_vertices(int stage) {
  std::vector<Complex> out;
  for (const auto& t : iterate_gasket(1.0, stage).triangles) {
    out.insert(out.end(), {t.a, t.b, t.c});
  }
  return out;
}

}  // namespace

TEST_CASE("IfsSystem validation") {
  CHECK_THROWS_AS(IfsSystem("empty", {}), DomainError);
  CHECK_THROWS_AS(IfsSystem("expanding", {{Complex{1.0}, Complex{0.0}}}), DomainError);
  CHECK(paper_system().maps().size() == 3);
  CHECK(system_by_name("equilateral").name() == "equilateral");
  CHECK_THROWS_AS(system_by_name("nope"), DomainError);
}

TEST_CASE("base_vector") {
  const PointPath faithful = base_vector(BaseMode::Faithful);
  REQUIRE(faithful.size() == 5);
  const auto pts = faithful.points();
  CHECK(pts[0] == Complex{0.0});
  CHECK(pts[1] == Complex{1.0});
  CHECK(oracle::close(pts[2], Complex{0.5, 0.8660254038}, 1e-10));
  CHECK(pts[3] == Complex{0.0});
  CHECK(pts[4] == Complex{100.0});

  const PointPath structured = base_vector(BaseMode::Structured);
  CHECK(structured.point_count() == 4);
  CHECK(structured.pen_up_count() == 0);
}

TEST_CASE("concat3") {
  const PointPath a = PointPath::from_points(std::vector<Complex>{{0.0}});
  const PointPath b = PointPath::from_points(std::vector<Complex>{{1.0}});
  const PointPath c = PointPath::from_points(std::vector<Complex>{{0.0, 1.0}});
  CHECK(concat3(a, b, c, BaseMode::Faithful) == PointPath({Complex{0.0}, Complex{1.0}, Complex{0.0, 1.0}}));
  CHECK(concat3(a, b, c, BaseMode::Structured) ==
        PointPath({Complex{0.0}, PenUp{}, Complex{1.0}, PenUp{}, Complex{0.0, 1.0}}));

  const PointPath base = base_vector(BaseMode::Faithful);
  CHECK(concat3(base, base, base, BaseMode::Faithful).size() == 15);
}

TEST_CASE("ifs_step on the paper system") {
  const PointPath origin = PointPath::from_points(std::vector<Complex>{{0.0}});
  CHECK(ifs_step(paper_system(), origin, BaseMode::Faithful) ==
        PointPath({Complex{0.0}, Complex{0.5}, Complex{0.0, 0.5}}));

  const auto g = ifs_step(paper_system(), base_vector(BaseMode::Faithful), BaseMode::Faithful).points();
  REQUIRE(g.size() == 15);
  const Complex first[] = {{0.0}, {0.5}, {0.25, 0.4330127019}, {0.0}, {50.0}};
  const Complex second[] = {{0.5}, {1.0}, {0.75, 0.4330127019}, {0.5}, {50.5}};
  const Complex third[] = {{0.0, 0.5}, {0.5, 0.5}, {0.25, 0.5 + 0.4330127019}, {0.0, 0.5}, {50.0, 0.5}};
  for (int i = 0; i < 5; ++i) {
    CHECK(oracle::close(g[i], first[i], 1e-10));
    CHECK(oracle::close(g[5 + i], second[i], 1e-10));
    CHECK(oracle::close(g[10 + i], third[i], 1e-10));
  }
}

TEST_CASE("generate examples and bounds") {
  CHECK(generate(paper_system(), BaseMode::Faithful, 0) == base_vector(BaseMode::Faithful));
  CHECK(generate(paper_system(), BaseMode::Faithful, 5).size() == 1215);

  const PointPath s1 = generate(paper_system(), BaseMode::Structured, 1);
  CHECK(s1.point_count() == 12);
  CHECK(s1.pen_up_count() == 2);

  CHECK_THROWS_AS(generate(paper_system(), BaseMode::Structured, -1), DomainError);
  CHECK_THROWS_AS(generate(paper_system(), BaseMode::Structured, 11), DomainError);
  CHECK_THROWS_WITH(generate(paper_system(), BaseMode::Faithful, 6), "sentinel inseparable beyond depth 5");
  CHECK(generate(paper_system(), BaseMode::Structured, 10).point_count() == 4 * 59049);
}

TEST_CASE("classify_sentinels") {
  const auto d0 = classify_sentinels(generate(paper_system(), BaseMode::Faithful, 0), 0);
  REQUIRE(d0.sentinels.size() == 1);
  CHECK(d0.sentinels[0] == Complex{100.0});

  const auto d1 = classify_sentinels(generate(paper_system(), BaseMode::Faithful, 1), 1);
  const std::vector<Complex> want{{50.0}, {50.5}, {50.0, 0.5}};
  CHECK(d1.sentinels == want);

  const auto d5 = classify_sentinels(generate(paper_system(), BaseMode::Faithful, 5), 5);
  CHECK(d5.sentinels.size() == 243);
  CHECK(d5.attractor.size() == 972);

  CHECK_THROWS_AS(classify_sentinels(PointPath{}, 6), DomainError);
}

TEST_CASE("property: cardinality, stacking order and separability") {
  const IfsSystem sys = paper_system();
  for (const BaseMode mode : {BaseMode::Faithful, BaseMode::Structured}) {
    PointPath g = generate(sys, mode, 0);
    for (int d = 0; d < 5; ++d) {
      const PointPath next = generate(sys, mode, d + 1);
      std::vector<PointPath> blocks;
      for (const auto& w : sys.maps()) {
        blocks.push_back(g.map_points(w));
      }
      CHECK(next == concat3(blocks[0], blocks[1], blocks[2], mode));
      g = next;
    }
  }

  for (int d = 0; d <= 5; ++d) {
    const PointPath g = generate(sys, BaseMode::Faithful, d);
    CHECK(g.size() == static_cast<std::size_t>(5 * std::pow(3, d)));
    const auto part = classify_sentinels(g, d);
    CHECK(part.sentinels.size() == static_cast<std::size_t>(std::pow(3, d)));
    double min_sentinel = 1e300;
    double max_attractor = -1e300;
    for (const Complex z : part.sentinels) {
      min_sentinel = std::min(min_sentinel, z.re);
    }
    for (const Complex z : part.attractor) {
      max_attractor = std::max(max_attractor, z.re);
    }
    CHECK(min_sentinel >= 3.125);
    CHECK(max_attractor <= 1.0 + 1e-12);
  }
}

TEST_CASE("property: contraction toward the {0, 1, i} hull") {
  double d0 = 0.0;
  for (const Complex z : base_vector(BaseMode::Structured).points()) {
    d0 = std::max(d0, oracle::distance_to_unit_simplex(z));
  }
  CHECK(d0 > 0.25);  // the apex 1/2 + i sqrt(3)/2 sits outside the hull
  for (int d = 0; d <= 5; ++d) {
    const auto part = classify_sentinels(generate(paper_system(), BaseMode::Faithful, d), d);
    const double bound = std::pow(0.5, d) * d0 + 1e-12;
    for (const Complex z : part.attractor) {
      CHECK(oracle::distance_to_unit_simplex(z) <= bound);
    }
  }
}

TEST_CASE("property: equilateral IFS reproduces the midpoint construction") {
  for (int d = 0; d <= 4; ++d) {
    const auto ifs_pts = oracle::distinct(generate(equilateral_system(), BaseMode::Structured, d).points(), 1e-12);
    const auto rec_pts = oracle::distinct(gasket_vertices(d + 1), 1e-12);
    CHECK(ifs_pts.size() == rec_pts.size());
    CHECK(oracle::same_set(ifs_pts, rec_pts, 1e-12));
  }
  CHECK(oracle::close(base_vector(BaseMode::Structured).points()[2], Complex{0.5, kHalfRoot3}, 0.0));
}

TEST_CASE("sentinel_mask marks exactly the sentinel images") {
  const PointPath g = generate(paper_system(), BaseMode::Faithful, 2);
  const auto mask = sentinel_mask(g);
  CHECK(std::count(mask.begin(), mask.end(), true) == 9);
  const PointPath stripped = g.drop_points(mask);
  CHECK(stripped == generate(paper_system(), BaseMode::Structured, 2));
}
