#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "support/random.hpp"
#include "tropcomm/errors.hpp"
#include "tropcomm/matrix_io.hpp"
#include "tropcomm/polytrope.hpp"

using namespace tropcomm;
using namespace tropcomm::testing;

namespace {

MatrixPair load(const std::string& name) { return pair_from_json(read_json_file(std::string(TROPCOMM_DATA_DIR) + "/" + name)); }

Rational q(const char* s) { return parse_rational(s); }

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("premetric and polytrope predicates") {
  CHECK_FALSE(is_premetric(TropMatrix::identity(3)));
  CHECK(is_premetric(TropMatrix{{0, 2}, {1, 0}}));
  CHECK_FALSE(is_premetric(TropMatrix{{0, -1}, {1, 0}}));
  CHECK_FALSE(is_premetric(TropMatrix{{0, 0}, {1, 0}}));
  CHECK_FALSE(is_polytrope(TropMatrix{{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}));
  CHECK(is_polytrope(load("example7_pair.json").a));
  CHECK(is_polytrope(load("example7_pair.json").b));
  for (const char* f : {"example5_pair.json", "example6_pair.json"}) {
    const auto p = load(f);
    CHECK(is_polytrope(p.a));
    CHECK(is_polytrope(p.b));
  }
}

TEST_CASE("every 2x2 premetric is a polytrope, and both polytrope tests agree") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const auto a = random_premetric(2, rng);
    CHECK(is_polytrope(a));
    CHECK(is_polytrope_by_square(a));
  }
  for (int i = 0; i < 500; ++i) {
    const auto a = random_premetric(2 + i % 4, rng);
    CHECK(is_polytrope(a) == is_polytrope_by_square(a));
    CHECK(is_polytrope(kleene_star(a)));
  }
}

TEST_CASE("commutation of the worked examples") {
  CHECK(commutes(load("example5_pair.json").a, load("example5_pair.json").b));
  CHECK_FALSE(commutes(load("example6_pair.json").a, load("example6_pair.json").b));

  const auto p7 = load("example7_pair.json");
  const auto w = commutator_witness(p7.a, p7.b);
  REQUIRE(w);
  CHECK(w->row == 0);
  CHECK(w->col == 2);
  CHECK(w->lhs == TropScalar(q("5.04")));
  CHECK(w->rhs == TropScalar(q("2.79")));
}

TEST_CASE("criteria for the 4x4 pairs") {
  const auto p5 = load("example5_pair.json");
  const auto c5 = classify_polytrope_pair(p5.a, p5.b);
  CHECK(c5.commutes);
  CHECK_FALSE(c5.star_condition);
  CHECK(c5.square_condition);
  REQUIRE(c5.star_failure);
  CHECK(c5.star_failure->row == 0);
  CHECK(c5.star_failure->col == 2);
  CHECK(c5.star_failure->lhs == TropScalar(q("3.43")));
  CHECK(c5.star_failure->rhs == TropScalar(q("2.31")));
  CHECK(kleene_star(trop_add(p5.a, p5.b))(0, 2) == TropScalar(q("2.31")));
  CHECK(trop_pow(trop_add(p5.a, p5.b), 2)(0, 2) == TropScalar(q("2.31")));

  const auto p6 = load("example6_pair.json");
  const auto c6 = classify_polytrope_pair(p6.a, p6.b);
  CHECK_FALSE(c6.commutes);
  CHECK(c6.square_condition);
}

TEST_CASE("product condition alone does not give commutation") {
  const auto p7 = load("example7_pair.json");
  const auto c = classify_polytrope_pair(p7.a, p7.b);
  CHECK(c.product_condition);
  CHECK_FALSE(c.commutes);
  CHECK(trop_mul(p7.a, p7.b) == trop_add(p7.a, p7.b));
  CHECK(trop_mul(p7.b, p7.a)(0, 2) == TropScalar(q("2.79")));
  CHECK(trop_add(p7.a, p7.b)(0, 2) == TropScalar(q("5.04")));
  CHECK_THROWS_AS(classify_polytrope_pair(TropMatrix::identity(3), p7.b), NotPolytrope);
}

TEST_CASE("witness entry prefers the tightest failed condition") {
  const auto p6 = load("example6_pair.json");
  const auto c = classify_polytrope_pair(p6.a, p6.b);
  REQUIRE(c.witness_entry);
  REQUIRE(c.commute_failure);
  CHECK(c.witness_entry->row == c.commute_failure->row);
  CHECK(c.witness_entry->col == c.commute_failure->col);
}

TEST_CASE("preimage of a column of a 2x2 polytrope") {
  const TropMatrix a{{0, 2}, {1, 0}};
  const TropVector b{0, 1};
  const auto d = preimage(a, b);
  CHECK(d.base == b);
  CHECK(d.free_directions == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(preimage(a, TropVector{0, 5}), NotInImage);
  CHECK_THROWS_AS(preimage(TropMatrix::identity(2), b), NotPolytrope);
}

namespace {

bool described(const PreimageDescription& d, const TropVector& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const bool free = std::find(d.free_directions.begin(), d.free_directions.end(), i) != d.free_directions.end();
    if (free ? x[i] < d.base[i] : x[i] != d.base[i]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("preimage descriptions agree with a grid search") {
  // grid oracle: every x on a rational grid around b is classified directly
  std::mt19937_64 rng(17);
  auto check_grid = [&](const TropMatrix& a, const TropVector& b) {
    const auto d = preimage(a, b);
    const std::size_t n = a.size();
    std::vector<int> offset(n, -4);
    while (true) {
      std::vector<TropScalar> xs;
      for (std::size_t i = 0; i < n; ++i) xs.emplace_back(Rational(b[i].value() + Rational(offset[i], 2)));
      const TropVector x(xs);
      CHECK((trop_apply(a, x) == b) == described(d, x));
      std::size_t k = 0;
      while (k < n && ++offset[k] > 4) offset[k++] = -4;
      if (k == n) break;
    }
    return d;
  };
  const auto d = check_grid(TropMatrix{{0, 2}, {1, 0}}, TropVector{0, 1});
  CHECK(d.free_directions.size() == 1);

  for (int trial = 0; trial < 12; ++trial) {
    const auto a = random_polytrope(3, rng);
    const auto b = trop_apply(a, random_vector(3, rng));
    const auto db = check_grid(a, b);
    CHECK(db.base == b);
    CHECK(db.free_directions.size() < 3);
    CHECK(check_grid(a, a.column(trial % 3)).free_directions.size() < 3);
  }
}

TEST_CASE("image vertices") {
  CHECK(image_vertices(TropMatrix::identity(3)).size() == 3);
  const auto v = image_vertices(TropMatrix{{0, 2}, {1, 0}});
  REQUIRE(v.size() == 2);
  CHECK(v[0] == TropVector{0, 1});
  CHECK(v[1] == TropVector{0, -2});
  CHECK(image_vertices(load("example7_pair.json").a).size() == 3);
  CHECK(image_vertices(TropMatrix{{0, 0}, {0, 0}}).size() == 1);
}

TEST_CASE("polytropes act as projections onto their image") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto a = random_polytrope(n, rng);
    const auto x = random_vector(n, rng);
    CHECK(trop_mul(a, a) == a);
    const auto y = trop_apply(a, x);
    CHECK(trop_apply(a, y) == y);
    CHECK(in_star_image(a, y));
  }
}

TEST_CASE("intersection of the images of the 3x3 example pair") {
  const auto p7 = load("example7_pair.json");
  const std::vector<TropMatrix> ms{p7.a, p7.b};
  const auto poly = image_intersection_polygon(ms);
  const std::vector<PlanePoint> expected{{q("-2.25"), q("-2.79")}, {q("3.01"), q("2.47")}, {q("3.01"), q("4.02")},
                                         {q("1.62"), q("4.02")},   {q("-2.25"), q("0.15")}};
  CHECK(poly.size() == 5);
  for (const auto& p : expected) CHECK(std::find(poly.begin(), poly.end(), p) != poly.end());
}

TEST_CASE("commuting polytropes with a closed sum meet in a hexagon") {
  std::mt19937_64 rng(29);
  bool found = false;
  for (int trial = 0; trial < 200 && !found; ++trial) {
    const auto [a, b] = polytropes_with_closed_sum(random_polytrope(3, rng), rng);
    const std::vector<TropMatrix> ms{a, b};
    const auto poly = image_intersection_polygon(ms);
    if (poly.size() != 6) continue;
    found = true;
    CHECK(commutes(a, b));
    const std::vector<TropMatrix> prod{trop_mul(a, b)};
    CHECK(image_intersection_polygon(prod) == poly);
  }
  CHECK(found);
}

TEST_CASE("tropical segments pass through their endpoints") {
  const TropVector p{0, 1, 3};
  const TropVector r{0, -2, 1};
  const auto seg = tropical_segment(p, r);
  REQUIRE(seg.size() >= 2);
  CHECK(seg.front() == to_plane(p));
  CHECK(seg.back() == to_plane(r));
  CHECK(seg.size() <= 4);
}

TEST_CASE("svg output structure") {
  const auto p7 = load("example7_pair.json");
  std::ostringstream one;
  const std::vector<TropMatrix> single{p7.a};
  render_polytrope_svg(single, one);
  CHECK(count(one.str(), "class=\"vertex\"") == 3);
  CHECK(count(one.str(), "class=\"hull\"") == 3);
  CHECK(count(one.str(), "class=\"intersection\"") == 0);

  std::ostringstream two;
  const std::vector<TropMatrix> both{p7.a, p7.b};
  render_polytrope_svg(both, two);
  CHECK(count(two.str(), "<g id=\"matrix") == 2);
  CHECK(count(two.str(), "class=\"vertex\"") == 6);
  CHECK(count(two.str(), "class=\"intersection\"") == 1);
  CHECK(count(two.str(), "stroke-dasharray") >= 1);

  std::ostringstream again;
  render_polytrope_svg(both, again);
  CHECK(again.str() == two.str());

  std::ostringstream bad;
  const std::vector<TropMatrix> wrong{TropMatrix{{0, 1}, {1, 0}}};
  CHECK_THROWS_AS(render_polytrope_svg(wrong, bad), UnsupportedSize);
}
