#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "support/random.hpp"
#include "tropcomm/commuting.hpp"
#include "tropcomm/errors.hpp"
#include "tropcomm/matrix_io.hpp"
#include "tropcomm/polytrope.hpp"

using namespace tropcomm;
using namespace tropcomm::testing;

namespace {

MatrixPair load(const std::string& name) { return pair_from_json(read_json_file(std::string(TROPCOMM_DATA_DIR) + "/" + name)); }

std::vector<Rational> ints(std::initializer_list<int> xs) {
  std::vector<Rational> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("generators of the 2x2 commuting ideal") {
  const auto layout = VariableLayout::full(2);
  const auto g = generators(2);
  REQUIRE(g.size() == 4);
  CHECK(format_poly(g[0].poly, layout) == "x12*y21 - x21*y12");
  CHECK(format_poly(g[1].poly, layout) == "x11*y12 - x12*y11 + x12*y22 - x22*y12");
  CHECK(g[3].poly == -g[0].poly);
  CHECK(distinct_generators(layout).size() == 3);
}

TEST_CASE("generators match the symbolic commutator") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto layout = VariableLayout::full(n);
    const auto x = PolyMatrix::variables(layout, false);
    const auto y = PolyMatrix::variables(layout, true);
    const auto c = x * y - y * x;
    const auto g = generators(n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (c(i, j).is_zero()) continue;
        REQUIRE(k < g.size());
        CHECK(g[k].row == i);
        CHECK(g[k].col == j);
        CHECK(g[k].poly == c(i, j));
        ++k;
      }
    CHECK(k == g.size());
    CHECK(g.size() == n * n);
  }
}

TEST_CASE("symmetric generators") {
  const auto layout = VariableLayout::symmetric(3);
  const auto g = symmetric_generators();
  REQUIRE(g.size() == 3);
  CHECK(layout.dimension() == 12);
  for (const auto& gen : g) {
    CHECK(gen.poly.size() == 6);
    CHECK(gen.row < gen.col);
  }
  CHECK(format_poly(g[0].poly, layout).find("x11*y12") != std::string::npos);
}

TEST_CASE("tropical evaluation of a generator") {
  const auto layout = VariableLayout::full(2);
  const auto g11 = generators(2)[0].poly;
  // x12 = 1, x21 = 2, y12 = 3, y21 = 2:  terms x12*y21 = 3 and x21*y12 = 5
  const TropMatrix a{{0, 1}, {2, 0}};
  const TropMatrix b{{0, 3}, {2, 0}};
  const auto w = layout.weights(a, b);
  const auto e = trop_evaluate(g11, w);
  CHECK(e.min_value == 3);
  CHECK(e.argmin.size() == 1);
  CHECK_FALSE(trop_satisfied(g11, w));

  const TropMatrix b2{{0, 3}, {4, 0}};  // 1 + 4 == 2 + 3
  CHECK(trop_satisfied(g11, layout.weights(a, b2)));
  CHECK_THROWS_AS(trop_evaluate(SparsePoly(), w), EmptyPolynomial);
}

TEST_CASE("2x2 region tests") {
  const auto ts = load("ts2_not_tpre_pair.json");
  CHECK(in_TS(ts.a, ts.b));
  const auto r = in_Tpre(ts.a, ts.b);
  CHECK_FALSE(r.member);
  CHECK(r.failures == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 1}});
  CHECK_FALSE(in_TC2(ts.a, ts.b));

  const auto tc = load("tc2_pair.json");
  CHECK(in_TS(tc.a, tc.b));
  CHECK(in_Tpre(tc.a, tc.b).member);
  CHECK(in_TC2(tc.a, tc.b));

  const auto pre = load("tpre2_not_ts_pair.json");
  CHECK_FALSE(in_TS(pre.a, pre.b));
  CHECK(in_Tpre(pre.a, pre.b).member);
  CHECK_FALSE(in_TC2(pre.a, pre.b));

  CHECK_THROWS_AS(in_TC2(TropMatrix::identity(3), TropMatrix::identity(3)), UnsupportedSize);
}

TEST_CASE("commuting 2x2 pairs on the hyperplane satisfy every generator") {
  std::mt19937_64 rng(41);
  std::size_t checked = 0;
  for (int trial = 0; trial < 20000 && checked < 500; ++trial) {
    const auto a = random_integer_matrix(2, rng, 0, 3);
    auto b = random_integer_matrix(2, rng, 0, 3);
    b(1, 0) = TropScalar(Rational(a(1, 0).value() + b(0, 1).value() - a(0, 1).value()));
    if (!in_TS(a, b)) continue;
    ++checked;
    CHECK(in_TC2(a, b));
    CHECK(in_Tpre(a, b).member);
  }
  CHECK(checked == 500);
}

TEST_CASE("homogeneity space") {
  CHECK(homogeneity_dimension(2) == 4);
  CHECK(homogeneity_dimension(3) == 4);
  CHECK(homogeneity_dimension(4) == 5);
  CHECK(homogeneity_dimension(5) == 6);

  // a = 1, b = 2, c = (0, -2, -3)
  const auto w = ints({1, 3, 4, -1, 1, 2, -2, 0, 1, 2, 4, 5, 0, 2, 3, -1, 1, 2});
  const auto p = homogeneity_membership(w, 3);
  REQUIRE(p);
  CHECK(p->a == 1);
  CHECK(p->b == 2);
  CHECK(p->c == ints({0, -2, -3}));

  auto bad = w;
  bad[5] += 1;
  CHECK_FALSE(homogeneity_membership(bad, 3));

  for (const auto& g : generators(3)) {
    const auto e = trop_evaluate(g.poly, w);
    CHECK(e.argmin.size() == e.terms.size());
  }
  const auto p2 = homogeneity_membership(ints({1, 3, 4, 1, 2, 4, 5, 2}), 2);
  REQUIRE(p2);
  CHECK(p2->x12 == Rational(3));
  CHECK(p2->x21 == Rational(4));
  CHECK_THROWS(homogeneity_membership(ints({1, 3, 4, 1}), 2));
}

TEST_CASE("symmetry group") {
  const auto g = symmetry_group(3);
  REQUIRE(g.size() == 12);
  CHECK(g[0].perm == std::vector<std::size_t>{0, 1, 2});
  CHECK_FALSE(g[0].swap);
  CHECK(g[6].swap);

  const auto layout = VariableLayout::full(3);
  const auto gens = generators(3);
  for (const auto& e : g) {
    for (const auto& gen : gens) {
      const auto image = act(e, gen.poly, layout);
      const bool found = std::any_of(gens.begin(), gens.end(), [&](const Generator& h) {
        return h.poly == image || h.poly == -image;
      });
      CHECK(found);
    }
  }
}

TEST_CASE("region labels are invariant under the group") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_integer_matrix(3, rng, 0, 6);
    const auto b = random_integer_matrix(3, rng, 0, 6);
    const auto base = classify_pair(a, b);
    for (const auto& g : symmetry_group(3)) {
      const auto [ga, gb] = act(g, a, b);
      const auto img = classify_pair(ga, gb);
      CHECK(img.in_ts == base.in_ts);
      CHECK(img.in_tpre == base.in_tpre);
      CHECK(img.tc == base.tc);
    }
  }
}

TEST_CASE("ideal witnesses expand to their polynomials") {
  const auto layout = VariableLayout::full(3);
  const auto e = symmetry_group(3).front();
  const auto w4 = witness_deg4(e);
  CHECK(w4.poly.size() == 12);
  CHECK(expand_combination(w4.cofactors, 3) == w4.poly);
  for (const auto& [m, c] : w4.poly.terms()) CHECK(m.degree() == 4);

  const auto w3 = witness_deg3(e);
  CHECK(w3.poly.size() == 10);
  CHECK(expand_combination(w3.cofactors, 3) == w3.poly);
  bool has_two = false;
  for (const auto& [m, c] : w3.poly.terms()) has_two = has_two || c == 2 || c == -2;
  CHECK(has_two);

  const auto o3 = witness_orbit(&witness_deg3);
  const auto o4 = witness_orbit(&witness_deg4);
  CHECK(o3.size() == 6);
  CHECK(o4.size() == 12);
  for (const auto& el : o4) CHECK(expand_combination(el.cofactors, 3) == el.poly);
  for (const auto& el : o3) CHECK(expand_combination(el.cofactors, 3) == el.poly);
  CHECK(format_poly(w4.poly, layout).find("x31*y21*y32") != std::string::npos);
}

TEST_CASE("certificates at the three 3x3 points") {
  const auto layout = VariableLayout::full(3);

  const auto pa = load("prop7a_pair.json");
  const auto la = classify_pair(pa.a, pa.b);
  CHECK(la.in_ts);
  CHECK(la.in_tpre);

  const auto pb = load("prop7b_pair.json");
  const auto lb = classify_pair(pb.a, pb.b);
  CHECK(lb.in_ts);
  CHECK_FALSE(lb.in_tpre);
  CHECK(lb.tpre_report.failures == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 1}});
  REQUIRE(lb.certificate);
  CHECK(lb.tc == TCStatus::CertifiedOut);
  CHECK(lb.certificate->family == "generator");
  CHECK(format_monomial(lb.certificate->unique_min_monomial, layout) == "x12*y21");
  CHECK(lb.certificate->min_value == 2);
  CHECK(lb.certificate->runner_up_value == 3);

  const auto pc = load("prop7c_pair.json");
  const auto lc = classify_pair(pc.a, pc.b);
  CHECK_FALSE(lc.in_ts);
  REQUIRE(lc.commute_failure);
  CHECK(*lc.commute_failure == std::pair<std::size_t, std::size_t>{2, 2});
  CHECK(lc.in_tpre);
}

TEST_CASE("certificates are sound") {
  std::mt19937_64 rng(47);
  const auto layout = VariableLayout::full(3);
  std::size_t found = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_integer_matrix(3, rng, 0, 9);
    const auto b = random_integer_matrix(3, rng, 0, 9);
    const auto cert = certify_not_in_TC3(a, b);
    if (!cert) continue;
    ++found;
    const auto w = layout.weights(a, b);
    CHECK(expand_combination(cert->element.cofactors, 3) == cert->element.poly);
    const auto e = trop_evaluate(cert->element.poly, w);
    REQUIRE(e.argmin.size() == 1);
    CHECK(e.terms[e.argmin[0]].monomial == cert->unique_min_monomial);
    CHECK(e.min_value == cert->min_value);
    CHECK(cert->runner_up_value > cert->min_value);
    // a unique minimum of an ideal element excludes the pair from the variety,
    // and the prevariety is coarser: generator certificates imply failures
    if (cert->family == "generator") CHECK_FALSE(in_Tpre(a, b).member);
  }
  CHECK(found > 0);
}

TEST_CASE("degree slices") {
  const auto layout = VariableLayout::full(3);
  const auto pb = load("prop7b_pair.json");
  const auto cb = certify_by_slices(pb.a, pb.b, 2);
  REQUIRE(cb);
  CHECK(cb->family == "slice 1,1");
  CHECK(expand_combination(cb->element.cofactors, 3) == cb->element.poly);

  const auto pa = load("prop7a_pair.json");
  CHECK_FALSE(certify_by_slices(pa.a, pa.b, 5));
  CHECK_FALSE(certify_not_in_TC3(pa.a, pa.b));

  // the fixed witness families are contained in slices of total degree 4
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_integer_matrix(3, rng, 0, 9);
    const auto b = random_integer_matrix(3, rng, 0, 9);
    const auto fixed = certify_not_in_TC3(a, b);
    const auto sliced = certify_by_slices(a, b, 4);
    if (fixed) CHECK(sliced.has_value());
    if (sliced) {
      CHECK(expand_combination(sliced->element.cofactors, 3) == sliced->element.poly);
      const auto e = trop_evaluate(sliced->element.poly, layout.weights(a, b));
      CHECK(e.argmin.size() == 1);
    }
  }
}

TEST_CASE("status strings and size limits") {
  CHECK(to_string(TCStatus::Member) == "member");
  CHECK(to_string(TCStatus::NotMember) == "not-member");
  CHECK(to_string(TCStatus::CertifiedOut) == "certified-out");
  CHECK(to_string(TCStatus::Unknown) == "unknown");
  CHECK_THROWS_AS(classify_pair(TropMatrix::identity(4), TropMatrix::identity(4)), UnsupportedSize);
  CHECK_THROWS_AS(classify_pair(TropMatrix(3), TropMatrix::identity(3)), UnsupportedSize);
  CHECK(classify_pair(TropMatrix{{0, 4}, {2, 0}}, TropMatrix{{0, 3}, {1, -1}}).tc == TCStatus::Member);
}
