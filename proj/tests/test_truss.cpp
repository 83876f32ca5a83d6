#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "trusskit/catalogue.hpp"

using namespace trusskit;
namespace cat = trusskit::catalogue;

namespace {

Table2 table_of(oracle::Table const& t) {
  std::vector<elem> data;
  for (auto const& row : t)
    for (unsigned v : row) data.push_back(v);
  return Table2(t.size(), data);
}

/// Direct distributivity scans, independent of the classifier.
bool left_distributive(FinitePreTruss const& t) {
  for (elem a = 0; a < t.size(); ++a)
    for (elem b = 0; b < t.size(); ++b)
      for (elem c = 0; c < t.size(); ++c)
        for (elem d = 0; d < t.size(); ++d)
          if (t.mul(a, t(b, c, d)) != t(t.mul(a, b), t.mul(a, c), t.mul(a, d))) return false;
  return true;
}

bool right_distributive(FinitePreTruss const& t) {
  for (elem a = 0; a < t.size(); ++a)
    for (elem b = 0; b < t.size(); ++b)
      for (elem c = 0; c < t.size(); ++c)
        for (elem d = 0; d < t.size(); ++d)
          if (t.mul(t(b, c, d), a) != t(t.mul(b, a), t.mul(c, a), t.mul(d, a))) return false;
  return true;
}

}  // namespace

TEST_CASE("classification of T(Z/4)", "[truss]") {
  auto t = cat::ring_mod(4);
  CHECK(t.kind() == TrussKind::truss);
  CHECK(t.is_near());
  CHECK(t.is_skew());
  CHECK(t.is_abelian_heap());
  CHECK(t.unit() == std::optional<elem>{1});
  CHECK(t.absorbers().two_sided == std::optional<elem>{0});
  CHECK(to_string(t.kind()) == std::string("truss"));
}

TEST_CASE("the left projection on Z/2 is a skew truss of right absorbers", "[truss]") {
  auto t = cat::left_projection(groups::cyclic(2));
  CHECK(t.kind() == TrussKind::truss);
  CHECK(t.is_skew());
  CHECK(t.absorbers().left_absorbers.empty());
  CHECK(t.absorbers().right_absorbers == Subset{0, 1});
  CHECK_FALSE(t.absorbers().two_sided);
}

TEST_CASE("group multiplication on H(S3) gives a brace-type near-truss", "[truss]") {
  auto t = cat::trivial_brace(groups::symmetric3());
  CHECK(t.is_near());
  CHECK(multiplicative_group(t));
  CHECK(t.absorbers().left_absorbers.empty());
  CHECK(t.absorbers().right_absorbers.empty());
  CHECK(left_distributive(t));
  // [b,c,d]a = b c^-1 d a = (ba)(ca)^-1(da): both laws hold for a group product.
  CHECK(right_distributive(t));
  CHECK(t.kind() == TrussKind::skew_truss);
}

TEST_CASE("classification flags agree with direct scans on the catalogue", "[truss]") {
  for (auto const& [name, t] : cat::small()) {
    CAPTURE(name);
    CHECK(t.is_near() == left_distributive(t));
    CHECK(t.is_skew() == (left_distributive(t) && right_distributive(t)));
    if (t.is_skew()) CHECK(t.is_near());
    if (t.is_truss()) CHECK((t.is_skew() && t.is_abelian_heap()));
    CHECK(t.is_abelian_heap() == t.heap().is_abelian());
    CHECK(classify(t.heap(), t.mul_table()) == t.classification());
  }
}

TEST_CASE("non-associative products are rejected with a witness", "[truss]") {
  auto h = heap_from_group(groups::cyclic(3));
  auto sub = Table2::from_function(3, [](elem a, elem b) { return (a + 3 - b) % 3; });
  CHECK_THROWS_AS(FinitePreTruss(h, sub), axiom_error);
  auto c = classify(h, sub);
  CHECK(c.kind == TrussKind::not_pretruss);
  REQUIRE(c.witness);
  auto const& w = c.witness->witness;
  CHECK(sub(sub(w[0], w[1]), w[2]) != sub(w[0], sub(w[1], w[2])));
  CHECK_FALSE(check_semigroup_axioms(sub).ok());
}

TEST_CASE("rings, near-rings and braces", "[truss]") {
  SECTION("Z/4 from an independent table") {
    auto add = groups::cyclic(4);
    auto t = truss_from_ring(add, table_of(oracle::product_mod(4)));
    CHECK(t.absorbers().two_sided == std::optional<elem>{0});
  }
  SECTION("trivial brace on Z/3") {
    auto t = cat::trivial_brace_mod(3);
    CHECK(t.is_near());
    CHECK(multiplicative_group(t));
  }
  SECTION("near-ring Z/4 with nm = m has left absorbers") {
    auto t = cat::right_projection_near_ring(4);
    CHECK(check_near_ring_axioms(groups::cyclic(4), t.mul_table()).ok());
    CHECK(t.is_near());
    CHECK(t.absorbers().left_absorbers == Subset::all(4));
  }
  SECTION("maps on Z/2 are affine, so both heap distributive laws hold") {
    auto t = cat::maps_near_ring();
    CHECK(t.is_near());
    CHECK(t.is_skew());
    CHECK(t.absorbers().left_absorbers == Subset{0, 3});
    // the constant maps break additive distributivity on one side
    auto add = retract(t.heap(), 0);
    CHECK(check_near_ring_axioms(add, t.mul_table()).ok());
    CHECK_FALSE(check_ring_axioms(add, t.mul_table()).ok());
  }
  SECTION("a failing ring table is rejected") {
    auto bad = Table2::from_function(4, [](elem a, elem b) { return (a + b) % 4; });
    CHECK_THROWS_AS(truss_from_ring(groups::cyclic(4), bad), axiom_error);
    CHECK_FALSE(check_ring_axioms(groups::cyclic(4), bad).ok());
  }
}

TEST_CASE("retract brace", "[truss]") {
  SECTION("trivial brace on Z/4 round-trips") {
    auto b = retract_brace(cat::trivial_brace_mod(4));
    auto z4 = groups::cyclic(4);
    CHECK(b.add.table() == z4.table());
    CHECK(b.mul.table() == z4.table());
  }
  SECTION("S3 satisfies the brace law") {
    auto b = retract_brace(cat::trivial_brace(groups::symmetric3()));
    CHECK(check_skew_brace_axioms(b.add, b.mul.table()).ok());
  }
  SECTION("an absorber blocks it") { CHECK_THROWS_AS(retract_brace(cat::ring_mod(4)), precondition_error); }
  SECTION("ring round-trip through the retract at the absorber") {
    auto t = cat::ring_mod(6);
    CHECK(retract(t.heap(), 0).table() == groups::cyclic(6).table());
  }
}

TEST_CASE("skew-ring unit correspondence", "[truss]") {
  auto t = cat::ring_mod(4);
  auto corr = skew_ring_unit_correspondence(t);
  REQUIRE(corr.size() == 1);
  CHECK(corr[0].left_absorber == 0);
  CHECK(corr[0].unit == 2);
  for (elem a = 0; a < 4; ++a) CHECK(t.mul(a, 2) == (2 * a) % 4);
  CHECK(t(1, corr[0].unit, 1) == corr[0].left_absorber);

  CHECK(skew_ring_unit_correspondence(cat::trivial_brace_mod(3)).empty());

  auto m = cat::maps_near_ring();
  for (auto const& c : skew_ring_unit_correspondence(m)) CHECK(m(*m.unit(), c.unit, *m.unit()) == c.left_absorber);
}

TEST_CASE("induced products", "[truss]") {
  auto t = cat::ring_mod(4);
  auto star = induced_product(t, 0);
  CHECK(star.unit() == std::optional<elem>{t(1, 0, 1)});
  CHECK(star.absorbers().left_absorbers.contains(1));
  // translation by 1 - 0 is an isomorphism T -> (T, *_0)
  auto tau = translation(t.heap(), 0, 1);
  CHECK(is_pretruss_homomorphism(t, star, tau));

  auto m = cat::maps_near_ring();
  elem const id = *m.unit();
  for (elem e : m.absorbers().left_absorbers) {
    auto p = induced_product(m, e);
    CHECK(p.unit() == std::optional<elem>{m(id, e, id)});
    CHECK(p.absorbers().left_absorbers.contains(id));
    CHECK(is_pretruss_homomorphism(m, p, translation(m.heap(), e, id)));
  }
  CHECK_THROWS_AS(induced_product(t, 1), precondition_error);
  // nm = m has no unit
  CHECK_THROWS_AS(induced_product(cat::right_projection_near_ring(3), 1), precondition_error);
}

TEST_CASE("products", "[truss]") {
  auto p = cat::brace_times_ring();
  CHECK(p.size() == 4);
  CHECK(p.is_near());
  // absorbers of a product are pairs of absorbers; the brace factor has none
  CHECK(p.absorbers().left_absorbers.empty());
  CHECK(p.absorbers().right_absorbers.empty());

  auto one = cat::ring_mod(1);
  for (auto const& [name, t] : cat::small()) {
    CAPTURE(name);
    CHECK(find_pretruss_isomorphism(product_pretruss(t, one), t));
  }

  auto r2 = cat::ring_mod(2), r3 = cat::ring_mod(3);
  auto r6 = product_pretruss(r2, r3);
  CHECK(find_pretruss_isomorphism(r6, cat::ring_mod(6)));
  CHECK(r6.absorbers().two_sided == std::optional<elem>{0});
}
