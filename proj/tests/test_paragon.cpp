#include <catch_amalgamated.hpp>

#include <set>

#include "trusskit/catalogue.hpp"
#include "trusskit/domain.hpp"
#include "trusskit/instances/odd_int.hpp"
#include "trusskit/paragon.hpp"

using namespace trusskit;
namespace cat = trusskit::catalogue;

namespace {

std::set<Subset> paragon_set(FinitePreTruss const& t) {
  std::set<Subset> out;
  for (auto const& m : enumerate_paragons(t)) out.insert(m.members);
  return out;
}

std::set<Subset> congruence_classes(FinitePreTruss const& t) {
  auto cs = classes_of(enumerate_congruences_bruteforce(t));
  return {cs.begin(), cs.end()};
}

}  // namespace

TEST_CASE("closure conditions", "[paragon]") {
  auto t = cat::ring_mod(4);
  auto all = Subset::all(4);
  CHECK(is_left_closed(t, all));
  CHECK(is_right_closed(t, all));
  CHECK(is_left_closed(t, {0, 2}));
  CHECK(is_right_closed(t, {0, 2}));
  CHECK(is_left_closed(t, {1, 3}));
  // t·1 - t·3 + 3 = 3 - 2t is odd
  for (elem x = 0; x < 4; ++x) CHECK(t(t.mul(x, 1), t.mul(x, 3), 3) % 2 == 1);
  CHECK_THROWS_AS(is_left_closed(t, {0, 1}), precondition_error);

  for (auto const& [name, u] : cat::small()) {
    CAPTURE(name);
    for (auto const& s : all_normal_subheaps(u.heap())) {
      CHECK(is_left_closed(u, s) == is_left_closed_existential(u, s));
      CHECK(is_right_closed(u, s) == is_right_closed_existential(u, s));
    }
  }
}

TEST_CASE("paragon tests agree across methods", "[paragon]") {
  for (auto const& [name, t] : cat::small()) {
    CAPTURE(name);
    for (auto const& s : all_normal_subheaps(t.heap())) {
      bool const def = paragon_by_definition(t, s);
      CHECK(def == paragon_by_closure(t, s));
      if (t.is_near()) CHECK(def == paragon_near_shortcut(t, s));
      if (t.is_skew()) CHECK(def == paragon_skew_shortcut(t, s));
      CHECK(def == is_paragon(t, s));
    }
  }
}

TEST_CASE("paragons of T(Z/4)", "[paragon]") {
  auto t = cat::ring_mod(4);
  auto ps = enumerate_paragons(t);
  CHECK(ps.size() == 7);
  std::set<Subset> expected{{0}, {1}, {2}, {3}, {0, 2}, {1, 3}, {0, 1, 2, 3}};
  CHECK(paragon_set(t) == expected);
  for (auto const& m : ps) {
    CHECK(m.normal);
    CHECK(m.left_closed);
    CHECK(m.right_closed);
    for (auto const& c : subheap_classes(t.heap(), m.members).classes) {
      CHECK(is_normal_subheap(t.heap(), c));
      CHECK(is_left_closed(t, c));
      CHECK(is_right_closed(t, c));
    }
  }
  CHECK_THROWS_AS(quotient(t, {0, 1}), precondition_error);
}

TEST_CASE("paragons are exactly congruence classes", "[paragon]") {
  for (auto const& [name, t] : cat::small()) {
    CAPTURE(name);
    CHECK(paragon_set(t) == congruence_classes(t));
  }
  CHECK(enumerate_congruences_bruteforce(cat::ring_mod(4)).size() == 3);
  CHECK(enumerate_congruences_bruteforce(cat::ring_mod(1)).size() == 1);
  CHECK(enumerate_paragons(cat::ring_mod(1)).size() == 1);
  CHECK_THROWS_AS(enumerate_congruences_bruteforce(cat::ring_mod(9)), size_guard_error);
}

TEST_CASE("congruences of the S3 brace match its ideals", "[paragon]") {
  auto t = cat::trivial_brace(groups::symmetric3());
  // the trivial brace on S3 has ideals {e}, A3 and S3
  CHECK(enumerate_congruences_bruteforce(t).size() == 3);
  CHECK(enumerate_paragons(t).size() == 9);
}

TEST_CASE("translates of paragons", "[paragon]") {
  for (auto const& [name, t] : cat::small()) {
    CAPTURE(name);
    for (auto const& m : enumerate_paragons(t)) {
      auto const base = subheap_classes(t.heap(), m.members);
      for (elem a : m.members)
        for (elem x = 0; x < t.size(); ++x) {
          auto q = translate(t.heap(), m.members, a, x);
          CHECK(is_paragon(t, q));
          CHECK(subheap_classes(t.heap(), q) == base);
        }
    }
  }
}

TEST_CASE("quotients", "[paragon]") {
  SECTION("T(Z/4) by {0,2} is T(Z/2)") {
    auto q = quotient(cat::ring_mod(4), {0, 2});
    CHECK(q.classes.size() == 2);
    CHECK(q.projection == std::vector<elem>{0, 1, 0, 1});
    CHECK(find_pretruss_isomorphism(q.truss, cat::ring_mod(2)));
    CHECK(q.truss.label(0) == "{0,2}");
  }
  SECTION("by the whole carrier") {
    auto t = cat::trivial_brace(groups::symmetric3());
    auto q = quotient(t, Subset::all(6));
    CHECK(q.truss.size() == 1);
  }
  SECTION("projections are homomorphisms and preimages are paragons") {
    for (auto const& [name, t] : cat::small()) {
      CAPTURE(name);
      for (auto const& m : enumerate_paragons(t)) {
        auto q = quotient(t, m.members);
        REQUIRE(is_pretruss_homomorphism(t, q.truss, q.projection));
        for (auto const& mq : enumerate_paragons(q.truss)) {
          auto pre = preimage(q.projection, mq.members);
          CHECK(is_paragon(t, pre));
        }
        for (elem c = 0; c < q.truss.size(); ++c) CHECK(is_paragon(t, preimage(q.projection, {c})));
      }
    }
  }
  SECTION("odd integers modulo 2^n m + 1 at n = 2") {
    auto model = oddint_quotient_model(2);
    CHECK(model.truss.size() == 4);
    auto mg = multiplicative_group(model.truss);
    REQUIRE(mg);
    CHECK(find_group_isomorphism(*mg, groups::units_mod(8)));
  }
}

TEST_CASE("ideals", "[paragon]") {
  auto t = cat::ring_mod(4);
  CHECK(is_ideal(t, {0, 2}));
  CHECK(is_left_ideal(t, Subset::all(4)));
  CHECK(is_ideal(t, Subset::all(4)));
  CHECK_FALSE(is_left_ideal(t, {1, 3}));
  CHECK(t.mul(2, 1) == 2);
  CHECK_THROWS_AS(is_left_ideal(t, {0, 1}), precondition_error);

  for (auto const& [name, u] : {std::pair{"T(Z/4)", cat::ring_mod(4)}, std::pair{"T(Z/6)", cat::ring_mod(6)},
                                std::pair{"trivial", cat::ring_mod(1)}}) {
    CAPTURE(name);
    auto r = leftclosed_contains_ideal_implies_ideal_check(u);
    CHECK(r.holds);
  }
  for (auto const& [name, u] : cat::small()) {
    CAPTURE(name);
    CHECK(leftclosed_contains_ideal_implies_ideal_check(u).holds);
  }
}

TEST_CASE("left absorbers of quotients", "[paragon]") {
  auto t = cat::ring_mod(4);
  auto c = quotient_absorber_criterion(t, {1, 3});
  CHECK(c.quotient_has_left_absorber);
  CHECK(c.translate_is_left_ideal);
  REQUIRE(c.witness);
  CHECK(is_left_ideal(t, translate(t.heap(), {1, 3}, c.witness->first, c.witness->second)));
  CHECK(translate(t.heap(), {1, 3}, 1, 0) == Subset{0, 2});

  auto s3 = cat::trivial_brace(groups::symmetric3());
  for (auto const& m : enumerate_paragons(s3)) {
    auto r = quotient_absorber_criterion(s3, m.members);
    CHECK(r.agree());
    if (m.members.size() < s3.size()) CHECK_FALSE(r.translate_is_left_ideal);
  }
  CHECK(quotient_absorber_criterion(s3, Subset::all(6)).quotient_has_left_absorber);

  for (auto const& [name, u] : cat::small()) {
    CAPTURE(name);
    for (auto const& m : enumerate_paragons(u)) CHECK(quotient_absorber_criterion(u, m.members).agree());
  }
}

TEST_CASE("left ideal census", "[paragon]") {
  auto s3 = count_left_ideals(cat::trivial_brace(groups::symmetric3()));
  CHECK(s3.count() == 1);
  CHECK(s3.brace_by_count);
  CHECK(s3.consistent());

  auto f2 = count_left_ideals(cat::ring_mod(2));
  CHECK(f2.count() == 2);
  CHECK(f2.near_field_by_count);
  CHECK(f2.consistent());

  auto z4 = count_left_ideals(cat::ring_mod(4));
  CHECK(z4.count() > 2);
  CHECK_FALSE(z4.brace_by_count);
  CHECK_FALSE(z4.near_field_by_count);
  CHECK(z4.consistent());

  for (auto const& [name, t] : cat::small()) {
    if (!t.is_near() || !t.unit()) continue;
    CAPTURE(name);
    CHECK(count_left_ideals(t).consistent());
  }
}

TEST_CASE("maximality", "[paragon]") {
  auto t = cat::ring_mod(4);
  CHECK(is_maximal_paragon(t, {0, 2}, Side::left));
  CHECK(is_maximal_paragon(t, {0, 2}, Side::both));
  CHECK_FALSE(is_maximal_paragon(t, Subset::all(4), Side::left));
  CHECK_FALSE(is_maximal_paragon(t, {0}, Side::both));
  CHECK(maximal_translation_check(t, {0, 2}, Side::left).holds);
  CHECK(maximal_translation_check(t, {1, 3}, Side::right).holds);

  for (auto const& [name, u] : cat::small()) {
    if (!u.is_near() && !u.is_skew()) continue;
    CAPTURE(name);
    for (auto const& m : enumerate_paragons(u))
      for (auto side : {Side::left, Side::right, Side::both}) {
        if (!closed_on(u, m.members, side)) continue;
        CHECK(maximal_translation_check(u, m.members, side).holds);
      }
  }
}

TEST_CASE("brace-type quotient criterion", "[paragon]") {
  SECTION("product of a brace and a ring, by P x T(R)") {
    auto t = cat::brace_times_ring();
    // P = {0} x Z/2 in T(B) x T(R); element (a,b) has index 2a + b
    Subset p{0, 1};
    REQUIRE(is_paragon(t, p));
    auto c = brace_type_quotient_criterion(t, p);
    CHECK(c.criterion);
    CHECK(c.direct);
    CHECK(c.agree());
    auto q = quotient(t, p);
    CHECK(find_pretruss_isomorphism(q.truss, cat::trivial_brace_mod(2)));
  }
  SECTION("T(Z/4) by {0,2}") {
    auto c = brace_type_quotient_criterion(cat::ring_mod(4), {0, 2});
    CHECK_FALSE(c.criterion);
    CHECK_FALSE(c.direct);
    CHECK(c.offending_ideal);
  }
  SECTION("singletons in a brace-type truss") {
    auto t = cat::trivial_brace(groups::symmetric3());
    auto c = brace_type_quotient_criterion(t, {0});
    CHECK(c.criterion);
    CHECK(c.direct);
  }
  SECTION("agreement across the catalogue") {
    for (auto const& [name, t] : cat::small()) {
      if (!t.is_near() || !t.unit()) continue;
      CAPTURE(name);
      for (auto const& m : enumerate_paragons(t)) CHECK(brace_type_quotient_criterion(t, m.members).agree());
    }
  }
}

TEST_CASE("quotients by maximal left ideals", "[paragon]") {
  auto t4 = cat::ring_mod(4);
  REQUIRE(is_maximal_left_ideal(t4, {0, 2}));
  CHECK(maximal_ideal_quotient_check(t4, {0, 2}).holds);

  auto t9 = cat::ring_mod(9);
  REQUIRE(is_maximal_left_ideal(t9, {0, 3, 6}));
  auto r = maximal_ideal_quotient_check(t9, {0, 3, 6});
  CHECK(r.holds);
  CHECK(r.cases == 2);

  auto t2 = cat::ring_mod(2);
  CHECK(maximal_ideal_quotient_check(t2, {0}).holds);
  CHECK_THROWS_AS(maximal_ideal_quotient_check(t4, {0}), precondition_error);
}
