#include <random>

#include "actkit/decomposition.hpp"
#include "actkit/error.hpp"
#include "actkit/oracle.hpp"
#include "brute_force.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace actkit;

namespace {
  template <typename Fn>
  Error caught(Fn&& fn) {
    try {
      fn();
    } catch (Error const& e) {
      return e;
    }
    FAIL("expected an actkit::Error");
    return Error(ErrorKind::MalformedDocument, "");
  }

  FiniteAct raw_act(MonoidPtr const& m, std::size_t k, oracle::Table const& t) {
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < k; ++a) {
      labels.push_back("q" + std::to_string(a));
    }
    return FiniteAct(m, std::move(labels), t);
  }

  FiniteAct shuffled(FiniteAct const& act, std::uint64_t seed) {
    std::vector<index_type> perm(act.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto                     table = oracle::relabel(act.monoid().size(), act.action(), perm);
    std::vector<std::string> labels(act.size());
    for (std::size_t a = 0; a < act.size(); ++a) {
      labels[perm[a]] = act.label(a);
    }
    return FiniteAct(act.monoid_ptr(), std::move(labels), std::move(table));
  }

  void check_witness(FiniteAct const& a, FiniteAct const& b, ActMorphism const& f) {
    CHECK(f.source == a);
    CHECK(f.target == b);
    CHECK(is_bijective(f));
    CHECK(is_morphism(f));
    CHECK(is_morphism(inverse(f)));
  }
}  // namespace

TEST_CASE("validate_act") {
  auto z2 = load_monoid(fixtures::z2_document());
  CHECK(fixtures::fixed_point(z2).size() == 1);
  CHECK(fixtures::fixed_point(full_transformation(3)).size() == 1);

  auto swap = fixtures::swap_act();
  CHECK(swap.size() == 2);
  CHECK(swap.act(0, 1) == 1);
  CHECK(to_document(swap) == fixtures::z2_act_document("y", "x"));

  auto bad = caught([] { validate_act(fixtures::z2_act_document("y", "y")); });
  CHECK(bad.kind() == ErrorKind::CompatibilityViolation);
  CHECK(bad.details() == std::vector<std::string>{"x", "g", "g"});

  json no_identity = fixtures::z2_act_document("y", "x");
  no_identity["action"][1][0] = "x";
  auto e = caught([&] { validate_act(no_identity); });
  CHECK(e.kind() == ErrorKind::IdentityAxiomViolation);
  CHECK(e.details() == std::vector<std::string>{"y"});

  CHECK(caught([] { validate_act(fixtures::z2_act_document("y", "z")); }).kind() == ErrorKind::UnknownLabel);
  CHECK(caught([] { validate_act(json{{"elements", {"x"}}}); }).kind() == ErrorKind::MalformedDocument);
  json empty{{"monoid", fixtures::z2_document()}, {"elements", json::array()}, {"action", json::array()}};
  CHECK(caught([&] { validate_act(empty); }).kind() == ErrorKind::EmptyAct);
  json short_row = fixtures::z2_act_document("y", "x");
  short_row["action"][0] = {"x"};
  CHECK(caught([&] { validate_act(short_row); }).kind() == ErrorKind::MalformedDocument);

  json builtin{{"monoid", "builtin:cyclic_group(2)"}, {"elements", {"x"}}, {"action", json::array({json::array({"x", "x"})})}};
  CHECK(validate_act(builtin).monoid().size() == 2);
}

TEST_CASE("regular, free and projective acts") {
  auto t1 = trivial_monoid();
  auto z2 = cyclic_group(2);
  auto t2 = full_transformation(2);

  CHECK(regular_act(t1).size() == 1);
  auto rz2 = regular_act(z2);
  CHECK(rz2.act(0, 1) == 1);
  CHECK(rz2.act(1, 1) == 0);
  auto rt2 = regular_act(t2);
  CHECK(rt2.size() == 4);
  CHECK_NOTHROW(validate_act(to_document(rt2)));

  CHECK(free_act(z2, 1) == coproduct(std::vector<FiniteAct>{rz2}));
  auto f3 = free_act(z2, 3);
  CHECK(f3.size() == 6);
  CHECK(decompose(f3).components.size() == 3);
  CHECK(caught([&] { free_act(z2, 0); }).kind() == ErrorKind::EmptyAct);

  for (auto spec : {"trivial", "cyclic_group(2)", "cyclic_group(3)", "full_transformation(2)", "full_transformation(3)"}) {
    auto m = builtin_monoid(spec);
    for (std::size_t k = 1; k <= 4; ++k) {
      auto dec = decompose(free_act(m, k));
      REQUIRE(dec.components.size() == k);
      for (std::size_t i = 0; i < k; ++i) {
        CHECK(find_isomorphism(dec.component_act(i), regular_act(m)).has_value());
      }
    }
  }

  std::vector<index_type> one{t2->identity()};
  CHECK(find_isomorphism(projective_act(t2, one), rt2).has_value());
  CHECK(caught([&] { projective_act(t2, std::vector<index_type>{}); }).kind() == ErrorKind::EmptyAct);
  std::vector<index_type> consts{t2->index_of("00"), t2->index_of("11")};
  auto                    p = projective_act(t2, consts);
  CHECK(p.size() == 4);
  CHECK_NOTHROW(validate_act(to_document(p)));
  std::vector<index_type> swap{t2->index_of("10")};
  CHECK(caught([&] { projective_act(t2, swap); }).kind() == ErrorKind::NotIdempotent);
}

TEST_CASE("coproduct") {
  auto z2   = load_monoid(fixtures::z2_document());
  auto swap = fixtures::swap_act();
  auto p    = fixtures::fixed_point(z2);
  auto sum  = coproduct(p, swap);
  CHECK(sum.labels() == std::vector<std::string>{"0.p", "1.x", "1.y"});
  CHECK(sum.size() == 3);
  CHECK_NOTHROW(FiniteAct(sum.monoid_ptr(), sum.labels(), sum.action()));
  CHECK(find_isomorphism(coproduct(std::vector<FiniteAct>{swap}), swap).has_value());
  CHECK(caught([&] { coproduct(p, fixtures::fixed_point(cyclic_group(3))); }).kind() == ErrorKind::MonoidMismatch);
  CHECK(caught([] { coproduct(std::vector<FiniteAct>{}); }).kind() == ErrorKind::EmptyAct);
}

TEST_CASE("is_morphism") {
  auto z2   = cyclic_group(2);
  auto swap = fixtures::swap_act();
  CHECK(is_morphism(identity_morphism(swap)));

  // every act maps onto a fixed point
  auto p = fixtures::fixed_point(z2);
  CHECK(is_morphism(ActMorphism{swap, p, {0, 0}}));
  CHECK_FALSE(is_morphism(ActMorphism{swap, swap, {0, 0}}));
  CHECK_FALSE(is_morphism(ActMorphism{swap, swap, {0}}));
  CHECK_THROWS_AS(is_morphism(ActMorphism{p, fixtures::fixed_point(trivial_monoid()), {0}}), Error);
}

TEST_CASE("find_isomorphism basics") {
  auto z2   = cyclic_group(2);
  auto swap = fixtures::swap_act();
  auto f    = find_isomorphism(swap, swap);
  REQUIRE(f);
  check_witness(swap, swap, *f);

  auto two_points = coproduct(fixtures::fixed_point(z2), fixtures::fixed_point(z2));
  CHECK_FALSE(find_isomorphism(swap, two_points).has_value());
  CHECK_FALSE(find_isomorphism(swap, regular_act(z2)) == std::nullopt);
  CHECK_THROWS_AS(find_isomorphism(swap, fixtures::fixed_point(trivial_monoid())), Error);

  // deterministic for fixed inputs
  auto g = find_isomorphism(regular_act(z2), swap);
  CHECK(g->map == find_isomorphism(regular_act(z2), swap)->map);
}

TEST_CASE("canonical forms agree with brute-force isomorphism on raw tables") {
  // Every valid table (not only one per class) of size <= 3, so that equal
  // forms must be reached from differently labelled inputs.
  for (auto spec : {"trivial", "cyclic_group(2)", "cyclic_group(3)", "full_transformation(2)"}) {
    auto const             m = builtin_monoid(spec);
    std::vector<FiniteAct> acts;
    for (std::size_t k = 1; k <= 3; ++k) {
      oracle::for_each_act_table(*m, k, [&](oracle::Table const& t) { acts.push_back(raw_act(m, k, t)); });
    }
    std::vector<CanonicalForm> forms;
    for (auto const& a : acts) {
      forms.push_back(canonical_form(a));
    }
    std::size_t disagreements = 0;
    for (std::size_t i = 0; i < acts.size(); ++i) {
      for (std::size_t j = i; j < acts.size(); ++j) {
        bool brute = oracle::isomorphic_by_bijections(m->size(), acts[i].size(), acts[i].action(), acts[j].size(),
                                                      acts[j].action());
        disagreements += brute != (forms[i] == forms[j]);
      }
    }
    CAPTURE(spec);
    CHECK(disagreements == 0);
  }
}

TEST_CASE("canonical_form is a normal form") {
  auto t2 = full_transformation(2);
  auto one = canonical_form(fixtures::fixed_point(t2));
  CHECK(one.size == 1);
  CHECK(one.table == std::vector<index_type>(4, 0));

  for (auto const& act : enumerate_acts(t2, 3)) {
    auto form = canonical_form(act);
    CHECK(canonical_form(to_act(t2, form)) == form);
    CHECK(to_act(t2, form) == act);
  }
  auto f = canonical_form(free_act(t2, 2));
  CHECK(canonical_form(to_act(t2, f)) == f);
  CHECK(validate_act(to_document(t2, f)) == to_act(t2, f));
}

TEST_CASE("isomorphism witnesses compose into an equivalence relation") {
  auto const m    = cyclic_group(2);
  auto const acts = enumerate_acts(m, 3);
  for (auto const& a : acts) {
    auto b = shuffled(a, 7);
    auto c = shuffled(a, 11);
    auto ab = find_isomorphism(a, b);
    auto bc = find_isomorphism(b, c);
    REQUIRE(ab);
    REQUIRE(bc);
    check_witness(a, b, *ab);
    check_witness(b, a, inverse(*ab));
    auto ac = compose(*ab, *bc);
    check_witness(a, c, ac);
    CHECK(find_isomorphism(a, a).has_value());
  }
}

TEST_CASE("find_isomorphism scales to transformation monoid fixtures") {
  auto t3 = full_transformation(3);
  auto x  = coproduct(free_act(t3, 2), projective_act(t3, idempotents(*t3)));
  auto y  = shuffled(x, 3);
  auto f  = find_isomorphism(x, y);
  REQUIRE(f);
  check_witness(x, y, *f);

  auto z = coproduct(free_act(t3, 3), projective_act(t3, std::vector<index_type>{t3->index_of("000")}));
  CHECK_FALSE(find_isomorphism(x, shuffled(coproduct(z, fixtures::fixed_point(t3)), 5)).has_value());

  auto many = fixtures::discrete_act(t3, 40);
  CHECK(find_isomorphism(many, shuffled(many, 9)).has_value());

  // one component with 14 interchangeable points over T2: each fixed by the
  // swap and sent to a common sink by both constants
  auto                     t2 = full_transformation(2);
  std::size_t const        k  = 14;
  std::vector<std::string> labels{"z"};
  std::vector<index_type>  action(4, 0);
  for (std::size_t i = 1; i <= k; ++i) {
    labels.push_back("a" + std::to_string(i));
    for (index_type s = 0; s < 4; ++s) {
      action.push_back(t2->label(s) == "01" || t2->label(s) == "10" ? static_cast<index_type>(i) : 0);
    }
  }
  FiniteAct star(t2, labels, action);
  CHECK(is_indecomposable(star));
  CHECK(find_isomorphism(star, shuffled(star, 1)).has_value());
}

TEST_CASE("cyclic and simple acts") {
  auto z2 = cyclic_group(2);
  auto p  = fixtures::fixed_point(z2);
  CHECK(is_cyclic(p));
  CHECK(is_simple(p));
  for (auto spec : {"trivial", "cyclic_group(3)", "full_transformation(2)", "full_transformation(3)"}) {
    CHECK(is_cyclic(regular_act(builtin_monoid(spec))));
  }
  CHECK_FALSE(is_simple(regular_act(full_transformation(2))));
  CHECK(is_simple(regular_act(cyclic_group(3))));
  auto two = coproduct(p, p);
  CHECK_FALSE(is_cyclic(two));
  CHECK_FALSE(is_simple(two));

  for (auto spec : {"cyclic_group(2)", "full_transformation(2)"}) {
    for (auto const& a : enumerate_acts(builtin_monoid(spec), 3)) {
      if (is_cyclic(a)) {
        CHECK(decompose(a).components.size() == 1);
      }
      if (is_simple(a)) {
        CHECK(is_cyclic(a));
      }
    }
  }
}
