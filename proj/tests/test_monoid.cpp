#include <map>

#include "actkit/decomposition.hpp"
#include "actkit/error.hpp"
#include "brute_force.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace actkit;

namespace {
  template <typename Fn>
  ErrorKind error_kind(Fn&& fn) {
    try {
      fn();
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("expected an actkit::Error");
    return ErrorKind::MalformedDocument;
  }

  void check_monoid_laws(FiniteMonoid const& m) {
    for (index_type s = 0; s < m.size(); ++s) {
      CHECK(m.product(m.identity(), s) == s);
      CHECK(m.product(s, m.identity()) == s);
      for (index_type t = 0; t < m.size(); ++t) {
        for (index_type u = 0; u < m.size(); ++u) {
          REQUIRE(m.product(m.product(s, t), u) == m.product(s, m.product(t, u)));
        }
      }
    }
  }
}  // namespace

TEST_CASE("load_monoid accepts the trivial monoid and Z2") {
  auto trivial = load_monoid(json{{"elements", {"1"}}, {"identity", "1"}, {"table", {{"1"}}}});
  CHECK(trivial->size() == 1);
  auto z2 = load_monoid(fixtures::z2_document());
  CHECK(z2->size() == 2);
  CHECK(z2->product(1, 1) == 0);
  CHECK(to_document(*z2) == fixtures::z2_document());
}

TEST_CASE("load_monoid rejects malformed documents") {
  CHECK(error_kind([] { load_monoid(json::array()); }) == ErrorKind::MalformedDocument);
  CHECK(error_kind([] { load_monoid(json{{"elements", {"1"}}, {"table", {{"1"}}}}); })
        == ErrorKind::MalformedDocument);
  CHECK(error_kind([] { load_monoid(json::parse(R"({"elements": ["1", "1"], "identity": "1", "table": [["1", "1"], ["1", "1"]]})")); })
        == ErrorKind::MalformedDocument);
  CHECK(error_kind([] { load_monoid(json::parse(R"({"elements": ["1", "g"], "identity": "1", "table": [["1", "g"]]})")); })
        == ErrorKind::MalformedDocument);
  CHECK(error_kind([] { load_monoid(json{{"elements", {"1"}}, {"identity", "e"}, {"table", {{"1"}}}}); })
        == ErrorKind::UnknownLabel);
  CHECK(error_kind([] { load_monoid(json{{"elements", {"1"}}, {"identity", "1"}, {"table", {{"z"}}}}); })
        == ErrorKind::UnknownLabel);
  // "g" is not an identity of this (associative) table
  CHECK(error_kind([] {
          load_monoid(json::parse(R"({"elements": ["1", "g"], "identity": "g", "table": [["1", "g"], ["g", "1"]]})"));
        })
        == ErrorKind::MissingIdentity);
}

TEST_CASE("load_monoid names the first non-associative triple") {
  // Brute force over every completion of a 3×3 table on {1, a, b} with 1 as
  // identity; take the first with (a·a)·b != a·(a·b).
  std::vector<std::string> const labels{"1", "a", "b"};
  bool                           found = false;
  for (int code = 0; code < 81 && !found; ++code) {
    // free entries: aa, ab, ba, bb
    int const  aa = code % 3, ab = (code / 3) % 3, ba = (code / 9) % 3, bb = (code / 27) % 3;
    int const  tab[3][3] = {{0, 1, 2}, {1, aa, ab}, {2, ba, bb}};
    if (tab[tab[1][1]][2] == tab[1][tab[1][2]]) {
      continue;
    }
    found = true;
    // expected triple: least (s, t, u) violating associativity
    std::vector<std::string> expected;
    for (int s = 0; s < 3 && expected.empty(); ++s) {
      for (int t = 0; t < 3 && expected.empty(); ++t) {
        for (int u = 0; u < 3 && expected.empty(); ++u) {
          if (tab[tab[s][t]][u] != tab[s][tab[t][u]]) {
            expected = {labels[s], labels[t], labels[u]};
          }
        }
      }
    }
    json rows = json::array();
    for (auto const& row : tab) {
      rows.push_back({labels[row[0]], labels[row[1]], labels[row[2]]});
    }
    try {
      load_monoid(json{{"elements", labels}, {"identity", "1"}, {"table", rows}});
      FAIL("non-associative table accepted");
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::NonAssociative);
      CHECK(e.details() == expected);
    }
  }
  CHECK(found);
}

TEST_CASE("builtin monoids") {
  CHECK(builtin_monoid("trivial")->size() == 1);
  CHECK(builtin_monoid("builtin:trivial")->size() == 1);

  auto c3 = builtin_monoid("cyclic_group(3)");
  REQUIRE(c3->size() == 3);
  for (index_type s = 0; s < 3; ++s) {
    bool invertible = false;
    for (index_type t = 0; t < 3; ++t) {
      invertible = invertible || (c3->product(s, t) == c3->identity() && c3->product(t, s) == c3->identity());
    }
    CHECK(invertible);
  }

  CHECK(error_kind([] { builtin_monoid("full_transformation(4)"); }) == ErrorKind::UnsupportedParams);
  CHECK(error_kind([] { builtin_monoid("cyclic_group(0)"); }) == ErrorKind::UnsupportedParams);
  CHECK(error_kind([] { builtin_monoid("cyclic_group(x)"); }) == ErrorKind::UnsupportedParams);
  CHECK(error_kind([] { builtin_monoid("bicyclic"); }) == ErrorKind::UnsupportedParams);

  for (auto spec : {"trivial", "cyclic_group(1)", "cyclic_group(4)", "full_transformation(1)", "full_transformation(2)",
                    "full_transformation(3)"}) {
    CAPTURE(spec);
    check_monoid_laws(*builtin_monoid(spec));
  }
  CHECK(builtin_monoid("full_transformation(3)")->size() == 27);
}

TEST_CASE("full_transformation(2) composes as apply-left-then-right") {
  auto t2 = full_transformation(2);
  REQUIRE(t2->size() == 4);
  // every map {0,1} -> {0,1} written as its image word
  std::map<std::string, std::vector<int>> maps{{"01", {0, 1}}, {"10", {1, 0}}, {"00", {0, 0}}, {"11", {1, 1}}};
  for (auto const& [s, fs] : maps) {
    for (auto const& [t, ft] : maps) {
      std::string word;
      for (int x : {0, 1}) {
        word += static_cast<char>('0' + ft[fs[x]]);
      }
      CHECK(t2->label(t2->product(t2->index_of(s), t2->index_of(t))) == word);
    }
  }
  CHECK(t2->label(t2->identity()) == "01");
}

TEST_CASE("generators and factorisation cover the monoid") {
  for (auto spec : {"trivial", "cyclic_group(5)", "full_transformation(2)", "full_transformation(3)"}) {
    auto m = builtin_monoid(spec);
    CHECK(m->bfs_order().size() == m->size());
    for (index_type s = 0; s < m->size(); ++s) {
      if (s == m->identity()) {
        continue;
      }
      auto [p, g] = m->factorisation()[s];
      CHECK(m->product(p, g) == s);
    }
  }
  CHECK(trivial_monoid()->generators().empty());
  CHECK(cyclic_group(5)->generators().size() == 1);
}

TEST_CASE("idempotents") {
  CHECK(idempotents(*trivial_monoid()) == std::vector<index_type>{0});
  CHECK(idempotents(*cyclic_group(2)) == std::vector<index_type>{0});

  auto t2 = full_transformation(2);
  std::vector<std::string> labels;
  for (auto e : idempotents(*t2)) {
    labels.push_back(t2->label(e));
  }
  CHECK(labels == std::vector<std::string>{"01", "00", "11"});

  for (auto spec : {"cyclic_group(6)", "full_transformation(3)"}) {
    auto m  = builtin_monoid(spec);
    auto es = idempotents(*m);
    CHECK(std::find(es.begin(), es.end(), m->identity()) != es.end());
    for (index_type s = 0; s < m->size(); ++s) {
      CHECK((std::find(es.begin(), es.end(), s) != es.end()) == (m->product(s, s) == s));
    }
  }
}

TEST_CASE("principal_right_act") {
  auto t2 = full_transformation(2);
  CHECK(principal_right_act(t2, t2->identity()) == regular_act(t2));
  CHECK(principal_right_act(trivial_monoid(), 0).size() == 1);

  auto c0 = principal_right_act(t2, t2->index_of("00"));
  CHECK(c0.labels() == std::vector<std::string>{"00", "11"});
  // the carrier is c0·S inside the monoid and the action is multiplication
  for (index_type a = 0; a < c0.size(); ++a) {
    for (index_type s = 0; s < t2->size(); ++s) {
      CHECK(c0.label(c0.act(a, s)) == t2->label(t2->product(t2->index_of(c0.label(a)), s)));
    }
  }
  CHECK_NOTHROW(FiniteAct(c0.monoid_ptr(), c0.labels(), c0.action()));
  CHECK(error_kind([&] { principal_right_act(t2, t2->index_of("10")); }) == ErrorKind::NotIdempotent);
}

TEST_CASE("idempotent_classes") {
  CHECK(idempotent_classes(trivial_monoid()) == std::vector<std::vector<index_type>>{{0}});
  CHECK(idempotent_classes(cyclic_group(4)) == std::vector<std::vector<index_type>>{{0}});

  // T2: compare eS with fS by trying every bijection
  auto t2 = full_transformation(2);
  auto es = idempotents(*t2);
  auto classes = idempotent_classes(t2);
  for (auto e : es) {
    for (auto f : es) {
      auto pe = principal_right_act(t2, e);
      auto pf = principal_right_act(t2, f);
      bool brute = oracle::isomorphic_by_bijections(t2->size(), pe.size(), pe.action(), pf.size(), pf.action());
      bool same_block = std::any_of(classes.begin(), classes.end(), [&](auto const& b) {
        return std::count(b.begin(), b.end(), e) + std::count(b.begin(), b.end(), f) == 2;
      });
      CHECK(brute == same_block);
    }
  }
  CHECK(classes.size() == 2);

  // In T3, eS ≅ fS exactly when e and f have the same rank.
  auto t3 = full_transformation(3);
  auto rank = [&](index_type e) {
    auto const& w = t3->label(e);
    return std::set<char>(w.begin(), w.end()).size();
  };
  auto blocks = idempotent_classes(t3);
  CHECK(blocks.size() == 3);
  for (auto const& b : blocks) {
    for (auto e : b) {
      CHECK(rank(e) == rank(b.front()));
    }
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      CHECK(rank(blocks[i].front()) != rank(blocks[j].front()));
    }
  }
}
