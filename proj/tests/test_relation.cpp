#include <doctest.h>

#include "orderdim/relation.hpp"
#include "support/build.hpp"
#include "support/oracle.hpp"

using namespace orderdim;
using build::rel;

TEST_SUITE("relation") {
  TEST_CASE("transitive closure examples") {
    CHECK(transitive_closure(rel(3, {{1, 2}, {2, 3}})) == rel(3, {{1, 2}, {2, 3}, {1, 3}}));
    CHECK(transitive_closure(rel(2, {})) == rel(2, {}));
    CHECK(transitive_closure(rel(2, {{1, 2}, {2, 1}})) == rel(2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
  }

  TEST_CASE("reflexive closure and asymmetric part") {
    CHECK(reflexive_closure(rel(2, {})) == rel(2, {{1, 1}, {2, 2}}));
    CHECK(reflexive_closure(rel(2, {{1, 2}})) == rel(2, {{1, 1}, {2, 2}, {1, 2}}));
    const Relation diag = Relation::diagonal_like(rel(3, {}));
    CHECK(reflexive_closure(diag) == diag);

    CHECK(asymmetric_part(rel(3, {{1, 2}, {2, 1}, {1, 3}})) == rel(3, {{1, 3}}));
    CHECK(asymmetric_part(rel(2, {{1, 1}, {1, 2}})) == rel(2, {{1, 2}}));
    CHECK(asymmetric_part(rel(2, {})) == rel(2, {}));
  }

  TEST_CASE("acyclicity with cycle witnesses") {
    CHECK(is_acyclic(rel(3, {{1, 2}, {2, 3}})).holds);

    const Relation two_cycle = rel(2, {{1, 2}, {2, 1}});
    const PropertyCheck c = is_acyclic(two_cycle);
    REQUIRE_FALSE(c.holds);
    REQUIRE(c.witness);
    CHECK(c.witness->kind == WitnessKind::Cycle);
    CHECK(c.witness->members == std::vector<std::string>{"x1", "x2", "x1"});
    CHECK(verify_witness(two_cycle, *c.witness));

    const Relation loop = rel(1, {{1, 1}});
    const PropertyCheck l = is_acyclic(loop);
    REQUIRE_FALSE(l.holds);
    CHECK(l.witness->members == std::vector<std::string>{"x1", "x1"});
  }

  TEST_CASE("transitive antisymmetry") {
    CHECK(is_transitively_antisymmetric(rel(2, {{1, 1}, {1, 2}})).holds);

    const PropertyCheck sym = is_transitively_antisymmetric(rel(2, {{1, 2}, {2, 1}}));
    REQUIRE_FALSE(sym.holds);
    CHECK(sym.witness->kind == WitnessKind::SymmetricPair);
    CHECK(sym.witness->members == std::vector<std::string>{"x1", "x2"});

    const Relation tri = rel(3, {{1, 2}, {2, 3}, {3, 1}});
    const PropertyCheck t = is_transitively_antisymmetric(tri);
    REQUIRE_FALSE(t.holds);
    CHECK(verify_witness(tri, *t.witness));
  }

  TEST_CASE("extension examples") {
    const Relation r1 = rel(4, {{1, 2}, {3, 4}});
    CHECK(is_extension(r1, rel(4, {{1, 2}, {3, 4}, {1, 4}})));
    CHECK(is_extension(r1, r1));
    CHECK_FALSE(is_extension(rel(2, {{1, 2}}), rel(2, {{1, 2}, {2, 1}})));
  }

  TEST_CASE("transitive reduction keeps only cover pairs") {
    CHECK(transitive_reduction(build::chain(4)) == rel(4, {{1, 2}, {2, 3}, {3, 4}}));
    CHECK(transitive_reduction(rel(3, {})) == rel(3, {}));
  }

  TEST_CASE("ground set handling") {
    CHECK_THROWS_AS(Relation(std::vector<std::string>{"a", "a"}), Error);
    try {
      require_same_ground_set(rel(2, {}), rel(3, {}));
      FAIL("expected GroundSetMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::GroundSetMismatch);
    }
    Relation r = Relation::numbered(3);
    r.insert_labels("x3", "x1");
    CHECK(r.contains(2, 0));
    r.erase(2, 0);
    CHECK(r.empty_pairs());
    CHECK_THROWS_AS(r.index_of("nope"), Error);
  }

  TEST_CASE("tampered witnesses are rejected") {
    const Relation two_cycle = rel(2, {{1, 2}, {2, 1}});
    CHECK_FALSE(verify_witness(two_cycle, Witness{WitnessKind::Cycle, {"x1", "x2"}}));
    CHECK_FALSE(verify_witness(rel(2, {{1, 2}}), Witness{WitnessKind::Cycle, {"x1", "x2", "x1"}}));
    CHECK_FALSE(verify_witness(rel(2, {{1, 2}}), Witness{WitnessKind::SymmetricPair, {"x1", "x2"}}));
  }

  TEST_CASE("closure, acyclicity and reduction agree with the set oracle") {
    std::mt19937 rng(11);
    for (int t = 0; t < 400; ++t) {
      const int n = 1 + t % 7;
      const oracle::Rel o = oracle::random_relation(rng, n, t % 2 ? 0.15 : 0.35);
      const Relation r = oracle::to_relation(o);
      CHECK(oracle::from(transitive_closure(r)) == oracle::closure(o));

      const PropertyCheck acyclic = is_acyclic(r);
      CHECK(acyclic.holds == oracle::acyclic(o));
      if (!acyclic.holds) CHECK(verify_witness(r, *acyclic.witness));

      const PropertyCheck ta = is_transitively_antisymmetric(r);
      CHECK(ta.holds == oracle::antisymmetric(oracle::closure(o)));
      if (!ta.holds) CHECK(verify_witness(r, *ta.witness));

      oracle::Rel p{n, oracle::asymmetric_part(o)};
      CHECK(oracle::from(asymmetric_part(r)) == p);

      if (acyclic.holds) {
        const Relation red = transitive_reduction(r);
        CHECK(transitive_closure(red) == transitive_closure(r));
        // No reduction edge is implied by the others.
        for (auto [a, b] : red.pairs()) {
          Relation without = red;
          without.erase(a, b);
          CHECK_FALSE(transitive_closure(without).contains(a, b));
        }
      }
    }
  }
}
