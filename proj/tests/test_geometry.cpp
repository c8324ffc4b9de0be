#include <doctest.h>

#include "orderdim/classify.hpp"
#include "orderdim/dimension.hpp"
#include "orderdim/geometry.hpp"
#include "support/build.hpp"
#include "support/oracle.hpp"

using namespace orderdim;
using build::rel;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

/// Precedence of every element pair matches the closure, checked with the set oracle.
bool biconditional(const Relation& r, const std::vector<std::vector<OpenInterval>>& boxes) {
  const oracle::Rel c = oracle::closure(oracle::from(r));
  for (int x = 0; x < c.n; ++x)
    for (int y = 0; y < c.n; ++y) {
      bool all = true;
      const auto& bx = boxes[static_cast<std::size_t>(x)];
      const auto& by = boxes[static_cast<std::size_t>(y)];
      for (std::size_t k = 0; k < bx.size(); ++k) all = all && precedes(bx[k], by[k]);
      if (all != c.has(x, y)) return false;
    }
  return true;
}

// Boxes of the tuple space of an interval realizer: tuple t has, in
// coordinate j, the interval of its j-th entry in the j-th member.
struct TupleBoxes {
  std::vector<std::vector<OpenInterval>> box;
};

TupleBoxes tuple_boxes(const Relation& product, std::span<const Relation> family,
                       const std::vector<GeometricRep>& reps) {
  TupleBoxes out;
  for (Index t = 0; t < product.size(); ++t) {
    const auto coords = tuple_coordinates(family, t);
    std::vector<OpenInterval> b;
    for (std::size_t j = 0; j < coords.size(); ++j) b.push_back(reps[j].intervals[coords[j]].front());
    out.box.push_back(std::move(b));
  }
  return out;
}

/// The tie-broken order on tuples: t before u in coordinate i when the
/// i-th intervals are ordered, or they coincide and at the first
/// coordinate k where the intervals differ, u's interval precedes t's.
bool tie_broken(const TupleBoxes& tb, std::size_t i, Index t, Index u) {
  const auto& x = tb.box[t];
  const auto& y = tb.box[u];
  if (t == u) return true;
  if (precedes(x[i], y[i])) return true;
  if (!(x[i] == y[i])) return false;
  std::size_t k = 0;
  while (k < x.size() && x[k] == y[k]) ++k;
  return k < x.size() && precedes(y[k], x[k]);
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("rationals print as p/q") {
    CHECK(to_string(q(3)) == "3/1");
    CHECK(to_string(q(-2, 4)) == "-1/2");
    CHECK(rational_from_string("2/3") == q(2, 3));
    CHECK(rational_from_string("5") == q(5));
    CHECK_THROWS_AS(rational_from_string("1/0"), Error);
    CHECK_THROWS_AS(rational_from_string("abc"), Error);
  }

  TEST_CASE("interval representation of a chain") {
    const GeometricRep rep = interval_representation(build::chain(3));
    CHECK(rep.kind == RepKind::Interval);
    for (std::int64_t i = 0; i < 3; ++i) {
      CHECK(rep.intervals[static_cast<std::size_t>(i)].front() == OpenInterval{q(i), q(i + 1)});
    }
    CHECK(verify_representation(rep));
  }

  TEST_CASE("interval representation of an antichain and of 2+2") {
    const GeometricRep rep = interval_representation(build::antichain(2));
    CHECK(rep.intervals[0].front() == OpenInterval{q(0), q(1)});
    CHECK(rep.intervals[1].front() == OpenInterval{q(0), q(1)});
    try {
      interval_representation(build::two_plus_two());
      FAIL("2+2 accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotIntervalOrder);
      REQUIRE(e.witness());
      CHECK(e.witness()->kind == WitnessKind::TwoPlusTwo);
    }
  }

  TEST_CASE("unit interval representations") {
    const GeometricRep chain = unit_interval_representation(rel(2, {{1, 2}}));
    CHECK(verify_representation(chain));
    CHECK(precedes(chain.intervals[0].front(), chain.intervals[1].front()));
    for (const auto& iv : chain.intervals) CHECK(iv.front().right - iv.front().left == q(1));

    const GeometricRep anti = unit_interval_representation(build::antichain(2));
    CHECK(verify_representation(anti));
    CHECK_FALSE(precedes(anti.intervals[0].front(), anti.intervals[1].front()));
    CHECK_FALSE(precedes(anti.intervals[1].front(), anti.intervals[0].front()));

    try {
      unit_interval_representation(build::three_plus_one());
      FAIL("3+1 accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotSemiorder);
    }
  }

  TEST_CASE("triangle representations") {
    const GeometricRep lin = triangle_representation(build::chain(3), PartnerClass::IntervalOrder);
    CHECK(lin.apex == std::vector<Rational>{q(0), q(1), q(2)});
    for (std::int64_t i = 0; i < 3; ++i)
      CHECK(lin.intervals[static_cast<std::size_t>(i)].front() == OpenInterval{q(i), q(i + 1)});
    CHECK(verify_representation(lin));

    const Relation r = build::two_plus_two();
    for (PartnerClass p : {PartnerClass::IntervalOrder, PartnerClass::Semiorder}) {
      const GeometricRep rep = triangle_representation(r, p);
      // L = c<d<a<b
      CHECK(rep.apex == std::vector<Rational>{q(2), q(3), q(0), q(1)});
      CHECK(verify_representation(rep));
    }
    try {
      triangle_representation(rel(2, {{1, 2}, {2, 1}}), PartnerClass::IntervalOrder);
      FAIL("cyclic input accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::CyclicInput);
    }
  }

  TEST_CASE("exhaustive representations over transitive irreflexive relations on four points") {
    const auto posets = oracle::posets_above(oracle::Rel{4, {}});
    CHECK(posets.size() == 219);
    for (const auto& p : posets) {
      const Relation r = oracle::to_relation(p);
      if (oracle::interval_order(p)) {
        const GeometricRep rep = interval_representation(r);
        CHECK(biconditional(r, rep.intervals));
        CHECK(verify_representation(rep));
      } else {
        CHECK_THROWS_AS(interval_representation(r), Error);
      }
      if (oracle::semiorder(p)) {
        const GeometricRep rep = unit_interval_representation(r);
        CHECK(biconditional(r, rep.intervals));
        for (const auto& iv : rep.intervals) CHECK(iv.front().right - iv.front().left == q(1));
      } else {
        CHECK_THROWS_AS(unit_interval_representation(r), Error);
      }
    }
  }

  TEST_CASE("tampered representations fail verification") {
    GeometricRep rep = interval_representation(build::chain(3));
    rep.intervals[0].front().right = q(5, 2);
    CHECK_FALSE(verify_representation(rep));
    rep = unit_interval_representation(build::chain(2));
    rep.intervals[0].front().right += q(1, 7);
    CHECK_FALSE(verify_representation(rep));
  }

  TEST_CASE("strict and componentwise products") {
    const Relation c = rel(2, {{1, 2}});
    const std::vector<Relation> family{c, c};
    const Relation strict = product_relation(family, ProductMode::Strict);
    CHECK(strict.elements() == std::vector<std::string>{"(x1,x1)", "(x1,x2)", "(x2,x1)", "(x2,x2)"});
    CHECK(strict.pairs() == std::vector<Pair>{{0, 3}});

    const Relation comp = product_relation(family, ProductMode::Componentwise);
    CHECK(comp.pair_count() == 9);
    CHECK(comp.contains(0, 1));
    CHECK_FALSE(comp.contains(1, 2));

    try {
      product_relation(std::vector<Relation>{}, ProductMode::Strict);
      FAIL("empty family accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::EmptyFamily);
    }
    try {
      product_relation(std::vector<Relation>(3, build::chain(20)), ProductMode::Strict);
      FAIL("tuple cap not enforced");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::SizeLimit);
    }
  }

  TEST_CASE("product linearization") {
    const Relation single = build::chain(3);
    const Relation lin1 = product_linearization(std::vector<Relation>{single}, 0);
    CHECK(oracle::from(lin1) == oracle::from(reflexive_closure(single)));

    const std::vector<Relation> family{rel(2, {{1, 2}}), rel(2, {{2, 1}})};
    const Relation lin = product_linearization(family, 0);
    const Index a = tuple_index(family, std::vector<Index>{0, 0});
    const Index b = tuple_index(family, std::vector<Index>{0, 1});
    CHECK(lin.contains(a, b));
    CHECK_FALSE(lin.contains(b, a));
    for (Index t = 0; t < lin.size(); ++t) CHECK(lin.contains(t, t));
    CHECK(is_linear_order(lin));
    CHECK_THROWS_AS(product_linearization(family, 2), Error);
    try {
      product_linearization(std::vector<Relation>{rel(2, {})}, 0);
      FAIL("non-linear member accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::MemberNotLinear);
    }
  }

  TEST_CASE("box embeddings") {
    const Relation io = rel(4, {{1, 2}, {3, 4}, {1, 4}});
    Realizer one;
    one.target = io;
    one.members = {io};
    one.member_class = MemberClass::IntervalOrder;
    one.is_linear = {false};
    one.provenance = {std::nullopt};
    const GeometricRep boxes = box_embedding(io, one);
    const GeometricRep plain = interval_representation(io);
    CHECK(boxes.intervals == plain.intervals);

    const Relation r = build::two_plus_two();
    const DimCertificate cert = interval_dim(r);
    const GeometricRep rep = box_embedding(r, cert.witness);
    CHECK(rep.kind == RepKind::Box);
    CHECK(rep.intervals.front().size() == 2);
    CHECK(verify_representation(rep));
    CHECK(biconditional(r, rep.intervals));

    Realizer tampered = cert.witness;
    tampered.members.front().erase(tampered.members.front().pairs().front().first,
                                   tampered.members.front().pairs().front().second);
    try {
      box_embedding(r, tampered);
      FAIL("tampered realizer accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::RealizerInvalid);
    }
  }

  TEST_CASE("box embeddings of random acyclic relations") {
    std::mt19937 rng(53);
    for (int t = 0; t < 40; ++t) {
      const Relation r = oracle::to_relation(oracle::random_dag(rng, 1 + t % 6));
      const DimCertificate cert = interval_dim(r);
      const GeometricRep rep = box_embedding(r, cert.witness);
      CHECK(biconditional(r, rep.intervals));
      CHECK(verify_representation(rep));
    }
  }

  TEST_CASE("tie-broken coordinate orders on the tuple space") {
    std::mt19937 rng(59);
    int checked = 0;
    for (int t = 0; t < 400 && checked < 8; ++t) {
      const Relation r = t == 0 ? build::two_plus_two() : oracle::to_relation(oracle::random_dag(rng, 4 + t % 2));
      const DimCertificate cert = interval_dim(r);
      const auto& family = cert.witness.members;
      if (family.size() < 2) continue;
      ++checked;
      std::vector<GeometricRep> reps;
      for (const auto& m : family) reps.push_back(interval_representation(m));
      const Relation strict = product_relation(family, ProductMode::Strict);
      const TupleBoxes tb = tuple_boxes(strict, family, reps);
      const std::size_t n = strict.size();

      // Strict product of the members = coordinate-wise interval precedence.
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
          bool all = true;
          for (std::size_t k = 0; k < family.size(); ++k) all = all && precedes(tb.box[a][k], tb.box[b][k]);
          CHECK(all == strict.contains(a, b));
        }

      for (std::size_t i = 0; i < family.size(); ++i) {
        for (Index a = 0; a < n; ++a)
          for (Index b = 0; b < n; ++b) {
            const bool ab = tie_broken(tb, i, a, b);
            if (strict.contains(a, b)) CHECK(ab);
            if (a != b && ab) CHECK_FALSE(tie_broken(tb, i, b, a));
            if (!ab) continue;
            for (Index c = 0; c < n; ++c)
              if (tie_broken(tb, i, b, c)) CHECK(tie_broken(tb, i, a, c));
          }
      }
      // Off the diagonal the coordinate orders meet exactly in the strict product.
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
          if (a == b) continue;
          bool all = true;
          for (std::size_t i = 0; i < family.size(); ++i) all = all && tie_broken(tb, i, a, b);
          CHECK(all == strict.contains(a, b));
        }
    }
    CHECK(checked == 8);
  }
}
