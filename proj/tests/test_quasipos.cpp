#include <doctest.h>

#include <algorithm>

#include "bingtau/errors.hpp"
#include "bingtau/quasipos.hpp"

using namespace bingtau;

namespace {

bool cites(const std::vector<std::string>& rules, const char* needle) {
  return std::any_of(rules.begin(), rules.end(), [&](const std::string& r) {
    return r.find(needle) != std::string::npos;
  });
}

}  // namespace

TEST_CASE("annulus_qp reads TB from the database") {
  const KnotDatabase db = KnotDatabase::builtin();
  CHECK(annulus_qp(Annulus(unknot(), -1), db).state == SqpState::ProvenYes);
  CHECK(annulus_qp(Annulus(unknot(), 0), db).state == SqpState::ProvenNo);
  CHECK(annulus_qp(Annulus(make_base("4_1"), 0), db).state == SqpState::Unknown);
  CHECK(annulus_qp(Annulus(make_base("mystery"), 0), db).state ==
        SqpState::Unknown);
  // TB is stored only for plain names; a decorated core stays unknown.
  CHECK(annulus_qp(Annulus(mirror(make_base("RHT")), -9), db).state ==
        SqpState::Unknown);
  CHECK_THROWS_AS(Annulus(unknot(), kMaxTwist + 1), TwistRangeError);
}

TEST_CASE("plumbing_qp is a three-valued conjunction") {
  const KnotDatabase db = KnotDatabase::builtin();
  const PlumbingSurface wh_surface = PlumbingSurface::plumb(
      PlumbingSurface(Annulus(make_base("RHT"), 0)),
      PlumbingSurface(Annulus(unknot(), -1)));
  CHECK(plumbing_qp(wh_surface, db).state == SqpState::ProvenYes);

  const PlumbingSurface bad = PlumbingSurface::plumb(
      PlumbingSurface(Annulus(make_base("RHT"), 0)),
      PlumbingSurface(Annulus(unknot(), 0)));
  CHECK(plumbing_qp(bad, db).state == SqpState::ProvenNo);

  const PlumbingSurface unknown(Annulus(make_base("4_1"), 0));
  CHECK(plumbing_qp(unknown, db).state == SqpState::Unknown);

  // Monotone: adding a proven-yes leaf never changes a proven answer;
  // adding a proven-no leaf forces proven-no.
  const PlumbingSurface yes_leaf(Annulus(unknot(), -1));
  CHECK(plumbing_qp(PlumbingSurface::plumb(wh_surface, yes_leaf), db).state ==
        SqpState::ProvenYes);
  CHECK(plumbing_qp(PlumbingSurface::plumb(bad, yes_leaf), db).state ==
        SqpState::ProvenNo);
  CHECK(plumbing_qp(PlumbingSurface::plumb(unknown, yes_leaf), db).state ==
        SqpState::Unknown);
  const PlumbingSurface no_leaf(Annulus(unknot(), 5));
  CHECK(plumbing_qp(PlumbingSurface::plumb(wh_surface, no_leaf), db).state ==
        SqpState::ProvenNo);
  CHECK(plumbing_qp(PlumbingSurface::plumb(unknown, no_leaf), db).state ==
        SqpState::ProvenNo);

  CHECK(wh_surface.leaves().size() == 2);
  CHECK(PlumbingSurface::plumb(wh_surface, yes_leaf).leaves().size() == 3);
}

TEST_CASE("sqp closure rules") {
  const KnotDatabase db = KnotDatabase::builtin();
  CHECK(sqp(unknot(), db).state == SqpState::ProvenYes);
  CHECK(sqp(make_base("RHT"), db).state == SqpState::ProvenYes);
  CHECK(sqp(make_base("4_1"), db).state == SqpState::Unknown);  // no flag

  CHECK(sqp(doubling(make_base("RHT"), 0, make_base("RHT"), 0), db).state ==
        SqpState::ProvenYes);
  CHECK(sqp(whitehead(ClaspSign::Positive, make_base("RHT"), 0), db).state ==
        SqpState::ProvenYes);
  // Positive twist: the closure rule does not apply.
  CHECK(sqp(doubling(make_base("RHT"), 1, make_base("RHT"), 0), db).state ==
        SqpState::Unknown);

  CHECK(sqp(connected_sum(make_base("RHT"), make_base("RHT")), db).state ==
        SqpState::ProvenYes);
  CHECK(sqp(connected_sum(make_base("RHT"), make_base("4_1")), db).state ==
        SqpState::Unknown);

  // Mirrors and reverses of anything but O stay unknown.
  CHECK(sqp(mirror(make_base("RHT")), db).state == SqpState::Unknown);
  CHECK(sqp(reverse(make_base("RHT")), db).state == SqpState::Unknown);
  CHECK(sqp(mirror(unknot()), db).state == SqpState::ProvenYes);

  // Anything that normalizes to O is proven, never refuted.
  CHECK(sqp(doubling(unknot(), -1, unknot(), 0), db).state ==
        SqpState::ProvenYes);

  // An explicit negative flag is the only source of ProvenNo.
  KnotDatabase db2 = KnotDatabase::builtin();
  KnotRecord neg;
  neg.name = "notsqp";
  neg.tau = 0;
  neg.sqp = false;
  db2.upsert(neg);
  CHECK(sqp(make_base("notsqp"), db2).state == SqpState::ProvenNo);
  CHECK(sqp(connected_sum(make_base("notsqp"), make_base("RHT")), db2).state ==
        SqpState::Unknown);
  // Never ProvenNo for anything that normalizes to O, flags notwithstanding.
  CHECK(sqp(doubling(make_base("notsqp"), 0, unknot(), 0), db2).state ==
        SqpState::ProvenYes);
}

TEST_CASE("sqp proofs carry their rule citations") {
  const KnotDatabase db = KnotDatabase::builtin();
  const TriState wh = sqp(whitehead(ClaspSign::Positive, make_base("RHT"), 0), db);
  REQUIRE(wh.state == SqpState::ProvenYes);
  CHECK(cites(wh.rules, "s,t <= 0"));
  CHECK(cites(wh.rules, "RHT"));
  CHECK(sqp(make_base("4_1"), db).rules.empty());  // Unknown carries no rules
}

TEST_CASE("whitehead closure: sqp is preserved by Wh+") {
  const KnotDatabase db = KnotDatabase::builtin();
  for (const KnotExpr& e :
       {unknot(), make_base("RHT"),
        doubling(make_base("RHT"), -3, make_base("RHT"), 0),
        connected_sum(make_base("RHT"), make_base("RHT"))}) {
    REQUIRE(sqp(e, db).state == SqpState::ProvenYes);
    CHECK(sqp(whitehead(ClaspSign::Positive, e, 0), db).state ==
          SqpState::ProvenYes);
  }
}

TEST_CASE("sqp_slice_obstruction examples") {
  const KnotDatabase db = KnotDatabase::builtin();

  const Verdict wh = sqp_slice_obstruction(
      doubling(unknot(), -1, make_base("RHT"), 0), db);
  CHECK(wh.kind == VerdictKind::NotSmoothlySlice);
  CHECK(wh.tau == 1);
  CHECK(cites(wh.justification, "equals its genus"));

  const Verdict absorbed =
      sqp_slice_obstruction(doubling(unknot(), -1, unknot(), 0), db);
  CHECK(absorbed.kind == VerdictKind::NoObstruction);

  const Verdict deep = sqp_slice_obstruction(
      doubling(make_base("RHT"), -2, make_base("RHT"), -3), db);
  CHECK(deep.kind == VerdictKind::NotSmoothlySlice);
  CHECK(deep.tau == 1);

  const Verdict base = sqp_slice_obstruction(make_base("RHT"), db);
  CHECK(base.kind == VerdictKind::NotSmoothlySlice);
  CHECK(base.tau == 1);  // tau = genus

  CHECK(sqp_slice_obstruction(make_base("4_1"), db).kind ==
        VerdictKind::NoObstruction);
  CHECK(sqp_slice_obstruction(mirror(make_base("RHT")), db).kind ==
        VerdictKind::NoObstruction);
  CHECK(sqp_slice_obstruction(unknot(), db).kind == VerdictKind::NoObstruction);
}

TEST_CASE("the surface route fires where the closure rule cannot") {
  const KnotDatabase db = KnotDatabase::builtin();
  // s = 1 > 0, but TB(RHT) = 1 admits the annulus, so the plumbing is
  // quasipositive even though the textual rule is inapplicable.
  const KnotExpr e = doubling(make_base("RHT"), 1, make_base("RHT"), 0);
  REQUIRE(sqp(e, db).state == SqpState::Unknown);
  const Verdict v = sqp_slice_obstruction(e, db);
  CHECK(v.kind == VerdictKind::NotSmoothlySlice);
  CHECK(cites(v.justification, "Seifert surface"));
  // The tau engine agrees.
  CHECK(tau(e, db) == 1);
}

TEST_CASE("quasipositive doubling verdicts agree with the tau engine") {
  const KnotDatabase db = KnotDatabase::builtin();
  const KnotExpr knots[] = {unknot(), make_base("RHT")};
  for (const KnotExpr& j : knots)
    for (const KnotExpr& k : knots)
      for (std::int64_t s = -4; s <= 0; ++s)
        for (std::int64_t t = -4; t <= 0; ++t) {
          if ((j.is_unknot() && s == 0) || (k.is_unknot() && t == 0)) continue;
          const KnotExpr e = doubling(j, s, k, t);
          const Verdict v = sqp_slice_obstruction(e, db);
          if (v.kind == VerdictKind::NotSmoothlySlice) CHECK(tau(e, db) == 1);
        }
}
