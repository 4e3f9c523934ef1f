#include <doctest.h>

#include <random>

#include "bingtau/errors.hpp"
#include "bingtau/tau.hpp"
#include "support/random_expr.hpp"

using namespace bingtau;

namespace {

// Literal transcription of the piecewise doubling formula, kept independent
// of the implementation it checks.
TauValue doubling_formula_oracle(TauValue tau_j, std::int64_t s, TauValue tau_k,
                                 std::int64_t t) {
  if (s < 2 * tau_j && t < 2 * tau_k) {
    return 1;
  } else if (s > 2 * tau_j && t > 2 * tau_k) {
    return -1;
  } else {
    return 0;
  }
}

// One synthetic knot per tau value in [-4, 4].
KnotDatabase grid_db() {
  KnotDatabase db;
  for (int v = -4; v <= 4; ++v) {
    KnotRecord rec;
    rec.name = v < 0 ? "Tm" + std::to_string(-v) : "Tp" + std::to_string(v);
    rec.tau = v;
    rec.source = "test";
    db.upsert(std::move(rec));
  }
  return db;
}

std::string grid_name(int v) {
  return v < 0 ? "Tm" + std::to_string(-v) : "Tp" + std::to_string(v);
}

}  // namespace

TEST_CASE("tau_doubling examples") {
  CHECK(tau_doubling(1, 0, 1, 1) == 1);
  CHECK(tau_doubling(0, 2, 0, 3) == -1);
  CHECK(tau_doubling(1, 2, 1, 0) == 0);  // boundary s = 2 tau(J)
  CHECK(tau_doubling(0, 0, 0, 0) == 0);
}

TEST_CASE("tau_doubling matches the transcription oracle on the full grid") {
  for (TauValue tj = -4; tj <= 4; ++tj)
    for (TauValue tk = -4; tk <= 4; ++tk)
      for (std::int64_t s = -10; s <= 10; ++s)
        for (std::int64_t t = -10; t <= 10; ++t) {
          const TauValue got = tau_doubling(tj, s, tk, t);
          REQUIRE(got == doubling_formula_oracle(tj, s, tk, t));
          REQUIRE(got >= -1);
          REQUIRE(got <= 1);
          // Argument swap symmetry.
          REQUIRE(got == tau_doubling(tk, t, tj, s));
          // Mirror consistency of the formula itself.
          REQUIRE(tau_doubling(-tj, -s, -tk, -t) == -got);
        }
}

TEST_CASE("tau_whitehead examples and derivation") {
  CHECK(tau_whitehead(ClaspSign::Positive, 1, 0) == 1);
  CHECK(tau_whitehead(ClaspSign::Positive, 0, 0) == 0);
  CHECK(tau_whitehead(ClaspSign::Negative, -1, 0) == -1);
  CHECK(tau_whitehead(ClaspSign::Negative, 1, 0) == 0);
}

TEST_CASE("tau_whitehead agrees with tau_doubling at (O,-1)") {
  for (TauValue k = -4; k <= 4; ++k)
    for (std::int64_t t = -10; t <= 10; ++t)
      CHECK(tau_doubling(0, -1, k, t) == tau_whitehead(ClaspSign::Positive, k, t));
}

TEST_CASE("tau evaluates expressions structurally") {
  const KnotDatabase db = KnotDatabase::builtin();
  CHECK(tau(whitehead(ClaspSign::Positive, make_base("RHT"), 0), db) == 1);
  CHECK(tau(connected_sum(make_base("RHT"), negate(make_base("RHT"))), db) == 0);
  CHECK(tau(unknot(), db) == 0);
  CHECK(tau(mirror(make_base("RHT")), db) == -1);
  CHECK(tau(reverse(make_base("LHT")), db) == -1);
}

TEST_CASE("tau of D[O,-1](K,t) matches the whitehead formula on a grid") {
  const KnotDatabase db = grid_db();
  for (int v = -3; v <= 3; ++v)
    for (std::int64_t t = -8; t <= 8; ++t) {
      const KnotExpr e = doubling(unknot(), -1, make_base(grid_name(v)), t);
      CHECK(tau(e, db) == tau_whitehead(ClaspSign::Positive, v, t));
    }
}

TEST_CASE("tau reports unknown knots and missing invariants") {
  KnotDatabase db = KnotDatabase::builtin();
  CHECK_THROWS_AS(tau(make_base("nonexistent"), db), UnknownKnotError);
  KnotRecord no_tau;
  no_tau.name = "tb_only";
  no_tau.tb = 3;
  db.upsert(no_tau);
  CHECK_THROWS_AS(tau(make_base("tb_only"), db), MissingInvariantError);
}

TEST_CASE("slice_obstruction examples") {
  const KnotDatabase db = KnotDatabase::builtin();

  const Verdict rht = slice_obstruction(
      whitehead(ClaspSign::Positive, make_base("RHT"), 0), db);
  CHECK(rht.kind == VerdictKind::NotSmoothlySlice);
  CHECK(rht.tau == 1);
  CHECK(!rht.justification.empty());

  const Verdict trivial = slice_obstruction(unknot(), db);
  CHECK(trivial.kind == VerdictKind::NoObstruction);
  CHECK(trivial.tau == 0);

  const Verdict fig8 = slice_obstruction(
      whitehead(ClaspSign::Positive, make_base("4_1"), 0), db);
  CHECK(fig8.kind == VerdictKind::NoObstruction);
  CHECK(fig8.tau == 0);
}

TEST_CASE("genus4_lower_bound is |tau|") {
  const KnotDatabase db = KnotDatabase::builtin();
  CHECK(genus4_lower_bound(whitehead(ClaspSign::Positive, make_base("RHT"), 0),
                           db) == 1);
  CHECK(genus4_lower_bound(unknot(), db) == 0);
  // tau = -1 branch: both twists above the doubled taus.
  CHECK(genus4_lower_bound(
            doubling(make_base("RHT"), 3, make_base("RHT"), 4), db) == 1);
  CHECK(genus4_lower_bound(mirror(connected_sum(make_base("RHT"),
                                                make_base("RHT"))),
                           db) == 2);
}

TEST_CASE("random expressions: antisymmetry, reversal, additivity") {
  const KnotDatabase db = KnotDatabase::builtin();
  std::mt19937 rng(4242);
  const auto& names = bingtau::testing::default_names();
  for (int i = 0; i < 1000; ++i) {
    const KnotExpr e = bingtau::testing::random_expr(rng, 6, names);
    const TauValue v = tau(e, db);
    CHECK(tau(mirror(e), db) == -v);
    CHECK(tau(reverse(e), db) == v);
    // Normalization preserves tau.
    CHECK(tau(normalize(e).expr(), db) == v);
  }
  for (int i = 0; i < 300; ++i) {
    const KnotExpr a = bingtau::testing::random_expr(rng, 4, names);
    const KnotExpr b = bingtau::testing::random_expr(rng, 4, names);
    CHECK(tau(connected_sum(a, b), db) == tau(a, db) + tau(b, db));
  }
}

TEST_CASE("tau trace records the applied rules") {
  const KnotDatabase db = KnotDatabase::builtin();
  std::vector<std::string> trace;
  const KnotExpr e = whitehead(ClaspSign::Positive, make_base("RHT"), 0);
  CHECK(tau(e, db, &trace) == 1);
  REQUIRE(trace.size() == 3);
  CHECK(trace[0] == "tau(O) = 0");
  CHECK(trace[1] == "tau(RHT) = 1  [database]");
  CHECK(trace[2] ==
        "tau(D[O,-1](RHT,0)) = 1  [doubling: s=-1 < 2*tau(J)=0 and t=0 < "
        "2*tau(K)=2]");
}
