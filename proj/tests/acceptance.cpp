// Acceptance suite: one self-contained check per criterion, one PASS/FAIL
// line each.  Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bingtau/certificate.hpp"
#include "bingtau/collapse.hpp"
#include "bingtau/errors.hpp"
#include "bingtau/parse.hpp"
#include "bingtau/pipelines.hpp"
#include "bingtau/quasipos.hpp"
#include "bingtau/tau.hpp"
#include "support/random_expr.hpp"
#include "support/shapes.hpp"

using namespace bingtau;

namespace {

struct Checker {
  long checks = 0;
  long failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& message) {
    ++checks;
    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = message;
    }
  }
};

// Literal transcription of the piecewise doubling formula (the oracle for
// criterion 1); deliberately independent of tau_doubling.
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

KnotDatabase tau_grid_db() {
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

std::string tau_grid_name(int v) {
  return v < 0 ? "Tm" + std::to_string(-v) : "Tp" + std::to_string(v);
}

void criterion1_theorem2_grid(Checker& ck) {
  for (TauValue tj = -4; tj <= 4; ++tj)
    for (TauValue tk = -4; tk <= 4; ++tk)
      for (std::int64_t s = -10; s <= 10; ++s)
        for (std::int64_t t = -10; t <= 10; ++t)
          ck.expect(tau_doubling(tj, s, tk, t) ==
                        doubling_formula_oracle(tj, s, tk, t),
                    "grid mismatch at tau_j=" + std::to_string(tj) +
                        " s=" + std::to_string(s) + " tau_k=" +
                        std::to_string(tk) + " t=" + std::to_string(t));
}

void criterion2_whitehead_consistency(Checker& ck) {
  const KnotDatabase db = tau_grid_db();
  for (int v = -4; v <= 4; ++v)
    for (std::int64_t t = -10; t <= 10; ++t) {
      const KnotExpr e = doubling(unknot(), -1, make_base(tau_grid_name(v)), t);
      ck.expect(tau(e, db) == tau_whitehead(ClaspSign::Positive, v, t),
                "whitehead mismatch at tau=" + std::to_string(v) +
                    " t=" + std::to_string(t));
    }
}

void criterion3_mirror_antisymmetry(Checker& ck) {
  const KnotDatabase db = KnotDatabase::builtin();  // RHT, LHT, 4_1
  std::mt19937 rng(0xB1A6);
  for (int i = 0; i < 1000; ++i) {
    const KnotExpr e =
        bingtau::testing::random_expr(rng, 6, bingtau::testing::default_names());
    ck.expect(tau(mirror(e), db) == -tau(e, db),
              "antisymmetry failed for " + to_text(e));
  }
}

void criterion4_propagation(Checker& ck) {
  const KnotDatabase db = KnotDatabase::builtin();
  for (const TreeShape& shape : bingtau::testing::shapes_up_to_leaves(6)) {
    const LabeledTree tree = wh_plus_bing_labeled(shape);
    for (const auto& view : tree.nodes())
      if (view.is_leaf)
        ck.expect(hedden_condition(*view.label, db).holds,
                  "initial label violates the condition");
    const CollapseResult result =
        collapse_full(tree, {}, RoleAssignment::LeftIsP, &db);
    for (const CollapseRecord& rec : result.records)
      ck.expect(rec.hedden && rec.hedden->holds,
                "intermediate label fails at shape " + shape.text());
    ck.expect(hedden_condition(result.chain, db).holds,
              "final chain fails at shape " + shape.text());
  }
}

void criterion5_bing_reproduction(Checker& ck) {
  const KnotDatabase db = KnotDatabase::builtin();
  for (const TreeShape& shape : bingtau::testing::shapes_up_to_leaves(6)) {
    const Certificate positive = obstruct_bing_double(shape, "RHT", db);
    ck.expect(positive.tau == 1 &&
                  positive.verdict == CertVerdict::NotSmoothlySlice,
              "tau(K)=1 case failed at shape " + shape.text());
    const Certificate zero = obstruct_bing_double(shape, "4_1", db);
    ck.expect(zero.tau == 0 && zero.verdict == CertVerdict::NoObstruction,
              "tau(K)=0 case failed at shape " + shape.text());
  }
}

void enumerate_runs(const LabeledTree& tree, const KnotDatabase& db,
                    Checker& ck, std::set<TauValue>& taus, long& runs) {
  if (tree.single_leaf()) {
    taus.insert(tau(chain_apply(tree.root_label(), make_base("RHT")), db));
    ++runs;
    return;
  }
  for (const auto& candidate : tree.collapsible())
    for (const RoleAssignment roles :
         {RoleAssignment::LeftIsP, RoleAssignment::LeftIsQ}) {
      auto [next, record] = collapse_pair(tree, candidate.id, roles, &db);
      ck.expect(record.hedden && record.hedden->holds,
                "propagation failed during order enumeration");
      enumerate_runs(next, db, ck, taus, runs);
    }
}

void criterion6_order_independence(Checker& ck) {
  const KnotDatabase db = KnotDatabase::builtin();
  for (const TreeShape& shape : bingtau::testing::shapes_up_to_leaves(5)) {
    std::set<TauValue> taus;
    long runs = 0;
    enumerate_runs(wh_plus_bing_labeled(shape), db, ck, taus, runs);
    ck.expect(taus == std::set<TauValue>{1},
              "order-dependent tau at shape " + shape.text());
    ck.expect(runs >= 1, "no runs enumerated");
  }
}

void criterion7_hopf_reproduction(Checker& ck) {
  const KnotDatabase db = KnotDatabase::builtin();
  const auto shapes = bingtau::testing::shapes_up_to_leaves(4);
  for (const TreeShape& s1 : shapes)
    for (const TreeShape& s2 : shapes) {
      if (s1.leaf_count() == 1 && s2.leaf_count() == 1) {
        bool threw = false;
        try {
          obstruct_hopf(s1, s2, db);
        } catch (const BothTreesTrivialError&) {
          threw = true;
        }
        ck.expect(threw, "both-trivial case must report unsupported");
        continue;
      }
      const Certificate cert = obstruct_hopf(s1, s2, db);
      ck.expect(cert.tau == 1 && cert.verdict == CertVerdict::NotSmoothlySlice,
                "hopf failed at " + s1.text() + " x " + s2.text());
    }
}

void criterion8_worked_example(Checker& ck) {
  const KnotDatabase db = KnotDatabase::builtin();

  const CollapseResult two_leaf = collapse_full(
      wh_plus_bing_labeled(parse_tree("(*,*)")), {}, RoleAssignment::LeftIsP, &db);
  DoublingChain expected;
  expected.ops.push_back({unknot(), -2});
  expected.ops.push_back({unknot(), -1});
  ck.expect(two_leaf.chain == expected,
            "two-leaf collapse chain is " + to_text(two_leaf.chain));

  const ComputedRu ru = compute_ru(expected);
  const KnotExpr r_expected =
      normalize(doubling(unknot(), -2, unknot(), -2)).expr();
  ck.expect(ru.r == r_expected, "R is " + to_text(ru.r));
  ck.expect(ru.u == 0, "u is " + std::to_string(ru.u));
  ck.expect(tau(ru.r, db) == 1, "tau(R) != 1");
}

void criterion9_cross_module(Checker& ck) {
  const KnotDatabase db = KnotDatabase::builtin();
  const KnotExpr knots[] = {unknot(), make_base("RHT")};
  for (const KnotExpr& j : knots)
    for (const KnotExpr& k : knots)
      for (std::int64_t s = -4; s <= 0; ++s)
        for (std::int64_t t = -4; t <= 0; ++t) {
          if ((j.is_unknot() && s == 0) || (k.is_unknot() && t == 0)) continue;
          const KnotExpr e = doubling(j, s, k, t);
          const Verdict v = sqp_slice_obstruction(e, db);
          if (v.kind == VerdictKind::NotSmoothlySlice)
            ck.expect(tau(e, db) == 1,
                      "quasipositivity and tau disagree at " + to_text(e));
        }
}

void criterion10_roundtrip_and_replay(Checker& ck) {
  const KnotDatabase db = KnotDatabase::builtin();

  std::mt19937 rng(0xC0FFEE);
  for (int i = 0; i < 1000; ++i) {
    const NormalForm n = normalize(
        bingtau::testing::random_expr(rng, 6, bingtau::testing::default_names()));
    ck.expect(parse_expr(n.text()) == n.expr(),
              "round trip failed for " + n.text());
  }

  const auto shapes = bingtau::testing::shapes_up_to_leaves(4);
  int replayed = 0;
  while (replayed < 100) {
    const TreeShape& s1 = shapes[rng() % shapes.size()];
    const TreeShape& s2 = shapes[rng() % shapes.size()];
    PipelineOptions opt;
    opt.roles = (rng() % 2) ? RoleAssignment::LeftIsQ : RoleAssignment::LeftIsP;
    Certificate cert;
    if (rng() % 2 == 0) {
      cert = obstruct_bing_double(s1, "RHT", db, opt);
    } else {
      if (s1.leaf_count() == 1 && s2.leaf_count() == 1) continue;
      cert = obstruct_hopf(s1, s2, db, opt);
    }
    ++replayed;
    const Certificate back =
        certificate_from_json_text(certificate_to_json_text(cert));
    ck.expect(to_text(replay(back, db)) == to_text(cert.final_knot),
              "replay mismatch for " + cert.input.kind + " certificate");
  }
}

struct Criterion {
  int id;
  const char* name;
  double time_limit_seconds;  // 0 = untimed
  std::function<void(Checker&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "tau_doubling matches the transcription oracle on the full grid",
       1.0, criterion1_theorem2_grid},
      {2, "tau(D[O,-1](K,t)) agrees with the whitehead formula", 1.0,
       criterion2_whitehead_consistency},
      {3, "tau(m(e)) = -tau(e) on 1000 random expressions", 0,
       criterion3_mirror_antisymmetry},
      {4, "Hedden condition propagates through every collapse (<= 6 leaves)",
       5.0, criterion4_propagation},
      {5, "Bing pipeline: tau(K)=1 obstructs, tau(K)=0 does not (<= 6 leaves)",
       0, criterion5_bing_reproduction},
      {6, "all collapse orders and roles give the same verdict (<= 5 leaves)",
       0, criterion6_order_independence},
      {7, "Hopf pipeline: tau = 1 on all shape pairs (<= 4 leaves each)", 0,
       criterion7_hopf_reproduction},
      {8, "worked example: chain [(O,-2),(O,-1)] and (R,u) = (D[O,-2](O,-2),0)",
       0, criterion8_worked_example},
      {9, "quasipositivity verdicts imply tau = 1 on the doubling grid", 0,
       criterion9_cross_module},
      {10, "1000 round trips and 100 certificate replays", 0,
       criterion10_roundtrip_and_replay},
  };

  int failed = 0;
  for (const Criterion& criterion : criteria) {
    Checker ck;
    const auto start = std::chrono::steady_clock::now();
    criterion.run(ck);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_time =
        criterion.time_limit_seconds <= 0 || seconds < criterion.time_limit_seconds;
    const bool pass = ck.failures == 0 && in_time;
    std::printf("criterion %2d: %s  (%ld checks, %.3fs)  %s\n", criterion.id,
                pass ? "PASS" : "FAIL", ck.checks, seconds, criterion.name);
    if (!pass) {
      ++failed;
      if (!ck.first_failure.empty())
        std::printf("              first failure: %s\n", ck.first_failure.c_str());
      if (!in_time)
        std::printf("              exceeded the %.1fs budget\n",
                    criterion.time_limit_seconds);
    }
  }
  std::printf("acceptance: %d/10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
