#include "bingtau/tau.hpp"

#include <cstdlib>

#include "bingtau/errors.hpp"

namespace bingtau {

TauValue tau_doubling(TauValue tau_j, std::int64_t s, TauValue tau_k,
                      std::int64_t t) {
  if (s < 2 * tau_j && t < 2 * tau_k) return 1;
  if (s > 2 * tau_j && t > 2 * tau_k) return -1;
  return 0;
}

TauValue tau_whitehead(ClaspSign sign, TauValue tau_k, std::int64_t t) {
  if (sign == ClaspSign::Positive) return t < 2 * tau_k ? 1 : 0;
  // Wh-(K,t) = m(Wh+(m(K),-t)) and tau(m(X)) = -tau(X).
  return -tau_whitehead(ClaspSign::Positive, -tau_k, -t);
}

namespace {

std::string num(std::int64_t v) { return std::to_string(v); }

TauValue eval(const KnotExpr& e, const KnotDatabase& db,
              std::vector<std::string>* trace) {
  switch (e.kind()) {
    case ExprKind::Unknot:
      if (trace) trace->push_back("tau(O) = 0");
      return 0;
    case ExprKind::Base: {
      const TauValue v = db.tau_of(e.base_name());
      if (trace)
        trace->push_back("tau(" + e.base_name() + ") = " + num(v) + "  [database]");
      return v;
    }
    case ExprKind::Mirror: {
      const TauValue v = -eval(e.operand(), db, trace);
      if (trace)
        trace->push_back("tau(" + to_text(e) + ") = " + num(v) +
                         "  [mirror antisymmetry]");
      return v;
    }
    case ExprKind::Reverse: {
      const TauValue v = eval(e.operand(), db, trace);
      if (trace)
        trace->push_back("tau(" + to_text(e) + ") = " + num(v) +
                         "  [reverse invariance]");
      return v;
    }
    case ExprKind::Sum: {
      const TauValue v = eval(e.left(), db, trace) + eval(e.right(), db, trace);
      if (trace)
        trace->push_back("tau(" + to_text(e) + ") = " + num(v) + "  [additivity]");
      return v;
    }
    case ExprKind::Doubling: {
      const TauValue tj = eval(e.companion(), db, trace);
      const TauValue tk = eval(e.argument(), db, trace);
      const std::int64_t s = e.companion_twist();
      const std::int64_t t = e.argument_twist();
      const TauValue v = tau_doubling(tj, s, tk, t);
      if (trace) {
        std::string why;
        if (v == 1)
          why = "s=" + num(s) + " < 2*tau(J)=" + num(2 * tj) + " and t=" + num(t) +
                " < 2*tau(K)=" + num(2 * tk);
        else if (v == -1)
          why = "s=" + num(s) + " > 2*tau(J)=" + num(2 * tj) + " and t=" + num(t) +
                " > 2*tau(K)=" + num(2 * tk);
        else
          why = "otherwise: s=" + num(s) + " vs 2*tau(J)=" + num(2 * tj) +
                ", t=" + num(t) + " vs 2*tau(K)=" + num(2 * tk);
        trace->push_back("tau(" + to_text(e) + ") = " + num(v) + "  [doubling: " +
                         why + "]");
      }
      return v;
    }
  }
  return 0;
}

}  // namespace

TauValue tau(const KnotExpr& e, const KnotDatabase& db,
             std::vector<std::string>* trace) {
  return eval(e, db, trace);
}

Verdict slice_obstruction(const KnotExpr& e, const KnotDatabase& db) {
  Verdict v;
  v.tau = tau(e, db);
  if (v.tau != 0) {
    v.kind = VerdictKind::NotSmoothlySlice;
    v.justification = {
        "tau = " + std::to_string(v.tau),
        "a knot that is smoothly slice in a rational homology 4-ball has tau = 0",
        "tau != 0, so the knot is not smoothly slice in any rational homology "
        "4-ball, in particular not smoothly slice"};
  } else {
    v.kind = VerdictKind::NoObstruction;
    v.justification = {"tau = 0",
                       "the tau obstruction vanishes; this is not a proof of "
                       "sliceness"};
  }
  return v;
}

std::int64_t genus4_lower_bound(const KnotExpr& e, const KnotDatabase& db) {
  return std::llabs(tau(e, db));
}

}  // namespace bingtau
