#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bingtau/expr.hpp"
#include "bingtau/knots.hpp"

namespace bingtau {

// Integer tau values.  The doubling formula always lands in {-1, 0, 1}.
using TauValue = std::int64_t;

// tau(D[J,s](K,t)) from tau(J) and tau(K):
//    1  if s < 2 tau(J) and t < 2 tau(K)
//   -1  if s > 2 tau(J) and t > 2 tau(K)
//    0  otherwise.
TauValue tau_doubling(TauValue tau_j, std::int64_t s, TauValue tau_k,
                      std::int64_t t);

// tau(Wh+(K,t)) = 1 if t < 2 tau(K), else 0.  The negative clasp case is
// derived from mirror antisymmetry rather than transcribed separately:
// Wh-(K,t) is the mirror of Wh+(m(K),-t).
TauValue tau_whitehead(ClaspSign sign, TauValue tau_k, std::int64_t t);

// Evaluates tau by structural recursion: O -> 0, base -> database lookup,
// mirror -> negation, reverse -> identity, sum -> addition, doubling ->
// tau_doubling of the recursively evaluated arguments.
//
// Throws UnknownKnotError / MissingInvariantError from base lookups.
// When `trace` is non-null, appends one line per evaluated subexpression.
TauValue tau(const KnotExpr& e, const KnotDatabase& db,
             std::vector<std::string>* trace = nullptr);

enum class VerdictKind : std::uint8_t { NotSmoothlySlice, NoObstruction };

// Outcome of an obstruction computation.  kind == NotSmoothlySlice exactly
// when tau != 0; a vanishing obstruction is never a proof of sliceness.
struct Verdict {
  VerdictKind kind = VerdictKind::NoObstruction;
  TauValue tau = 0;
  std::vector<std::string> justification;
};

Verdict slice_obstruction(const KnotExpr& e, const KnotDatabase& db);

// |tau(e)|, a lower bound for the smooth 4-genus.
std::int64_t genus4_lower_bound(const KnotExpr& e, const KnotDatabase& db);

}  // namespace bingtau
