#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bingtau/expr.hpp"
#include "bingtau/knots.hpp"
#include "bingtau/tau.hpp"

namespace bingtau {

// Quasipositivity calculus: annuli, plumbings, and the strong
// quasipositivity closure rules.  This is an obstruction path independent
// of the tau engine; the two agree wherever both apply.

// The annulus A(K,t): core circle K with two t-framed boundary longitudes.
struct Annulus {
  Annulus(KnotExpr core, std::int64_t framing);
  KnotExpr core;
  std::int64_t framing;
};

// A surface obtained by iterated plumbing of annuli.
class PlumbingSurface {
 public:
  explicit PlumbingSurface(Annulus leaf);
  static PlumbingSurface plumb(PlumbingSurface a, PlumbingSurface b);

  bool is_leaf() const;
  const Annulus& annulus() const;
  PlumbingSurface left() const;
  PlumbingSurface right() const;
  std::vector<Annulus> leaves() const;  // left-to-right

 private:
  struct Rep;
  explicit PlumbingSurface(std::shared_ptr<const Rep> rep);
  std::shared_ptr<const Rep> node_;
};

enum class SqpState : std::uint8_t { ProvenYes, ProvenNo, Unknown };

// Partial answer with the rules that forced it.  Unknown carries no rules
// and never silently upgrades.
struct TriState {
  SqpState state = SqpState::Unknown;
  std::vector<std::string> rules;
};

const char* to_string(SqpState s);

// Rule citation strings, shared with certificates and tests.
namespace rules {
inline constexpr const char* kUnknotDisk =
    "O bounds the trivial quasipositive disk";
inline constexpr const char* kDatabaseFlag = "database sqp flag";
inline constexpr const char* kSumClosure =
    "a connected sum of strongly quasipositive knots is strongly quasipositive";
inline constexpr const char* kDoublingClosure =
    "D[J,s](K,t) with J and K strongly quasipositive and s,t <= 0 bounds a "
    "quasipositive surface";
inline constexpr const char* kAnnulusTb =
    "the annulus A(K,t) is quasipositive iff t <= TB(K)";
inline constexpr const char* kPlumbingFactors =
    "a plumbing A*A' is quasipositive iff both factors are";
inline constexpr const char* kSurfaceRoute =
    "A(J,s)*A(K,t) is a Seifert surface for D[J,s](K,t)";
inline constexpr const char* kNontrivialDoubling =
    "D[J,s](K,t) with both argument pairs != (O,0) is nontrivial";
inline constexpr const char* kSqpNotSlice =
    "a nontrivial strongly quasipositive knot is not smoothly slice";
inline constexpr const char* kTauEqualsGenus =
    "the tau invariant of a strongly quasipositive knot equals its genus";
}  // namespace rules

// Quasipositivity of a single annulus via stored TB values: ProvenYes iff
// framing <= TB(core) when TB is known, ProvenNo iff framing > TB(core),
// Unknown when no TB is recorded for the core.
TriState annulus_qp(const Annulus& a, const KnotDatabase& db);

// Three-valued conjunction over the leaves of a plumbing.
TriState plumbing_qp(const PlumbingSurface& s, const KnotDatabase& db);

// Strong quasipositivity by rule closure over the normalized expression:
// O yes; base knots by database flag; sums of proven knots; doublings with
// proven companions and non-positive twists.  Mirrors and reverses of
// anything but O stay Unknown.  ProvenNo arises only from an explicit
// database flag on a base knot.
TriState sqp(const KnotExpr& e, const KnotDatabase& db);

// Slice obstruction along the quasipositivity route.  For a doubling, the
// closure rule and the annulus-plumbing route (which can tolerate positive
// twists when TB data permits) are both tried; the certificate cites
// whichever fired.  The attached tau value is the genus of the exhibited
// quasipositive surface.
Verdict sqp_slice_obstruction(const KnotExpr& e, const KnotDatabase& db);

}  // namespace bingtau
