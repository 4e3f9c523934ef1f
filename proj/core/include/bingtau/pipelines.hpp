#pragma once

#include <string_view>

#include "bingtau/certificate.hpp"
#include "bingtau/collapse.hpp"
#include "bingtau/tree.hpp"

namespace bingtau {

struct PipelineOptions {
  CollapseStrategy strategy{};
  RoleAssignment roles = RoleAssignment::LeftIsP;
};

// Obstruction pipeline for the all-positive Whitehead double of the
// iterated Bing double of a named knot: label every leaf [(O,-1)], collapse
// the tree to a single chain (asserting the Hedden condition after every
// step), apply the chain to the base knot, and evaluate tau.  The verdict
// is not_smoothly_slice exactly when tau != 0, which for this family means
// tau(base) > 0 and final tau = 1.
//
// Throws UnknownKnotError / MissingInvariantError for bad base knots and
// std::logic_error if the propagation invariant is ever violated (an
// implementation bug, not an input error).
Certificate obstruct_bing_double(const TreeShape& shape, std::string_view knot,
                                 const KnotDatabase& db,
                                 const PipelineOptions& options = {});

// Obstruction pipeline for the all-positive Whitehead double of a
// partially iterated Bing double of the Hopf link, one tree per component.
// Both trees collapse to chains; the Q-side chain (tree2's unless it is a
// single operator and tree1's is not) splits into its innermost operator
// (Q_0,t_0) and the remainder, which feeds compute_ru; the final knot is
// the P-chain applied to D[R,u](Q_0,t_0).
//
// Throws BothTreesTrivialError when both chains have length 1: the
// construction needs a remainder of length >= 1.
//
// A custom collapse order lists tree1's steps first, then tree2's.
Certificate obstruct_hopf(const TreeShape& shape1, const TreeShape& shape2,
                          const KnotDatabase& db,
                          const PipelineOptions& options = {});

// Certificate for a direct tau evaluation of an expression.  When the
// quasipositivity route also obstructs, its citations are appended.
Certificate obstruct_expr(const KnotExpr& e, std::string_view raw_text,
                          const KnotDatabase& db);

// Certificate for the quasipositivity route alone: the verdict and tau
// reflect sqp_slice_obstruction, not the tau engine.
Certificate sqp_certificate(const KnotExpr& e, std::string_view raw_text,
                            const KnotDatabase& db);

}  // namespace bingtau
