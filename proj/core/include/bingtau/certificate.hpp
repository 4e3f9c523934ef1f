#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bingtau/collapse.hpp"
#include "bingtau/expr.hpp"
#include "bingtau/knots.hpp"
#include "bingtau/tau.hpp"

namespace bingtau {

// Machine-readable derivation traces.  A certificate records everything
// needed to replay the derivation deterministically: the input, the ordered
// collapse steps with their covering-move justifications, the final knot,
// the tau computation, and the verdict with its citation chain.  Emission
// is byte-stable for identical inputs, flags, and database contents.

enum class CertVerdict : std::uint8_t { NotSmoothlySlice, NoObstruction, Unsupported };

const char* to_string(CertVerdict v);
CertVerdict cert_verdict_from_string(std::string_view text);  // throws Error

struct KnotProvenance {
  std::string name;
  std::optional<std::int64_t> tau;
  std::string source;
};

struct CertificateInput {
  std::string kind;       // "expr" | "bing" | "hopf"
  std::string expr_text;  // kind == "expr": the raw input text
  std::string tree1;      // bing and hopf
  std::string tree2;      // hopf
  std::string knot;       // bing base knot name
  int q_side = 0;         // hopf: which tree supplied the Q-side chain (1 or 2)
  std::string strategy;
  bool swap_roles = false;
  std::vector<std::string> databases;  // load order
  std::vector<KnotProvenance> knots;   // base knots used, sorted by name
};

struct Certificate {
  CertificateInput input;
  std::vector<CollapseRecord> steps;
  KnotExpr final_knot;  // normalized; not meaningful for Unsupported
  TauValue tau = 0;
  std::vector<std::string> tau_trace;
  CertVerdict verdict = CertVerdict::NoObstruction;
  std::vector<std::string> citations;
  std::vector<std::string> notes;
};

// Normative convention notes embedded in certificates.
namespace notes {
inline constexpr const char* kCollapseTwistConvention =
    "collapse convention: when the collapsed chain has length l > 1, the "
    "connected-sum factor Q_l # r(Q_l) carries twist 2*t_l (twice the "
    "outermost collapsed twist) and the new operator twist is u = 0; when "
    "l = 1 the new operator is D[Q_1 # r(Q_1), 2*t_1]";
inline constexpr const char* kPlumbingSignCaveat =
    "plumbing orientations and intersection signs are not modeled; the "
    "plumbing factor rule is applied sign-agnostically";
inline constexpr const char* kExternalData =
    "database values for non-unknot base knots are external knot-table "
    "data, not derived here";
}  // namespace notes

// JSON document (see README for the schema).  The emitted text ends with a
// newline and is byte-stable.  For Unsupported verdicts the final_knot,
// tau, and tau_trace fields are omitted.
std::string certificate_to_json_text(const Certificate& cert);

// Inverse of certificate_to_json_text; throws Error on malformed input.
Certificate certificate_from_json_text(std::string_view json_text);

// Re-executes the recorded steps from the certificate's input and returns
// the resulting final knot in normal form.  Every recomputed step is
// checked against its record; a mismatch throws ReplayError.
KnotExpr replay(const Certificate& cert, const KnotDatabase& db);

// Trace document for a bare collapse run (no base knot, so no final knot
// or verdict; the terminal chain is reported instead).
std::string collapse_trace_to_json_text(const std::string& tree_text,
                                        const CollapseStrategy& strategy,
                                        RoleAssignment roles,
                                        const KnotDatabase& db,
                                        const std::vector<CollapseRecord>& records,
                                        const DoublingChain& chain);

}  // namespace bingtau
