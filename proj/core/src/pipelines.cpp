#include "bingtau/pipelines.hpp"

#include <set>
#include <stdexcept>

#include "bingtau/errors.hpp"
#include "bingtau/quasipos.hpp"

namespace bingtau {

namespace {

void collect_names(const KnotExpr& e, std::set<std::string>& out) {
  switch (e.kind()) {
    case ExprKind::Unknot:
      return;
    case ExprKind::Base:
      out.insert(e.base_name());
      return;
    case ExprKind::Mirror:
    case ExprKind::Reverse:
      collect_names(e.operand(), out);
      return;
    case ExprKind::Sum:
      collect_names(e.left(), out);
      collect_names(e.right(), out);
      return;
    case ExprKind::Doubling:
      collect_names(e.companion(), out);
      collect_names(e.argument(), out);
      return;
  }
}

std::vector<KnotProvenance> provenance_for(const KnotExpr& e,
                                           const KnotDatabase& db) {
  std::set<std::string> names;
  collect_names(e, names);
  std::vector<KnotProvenance> out;
  for (const std::string& name : names) {
    KnotProvenance prov;
    prov.name = name;
    if (const KnotRecord* rec = db.find(name)) {
      prov.tau = rec->tau;
      prov.source = rec->source;
    } else {
      prov.source = "unresolved";
    }
    out.push_back(std::move(prov));
  }
  return out;
}

// The Hedden condition must survive every collapse (it holds for the
// all-(O,-1) start and each new operator D[R,u] keeps u < 2 tau(R)); a
// violation here is an implementation bug, not bad input.
void assert_propagation(const std::vector<CollapseRecord>& records) {
  for (const CollapseRecord& rec : records) {
    if (!rec.hedden || !rec.hedden->holds)
      throw std::logic_error(
          "collapse propagation violated: a collapsed label fails the Hedden "
          "condition at node " + std::to_string(rec.node_id));
  }
}

std::vector<std::string> covering_citations() {
  return {
      "each collapse replaces a sibling leaf pair by one leaf whose chain "
      "gains the innermost operator D[R,u]",
      "each collapse is two covering moves: pass to a sublink, then to the "
      "preimage in the branched double cover (p=2)",
      "covering moves preserve smooth Z_(2)-sliceness",
      "Hedden condition: every operator of every recorded chain satisfies "
      "twist < 2*tau(companion)",
      "tau of the covering-link knot is computed by the doubling formula"};
}

void append_obstruction_citations(std::vector<std::string>& citations) {
  citations.push_back(
      "a knot with tau != 0 is not smoothly slice in any rational homology "
      "4-ball");
  citations.push_back(
      "a covering link of a smoothly slice link would be smoothly "
      "Z_(2)-slice, so the original link is not smoothly slice");
}

}  // namespace

Certificate obstruct_bing_double(const TreeShape& shape, std::string_view knot,
                                 const KnotDatabase& db,
                                 const PipelineOptions& options) {
  const KnotRecord& rec = db.require(knot);
  if (!rec.tau) throw MissingInvariantError(rec.name, "tau");

  LabeledTree tree = wh_plus_bing_labeled(shape);
  CollapseResult collapsed =
      collapse_full(tree, options.strategy, options.roles, &db);
  assert_propagation(collapsed.records);
  if (!hedden_condition(collapsed.chain, db).holds)
    throw std::logic_error("final chain fails the Hedden condition");

  KnotExpr final_raw = chain_apply(collapsed.chain, make_base(knot));

  Certificate cert;
  cert.input.kind = "bing";
  cert.input.tree1 = shape.text();
  cert.input.knot = rec.name;
  cert.input.strategy = options.strategy.text();
  cert.input.swap_roles = options.roles == RoleAssignment::LeftIsQ;
  cert.input.databases = db.sources();
  cert.input.knots = provenance_for(final_raw, db);
  cert.steps = std::move(collapsed.records);
  cert.tau = tau(final_raw, db, &cert.tau_trace);
  cert.final_knot = normalize(final_raw).expr();
  cert.verdict = cert.tau != 0 ? CertVerdict::NotSmoothlySlice
                               : CertVerdict::NoObstruction;
  cert.citations = {
      "every leaf carries the chain [(O,-1)]: the tree realizes the "
      "all-positive Whitehead double of the iterated Bing double of the "
      "base knot"};
  for (auto& c : covering_citations()) cert.citations.push_back(std::move(c));
  if (cert.verdict == CertVerdict::NotSmoothlySlice) {
    append_obstruction_citations(cert.citations);
  } else {
    cert.notes.push_back(
        "tau(" + rec.name + ") = " + std::to_string(*rec.tau) +
        ": the hypothesis tau(base) > 0 fails, so the final tau vanishes and "
        "no verdict follows");
  }
  cert.notes.push_back(notes::kCollapseTwistConvention);
  cert.notes.push_back(notes::kExternalData);
  return cert;
}

Certificate obstruct_hopf(const TreeShape& shape1, const TreeShape& shape2,
                          const KnotDatabase& db,
                          const PipelineOptions& options) {
  LabeledTree t1 = wh_plus_bing_labeled(shape1);
  LabeledTree t2 = wh_plus_bing_labeled(shape2);

  // A custom order lists tree1's collapses first, then tree2's.
  CollapseStrategy st1 = options.strategy;
  CollapseStrategy st2 = options.strategy;
  if (options.strategy.kind == CollapseStrategy::Kind::Custom) {
    const std::size_t need1 = shape1.leaf_count() - 1;
    const std::size_t need2 = shape2.leaf_count() - 1;
    if (options.strategy.order.size() != need1 + need2)
      throw TreeError("custom collapse order must list " +
                      std::to_string(need1 + need2) + " steps");
    st1.order.assign(options.strategy.order.begin(),
                     options.strategy.order.begin() + need1);
    st2.order.assign(options.strategy.order.begin() + need1,
                     options.strategy.order.end());
    if (st1.order.empty()) st1 = CollapseStrategy::deepest_leftmost();
    if (st2.order.empty()) st2 = CollapseStrategy::deepest_leftmost();
  }

  CollapseResult r1 = collapse_full(t1, st1, options.roles, &db);
  CollapseResult r2 = collapse_full(t2, st2, options.roles, &db);
  for (CollapseRecord& rec : r2.records) rec.tree_index = 2;
  assert_propagation(r1.records);
  assert_propagation(r2.records);

  const DoublingChain* p_chain = &r1.chain;
  const DoublingChain* q_chain = &r2.chain;
  int q_side = 2;
  if (q_chain->ops.size() == 1 && p_chain->ops.size() != 1) {
    std::swap(p_chain, q_chain);
    q_side = 1;
  }
  if (q_chain->ops.size() == 1) throw BothTreesTrivialError{};

  const DoublingOp q0 = q_chain->ops.front();
  DoublingChain rest{{q_chain->ops.begin() + 1, q_chain->ops.end()}};
  const ComputedRu ru = compute_ru(rest);
  KnotExpr core = doubling(ru.r, ru.u, q0.companion, q0.twist);
  KnotExpr final_raw = chain_apply(*p_chain, std::move(core));

  Certificate cert;
  cert.input.kind = "hopf";
  cert.input.tree1 = shape1.text();
  cert.input.tree2 = shape2.text();
  cert.input.q_side = q_side;
  cert.input.strategy = options.strategy.text();
  cert.input.swap_roles = options.roles == RoleAssignment::LeftIsQ;
  cert.input.databases = db.sources();
  cert.input.knots = provenance_for(final_raw, db);
  cert.steps = std::move(r1.records);
  cert.steps.insert(cert.steps.end(), r2.records.begin(), r2.records.end());
  cert.tau = tau(final_raw, db, &cert.tau_trace);
  cert.final_knot = normalize(final_raw).expr();
  cert.verdict = cert.tau != 0 ? CertVerdict::NotSmoothlySlice
                               : CertVerdict::NoObstruction;
  cert.citations = {
      "every leaf carries the chain [(O,-1)]: the trees realize the "
      "all-positive Whitehead double of the partially iterated Bing double "
      "of the Hopf link",
      "both components collapse to chains; the Q-side chain splits into its "
      "innermost operator (Q_0,t_0) and a remainder that yields D[R,u]"};
  for (auto& c : covering_citations()) cert.citations.push_back(std::move(c));
  if (cert.verdict == CertVerdict::NotSmoothlySlice)
    append_obstruction_citations(cert.citations);
  cert.notes.push_back(notes::kCollapseTwistConvention);
  return cert;
}

Certificate obstruct_expr(const KnotExpr& e, std::string_view raw_text,
                          const KnotDatabase& db) {
  Certificate cert;
  cert.input.kind = "expr";
  cert.input.expr_text = std::string(raw_text);
  cert.input.databases = db.sources();
  cert.input.knots = provenance_for(e, db);
  cert.tau = tau(e, db, &cert.tau_trace);
  cert.final_knot = normalize(e).expr();

  const Verdict tau_verdict = slice_obstruction(e, db);
  cert.verdict = tau_verdict.kind == VerdictKind::NotSmoothlySlice
                     ? CertVerdict::NotSmoothlySlice
                     : CertVerdict::NoObstruction;
  cert.citations = tau_verdict.justification;

  const Verdict sqp_verdict = sqp_slice_obstruction(e, db);
  if (sqp_verdict.kind == VerdictKind::NotSmoothlySlice) {
    cert.citations.push_back("independently, by the quasipositivity route:");
    for (const std::string& line : sqp_verdict.justification)
      cert.citations.push_back(line);
    cert.notes.push_back(notes::kPlumbingSignCaveat);
  }
  cert.notes.push_back(notes::kExternalData);
  return cert;
}

Certificate sqp_certificate(const KnotExpr& e, std::string_view raw_text,
                            const KnotDatabase& db) {
  Certificate cert;
  cert.input.kind = "expr";
  cert.input.expr_text = std::string(raw_text);
  cert.input.databases = db.sources();
  cert.input.knots = provenance_for(e, db);
  cert.final_knot = normalize(e).expr();

  const TriState state = sqp(e, db);
  const Verdict verdict = sqp_slice_obstruction(e, db);
  cert.tau = verdict.tau;
  cert.verdict = verdict.kind == VerdictKind::NotSmoothlySlice
                     ? CertVerdict::NotSmoothlySlice
                     : CertVerdict::NoObstruction;
  cert.citations = verdict.justification;
  cert.notes.push_back(std::string("sqp: ") + to_string(state.state));
  for (const std::string& rule : state.rules)
    cert.notes.push_back("sqp rule: " + rule);
  cert.notes.push_back(
      "verdict and tau reflect the quasipositivity route only");
  cert.notes.push_back(notes::kPlumbingSignCaveat);
  return cert;
}

}  // namespace bingtau
