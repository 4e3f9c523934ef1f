#include "bingtau/certificate.hpp"

#include <algorithm>

#include <json.hpp>

#include "bingtau/errors.hpp"
#include "bingtau/parse.hpp"

namespace bingtau {

using nlohmann::json;
using nlohmann::ordered_json;

const char* to_string(CertVerdict v) {
  switch (v) {
    case CertVerdict::NotSmoothlySlice:
      return "not_smoothly_slice";
    case CertVerdict::NoObstruction:
      return "no_obstruction";
    case CertVerdict::Unsupported:
      return "unsupported";
  }
  return "no_obstruction";
}

CertVerdict cert_verdict_from_string(std::string_view text) {
  if (text == "not_smoothly_slice") return CertVerdict::NotSmoothlySlice;
  if (text == "no_obstruction") return CertVerdict::NoObstruction;
  if (text == "unsupported") return CertVerdict::Unsupported;
  throw Error("unknown verdict: " + std::string(text));
}

namespace {

ordered_json chain_to_json(const DoublingChain& chain) {
  ordered_json arr = ordered_json::array();
  for (const DoublingOp& op : chain.ops) {
    ordered_json item;
    item["companion"] = to_text(op.companion);
    item["twist"] = op.twist;
    arr.push_back(std::move(item));
  }
  return arr;
}

DoublingChain chain_from_json(const json& arr, const std::string& where) {
  if (!arr.is_array()) throw Error(where + ": expected a chain array");
  DoublingChain chain;
  for (const json& item : arr) {
    if (!item.is_object() || !item.contains("companion") || !item.contains("twist"))
      throw Error(where + ": chain entries need companion and twist");
    chain.ops.push_back({parse_expr(item["companion"].get<std::string>()),
                         item["twist"].get<std::int64_t>()});
  }
  return chain;
}

ordered_json hedden_to_json(const HeddenReport& report) {
  ordered_json out;
  out["holds"] = report.holds;
  ordered_json ops = ordered_json::array();
  for (const HeddenEntry& e : report.entries) {
    ordered_json item;
    item["companion"] = to_text(e.companion);
    item["twist"] = e.twist;
    item["tau"] = e.companion_tau;
    item["ok"] = e.satisfied;
    ops.push_back(std::move(item));
  }
  out["ops"] = std::move(ops);
  return out;
}

HeddenReport hedden_from_json(const json& obj) {
  HeddenReport report;
  report.holds = obj.at("holds").get<bool>();
  for (const json& item : obj.at("ops")) {
    HeddenEntry e;
    e.index = report.entries.size();
    e.companion = parse_expr(item.at("companion").get<std::string>());
    e.twist = item.at("twist").get<std::int64_t>();
    e.companion_tau = item.at("tau").get<std::int64_t>();
    e.satisfied = item.at("ok").get<bool>();
    report.entries.push_back(std::move(e));
  }
  return report;
}

ordered_json step_to_json(const CollapseRecord& rec) {
  ordered_json out;
  out["tree"] = rec.tree_index;
  out["node"] = rec.node_id;
  out["p_leaf"] = rec.p_leaf_id;
  out["q_leaf"] = rec.q_leaf_id;
  out["roles"] = to_string(rec.roles);
  out["l"] = rec.l;
  out["case"] = rec.l == 1 ? "l=1" : "l>1";
  out["p_chain"] = chain_to_json(rec.p_chain);
  out["q_chain"] = chain_to_json(rec.q_chain);
  out["r"] = to_text(rec.r);
  out["u"] = rec.u;
  out["new_label"] = chain_to_json(rec.new_label);
  if (rec.hedden) out["hedden"] = hedden_to_json(*rec.hedden);
  out["covering_moves"] = rec.covering_moves;
  return out;
}

CollapseRecord step_from_json(const json& obj) {
  CollapseRecord rec;
  rec.tree_index = obj.at("tree").get<int>();
  rec.node_id = obj.at("node").get<int>();
  rec.p_leaf_id = obj.at("p_leaf").get<int>();
  rec.q_leaf_id = obj.at("q_leaf").get<int>();
  rec.roles = role_from_string(obj.at("roles").get<std::string>());
  rec.l = obj.at("l").get<std::size_t>();
  rec.p_chain = chain_from_json(obj.at("p_chain"), "p_chain");
  rec.q_chain = chain_from_json(obj.at("q_chain"), "q_chain");
  rec.r = parse_expr(obj.at("r").get<std::string>());
  rec.u = obj.at("u").get<std::int64_t>();
  rec.new_label = chain_from_json(obj.at("new_label"), "new_label");
  if (obj.contains("hedden")) rec.hedden = hedden_from_json(obj.at("hedden"));
  for (const json& m : obj.at("covering_moves"))
    rec.covering_moves.push_back(m.get<std::string>());
  return rec;
}

ordered_json input_to_json(const CertificateInput& input) {
  ordered_json out;
  out["kind"] = input.kind;
  if (input.kind == "expr") out["expr"] = input.expr_text;
  if (input.kind == "bing") {
    out["tree"] = input.tree1;
    out["knot"] = input.knot;
  }
  if (input.kind == "hopf") {
    out["tree1"] = input.tree1;
    out["tree2"] = input.tree2;
    if (input.q_side) out["q_side"] = input.q_side;
  }
  if (!input.strategy.empty()) out["strategy"] = input.strategy;
  if (input.kind == "bing" || input.kind == "hopf")
    out["swap_roles"] = input.swap_roles;
  out["databases"] = input.databases;
  ordered_json knots = ordered_json::array();
  for (const KnotProvenance& k : input.knots) {
    ordered_json item;
    item["name"] = k.name;
    if (k.tau) item["tau"] = *k.tau;
    item["source"] = k.source;
    knots.push_back(std::move(item));
  }
  out["knots"] = std::move(knots);
  return out;
}

CertificateInput input_from_json(const json& obj) {
  CertificateInput input;
  input.kind = obj.at("kind").get<std::string>();
  if (obj.contains("expr")) input.expr_text = obj["expr"].get<std::string>();
  if (obj.contains("tree")) input.tree1 = obj["tree"].get<std::string>();
  if (obj.contains("tree1")) input.tree1 = obj["tree1"].get<std::string>();
  if (obj.contains("tree2")) input.tree2 = obj["tree2"].get<std::string>();
  if (obj.contains("knot")) input.knot = obj["knot"].get<std::string>();
  if (obj.contains("q_side")) input.q_side = obj["q_side"].get<int>();
  if (obj.contains("strategy")) input.strategy = obj["strategy"].get<std::string>();
  if (obj.contains("swap_roles")) input.swap_roles = obj["swap_roles"].get<bool>();
  if (obj.contains("databases"))
    for (const json& d : obj["databases"])
      input.databases.push_back(d.get<std::string>());
  if (obj.contains("knots")) {
    for (const json& k : obj["knots"]) {
      KnotProvenance prov;
      prov.name = k.at("name").get<std::string>();
      if (k.contains("tau")) prov.tau = k["tau"].get<std::int64_t>();
      prov.source = k.value("source", std::string{});
      input.knots.push_back(std::move(prov));
    }
  }
  return input;
}

}  // namespace

std::string certificate_to_json_text(const Certificate& cert) {
  ordered_json out;
  out["version"] = 1;
  out["input"] = input_to_json(cert.input);
  ordered_json steps = ordered_json::array();
  for (const CollapseRecord& rec : cert.steps) steps.push_back(step_to_json(rec));
  out["steps"] = std::move(steps);
  if (cert.verdict != CertVerdict::Unsupported) {
    out["final_knot"] = to_text(cert.final_knot);
    out["tau"] = cert.tau;
    out["tau_trace"] = cert.tau_trace;
  }
  out["verdict"] = to_string(cert.verdict);
  out["citations"] = cert.citations;
  out["notes"] = cert.notes;
  return out.dump(2) + "\n";
}

Certificate certificate_from_json_text(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("bad certificate JSON: ") + e.what());
  }
  try {
    Certificate cert;
    if (doc.at("version").get<int>() != 1)
      throw Error("unsupported certificate version");
    cert.input = input_from_json(doc.at("input"));
    for (const json& s : doc.at("steps")) cert.steps.push_back(step_from_json(s));
    cert.verdict = cert_verdict_from_string(doc.at("verdict").get<std::string>());
    if (cert.verdict != CertVerdict::Unsupported) {
      cert.final_knot = parse_expr(doc.at("final_knot").get<std::string>());
      cert.tau = doc.at("tau").get<std::int64_t>();
      if (doc.contains("tau_trace"))
        for (const json& line : doc["tau_trace"])
          cert.tau_trace.push_back(line.get<std::string>());
    }
    if (doc.contains("citations"))
      for (const json& c : doc["citations"])
        cert.citations.push_back(c.get<std::string>());
    if (doc.contains("notes"))
      for (const json& n : doc["notes"]) cert.notes.push_back(n.get<std::string>());
    return cert;
  } catch (const json::exception& e) {
    throw Error(std::string("bad certificate JSON: ") + e.what());
  }
}

namespace {

// Replays the records tagged with `tree_index` against the tree grown from
// `shape`, checking every recomputed step against its record.
DoublingChain replay_tree(const TreeShape& shape, int tree_index,
                          const std::vector<CollapseRecord>& steps,
                          const KnotDatabase& db) {
  LabeledTree tree = wh_plus_bing_labeled(shape);
  for (const CollapseRecord& rec : steps) {
    if (rec.tree_index != tree_index) continue;
    auto [next, fresh] = collapse_pair(tree, rec.node_id, rec.roles, &db);
    if (!(fresh.new_label == rec.new_label) || !(fresh.r == rec.r) ||
        fresh.u != rec.u || fresh.l != rec.l ||
        fresh.p_leaf_id != rec.p_leaf_id || fresh.q_leaf_id != rec.q_leaf_id)
      throw ReplayError("step at node " + std::to_string(rec.node_id) +
                        " does not reproduce its record");
    tree = std::move(next);
  }
  if (!tree.single_leaf())
    throw ReplayError("recorded steps do not fully collapse the tree");
  return tree.root_label();
}

}  // namespace

KnotExpr replay(const Certificate& cert, const KnotDatabase& db) {
  const CertificateInput& input = cert.input;
  if (input.kind == "expr")
    return normalize(parse_expr(input.expr_text)).expr();

  if (input.kind == "bing") {
    DoublingChain chain =
        replay_tree(parse_tree(input.tree1), 1, cert.steps, db);
    return normalize(chain_apply(chain, make_base(input.knot))).expr();
  }

  if (input.kind == "hopf") {
    DoublingChain c1 = replay_tree(parse_tree(input.tree1), 1, cert.steps, db);
    DoublingChain c2 = replay_tree(parse_tree(input.tree2), 2, cert.steps, db);
    const DoublingChain* pc = &c1;
    const DoublingChain* qc = &c2;
    int q_side = 2;
    if (qc->ops.size() == 1 && pc->ops.size() != 1) {
      std::swap(pc, qc);
      q_side = 1;
    }
    if (qc->ops.size() == 1)
      throw ReplayError("hopf certificate with two trivial chains");
    if (input.q_side && input.q_side != q_side)
      throw ReplayError("recorded q_side does not match the replayed chains");
    const DoublingOp q0 = qc->ops.front();
    DoublingChain rest{{qc->ops.begin() + 1, qc->ops.end()}};
    const ComputedRu ru = compute_ru(rest);
    KnotExpr core = doubling(ru.r, ru.u, q0.companion, q0.twist);
    return normalize(chain_apply(*pc, std::move(core))).expr();
  }

  throw ReplayError("certificates of kind \"" + input.kind +
                    "\" cannot be replayed");
}

std::string collapse_trace_to_json_text(const std::string& tree_text,
                                        const CollapseStrategy& strategy,
                                        RoleAssignment roles,
                                        const KnotDatabase& db,
                                        const std::vector<CollapseRecord>& records,
                                        const DoublingChain& chain) {
  ordered_json out;
  out["version"] = 1;
  ordered_json input;
  input["kind"] = "collapse";
  input["tree"] = tree_text;
  input["strategy"] = strategy.text();
  input["swap_roles"] = roles == RoleAssignment::LeftIsQ;
  input["databases"] = db.sources();
  out["input"] = std::move(input);
  ordered_json steps = ordered_json::array();
  for (const CollapseRecord& rec : records) steps.push_back(step_to_json(rec));
  out["steps"] = std::move(steps);
  out["final_chain"] = chain_to_json(chain);
  out["hedden"] = hedden_to_json(hedden_condition(chain, db));
  out["citations"] = ordered_json::array(
      {"each collapse is two covering moves: pass to a sublink, then to the "
       "preimage in the branched double cover (p=2)",
       "covering moves preserve smooth Z_(2)-sliceness"});
  out["notes"] = ordered_json::array({notes::kCollapseTwistConvention});
  return out.dump(2) + "\n";
}

}  // namespace bingtau
