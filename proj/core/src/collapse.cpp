#include "bingtau/collapse.hpp"

#include <cassert>

#include "bingtau/errors.hpp"

namespace bingtau {

std::string to_text(const DoublingChain& chain) {
  std::string out = "[";
  for (std::size_t i = 0; i < chain.ops.size(); ++i) {
    if (i) out += ",";
    out += "(" + to_text(chain.ops[i].companion) + "," +
           std::to_string(chain.ops[i].twist) + ")";
  }
  out += "]";
  return out;
}

const char* to_string(RoleAssignment r) {
  return r == RoleAssignment::LeftIsP ? "left_is_p" : "left_is_q";
}

RoleAssignment role_from_string(std::string_view text) {
  if (text == "left_is_p") return RoleAssignment::LeftIsP;
  if (text == "left_is_q") return RoleAssignment::LeftIsQ;
  throw Error("unknown role assignment: " + std::string(text));
}

struct LabeledTree::Node {
  int id = 0;
  std::optional<DoublingChain> label;  // engaged <=> leaf
  NodePtr left, right;
};

namespace {

using NodePtr = std::shared_ptr<const LabeledTree::Node>;

NodePtr build(const TreeShape& shape, const std::vector<DoublingChain>* labels,
              const DoublingChain* uniform, int& next_id, std::size_t& next_leaf) {
  auto node = std::make_shared<LabeledTree::Node>();
  node->id = next_id++;
  if (shape.is_leaf()) {
    const DoublingChain& chain = uniform ? *uniform : (*labels)[next_leaf++];
    if (chain.ops.empty()) throw TreeError("leaf labels must be non-empty chains");
    node->label = chain;
  } else {
    node->left = build(shape.left(), labels, uniform, next_id, next_leaf);
    node->right = build(shape.right(), labels, uniform, next_id, next_leaf);
  }
  return node;
}

std::size_t count_leaves(const NodePtr& n) {
  if (n->label) return 1;
  return count_leaves(n->left) + count_leaves(n->right);
}

void collect_views(const NodePtr& n, int depth, std::vector<LabeledTree::View>& out) {
  LabeledTree::View v;
  v.id = n->id;
  v.depth = depth;
  v.is_leaf = n->label.has_value();
  if (v.is_leaf) {
    v.label = &*n->label;
  } else {
    v.left_id = n->left->id;
    v.right_id = n->right->id;
  }
  out.push_back(v);
  if (!v.is_leaf) {
    collect_views(n->left, depth + 1, out);
    collect_views(n->right, depth + 1, out);
  }
}

void collect_collapsible(const NodePtr& n, int depth,
                         std::vector<LabeledTree::Candidate>& out) {
  if (n->label) return;
  if (n->left->label && n->right->label) out.push_back({n->id, depth});
  collect_collapsible(n->left, depth + 1, out);
  collect_collapsible(n->right, depth + 1, out);
}

std::string node_text(const NodePtr& n) {
  if (n->label) return to_text(*n->label);
  return "(" + node_text(n->left) + "," + node_text(n->right) + ")";
}

const LabeledTree::Node* locate(const NodePtr& n, int id) {
  if (n->id == id) return n.get();
  if (n->label) return nullptr;
  if (const auto* hit = locate(n->left, id)) return hit;
  return locate(n->right, id);
}

NodePtr replace_node(const NodePtr& n, int id, const NodePtr& repl) {
  if (n->id == id) return repl;
  if (n->label) return n;
  NodePtr left = replace_node(n->left, id, repl);
  NodePtr right = replace_node(n->right, id, repl);
  if (left == n->left && right == n->right) return n;
  auto copy = std::make_shared<LabeledTree::Node>();
  copy->id = n->id;
  copy->left = std::move(left);
  copy->right = std::move(right);
  return copy;
}

}  // namespace

LabeledTree LabeledTree::uniform(const TreeShape& shape, const DoublingChain& label) {
  int next_id = 0;
  std::size_t next_leaf = 0;
  return LabeledTree(build(shape, nullptr, &label, next_id, next_leaf));
}

LabeledTree LabeledTree::from_labels(const TreeShape& shape,
                                     std::vector<DoublingChain> labels) {
  if (labels.size() != shape.leaf_count())
    throw TreeError("expected " + std::to_string(shape.leaf_count()) +
                    " leaf labels, got " + std::to_string(labels.size()));
  int next_id = 0;
  std::size_t next_leaf = 0;
  return LabeledTree(build(shape, &labels, nullptr, next_id, next_leaf));
}

bool LabeledTree::single_leaf() const { return root_->label.has_value(); }

const DoublingChain& LabeledTree::root_label() const {
  if (!single_leaf()) throw TreeError("tree is not a single leaf");
  return *root_->label;
}

std::size_t LabeledTree::leaf_count() const { return count_leaves(root_); }

std::vector<LabeledTree::View> LabeledTree::nodes() const {
  std::vector<View> out;
  collect_views(root_, 0, out);
  return out;
}

std::optional<LabeledTree::View> LabeledTree::find(int id) const {
  for (const View& v : nodes())
    if (v.id == id) return v;
  return std::nullopt;
}

std::vector<LabeledTree::Candidate> LabeledTree::collapsible() const {
  std::vector<Candidate> out;
  collect_collapsible(root_, 0, out);
  return out;
}

std::string LabeledTree::text() const { return node_text(root_); }

HeddenReport hedden_condition(const DoublingChain& chain, const KnotDatabase& db) {
  HeddenReport report;
  report.entries.reserve(chain.ops.size());
  for (std::size_t i = 0; i < chain.ops.size(); ++i) {
    const DoublingOp& op = chain.ops[i];
    HeddenEntry entry;
    entry.index = i;
    entry.companion = op.companion;
    entry.twist = op.twist;
    entry.companion_tau = tau(op.companion, db);
    entry.satisfied = op.twist < 2 * entry.companion_tau;
    report.holds = report.holds && entry.satisfied;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

ComputedRu compute_ru(const DoublingChain& qchain) {
  if (qchain.ops.empty()) throw TreeError("compute_ru: empty chain");
  const std::size_t l = qchain.ops.size();

  if (l == 1) {
    const DoublingOp& q1 = qchain.ops.front();
    KnotExpr r = connected_sum(q1.companion, reverse(q1.companion));
    return {normalize(r).expr(), checked_twist(2 * q1.twist)};
  }

  // The chain is innermost-first, but the outermost collapsed operator
  // feeds the innermost connected-sum factor of R, so the indices run
  // backwards: ops[l-1] is summed with its reverse at twist 2 t_l, ops[l-2]
  // doubles that, and ops[l-3] ... ops[0] wrap around the outside.
  const DoublingOp& ql = qchain.ops[l - 1];
  const DoublingOp& qprev = qchain.ops[l - 2];
  KnotExpr core = doubling(qprev.companion, qprev.twist,
                           connected_sum(ql.companion, reverse(ql.companion)),
                           checked_twist(2 * ql.twist));
  for (std::size_t i = l - 2; i-- > 0;)
    core = doubling(qchain.ops[i].companion, qchain.ops[i].twist, std::move(core), 0);
  return {normalize(core).expr(), 0};
}

std::pair<LabeledTree, CollapseRecord> collapse_pair(const LabeledTree& tree,
                                                     int node_id,
                                                     RoleAssignment roles,
                                                     const KnotDatabase* db) {
  const LabeledTree::Node* node = locate(tree.root_, node_id);
  if (!node) throw TreeError("no node with id " + std::to_string(node_id));
  if (node->label) throw TreeError("node " + std::to_string(node_id) + " is a leaf");
  if (!node->left->label || !node->right->label)
    throw TreeError("children of node " + std::to_string(node_id) +
                    " are not both leaves");

  const bool left_is_p = roles == RoleAssignment::LeftIsP;
  const LabeledTree::Node* p = left_is_p ? node->left.get() : node->right.get();
  const LabeledTree::Node* q = left_is_p ? node->right.get() : node->left.get();

  CollapseRecord record;
  record.node_id = node_id;
  record.p_leaf_id = p->id;
  record.q_leaf_id = q->id;
  record.roles = roles;
  record.p_chain = *p->label;
  record.q_chain = *q->label;
  record.l = record.q_chain.ops.size();
  ComputedRu ru = compute_ru(record.q_chain);
  record.r = ru.r;
  record.u = ru.u;
  record.new_label.ops.reserve(1 + record.p_chain.ops.size());
  record.new_label.ops.push_back({record.r, record.u});  // D[R,u] is innermost
  record.new_label.ops.insert(record.new_label.ops.end(),
                              record.p_chain.ops.begin(),
                              record.p_chain.ops.end());
  if (db) record.hedden = hedden_condition(record.new_label, *db);
  record.covering_moves = {kCoveringSublink, kCoveringBranchedDoubleCover};

  auto leaf = std::make_shared<LabeledTree::Node>();
  leaf->id = node_id;
  leaf->label = record.new_label;
  LabeledTree out(replace_node(tree.root_, node_id, leaf));
  return {std::move(out), std::move(record)};
}

CollapseStrategy CollapseStrategy::custom(std::vector<int> order) {
  CollapseStrategy s;
  s.kind = Kind::Custom;
  s.order = std::move(order);
  return s;
}

CollapseStrategy CollapseStrategy::parse(std::string_view text) {
  if (text == "deepest-leftmost") return deepest_leftmost();
  constexpr std::string_view prefix = "custom:";
  if (text.substr(0, prefix.size()) == prefix) {
    std::vector<int> order;
    std::string_view rest = text.substr(prefix.size());
    while (!rest.empty()) {
      const std::size_t comma = rest.find(',');
      const std::string_view tok = rest.substr(0, comma);
      try {
        std::size_t used = 0;
        const int id = std::stoi(std::string(tok), &used);
        if (used != tok.size()) throw std::invalid_argument("trailing");
        order.push_back(id);
      } catch (const std::exception&) {
        throw Error("bad node id in collapse strategy: \"" + std::string(tok) + "\"");
      }
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (order.empty()) throw Error("custom collapse strategy needs node ids");
    return custom(std::move(order));
  }
  throw Error("unknown collapse strategy: \"" + std::string(text) + "\"");
}

std::string CollapseStrategy::text() const {
  if (kind == Kind::DeepestLeftmost) return "deepest-leftmost";
  std::string out = "custom:";
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(order[i]);
  }
  return out;
}

CollapseResult collapse_full(const LabeledTree& tree,
                             const CollapseStrategy& strategy,
                             RoleAssignment roles, const KnotDatabase* db) {
  CollapseResult result;
  LabeledTree current = tree;
  std::size_t custom_pos = 0;

  while (!current.single_leaf()) {
    const auto candidates = current.collapsible();
    assert(!candidates.empty());  // every binary tree has a sibling leaf pair
    int target = candidates.front().id;
    if (strategy.kind == CollapseStrategy::Kind::DeepestLeftmost) {
      int best_depth = candidates.front().depth;
      for (const auto& c : candidates) {
        if (c.depth > best_depth) {  // preorder keeps the leftmost on ties
          best_depth = c.depth;
          target = c.id;
        }
      }
    } else {
      if (custom_pos >= strategy.order.size())
        throw TreeError("collapse order exhausted before the tree was fully "
                        "collapsed");
      target = strategy.order[custom_pos++];
    }
    auto [next, record] = collapse_pair(current, target, roles, db);
    result.records.push_back(std::move(record));
    current = std::move(next);
  }
  if (strategy.kind == CollapseStrategy::Kind::Custom &&
      custom_pos != strategy.order.size())
    throw TreeError("collapse order lists more steps than the tree has");

  result.chain = current.root_label();
  return result;
}

LabeledTree wh_plus_bing_labeled(const TreeShape& shape) {
  DoublingChain wh_plus;
  wh_plus.ops.push_back({KnotExpr{}, -1});
  return LabeledTree::uniform(shape, wh_plus);
}

KnotExpr chain_apply(const DoublingChain& chain, KnotExpr base) {
  KnotExpr acc = std::move(base);
  for (const DoublingOp& op : chain.ops)
    acc = doubling(op.companion, op.twist, std::move(acc), 0);
  return acc;
}

}  // namespace bingtau
