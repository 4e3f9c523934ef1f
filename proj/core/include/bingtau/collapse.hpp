#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bingtau/expr.hpp"
#include "bingtau/knots.hpp"
#include "bingtau/tau.hpp"
#include "bingtau/tree.hpp"

namespace bingtau {

// The collapse calculus on labeled binary trees.
//
// A leaf label is an ordered chain of doubling operators, innermost first:
// the chain [(P_1,s_1),...,(P_k,s_k)] denotes the composite satellite
// D[P_k,s_k] o ... o D[P_1,s_1].  Collapsing a sibling pair of leaves
// replaces them by a single leaf whose chain gains a new innermost operator
// D[R,u] computed from the Q-role chain:
//
//   l = 1:  R = Q_1 # r(Q_1),  u = 2 t_1
//   l > 1:  R = D[Q_1,t_1]( ... D[Q_{l-2},t_{l-2}]( D[Q_{l-1},t_{l-1}](
//                 Q_l # r(Q_l), 2 t_l ) ) ... ),  u = 0
//
// Note the order reversal: the innermost operator of the collapsed chain
// becomes the outermost operator of R.  Each collapse stands for a pair of
// covering moves (sublink, then double branched cover with p = 2) and
// preserves the homology-sliceness class being obstructed.

struct DoublingOp {
  KnotExpr companion;
  std::int64_t twist = 0;

  bool operator==(const DoublingOp& rhs) const {
    return twist == rhs.twist && companion == rhs.companion;
  }
};

struct DoublingChain {
  std::vector<DoublingOp> ops;  // ops[0] is innermost

  bool operator==(const DoublingChain& rhs) const { return ops == rhs.ops; }
};

// "[(O,-2),(O,-1)]"
std::string to_text(const DoublingChain& chain);

// Which sibling takes the P role (its chain survives outermost); the other
// is the Q role (swallowed into the new innermost operator).  The default
// is LeftIsP: right sibling = Q, the branched-cover component.
enum class RoleAssignment : std::uint8_t { LeftIsP, LeftIsQ };

const char* to_string(RoleAssignment r);
RoleAssignment role_from_string(std::string_view text);  // throws Error

struct CollapseRecord;

// A binary tree with chain-labeled leaves and stable node identifiers.
// Identifiers are assigned in preorder at construction; a collapse replaces
// an internal node by a leaf that keeps the node's identifier, so recorded
// steps stay addressable during replay.
class LabeledTree {
 public:
  // Every leaf of `shape` gets a copy of `label`.
  static LabeledTree uniform(const TreeShape& shape, const DoublingChain& label);

  // Leaf labels in left-to-right order; throws TreeError on a count
  // mismatch or an empty chain.
  static LabeledTree from_labels(const TreeShape& shape,
                                 std::vector<DoublingChain> labels);

  bool single_leaf() const;
  const DoublingChain& root_label() const;  // single-leaf trees only
  std::size_t leaf_count() const;

  struct View {
    int id = 0;
    int depth = 0;
    bool is_leaf = false;
    const DoublingChain* label = nullptr;  // leaves only
    int left_id = -1, right_id = -1;       // internal nodes only
  };
  std::vector<View> nodes() const;          // preorder
  std::optional<View> find(int id) const;

  // Internal nodes whose children are both leaves, in preorder.
  struct Candidate {
    int id = 0;
    int depth = 0;
  };
  std::vector<Candidate> collapsible() const;

  std::string text() const;  // labeled shape, for traces

  struct Node;  // implementation detail, defined in collapse.cpp

 private:
  using NodePtr = std::shared_ptr<const Node>;
  explicit LabeledTree(NodePtr root) : root_(std::move(root)) {}
  NodePtr root_;

  friend std::pair<LabeledTree, CollapseRecord> collapse_pair(
      const LabeledTree&, int, RoleAssignment, const KnotDatabase*);
};

// Per-operator report for the Hedden condition twist < 2 tau(companion).
struct HeddenEntry {
  std::size_t index = 0;  // 0-based position in the chain, innermost first
  KnotExpr companion;
  std::int64_t twist = 0;
  TauValue companion_tau = 0;
  bool satisfied = false;
};

struct HeddenReport {
  bool holds = true;
  std::vector<HeddenEntry> entries;
};

// True iff twist_i < 2 tau(companion_i) for every operator in the chain.
HeddenReport hedden_condition(const DoublingChain& chain, const KnotDatabase& db);

// One recorded collapse step.
struct CollapseRecord {
  int tree_index = 1;  // which input tree (Hopf pipelines use 1 and 2)
  int node_id = 0;
  int p_leaf_id = 0;
  int q_leaf_id = 0;
  RoleAssignment roles = RoleAssignment::LeftIsP;
  std::size_t l = 0;  // length of the q-chain
  DoublingChain p_chain;
  DoublingChain q_chain;
  KnotExpr r;  // normalized
  std::int64_t u = 0;
  DoublingChain new_label;
  std::optional<HeddenReport> hedden;  // filled when a database is supplied
  std::vector<std::string> covering_moves;
};

inline constexpr const char* kCoveringSublink = "sublink";
inline constexpr const char* kCoveringBranchedDoubleCover =
    "branched_double_cover(p=2,a=1)";

// (R,u) for a non-empty q-chain, with R returned in normal form.
struct ComputedRu {
  KnotExpr r;
  std::int64_t u = 0;
};
ComputedRu compute_ru(const DoublingChain& qchain);

// Collapses the sibling-leaf pair under `node_id`.  Throws TreeError when
// the node is missing, is a leaf, or has a non-leaf child.
std::pair<LabeledTree, CollapseRecord> collapse_pair(
    const LabeledTree& tree, int node_id, RoleAssignment roles,
    const KnotDatabase* db = nullptr);

// Collapse order: the deepest (then leftmost) sibling pair, or an explicit
// node-id sequence.
struct CollapseStrategy {
  enum class Kind : std::uint8_t { DeepestLeftmost, Custom };
  Kind kind = Kind::DeepestLeftmost;
  std::vector<int> order;

  static CollapseStrategy deepest_leftmost() { return {}; }
  static CollapseStrategy custom(std::vector<int> order);
  // "deepest-leftmost" or "custom:<id>,<id>,..."
  static CollapseStrategy parse(std::string_view text);
  std::string text() const;
};

struct CollapseResult {
  DoublingChain chain;  // label of the final single leaf
  std::vector<CollapseRecord> records;
};

// Collapses the whole tree to a single leaf, emitting leaf_count - 1
// records.  `roles` applies to every step.
CollapseResult collapse_full(const LabeledTree& tree,
                             const CollapseStrategy& strategy = {},
                             RoleAssignment roles = RoleAssignment::LeftIsP,
                             const KnotDatabase* db = nullptr);

// The labeled tree realizing the all-positive Whitehead double of the
// iterated Bing double with the given shape: every leaf gets the
// one-operator chain [(O,-1)].
LabeledTree wh_plus_bing_labeled(const TreeShape& shape);

// Applies a chain to a base knot, innermost first; each operator
// contributes the companion slot and the accumulating knot enters the
// argument slot with twist 0.
KnotExpr chain_apply(const DoublingChain& chain, KnotExpr base);

}  // namespace bingtau
