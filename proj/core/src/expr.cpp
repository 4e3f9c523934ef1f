#include "bingtau/expr.hpp"

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "bingtau/errors.hpp"

namespace bingtau {

struct KnotExpr::Node {
  ExprKind kind;
  std::string name;          // Base
  KnotExpr a;                // Mirror/Reverse operand, Sum left, Doubling companion
  KnotExpr b;                // Sum right, Doubling argument
  std::int64_t twist_a = 0;  // Doubling companion twist
  std::int64_t twist_b = 0;  // Doubling argument twist
};

namespace {

bool valid_identifier(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                    (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

}  // namespace

std::int64_t checked_twist(std::int64_t t) {
  if (t < kMinTwist || t > kMaxTwist)
    throw TwistRangeError("twist out of range: " + std::to_string(t));
  return t;
}

KnotExpr::KnotExpr() = default;  // null node = unknot

ExprKind KnotExpr::kind() const noexcept {
  return node_ ? node_->kind : ExprKind::Unknot;
}

const std::string& KnotExpr::base_name() const {
  assert(kind() == ExprKind::Base);
  return node_->name;
}

const KnotExpr& KnotExpr::operand() const {
  assert(kind() == ExprKind::Mirror || kind() == ExprKind::Reverse);
  return node_->a;
}

const KnotExpr& KnotExpr::left() const {
  assert(kind() == ExprKind::Sum);
  return node_->a;
}

const KnotExpr& KnotExpr::right() const {
  assert(kind() == ExprKind::Sum);
  return node_->b;
}

const KnotExpr& KnotExpr::companion() const {
  assert(kind() == ExprKind::Doubling);
  return node_->a;
}

std::int64_t KnotExpr::companion_twist() const {
  assert(kind() == ExprKind::Doubling);
  return node_->twist_a;
}

const KnotExpr& KnotExpr::argument() const {
  assert(kind() == ExprKind::Doubling);
  return node_->b;
}

std::int64_t KnotExpr::argument_twist() const {
  assert(kind() == ExprKind::Doubling);
  return node_->twist_b;
}

bool KnotExpr::operator==(const KnotExpr& rhs) const noexcept {
  if (node_ == rhs.node_) return true;
  if (kind() != rhs.kind()) return false;
  switch (kind()) {
    case ExprKind::Unknot:
      return true;
    case ExprKind::Base:
      return node_->name == rhs.node_->name;
    case ExprKind::Mirror:
    case ExprKind::Reverse:
      return node_->a == rhs.node_->a;
    case ExprKind::Sum:
      return node_->a == rhs.node_->a && node_->b == rhs.node_->b;
    case ExprKind::Doubling:
      return node_->twist_a == rhs.node_->twist_a &&
             node_->twist_b == rhs.node_->twist_b && node_->a == rhs.node_->a &&
             node_->b == rhs.node_->b;
  }
  return false;
}

std::size_t KnotExpr::node_count() const noexcept {
  switch (kind()) {
    case ExprKind::Unknot:
    case ExprKind::Base:
      return 1;
    case ExprKind::Mirror:
    case ExprKind::Reverse:
      return 1 + node_->a.node_count();
    case ExprKind::Sum:
    case ExprKind::Doubling:
      return 1 + node_->a.node_count() + node_->b.node_count();
  }
  return 1;
}

KnotExpr unknot() { return KnotExpr{}; }

KnotExpr make_base(std::string_view name) {
  if (name == "O") return KnotExpr{};
  if (!valid_identifier(name))
    throw Error("invalid knot name: \"" + std::string(name) + "\"");
  auto node = std::make_shared<KnotExpr::Node>();
  node->kind = ExprKind::Base;
  node->name = std::string(name);
  return KnotExpr(std::move(node));
}

KnotExpr mirror(KnotExpr e) {
  auto node = std::make_shared<KnotExpr::Node>();
  node->kind = ExprKind::Mirror;
  node->a = std::move(e);
  return KnotExpr(std::move(node));
}

KnotExpr reverse(KnotExpr e) {
  auto node = std::make_shared<KnotExpr::Node>();
  node->kind = ExprKind::Reverse;
  node->a = std::move(e);
  return KnotExpr(std::move(node));
}

KnotExpr negate(KnotExpr e) { return mirror(reverse(std::move(e))); }

KnotExpr connected_sum(KnotExpr a, KnotExpr b) {
  auto node = std::make_shared<KnotExpr::Node>();
  node->kind = ExprKind::Sum;
  node->a = std::move(a);
  node->b = std::move(b);
  return KnotExpr(std::move(node));
}

KnotExpr doubling(KnotExpr j, std::int64_t s, KnotExpr k, std::int64_t t) {
  checked_twist(s);
  checked_twist(t);
  auto node = std::make_shared<KnotExpr::Node>();
  node->kind = ExprKind::Doubling;
  node->a = std::move(j);
  node->b = std::move(k);
  node->twist_a = s;
  node->twist_b = t;
  return KnotExpr(std::move(node));
}

KnotExpr whitehead(ClaspSign sign, KnotExpr k, std::int64_t t) {
  const std::int64_t clasp = sign == ClaspSign::Positive ? -1 : +1;
  return doubling(KnotExpr{}, clasp, std::move(k), t);
}

std::string to_text(const KnotExpr& e) {
  switch (e.kind()) {
    case ExprKind::Unknot:
      return "O";
    case ExprKind::Base:
      return e.base_name();
    case ExprKind::Mirror:
      return "m(" + to_text(e.operand()) + ")";
    case ExprKind::Reverse:
      return "r(" + to_text(e.operand()) + ")";
    case ExprKind::Sum:
      return to_text(e.left()) + " # " + to_text(e.right());
    case ExprKind::Doubling:
      return "D[" + to_text(e.companion()) + "," +
             std::to_string(e.companion_twist()) + "](" + to_text(e.argument()) +
             "," + std::to_string(e.argument_twist()) + ")";
  }
  return "O";
}

// ---------------------------------------------------------------------------
// Normalization.
//
// The rewrites below implement the symmetry identities of the doubling
// operator together with sum axioms:
//
//   D[J,s](K,t)^r = D[J^r,s](K,t) = D[J,s](K^r,t) = D[K,t](J,s)
//   m(D[J,s](K,t)) = D[m(J),-s](m(K),-t)
//   D[J,s](O,0) = O            (in either argument slot, via the swap)
//   sum: associative, commutative, O is the identity
//   m, r distribute over sums; m and r are involutions and commute
//
// All helpers take and return expressions already in normal form.

namespace {

KnotExpr norm_mirror(const KnotExpr& n);
KnotExpr norm_reverse(const KnotExpr& n);
KnotExpr norm_doubling(const KnotExpr& a, std::int64_t s, const KnotExpr& b,
                       std::int64_t t);

void collect_sum(const KnotExpr& n, std::vector<KnotExpr>& out) {
  if (n.kind() == ExprKind::Sum) {
    collect_sum(n.left(), out);
    collect_sum(n.right(), out);
  } else if (!n.is_unknot()) {
    out.push_back(n);
  }
}

// Right-nested sum of the given normalized operands, sorted canonically.
KnotExpr rebuild_sum(std::vector<KnotExpr> parts) {
  if (parts.empty()) return KnotExpr{};
  std::vector<std::pair<std::string, KnotExpr>> keyed;
  keyed.reserve(parts.size());
  for (auto& p : parts) keyed.emplace_back(to_text(p), std::move(p));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  KnotExpr acc = std::move(keyed.back().second);
  for (std::size_t i = keyed.size() - 1; i-- > 0;)
    acc = connected_sum(std::move(keyed[i].second), std::move(acc));
  return acc;
}

KnotExpr map_sum(const KnotExpr& n, KnotExpr (*f)(const KnotExpr&)) {
  std::vector<KnotExpr> parts;
  collect_sum(n, parts);
  for (auto& p : parts) p = f(p);
  return rebuild_sum(std::move(parts));
}

KnotExpr norm_mirror(const KnotExpr& n) {
  switch (n.kind()) {
    case ExprKind::Unknot:
      return n;
    case ExprKind::Base:
    case ExprKind::Reverse:  // operand is Base; Mirror sits on top
      return mirror(n);
    case ExprKind::Mirror:
      return n.operand();
    case ExprKind::Sum:
      return map_sum(n, &norm_mirror);
    case ExprKind::Doubling:
      return norm_doubling(norm_mirror(n.companion()), -n.companion_twist(),
                           norm_mirror(n.argument()), -n.argument_twist());
  }
  return n;
}

KnotExpr norm_reverse(const KnotExpr& n) {
  switch (n.kind()) {
    case ExprKind::Unknot:
      return n;
    case ExprKind::Base:
      return reverse(n);
    case ExprKind::Reverse:
      return n.operand();
    case ExprKind::Mirror:
      return norm_mirror(norm_reverse(n.operand()));
    case ExprKind::Sum:
      return map_sum(n, &norm_reverse);
    case ExprKind::Doubling:
      // Reversal floats onto one argument; norm_doubling picks the
      // canonical representative of the resulting class.
      return norm_doubling(norm_reverse(n.companion()), n.companion_twist(),
                           n.argument(), n.argument_twist());
  }
  return n;
}

struct DoublingSlot {
  KnotExpr expr;
  std::int64_t twist;
  std::string key;
};

bool slot_less(const DoublingSlot& x, const DoublingSlot& y) {
  if (x.key != y.key) return x.key < y.key;
  return x.twist < y.twist;
}

// Canonical doubling over normalized arguments.  Besides ordering the two
// argument pairs, this picks the smaller of the two representatives related
// by reversing both arguments (they denote the same knot, since a single
// reversal may float between the slots and two reversals cancel).
KnotExpr norm_doubling(const KnotExpr& a, std::int64_t s, const KnotExpr& b,
                       std::int64_t t) {
  if ((a.is_unknot() && s == 0) || (b.is_unknot() && t == 0)) return KnotExpr{};

  auto ordered_pair = [](KnotExpr x, std::int64_t xt, KnotExpr y, std::int64_t yt) {
    DoublingSlot p{std::move(x), xt, {}};
    DoublingSlot q{std::move(y), yt, {}};
    p.key = to_text(p.expr);
    q.key = to_text(q.expr);
    if (slot_less(q, p)) std::swap(p, q);
    return std::pair<DoublingSlot, DoublingSlot>{std::move(p), std::move(q)};
  };

  auto c1 = ordered_pair(a, s, b, t);
  auto c2 = ordered_pair(norm_reverse(a), s, norm_reverse(b), t);

  auto candidate_less = [](const auto& x, const auto& y) {
    if (x.first.key != y.first.key) return x.first.key < y.first.key;
    if (x.first.twist != y.first.twist) return x.first.twist < y.first.twist;
    if (x.second.key != y.second.key) return x.second.key < y.second.key;
    return x.second.twist < y.second.twist;
  };

  const auto& best = candidate_less(c2, c1) ? c2 : c1;
  return doubling(best.first.expr, best.first.twist, best.second.expr,
                  best.second.twist);
}

KnotExpr norm(const KnotExpr& e) {
  switch (e.kind()) {
    case ExprKind::Unknot:
    case ExprKind::Base:
      return e;
    case ExprKind::Mirror:
      return norm_mirror(norm(e.operand()));
    case ExprKind::Reverse:
      return norm_reverse(norm(e.operand()));
    case ExprKind::Sum: {
      std::vector<KnotExpr> parts;
      collect_sum(norm(e.left()), parts);
      collect_sum(norm(e.right()), parts);
      return rebuild_sum(std::move(parts));
    }
    case ExprKind::Doubling:
      return norm_doubling(norm(e.companion()), e.companion_twist(),
                           norm(e.argument()), e.argument_twist());
  }
  return e;
}

}  // namespace

NormalForm normalize(const KnotExpr& e) {
  KnotExpr n = norm(e);
  std::string text = to_text(n);
  return NormalForm(std::move(n), std::move(text));
}

std::string print_expr(const KnotExpr& e) { return normalize(e).text(); }

}  // namespace bingtau
