#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>

namespace bingtau {

// Formal knot expressions.
//
// An expression is a finite tree built from the unknot O, named base knots,
// the mirror and reverse decorations, connected sums, and the two-infection
// doubling satellite D[J,s](K,t).  The positive/negative Whitehead doubles
// are sugar: Wh+(K,t) = D[O,-1](K,t) and Wh-(K,t) = D[O,+1](K,t).
//
// Values are immutable after construction and cheap to copy (shared
// subtrees).  Every operation below is a pure function, so expressions may
// be shared freely across threads.

enum class ExprKind : std::uint8_t { Unknot, Base, Mirror, Reverse, Sum, Doubling };

// Twist parameters live in [-2^31, 2^31).  Construction rejects anything
// else: the calculus only ever produces new twists as u = 2t or u = 0, so
// an out-of-range value is a fatal input error, never silently wrapped.
inline constexpr std::int64_t kMinTwist = -(std::int64_t{1} << 31);
inline constexpr std::int64_t kMaxTwist = (std::int64_t{1} << 31) - 1;

// Returns `t` unchanged or throws TwistRangeError.
std::int64_t checked_twist(std::int64_t t);

class KnotExpr {
 public:
  KnotExpr();  // the unknot

  ExprKind kind() const noexcept;
  bool is_unknot() const noexcept { return kind() == ExprKind::Unknot; }

  // Base
  const std::string& base_name() const;

  // Mirror, Reverse
  const KnotExpr& operand() const;

  // Sum
  const KnotExpr& left() const;
  const KnotExpr& right() const;

  // Doubling D[J,s](K,t): J = companion slot, (K,t) = argument slot.
  const KnotExpr& companion() const;
  std::int64_t companion_twist() const;
  const KnotExpr& argument() const;
  std::int64_t argument_twist() const;

  // Structural equality (no identities applied; compare normal forms for
  // equality modulo the symmetry identities).
  bool operator==(const KnotExpr& rhs) const noexcept;
  bool operator!=(const KnotExpr& rhs) const noexcept { return !(*this == rhs); }

  std::size_t node_count() const noexcept;

 private:
  struct Node;
  explicit KnotExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;

  friend KnotExpr make_base(std::string_view);
  friend KnotExpr mirror(KnotExpr);
  friend KnotExpr reverse(KnotExpr);
  friend KnotExpr connected_sum(KnotExpr, KnotExpr);
  friend KnotExpr doubling(KnotExpr, std::int64_t, KnotExpr, std::int64_t);
};

// Clasp sign of a Whitehead double.
enum class ClaspSign : std::uint8_t { Positive, Negative };

KnotExpr unknot();

// Base knot by name.  Names are identifiers over [A-Za-z0-9_]; the reserved
// name "O" yields the unknot.
KnotExpr make_base(std::string_view name);

KnotExpr mirror(KnotExpr e);
KnotExpr reverse(KnotExpr e);

// -K = mirror(reverse(K)), the concordance inverse.
KnotExpr negate(KnotExpr e);

KnotExpr connected_sum(KnotExpr a, KnotExpr b);

// D[J,s](K,t).  Throws TwistRangeError when a twist is out of range.
KnotExpr doubling(KnotExpr j, std::int64_t s, KnotExpr k, std::int64_t t);

// Wh+(K,t) = D[O,-1](K,t), Wh-(K,t) = D[O,+1](K,t).  An omitted twist is 0.
KnotExpr whitehead(ClaspSign sign, KnotExpr k, std::int64_t t = 0);

// Deterministic serialization in the expression DSL.  On normal forms this
// is the canonical text used for ordering, hashing, and certificates.
std::string to_text(const KnotExpr& e);

// A canonical representative of an expression's equivalence class under
// the doubling symmetry identities, sum associativity/commutativity with
// unknot absorption, and D[.,.](O,0) = O elimination.  Constructed only by
// normalize().
//
//   - Reverse appears only directly above Base.
//   - Mirror appears only directly above Base or Reverse.
//   - Sums are right-nested with operands in canonical text order.
//   - No Doubling retains an (O,0) argument pair.
//   - Doubling argument pairs are ordered canonically, and of the two
//     representatives related by reversing both arguments the smaller is
//     kept (reversal may float between the arguments of a doubling).
class NormalForm {
 public:
  const KnotExpr& expr() const noexcept { return expr_; }
  const std::string& text() const noexcept { return text_; }
  bool is_unknot() const noexcept { return expr_.is_unknot(); }

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.text_ == b.text_;
  }
  friend bool operator!=(const NormalForm& a, const NormalForm& b) {
    return !(a == b);
  }
  friend bool operator<(const NormalForm& a, const NormalForm& b) {
    return a.text_ < b.text_;
  }

 private:
  NormalForm(KnotExpr e, std::string t) : expr_(std::move(e)), text_(std::move(t)) {}
  KnotExpr expr_;
  std::string text_;

  friend NormalForm normalize(const KnotExpr&);
};

// Idempotent; preserves the tau invariant.
NormalForm normalize(const KnotExpr& e);

// Canonical serialization of normalize(e).
std::string print_expr(const KnotExpr& e);

}  // namespace bingtau

template <>
struct std::hash<bingtau::NormalForm> {
  std::size_t operator()(const bingtau::NormalForm& n) const noexcept {
    return std::hash<std::string>{}(n.text());
  }
};
