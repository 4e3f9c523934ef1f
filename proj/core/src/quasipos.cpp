#include "bingtau/quasipos.hpp"

#include <algorithm>
#include <cassert>
#include <optional>

#include "bingtau/errors.hpp"

namespace bingtau {

Annulus::Annulus(KnotExpr core, std::int64_t framing)
    : core(std::move(core)), framing(checked_twist(framing)) {}

struct PlumbingSurface::Rep {
  std::optional<Annulus> leaf;
  std::shared_ptr<const Rep> left, right;
};

PlumbingSurface::PlumbingSurface(std::shared_ptr<const Rep> rep)
    : node_(std::move(rep)) {}

PlumbingSurface::PlumbingSurface(Annulus leaf) {
  auto rep = std::make_shared<Rep>();
  rep->leaf = std::move(leaf);
  node_ = std::move(rep);
}

PlumbingSurface PlumbingSurface::plumb(PlumbingSurface a, PlumbingSurface b) {
  auto rep = std::make_shared<Rep>();
  rep->left = std::move(a.node_);
  rep->right = std::move(b.node_);
  return PlumbingSurface(std::move(rep));
}

bool PlumbingSurface::is_leaf() const { return node_->leaf.has_value(); }

const Annulus& PlumbingSurface::annulus() const {
  assert(is_leaf());
  return *node_->leaf;
}

PlumbingSurface PlumbingSurface::left() const {
  assert(!is_leaf());
  return PlumbingSurface(node_->left);
}

PlumbingSurface PlumbingSurface::right() const {
  assert(!is_leaf());
  return PlumbingSurface(node_->right);
}

std::vector<Annulus> PlumbingSurface::leaves() const {
  std::vector<Annulus> out;
  std::vector<std::shared_ptr<const Rep>> stack{node_};
  while (!stack.empty()) {
    auto rep = std::move(stack.back());
    stack.pop_back();
    if (rep->leaf) {
      out.push_back(*rep->leaf);
    } else {
      stack.push_back(rep->right);
      stack.push_back(rep->left);
    }
  }
  return out;
}

const char* to_string(SqpState s) {
  switch (s) {
    case SqpState::ProvenYes:
      return "proven_yes";
    case SqpState::ProvenNo:
      return "proven_no";
    case SqpState::Unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

void add_rule(std::vector<std::string>& rules, std::string rule) {
  if (std::find(rules.begin(), rules.end(), rule) == rules.end())
    rules.push_back(std::move(rule));
}

void merge_rules(std::vector<std::string>& into, const std::vector<std::string>& from) {
  for (const auto& r : from) add_rule(into, r);
}

// TB is only stored for plain named knots (and O).
std::optional<std::int64_t> tb_of(const KnotExpr& core, const KnotDatabase& db) {
  const NormalForm n = normalize(core);
  const KnotRecord* rec = nullptr;
  if (n.is_unknot())
    rec = db.find("O");
  else if (n.expr().kind() == ExprKind::Base)
    rec = db.find(n.expr().base_name());
  if (!rec) return std::nullopt;
  return rec->tb;
}

TriState sqp_of_normal(const KnotExpr& n, const KnotDatabase& db) {
  switch (n.kind()) {
    case ExprKind::Unknot:
      return {SqpState::ProvenYes, {rules::kUnknotDisk}};
    case ExprKind::Base: {
      const KnotRecord* rec = db.find(n.base_name());
      if (!rec || !rec->sqp) return {};
      if (*rec->sqp)
        return {SqpState::ProvenYes,
                {std::string(rules::kDatabaseFlag) + ": " + n.base_name()}};
      return {SqpState::ProvenNo,
              {std::string(rules::kDatabaseFlag) + ": " + n.base_name()}};
    }
    case ExprKind::Mirror:
    case ExprKind::Reverse:
      return {};  // not decidable from the implemented rules
    case ExprKind::Sum: {
      TriState a = sqp_of_normal(n.left(), db);
      TriState b = sqp_of_normal(n.right(), db);
      if (a.state == SqpState::ProvenYes && b.state == SqpState::ProvenYes) {
        TriState out{SqpState::ProvenYes, {rules::kSumClosure}};
        merge_rules(out.rules, a.rules);
        merge_rules(out.rules, b.rules);
        return out;
      }
      return {};
    }
    case ExprKind::Doubling: {
      TriState a = sqp_of_normal(n.companion(), db);
      TriState b = sqp_of_normal(n.argument(), db);
      if (a.state == SqpState::ProvenYes && b.state == SqpState::ProvenYes &&
          n.companion_twist() <= 0 && n.argument_twist() <= 0) {
        TriState out{SqpState::ProvenYes, {rules::kDoublingClosure}};
        merge_rules(out.rules, a.rules);
        merge_rules(out.rules, b.rules);
        return out;
      }
      return {};
    }
  }
  return {};
}

}  // namespace

TriState annulus_qp(const Annulus& a, const KnotDatabase& db) {
  const auto tb = tb_of(a.core, db);
  if (!tb) return {};
  const std::string detail = std::string(rules::kAnnulusTb) + " (framing " +
                             std::to_string(a.framing) + ", TB = " +
                             std::to_string(*tb) + ")";
  if (a.framing <= *tb) return {SqpState::ProvenYes, {detail}};
  return {SqpState::ProvenNo, {detail}};
}

TriState plumbing_qp(const PlumbingSurface& s, const KnotDatabase& db) {
  TriState out{SqpState::ProvenYes, {}};
  bool any_unknown = false;
  for (const Annulus& a : s.leaves()) {
    TriState leaf = annulus_qp(a, db);
    if (leaf.state == SqpState::ProvenNo) {
      TriState no{SqpState::ProvenNo, {rules::kPlumbingFactors}};
      merge_rules(no.rules, leaf.rules);
      return no;
    }
    if (leaf.state == SqpState::Unknown) {
      any_unknown = true;
      continue;
    }
    merge_rules(out.rules, leaf.rules);
  }
  if (any_unknown) return {};
  add_rule(out.rules, rules::kPlumbingFactors);
  return out;
}

TriState sqp(const KnotExpr& e, const KnotDatabase& db) {
  return sqp_of_normal(normalize(e).expr(), db);
}

Verdict sqp_slice_obstruction(const KnotExpr& e, const KnotDatabase& db) {
  const NormalForm nf = normalize(e);
  const KnotExpr& n = nf.expr();

  Verdict out;
  if (n.is_unknot()) {
    out.justification = {"the expression normalizes to O"};
    return out;
  }

  if (n.kind() == ExprKind::Base) {
    TriState s = sqp_of_normal(n, db);
    if (s.state != SqpState::ProvenYes) {
      out.justification = {"strong quasipositivity not established"};
      return out;
    }
    // Nontriviality of a bare name needs a positive genus or tau witness.
    const KnotRecord* rec = db.find(n.base_name());
    const bool nontrivial = rec && ((rec->genus && *rec->genus > 0) ||
                                    (rec->tau && *rec->tau > 0));
    if (!nontrivial) {
      out.justification = {"strongly quasipositive, but nontriviality not "
                           "witnessed by stored genus or tau"};
      return out;
    }
    out.kind = VerdictKind::NotSmoothlySlice;
    out.tau = rec->genus ? *rec->genus : *rec->tau;
    out.justification = s.rules;
    out.justification.push_back(rules::kSqpNotSlice);
    out.justification.push_back(rules::kTauEqualsGenus);
    return out;
  }

  if (n.kind() == ExprKind::Doubling) {
    // An (O,0) argument pair cannot survive normalization, so a normalized
    // doubling is automatically nontrivial once it is strongly quasipositive.
    TriState s = sqp_of_normal(n, db);
    if (s.state != SqpState::ProvenYes) {
      PlumbingSurface surface = PlumbingSurface::plumb(
          PlumbingSurface(Annulus(n.companion(), n.companion_twist())),
          PlumbingSurface(Annulus(n.argument(), n.argument_twist())));
      TriState viaSurface = plumbing_qp(surface, db);
      if (viaSurface.state == SqpState::ProvenYes) {
        s = std::move(viaSurface);
        add_rule(s.rules, rules::kSurfaceRoute);
      }
    }
    if (s.state != SqpState::ProvenYes) {
      out.justification = {"strong quasipositivity not established"};
      return out;
    }
    out.kind = VerdictKind::NotSmoothlySlice;
    out.tau = 1;  // genus of the plumbed surface A(J,s)*A(K,t)
    out.justification = s.rules;
    out.justification.push_back(rules::kNontrivialDoubling);
    out.justification.push_back(rules::kSqpNotSlice);
    out.justification.push_back(rules::kTauEqualsGenus);
    return out;
  }

  out.justification = {"no strong quasipositivity rule applies to this "
                       "expression shape"};
  return out;
}

}  // namespace bingtau
