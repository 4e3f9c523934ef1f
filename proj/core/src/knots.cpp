#include "bingtau/knots.hpp"

#include <cstdlib>

#include "bingtau/errors.hpp"

namespace bingtau {

namespace {

constexpr std::int64_t kValueBound = std::int64_t{1} << 31;

bool identifier_ok(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                    (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

void check_bound(const KnotRecord& r, const char* field,
                 std::optional<std::int64_t> v) {
  if (v && (*v < -kValueBound || *v > kValueBound))
    throw DatabaseError("knot " + r.name + ": " + field + " out of range");
}

}  // namespace

void validate(const KnotRecord& r) {
  if (!identifier_ok(r.name))
    throw DatabaseError("invalid knot name: \"" + r.name + "\"");
  check_bound(r, "tau", r.tau);
  check_bound(r, "tb", r.tb);
  check_bound(r, "genus", r.genus);
  check_bound(r, "genus4", r.genus4);
  if (r.genus && *r.genus < 0)
    throw DatabaseError("knot " + r.name + ": genus must be non-negative");
  if (r.genus4 && *r.genus4 < 0)
    throw DatabaseError("knot " + r.name + ": genus4 must be non-negative");
  if (r.tau && r.genus4 && std::llabs(*r.tau) > *r.genus4)
    throw DatabaseError("knot " + r.name + ": |tau| exceeds genus4");
  if (r.genus && r.genus4 && *r.genus4 > *r.genus)
    throw DatabaseError("knot " + r.name + ": genus4 exceeds genus");
  if (r.sqp && *r.sqp && r.tau && r.genus && *r.tau != *r.genus)
    throw DatabaseError("knot " + r.name +
                        ": strongly quasipositive but tau != genus");
}

KnotDatabase KnotDatabase::builtin() {
  KnotDatabase db;
  db.add_source("<builtin>");
  db.upsert({.name = "O",
             .tau = 0,
             .tb = -1,
             .genus = 0,
             .genus4 = std::nullopt,
             .sqp = true,
             .notes = "the unknot",
             .source = "builtin"});
  db.upsert({.name = "RHT",
             .tau = 1,
             .tb = 1,
             .genus = 1,
             .genus4 = std::nullopt,
             .sqp = true,
             .notes = "right-handed trefoil",
             .source = "external"});
  db.upsert({.name = "LHT",
             .tau = -1,
             .tb = std::nullopt,
             .genus = std::nullopt,
             .genus4 = std::nullopt,
             .sqp = std::nullopt,
             .notes = "left-handed trefoil",
             .source = "external"});
  db.upsert({.name = "4_1",
             .tau = 0,
             .tb = std::nullopt,
             .genus = std::nullopt,
             .genus4 = std::nullopt,
             .sqp = std::nullopt,
             .notes = "figure-eight knot",
             .source = "external"});
  return db;
}

void KnotDatabase::upsert(KnotRecord record) {
  validate(record);
  if (record.name == "O" && records_.count("O"))
    throw DatabaseError("reserved name \"O\" may not be redefined");
  records_[record.name] = std::move(record);
}

const KnotRecord* KnotDatabase::find(std::string_view name) const {
  auto it = records_.find(name);
  return it == records_.end() ? nullptr : &it->second;
}

const KnotRecord& KnotDatabase::require(std::string_view name) const {
  const KnotRecord* r = find(name);
  if (!r) throw UnknownKnotError(std::string(name));
  return *r;
}

std::int64_t KnotDatabase::tau_of(std::string_view name) const {
  const KnotRecord& r = require(name);
  if (!r.tau) throw MissingInvariantError(r.name, "tau");
  return *r.tau;
}

std::vector<const KnotRecord*> KnotDatabase::records_sorted() const {
  std::vector<const KnotRecord*> out;
  out.reserve(records_.size());
  for (const auto& [_, rec] : records_) out.push_back(&rec);
  return out;
}

}  // namespace bingtau
