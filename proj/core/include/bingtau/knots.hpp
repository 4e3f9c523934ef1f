#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bingtau {

// A declared base knot together with its stored invariants.  Values for
// non-unknot knots are external knot-table data, never derived here.
struct KnotRecord {
  std::string name;
  std::optional<std::int64_t> tau;     // Ozsvath-Szabo tau
  std::optional<std::int64_t> tb;      // maximal Thurston-Bennequin number
  std::optional<std::int64_t> genus;   // Seifert genus, >= 0
  std::optional<std::int64_t> genus4;  // smooth 4-genus, >= 0
  std::optional<bool> sqp;             // strongly quasipositive flag
  std::string notes;
  std::string source;  // provenance label ("builtin", file path, ...)
};

// Throws DatabaseError unless the record satisfies:
//   |tau| <= genus4 and genus4 <= genus when the fields are present,
//   tau = genus when sqp is true and both are present,
//   genus, genus4 >= 0, |values| <= 2^31, and the name is an identifier.
void validate(const KnotRecord& record);

// Name-keyed collection of records.  Insertion order of sources is kept for
// certificate provenance; per-name overrides are last-writer-wins.  The
// reserved name "O" may be inserted once and never redefined.
class KnotDatabase {
 public:
  KnotDatabase() = default;

  // O, RHT (right-handed trefoil), LHT, 4_1 with knot-table values.
  static KnotDatabase builtin();

  // Validates and inserts `record`, replacing any existing record of the
  // same name.  Throws DatabaseError for an attempted "O" redefinition.
  void upsert(KnotRecord record);

  const KnotRecord* find(std::string_view name) const;
  const KnotRecord& require(std::string_view name) const;  // UnknownKnotError

  // Tau of a named base knot; UnknownKnotError / MissingInvariantError.
  std::int64_t tau_of(std::string_view name) const;

  std::vector<const KnotRecord*> records_sorted() const;

  void add_source(std::string label) { sources_.push_back(std::move(label)); }
  const std::vector<std::string>& sources() const { return sources_; }

 private:
  std::map<std::string, KnotRecord, std::less<>> records_;
  std::vector<std::string> sources_;
};

}  // namespace bingtau
