#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "bingtau/knots.hpp"

namespace bingtau {

// Loads a knot database JSON document into `db`, overriding existing
// records name by name.  Document layout:
//
//   {"knots": [{"name": "RHT", "tau": 1, "tb": 1, "genus": 1,
//               "genus4": 1, "sqp": true, "notes": "..."}, ...]}
//
// Only "name" is required.  Names must be unique within one document and
// "O" may never be redefined.  Throws DatabaseError on malformed input.
void load_database_text(KnotDatabase& db, std::string_view json_text,
                        std::string source_label);

// As above, reading from a file; the path becomes the provenance label.
void load_database_file(KnotDatabase& db, const std::filesystem::path& path);

}  // namespace bingtau
