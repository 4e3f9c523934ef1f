#include "bingtau/database_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "bingtau/errors.hpp"

namespace bingtau {

namespace {

using nlohmann::json;

std::optional<std::int64_t> opt_int(const json& obj, const char* key,
                                    const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_number_integer())
    throw DatabaseError(where + ": \"" + key + "\" must be an integer");
  return it->get<std::int64_t>();
}

}  // namespace

void load_database_text(KnotDatabase& db, std::string_view json_text,
                        std::string source_label) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DatabaseError(source_label + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("knots") || !doc["knots"].is_array())
    throw DatabaseError(source_label +
                        ": expected an object with a \"knots\" array");

  std::set<std::string> seen;
  for (const json& entry : doc["knots"]) {
    if (!entry.is_object())
      throw DatabaseError(source_label + ": knot entries must be objects");
    if (!entry.contains("name") || !entry["name"].is_string())
      throw DatabaseError(source_label + ": knot entry missing \"name\"");

    KnotRecord rec;
    rec.name = entry["name"].get<std::string>();
    const std::string where = source_label + ", knot " + rec.name;
    if (!seen.insert(rec.name).second)
      throw DatabaseError(where + ": duplicate name within one database");
    if (rec.name == "O")
      throw DatabaseError(source_label +
                          ": reserved name \"O\" may not be redefined");

    rec.tau = opt_int(entry, "tau", where);
    rec.tb = opt_int(entry, "tb", where);
    rec.genus = opt_int(entry, "genus", where);
    rec.genus4 = opt_int(entry, "genus4", where);
    if (auto it = entry.find("sqp"); it != entry.end() && !it->is_null()) {
      if (!it->is_boolean())
        throw DatabaseError(where + ": \"sqp\" must be a boolean");
      rec.sqp = it->get<bool>();
    }
    if (auto it = entry.find("notes"); it != entry.end() && !it->is_null()) {
      if (!it->is_string())
        throw DatabaseError(where + ": \"notes\" must be a string");
      rec.notes = it->get<std::string>();
    }
    rec.source = source_label;
    db.upsert(std::move(rec));
  }
  db.add_source(std::move(source_label));
}

void load_database_file(KnotDatabase& db, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DatabaseError("cannot open database file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  load_database_text(db, buf.str(), path.string());
}

}  // namespace bingtau
