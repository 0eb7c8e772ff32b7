#include "istforge/family_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "istforge/errors.hpp"

namespace istforge {

using nlohmann::json;

std::string family_to_json(const SpanningTreeFamily& fam) {
  json parents = json::array();
  for (const auto& p : fam.parents) {
    json row = json::array();
    for (Vertex v : p) {
      if (v == kNoVertex) {
        row.push_back(-1);
      } else {
        row.push_back(v);
      }
    }
    parents.push_back(std::move(row));
  }
  json doc;
  doc["root"] = fam.root == kNoVertex ? json(-1) : json(fam.root);
  doc["parents"] = std::move(parents);
  return doc.dump() + "\n";
}

SpanningTreeFamily family_from_json(const std::string& text, std::size_t expected_n) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(1, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("root") || !doc.contains("parents") || !doc["parents"].is_array()) {
    throw ParseError(1, "expected an object with \"root\" and \"parents\"");
  }
  SpanningTreeFamily fam;
  const auto root = doc["root"];
  if (!root.is_number_integer() || root.get<std::int64_t>() < 0) throw ParseError(1, "root must be a vertex id");
  fam.root = root.get<Vertex>();
  for (const auto& row : doc["parents"]) {
    if (!row.is_array()) throw ParseError(1, "each parents entry must be an array");
    if (expected_n != 0 && row.size() != expected_n) {
      throw ParseError(1, "parent array of length " + std::to_string(row.size()) + " does not match graph with " +
                              std::to_string(expected_n) + " vertices");
    }
    std::vector<Vertex> p;
    p.reserve(row.size());
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw ParseError(1, "parent entries must be integers");
      const auto val = x.get<std::int64_t>();
      if (val == -1) {
        p.push_back(kNoVertex);
      } else if (val < 0 || (expected_n != 0 && static_cast<std::size_t>(val) >= expected_n)) {
        throw ParseError(1, "parent id " + std::to_string(val) + " out of range");
      } else {
        p.push_back(static_cast<Vertex>(val));
      }
    }
    fam.parents.push_back(std::move(p));
  }
  if (expected_n != 0 && fam.root >= expected_n) throw ParseError(1, "root out of range");
  return fam;
}

void write_family(const SpanningTreeFamily& fam, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << family_to_json(fam);
  if (!out) throw IoError("failed writing " + path);
}

SpanningTreeFamily read_family(const std::string& path, std::size_t expected_n) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return family_from_json(buf.str(), expected_n);
}

}  // namespace istforge
