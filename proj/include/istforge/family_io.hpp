#pragma once

#include <iosfwd>
#include <string>

#include "istforge/spanning_family.hpp"

namespace istforge {

/// {"root": r, "parents": [[...], ...]} with -1 marking the root's parent.
std::string family_to_json(const SpanningTreeFamily& fam);

/// Parses the JSON form. Throws ParseError on malformed input or when the
/// arrays disagree with `expected_n` (pass 0 to skip the size check).
SpanningTreeFamily family_from_json(const std::string& text, std::size_t expected_n = 0);

void write_family(const SpanningTreeFamily& fam, const std::string& path);
SpanningTreeFamily read_family(const std::string& path, std::size_t expected_n = 0);

}  // namespace istforge
