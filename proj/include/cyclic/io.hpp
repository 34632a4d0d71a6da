#pragma once

// JSON files: instances {d, n, simplices}, triangulations {d, n, facets} and
// certificates. Vertices are 1-based. A "vertices" array is written only when
// the ground set is not [n].

#include <string>
#include <string_view>

#include "json.hpp"

#include "cyclic/counterexamples.hpp"

namespace cyclic {

/// Malformed file; the message carries line and column.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, int line, int column)
      : InvalidInput(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line(line),
        column(column) {}
  int line;
  int column;
};

nlohmann::json to_json(const Complex& f);
nlohmann::json to_json(const Triangulation& t);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const SearchStats& s);

Complex complex_from_json(const nlohmann::json& j);
/// The "simplices" list with shape checks only; members may overlap.
std::vector<Simplex> simplices_from_json(const nlohmann::json& j);
Triangulation triangulation_from_json(const nlohmann::json& j);
Certificate certificate_from_json(const nlohmann::json& j);

/// Parses text, mapping syntax errors to ParseError with line and column.
nlohmann::json parse_json(std::string_view text);

Complex parse_instance(std::string_view text);
Triangulation parse_triangulation(std::string_view text);
Certificate parse_certificate(std::string_view text);

}  // namespace cyclic
