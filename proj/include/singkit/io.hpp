#pragma once

#include <map>
#include <string>
#include <vector>

#include "singkit/ideal.hpp"
#include "singkit/isomorphy.hpp"

namespace singkit {

// Ideal files:
//   vars: x,y,z
//   order: local|global|lex
//   minpoly: theta^2 + 1386/6089     (optional)
//   <one generator per line>
// Blank lines and text after '#' are ignored. Errors are SyntaxError with line/column.
Ideal parse_ideal_text(const std::string& text);
Ideal load_ideal(const std::string& path);
std::string format_ideal(const Ideal& I);

// Map files: the target header (vars, optional minpoly) then "s1 -> <polynomial>" lines.
// Source variables are the left-hand sides in file order.
AlgebraMap parse_map_text(const std::string& text);
AlgebraMap load_map(const std::string& path);
std::string format_map(const AlgebraMap& map);
/// Reorders the images to follow `source` (every source variable must be mapped).
AlgebraMap align_map(const AlgebraMap& map, const RingPtr& source);

// Shape files: "s1: y, y^2" per line, naming target basis monomials per source variable.
std::map<std::string, std::vector<std::string>> parse_shape_text(const std::string& text);
std::map<std::string, std::vector<std::string>> load_shape(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace singkit
