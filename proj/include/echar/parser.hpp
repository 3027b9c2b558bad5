#pragma once

#include "echar/groebner.hpp"

namespace echar {

/// A parsed polynomial-system file: field line, variable line, one
/// polynomial per following line. '#' starts a comment.
struct SystemFile {
  FieldPtr field;
  RingPtr ring;
  std::vector<Poly> polys;
  std::string field_spec;

  Ideal ideal() const { return Ideal(ring, polys); }
  std::string to_string() const;
};

SystemFile parse_system(const std::string& text);

/// One expression over +, -, *, ^, parentheses, integer and a/b literals.
/// Implicit multiplication is a parse error.
Poly parse_poly(const RingPtr& ring, const std::string& text);

}  // namespace echar
