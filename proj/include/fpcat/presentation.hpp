#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fpcat/matrix.hpp"

namespace fpcat {

/// Malformed input, positioned at a 1-based line and column.
struct ParseError : std::runtime_error {
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line;
  std::size_t column;
};

/// The module R^{1 x cols} / rowspace(relations).
struct Presentation {
  Ring ring;
  Matrix relations;
};

/// A map of presented modules, given by its datum on generators.
struct MorphismPresentation {
  Presentation source;
  Presentation target;
  Matrix map;
};

/// Z^free (+) Z/d_1 (+) ... with d_1 | d_2 | ..., every d_i > 1.
struct CanonicalForm {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;

  bool operator==(const CanonicalForm& other) const = default;
};

/// "ring <R>", "matrix <rows> <cols>", then the rows; lines starting with '#' are skipped.
Presentation parse_presentation(std::string_view text);
/// A source block, a target block, then "map <rows> <cols>" and the datum.
MorphismPresentation parse_morphism(std::string_view text);

std::string render_presentation(const Presentation& p);

/// Invariant factors of the presented module as an abelian group; over Q
/// only the dimension survives.
CanonicalForm canonical_form(const Presentation& p);
/// A diagonal presentation over ring of the module described by c.
Presentation canonical_presentation(const CanonicalForm& c, const Ring& ring);

/// "free <r>; torsion <d1> <d2> ..."
std::string render_canonical(const CanonicalForm& c);
/// Keys: ring, free_rank, torsion, presentation {ring, rows, cols, matrix}.
std::string render_json(const CanonicalForm& c, const Ring& ring);

}  // namespace fpcat
