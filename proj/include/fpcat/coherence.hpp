#pragma once

#include "fpcat/monoidal.hpp"

#include <array>

namespace fpcat {

// Each predicate evaluates both legs of one diagram and compares them with the
// category's decidable equality.

bool pentagon_holds(const MonoidalStructure& m, const Object& a, const Object& b, const Object& c,
                    const Object& d);
bool triangle_holds(const MonoidalStructure& m, const Object& a, const Object& b);
/// Br_{A(x)B,C} Ass_{C,A,B} = Ass^-1_{A,B,C} (A (x) Br_{B,C}) Ass_{A,C,B} (Br_{A,C} (x) B).
bool hexagon_one_holds(const MonoidalStructure& m, const Object& a, const Object& b, const Object& c);
/// Br_{A,B(x)C} Ass^-1_{B,C,A} = Ass_{A,B,C} (Br_{A,B} (x) C) Ass^-1_{B,A,C} (B (x) Br_{A,C}).
bool hexagon_two_holds(const MonoidalStructure& m, const Object& a, const Object& b, const Object& c);
bool symmetry_holds(const MonoidalStructure& m, const Object& a, const Object& b);
/// Br_{A,1} LU_A = RU_A.
bool braiding_unitor_compatible(const MonoidalStructure& m, const Object& a);
/// (coev_{B,A} (x) A) ev_{A, B(x)A} = id.
bool adjunction_one_holds(const MonoidalStructure& m, const Object& a, const Object& b);
/// coev_{Hom(A,C),A} Hom(A, ev_{A,C}) = id.
bool adjunction_two_holds(const MonoidalStructure& m, const Object& a, const Object& c);
bool unitors_invertible(const MonoidalStructure& m, const Object& a);
bool associator_invertible(const MonoidalStructure& m, const Object& a, const Object& b, const Object& c);

using Pair = std::array<Object, 2>;
using Triple = std::array<Object, 3>;
using Quadruple = std::array<Object, 4>;

Report check_pentagon(const MonoidalStructure& m, const std::vector<Quadruple>& samples);
Report check_triangle(const MonoidalStructure& m, const std::vector<Pair>& samples);
Report check_hexagons(const MonoidalStructure& m, const std::vector<Triple>& samples);
Report check_symmetry(const MonoidalStructure& m, const std::vector<Pair>& samples);
Report check_adjunction_triangles(const MonoidalStructure& m, const std::vector<Pair>& samples);
Report check_inverses(const MonoidalStructure& m, const std::vector<Triple>& samples);

/// Every applicable diagram on tuples cycled from the given objects.
Report check_all_coherence(const MonoidalStructure& m, const std::vector<Object>& objects);

}  // namespace fpcat
