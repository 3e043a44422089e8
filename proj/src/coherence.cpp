#include "fpcat/coherence.hpp"

namespace fpcat {

namespace {

template <class Fn>
void record(Report& r, const std::string& check, const std::string& sample, Fn fn) {
  try {
    r.add(check, sample, fn());
  } catch (const std::exception& e) {
    r.add(check, sample, false, e.what());
  }
}

template <std::size_t N>
std::string label(const std::array<Object, N>& xs) {
  std::string s;
  for (std::size_t i = 0; i < N; ++i) s += (i ? ", " : "") + xs[i].describe();
  return s;
}

}  // namespace

bool pentagon_holds(const MonoidalStructure& m, const Object& a, const Object& b, const Object& c,
                    const Object& d) {
  const Category& k = *m.category;
  auto T = m.tensor;
  Morphism left = k.compose({m.tensor_morphisms(k.identity(a), m.associator(b, c, d)),
                             m.associator(a, T(b, c), d),
                             m.tensor_morphisms(m.associator(a, b, c), k.identity(d))});
  Morphism right = k.compose(m.associator(a, b, T(c, d)), m.associator(T(a, b), c, d));
  return k.is_equal(left, right);
}

bool triangle_holds(const MonoidalStructure& m, const Object& a, const Object& b) {
  const Category& k = *m.category;
  Morphism left = k.compose(m.associator(a, m.unit, b), m.tensor_morphisms(m.right_unitor(a), k.identity(b)));
  return k.is_equal(left, m.tensor_morphisms(k.identity(a), m.left_unitor(b)));
}

bool hexagon_one_holds(const MonoidalStructure& m, const Object& a, const Object& b, const Object& c) {
  const Category& k = *m.category;
  auto T = m.tensor;
  Morphism left = k.compose(m.braiding(T(a, b), c), m.associator(c, a, b));
  Morphism right = k.compose({m.associator_inverse(a, b, c), m.tensor_morphisms(k.identity(a), m.braiding(b, c)),
                              m.associator(a, c, b), m.tensor_morphisms(m.braiding(a, c), k.identity(b))});
  return k.is_equal(left, right);
}

bool hexagon_two_holds(const MonoidalStructure& m, const Object& a, const Object& b, const Object& c) {
  const Category& k = *m.category;
  auto T = m.tensor;
  Morphism left = k.compose(m.braiding(a, T(b, c)), m.associator_inverse(b, c, a));
  Morphism right = k.compose({m.associator(a, b, c), m.tensor_morphisms(m.braiding(a, b), k.identity(c)),
                              m.associator_inverse(b, a, c), m.tensor_morphisms(k.identity(b), m.braiding(a, c))});
  return k.is_equal(left, right);
}

bool symmetry_holds(const MonoidalStructure& m, const Object& a, const Object& b) {
  const Category& k = *m.category;
  return k.is_equal(k.compose(m.braiding(a, b), m.braiding(b, a)), k.identity(m.tensor(a, b)));
}

bool braiding_unitor_compatible(const MonoidalStructure& m, const Object& a) {
  const Category& k = *m.category;
  return k.is_equal(k.compose(m.braiding(a, m.unit), m.left_unitor(a)), m.right_unitor(a));
}

bool adjunction_one_holds(const MonoidalStructure& m, const Object& a, const Object& b) {
  const Category& k = *m.category;
  const ClosedStructure& c = m.closed.value();
  Object ba = m.tensor(b, a);
  Morphism left = k.compose(m.tensor_morphisms(c.coevaluation(b, a), k.identity(a)), c.evaluation(a, ba));
  return k.is_equal(left, k.identity(ba));
}

bool adjunction_two_holds(const MonoidalStructure& m, const Object& a, const Object& x) {
  const Category& k = *m.category;
  const ClosedStructure& c = m.closed.value();
  Object h = c.internal_hom(a, x);
  Morphism left = k.compose(c.coevaluation(h, a), c.hom_morphisms(k.identity(a), c.evaluation(a, x)));
  return k.is_equal(left, k.identity(h));
}

bool unitors_invertible(const MonoidalStructure& m, const Object& a) {
  const Category& k = *m.category;
  Object ua = m.tensor(m.unit, a), au = m.tensor(a, m.unit);
  return k.is_equal(k.compose(m.left_unitor(a), m.left_unitor_inverse(a)), k.identity(ua)) &&
         k.is_equal(k.compose(m.left_unitor_inverse(a), m.left_unitor(a)), k.identity(a)) &&
         k.is_equal(k.compose(m.right_unitor(a), m.right_unitor_inverse(a)), k.identity(au)) &&
         k.is_equal(k.compose(m.right_unitor_inverse(a), m.right_unitor(a)), k.identity(a));
}

bool associator_invertible(const MonoidalStructure& m, const Object& a, const Object& b, const Object& c) {
  const Category& k = *m.category;
  Morphism f = m.associator(a, b, c), g = m.associator_inverse(a, b, c);
  return k.is_equal(k.compose(f, g), k.identity(f.source)) && k.is_equal(k.compose(g, f), k.identity(f.target));
}

Report check_pentagon(const MonoidalStructure& m, const std::vector<Quadruple>& samples) {
  Report r;
  for (const auto& s : samples)
    record(r, "pentagon", label(s), [&] { return pentagon_holds(m, s[0], s[1], s[2], s[3]); });
  return r;
}

Report check_triangle(const MonoidalStructure& m, const std::vector<Pair>& samples) {
  Report r;
  for (const auto& s : samples) record(r, "triangle", label(s), [&] { return triangle_holds(m, s[0], s[1]); });
  return r;
}

Report check_hexagons(const MonoidalStructure& m, const std::vector<Triple>& samples) {
  Report r;
  if (!m.braided()) return r;
  for (const auto& s : samples) {
    record(r, "hexagon I", label(s), [&] { return hexagon_one_holds(m, s[0], s[1], s[2]); });
    record(r, "hexagon II", label(s), [&] { return hexagon_two_holds(m, s[0], s[1], s[2]); });
  }
  return r;
}

Report check_symmetry(const MonoidalStructure& m, const std::vector<Pair>& samples) {
  Report r;
  if (!m.braided()) return r;
  for (const auto& s : samples) {
    if (m.symmetric) record(r, "symmetry", label(s), [&] { return symmetry_holds(m, s[0], s[1]); });
    record(r, "braiding-unitor", s[0].describe(), [&] { return braiding_unitor_compatible(m, s[0]); });
  }
  return r;
}

Report check_adjunction_triangles(const MonoidalStructure& m, const std::vector<Pair>& samples) {
  Report r;
  if (!m.closed) return r;
  for (const auto& s : samples) {
    record(r, "adjunction I", label(s), [&] { return adjunction_one_holds(m, s[0], s[1]); });
    record(r, "adjunction II", label(s), [&] { return adjunction_two_holds(m, s[0], s[1]); });
  }
  return r;
}

Report check_inverses(const MonoidalStructure& m, const std::vector<Triple>& samples) {
  Report r;
  for (const auto& s : samples) {
    record(r, "unitor inverses", s[0].describe(), [&] { return unitors_invertible(m, s[0]); });
    record(r, "associator inverse", label(s), [&] { return associator_invertible(m, s[0], s[1], s[2]); });
  }
  return r;
}

Report check_all_coherence(const MonoidalStructure& m, const std::vector<Object>& objects) {
  Report r;
  if (objects.empty()) return r;
  std::size_t n = objects.size();
  auto at = [&](std::size_t i) { return objects[i % n]; };
  std::vector<Pair> pairs;
  std::vector<Triple> triples;
  std::vector<Quadruple> quads;
  for (std::size_t i = 0; i < n; ++i) {
    pairs.push_back({at(i), at(i + 1)});
    triples.push_back({at(i), at(i + 1), at(i + 2)});
    quads.push_back({at(i), at(i + 1), at(i + 2), at(i + 3)});
  }
  r.append(check_inverses(m, triples));
  r.append(check_pentagon(m, quads));
  r.append(check_triangle(m, pairs));
  r.append(check_hexagons(m, triples));
  r.append(check_symmetry(m, pairs));
  r.append(check_adjunction_triangles(m, pairs));
  return r;
}

}  // namespace fpcat
