#include "fpcat/commands.hpp"

#include "fpcat/coherence.hpp"
#include "fpcat/free_abelian.hpp"
#include "fpcat/kronecker.hpp"
#include "fpcat/sampling.hpp"

namespace fpcat {

namespace {

struct Lifted {
  std::shared_ptr<const FreydCategory> freyd;
  MonoidalStructure monoidal;
};

Lifted kronecker_lifted(const Ring& ring) {
  PromonoidalStructure p = kronecker_promonoidal(ring);
  return {p.freyd, lift_promonoidal(p)};
}

const RowsCategory& rows_of(const FreydCategory& f) {
  auto rows = std::dynamic_pointer_cast<const RowsCategory>(f.base());
  if (!rows) throw CapabilityError(f.name() + " is not built on Rows_R");
  return *rows;
}

Morphism to_freyd_morphism(const FreydCategory& f, const MorphismPresentation& m) {
  require_same_ring(m.source.ring, m.target.ring);
  return f.morphism(to_freyd_object(f, m.source), to_freyd_object(f, m.target), rows_of(f).morphism(m.map));
}

template <std::size_t N>
std::vector<std::array<Object, N>> cyclic(const std::vector<Object>& xs) {
  std::vector<std::array<Object, N>> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::array<Object, N> t{};
    for (std::size_t k = 0; k < N; ++k) t[k] = xs[(i + k) % xs.size()];
    out.push_back(t);
  }
  return out;
}

}  // namespace

Object to_freyd_object(const FreydCategory& f, const Presentation& p) {
  const RowsCategory& rows = rows_of(f);
  require_same_ring(rows.ring(), p.ring);
  return f.object(rows.morphism(p.relations));
}

Presentation to_presentation(const Ring& ring, const Object& a) {
  return {ring, FreydCategory::relation(a).as<RowsMorphism>().matrix};
}

CanonicalForm cmd_canonical(const Presentation& p) { return canonical_form(p); }

CanonicalForm cmd_tensor(const Presentation& p, const Presentation& q) {
  require_same_ring(p.ring, q.ring);
  Lifted l = kronecker_lifted(p.ring);
  Object t = l.monoidal.tensor(to_freyd_object(*l.freyd, p), to_freyd_object(*l.freyd, q));
  return canonical_form(to_presentation(p.ring, t));
}

CanonicalForm cmd_hom(const Presentation& p, const Presentation& q) {
  require_same_ring(p.ring, q.ring);
  Lifted l = kronecker_lifted(p.ring);
  Object h = l.monoidal.closed->internal_hom(to_freyd_object(*l.freyd, p), to_freyd_object(*l.freyd, q));
  return canonical_form(to_presentation(p.ring, h));
}

CanonicalForm cmd_kernel(const MorphismPresentation& m) {
  auto f = freyd(rows_category(m.source.ring));
  Object k = f->kernel_embedding(to_freyd_morphism(*f, m)).source;
  return canonical_form(to_presentation(m.source.ring, k));
}

CanonicalForm cmd_cokernel(const MorphismPresentation& m) {
  auto f = freyd(rows_category(m.source.ring));
  Object c = f->cokernel_projection(to_freyd_morphism(*f, m)).target;
  return canonical_form(to_presentation(m.source.ring, c));
}

Report cmd_check_axioms(std::uint64_t seed, std::size_t count, const Ring& ring) {
  Lifted l = kronecker_lifted(ring);
  Sampler sampler(l.freyd, seed);
  std::vector<Object> objects;
  for (std::size_t i = 0; i < count; ++i) objects.push_back(sampler.object(2, 2, -3, 3));
  return check_all_coherence(l.monoidal, objects);
}

Report cmd_free_abelian_demo() {
  auto rows = rows_category(Ring::integers());
  FreeAbelianMonoidal fa = free_abelian_monoidal(kronecker_monoidal(rows), {rows->object(1)});
  std::vector<Object> samples = free_abelian_samples(fa, 5);
  Report r;
  r.append(check_pentagon(fa.monoidal, cyclic<4>(samples)));
  r.append(check_triangle(fa.monoidal, cyclic<2>(samples)));
  for (std::size_t m = 0; m <= 2; ++m)
    for (std::size_t n = 0; n <= 2; ++n)
      r.add("embedding (objects)", "R^" + std::to_string(m) + ", R^" + std::to_string(n),
            embedding_compatible(fa, rows->object(m), rows->object(n)));
  Morphism f = rows->morphism({{2, -1}}), g = rows->morphism({{1}, {3}});
  r.add("embedding (morphisms)", f.describe() + ", " + g.describe(), embedding_compatible(fa, f, g));
  return r;
}

}  // namespace fpcat
