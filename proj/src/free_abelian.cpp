#include "fpcat/free_abelian.hpp"

#include "fpcat/opposite.hpp"
#include "fpcat/rows.hpp"

namespace fpcat {

Object FreeAbelianMonoidal::embed(const Object& x) const { return outer->emb(inner->emb(x)); }

Morphism FreeAbelianMonoidal::embed(const Morphism& f) const {
  using Op = OppositeCategory;
  return outer->emb(Op::reverse(inner->emb(Op::reverse(f))));
}

FreeAbelianMonoidal free_abelian_monoidal(const MonoidalStructure& base,
                                          const std::vector<Object>& generator_samples) {
  FreeAbelianMonoidal out;
  out.base = base.category;
  out.base_monoidal = base;

  PromonoidalStructure first = promonoidal_from_monoidal(opposite_monoidal(base));
  out.base_op = first.base;
  out.inner = first.freyd;
  out.inner_monoidal = lift_promonoidal(first, generator_samples);

  PromonoidalStructure second = promonoidal_from_monoidal(opposite_monoidal(out.inner_monoidal));
  out.inner_op = second.base;
  out.outer = second.freyd;
  std::vector<Object> inner_samples;
  for (const auto& x : generator_samples) inner_samples.push_back(out.inner->emb(x));
  out.monoidal = lift_promonoidal(second, inner_samples);
  return out;
}

bool embedding_compatible(const FreeAbelianMonoidal& fa, const Object& x, const Object& y) {
  return fa.monoidal.tensor(fa.embed(x), fa.embed(y)) == fa.embed(fa.base_monoidal.tensor(x, y));
}

bool embedding_compatible(const FreeAbelianMonoidal& fa, const Morphism& f, const Morphism& g) {
  Morphism lifted = fa.monoidal.tensor_morphisms(fa.embed(f), fa.embed(g));
  Morphism direct = fa.embed(fa.base_monoidal.tensor_morphisms(f, g));
  return lifted.source == direct.source && lifted.target == direct.target && fa.outer->is_equal(lifted, direct);
}

std::vector<Object> free_abelian_samples(const FreeAbelianMonoidal& fa, std::size_t count) {
  using Op = OppositeCategory;
  auto rows = std::dynamic_pointer_cast<const RowsCategory>(fa.base);
  if (!rows) throw PreconditionError("free_abelian_samples: base must be Rows_R");
  std::vector<Object> out{fa.embed(rows->object(1)), fa.embed(rows->object(0))};

  std::vector<Object> small{fa.inner->emb(rows->object(1))};
  for (long d : {2, 0}) small.push_back(fa.inner->object(Op::reverse(rows->morphism({{d}}))));
  for (const auto& g : small) {
    for (const auto& r : small) {
      for (long x : {2, 1, -1, 0}) {
        if (out.size() >= count) break;
        try {
          Morphism f = fa.inner->morphism(g, r, Op::reverse(rows->morphism({{x}})));
          out.push_back(fa.outer->object(Op::reverse(f)));
          break;
        } catch (const PreconditionError&) {
        }
      }
    }
  }
  if (out.size() > count) out.resize(count);
  return out;
}

}  // namespace fpcat
