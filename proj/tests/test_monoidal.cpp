#include <doctest.h>

#include "fpcat/coherence.hpp"
#include "fpcat/commands.hpp"
#include "fpcat/free_abelian.hpp"
#include "fpcat/kronecker.hpp"
#include "fpcat/normal_form.hpp"
#include "fpcat/sampling.hpp"
#include "oracles.hpp"

using namespace fpcat;

namespace {

using F = FreydCategory;

const Ring Z = Ring::integers();

struct Fixture {
  PromonoidalStructure p = kronecker_promonoidal(Z);
  std::shared_ptr<const FreydCategory> f = p.freyd;
  std::shared_ptr<const RowsCategory> rows = std::dynamic_pointer_cast<const RowsCategory>(p.base);
  MonoidalStructure m = lift_promonoidal(p);
  Sampler sampler{f, 4242};

  Object cyclic(long n) const { return f->object(rows->morphism({{n}})); }
  Object free(std::size_t r) const { return f->emb(rows->object(r)); }
  CanonicalForm canonical(const Object& a) const { return canonical_form(to_presentation(Z, a)); }
};

CanonicalForm classical_tensor(const RowsCategory& rows, const Object& a, const Object& b) {
  return oracle::by_minors(oracle::classical_tensor_presentation(rows.matrix(F::relation(a)),
                                                                 rows.matrix(F::relation(b))));
}

}  // namespace

TEST_CASE("coherence of the lifted Kronecker structure on random modules") {
  Fixture x;
  std::vector<Object> objs{x.f->zero_object(), x.cyclic(2), x.free(1)};
  for (int i = 0; i < 5; ++i) objs.push_back(x.sampler.object(2, 2, -3, 3));
  Report r = check_all_coherence(x.m, objs);
  CHECK_MESSAGE(r.all_passed(), r.to_string());
  CHECK(r.entries.size() >= 8 * 7);
}

TEST_CASE("lifted tensor agrees with the classical presentation") {
  Fixture x;
  for (int trial = 0; trial < 40; ++trial) {
    Object a = x.sampler.object(3, 3, -4, 4), b = x.sampler.object(2, 3, -4, 4);
    Object t = x.m.tensor(a, b);
    CHECK(x.canonical(t) == classical_tensor(*x.rows, a, b));
  }
}

TEST_CASE("lifted tensor of cyclic groups") {
  Fixture x;
  for (long a : {0L, 1L, 2L, 4L, 6L, 9L})
    for (long b : {0L, 2L, 3L, 6L, 8L}) {
      CAPTURE(a);
      CAPTURE(b);
      CanonicalForm expected = oracle::tensor(oracle::from_cyclic({a}), oracle::from_cyclic({b}));
      CHECK(x.canonical(x.m.tensor(x.cyclic(a), x.cyclic(b))) == expected);
    }
  CHECK(x.canonical(x.m.tensor(x.cyclic(4), x.cyclic(6))) == oracle::from_cyclic({2}));
}

TEST_CASE("internal hom of cyclic groups") {
  Fixture x;
  REQUIRE(x.m.closed.has_value());
  for (long a : {0L, 2L, 4L, 6L})
    for (long b : {0L, 2L, 3L, 4L}) {
      CAPTURE(a);
      CAPTURE(b);
      CanonicalForm expected = oracle::hom(oracle::from_cyclic({a}), oracle::from_cyclic({b}));
      CHECK(x.canonical(x.m.closed->internal_hom(x.cyclic(a), x.cyclic(b))) == expected);
    }
}

TEST_CASE("Hom(1, C) is C") {
  Fixture x;
  for (int trial = 0; trial < 20; ++trial) {
    Object c = x.sampler.object(3, 3, -5, 5);
    CHECK(x.canonical(x.m.closed->internal_hom(x.m.unit, c)) == x.canonical(c));
  }
}

TEST_CASE("braiding of ranks 2 and 3 is the commutation matrix") {
  auto rows = rows_category(Z);
  MonoidalStructure k = kronecker_monoidal(rows);
  Matrix br = rows->matrix(k.braiding(rows->object(2), rows->object(3)));
  CHECK(br == commutation_matrix(Z, 2, 3));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Matrix e(Z, 1, 2), f(Z, 1, 3);
      e.set(0, i, 1);
      f.set(0, j, 1);
      CHECK(kronecker(e, f) * br == kronecker(f, e));
    }
  CHECK(br * commutation_matrix(Z, 3, 2) == Matrix::identity(Z, 6));
}

TEST_CASE("protensor datum is the Kronecker product") {
  Fixture x;
  Morphism d = x.p.protensor_datum(x.rows->morphism({{2}}), x.rows->morphism({{3}}));
  CHECK(x.rows->matrix(d) == Matrix::from_rows(Z, {{6}}));
  CHECK(x.p.r(x.rows->object(2), x.rows->object(3)) == x.rows->object(0));
}

TEST_CASE("tensor is a bifunctor") {
  Fixture x;
  for (int trial = 0; trial < 15; ++trial) {
    Object a = x.sampler.object(2, 2, -3, 3), b = x.sampler.object(2, 2, -3, 3), c = x.sampler.object(2, 2, -3, 3);
    Object d = x.sampler.object(2, 2, -3, 3), e = x.sampler.object(2, 2, -3, 3), g = x.sampler.object(2, 2, -3, 3);
    Morphism f1 = x.sampler.morphism(a, b, -3, 3), f2 = x.sampler.morphism(b, c, -3, 3);
    Morphism g1 = x.sampler.morphism(d, e, -3, 3), g2 = x.sampler.morphism(e, g, -3, 3);
    CHECK(x.f->is_equal(x.m.tensor_morphisms(x.f->compose(f1, f2), x.f->compose(g1, g2)),
                        x.f->compose(x.m.tensor_morphisms(f1, g1), x.m.tensor_morphisms(f2, g2))));
    Morphism id = x.m.tensor_morphisms(x.f->identity(a), x.f->identity(d));
    CHECK(x.f->is_equal(id, x.f->identity(x.m.tensor(a, d))));
    Morphism h1 = x.sampler.morphism(a, b, -3, 3);
    CHECK(x.f->is_equal(x.m.tensor_morphisms(x.f->add(f1, h1), g1),
                        x.f->add(x.m.tensor_morphisms(f1, g1), x.m.tensor_morphisms(h1, g1))));
  }
}

TEST_CASE("structure morphisms are invertible") {
  Fixture x;
  for (int trial = 0; trial < 10; ++trial) {
    Object a = x.sampler.object(2, 2, -3, 3), b = x.sampler.object(2, 2, -3, 3), c = x.sampler.object(2, 2, -3, 3);
    CHECK(associator_invertible(x.m, a, b, c));
    CHECK(unitors_invertible(x.m, a));
    CHECK(symmetry_holds(x.m, a, b));
  }
}

TEST_CASE("a corrupted associator datum breaks the pentagon") {
  Fixture x;
  PromonoidalStructure bad = x.p;
  auto rows = x.rows;
  auto original = x.p.associator_datum;
  bad.associator_datum = [rows, original](const Object& a, const Object& b, const Object& c) {
    Morphism d = original(a, b, c);
    return rows->add(d, d);
  };
  MonoidalStructure m = lift_promonoidal(bad);
  Object z = x.free(1);
  CHECK_FALSE(pentagon_holds(m, z, z, z, z));
  CHECK(pentagon_holds(x.m, z, z, z, z));
}

TEST_CASE("lifting checks restricted coherence on generator samples") {
  Fixture x;
  PromonoidalStructure bad = x.p;
  auto rows = x.rows;
  auto original = x.p.left_unitor_datum;
  bad.left_unitor_datum = [rows, original](const Object& a) {
    Morphism d = original(a);
    return rows->add(d, d);
  };
  CHECK_THROWS_AS(lift_promonoidal(bad, {rows->object(1)}), PreconditionError);
  CHECK_NOTHROW(lift_promonoidal(x.p, {rows->object(1), rows->object(2)}));
}

TEST_CASE("free abelian structure restricts to the Kronecker product") {
  auto rows = rows_category(Z);
  FreeAbelianMonoidal fa = free_abelian_monoidal(kronecker_monoidal(rows), {rows->object(1)});
  for (std::size_t i = 0; i <= 2; ++i)
    for (std::size_t j = 0; j <= 2; ++j) CHECK(embedding_compatible(fa, rows->object(i), rows->object(j)));
  CHECK(embedding_compatible(fa, rows->morphism({{2, -1}}), rows->morphism({{1}, {3}})));
  CHECK(embedding_compatible(fa, rows->morphism({{0, 1}, {1, 0}}), rows->morphism({{5}})));

  std::vector<Object> samples = free_abelian_samples(fa, 5);
  REQUIRE(samples.size() == 5);
  Report r;
  r.append(check_pentagon(fa.monoidal, {{samples[0], samples[1], samples[2], samples[3]},
                                        {samples[4], samples[2], samples[4], samples[1]}}));
  r.append(check_triangle(fa.monoidal, {{samples[2], samples[3]}, {samples[4], samples[4]}}));
  r.append(check_hexagons(fa.monoidal, {{samples[2], samples[3], samples[4]}}));
  CHECK_MESSAGE(r.all_passed(), r.to_string());
}
