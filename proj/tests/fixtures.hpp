// Small multilinear functors Rows_Z^n -> A(Rows_Z) used by the extension tests.
#pragma once

#include "fpcat/functor.hpp"
#include "fpcat/kronecker.hpp"
#include "fpcat/monoidal.hpp"
#include "fpcat/rows.hpp"

namespace fixtures {

using namespace fpcat;

struct Functors {
  std::shared_ptr<const RowsCategory> rows;
  PromonoidalStructure kron;
  std::shared_ptr<const FreydCategory> target;

  explicit Functors(std::shared_ptr<const RowsCategory> r)
      : rows(std::move(r)), kron(promonoidal_from_monoidal(kronecker_monoidal(rows))), target(kron.freyd) {}

  std::size_t rank(const Object& x) const { return RowsCategory::rank(x); }

  /// x |-> emb(x).
  MultilinearFunctor embedding() const {
    auto t = target;
    return {{rows}, t, [t](const std::vector<Object>& xs) { return t->emb(xs[0]); },
            [t](const std::vector<Morphism>& fs) { return t->emb(fs[0]); }};
  }

  /// x |-> emb(x (+) x).
  MultilinearFunctor doubling() const {
    auto t = target;
    auto r = rows;
    return {{rows}, t, [t, r](const std::vector<Object>& xs) { return t->emb(r->direct_sum({xs[0], xs[0]})); },
            [t, r](const std::vector<Morphism>& fs) { return t->emb(r->direct_sum_morphism({fs[0], fs[0]})); }};
  }

  /// x |-> x / nx.
  MultilinearFunctor modulo(long n) const {
    auto t = target;
    auto r = rows;
    auto obj = [t, r, n](const Object& x) {
      return t->object(r->morphism(scale(Scalar(n), Matrix::identity(r->ring(), RowsCategory::rank(x)))));
    };
    return {{rows}, t, [obj](const std::vector<Object>& xs) { return obj(xs[0]); },
            [t, obj](const std::vector<Morphism>& fs) {
              return t->morphism(obj(fs[0].source), obj(fs[0].target), fs[0], fs[0]);
            }};
  }

  /// The Kronecker protensor (x, y) |-> emb(x (x) y).
  MultilinearFunctor kronecker() const { return protensor_functor(kron); }

  /// (x, y) |-> (x (x) y) / n.
  MultilinearFunctor kronecker_modulo(long n) const {
    auto t = target;
    auto r = rows;
    auto obj = [t, r, n](const Object& x, const Object& y) {
      std::size_t k = RowsCategory::rank(x) * RowsCategory::rank(y);
      return t->object(r->morphism(scale(Scalar(n), Matrix::identity(r->ring(), k))));
    };
    return {{rows, rows}, t, [obj](const std::vector<Object>& xs) { return obj(xs[0], xs[1]); },
            [t, r, obj](const std::vector<Morphism>& fs) {
              Morphism d = r->morphism(fpcat::kronecker(r->matrix(fs[0]), r->matrix(fs[1])));
              return t->morphism(obj(fs[0].source, fs[1].source), obj(fs[0].target, fs[1].target), d, d);
            }};
  }

  /// (x, y, z) |-> emb(x (x) y (x) z).
  MultilinearFunctor triple() const {
    auto t = target;
    auto r = rows;
    return {{rows, rows, rows}, t,
            [t, r](const std::vector<Object>& xs) {
              return t->emb(r->object(RowsCategory::rank(xs[0]) * RowsCategory::rank(xs[1]) * RowsCategory::rank(xs[2])));
            },
            [t, r](const std::vector<Morphism>& fs) {
              return t->emb(r->morphism(
                  fpcat::kronecker(fpcat::kronecker(r->matrix(fs[0]), r->matrix(fs[1])), r->matrix(fs[2]))));
            }};
  }

  /// The Kronecker protensor first, then the other fixtures.
  std::vector<MultilinearFunctor> all() const {
    return {kronecker(), embedding(), doubling(), modulo(2), kronecker_modulo(3), triple()};
  }

  /// x |-> emb(x) => x |-> emb(x (+) x), the diagonal.
  NaturalTransformation diagonal() const {
    auto t = target;
    auto r = rows;
    return {embedding(), doubling(), [t, r](const std::vector<Object>& xs) {
              Object x = xs[0];
              return t->emb(r->into_direct_sum({r->identity(x), r->identity(x)}));
            }};
  }

  /// x |-> emb(x (+) x) => x |-> emb(x), adding the two copies.
  NaturalTransformation fold() const {
    auto t = target;
    auto r = rows;
    return {doubling(), embedding(), [t, r](const std::vector<Object>& xs) {
              Object x = xs[0];
              return t->emb(r->from_direct_sum({r->identity(x), r->identity(x)}));
            }};
  }

  NaturalTransformation identity(const MultilinearFunctor& f) const {
    auto t = f.target;
    return {f, f, [f, t](const std::vector<Object>& xs) { return t->identity(f(xs)); }};
  }
};

/// A(Rows_Z) -> A(Rows_Z) sending everything to emb(Z) and every morphism to the identity.
inline MultilinearFunctor constant(const std::shared_ptr<const FreydCategory>& f, const Object& value) {
  return {{f}, f, [value](const std::vector<Object>&) { return value; },
          [f, value](const std::vector<Morphism>&) { return f->identity(value); }};
}

}  // namespace fixtures
