#include <doctest.h>

#include "fixtures.hpp"
#include "fpcat/commands.hpp"
#include "fpcat/sampling.hpp"
#include "oracles.hpp"

using namespace fpcat;

namespace {

const Ring Z = Ring::integers();

struct Fixture {
  std::shared_ptr<const RowsCategory> rows = rows_category(Z);
  fixtures::Functors functors{rows};
  std::shared_ptr<const FreydCategory> f = functors.target;
  Sampler sampler{f, 99};

  std::vector<std::shared_ptr<const FreydCategory>> freyds(std::size_t n) const { return {n, f}; }

  std::vector<Object> objects(std::size_t n) {
    std::vector<Object> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(sampler.object(2, 2, -3, 3));
    return xs;
  }

  std::vector<Object> generators(std::size_t n) {
    std::vector<Object> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(rows->object(sampler.uniform(0, 2)));
    return xs;
  }

  Object cyclic(long n) const { return f->object(rows->morphism({{n}})); }
  CanonicalForm canonical(const Object& a) const { return canonical_form(to_presentation(Z, a)); }
};

NaturalTransformation vertical(const NaturalTransformation& nu, const NaturalTransformation& mu) {
  auto c = nu.source.target;
  return {nu.source, mu.target, [nu, mu, c](const std::vector<Object>& xs) { return c->compose(nu(xs), mu(xs)); }};
}

bool is_iso(const Category& c, const Morphism& phi) {
  try {
    Morphism inv = inverse_of(c, phi);
    return c.is_equal(c.compose(phi, inv), c.identity(phi.source)) &&
           c.is_equal(c.compose(inv, phi), c.identity(phi.target));
  } catch (const InvariantViolation&) {
    return false;
  }
}

}  // namespace

TEST_CASE("F agrees with F^ o emb") {
  Fixture x;
  for (const MultilinearFunctor& fun : x.functors.all()) {
    auto fs = x.freyds(fun.arity());
    NaturalTransformation cmp = embedding_comparison(fun, fs);
    for (int trial = 0; trial < 10; ++trial) {
      Morphism phi = cmp(x.generators(fun.arity()));
      CHECK(is_iso(*x.f, phi));
    }
  }
}

TEST_CASE("extensions of right exact functors are recovered from their restrictions") {
  Fixture x;
  for (const MultilinearFunctor& fun : x.functors.all()) {
    auto fs = x.freyds(fun.arity());
    MultilinearFunctor hat = extend_functor(fun, fs);
    NaturalTransformation cmp = restriction_comparison(hat, fs);
    for (int trial = 0; trial < 8; ++trial) CHECK(is_iso(*x.f, cmp(x.objects(fun.arity()))));
  }
}

TEST_CASE("a constant functor is not recovered from its restriction") {
  Fixture x;
  MultilinearFunctor c = fixtures::constant(x.f, x.f->emb(x.rows->object(1)));
  NaturalTransformation cmp = restriction_comparison(c, x.freyds(1));
  CHECK_THROWS_AS(cmp({x.cyclic(2)}), PreconditionError);
  std::string why;
  CHECK_FALSE(check_right_exactness(c, {x.f->zero_morphism(x.f->zero_object(), x.cyclic(2))}, &why));
  CHECK_FALSE(why.empty());
}

TEST_CASE("comparison maps are natural and extensions are additive") {
  Fixture x;
  for (const MultilinearFunctor& fun : x.functors.all()) {
    MultilinearFunctor hat = extend_functor(fun, x.freyds(fun.arity()));
    NaturalTransformation cmp = embedding_comparison(fun, x.freyds(fun.arity()));
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Morphism> ms;
      std::vector<Morphism> hat_ms;
      for (std::size_t j = 0; j < fun.arity(); ++j) {
        Object a = x.rows->object(x.sampler.uniform(0, 2)), b = x.rows->object(x.sampler.uniform(0, 2));
        ms.push_back(x.rows->morphism(x.sampler.matrix(RowsCategory::rank(a), RowsCategory::rank(b), -3, 3)));
      }
      CHECK(naturality_square_commutes(cmp, ms));

      std::vector<Morphism> gs;
      for (std::size_t j = 0; j < fun.arity(); ++j) {
        Object a = x.sampler.object(2, 2, -3, 3), b = x.sampler.object(2, 2, -3, 3);
        hat_ms.push_back(x.sampler.morphism(a, b, -3, 3));
        gs.push_back(j == 0 ? x.sampler.morphism(a, b, -3, 3) : hat_ms.back());
      }
      std::vector<Morphism> sums = gs;
      sums[0] = x.f->add(hat_ms[0], gs[0]);
      CHECK(x.f->is_equal(hat(sums), x.f->add(hat(hat_ms), hat(gs))));
    }
  }
}

TEST_CASE("extended functors preserve identities and composition") {
  Fixture x;
  for (const MultilinearFunctor& fun : x.functors.all()) {
    MultilinearFunctor hat = extend_functor(fun, x.freyds(fun.arity()));
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Morphism> ids, fs, gs, fgs;
      for (std::size_t j = 0; j < fun.arity(); ++j) {
        Object a = x.sampler.object(2, 2, -3, 3), b = x.sampler.object(2, 2, -3, 3), c = x.sampler.object(2, 2, -3, 3);
        Morphism f1 = x.sampler.morphism(a, b, -3, 3), g1 = x.sampler.morphism(b, c, -3, 3);
        ids.push_back(x.f->identity(a));
        fs.push_back(f1);
        gs.push_back(g1);
        fgs.push_back(x.f->compose(f1, g1));
      }
      Morphism id = hat(ids);
      CHECK(x.f->is_equal(id, x.f->identity(id.source)));
      CHECK(x.f->is_equal(x.f->compose(hat(fs), hat(gs)), hat(fgs)));
    }
  }
}

TEST_CASE("extension of natural transformations") {
  Fixture x;
  MultilinearFunctor e = x.functors.embedding(), d = x.functors.doubling();
  MultilinearFunctor e_hat = extend_functor(e, x.freyds(1)), d_hat = extend_functor(d, x.freyds(1));
  NaturalTransformation nu = x.functors.diagonal(), mu = x.functors.fold();
  NaturalTransformation nu_hat = extend_nat_trans(nu, e_hat, d_hat);
  NaturalTransformation mu_hat = extend_nat_trans(mu, d_hat, e_hat);
  NaturalTransformation composite_hat = extend_nat_trans(vertical(nu, mu), e_hat, e_hat);
  NaturalTransformation id_hat = extend_nat_trans(x.functors.identity(e), e_hat, e_hat);
  for (int trial = 0; trial < 15; ++trial) {
    Object a = x.sampler.object(2, 2, -4, 4);
    Object ea = e_hat({a});
    CHECK(x.f->is_equal(id_hat({a}), x.f->identity(ea)));
    CHECK(x.f->is_equal(composite_hat({a}), x.f->compose(nu_hat({a}), mu_hat({a}))));
    CHECK(x.f->is_equal(composite_hat({a}), x.f->add(x.f->identity(ea), x.f->identity(ea))));
    Morphism m = x.sampler.morphism(a, x.sampler.object(2, 2, -3, 3), -3, 3);
    CHECK(naturality_square_commutes(nu_hat, {m}));
    CHECK(naturality_square_commutes(mu_hat, {m}));
  }
}

TEST_CASE("extended functors are right exact in each slot") {
  Fixture x;
  for (const MultilinearFunctor& fun : x.functors.all()) {
    MultilinearFunctor hat = extend_functor(fun, x.freyds(fun.arity()));
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Morphism> alphas;
      for (std::size_t j = 0; j < fun.arity(); ++j)
        alphas.push_back(x.sampler.morphism_into(x.sampler.object(2, 2, -3, 3), 2, 2, -3, 3));
      std::string why;
      CHECK_MESSAGE(check_right_exactness(hat, alphas, &why), why);
    }
    std::vector<Morphism> with_zero(fun.arity(), x.f->identity(x.cyclic(3)));
    with_zero[0] = x.f->zero_morphism(x.f->zero_object(), x.f->zero_object());
    CHECK(check_right_exactness(hat, with_zero));
  }
}

TEST_CASE("extended Kronecker tensor on cyclic groups") {
  Fixture x;
  MultilinearFunctor hat = extend_functor(x.functors.kronecker(), x.freyds(2));
  CHECK(x.canonical(hat({x.cyclic(2), x.cyclic(3)})) == oracle::from_cyclic({}));
  CHECK(x.canonical(hat({x.cyclic(4), x.cyclic(6)})) == oracle::from_cyclic({2}));
  CHECK(x.canonical(hat({x.cyclic(4), x.f->emb(x.rows->object(2))})) == oracle::from_cyclic({4, 4}));
  MultilinearFunctor mod3 = extend_functor(x.functors.kronecker_modulo(3), x.freyds(2));
  CHECK(x.canonical(mod3({x.cyclic(6), x.f->emb(x.rows->object(1))})) == oracle::from_cyclic({3}));
}
