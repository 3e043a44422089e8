#include "fpcat/product.hpp"

namespace fpcat {

bool TupleObject::same_as(const Payload& other) const {
  auto* o = dynamic_cast<const TupleObject*>(&other);
  return o && o->components == components;
}

std::string TupleObject::describe() const {
  std::string s = "(";
  for (std::size_t i = 0; i < components.size(); ++i)
    s += (i ? ", " : "") + components[i].describe();
  return s + ")";
}

bool TupleMorphism::same_as(const Payload& other) const {
  auto* o = dynamic_cast<const TupleMorphism*>(&other);
  if (!o || o->components.size() != components.size()) return false;
  for (std::size_t i = 0; i < components.size(); ++i)
    if (!components[i].same_as(o->components[i])) return false;
  return true;
}

std::string TupleMorphism::describe() const {
  std::string s = "(";
  for (std::size_t i = 0; i < components.size(); ++i)
    s += (i ? ", " : "") + components[i].describe();
  return s + ")";
}

ProductCategory::ProductCategory(std::vector<CategoryPtr> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw PreconditionError("product of an empty list of categories");
}

Object ProductCategory::tuple(std::vector<Object> components) const {
  if (components.size() != factors_.size()) throw PreconditionError("tuple arity mismatch");
  return Object(std::make_shared<TupleObject>(std::move(components)));
}

Morphism ProductCategory::tuple(std::vector<Morphism> components) const {
  if (components.size() != factors_.size()) throw PreconditionError("tuple arity mismatch");
  std::vector<Object> s, t;
  for (const auto& c : components) {
    s.push_back(c.source);
    t.push_back(c.target);
  }
  return {tuple(std::move(s)), tuple(std::move(t)),
          std::make_shared<TupleMorphism>(std::move(components))};
}

const std::vector<Object>& ProductCategory::components(const Object& a) const {
  return a.as<TupleObject>().components;
}

const std::vector<Morphism>& ProductCategory::components(const Morphism& f) const {
  return f.as<TupleMorphism>().components;
}

std::string ProductCategory::name() const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? " x " : "") + factors_[i]->name();
  return s;
}

Capabilities ProductCategory::capabilities() const {
  Capabilities c = factors_.front()->capabilities();
  for (const auto& f : factors_) {
    Capabilities d = f->capabilities();
    c.lifts &= d.lifts;
    c.colifts &= d.colifts;
    c.weak_kernels &= d.weak_kernels;
    c.weak_cokernels &= d.weak_cokernels;
    c.kernels &= d.kernels;
    c.cokernels &= d.cokernels;
  }
  c.linear_systems = false;
  return c;
}

std::vector<Object> ProductCategory::slot(const std::vector<Object>& objs, std::size_t k) const {
  std::vector<Object> out;
  for (const auto& o : objs) out.push_back(components(o).at(k));
  return out;
}

template <class Fn>
Morphism ProductCategory::map1(const Morphism& f, Fn fn) const {
  std::vector<Morphism> out;
  for (std::size_t k = 0; k < factors_.size(); ++k) out.push_back(fn(*factors_[k], components(f)[k]));
  return tuple(std::move(out));
}

template <class Fn>
Morphism ProductCategory::map2(const Morphism& f, const Morphism& g, Fn fn) const {
  std::vector<Morphism> out;
  for (std::size_t k = 0; k < factors_.size(); ++k)
    out.push_back(fn(*factors_[k], components(f)[k], components(g)[k]));
  return tuple(std::move(out));
}

Morphism ProductCategory::identity(const Object& a) const {
  std::vector<Morphism> out;
  for (std::size_t k = 0; k < factors_.size(); ++k) out.push_back(factors_[k]->identity(components(a)[k]));
  return tuple(std::move(out));
}

Morphism ProductCategory::compose(const Morphism& f, const Morphism& g) const {
  require_composable(f, g);
  return map2(f, g, [](const Category& c, const Morphism& a, const Morphism& b) { return c.compose(a, b); });
}

Morphism ProductCategory::add(const Morphism& f, const Morphism& g) const {
  return map2(f, g, [](const Category& c, const Morphism& a, const Morphism& b) { return c.add(a, b); });
}

Morphism ProductCategory::negate(const Morphism& f) const {
  return map1(f, [](const Category& c, const Morphism& a) { return c.negate(a); });
}

Morphism ProductCategory::zero_morphism(const Object& source, const Object& target) const {
  std::vector<Morphism> out;
  for (std::size_t k = 0; k < factors_.size(); ++k)
    out.push_back(factors_[k]->zero_morphism(components(source)[k], components(target)[k]));
  return tuple(std::move(out));
}

Object ProductCategory::zero_object() const {
  std::vector<Object> out;
  for (const auto& f : factors_) out.push_back(f->zero_object());
  return tuple(std::move(out));
}

bool ProductCategory::is_equal(const Morphism& f, const Morphism& g) const {
  require_parallel(f, g);
  for (std::size_t k = 0; k < factors_.size(); ++k)
    if (!factors_[k]->is_equal(components(f)[k], components(g)[k])) return false;
  return true;
}

Object ProductCategory::direct_sum(const std::vector<Object>& summands) const {
  std::vector<Object> out;
  for (std::size_t k = 0; k < factors_.size(); ++k) out.push_back(factors_[k]->direct_sum(slot(summands, k)));
  return tuple(std::move(out));
}

Morphism ProductCategory::injection(const std::vector<Object>& summands, std::size_t i) const {
  std::vector<Morphism> out;
  for (std::size_t k = 0; k < factors_.size(); ++k) out.push_back(factors_[k]->injection(slot(summands, k), i));
  return tuple(std::move(out));
}

Morphism ProductCategory::projection(const std::vector<Object>& summands, std::size_t i) const {
  std::vector<Morphism> out;
  for (std::size_t k = 0; k < factors_.size(); ++k) out.push_back(factors_[k]->projection(slot(summands, k), i));
  return tuple(std::move(out));
}

std::optional<Morphism> ProductCategory::lift(const Morphism& along, const Morphism& b) const {
  std::vector<Morphism> out;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    auto x = factors_[k]->lift(components(along)[k], components(b)[k]);
    if (!x) return std::nullopt;
    out.push_back(*x);
  }
  return tuple(std::move(out));
}

std::optional<Morphism> ProductCategory::colift(const Morphism& along, const Morphism& b) const {
  std::vector<Morphism> out;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    auto x = factors_[k]->colift(components(along)[k], components(b)[k]);
    if (!x) return std::nullopt;
    out.push_back(*x);
  }
  return tuple(std::move(out));
}

Morphism ProductCategory::weak_kernel_embedding(const Morphism& f) const {
  return map1(f, [](const Category& c, const Morphism& a) { return c.weak_kernel_embedding(a); });
}

Morphism ProductCategory::weak_cokernel_projection(const Morphism& f) const {
  return map1(f, [](const Category& c, const Morphism& a) { return c.weak_cokernel_projection(a); });
}

Morphism ProductCategory::kernel_embedding(const Morphism& f) const {
  return map1(f, [](const Category& c, const Morphism& a) { return c.kernel_embedding(a); });
}

Morphism ProductCategory::kernel_lift(const Morphism& f, const Morphism& t) const {
  return map2(f, t, [](const Category& c, const Morphism& a, const Morphism& b) { return c.kernel_lift(a, b); });
}

Morphism ProductCategory::cokernel_projection(const Morphism& f) const {
  return map1(f, [](const Category& c, const Morphism& a) { return c.cokernel_projection(a); });
}

Morphism ProductCategory::cokernel_colift(const Morphism& f, const Morphism& t) const {
  return map2(f, t,
              [](const Category& c, const Morphism& a, const Morphism& b) { return c.cokernel_colift(a, b); });
}

std::shared_ptr<const ProductCategory> product_category(std::vector<CategoryPtr> factors) {
  return std::make_shared<ProductCategory>(std::move(factors));
}

}  // namespace fpcat
