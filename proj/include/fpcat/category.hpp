#pragma once

#include "fpcat/ring.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <typeinfo>
#include <vector>

namespace fpcat {

/// A category was asked for an operation it does not provide.
struct CapabilityError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Source/target mismatch, or a universal-property request whose hypothesis fails.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Something that should hold by construction did not.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// Category-specific data behind an object or a morphism.
class Payload {
 public:
  virtual ~Payload() = default;
  virtual bool same_as(const Payload& other) const = 0;
  virtual std::string describe() const = 0;
};

using PayloadPtr = std::shared_ptr<const Payload>;

template <class T>
const T& payload_cast(const PayloadPtr& p, const char* what) {
  auto* t = dynamic_cast<const T*>(p.get());
  if (!t) throw PreconditionError(std::string("foreign ") + what + " handed to category");
  return *t;
}

/// Opaque object handle; equality is structural on the payload.
class Object {
 public:
  Object() = default;
  explicit Object(PayloadPtr payload) : payload_(std::move(payload)) {}

  const PayloadPtr& payload() const { return payload_; }
  template <class T>
  const T& as() const {
    return payload_cast<T>(payload_, "object");
  }

  bool operator==(const Object& other) const;
  std::string describe() const { return payload_ ? payload_->describe() : "<null>"; }

 private:
  PayloadPtr payload_;
};

struct Morphism {
  Object source;
  Object target;
  PayloadPtr datum;

  template <class T>
  const T& as() const {
    return payload_cast<T>(datum, "morphism");
  }
  /// Structural identity (not categorical equality).
  bool same_as(const Morphism& other) const;
  std::string describe() const;
};

struct Capabilities {
  bool lifts = false;           ///< x * a = b
  bool colifts = false;         ///< a * x = b
  bool linear_systems = false;  ///< sum_k L_k * X_k * R_k = B
  bool weak_kernels = false;
  bool weak_cokernels = false;
  bool kernels = false;
  bool cokernels = false;
};

/// Simultaneous equations  sum_t left_t * X_{unknown_t} * right_t = rhs  in a category.
struct LinearSystem {
  struct Unknown {
    Object source;
    Object target;
  };
  struct Term {
    std::size_t unknown;
    Morphism left;   ///< rhs.source -> unknown.source
    Morphism right;  ///< unknown.target -> rhs.target
  };
  struct Equation {
    std::vector<Term> terms;
    Morphism rhs;
  };

  std::vector<Unknown> unknowns;
  std::vector<Equation> equations;

  std::size_t add_unknown(Object source, Object target);
};

/// One line of a property check.
struct CheckResult {
  std::string check;
  std::string sample;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::vector<CheckResult> entries;

  void add(std::string check, std::string sample, bool passed, std::string detail = {});
  void append(const Report& other);
  bool all_passed() const;
  std::size_t failures() const;
  std::string to_string() const;
};

/// An additive category given by its operations. Composition follows the row
/// convention: compose(f, g) is "f, then g".
class Category : public std::enable_shared_from_this<Category> {
 public:
  virtual ~Category() = default;

  virtual std::string name() const = 0;
  virtual Capabilities capabilities() const = 0;

  virtual Morphism identity(const Object& a) const = 0;
  virtual Morphism compose(const Morphism& f, const Morphism& g) const = 0;
  virtual Morphism add(const Morphism& f, const Morphism& g) const = 0;
  virtual Morphism negate(const Morphism& f) const = 0;
  virtual Morphism zero_morphism(const Object& source, const Object& target) const = 0;
  virtual Object zero_object() const = 0;
  virtual bool is_equal(const Morphism& f, const Morphism& g) const = 0;

  virtual Object direct_sum(const std::vector<Object>& summands) const = 0;
  virtual Morphism injection(const std::vector<Object>& summands, std::size_t i) const = 0;
  virtual Morphism projection(const std::vector<Object>& summands, std::size_t i) const = 0;

  /// x with x * along = b.
  virtual std::optional<Morphism> lift(const Morphism& along, const Morphism& b) const;
  /// x with along * x = b.
  virtual std::optional<Morphism> colift(const Morphism& along, const Morphism& b) const;
  virtual std::optional<std::vector<Morphism>> solve(const LinearSystem& system) const;

  virtual Morphism weak_kernel_embedding(const Morphism& f) const;
  virtual Morphism weak_cokernel_projection(const Morphism& f) const;
  virtual Morphism kernel_embedding(const Morphism& f) const;
  /// Unique u with u * kernel_embedding(f) = t, for t with t * f = 0.
  virtual Morphism kernel_lift(const Morphism& f, const Morphism& t) const;
  virtual Morphism cokernel_projection(const Morphism& f) const;
  /// Unique u with cokernel_projection(f) * u = t, for t with f * t = 0.
  virtual Morphism cokernel_colift(const Morphism& f, const Morphism& t) const;

  Object kernel_object(const Morphism& f) const { return kernel_embedding(f).source; }
  Object cokernel_object(const Morphism& f) const { return cokernel_projection(f).target; }

  // Derived conveniences, written in terms of the operations above.
  Morphism subtract(const Morphism& f, const Morphism& g) const { return add(f, negate(g)); }
  Morphism compose(const std::vector<Morphism>& chain) const;
  Morphism sum(const std::vector<Morphism>& terms, const Object& source, const Object& target) const;
  bool is_zero(const Morphism& f) const;
  /// [f_1; f_2; ...] : (+) sources -> common target.
  Morphism from_direct_sum(const std::vector<Morphism>& parts) const;
  /// [f_1, f_2, ...] : common source -> (+) targets.
  Morphism into_direct_sum(const std::vector<Morphism>& parts) const;
  Morphism direct_sum_morphism(const std::vector<Morphism>& parts) const;
  /// Block morphism (+) sources -> (+) targets; a missing entry is zero.
  Morphism block_morphism(const std::vector<Object>& sources, const std::vector<Object>& targets,
                          const std::vector<std::vector<std::optional<Morphism>>>& entries) const;

  void require_capability(bool present, const char* what) const;
  void require_composable(const Morphism& f, const Morphism& g) const;
  void require_parallel(const Morphism& f, const Morphism& g) const;
};

using CategoryPtr = std::shared_ptr<const Category>;

/// Biproduct identities on every ordered pair (and the empty sum) drawn from the samples.
Report check_biproduct_axioms(const Category& c, const std::vector<Object>& samples);

}  // namespace fpcat
