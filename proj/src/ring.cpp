#include "fpcat/ring.hpp"

#include <cctype>

namespace fpcat {

Ring Ring::integers_mod(const mpz_class& n) {
  if (n < 2) throw RingError("Z/n requires n >= 2, got " + n.get_str());
  return Ring(Kind::IntegersMod, n);
}

Ring Ring::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.size() > 2 && text.substr(0, 2) == "Z/") {
    auto digits = text.substr(2);
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw RingError("malformed modulus in ring '" + std::string(text) + "'");
    return integers_mod(mpz_class(std::string(digits)));
  }
  throw RingError("unsupported ring '" + std::string(text) + "'");
}

bool Ring::contains(const Scalar& x) const {
  if (kind_ == Kind::Rationals) return true;
  return x.get_den() == 1;
}

Scalar Ring::normalize(const Scalar& x) const {
  Scalar y = x;
  y.canonicalize();
  switch (kind_) {
    case Kind::Rationals:
      return y;
    case Kind::Integers:
      if (y.get_den() != 1) throw RingError("non-integer entry " + y.get_str() + " over Z");
      return y;
    case Kind::IntegersMod: {
      if (y.get_den() != 1)
        throw RingError("non-integer entry " + y.get_str() + " over " + name());
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), y.get_num_mpz_t(), modulus_.get_mpz_t());
      return Scalar(r);
    }
  }
  return y;
}

std::string Ring::name() const {
  switch (kind_) {
    case Kind::Integers:
      return "Z";
    case Kind::Rationals:
      return "Q";
    case Kind::IntegersMod:
      return "Z/" + modulus_.get_str();
  }
  return "?";
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) throw RingError("ring mismatch: " + a.name() + " vs " + b.name());
}

}  // namespace fpcat
