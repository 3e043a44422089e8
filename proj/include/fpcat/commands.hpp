#pragma once

#include <cstdint>

#include "fpcat/category.hpp"
#include "fpcat/freyd.hpp"
#include "fpcat/presentation.hpp"
#include "fpcat/rows.hpp"

namespace fpcat {

/// The object (R^cols <- relations) of A(Rows_R).
Object to_freyd_object(const FreydCategory& f, const Presentation& p);
Presentation to_presentation(const Ring& ring, const Object& a);

CanonicalForm cmd_canonical(const Presentation& p);
/// Tensor product via the Kronecker-lifted structure on A(Rows_R).
CanonicalForm cmd_tensor(const Presentation& p, const Presentation& q);
/// Internal hom of the Kronecker-lifted structure.
CanonicalForm cmd_hom(const Presentation& p, const Presentation& q);
CanonicalForm cmd_kernel(const MorphismPresentation& m);
CanonicalForm cmd_cokernel(const MorphismPresentation& m);

/// Coherence suite of the Kronecker-lifted structure on count seeded random objects.
Report cmd_check_axioms(std::uint64_t seed, std::size_t count, const Ring& ring = Ring::integers());
/// Builds the free abelian category over Rows_Z and checks coherence on tiny samples.
Report cmd_free_abelian_demo();

}  // namespace fpcat
