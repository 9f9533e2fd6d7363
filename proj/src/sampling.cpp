#include "chevwidth/sampling.hpp"

#include "chevwidth/errors.hpp"

namespace chevwidth {

Poly Sampler::poly(const FiniteField& F, int max_degree) {
  std::vector<FieldCode> c(max_degree + 1);
  for (auto& x : c) x = field_code(F);
  return Poly(std::move(c));
}

Elem Sampler::element(const Ring& ring, int bound) {
  switch (ring.kind()) {
    case RingKind::Integers: return ring.from_int(uniform(-bound, bound));
    case RingKind::Field: return ring.field_elem(field_code(ring.field()));
    case RingKind::Poly: return ring.from_poly(poly(ring.field(), bound));
    case RingKind::Laurent: {
      const std::int64_t low = uniform(-bound, bound);
      const std::int64_t high = uniform(low, bound);
      return ring.from_laurent(low, poly(ring.field(), static_cast<int>(high - low)));
    }
    case RingKind::RationalFunction: {
      Poly den;
      while (den.is_zero()) den = poly(ring.field(), bound);
      return ring.from_fraction(poly(ring.field(), bound), den);
    }
  }
  fail(ErrorCode::InternalError, "bad ring kind");
}

Elem Sampler::nonzero(const Ring& ring, int bound) {
  while (true) {
    Elem e = element(ring, bound);
    if (!e.is_zero()) return e;
  }
}

Elem Sampler::unit(const Ring& ring, int bound) {
  switch (ring.kind()) {
    case RingKind::Integers: return ring.from_int(uniform(0, 1) ? 1 : -1);
    case RingKind::Field:
    case RingKind::Poly: return ring.constant(nonzero_code(ring.field()));
    case RingKind::Laurent: return ring.from_laurent(uniform(-bound, bound), Poly::constant(nonzero_code(ring.field())));
    case RingKind::RationalFunction: return nonzero(ring, bound);
  }
  fail(ErrorCode::InternalError, "bad ring kind");
}

}  // namespace chevwidth
