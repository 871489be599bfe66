#pragma once

#include <vector>

#include "singkit/polynomial.hpp"

namespace singkit {

struct Ideal {
  RingPtr ring;
  std::vector<Poly> gens;

  Ideal() = default;
  Ideal(RingPtr r, std::vector<Poly> g);

  /// Same generators viewed in a ring with the same variables but another order.
  Ideal with_order(const TermOrder& order) const;
  Ideal with_field(const Field& field) const;
};

/// (df/dx_1, ..., df/dx_n); throws NonGerm when f has a nonzero constant term.
Ideal jacobian_ideal(const Poly& f);
/// jacobian_ideal(f) + (f).
Ideal tjurina_ideal(const Poly& f);

/// The ideal (x_1, ..., x_n) multiplied by J.
Ideal maximal_ideal_times(const Ideal& J);

RingPtr ring_with_order(const RingPtr& ring, const TermOrder& order);
RingPtr ring_with_field(const RingPtr& ring, const Field& field);

}  // namespace singkit
