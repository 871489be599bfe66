#include "singkit/ideal.hpp"

namespace singkit {

Ideal::Ideal(RingPtr r, std::vector<Poly> g) : ring(std::move(r)), gens(std::move(g)) {
  for (auto& p : gens) {
    if (p.ring() && !same_ring(p.ring(), ring)) throw Error(Errc::OrderMismatch, "generator from another ring");
    if (!p.ring()) p = Poly(ring);
  }
}

RingPtr ring_with_order(const RingPtr& ring, const TermOrder& order) {
  if (ring->order == order) return ring;
  return make_ring(ring->vars, order, ring->field);
}

RingPtr ring_with_field(const RingPtr& ring, const Field& field) {
  if (ring->field == field) return ring;
  return make_ring(ring->vars, ring->order, field);
}

Ideal Ideal::with_order(const TermOrder& order) const {
  RingPtr r = ring_with_order(ring, order);
  if (r == ring) return *this;
  std::vector<Poly> g;
  for (const auto& p : gens) g.push_back(p.in_ring(r));
  return Ideal(r, std::move(g));
}

Ideal Ideal::with_field(const Field& field) const {
  RingPtr r = ring_with_field(ring, field);
  if (r == ring) return *this;
  std::vector<Poly> g;
  for (const auto& p : gens) g.push_back(change_field(p, r));
  return Ideal(r, std::move(g));
}

Ideal jacobian_ideal(const Poly& f) {
  if (!f.ring()) throw Error(Errc::InvalidArgument, "polynomial without a ring");
  if (!f.constant_term().is_zero()) {
    throw Error(Errc::NonGerm, "polynomial has a nonzero constant term");
  }
  std::vector<Poly> g;
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i) g.push_back(derivative(f, i));
  return Ideal(f.ring(), std::move(g));
}

Ideal tjurina_ideal(const Poly& f) {
  Ideal j = jacobian_ideal(f);
  j.gens.push_back(f);
  return j;
}

Ideal maximal_ideal_times(const Ideal& J) {
  std::vector<Poly> g;
  for (std::size_t i = 0; i < J.ring->nvars(); ++i) {
    Poly xi = Poly::variable(J.ring, i);
    for (const auto& p : J.gens) g.push_back(xi * p);
  }
  return Ideal(J.ring, std::move(g));
}

}  // namespace singkit
