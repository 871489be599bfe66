#pragma once

#include <string>
#include <vector>

#include "singkit/ideal.hpp"

namespace singkit {

/// pqr - qr - pr - pq.
Rational coefficient_a(int p, int q, int r);
/// prod_{k=1..i} a(p-k+1, q, r) / (i! a^(i-2)); throws ParabolicBase when a = 0.
Rational coefficient_c(int p, int q, int r, int i);
/// The same product running down the second index.
Rational coefficient_d(int p, int q, int r, int i);
/// The same product running down the third index.
Rational coefficient_e(int p, int q, int r, int i);

struct ModularIdealData {
  int p = 0, q = 0, r = 0;
  Rational a;
  std::vector<Rational> c, d, e;  ///< c[i] for 2 <= i <= p (entries 0, 1 unused); likewise d, e
  Ideal ideal;                    ///< over t1..tp, u1..u(q-1), v1..v(r-1)
  Ideal reduced;                  ///< the three mixed generators over t1, u1, v1
};

/// I(p,q,r); throws ParabolicBase for a = 0.
ModularIdealData modular_ideal(int p, int q, int r);

/// (u1 v1 - c_p t1^(p-1), t1 v1 - d_q u1^(q-1), t1 u1 - e_r v1^(r-1)).
Ideal reduced_modular_ideal(int p, int q, int r);

struct SubseriesProfile {
  bool c_vanishes = false, d_vanishes = false, e_vanishes = false;
  int line_components = 0;
  std::vector<std::string> vanishing() const;
};

/// Vanishing of c_p, d_q, e_r by the unit-fraction criterion (integer arithmetic only).
SubseriesProfile subseries_profile(int p, int q, int r);

/// Some rotation (k, q', r') of the triple has (q', r') in the sub-series list with k >= l.
bool in_subseries(int p, int q, int r);

}  // namespace singkit
