#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "singkit/ideal.hpp"

namespace singkit {

/// A standard basis (local order) or reduced Groebner basis (global order).
/// Elements are monic and minimal: no lead monomial divides another.
class StandardBasis {
 public:
  StandardBasis() = default;
  StandardBasis(RingPtr ring, std::vector<Poly> elements);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  /// Lead monomials of the elements; minimal generators of the lead ideal.
  std::vector<Monomial> staircase() const;
  bool lead_ideal_contains(const Monomial& m) const;
  /// True when the basis contains a unit (the ideal is the whole ring).
  bool is_unit_ideal() const;

 private:
  RingPtr ring_;
  std::vector<Poly> elements_;
};

struct BasisOptions {
  bool product_criterion = true;
  bool chain_criterion = true;
  /// Checked once per critical pair; BudgetExhausted when passed.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Mora's standard basis algorithm for local orders, Buchberger with the sugar
/// strategy for global ones (then fully reduced).
StandardBasis standard_basis(const Ideal& ideal, const BasisOptions& options = {});

/// Weak normal form: lead(h) is not divisible by any lead(g) (or h = 0). For local
/// orders Mora's ecart strategy is used, so u*f = sum q_i g_i + h with u(0) != 0.
Poly mora_normal_form(const Poly& f, const std::vector<Poly>& G);

struct NormalFormRelation {
  Poly unit;
  std::vector<Poly> cofactors;
  Poly remainder;
};
/// As mora_normal_form, additionally returning u and q_i with u*f - sum q_i g_i - h = 0.
NormalFormRelation mora_normal_form_with_relation(const Poly& f, const std::vector<Poly>& G);

/// Division with tail reduction (global orders): no term of the result is divisible by a lead monomial.
Poly full_normal_form(const Poly& f, const std::vector<Poly>& G);

bool ideal_membership(const Poly& f, const StandardBasis& sb);
bool ideal_membership(const Poly& f, const Ideal& ideal);
/// f in sqrt(I) via 1 in I + (1 - z*f); requires a global order.
bool radical_membership(const Poly& f, const Ideal& ideal);

/// I intersected with the subring without the dropped variables; the result lives in
/// a global-order ring on the remaining variables (original relative order).
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& drop);

/// Quotient dimension for a global order (nullopt when infinite).
std::optional<std::size_t> global_quotient_dimension(const StandardBasis& gb);

}  // namespace singkit
