#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "singkit/linalg.hpp"
#include "singkit/standard_basis.hpp"

namespace singkit {

/// Quotient of the local ring at the origin by an ideal. The ideal is moved to the
/// local order of its variables; non-Artinian quotients are allowed and report an
/// infinite dimension.
class LocalAlgebra {
 public:
  explicit LocalAlgebra(const Ideal& ideal);

  const Ideal& ideal() const;
  const RingPtr& ring() const;
  const StandardBasis& standard_basis() const;

  bool is_artinian() const;
  /// nullopt when infinite.
  std::optional<std::size_t> dimension() const;
  /// Standard monomials, descending in the local order (so 1 comes first). Throws NotArtinian.
  const std::vector<Monomial>& kbase() const;
  /// Least N such that every monomial of degree N lies in the lead ideal.
  int nilpotency_bound() const;

  /// Coordinates of the class of g in kbase().
  Vector coordinates(const Poly& g) const;
  /// The unique representative supported on kbase().
  Poly reduced_normal_form(const Poly& g) const;
  /// Coefficient-wise version for polynomials with parameter coefficients.
  ParamCoeffPoly reduced_normal_form(const ParamCoeffPoly& g) const;
  Poly from_coordinates(const Vector& v) const;

  /// Column j holds the coordinates of g * kbase()[j].
  Matrix mult_matrix(const Poly& g) const;

  /// dim (m^k + I) / (m^(k+1) + I).
  std::size_t hilbert_function(int k) const;
  std::size_t embdim() const { return hilbert_function(1); }

 private:
  struct State;
  std::shared_ptr<State> state_;
};

std::optional<std::size_t> milnor_number(const Poly& f);
std::optional<std::size_t> tjurina_number(const Poly& f);
/// Dimension of the global Tjurina algebra k[x]/(f, df), i.e. the sum of local
/// Tjurina numbers over all singular points (nullopt when infinite).
std::optional<std::size_t> global_tjurina_number(const Poly& f);

struct LocalInvariants {
  std::optional<std::size_t> mu, tau;
};
/// mu and tau of f at `point` (coordinates in f's coefficient field).
LocalInvariants local_invariants_at(const Poly& f, const std::vector<FieldElement>& point);

struct AnnihilatorReport {
  std::size_t mu = 0, tau = 0;
  std::size_t dim_ann = 0;
  bool equals_maximal_ideal = false;
  bool mf_in_mJ = false;
};
/// Ann(f) in Q(f), the maximal-ideal test and the membership m*f in m*J(f).
AnnihilatorReport annihilator_check(const Poly& f);

/// Saito's criterion: f in its Jacobian ideal. Throws NotArtinian for non-isolated f.
bool is_quasihomogeneous(const Poly& f);

struct Embedding {
  Ideal ideal;                     ///< in the remaining variables
  std::vector<std::size_t> kept;   ///< indices (in the original ring) of remaining variables
  std::vector<Poly> images;        ///< per original variable: its expression in the new ring
};
/// Eliminates variables occurring linearly in generators; see SubstitutionDiverged.
Embedding minimal_embedding(const Ideal& ideal);

std::string dimension_string(const std::optional<std::size_t>& d);

}  // namespace singkit
