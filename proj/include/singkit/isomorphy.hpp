#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "singkit/local_algebra.hpp"

namespace singkit {

/// Homomorphism of local algebras given by the images of the source variables.
struct AlgebraMap {
  RingPtr source;  ///< source variables (coefficients are read in the target's field)
  RingPtr target;  ///< target variables and coefficient field
  std::vector<Poly> images;

  /// g(images); g lives over the source variables.
  Poly apply(const Poly& g) const;
};

/// x_i -> x_i between rings with the same variable names.
AlgebraMap identity_map(const RingPtr& source, const RingPtr& target);

enum class Verdict { Isomorphism, Surjection, Failure };
std::string_view verdict_name(Verdict v);

struct VerificationReport {
  std::vector<Poly> containment;  ///< normal form of each image generator (0 = contained)
  bool contained = false;
  std::size_t linear_rank = 0, required_rank = 0;
  std::optional<std::size_t> dim_source, dim_target;
  std::vector<Poly> reverse;  ///< ambient mode: normal forms of target generators modulo phi(I_A)
  bool reverse_ok = false;
  Verdict verdict = Verdict::Failure;
  std::string witness;
};

/// Containment phi(I_A) in I_B, surjectivity via the linear part, and the
/// dimension comparison that upgrades a surjection to an isomorphism.
VerificationReport verify(const AlgebraMap& map, const Ideal& IA, const Ideal& IB);

/// Two-sided ideal equality phi(I_A) = I_B under an invertible change of the
/// ambient coordinates. Throws NotAmbient.
VerificationReport check_ambient_isomorphism(const AlgebraMap& map, const Ideal& IA, const Ideal& IB);

// ---------------------------------------------------------------------------
// Ansatz and coefficient ideal.

struct Ansatz {
  RingPtr source;   ///< source variables
  RingPtr target;   ///< target ring (the algebra B's ring)
  std::vector<Monomial> basis;  ///< target monomials f_j (kbase(B) unless shaped)
  RingPtr params;   ///< alpha variables, global order
  std::vector<std::vector<int>> param_of;  ///< [i][j] -> parameter index or -1 when masked
  std::vector<ParamCoeffPoly> images;      ///< sum_j alpha_ij f_j
};

/// `mask[i][j]` selects basis element j for source variable i; nullopt means every
/// basis element except the constant 1.
Ansatz make_ansatz(const RingPtr& source, const LocalAlgebra& B,
                   const std::optional<std::vector<std::vector<bool>>>& mask = std::nullopt);

/// Ansatz from per-variable monomial lists (source variable name -> target monomials).
/// The monomials need not lie in kbase(B); images are reduced modulo B anyway.
Ansatz shape_ansatz(const RingPtr& source, const LocalAlgebra& B,
                    const std::map<std::string, std::vector<std::string>>& shape);

/// phi~(g) reduced modulo B, with parameter coefficients.
ParamCoeffPoly reduced_image(const Poly& g, const LocalAlgebra& B, const Ansatz& ansatz);
/// Ideal generated by all coefficients of the reduced images of the generators.
Ideal coefficient_ideal(const Ideal& IA, const LocalAlgebra& B, const Ansatz& ansatz);
/// n-minors of the linear part of the ansatz at 0 (n = number of target variables).
std::vector<ParamPoly> linear_minors(const Ansatz& ansatz);
/// Evaluates the ansatz at a parameter point.
AlgebraMap evaluate_ansatz(const Ansatz& ansatz, const Field& field, const std::vector<FieldElement>& point);

/// Coefficient-wise evaluation of a parameter polynomial.
Poly specialize(const ParamCoeffPoly& g, const RingPtr& target, const std::vector<FieldElement>& point);

// ---------------------------------------------------------------------------
// Parameter system solving.

enum class SolveStatus { Found, Impossible, BudgetExhausted, UnsupportedRootDegree };
std::string_view solve_status_name(SolveStatus s);

struct SolveOptions {
  std::chrono::milliseconds budget{60000};
};
/// Budget from SINGKIT_BUDGET_MS when set.
SolveOptions default_solve_options();

struct SolveResult {
  SolveStatus status = SolveStatus::Impossible;
  Field field;  ///< Q or the single extension that was adjoined
  std::vector<FieldElement> point;
  std::string detail;
};

/// A point of V(J) outside V(minor) for one of the minors.
SolveResult solve_parameter_system(const Ideal& J, const std::vector<ParamPoly>& minors,
                                   const SolveOptions& options = default_solve_options());

// ---------------------------------------------------------------------------

struct FindOptions {
  bool require_isomorphism = true;
  std::map<std::string, std::vector<std::string>> shape;  ///< empty: full ansatz
  SolveOptions solve = default_solve_options();
};

struct SurjectionResult {
  std::optional<AlgebraMap> map;  ///< into the original target ring
  std::string reason;             ///< when no map: dimension-mismatch, certified-impossible, ...
  std::optional<VerificationReport> report;
  std::size_t parameters = 0;
  std::size_t coefficient_equations = 0;
};

/// Searches a surjection A -> B with phi(I_A) in I_B; I_B must be Artinian.
SurjectionResult find_surjection(const Ideal& IA, const Ideal& IB, const FindOptions& options = {});

// ---------------------------------------------------------------------------
// Diagonal ambient isomorphisms for the reduced modular ideals.

struct DiagonalSolution {
  Field field;
  FieldElement alpha, beta, gamma;
  FieldElement lambda;  ///< coefficient of xyz in the target; 1 unless that needs two radicals
  Poly target;      ///< x^p + y^q + z^r + lambda*xyz with vanishing-coefficient summands dropped
  AlgebraMap map;   ///< t1, u1, v1 -> alpha x, beta y, gamma z (permuted for the symmetric cases)
};

/// Throws ParabolicBase, SymmetricException (two or more coefficients vanish) or
/// UnsupportedRootDegree.
DiagonalSolution solve_diagonal(int p, int q, int r);
/// Targets xyz, x^2 + xyz or x^3 + xyz for triples with two or three vanishing coefficients.
DiagonalSolution symmetric_exception_map(int p, int q, int r);

/// U M V = D with U, V unimodular and D diagonal with d_1 | d_2 | ...
struct SmithForm {
  std::vector<std::vector<long long>> U, D, V;
};
SmithForm smith_normal_form(const std::vector<std::vector<long long>>& M);

}  // namespace singkit
