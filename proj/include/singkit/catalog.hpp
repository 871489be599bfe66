#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "singkit/local_algebra.hpp"

namespace singkit {

enum class TClass { Parabolic, Hyperbolic };

/// 1/p + 1/q + 1/r compared with 1: negative for hyperbolic, zero for parabolic.
int t_series_sign(int p, int q, int r);
TClass t_series_class(int p, int q, int r);

/// x^p + y^q + z^r + lambda*x*y*z in the local ring Q[x,y,z] (or lambda's field).
/// Throws IndexOutOfRange when 1/p+1/q+1/r > 1 or an index is below 2, and
/// DegenerateLambda for the non-isolated parabolic members.
Poly t_series(int p, int q, int r, const FieldElement& lambda);
/// The parabolic lambda gap: lambda^k = value.
struct LambdaGap {
  int power;
  Rational value;
};
std::optional<LambdaGap> parabolic_gap(int p, int q, int r);

/// y^q + z^r + x*y*z (non-isolated).
Poly limit_singularity(int q, int r);

/// Determinant of the Hessian matrix.
Poly hesse_form(const Poly& f0);
Poly hesse_family(const Poly& f0, const FieldElement& lambda);

struct Deformation {
  Poly f;
  std::vector<Monomial> basis;
  RingPtr ring;  ///< f's variables followed by s1..s_tau
  Poly F;
};

/// F = f + sum s_i b_i. Without a basis the Tjurina kbase is used; a caller basis
/// must have tau elements (BasisWrongSize) independent modulo the Tjurina ideal
/// (BasisNotIndependent).
Deformation miniversal_deformation(const Poly& f, const std::optional<std::vector<Monomial>>& basis = std::nullopt);

struct Subseries {
  int q, r, l;
};
/// The six families T_{k,q,r}, k >= l, whose splitting line is one-dimensional.
const std::vector<Subseries>& subseries_list();
/// Subseries with matching (q, r), or nullopt.
std::optional<Subseries> find_subseries(int q, int r);

/// x^(l-1) (x+t)^(k-l+1) + y^q + z^r + xyz over the ring x, y, z, t. Throws NotASubseries.
Poly splitting_family(int k, int l, int q, int r);
/// The fiber at a fixed t, in x, y, z.
Poly splitting_fiber(int k, int l, int q, int r, const FieldElement& t);

/// Ring x, y, z with the local order.
RingPtr xyz_ring(const Field& field = Field());

// ---------------------------------------------------------------------------
// Catalog of normal forms with their modular strata.

struct PaperMap {
  std::string minpoly;                                    ///< empty over Q
  std::vector<std::pair<std::string, std::string>> images;  ///< source variable -> expression
};

struct CatalogEntry {
  std::string name;
  std::string kind;  ///< "exceptional" or "bimodal"
  std::vector<std::string> vars;
  std::string equation;  ///< as printed
  std::string leading_form;  ///< replacement quasihomogeneous part when the printed one is damaged
  std::vector<std::string> tjurina_basis;
  std::vector<bool> bold;
  std::vector<std::string> modular_equations;
  std::string deformation;  ///< printed deformation row, when the source lists one
  std::map<std::string, std::vector<std::string>> iso_shape;
  std::optional<PaperMap> paper_map;
  std::vector<std::string> notes;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  const CatalogEntry& find(const std::string& name) const;  ///< throws UnknownCase
};

/// Parses catalog JSON text; throws Error(Io) on malformed records.
Catalog parse_catalog(const std::string& json_text);
Catalog load_catalog(const std::string& path);
/// The catalog compiled into the library.
const Catalog& builtin_catalog();

enum class RowStatus { Verified, Reconstructed, Unverified };
std::string_view row_status_name(RowStatus s);

struct FormCheck {
  std::string label;  ///< "printed" or "reconstructed"
  Poly f;
  Poly leading, perturbation;
  std::optional<std::size_t> mu, tau;
  bool basis_ok = false;  ///< tau = basis count and independent modulo the Tjurina ideal
  bool mu_ok = false;     ///< mu = tau + 1
  bool hesse_ok = false;  ///< Hessian of the leading form is a nonzero multiple of the perturbation in Q(f0)
  std::vector<std::string> problems;
  bool ok() const { return basis_ok && mu_ok && hesse_ok; }
};

struct RowValidation {
  std::string name;
  RowStatus status = RowStatus::Unverified;
  std::vector<FormCheck> forms;
  std::optional<std::size_t> used_form;  ///< index into forms
  bool equations_ok = false;
  std::vector<std::string> coordinates;   ///< stratum coordinates, e.g. s1, s2
  std::optional<Ideal> stratum;           ///< in the coordinates, local order
  std::vector<std::string> problems;
  std::vector<std::string> warnings;
  bool manual_confirmation = false;

  bool passed() const { return status != RowStatus::Unverified; }
  const Poly& form() const { return forms.at(*used_form).f; }
};

RowValidation validate_entry(const CatalogEntry& e);

/// Basis monomials as listed, over the entry's variables.
std::vector<Monomial> entry_basis(const CatalogEntry& e, const RingPtr& ring);

/// Summands of a printed deformation row "f + s1 y^4 + ... + s10": s-index -> monomial
/// text. Two parameters glued into one summand are split (and reported in `glued`).
struct ParsedDeformation {
  std::map<int, std::string> monomials;
  bool glued = false;
};
ParsedDeformation parse_deformation_row(const std::string& text);

/// Stratum algebra vs Q(f): dimension, embedding dimension, Hilbert function.
struct Prechecks {
  std::optional<std::size_t> dim_stratum, mu;
  std::size_t embdim_stratum = 0, embdim_milnor = 0;
  std::vector<std::size_t> hilbert_stratum, hilbert_milnor;
  bool dimension_ok = false, embdim_ok = false, hilbert_ok = false;
  bool ok() const { return dimension_ok && embdim_ok && hilbert_ok; }
};
Prechecks isomorphy_prechecks(const Ideal& stratum, const Ideal& milnor);

}  // namespace singkit
