#pragma once

#include <string>
#include <utility>
#include <vector>

#include "singkit/catalog.hpp"
#include "singkit/isomorphy.hpp"

namespace singkit {

struct CaseReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> invariants;
  std::vector<std::pair<std::string, bool>> verdicts;
  std::vector<std::pair<std::string, double>> timings;  ///< milliseconds
  std::vector<CaseReport> children;                     ///< for catalog and all

  bool passed() const;
};

/// tseries:p,q,r  subseries:k,q,r  symmetric:p,q,r  w12  z11  s11  bimodal  catalog  all.
/// Throws UnknownCase.
CaseReport run_case(const std::string& name, const Catalog& catalog = builtin_catalog());
/// Case names covered by "all", in report order.
std::vector<std::string> registered_cases();

/// The transcribed map of a catalog entry, from the stratum ring into the ring of
/// the entry's form (over the map's field).
AlgebraMap catalog_paper_map(const CatalogEntry& e, const RingPtr& stratum, const RingPtr& form_ring);

std::string format_report(const CaseReport& r, bool timings = false);
std::string report_json(const CaseReport& r, bool timings = false);

}  // namespace singkit
