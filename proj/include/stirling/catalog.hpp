#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "stirling/certify.hpp"

namespace stirling {

/// One bound together with its published reference data, where any exists:
/// the printed sign polynomial, its claimed validity threshold, and the
/// directly verified base range.
struct CatalogEntry {
  BoundSpec spec;
  std::optional<Poly> printed_poly;
  std::optional<long> printed_threshold;
  std::optional<std::pair<long, long>> printed_base_range;  // inclusive
  std::string provenance;
};

/// The eleven bounds, immutable, in a fixed order.
const std::vector<CatalogEntry>& catalog_list();

const CatalogEntry* catalog_find(std::string_view name);

struct ReproRow {
  std::string name;
  std::string method;                     // "certificate" or "interval_sweep"
  std::string poly_verdict;               // match | scaled_match | mismatch | n/a
  std::optional<long> derived_threshold;
  std::optional<long> printed_threshold;
  std::string threshold_verdict;          // match | mismatch | n/a
  bool certified = false;
  long valid_from = 1;
  std::string note;
  std::optional<Certificate> certificate;
};

struct ReproductionReport {
  std::vector<ReproRow> rows;       // ordered by entry name
  std::vector<std::string> notes;   // cross-entry findings
  bool all_certified = false;
};

/// Re-derives every catalog entry and compares against the printed reference
/// data. Failures become report rows, never exceptions. Deterministic.
ReproductionReport reproduce_catalog(mpfr_prec_t prec_ceiling = kDefaultPrecCeiling,
                                   long sweep_nmax = 1000);

nlohmann::ordered_json report_json(const ReproductionReport& report);
std::string report_text(const ReproductionReport& report);

}  // namespace stirling
