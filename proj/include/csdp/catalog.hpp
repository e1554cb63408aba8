#pragma once

#include <span>
#include <string_view>

namespace csdp {

enum class Phase { kInitialization, kLoop };

/**
 * One contract of the annotated program. The monitor evaluates it, the
 * listing prints it, and the trace checker expects a record for it; all
 * three read this table.
 */
struct CatalogEntry {
  std::string_view id;
  Phase phase;
  /// Where the contract sits and what it states, in annotation-language terms.
  std::string_view anchor;
};

/// Initialization contracts followed by the twelve loop contracts I1..I12.
std::span<const CatalogEntry> contract_catalog();
std::span<const CatalogEntry> initialization_catalog();
std::span<const CatalogEntry> loop_catalog();

/// Throws std::out_of_range for unknown ids.
const CatalogEntry& catalog_entry(std::string_view id);

/**
 * A requires/ensures clause of the annotated program together with the
 * catalog contract whose evaluation discharges it numerically.
 */
struct ClauseMapping {
  std::string_view clause;
  std::string_view contract_id;
};

/// Every clause the listing emits, in listing order, with {c} and {s}
/// standing for the gap ceiling and σ.
std::span<const ClauseMapping> clause_map();

}  // namespace csdp
