#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csdp/problem.hpp"
#include "csdp/solver.hpp"

namespace csdp {

enum class ListingFlavor { kPseudoMatlab, kCLike };

std::string_view to_string(ListingFlavor f);
/// "pseudo-matlab" or "c-like"; nullopt otherwise.
std::optional<ListingFlavor> parse_flavor(std::string_view name);

/// 1-based, inclusive.
struct LineRange {
  int first;
  int last;
};

struct ContractLocation {
  std::vector<LineRange> lines;
  std::string anchor;
};

struct AnnotatedListing {
  ListingFlavor flavor = ListingFlavor::kPseudoMatlab;
  std::vector<std::string> lines;
  std::map<std::string, ContractLocation> contract_index;

  /// Lines joined with '\n', trailing newline included.
  std::string text() const;
};

/**
 * The annotated solver program for `prob`: data assignments carry the
 * problem's constants, every clause of clause_map() appears once in order
 * with the gap ceiling and σ from `opts` substituted, and Hoare-rule
 * applications are noted as `# rule:` comments. Output depends only on the
 * arguments.
 */
AnnotatedListing emit_annotated_listing(const SdpProblem& prob,
                                        const SolverOptions& opts,
                                        ListingFlavor flavor);

/**
 * Shortest round-trip decimal: fixed notation for 1e-5 ≤ |x| < 1e15 and zero,
 * otherwise a compact exponent ("1e-8", not "1e-08").
 */
std::string format_constant(double x);

}  // namespace csdp
