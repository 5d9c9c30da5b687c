#ifndef GIRARD_BUDGET_HPP
#define GIRARD_BUDGET_HPP

#include <stdexcept>
#include <string>

namespace girard {

/// Thrown when a construction would exceed the configured enumeration budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Size limits for the exhaustive constructions. All limits are configuration,
/// not hard constants; the CLI exposes them as flags.
struct Budget {
  /// Cap on |T|^|J(S)| candidate assignments when enumerating sup-maps S -> T.
  long long sup_map_candidates = 1'000'000;
  /// Cap on |S|*|T| when building the tensor lattice of bi-ideals.
  int tensor_pairs = 400;
  /// Cap on |S| for building the full endomorphism quantale Q(S).
  int endo_base_max = 5;
  /// Largest element count for which quantale laws are re-checked eagerly at
  /// construction. Bigger tables (products, G) inherit their laws from the
  /// validated components.
  int full_validation_max = 800;
  /// Largest component size for which couple validation scans all triples
  /// literally; larger tables are decided through the join-irreducible base
  /// cases (see validate_couple).
  int couple_literal_max = 256;
};

inline void require_budget(bool ok, const std::string& what) {
  if (!ok) throw BudgetError("budget exceeded: " + what);
}

}  // namespace girard

#endif
