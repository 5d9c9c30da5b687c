#ifndef GIRARD_BUILTINS_HPP
#define GIRARD_BUILTINS_HPP

#include <string>
#include <vector>

#include "girard/couple.hpp"
#include "girard/lattice.hpp"
#include "girard/logic.hpp"
#include "girard/quantale.hpp"

namespace girard {

/// The named corpus every verification suite runs against. Lookups are
/// case-insensitive and accept a few aliases (2x2 for bool2, cs-couple-*
/// for cs-*).

std::vector<std::string> builtin_lattice_names();
FiniteLattice builtin_lattice(const std::string& name);
LatticePtr builtin_lattice_ptr(const std::string& name);

/// chain2 (the two-chain with meet multiplication), zmchain3 (zero
/// multiplication), subz4, subz6, endo-chain2, endo-chain3, endo-bool2.
std::vector<std::string> builtin_quantale_names();
Quantale builtin_quantale(const std::string& name);

/// id-<quantale>, zero-<unital quantale>, cs-<lattice>, subideal-<n>-<k>.
std::vector<std::string> builtin_couple_names();
Couple builtin_couple(const std::string& name);

/// rosenthal-<quantale>, gofs-<lattice>, plus Girard builtin quantales.
std::vector<std::string> builtin_model_names();
LogicModel builtin_model(const std::string& name);

/// The lattices the acceptance corpus quantifies over.
std::vector<std::string> corpus_lattice_names();
/// Lattices small enough for the full endomorphism quantale.
std::vector<std::string> corpus_endo_lattice_names();
/// The quantales used for identity/zero couples in the corpus.
std::vector<std::string> corpus_quantale_names();
/// Girard models for the logic suites.
std::vector<std::string> corpus_model_names();

}  // namespace girard

#endif
