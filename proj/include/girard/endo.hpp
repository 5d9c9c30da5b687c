#ifndef GIRARD_ENDO_HPP
#define GIRARD_ENDO_HPP

#include <memory>
#include <unordered_map>
#include <vector>

#include "girard/budget.hpp"
#include "girard/lattice.hpp"
#include "girard/quantale.hpp"

namespace girard {

/// The endomorphism quantale Q(S): all sup-endomaps of S ordered pointwise,
/// with composition as multiplication and the identity map as unit.
struct EndoQuantale {
  LatticePtr base;            ///< S
  std::vector<SupMap> elems;  ///< enumeration order; index = quantale element
  Quantale q;                 ///< pointwise-order lattice, mul = composition
  std::vector<int> rho;       ///< x -> index of rho_x (x for nonzero, else 0)
  std::vector<int> lam;       ///< x -> index of lambda_x (1 off the downset of x)

  /// Index of the map with the given table; -1 when absent.
  int index_of(const std::vector<std::int32_t>& table) const;

 private:
  friend EndoQuantale build_endo_quantale(LatticePtr, const Budget&);
  EndoQuantale(LatticePtr b, std::vector<SupMap> e, Quantale qq)
      : base(std::move(b)), elems(std::move(e)), q(std::move(qq)) {}
  std::unordered_map<std::string, int> lookup_;
};

EndoQuantale build_endo_quantale(LatticePtr s, const Budget& budget = {});

/// The decomposition of every endomap through the sided families:
/// alpha = meet_x (rho_{alpha(x)} v lambda_x) = meet_x (rho_x v lambda_{alpha#(x)}).
bool check_decomposition(const EndoQuantale& e);

}  // namespace girard

#endif
