#ifndef GIRARD_QUANTALE_HPP
#define GIRARD_QUANTALE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "girard/budget.hpp"
#include "girard/lattice.hpp"

namespace girard {

/// A finite quantale: a lattice with an associative multiplication that
/// distributes over joins (including the empty join, so 0 annihilates).
/// Validation is eager at construction; the trusted() factory is for
/// constructions whose laws are inherited from validated components.
class Quantale {
 public:
  Quantale(LatticePtr lattice, std::vector<std::int32_t> mul);

  static Quantale trusted(LatticePtr lattice, std::vector<std::int32_t> mul);

  const FiniteLattice& lat() const { return *lattice_; }
  const LatticePtr& lattice() const { return lattice_; }
  int size() const { return lattice_->size(); }
  int mul(int a, int b) const { return mul_[a * lattice_->size() + b]; }
  const std::vector<std::int32_t>& mul_table() const { return mul_; }
  /// The neutral element, discovered by scan at construction.
  std::optional<int> unit() const { return unit_; }

 private:
  Quantale() = default;
  void discover_unit();

  LatticePtr lattice_;
  std::vector<std::int32_t> mul_;
  std::optional<int> unit_;
};

/// Right-, left-, and two-sided element sets of a quantale.
struct SidedSets {
  std::vector<int> right;
  std::vector<int> left;
  std::vector<int> two;
};

/// b <- a = join{ c | a*c <= b }; the right adjoint of c -> a*c.
int residual_left(const Quantale& q, int b, int a);

/// a -> b = join{ c | c*a <= b }; the right adjoint of c -> c*a.
int residual_right(const Quantale& q, int a, int b);

/// Exact membership scan: r right-sided iff r*1 <= r, l left-sided iff
/// 1*l <= l.
SidedSets sided_sets(const Quantale& q);

/// r*1 = r and 1*l = l for all sided elements.
bool is_semiunital(const Quantale& q);

/// The annulator maps r -> (r->0) and l -> (0<-l) are mutually inverse
/// order-reversing bijections between the right- and left-sided elements.
bool is_von_neumann(const Quantale& q);

/// a*b <= d iff b*a <= d for all a, b.
bool is_cyclic_element(const Quantale& q, int d);

/// d<-(a->d) = (d<-a)->d = a for all a.
bool is_dualizing_element(const Quantale& q, int d);

/// All cyclic dualizing elements (the quantale is Girard iff nonempty).
std::vector<int> girard_elements(const Quantale& q);

/// The quantale of additive subgroups of Z_n: elements are the subgroups
/// <d> for divisors d of n, multiplication is the subgroup generated by
/// pairwise products, and the ring itself is the unit.
Quantale sub_ring_quantale(int n);

/// The quantale with the given lattice and constantly-bottom multiplication.
Quantale zero_quantale(LatticePtr lattice);

/// Componentwise product. Laws are inherited from the components; tables are
/// re-validated eagerly only up to budget.full_validation_max elements.
Quantale product_quantale(const Quantale& a, const Quantale& b,
                          const Budget& budget = {});

}  // namespace girard

#endif
