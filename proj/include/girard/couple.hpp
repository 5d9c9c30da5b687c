#ifndef GIRARD_COUPLE_HPP
#define GIRARD_COUPLE_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "girard/budget.hpp"
#include "girard/endo.hpp"
#include "girard/quantale.hpp"
#include "girard/tensor.hpp"

namespace girard {

/// A couple of quantales: a coupling map phi : C -> Q, C a Q-bimodule, and
/// phi(c1)c2 = c1 phi(c2) = c1 c2. The four action/multiplication tables are
/// stored in full.
struct Couple {
  Quantale c;  ///< the predual side
  Quantale q;  ///< the acting side
  SupMap phi;  ///< C -> Q
  std::vector<std::int32_t> actl_;  ///< [a * |C| + m]: a.m for a in Q, m in C
  std::vector<std::int32_t> actr_;  ///< [m * |Q| + a]: m.a
  std::optional<int> dualizer;      ///< designated cyclic dualizing d in C

  int nc() const { return c.size(); }
  int nq() const { return q.size(); }
  int actl(int a, int m) const { return actl_[static_cast<size_t>(a) * nc() + m]; }
  int actr(int m, int a) const { return actr_[static_cast<size_t>(m) * nq() + a]; }
};

/// One verified law; witness holds the violating indices when pass is false.
struct LawResult {
  std::string law;
  bool pass = true;
  std::vector<int> witness;
  std::string witness_text;
};

struct CoupleReport {
  std::vector<LawResult> laws;
  bool ok() const {
    for (const auto& l : laws)
      if (!l.pass) return false;
    return true;
  }
  const LawResult* first_failure() const {
    for (const auto& l : laws)
      if (!l.pass) return &l;
    return nullptr;
  }
};

/// Checks every couple axiom: join distributivity of the actions, the three
/// bimodule associativities, phi being a bimodule homomorphism, the coupling
/// equation, and the derived laws (mixed associativities and multiplicativity
/// of phi). Components up to budget.full_validation_max elements get the
/// literal scan over all triples. Larger tables are decided through the
/// join-irreducible base cases: distributivity is checked against every
/// irreducible second argument and the associativities with one slot ranging
/// over the irreducibles, which together decide the laws for all elements
/// (every element is the join of the irreducibles below it, and the base
/// cases propagate along joins). A violation anywhere is always detected;
/// counterexamples are recovered by a full rescan of the failing law.
CoupleReport validate_couple(const Couple& k, const Budget& budget = {});

/// An element of C + Q, tagged by component.
struct CoupleElement {
  bool in_q = false;
  int idx = 0;
  bool operator==(const CoupleElement&) const = default;
};

/// a.c <= d iff c.a <= d for all a in Q, c in C.
bool is_cyclic(const Couple& k, int d);

/// d<-(a->d) = (d<-a)->d = a on Q and the same two identities on C, with the
/// mixed residuals computed by scanning the opposite component.
bool is_dualizing(const Couple& k, int d);

/// Checks the designated dualizer, or searches C when none is designated.
bool is_girard(const Couple& k);
std::optional<int> find_cyclic_dualizing(const Couple& k);

/// phi preserves the top element.
bool is_strong_couple(const Couple& k);

/// Girard negation tables at the designated d: for a in Q the element
/// a->d of C, and for c in C the element c->d of Q.
struct CouplePerp {
  std::vector<int> q_to_c;  ///< a -> a->d  (= d<-a when d is cyclic)
  std::vector<int> c_to_q;  ///< c -> c->d
};
CouplePerp perp_tables(const Couple& k);

/// Negation across the couple; requires a designated dualizer.
CoupleElement perp(const Couple& k, CoupleElement z);

/// a par b = (b^ a^)^ for a, b in C + Q; the product is taken in whichever
/// component the two negations land in (action tables for mixed pairs).
CoupleElement par(const Couple& k, CoupleElement z1, CoupleElement z2);

/// phi* = phi: the right adjoint of phi transported along the negations
/// agrees with phi itself.
bool check_self_adjoint(const Couple& k);

struct SidedIsoReport {
  bool applicable = false;  ///< strong couple of semiunital quantales
  std::string reason;
  bool pass = false;
};

/// phi restricted to sided elements and the action by the top of C are
/// mutually inverse bijections R(C) <-> R(Q) (dually for left-sided).
SidedIsoReport check_strong_sided_iso(const Couple& k);

struct GirardImpliesReport {
  int unit = -1;             ///< perp(d) in Q
  bool unit_neutral_q = false;
  bool unit_neutral_c = false;
  bool strong = false;
  bool c_von_neumann = false;   ///< only meaningful when strong
  bool q_von_neumann = false;
  bool sided_below_d_zero = false;
  bool ok() const {
    if (!(unit_neutral_q && unit_neutral_c)) return false;
    if (strong) return c_von_neumann && q_von_neumann && sided_below_d_zero;
    return true;
  }
};

/// A Girard couple is unital with unit perp(d); a strong Girard couple has
/// von Neumann components and no nonzero sided element below d.
GirardImpliesReport check_girard_implies(const Couple& k);

/// The couple Q -> Q with the identity coupling map; multiplication is the
/// action on both sides. Designates the first cyclic dualizing element found.
Couple identity_couple(const Quantale& q);

/// The couple Q^op -> Q with zero multiplication on Q^op, the coupling map
/// constantly zero, residual actions, and dualizer e'. Requires Q unital.
Couple zero_couple(const Quantale& q);

/// Componentwise product; the unit of the fold is the one-element couple.
Couple product_couple(const Couple& a, const Couple& b,
                      const Budget& budget = {});
Couple product_couple(std::span<const Couple> couples,
                      const Budget& budget = {});

/// The predual couple C(S) -> Q(S): the tensor square S (x) S^op with the
/// generator multiplication, mapped onto composites of the sided maps.
struct CsCouple {
  Couple couple;
  TensorLattice tensor;  ///< carrier of couple.c
  EndoQuantale endo;     ///< carrier of couple.q
};
CsCouple cs_couple(LatticePtr s, const Budget& budget = {});

/// For subgroup quantales of Z_n: the couple Sub(kZ_n) -> Sub(Z_n) with the
/// inclusion as coupling map. Requires k to divide n.
Couple sub_ideal_couple(int n, int k);

}  // namespace girard

#endif
