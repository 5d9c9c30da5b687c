#ifndef GIRARD_CONSTRUCTION_HPP
#define GIRARD_CONSTRUCTION_HPP

#include <string>
#include <utility>
#include <vector>

#include "girard/budget.hpp"
#include "girard/couple.hpp"

namespace girard {

/// The Girard quantale G built from a Girard couple: pairs (a, c) with
/// phi(c) <= a, multiplied by (a1,c1)(a2,c2) = (a1a2, a1c2 v c1a2), with unit
/// (e, 0), cyclic dualizing element (1, d), and negation (a,c)^ = (c^, a^).
struct GirardQuantale {
  Quantale g;
  Couple source;                           ///< the couple G was built from
  std::vector<std::pair<int, int>> pairs;  ///< element -> (a in Q, c in C)
  int unit = -1;
  int dualizer = -1;
  std::vector<std::int32_t> gamma;  ///< C -> G, c -> (phi(c), c)
  std::vector<std::int32_t> alpha;  ///< G -> Q, (a, c) -> a
  std::vector<std::int32_t> perp;   ///< negation table on G

  int index_of(int a, int c) const;  ///< -1 when (a, c) is not in G
};

/// Builds G and verifies the factorization phi = alpha o gamma, the unit,
/// the negation pairing, and that (1, d) is cyclic and dualizing.
GirardQuantale build_G(const Couple& k, const Budget& budget = {});

/// C is a G-bimodule by restricting scalars along alpha, and gamma makes
/// C -> G a couple; checked by validating that couple exhaustively.
bool check_restriction_of_scalars(const Couple& k, const GirardQuantale& g);

struct SidedChainReport {
  bool applicable = false;
  std::string reason;
  bool pass = false;
};

/// For a strong couple of semiunital quantales the right-sided posets of C,
/// G and Q are isomorphic via the coupling witnesses (dually for left).
SidedChainReport check_sided_chain(const Couple& k, const GirardQuantale& g);

/// The two-sided convolution reading of the G multiplication:
/// (gh)_i = join over j /\ k <= i of g_j h_k, with the C-slot products
/// carried into Q along phi for i = 1.
bool check_convolution(const GirardQuantale& g);

/// G of the zero couple: the full product Q x Q^op with negation
/// (a, c) -> (c, a) on indices.
GirardQuantale rosenthal(const Quantale& q, const Budget& budget = {});

/// G of the predual couple of S: a Girard quantale whose right-sided part is
/// order-isomorphic to S and whose left-sided part is anti-isomorphic to S.
struct GofSResult {
  GirardQuantale g;
  CsCouple cs;
  bool right_iso = false;  ///< R(G) is isomorphic to S
  bool left_iso = false;   ///< L(G) is isomorphic to S^op
};
GofSResult G_of_S(LatticePtr s, const Budget& budget = {});

}  // namespace girard

#endif
