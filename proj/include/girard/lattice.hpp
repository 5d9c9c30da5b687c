#ifndef GIRARD_LATTICE_HPP
#define GIRARD_LATTICE_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "girard/budget.hpp"

namespace girard {

class FiniteLattice;
using LatticePtr = std::shared_ptr<const FiniteLattice>;

/// A finite complete lattice. Elements are dense indices 0..n-1; labels are
/// metadata only. The order relation and the binary join/meet tables are
/// stored in full, so arbitrary joins and meets reduce to folds.
class FiniteLattice {
 public:
  int size() const { return n_; }
  bool leq(int a, int b) const { return leq_[a * n_ + b] != 0; }
  int join(int a, int b) const { return join_[a * n_ + b]; }
  int meet(int a, int b) const { return meet_[a * n_ + b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Index of the element with the given label, or -1.
  int index_of(std::string_view name) const;

  /// Join of an arbitrary subset (empty set gives bottom).
  int join_all(std::span<const int> xs) const;
  /// Meet of an arbitrary subset (empty set gives top).
  int meet_all(std::span<const int> xs) const;

  /// Elements j with j != bottom and j != join of the elements strictly
  /// below j. Every element is the join of the join-irreducibles below it.
  std::vector<int> join_irreducibles() const;

  /// Structural equality: same size, order, tables, bounds and labels.
  bool operator==(const FiniteLattice& other) const;

  const std::vector<std::uint8_t>& leq_table() const { return leq_; }
  const std::vector<std::int32_t>& join_table() const { return join_; }
  const std::vector<std::int32_t>& meet_table() const { return meet_; }

  /// Builds a lattice from named elements and cover pairs (lower, upper).
  /// Rejects duplicate names, cycles, and posets where some pair of elements
  /// lacks a join or a meet.
  static FiniteLattice from_covers(
      const std::vector<std::string>& elements,
      const std::vector<std::pair<std::string, std::string>>& covers);

  /// Builds a lattice from a full order relation (leq[a*n+b] != 0 iff a <= b).
  /// The relation must be a partial order whose LUBs/GLBs all exist.
  static FiniteLattice from_leq(int n, std::vector<std::uint8_t> leq,
                                std::vector<std::string> labels);

  /// Internal factory for constructions whose tables are correct by
  /// construction (opposites, products, bi-ideal lattices).
  static FiniteLattice from_tables(int n, std::vector<std::uint8_t> leq,
                                   std::vector<std::int32_t> join,
                                   std::vector<std::int32_t> meet, int bottom,
                                   int top, std::vector<std::string> labels);

 private:
  FiniteLattice() = default;

  int n_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<std::int32_t> join_;
  std::vector<std::int32_t> meet_;
  int bottom_ = 0;
  int top_ = 0;
  std::vector<std::string> labels_;
};

/// A join-preserving map between finite lattices. The constructor checks
/// preservation of bottom and of binary joins, which in the finite case
/// is equivalent to preservation of arbitrary joins.
struct SupMap {
  LatticePtr source;
  LatticePtr target;
  std::vector<std::int32_t> table;

  SupMap(LatticePtr src, LatticePtr tgt, std::vector<std::int32_t> tab);

  int operator()(int x) const { return table[x]; }
  bool operator==(const SupMap& other) const;
};

/// The opposite lattice: order reversed, join/meet swapped, bounds swapped.
/// Labels get a trailing prime toggled, so the double opposite is identical.
FiniteLattice op_dual(const FiniteLattice& l);

/// Componentwise-ordered product lattice; labels are "(x,y)".
FiniteLattice product_lattice(const FiniteLattice& a, const FiniteLattice& b);

/// One-element lattice (used for empty products).
FiniteLattice unit_lattice();

/// The right adjoint f#(t) = join{ s | f(s) <= t }. Satisfies the Galois
/// adjunction f(s) <= t iff s <= f#(t), and preserves meets.
std::vector<std::int32_t> right_adjoint(const SupMap& f);

/// The dual map f*: T^op -> S^op, f*(x') = f#(x)'. Involutive under the
/// double-opposite identification.
SupMap dual_map(const SupMap& f);

/// True iff f preserves the top element.
bool is_strong(const SupMap& f);

/// For finite lattices complete distributivity collapses to ordinary
/// distributivity, so this decides a/\(b\/c) = (a/\b)\/(a/\c) exhaustively.
bool is_completely_distributive(const FiniteLattice& l);

/// A witness triple (a,b,c) violating distributivity, if any.
std::optional<std::array<int, 3>> distributivity_witness(
    const FiniteLattice& l);

/// All join-preserving maps S -> T, in lexicographic order of the image
/// tuple on the join-irreducibles of S. Throws BudgetError when
/// |T|^|J(S)| exceeds budget.sup_map_candidates.
std::vector<SupMap> enumerate_sup_maps(LatticePtr s, LatticePtr t,
                                       const Budget& budget = {});

}  // namespace girard

#endif
