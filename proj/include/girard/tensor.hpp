#ifndef GIRARD_TENSOR_HPP
#define GIRARD_TENSOR_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "girard/budget.hpp"
#include "girard/endo.hpp"
#include "girard/lattice.hpp"

namespace girard {

/// A subset of S x T packed into 64-bit words. Used as the canonical
/// representation of a bi-ideal: down-closed and join-closed in each slot,
/// always containing the zero pairs (0,t) and (s,0).
struct PairSet {
  std::vector<std::uint64_t> words;

  explicit PairSet(int bits = 0) : words((bits + 63) / 64, 0) {}
  bool test(int i) const { return (words[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { words[i >> 6] |= std::uint64_t(1) << (i & 63); }
  bool operator==(const PairSet& o) const { return words == o.words; }
  bool subset_of(const PairSet& o) const {
    for (size_t w = 0; w < words.size(); ++w)
      if (words[w] & ~o.words[w]) return false;
    return true;
  }
  PairSet united(const PairSet& o) const {
    PairSet r = *this;
    for (size_t w = 0; w < words.size(); ++w) r.words[w] |= o.words[w];
    return r;
  }
  PairSet intersected(const PairSet& o) const {
    PairSet r = *this;
    for (size_t w = 0; w < words.size(); ++w) r.words[w] &= o.words[w];
    return r;
  }
};

struct PairSetHash {
  size_t operator()(const PairSet& p) const {
    size_t h = 1469598103934665603ull;
    for (std::uint64_t w : p.words) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// The tensor product S (x) T of finite sup-lattices, with elements
/// represented as bi-ideals of S x T. Join is bi-ideal closure of union,
/// meet is intersection, and the generators x(x)y join-generate everything.
struct TensorLattice {
  LatticePtr s, t;
  LatticePtr lattice;           ///< bi-ideals ordered by inclusion
  std::vector<PairSet> elems;   ///< element index -> member set

  int pair_bit(int x, int y) const { return x * t->size() + y; }
  /// Index of the least bi-ideal containing (x, y).
  int generator(int x, int y) const { return gen_[pair_bit(x, y)]; }
  /// Index of a closed member set; -1 when not closed / unknown.
  int index_of(const PairSet& p) const;
  /// Bi-ideal closure of an arbitrary pair set.
  PairSet closure(PairSet m) const;

  std::vector<int> gen_;
  std::unordered_map<PairSet, int, PairSetHash> lookup_;
};

/// Enumerates all bi-ideals of S x T: the generators, closed under joins.
TensorLattice tensor_lattice(LatticePtr s, LatticePtr t,
                             const Budget& budget = {});

/// The order-reversing pairing between the tensor square S (x) S^op and the
/// endomorphism quantale Q(S): x(x)y' corresponds to lambda_x v rho_y, and a
/// general bi-ideal to the meet of its generators' partners.
struct TensorEndoDuality {
  std::vector<int> to_endo;    ///< C(S) index -> Q(S) index
  std::vector<int> from_endo;  ///< Q(S) index -> C(S) index
};

/// Computes and verifies the duality (mutually inverse, order-reversing).
/// A verification failure is an internal error, not an input error.
TensorEndoDuality tensor_dual_to_endo(const TensorLattice& c,
                                      const EndoQuantale& e);

}  // namespace girard

#endif
