#include "girard/couple.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>

#include "girard/parallel.hpp"

namespace girard {

namespace {

struct Tables {
  int nc, nq;
  const std::int32_t* mc;
  const std::int32_t* mq;
  const std::int32_t* al;
  const std::int32_t* ar;
  const std::int32_t* jc;
  const std::int32_t* jq;
  const std::int32_t* phi;

  explicit Tables(const Couple& k)
      : nc(k.nc()),
        nq(k.nq()),
        mc(k.c.mul_table().data()),
        mq(k.q.mul_table().data()),
        al(k.actl_.data()),
        ar(k.actr_.data()),
        jc(k.c.lat().join_table().data()),
        jq(k.q.lat().join_table().data()),
        phi(k.phi.table.data()) {}

  int mulc(int a, int b) const { return mc[static_cast<size_t>(a) * nc + b]; }
  int mulq(int a, int b) const { return mq[static_cast<size_t>(a) * nq + b]; }
  int actl(int a, int m) const { return al[static_cast<size_t>(a) * nc + m]; }
  int actr(int m, int a) const { return ar[static_cast<size_t>(m) * nq + a]; }
  int joinc(int a, int b) const { return jc[static_cast<size_t>(a) * nc + b]; }
  int joinq(int a, int b) const { return jq[static_cast<size_t>(a) * nq + b]; }
};

LawResult make_witness(const Couple& k, std::vector<const char*> roles,
                       std::vector<int> idx, std::vector<bool> in_q) {
  LawResult r;
  r.witness = idx;
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i) r.witness_text += ", ";
    r.witness_text += roles[i];
    r.witness_text += '=';
    r.witness_text +=
        in_q[i] ? k.q.lat().label(idx[i]) : k.c.lat().label(idx[i]);
  }
  return r;
}


}  // namespace

CoupleReport validate_couple(const Couple& k, const Budget& budget) {
  Tables t(k);
  const int nc = t.nc, nq = t.nq;
  const bool literal = std::max(nc, nq) <= budget.couple_literal_max;

  // The cubic laws run as fused passes that only record which law broke;
  // counterexamples are recovered afterwards by a sequential rescan of the
  // failing law. Bits follow the report order below.
  enum LawBit {
    kActLeftJoinQ = 0,
    kActLeftJoinC,
    kActRightJoinQ,
    kActRightJoinC,
    kActZero,
    kModuleAssocLeft,
    kModuleAssocRight,
    kBimoduleCompat,
    kPhiBimodule,
    kCouplingEq,
    kMixedAssocLeft,
    kMixedAssocRight,
    kMixedAssocMiddle,
    kPhiMultiplicative,
    kLawCount
  };
  std::atomic<unsigned> violated{0};

  if (literal) {
    // Pass over (a1, a2, m): join distributivity in the Q slot of the left
    // action, and the left module law (a1 a2)m = a1(a2 m).
    parallel_for(nq, [&](int a1) {
      unsigned local = 0;
      const std::int32_t* row_a1 = t.al + static_cast<size_t>(a1) * nc;
      for (int a2 = 0; a2 < nq; ++a2) {
        const std::int32_t* row_a2 = t.al + static_cast<size_t>(a2) * nc;
        const std::int32_t* row_ab =
            t.al + static_cast<size_t>(t.mulq(a1, a2)) * nc;
        int bad_join = 0, bad_assoc = 0;
        if (a2 >= a1) {
          const std::int32_t* row_ja =
              t.al + static_cast<size_t>(t.joinq(a1, a2)) * nc;
          for (int m = 0; m < nc; ++m) {
            bad_join |= row_ja[m] != t.joinc(row_a1[m], row_a2[m]);
            bad_assoc |= row_ab[m] != row_a1[row_a2[m]];
          }
        } else {
          for (int m = 0; m < nc; ++m)
            bad_assoc |= row_ab[m] != row_a1[row_a2[m]];
        }
        if (bad_join) local |= 1u << kActLeftJoinQ;
        if (bad_assoc) local |= 1u << kModuleAssocLeft;
      }
      if (local) violated.fetch_or(local);
    }, 4);

    // Pass over (m, a, b): join distributivity in the Q slot of the right
    // action, and the right module law m(ab) = (ma)b.
    parallel_for(nc, [&](int m) {
      unsigned local = 0;
      const std::int32_t* arow = t.ar + static_cast<size_t>(m) * nq;
      for (int a = 0; a < nq; ++a) {
        const int ma = arow[a];
        const std::int32_t* jrow = t.jq + static_cast<size_t>(a) * nq;
        const std::int32_t* mrow = t.mq + static_cast<size_t>(a) * nq;
        const std::int32_t* marow = t.ar + static_cast<size_t>(ma) * nq;
        const std::int32_t* jcrow = t.jc + static_cast<size_t>(ma) * nc;
        int bad_join = 0, bad_assoc = 0;
        for (int b = a; b < nq; ++b)
          bad_join |= arow[jrow[b]] != jcrow[arow[b]];
        for (int b = 0; b < nq; ++b)
          bad_assoc |= arow[mrow[b]] != marow[b];
        if (bad_join) local |= 1u << kActRightJoinQ;
        if (bad_assoc) local |= 1u << kModuleAssocRight;
      }
      if (local) violated.fetch_or(local);
    }, 4);

    // Pass over (a, m, b): the bimodule compatibility (am)b = a(mb).
    parallel_for(nq, [&](int a) {
      const std::int32_t* alrow = t.al + static_cast<size_t>(a) * nc;
      int bad = 0;
      for (int m = 0; m < nc; ++m) {
        const std::int32_t* am_row =
            t.ar + static_cast<size_t>(alrow[m]) * nq;
        const std::int32_t* m_row = t.ar + static_cast<size_t>(m) * nq;
        for (int b = 0; b < nq; ++b) bad |= am_row[b] != alrow[m_row[b]];
      }
      if (bad) violated.fetch_or(1u << kBimoduleCompat);
    }, 4);

    // Pass over (a, c1, c2): join distributivity in the C slot of the left
    // action and the derived law a(c1 c2) = (a c1)c2.
    parallel_for(nq, [&](int a) {
      const std::int32_t* alrow = t.al + static_cast<size_t>(a) * nc;
      int bad_join = 0, bad_mixed = 0;
      for (int c1 = 0; c1 < nc; ++c1) {
        const int ac1 = alrow[c1];
        const std::int32_t* jrow = t.jc + static_cast<size_t>(c1) * nc;
        const std::int32_t* mrow = t.mc + static_cast<size_t>(c1) * nc;
        const std::int32_t* pjrow = t.jc + static_cast<size_t>(ac1) * nc;
        const std::int32_t* pmrow = t.mc + static_cast<size_t>(ac1) * nc;
        for (int c2 = c1; c2 < nc; ++c2)
          bad_join |= alrow[jrow[c2]] != pjrow[alrow[c2]];
        for (int c2 = 0; c2 < nc; ++c2)
          bad_mixed |= alrow[mrow[c2]] != pmrow[c2];
      }
      unsigned local = 0;
      if (bad_join) local |= 1u << kActLeftJoinC;
      if (bad_mixed) local |= 1u << kMixedAssocLeft;
      if (local) violated.fetch_or(local);
    }, 4);

    // Pass over c1: join distributivity in the C slot of the right action,
    // (c1 c2)a = c1(c2 a), and (c1 a)c2 = c1(a c2).
    parallel_for(nc, [&](int c1) {
      unsigned local = 0;
      const std::int32_t* c1_ar = t.ar + static_cast<size_t>(c1) * nq;
      const std::int32_t* c1_mc = t.mc + static_cast<size_t>(c1) * nc;
      int bad_join = 0, bad_right = 0, bad_middle = 0;
      for (int c2 = 0; c2 < nc; ++c2) {
        const std::int32_t* c2_ar = t.ar + static_cast<size_t>(c2) * nq;
        const std::int32_t* m_ar =
            t.ar + static_cast<size_t>(c1_mc[c2]) * nq;
        if (c2 >= c1) {
          const std::int32_t* j_ar =
              t.ar + static_cast<size_t>(t.joinc(c1, c2)) * nq;
          for (int a = 0; a < nq; ++a)
            bad_join |= j_ar[a] != t.joinc(c1_ar[a], c2_ar[a]);
        }
        for (int a = 0; a < nq; ++a)
          bad_right |= m_ar[a] != c1_mc[c2_ar[a]];
      }
      for (int a = 0; a < nq; ++a) {
        const std::int32_t* lrow =
            t.mc + static_cast<size_t>(c1_ar[a]) * nc;
        const std::int32_t* alrow = t.al + static_cast<size_t>(a) * nc;
        for (int c2 = 0; c2 < nc; ++c2)
          bad_middle |= lrow[c2] != c1_mc[alrow[c2]];
      }
      if (bad_join) local |= 1u << kActRightJoinC;
      if (bad_right) local |= 1u << kMixedAssocRight;
      if (bad_middle) local |= 1u << kMixedAssocMiddle;
      if (local) violated.fetch_or(local);
    }, 4);
  } else {
    // Join-irreducible base cases; see the header note. Distributivity only
    // needs irreducible second arguments, the associativities one irreducible
    // module slot, and the quadratic zero laws supply the empty joins.
    const std::vector<int> irr_c = k.c.lat().join_irreducibles();
    const std::vector<int> irr_q = k.q.lat().join_irreducibles();

    parallel_for(nq, [&](int a1) {
      unsigned local = 0;
      const std::int32_t* row_a1 = t.al + static_cast<size_t>(a1) * nc;
      int bad_jq = 0, bad_jc = 0, bad_mixed = 0;
      for (int j : irr_q) {
        const std::int32_t* row_j = t.al + static_cast<size_t>(j) * nc;
        const std::int32_t* row_ja =
            t.al + static_cast<size_t>(t.joinq(a1, j)) * nc;
        for (int m = 0; m < nc; ++m)
          bad_jq |= row_ja[m] != t.joinc(row_a1[m], row_j[m]);
      }
      for (int c1 = 0; c1 < nc; ++c1) {
        const int ac1 = row_a1[c1];
        const std::int32_t* jrow = t.jc + static_cast<size_t>(c1) * nc;
        const std::int32_t* mrow = t.mc + static_cast<size_t>(c1) * nc;
        const std::int32_t* pjrow = t.jc + static_cast<size_t>(ac1) * nc;
        const std::int32_t* pmrow = t.mc + static_cast<size_t>(ac1) * nc;
        for (int j : irr_c)
          bad_jc |= row_a1[jrow[j]] != pjrow[row_a1[j]];
        for (int j : irr_c)
          bad_mixed |= row_a1[mrow[j]] != pmrow[j];
      }
      if (bad_jq) local |= 1u << kActLeftJoinQ;
      if (bad_jc) local |= 1u << kActLeftJoinC;
      if (bad_mixed) local |= 1u << kMixedAssocLeft;
      if (local) violated.fetch_or(local);
    }, 16);

    parallel_for(nc, [&](int m) {
      unsigned local = 0;
      const std::int32_t* arow = t.ar + static_cast<size_t>(m) * nq;
      int bad_jq = 0, bad_jc = 0;
      for (int a = 0; a < nq; ++a) {
        const int ma = arow[a];
        const std::int32_t* jcrow = t.jc + static_cast<size_t>(ma) * nc;
        for (int j : irr_q)
          bad_jq |= arow[t.joinq(a, j)] != jcrow[arow[j]];
      }
      for (int j : irr_c) {
        const std::int32_t* j_ar = t.ar + static_cast<size_t>(j) * nq;
        const std::int32_t* u_ar =
            t.ar + static_cast<size_t>(t.joinc(m, j)) * nq;
        for (int a = 0; a < nq; ++a)
          bad_jc |= u_ar[a] != t.joinc(arow[a], j_ar[a]);
      }
      if (bad_jq) local |= 1u << kActRightJoinQ;
      if (bad_jc) local |= 1u << kActRightJoinC;
      if (local) violated.fetch_or(local);
    }, 16);

    // Module associativities with the C slot over the irreducibles.
    parallel_for(nq, [&](int a) {
      unsigned local = 0;
      const std::int32_t* alrow = t.al + static_cast<size_t>(a) * nc;
      const std::int32_t* mqrow = t.mq + static_cast<size_t>(a) * nq;
      int bad_left = 0, bad_right = 0, bad_compat = 0;
      for (int b = 0; b < nq; ++b) {
        const std::int32_t* row_ab =
            t.al + static_cast<size_t>(mqrow[b]) * nc;
        const std::int32_t* row_b = t.al + static_cast<size_t>(b) * nc;
        for (int j : irr_c) bad_left |= row_ab[j] != alrow[row_b[j]];
      }
      for (int j : irr_c) {
        const std::int32_t* j_ar = t.ar + static_cast<size_t>(j) * nq;
        const std::int32_t* aj_ar =
            t.ar + static_cast<size_t>(alrow[j]) * nq;
        for (int b = 0; b < nq; ++b) {
          bad_right |= j_ar[mqrow[b]] != t.ar[static_cast<size_t>(j_ar[a]) * nq + b];
          bad_compat |= aj_ar[b] != alrow[j_ar[b]];
        }
      }
      if (bad_left) local |= 1u << kModuleAssocLeft;
      if (bad_right) local |= 1u << kModuleAssocRight;
      if (bad_compat) local |= 1u << kBimoduleCompat;
      if (local) violated.fetch_or(local);
    }, 16);

    // Mixed associativities with an irreducible C slot.
    parallel_for(nc, [&](int c2) {
      unsigned local = 0;
      int bad_right = 0, bad_middle = 0;
      const std::int32_t* c2_ar = t.ar + static_cast<size_t>(c2) * nq;
      for (int j : irr_c) {
        const std::int32_t* j_mc = t.mc + static_cast<size_t>(j) * nc;
        const std::int32_t* jc2_ar =
            t.ar + static_cast<size_t>(j_mc[c2]) * nq;
        const std::int32_t* j_ar = t.ar + static_cast<size_t>(j) * nq;
        for (int a = 0; a < nq; ++a) {
          bad_right |= jc2_ar[a] != j_mc[c2_ar[a]];
          bad_middle |= t.mc[static_cast<size_t>(j_ar[a]) * nc + c2] !=
                        j_mc[t.al[static_cast<size_t>(a) * nc + c2]];
        }
      }
      if (bad_right) local |= 1u << kMixedAssocRight;
      if (bad_middle) local |= 1u << kMixedAssocMiddle;
      if (local) violated.fetch_or(local);
    }, 16);
  }

  // Quadratic laws: annihilating bottoms, phi as a bimodule homomorphism,
  // the coupling equation, and multiplicativity of phi.
  {
    unsigned local = 0;
    int zq = k.q.lat().bottom(), zc = k.c.lat().bottom();
    for (int m = 0; m < nc; ++m)
      if (t.actl(zq, m) != zc || t.actr(m, zq) != zc)
        local |= 1u << kActZero;
    for (int a = 0; a < nq; ++a)
      if (t.actl(a, zc) != zc || t.actr(zc, a) != zc)
        local |= 1u << kActZero;
    for (int a = 0; a < nq; ++a)
      for (int m = 0; m < nc; ++m)
        if (t.phi[t.actl(a, m)] != t.mulq(a, t.phi[m]) ||
            t.phi[t.actr(m, a)] != t.mulq(t.phi[m], a))
          local |= 1u << kPhiBimodule;
    for (int c1 = 0; c1 < nc; ++c1) {
      const int p1 = t.phi[c1];
      for (int c2 = 0; c2 < nc; ++c2) {
        const int cc = t.mulc(c1, c2);
        if (t.actl(p1, c2) != cc || t.actr(c1, t.phi[c2]) != cc)
          local |= 1u << kCouplingEq;
        if (t.phi[cc] != t.mulq(p1, t.phi[c2]))
          local |= 1u << kPhiMultiplicative;
      }
    }
    if (local) violated.fetch_or(local);
  }

  // Counterexample rescans, run only for the laws that actually failed.
  unsigned bits = violated.load();
  auto rescan = [&](LawBit bit) -> LawResult {
    switch (bit) {
      case kActLeftJoinQ:
        for (int a1 = 0; a1 < nq; ++a1)
          for (int a2 = 0; a2 < nq; ++a2)
            for (int m = 0; m < nc; ++m)
              if (t.actl(t.joinq(a1, a2), m) !=
                  t.joinc(t.actl(a1, m), t.actl(a2, m)))
                return make_witness(k, {"a1", "a2", "c"}, {a1, a2, m},
                                    {true, true, false});
        break;
      case kActLeftJoinC:
        for (int a = 0; a < nq; ++a)
          for (int m1 = 0; m1 < nc; ++m1)
            for (int m2 = 0; m2 < nc; ++m2)
              if (t.actl(a, t.joinc(m1, m2)) !=
                  t.joinc(t.actl(a, m1), t.actl(a, m2)))
                return make_witness(k, {"a", "c1", "c2"}, {a, m1, m2},
                                    {true, false, false});
        break;
      case kActRightJoinQ:
        for (int m = 0; m < nc; ++m)
          for (int a1 = 0; a1 < nq; ++a1)
            for (int a2 = 0; a2 < nq; ++a2)
              if (t.actr(m, t.joinq(a1, a2)) !=
                  t.joinc(t.actr(m, a1), t.actr(m, a2)))
                return make_witness(k, {"c", "a1", "a2"}, {m, a1, a2},
                                    {false, true, true});
        break;
      case kActRightJoinC:
        for (int m1 = 0; m1 < nc; ++m1)
          for (int m2 = 0; m2 < nc; ++m2)
            for (int a = 0; a < nq; ++a)
              if (t.actr(t.joinc(m1, m2), a) !=
                  t.joinc(t.actr(m1, a), t.actr(m2, a)))
                return make_witness(k, {"c1", "c2", "a"}, {m1, m2, a},
                                    {false, false, true});
        break;
      case kActZero:
        for (int m = 0; m < nc; ++m)
          if (t.actl(k.q.lat().bottom(), m) != k.c.lat().bottom() ||
              t.actr(m, k.q.lat().bottom()) != k.c.lat().bottom())
            return make_witness(k, {"c"}, {m}, {false});
        for (int a = 0; a < nq; ++a)
          if (t.actl(a, k.c.lat().bottom()) != k.c.lat().bottom() ||
              t.actr(k.c.lat().bottom(), a) != k.c.lat().bottom())
            return make_witness(k, {"a"}, {a}, {true});
        break;
      case kModuleAssocLeft:
        for (int a = 0; a < nq; ++a)
          for (int b = 0; b < nq; ++b)
            for (int m = 0; m < nc; ++m)
              if (t.actl(t.mulq(a, b), m) != t.actl(a, t.actl(b, m)))
                return make_witness(k, {"a", "b", "c"}, {a, b, m},
                                    {true, true, false});
        break;
      case kModuleAssocRight:
        for (int m = 0; m < nc; ++m)
          for (int a = 0; a < nq; ++a)
            for (int b = 0; b < nq; ++b)
              if (t.actr(m, t.mulq(a, b)) != t.actr(t.actr(m, a), b))
                return make_witness(k, {"c", "a", "b"}, {m, a, b},
                                    {false, true, true});
        break;
      case kBimoduleCompat:
        for (int a = 0; a < nq; ++a)
          for (int m = 0; m < nc; ++m)
            for (int b = 0; b < nq; ++b)
              if (t.actr(t.actl(a, m), b) != t.actl(a, t.actr(m, b)))
                return make_witness(k, {"a", "c", "b"}, {a, m, b},
                                    {true, false, true});
        break;
      case kPhiBimodule:
        for (int a = 0; a < nq; ++a)
          for (int m = 0; m < nc; ++m)
            if (t.phi[t.actl(a, m)] != t.mulq(a, t.phi[m]) ||
                t.phi[t.actr(m, a)] != t.mulq(t.phi[m], a))
              return make_witness(k, {"a", "c"}, {a, m}, {true, false});
        break;
      case kCouplingEq:
        for (int c1 = 0; c1 < nc; ++c1)
          for (int c2 = 0; c2 < nc; ++c2)
            if (t.actl(t.phi[c1], c2) != t.mulc(c1, c2) ||
                t.actr(c1, t.phi[c2]) != t.mulc(c1, c2))
              return make_witness(k, {"c1", "c2"}, {c1, c2}, {false, false});
        break;
      case kMixedAssocLeft:
        for (int a = 0; a < nq; ++a)
          for (int c1 = 0; c1 < nc; ++c1)
            for (int c2 = 0; c2 < nc; ++c2)
              if (t.actl(a, t.mulc(c1, c2)) != t.mulc(t.actl(a, c1), c2))
                return make_witness(k, {"a", "c1", "c2"}, {a, c1, c2},
                                    {true, false, false});
        break;
      case kMixedAssocRight:
        for (int c1 = 0; c1 < nc; ++c1)
          for (int c2 = 0; c2 < nc; ++c2)
            for (int a = 0; a < nq; ++a)
              if (t.actr(t.mulc(c1, c2), a) != t.mulc(c1, t.actr(c2, a)))
                return make_witness(k, {"c1", "c2", "a"}, {c1, c2, a},
                                    {false, false, true});
        break;
      case kMixedAssocMiddle:
        for (int c1 = 0; c1 < nc; ++c1)
          for (int a = 0; a < nq; ++a)
            for (int c2 = 0; c2 < nc; ++c2)
              if (t.mulc(t.actr(c1, a), c2) != t.mulc(c1, t.actl(a, c2)))
                return make_witness(k, {"c1", "a", "c2"}, {c1, a, c2},
                                    {false, true, false});
        break;
      case kPhiMultiplicative:
        for (int c1 = 0; c1 < nc; ++c1)
          for (int c2 = 0; c2 < nc; ++c2)
            if (t.phi[t.mulc(c1, c2)] != t.mulq(t.phi[c1], t.phi[c2]))
              return make_witness(k, {"c1", "c2"}, {c1, c2}, {false, false});
        break;
      default:
        break;
    }
    return LawResult{};
  };

  static constexpr const char* kLawNames[kLawCount] = {
      "act-left-join-q",  "act-left-join-c",   "act-right-join-q",
      "act-right-join-c", "act-zero",          "module-assoc-left",
      "module-assoc-right", "bimodule-compat", "phi-bimodule",
      "coupling-eq",      "mixed-assoc-left",  "mixed-assoc-right",
      "mixed-assoc-middle", "phi-multiplicative"};

  CoupleReport rep;
  for (int bit = 0; bit < kLawCount; ++bit) {
    if (bits & (1u << bit)) {
      LawResult r = rescan(static_cast<LawBit>(bit));
      r.law = kLawNames[bit];
      r.pass = false;
      rep.laws.push_back(std::move(r));
    } else {
      rep.laws.push_back({kLawNames[bit], true, {}, ""});
    }
  }
  return rep;
}

bool is_cyclic(const Couple& k, int d) {
  const FiniteLattice& cl = k.c.lat();
  for (int a = 0; a < k.nq(); ++a)
    for (int m = 0; m < k.nc(); ++m)
      if (cl.leq(k.actl(a, m), d) != cl.leq(k.actr(m, a), d)) return false;
  return true;
}

namespace {

// Mixed residuals into a fixed element n of C:
//   q_right[a] = a->n = join{c | c.a <= n}   (in C)
//   q_left[a]  = n<-a = join{c | a.c <= n}   (in C)
//   c_right[m] = m->n = join{a | a.m <= n}   (in Q)
//   c_left[m]  = n<-m = join{a | m.a <= n}   (in Q)
struct MixedResiduals {
  std::vector<int> q_right, q_left, c_right, c_left;
};

MixedResiduals mixed_residuals(const Couple& k, int n) {
  const FiniteLattice& cl = k.c.lat();
  const FiniteLattice& ql = k.q.lat();
  MixedResiduals r;
  r.q_right.assign(k.nq(), cl.bottom());
  r.q_left.assign(k.nq(), cl.bottom());
  r.c_right.assign(k.nc(), ql.bottom());
  r.c_left.assign(k.nc(), ql.bottom());
  for (int a = 0; a < k.nq(); ++a)
    for (int m = 0; m < k.nc(); ++m) {
      bool l = cl.leq(k.actl(a, m), n);
      bool rr = cl.leq(k.actr(m, a), n);
      if (rr) r.q_right[a] = cl.join(r.q_right[a], m);
      if (l) r.q_left[a] = cl.join(r.q_left[a], m);
      if (l) r.c_right[m] = ql.join(r.c_right[m], a);
      if (rr) r.c_left[m] = ql.join(r.c_left[m], a);
    }
  return r;
}

}  // namespace

bool is_dualizing(const Couple& k, int d) {
  MixedResiduals r = mixed_residuals(k, d);
  for (int a = 0; a < k.nq(); ++a) {
    if (r.c_left[r.q_right[a]] != a) return false;  // d<-(a->d) = a
    if (r.c_right[r.q_left[a]] != a) return false;  // (d<-a)->d = a
  }
  for (int m = 0; m < k.nc(); ++m) {
    if (r.q_left[r.c_right[m]] != m) return false;  // d<-(c->d) = c
    if (r.q_right[r.c_left[m]] != m) return false;  // (d<-c)->d = c
  }
  return true;
}

std::optional<int> find_cyclic_dualizing(const Couple& k) {
  for (int d = 0; d < k.nc(); ++d)
    if (is_cyclic(k, d) && is_dualizing(k, d)) return d;
  return std::nullopt;
}

bool is_girard(const Couple& k) {
  if (k.dualizer)
    return is_cyclic(k, *k.dualizer) && is_dualizing(k, *k.dualizer);
  return find_cyclic_dualizing(k).has_value();
}

bool is_strong_couple(const Couple& k) { return is_strong(k.phi); }

CouplePerp perp_tables(const Couple& k) {
  if (!k.dualizer)
    throw std::invalid_argument("couple has no designated dualizing element");
  MixedResiduals r = mixed_residuals(k, *k.dualizer);
  return CouplePerp{std::move(r.q_right), std::move(r.c_right)};
}

CoupleElement perp(const Couple& k, CoupleElement z) {
  CouplePerp pt = perp_tables(k);
  if (z.in_q) return {false, pt.q_to_c[z.idx]};
  return {true, pt.c_to_q[z.idx]};
}

CoupleElement par(const Couple& k, CoupleElement z1, CoupleElement z2) {
  CouplePerp pt = perp_tables(k);
  auto neg = [&](CoupleElement z) -> CoupleElement {
    if (z.in_q) return {false, pt.q_to_c[z.idx]};
    return {true, pt.c_to_q[z.idx]};
  };
  CoupleElement p2 = neg(z2), p1 = neg(z1);
  CoupleElement prod;
  if (p2.in_q && p1.in_q)
    prod = {true, k.q.mul(p2.idx, p1.idx)};
  else if (!p2.in_q && !p1.in_q)
    prod = {false, k.c.mul(p2.idx, p1.idx)};
  else if (p2.in_q)
    prod = {false, k.actl(p2.idx, p1.idx)};
  else
    prod = {false, k.actr(p2.idx, p1.idx)};
  return neg(prod);
}

bool check_self_adjoint(const Couple& k) {
  CouplePerp pt = perp_tables(k);
  std::vector<std::int32_t> adj = right_adjoint(k.phi);
  for (int m = 0; m < k.nc(); ++m)
    if (adj[pt.c_to_q[m]] != pt.q_to_c[k.phi(m)]) return false;
  return true;
}

SidedIsoReport check_strong_sided_iso(const Couple& k) {
  SidedIsoReport rep;
  if (!is_strong_couple(k)) {
    rep.reason = "coupling map is not strong";
    return rep;
  }
  if (!is_semiunital(k.c)) {
    rep.reason = "C is not semiunital";
    return rep;
  }
  if (!is_semiunital(k.q)) {
    rep.reason = "Q is not semiunital";
    return rep;
  }
  rep.applicable = true;
  SidedSets sc = sided_sets(k.c);
  SidedSets sq = sided_sets(k.q);
  int topc = k.c.lat().top();
  auto contains = [](const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  rep.pass =
      sc.right.size() == sq.right.size() && sc.left.size() == sq.left.size();
  for (int s : sc.right) {
    if (!rep.pass) break;
    int r = k.phi(s);
    rep.pass = contains(sq.right, r) && k.actl(r, topc) == s;
  }
  for (int r : sq.right) {
    if (!rep.pass) break;
    int s = k.actl(r, topc);
    rep.pass = contains(sc.right, s) && k.phi(s) == r;
  }
  for (int s : sc.left) {
    if (!rep.pass) break;
    int l = k.phi(s);
    rep.pass = contains(sq.left, l) && k.actr(topc, l) == s;
  }
  for (int l : sq.left) {
    if (!rep.pass) break;
    int s = k.actr(topc, l);
    rep.pass = contains(sc.left, s) && k.phi(s) == l;
  }
  return rep;
}

GirardImpliesReport check_girard_implies(const Couple& k) {
  GirardImpliesReport rep;
  CouplePerp pt = perp_tables(k);
  int d = *k.dualizer;
  rep.unit = pt.c_to_q[d];
  int e = rep.unit;
  rep.unit_neutral_q = true;
  for (int a = 0; a < k.nq() && rep.unit_neutral_q; ++a)
    rep.unit_neutral_q = k.q.mul(e, a) == a && k.q.mul(a, e) == a;
  rep.unit_neutral_c = true;
  for (int m = 0; m < k.nc() && rep.unit_neutral_c; ++m)
    rep.unit_neutral_c = k.actl(e, m) == m && k.actr(m, e) == m;
  rep.strong = is_strong_couple(k);
  if (rep.strong) {
    rep.c_von_neumann = is_von_neumann(k.c);
    rep.q_von_neumann = is_von_neumann(k.q);
    rep.sided_below_d_zero = true;
    SidedSets sc = sided_sets(k.c);
    const FiniteLattice& cl = k.c.lat();
    for (int r : sc.right)
      if (cl.leq(r, d) && r != cl.bottom()) rep.sided_below_d_zero = false;
    for (int l : sc.left)
      if (cl.leq(l, d) && l != cl.bottom()) rep.sided_below_d_zero = false;
  }
  return rep;
}

Couple identity_couple(const Quantale& q) {
  int n = q.size();
  std::vector<std::int32_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  Couple k{q,
           q,
           SupMap(q.lattice(), q.lattice(), std::move(id)),
           q.mul_table(),
           q.mul_table(),
           std::nullopt};
  k.dualizer = find_cyclic_dualizing(k);
  return k;
}

Couple zero_couple(const Quantale& q) {
  if (!q.unit())
    throw std::invalid_argument("zero couple needs a unital quantale");
  auto cop = std::make_shared<FiniteLattice>(op_dual(q.lat()));
  Quantale c = zero_quantale(cop);
  int n = q.size();
  std::vector<std::int32_t> phi(n, q.lat().bottom());
  std::vector<std::int32_t> actl(static_cast<size_t>(n) * n);
  std::vector<std::int32_t> actr(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int m = 0; m < n; ++m) {
      actl[static_cast<size_t>(a) * n + m] = residual_right(q, a, m);
      actr[static_cast<size_t>(m) * n + a] = residual_left(q, m, a);
    }
  return Couple{std::move(c),
                q,
                SupMap(cop, q.lattice(), std::move(phi)),
                std::move(actl),
                std::move(actr),
                *q.unit()};
}

Couple product_couple(const Couple& a, const Couple& b, const Budget& budget) {
  Quantale pc = product_quantale(a.c, b.c, budget);
  Quantale pq = product_quantale(a.q, b.q, budget);
  LatticePtr pcl = pc.lattice();
  LatticePtr pql = pq.lattice();
  int nc1 = a.nc(), nc2 = b.nc(), nq1 = a.nq(), nq2 = b.nq();
  int nc = nc1 * nc2, nq = nq1 * nq2;
  std::vector<std::int32_t> phi(nc);
  for (int c1 = 0; c1 < nc1; ++c1)
    for (int c2 = 0; c2 < nc2; ++c2)
      phi[c1 * nc2 + c2] = a.phi(c1) * nq2 + b.phi(c2);
  std::vector<std::int32_t> actl(static_cast<size_t>(nq) * nc);
  std::vector<std::int32_t> actr(static_cast<size_t>(nc) * nq);
  parallel_for(nq1, [&](int a1) {
    for (int a2 = 0; a2 < nq2; ++a2) {
      int aa = a1 * nq2 + a2;
      for (int m1 = 0; m1 < nc1; ++m1)
        for (int m2 = 0; m2 < nc2; ++m2) {
          int mm = m1 * nc2 + m2;
          actl[static_cast<size_t>(aa) * nc + mm] =
              a.actl(a1, m1) * nc2 + b.actl(a2, m2);
          actr[static_cast<size_t>(mm) * nq + aa] =
              a.actr(m1, a1) * nq2 + b.actr(m2, a2);
        }
    }
  }, 1);
  std::optional<int> d;
  if (a.dualizer && b.dualizer) d = *a.dualizer * nc2 + *b.dualizer;
  return Couple{std::move(pc),
                std::move(pq),
                SupMap(pcl, pql, std::move(phi)),
                std::move(actl),
                std::move(actr),
                d};
}

Couple product_couple(std::span<const Couple> couples, const Budget& budget) {
  if (couples.empty()) {
    auto one = std::make_shared<FiniteLattice>(unit_lattice());
    Quantale q = Quantale(one, {0});
    return Couple{q, q, SupMap(one, one, {0}), {0}, {0}, 0};
  }
  Couple acc = couples[0];
  for (size_t i = 1; i < couples.size(); ++i)
    acc = product_couple(acc, couples[i], budget);
  return acc;
}

CsCouple cs_couple(LatticePtr s, const Budget& budget) {
  EndoQuantale endo = build_endo_quantale(s, budget);
  auto sop = std::make_shared<FiniteLattice>(op_dual(*s));
  TensorLattice tensor = tensor_lattice(s, sop, budget);
  const FiniteLattice& cl = *tensor.lattice;
  int nc = cl.size();
  int nq = endo.q.size();
  int ns = s->size();
  int bits = ns * ns;

  // Member pairs per bi-ideal; the zero pairs only ever contribute the
  // bottom generator, so they are skipped.
  std::vector<std::vector<std::pair<int, int>>> members(nc);
  for (int i = 0; i < nc; ++i)
    for (int x = 0; x < ns; ++x) {
      if (x == s->bottom()) continue;
      for (int y = 0; y < ns; ++y) {
        if (y == sop->bottom()) continue;
        if (tensor.elems[i].test(tensor.pair_bit(x, y)))
          members[i].push_back({x, y});
      }
    }

  // Generator multiplication (x(x)y')(u(x)v') = x(x)v' unless u <= y,
  // extended to joins of generators.
  std::vector<std::int32_t> mul(static_cast<size_t>(nc) * nc);
  parallel_for(nc, [&](int i) {
    for (int j = 0; j < nc; ++j) {
      PairSet prod(bits);
      for (auto [x, y] : members[i])
        for (auto [u, v] : members[j])
          if (!s->leq(u, y)) prod.set(tensor.pair_bit(x, v));
      int idx = tensor.index_of(tensor.closure(std::move(prod)));
      if (idx < 0)
        throw std::logic_error("tensor product escaped enumeration");
      mul[static_cast<size_t>(i) * nc + j] = idx;
    }
  }, 1);
  Quantale c(tensor.lattice, std::move(mul));

  // phi(x(x)y') = rho_x lambda_y: the map sending u to x when u is off the
  // downset of y, joined over the member pairs.
  std::vector<std::int32_t> phi(nc);
  std::vector<std::int32_t> map_table(ns);
  for (int i = 0; i < nc; ++i) {
    for (int u = 0; u < ns; ++u) {
      int acc = s->bottom();
      if (u != s->bottom())
        for (auto [x, y] : members[i])
          if (!s->leq(u, y)) acc = s->join(acc, x);
      map_table[u] = acc;
    }
    int idx = endo.index_of(map_table);
    if (idx < 0) throw std::logic_error("phi image escaped the endo quantale");
    phi[i] = idx;
  }

  // alpha.(x(x)y') = alpha(x)(x)y';  (x(x)y').alpha = x(x)alpha#(y)'.
  std::vector<std::vector<std::int32_t>> adj(nq);
  for (int a = 0; a < nq; ++a) adj[a] = right_adjoint(endo.elems[a]);
  std::vector<std::int32_t> actl(static_cast<size_t>(nq) * nc);
  std::vector<std::int32_t> actr(static_cast<size_t>(nc) * nq);
  parallel_for(nq, [&](int a) {
    const SupMap& alpha = endo.elems[a];
    for (int i = 0; i < nc; ++i) {
      PairSet left(bits), right(bits);
      for (auto [x, y] : members[i]) {
        left.set(tensor.pair_bit(alpha(x), y));
        right.set(tensor.pair_bit(x, adj[a][y]));
      }
      int li = tensor.index_of(tensor.closure(std::move(left)));
      int ri = tensor.index_of(tensor.closure(std::move(right)));
      if (li < 0 || ri < 0)
        throw std::logic_error("action image escaped enumeration");
      actl[static_cast<size_t>(a) * nc + i] = li;
      actr[static_cast<size_t>(i) * nq + a] = ri;
    }
  }, 1);

  PairSet dset(bits);
  for (int x = 0; x < ns; ++x) dset.set(tensor.pair_bit(x, x));
  int d = tensor.index_of(tensor.closure(std::move(dset)));
  if (d < 0) throw std::logic_error("dualizer escaped enumeration");

  Couple k{std::move(c),
           endo.q,
           SupMap(tensor.lattice, endo.q.lattice(), std::move(phi)),
           std::move(actl),
           std::move(actr),
           d};
  return CsCouple{std::move(k), std::move(tensor), std::move(endo)};
}

Couple sub_ideal_couple(int n, int k) {
  if (k < 1 || n % k != 0)
    throw std::invalid_argument("k must divide n for the subgroup couple");
  Quantale q = sub_ring_quantale(n);
  std::vector<int> qdivs;  // ascending, matching sub_ring_quantale order
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) qdivs.push_back(d);
  std::vector<int> cdivs;  // divisors of n that are multiples of k
  for (int d : qdivs)
    if (d % k == 0) cdivs.push_back(d);
  int ncd = static_cast<int>(cdivs.size());
  auto q_index = [&](int d) {
    for (size_t i = 0; i < qdivs.size(); ++i)
      if (qdivs[i] == d) return static_cast<int>(i);
    throw std::logic_error("divisor lookup failed");
  };
  auto c_index = [&](int d) {
    for (int i = 0; i < ncd; ++i)
      if (cdivs[i] == d) return i;
    throw std::logic_error("divisor lookup failed");
  };

  std::vector<std::uint8_t> leq(static_cast<size_t>(ncd) * ncd);
  for (int i = 0; i < ncd; ++i)
    for (int j = 0; j < ncd; ++j)
      leq[i * ncd + j] = (cdivs[i] % cdivs[j] == 0) ? 1 : 0;
  std::vector<std::string> labels;
  for (int d : cdivs) labels.push_back(q.lat().label(q_index(d)));
  auto cl = std::make_shared<FiniteLattice>(
      FiniteLattice::from_leq(ncd, std::move(leq), std::move(labels)));

  std::vector<std::int32_t> mul(static_cast<size_t>(ncd) * ncd);
  for (int i = 0; i < ncd; ++i)
    for (int j = 0; j < ncd; ++j)
      mul[i * ncd + j] = c_index(std::gcd(cdivs[i] * cdivs[j], n));
  Quantale c(cl, std::move(mul));

  std::vector<std::int32_t> phi(ncd);
  for (int i = 0; i < ncd; ++i) phi[i] = q_index(cdivs[i]);
  int nq = q.size();
  LatticePtr ql = q.lattice();
  std::vector<std::int32_t> actl(static_cast<size_t>(nq) * ncd);
  std::vector<std::int32_t> actr(static_cast<size_t>(ncd) * nq);
  for (int a = 0; a < nq; ++a)
    for (int m = 0; m < ncd; ++m) {
      int prod = c_index(std::gcd(qdivs[a] * cdivs[m], n));
      actl[static_cast<size_t>(a) * ncd + m] = prod;
      actr[static_cast<size_t>(m) * nq + a] = prod;
    }
  Couple kk{std::move(c),
            std::move(q),
            SupMap(cl, std::move(ql), std::move(phi)),
            std::move(actl),
            std::move(actr),
            std::nullopt};
  kk.dualizer = find_cyclic_dualizing(kk);
  return kk;
}

}  // namespace girard
