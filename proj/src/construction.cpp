#include "girard/construction.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "girard/parallel.hpp"

namespace girard {

int GirardQuantale::index_of(int a, int c) const {
  // pairs are sorted by (a, c); binary search keeps lookups cheap.
  auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(a, c));
  if (it == pairs.end() || *it != std::make_pair(a, c)) return -1;
  return static_cast<int>(it - pairs.begin());
}

GirardQuantale build_G(const Couple& k, const Budget& budget) {
  if (!k.dualizer || !is_girard(k))
    throw std::invalid_argument("G is only defined for Girard couples");
  CouplePerp pt = perp_tables(k);
  int d = *k.dualizer;
  int e = pt.c_to_q[d];

  const FiniteLattice& cl = k.c.lat();
  const FiniteLattice& ql = k.q.lat();
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < k.nq(); ++a)
    for (int c = 0; c < k.nc(); ++c)
      if (ql.leq(k.phi(c), a)) pairs.push_back({a, c});
  int n = static_cast<int>(pairs.size());
  auto index_of = [&pairs](int a, int c) {
    auto it =
        std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(a, c));
    if (it == pairs.end() || *it != std::make_pair(a, c)) return -1;
    return static_cast<int>(it - pairs.begin());
  };

  std::vector<std::uint8_t> leq(static_cast<size_t>(n) * n);
  std::vector<std::int32_t> join(static_cast<size_t>(n) * n);
  std::vector<std::int32_t> meet(static_cast<size_t>(n) * n);
  parallel_for(n, [&](int i) {
    auto [a1, c1] = pairs[i];
    for (int j = 0; j < n; ++j) {
      auto [a2, c2] = pairs[j];
      leq[static_cast<size_t>(i) * n + j] =
          (ql.leq(a1, a2) && cl.leq(c1, c2)) ? 1 : 0;
      int jj = index_of(ql.join(a1, a2), cl.join(c1, c2));
      int mm = index_of(ql.meet(a1, a2), cl.meet(c1, c2));
      if (jj < 0 || mm < 0)
        throw std::logic_error("G is not closed under joins and meets");
      join[static_cast<size_t>(i) * n + j] = jj;
      meet[static_cast<size_t>(i) * n + j] = mm;
    }
  });
  int bottom = index_of(ql.bottom(), cl.bottom());
  int top = index_of(ql.top(), cl.top());
  std::vector<std::string> labels;
  labels.reserve(n);
  for (auto [a, c] : pairs)
    labels.push_back("(" + ql.label(a) + "." + cl.label(c) + ")");
  auto lattice = std::make_shared<FiniteLattice>(FiniteLattice::from_tables(
      n, std::move(leq), std::move(join), std::move(meet), bottom, top,
      std::move(labels)));

  std::vector<std::int32_t> mul(static_cast<size_t>(n) * n);
  parallel_for(n, [&](int i) {
    auto [a1, c1] = pairs[i];
    for (int j = 0; j < n; ++j) {
      auto [a2, c2] = pairs[j];
      int a = k.q.mul(a1, a2);
      int c = cl.join(k.actl(a1, c2), k.actr(c1, a2));
      int idx = index_of(a, c);
      if (idx < 0) throw std::logic_error("G product left the carrier");
      mul[static_cast<size_t>(i) * n + j] = idx;
    }
  });

  GirardQuantale g{(n <= budget.full_validation_max)
                       ? Quantale(lattice, std::move(mul))
                       : Quantale::trusted(lattice, std::move(mul)),
                   k,
                   std::move(pairs),
                   -1,
                   -1,
                   {},
                   {},
                   {}};
  g.unit = g.index_of(e, cl.bottom());
  g.dualizer = g.index_of(ql.top(), d);
  if (g.unit < 0 || g.dualizer < 0)
    throw std::logic_error("unit or dualizer missing from G");
  for (int i = 0; i < n; ++i)
    if (g.g.mul(g.unit, i) != i || g.g.mul(i, g.unit) != i)
      throw std::logic_error("(e, 0) is not neutral in G");
  if (!is_cyclic_element(g.g, g.dualizer) ||
      !is_dualizing_element(g.g, g.dualizer))
    throw std::logic_error("(1, d) is not cyclic dualizing in G");

  // Negation comes from the residual into (1, d) and must match the
  // componentwise pairing (a, c) -> (c^, a^).
  g.perp.resize(n);
  for (int i = 0; i < n; ++i) {
    g.perp[i] = residual_right(g.g, i, g.dualizer);
    auto [a, c] = g.pairs[i];
    if (g.perp[i] != g.index_of(pt.c_to_q[c], pt.q_to_c[a]))
      throw std::logic_error("negation on G is not the couple pairing");
  }

  g.gamma.resize(k.nc());
  for (int c = 0; c < k.nc(); ++c) {
    g.gamma[c] = g.index_of(k.phi(c), c);
    if (g.gamma[c] < 0) throw std::logic_error("gamma image missing from G");
  }
  g.alpha.resize(n);
  for (int i = 0; i < n; ++i) g.alpha[i] = g.pairs[i].first;
  for (int c = 0; c < k.nc(); ++c)
    if (g.alpha[g.gamma[c]] != k.phi(c))
      throw std::logic_error("phi does not factor as alpha o gamma");
  return g;
}

bool check_restriction_of_scalars(const Couple& k, const GirardQuantale& g) {
  int n = g.g.size();
  int nc = k.nc();
  std::vector<std::int32_t> actl(static_cast<size_t>(n) * nc);
  std::vector<std::int32_t> actr(static_cast<size_t>(nc) * n);
  for (int i = 0; i < n; ++i)
    for (int m = 0; m < nc; ++m) {
      actl[static_cast<size_t>(i) * nc + m] = k.actl(g.alpha[i], m);
      actr[static_cast<size_t>(m) * n + i] = k.actr(m, g.alpha[i]);
    }
  std::vector<std::int32_t> gamma_table(g.gamma.begin(), g.gamma.end());
  Couple restricted{k.c,
                    g.g,
                    SupMap(k.c.lattice(), g.g.lattice(),
                           std::move(gamma_table)),
                    std::move(actl),
                    std::move(actr),
                    k.dualizer};
  return validate_couple(restricted).ok();
}

namespace {

bool mutually_inverse(const std::vector<int>& from, const std::vector<int>& to,
                      const std::vector<int>& fwd,
                      const std::vector<int>& bwd) {
  // fwd maps each element of `from` to a member of `to`; bwd the reverse.
  for (size_t i = 0; i < from.size(); ++i) {
    int x = from[i];
    int y = fwd[x];
    if (std::find(to.begin(), to.end(), y) == to.end()) return false;
    if (bwd[y] != x) return false;
  }
  for (size_t i = 0; i < to.size(); ++i) {
    int y = to[i];
    int x = bwd[y];
    if (std::find(from.begin(), from.end(), x) == from.end()) return false;
    if (fwd[x] != y) return false;
  }
  return true;
}

}  // namespace

SidedChainReport check_sided_chain(const Couple& k, const GirardQuantale& g) {
  SidedChainReport rep;
  if (!is_strong_couple(k)) {
    rep.reason = "coupling map is not strong";
    return rep;
  }
  if (!is_semiunital(k.c) || !is_semiunital(k.q) || !is_semiunital(g.g)) {
    rep.reason = "components are not all semiunital";
    return rep;
  }
  rep.applicable = true;

  SidedSets sc = sided_sets(k.c);
  SidedSets sq = sided_sets(k.q);
  SidedSets sg = sided_sets(g.g);
  int topc = k.c.lat().top();
  int nc = k.nc(), nq = k.nq(), ng = g.g.size();

  // C <-> Q along phi and -.1_C.
  std::vector<int> cq(nc), qc(nq);
  for (int s = 0; s < nc; ++s) cq[s] = k.phi(s);
  for (int r = 0; r < nq; ++r) qc[r] = k.actl(r, topc);
  // C <-> G along gamma and the restricted action.
  std::vector<int> cg(g.gamma.begin(), g.gamma.end());
  std::vector<int> gc(ng);
  for (int i = 0; i < ng; ++i) gc[i] = k.actl(g.alpha[i], topc);

  rep.pass = mutually_inverse(sc.right, sq.right, cq, qc) &&
             mutually_inverse(sc.right, sg.right, cg, gc);

  // Left-sided chain uses the other action.
  std::vector<int> cq_l(nc), qc_l(nq), gc_l(ng);
  for (int s = 0; s < nc; ++s) cq_l[s] = k.phi(s);
  for (int l = 0; l < nq; ++l) qc_l[l] = k.actr(topc, l);
  for (int i = 0; i < ng; ++i) gc_l[i] = k.actr(topc, g.alpha[i]);
  rep.pass = rep.pass && mutually_inverse(sc.left, sq.left, cq_l, qc_l) &&
             mutually_inverse(sc.left, sg.left, cg, gc_l);

  // Order preservation along the chain witnesses.
  const FiniteLattice& cl = k.c.lat();
  const FiniteLattice& ql = k.q.lat();
  const FiniteLattice& gl = g.g.lat();
  for (int s1 : sc.right)
    for (int s2 : sc.right) {
      if (cl.leq(s1, s2) != ql.leq(cq[s1], cq[s2])) rep.pass = false;
      if (cl.leq(s1, s2) != gl.leq(cg[s1], cg[s2])) rep.pass = false;
    }
  for (int l1 : sc.left)
    for (int l2 : sc.left) {
      if (cl.leq(l1, l2) != ql.leq(cq_l[l1], cq_l[l2])) rep.pass = false;
      if (cl.leq(l1, l2) != gl.leq(cg[l1], cg[l2])) rep.pass = false;
    }
  return rep;
}

bool check_convolution(const GirardQuantale& g) {
  const Couple& k = g.source;
  const FiniteLattice& cl = k.c.lat();
  const FiniteLattice& ql = k.q.lat();
  int n = g.g.size();
  for (int i = 0; i < n; ++i) {
    auto [a1, c1] = g.pairs[i];
    for (int j = 0; j < n; ++j) {
      auto [a2, c2] = g.pairs[j];
      // Slot 0 (the C component): j /\ k = 0, three products in C.
      int slot0 = cl.join(k.c.mul(c1, c2),
                          cl.join(k.actl(a1, c2), k.actr(c1, a2)));
      // Slot 1 (the Q component): all four products, C-terms along phi.
      int slot1 = k.q.mul(a1, a2);
      slot1 = ql.join(slot1, k.phi(k.c.mul(c1, c2)));
      slot1 = ql.join(slot1, k.phi(k.actl(a1, c2)));
      slot1 = ql.join(slot1, k.phi(k.actr(c1, a2)));
      int prod = g.g.mul(i, j);
      if (g.pairs[prod] != std::make_pair(slot1, slot0)) return false;
    }
  }
  return true;
}

GirardQuantale rosenthal(const Quantale& q, const Budget& budget) {
  GirardQuantale g = build_G(zero_couple(q), budget);
  size_t expect = static_cast<size_t>(q.size()) * q.size();
  if (g.pairs.size() != expect)
    throw std::logic_error("zero-couple G must be the full product Q x Q^op");
  // With C = Q^op sharing indices, the negation is the pair swap.
  for (int i = 0; i < g.g.size(); ++i) {
    auto [a, c] = g.pairs[i];
    if (g.pairs[g.perp[i]] != std::make_pair(c, a))
      throw std::logic_error("negation on Q x Q^op is not the pair swap");
  }
  return g;
}

GofSResult G_of_S(LatticePtr s, const Budget& budget) {
  CsCouple built = cs_couple(s, budget);
  GirardQuantale gq = build_G(built.couple, budget);
  GofSResult out{std::move(gq), std::move(built), false, false};
  const GirardQuantale& g = out.g;
  const Couple& k = out.cs.couple;
  SidedSets sg = sided_sets(g.g);
  const FiniteLattice& gl = g.g.lat();
  int ns = s->size();
  int topc = k.c.lat().top();

  // x -> (rho_x, rho_x . 1_C) should enumerate R(G) and preserve order;
  // x -> (lambda_x, 1_C . lambda_x) should enumerate L(G) reversing it.
  std::vector<int> right_img(ns), left_img(ns);
  bool right_ok = static_cast<int>(sg.right.size()) == ns;
  bool left_ok = static_cast<int>(sg.left.size()) == ns;
  for (int x = 0; x < ns && (right_ok || left_ok); ++x) {
    int r = out.cs.endo.rho[x];
    int l = out.cs.endo.lam[x];
    right_img[x] = g.index_of(r, k.actl(r, topc));
    left_img[x] = g.index_of(l, k.actr(topc, l));
    if (right_img[x] < 0) right_ok = false;
    if (left_img[x] < 0) left_ok = false;
  }
  if (right_ok)
    for (int x = 0; x < ns; ++x) {
      if (std::find(sg.right.begin(), sg.right.end(), right_img[x]) ==
          sg.right.end())
        right_ok = false;
      for (int y = 0; y < ns; ++y)
        if (s->leq(x, y) != gl.leq(right_img[x], right_img[y]))
          right_ok = false;
    }
  if (left_ok)
    for (int x = 0; x < ns; ++x) {
      if (std::find(sg.left.begin(), sg.left.end(), left_img[x]) ==
          sg.left.end())
        left_ok = false;
      for (int y = 0; y < ns; ++y)
        if (s->leq(x, y) != gl.leq(left_img[y], left_img[x])) left_ok = false;
    }
  // Distinctness follows from the order checks (an order-embedding of a
  // poset is injective); surjectivity from the size comparison.
  out.right_iso = right_ok;
  out.left_iso = left_ok;
  return out;
}

}  // namespace girard
