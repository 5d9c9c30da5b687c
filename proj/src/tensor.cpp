#include "girard/tensor.hpp"

#include <stdexcept>

namespace girard {

int TensorLattice::index_of(const PairSet& p) const {
  auto it = lookup_.find(p);
  return it == lookup_.end() ? -1 : it->second;
}

PairSet TensorLattice::closure(PairSet m) const {
  int ns = s->size(), nt = t->size();
  // Zero pairs belong to every bi-ideal (empty joins in each slot).
  for (int y = 0; y < nt; ++y) m.set(pair_bit(s->bottom(), y));
  for (int x = 0; x < ns; ++x) m.set(pair_bit(x, t->bottom()));
  bool changed = true;
  while (changed) {
    changed = false;
    // Down-closure in both slots.
    for (int x = 0; x < ns; ++x)
      for (int y = 0; y < nt; ++y) {
        if (!m.test(pair_bit(x, y))) continue;
        for (int u = 0; u < ns; ++u) {
          if (!s->leq(u, x)) continue;
          for (int v = 0; v < nt; ++v)
            if (t->leq(v, y) && !m.test(pair_bit(u, v))) {
              m.set(pair_bit(u, v));
              changed = true;
            }
        }
      }
    // Binary join-closure in each slot.
    for (int y = 0; y < nt; ++y)
      for (int x1 = 0; x1 < ns; ++x1) {
        if (!m.test(pair_bit(x1, y))) continue;
        for (int x2 = x1 + 1; x2 < ns; ++x2) {
          if (!m.test(pair_bit(x2, y))) continue;
          int j = s->join(x1, x2);
          if (!m.test(pair_bit(j, y))) {
            m.set(pair_bit(j, y));
            changed = true;
          }
        }
      }
    for (int x = 0; x < ns; ++x)
      for (int y1 = 0; y1 < nt; ++y1) {
        if (!m.test(pair_bit(x, y1))) continue;
        for (int y2 = y1 + 1; y2 < nt; ++y2) {
          if (!m.test(pair_bit(x, y2))) continue;
          int j = t->join(y1, y2);
          if (!m.test(pair_bit(x, j))) {
            m.set(pair_bit(x, j));
            changed = true;
          }
        }
      }
  }
  return m;
}

TensorLattice tensor_lattice(LatticePtr s, LatticePtr t,
                             const Budget& budget) {
  int ns = s->size(), nt = t->size();
  require_budget(ns * nt <= budget.tensor_pairs,
                 "|S|*|T| = " + std::to_string(ns * nt) + " tensor pairs");
  TensorLattice tl;
  tl.s = s;
  tl.t = t;
  int bits = ns * nt;

  tl.gen_.assign(bits, -1);
  std::vector<PairSet> elems;
  auto intern = [&](const PairSet& p) {
    auto it = tl.lookup_.find(p);
    if (it != tl.lookup_.end()) return it->second;
    int idx = static_cast<int>(elems.size());
    elems.push_back(p);
    tl.lookup_.emplace(p, idx);
    return idx;
  };

  // Generators first, in (x, y)-lexicographic order.
  for (int x = 0; x < ns; ++x)
    for (int y = 0; y < nt; ++y) {
      PairSet g(bits);
      g.set(tl.pair_bit(x, y));
      tl.gen_[tl.pair_bit(x, y)] = intern(tl.closure(std::move(g)));
    }

  // Close under binary joins until stable; every bi-ideal is a join of
  // generators, so this enumerates the whole tensor lattice.
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      PairSet u = elems[i].united(elems[j]);
      if (tl.lookup_.count(u)) continue;
      intern(tl.closure(std::move(u)));
    }

  int n = static_cast<int>(elems.size());
  std::vector<std::uint8_t> leq(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      leq[i * n + j] = elems[i].subset_of(elems[j]) ? 1 : 0;
  std::vector<std::int32_t> join(static_cast<size_t>(n) * n);
  std::vector<std::int32_t> meet(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      PairSet u = elems[i].united(elems[j]);
      auto it = tl.lookup_.find(u);
      int jj = it != tl.lookup_.end() ? it->second
                                      : tl.index_of(tl.closure(std::move(u)));
      if (jj < 0) throw std::logic_error("tensor join escaped enumeration");
      int mm = tl.index_of(elems[i].intersected(elems[j]));
      if (mm < 0) throw std::logic_error("tensor meet escaped enumeration");
      join[i * n + j] = join[j * n + i] = jj;
      meet[i * n + j] = meet[j * n + i] = mm;
    }
  int bottom = tl.gen_[tl.pair_bit(s->bottom(), t->bottom())];
  PairSet all(bits);
  for (int b = 0; b < bits; ++b) all.set(b);
  int top = tl.index_of(all);
  if (top < 0) throw std::logic_error("full pair set is not a bi-ideal");
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back("t" + std::to_string(i));
  tl.lattice = std::make_shared<FiniteLattice>(FiniteLattice::from_tables(
      n, std::move(leq), std::move(join), std::move(meet), bottom, top,
      std::move(labels)));
  tl.elems = std::move(elems);
  return tl;
}

TensorEndoDuality tensor_dual_to_endo(const TensorLattice& c,
                                      const EndoQuantale& e) {
  const FiniteLattice& cl = *c.lattice;
  const FiniteLattice& ql = e.q.lat();
  int ns = e.base->size();
  if (c.s->size() != ns || c.t->size() != ns)
    throw std::invalid_argument("tensor factors do not match the endo base");

  // Partner of the generator x(x)y': lambda_x v rho_y (pointwise join).
  std::vector<int> partner(static_cast<size_t>(ns) * ns);
  for (int x = 0; x < ns; ++x)
    for (int y = 0; y < ns; ++y)
      partner[x * ns + y] = ql.join(e.lam[x], e.rho[y]);

  TensorEndoDuality d;
  d.to_endo.assign(cl.size(), ql.top());
  for (int i = 0; i < cl.size(); ++i) {
    int acc = ql.top();
    for (int x = 0; x < ns; ++x)
      for (int y = 0; y < ns; ++y)
        if (c.elems[i].test(c.pair_bit(x, y)))
          acc = ql.meet(acc, partner[x * ns + y]);
    d.to_endo[i] = acc;
  }
  d.from_endo.assign(ql.size(), cl.bottom());
  for (int a = 0; a < ql.size(); ++a) {
    PairSet m(ns * ns);
    for (int x = 0; x < ns; ++x)
      for (int y = 0; y < ns; ++y)
        if (ql.leq(a, partner[x * ns + y])) m.set(c.pair_bit(x, y));
    int idx = c.index_of(c.closure(std::move(m)));
    if (idx < 0) throw std::logic_error("duality image escaped enumeration");
    d.from_endo[a] = idx;
  }

  if (cl.size() != ql.size())
    throw std::logic_error("tensor/endo duality: size mismatch");
  for (int i = 0; i < cl.size(); ++i)
    if (d.from_endo[d.to_endo[i]] != i)
      throw std::logic_error("tensor/endo duality is not a bijection");
  for (int i = 0; i < cl.size(); ++i)
    for (int j = 0; j < cl.size(); ++j)
      if (cl.leq(i, j) != ql.leq(d.to_endo[j], d.to_endo[i]))
        throw std::logic_error("tensor/endo duality does not reverse order");
  return d;
}

}  // namespace girard
