#include "girard/endo.hpp"

#include <stdexcept>
#include <string>

namespace girard {

namespace {

std::string table_key(const std::vector<std::int32_t>& t) {
  std::string key;
  key.reserve(t.size() * 3);
  for (int x : t) {
    key += std::to_string(x);
    key += ',';
  }
  return key;
}

}  // namespace

int EndoQuantale::index_of(const std::vector<std::int32_t>& table) const {
  auto it = lookup_.find(table_key(table));
  return it == lookup_.end() ? -1 : it->second;
}

EndoQuantale build_endo_quantale(LatticePtr s, const Budget& budget) {
  require_budget(s->size() <= budget.endo_base_max,
                 "|S| = " + std::to_string(s->size()) +
                     " exceeds the endomorphism quantale cap");
  std::vector<SupMap> maps = enumerate_sup_maps(s, s, budget);
  int n = static_cast<int>(maps.size());
  int ns = s->size();

  // Pointwise order; joins are pointwise, meets come from the GLB scan.
  std::vector<std::uint8_t> leq(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool le = true;
      for (int x = 0; x < ns && le; ++x)
        le = s->leq(maps[i](x), maps[j](x));
      leq[i * n + j] = le ? 1 : 0;
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back("q" + std::to_string(i));
  auto lattice = std::make_shared<FiniteLattice>(
      FiniteLattice::from_leq(n, std::move(leq), std::move(labels)));

  std::unordered_map<std::string, int> lookup;
  lookup.reserve(n * 2);
  for (int i = 0; i < n; ++i) lookup.emplace(table_key(maps[i].table), i);

  std::vector<std::int32_t> mul(static_cast<size_t>(n) * n);
  std::vector<std::int32_t> comp(ns);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int x = 0; x < ns; ++x) comp[x] = maps[i](maps[j](x));
      auto it = lookup.find(table_key(comp));
      if (it == lookup.end())
        throw std::logic_error("composite of sup-maps not in enumeration");
      mul[i * n + j] = it->second;
    }

  EndoQuantale e(s, std::move(maps),
                 Quantale(std::move(lattice), std::move(mul)));
  e.lookup_ = std::move(lookup);

  e.rho.resize(ns);
  e.lam.resize(ns);
  std::vector<std::int32_t> t(ns);
  for (int x = 0; x < ns; ++x) {
    for (int y = 0; y < ns; ++y) t[y] = (y == s->bottom()) ? s->bottom() : x;
    e.rho[x] = e.index_of(t);
    for (int y = 0; y < ns; ++y)
      t[y] = s->leq(y, x) ? s->bottom() : s->top();
    e.lam[x] = e.index_of(t);
    if (e.rho[x] < 0 || e.lam[x] < 0)
      throw std::logic_error("sided map missing from enumeration");
  }
  return e;
}

bool check_decomposition(const EndoQuantale& e) {
  const FiniteLattice& ql = e.q.lat();
  int ns = e.base->size();
  for (int i = 0; i < e.q.size(); ++i) {
    const SupMap& alpha = e.elems[i];
    std::vector<std::int32_t> adj = right_adjoint(alpha);
    int via_image = ql.top();
    int via_adjoint = ql.top();
    for (int x = 0; x < ns; ++x) {
      via_image = ql.meet(via_image, ql.join(e.rho[alpha(x)], e.lam[x]));
      via_adjoint = ql.meet(via_adjoint, ql.join(e.rho[x], e.lam[adj[x]]));
    }
    if (via_image != i || via_adjoint != i) return false;
  }
  return true;
}

}  // namespace girard
