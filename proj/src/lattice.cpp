#include "girard/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace girard {

namespace {

// LUB/GLB scan over an order relation. Returns -1 when no bound exists.
int least_upper_bound(int n, const std::vector<std::uint8_t>& leq, int a,
                      int b) {
  int best = -1;
  for (int u = 0; u < n; ++u) {
    if (!leq[a * n + u] || !leq[b * n + u]) continue;
    if (best == -1 || leq[u * n + best]) best = u;
  }
  if (best == -1) return -1;
  // best must lie below every upper bound, otherwise no LUB exists.
  for (int u = 0; u < n; ++u) {
    if (leq[a * n + u] && leq[b * n + u] && !leq[best * n + u]) return -1;
  }
  return best;
}

int greatest_lower_bound(int n, const std::vector<std::uint8_t>& leq, int a,
                         int b) {
  int best = -1;
  for (int u = 0; u < n; ++u) {
    if (!leq[u * n + a] || !leq[u * n + b]) continue;
    if (best == -1 || leq[best * n + u]) best = u;
  }
  if (best == -1) return -1;
  for (int u = 0; u < n; ++u) {
    if (leq[u * n + a] && leq[u * n + b] && !leq[u * n + best]) return -1;
  }
  return best;
}

}  // namespace

int FiniteLattice::index_of(std::string_view name) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == name) return i;
  return -1;
}

int FiniteLattice::join_all(std::span<const int> xs) const {
  int acc = bottom_;
  for (int x : xs) acc = join(acc, x);
  return acc;
}

int FiniteLattice::meet_all(std::span<const int> xs) const {
  int acc = top_;
  for (int x : xs) acc = meet(acc, x);
  return acc;
}

std::vector<int> FiniteLattice::join_irreducibles() const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j) {
    if (j == bottom_) continue;
    int acc = bottom_;
    for (int x = 0; x < n_; ++x)
      if (x != j && leq(x, j)) acc = join(acc, x);
    if (acc != j) out.push_back(j);
  }
  return out;
}

bool FiniteLattice::operator==(const FiniteLattice& other) const {
  return n_ == other.n_ && leq_ == other.leq_ && join_ == other.join_ &&
         meet_ == other.meet_ && bottom_ == other.bottom_ &&
         top_ == other.top_ && labels_ == other.labels_;
}

FiniteLattice FiniteLattice::from_covers(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  int n = static_cast<int>(elements.size());
  if (n == 0) throw std::invalid_argument("lattice needs at least one element");
  {
    std::set<std::string> seen;
    for (const auto& e : elements)
      if (!seen.insert(e).second)
        throw std::invalid_argument("duplicate element name '" + e + "'");
  }
  auto index = [&](const std::string& name) {
    for (int i = 0; i < n; ++i)
      if (elements[i] == name) return i;
    throw std::invalid_argument("unknown element '" + name + "' in covers");
  };

  std::vector<std::uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (const auto& [lo, hi] : covers) leq[index(lo) * n + index(hi)] = 1;
  // Reflexive-transitive closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (int j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq[i * n + j] && leq[j * n + i])
        throw std::invalid_argument("cover relation has a cycle through '" +
                                    elements[i] + "' and '" + elements[j] +
                                    "'");
  return from_leq(n, std::move(leq), elements);
}

FiniteLattice FiniteLattice::from_leq(int n, std::vector<std::uint8_t> leq,
                                      std::vector<std::string> labels) {
  FiniteLattice l;
  l.n_ = n;
  l.labels_ = std::move(labels);
  if (static_cast<int>(l.labels_.size()) != n)
    throw std::invalid_argument("label count mismatch");
  l.join_.assign(static_cast<size_t>(n) * n, 0);
  l.meet_.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      int j = least_upper_bound(n, leq, a, b);
      if (j == -1)
        throw std::invalid_argument("elements '" + l.labels_[a] + "' and '" +
                                    l.labels_[b] + "' have no join");
      int m = greatest_lower_bound(n, leq, a, b);
      if (m == -1)
        throw std::invalid_argument("elements '" + l.labels_[a] + "' and '" +
                                    l.labels_[b] + "' have no meet");
      l.join_[a * n + b] = l.join_[b * n + a] = j;
      l.meet_[a * n + b] = l.meet_[b * n + a] = m;
    }
  }
  l.leq_ = std::move(leq);
  int bot = 0, top = 0;
  for (int i = 1; i < n; ++i) {
    bot = l.meet(bot, i);
    top = l.join(top, i);
  }
  l.bottom_ = bot;
  l.top_ = top;
  return l;
}

FiniteLattice FiniteLattice::from_tables(int n, std::vector<std::uint8_t> leq,
                                         std::vector<std::int32_t> join,
                                         std::vector<std::int32_t> meet,
                                         int bottom, int top,
                                         std::vector<std::string> labels) {
  FiniteLattice l;
  l.n_ = n;
  l.leq_ = std::move(leq);
  l.join_ = std::move(join);
  l.meet_ = std::move(meet);
  l.bottom_ = bottom;
  l.top_ = top;
  l.labels_ = std::move(labels);
  return l;
}

SupMap::SupMap(LatticePtr src, LatticePtr tgt, std::vector<std::int32_t> tab)
    : source(std::move(src)), target(std::move(tgt)), table(std::move(tab)) {
  int n = source->size();
  if (static_cast<int>(table.size()) != n)
    throw std::invalid_argument("sup-map table size mismatch");
  for (int x : table)
    if (x < 0 || x >= target->size())
      throw std::invalid_argument("sup-map table entry out of range");
  if (table[source->bottom()] != target->bottom())
    throw std::invalid_argument("sup-map does not preserve bottom");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (table[source->join(a, b)] != target->join(table[a], table[b]))
        throw std::invalid_argument(
            "map does not preserve the join of '" + source->label(a) +
            "' and '" + source->label(b) + "'");
}

bool SupMap::operator==(const SupMap& other) const {
  return *source == *other.source && *target == *other.target &&
         table == other.table;
}

namespace {

std::string toggle_prime(const std::string& s) {
  if (!s.empty() && s.back() == '\'') return s.substr(0, s.size() - 1);
  return s + "'";
}

}  // namespace

FiniteLattice op_dual(const FiniteLattice& l) {
  int n = l.size();
  std::vector<std::uint8_t> leq(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) leq[a * n + b] = l.leq(b, a) ? 1 : 0;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(toggle_prime(l.label(i)));
  return FiniteLattice::from_tables(n, std::move(leq), l.meet_table(),
                                    l.join_table(), l.top(), l.bottom(),
                                    std::move(labels));
}

FiniteLattice product_lattice(const FiniteLattice& a, const FiniteLattice& b) {
  int na = a.size(), nb = b.size(), n = na * nb;
  auto id = [nb](int x, int y) { return x * nb + y; };
  std::vector<std::uint8_t> leq(static_cast<size_t>(n) * n);
  std::vector<std::int32_t> join(static_cast<size_t>(n) * n);
  std::vector<std::int32_t> meet(static_cast<size_t>(n) * n);
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1) {
      int i = id(x1, y1);
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2) {
          int j = id(x2, y2);
          leq[static_cast<size_t>(i) * n + j] =
              (a.leq(x1, x2) && b.leq(y1, y2)) ? 1 : 0;
          join[static_cast<size_t>(i) * n + j] =
              id(a.join(x1, x2), b.join(y1, y2));
          meet[static_cast<size_t>(i) * n + j] =
              id(a.meet(x1, x2), b.meet(y1, y2));
        }
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y)
      labels.push_back("(" + a.label(x) + "." + b.label(y) + ")");
  return FiniteLattice::from_tables(
      n, std::move(leq), std::move(join), std::move(meet),
      id(a.bottom(), b.bottom()), id(a.top(), b.top()), std::move(labels));
}

FiniteLattice unit_lattice() {
  return FiniteLattice::from_tables(1, {1}, {0}, {0}, 0, 0, {"*"});
}

std::vector<std::int32_t> right_adjoint(const SupMap& f) {
  const FiniteLattice& s = *f.source;
  const FiniteLattice& t = *f.target;
  std::vector<std::int32_t> adj(t.size());
  for (int y = 0; y < t.size(); ++y) {
    int acc = s.bottom();
    for (int x = 0; x < s.size(); ++x)
      if (t.leq(f(x), y)) acc = s.join(acc, x);
    adj[y] = acc;
  }
  return adj;
}

SupMap dual_map(const SupMap& f) {
  auto src = std::make_shared<FiniteLattice>(op_dual(*f.target));
  auto tgt = std::make_shared<FiniteLattice>(op_dual(*f.source));
  return SupMap(std::move(src), std::move(tgt), right_adjoint(f));
}

bool is_strong(const SupMap& f) {
  return f(f.source->top()) == f.target->top();
}

std::optional<std::array<int, 3>> distributivity_witness(
    const FiniteLattice& l) {
  int n = l.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)))
          return std::array<int, 3>{a, b, c};
  return std::nullopt;
}

bool is_completely_distributive(const FiniteLattice& l) {
  return !distributivity_witness(l).has_value();
}

std::vector<SupMap> enumerate_sup_maps(LatticePtr s, LatticePtr t,
                                       const Budget& budget) {
  const std::vector<int> irr = s->join_irreducibles();
  int k = static_cast<int>(irr.size());
  int nt = t->size();
  double candidates = std::pow(static_cast<double>(nt), k);
  require_budget(candidates <= static_cast<double>(budget.sup_map_candidates),
                 "|T|^|J(S)| = " + std::to_string(candidates) +
                     " sup-map candidates");

  std::vector<SupMap> out;
  std::vector<int> g(k, 0);  // image assignment on join-irreducibles
  int ns = s->size();
  std::vector<std::int32_t> table(ns);
  while (true) {
    // Monotone assignments extend uniquely; others duplicate or fail.
    bool monotone = true;
    for (int i = 0; i < k && monotone; ++i)
      for (int j = 0; j < k && monotone; ++j)
        if (s->leq(irr[i], irr[j]) && !t->leq(g[i], g[j])) monotone = false;
    if (monotone) {
      for (int x = 0; x < ns; ++x) {
        int acc = t->bottom();
        for (int i = 0; i < k; ++i)
          if (s->leq(irr[i], x)) acc = t->join(acc, g[i]);
        table[x] = acc;
      }
      bool preserves = table[s->bottom()] == t->bottom();
      for (int a = 0; a < ns && preserves; ++a)
        for (int b = a + 1; b < ns && preserves; ++b)
          if (table[s->join(a, b)] != t->join(table[a], table[b]))
            preserves = false;
      if (preserves) out.emplace_back(s, t, table);
    }
    // Lexicographic odometer, first irreducible most significant.
    int pos = k - 1;
    while (pos >= 0 && g[pos] == nt - 1) g[pos--] = 0;
    if (pos < 0) break;
    ++g[pos];
  }
  return out;
}

}  // namespace girard
