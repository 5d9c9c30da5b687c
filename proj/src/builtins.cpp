#include "girard/builtins.hpp"

#include <algorithm>
#include <stdexcept>

#include "girard/construction.hpp"

namespace girard {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string canonical(const std::string& raw) {
  std::string name = lower(raw);
  if (name == "2x2") return "bool2";
  if (name == "2x2x2") return "bool3";
  if (name.rfind("cs-couple-", 0) == 0) return "cs-" + name.substr(10);
  return name;
}

FiniteLattice chain(int n) {
  std::vector<std::string> elems;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < n; ++i) elems.push_back("c" + std::to_string(i));
  elems.front() = "0";
  elems.back() = "1";
  if (n == 3) elems[1] = "m";
  for (int i = 0; i + 1 < n; ++i) covers.push_back({elems[i], elems[i + 1]});
  return FiniteLattice::from_covers(elems, covers);
}

FiniteLattice boolean(int atoms) {
  int n = 1 << atoms;
  std::vector<std::string> elems;
  for (int mask = 0; mask < n; ++mask) {
    if (mask == 0) {
      elems.push_back("0");
      continue;
    }
    if (mask == n - 1) {
      elems.push_back("1");
      continue;
    }
    std::string name;
    for (int b = 0; b < atoms; ++b)
      if (mask & (1 << b)) name += static_cast<char>('p' + b);
    elems.push_back(name);
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (int mask = 0; mask < n; ++mask)
    for (int b = 0; b < atoms; ++b)
      if (!(mask & (1 << b)))
        covers.push_back({elems[mask], elems[mask | (1 << b)]});
  return FiniteLattice::from_covers(elems, covers);
}

FiniteLattice m3() {
  return FiniteLattice::from_covers(
      {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

FiniteLattice n5() {
  return FiniteLattice::from_covers(
      {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}});
}

Quantale two_chain_quantale() {
  auto l = std::make_shared<FiniteLattice>(chain(2));
  // Multiplication is meet; the top is the unit.
  std::vector<std::int32_t> mul(4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) mul[a * 2 + b] = l->meet(a, b);
  return Quantale(std::move(l), std::move(mul));
}

}  // namespace

std::vector<std::string> builtin_lattice_names() {
  return {"chain2", "chain3", "chain4", "chain5", "m3", "n5", "bool2",
          "bool3"};
}

FiniteLattice builtin_lattice(const std::string& raw) {
  std::string name = canonical(raw);
  if (name == "chain2") return chain(2);
  if (name == "chain3") return chain(3);
  if (name == "chain4") return chain(4);
  if (name == "chain5") return chain(5);
  if (name == "m3") return m3();
  if (name == "n5") return n5();
  if (name == "bool2") return boolean(2);
  if (name == "bool3") return boolean(3);
  throw std::invalid_argument("unknown builtin lattice '" + raw + "'");
}

LatticePtr builtin_lattice_ptr(const std::string& name) {
  return std::make_shared<FiniteLattice>(builtin_lattice(name));
}

std::vector<std::string> builtin_quantale_names() {
  return {"chain2",      "zmchain3",    "subz4", "subz6",
          "endo-chain2", "endo-chain3", "endo-bool2"};
}

Quantale builtin_quantale(const std::string& raw) {
  std::string name = canonical(raw);
  if (name == "chain2") return two_chain_quantale();
  if (name == "zmchain3")
    return zero_quantale(builtin_lattice_ptr("chain3"));
  if (name == "subz4") return sub_ring_quantale(4);
  if (name == "subz6") return sub_ring_quantale(6);
  if (name.rfind("endo-", 0) == 0)
    return build_endo_quantale(builtin_lattice_ptr(name.substr(5))).q;
  throw std::invalid_argument("unknown builtin quantale '" + raw + "'");
}

std::vector<std::string> builtin_couple_names() {
  std::vector<std::string> names;
  for (const auto& q : builtin_quantale_names()) names.push_back("id-" + q);
  for (const auto& q : builtin_quantale_names())
    if (q != "zmchain3") names.push_back("zero-" + q);
  for (const auto& l : corpus_endo_lattice_names()) names.push_back("cs-" + l);
  names.push_back("subideal-6-3");
  names.push_back("subideal-4-2");
  return names;
}

Couple builtin_couple(const std::string& raw) {
  std::string name = canonical(raw);
  if (name.rfind("id-", 0) == 0)
    return identity_couple(builtin_quantale(name.substr(3)));
  if (name.rfind("zero-", 0) == 0)
    return zero_couple(builtin_quantale(name.substr(5)));
  if (name.rfind("cs-", 0) == 0)
    return cs_couple(builtin_lattice_ptr(name.substr(3))).couple;
  if (name.rfind("subideal-", 0) == 0) {
    std::string rest = name.substr(9);
    size_t dash = rest.find('-');
    if (dash != std::string::npos)
      return sub_ideal_couple(std::stoi(rest.substr(0, dash)),
                              std::stoi(rest.substr(dash + 1)));
  }
  throw std::invalid_argument("unknown builtin couple '" + raw + "'");
}

std::vector<std::string> builtin_model_names() {
  return {"rosenthal-chain2", "rosenthal-subz4", "rosenthal-subz6",
          "endo-chain3",      "endo-bool2",      "gofs-chain2",
          "gofs-chain3"};
}

LogicModel builtin_model(const std::string& raw) {
  std::string name = canonical(raw);
  if (name.rfind("rosenthal-", 0) == 0)
    return LogicModel::from_girard(
        rosenthal(builtin_quantale(name.substr(10))));
  if (name.rfind("gofs-", 0) == 0)
    return LogicModel::from_girard(
        G_of_S(builtin_lattice_ptr(name.substr(5))).g);
  // Girard builtin quantales act as models directly via the first cyclic
  // dualizing element.
  Quantale q = builtin_quantale(name);
  std::vector<int> ds = girard_elements(q);
  if (ds.empty())
    throw std::invalid_argument("builtin quantale '" + raw +
                                "' is not Girard");
  return LogicModel(std::move(q), ds.front());
}

std::vector<std::string> corpus_lattice_names() {
  return {"chain2", "chain3", "chain4", "chain5", "m3", "n5", "bool2"};
}

std::vector<std::string> corpus_endo_lattice_names() {
  return {"chain2", "chain3", "chain4", "bool2", "m3", "n5"};
}

std::vector<std::string> corpus_quantale_names() {
  return {"chain2", "zmchain3", "subz4", "subz6", "endo-chain3", "endo-bool2"};
}

std::vector<std::string> corpus_model_names() {
  return {"rosenthal-chain2", "rosenthal-subz4", "rosenthal-subz6",
          "endo-chain3",      "endo-bool2",      "gofs-chain2",
          "gofs-chain3"};
}

}  // namespace girard
