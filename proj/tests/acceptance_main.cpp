// Acceptance suite: one pass/fail line per criterion, exit code equal to the
// first failing criterion (0 when everything passes).

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "girard/builtins.hpp"
#include "girard/construction.hpp"
#include "girard/logic.hpp"
#include "girard/spectrum.hpp"

using namespace girard;

namespace {

struct Criterion {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

struct NamedCouple {
  std::string name;
  Couple couple;
};

// Identity couples on the corpus quantales, zero couples on the unital ones,
// and the predual couples of the corpus lattices.
std::vector<NamedCouple> corpus_couples() {
  std::vector<NamedCouple> out;
  for (const auto& q : corpus_quantale_names())
    out.push_back({"id-" + q, identity_couple(builtin_quantale(q))});
  for (const auto& q : corpus_quantale_names()) {
    Quantale quant = builtin_quantale(q);
    if (quant.unit()) out.push_back({"zero-" + q, zero_couple(quant)});
  }
  for (const auto& l : corpus_endo_lattice_names())
    out.push_back({"cs-" + l, cs_couple(builtin_lattice_ptr(l)).couple});
  return out;
}

// --------------------------------------------------------------------------

Criterion criterion_couple_axioms(double* elapsed) {
  Criterion c;
  auto t0 = std::chrono::steady_clock::now();
  std::vector<NamedCouple> couples = corpus_couples();
  for (const auto& [name, k] : couples) {
    CoupleReport rep = validate_couple(k);
    c.require(rep.ok(), name + ": " + (rep.first_failure()
                                           ? rep.first_failure()->law
                                           : "unknown"));
  }
  for (size_t i = 0; i < couples.size() && c.pass; ++i)
    for (size_t j = i + 1; j < couples.size() && c.pass; ++j) {
      Couple p = product_couple(couples[i].couple, couples[j].couple);
      CoupleReport rep = validate_couple(p);
      c.require(rep.ok(), couples[i].name + " x " + couples[j].name + ": " +
                              (rep.first_failure() ? rep.first_failure()->law
                                                   : "unknown"));
    }
  *elapsed = seconds_since(t0);
  c.require(*elapsed < 60.0, "runtime above 60 s");
  return c;
}

Criterion criterion_cs_theorem() {
  Criterion c;
  for (const auto& name : corpus_endo_lattice_names()) {
    CsCouple cs = cs_couple(builtin_lattice_ptr(name));
    const Couple& k = cs.couple;
    c.require(is_strong_couple(k), name + ": coupling map not strong");
    c.require(k.dualizer.has_value(), name + ": no designated dualizer");
    int d = *k.dualizer;
    c.require(is_cyclic(k, d) && is_dualizing(k, d),
              name + ": d is not cyclic dualizing");

    int ns = cs.tensor.s->size();
    int diag = k.c.lat().bottom();
    for (int x = 0; x < ns; ++x)
      diag = k.c.lat().join(diag, cs.tensor.generator(x, x));
    c.require(diag == d, name + ": d is not the diagonal join");

    CouplePerp pt = perp_tables(k);
    for (int x = 0; x < ns; ++x)
      for (int y = 0; y < ns; ++y) {
        int alpha = cs.endo.q.lat().join(cs.endo.lam[x], cs.endo.rho[y]);
        c.require(pt.q_to_c[alpha] == cs.tensor.generator(x, y),
                  name + ": sided join has the wrong negation");
        c.require(pt.c_to_q[cs.tensor.generator(x, y)] == alpha,
                  name + ": generator has the wrong negation");
      }
    for (int a = 0; a < k.nq(); ++a) {
      std::vector<std::int32_t> adj = right_adjoint(cs.endo.elems[a]);
      int expect = k.c.lat().bottom();
      for (int x = 0; x < ns; ++x)
        expect = k.c.lat().join(expect, cs.tensor.generator(adj[x], x));
      c.require(pt.q_to_c[a] == expect,
                name + ": negation is not the adjoint diagonal");
    }
  }
  return c;
}

std::vector<std::string> endo_lattices_with_chain5() {
  std::vector<std::string> names = corpus_endo_lattice_names();
  names.push_back("chain5");
  return names;
}

Criterion criterion_raney() {
  Criterion c;
  for (const auto& name : endo_lattices_with_chain5()) {
    FiniteLattice s = builtin_lattice(name);
    EndoQuantale e = build_endo_quantale(builtin_lattice_ptr(name));
    bool girard = !girard_elements(e.q).empty();
    c.require(girard == is_completely_distributive(s),
              name + ": Girard search disagrees with distributivity");
  }
  return c;
}

Criterion criterion_factorization() {
  Criterion c;
  for (const auto& [name, k] : corpus_couples()) {
    if (!is_girard(k)) continue;
    Couple kk = k;
    if (!kk.dualizer) kk.dualizer = find_cyclic_dualizing(kk);
    GirardQuantale g = build_G(kk);
    c.require(is_cyclic_element(g.g, g.dualizer) &&
                  is_dualizing_element(g.g, g.dualizer),
              name + ": (1,d) fails in G");
    for (int i = 0; i < g.g.size(); ++i)
      c.require(g.g.mul(g.unit, i) == i && g.g.mul(i, g.unit) == i,
                name + ": (e,0) is not neutral");
    for (int x = 0; x < kk.nc(); ++x)
      c.require(g.alpha[g.gamma[x]] == kk.phi(x),
                name + ": phi does not factor through G");
    c.require(check_convolution(g), name + ": convolution identity fails");
    c.require(check_restriction_of_scalars(kk, g),
              name + ": restriction of scalars fails");
    if (is_strong_couple(kk)) {
      SidedChainReport chain = check_sided_chain(kk, g);
      c.require(chain.applicable && chain.pass,
                name + ": sided chain fails (" + chain.reason + ")");
    }
  }
  return c;
}

Criterion criterion_rosenthal() {
  Criterion c;
  for (const auto* name : {"chain2", "subz4", "subz6"}) {
    Quantale q = builtin_quantale(name);
    GirardQuantale g = rosenthal(q);
    c.require(g.g.size() == q.size() * q.size(),
              std::string(name) + ": carrier is not the full product");
    for (int i = 0; i < g.g.size(); ++i) {
      auto [a, cc] = g.pairs[i];
      c.require(g.pairs[g.perp[i]] == std::make_pair(cc, a),
                std::string(name) + ": negation is not the pair swap");
    }
  }
  return c;
}

Criterion criterion_von_neumann() {
  Criterion c;
  auto check_quantale = [&](const std::string& name, const Quantale& q,
                            std::vector<int> ds) {
    if (ds.empty()) return;
    c.require(is_von_neumann(q), name + ": not von Neumann");
    SidedSets s = sided_sets(q);
    for (int d : ds) {
      for (int r : s.right)
        c.require(residual_right(q, r, d) ==
                      residual_right(q, r, q.lat().bottom()),
                  name + ": right negation differs from the annulator");
      for (int l : s.left)
        c.require(residual_left(q, d, l) ==
                      residual_left(q, q.lat().bottom(), l),
                  name + ": left negation differs from the annulator");
    }
  };
  for (const auto& name : corpus_quantale_names()) {
    Quantale q = builtin_quantale(name);
    check_quantale(name, q, girard_elements(q));
  }
  for (const auto& name : endo_lattices_with_chain5()) {
    EndoQuantale e = build_endo_quantale(builtin_lattice_ptr(name));
    check_quantale("endo-" + name, e.q, girard_elements(e.q));
  }
  for (const auto& name : corpus_endo_lattice_names()) {
    GirardQuantale g = build_G(cs_couple(builtin_lattice_ptr(name)).couple);
    check_quantale("G-" + name, g.g, {g.dualizer});
  }
  for (const auto* name : {"chain2", "subz4", "subz6"}) {
    GirardQuantale g = rosenthal(builtin_quantale(name));
    check_quantale("rosenthal-" + std::string(name), g.g, {g.dualizer});
  }
  return c;
}

Criterion criterion_self_adjoint() {
  Criterion c;
  for (const auto& [name, k] : corpus_couples()) {
    if (!is_girard(k)) continue;
    Couple kk = k;
    if (!kk.dualizer) kk.dualizer = find_cyclic_dualizing(kk);
    c.require(check_self_adjoint(kk), name + ": coupling map not self-adjoint");
  }
  return c;
}

Criterion criterion_spectrum(double* elapsed) {
  Criterion c;
  auto t0 = std::chrono::steady_clock::now();
  for (int n : {1, 2, 3}) {
    SpectrumReport rep = check_girard_sampled(n, 200, 42, 1e-9);
    for (const SpectrumCheck& chk : rep.checks)
      c.require(chk.pass, "n=" + std::to_string(n) + " " + chk.name +
                              " err=" + std::to_string(chk.max_error));
  }
  SpectrumReport rep = product_algebra_spectrum({2, 1}, 200, 42, 1e-9);
  for (const SpectrumCheck& chk : rep.checks)
    c.require(chk.pass, "dims=2,1 " + chk.name);
  *elapsed = seconds_since(t0);
  c.require(*elapsed < 30.0, "runtime above 30 s");
  return c;
}

Formula random_formula(std::mt19937_64& rng, int depth) {
  int pick = static_cast<int>(rng() % (depth <= 0 ? 5 : 8));
  Formula f;
  switch (pick) {
    case 0:
      f.kind = Formula::Kind::Atom;
      f.atom = "a";
      return f;
    case 1:
      f.kind = Formula::Kind::Atom;
      f.atom = "b" + std::to_string(rng() % 3);
      return f;
    case 2:
      f.kind = Formula::Kind::One;
      return f;
    case 3:
      f.kind = static_cast<int>(rng() % 2) ? Formula::Kind::Bottom
                                           : Formula::Kind::Zero;
      return f;
    case 4:
      f.kind = Formula::Kind::Top;
      return f;
    case 5:
      f.kind = Formula::Kind::Neg;
      f.lhs = std::make_unique<Formula>(random_formula(rng, depth - 1));
      return f;
    default:
      f.kind = pick == 6 ? Formula::Kind::Tensor : Formula::Kind::Par;
      f.lhs = std::make_unique<Formula>(random_formula(rng, depth - 1));
      f.rhs = std::make_unique<Formula>(random_formula(rng, depth - 1));
      return f;
  }
}

Criterion criterion_logic(double* elapsed) {
  Criterion c;
  auto t0 = std::chrono::steady_clock::now();
  Formula excluded = parse_formula("a | ~a");
  Formula dneg_l = parse_formula("~~a"), dneg_r = parse_formula("a");
  Formula dm_l = parse_formula("~(a * b)"), dm_r = parse_formula("~b | ~a");
  for (const auto& name : corpus_model_names()) {
    LogicModel m = builtin_model(name);
    c.require(is_tautology(excluded, m).tautology,
              name + ": excluded middle is not a tautology");
    for (int a = 0; a < m.q.size(); ++a) {
      Valuation v{{"a", a}};
      c.require(eval_formula(dneg_l, m, v) == eval_formula(dneg_r, m, v),
                name + ": double negation fails");
      for (int b = 0; b < m.q.size(); ++b) {
        Valuation vb{{"a", a}, {"b", b}};
        c.require(eval_formula(dm_l, m, vb) == eval_formula(dm_r, m, vb),
                  name + ": De Morgan fails");
      }
    }
  }
  std::mt19937_64 rng(20240817);
  for (int i = 0; i < 1000; ++i) {
    Formula f = random_formula(rng, 4);
    c.require(parse_formula(print_formula(f)) == f,
              "round trip fails: " + print_formula(f));
  }
  *elapsed = seconds_since(t0);
  c.require(*elapsed < 30.0, "runtime above 30 s");
  return c;
}

Criterion criterion_negative_controls() {
  Criterion c;
  Couple k = zero_couple(sub_ring_quantale(4));
  int a = k.q.lat().top(), m = k.c.lat().top();
  k.actl_[static_cast<size_t>(a) * k.nc() + m] =
      k.actl(a, m) == k.c.lat().bottom() ? k.c.lat().top()
                                         : k.c.lat().bottom();
  CoupleReport rep = validate_couple(k);
  c.require(!rep.ok(), "corrupted couple still validates");
  const LawResult* fail = rep.first_failure();
  c.require(fail != nullptr && !fail->witness.empty() &&
                !fail->witness_text.empty(),
            "corrupted couple lacks a counterexample");

  FiniteLattice m3 = builtin_lattice("m3");
  c.require(!is_completely_distributive(m3), "M3 reported distributive");
  auto w = distributivity_witness(m3);
  c.require(w.has_value(), "no distributivity witness for M3");
  if (w) {
    auto [x, y, z] = *w;
    c.require(m3.meet(x, m3.join(y, z)) !=
                  m3.join(m3.meet(x, y), m3.meet(x, z)),
              "M3 witness does not violate distributivity");
  }
  return c;
}

}  // namespace

int main() {
  int first_fail = 0;
  int index = 0;
  auto report = [&](const std::string& name, const Criterion& c,
                    double elapsed = -1.0) {
    ++index;
    std::string line = c.pass ? "PASS" : "FAIL";
    line += "  criterion-" + std::to_string(index) + "  " + name;
    if (elapsed >= 0)
      line += "  (" + std::to_string(elapsed).substr(0, 5) + "s)";
    if (!c.pass) line += "  [" + c.detail + "]";
    std::printf("%s\n", line.c_str());
    std::fflush(stdout);
    if (!c.pass && first_fail == 0) first_fail = index;
  };

  double t1 = 0, t8 = 0, t9 = 0;
  Criterion c1 = criterion_couple_axioms(&t1);
  report("couple-axioms-corpus-and-products", c1, t1);
  report("predual-couple-structure", criterion_cs_theorem());
  report("endo-girard-iff-distributive", criterion_raney());
  report("factorization-through-G", criterion_factorization());
  report("rosenthal-recovery", criterion_rosenthal());
  report("girard-implies-von-neumann", criterion_von_neumann());
  report("coupling-self-adjoint", criterion_self_adjoint());
  Criterion c8 = criterion_spectrum(&t8);
  report("matrix-spectrum-sampled", c8, t8);
  Criterion c9 = criterion_logic(&t9);
  report("logic-evaluator", c9, t9);
  report("negative-controls", criterion_negative_controls());
  return first_fail;
}
