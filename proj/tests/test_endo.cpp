#include <doctest.h>

#include <algorithm>
#include <set>

#include "girard/builtins.hpp"
#include "girard/endo.hpp"

using namespace girard;

TEST_CASE("endomorphism quantale sizes") {
  CHECK(build_endo_quantale(builtin_lattice_ptr("chain2")).q.size() == 2);
  CHECK(build_endo_quantale(builtin_lattice_ptr("chain3")).q.size() == 6);
  CHECK(build_endo_quantale(builtin_lattice_ptr("bool2")).q.size() == 16);
}

TEST_CASE("endo budget rejects bool3 by default") {
  CHECK_THROWS_AS(build_endo_quantale(builtin_lattice_ptr("bool3")),
                  BudgetError);
}

TEST_CASE("the unit is the identity map") {
  for (const auto& name : corpus_endo_lattice_names()) {
    EndoQuantale e = build_endo_quantale(builtin_lattice_ptr(name));
    REQUIRE(e.q.unit().has_value());
    const SupMap& u = e.elems[*e.q.unit()];
    for (int x = 0; x < e.base->size(); ++x) CHECK(u(x) == x);
  }
}

TEST_CASE("rho and lambda frozen values") {
  EndoQuantale e2 = build_endo_quantale(builtin_lattice_ptr("chain2"));
  CHECK(e2.rho[e2.base->bottom()] == e2.q.lat().bottom());
  CHECK(e2.lam[e2.base->top()] == e2.q.lat().bottom());
  CHECK(e2.lam[e2.base->bottom()] == *e2.q.unit());

  for (const auto& name : corpus_endo_lattice_names()) {
    EndoQuantale e = build_endo_quantale(builtin_lattice_ptr(name));
    // rho_0 is the constant-bottom map, the bottom of Q(S).
    CHECK(e.rho[e.base->bottom()] == e.q.lat().bottom());
    // lambda_1 kills everything.
    CHECK(e.lam[e.base->top()] == e.q.lat().bottom());
    // rho_1 lambda_0 is the top of Q(S).
    CHECK(e.q.mul(e.rho[e.base->top()], e.lam[e.base->bottom()]) ==
          e.q.lat().top());
  }
}

TEST_CASE("sided elements are exactly the rho and lambda families") {
  for (const auto& name : corpus_endo_lattice_names()) {
    EndoQuantale e = build_endo_quantale(builtin_lattice_ptr(name));
    SidedSets s = sided_sets(e.q);
    std::set<int> rhos(e.rho.begin(), e.rho.end());
    std::set<int> lams(e.lam.begin(), e.lam.end());
    CHECK(std::set<int>(s.right.begin(), s.right.end()) == rhos);
    CHECK(std::set<int>(s.left.begin(), s.left.end()) == lams);
    if (e.base->size() >= 2) CHECK(s.two.size() == 2);
  }
}

TEST_CASE("annulators swap the sided families") {
  for (const auto* name : {"chain3", "bool2", "m3"}) {
    EndoQuantale e = build_endo_quantale(builtin_lattice_ptr(name));
    int bot = e.q.lat().bottom();
    for (int x = 0; x < e.base->size(); ++x) {
      CHECK(residual_right(e.q, e.rho[x], bot) == e.lam[x]);
      CHECK(residual_left(e.q, bot, e.lam[x]) == e.rho[x]);
    }
  }
}

TEST_CASE("rho embeds the base lattice, lambda reverses it") {
  for (const auto* name : {"chain4", "n5", "bool2"}) {
    EndoQuantale e = build_endo_quantale(builtin_lattice_ptr(name));
    const FiniteLattice& ql = e.q.lat();
    for (int x = 0; x < e.base->size(); ++x)
      for (int y = 0; y < e.base->size(); ++y) {
        CHECK(e.base->leq(x, y) == ql.leq(e.rho[x], e.rho[y]));
        CHECK(e.base->leq(x, y) == ql.leq(e.lam[y], e.lam[x]));
      }
  }
}

TEST_CASE("decomposition through the sided families") {
  CHECK(check_decomposition(build_endo_quantale(builtin_lattice_ptr("chain2"))));
  CHECK(check_decomposition(build_endo_quantale(builtin_lattice_ptr("bool2"))));
  CHECK(check_decomposition(build_endo_quantale(builtin_lattice_ptr("n5"))));
  CHECK(check_decomposition(build_endo_quantale(builtin_lattice_ptr("m3"))));
}

TEST_CASE("composition order matches the module action") {
  EndoQuantale e = build_endo_quantale(builtin_lattice_ptr("chain3"));
  for (int i = 0; i < e.q.size(); ++i)
    for (int j = 0; j < e.q.size(); ++j) {
      int prod = e.q.mul(i, j);
      for (int x = 0; x < e.base->size(); ++x)
        CHECK(e.elems[prod](x) == e.elems[i](e.elems[j](x)));
    }
}
