#include <doctest.h>

#include <algorithm>

#include "girard/builtins.hpp"
#include "girard/quantale.hpp"

using namespace girard;

namespace {

Quantale meet_quantale(const std::string& lattice_name) {
  auto l = builtin_lattice_ptr(lattice_name);
  int n = l->size();
  std::vector<std::int32_t> mul(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a * n + b] = l->meet(a, b);
  return Quantale(std::move(l), std::move(mul));
}

std::vector<Quantale> corpus_quantales() {
  std::vector<Quantale> out;
  for (const auto& name : corpus_quantale_names())
    out.push_back(builtin_quantale(name));
  return out;
}

}  // namespace

TEST_CASE("two-chain quantale basics") {
  Quantale q = builtin_quantale("chain2");
  REQUIRE(q.unit().has_value());
  CHECK(*q.unit() == q.lat().top());
  CHECK(q.mul(q.lat().top(), q.lat().top()) == q.lat().top());
}

TEST_CASE("invalid multiplications are rejected") {
  auto c2 = builtin_lattice_ptr("chain2");
  CHECK_THROWS_AS(Quantale(c2, {0, 0, 0, 2}), std::invalid_argument);
  // Non-absorbing bottom.
  CHECK_THROWS_AS(Quantale(c2, {1, 1, 1, 1}), std::invalid_argument);
  auto c3 = builtin_lattice_ptr("chain3");
  // m*m jumps to the top, which breaks distributivity over m v m.
  std::vector<std::int32_t> bad = {0, 0, 0, 0, 2, 0, 0, 0, 0};
  CHECK_THROWS_AS(Quantale(c3, bad), std::invalid_argument);
}

TEST_CASE("residual frozen values") {
  Quantale z4 = sub_ring_quantale(4);
  int zero = z4.lat().index_of("0");
  int two = z4.lat().index_of("2Z4");
  int whole = z4.lat().index_of("Z4");
  REQUIRE(zero >= 0);
  REQUIRE(two >= 0);
  REQUIRE(whole >= 0);
  CHECK(z4.lat().bottom() == zero);
  CHECK(z4.lat().top() == whole);
  CHECK(z4.mul(two, two) == zero);
  REQUIRE(z4.unit().has_value());
  CHECK(*z4.unit() == whole);

  // 2Z4 <- 2Z4 is the whole ring.
  CHECK(residual_left(z4, two, two) == whole);
  for (int a = 0; a < z4.size(); ++a) {
    CHECK(residual_left(z4, z4.lat().top(), a) == z4.lat().top());
    CHECK(residual_left(z4, a, z4.lat().bottom()) == z4.lat().top());
    CHECK(residual_right(z4, z4.lat().bottom(), a) == z4.lat().top());
  }

  // In Q(2-chain) the identity's left annulator is zero.
  Quantale q2 = builtin_quantale("endo-chain2");
  REQUIRE(q2.unit().has_value());
  CHECK(residual_right(q2, *q2.unit(), q2.lat().bottom()) ==
        q2.lat().bottom());
}

TEST_CASE("residual adjunctions hold exhaustively") {
  for (const Quantale& q : corpus_quantales()) {
    const FiniteLattice& l = q.lat();
    for (int a = 0; a < q.size(); ++a)
      for (int b = 0; b < q.size(); ++b) {
        int rl = residual_left(q, b, a);
        int rr = residual_right(q, a, b);
        for (int c = 0; c < q.size(); ++c) {
          CHECK(l.leq(q.mul(a, c), b) == l.leq(c, rl));
          CHECK(l.leq(q.mul(c, a), b) == l.leq(c, rr));
        }
      }
  }
}

TEST_CASE("annulators are sided") {
  for (const Quantale& q : corpus_quantales()) {
    SidedSets s = sided_sets(q);
    for (int a = 0; a < q.size(); ++a) {
      int left_ann = residual_right(q, a, q.lat().bottom());
      int right_ann = residual_left(q, q.lat().bottom(), a);
      CHECK(std::count(s.left.begin(), s.left.end(), left_ann) == 1);
      CHECK(std::count(s.right.begin(), s.right.end(), right_ann) == 1);
    }
  }
}

TEST_CASE("sided sets") {
  SUBCASE("commutative quantales have equal sides") {
    for (const auto* name : {"subz4", "subz6"}) {
      SidedSets s = sided_sets(builtin_quantale(name));
      CHECK(s.right == s.left);
      CHECK(s.right == s.two);
    }
  }
  SUBCASE("all three subgroups of Z4 are two-sided") {
    SidedSets s = sided_sets(sub_ring_quantale(4));
    CHECK(s.two.size() == 3);
  }
}

TEST_CASE("semiunital predicate") {
  CHECK(is_semiunital(builtin_quantale("endo-bool2")));
  CHECK_FALSE(is_semiunital(builtin_quantale("zmchain3")));
  // Unital quantales are semiunital, and their top dominates products.
  for (const Quantale& q : corpus_quantales()) {
    if (!q.unit()) continue;
    CHECK(is_semiunital(q));
    const FiniteLattice& l = q.lat();
    for (int a = 0; a < q.size(); ++a) {
      CHECK(l.leq(a, q.mul(l.top(), a)));
      CHECK(l.leq(a, q.mul(a, l.top())));
    }
  }
}

TEST_CASE("von Neumann predicate") {
  CHECK(is_von_neumann(builtin_quantale("chain2")));
  CHECK(is_von_neumann(builtin_quantale("endo-bool2")));
  CHECK_FALSE(is_von_neumann(builtin_quantale("zmchain3")));
}

TEST_CASE("cyclicity and dualizing elements") {
  for (const Quantale& q : corpus_quantales()) {
    // The top is always cyclic.
    CHECK(is_cyclic_element(q, q.lat().top()));
  }
  SUBCASE("Girard search on the endomorphism quantale of bool2") {
    Quantale q = builtin_quantale("endo-bool2");
    CHECK_FALSE(girard_elements(q).empty());
  }
  SUBCASE("subgroup quantales are Girard at the zero subgroup") {
    for (int n : {4, 6}) {
      Quantale q = sub_ring_quantale(n);
      std::vector<int> ds = girard_elements(q);
      CHECK(std::count(ds.begin(), ds.end(), q.lat().bottom()) == 1);
    }
  }
}

TEST_CASE("Girard implies von Neumann with matching dualities") {
  for (const Quantale& q : corpus_quantales()) {
    std::vector<int> ds = girard_elements(q);
    if (ds.empty()) continue;
    CHECK(is_von_neumann(q));
    int d = ds.front();
    SidedSets s = sided_sets(q);
    int bot = q.lat().bottom();
    for (int r : s.right)
      CHECK(residual_right(q, r, d) == residual_right(q, r, bot));
    for (int l : s.left)
      CHECK(residual_left(q, d, l) == residual_left(q, bot, l));
  }
}

TEST_CASE("subgroup quantale shapes") {
  CHECK(sub_ring_quantale(2).size() == 2);
  CHECK(sub_ring_quantale(4).size() == 3);
  CHECK(sub_ring_quantale(6).size() == 4);
  CHECK_THROWS_AS(sub_ring_quantale(1), std::invalid_argument);

  // n = 2 gives the two-chain quantale.
  Quantale z2 = sub_ring_quantale(2);
  Quantale c2 = builtin_quantale("chain2");
  CHECK(z2.size() == c2.size());
  CHECK(z2.mul(z2.lat().top(), z2.lat().top()) == z2.lat().top());
  REQUIRE(z2.unit().has_value());
  CHECK(*z2.unit() == z2.lat().top());
}

TEST_CASE("zero quantale") {
  Quantale z = zero_quantale(builtin_lattice_ptr("chain3"));
  for (int a = 0; a < z.size(); ++a)
    for (int b = 0; b < z.size(); ++b)
      CHECK(z.mul(a, b) == z.lat().bottom());
  CHECK_FALSE(z.unit().has_value());
  CHECK_FALSE(is_semiunital(z));
}

TEST_CASE("product quantale is componentwise and satisfies the laws") {
  Quantale p = product_quantale(sub_ring_quantale(4), meet_quantale("chain3"));
  CHECK(p.size() == 9);
  REQUIRE(p.unit().has_value());
  Quantale z4 = sub_ring_quantale(4);
  Quantale m3 = meet_quantale("chain3");
  CHECK(*p.unit() == *z4.unit() * m3.size() + *m3.unit());
  // The componentwise tables pass the eagerly validating constructor.
  CHECK_NOTHROW(Quantale(p.lattice(), p.mul_table()));
}

TEST_CASE("unit discovery is by scan") {
  CHECK(builtin_quantale("endo-chain3").unit().has_value());
  CHECK_FALSE(builtin_quantale("zmchain3").unit().has_value());
}
