#include <doctest.h>

#include <random>

#include "girard/spectrum.hpp"

using namespace girard;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;

namespace {

constexpr double kTol = 1e-9;

// Coordinates of the elementary matrix E_ij inside the full algebra.
MatrixSubspace elementary(const MatrixAlgebra& alg, int i, int j) {
  MatrixXcd m = MatrixXcd::Zero(alg.n, alg.n);
  m(i, j) = 1.0;
  return canonicalize(alg, alg.from_matrix(m), kTol);
}

}  // namespace

TEST_CASE("products of elementary subspaces") {
  MatrixAlgebra m2 = MatrixAlgebra::full(2);
  MatrixSubspace e11 = elementary(m2, 0, 0);
  MatrixSubspace e12 = elementary(m2, 0, 1);

  SUBCASE("E12 squares to zero") {
    CHECK(subspace_product(m2, e12, e12, kTol).dim() == 0);
  }
  SUBCASE("E11 E12 = E12") {
    MatrixSubspace p = subspace_product(m2, e11, e12, kTol);
    CHECK(subspace_equal(p, e12, kTol));
  }
  SUBCASE("span{I} is neutral") {
    MatrixSubspace e = span_identity(m2, kTol);
    MatrixSubspace a = canonicalize(
        m2, (MatrixXcd(4, 2) << 1, 2, 3, 4, 5, 6, 7, 8).finished(), kTol);
    CHECK(subspace_equal(subspace_product(m2, e, a, kTol), a, kTol));
    CHECK(subspace_equal(subspace_product(m2, a, e, kTol), a, kTol));
  }
}

TEST_CASE("trace perp frozen values") {
  MatrixAlgebra m2 = MatrixAlgebra::full(2);

  SUBCASE("perp of zero is everything") {
    CHECK(trace_perp(m2, zero_subspace(m2), kTol).dim() == 4);
  }
  SUBCASE("perp of span{I} is the traceless subspace") {
    MatrixSubspace d = trace_perp(m2, span_identity(m2, kTol), kTol);
    CHECK(d.dim() == 3);
    for (int c = 0; c < d.dim(); ++c)
      CHECK(std::abs(m2.trace(d.basis.col(c))) < kTol);
  }
  SUBCASE("perp of span{E11} in M2") {
    MatrixSubspace p = trace_perp(m2, elementary(m2, 0, 0), kTol);
    CHECK(p.dim() == 3);
    // tr(E11 C) = C_00, so the perp is spanned by E12, E21, E22.
    MatrixXcd spans(4, 3);
    spans.col(0) = elementary(m2, 0, 1).basis.col(0);
    spans.col(1) = elementary(m2, 1, 0).basis.col(0);
    spans.col(2) = elementary(m2, 1, 1).basis.col(0);
    CHECK(subspace_equal(p, canonicalize(m2, spans, kTol), kTol));
  }
}

TEST_CASE("residual into the traceless subspace matches trace perp") {
  MatrixAlgebra m2 = MatrixAlgebra::full(2);
  SUBCASE("identity span") {
    MatrixSubspace a = span_identity(m2, kTol);
    MatrixSubspace r = residual_into_d(m2, a, kTol);
    CHECK(subspace_equal(r, trace_perp(m2, a, kTol), kTol));
    CHECK(r.dim() == 3);
  }
  SUBCASE("zero subspace") {
    CHECK(residual_into_d(m2, zero_subspace(m2), kTol).dim() == 4);
  }
  SUBCASE("random two-dimensional subspaces agree on both routes") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 20; ++trial) {
      MatrixXcd spans(4, 2);
      for (int c = 0; c < 2; ++c)
        for (int r = 0; r < 4; ++r)
          spans(r, c) = std::complex<double>(g(rng), g(rng));
      MatrixSubspace a = canonicalize(m2, spans, kTol);
      CHECK(subspace_equal(residual_into_d(m2, a, kTol),
                           trace_perp(m2, a, kTol), kTol));
    }
  }
}

TEST_CASE("column-space ideals in M3") {
  MatrixAlgebra m3 = MatrixAlgebra::full(3);
  MatrixSubspace full = full_subspace(m3);
  // The left ideal M3 E11 is the first-column subspace; the full algebra
  // acting on the left keeps it in place.
  MatrixSubspace a = subspace_product(m3, full, elementary(m3, 0, 0), kTol);
  CHECK(a.dim() == 3);
  MatrixSubspace ma = subspace_product(m3, full, a, kTol);
  CHECK(subspace_equal(ma, a, kTol));
}

TEST_CASE("sampled Girard suite for small matrix algebras") {
  SUBCASE("n = 1 is the two-chain") {
    SpectrumReport rep = check_girard_sampled(1, 10, 5);
    CHECK(rep.pass());
    // d = {0}: the traceless subspace is trivial.
    MatrixAlgebra a = MatrixAlgebra::full(1);
    CHECK(trace_perp(a, span_identity(a, kTol), kTol).dim() == 0);
  }
  SUBCASE("n = 2, 200 samples, seed 42") {
    SpectrumReport rep = check_girard_sampled(2, 200, 42);
    CHECK(rep.pass());
    CHECK(rep.max_error() < 1e-9);
  }
  SUBCASE("n = 3 spot run") {
    SpectrumReport rep = check_girard_sampled(3, 40, 7);
    CHECK(rep.pass());
  }
  SUBCASE("input validation") {
    CHECK_THROWS_AS(check_girard_sampled(0, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(check_girard_sampled(2, 0, 1), std::invalid_argument);
  }
}

TEST_CASE("block algebra spectra") {
  SUBCASE("two scalar blocks give the trace-zero line") {
    MatrixAlgebra a = MatrixAlgebra::blocks({1, 1});
    CHECK(a.d == 2);
    MatrixSubspace d = trace_perp(a, span_identity(a, kTol), kTol);
    REQUIRE(d.dim() == 1);
    CHECK(std::abs(d.basis(0, 0) + d.basis(1, 0)) < kTol);
    CHECK(product_algebra_spectrum({1, 1}, 50, 1).pass());
  }
  SUBCASE("single block matches the full algebra") {
    SpectrumReport rep = product_algebra_spectrum({2}, 50, 3);
    CHECK(rep.pass());
    CHECK(rep.dims == std::vector<int>{2});
  }
  SUBCASE("mixed blocks") {
    CHECK(product_algebra_spectrum({2, 1}, 60, 3).pass());
  }
  SUBCASE("size cap") {
    CHECK_THROWS_AS(product_algebra_spectrum({5, 3}, 10, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(product_algebra_spectrum({}, 10, 1),
                    std::invalid_argument);
  }
}

TEST_CASE("reports are deterministic for a fixed seed") {
  SpectrumReport a = check_girard_sampled(2, 25, 99);
  SpectrumReport b = check_girard_sampled(2, 25, 99);
  REQUIRE(a.checks.size() == b.checks.size());
  for (size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].max_error == b.checks[i].max_error);
  }
}

TEST_CASE("annihilators") {
  MatrixAlgebra m2 = MatrixAlgebra::full(2);
  // The left annihilator of the first-row span is the second-column killer.
  MatrixSubspace r =
      subspace_product(m2, elementary(m2, 0, 0), full_subspace(m2), kTol);
  CHECK(r.dim() == 2);
  MatrixSubspace l = left_annihilator(m2, r, kTol);
  CHECK(l.dim() == 2);
  MatrixSubspace back = right_annihilator(m2, l, kTol);
  CHECK(subspace_equal(back, r, kTol));
}
