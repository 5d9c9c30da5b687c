#include "girard/spectrum.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <random>
#include <stdexcept>

namespace girard {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using cdouble = std::complex<double>;

MatrixAlgebra MatrixAlgebra::full(int n) { return blocks({n}); }

MatrixAlgebra MatrixAlgebra::blocks(std::vector<int> dims) {
  MatrixAlgebra a;
  a.dims = std::move(dims);
  for (int b : a.dims) {
    if (b < 1) throw std::invalid_argument("block sizes must be positive");
    a.n += b;
  }
  int off = 0;
  for (int b : a.dims) {
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j) a.coord_pos.push_back({off + i, off + j});
    off += b;
  }
  a.d = static_cast<int>(a.coord_pos.size());
  return a;
}

MatrixXcd MatrixAlgebra::to_matrix(const VectorXcd& coords) const {
  MatrixXcd m = MatrixXcd::Zero(n, n);
  for (int k = 0; k < d; ++k) m(coord_pos[k].first, coord_pos[k].second) = coords[k];
  return m;
}

VectorXcd MatrixAlgebra::from_matrix(const MatrixXcd& m) const {
  VectorXcd v(d);
  for (int k = 0; k < d; ++k) v[k] = m(coord_pos[k].first, coord_pos[k].second);
  return v;
}

VectorXcd MatrixAlgebra::transpose_coords(const VectorXcd& coords) const {
  return from_matrix(to_matrix(coords).transpose());
}

VectorXcd MatrixAlgebra::adjoint_coords(const VectorXcd& coords) const {
  return from_matrix(to_matrix(coords).adjoint());
}

cdouble MatrixAlgebra::trace(const VectorXcd& coords) const {
  cdouble t = 0;
  for (int k = 0; k < d; ++k)
    if (coord_pos[k].first == coord_pos[k].second) t += coords[k];
  return t;
}

VectorXcd MatrixAlgebra::identity_coords() const {
  VectorXcd v = VectorXcd::Zero(d);
  for (int k = 0; k < d; ++k)
    if (coord_pos[k].first == coord_pos[k].second) v[k] = 1.0;
  return v;
}

MatrixSubspace canonicalize(const MatrixAlgebra& alg,
                            const Eigen::MatrixXcd& spans, double tol) {
  int d = alg.d;
  if (spans.rows() != d)
    throw std::invalid_argument("span vectors have the wrong dimension");
  MatrixXcd basis(d, std::min<int>(static_cast<int>(spans.cols()), d));
  int rank = 0;
  for (int c = 0; c < spans.cols(); ++c) {
    VectorXcd v = spans.col(c);
    double scale = v.norm();
    if (scale <= tol) continue;
    // Two Gram-Schmidt passes keep the basis orthonormal to roundoff.
    for (int pass = 0; pass < 2; ++pass)
      for (int b = 0; b < rank; ++b)
        v -= basis.col(b).dot(v) * basis.col(b);
    if (v.norm() <= tol * scale) continue;
    if (rank == basis.cols()) break;
    basis.col(rank++) = v / v.norm();
  }
  MatrixSubspace s;
  s.basis = basis.leftCols(rank);
  return s;
}

MatrixSubspace zero_subspace(const MatrixAlgebra& alg) {
  MatrixSubspace s;
  s.basis = MatrixXcd::Zero(alg.d, 0);
  return s;
}

MatrixSubspace full_subspace(const MatrixAlgebra& alg) {
  MatrixSubspace s;
  s.basis = MatrixXcd::Identity(alg.d, alg.d);
  return s;
}

MatrixSubspace span_identity(const MatrixAlgebra& alg, double tol) {
  return canonicalize(alg, alg.identity_coords(), tol);
}

double containment_residual(const MatrixSubspace& a, const MatrixSubspace& b) {
  double worst = 0;
  for (int c = 0; c < a.basis.cols(); ++c) {
    VectorXcd v = a.basis.col(c);
    VectorXcd proj = b.basis * (b.basis.adjoint() * v);
    worst = std::max(worst, (v - proj).norm());
  }
  return worst;
}

double subspace_distance(const MatrixSubspace& a, const MatrixSubspace& b) {
  return std::max(containment_residual(a, b), containment_residual(b, a));
}

bool subspace_equal(const MatrixSubspace& a, const MatrixSubspace& b,
                    double tol) {
  return a.dim() == b.dim() && subspace_distance(a, b) <= tol;
}

MatrixSubspace subspace_product(const MatrixAlgebra& alg,
                                const MatrixSubspace& a,
                                const MatrixSubspace& b, double tol) {
  int na = a.dim(), nb = b.dim();
  if (na == 0 || nb == 0) return zero_subspace(alg);
  MatrixXcd products(alg.d, na * nb);
  for (int i = 0; i < na; ++i) {
    MatrixXcd ma = alg.to_matrix(a.basis.col(i));
    for (int j = 0; j < nb; ++j)
      products.col(i * nb + j) =
          alg.from_matrix(ma * alg.to_matrix(b.basis.col(j)));
  }
  return canonicalize(alg, products, tol);
}

MatrixSubspace trace_perp(const MatrixAlgebra& alg, const MatrixSubspace& a,
                          double tol) {
  if (a.dim() == 0) return full_subspace(alg);
  // tr(A C) = vec(A^T) . vec(C) without conjugation, so the constraints are
  // the transposed basis vectors used as bilinear rows.
  MatrixXcd constraints(a.dim(), alg.d);
  for (int i = 0; i < a.dim(); ++i)
    constraints.row(i) = alg.transpose_coords(a.basis.col(i)).transpose();
  Eigen::JacobiSVD<MatrixXcd> svd(constraints, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double cutoff = tol * (sv.size() > 0 ? sv[0] : 1.0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff) ++rank;
  MatrixSubspace s;
  s.basis = svd.matrixV().rightCols(alg.d - rank);
  return s;
}

MatrixSubspace residual_into_d(const MatrixAlgebra& alg,
                               const MatrixSubspace& a, double tol) {
  if (a.dim() == 0) return full_subspace(alg);
  // c.a lands in the traceless subspace iff tr(CA) = 0 for all basis A,
  // i.e. iff C is trace-orthogonal to a; independently of trace_perp this
  // is the Hermitian complement of the adjoint span, via a full QR.
  MatrixXcd adj(alg.d, a.dim());
  for (int i = 0; i < a.dim(); ++i)
    adj.col(i) = alg.adjoint_coords(a.basis.col(i));
  MatrixSubspace span = canonicalize(alg, adj, tol);
  Eigen::HouseholderQR<MatrixXcd> qr(span.basis);
  MatrixXcd q = qr.householderQ();
  MatrixSubspace s;
  s.basis = q.rightCols(alg.d - span.dim());
  return s;
}

namespace {

// Solves the homogeneous systems C*A_i = 0 (or A_i*C = 0) over the algebra.
MatrixSubspace annihilator(const MatrixAlgebra& alg, const MatrixSubspace& a,
                           double tol, bool left) {
  if (a.dim() == 0) return full_subspace(alg);
  int rows = a.dim() * alg.n * alg.n;
  MatrixXcd constraints = MatrixXcd::Zero(rows, alg.d);
  for (int i = 0; i < a.dim(); ++i) {
    MatrixXcd ai = alg.to_matrix(a.basis.col(i));
    for (int k = 0; k < alg.d; ++k) {
      VectorXcd unit = VectorXcd::Zero(alg.d);
      unit[k] = 1.0;
      MatrixXcd bk = alg.to_matrix(unit);
      MatrixXcd prod = left ? bk * ai : ai * bk;
      for (int r = 0; r < alg.n; ++r)
        for (int c = 0; c < alg.n; ++c)
          constraints(i * alg.n * alg.n + r * alg.n + c, k) = prod(r, c);
    }
  }
  Eigen::JacobiSVD<MatrixXcd> svd(constraints, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double cutoff = tol * (sv.size() > 0 && sv[0] > 0 ? sv[0] : 1.0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff) ++rank;
  MatrixSubspace s;
  s.basis = svd.matrixV().rightCols(alg.d - rank);
  return s;
}

struct Sampler {
  std::mt19937_64 rng;
  std::normal_distribution<double> gauss;

  explicit Sampler(std::uint64_t seed) : rng(seed), gauss(0.0, 1.0) {}

  VectorXcd vector(int d) {
    VectorXcd v(d);
    for (int i = 0; i < d; ++i) v[i] = cdouble(gauss(rng), gauss(rng));
    return v;
  }

  MatrixSubspace subspace(const MatrixAlgebra& alg, double tol, int dim = -1) {
    if (dim < 0)
      dim = static_cast<int>(rng() % static_cast<std::uint64_t>(alg.d + 1));
    MatrixXcd spans(alg.d, dim);
    for (int c = 0; c < dim; ++c) spans.col(c) = vector(alg.d);
    return canonicalize(alg, spans, tol);
  }
};

void record(SpectrumReport& rep, const std::string& name, bool pass,
            double err, const std::string& detail = "") {
  for (auto& c : rep.checks)
    if (c.name == name) {
      c.pass = c.pass && pass;
      c.max_error = std::max(c.max_error, err);
      if (!pass && c.detail.empty()) c.detail = detail;
      return;
    }
  rep.checks.push_back({name, pass, err, pass ? "" : detail});
}

SpectrumReport run_spectrum_checks(const MatrixAlgebra& alg, int samples,
                                   std::uint64_t seed, double tol) {
  SpectrumReport rep;
  rep.dims = alg.dims;
  rep.samples = samples;
  rep.seed = seed;
  rep.tol = tol;
  Sampler smp(seed);

  MatrixSubspace e = span_identity(alg, tol);
  MatrixSubspace full = full_subspace(alg);
  MatrixSubspace d = trace_perp(alg, e, tol);
  record(rep, "traceless-dim", d.dim() == alg.d - 1,
         std::abs(d.dim() - (alg.d - 1)));

  for (int it = 0; it < samples; ++it) {
    MatrixSubspace a = smp.subspace(alg, tol);

    // (i) double trace-perp returns the subspace.
    MatrixSubspace pp = trace_perp(alg, trace_perp(alg, a, tol), tol);
    record(rep, "double-perp",
           pp.dim() == a.dim() && subspace_distance(pp, a) <= tol,
           subspace_distance(pp, a));

    // dim a + dim a-perp = dim of the algebra, exactly.
    MatrixSubspace p = trace_perp(alg, a, tol);
    record(rep, "dim-sum", a.dim() + p.dim() == alg.d,
           std::abs(a.dim() + p.dim() - alg.d));

    // (ii) trace cyclicity on matrix samples.
    {
      VectorXcd u = smp.vector(alg.d), v = smp.vector(alg.d);
      MatrixXcd mu = alg.to_matrix(u), mv = alg.to_matrix(v);
      cdouble t1 = (mu * mv).trace(), t2 = (mv * mu).trace();
      double rel = std::abs(t1 - t2) / std::max(1.0, std::abs(t1));
      record(rep, "trace-cyclic", rel <= 1e-12, rel);
    }

    // Cyclicity at the subspace level: a.c <= d iff c.a <= d, for the
    // guaranteed-orthogonal partner and for an unrelated random subspace.
    {
      auto below_d = [&](const MatrixSubspace& x, const MatrixSubspace& y) {
        double worst = 0;
        for (int i = 0; i < x.dim(); ++i) {
          MatrixXcd xi = alg.to_matrix(x.basis.col(i));
          for (int j = 0; j < y.dim(); ++j)
            worst = std::max(
                worst,
                std::abs((xi * alg.to_matrix(y.basis.col(j))).trace()));
        }
        return worst;
      };
      double lr = below_d(a, p), rl = below_d(p, a);
      record(rep, "cyclic-partner", lr <= tol && rl <= tol,
             std::max(lr, rl));
      MatrixSubspace c = smp.subspace(alg, tol);
      bool l = below_d(a, c) <= tol, r = below_d(c, a) <= tol;
      record(rep, "cyclic-agree", l == r, l == r ? 0.0 : 1.0);
    }

    // (iii) d is dualizing: the residual into d is involutive and agrees
    // with the trace-perp computed on the independent route.
    MatrixSubspace res = residual_into_d(alg, a, tol);
    record(rep, "residual-route",
           res.dim() == p.dim() && subspace_distance(res, p) <= tol,
           subspace_distance(res, p));
    MatrixSubspace rr = residual_into_d(alg, res, tol);
    record(rep, "dualizing",
           rr.dim() == a.dim() && subspace_distance(rr, a) <= tol,
           subspace_distance(rr, a));

    // (iv) span{I} is neutral.
    MatrixSubspace ea = subspace_product(alg, e, a, tol);
    MatrixSubspace ae = subspace_product(alg, a, e, tol);
    record(rep, "unit-neutral",
           subspace_equal(ea, a, tol) && subspace_equal(ae, a, tol),
           std::max(subspace_distance(ea, a), subspace_distance(ae, a)));

    // Sampled associativity of the subspace product.
    {
      MatrixSubspace b = smp.subspace(alg, tol, std::min(2, alg.d));
      MatrixSubspace c = smp.subspace(alg, tol, std::min(2, alg.d));
      MatrixSubspace ab_c =
          subspace_product(alg, subspace_product(alg, a, b, tol), c, tol);
      MatrixSubspace a_bc =
          subspace_product(alg, a, subspace_product(alg, b, c, tol), tol);
      record(rep, "product-assoc",
             ab_c.dim() == a_bc.dim() && subspace_distance(ab_c, a_bc) <= tol,
             subspace_distance(ab_c, a_bc));
    }

    // Perp is order-reversing: extend a by one vector and compare perps.
    {
      MatrixXcd wider(alg.d, a.dim() + 1);
      wider.leftCols(a.dim()) = a.basis;
      wider.col(a.dim()) = smp.vector(alg.d);
      MatrixSubspace b = canonicalize(alg, wider, tol);
      MatrixSubspace pb = trace_perp(alg, b, tol);
      record(rep, "perp-antitone", containment_residual(pb, p) <= tol,
             containment_residual(pb, p));
    }

    // (v) Ideals: r = span{X}.M is a right ideal; its left annihilator is a
    // left ideal whose right annihilator recovers r.
    {
      MatrixSubspace x = smp.subspace(alg, tol, 1);
      MatrixSubspace r = subspace_product(alg, x, full, tol);
      MatrixSubspace rm = subspace_product(alg, r, full, tol);
      record(rep, "right-ideal", containment_residual(rm, r) <= tol,
             containment_residual(rm, r));
      MatrixSubspace l = annihilator(alg, r, tol, true);
      MatrixSubspace ml = subspace_product(alg, full, l, tol);
      record(rep, "annihilator-left-ideal",
             containment_residual(ml, l) <= tol, containment_residual(ml, l));
      MatrixSubspace back = annihilator(alg, l, tol, false);
      record(rep, "annihilator-roundtrip",
             back.dim() == r.dim() && subspace_distance(back, r) <= tol,
             subspace_distance(back, r));
    }
  }
  return rep;
}

}  // namespace

MatrixSubspace left_annihilator(const MatrixAlgebra& alg,
                                const MatrixSubspace& a, double tol) {
  return annihilator(alg, a, tol, true);
}

MatrixSubspace right_annihilator(const MatrixAlgebra& alg,
                                 const MatrixSubspace& a, double tol) {
  return annihilator(alg, a, tol, false);
}

SpectrumReport check_girard_sampled(int n, int samples, std::uint64_t seed,
                                    double tol) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be positive");
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  return run_spectrum_checks(MatrixAlgebra::full(n), samples, seed, tol);
}

SpectrumReport product_algebra_spectrum(const std::vector<int>& dims,
                                        int samples, std::uint64_t seed,
                                        double tol) {
  if (dims.empty()) throw std::invalid_argument("need at least one block");
  int sq = 0;
  for (int b : dims) sq += b * b;
  if (sq > 32)
    throw std::invalid_argument("sum of squared block sizes is capped at 32");
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  return run_spectrum_checks(MatrixAlgebra::blocks(dims), samples, seed, tol);
}

}  // namespace girard
