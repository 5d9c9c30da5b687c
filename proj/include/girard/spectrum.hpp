#ifndef GIRARD_SPECTRUM_HPP
#define GIRARD_SPECTRUM_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace girard {

/// A finite-dimensional *-algebra of block-diagonal complex matrices,
/// embedded in M_N with N the sum of the block sizes. Subspaces are held in
/// coordinates over the elementary-matrix basis of the algebra, which is
/// orthonormal for the trace inner product <A,B> = tr(A* B).
struct MatrixAlgebra {
  std::vector<int> dims;
  int n = 0;  ///< ambient matrix size (sum of dims)
  int d = 0;  ///< algebra dimension (sum of squares)
  std::vector<std::pair<int, int>> coord_pos;  ///< coord -> (row, col)

  static MatrixAlgebra full(int n);
  static MatrixAlgebra blocks(std::vector<int> dims);

  Eigen::MatrixXcd to_matrix(const Eigen::VectorXcd& coords) const;
  Eigen::VectorXcd from_matrix(const Eigen::MatrixXcd& m) const;
  /// Coordinates of the transpose; stays inside the algebra.
  Eigen::VectorXcd transpose_coords(const Eigen::VectorXcd& coords) const;
  /// Coordinates of the conjugate transpose.
  Eigen::VectorXcd adjoint_coords(const Eigen::VectorXcd& coords) const;
  std::complex<double> trace(const Eigen::VectorXcd& coords) const;
  Eigen::VectorXcd identity_coords() const;
};

/// A subspace of the algebra: orthonormal columns in coordinate space,
/// produced by a deterministic Gram-Schmidt pass with rank cutoff.
struct MatrixSubspace {
  Eigen::MatrixXcd basis;  ///< d x dim, orthonormal columns
  int dim() const { return static_cast<int>(basis.cols()); }
};

/// Deterministic orthogonalization of the given spanning vectors, in input
/// order, dropping vectors whose residual falls under tol relative to their
/// norm.
MatrixSubspace canonicalize(const MatrixAlgebra& alg,
                            const Eigen::MatrixXcd& spans, double tol);

MatrixSubspace zero_subspace(const MatrixAlgebra& alg);
MatrixSubspace full_subspace(const MatrixAlgebra& alg);
MatrixSubspace span_identity(const MatrixAlgebra& alg, double tol);

/// Mutual projection residual; subspaces are equal when this is under tol
/// and the dimensions agree.
double subspace_distance(const MatrixSubspace& a, const MatrixSubspace& b);
bool subspace_equal(const MatrixSubspace& a, const MatrixSubspace& b,
                    double tol);
/// Largest residual of a basis vector of a against the span of b.
double containment_residual(const MatrixSubspace& a, const MatrixSubspace& b);

/// ab = span{ AB | A in a, B in b } (closure is a no-op in finite dimension).
MatrixSubspace subspace_product(const MatrixAlgebra& alg,
                                const MatrixSubspace& a,
                                const MatrixSubspace& b, double tol);

/// { C | tr(AC) = 0 for all A in a }, via the SVD null space of the
/// bilinear constraint matrix.
MatrixSubspace trace_perp(const MatrixAlgebra& alg, const MatrixSubspace& a,
                          double tol);

/// The largest c with c.a contained in the traceless subspace, computed on
/// an independent route (QR complement of the span of adjoints); agrees
/// with trace_perp by trace cyclicity.
MatrixSubspace residual_into_d(const MatrixAlgebra& alg,
                               const MatrixSubspace& a, double tol);

/// { C | C A = 0 for all A in a } and { C | A C = 0 for all A in a }.
MatrixSubspace left_annihilator(const MatrixAlgebra& alg,
                                const MatrixSubspace& a, double tol);
MatrixSubspace right_annihilator(const MatrixAlgebra& alg,
                                 const MatrixSubspace& a, double tol);

struct SpectrumCheck {
  std::string name;
  bool pass = true;
  double max_error = 0.0;
  std::string detail;
};

struct SpectrumReport {
  std::vector<int> dims;
  int samples = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  std::vector<SpectrumCheck> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  double max_error() const {
    double m = 0;
    for (const auto& c : checks) m = std::max(m, c.max_error);
    return m;
  }
};

/// Randomized verification that the subspace lattice of M_n is a Girard
/// quantale under the trace pairing: double-perp identity, trace
/// cyclicity, the traceless subspace dualizing, neutrality of span{I},
/// dimension counts, sampled associativity, antitonicity of perp, and the
/// ideal/annihilator relations.
SpectrumReport check_girard_sampled(int n, int samples, std::uint64_t seed,
                                    double tol = 1e-9);

/// The same suite over the block-diagonal algebra of the given dims.
SpectrumReport product_algebra_spectrum(const std::vector<int>& dims,
                                        int samples, std::uint64_t seed,
                                        double tol = 1e-9);

}  // namespace girard

#endif
