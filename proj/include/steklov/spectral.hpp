#pragma once

// Laplacian, Dirichlet-to-Neumann matrix and Steklov spectra.
//
// Eigenvalues are indexed from 1 (sigma(1) = 0 for connected graphs) and
// always returned in ascending order.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "steklov/graph.hpp"

namespace steklov {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Dense symmetric eigendecomposition, ascending eigenvalues, each
/// eigenvector sign-fixed so that its largest-magnitude entry is positive.
struct SymmetricEigen {
  Vector values;
  Matrix vectors;  // column k pairs with values(k)
};

SymmetricEigen symmetric_eigen(const Matrix& a);
Vector symmetric_eigenvalues(const Matrix& a);

/// L(x,x) = deg(x), L(x,y) = -1 iff xy is an edge.
Matrix laplacian(const BoundedGraph& g);

/// Principal submatrix of `a` on the given index set.
Matrix principal_submatrix(const Matrix& a, std::span<const Vertex> index);

/// Factorisation of the interior block L_{Omega,Omega}. Refuses with
/// SingularInterior when a Cholesky pivot drops below 1e-12 * max diagonal.
class InteriorSolver {
 public:
  explicit InteriorSolver(const BoundedGraph& g);

  bool empty() const noexcept { return size_ == 0; }
  /// Solves L_{Omega,Omega} X = rhs.
  Matrix solve(const Matrix& rhs) const;

 private:
  Eigen::Index size_ = 0;
  Eigen::LLT<Matrix> llt_;
};

struct DtNMatrix {
  Matrix matrix;                 // |B| x |B|
  std::vector<Vertex> boundary;  // row/column labels
};

/// Schur complement L_BB - L_BO L_OO^{-1} L_OB (equals L when the interior is empty).
DtNMatrix dtn_matrix(const BoundedGraph& g);

struct SteklovSpectrum {
  Vector values;                 // sigma_1 <= ... <= sigma_|B|
  Matrix vectors;                // orthonormal eigenvectors on B, one per column
  std::vector<Vertex> boundary;

  int size() const noexcept { return static_cast<int>(values.size()); }
  /// 1-based access.
  double sigma(int k) const { return values(k - 1); }
};

SteklovSpectrum steklov_spectrum(const BoundedGraph& g);
SteklovSpectrum steklov_spectrum(const DtNMatrix& dtn);

/// Dirichlet energy sum over edges of (f(x) - f(y))^2.
double dirichlet_energy(const BoundedGraph& g, std::span<const double> f);

/// Energy over boundary mass. Returns +infinity when f vanishes on B.
/// Throws ZeroFunction when f is identically zero.
double rayleigh_quotient(const BoundedGraph& g, std::span<const double> f);

/// Extends boundary data (ordered as g.boundary()) harmonically into the interior.
std::vector<double> harmonic_extension(const BoundedGraph& g, std::span<const double> boundary_values);
std::vector<double> harmonic_extension(const BoundedGraph& g, const InteriorSolver& solver,
                                       std::span<const double> boundary_values);

/// Spectrum of D L D with D = diag(1 on B, r on the interior).
struct PenalizedSpectrum {
  double penalty = 1.0;
  Vector values;  // ascending

  double mu(int k) const { return values(k - 1); }
};

Matrix penalized_laplacian(const BoundedGraph& g, double penalty);
PenalizedSpectrum penalized_spectrum(const BoundedGraph& g, double penalty);

/// Sum_E |v_x - v_y|^2 / Sum_B |v_x|^2 for vectors given as rows (n x m).
/// Throws CentroidNotZero when the boundary rows do not sum to zero
/// (1e-9 per coordinate) and ZeroOnBoundary when they all vanish.
double embedding_quotient(const BoundedGraph& g, const Matrix& vectors);

struct VariationalReport {
  int trials = 0;
  std::uint64_t seed = 0;
  double sigma2 = 0.0;
  double min_quotient = 0.0;          // min R(f) over the random samples
  double max_identity_error = 0.0;    // worst relative disagreement of the three forms
  double eigen_extension_quotient = 0.0;  // R(harmonic extension of the sigma_2 eigenvector)
  double zero_extension_quotient = 0.0;   // R(sigma_2 eigenvector extended by 0)
  bool rayleigh_ok = false;
  bool identity_ok = false;
  bool eigen_ok = false;
  bool zero_extension_ok = false;

  bool passed() const { return rayleigh_ok && identity_ok && eigen_ok && zero_extension_ok; }
};

/// Three equal forms of the sigma_2 quotient evaluated at one f:
///   R(f - mean_B f),  energy / Sum_B (f - mean_B f)^2,
///   2|B| energy / Sum over ordered pairs (u,v) in B^2 of (f(u) - f(v))^2.
struct VariationForms {
  double centred_quotient = 0.0;
  double mean_deviation_form = 0.0;
  double pair_sum_form = 0.0;
};

VariationForms variation_forms(const BoundedGraph& g, std::span<const double> f);

/// Samples random f projected orthogonal to 1_B and checks R(f) >= sigma_2
/// together with the pair-sum identity. Requires a connected graph.
VariationalReport variational_check(const BoundedGraph& g, int trials, std::uint64_t seed);

}  // namespace steklov
