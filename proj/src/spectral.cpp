#include "steklov/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "steklov/random.hpp"

namespace steklov {

namespace {

void check_length(const BoundedGraph& g, std::size_t size) {
  if (static_cast<int>(size) != g.num_vertices())
    throw Error(ErrorCode::DimensionMismatch, "vertex function has length " + std::to_string(size) +
                                                  ", expected " + std::to_string(g.num_vertices()));
}

Matrix block(const Matrix& l, std::span<const Vertex> rows, std::span<const Vertex> cols) {
  Matrix out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = l(rows[i], cols[j]);
  return out;
}

double boundary_mass(const BoundedGraph& g, std::span<const double> f) {
  double mass = 0.0;
  for (Vertex b : g.boundary()) mass += f[b] * f[b];
  return mass;
}

}  // namespace

SymmetricEigen symmetric_eigen(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a, Eigen::ComputeEigenvectors);
  SymmetricEigen out{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index k = 0; k < out.vectors.cols(); ++k) {
    Eigen::Index arg = 0;
    out.vectors.col(k).cwiseAbs().maxCoeff(&arg);
    if (out.vectors(arg, k) < 0.0) out.vectors.col(k) *= -1.0;
  }
  return out;
}

Vector symmetric_eigenvalues(const Matrix& a) {
  return Eigen::SelfAdjointEigenSolver<Matrix>(a, Eigen::EigenvaluesOnly).eigenvalues();
}

Matrix laplacian(const BoundedGraph& g) {
  const int n = g.num_vertices();
  Matrix l = Matrix::Zero(n, n);
  for (const auto& e : g.edges()) {
    l(e.u, e.u) += 1.0;
    l(e.v, e.v) += 1.0;
    l(e.u, e.v) = -1.0;
    l(e.v, e.u) = -1.0;
  }
  return l;
}

Matrix principal_submatrix(const Matrix& a, std::span<const Vertex> index) {
  return block(a, index, index);
}

InteriorSolver::InteriorSolver(const BoundedGraph& g)
    : size_(static_cast<Eigen::Index>(g.interior().size())) {
  if (size_ == 0) return;
  const Matrix l = laplacian(g);
  const Matrix interior = principal_submatrix(l, g.interior());
  llt_.compute(interior);
  const double max_diag = interior.diagonal().maxCoeff();
  if (llt_.info() != Eigen::Success)
    throw Error(ErrorCode::SingularInterior, "interior block is not positive definite");
  const Vector pivots = llt_.matrixLLT().diagonal().array().square();
  if (pivots.minCoeff() < 1e-12 * max_diag)
    throw Error(ErrorCode::SingularInterior, "interior Cholesky pivot below 1e-12 * max diagonal");
}

Matrix InteriorSolver::solve(const Matrix& rhs) const {
  Matrix x = llt_.solve(rhs);
  // One step of refinement keeps the relative residual near machine precision.
  const Matrix a = llt_.reconstructedMatrix();
  const Matrix r = rhs - a * x;
  x += llt_.solve(r);
  return x;
}

DtNMatrix dtn_matrix(const BoundedGraph& g) {
  const Matrix l = laplacian(g);
  const auto& b = g.boundary();
  const auto& o = g.interior();
  DtNMatrix out;
  out.boundary = b;
  out.matrix = principal_submatrix(l, b);
  if (!o.empty()) {
    const InteriorSolver solver(g);
    const Matrix l_ob = block(l, o, b);
    out.matrix -= l_ob.transpose() * solver.solve(l_ob);
    out.matrix = 0.5 * (out.matrix + out.matrix.transpose()).eval();
  }
  return out;
}

SteklovSpectrum steklov_spectrum(const DtNMatrix& dtn) {
  auto eig = symmetric_eigen(dtn.matrix);
  return {std::move(eig.values), std::move(eig.vectors), dtn.boundary};
}

SteklovSpectrum steklov_spectrum(const BoundedGraph& g) { return steklov_spectrum(dtn_matrix(g)); }

double dirichlet_energy(const BoundedGraph& g, std::span<const double> f) {
  check_length(g, f.size());
  double energy = 0.0;
  for (const auto& e : g.edges()) {
    const double d = f[e.u] - f[e.v];
    energy += d * d;
  }
  return energy;
}

double rayleigh_quotient(const BoundedGraph& g, std::span<const double> f) {
  check_length(g, f.size());
  if (std::all_of(f.begin(), f.end(), [](double x) { return x == 0.0; }))
    throw Error(ErrorCode::ZeroFunction, "Rayleigh quotient of the zero function");
  const double mass = boundary_mass(g, f);
  if (mass == 0.0) return std::numeric_limits<double>::infinity();
  return dirichlet_energy(g, f) / mass;
}

std::vector<double> harmonic_extension(const BoundedGraph& g, const InteriorSolver& solver,
                                       std::span<const double> boundary_values) {
  const auto& b = g.boundary();
  const auto& o = g.interior();
  if (boundary_values.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "boundary data has length " +
                                                  std::to_string(boundary_values.size()) +
                                                  ", expected " + std::to_string(b.size()));
  std::vector<double> f(static_cast<std::size_t>(g.num_vertices()), 0.0);
  for (std::size_t i = 0; i < b.size(); ++i) f[b[i]] = boundary_values[i];
  if (o.empty()) return f;

  // L_OO f_O = -L_OB f_B = sum of boundary neighbours' values.
  Matrix rhs = Matrix::Zero(static_cast<Eigen::Index>(o.size()), 1);
  for (std::size_t i = 0; i < o.size(); ++i)
    for (Vertex y : g.neighbors(o[i]))
      if (g.is_boundary(y)) rhs(static_cast<Eigen::Index>(i), 0) += f[y];
  const Matrix x = solver.solve(rhs);
  for (std::size_t i = 0; i < o.size(); ++i) f[o[i]] = x(static_cast<Eigen::Index>(i), 0);
  return f;
}

std::vector<double> harmonic_extension(const BoundedGraph& g, std::span<const double> boundary_values) {
  return harmonic_extension(g, InteriorSolver(g), boundary_values);
}

Matrix penalized_laplacian(const BoundedGraph& g, double penalty) {
  if (!(penalty > 0.0)) throw Error(ErrorCode::PreconditionFailed, "penalty must be positive");
  const int n = g.num_vertices();
  Vector d(n);
  for (Vertex v = 0; v < n; ++v) d(v) = g.is_boundary(v) ? 1.0 : penalty;
  return d.asDiagonal() * laplacian(g) * d.asDiagonal();
}

PenalizedSpectrum penalized_spectrum(const BoundedGraph& g, double penalty) {
  return {penalty, symmetric_eigenvalues(penalized_laplacian(g, penalty))};
}

double embedding_quotient(const BoundedGraph& g, const Matrix& vectors) {
  if (vectors.rows() != g.num_vertices())
    throw Error(ErrorCode::DimensionMismatch, "need one vector per vertex");
  Vector centroid = Vector::Zero(vectors.cols());
  double mass = 0.0;
  for (Vertex b : g.boundary()) {
    centroid += vectors.row(b).transpose();
    mass += vectors.row(b).squaredNorm();
  }
  if (vectors.cols() > 0 && centroid.cwiseAbs().maxCoeff() > 1e-9)
    throw Error(ErrorCode::CentroidNotZero, "boundary vectors must sum to zero");
  if (mass == 0.0) throw Error(ErrorCode::ZeroOnBoundary, "all boundary vectors vanish");
  double energy = 0.0;
  for (const auto& e : g.edges()) energy += (vectors.row(e.u) - vectors.row(e.v)).squaredNorm();
  return energy / mass;
}

VariationForms variation_forms(const BoundedGraph& g, std::span<const double> f) {
  check_length(g, f.size());
  const auto& b = g.boundary();
  const double nb = static_cast<double>(b.size());
  double mean = 0.0;
  for (Vertex x : b) mean += f[x];
  mean /= nb;

  std::vector<double> centred(f.begin(), f.end());
  for (double& x : centred) x -= mean;

  const double energy = dirichlet_energy(g, f);
  double deviation = 0.0;
  for (Vertex x : b) deviation += (f[x] - mean) * (f[x] - mean);
  double pair_sum = 0.0;
  for (Vertex x : b)
    for (Vertex y : b) pair_sum += (f[x] - f[y]) * (f[x] - f[y]);

  VariationForms out;
  out.centred_quotient = rayleigh_quotient(g, centred);
  out.mean_deviation_form = energy / deviation;
  out.pair_sum_form = 2.0 * nb * energy / pair_sum;
  return out;
}

VariationalReport variational_check(const BoundedGraph& g, int trials, std::uint64_t seed) {
  if (!is_connected(g)) throw Error(ErrorCode::PreconditionFailed, "variational check needs a connected graph");
  const auto spectrum = steklov_spectrum(g);
  const InteriorSolver solver(g);
  const int n = g.num_vertices();

  VariationalReport report;
  report.trials = trials;
  report.seed = seed;
  report.sigma2 = spectrum.sigma(2);
  report.min_quotient = std::numeric_limits<double>::infinity();

  Rng rng(seed);
  std::vector<double> f(static_cast<std::size_t>(n));
  for (int t = 0; t < trials; ++t) {
    for (double& x : f) x = rng.normal();
    const auto forms = variation_forms(g, f);
    report.min_quotient = std::min(report.min_quotient, forms.centred_quotient);
    const double scale = std::max(1.0, std::abs(forms.centred_quotient));
    const double err = std::max({std::abs(forms.centred_quotient - forms.mean_deviation_form),
                                 std::abs(forms.centred_quotient - forms.pair_sum_form),
                                 std::abs(forms.mean_deviation_form - forms.pair_sum_form)}) /
                       scale;
    report.max_identity_error = std::max(report.max_identity_error, err);
  }
  report.rayleigh_ok = trials == 0 || report.min_quotient >= report.sigma2 - 1e-8;
  report.identity_ok = report.max_identity_error <= 1e-9;

  std::vector<double> eigvec(spectrum.boundary.size());
  for (std::size_t i = 0; i < eigvec.size(); ++i) eigvec[i] = spectrum.vectors(static_cast<Eigen::Index>(i), 1);
  const auto extended = harmonic_extension(g, solver, eigvec);
  report.eigen_extension_quotient = rayleigh_quotient(g, extended);
  report.eigen_ok = std::abs(report.eigen_extension_quotient - report.sigma2) <= 1e-9;

  std::vector<double> zero_ext(static_cast<std::size_t>(n), 0.0);
  for (std::size_t i = 0; i < eigvec.size(); ++i) zero_ext[spectrum.boundary[i]] = eigvec[i];
  report.zero_extension_quotient = rayleigh_quotient(g, zero_ext);
  report.zero_extension_ok = report.zero_extension_quotient >= report.sigma2 - 1e-8;
  return report;
}

}  // namespace steklov
