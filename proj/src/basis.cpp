#include "momentcs/basis.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace momentcs {

const char* basis_name(BasisFamily family) {
  switch (family) {
    case BasisFamily::tchebichef: return "tchebichef";
    case BasisFamily::krawtchouk: return "krawtchouk";
    case BasisFamily::dct: return "dct";
  }
  return "?";
}

BasisFamily parse_basis(std::string_view name) {
  if (name == "tchebichef") return BasisFamily::tchebichef;
  if (name == "krawtchouk") return BasisFamily::krawtchouk;
  if (name == "dct") return BasisFamily::dct;
  throw std::invalid_argument("unknown basis '" + std::string(name) +
                              "' (expected tchebichef, krawtchouk or dct)");
}

BasisKind BasisKind::krawtchouk(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("krawtchouk p must lie strictly inside (0, 1)");
  return {BasisFamily::krawtchouk, p};
}

namespace {

void renormalize_rows(Eigen::MatrixXd& m) {
  for (Eigen::Index n = 0; n < m.rows(); ++n) m.row(n) /= m.row(n).norm();
}

void require_size(int size, const char* fn) {
  if (size < 1)
    throw std::invalid_argument(std::string(fn) + ": size must be >= 1");
}

}  // namespace

BasisMatrix tchebichef_basis(int size) {
  require_size(size, "tchebichef_basis");
  const double N = size;

  // The unit-norm polynomials satisfy the symmetric three-term recurrence
  //   x*t_n(x) = beta(n+1)*t_{n+1}(x) + ((N-1)/2)*t_n(x) + beta(n)*t_{n-1}(x)
  // with beta(m) = (m/2)*sqrt((N^2 - m^2)/(4m^2 - 1)). Column x of the
  // transform is the eigenvector of the tridiagonal Jacobi matrix for
  // eigenvalue x; the symmetric eigensolve stays accurate at any size,
  // where running the recurrence upward in n falls apart near N = 64.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(size, size);
  for (int n = 0; n < size; ++n) jacobi(n, n) = (N - 1.0) / 2.0;
  for (int n = 0; n + 1 < size; ++n) {
    const double m = n + 1.0;
    const double beta = 0.5 * m * std::sqrt((N * N - m * m) / (4.0 * m * m - 1.0));
    jacobi(n, n + 1) = beta;
    jacobi(n + 1, n) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("tchebichef_basis: eigensolve failed");
  const Eigen::MatrixXd& vec = es.eigenvectors();  // eigenvalues ascending = x

  // Order 0 is the constant 1/sqrt(N), so every column's first entry pins
  // that column's sign.
  Eigen::MatrixXd rows(size, size);
  for (int x = 0; x < size; ++x) {
    const double s = vec(0, x) >= 0.0 ? 1.0 : -1.0;
    for (int n = 0; n < size; ++n) rows(n, x) = s * vec(n, x);
  }

  renormalize_rows(rows);
  // Pin row signs: the raw polynomials have a positive leading coefficient,
  // so every order >= 1 is positive at the last sample.
  for (int n = 1; n < size; ++n)
    if (rows(n, size - 1) < 0.0) rows.row(n) = -rows.row(n);

  return {size, std::move(rows), BasisKind::tchebichef()};
}

BasisMatrix krawtchouk_basis(int size, double p) {
  require_size(size, "krawtchouk_basis");
  const BasisKind kind = BasisKind::krawtchouk(p);
  if (size == 1) return {1, Eigen::MatrixXd::Ones(1, 1), kind};
  const double q = 1.0 - p;
  const double Np = size - 1;  // polynomial parameter: samples 0..Np

  // The weighted polynomials satisfy a symmetric three-term recurrence in
  // the order n:
  //   x*Kw_n(x) = -t(n+1)*Kw_{n+1}(x) + (p*(Np-n) + n*q)*Kw_n(x) - t(n)*Kw_{n-1}(x)
  // with t(n) = sqrt(p*q*n*(Np-n+1)). Packing those coefficients into a
  // tridiagonal Jacobi matrix makes column x of the transform the unit
  // eigenvector for eigenvalue x. The symmetric eigensolve stays accurate
  // at any size, where the forward recurrence drifts by ~1e-1 near N = 64
  // inside the exponentially small weight tails.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(size, size);
  for (int n = 0; n < size; ++n) jacobi(n, n) = p * (Np - n) + n * q;
  for (int n = 0; n + 1 < size; ++n) {
    const double t = -std::sqrt(p * q * (n + 1.0) * (Np - n));
    jacobi(n, n + 1) = t;
    jacobi(n + 1, n) = t;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("krawtchouk_basis: eigensolve failed");
  const Eigen::MatrixXd& vec = es.eigenvectors();  // eigenvalues ascending = x

  // The eigensolver leaves each column's sign arbitrary. The true transform
  // matrix is symmetric (w(x)*rho(x) is constant in x), so the sign of
  // column j follows from any already-fixed column i via
  // M(i,j) = M(j,i); column 0 is entrywise positive (K_n(0) = 1).
  Eigen::VectorXd sign(size);
  int i0 = 0;
  vec.col(0).cwiseAbs().maxCoeff(&i0);
  sign(0) = vec(i0, 0) > 0.0 ? 1.0 : -1.0;
  for (int j = 1; j < size; ++j) {
    int i = 0;
    vec.col(j).head(j).cwiseAbs().maxCoeff(&i);
    const double fixed_entry = sign(i) * vec(j, i);  // = M(j, i)
    sign(j) = (fixed_entry * vec(i, j) > 0.0) ? 1.0 : -1.0;
  }

  Eigen::MatrixXd rows(size, size);
  for (int n = 0; n < size; ++n)
    for (int x = 0; x < size; ++x) rows(n, x) = sign(x) * vec(n, x);
  renormalize_rows(rows);
  return {size, std::move(rows), kind};
}

BasisMatrix dct_basis(int size) {
  require_size(size, "dct_basis");
  const double N = size;
  Eigen::MatrixXd rows(size, size);
  for (int k = 0; k < size; ++k) {
    const double c = (k == 0) ? 1.0 / std::sqrt(N) : std::sqrt(2.0 / N);
    for (int x = 0; x < size; ++x)
      rows(k, x) = c * std::cos(M_PI * (2.0 * x + 1.0) * k / (2.0 * N));
  }
  return {size, std::move(rows), BasisKind::dct()};
}

BasisMatrix make_basis(const BasisKind& kind, int size) {
  switch (kind.family) {
    case BasisFamily::tchebichef: return tchebichef_basis(size);
    case BasisFamily::krawtchouk: return krawtchouk_basis(size, kind.krawtchouk_p);
    case BasisFamily::dct: return dct_basis(size);
  }
  throw std::invalid_argument("make_basis: bad family");
}

void write_basis_csv(const BasisMatrix& basis, std::ostream& out) {
  char buf[64];
  for (int n = 0; n < basis.size; ++n) {
    for (int x = 0; x < basis.size; ++x) {
      std::snprintf(buf, sizeof(buf), "%.17g", basis.rows(n, x));
      out << (x ? "," : "") << buf;
    }
    out << '\n';
  }
}

}  // namespace momentcs
