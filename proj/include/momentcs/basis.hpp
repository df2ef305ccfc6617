#ifndef MOMENTCS_BASIS_HPP
#define MOMENTCS_BASIS_HPP

#include <Eigen/Core>
#include <iosfwd>
#include <string_view>

namespace momentcs {

enum class BasisFamily { tchebichef, krawtchouk, dct };

const char* basis_name(BasisFamily family);
BasisFamily parse_basis(std::string_view name);

/// Identifies one 1D transform. krawtchouk_p is meaningful only for the
/// Krawtchouk family and must lie strictly inside (0, 1).
struct BasisKind {
  BasisFamily family = BasisFamily::dct;
  double krawtchouk_p = 0.5;

  static BasisKind tchebichef() { return {BasisFamily::tchebichef, 0.5}; }
  static BasisKind krawtchouk(double p);
  static BasisKind dct() { return {BasisFamily::dct, 0.5}; }
};

/// N x N orthonormal transform matrix. Row n holds the order-n basis
/// function sampled at x = 0..N-1; every row has unit Euclidean norm and
/// rows * rows^T = I to machine accuracy.
struct BasisMatrix {
  int size = 0;
  Eigen::MatrixXd rows;
  BasisKind kind;
};

/// Discrete Chebyshev (Tchebichef) polynomials, evaluated with the
/// orthonormal three-term recurrence over n. Row signs are fixed so that
/// every row of order >= 1 is positive at the last sample.
BasisMatrix tchebichef_basis(int size);

/// Weighted Krawtchouk polynomials for the binomial weight with parameter p,
/// evaluated with the weighted three-term recurrence.
BasisMatrix krawtchouk_basis(int size, double p);

/// Orthonormal type-II DCT: row k, sample x = c(k) * cos(pi*(2x+1)*k / 2N).
BasisMatrix dct_basis(int size);

BasisMatrix make_basis(const BasisKind& kind, int size);

/// Row-major dump, full double precision, '.' decimal separator.
void write_basis_csv(const BasisMatrix& basis, std::ostream& out);

}  // namespace momentcs

#endif
