#include "momentcs/omp.hpp"

#include <cmath>
#include <stdexcept>

namespace momentcs {

namespace {
constexpr double kCorrelationFloor = 1e-12;
}

SparseCode omp_encode(const Dictionary& dict, const Eigen::VectorXd& target,
                      const StoppingRule& rule) {
  const Eigen::MatrixXd& A = dict.atoms;
  const int d = dict.atom_dim();
  const int m = dict.atom_count();
  if (target.size() != d)
    throw std::invalid_argument("omp_encode: target dimension does not match dictionary");
  if (!target.allFinite())
    throw std::invalid_argument("omp_encode: target contains non-finite values");
  if (!(rule.residual_threshold >= 0.0))
    throw std::invalid_argument("omp_encode: residual_threshold must be >= 0");
  const int available = m - dict.excluded_count();
  if (rule.max_atoms < 1 || rule.max_atoms > available)
    throw std::invalid_argument("omp_encode: max_atoms must be in [1, selectable atoms]");

  const int kmax = rule.max_atoms;
  Eigen::MatrixXd Q(d, kmax);                            // orthonormal span of selected atoms
  Eigen::MatrixXd R = Eigen::MatrixXd::Zero(kmax, kmax); // upper-triangular factor
  Eigen::VectorXd qty(kmax);
  Eigen::VectorXd r = target;
  std::vector<char> used(static_cast<size_t>(m), 0);
  for (int a = 0; a < m; ++a) used[static_cast<size_t>(a)] = dict.is_excluded(a) ? 1 : 0;

  std::vector<int> selected;
  selected.reserve(static_cast<size_t>(kmax));

  while (static_cast<int>(selected.size()) < kmax && r.norm() > rule.residual_threshold) {
    const Eigen::VectorXd corr = A.transpose() * r;
    int best = -1;
    double best_abs = -1.0;
    for (int a = 0; a < m; ++a) {
      if (used[static_cast<size_t>(a)]) continue;
      const double c = std::abs(corr(a));
      if (c > best_abs) {  // strict: lowest index wins exact ties
        best_abs = c;
        best = a;
      }
    }
    if (best < 0 || best_abs < kCorrelationFloor) break;

    const int k = static_cast<int>(selected.size());
    // Append the atom to the QR factorization: modified Gram-Schmidt with
    // one reorthogonalization pass so the coefficients agree with a
    // from-scratch least-squares solve well below 1e-9.
    Eigen::VectorXd v = A.col(best);
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < k; ++i) {
        const double h = Q.col(i).dot(v);
        R(i, k) += h;
        v -= h * Q.col(i);
      }
    }
    const double nrm = v.norm();
    if (nrm <= 1e-14) break;  // atom numerically inside the selected span
    R(k, k) = nrm;
    Q.col(k) = v / nrm;
    const double t = Q.col(k).dot(r);
    qty(k) = t;
    r -= t * Q.col(k);
    used[static_cast<size_t>(best)] = 1;
    selected.push_back(best);
  }

  const int k = static_cast<int>(selected.size());
  Eigen::VectorXd coeff(k);
  for (int i = k - 1; i >= 0; --i) {
    double s = qty(i);
    for (int j = i + 1; j < k; ++j) s -= R(i, j) * coeff(j);
    coeff(i) = s / R(i, i);
  }

  SparseCode code;
  code.entries.reserve(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) code.entries.push_back({selected[static_cast<size_t>(i)], coeff(i)});
  code.residual_norm = r.norm();
  return code;
}

Eigen::VectorXd reconstruct(const Dictionary& dict, const SparseCode& code) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dict.atom_dim());
  for (const SparseCode::Entry& e : code.entries) {
    if (e.atom < 0 || e.atom >= dict.atom_count())
      throw std::invalid_argument("reconstruct: atom index out of range");
    out += e.coefficient * dict.atoms.col(e.atom);
  }
  return out;
}

}  // namespace momentcs
