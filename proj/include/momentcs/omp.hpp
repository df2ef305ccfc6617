#ifndef MOMENTCS_OMP_HPP
#define MOMENTCS_OMP_HPP

#include <Eigen/Core>
#include <vector>

#include "momentcs/dictionary.hpp"

namespace momentcs {

/// Termination for omp_encode: stop when the residual norm drops to
/// residual_threshold or below, or when max_atoms atoms are selected.
/// max_atoms must not exceed the number of selectable (non-excluded) atoms.
struct StoppingRule {
  double residual_threshold = 0.0;
  int max_atoms = 1;
};

/// Result of sparse-coding one vector: selected atoms with their final
/// least-squares coefficients, in selection order. Indices are distinct and
/// never come from the dictionary's excluded set.
struct SparseCode {
  struct Entry {
    int atom = 0;
    double coefficient = 0.0;
  };
  std::vector<Entry> entries;
  double residual_norm = 0.0;

  int iterations() const { return static_cast<int>(entries.size()); }
};

/// Orthogonal Matching Pursuit. Each iteration selects the non-excluded,
/// unselected atom with the largest |<residual, atom>| (lowest index wins
/// exact ties), re-solves all coefficients by least squares over the
/// selected set, and updates the residual. Also stops when the best
/// correlation falls below 1e-12.
SparseCode omp_encode(const Dictionary& dict, const Eigen::VectorXd& target,
                      const StoppingRule& rule);

/// Sum of coefficient * atom over the code entries.
Eigen::VectorXd reconstruct(const Dictionary& dict, const SparseCode& code);

}  // namespace momentcs

#endif
