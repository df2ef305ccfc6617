#ifndef MOMENTCS_DICTIONARY_HPP
#define MOMENTCS_DICTIONARY_HPP

#include <Eigen/Core>
#include <iosfwd>
#include <vector>

#include "momentcs/basis.hpp"
#include "momentcs/image.hpp"

namespace momentcs {

/// Patch dictionary: columns are vectorized 2D atoms with unit Euclidean
/// norm. For separable dictionaries built from an s x s patch, column
/// n*s + m is the row-major vectorization of the outer product of 1D basis
/// rows n (patch-row direction) and m (patch-column direction).
///
/// Atoms flagged in `excluded` are never selected by omp_encode. By default
/// the DC atom (index 0) is excluded; patches are mean-subtracted before
/// coding so its coefficient carries no information.
struct Dictionary {
  int patch_size = 0;  // 0 when built from raw atoms
  Eigen::MatrixXd atoms;
  BasisKind row_kind;
  BasisKind col_kind;
  std::vector<char> excluded;

  int atom_dim() const { return static_cast<int>(atoms.rows()); }
  int atom_count() const { return static_cast<int>(atoms.cols()); }
  bool is_excluded(int atom) const { return excluded[static_cast<size_t>(atom)] != 0; }
  void set_excluded(int atom, bool value);
  int excluded_count() const;

  /// Wraps an arbitrary atom matrix (columns = atoms, not necessarily
  /// square or unit-norm) with no exclusions. Intended for experiments and
  /// tests; render_atlas requires a separable dictionary.
  static Dictionary from_atoms(Eigen::MatrixXd atoms);
};

/// Builds the separable 2D dictionary for one basis family. For the
/// Krawtchouk family, p1 parametrizes the patch-row direction and p2 the
/// patch-column direction; both are ignored otherwise.
Dictionary build_dictionary(const BasisKind& kind, int patch_size,
                            double p1 = 0.5, double p2 = 0.5);

/// Largest absolute inner product between two distinct atoms after
/// normalizing every column to unit norm. Zero for orthonormal dictionaries.
double mutual_coherence(const Eigen::MatrixXd& atoms);
double mutual_coherence(const Dictionary& dict);

/// Renders the s x s grid of atom tiles. Each tile is mapped affinely so
/// its minimum becomes 0 and its maximum 255 (constant tiles become
/// mid-gray 128); tiles are separated by `gap` pixels of value 255.
GrayImage render_atlas(const Dictionary& dict, int gap);

/// One atom per line, comma separated, full double precision.
void write_dictionary_csv(const Dictionary& dict, std::ostream& out);

}  // namespace momentcs

#endif
