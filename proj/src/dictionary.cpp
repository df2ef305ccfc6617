#include "momentcs/dictionary.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace momentcs {

void Dictionary::set_excluded(int atom, bool value) {
  if (atom < 0 || atom >= atom_count())
    throw std::invalid_argument("set_excluded: atom index out of range");
  excluded[static_cast<size_t>(atom)] = value ? 1 : 0;
}

int Dictionary::excluded_count() const {
  int n = 0;
  for (char e : excluded) n += (e != 0);
  return n;
}

Dictionary Dictionary::from_atoms(Eigen::MatrixXd atoms) {
  if (atoms.rows() < 1 || atoms.cols() < 1)
    throw std::invalid_argument("from_atoms: empty atom matrix");
  Dictionary d;
  d.patch_size = 0;
  d.atoms = std::move(atoms);
  d.excluded.assign(static_cast<size_t>(d.atoms.cols()), 0);
  return d;
}

Dictionary build_dictionary(const BasisKind& kind, int patch_size, double p1, double p2) {
  if (patch_size < 2)
    throw std::invalid_argument("build_dictionary: patch_size must be >= 2");

  BasisKind row_kind = kind;
  BasisKind col_kind = kind;
  if (kind.family == BasisFamily::krawtchouk) {
    row_kind = BasisKind::krawtchouk(p1);
    col_kind = BasisKind::krawtchouk(p2);
  }
  const BasisMatrix row_basis = make_basis(row_kind, patch_size);
  const BasisMatrix col_basis =
      (kind.family == BasisFamily::krawtchouk && p1 != p2)
          ? make_basis(col_kind, patch_size)
          : row_basis;

  const int s = patch_size;
  const int d = s * s;
  Dictionary dict;
  dict.patch_size = s;
  dict.row_kind = row_kind;
  dict.col_kind = col_kind;
  dict.atoms.resize(d, d);
  for (int n = 0; n < s; ++n) {
    for (int m = 0; m < s; ++m) {
      const int a = n * s + m;
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
          dict.atoms(i * s + j, a) = row_basis.rows(n, i) * col_basis.rows(m, j);
    }
  }
  dict.excluded.assign(static_cast<size_t>(d), 0);
  dict.excluded[0] = 1;  // DC atom; patches are mean-subtracted
  return dict;
}

double mutual_coherence(const Eigen::MatrixXd& atoms) {
  if (atoms.cols() < 2)
    throw std::invalid_argument("mutual_coherence: need at least 2 atoms");
  Eigen::MatrixXd unit = atoms;
  for (Eigen::Index j = 0; j < unit.cols(); ++j) {
    const double n = unit.col(j).norm();
    if (n > 0.0) unit.col(j) /= n;
  }
  const Eigen::MatrixXd gram = unit.transpose() * unit;
  double best = 0.0;
  for (Eigen::Index i = 0; i < gram.rows(); ++i)
    for (Eigen::Index j = 0; j < gram.cols(); ++j)
      if (i != j) best = std::max(best, std::abs(gram(i, j)));
  return best;
}

double mutual_coherence(const Dictionary& dict) { return mutual_coherence(dict.atoms); }

GrayImage render_atlas(const Dictionary& dict, int gap) {
  const int s = dict.patch_size;
  if (s < 1 || dict.atom_dim() != s * s || dict.atom_count() != s * s)
    throw std::invalid_argument("render_atlas: dictionary is not a separable s*s grid");
  if (gap < 0) throw std::invalid_argument("render_atlas: gap must be >= 0");

  const int side = s * s + (s - 1) * gap;
  GrayImage img(side, side, 255.0);
  for (int n = 0; n < s; ++n) {
    for (int m = 0; m < s; ++m) {
      const auto atom = dict.atoms.col(n * s + m);
      const double lo = atom.minCoeff();
      const double hi = atom.maxCoeff();
      const bool flat = (hi - lo) < 1e-12;
      const int r0 = n * (s + gap);
      const int c0 = m * (s + gap);
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
          img.at(r0 + i, c0 + j) =
              flat ? 128.0 : (atom(i * s + j) - lo) / (hi - lo) * 255.0;
    }
  }
  return img;
}

void write_dictionary_csv(const Dictionary& dict, std::ostream& out) {
  char buf[64];
  for (int a = 0; a < dict.atom_count(); ++a) {
    for (int i = 0; i < dict.atom_dim(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g", dict.atoms(i, a));
      out << (i ? "," : "") << buf;
    }
    out << '\n';
  }
}

}  // namespace momentcs
