#pragma once

#include <map>
#include <vector>

#include "gkit/ginzburg.hpp"
#include "gkit/linalg.hpp"

namespace gkit {

/// Path algebra of a quiver modulo paths longer than N, optionally with a
/// differential. Basis elements are the paths themselves; the product of
/// two basis elements is a basis element or zero.
struct FiniteAlgebra {
  QuiverPtr quiver;
  int truncation = 0;
  std::vector<Path> basis;
  std::map<Path, int> index;
  std::vector<int> degree;
  std::vector<SparseVec> diff;  // empty vectors when there is no differential

  int size() const { return static_cast<int>(basis.size()); }
  bool is_unit(int i) const { return basis[static_cast<std::size_t>(i)].empty(); }
  int src(int i) const { return basis[static_cast<std::size_t>(i)].src; }
  int tgt(int i) const { return basis[static_cast<std::size_t>(i)].tgt; }
  int length(int i) const { return basis[static_cast<std::size_t>(i)].length(); }
  /// Index of the product path, or -1.
  int product(int i, int j) const;
  int unit_at(int vertex) const { return index.at(Path::idempotent(vertex)); }
};

FiniteAlgebra truncated_path_algebra(QuiverPtr quiver, int N, const DerivationTable* diff = nullptr);
inline FiniteAlgebra truncated_algebra(const DGPresentation& p, int N) { return truncated_path_algebra(p.quiver, N, &p.diff); }

}  // namespace gkit
