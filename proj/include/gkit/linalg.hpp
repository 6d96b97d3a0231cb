#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gkit/rational.hpp"

namespace gkit {

/// Sorted (index, nonzero value) pairs.
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec axpy(const SparseVec& y, const Rational& a, const SparseVec& x);  // y + a*x
SparseVec scaled(const SparseVec& x, const Rational& a);
/// Builds a sorted vector from unsorted entries, summing duplicates.
SparseVec make_sparse(std::vector<std::pair<int, Rational>> entries);

/// Linear map stored column by column: column j is the image of basis vector j.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<SparseVec> columns;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), columns(static_cast<std::size_t>(c)) {}

  SparseVec apply(const SparseVec& v) const;
  /// this * other
  SparseMatrix compose(const SparseMatrix& other) const;
  bool is_zero() const;
};

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);

/// Online Gaussian elimination over exact rationals. Each stored vector keeps
/// its leading index as pivot; optional tracking records every stored vector
/// as a combination of the inserted inputs.
class EchelonBasis {
 public:
  explicit EchelonBasis(int dim, bool track = false);

  /// Returns true when v was independent of the basis. With tracking, `tag`
  /// labels the input (its combination starts as e_tag).
  bool insert(const SparseVec& v, int tag = -1);
  /// Residual of v after reduction; with tracking `combo` receives the
  /// coefficients c with v = residual + sum c_tag * input_tag.
  SparseVec reduce(const SparseVec& v, SparseVec* combo = nullptr) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }
  /// Kernel vectors found so far (tracking mode): combinations of inputs
  /// that reduced to zero.
  const std::vector<SparseVec>& kernel() const { return kernel_; }

 private:
  int dim_;
  bool track_;
  std::vector<SparseVec> rows_;
  std::vector<SparseVec> combos_;
  std::vector<int> pivot_row_;  // leading index -> row, or -1
  std::vector<SparseVec> kernel_;
};

std::size_t rank(const SparseMatrix& m);

struct KernelImage {
  std::size_t rank = 0;
  std::vector<SparseVec> kernel;  // basis of the kernel, vectors in the source
};

KernelImage kernel_of(const SparseMatrix& m);

/// Solves m * x = rhs preferring earlier columns as pivots (free variables
/// zero). nullopt when inconsistent.
std::optional<SparseVec> solve(const SparseMatrix& m, const SparseVec& rhs);

/// Rank of the map induced on homology by f: Z(source) -> target/B(target).
/// `cycles` span the source cycle space, `boundaries` span B(target).
std::size_t induced_rank(const SparseMatrix& f, const std::vector<SparseVec>& cycles,
                         const std::vector<SparseVec>& boundaries, int target_dim);
/// Same, starting from an echelon basis of the boundaries.
std::size_t induced_rank(const SparseMatrix& f, const std::vector<SparseVec>& cycles, EchelonBasis boundaries);

}  // namespace gkit
