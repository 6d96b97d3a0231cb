#include "gkit/linalg.hpp"

#include <algorithm>

namespace gkit {

SparseVec axpy(const SparseVec& y, const Rational& a, const SparseVec& x) {
  SparseVec out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      Rational v = y[i].second + a * x[j].second;
      if (v != 0) out.emplace_back(y[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec scaled(const SparseVec& x, const Rational& a) {
  if (a == 0) return {};
  SparseVec out = x;
  for (auto& e : out) e.second *= a;
  return out;
}

SparseVec make_sparse(std::vector<std::pair<int, Rational>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& e : entries) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
      if (out.back().second == 0) out.pop_back();
    } else if (e.second != 0) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
  std::vector<std::pair<int, Rational>> acc;
  for (const auto& [j, c] : v)
    for (const auto& [i, a] : columns[static_cast<std::size_t>(j)]) acc.emplace_back(i, c * a);
  return make_sparse(std::move(acc));
}

SparseMatrix SparseMatrix::compose(const SparseMatrix& other) const {
  SparseMatrix out(rows, other.cols);
  for (int j = 0; j < other.cols; ++j) out.columns[static_cast<std::size_t>(j)] = apply(other.columns[static_cast<std::size_t>(j)]);
  return out;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns.begin(), columns.end(), [](const SparseVec& c) { return c.empty(); });
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows, a.cols);
  for (int j = 0; j < a.cols; ++j)
    out.columns[static_cast<std::size_t>(j)] = axpy(a.columns[static_cast<std::size_t>(j)], 1, b.columns[static_cast<std::size_t>(j)]);
  return out;
}

EchelonBasis::EchelonBasis(int dim, bool track) : dim_(dim), track_(track), pivot_row_(static_cast<std::size_t>(dim), -1) {}

SparseVec EchelonBasis::reduce(const SparseVec& v, SparseVec* combo) const {
  // Rows are stored with their pivot in front, so eliminating the leading
  // entry never touches smaller indices. A vector with a free leading index
  // is outside the span.
  SparseVec r = v;
  while (!r.empty()) {
    int row = pivot_row_[static_cast<std::size_t>(r.front().first)];
    if (row < 0) break;
    const SparseVec& p = rows_[static_cast<std::size_t>(row)];
    Rational f = r.front().second / p.front().second;
    r = axpy(r, -f, p);
    if (combo && track_) *combo = axpy(*combo, f, combos_[static_cast<std::size_t>(row)]);
  }
  return r;
}

bool EchelonBasis::insert(const SparseVec& v, int tag) {
  SparseVec combo;
  SparseVec r;
  if (track_) {
    r = reduce(v, &combo);
    // v = r + combo  =>  r = v - combo
    combo = scaled(combo, -1);
    combo = axpy(combo, 1, SparseVec{{tag, Rational(1)}});
  } else {
    r = reduce(v);
  }
  if (r.empty()) {
    if (track_) kernel_.push_back(std::move(combo));
    return false;
  }
  pivot_row_[static_cast<std::size_t>(r.front().first)] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  if (track_) combos_.push_back(std::move(combo));
  return true;
}

std::size_t rank(const SparseMatrix& m) {
  // Later columns tend to be sparser in the leading rows; inserting them
  // first keeps fill-in low.
  EchelonBasis basis(m.rows);
  for (auto it = m.columns.rbegin(); it != m.columns.rend(); ++it) basis.insert(*it);
  return basis.rank();
}

KernelImage kernel_of(const SparseMatrix& m) {
  EchelonBasis basis(m.rows, true);
  for (int j = m.cols - 1; j >= 0; --j) basis.insert(m.columns[static_cast<std::size_t>(j)], j);
  KernelImage out;
  out.rank = basis.rank();
  out.kernel = basis.kernel();
  return out;
}

std::optional<SparseVec> solve(const SparseMatrix& m, const SparseVec& rhs) {
  EchelonBasis basis(m.rows, true);
  for (int j = 0; j < m.cols; ++j) basis.insert(m.columns[static_cast<std::size_t>(j)], j);
  SparseVec combo;
  SparseVec r = basis.reduce(rhs, &combo);
  if (!r.empty()) return std::nullopt;
  return combo;
}

std::size_t induced_rank(const SparseMatrix& f, const std::vector<SparseVec>& cycles,
                         const std::vector<SparseVec>& boundaries, int target_dim) {
  EchelonBasis basis(target_dim);
  for (const auto& b : boundaries) basis.insert(b);
  return induced_rank(f, cycles, std::move(basis));
}

std::size_t induced_rank(const SparseMatrix& f, const std::vector<SparseVec>& cycles, EchelonBasis boundaries) {
  const std::size_t base = boundaries.rank();
  for (const auto& z : cycles) boundaries.insert(f.apply(z));
  return boundaries.rank() - base;
}

}  // namespace gkit
