#include "gkit/finite_algebra.hpp"

#include <algorithm>
#include <functional>

namespace gkit {

int FiniteAlgebra::product(int i, int j) const {
  const Path& a = basis[static_cast<std::size_t>(i)];
  const Path& b = basis[static_cast<std::size_t>(j)];
  if (a.tgt != b.src || a.length() + b.length() > truncation) return -1;
  if (a.empty()) return j;
  if (b.empty()) return i;
  return index.at(*concat(a, b));
}

FiniteAlgebra truncated_path_algebra(QuiverPtr quiver, int N, const DerivationTable* diff) {
  FiniteAlgebra A;
  A.quiver = quiver;
  A.truncation = N;
  const GradedQuiver& q = *quiver;
  std::function<void(Path&)> walk = [&](Path& cur) {
    A.basis.push_back(cur);
    if (cur.length() == N) return;
    for (int a = 0; a < q.num_arrows(); ++a) {
      if (q.arrow(a).src != cur.tgt) continue;
      cur.arrows.push_back(a);
      const int saved = cur.tgt;
      cur.tgt = q.arrow(a).tgt;
      walk(cur);
      cur.tgt = saved;
      cur.arrows.pop_back();
    }
  };
  for (int v = 0; v < q.num_vertices(); ++v) {
    Path p = Path::idempotent(v);
    walk(p);
  }
  std::sort(A.basis.begin(), A.basis.end());
  for (std::size_t i = 0; i < A.basis.size(); ++i) {
    A.index[A.basis[i]] = static_cast<int>(i);
    A.degree.push_back(path_degree(q, A.basis[i]));
  }
  A.diff.resize(A.basis.size());
  if (diff) {
    DerivationTable t = *diff;
    t.truncation = N;
    for (std::size_t i = 0; i < A.basis.size(); ++i) {
      FreeElement img = t.apply(FreeElement::path(quiver, N, A.basis[i]));
      std::vector<std::pair<int, Rational>> entries;
      for (const auto& [p, c] : img.terms()) entries.emplace_back(A.index.at(p), c);
      A.diff[i] = make_sparse(std::move(entries));
    }
  }
  return A;
}

}  // namespace gkit
