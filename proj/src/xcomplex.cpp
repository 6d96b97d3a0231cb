#include "gkit/xcomplex.hpp"

#include <algorithm>

#include "gkit/error.hpp"

namespace gkit {

XComplex build_x_complex(const DGPresentation& p) {
  XComplex x;
  x.quiver = p.quiver;
  const int N = p.truncation;
  x.truncation = N;
  const GradedQuiver& q = *p.quiver;
  const int lowest = -1000000;
  for (const auto& path : paths_in_degrees(q, N, lowest, 1000000))
    if (path.is_cycle()) x.U.push_back(path);
  for (const auto& path : paths_in_degrees(q, N - 1, lowest, 1000000)) {
    for (int v = 0; v < q.num_arrows(); ++v)
      if (path.src == q.arrow(v).tgt && path.tgt == q.arrow(v).src) x.V.push_back({path, v});
  }
  std::sort(x.V.begin(), x.V.end());
  std::map<Path, int> ui;
  std::map<OneForm::Key, int> vi;
  for (std::size_t i = 0; i < x.U.size(); ++i) ui[x.U[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < x.V.size(); ++i) vi[x.V[i]] = static_cast<int>(i);
  const int nu = static_cast<int>(x.U.size());
  const int nv = static_cast<int>(x.V.size());
  auto from_free = [&](const FreeElement& f) {
    std::vector<std::pair<int, Rational>> e;
    for (const auto& [t, c] : f.terms()) e.emplace_back(ui.at(t), c);
    return make_sparse(std::move(e));
  };
  auto from_form = [&](const OneForm& w) {
    std::vector<std::pair<int, Rational>> e;
    for (const auto& [k, c] : w.terms()) e.emplace_back(vi.at(k), c);
    return make_sparse(std::move(e));
  };
  x.d0 = SparseMatrix(nv, nu);
  x.dU = SparseMatrix(nu, nu);
  for (int i = 0; i < nu; ++i) {
    FreeElement u = FreeElement::path(p.quiver, N, x.U[static_cast<std::size_t>(i)]);
    x.d0.columns[static_cast<std::size_t>(i)] = from_form(d_zero(u, N));
    x.dU.columns[static_cast<std::size_t>(i)] = from_free(p.diff.apply(u).with_truncation(N));
  }
  x.d1 = SparseMatrix(nu, nv);
  x.dV = SparseMatrix(nv, nv);
  DerivationTable diff = p.diff;
  diff.truncation = N;
  for (int i = 0; i < nv; ++i) {
    OneForm w(p.quiver, N);
    w.add(x.V[static_cast<std::size_t>(i)].first, x.V[static_cast<std::size_t>(i)].second, 1);
    x.d1.columns[static_cast<std::size_t>(i)] = from_free(d_one(w));
    x.dV.columns[static_cast<std::size_t>(i)] = from_form(form_differential(w, diff));
  }
  return x;
}

XInvariantReport check_x_invariants(const XComplex& x) {
  XInvariantReport r;
  r.d0d1 = x.d0.compose(x.d1).is_zero();
  r.d1d0 = x.d1.compose(x.d0).is_zero();
  auto differ = [](const SparseMatrix& a, const SparseMatrix& b) {
    for (int j = 0; j < a.cols; ++j)
      if (a.columns[static_cast<std::size_t>(j)] != b.columns[static_cast<std::size_t>(j)]) return true;
    return false;
  };
  r.d0_commutes = !differ(x.d0.compose(x.dU), x.dV.compose(x.d0));
  r.d1_commutes = !differ(x.d1.compose(x.dV), x.dU.compose(x.d1));
  return r;
}

MixedComplex x_mixed_complex(const XComplex& x) {
  const GradedQuiver& q = *x.quiver;
  // element (kind, index): kind 0 = U, kind 1 = sigma V
  std::map<int, std::vector<std::pair<int, int>>> by_m;
  std::vector<int> upos(x.U.size()), vpos(x.V.size());
  std::vector<int> um(x.U.size()), vm(x.V.size());
  for (std::size_t i = 0; i < x.U.size(); ++i) {
    um[i] = -path_degree(q, x.U[i]);
    upos[i] = static_cast<int>(by_m[um[i]].size());
    by_m[um[i]].emplace_back(0, static_cast<int>(i));
  }
  for (std::size_t i = 0; i < x.V.size(); ++i) {
    vm[i] = 1 - term_degree(q, x.V[i]);
    vpos[i] = static_cast<int>(by_m[vm[i]].size());
    by_m[vm[i]].emplace_back(1, static_cast<int>(i));
  }
  MixedComplex M;
  const int top = by_m.empty() ? 0 : by_m.rbegin()->first + 1;
  for (int m = 0; m <= top; ++m) M.dims[m] = by_m.count(m) ? static_cast<int>(by_m[m].size()) : 0;
  if (!by_m.empty() && by_m.begin()->first < 0) throw Error(ErrorKind::PreconditionFailed, "X-complex has positive internal degrees");
  for (int m = 0; m <= top; ++m) {
    SparseMatrix b(M.dim(m - 1), M.dim(m));
    SparseMatrix B(M.dim(m + 1), M.dim(m));
    if (by_m.count(m)) {
      const auto& elems = by_m[m];
      for (std::size_t col = 0; col < elems.size(); ++col) {
        const auto [kind, i] = elems[col];
        std::vector<std::pair<int, Rational>> be, Be;
        if (kind == 0) {
          for (const auto& [r, c] : x.dU.columns[static_cast<std::size_t>(i)]) be.emplace_back(upos[static_cast<std::size_t>(r)], c);
          for (const auto& [r, c] : x.d0.columns[static_cast<std::size_t>(i)]) Be.emplace_back(vpos[static_cast<std::size_t>(r)], c);
        } else {
          for (const auto& [r, c] : x.dV.columns[static_cast<std::size_t>(i)]) be.emplace_back(vpos[static_cast<std::size_t>(r)], -c);
          for (const auto& [r, c] : x.d1.columns[static_cast<std::size_t>(i)]) be.emplace_back(upos[static_cast<std::size_t>(r)], c);
        }
        b.columns[col] = make_sparse(std::move(be));
        B.columns[col] = make_sparse(std::move(Be));
      }
    }
    if (m > 0) M.b[m] = std::move(b);
    M.B[m] = std::move(B);
  }
  M.description = "mixed complex of the X-complex, truncation " + std::to_string(x.truncation);
  return M;
}

MixedComplex tensor_hochschild(const DGPresentation& p) {
  const int N = p.truncation;
  FiniteAlgebra A = truncated_algebra(p, N);
  int maxneg = 0;
  for (const auto& a : p.quiver->arrows()) maxneg = std::max(maxneg, -a.degree);
  ChainOptions opt;
  opt.max_tensor = N;
  opt.total_length_cap = N;
  opt.m_max = N * (1 + maxneg) + 1;
  MixedComplex M = hochschild_mixed(A, opt);
  M.edge.clear();
  M.description = "Hochschild chains of the tensor algebra modulo total length > " + std::to_string(N);
  return M;
}

nlohmann::json XComparison::to_json() const {
  nlohmann::json j;
  j["truncation"] = truncation;
  nlohmann::json rows = nlohmann::json::object();
  for (const auto& [m, n] : hochschild) {
    auto it = x_model.find(m);
    rows[std::to_string(m)] = {{"hochschild", n}, {"x_complex", it == x_model.end() ? 0 : it->second}};
  }
  j["HH"] = rows;
  j["agree"] = agree;
  j["mismatched"] = mismatched;
  j["x_invariants"] = {{"d0d1", invariants.d0d1}, {"d1d0", invariants.d1d0}, {"d0_commutes_with_d", invariants.d0_commutes},
                       {"d1_commutes_with_d", invariants.d1_commutes}};
  return j;
}

XComparison x_complex_report(const DGPresentation& p) {
  XComparison out;
  out.truncation = p.truncation;
  XComplex x = build_x_complex(p);
  out.invariants = check_x_invariants(x);
  out.hochschild = hochschild_dims(tensor_hochschild(p));
  out.x_model = hochschild_dims(x_mixed_complex(x));
  std::set<int> degrees;
  for (const auto& [m, n] : out.hochschild) degrees.insert(m);
  for (const auto& [m, n] : out.x_model) degrees.insert(m);
  for (int m : degrees) {
    const int a = out.hochschild.count(m) ? out.hochschild[m] : 0;
    const int b = out.x_model.count(m) ? out.x_model[m] : 0;
    if (a != b) out.mismatched.push_back(m);
  }
  out.agree = out.mismatched.empty() && out.invariants.pass();
  return out;
}

}  // namespace gkit
