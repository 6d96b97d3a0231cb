#include "gkit/hochschild.hpp"

#include <functional>
#include <tuple>
#include <unordered_map>

#include "gkit/error.hpp"

namespace gkit {

int MixedComplex::dim(int m) const {
  auto it = dims.find(m);
  return it == dims.end() ? 0 : it->second;
}

SparseMatrix MixedComplex::b_at(int m) const {
  auto it = b.find(m);
  return it != b.end() ? it->second : SparseMatrix(dim(m - 1), dim(m));
}

SparseMatrix MixedComplex::B_at(int m) const {
  auto it = B.find(m);
  return it != B.end() ? it->second : SparseMatrix(dim(m + 1), dim(m));
}

namespace {

struct ChainHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 1);
    return h;
  }
};

struct ChainSpace {
  std::vector<std::vector<int>> chains;
  std::unordered_map<std::vector<int>, int, ChainHash> index;
};


}  // namespace

MixedComplex hochschild_mixed(const FiniteAlgebra& A, const ChainOptions& opt) {
  for (int i = 0; i < A.size(); ++i)
    if (A.degree[static_cast<std::size_t>(i)] > 0)
      throw Error(ErrorKind::PreconditionFailed, "chain enumeration needs basis degrees <= 0");
  if (opt.m_max < 1 || opt.max_tensor < 1) throw Error(ErrorKind::WindowTooNarrow, "need at least homological degrees 0..1");
  const int cap = opt.total_length_cap.value_or(-1);

  std::vector<std::vector<int>> by_source(static_cast<std::size_t>(A.quiver->num_vertices()));
  for (int i = 0; i < A.size(); ++i)
    if (!A.is_unit(i)) by_source[static_cast<std::size_t>(A.src(i))].push_back(i);

  std::map<int, ChainSpace> spaces;
  std::vector<int> cur;
  std::function<void(int, int)> extend = [&](int m, int len) {
    const int last = cur.back();
    if (A.tgt(last) == A.src(cur.front()) && m <= opt.m_max) {
      ChainSpace& s = spaces[m];
      s.index.emplace(cur, static_cast<int>(s.chains.size()));
      s.chains.push_back(cur);
    }
    if (static_cast<int>(cur.size()) - 1 >= opt.max_tensor || m + 1 > opt.m_max) return;
    for (int x : by_source[static_cast<std::size_t>(A.tgt(last))]) {
      const int m2 = m + 1 - A.degree[static_cast<std::size_t>(x)];
      const int len2 = len + A.length(x);
      if (m2 > opt.m_max || (cap >= 0 && len2 > cap)) continue;
      cur.push_back(x);
      extend(m2, len2);
      cur.pop_back();
    }
  };
  for (int a0 = 0; a0 < A.size(); ++a0) {
    if (cap >= 0 && A.length(a0) > cap) continue;
    const int m0 = -A.degree[static_cast<std::size_t>(a0)];
    if (m0 > opt.m_max) continue;
    cur = {a0};
    extend(m0, A.length(a0));
  }

  MixedComplex M;
  for (int m = 0; m <= opt.m_max; ++m) M.dims[m] = spaces.count(m) ? static_cast<int>(spaces[m].chains.size()) : 0;
  const bool tensor_bounded = cap >= 0 && cap <= opt.max_tensor;
  auto complete = [&](int m) { return m <= opt.m_max && (tensor_bounded || m <= opt.max_tensor); };
  for (int m = 0; m <= opt.m_max; ++m)
    if (!complete(m) || !complete(m + 1)) M.edge.insert(m);

  auto total_length = [&](const std::vector<int>& c) {
    int l = 0;
    for (int x : c) l += A.length(x);
    return l;
  };
  auto lookup = [&](int m, const std::vector<int>& c) -> int {
    auto sit = spaces.find(m);
    if (sit == spaces.end()) return -1;
    auto it = sit->second.index.find(c);
    return it == sit->second.index.end() ? -1 : it->second;
  };

  for (int m = 0; m <= opt.m_max; ++m) {
    const auto& chains = spaces[m].chains;
    SparseMatrix bm(M.dim(m - 1), M.dim(m));
    SparseMatrix Bm(M.dim(m + 1), M.dim(m));
    for (std::size_t col = 0; col < chains.size(); ++col) {
      const std::vector<int>& c = chains[col];
      const std::size_t p = c.size() - 1;
      std::vector<int> s(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) s[i] = A.degree[static_cast<std::size_t>(c[i])] - 1;
      std::vector<std::pair<int, Rational>> bout;
      auto emit_b = [&](const std::vector<int>& t, const Rational& v) {
        if (m == 0) return;
        const int row = lookup(m - 1, t);
        if (row < 0) {
          if (cap >= 0 && total_length(t) > cap) return;
          throw Error(ErrorKind::PreconditionFailed, "Hochschild boundary left the chain space");
        }
        bout.emplace_back(row, v);
      };
      int prefix = 0;
      for (std::size_t i = 0; i <= p; ++i) {
        for (const auto& [k, coef] : A.diff[static_cast<std::size_t>(c[i])]) {
          if (i >= 1 && A.is_unit(k)) continue;
          std::vector<int> t = c;
          t[i] = k;
          emit_b(t, -coef * parity_sign(prefix));
        }
        if (i < p) {
          const int r = A.product(c[i], c[i + 1]);
          if (r >= 0) {
            std::vector<int> t;
            t.reserve(p);
            t.insert(t.end(), c.begin(), c.begin() + static_cast<long>(i));
            t.push_back(r);
            t.insert(t.end(), c.begin() + static_cast<long>(i) + 2, c.end());
            emit_b(t, Rational(parity_sign(prefix) * parity_sign(A.degree[static_cast<std::size_t>(c[i])])));
          }
        }
        prefix += s[i];
      }
      if (p >= 1) {
        const int r = A.product(c[p], c[0]);
        if (r >= 0) {
          std::vector<int> t;
          t.reserve(p);
          t.push_back(r);
          t.insert(t.end(), c.begin() + 1, c.begin() + static_cast<long>(p));
          const int rest = prefix - s[p];
          emit_b(t, Rational(koszul_sign(s[p], rest) * parity_sign(A.degree[static_cast<std::size_t>(c[p])])));
        }
      }
      bm.columns[col] = make_sparse(std::move(bout));

      if (!A.is_unit(c[0]) && m + 1 <= opt.m_max) {
        std::vector<std::pair<int, Rational>> Bout;
        std::vector<int> suffix(p + 2, 0);
        for (std::size_t i = p + 1; i-- > 0;) suffix[i] = suffix[i + 1] + s[i];
        for (std::size_t i = 0; i <= p; ++i) {
          std::vector<int> t;
          t.reserve(p + 2);
          t.push_back(A.unit_at(A.src(c[i])));
          t.insert(t.end(), c.begin() + static_cast<long>(i), c.end());
          t.insert(t.end(), c.begin(), c.begin() + static_cast<long>(i));
          const int row = lookup(m + 1, t);
          if (row < 0) continue;
          Bout.emplace_back(row, Rational(koszul_sign(suffix[i], suffix[0] - suffix[i])));
        }
        Bm.columns[col] = make_sparse(std::move(Bout));
      }
    }
    if (m > 0) M.b[m] = std::move(bm);
    M.B[m] = std::move(Bm);
  }
  return M;
}

MixedComplex hochschild_mixed(const FiniteAlgebra& A, int P, int lo, int hi) {
  if (lo > hi || hi > 0) throw Error(ErrorKind::WindowTooNarrow, "window must satisfy lo <= hi <= 0");
  ChainOptions opt;
  opt.max_tensor = P;
  opt.m_max = -lo;
  MixedComplex M = hochschild_mixed(A, opt);
  M.description = "normalized Hochschild chains, tensor length <= " + std::to_string(P) + ", truncation " +
                  std::to_string(A.truncation);
  return M;
}

nlohmann::json InvariantReport::to_json() const {
  return {{"b_squared", b_squared}, {"B_squared", B_squared}, {"bB_plus_Bb", anticommute}, {"witnesses", witnesses}};
}

InvariantReport check_mixed_invariants(const MixedComplex& M) {
  InvariantReport r;
  auto complete_above = [&](int m) { return M.dims.count(m) && !M.edge.count(m - 1) && M.dims.count(m - 1); };
  for (const auto& [m, n] : M.dims) {
    if (m >= 2 && !M.b_at(m - 1).compose(M.b_at(m)).is_zero()) {
      r.b_squared = false;
      r.witnesses.push_back("b^2 != 0 on C_" + std::to_string(m));
    }
    if (complete_above(m + 1) && complete_above(m + 2) && !M.B_at(m + 1).compose(M.B_at(m)).is_zero()) {
      r.B_squared = false;
      r.witnesses.push_back("B^2 != 0 on C_" + std::to_string(m));
    }
    if (complete_above(m + 1)) {
      SparseMatrix s = M.b_at(m + 1).compose(M.B_at(m));
      if (m >= 1) s = s + M.B_at(m - 1).compose(M.b_at(m));
      if (!s.is_zero()) {
        r.anticommute = false;
        r.witnesses.push_back("bB + Bb != 0 on C_" + std::to_string(m));
      }
    }
  }
  return r;
}

namespace {

/// Cycles and boundaries of a graded complex given by D_n: T_n -> T_{n-1}.
struct Homology {
  std::map<int, int> dim;
  std::map<int, SparseMatrix> D;
  std::map<int, KernelImage> ker;
  std::map<int, EchelonBasis> image;

  const KernelImage& kernel(int n) {
    auto it = ker.find(n);
    if (it != ker.end()) return it->second;
    return ker[n] = kernel_of(D.at(n));
  }
  /// Echelon basis of the image of D_n inside T_{n-1}.
  const EchelonBasis& image_of(int n) {
    auto it = image.find(n);
    if (it != image.end()) return it->second;
    const SparseMatrix& m = D.at(n);
    EchelonBasis e(m.rows);
    for (auto c = m.columns.rbegin(); c != m.columns.rend(); ++c) e.insert(*c);
    return image.emplace(n, std::move(e)).first->second;
  }
  std::size_t rank_of(int n) {
    if (!D.count(n)) return 0;
    auto it = ker.find(n);
    return it != ker.end() ? it->second.rank : image_of(n).rank();
  }
  int h(int n) { return dim[n] - static_cast<int>(rank_of(n)) - static_cast<int>(rank_of(n + 1)); }
  /// Boundaries in degree n as an echelon basis.
  EchelonBasis boundaries(int n) {
    if (!D.count(n + 1)) return EchelonBasis(dim.count(n) ? dim[n] : 0);
    return image_of(n + 1);
  }
};

/// Places the block of `m` at the given row/column offsets.
void place(SparseMatrix& target, const SparseMatrix& block, int row_off, int col_off) {
  for (int j = 0; j < block.cols; ++j) {
    SparseVec shifted;
    for (const auto& [i, v] : block.columns[static_cast<std::size_t>(j)]) shifted.emplace_back(i + row_off, v);
    auto& col = target.columns[static_cast<std::size_t>(j + col_off)];
    col = axpy(col, 1, shifted);
  }
}

}  // namespace

std::map<int, int> hochschild_dims(const MixedComplex& M) {
  std::map<int, int> out;
  std::map<int, std::size_t> rk;
  for (const auto& [m, n] : M.dims) rk[m] = m >= 1 ? rank(M.b_at(m)) : 0;
  for (const auto& [m, n] : M.dims) out[m] = n - static_cast<int>(rk[m]) - static_cast<int>(rk.count(m + 1) ? rk[m + 1] : 0);
  return out;
}

nlohmann::json MixedHomologyReport::to_json() const {
  auto table = [&](const std::map<int, int>& t) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [m, n] : t) j[std::to_string(m)] = n;
    return j;
  };
  auto reduced = [&](const std::map<int, int>& t, bool periodic) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [m, n] : t) {
      const bool l_part = m == 0 || (periodic && m > 0 && m % 2 == 0);
      j[std::to_string(m)] = n - (l_part ? vertices : 0);
    }
    return j;
  };
  nlohmann::json j;
  j["HH"] = table(hh);
  j["HC"] = table(hc);
  j["HC-"] = table(hc_minus);
  j["HH_reduced"] = reduced(hh, false);
  j["HC_reduced"] = reduced(hc, true);
  j["reliable_degrees"] = std::vector<int>(reliable.begin(), reliable.end());
  j["index_convention"] = "homological: HH_m sits in internal degree -m";
  j["HC-_u_power"] = u_power;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : audit)
    rows.push_back({{"position", r.position}, {"dim", r.dim}, {"rank_in", r.rank_in}, {"rank_out", r.rank_out}, {"exact", r.exact()}});
  j["audit"] = {{"sequence", "HH_n -> HC_n -> HC_{n-2} -> HH_{n-1}"}, {"rows", rows}, {"exact", audit_exact}};
  return j;
}

MixedHomologyReport mixed_homology_report(const MixedComplex& M, int vertices, int u_power) {
  MixedHomologyReport rep;
  rep.vertices = vertices;
  const int top = M.top();
  for (int m = 0; m <= top; ++m)
    if (M.reliable(m)) rep.reliable.insert(m);

  Homology hh;
  for (int m = 0; m <= top; ++m) {
    hh.dim[m] = M.dim(m);
    hh.D[m] = M.b_at(m);
  }
  for (int m = 0; m <= top; ++m) rep.hh[m] = hh.h(m);

  // T_n = C_n + C_{n-2} + ..., D = b + B
  auto offsets = [&](int n) {
    std::vector<std::pair<int, int>> blocks;  // (chain degree, offset)
    int off = 0;
    for (int k = n; k >= 0; k -= 2) {
      blocks.emplace_back(k, off);
      off += M.dim(k);
    }
    return std::make_pair(blocks, off);
  };
  Homology hc;
  for (int n = 0; n <= top; ++n) hc.dim[n] = offsets(n).second;
  for (int n = 0; n <= top; ++n) {
    auto [src, sdim] = offsets(n);
    auto [dst, ddim] = offsets(n - 1);
    SparseMatrix D(ddim, sdim);
    std::map<int, int> dst_off;
    for (const auto& [k, o] : dst) dst_off[k] = o;
    for (const auto& [k, o] : src) {
      if (k >= 1 && dst_off.count(k - 1)) place(D, M.b_at(k), dst_off[k - 1], o);
      if (dst_off.count(k + 1)) place(D, M.B_at(k), dst_off[k + 1], o);
    }
    hc.D[n] = std::move(D);
  }
  for (int n = 0; n <= top; ++n) rep.hc[n] = hc.h(n);

  // T^-_n = C_n + u C_{n+2} + ... + u^J C_{n+2J}; uB leaves the u^J block.
  rep.u_power = u_power;
  const int J = u_power;
  auto moffsets = [&](int n) {
    std::vector<std::tuple<int, int, int>> blocks;  // (j, chain degree, offset)
    int off = 0;
    for (int j = 0; j <= J; ++j) {
      const int k = n + 2 * j;
      if (k < 0 || k > top) continue;
      blocks.emplace_back(j, k, off);
      off += M.dim(k);
    }
    return std::make_pair(blocks, off);
  };
  Homology hcm;
  const int lo_m = -2 * J - 1;
  for (int n = lo_m; n <= top; ++n) hcm.dim[n] = moffsets(n).second;
  for (int n = lo_m + 1; n <= top; ++n) {
    auto [src, sdim] = moffsets(n);
    auto [dst, ddim] = moffsets(n - 1);
    SparseMatrix D(ddim, sdim);
    std::map<int, int> dst_off;
    for (const auto& [j, k, o] : dst) dst_off[j] = o;
    for (const auto& [j, k, o] : src) {
      if (k >= 1 && dst_off.count(j)) place(D, M.b_at(k), dst_off[j], o);
      if (j < J && k + 1 <= top && dst_off.count(j + 1)) place(D, M.B_at(k), dst_off[j + 1], o);
    }
    hcm.D[n] = std::move(D);
  }
  for (int n = 0; n <= top; ++n) {
    bool ok = true;
    for (int k = std::max(0, n - 1); k <= n + 2 * J + 1; ++k) ok = ok && k <= top && M.reliable(k);
    if (ok) rep.hc_minus[n] = hcm.h(n);
  }

  // Connes exact sequence audit at reliable degrees.
  auto I = [&](int n) {
    SparseMatrix f(hc.dim[n], M.dim(n));
    for (int j = 0; j < M.dim(n); ++j) f.columns[static_cast<std::size_t>(j)] = {{j, Rational(1)}};
    return f;
  };
  auto S = [&](int n) {
    const int drop = M.dim(n);
    const int tgt = n >= 2 ? hc.dim[n - 2] : 0;
    SparseMatrix f(tgt, hc.dim[n]);
    for (int j = drop; j < hc.dim[n]; ++j) f.columns[static_cast<std::size_t>(j)] = {{j - drop, Rational(1)}};
    return f;
  };
  auto connecting = [&](int n) {  // HC_{n-2} -> HH_{n-1}
    const int sdim = n >= 2 ? hc.dim[n - 2] : 0;
    SparseMatrix f(M.dim(n - 1), sdim);
    if (n >= 2) {
      const SparseMatrix Bk = M.B_at(n - 2);
      for (int j = 0; j < M.dim(n - 2); ++j) f.columns[static_cast<std::size_t>(j)] = Bk.columns[static_cast<std::size_t>(j)];
    }
    return f;
  };
  auto hc_cycles = [&](int n) { return n >= 0 ? hc.kernel(n).kernel : std::vector<SparseVec>{}; };
  auto hc_bound = [&](int n) { return n >= 0 ? hc.boundaries(n) : EchelonBasis(0); };
  auto hc_dim = [&](int n) { return n >= 0 ? rep.hc[n] : 0; };
  auto rk_I = [&](int n) { return static_cast<int>(induced_rank(I(n), hh.kernel(n).kernel, hc_bound(n))); };
  auto rk_S = [&](int n) {
    if (n < 2) return 0;
    return static_cast<int>(induced_rank(S(n), hc_cycles(n), hc_bound(n - 2)));
  };
  auto rk_C = [&](int n) {
    if (n < 2) return 0;
    return static_cast<int>(induced_rank(connecting(n), hc_cycles(n - 2), hh.boundaries(n - 1)));
  };
  for (int n : rep.reliable) {
    const int i_n = rk_I(n);
    const int s_n = rk_S(n);
    const int c_n = rk_C(n);
    const int c_next = rk_C(n + 1);
    rep.audit.push_back({"HH_" + std::to_string(n), rep.hh[n], c_next, i_n});
    rep.audit.push_back({"HC_" + std::to_string(n), rep.hc[n], i_n, s_n});
    rep.audit.push_back({"HC_" + std::to_string(n - 2) + " (after S)", hc_dim(n - 2), s_n, c_n});
  }
  for (const auto& r : rep.audit) rep.audit_exact = rep.audit_exact && r.exact();
  return rep;
}

}  // namespace gkit
