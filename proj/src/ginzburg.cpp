#include "gkit/ginzburg.hpp"

#include <algorithm>
#include <functional>

#include "gkit/error.hpp"
#include "gkit/linalg.hpp"

namespace gkit {

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["status"] = pass ? "pass" : "fail";
  j["truncation"] = truncation;
  j["witnesses"] = witnesses;
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

FreeElement DGPresentation::generator(const std::string& name) const {
  return FreeElement::arrow(quiver, truncation, quiver->require_arrow(name));
}

QuiverPtr ginzburg_quiver(const GradedQuiver& q, int d) { return extend_with_z(*build_double_quiver(q, d), d); }

namespace {

Path transport_path(const GradedQuiver& from, const Path& p, const GradedQuiver& to) {
  Path out;
  const int src = to.vertex_index(from.vertices().at(static_cast<std::size_t>(p.src)));
  const int tgt = to.vertex_index(from.vertices().at(static_cast<std::size_t>(p.tgt)));
  if (src < 0 || tgt < 0) throw Error(ErrorKind::QuiverMismatch, "vertex missing in target quiver");
  out.src = src;
  out.tgt = tgt;
  for (int a : p.arrows) out.arrows.push_back(to.require_arrow(from.arrow(a).name));
  return out;
}

}  // namespace

FreeElement transport(const FreeElement& f, QuiverPtr target) {
  if (!f.quiver() || f.quiver() == target || *f.quiver() == *target) {
    FreeElement out(target, f.truncation());
    for (const auto& [p, c] : f.terms()) out.add_term(p, c);
    return out;
  }
  FreeElement out(target, f.truncation());
  for (const auto& [p, c] : f.terms()) out.add_term(transport_path(f.q(), p, *target), c);
  return out;
}

CyclicElement transport(const CyclicElement& f, QuiverPtr target) {
  CyclicElement out(target, f.truncation());
  if (!f.quiver()) return out;
  for (const auto& [p, c] : f.terms()) out.add_cycle(transport_path(f.q(), p, *target), c);
  return out;
}

CheckReport verify_d_squared(const DGPresentation& p) {
  CheckReport r;
  r.check = "d_squared";
  r.truncation = p.truncation;
  for (int g = 0; g < p.quiver->num_arrows(); ++g) {
    FreeElement dd = p.diff.apply(p.diff.on(g));
    if (!dd.is_zero()) {
      r.pass = false;
      r.witnesses.push_back("d^2(" + p.quiver->arrow(g).name + ") = " + dd.to_string());
    }
  }
  return r;
}

DGPresentation build_ginzburg(const GradedQuiver& q, int d, const CyclicElement& w, int N) {
  if (N < 1) throw Error(ErrorKind::PreconditionFailed, "truncation must be at least 1");
  QuiverPtr qbar = ginzburg_quiver(q, d);
  CyclicElement wb = transport(w, qbar);
  DGPresentation p;
  p.quiver = qbar;
  p.d = d;
  p.truncation = N;
  for (const auto& [path, c] : wb.terms()) {
    for (int a : path.arrows)
      if (qbar->arrow(a).role == ArrowRole::ZLoop) throw Error(ErrorKind::PreconditionFailed, "potential may not involve z");
    if (path.length() < 2)
      throw Error(ErrorKind::PreconditionFailed, "potential term '" + path_to_string(*qbar, path) + "' is shorter than 2");
    if (path.length() == 2) p.warnings.push_back("potential has a length-2 term: " + path_to_string(*qbar, path));
  }
  std::sort(p.warnings.begin(), p.warnings.end());
  p.warnings.erase(std::unique(p.warnings.begin(), p.warnings.end()), p.warnings.end());

  const PairingElement eta = PairingElement::standard(qbar, d);
  p.diff = potential_derivation(wb, d, eta);
  p.diff.truncation = N;
  for (auto& [g, v] : p.diff.values) v = v.with_truncation(N);

  MasterEquationReport me = check_master_equation(wb, d, eta, N);
  if (!me.zero)
    throw Error(ErrorKind::MasterEquationFails, "{w,w} != 0 up to length " + std::to_string(N) + ": " + me.bracket.to_string());
  CheckReport mr;
  mr.check = "master_equation";
  mr.truncation = N;
  if (me.degree_shortcut) mr.notes.push_back("zero for degree reasons: bracket degree " + std::to_string(me.bracket_degree));
  p.reports.push_back(mr);
  p.reports.push_back(verify_d_squared(p));
  return p;
}

std::vector<Path> paths_in_degrees(const GradedQuiver& q, int N, int lo, int hi) {
  bool nonpositive = true;
  for (const auto& a : q.arrows()) nonpositive = nonpositive && a.degree <= 0;
  std::vector<Path> out;
  std::function<void(Path&, int)> walk = [&](Path& cur, int deg) {
    if (deg >= lo && deg <= hi) out.push_back(cur);
    if (cur.length() == N) return;
    if (nonpositive && deg < lo) return;
    for (int a = 0; a < q.num_arrows(); ++a) {
      const Arrow& arr = q.arrow(a);
      if (arr.src != cur.tgt) continue;
      cur.arrows.push_back(a);
      const int saved = cur.tgt;
      cur.tgt = arr.tgt;
      walk(cur, deg + arr.degree);
      cur.tgt = saved;
      cur.arrows.pop_back();
    }
  };
  for (int v = 0; v < q.num_vertices(); ++v) {
    Path p = Path::idempotent(v);
    walk(p, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json HomologyTable::to_json() const {
  nlohmann::json j;
  j["truncation"] = truncation;
  j["window"] = {lo, hi};
  nlohmann::json rs = nlohmann::json::object();
  for (const auto& [deg, r] : rows) rs[std::to_string(deg)] = {{"Z", r.z}, {"B", r.b}, {"H", r.h}};
  j["degrees"] = rs;
  if (lo <= 0 && hi >= 0) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& f : jacobi_basis) basis.push_back(f.to_string());
    j["H0_dim"] = jacobi_basis.size();
    j["H0_basis"] = basis;
    nlohmann::json ld = nlohmann::json::object();
    for (const auto& [len, n] : jacobi_length_dims) ld[std::to_string(len)] = n;
    j["H0_length_dims"] = ld;
  }
  return j;
}

HomologyTable homology_dims(const DGPresentation& p, int lo, int hi) {
  if (lo > hi || hi > 0)
    throw Error(ErrorKind::WindowNotRepresentable, "window [" + std::to_string(lo) + "," + std::to_string(hi) + "] must satisfy lo <= hi <= 0");
  const GradedQuiver& q = *p.quiver;
  const int N = p.truncation;
  std::map<int, std::vector<Path>> by_degree;
  for (auto& path : paths_in_degrees(q, N, lo - 1, hi + 1)) by_degree[path_degree(q, path)].push_back(std::move(path));
  // index 0 is the largest path so that pivots land on the largest monomials
  std::map<int, std::map<Path, int>> index;
  for (auto& [deg, ps] : by_degree) {
    const int n = static_cast<int>(ps.size());
    for (int i = 0; i < n; ++i) index[deg][ps[static_cast<std::size_t>(i)]] = n - 1 - i;
  }
  auto dim = [&](int deg) {
    auto it = by_degree.find(deg);
    return it == by_degree.end() ? 0 : static_cast<int>(it->second.size());
  };
  auto matrix = [&](int deg) {
    SparseMatrix m(dim(deg + 1), dim(deg));
    if (m.cols == 0) return m;
    const auto& src = by_degree.at(deg);
    for (const auto& path : src) {
      FreeElement img = p.diff.apply(FreeElement::path(p.quiver, N, path));
      std::vector<std::pair<int, Rational>> entries;
      for (const auto& [t, c] : img.terms()) {
        auto& target = index[deg + 1];
        auto it = target.find(t);
        if (it == target.end()) throw Error(ErrorKind::DegreeMismatch, "differential leaves degree " + std::to_string(deg + 1));
        entries.emplace_back(it->second, c);
      }
      m.columns[static_cast<std::size_t>(index[deg].at(path))] = make_sparse(std::move(entries));
    }
    return m;
  };
  std::map<int, SparseMatrix> d;
  std::map<int, std::size_t> rk;
  for (int k = lo - 1; k <= hi; ++k) {
    d[k] = matrix(k);
    rk[k] = rank(d[k]);
  }
  HomologyTable t;
  t.truncation = N;
  t.lo = lo;
  t.hi = hi;
  for (int k = lo; k <= hi; ++k) {
    HomologyRow r;
    r.z = dim(k) - static_cast<int>(rk[k]);
    r.b = static_cast<int>(rk[k - 1]);
    r.h = r.z - r.b;
    t.rows[k] = r;
  }
  if (lo <= 0 && hi >= 0) {
    const int n0 = dim(0);
    EchelonBasis basis(n0);
    for (const auto& c : d[-1].columns) basis.insert(c);
    std::vector<SparseVec> cycles;
    if (d[0].is_zero()) {
      for (int i = n0 - 1; i >= 0; --i) cycles.push_back({{i, Rational(1)}});
    } else {
      cycles = kernel_of(d[0]).kernel;
    }
    const auto& paths0 = by_degree[0];
    for (const auto& z : cycles) {
      SparseVec r = basis.reduce(z);
      if (r.empty()) continue;
      basis.insert(r);
      FreeElement rep(p.quiver, N);
      for (const auto& [i, c] : r) rep.add_term(paths0[static_cast<std::size_t>(n0 - 1 - i)], c);
      t.jacobi_length_dims[paths0[static_cast<std::size_t>(n0 - 1 - r.front().first)].length()] += 1;
      t.jacobi_basis.push_back(std::move(rep));
    }
  }
  return t;
}

ExtractionResult extract_superpotential(const DGPresentation& p) {
  const GradedQuiver& q = *p.quiver;
  const int N = p.truncation;
  const PairingElement eta = PairingElement::standard(p.quiver, p.d);
  for (int v = 0; v < q.num_vertices(); ++v) {
    const int z = q.z_at(v);
    if (z < 0) throw Error(ErrorKind::PreconditionFailed, "presentation has no z-loop at every vertex");
    if (p.diff.on(z) != eta.at_vertex(v).with_truncation(N))
      throw Error(ErrorKind::PreconditionFailed, "dz is not in standard form at vertex " + q.vertices()[static_cast<std::size_t>(v)]);
  }
  for (int g : q.non_z_arrows()) {
    for (int v = 0; v < q.num_vertices(); ++v)
      if (p.diff.on(g).contains_arrow(q.z_at(v)))
        throw Error(ErrorKind::PreconditionFailed, "d(" + q.arrow(g).name + ") involves z");
  }
  const int W = N + 1;
  ExtractionResult out;
  out.wbar = FreeElement(p.quiver, W);
  for (const auto& t : eta.tensor) {
    const Rational s = t.coeff * -parity_sign(q.arrow(t.left).degree);
    out.wbar += s * multiply(FreeElement::arrow(p.quiver, W, t.left), p.diff.on(t.right).with_truncation(W), W);
  }
  out.w = CyclicElement(p.quiver, W);
  for (int n = 1; n <= W; ++n) {
    FreeElement part = out.wbar.length_component(n);
    if (part.is_zero()) continue;
    FreeElement rotated(p.quiver, W);
    for (const auto& [path, c] : part.terms()) {
      const int first = q.arrow(path.arrows.front()).degree;
      Path r{q.arrow(path.arrows.front()).tgt, path.tgt, {path.arrows.begin() + 1, path.arrows.end()}};
      r.arrows.push_back(path.arrows.front());
      r.tgt = q.arrow(path.arrows.front()).tgt;
      rotated.add_term(r, c * koszul_sign(first, path_degree(q, path) - first));
    }
    if (rotated != part)
      throw Error(ErrorKind::NotCyclicallySymmetric, "length-" + std::to_string(n) + " part is not cyclically symmetric: " + part.to_string());
    CyclicElement cyc = to_cyclic(part);
    cyc *= Rational(1, n);
    out.w += cyc;
  }
  out.round_trip.check = "superpotential_round_trip";
  out.round_trip.truncation = N;
  const DerivationTable again = potential_derivation(out.w, p.d, eta);
  for (int g = 0; g < q.num_arrows(); ++g) {
    FreeElement lhs = again.on(g).with_truncation(N);
    FreeElement rhs = p.diff.on(g).with_truncation(N);
    if (lhs != rhs) {
      throw Error(ErrorKind::RoundTripMismatch,
                  "generator " + q.arrow(g).name + ": derived " + lhs.to_string() + " but presentation has " + rhs.to_string());
    }
  }
  return out;
}

nlohmann::json NormalizationResult::to_json() const {
  nlohmann::json j;
  j["identity"] = identity;
  const GradedQuiver& q = *normalized.quiver;
  nlohmann::json ch = nlohmann::json::object();
  for (const auto& [g, img] : change) {
    if (img == FreeElement::arrow(normalized.quiver, normalized.truncation, g)) continue;
    ch[q.arrow(g).name] = img.to_string();
  }
  j["change_of_variables"] = ch;
  nlohmann::json st = nlohmann::json::array();
  for (const auto& s : steps) {
    nlohmann::json b = nlohmann::json::object();
    for (const auto& [g, v] : s.beta) b[q.arrow(g).name] = v.to_string();
    st.push_back({{"length", s.length}, {"beta", b}});
  }
  j["steps"] = st;
  nlohmann::json dz = nlohmann::json::object();
  for (int v = 0; v < q.num_vertices(); ++v) dz[q.arrow(q.z_at(v)).name] = normalized.diff.on(q.z_at(v)).to_string();
  j["dz"] = dz;
  j["truncation"] = normalized.truncation;
  return j;
}

namespace {

FreeElement total_dz(const DGPresentation& p) {
  FreeElement out(p.quiver, p.truncation);
  for (int v = 0; v < p.quiver->num_vertices(); ++v) out += p.diff.on(p.quiver->z_at(v));
  return out;
}

}  // namespace

NormalizationResult normalize_dz(const DGPresentation& p) {
  const GradedQuiver& q = *p.quiver;
  const int N = p.truncation;
  for (int v = 0; v < q.num_vertices(); ++v)
    if (q.z_at(v) < 0) throw Error(ErrorKind::PreconditionFailed, "presentation has no z-loop at every vertex");
  const PairingElement eta = PairingElement::standard(p.quiver, p.d);
  const FreeElement eta2 = eta.eta.with_truncation(N);
  {
    FreeElement dz = total_dz(p);
    for (int v = 0; v < q.num_vertices(); ++v)
      if (dz.contains_arrow(q.z_at(v))) throw Error(ErrorKind::PreconditionFailed, "dz involves z");
    if (dz.min_length() < 2 || dz.length_component(2) != eta2)
      throw Error(ErrorKind::PreconditionFailed, "quadratic part of dz is not sum [a,a*]");
  }
  NormalizationResult out;
  out.normalized = p;
  for (int g = 0; g < q.num_arrows(); ++g) out.change[g] = FreeElement::arrow(p.quiver, N, g);
  const auto gens = q.non_z_arrows();
  for (int n = 3; n <= N; ++n) {
    DGPresentation& cur = out.normalized;
    FreeElement eta_n = total_dz(cur).length_component(n);
    if (eta_n.is_zero()) continue;
    if (!to_cyclic(eta_n).is_zero())
      throw Error(ErrorKind::NotCommutatorSum, "length-" + std::to_string(n) + " part of dz has nonzero class " + to_cyclic(eta_n).to_string());
    auto sol = commutator_decompose(eta_n, gens);
    NormalizationStep step;
    step.length = n;
    step.eta = sol;
    for (int a : gens) {
      const Arrow& arr = q.arrow(a);
      if (arr.role != ArrowRole::Original) continue;
      const int s = arr.partner;
      if (s == a) {
        FreeElement ea = sol.at(a) * Rational(1, 2);
        step.beta[a] = -ea;
      } else {
        step.beta[a] = sol.at(s) * Rational(koszul_sign(arr.degree, q.arrow(s).degree));
        step.beta[s] = -sol.at(a);
      }
    }
    std::map<int, FreeElement> images;
    for (const auto& [g, b] : step.beta)
      if (!b.is_zero()) images[g] = FreeElement::arrow(p.quiver, N, g) + b;
    if (images.empty()) continue;
    auto inverse = [&](int g) {
      const FreeElement target = FreeElement::arrow(p.quiver, N, g);
      FreeElement r = target;
      for (int it = 0; it <= N; ++it) {
        FreeElement err = target - substitute(r, images);
        if (err.is_zero()) break;
        r += err;
      }
      return r;
    };
    DerivationTable next(p.quiver, N, cur.diff.degree);
    for (int g = 0; g < q.num_arrows(); ++g) {
      FreeElement v = substitute(cur.diff.apply(inverse(g)), images);
      if (!v.is_zero()) next.values[g] = std::move(v);
    }
    cur.diff = std::move(next);
    for (auto& [g, img] : out.change) img = substitute(img, images);
    FreeElement dz = total_dz(cur);
    if (dz.length_component(2) != eta2) throw Error(ErrorKind::PreconditionFailed, "normalization step changed the quadratic part");
    for (int k = 3; k <= n; ++k)
      if (!dz.length_component(k).is_zero())
        throw Error(ErrorKind::PreconditionFailed, "normalization step left length-" + std::to_string(k) + " terms in dz");
    out.steps.push_back(std::move(step));
    out.identity = false;
  }
  out.normalized.reports.clear();
  out.normalized.reports.push_back(verify_d_squared(out.normalized));
  return out;
}

}  // namespace gkit
