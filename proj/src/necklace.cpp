#include "gkit/necklace.hpp"

#include "gkit/error.hpp"
#include "gkit/linalg.hpp"

namespace gkit {

FreeElement circular_derivative(const CyclicElement& w, int x) {
  const GradedQuiver& q = w.q();
  if (x < 0 || x >= q.num_arrows()) throw Error(ErrorKind::UnknownArrow, "arrow index " + std::to_string(x));
  const int dx = q.arrow(x).degree;
  FreeElement out(w.quiver(), w.truncation());
  for (const auto& [p, c] : w.terms()) {
    const auto& a = p.arrows;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] != x) continue;
      const int du = segment_degree(q, a, 0, i);
      const int dv = segment_degree(q, a, i + 1, n);
      Path vu{q.arrow(x).tgt, q.arrow(x).src, {}};
      vu.arrows.insert(vu.arrows.end(), a.begin() + static_cast<long>(i) + 1, a.end());
      vu.arrows.insert(vu.arrows.end(), a.begin(), a.begin() + static_cast<long>(i));
      out.add_term(vu, c * koszul_sign(du, dx + dv));
    }
  }
  return out;
}

PairingElement PairingElement::standard(QuiverPtr quiver, int d) {
  PairingElement p;
  p.quiver = quiver;
  p.d = d;
  p.eta = FreeElement(quiver, 2);
  const GradedQuiver& q = *quiver;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& arr = q.arrow(a);
    if (arr.role == ArrowRole::ZLoop) continue;
    if (arr.partner < 0) throw Error(ErrorKind::PreconditionFailed, "arrow '" + arr.name + "' has no partner; double the quiver first");
    if (arr.role != ArrowRole::Original) continue;
    const int s = arr.partner;
    const Path as = *concat(Path::of_arrow(q, a), Path::of_arrow(q, s));
    if (s == a) {
      p.tensor.push_back({a, a, Rational(2)});
      p.eta.add_term(as, 2);
      continue;
    }
    const Rational flip(-koszul_sign(arr.degree, q.arrow(s).degree));
    p.tensor.push_back({a, s, Rational(1)});
    p.tensor.push_back({s, a, flip});
    p.eta.add_term(as, 1);
    p.eta.add_term(*concat(Path::of_arrow(q, s), Path::of_arrow(q, a)), flip);
  }
  return p;
}

bool PairingElement::antisymmetric() const {
  std::map<std::pair<int, int>, Rational> sum;
  for (const auto& t : tensor) sum[{t.left, t.right}] += t.coeff;
  for (const auto& t : tensor) {
    const int s = koszul_sign(quiver->arrow(t.left).degree, quiver->arrow(t.right).degree);
    sum[{t.right, t.left}] += s * t.coeff;
  }
  for (const auto& [k, v] : sum)
    if (v != 0) return false;
  return true;
}

bool PairingElement::nondegenerate() const {
  const auto gens = quiver->non_z_arrows();
  std::map<int, int> col;
  for (std::size_t i = 0; i < gens.size(); ++i) col[gens[i]] = static_cast<int>(i);
  SparseMatrix m(static_cast<int>(gens.size()), static_cast<int>(gens.size()));
  std::vector<std::vector<std::pair<int, Rational>>> entries(gens.size());
  for (const auto& t : tensor) entries[static_cast<std::size_t>(col.at(t.right))].emplace_back(col.at(t.left), t.coeff);
  for (std::size_t j = 0; j < gens.size(); ++j) m.columns[j] = make_sparse(std::move(entries[j]));
  return rank(m) == gens.size();
}

FreeElement DerivationTable::on(int generator) const {
  auto it = values.find(generator);
  if (it == values.end()) return FreeElement(quiver, truncation);
  return it->second;
}

FreeElement DerivationTable::apply(const FreeElement& f) const {
  FreeElement out(quiver, truncation);
  const GradedQuiver& q = *quiver;
  for (const auto& [p, c] : f.terms()) {
    const std::size_t n = p.arrows.size();
    int prefix_degree = 0;
    for (std::size_t i = 0; i < n; ++i) {
      auto it = values.find(p.arrows[i]);
      const int ai = p.arrows[i];
      if (it != values.end()) {
        const Rational s = c * koszul_sign(degree, prefix_degree);
        for (const auto& [t, v] : it->second.terms()) {
          if (static_cast<int>(n) - 1 + t.length() > truncation) continue;
          Path r{p.src, p.tgt, {}};
          r.arrows.reserve(n - 1 + t.arrows.size());
          r.arrows.insert(r.arrows.end(), p.arrows.begin(), p.arrows.begin() + static_cast<long>(i));
          r.arrows.insert(r.arrows.end(), t.arrows.begin(), t.arrows.end());
          r.arrows.insert(r.arrows.end(), p.arrows.begin() + static_cast<long>(i) + 1, p.arrows.end());
          out.add_term(r, s * v);
        }
      }
      prefix_degree += q.arrow(ai).degree;
    }
  }
  return out;
}

DerivationTable hamiltonian_derivation(const CyclicElement& v, int d, int truncation) {
  const GradedQuiver& q = v.q();
  const int t = 2 - d;
  const int vdeg = v.is_zero() ? 3 - d : v.degree();
  DerivationTable table(v.quiver(), truncation, vdeg - t);
  const int k = vdeg - t;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& arr = q.arrow(a);
    if (arr.role == ArrowRole::ZLoop) continue;
    if (arr.partner < 0) throw Error(ErrorKind::PreconditionFailed, "arrow '" + arr.name + "' has no partner");
    const int s = arr.partner;
    const Arrow& star = q.arrow(s);
    FreeElement val;
    if (arr.role == ArrowRole::Original && s != a) {
      // d a = (-1)^{|a*|(|a| + k)} d(v)/d(a*)
      val = circular_derivative(v, s) * Rational(koszul_sign(star.degree, arr.degree + k));
    } else {
      // d a* = -(-1)^{|a|k} d(v)/d(a), with a the partner; a self-paired loop
      // enters eta as 2aa, hence the half
      val = circular_derivative(v, s) * Rational(-koszul_sign(star.degree, k));
      if (s == a) val *= Rational(1, 2);
    }
    val = val.with_truncation(truncation);
    if (!val.is_zero()) table.values[a] = std::move(val);
  }
  return table;
}

DerivationTable potential_derivation(const CyclicElement& w, int d, const PairingElement& eta) {
  if (!w.is_zero()) {
    const auto degs = w.degrees();
    if (degs.size() != 1 || degs.front() != 3 - d)
      throw Error(ErrorKind::DegreeMismatch, "potential must have degree " + std::to_string(3 - d) + ", got " + w.to_string());
  }
  DerivationTable table = hamiltonian_derivation(w, d, w.truncation());
  const GradedQuiver& q = w.q();
  for (int v = 0; v < q.num_vertices(); ++v) {
    const int z = q.z_at(v);
    if (z < 0) continue;
    FreeElement dz = eta.at_vertex(v).with_truncation(w.truncation());
    if (!dz.is_zero()) table.values[z] = std::move(dz);
  }
  return table;
}

FreeElement necklace_bracket(const CyclicElement& v, const FreeElement& f, int d, const PairingElement&, int N) {
  FreeElement out(f.quiver(), N);
  for (int deg : v.degrees()) {
    CyclicElement part(v.quiver(), v.truncation());
    for (const auto& [p, c] : v.terms())
      if (path_degree(v.q(), p) == deg) part.add_cycle(p, c);
    out += hamiltonian_derivation(part, d, N).apply(f);
  }
  return out;
}

nlohmann::json MasterEquationReport::to_json() const {
  nlohmann::json j;
  j["check"] = "master_equation";
  j["status"] = zero ? "pass" : "fail";
  j["degree_shortcut"] = degree_shortcut;
  j["bracket_degree"] = bracket_degree;
  j["truncation"] = truncation;
  j["witnesses"] = witnesses;
  return j;
}

MasterEquationReport check_master_equation(const CyclicElement& w, int d, const PairingElement& eta, int N) {
  MasterEquationReport r;
  r.truncation = N;
  r.bracket_degree = 4 - d;
  r.bracket = CyclicElement(w.quiver(), N);
  if (w.is_zero()) return r;
  if (r.bracket_degree > 0) {
    bool nonpositive = true;
    for (const auto& a : w.q().arrows()) nonpositive = nonpositive && a.degree <= 0;
    if (nonpositive) {
      r.degree_shortcut = true;
      return r;
    }
  }
  r.bracket = to_cyclic(necklace_bracket(w, w.representative().with_truncation(N), d, eta, N));
  r.zero = r.bracket.is_zero();
  for (const auto& [p, c] : r.bracket.terms()) r.witnesses.push_back(to_string(c) + " " + path_to_string(w.q(), p));
  return r;
}

}  // namespace gkit
