#include "gkit/ainfty.hpp"

#include "gkit/error.hpp"

namespace gkit {

int AInftyAlgebra::add_element(std::string name, int deg, int s, int t, bool is_unit, bool is_top) {
  names.push_back(std::move(name));
  degree.push_back(deg);
  src.push_back(s);
  tgt.push_back(t);
  unit.push_back(is_unit);
  top.push_back(is_top);
  return size() - 1;
}

bool AInftyAlgebra::composable(const std::vector<int>& args) const {
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    if (tgt[static_cast<std::size_t>(args[i])] != src[static_cast<std::size_t>(args[i + 1])]) return false;
  return true;
}

SparseVec AInftyAlgebra::m(const std::vector<int>& args) const {
  if (args.size() < 2 || !composable(args)) return {};
  bool has_unit = false;
  for (int x : args) has_unit = has_unit || unit[static_cast<std::size_t>(x)];
  if (has_unit) {
    if (args.size() != 2) return {};
    if (unit[static_cast<std::size_t>(args[0])]) return {{args[1], Rational(1)}};
    return {{args[0], Rational(1)}};
  }
  auto it = table.find(args);
  return it == table.end() ? SparseVec{} : it->second;
}

void AInftyAlgebra::set(const std::vector<int>& args, SparseVec value) {
  if (value.empty()) {
    table.erase(args);
  } else {
    table[args] = std::move(value);
  }
}

void AInftyAlgebra::for_each_tuple(int n, bool closed, const std::function<void(const std::vector<int>&)>& f) const {
  std::vector<int> cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == n) {
      if (!closed || tgt[static_cast<std::size_t>(cur.back())] == src[static_cast<std::size_t>(cur.front())]) f(cur);
      return;
    }
    for (int x = 0; x < size(); ++x) {
      if (!cur.empty() && tgt[static_cast<std::size_t>(cur.back())] != src[static_cast<std::size_t>(x)]) continue;
      cur.push_back(x);
      rec();
      cur.pop_back();
    }
  };
  rec();
}

nlohmann::json AInftyAlgebra::to_json() const {
  nlohmann::json j;
  nlohmann::json basis = nlohmann::json::array();
  for (int i = 0; i < size(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    basis.push_back({{"index", i}, {"name", names[k]}, {"deg", degree[k]}, {"unit", static_cast<bool>(unit[k])}, {"top", static_cast<bool>(top[k])}});
  }
  j["basis"] = basis;
  j["arity_max"] = arity_max;
  std::map<int, nlohmann::json> by_n;
  for (const auto& [args, v] : table) {
    nlohmann::json val = nlohmann::json::array();
    for (const auto& [b, c] : v) val.push_back({{"basis", b}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    by_n[static_cast<int>(args.size())].push_back({{"args", args}, {"value", val}});
  }
  nlohmann::json ops = nlohmann::json::array();
  for (auto& [n, entries] : by_n) ops.push_back({{"n", n}, {"entries", entries}});
  j["ops"] = ops;
  return j;
}

namespace {

std::string tuple_name(const AInftyAlgebra& a, const std::vector<int>& args) {
  std::string s = "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += ", ";
    s += a.names[static_cast<std::size_t>(args[i])];
  }
  return s + ")";
}

std::string vec_name(const AInftyAlgebra& a, const SparseVec& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [i, c] : v) {
    if (!s.empty()) s += " + ";
    s += to_string(c) + " " + a.names[static_cast<std::size_t>(i)];
  }
  return s;
}

/// b_k(s y_1 ... s y_k) = -(-1)^{sum_j (k-j)(|y_j|-1)} s m_k(y_1 ... y_k)
SparseVec bar_component(const AInftyAlgebra& a, const std::vector<int>& ys) {
  SparseVec v = a.m(ys);
  if (v.empty()) return v;
  const int k = static_cast<int>(ys.size());
  long e = 0;
  for (int j = 1; j <= k; ++j) e += static_cast<long>(k - j) * (a.degree[static_cast<std::size_t>(ys[static_cast<std::size_t>(j - 1)])] - 1);
  return scaled(v, Rational(-parity_sign(e)));
}

}  // namespace

AInftyAlgebra koszul_dual(const DGPresentation& p, int arity_max) {
  const GradedQuiver& q = *p.quiver;
  AInftyAlgebra a;
  a.arity_max = arity_max;
  for (int v = 0; v < q.num_vertices(); ++v) a.add_element(q.idempotent_name(v), 0, v, v, true, false);
  const int base = q.num_vertices();
  for (int g = 0; g < q.num_arrows(); ++g) {
    const Arrow& arr = q.arrow(g);
    a.add_element("xi(" + arr.name + ")", 1 - arr.degree, arr.src, arr.tgt, false, arr.role == ArrowRole::ZLoop);
  }
  std::map<std::vector<int>, std::vector<std::pair<int, Rational>>> acc;
  for (int u = 0; u < q.num_arrows(); ++u) {
    const FreeElement du = p.diff.on(u);
    for (const auto& [path, c] : du.terms()) {
      const int n = path.length();
      if (n < 2)
        throw Error(ErrorKind::NotMinimal, "d(" + q.arrow(u).name + ") has a term of length " + std::to_string(n) + ": " + path_to_string(q, path));
      if (n > arity_max) continue;
      std::vector<int> args;
      long e = 0;
      for (int j = 1; j <= n; ++j) {
        const int g = path.arrows[static_cast<std::size_t>(j - 1)];
        args.push_back(base + g);
        e += static_cast<long>(n - j) * (a.degree[static_cast<std::size_t>(base + g)] - 1);
      }
      int sum = 0;
      for (int x : args) sum += a.degree[static_cast<std::size_t>(x)];
      if (a.degree[static_cast<std::size_t>(base + u)] != sum + 2 - n)
        throw Error(ErrorKind::DegreeMismatch, "m_" + std::to_string(n) + " would not have degree 2-n");
      acc[args].emplace_back(base + u, c * -parity_sign(e));
    }
  }
  for (auto& [args, entries] : acc) a.set(args, make_sparse(std::move(entries)));
  StasheffReport st = check_stasheff(a);
  if (!st.pass) throw Error(ErrorKind::StasheffFails, st.witnesses.front());
  return a;
}

nlohmann::json StasheffReport::to_json() const {
  return {{"check", "stasheff"}, {"status", pass ? "pass" : "fail"}, {"tuples", tuples}, {"witnesses", witnesses}};
}

StasheffReport check_stasheff(const AInftyAlgebra& a) {
  StasheffReport r;
  for (int n = 3; n <= a.arity_max; ++n) {
    a.for_each_tuple(n, false, [&](const std::vector<int>& xs) {
      ++r.tuples;
      std::vector<std::pair<int, Rational>> total;
      int prefix = 0;
      for (int i = 0; i < n; ++i) {
        for (int qn = 2; qn <= n - i && qn <= n - 1; ++qn) {
          std::vector<int> inner(xs.begin() + i, xs.begin() + i + qn);
          SparseVec mid = bar_component(a, inner);
          if (mid.empty()) continue;
          const int sign = parity_sign(prefix);
          for (const auto& [y, c] : mid) {
            std::vector<int> outer(xs.begin(), xs.begin() + i);
            outer.push_back(y);
            outer.insert(outer.end(), xs.begin() + i + qn, xs.end());
            for (const auto& [w, c2] : bar_component(a, outer)) total.emplace_back(w, c * c2 * sign);
          }
        }
        prefix += a.degree[static_cast<std::size_t>(xs[static_cast<std::size_t>(i)])] - 1;
      }
      SparseVec v = make_sparse(std::move(total));
      if (!v.empty()) {
        r.pass = false;
        if (r.witnesses.size() < 10) r.witnesses.push_back("b^2" + tuple_name(a, xs) + " = " + vec_name(a, v));
      }
    });
  }
  return r;
}

nlohmann::json CyclicReport::to_json(const AInftyAlgebra& a) const {
  nlohmann::json j;
  j["check"] = "cyclic_structure";
  j["status"] = pass() ? "pass" : "fail";
  j["symmetric"] = symmetric;
  j["nondegenerate"] = nondegenerate;
  j["higher_products_in_Wc"] = image_in_wc;
  j["cyclic_identity"] = cyclic_identity;
  j["witnesses"] = witnesses;
  nlohmann::json pr = nlohmann::json::array();
  for (int i = 0; i < a.size(); ++i)
    for (int k = 0; k < a.size(); ++k) {
      const Rational& v = pairing.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      if (v != 0) pr.push_back({{"left", a.names[static_cast<std::size_t>(i)]}, {"right", a.names[static_cast<std::size_t>(k)]}, {"value", to_string(v)}});
    }
  j["pairing"] = pr;
  j["d"] = pairing.d;
  return j;
}

CyclicReport cyclic_structure_check(const AInftyAlgebra& a, int d) {
  const int nv = [&] {
    int m = 0;
    for (int i = 0; i < a.size(); ++i) m = std::max(m, std::max(a.src[static_cast<std::size_t>(i)], a.tgt[static_cast<std::size_t>(i)]) + 1);
    return m;
  }();
  std::vector<int> units(static_cast<std::size_t>(nv), 0), tops(static_cast<std::size_t>(nv), 0);
  for (int i = 0; i < a.size(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (a.unit[k]) ++units[static_cast<std::size_t>(a.src[k])];
    if (a.top[k]) {
      if (a.src[k] != a.tgt[k] || a.degree[k] != d) throw Error(ErrorKind::ShapeMismatch, "top class " + a.names[k] + " is not a degree-d loop");
      ++tops[static_cast<std::size_t>(a.src[k])];
    }
  }
  for (int v = 0; v < nv; ++v)
    if (units[static_cast<std::size_t>(v)] != 1 || tops[static_cast<std::size_t>(v)] != 1)
      throw Error(ErrorKind::ShapeMismatch, "need exactly one unit and one top class at every vertex");

  CyclicReport r;
  r.pairing.d = d;
  const std::size_t n = static_cast<std::size_t>(a.size());
  auto& P = r.pairing.matrix;
  P.assign(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& [w, c] : a.m({static_cast<int>(i), static_cast<int>(k)}))
        if (a.top[static_cast<std::size_t>(w)]) P[i][k] += c;
  auto pair = [&](const SparseVec& v, int b) {
    Rational s = 0;
    for (const auto& [w, c] : v) s += c * P[static_cast<std::size_t>(w)][static_cast<std::size_t>(b)];
    return s;
  };
  auto note = [&](std::string s) {
    if (r.witnesses.size() < 20) r.witnesses.push_back(std::move(s));
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (P[i][k] != koszul_sign(a.degree[i], a.degree[k]) * P[k][i]) {
        r.symmetric = false;
        note("(" + a.names[i] + ", " + a.names[k] + ") is not graded symmetric");
      }
  SparseMatrix M(static_cast<int>(n), static_cast<int>(n));
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::pair<int, Rational>> col;
    for (std::size_t i = 0; i < n; ++i)
      if (P[i][k] != 0) col.emplace_back(static_cast<int>(i), P[i][k]);
    M.columns[k] = make_sparse(std::move(col));
  }
  if (rank(M) != n) {
    r.nondegenerate = false;
    note("pairing has rank " + std::to_string(rank(M)) + " < " + std::to_string(n));
  }
  for (const auto& [args, v] : a.table) {
    if (args.size() < 3) continue;
    for (const auto& [w, c] : v) {
      if (a.unit[static_cast<std::size_t>(w)] || a.top[static_cast<std::size_t>(w)]) {
        r.image_in_wc = false;
        note("m_" + std::to_string(args.size()) + tuple_name(a, args) + " = " + vec_name(a, v) + " leaves W_c");
        break;
      }
    }
  }
  for (int k = 2; k <= a.arity_max; ++k) {
    a.for_each_tuple(k + 1, true, [&](const std::vector<int>& xs) {
      std::vector<int> head(xs.begin(), xs.end() - 1);
      std::vector<int> tail(xs.begin() + 1, xs.end());
      const Rational lhs = pair(a.m(head), xs.back());
      int rest = 0;
      for (std::size_t j = 1; j < xs.size(); ++j) rest += a.degree[static_cast<std::size_t>(xs[j])];
      const int sign = parity_sign(k) * koszul_sign(a.degree[static_cast<std::size_t>(xs.front())], rest);
      const Rational rhs = pair(a.m(tail), xs.front()) * sign;
      if (lhs != rhs) {
        r.cyclic_identity = false;
        note("cyclicity fails on " + tuple_name(a, xs) + ": " + to_string(lhs) + " vs " + to_string(rhs));
      }
    });
  }
  return r;
}

}  // namespace gkit
