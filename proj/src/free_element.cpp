#include "gkit/free_element.hpp"

#include <algorithm>
#include <sstream>

#include "gkit/error.hpp"
#include "gkit/linalg.hpp"

namespace gkit {

Path Path::of_arrow(const GradedQuiver& q, int arrow) {
  const Arrow& a = q.arrow(arrow);
  return Path{a.src, a.tgt, {arrow}};
}

Path Path::parse(const GradedQuiver& q, const std::string& chain) {
  for (int v = 0; v < q.num_vertices(); ++v)
    if (chain == q.idempotent_name(v)) return idempotent(v);
  Path p;
  std::size_t start = 0;
  bool first = true;
  while (start <= chain.size()) {
    std::size_t star = chain.find('*', start);
    std::string name = chain.substr(start, star == std::string::npos ? std::string::npos : star - start);
    int a = q.require_arrow(name);
    const Arrow& arr = q.arrow(a);
    if (first) {
      p.src = arr.src;
      first = false;
    } else if (p.tgt != arr.src) {
      throw Error(ErrorKind::PreconditionFailed, "path '" + chain + "' is not composable at '" + name + "'");
    }
    p.tgt = arr.tgt;
    p.arrows.push_back(a);
    if (star == std::string::npos) break;
    start = star + 1;
  }
  return p;
}

int segment_degree(const GradedQuiver& q, const std::vector<int>& arrows, std::size_t begin, std::size_t end) {
  int d = 0;
  for (std::size_t i = begin; i < end; ++i) d += q.arrow(arrows[i]).degree;
  return d;
}

int path_degree(const GradedQuiver& q, const Path& p) { return segment_degree(q, p.arrows, 0, p.arrows.size()); }

std::optional<Path> concat(const Path& a, const Path& b) {
  if (a.tgt != b.src) return std::nullopt;
  Path p{a.src, b.tgt, a.arrows};
  p.arrows.insert(p.arrows.end(), b.arrows.begin(), b.arrows.end());
  return p;
}

std::string path_to_string(const GradedQuiver& q, const Path& p) {
  if (p.empty()) return q.idempotent_name(p.src);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += '*';
    s += q.arrow(p.arrows[i]).name;
  }
  return s;
}

// ---------------------------------------------------------------------------
// FreeElement

FreeElement::FreeElement(QuiverPtr quiver, int truncation) : quiver_(std::move(quiver)), truncation_(truncation) {}

FreeElement FreeElement::path(QuiverPtr quiver, int truncation, Path p, Rational c) {
  FreeElement f(std::move(quiver), truncation);
  f.add_term(p, c);
  return f;
}

FreeElement FreeElement::arrow(QuiverPtr quiver, int truncation, int arrow, Rational c) {
  Path p = Path::of_arrow(*quiver, arrow);
  return path(std::move(quiver), truncation, std::move(p), std::move(c));
}

FreeElement FreeElement::idempotent(QuiverPtr quiver, int truncation, int vertex) {
  return path(std::move(quiver), truncation, Path::idempotent(vertex));
}

FreeElement FreeElement::unit(QuiverPtr quiver, int truncation) {
  FreeElement f(quiver, truncation);
  for (int v = 0; v < quiver->num_vertices(); ++v) f.add_term(Path::idempotent(v), 1);
  return f;
}

void FreeElement::add_term(const Path& p, const Rational& c) {
  if (c == 0 || p.length() > truncation_) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational FreeElement::coefficient(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

namespace {

void check_same_quiver(const QuiverPtr& a, const QuiverPtr& b) {
  if (a && b && a != b && !(*a == *b)) throw Error(ErrorKind::QuiverMismatch, "elements live over different quivers");
}

}  // namespace

FreeElement& FreeElement::operator+=(const FreeElement& other) {
  if (!quiver_) {
    *this = other;
    return *this;
  }
  check_same_quiver(quiver_, other.quiver_);
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& other) {
  if (!quiver_) {
    *this = -other;
    return *this;
  }
  check_same_quiver(quiver_, other.quiver_);
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

FreeElement& FreeElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

FreeElement FreeElement::operator-() const {
  FreeElement out = *this;
  for (auto& [p, v] : out.terms_) v = -v;
  return out;
}

FreeElement multiply(const FreeElement& f, const FreeElement& g, int truncation) {
  check_same_quiver(f.quiver(), g.quiver());
  FreeElement out(f.quiver() ? f.quiver() : g.quiver(), truncation);
  for (const auto& [p, a] : f.terms()) {
    for (const auto& [q, b] : g.terms()) {
      if (p.length() + q.length() > truncation) continue;
      if (auto pq = concat(p, q)) out.add_term(*pq, a * b);
    }
  }
  return out;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
  return multiply(a, b, std::min(a.truncation(), b.truncation()));
}

bool FreeElement::operator==(const FreeElement& other) const {
  if (terms_.empty() && other.terms_.empty()) return true;
  check_same_quiver(quiver_, other.quiver_);
  return terms_ == other.terms_;
}

FreeElement FreeElement::with_truncation(int truncation) const {
  FreeElement out(quiver_, truncation);
  for (const auto& [p, c] : terms_) out.add_term(p, c);
  return out;
}

FreeElement FreeElement::length_component(int length) const {
  FreeElement out(quiver_, truncation_);
  for (const auto& [p, c] : terms_)
    if (p.length() == length) out.terms_.emplace(p, c);
  return out;
}

FreeElement FreeElement::degree_component(int degree) const {
  FreeElement out(quiver_, truncation_);
  for (const auto& [p, c] : terms_)
    if (path_degree(*quiver_, p) == degree) out.terms_.emplace(p, c);
  return out;
}

std::vector<int> FreeElement::degrees() const {
  std::vector<int> out;
  for (const auto& [p, c] : terms_) out.push_back(path_degree(*quiver_, p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int FreeElement::degree() const {
  auto d = degrees();
  if (d.size() != 1) throw Error(ErrorKind::DegreeMismatch, "element is zero or not homogeneous: " + to_string());
  return d.front();
}

int FreeElement::min_length() const {
  int m = truncation_ + 1;
  for (const auto& [p, c] : terms_) m = std::min(m, p.length());
  return m;
}

int FreeElement::max_length() const {
  int m = -1;
  for (const auto& [p, c] : terms_) m = std::max(m, p.length());
  return m;
}

FreeElement FreeElement::vertex_component(int vertex) const {
  FreeElement out(quiver_, truncation_);
  for (const auto& [p, c] : terms_)
    if (p.src == vertex && p.tgt == vertex) out.terms_.emplace(p, c);
  return out;
}

bool FreeElement::contains_arrow(int arrow) const {
  for (const auto& [p, c] : terms_)
    if (std::find(p.arrows.begin(), p.arrows.end(), arrow) != p.arrows.end()) return true;
  return false;
}

namespace {

std::string format_terms(const GradedQuiver* q, const TermMap& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (a != 1) os << gkit::to_string(a) << " ";
    os << path_to_string(*q, p);
  }
  return os.str();
}

}  // namespace

std::string FreeElement::to_string() const { return quiver_ ? format_terms(quiver_.get(), terms_) : "0"; }

FreeElement graded_commutator(const FreeElement& f, const FreeElement& g) {
  FreeElement out(f.quiver(), std::min(f.truncation(), g.truncation()));
  for (int df : f.degrees()) {
    FreeElement fi = f.degree_component(df);
    for (int dg : g.degrees()) {
      FreeElement gj = g.degree_component(dg);
      out += fi * gj;
      out -= Rational(koszul_sign(df, dg)) * (gj * fi);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cyclic words

std::optional<std::pair<Path, int>> canonical_rotation(const GradedQuiver& q, const Path& cycle) {
  const std::size_t n = cycle.arrows.size();
  if (n == 0) return std::make_pair(cycle, 1);
  // prefix degrees: moving the first k letters to the end costs
  // (-1)^{|p_1||p_2|} with p_1 the first k letters.
  std::vector<int> prefix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + q.arrow(cycle.arrows[i]).degree;
  const int total = prefix[n];
  const auto& w = cycle.arrows;
  auto less_rot = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < n; ++i) {
      int x = w[(a + i) % n], y = w[(b + i) % n];
      if (x != y) return x < y;
    }
    return false;
  };
  std::size_t best = 0;
  for (std::size_t k = 1; k < n; ++k)
    if (less_rot(k, best)) best = k;
  const int sign = koszul_sign(prefix[best], total - prefix[best]);
  for (std::size_t k = 0; k < n; ++k) {
    if (k == best || less_rot(k, best) || less_rot(best, k)) continue;
    // same word at two rotations: the class survives only if signs agree
    if (koszul_sign(prefix[k], total - prefix[k]) != sign) return std::nullopt;
  }
  Path out;
  out.arrows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.arrows.push_back(w[(best + i) % n]);
  out.src = q.arrow(out.arrows.front()).src;
  out.tgt = out.src;
  return std::make_pair(std::move(out), sign);
}

CyclicElement::CyclicElement(QuiverPtr quiver, int truncation) : quiver_(std::move(quiver)), truncation_(truncation) {}

void CyclicElement::add_cycle(const Path& cycle, const Rational& c) {
  if (c == 0 || !cycle.is_cycle() || cycle.length() > truncation_) return;
  auto canon = canonical_rotation(*quiver_, cycle);
  if (!canon) return;
  Rational v = c * canon->second;
  auto it = terms_.find(canon->first);
  if (it == terms_.end()) {
    terms_.emplace(std::move(canon->first), std::move(v));
  } else {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

CyclicElement& CyclicElement::operator+=(const CyclicElement& other) {
  if (!quiver_) {
    *this = other;
    return *this;
  }
  check_same_quiver(quiver_, other.quiver_);
  for (const auto& [p, c] : other.terms_) add_cycle(p, c);
  return *this;
}

CyclicElement& CyclicElement::operator-=(const CyclicElement& other) {
  if (!quiver_) {
    *this = other;
    *this *= Rational(-1);
    return *this;
  }
  check_same_quiver(quiver_, other.quiver_);
  for (const auto& [p, c] : other.terms_) add_cycle(p, -c);
  return *this;
}

CyclicElement& CyclicElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

bool CyclicElement::operator==(const CyclicElement& other) const {
  if (terms_.empty() && other.terms_.empty()) return true;
  check_same_quiver(quiver_, other.quiver_);
  return terms_ == other.terms_;
}

FreeElement CyclicElement::representative() const {
  FreeElement f(quiver_, truncation_);
  for (const auto& [p, c] : terms_) f.add_term(p, c);
  return f;
}

std::vector<int> CyclicElement::degrees() const { return representative().degrees(); }

int CyclicElement::degree() const { return representative().degree(); }

int CyclicElement::min_length() const { return representative().min_length(); }

std::string CyclicElement::to_string() const { return quiver_ ? format_terms(quiver_.get(), terms_) : "0"; }

CyclicElement to_cyclic(const FreeElement& f) {
  CyclicElement out(f.quiver(), f.truncation());
  for (const auto& [p, c] : f.terms()) out.add_cycle(p, c);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void enumerate_paths(const GradedQuiver& q, const std::vector<int>& arrows, int from, int length, Path& current,
                     const std::function<void(const Path&)>& emit) {
  if (current.length() == length) {
    emit(current);
    return;
  }
  for (int a : arrows) {
    const Arrow& arr = q.arrow(a);
    if (arr.src != current.tgt) continue;
    current.arrows.push_back(a);
    int saved = current.tgt;
    current.tgt = arr.tgt;
    enumerate_paths(q, arrows, from, length, current, emit);
    current.tgt = saved;
    current.arrows.pop_back();
  }
}

}  // namespace

std::map<int, FreeElement> commutator_decompose(const FreeElement& c, const std::vector<int>& generators) {
  const GradedQuiver& q = c.q();
  std::map<int, FreeElement> result;
  for (int x : generators) result.emplace(x, FreeElement(c.quiver(), c.truncation()));
  if (c.is_zero()) return result;
  const int n = c.min_length();
  if (c.max_length() != n) throw Error(ErrorKind::PreconditionFailed, "commutator_decompose needs a length-homogeneous input");
  for (const auto& [p, v] : c.terms())
    if (!p.is_cycle()) throw Error(ErrorKind::PreconditionFailed, "commutator_decompose needs cycles, got " + path_to_string(q, p));
  if (!to_cyclic(c).is_zero())
    throw Error(ErrorKind::NotInCommutatorSpace, "class of " + c.to_string() + " in the commutator quotient is nonzero");
  if (n == 0) return result;

  std::map<Path, int> row_of;
  auto row = [&](const Path& p) {
    auto [it, inserted] = row_of.emplace(p, static_cast<int>(row_of.size()));
    return it->second;
  };
  struct Column {
    int gen;
    Path path;
  };
  std::vector<Column> cols;
  std::vector<SparseVec> images;
  for (int x : generators) {
    const Arrow& ax = q.arrow(x);
    Path cur = Path::idempotent(ax.tgt);
    enumerate_paths(q, generators, ax.tgt, n - 1, cur, [&](const Path& p) {
      if (p.tgt != ax.src) return;
      const int sign = koszul_sign(ax.degree, path_degree(q, p));
      Path xp = *concat(Path::of_arrow(q, x), p);
      Path px = *concat(p, Path::of_arrow(q, x));
      std::vector<std::pair<int, Rational>> entries{{row(xp), Rational(1)}, {row(px), Rational(-sign)}};
      cols.push_back({x, p});
      images.push_back(make_sparse(std::move(entries)));
    });
  }
  std::vector<std::pair<int, Rational>> rhs_entries;
  for (const auto& [p, v] : c.terms()) rhs_entries.emplace_back(row(p), v);
  SparseVec rhs = make_sparse(std::move(rhs_entries));

  SparseMatrix m(static_cast<int>(row_of.size()), static_cast<int>(cols.size()));
  m.columns = std::move(images);
  auto sol = solve(m, rhs);
  if (!sol) throw Error(ErrorKind::NotInCommutatorSpace, "no decomposition over the given generators for " + c.to_string());
  for (const auto& [j, v] : *sol) {
    const Column& col = cols[static_cast<std::size_t>(j)];
    result.at(col.gen).add_term(col.path, v);
  }
  return result;
}

nlohmann::json element_to_json(const FreeElement& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [p, c] : f.terms())
    out.push_back({{"path", path_to_string(f.q(), p)}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  return out;
}

nlohmann::json element_to_json(const CyclicElement& f) { return element_to_json(f.representative()); }

FreeElement element_from_json(QuiverPtr quiver, int truncation, const nlohmann::json& j) {
  FreeElement f(quiver, truncation);
  try {
    for (const auto& t : j) {
      Path p = Path::parse(*quiver, t.at("path").get<std::string>());
      auto text = [](const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>()); };
      Rational c = parse_rational(text(t.at("num")) + "/" + text(t.value("den", nlohmann::json("1"))));
      f.add_term(p, c);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SyntaxError, std::string("bad element JSON: ") + e.what());
  }
  return f;
}

FreeElement substitute(const FreeElement& f, const std::map<int, FreeElement>& images) {
  const int N = f.truncation();
  FreeElement out(f.quiver(), N);
  for (const auto& [p, c] : f.terms()) {
    FreeElement acc = FreeElement::idempotent(f.quiver(), N, p.src);
    for (int a : p.arrows) {
      auto it = images.find(a);
      FreeElement img = it != images.end() ? it->second : FreeElement::arrow(f.quiver(), N, a);
      acc = multiply(acc, img, N);
      if (acc.is_zero()) break;
    }
    acc *= c;
    out += acc;
  }
  return out;
}

}  // namespace gkit
