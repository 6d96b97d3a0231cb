#include "gkit/forms.hpp"

#include <sstream>

#include "gkit/error.hpp"

namespace gkit {

int term_degree(const GradedQuiver& q, const OneForm::Key& k) { return path_degree(q, k.first) + q.arrow(k.second).degree; }

void OneForm::add(const Path& f, int v, const Rational& c) {
  if (c == 0 || f.length() + 1 > truncation_) return;
  const Arrow& a = quiver_->arrow(v);
  if (f.src != a.tgt || f.tgt != a.src) throw Error(ErrorKind::PreconditionFailed, "coefficient path does not close up around D" + a.name);
  auto [it, inserted] = terms_.emplace(Key{f, v}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void OneForm::add_product(const Path& pre, int v, const Path& post, const Rational& c) {
  if (pre.length() + post.length() + 1 > truncation_) return;
  const int dpre = path_degree(*quiver_, pre);
  const int dpost = path_degree(*quiver_, post);
  auto f = concat(post, pre);
  if (!f) return;
  add(*f, v, c * koszul_sign(dpost, dpre + quiver_->arrow(v).degree));
}

OneForm& OneForm::operator+=(const OneForm& other) {
  if (!quiver_) {
    *this = other;
    return *this;
  }
  for (const auto& [k, c] : other.terms_) add(k.first, k.second, c);
  return *this;
}

OneForm& OneForm::operator*=(const Rational& c) {
  if (c == 0) terms_.clear();
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string OneForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << gkit::to_string(c) << " ";
    if (!k.first.empty()) os << path_to_string(*quiver_, k.first) << " ";
    os << "D" << quiver_->arrow(k.second).name;
  }
  return os.str();
}

OneForm d_zero(const FreeElement& u, int truncation) {
  OneForm out(u.quiver(), truncation);
  for (const auto& [p, c] : u.terms()) {
    if (!p.is_cycle()) continue;
    const std::size_t n = p.arrows.size();
    for (std::size_t i = 0; i < n; ++i) {
      Path pre{p.src, u.q().arrow(p.arrows[i]).src, {p.arrows.begin(), p.arrows.begin() + static_cast<long>(i)}};
      Path post{u.q().arrow(p.arrows[i]).tgt, p.tgt, {p.arrows.begin() + static_cast<long>(i) + 1, p.arrows.end()}};
      out.add_product(pre, p.arrows[i], post, c);
    }
  }
  return out;
}

FreeElement d_one(const OneForm& w) {
  FreeElement out(w.quiver(), w.truncation());
  for (const auto& [k, c] : w.terms()) {
    const Path v = Path::of_arrow(w.q(), k.second);
    const int s = koszul_sign(path_degree(w.q(), k.first), w.q().arrow(k.second).degree);
    out.add_term(*concat(k.first, v), c);
    out.add_term(*concat(v, k.first), -c * s);
  }
  return out;
}

OneForm form_differential(const OneForm& w, const DerivationTable& diff) {
  OneForm out(w.quiver(), w.truncation());
  const GradedQuiver& q = w.q();
  for (const auto& [k, c] : w.terms()) {
    const Path& f = k.first;
    const int v = k.second;
    FreeElement df = diff.apply(FreeElement::path(w.quiver(), w.truncation(), f));
    for (const auto& [g, a] : df.terms()) out.add(g, v, c * a);
    const int sf = parity_sign(path_degree(q, f));
    const FreeElement dv = diff.on(v);
    for (const auto& [p, a] : dv.terms()) {
      // f * pre * Dp_i * post  ->  post * f * pre * Dp_i
      for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        Path pre{f.src, q.arrow(p.arrows[i]).src, f.arrows};
        pre.arrows.insert(pre.arrows.end(), p.arrows.begin(), p.arrows.begin() + static_cast<long>(i));
        Path post{q.arrow(p.arrows[i]).tgt, p.tgt, {p.arrows.begin() + static_cast<long>(i) + 1, p.arrows.end()}};
        out.add_product(pre, p.arrows[i], post, c * a * sf);
      }
    }
  }
  return out;
}

std::map<int, Rational> residue(const OneForm& w) {
  std::map<int, Rational> out;
  for (const auto& [k, c] : w.terms()) {
    if (!k.first.empty()) continue;
    out[k.second] += c;
    if (out[k.second] == 0) out.erase(k.second);
  }
  return out;
}

}  // namespace gkit
