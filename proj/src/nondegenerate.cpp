#include "gkit/error.hpp"
#include "gkit/ginzburg.hpp"

namespace gkit {

nlohmann::json NondegeneracyReport::to_json(const GradedQuiver& q) const {
  nlohmann::json j;
  j["check"] = "nondegenerate_class";
  j["status"] = nondegenerate ? "pass" : "fail";
  nlohmann::json res = nlohmann::json::object();
  for (const auto& [g, c] : residue) res[q.arrow(g).name] = to_string(c);
  j["residue"] = res;
  nlohmann::json us = nlohmann::json::array();
  for (const auto& x : u) us.push_back(to_string(x));
  j["u"] = us;
  j["uniform"] = uniform;
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

NondegeneracyReport check_nondegenerate_class(const DGPresentation& p, const HochschildCandidate& c) {
  const GradedQuiver& q = *p.quiver;
  for (int v = 0; v < q.num_vertices(); ++v)
    if (q.z_at(v) < 0) throw Error(ErrorKind::PreconditionFailed, "presentation needs a z-loop at every vertex");
  for (int g = 0; g < q.num_arrows(); ++g)
    if (p.diff.on(g).min_length() < 2)
      throw Error(ErrorKind::PreconditionFailed, "d(" + q.arrow(g).name + ") has a linear or constant part");
  if (!PairingElement::standard(p.quiver, p.d).nondegenerate())
    throw Error(ErrorKind::PreconditionFailed, "quadratic part of dz is degenerate");

  OneForm dw = form_differential(c.omega, p.diff);
  if (!dw.is_zero()) throw Error(ErrorKind::NotACocycle, "d(omega) = " + dw.to_string());
  FreeElement gap = d_one(c.omega).with_truncation(p.truncation) - p.diff.apply(c.a.with_truncation(p.truncation));
  if (!gap.is_zero()) throw Error(ErrorKind::NotACocycle, "d1(omega) - d(a) = " + gap.to_string());

  NondegeneracyReport r;
  r.residue = residue(c.omega);
  bool ok = true;
  for (const auto& [g, coeff] : r.residue) {
    if (q.arrow(g).role != ArrowRole::ZLoop) {
      ok = false;
      r.notes.push_back("residue has a component along " + q.arrow(g).name);
    }
  }
  for (int v = 0; v < q.num_vertices(); ++v) {
    auto it = r.residue.find(q.z_at(v));
    Rational u = it == r.residue.end() ? Rational(0) : it->second;
    if (u == 0) {
      ok = false;
      r.notes.push_back("no z component at vertex " + q.vertices()[static_cast<std::size_t>(v)]);
    }
    r.u.push_back(u);
  }
  r.uniform = true;
  for (const auto& u : r.u) r.uniform = r.uniform && u == r.u.front();
  r.nondegenerate = ok;
  return r;
}

}  // namespace gkit
