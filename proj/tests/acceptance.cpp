// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gkit/ainfty.hpp"
#include "gkit/error.hpp"
#include "gkit/finite_algebra.hpp"
#include "gkit/hochschild.hpp"
#include "gkit/job.hpp"
#include "gkit/xcomplex.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace gkit;
using namespace testing_support;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double bound_seconds;
  std::function<void(Outcome&)> body;
};

const char* kDemo = "vertices: 1\narrows: x 1 1 0\nd = 3\nw = 0\nd z = x*x' - x'*x + x*x*x' - x*x'*x\ntruncate = 8\n";

long oracle_jacobi_total(const Example& e, int N) {
  oracle::Quiver oq;
  for (const Arrow& a : e.quiver->arrows()) {
    oq.arrows.emplace_back(a.src, a.tgt);
    oq.degree.push_back(a.degree);
  }
  std::vector<oracle::Poly> rels;
  for (int a = 0; a < e.quiver->num_arrows(); ++a) {
    oracle::Poly r;
    for (const auto& [chain, c] : e.w)
      for (const auto& [word, q] : oracle::circular_derivative(oq, Path::parse(*e.quiver, chain).arrows, a)) r[word] += c * q;
    rels.push_back(r);
  }
  long total = 0;
  for (long v : oracle::quotient_dims(oq, rels, N)) total += v;
  return total;
}

void d_squared(Outcome& o) {
  for (const Example& e : standard_suite()) {
    CheckReport r = verify_d_squared(build(e, 8));
    o.require(r.pass, "d^2 != 0 for " + e.name);
  }
  o.detail << "4 presentations at N=8";
}

void jacobi(Outcome& o) {
  const auto suite = standard_suite();
  for (int N = 4; N <= 10; ++N)
    for (int which : {0, 1}) {
      const Example& e = suite[static_cast<std::size_t>(which)];
      const long expect = which == 0 ? 2 : 3;
      const int h = homology_dims(build(e, N), 0, 0).rows.at(0).h;
      const long oracle_dim = oracle_jacobi_total(e, N);
      o.require(h == expect && oracle_dim == expect,
                e.name + " N=" + std::to_string(N) + ": H0=" + std::to_string(h) + " oracle=" + std::to_string(oracle_dim));
    }
  const int a2 = homology_dims(build(suite[3], 8), 0, 0).rows.at(0).h;
  oracle::Quiver oq;
  oq.vertices = 2;
  oq.arrows = {{0, 1}, {1, 0}};
  oq.degree = {0, 0};
  long a2_oracle = 0;
  for (long v : oracle::quotient_dims(oq, {oracle::Poly{{{0, 1}, 1}}, oracle::Poly{{{1, 0}, -1}}}, 8)) a2_oracle += v;
  o.require(a2 == 4 && a2_oracle == 4, "A2: H0=" + std::to_string(a2) + " oracle=" + std::to_string(a2_oracle));
  o.detail << "x^3 -> 2, x^4 -> 3 for N=4..10; A2 -> 4";
}

void sign_laws(Outcome& o) {
  LawTally t = run_sign_laws(20240611u, 200);
  o.require(t.potentials >= 200, "only " + std::to_string(t.potentials) + " potentials");
  for (const auto& f : t.failures) o.require(false, f);
  o.detail << t.potentials << " potentials; " << t.rotation << " rotation, " << t.leibniz << " Leibniz, " << t.antisymmetry
           << " antisymmetry, " << t.eta_vanishing << " eta checks";
}

void round_trip(Outcome& o) {
  int tested = 0;
  for (const Example& e : standard_suite()) {
    const CyclicElement w = potential(*e.quiver, e.d, 8, e.w);
    ExtractionResult r = extract_superpotential(build(e, 8));
    o.require(r.w == w && r.round_trip.pass, "round trip of " + e.name);
    ++tested;
  }
  std::mt19937 rng(31337u);
  int random_tested = 0;
  for (int k = 0; k < 4000 && random_tested < 60; ++k) {
    const int d = 3 + static_cast<int>(rng() % 4);
    QuiverPtr q = random_quiver(rng, d);
    QuiverPtr g = ginzburg_quiver(*q, d);
    CyclicElement w = random_cyclic(rng, g, 7, 5, 3 - d);
    if (w.is_zero() || w.min_length() < 3) continue;
    if (!check_master_equation(w, d, PairingElement::standard(g, d), 7).zero) continue;
    ++random_tested;
    try {
      ExtractionResult r = extract_superpotential(build_ginzburg(*q, d, w, 7));
      o.require(r.w == w && r.round_trip.pass, "round trip of " + w.to_string() + " (d=" + std::to_string(d) + ")");
    } catch (const Error& err) {
      o.require(false, w.to_string() + ": " + err.what());
    }
  }
  o.require(random_tested >= 40, "only " + std::to_string(random_tested) + " random potentials");
  o.detail << tested << " suite potentials and " << random_tested << " random ones";
}

void normalization(Outcome& o) {
  DGPresentation p = presentation(parse_spec(kDemo));
  NormalizationResult n = normalize_dz(p);
  const std::string dz = n.normalized.differential(n.normalized.generator("z")).to_string();
  o.require(dz == "x*x' - x'*x", "normalized dz = " + dz);
  o.require(verify_d_squared(n.normalized).pass, "d^2 after normalization");
  const FreeElement dz_new = n.normalized.differential(n.normalized.generator("z"));
  o.require(dz_new.max_length() == 2, "dz has terms beyond length 2");
  for (int len = 3; len <= 8; ++len)
    o.require(dz_new.length_component(len).is_zero(), "eta'_" + std::to_string(len) + " != 0");
  NormalizationResult again = normalize_dz(n.normalized);
  o.require(again.identity, "second pass is not the identity");
  o.detail << "dz -> " << dz << ", eta'_3..eta'_8 = 0, idempotent";
}

void mixed_complexes(Outcome& o) {
  auto audit = [&](const MixedComplex& M, const std::string& name) {
    InvariantReport inv = check_mixed_invariants(M);
    o.require(inv.pass(), name + ": b^2, B^2 or bB+Bb nonzero");
    MixedHomologyReport r = mixed_homology_report(M);
    o.require(r.audit_exact, name + ": SBI audit not exact");
    o.require(!r.reliable.empty(), name + ": no interior degrees");
    return r;
  };
  MixedComplex dual = hochschild_mixed(truncated_path_algebra(loops({{"x", 0}}), 1), 6, -6, 0);
  MixedHomologyReport r1 = audit(dual, "k[x]/(x^2)");
  DGPresentation p = build(standard_suite()[0], 4);
  MixedComplex pi = hochschild_mixed(truncated_algebra(p, 4), 6, -6, 0);
  MixedHomologyReport r2 = audit(pi, "Pi(x^3) N=4");
  XComplex x = build_x_complex(build(standard_suite()[0], 4));
  o.require(check_mixed_invariants(x_mixed_complex(x)).pass(), "X-complex mixed complex");
  o.require(check_mixed_invariants(tensor_hochschild(p)).pass(), "tensor Hochschild complex");
  o.detail << "audits at " << r1.reliable.size() << " + " << r2.reliable.size() << " interior degrees";
}

void x_complex(Outcome& o) {
  DGPresentation free;
  free.quiver = loops({{"x", 0}});
  free.truncation = 5;
  free.diff = DerivationTable(free.quiver, 5, 1);
  XComparison f = x_complex_report(free);
  o.require(f.agree, "free algebra: tables differ");
  long necklaces = 0, cyclic_words = 0;
  for (int L = 0; L <= 5; ++L) {
    necklaces += oracle::necklace_count(1, L);
    if (L > 0) cyclic_words += oracle::necklace_count(1, L);
  }
  o.require(f.hochschild.at(0) == necklaces, "free algebra HH_0 " + std::to_string(f.hochschild.at(0)) + " vs necklaces " + std::to_string(necklaces));
  o.require(f.hochschild.at(1) == cyclic_words, "free algebra HH_1 " + std::to_string(f.hochschild.at(1)) + " vs " + std::to_string(cyclic_words));
  XComparison pi = x_complex_report(build(standard_suite()[0], 4));
  o.require(pi.agree, "Pi(x^3) N=4: tables differ");
  o.detail << "free algebra N=5 (" << f.hochschild.size() << " degrees), Pi(x^3) N=4 (" << pi.hochschild.size() << " degrees)";
}

void cyclic(Outcome& o) {
  for (const Example& e : standard_suite()) {
    AInftyAlgebra k = koszul_dual(normalize_dz(build(e, 8)).normalized, 6);
    o.require(check_stasheff(k).pass, e.name + ": Stasheff");
    CyclicReport c = cyclic_structure_check(k, e.d);
    o.require(c.pass(), e.name + ": cyclic checks");
  }
  AInftyAlgebra bad = koszul_dual(presentation(parse_spec(kDemo)), 6);
  CyclicReport c = cyclic_structure_check(bad, 3);
  o.require(!c.image_in_wc && !c.witnesses.empty(), "un-normalized demo passes check (iii)");
  o.detail << "suite duals cyclic; demo witness: " << (c.witnesses.empty() ? "none" : c.witnesses.front());
}

void nondegeneracy(Outcome& o) {
  DGPresentation p = build(standard_suite()[0], 6);
  const GradedQuiver& g = *p.quiver;
  const int z = g.require_arrow("z"), x = g.require_arrow("x"), xs = g.require_arrow("x'");
  const FreeElement zero(p.quiver, 6);
  OneForm dz(p.quiver, 6);
  dz.add(Path::idempotent(0), z, 1);
  NondegeneracyReport a = check_nondegenerate_class(p, {dz, zero});
  o.require(a.nondegenerate && a.u.size() == 1 && a.u[0] == 1, "(Dz,0) not accepted with u=1");
  OneForm dx(p.quiver, 6);
  dx.add(Path::idempotent(0), x, 1);
  o.require(!check_nondegenerate_class(p, {dx, zero}).nondegenerate, "(Dx,0) accepted");
  OneForm beta(p.quiver, 6);
  beta.add(Path::of_arrow(g, xs), z, 1);
  OneForm omega = dz;
  omega *= 2;
  omega += form_differential(beta, p.diff);
  NondegeneracyReport s = check_nondegenerate_class(p, {omega, d_one(beta)});
  o.require(s.nondegenerate && s.u.size() == 1 && s.u[0] == 2, "scaled cocycle not accepted with u=2");
  o.detail << "(Dz,0) u=1, (Dx,0) rejected, 2Dz + d(x'Dz) u=2";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "d^2 = 0 suite", 5, d_squared},
      {2, "Jacobi dimensions vs normal-form oracle", 30, jacobi},
      {3, "circular derivative and bracket sign laws", 60, sign_laws},
      {4, "superpotential round trip", 30, round_trip},
      {5, "normalization of dz", 5, normalization},
      {6, "mixed complex identities and SBI audit", 60, mixed_complexes},
      {7, "X-complex vs Hochschild", 60, x_complex},
      {8, "cyclic A-infinity Koszul duals", 30, cyclic},
      {9, "non-degeneracy criterion", 5, nondegeneracy},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    if (!o.pass) o.detail << " | ";
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs <= c.bound_seconds, "exceeded time bound");
    if (!o.pass) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", secs, c.bound_seconds);
    std::cout << "criterion " << c.id << " [" << (o.pass ? "PASS" : "FAIL") << "] " << c.title << " (" << timing << "): "
              << o.detail.str() << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
