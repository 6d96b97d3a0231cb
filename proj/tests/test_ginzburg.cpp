#include <doctest.h>

#include "gkit/error.hpp"
#include "gkit/ginzburg.hpp"
#include "gkit/job.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace gkit;
using namespace testing_support;

namespace {

/// dim of kQ/(d°w/da) up to length N, with w a sum of words in the loops of q.
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

DGPresentation demo(int N) {
  JobSpec s = parse_spec("vertices: 1\narrows: x 1 1 0\nd = 3\nw = 0\nd z = x*x' - x'*x + x*x*x' - x*x'*x\ntruncate = " +
                         std::to_string(N) + "\n");
  return presentation(s);
}

}  // namespace

TEST_CASE("d^2 = 0 on the standard suite") {
  for (const Example& e : standard_suite()) {
    CAPTURE(e.name);
    DGPresentation p = build(e, 8);
    CheckReport r = verify_d_squared(p);
    CHECK(r.pass);
    CHECK(r.witnesses.empty());
  }
}

TEST_CASE("generator differentials of x^3") {
  DGPresentation p = build(standard_suite()[0], 6);
  CHECK(p.differential(p.generator("x")).is_zero());
  CHECK(p.differential(p.generator("x'")).to_string() == "-3 x*x");
  CHECK(p.differential(p.generator("z")).to_string() == "x*x' - x'*x");
}

TEST_CASE("Jacobi dimensions agree with the quotient oracle") {
  for (int N = 4; N <= 8; ++N) {
    CAPTURE(N);
    for (int which : {0, 1}) {
      DGPresentation p = build(standard_suite()[static_cast<std::size_t>(which)], N);
      HomologyTable h = homology_dims(p, 0, 0);
      const long expect = which == 0 ? 2 : 3;
      CHECK(h.rows.at(0).h == expect);
      CHECK(oracle_jacobi_total(standard_suite()[static_cast<std::size_t>(which)], N) == expect);
      CHECK(static_cast<long>(h.jacobi_basis.size()) == expect);
    }
  }
  DGPresentation p = build(standard_suite()[3], 8);
  HomologyTable h = homology_dims(p, 0, 0);
  CHECK(h.rows.at(0).h == 4);
  // preprojective relations of A2 live in dz, not in a degree -1 arrow
  oracle::Quiver oq;
  oq.vertices = 2;
  oq.arrows = {{0, 1}, {1, 0}};
  oq.degree = {0, 0};
  const oracle::Poly r1{{{0, 1}, 1}};
  const oracle::Poly r2{{{1, 0}, -1}};
  long total = 0;
  for (long v : oracle::quotient_dims(oq, {r1, r2}, 8)) total += v;
  CHECK(total == 4);
}

TEST_CASE("homology table is consistent") {
  DGPresentation p = build(standard_suite()[0], 6);
  HomologyTable h = homology_dims(p, -3, 0);
  for (const auto& [deg, row] : h.rows) {
    CAPTURE(deg);
    CHECK(row.h == row.z - row.b);
    CHECK(row.h >= 0);
  }
}

TEST_CASE("superpotential round trip") {
  for (const Example& e : standard_suite()) {
    CAPTURE(e.name);
    DGPresentation p = build(e, 8);
    ExtractionResult r = extract_superpotential(p);
    CHECK(r.round_trip.pass);
    CHECK(r.w == potential(*e.quiver, e.d, 8, e.w));
  }
}

TEST_CASE("superpotential round trip on random degree-0 potentials") {
  std::mt19937 rng(77);
  int done = 0;
  for (int k = 0; k < 400 && done < 15; ++k) {
    QuiverPtr q = loops({{"x", 0}, {"y", 0}});
    QuiverPtr g = ginzburg_quiver(*q, 3);
    CyclicElement w = random_cyclic(rng, g, 7, 4, 0);
    if (w.is_zero() || w.min_length() < 3) continue;
    ++done;
    DGPresentation p = build_ginzburg(*q, 3, w, 7);
    ExtractionResult r = extract_superpotential(p);
    CAPTURE(w.to_string());
    CHECK(r.w == w);
  }
  CHECK(done > 5);
}

TEST_CASE("normalization of the non-standard dz") {
  DGPresentation p = demo(8);
  CHECK(verify_d_squared(p).pass);
  NormalizationResult n = normalize_dz(p);
  CHECK_FALSE(n.identity);
  CHECK(n.normalized.differential(n.normalized.generator("z")).to_string() == "x*x' - x'*x");
  CHECK(verify_d_squared(n.normalized).pass);
  NormalizationResult again = normalize_dz(n.normalized);
  CHECK(again.identity);
  const FreeElement dz = n.normalized.differential(n.normalized.generator("z"));
  for (int len = 3; len <= 8; ++len) CHECK(dz.length_component(len).is_zero());
  bool original_has_eta3 = false;
  for (const auto& step : n.steps)
    for (const auto& [v, e] : step.eta) original_has_eta3 |= step.length == 3 && !e.is_zero();
  CHECK(original_has_eta3);
  CHECK(again.normalized.diff.values == n.normalized.diff.values);
}

TEST_CASE("normalization leaves the standard form alone") {
  NormalizationResult n = normalize_dz(build(standard_suite()[0], 8));
  CHECK(n.identity);
}

TEST_CASE("a dz outside the commutator span is rejected") {
  JobSpec s = parse_spec("vertices: 1\narrows: x 1 1 0\nd = 3\nw = 0\nd z = x*x' - x'*x + x*x*x'\ntruncate = 6\n");
  DGPresentation p = presentation(s);
  try {
    normalize_dz(p);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotCommutatorSum);
  }
}

TEST_CASE("nondegenerate Hochschild classes") {
  DGPresentation p = build(standard_suite()[0], 6);
  const GradedQuiver& g = *p.quiver;
  const int z = g.require_arrow("z"), x = g.require_arrow("x"), xs = g.require_arrow("x'");
  const FreeElement zero(p.quiver, 6);

  OneForm dz(p.quiver, 6);
  dz.add(Path::idempotent(0), z, 1);
  NondegeneracyReport ok = check_nondegenerate_class(p, {dz, zero});
  CHECK(ok.nondegenerate);
  REQUIRE(ok.u.size() == 1);
  CHECK(ok.u[0] == 1);

  OneForm dx(p.quiver, 6);
  dx.add(Path::idempotent(0), x, 1);
  CHECK_FALSE(check_nondegenerate_class(p, {dx, zero}).nondegenerate);

  OneForm dxs(p.quiver, 6);
  dxs.add(Path::idempotent(0), xs, 1);
  try {
    check_nondegenerate_class(p, {dxs, zero});
    FAIL("expected NotACocycle");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotACocycle);
  }

  // 2 Dz plus the boundary of x' Dz, with a = d_one(x' Dz)
  OneForm beta(p.quiver, 6);
  beta.add(Path::of_arrow(g, xs), z, 1);
  OneForm omega = dz;
  omega *= 2;
  omega += form_differential(beta, p.diff);
  NondegeneracyReport scaled = check_nondegenerate_class(p, {omega, d_one(beta)});
  CHECK(scaled.nondegenerate);
  REQUIRE(scaled.u.size() == 1);
  CHECK(scaled.u[0] == 2);
}

TEST_CASE("building rejects potentials of the wrong degree") {
  QuiverPtr q = loops({{"x", 0}});
  CyclicElement w = potential(*q, 3, 6, {{"x*x*x'", 1}});
  try {
    build_ginzburg(*q, 3, w, 6);
    FAIL("expected DegreeMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeMismatch);
  }
}
