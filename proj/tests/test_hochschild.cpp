#include <doctest.h>

#include "gkit/finite_algebra.hpp"
#include "gkit/hochschild.hpp"
#include "gkit/xcomplex.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace gkit;
using namespace testing_support;

namespace {

/// HH_n of k[x]/(x^2) from the 2-periodic resolution: A <-0- A <-2x- A <-0- ...
int periodic_hh(int n) {
  using oracle::Q;
  const std::vector<std::vector<Q>> zero{{0, 0}, {0, 0}};
  const std::vector<std::vector<Q>> two_x{{0, 0}, {2, 0}};
  auto map_in = [&](int m) { return m <= 0 ? 0 : static_cast<int>(oracle::dense_rank(m % 2 == 1 ? zero : two_x)); };
  return 2 - map_in(n) - map_in(n + 1);
}

DGPresentation free_algebra(int loops_count, int N) {
  std::vector<std::pair<std::string, int>> as;
  for (int i = 0; i < loops_count; ++i) as.emplace_back(std::string(1, static_cast<char>('x' + i)), 0);
  DGPresentation p;
  p.quiver = loops(as);
  p.truncation = N;
  p.diff = DerivationTable(p.quiver, N, 1);
  return p;
}

}  // namespace

TEST_CASE("k[x]/(x^2): mixed complex, HH against the periodic resolution") {
  FiniteAlgebra A = truncated_path_algebra(loops({{"x", 0}}), 1);
  REQUIRE(A.size() == 2);
  MixedComplex M = hochschild_mixed(A, 6, -6, 0);
  CHECK(check_mixed_invariants(M).pass());
  MixedHomologyReport r = mixed_homology_report(M);
  CHECK(r.audit_exact);
  for (int n : r.reliable) {
    CAPTURE(n);
    CHECK(r.hh.at(n) == periodic_hh(n));
    // HC of k[x]/(x^2) in characteristic zero: k^2 in even degrees, 0 in odd
    CHECK(r.hc.at(n) == (n % 2 == 0 ? 2 : 0));
  }
  CHECK(r.reliable.count(5));
}

TEST_CASE("k[x]/(x^2) with x of degree -1") {
  FiniteAlgebra A = truncated_path_algebra(loops({{"x", -1}}), 1);
  MixedComplex M = hochschild_mixed(A, 6, -6, 0);
  CHECK(check_mixed_invariants(M).pass());
  MixedHomologyReport r = mixed_homology_report(M);
  CHECK(r.audit_exact);
  for (int n : r.reliable) CHECK(r.hh.at(n) >= 0);
}

TEST_CASE("HC^- at higher u-power stays nonnegative") {
  FiniteAlgebra A = truncated_path_algebra(loops({{"x", 0}}), 1);
  MixedComplex M = hochschild_mixed(A, 8, -8, 0);
  for (int J : {1, 2}) {
    MixedHomologyReport r = mixed_homology_report(M, 1, J);
    CHECK(r.u_power == J);
    CHECK_FALSE(r.hc_minus.empty());
    for (const auto& [n, v] : r.hc_minus) CHECK(v >= 0);
  }
}

TEST_CASE("truncated x^3 Ginzburg algebra: invariants and SBI audit") {
  DGPresentation p = build(standard_suite()[0], 3);
  FiniteAlgebra A = truncated_algebra(p, 3);
  MixedComplex M = hochschild_mixed(A, 4, -4, 0);
  InvariantReport inv = check_mixed_invariants(M);
  CHECK(inv.pass());
  CHECK(inv.witnesses.empty());
  MixedHomologyReport r = mixed_homology_report(M);
  CHECK(r.audit_exact);
  for (const auto& row : r.audit) {
    CAPTURE(row.position);
    CHECK(row.exact());
  }
}

TEST_CASE("free algebras: Hochschild and X-complex against necklace counts") {
  for (auto [k, N] : {std::pair{1, 5}, std::pair{2, 4}}) {
    CAPTURE(k);
    XComparison x = x_complex_report(free_algebra(k, N));
    CHECK(x.agree);
    CHECK(x.invariants.pass());
    long hh0 = 0, hh1 = 0;
    for (int L = 0; L <= N; ++L) {
      hh0 += oracle::necklace_count(k, L);
      if (L > 0) hh1 += oracle::necklace_count(k, L);
    }
    CHECK(x.hochschild.at(0) == hh0);
    CHECK(x.hochschild.at(1) == hh1);
    for (const auto& [m, v] : x.hochschild)
      if (m >= 2) CHECK(v == 0);
  }
}

TEST_CASE("X-complex agrees with Hochschild chains for x^3") {
  XComparison x = x_complex_report(build(standard_suite()[0], 3));
  CHECK(x.agree);
  CHECK(x.mismatched.empty());
}

TEST_CASE("necklace oracle sanity") {
  CHECK(oracle::necklace_count(2, 4) == 6);
  CHECK(oracle::necklace_count(2, 6) == 14);
  CHECK(oracle::necklace_count(3, 3) == 11);
  CHECK(oracle::necklace_count(1, 7) == 1);
}
