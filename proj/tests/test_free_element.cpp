#include <doctest.h>

#include <random>

#include "gkit/error.hpp"
#include "gkit/free_element.hpp"
#include "helpers.hpp"

using namespace gkit;
using namespace testing_support;

namespace {

QuiverPtr x3_quiver() { return ginzburg_quiver(*loops({{"x", 0}}), 3); }

FreeElement el(QuiverPtr g, int N, std::initializer_list<std::pair<const char*, Rational>> terms) {
  FreeElement f(g, N);
  for (const auto& [chain, c] : terms) f.add_term(Path::parse(*g, chain), c);
  return f;
}

}  // namespace

TEST_CASE("products concatenate composable paths and vanish otherwise") {
  QuiverPtr g = ginzburg_quiver(*a2(), 3);
  FreeElement a = FreeElement::arrow(g, 5, g->require_arrow("a"));
  FreeElement as = FreeElement::arrow(g, 5, g->require_arrow("a'"));
  CHECK((a * as).to_string() == "a*a'");
  CHECK((a * a).is_zero());
  CHECK((FreeElement::idempotent(g, 5, 0) * a) == a);
  CHECK((a * FreeElement::idempotent(g, 5, 0)).is_zero());
}

TEST_CASE("truncation drops long terms") {
  QuiverPtr g = x3_quiver();
  FreeElement x = FreeElement::arrow(g, 2, 0);
  CHECK((x * x * x).is_zero());
  CHECK((x * x).size() == 1);
}

TEST_CASE("graded commutator uses the Koszul sign") {
  QuiverPtr g = x3_quiver();
  FreeElement x = FreeElement::arrow(g, 4, g->require_arrow("x"));
  FreeElement xs = FreeElement::arrow(g, 4, g->require_arrow("x'"));
  CHECK(graded_commutator(x, xs).to_string() == "x*x' - x'*x");
  // x' has odd degree, so [x', x'] = 2 x'x'
  CHECK(graded_commutator(xs, xs) == el(g, 4, {{"x'*x'", 2}}));
}

TEST_CASE("rotation classes") {
  QuiverPtr g = x3_quiver();
  CyclicElement c(g, 6);
  c.add_cycle(Path::parse(*g, "x'*x"), 1);
  c.add_cycle(Path::parse(*g, "x*x'"), -1);
  CHECK(c.is_zero());

  // x'x' is fixed by rotation with sign -1: its class vanishes
  CHECK_FALSE(canonical_rotation(*g, Path::parse(*g, "x'*x'")).has_value());
  CyclicElement odd(g, 6);
  odd.add_cycle(Path::parse(*g, "x'*x'"), 1);
  CHECK(odd.is_zero());

  // rotating an odd letter past an odd block flips the sign
  CyclicElement r(g, 6);
  r.add_cycle(Path::parse(*g, "x'*z"), 1);
  r.add_cycle(Path::parse(*g, "z*x'"), 1);
  CHECK(r.is_zero() == false);
  CyclicElement s(g, 6);
  s.add_cycle(Path::parse(*g, "x*x'*x*z"), 1);
  s.add_cycle(Path::parse(*g, "x*z*x*x'"), -1);
  CHECK(s.is_zero());
}

TEST_CASE("commutator decomposition") {
  QuiverPtr g = x3_quiver();
  FreeElement c = el(g, 6, {{"x*x*x'", 1}, {"x*x'*x", -1}});
  auto parts = commutator_decompose(c, g->non_z_arrows());
  FreeElement back(g, 6);
  for (const auto& [a, eta] : parts) back += graded_commutator(FreeElement::arrow(g, 6, a), eta);
  CHECK(back == c);
  CHECK_THROWS_AS(commutator_decompose(el(g, 6, {{"x*x*x", 1}}), g->non_z_arrows()), Error);
}

TEST_CASE("substitution is an algebra map") {
  QuiverPtr g = x3_quiver();
  const int x = g->require_arrow("x");
  FreeElement img = el(g, 6, {{"x", 1}, {"x*x", 2}});
  FreeElement f = el(g, 6, {{"x*x", 1}});
  CHECK(substitute(f, {{x, img}}) == img * img);
}

TEST_CASE("element JSON round trip") {
  QuiverPtr g = x3_quiver();
  FreeElement f = el(g, 6, {{"x*x'", Rational(1, 3)}, {"z", -2}, {"e", 5}});
  CHECK(element_from_json(g, 6, element_to_json(f)) == f);
}

TEST_CASE("property: commutators vanish in the cyclic quotient") {
  std::mt19937 rng(8675309);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 5);
    QuiverPtr g = ginzburg_quiver(*random_quiver(rng, d), d);
    const int v = static_cast<int>(rng() % static_cast<unsigned>(g->num_vertices()));
    auto p = random_path(rng, *g, v, 1 + static_cast<int>(rng() % 3));
    if (!p) continue;
    auto back = random_path(rng, *g, p->tgt, 1 + static_cast<int>(rng() % 3));
    if (!back || back->tgt != p->src) continue;
    FreeElement a = FreeElement::path(g, 8, *p);
    FreeElement b = FreeElement::path(g, 8, *back);
    CHECK(to_cyclic(graded_commutator(a, b)).is_zero());
    ++checked;
  }
  CHECK(checked > 20);
}
