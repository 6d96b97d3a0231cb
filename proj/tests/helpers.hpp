#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gkit/ginzburg.hpp"

namespace testing_support {

using namespace gkit;

inline QuiverPtr loops(const std::vector<std::pair<std::string, int>>& arrows) {
  std::vector<Arrow> as;
  for (const auto& [n, deg] : arrows) as.push_back(Arrow{n, 0, 0, deg});
  return make_quiver({"1"}, as);
}

inline QuiverPtr a2() { return make_quiver({"1", "2"}, {Arrow{"a", 0, 1, 0}}); }

/// Sum of c * chain over the Ginzburg quiver of (q, d).
inline CyclicElement potential(const GradedQuiver& q, int d, int N, const std::vector<std::pair<std::string, Rational>>& terms) {
  QuiverPtr g = ginzburg_quiver(q, d);
  CyclicElement w(g, N);
  for (const auto& [chain, c] : terms) w.add_cycle(Path::parse(*g, chain), c);
  return w;
}

struct Example {
  std::string name;
  QuiverPtr quiver;
  int d = 3;
  std::vector<std::pair<std::string, Rational>> w;
};

/// The four presentations of the d^2 suite.
inline std::vector<Example> standard_suite() {
  return {
      {"x^3", loops({{"x", 0}}), 3, {{"x*x*x", 1}}},
      {"x^4", loops({{"x", 0}}), 3, {{"x*x*x*x", 1}}},
      {"xyxy", loops({{"x", 0}, {"y", 0}}), 3, {{"x*y*x*y", 1}}},
      {"A2", a2(), 2, {}},
  };
}

inline DGPresentation build(const Example& e, int N) {
  return build_ginzburg(*e.quiver, e.d, potential(*e.quiver, e.d, N, e.w), N);
}

/// Random quiver with at most 3 vertices and 4 arrows, degrees admissible for d.
inline QuiverPtr random_quiver(std::mt19937& rng, int d) {
  const int nv = 1 + static_cast<int>(rng() % 3);
  const int na = 1 + static_cast<int>(rng() % 4);
  const int lo = -((d - 2) / 2);
  std::vector<std::string> vs;
  for (int i = 0; i < nv; ++i) vs.push_back(std::to_string(i + 1));
  std::vector<Arrow> as;
  for (int i = 0; i < na; ++i) {
    Arrow a;
    a.name = std::string(1, static_cast<char>('a' + i));
    a.src = static_cast<int>(rng() % static_cast<unsigned>(nv));
    a.tgt = static_cast<int>(rng() % static_cast<unsigned>(nv));
    a.degree = lo + static_cast<int>(rng() % static_cast<unsigned>(1 - lo));
    as.push_back(a);
  }
  return make_quiver(vs, as);
}

/// Random walk of the given length over the non-z arrows; empty when stuck.
inline std::optional<Path> random_path(std::mt19937& rng, const GradedQuiver& g, int start, int length) {
  Path p = Path::idempotent(start);
  for (int i = 0; i < length; ++i) {
    std::vector<int> next;
    for (int a : g.non_z_arrows())
      if (g.arrow(a).src == p.tgt) next.push_back(a);
    if (next.empty()) return std::nullopt;
    const int a = next[rng() % next.size()];
    p.arrows.push_back(a);
    p.tgt = g.arrow(a).tgt;
  }
  return p;
}

/// Random homogeneous cyclic element of cycles with length 2..max_len; the
/// degree is that of the first cycle found unless one is requested.
inline CyclicElement random_cyclic(std::mt19937& rng, QuiverPtr g, int N, int max_len, std::optional<int> degree = std::nullopt,
                                   int attempts = 40) {
  CyclicElement w(g, N);
  for (int k = 0; k < attempts; ++k) {
    const int len = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_len - 1));
    auto p = random_path(rng, *g, static_cast<int>(rng() % static_cast<unsigned>(g->num_vertices())), len);
    if (!p || !p->is_cycle()) continue;
    const int deg = path_degree(*g, *p);
    if (!degree) degree = deg;
    if (deg != *degree) continue;
    Rational c(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 2));
    c.canonicalize();
    w.add_cycle(*p, c);
  }
  return w;
}

}  // namespace testing_support
