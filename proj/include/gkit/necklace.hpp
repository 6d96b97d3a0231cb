#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "gkit/free_element.hpp"

namespace gkit {

FreeElement circular_derivative(const CyclicElement& w, int x);

/// One summand c * left (x) right of eta, both legs arrows.
struct TensorTerm {
  int left = 0;
  int right = 0;
  Rational coeff;
};

/// eta = sum over original arrows of [a, a*] for a double quiver.
struct PairingElement {
  QuiverPtr quiver;
  int d = 0;
  FreeElement eta;
  std::vector<TensorTerm> tensor;

  static PairingElement standard(QuiverPtr quiver, int d);
  /// Signed flip of the tensor form equals minus itself.
  bool antisymmetric() const;
  /// The pairing matrix between arrows is invertible.
  bool nondegenerate() const;
  /// Component e_i * eta * e_i (the value of dz_i).
  FreeElement at_vertex(int vertex) const { return eta.vertex_component(vertex); }
};

/// Generator table of a derivation of the given degree, extended by the
/// graded Leibniz rule. Generators not in the table map to zero.
struct DerivationTable {
  QuiverPtr quiver;
  int truncation = 0;
  int degree = 1;
  std::map<int, FreeElement> values;

  DerivationTable() = default;
  DerivationTable(QuiverPtr q, int n, int deg) : quiver(std::move(q)), truncation(n), degree(deg) {}

  FreeElement on(int generator) const;
  FreeElement apply(const FreeElement& f) const;
};

/// Derivation {v,-} for homogeneous v of any degree; z-loops map to zero.
DerivationTable hamiltonian_derivation(const CyclicElement& v, int d, int truncation);

/// da, da*, and dz_i = e_i (sum [a,a*]) e_i. Throws DegreeMismatch when |w| != 3-d.
DerivationTable potential_derivation(const CyclicElement& w, int d, const PairingElement& eta);

FreeElement necklace_bracket(const CyclicElement& v, const FreeElement& f, int d, const PairingElement& eta, int N);

struct MasterEquationReport {
  bool zero = true;
  bool degree_shortcut = false;
  int bracket_degree = 0;
  int truncation = 0;
  CyclicElement bracket;
  std::vector<std::string> witnesses;

  nlohmann::json to_json() const;
};

MasterEquationReport check_master_equation(const CyclicElement& w, int d, const PairingElement& eta, int N);

}  // namespace gkit
