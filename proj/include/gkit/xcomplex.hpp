#pragma once

#include <map>
#include <vector>

#include <json.hpp>

#include "gkit/forms.hpp"
#include "gkit/ginzburg.hpp"
#include "gkit/hochschild.hpp"

namespace gkit {

/// Two-term model U = A_l (cycles) and V = one-forms f*Dv, modulo terms
/// longer than N.
struct XComplex {
  QuiverPtr quiver;
  int truncation = 0;
  std::vector<Path> U;
  std::vector<OneForm::Key> V;
  SparseMatrix d0;  // U -> V
  SparseMatrix d1;  // V -> U
  SparseMatrix dU;
  SparseMatrix dV;
};

XComplex build_x_complex(const DGPresentation& p);

struct XInvariantReport {
  bool d0d1 = true;
  bool d1d0 = true;
  bool d0_commutes = true;
  bool d1_commutes = true;
  bool pass() const { return d0d1 && d1d0 && d0_commutes && d1_commutes; }
};

XInvariantReport check_x_invariants(const XComplex& x);

/// Sigma V + U with b = [[-d, 0], [d1, d]] and B = [[0, d0], [0, 0]].
MixedComplex x_mixed_complex(const XComplex& x);

/// Hochschild chains of the tensor algebra modulo total length > N.
MixedComplex tensor_hochschild(const DGPresentation& p);

struct XComparison {
  int truncation = 0;
  std::map<int, int> hochschild;
  std::map<int, int> x_model;
  std::vector<int> mismatched;
  bool agree = true;
  XInvariantReport invariants;

  nlohmann::json to_json() const;
};

XComparison x_complex_report(const DGPresentation& p);

}  // namespace gkit
