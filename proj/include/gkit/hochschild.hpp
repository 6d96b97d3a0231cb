#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "gkit/finite_algebra.hpp"
#include "gkit/linalg.hpp"

namespace gkit {

/// Chain spaces C_m indexed by homological degree m (internal cohomological
/// degree -m), with b: C_m -> C_{m-1} and B: C_m -> C_{m+1}.
struct MixedComplex {
  std::map<int, int> dims;
  std::map<int, SparseMatrix> b;
  std::map<int, SparseMatrix> B;
  /// Degrees whose chain space or incoming boundaries are incomplete.
  std::set<int> edge;
  std::string description;

  int dim(int m) const;
  int top() const { return dims.empty() ? -1 : dims.rbegin()->first; }
  bool reliable(int m) const { return dims.count(m) && !edge.count(m); }
  /// Zero matrix of the right shape when the map leaves the stored range.
  SparseMatrix b_at(int m) const;
  SparseMatrix B_at(int m) const;
};

struct ChainOptions {
  int max_tensor = 6;
  int m_max = 6;
  /// Keep only chains whose total path length is at most this.
  std::optional<int> total_length_cap;
};

/// Normalized Hochschild chains (A (x) Abar^p)_l of a truncated path algebra,
/// with Hochschild b (including the internal differential) and Connes B.
/// Requires all basis degrees <= 0.
MixedComplex hochschild_mixed(const FiniteAlgebra& A, const ChainOptions& opt);
/// Cohomological window [lo, hi] with tensor length at most P.
MixedComplex hochschild_mixed(const FiniteAlgebra& A, int P, int lo, int hi);

struct InvariantReport {
  bool b_squared = true;
  bool B_squared = true;
  bool anticommute = true;
  std::vector<std::string> witnesses;
  bool pass() const { return b_squared && B_squared && anticommute; }
  nlohmann::json to_json() const;
};

InvariantReport check_mixed_invariants(const MixedComplex& M);

struct AuditRow {
  std::string position;
  int dim = 0;
  int rank_in = 0;
  int rank_out = 0;
  bool exact() const { return dim == rank_in + rank_out; }
};

struct MixedHomologyReport {
  std::map<int, int> hh;
  std::map<int, int> hc;
  /// (C[u]/u^{J+1}, b + uB) with J = u_power, at degrees whose blocks are all reliable.
  std::map<int, int> hc_minus;
  int u_power = 0;
  std::set<int> reliable;
  int vertices = 0;
  std::vector<AuditRow> audit;
  bool audit_exact = true;

  nlohmann::json to_json() const;
};

MixedHomologyReport mixed_homology_report(const MixedComplex& M, int vertices = 1, int u_power = 1);

/// Homology of (C, b) in each stored degree.
std::map<int, int> hochschild_dims(const MixedComplex& M);

}  // namespace gkit
