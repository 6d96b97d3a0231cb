#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "gkit/ginzburg.hpp"
#include "gkit/linalg.hpp"

namespace gkit {

/// Finite graded basis over l = k^vertices with operations m_n (n >= 2)
/// stored on tuples without units; units act strictly.
struct AInftyAlgebra {
  std::vector<std::string> names;
  std::vector<int> degree;
  std::vector<int> src;
  std::vector<int> tgt;
  std::vector<bool> unit;
  std::vector<bool> top;  // the classes h_i
  int arity_max = 6;
  std::map<std::vector<int>, SparseVec> table;

  int size() const { return static_cast<int>(names.size()); }
  int add_element(std::string name, int deg, int s, int t, bool is_unit = false, bool is_top = false);
  bool composable(const std::vector<int>& args) const;
  /// m_n(args) including the strict-unit rules; zero for n = 1.
  SparseVec m(const std::vector<int>& args) const;
  void set(const std::vector<int>& args, SparseVec value);
  /// Calls f on every composable tuple of length n.
  void for_each_tuple(int n, bool closed, const std::function<void(const std::vector<int>&)>& f) const;

  nlohmann::json to_json() const;
};

/// Dual of the Taylor coefficients of a minimal presentation. Element i of
/// the basis: units e_v first, then xi_g per generator g (degree 1-|g|).
/// Throws NotMinimal or StasheffFails.
AInftyAlgebra koszul_dual(const DGPresentation& p, int arity_max = 6);

struct StasheffReport {
  bool pass = true;
  long tuples = 0;
  std::vector<std::string> witnesses;
  nlohmann::json to_json() const;
};

StasheffReport check_stasheff(const AInftyAlgebra& a);

struct CyclicPairing {
  int d = 0;
  std::vector<std::vector<Rational>> matrix;
};

struct CyclicReport {
  CyclicPairing pairing;
  bool symmetric = true;
  bool nondegenerate = true;
  bool image_in_wc = true;
  bool cyclic_identity = true;
  std::vector<std::string> witnesses;
  bool pass() const { return symmetric && nondegenerate && image_in_wc && cyclic_identity; }
  nlohmann::json to_json(const AInftyAlgebra& a) const;
};

/// Throws ShapeMismatch unless each vertex carries a unit and a top class
/// of degree d.
CyclicReport cyclic_structure_check(const AInftyAlgebra& a, int d);

}  // namespace gkit
