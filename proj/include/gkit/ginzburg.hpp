#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gkit/forms.hpp"
#include "gkit/necklace.hpp"

namespace gkit {

struct CheckReport {
  std::string check;
  bool pass = true;
  int truncation = 0;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;

  nlohmann::json to_json() const;
};

/// Tensor algebra on a quiver with a differential given on generators.
struct DGPresentation {
  QuiverPtr quiver;
  DerivationTable diff;
  int truncation = 0;
  int d = 0;
  std::vector<std::string> warnings;
  std::vector<CheckReport> reports;

  FreeElement differential(const FreeElement& f) const { return diff.apply(f); }
  FreeElement generator(const std::string& name) const;
};

/// The double quiver extended by z-loops.
QuiverPtr ginzburg_quiver(const GradedQuiver& q, int d);

/// Rewrites an element over another quiver by matching arrow names.
FreeElement transport(const FreeElement& f, QuiverPtr target);
CyclicElement transport(const CyclicElement& f, QuiverPtr target);

/// w may live over any quiver whose arrow names occur in the Ginzburg quiver.
DGPresentation build_ginzburg(const GradedQuiver& q, int d, const CyclicElement& w, int N);

CheckReport verify_d_squared(const DGPresentation& p);

struct HomologyRow {
  int z = 0;
  int b = 0;
  int h = 0;
};

struct HomologyTable {
  int truncation = 0;
  int lo = 0;
  int hi = 0;
  std::map<int, HomologyRow> rows;
  /// Degree-0 quotient representatives (normal forms), when 0 is in the window.
  std::vector<FreeElement> jacobi_basis;
  std::map<int, int> jacobi_length_dims;

  nlohmann::json to_json() const;
};

HomologyTable homology_dims(const DGPresentation& p, int lo, int hi);

/// All paths of length <= N whose degree lies in [lo, hi].
std::vector<Path> paths_in_degrees(const GradedQuiver& q, int N, int lo, int hi);

struct ExtractionResult {
  FreeElement wbar;
  CyclicElement w;
  CheckReport round_trip;
};

ExtractionResult extract_superpotential(const DGPresentation& p);

struct NormalizationStep {
  int length = 0;
  std::map<int, FreeElement> eta;
  std::map<int, FreeElement> beta;
};

struct NormalizationResult {
  std::map<int, FreeElement> change;
  DGPresentation normalized;
  std::vector<NormalizationStep> steps;
  bool identity = true;

  nlohmann::json to_json() const;
};

NormalizationResult normalize_dz(const DGPresentation& p);

struct HochschildCandidate {
  OneForm omega;
  FreeElement a;
};

struct NondegeneracyReport {
  bool nondegenerate = false;
  /// z-coefficient of the residue at each vertex.
  std::vector<Rational> u;
  bool uniform = false;
  std::map<int, Rational> residue;
  std::vector<std::string> notes;

  nlohmann::json to_json(const GradedQuiver& q) const;
};

/// Throws NotACocycle when d(omega) != 0 or d_one(omega) != d(a).
NondegeneracyReport check_nondegenerate_class(const DGPresentation& p, const HochschildCandidate& c);

}  // namespace gkit
