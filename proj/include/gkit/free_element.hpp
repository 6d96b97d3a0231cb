#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gkit/quiver.hpp"
#include "gkit/rational.hpp"

namespace gkit {

/// A composable sequence of arrows. The empty path is the idempotent at `src`.
struct Path {
  int src = 0;
  int tgt = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool empty() const { return arrows.empty(); }
  bool is_cycle() const { return src == tgt; }

  static Path idempotent(int vertex) { return Path{vertex, vertex, {}}; }
  static Path of_arrow(const GradedQuiver& q, int arrow);
  /// Throws Error(UnknownArrow) for unknown names and PreconditionFailed for
  /// non-composable chains.
  static Path parse(const GradedQuiver& q, const std::string& chain);

  /// Length first, then arrow indices lexicographically, then source vertex.
  friend bool operator<(const Path& a, const Path& b) {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    return a.src < b.src;
  }
  friend bool operator==(const Path& a, const Path& b) {
    return a.src == b.src && a.tgt == b.tgt && a.arrows == b.arrows;
  }
};

int path_degree(const GradedQuiver& q, const Path& p);
/// Same as path_degree over arrows[begin, end).
int segment_degree(const GradedQuiver& q, const std::vector<int>& arrows, std::size_t begin, std::size_t end);
std::optional<Path> concat(const Path& a, const Path& b);
/// "x*y*z"; idempotents print via GradedQuiver::idempotent_name.
std::string path_to_string(const GradedQuiver& q, const Path& p);

using TermMap = std::map<Path, Rational>;

/// Finite exact combination of paths of length <= truncation.
class FreeElement {
 public:
  FreeElement() = default;
  FreeElement(QuiverPtr quiver, int truncation);

  static FreeElement path(QuiverPtr quiver, int truncation, Path p, Rational c = 1);
  static FreeElement arrow(QuiverPtr quiver, int truncation, int arrow, Rational c = 1);
  static FreeElement idempotent(QuiverPtr quiver, int truncation, int vertex);
  /// Sum of all vertex idempotents.
  static FreeElement unit(QuiverPtr quiver, int truncation);

  const QuiverPtr& quiver() const { return quiver_; }
  const GradedQuiver& q() const { return *quiver_; }
  int truncation() const { return truncation_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c*p; dropped when p is longer than the truncation.
  void add_term(const Path& p, const Rational& c);
  Rational coefficient(const Path& p) const;

  FreeElement& operator+=(const FreeElement& other);
  FreeElement& operator-=(const FreeElement& other);
  FreeElement& operator*=(const Rational& c);
  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  friend FreeElement operator*(FreeElement a, const Rational& c) { return a *= c; }
  friend FreeElement operator*(const Rational& c, FreeElement a) { return a *= c; }
  FreeElement operator-() const;
  /// Concatenation product truncated at min of the truncations.
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
  bool operator==(const FreeElement& other) const;
  bool operator!=(const FreeElement& other) const { return !(*this == other); }

  FreeElement with_truncation(int truncation) const;
  /// Terms of exactly the given length.
  FreeElement length_component(int length) const;
  /// Terms of exactly the given degree.
  FreeElement degree_component(int degree) const;
  /// Degrees present (sorted); empty for zero.
  std::vector<int> degrees() const;
  bool is_homogeneous() const { return degrees().size() <= 1; }
  /// Degree of a nonzero homogeneous element; throws DegreeMismatch otherwise.
  int degree() const;
  int min_length() const;
  int max_length() const;
  /// e_v * this * e_w restricted to cycles at each vertex v = w.
  FreeElement vertex_component(int vertex) const;
  bool contains_arrow(int arrow) const;

  std::string to_string() const;

 private:
  QuiverPtr quiver_;
  int truncation_ = 0;
  TermMap terms_;
};

FreeElement multiply(const FreeElement& f, const FreeElement& g, int truncation);
/// Koszul-signed commutator fg - (-1)^{|f||g|} gf, applied per homogeneous pieces.
FreeElement graded_commutator(const FreeElement& f, const FreeElement& g);

/// Canonical rotation of a cycle. Returns nullopt when a rotation fixes the
/// cycle with sign -1 (the class vanishes).
std::optional<std::pair<Path, int>> canonical_rotation(const GradedQuiver& q, const Path& cycle);

/// Element of kQ/[kQ,kQ]: canonical rotation representatives only.
class CyclicElement {
 public:
  CyclicElement() = default;
  CyclicElement(QuiverPtr quiver, int truncation);

  const QuiverPtr& quiver() const { return quiver_; }
  const GradedQuiver& q() const { return *quiver_; }
  int truncation() const { return truncation_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c times the class of an arbitrary cycle (rotated to canonical form).
  void add_cycle(const Path& cycle, const Rational& c);

  CyclicElement& operator+=(const CyclicElement& other);
  CyclicElement& operator-=(const CyclicElement& other);
  CyclicElement& operator*=(const Rational& c);
  friend CyclicElement operator+(CyclicElement a, const CyclicElement& b) { return a += b; }
  friend CyclicElement operator-(CyclicElement a, const CyclicElement& b) { return a -= b; }
  friend CyclicElement operator*(const Rational& c, CyclicElement a) { return a *= c; }
  bool operator==(const CyclicElement& other) const;
  bool operator!=(const CyclicElement& other) const { return !(*this == other); }

  /// The stored representatives as a FreeElement.
  FreeElement representative() const;
  std::vector<int> degrees() const;
  int degree() const;
  int min_length() const;
  std::string to_string() const;

 private:
  QuiverPtr quiver_;
  int truncation_ = 0;
  TermMap terms_;
};

CyclicElement to_cyclic(const FreeElement& f);

/// Solves c = sum_x [x, eta_x] over the given generators; `c` must be
/// homogeneous of one path length and consist of cycles. Throws
/// NotInCommutatorSpace when to_cyclic(c) != 0.
std::map<int, FreeElement> commutator_decompose(const FreeElement& c, const std::vector<int>& generators);

nlohmann::json element_to_json(const FreeElement& f);
nlohmann::json element_to_json(const CyclicElement& f);
FreeElement element_from_json(QuiverPtr quiver, int truncation, const nlohmann::json& j);

/// Algebra endomorphism determined by generator images (missing generators
/// map to themselves), applied to f and truncated.
FreeElement substitute(const FreeElement& f, const std::map<int, FreeElement>& images);

}  // namespace gkit
