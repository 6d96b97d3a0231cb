#pragma once

#include <map>
#include <string>
#include <utility>

#include "gkit/free_element.hpp"
#include "gkit/necklace.hpp"

namespace gkit {

/// Element of the commutator quotient of noncommutative one-forms, written
/// in the basis f*Dv with v a generator and f a path from tgt(v) to src(v).
/// A term has length |f|+1, bounded by the truncation.
class OneForm {
 public:
  using Key = std::pair<Path, int>;

  OneForm() = default;
  OneForm(QuiverPtr quiver, int truncation) : quiver_(std::move(quiver)), truncation_(truncation) {}

  /// c * f * Dv.
  void add(const Path& f, int v, const Rational& c);
  /// c * pre * Dv * post, rotated into basis form.
  void add_product(const Path& pre, int v, const Path& post, const Rational& c);

  const QuiverPtr& quiver() const { return quiver_; }
  const GradedQuiver& q() const { return *quiver_; }
  int truncation() const { return truncation_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  OneForm& operator+=(const OneForm& other);
  OneForm& operator*=(const Rational& c);
  bool operator==(const OneForm& other) const { return terms_ == other.terms_; }

  std::string to_string() const;

 private:
  QuiverPtr quiver_;
  int truncation_ = 0;
  std::map<Key, Rational> terms_;
};

int term_degree(const GradedQuiver& q, const OneForm::Key& k);

/// D applied to an element: sum over letters p_i of pre * Dp_i * post.
OneForm d_zero(const FreeElement& u, int truncation);
/// f*Dv -> f v - (-1)^{|f||v|} v f.
FreeElement d_one(const OneForm& w);
/// Internal differential: d(f Dv) = (df) Dv + (-1)^{|f|} f D(dv).
OneForm form_differential(const OneForm& w, const DerivationTable& diff);
/// Sum of (constant term of f) * v, keyed by generator.
std::map<int, Rational> residue(const OneForm& w);

}  // namespace gkit
