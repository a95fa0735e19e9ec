#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tpa/errors.hpp"
#include "tpa/quiver.hpp"
#include "tpa/scalar.hpp"

namespace tpa {

/// Linear combination of paths. Terms are ordered by the monomial order
/// (length, then arrow indices), so the leading term is the last one.
class PathElement {
 public:
  using Terms = std::map<Path, Scalar>;

  PathElement() = default;
  static PathElement of_path(const Path& p, const Scalar& c = Scalar(1));

  void add_term(const Path& p, const Scalar& c);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Path& leading_path() const { return terms_.rbegin()->first; }
  const Scalar& leading_coefficient() const { return terms_.rbegin()->second; }
  std::size_t min_length() const;
  std::size_t max_length() const { return terms_.empty() ? 0 : leading_path().length(); }

  /// All terms share one source and one target.
  bool is_uniform(const Quiver& q) const;
  /// Scaled so the leading coefficient is 1.
  PathElement monic() const;

  PathElement& operator+=(const PathElement& o);
  PathElement& operator-=(const PathElement& o);
  PathElement& operator*=(const Scalar& c);
  friend PathElement operator+(PathElement a, const PathElement& b) { return a += b; }
  friend PathElement operator-(PathElement a, const PathElement& b) { return a -= b; }
  friend PathElement operator*(PathElement a, const Scalar& c) { return a *= c; }
  friend bool operator==(const PathElement& a, const PathElement& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Product "first, then second" (in the ba notation: second*first).
/// Non-composable pairs of paths contribute nothing.
PathElement compose(const Quiver& q, const PathElement& first, const PathElement& second);
/// first.path * x * last.path, with first traversed before x.
PathElement sandwich(const Quiver& q, const Path& before, const PathElement& x, const Path& after);

/// Renders like "b*a - 2*d*c" (right-to-left products).
std::string render_element(const Quiver& q, const PathElement& x);

struct AlgebraPresentation {
  Quiver quiver;
  std::vector<PathElement> relations;

  /// Throws InputError unless every relation is nonzero, uniform and has
  /// all terms of length >= 2.
  void validate() const;
};

/// Reduced Groebner basis for the deglex order on paths.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(const Quiver& q, std::vector<PathElement> elements);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<PathElement>& elements() const { return elements_; }
  bool complete() const { return complete_; }
  void set_complete(bool c) { complete_ = c; }

  /// Index of an element whose leading path is a subpath of p, with the
  /// offset at which it occurs.
  std::optional<std::pair<std::size_t, std::size_t>> divisor(const Path& p) const;
  bool is_normal(const Path& p) const { return !divisor(p).has_value(); }
  PathElement normal_form(PathElement x) const;

  /// Normal paths, by length; stops at the first empty length or at
  /// max_length. The flag reports whether an empty length was reached.
  std::pair<std::vector<Path>, bool> normal_paths(std::size_t max_length) const;

 private:
  Quiver quiver_;
  std::vector<PathElement> elements_;
  std::map<std::vector<std::size_t>, std::size_t> leading_;
  std::vector<std::size_t> leading_lengths_;
  bool complete_ = false;
};

/// Raised when completion does not certify finite dimension in time.
class GroebnerBoundExceeded : public BoundExceeded {
 public:
  GroebnerBoundExceeded(const std::string& what, std::vector<PathElement> partial)
      : BoundExceeded(what), partial_(std::move(partial)) {}
  const std::vector<PathElement>& partial() const { return partial_; }

 private:
  std::vector<PathElement> partial_;
};

/// Default bound 2 * arrows + 2.
std::size_t default_degree_bound(const Quiver& q);

/// Buchberger-style completion for the two-sided ideal generated by the
/// relations. Certified complete when the queue empties and the normal
/// paths die out at some length <= degree_bound; otherwise throws
/// GroebnerBoundExceeded ("possibly infinite-dimensional").
GroebnerBasis groebner_complete(const AlgebraPresentation& p, std::optional<std::size_t> degree_bound = {});

}  // namespace tpa
