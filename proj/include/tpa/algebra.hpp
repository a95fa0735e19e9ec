#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tpa/matrix.hpp"
#include "tpa/presentation.hpp"

namespace tpa {

using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

struct BasisElement {
  std::string label;
  std::size_t source = 0;
  std::size_t target = 0;
  int degree = 0;
  std::optional<Path> path;  // set for quotients of path algebras
};

/// Finite-dimensional algebra with a basis adapted to a complete set of
/// orthogonal idempotents: every basis element b satisfies
/// b = e_target * b * e_source.
///
/// Products follow the path convention: x*y is "y, then x", so it can be
/// nonzero only when source(x) == target(y). For morphism algebras this is
/// composition g*f = g o f.
class FDAlgebra {
 public:
  std::string name;
  std::uint64_t field = 0;
  std::vector<std::string> vertices;
  std::vector<BasisElement> basis;
  std::vector<std::size_t> idempotents;  // basis index of e_v
  bool graded = false;

  /// Generating arrows. Each arrow a: i -> j has an element in e_j A e_i.
  Quiver quiver;
  std::vector<Vector> arrow_elements;
  /// Set when the algebra is a quotient of a path algebra.
  std::optional<AlgebraPresentation> presentation;

  std::size_t dim() const { return basis.size(); }
  std::size_t vertex_count() const { return vertices.size(); }

  void reset_table();
  void set_product(std::size_t i, std::size_t j, SparseVector v);
  const SparseVector& product(std::size_t i, std::size_t j) const { return table_[i * basis.size() + j]; }

  Vector zero() const { return Vector(basis.size()); }
  Vector unit(std::size_t i) const;
  Vector one() const;
  Vector idempotent(std::size_t v) const { return unit(idempotents.at(v)); }
  Vector multiply(const Vector& x, const Vector& y) const;

  /// Basis indices of e_target A e_source.
  std::vector<std::size_t> basis_between(std::size_t source, std::size_t target) const;
  /// Cartan data: dim e_t A e_s indexed [s][t].
  std::vector<std::vector<std::size_t>> cartan() const;
  /// Dimension per degree (only meaningful when graded).
  std::vector<std::size_t> graded_dims() const;

  /// Matrix (dim x dim) of left multiplication y -> x*y.
  Matrix left_matrix(const Vector& x) const;
  Matrix right_matrix(const Vector& x) const;

  /// Throws if the table is not associative, idempotents are not orthogonal
  /// idempotents summing to one, or the grading is violated.
  void check_structure() const;

  /// Cached basis_expressions(*this); call clear_cache() after changing the
  /// generators.
  const std::vector<PathElement>& expressions() const;
  void clear_cache() { expressions_.reset(); }

 private:
  std::vector<SparseVector> table_;
  mutable std::shared_ptr<const std::vector<PathElement>> expressions_;
};

struct QuotientOptions {
  std::optional<std::size_t> degree_bound;
  /// Per-arrow degree (by arrow name); default: every arrow has degree 1.
  std::map<std::string, int> arrow_degrees;
};

/// Basis of normal paths, products by normal-form reduction.
FDAlgebra quotient_algebra(const AlgebraPresentation& p, const QuotientOptions& opts = {});
FDAlgebra quotient_algebra(const AlgebraPresentation& p, const GroebnerBasis& gb, const QuotientOptions& opts = {});

/// Opposite algebra; arrows are reversed and keep their names.
FDAlgebra opposite(const FDAlgebra& a);

/// Elements x with trace(L_{xy}) = 0 for all y (the radical in char 0).
std::vector<Vector> radical_basis(const FDAlgebra& a);
std::vector<Vector> radical_square_basis(const FDAlgebra& a, const std::vector<Vector>& rad);
/// Smallest L with rad^L = 0.
std::size_t loewy_length(const FDAlgebra& a);

struct RecoveredPresentation {
  AlgebraPresentation presentation;
  std::vector<Vector> arrow_lifts;  // per arrow of presentation.quiver
};

/// Gabriel quiver; the algebra must be basic.
Quiver algebra_quiver(const FDAlgebra& a);
/// Quiver, arrow lifts and a minimal set of relations.
RecoveredPresentation recover_presentation(const FDAlgebra& a);
/// Attaches recovered generators to an abstract algebra.
void attach_generators(FDAlgebra& a);

/// Image of a path element under arrows -> lifts.
Vector evaluate(const FDAlgebra& a, const std::vector<Vector>& lifts, const PathElement& x);

/// Every basis element as a combination of paths in the generating arrows.
/// Throws DomainError if the arrows do not generate the algebra.
std::vector<PathElement> basis_expressions(const FDAlgebra& a);

}  // namespace tpa
