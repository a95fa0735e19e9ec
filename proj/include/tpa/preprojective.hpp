#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tpa/homological.hpp"

namespace tpa {

/// Double quiver of q with one uniform relation per vertex, the vertex
/// component of sum_a (a* a - a a*).
AlgebraPresentation preprojective_presentation(const Quiver& q,
                                               const std::map<std::string, std::string>& star_names = {});
FDAlgebra pi_combinatorial(const DynkinType& type, const std::vector<bool>& reversed = {});

/// Iterated tau_d^- on a list of modules, caching the Ext data needed to
/// apply it to morphisms.
class TauTower {
 public:
  /// Throws BoundExceeded if some module survives `bound` applications.
  TauTower(TauFunctorData td, std::vector<Representation> modules, std::size_t bound);
  /// Degree 0 only: no translates.
  TauTower(const FDAlgebra& alg, std::vector<Representation> modules);

  const TauFunctorData& data() const { return td_; }
  const FDAlgebra& base() const { return td_.algebra; }
  std::size_t size() const { return powers_.size(); }
  /// Number of nonzero powers tau^{-i} X_k, i >= 0.
  std::size_t height(std::size_t k) const { return powers_[k].size(); }
  const Representation& power(std::size_t k, std::size_t i) const { return powers_[k][i]; }
  /// tau^{-i}(f) for f: tau^{-s} X_k -> tau^{-t} X_l; nothing if either
  /// end vanishes.
  std::optional<ModuleMorphism> apply(std::size_t i, std::size_t k, std::size_t s, std::size_t l, std::size_t t,
                                      const ModuleMorphism& f) const;

 private:
  TauFunctorData td_;
  std::vector<std::vector<Representation>> powers_;
  std::vector<std::vector<TauContext>> contexts_;
};

/// Psi_Lambda^X = sum_i Hom(X, tau_d^{-i} X) with g.f = tau_d^{-i}(g) o f,
/// realized with one vertex per summand X_k.
struct GradedHomAlgebra {
  struct Element {
    std::size_t degree = 0;
    std::size_t source = 0;  // summand index
    std::size_t target = 0;
    ModuleMorphism map;      // X_source -> tau^{-degree} X_target
  };

  FDAlgebra base;  // Lambda
  std::vector<Representation> summands;
  std::vector<std::string> names;
  std::size_t d = 1;
  std::vector<Element> elements;  // in algebra basis order
  FDAlgebra algebra;
  bool basic = true;  // summands pairwise non-isomorphic

  std::vector<std::size_t> graded_dims() const { return algebra.graded_dims(); }
  /// Basis indices of the piece Hom(X_source, tau^{-degree} X_target).
  const std::vector<std::size_t>& block(std::size_t degree, std::size_t source, std::size_t target) const;
  /// Coordinates of a morphism in that piece; nothing if outside it.
  std::optional<Vector> coordinates(std::size_t degree, std::size_t source, std::size_t target,
                                    const ModuleMorphism& f) const;

  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<std::size_t>> blocks;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, SpanCoordinates> block_coords;
};

/// Shared assembly of graded Hom algebras. piece(deg, k, l) spans
/// Hom(X_k, target(deg, l)) (default: hom_basis); product(g, f, partial)
/// is g.f as a map out of X_{f.source}, nothing for zero.
struct GradedHomRecipe {
  const FDAlgebra* over = nullptr;
  std::vector<Representation> summands;
  std::vector<std::string> names;
  std::size_t d = 1;
  std::size_t top = 0;
  std::string name = "Psi";
  bool attach = true;
  std::function<const Representation*(std::size_t, std::size_t)> target;
  std::function<std::vector<ModuleMorphism>(std::size_t, std::size_t, std::size_t)> piece;
  std::function<std::optional<ModuleMorphism>(std::size_t, std::size_t, const GradedHomAlgebra&)> product;
};
GradedHomAlgebra assemble_graded_hom(const GradedHomRecipe& r);

struct PsiOptions {
  std::vector<std::string> names;      // default "X1", "X2", ...
  std::optional<std::size_t> max_degree;  // e.g. 0 for End(X) alone
  bool attach = true;                  // recover generators when basic
};

/// Summands must be indecomposable. Requires gldim alg <= d unless
/// max_degree is 0.
GradedHomAlgebra psi_x(const FDAlgebra& alg, const std::vector<Representation>& summands, std::size_t d,
                       const PsiOptions& opts = {});
GradedHomAlgebra psi_x(const TauTower& tower, const std::vector<std::string>& names,
                       std::optional<std::size_t> max_degree = {}, bool attach = true);
/// Psi_Lambda^Lambda with one vertex per indecomposable projective.
GradedHomAlgebra pi_graded(const FDAlgebra& alg, std::size_t d);

/// Corner algebra e A e for e the sum of the idempotents of `vertices`.
FDAlgebra corner_algebra(const FDAlgebra& a, const std::vector<std::size_t>& vertices);
/// Corner of psi at the summands isomorphic to those of y (given as a list
/// of indecomposables). Throws InputError if some summand is not in add X.
FDAlgebra morita_reduce(const GradedHomAlgebra& psi, const std::vector<Representation>& y);

struct CatalogEntry {
  std::size_t tau_power = 0;  // i in tau^{-i} P_j
  std::size_t projective = 0;  // j
  Representation module;
  bool injective = false;  // tau^- vanishes
  std::optional<std::size_t> successor;
  std::vector<std::size_t> predecessors;
  /// Isomorphism from the successor entry onto the computed tau^-(module).
  std::optional<ModuleMorphism> successor_iso;
  std::string name;
};

struct SummandCatalog {
  std::vector<CatalogEntry> entries;
  std::vector<Representation> modules() const;
  std::vector<std::string> names() const;
};

/// Pairwise non-isomorphic modules tau_d^{-i} P_j sorted by (i, j).
SummandCatalog build_catalog(const TauTower& tower_of_projectives, const FDAlgebra& alg);

struct AuslanderResult {
  GradedHomAlgebra gamma;  // degree 0 only
  SummandCatalog catalog;
  AlgebraPresentation presentation;
};

AuslanderResult auslander_algebra(const FDAlgebra& alg, std::size_t d);

/// tau_d-finiteness iteration bound: dim alg.
std::size_t tau_iteration_bound(const FDAlgebra& alg);

}  // namespace tpa
