#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tpa/repmod.hpp"

namespace tpa {

/// Direct sum P_{v_0} + P_{v_1} + ... of indecomposable projectives.
struct FreeModule {
  std::vector<std::size_t> generators;  // vertex of each summand
  Representation module;
  /// Coordinate of the generator e_{v_k} of summand k inside module at v_k.
  std::vector<std::size_t> generator_index;
  /// offsets[k][w]: first coordinate of summand k inside module at w.
  std::vector<std::vector<std::size_t>> offsets;
};

FreeModule free_module(const FDAlgebra& alg, std::vector<std::size_t> generators);

/// The morphism p -> y sending generator k to images[k] (a vector in y at
/// vertex v_k). y_actions are the basis actions of y.
ModuleMorphism morphism_from_generators(const FDAlgebra& alg, const FreeModule& p, const Representation& y,
                                        const std::vector<Matrix>& y_actions, const std::vector<Vector>& images);

/// Coordinates of Hom(p, y): the generator images stacked in summand order.
std::size_t hom_free_dim(const FreeModule& p, const Representation& y);

/// Matrix of Hom(p', y) -> Hom(p, y), phi -> phi o f, for f: p -> p'.
Matrix pullback_matrix(const FDAlgebra& alg, const FreeModule& p, const FreeModule& p2, const ModuleMorphism& f,
                       const Representation& y, const std::vector<Matrix>& y_actions);

struct ProjectiveCover {
  FreeModule cover;
  ModuleMorphism map;
};
ProjectiveCover projective_cover(const FDAlgebra& alg, const Representation& x);

struct ProjectiveResolution {
  Representation module;
  std::vector<FreeModule> terms;  // P_0, P_1, ...
  /// differentials[0]: P_0 -> module; differentials[n]: P_n -> P_{n-1}.
  std::vector<ModuleMorphism> differentials;
  bool complete = false;  // the resolution stops: the last kernel is zero
  bool minimal = true;
};

/// Minimal projective resolution with terms P_0..P_length (fewer if it stops).
ProjectiveResolution minimal_resolution(const FDAlgebra& alg, const Representation& x, std::size_t length);

struct ExtSpace {
  std::size_t degree = 0;
  std::size_t dim = 0;
  FreeModule term;               // P_degree of the resolution of the first argument
  std::vector<Vector> cocycles;  // representatives in Hom(P_degree, y) coordinates
};

ExtSpace ext_space(const FDAlgebra& alg, std::size_t i, const Representation& x, const Representation& y);

/// Resolutions of the injectives I_v through degree d with chain lifts of the
/// left action of every arrow, so that Ext^d(D A, -) is a functor with values
/// in right modules.
struct TauFunctorData {
  FDAlgebra algebra;
  std::size_t d = 1;
  std::vector<ProjectiveResolution> resolutions;  // of I_v
  /// arrow_lifts[a][n] for a: i -> j is a chain map component P_n(I_i) -> P_n(I_j)
  /// lifting left multiplication by a.
  std::vector<std::vector<ModuleMorphism>> arrow_lifts;
};

/// Throws DomainError if the global dimension exceeds d.
TauFunctorData tau_functor_data(const FDAlgebra& alg, std::size_t d);
Representation tau_minus(const TauFunctorData& td, const Representation& x);
ModuleMorphism tau_minus_morphism(const TauFunctorData& td, const Representation& x, const Representation& y,
                                  const ModuleMorphism& f);

/// Ext^d(I_v, x) for every v as a quotient of Hom(P_d(I_v), x); reusable
/// across many morphisms out of or into x.
struct TauContext {
  std::vector<std::size_t> dims;  // of x
  std::vector<Matrix> actions;    // basis actions on x
  std::vector<QuotientSpace> quotients;
};
TauContext tau_context(const TauFunctorData& td, const Representation& x);
Representation tau_minus(const TauFunctorData& td, const Representation& x, const TauContext& cx);
ModuleMorphism tau_minus_morphism(const TauFunctorData& td, const TauContext& cx, const TauContext& cy,
                                  const ModuleMorphism& f);

/// Chain map components F_0..F_upto over f: x -> y between resolutions.
std::vector<ModuleMorphism> lift_chain_map(const FDAlgebra& alg, const ProjectiveResolution& rx,
                                           const ProjectiveResolution& ry, const ModuleMorphism& f,
                                           std::size_t upto);

/// Nothing means no finite resolution was found within the bound
/// (default: dim alg).
std::optional<std::size_t> projective_dimension(const FDAlgebra& alg, const Representation& x,
                                                std::optional<std::size_t> bound = {});
std::optional<std::size_t> global_dimension(const FDAlgebra& alg, std::optional<std::size_t> bound = {});

struct DominantDimension {
  std::size_t value = 0;
  bool at_bound = false;  // every inspected term was projective-injective
};
/// Default bound: 2 * Loewy length + 4.
DominantDimension dominant_dimension(const FDAlgebra& alg, std::optional<std::size_t> bound = {});
std::size_t default_domdim_bound(const FDAlgebra& alg);

/// AR quiver of a representation-finite hereditary algebra by knitting
/// dimension vectors.
struct ARQuiver {
  Quiver quiver;  // vertices "1".."N" in knitting order
  std::vector<std::vector<long>> dimension_vectors;
  std::vector<std::optional<std::size_t>> tau_minus;  // none for injectives
  std::vector<std::optional<std::size_t>> projective_vertex;
  std::vector<bool> injective;
};

ARQuiver knit_ar_quiver(const FDAlgebra& h);
/// DOT with translation pairs as dashed edges from tau^- M back to M.
std::string ar_quiver_to_dot(const ARQuiver& ar);

}  // namespace tpa
