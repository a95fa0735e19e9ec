#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpa/preprojective.hpp"

namespace tpa {

/// Bimodule over a pair of basic algebras (L, R) on a basis with
/// m = e_{left_vertex} m e_{right_vertex}. Actions are square matrices on
/// coordinate columns, one per generating arrow.
struct Bimodule {
  std::vector<std::size_t> left_vertex;
  std::vector<std::size_t> right_vertex;
  std::vector<Matrix> left;   // a.m per arrow of L; empty when not needed
  std::vector<Matrix> right;  // m.a per arrow of R
  std::size_t dim() const { return left_vertex.size(); }
};

/// A bimodule over a single algebra.
struct BimoduleData {
  FDAlgebra base;
  Bimodule module;
  std::optional<std::size_t> nilpotency;  // least i with M^{(x)i} = 0 once certified
};

/// Direct sum of right modules X_u (u a vertex of L) made into an
/// (L, R)-bimodule; left_maps[a]: X_i -> X_j for each arrow a: i -> j of L.
Bimodule bimodule_from_summands(const FDAlgebra& left_alg, const FDAlgebra& right_alg,
                                const std::vector<Representation>& summands,
                                const std::vector<ModuleMorphism>& left_maps);
/// A as a bimodule with both sides acting through the given elements of A
/// (one per arrow of the acting algebra, whose vertices are A's).
Bimodule regular_bimodule(const FDAlgebra& a, const std::vector<Vector>& left_images,
                          const std::vector<Vector>& right_images);
/// Sub-bimodule on the basis vectors `keep`; throws if they are not closed
/// under the actions kept.
Bimodule restrict_bimodule(const Bimodule& b, const std::vector<std::size_t>& keep, bool with_left = true);
/// Throws InputError unless both structures satisfy the defining relations
/// and commute.
void check_bimodule(const FDAlgebra& left_alg, const FDAlgebra& right_alg, const Bimodule& b);

/// Action matrices of every basis element of the acting algebra.
std::vector<Matrix> left_element_actions(const FDAlgebra& left_alg, const Bimodule& b);
std::vector<Matrix> right_element_actions(const FDAlgebra& right_alg, const Bimodule& b);

/// Right module spanned by some bimodule basis vectors.
struct ModuleView {
  Representation module;
  std::vector<std::vector<std::size_t>> basis;  // basis[w][pos]: bimodule coordinate
  std::vector<std::pair<std::size_t, std::size_t>> position;  // inverse, (npos, npos) outside

  /// Bimodule coordinates of a vector of the module at vertex w.
  Vector lift(std::size_t w, const Vector& v, std::size_t ambient) const;
  /// Module coordinates at w of a bimodule vector supported there.
  Vector restrict_to(std::size_t w, const Vector& v) const;
};
ModuleView right_module_view(const FDAlgebra& right_alg, const Bimodule& b, const std::vector<std::size_t>& keep);

/// An element of the middle algebra acting on both factors.
struct MiddleAction {
  std::size_t source = 0;
  std::size_t target = 0;
  Matrix on_left_factor;   // m -> m.a
  Matrix on_right_factor;  // n -> a.n
};

/// Balanced tensor product as the quotient of the pairs (m, n) with matching
/// vertices by (m.a) (x) n - m (x) (a.n).
struct TensorProduct {
  Bimodule module;
  std::vector<std::pair<std::size_t, std::size_t>> representatives;  // pair of each basis vector
  std::size_t right_factor_dim = 0;
  std::vector<long> column;  // m * right_factor_dim + n -> pair column, -1 if vertices differ
  std::vector<SparseVector> projection;

  /// Class of m (x) n in the basis of the product.
  const SparseVector& project(std::size_t m, std::size_t n) const;
  Vector project(const Vector& m, const Vector& n) const;
};

TensorProduct tensor(const std::vector<MiddleAction>& middle, const Bimodule& m, const Bimodule& n);
/// Over an algebra with generating arrows: one relation family per arrow.
TensorProduct tensor_over(const FDAlgebra& middle, const Bimodule& m, const Bimodule& n);

/// T(M) = sum of the tensor powers of a nilpotent bimodule.
struct TensorAlgebra {
  BimoduleData m;
  std::vector<Bimodule> pieces;        // T_0 = Lambda, T_1 = M, ...
  std::vector<TensorProduct> steps;    // steps[i - 1]: T_i (x) M -> T_{i+1}
  std::vector<std::size_t> offsets;    // algebra index of the first basis vector of T_i
  std::vector<std::vector<Matrix>> left_elements, right_elements;  // per piece, per base basis element
  FDAlgebra algebra;

  std::size_t top() const { return pieces.size() - 1; }
  /// x (x) y in T_{i+j} for coordinates x of T_i and y of T_j; empty when
  /// the degree vanishes.
  Vector product(std::size_t i, const Vector& x, std::size_t j, std::size_t y) const;
  Vector product(std::size_t i, const Vector& x, std::size_t j, const Vector& y) const;
  /// The basis vector b of T_n as a sum of x (x) t with x in T_k, t in T_{n-k}.
  std::vector<std::pair<Vector, Vector>> split(std::size_t n, std::size_t b, std::size_t k) const;
  Vector global(std::size_t i, const Vector& x) const;
};

/// Throws BoundExceeded("not nilpotent") if M^{(x)i} survives i = bound
/// (default dim Lambda + dim M).
TensorAlgebra tensor_algebra(const BimoduleData& m, std::optional<std::size_t> bound = {});

/// Left multiplication by an element of e_j A e_i as a map P_i -> P_j.
ModuleMorphism left_multiplication(const FDAlgebra& alg, const Vector& a, std::size_t i, std::size_t j);
/// Ext^d(D Lambda, Lambda) = sum_u tau_d^-(P_u) with the left action
/// induced by left multiplication on the P_u.
BimoduleData tau_bimodule(const FDAlgebra& alg, std::size_t d);
/// Pi as T_Lambda(Ext^d(D Lambda, Lambda)).
TensorAlgebra pi_tensor(const FDAlgebra& alg, std::size_t d);

/// U(M) = sum_i Hom_Lambda(T, T (x) T_i) with one vertex per nonzero e_v T_j
/// (degree-major). Element maps land in e_w T_{k+i} = e_w T_k (x) T_i.
struct ExtendedTensorAlgebra {
  GradedHomAlgebra u;
  std::vector<std::pair<std::size_t, std::size_t>> keys;  // (v, j) per vertex
  std::vector<std::vector<std::optional<ModuleView>>> views;  // views[n][w] of e_w T_n
};
ExtendedTensorAlgebra extended_tensor_algebra(const TensorAlgebra& t);
ExtendedTensorAlgebra extended_tensor_algebra(const BimoduleData& m);

/// Pi with its degree-0 copy of Lambda.
struct PiWithBase {
  FDAlgebra pi;  // graded, with generators
  FDAlgebra base;
  std::vector<Vector> base_arrows;  // image in Pi of each arrow of base
};
PiWithBase pi_with_base(const GradedHomAlgebra& pi_graded_result);
PiWithBase pi_with_base(const TensorAlgebra& t);

/// End_Pi(Pi (x) Pi) graded by (Pi (x) Pi)_i = Pi (x) Pi_i, on the summands
/// e_v Pi_i (x) Pi (degree-major).
struct PiTensorPiEnd {
  GradedHomAlgebra end;  // over Pi
  std::vector<std::pair<std::size_t, std::size_t>> keys;  // (v, i) per summand
  std::vector<std::vector<std::size_t>> first_factor;  // Pi basis indices spanning e_v Pi_i
  std::vector<TensorProduct> products;
  std::vector<ModuleView> views;
  std::vector<std::vector<int>> grades;  // second-factor degree per coordinate of each product
  std::size_t ungraded_dim = 0;  // dim End without the grading constraint
  bool negative_degrees_vanish = true;
};
PiTensorPiEnd end_of_pi_tensor_pi(const PiWithBase& pi);
/// dim Ext^degree_Pi(Pi (x) Pi, Pi (x) Pi), summed over pairs of summands.
std::size_t pi_tensor_pi_self_ext(const PiWithBase& pi, const PiTensorPiEnd& e, std::size_t degree = 1);

struct TensorDegreeStep {
  std::size_t degree = 0;  // the map U_1 (x) U_degree -> U_{degree+1}
  std::size_t tensor_dim = 0;
  std::size_t target_dim = 0;
  std::size_t rank = 0;
  bool bijective() const { return rank == tensor_dim && rank == target_dim; }
};
struct TensorDegreeReport {
  std::vector<std::size_t> dims;
  std::vector<TensorDegreeStep> steps;
  bool ok = true;
};
/// Multiplication maps U_1 (x)_{U_0} U_i -> U_{i+1} for every i >= 1.
TensorDegreeReport u_is_tensor_of_degree_one(const GradedHomAlgebra& u);

/// alpha: Hom_Lambda(T, T (x) T_i) -> End_T(T (x) T), f -> (x (x) y -> f(x) y),
/// checked to be a graded bijection compatible with products.
struct AlphaReport {
  bool bijective = false;
  bool multiplicative = false;
  std::size_t products_checked = 0;
};
AlphaReport check_alpha(const TensorAlgebra& t, const ExtendedTensorAlgebra& u, const PiTensorPiEnd& e);

/// Algebra morphism phi: Lambda -> f Lambda f with phi(e_i) = e_{phi(i)} for
/// i in S and 0 otherwise, given on a presentation Lambda = kQ/I.
struct PhiData {
  AlgebraPresentation presentation;
  std::vector<std::optional<std::size_t>> vertex_map;  // phi(i), set exactly on S
  std::vector<PathElement> arrow_images;  // phi(a); zero unless both ends lie in S

  std::vector<std::size_t> support() const;     // S
  std::vector<std::size_t> f_vertices() const;  // phi(S); f is the sum of their idempotents
};

/// Throws DomainError if phi is not of the required shape (non-injective on
/// S, an arrow image between the wrong vertices) or does not preserve I.
void validate_phi(const PhiData& phi);
/// kQ~/(I, r_a) with Q~ = Q plus q_i: phi(i) -> i named "q_<i>" for i in S.
AlgebraPresentation tensor_presentation_via_phi(const PhiData& phi);
/// Name of the arrow q_i added for vertex i.
std::string q_arrow_name(const Quiver& q, std::size_t i);

/// Gamma with phi = tau_d^- on its catalog, and the resulting presentation
/// of Psi.
struct TotalPresentation {
  AuslanderResult auslander;
  PhiData phi;
  AlgebraPresentation presentation;
};
TotalPresentation total_presentation(const FDAlgebra& alg, std::size_t d);
/// Psi_Lambda^Pi on the catalog summands, vertices aligned with Gamma.
GradedHomAlgebra total_psi(const FDAlgebra& alg, std::size_t d, const SummandCatalog& catalog);

struct SurjectionReport {
  std::vector<std::string> failed_relations;  // rendered relations with nonzero image
  std::vector<std::size_t> relation_image_norms;  // nonzero coordinates of each image
  bool surjective = false;
  std::size_t quotient_dim = 0;
  std::size_t psi_dim = 0;
  std::vector<std::size_t> quotient_graded;
  std::vector<std::size_t> psi_graded;
  bool ok() const {
    return failed_relations.empty() && surjective && quotient_dim == psi_dim && quotient_graded == psi_graded;
  }
};
/// kQ~ -> Psi given by arrow images: relations vanish, the image is all of
/// Psi, and dim kQ~/(relations) = dim Psi, graded by arrow_degrees.
SurjectionReport verify_iso_via_surjection(const AlgebraPresentation& pres, const GradedHomAlgebra& psi,
                                           const std::vector<Vector>& arrow_images,
                                           const std::map<std::string, int>& arrow_degrees);
/// Gamma arrows go to their degree-0 morphisms, q_X to the degree-1
/// identification of the catalog successor with tau_d^- X.
std::vector<Vector> total_arrow_images(const TotalPresentation& tp, const GradedHomAlgebra& psi);
SurjectionReport verify_iso_via_surjection(const TotalPresentation& tp, const GradedHomAlgebra& psi);

/// Comparison up to a vertex relabeling, rescaling of arrows and change of
/// generators of the relation space at each pair of vertices.
struct PresentationMatch {
  bool quiver_match = false;
  bool relations_match = false;
  std::vector<std::size_t> arrow_map;  // ours -> golden
  std::vector<Scalar> scale;           // per arrow of ours
  std::string detail;
  bool ok() const { return quiver_match && relations_match; }
};
/// vertex_map: ours -> golden. Arrows are matched by endpoints (names break
/// ties between parallel arrows).
PresentationMatch compare_presentations(const AlgebraPresentation& ours, const AlgebraPresentation& golden,
                                        const std::vector<std::size_t>& vertex_map);

}  // namespace tpa
