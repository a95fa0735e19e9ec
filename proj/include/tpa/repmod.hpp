#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tpa/algebra.hpp"
#include "tpa/matrix.hpp"

namespace tpa {

/// Right module as a representation of the opposite quiver: for an arrow
/// a: i -> j of the algebra's quiver, actions[a] is the dims[i] x dims[j]
/// matrix of m -> m*a from M_j to M_i (column vectors). A path traversing
/// a1, ..., am acts by actions[a1] * ... * actions[am].
struct Representation {
  std::vector<std::size_t> dims;
  std::vector<Matrix> actions;

  std::size_t total_dim() const;
  std::vector<std::size_t> offsets() const;
  bool is_zero() const { return total_dim() == 0; }
  friend bool operator==(const Representation&, const Representation&) = default;
};

/// One matrix per vertex, maps[v]: X_v -> Y_v (dims Y_v x X_v).
struct ModuleMorphism {
  std::vector<Matrix> maps;
  bool is_zero() const;
  friend bool operator==(const ModuleMorphism&, const ModuleMorphism&) = default;
};

/// Throws InputError on shape mismatch or if a defining relation fails.
void validate(const FDAlgebra& alg, const Representation& x);
bool is_morphism(const FDAlgebra& alg, const Representation& x, const Representation& y, const ModuleMorphism& f);

Matrix path_action(const Representation& x, const Path& p);
Matrix element_action(const Representation& x, const Quiver& q, const PathElement& e);

ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f);  // g o f
ModuleMorphism identity_morphism(const Representation& x);
ModuleMorphism zero_morphism(const Representation& x, const Representation& y);
ModuleMorphism combine(const std::vector<ModuleMorphism>& fs, const Vector& coeffs, const Representation& x,
                       const Representation& y);
ModuleMorphism operator+(const ModuleMorphism& f, const ModuleMorphism& g);
ModuleMorphism operator*(const Scalar& c, const ModuleMorphism& f);
/// Block-diagonal total matrix (total_dim(y) x total_dim(x)).
Matrix total_matrix(const ModuleMorphism& f, const Representation& x, const Representation& y);
ModuleMorphism from_total_matrix(const Matrix& m, const Representation& x, const Representation& y);
Vector flatten(const ModuleMorphism& f);

Representation projective(const FDAlgebra& alg, std::size_t v);
Representation injective(const FDAlgebra& alg, std::size_t v);
Representation simple(const FDAlgebra& alg, std::size_t v);
Representation zero_module(const FDAlgebra& alg);
/// Regular right module as the direct sum of projectives in vertex order.
Representation regular_module(const FDAlgebra& alg);
/// D(A) as the direct sum of injectives in vertex order.
Representation dual_module(const FDAlgebra& alg);

/// D(x), a representation over opposite(alg): transposed actions with
/// arrows matched by name.
Representation dualize(const FDAlgebra& alg, const Representation& x);
ModuleMorphism dualize(const ModuleMorphism& f);

/// Allowed entries of the unknown maps: mask(v, row, col).
using HomMask = std::function<bool(std::size_t, std::size_t, std::size_t)>;

std::vector<ModuleMorphism> hom_basis(const FDAlgebra& alg, const Representation& x, const Representation& y,
                                      const HomMask& mask = {});

struct DirectSum {
  Representation sum;
  std::vector<ModuleMorphism> injections;
  std::vector<ModuleMorphism> projections;
};
DirectSum direct_sum(const FDAlgebra& alg, const std::vector<Representation>& xs);

struct IsoResult {
  bool isomorphic = false;
  bool certified = true;  // false only for an unconfirmed "no"
  std::optional<ModuleMorphism> witness;
};
/// Samples random combinations of Hom(x, y); without a seed the process-wide
/// witness seed is used.
IsoResult is_isomorphic(const FDAlgebra& alg, const Representation& x, const Representation& y,
                        std::optional<std::uint64_t> seed = std::nullopt);
void set_witness_seed(std::uint64_t seed);
std::uint64_t witness_seed();
std::optional<ModuleMorphism> inverse(const ModuleMorphism& f);

/// End(x) is local. Uses the trace form, so characteristic 0 only.
bool is_indecomposable(const FDAlgebra& alg, const Representation& x);

std::vector<std::size_t> dimension_vector(const Representation& x);

/// Action of each algebra basis element b in e_t A e_s as a matrix X_t -> X_s.
std::vector<Matrix> basis_actions(const FDAlgebra& alg, const Representation& x);

struct Submodule {
  Representation module;
  ModuleMorphism inclusion;
};

/// Submodule spanned at each vertex v by the (independent) columns of
/// bases[v]; throws InputError if the span is not closed under the action.
Submodule submodule(const FDAlgebra& alg, const Representation& x, const std::vector<Matrix>& bases);
Submodule kernel_module(const FDAlgebra& alg, const Representation& x, const ModuleMorphism& f);
/// Column basis of rad(x)_v = sum of the images of the arrows leaving v.
std::vector<Matrix> radical_bases(const FDAlgebra& alg, const Representation& x);

}  // namespace tpa
