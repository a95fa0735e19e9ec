#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tpa/total.hpp"

namespace tpa {

/// Tag of r_{x,i,j} (directions 1-based). For a commutator i < j and the
/// first term starts with a_{x,i}; a monomial is a_{x+f_i,j} a_{x,i}.
struct FamilyRelationTag {
  LatticePoint x;
  int i = 0;
  int j = 0;
  bool commutator = false;
};

struct FamilyRelation {
  FamilyRelationTag tag;
  PathElement element;  // over build_q_dn(d, n)
};

/// One relation per unordered pair {i, j} at x with x + f_i + f_j a vertex.
std::vector<FamilyRelation> family_relations(int d, int n);

AlgebraPresentation pi_dn(int d, int n);
/// Arrows a_{x,d+1} removed, relations with i, j != d+1.
AlgebraPresentation lambda_dn(int d, int n);
/// All r_{x,i,j} except the monomials r_{x,i,d+1} with x_{d+1} = 0.
AlgebraPresentation psi_dn(int d, int n);

/// Vertex of Q^(d+1,n) for tau_d^{-i} P_y over Lambda^(d,n): (y, 0) - i f_{d+2}.
LatticePoint translate_point(const LatticePoint& y, std::size_t i);

struct DictionaryEntry {
  LatticePoint point;  // in Q^(d+1,n)
  std::string tag;     // "P<y>" or "t<i>P<y>"
  bool projective = false;  // x_{d+2} = 0
  bool injective = false;   // x_1 = 0
  std::string q_arrow;      // a_{x-f_{d+2},d+2} when x is the target of some q_x
};
/// Module tags of the vertices of Q^(d+1,n), in lattice order.
std::vector<DictionaryEntry> family_dictionary(int d, int n);

/// Presentation with vertices listed in the order new_to_old (names kept).
AlgebraPresentation reorder_vertices(const AlgebraPresentation& p, const std::vector<std::size_t>& new_to_old);
/// Images of the reference arrows under a match: ours a = scale_a * ref(a).
std::vector<Vector> transport_arrow_images(const PresentationMatch& m, const std::vector<Vector>& ours,
                                           std::size_t reference_arrows);

struct FamilyCheck {
  std::string name;
  PresentationMatch match;
  SurjectionReport surjection;
  std::string detail;
  bool ok() const { return match.ok() && surjection.ok() && detail.empty(); }
};

struct FamilyReport {
  int d = 0;
  int n = 0;
  std::vector<FamilyCheck> checks;  // auslander, preprojective, total
  bool ok() const;
};

/// Parts (a), (b), (c): Gamma, Pi and Psi of Lambda^(d,n) against
/// lambda_dn(d+1,n), pi_dn(d,n) and psi_dn(d+1,n).
FamilyReport verify_family_proposition(int d, int n);

}  // namespace tpa
