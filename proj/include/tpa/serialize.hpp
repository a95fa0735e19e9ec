#pragma once

#include <json.hpp>

#include "tpa/families.hpp"

namespace tpa {

/// Objects keep sorted keys, so dumps are byte-stable.
using Json = nlohmann::json;

Json quiver_json(const Quiver& q);
/// Grammar text plus the relation list.
Json presentation_json(const AlgebraPresentation& p);

/// Basis paths as arrow-name sequences, products as sparse triples
/// [i, j, k, "c"] meaning e_i * e_j has coefficient c on e_k.
Json algebra_json(const FDAlgebra& a);
FDAlgebra algebra_from_json(const Json& j);

/// dims per vertex, one matrix per arrow name with exact entries as strings.
Json representation_json(const Quiver& q, const Representation& x);
Representation representation_from_json(const Quiver& q, const Json& j, std::uint64_t field = 0);
Json morphism_json(const ModuleMorphism& f);

Json catalog_json(const SummandCatalog& c);
Json ar_quiver_json(const ARQuiver& ar);

Json graded_hom_json(const GradedHomAlgebra& g);
Json surjection_json(const SurjectionReport& r);
Json match_json(const PresentationMatch& m, const Quiver& ours, const Quiver& golden);
Json tensor_degree_json(const TensorDegreeReport& r);
Json alpha_json(const AlphaReport& r);
Json family_json(const FamilyReport& r);
Json dictionary_json(const std::vector<DictionaryEntry>& d);

}  // namespace tpa
