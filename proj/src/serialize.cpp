#include "tpa/serialize.hpp"

#include "tpa/grammar.hpp"

namespace tpa {

namespace {

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, std::uint64_t field) {
  if (!j.is_array() || j.size() != rows) throw InputError("matrix has the wrong number of rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw InputError("matrix row has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar::parse(j[r][c].get<std::string>(), field);
  }
  return m;
}

Json path_json(const Quiver& q, const Path& p) {
  Json arrows = Json::array();
  for (auto a : p.arrows) arrows.push_back(q.arrow(a).name);
  return Json{{"start", q.vertex(p.start)}, {"arrows", arrows}};
}

Path path_from_json(const Quiver& q, const Json& j) {
  Path p{q.vertex_index(j.at("start").get<std::string>()), {}};
  for (const auto& a : j.at("arrows")) p.arrows.push_back(q.arrow_index(a.get<std::string>()));
  if (!is_valid_path(q, p)) throw InputError("invalid path in JSON");
  return p;
}

Json sparse_json(const Vector& v) {
  Json out = Json::array();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out.push_back(Json::array({k, v[k].str()}));
  return out;
}

template <class T>
Json index_list(const std::vector<T>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x);
  return out;
}

}  // namespace

Json quiver_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows())
    arrows.push_back(Json{{"name", a.name}, {"source", q.vertex(a.source)}, {"target", q.vertex(a.target)}});
  return Json{{"name", q.name()}, {"vertices", q.vertices()}, {"arrows", arrows}};
}

Json presentation_json(const AlgebraPresentation& p) {
  Json rels = Json::array();
  for (const auto& r : p.relations) rels.push_back(render_element(p.quiver, r));
  return Json{{"quiver", quiver_json(p.quiver)}, {"relations", rels}, {"text", render_presentation(p)}};
}

Json algebra_json(const FDAlgebra& a) {
  Json basis = Json::array();
  for (const auto& b : a.basis) {
    Json e{{"label", b.label}, {"source", b.source}, {"target", b.target}, {"degree", b.degree}};
    e["path"] = b.path ? path_json(a.quiver, *b.path) : Json(nullptr);
    basis.push_back(std::move(e));
  }
  Json products = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& [k, c] : a.product(i, j)) products.push_back(Json::array({i, j, k, c.str()}));
  Json arrows = Json::array();
  for (const auto& v : a.arrow_elements) arrows.push_back(sparse_json(v));
  Json out{{"name", a.name},
           {"field", a.field},
           {"vertices", a.vertices},
           {"graded", a.graded},
           {"dim", a.dim()},
           {"basis", basis},
           {"idempotents", index_list(a.idempotents)},
           {"products", products},
           {"quiver", quiver_json(a.quiver)},
           {"arrow_elements", arrows}};
  if (a.graded) out["graded_dims"] = index_list(a.graded_dims());
  out["presentation"] = a.presentation ? Json(render_presentation(*a.presentation)) : Json(nullptr);
  return out;
}

FDAlgebra algebra_from_json(const Json& j) {
  try {
    FDAlgebra a;
    a.name = j.at("name").get<std::string>();
    a.field = j.at("field").get<std::uint64_t>();
    a.vertices = j.at("vertices").get<std::vector<std::string>>();
    a.graded = j.at("graded").get<bool>();
    std::vector<ArrowSpec> specs;
    for (const auto& arr : j.at("quiver").at("arrows"))
      specs.push_back({arr.at("name"), arr.at("source"), arr.at("target")});
    a.quiver = Quiver(j.at("quiver").at("name").get<std::string>(), a.vertices, specs);
    for (const auto& b : j.at("basis")) {
      BasisElement e;
      e.label = b.at("label").get<std::string>();
      e.source = b.at("source").get<std::size_t>();
      e.target = b.at("target").get<std::size_t>();
      e.degree = b.at("degree").get<int>();
      if (!b.at("path").is_null()) e.path = path_from_json(a.quiver, b.at("path"));
      a.basis.push_back(std::move(e));
    }
    a.idempotents = j.at("idempotents").get<std::vector<std::size_t>>();
    a.reset_table();
    std::map<std::pair<std::size_t, std::size_t>, SparseVector> table;
    for (const auto& t : j.at("products")) {
      const auto i = t.at(0).get<std::size_t>(), jj = t.at(1).get<std::size_t>(), k = t.at(2).get<std::size_t>();
      if (i >= a.dim() || jj >= a.dim() || k >= a.dim()) throw InputError("product index out of range");
      table[{i, jj}].emplace_back(k, Scalar::parse(t.at(3).get<std::string>(), a.field));
    }
    for (auto& [ij, v] : table) a.set_product(ij.first, ij.second, std::move(v));
    for (const auto& arr : j.at("arrow_elements")) {
      Vector v = a.zero();
      for (const auto& e : arr) v.at(e.at(0).get<std::size_t>()) = Scalar::parse(e.at(1).get<std::string>(), a.field);
      a.arrow_elements.push_back(std::move(v));
    }
    if (j.contains("presentation") && !j.at("presentation").is_null())
      a.presentation = parse_presentation(j.at("presentation").get<std::string>(), a.field);
    return a;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed algebra JSON: ") + e.what());
  }
}

Json representation_json(const Quiver& q, const Representation& x) {
  Json actions = Json::object();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) actions[q.arrow(a).name] = matrix_json(x.actions.at(a));
  return Json{{"dims", index_list(x.dims)}, {"actions", actions}};
}

Representation representation_from_json(const Quiver& q, const Json& j, std::uint64_t field) {
  try {
    Representation x;
    x.dims = j.at("dims").get<std::vector<std::size_t>>();
    if (x.dims.size() != q.vertex_count()) throw InputError("one dimension per vertex expected");
    for (const auto& arr : q.arrows())
      x.actions.push_back(matrix_from_json(j.at("actions").at(arr.name), x.dims[arr.source], x.dims[arr.target], field));
    return x;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed representation JSON: ") + e.what());
  }
}

Json morphism_json(const ModuleMorphism& f) {
  Json maps = Json::array();
  for (const auto& m : f.maps) maps.push_back(matrix_json(m));
  return Json{{"maps", maps}};
}

Json catalog_json(const SummandCatalog& c) {
  Json entries = Json::array();
  for (const auto& e : c.entries) {
    Json j{{"tag", e.name},
           {"tau_power", e.tau_power},
           {"projective", e.projective},
           {"dims", index_list(e.module.dims)},
           {"injective", e.injective}};
    j["tau_minus"] = e.successor ? Json(c.entries[*e.successor].name) : Json(nullptr);
    Json preds = Json::array();
    for (auto p : e.predecessors) preds.push_back(c.entries[p].name);
    j["tau"] = preds;
    entries.push_back(std::move(j));
  }
  return Json{{"entries", entries}};
}

Json ar_quiver_json(const ARQuiver& ar) {
  Json vs = Json::array();
  for (std::size_t k = 0; k < ar.quiver.vertex_count(); ++k) {
    Json v{{"name", ar.quiver.vertex(k)}, {"dims", ar.dimension_vectors[k]}, {"injective", ar.injective[k]}};
    v["tau_minus"] = ar.tau_minus[k] ? Json(ar.quiver.vertex(*ar.tau_minus[k])) : Json(nullptr);
    v["projective"] = ar.projective_vertex[k] ? Json(*ar.projective_vertex[k]) : Json(nullptr);
    vs.push_back(std::move(v));
  }
  return Json{{"vertices", vs}, {"quiver", quiver_json(ar.quiver)}};
}

Json graded_hom_json(const GradedHomAlgebra& g) {
  Json out{{"summands", g.names},
           {"d", g.d},
           {"dim", g.algebra.dim()},
           {"graded_dims", index_list(g.graded_dims())},
           {"basic", g.basic}};
  Json cartan = Json::array();
  for (const auto& row : g.algebra.cartan()) cartan.push_back(index_list(row));
  out["cartan"] = cartan;
  out["presentation"] = g.algebra.presentation ? presentation_json(*g.algebra.presentation) : Json(nullptr);
  return out;
}

Json surjection_json(const SurjectionReport& r) {
  return Json{{"failed_relations", r.failed_relations},
              {"relation_image_norms", index_list(r.relation_image_norms)},
              {"surjective", r.surjective},
              {"quotient_dim", r.quotient_dim},
              {"psi_dim", r.psi_dim},
              {"quotient_graded", index_list(r.quotient_graded)},
              {"psi_graded", index_list(r.psi_graded)},
              {"pass", r.ok()}};
}

Json match_json(const PresentationMatch& m, const Quiver& ours, const Quiver& golden) {
  Json arrows = Json::object();
  for (std::size_t a = 0; a < m.arrow_map.size() && m.quiver_match; ++a) {
    Json e{{"reference", golden.arrow(m.arrow_map[a]).name}};
    if (a < m.scale.size()) e["scale"] = m.scale[a].str();
    arrows[ours.arrow(a).name] = e;
  }
  return Json{{"quiver_match", m.quiver_match},
              {"relations_match", m.relations_match},
              {"arrows", arrows},
              {"detail", m.detail},
              {"pass", m.ok()}};
}

Json tensor_degree_json(const TensorDegreeReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps)
    steps.push_back(Json{{"degree", s.degree},
                         {"tensor_dim", s.tensor_dim},
                         {"target_dim", s.target_dim},
                         {"rank", s.rank},
                         {"bijective", s.bijective()}});
  return Json{{"dims", index_list(r.dims)}, {"steps", steps}, {"pass", r.ok}};
}

Json alpha_json(const AlphaReport& r) {
  return Json{{"bijective", r.bijective},
              {"multiplicative", r.multiplicative},
              {"products_checked", r.products_checked},
              {"pass", r.bijective && r.multiplicative}};
}

Json family_json(const FamilyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"name", c.name},
                          {"quiver_match", c.match.quiver_match},
                          {"relations_match", c.match.relations_match},
                          {"match_detail", c.match.detail},
                          {"surjection", surjection_json(c.surjection)},
                          {"detail", c.detail},
                          {"pass", c.ok()}});
  return Json{{"d", r.d}, {"n", r.n}, {"checks", checks}, {"pass", r.ok()}};
}

Json dictionary_json(const std::vector<DictionaryEntry>& d) {
  Json out = Json::array();
  for (const auto& e : d)
    out.push_back(Json{{"vertex", lattice_label(e.point)},
                       {"tag", e.tag},
                       {"projective", e.projective},
                       {"injective", e.injective},
                       {"q_arrow", e.q_arrow}});
  return out;
}

}  // namespace tpa
