#include "tpa/homological.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tpa {

namespace {

// between[w][v]: basis indices of e_v A e_w in index order.
std::vector<std::vector<std::vector<std::size_t>>> corner_table(const FDAlgebra& alg) {
  const std::size_t n = alg.vertex_count();
  std::vector<std::vector<std::vector<std::size_t>>> out(n, std::vector<std::vector<std::size_t>>(n));
  for (std::size_t b = 0; b < alg.dim(); ++b) out[alg.basis[b].source][alg.basis[b].target].push_back(b);
  return out;
}

std::vector<std::size_t> hom_offsets(const FreeModule& p, const Representation& y) {
  std::vector<std::size_t> off(p.generators.size() + 1, 0);
  for (std::size_t k = 0; k < p.generators.size(); ++k) off[k + 1] = off[k] + y.dims[p.generators[k]];
  return off;
}

std::vector<Vector> columns_of(const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.col(c));
  return out;
}

bool columns_in_span(const Matrix& m, const Matrix& span) {
  SpanCoordinates coords(columns_of(span), span.rows());
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!coords.contains(m.col(c))) return false;
  return true;
}

}  // namespace

FreeModule free_module(const FDAlgebra& alg, std::vector<std::size_t> generators) {
  FreeModule p;
  p.generators = std::move(generators);
  std::vector<Representation> parts;
  for (auto v : p.generators) parts.push_back(projective(alg, v));
  p.module = direct_sum(alg, parts).sum;
  const auto between = corner_table(alg);
  std::vector<std::size_t> off(alg.vertex_count(), 0);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto v = p.generators[k];
    const auto& own = between[v][v];
    auto pos = std::find(own.begin(), own.end(), alg.idempotents[v]) - own.begin();
    p.offsets.push_back(off);
    p.generator_index.push_back(off[v] + static_cast<std::size_t>(pos));
    for (std::size_t w = 0; w < off.size(); ++w) off[w] += parts[k].dims[w];
  }
  return p;
}

ModuleMorphism morphism_from_generators(const FDAlgebra& alg, const FreeModule& p, const Representation& y,
                                        const std::vector<Matrix>& y_actions, const std::vector<Vector>& images) {
  const auto between = corner_table(alg);
  ModuleMorphism f = zero_morphism(p.module, y);
  for (std::size_t k = 0; k < p.generators.size(); ++k) {
    const auto v = p.generators[k];
    for (std::size_t w = 0; w < alg.vertex_count(); ++w) {
      const auto& list = between[w][v];
      for (std::size_t idx = 0; idx < list.size(); ++idx) {
        Vector col = y_actions[list[idx]] * images[k];
        const std::size_t c = p.offsets[k][w] + idx;
        for (std::size_t r = 0; r < col.size(); ++r) f.maps[w](r, c) = col[r];
      }
    }
  }
  return f;
}

std::size_t hom_free_dim(const FreeModule& p, const Representation& y) { return hom_offsets(p, y).back(); }

Matrix pullback_matrix(const FDAlgebra& alg, const FreeModule& p, const FreeModule& p2, const ModuleMorphism& f,
                       const Representation& y, const std::vector<Matrix>& y_actions) {
  const auto between = corner_table(alg);
  auto ro = hom_offsets(p, y), co = hom_offsets(p2, y);
  Matrix m(ro.back(), co.back());
  for (std::size_t l = 0; l < p.generators.size(); ++l) {
    const auto w = p.generators[l];
    Vector z = f.maps[w].col(p.generator_index[l]);
    for (std::size_t k = 0; k < p2.generators.size(); ++k) {
      const auto& list = between[w][p2.generators[k]];
      for (std::size_t idx = 0; idx < list.size(); ++idx) {
        const Scalar& c = z[p2.offsets[k][w] + idx];
        if (!c.is_zero()) m.add_block(ro[l], co[k], y_actions[list[idx]], c);
      }
    }
  }
  return m;
}

ProjectiveCover projective_cover(const FDAlgebra& alg, const Representation& x) {
  auto rad = radical_bases(alg, x);
  std::vector<std::size_t> gens;
  std::vector<Vector> images;
  for (std::size_t v = 0; v < x.dims.size(); ++v) {
    auto rr = row_reduce(rad[v].transpose());
    std::vector<bool> pivot(x.dims[v], false);
    for (auto c : rr.pivot_columns) pivot[c] = true;
    for (std::size_t c = 0; c < x.dims[v]; ++c) {
      if (pivot[c]) continue;
      Vector e(x.dims[v]);
      e[c] = Scalar(1);
      gens.push_back(v);
      images.push_back(std::move(e));
    }
  }
  ProjectiveCover out;
  out.cover = free_module(alg, gens);
  out.map = morphism_from_generators(alg, out.cover, x, basis_actions(alg, x), images);
  return out;
}

ProjectiveResolution minimal_resolution(const FDAlgebra& alg, const Representation& x, std::size_t length) {
  ProjectiveResolution res;
  res.module = x;
  Representation current = x;
  ModuleMorphism inclusion = identity_morphism(x);
  for (std::size_t n = 0; n <= length; ++n) {
    if (current.total_dim() == 0) {
      res.complete = true;
      break;
    }
    auto cover = projective_cover(alg, current);
    ModuleMorphism d = compose(inclusion, cover.map);
    if (n > 0) {
      auto rad = radical_bases(alg, res.terms.back().module);
      for (std::size_t v = 0; v < x.dims.size(); ++v)
        if (!columns_in_span(d.maps[v], rad[v])) res.minimal = false;
    }
    auto ker = kernel_module(alg, cover.cover.module, cover.map);
    res.terms.push_back(std::move(cover.cover));
    res.differentials.push_back(std::move(d));
    current = std::move(ker.module);
    inclusion = std::move(ker.inclusion);
  }
  if (current.total_dim() == 0) res.complete = true;
  return res;
}

ExtSpace ext_space(const FDAlgebra& alg, std::size_t i, const Representation& x, const Representation& y) {
  ExtSpace out;
  out.degree = i;
  auto res = minimal_resolution(alg, x, i + 1);
  if (res.terms.size() <= i) return out;
  out.term = res.terms[i];
  auto acts = basis_actions(alg, y);
  const std::size_t h = hom_free_dim(out.term, y);
  std::vector<Vector> z;
  if (res.terms.size() > i + 1) {
    z = kernel(pullback_matrix(alg, res.terms[i + 1], res.terms[i], res.differentials[i + 1], y, acts));
  } else {
    for (std::size_t k = 0; k < h; ++k) {
      Vector e(h);
      e[k] = Scalar(1);
      z.push_back(std::move(e));
    }
  }
  if (z.empty()) return out;
  std::vector<Vector> b;
  if (i > 0) {
    SpanCoordinates zc(z, h);
    auto m = pullback_matrix(alg, res.terms[i], res.terms[i - 1], res.differentials[i], y, acts);
    for (std::size_t c = 0; c < m.cols(); ++c) b.push_back(*zc.coordinates(m.col(c)));
  }
  QuotientSpace quot(b, z.size());
  out.dim = quot.dim();
  for (std::size_t k = 0; k < quot.dim(); ++k) out.cocycles.push_back(z[quot.representative(k)]);
  return out;
}

std::vector<ModuleMorphism> lift_chain_map(const FDAlgebra& alg, const ProjectiveResolution& rx,
                                           const ProjectiveResolution& ry, const ModuleMorphism& f,
                                           std::size_t upto) {
  std::vector<ModuleMorphism> out;
  for (std::size_t n = 0; n <= upto && n < rx.terms.size(); ++n) {
    const FreeModule& px = rx.terms[n];
    const bool has_target = n < ry.terms.size();
    FreeModule py = has_target ? ry.terms[n] : free_module(alg, {});
    ModuleMorphism comp = n == 0 ? compose(f, rx.differentials[0]) : compose(out.back(), rx.differentials[n]);
    std::vector<Vector> images;
    for (std::size_t l = 0; l < px.generators.size(); ++l) {
      const auto v = px.generators[l];
      Vector t = comp.maps[v].col(px.generator_index[l]);
      if (!has_target) {
        if (!is_zero_vector(t)) throw Error("chain map lift failed: target resolution too short");
        images.emplace_back();
        continue;
      }
      auto sol = solve_linear(ry.differentials[n].maps[v], t);
      if (!sol.consistent) throw Error("chain map lift failed");
      images.push_back(std::move(sol.particular));
    }
    out.push_back(morphism_from_generators(alg, px, py.module, basis_actions(alg, py.module), images));
  }
  return out;
}

namespace {

// Left multiplication by arrow a: i -> j as a map D(A e_i) -> D(A e_j).
ModuleMorphism left_multiplication(const FDAlgebra& alg, std::size_t a, const Representation& ii,
                                   const Representation& ij) {
  const auto& arrow = alg.quiver.arrow(a);
  const auto between = corner_table(alg);
  ModuleMorphism f = zero_morphism(ii, ij);
  for (std::size_t w = 0; w < alg.vertex_count(); ++w) {
    const auto& src = between[arrow.source][w];  // basis of (I_i)_w
    const auto& tgt = between[arrow.target][w];  // basis of (I_j)_w
    for (std::size_t r = 0; r < tgt.size(); ++r) {
      Vector img = alg.multiply(alg.unit(tgt[r]), alg.arrow_elements[a]);
      for (std::size_t c = 0; c < src.size(); ++c) f.maps[w](r, c) = img[src[c]];
    }
  }
  return f;
}

}  // namespace

TauFunctorData tau_functor_data(const FDAlgebra& alg, std::size_t d) {
  if (d == 0) throw InputError("d must be positive");
  auto gd = global_dimension(alg);
  if (!gd || *gd > d) throw DomainError("global dimension exceeds " + std::to_string(d));
  TauFunctorData td;
  td.algebra = alg;
  td.d = d;
  std::vector<Representation> inj;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
    inj.push_back(injective(alg, v));
    td.resolutions.push_back(minimal_resolution(alg, inj.back(), d));
  }
  const Quiver& q = alg.quiver;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    auto i = q.arrow(a).source, j = q.arrow(a).target;
    auto l = left_multiplication(alg, a, inj[i], inj[j]);
    if (!is_morphism(alg, inj[i], inj[j], l)) throw Error("left multiplication is not a module map");
    td.arrow_lifts.push_back(lift_chain_map(alg, td.resolutions[i], td.resolutions[j], l, d));
  }
  return td;
}

TauContext tau_context(const TauFunctorData& td, const Representation& x) {
  const auto& alg = td.algebra;
  TauContext c;
  c.dims = x.dims;
  c.actions = basis_actions(alg, x);
  for (const auto& res : td.resolutions) {
    if (res.terms.size() <= td.d) {
      c.quotients.emplace_back();
      continue;
    }
    auto m = pullback_matrix(alg, res.terms[td.d], res.terms[td.d - 1], res.differentials[td.d], x, c.actions);
    c.quotients.emplace_back(columns_of(m), m.rows());
  }
  return c;
}

Representation tau_minus(const TauFunctorData& td, const Representation& x) {
  return tau_minus(td, x, tau_context(td, x));
}

Representation tau_minus(const TauFunctorData& td, const Representation& x, const TauContext& cx) {
  const auto& alg = td.algebra;
  const Quiver& q = alg.quiver;
  Representation out;
  for (const auto& qs : cx.quotients) out.dims.push_back(qs.dim());
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    auto i = q.arrow(a).source, j = q.arrow(a).target;
    Matrix m(out.dims[i], out.dims[j]);
    if (out.dims[i] > 0 && out.dims[j] > 0) {
      const auto& ri = td.resolutions[i];
      const auto& rj = td.resolutions[j];
      auto pull = pullback_matrix(alg, ri.terms[td.d], rj.terms[td.d], td.arrow_lifts[a][td.d], x, cx.actions);
      for (std::size_t c = 0; c < out.dims[j]; ++c) {
        Vector img = cx.quotients[i].project(pull.col(cx.quotients[j].representative(c)));
        for (std::size_t r = 0; r < img.size(); ++r) m(r, c) = img[r];
      }
    }
    out.actions.push_back(std::move(m));
  }
  return out;
}

ModuleMorphism tau_minus_morphism(const TauFunctorData& td, const Representation& x, const Representation& y,
                                  const ModuleMorphism& f) {
  return tau_minus_morphism(td, tau_context(td, x), tau_context(td, y), f);
}

ModuleMorphism tau_minus_morphism(const TauFunctorData& td, const TauContext& cx, const TauContext& cy,
                                  const ModuleMorphism& f) {
  auto hom_off = [](const FreeModule& p, const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> off(p.generators.size() + 1, 0);
    for (std::size_t k = 0; k < p.generators.size(); ++k) off[k + 1] = off[k] + dims[p.generators[k]];
    return off;
  };
  ModuleMorphism out;
  for (std::size_t v = 0; v < td.resolutions.size(); ++v) {
    Matrix m(cy.quotients[v].dim(), cx.quotients[v].dim());
    if (m.rows() > 0 && m.cols() > 0) {
      const FreeModule& p = td.resolutions[v].terms[td.d];
      auto ox = hom_off(p, cx.dims), oy = hom_off(p, cy.dims);
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const std::size_t rep = cx.quotients[v].representative(c);
        auto k = static_cast<std::size_t>(std::upper_bound(ox.begin(), ox.end(), rep) - ox.begin()) - 1;
        Vector img(oy.back());
        const auto& fk = f.maps[p.generators[k]];
        for (std::size_t r = 0; r < fk.rows(); ++r) img[oy[k] + r] = fk(r, rep - ox[k]);
        Vector proj = cy.quotients[v].project(img);
        for (std::size_t r = 0; r < proj.size(); ++r) m(r, c) = proj[r];
      }
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

std::optional<std::size_t> projective_dimension(const FDAlgebra& alg, const Representation& x,
                                                std::optional<std::size_t> bound) {
  auto res = minimal_resolution(alg, x, bound.value_or(std::max<std::size_t>(alg.dim(), 1)));
  if (!res.complete) return std::nullopt;
  return res.terms.empty() ? 0 : res.terms.size() - 1;
}

std::optional<std::size_t> global_dimension(const FDAlgebra& alg, std::optional<std::size_t> bound) {
  std::size_t g = 0;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
    auto pd = projective_dimension(alg, simple(alg, v), bound);
    if (!pd) return std::nullopt;
    g = std::max(g, *pd);
  }
  return g;
}

std::size_t default_domdim_bound(const FDAlgebra& alg) { return 2 * loewy_length(alg) + 4; }

DominantDimension dominant_dimension(const FDAlgebra& alg, std::optional<std::size_t> bound) {
  const std::size_t b = bound.value_or(default_domdim_bound(alg));
  if (b == 0) return {0, true};
  // I_v is projective-injective iff it is isomorphic to some P_w.
  std::vector<bool> proj_inj(alg.vertex_count(), false);
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
    auto iv = injective(alg, v);
    for (std::size_t w = 0; w < alg.vertex_count() && !proj_inj[v]; ++w) {
      auto pw = projective(alg, w);
      if (pw.dims == iv.dims && is_isomorphic(alg, iv, pw).isomorphic) proj_inj[v] = true;
    }
  }
  // The minimal injective coresolution of A is the dual of the minimal
  // projective resolution of D(A) over the opposite algebra.
  auto op = opposite(alg);
  auto res = minimal_resolution(op, dualize(alg, regular_module(alg)), b - 1);
  std::size_t count = 0;
  for (const auto& term : res.terms) {
    for (auto v : term.generators)
      if (!proj_inj[v]) return {count, false};
    ++count;
  }
  return {b, true};
}

ARQuiver knit_ar_quiver(const FDAlgebra& h) {
  if (!h.presentation || !h.presentation->relations.empty())
    throw DomainError("knitting needs a path algebra without relations");
  const Quiver& q = h.quiver;
  if (!q.is_acyclic()) throw DomainError("knitting needs an acyclic quiver");
  const std::size_t n = q.vertex_count();
  // paths[u][w]: number of paths from u to w.
  std::vector<std::vector<long>> paths(n, std::vector<long>(n, 0));
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<long> layer(n, 0);
    layer[u] = 1;
    for (std::size_t len = 0; len <= n; ++len) {
      std::vector<long> next(n, 0);
      for (std::size_t w = 0; w < n; ++w) {
        paths[u][w] += layer[w];
        if (layer[w] == 0) continue;
        for (auto a : q.arrows_from(w)) next[q.arrow(a).target] += layer[w];
      }
      layer = std::move(next);
    }
  }
  std::vector<std::vector<long>> injective_dims(n, std::vector<long>(n));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) injective_dims[v][w] = paths[v][w];

  struct Node {
    std::vector<long> dim;
    std::vector<std::size_t> preds;
    std::optional<std::size_t> projective;
  };
  std::vector<Node> nodes;
  for (std::size_t v = 0; v < n; ++v) {
    Node p;
    for (std::size_t w = 0; w < n; ++w) p.dim.push_back(paths[w][v]);
    for (auto a : q.arrows_to(v)) p.preds.push_back(q.arrow(a).source);
    p.projective = v;
    nodes.push_back(std::move(p));
  }
  enum class Status { unknown, translated, injective };
  std::vector<Status> status(n, Status::unknown);
  std::vector<std::optional<std::size_t>> tau(n);
  const std::size_t limit = 64 * (n + 1) * (n + 1);
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t m = 0; m < nodes.size(); ++m) {
      if (status[m] != Status::unknown) continue;
      const auto preds = nodes[m].preds;
      if (std::any_of(preds.begin(), preds.end(), [&](std::size_t p) { return status[p] == Status::unknown; }))
        continue;
      std::vector<std::size_t> succ;
      if (nodes[m].projective)
        for (auto a : q.arrows_from(*nodes[m].projective)) succ.push_back(q.arrow(a).target);
      for (auto p : preds)
        if (status[p] == Status::translated) succ.push_back(*tau[p]);
      progress = true;
      if (std::find(injective_dims.begin(), injective_dims.end(), nodes[m].dim) != injective_dims.end()) {
        status[m] = Status::injective;
        continue;
      }
      std::vector<long> dim(n, 0);
      for (auto s : succ)
        for (std::size_t w = 0; w < n; ++w) dim[w] += nodes[s].dim[w];
      for (std::size_t w = 0; w < n; ++w) dim[w] -= nodes[m].dim[w];
      if (std::any_of(dim.begin(), dim.end(), [](long c) { return c < 0; }) ||
          std::all_of(dim.begin(), dim.end(), [](long c) { return c == 0; }))
        throw DomainError("knitting produced a non-positive dimension vector");
      nodes.push_back(Node{dim, succ, std::nullopt});
      status.push_back(Status::unknown);
      tau.emplace_back();
      status[m] = Status::translated;
      tau[m] = nodes.size() - 1;
      if (nodes.size() > limit) throw DomainError("knitting did not terminate: not representation-finite");
    }
  }
  if (std::find(status.begin(), status.end(), Status::unknown) != status.end())
    throw DomainError("knitting stalled");

  ARQuiver ar;
  std::vector<std::string> names;
  for (std::size_t m = 0; m < nodes.size(); ++m) names.push_back(std::to_string(m + 1));
  std::vector<ArrowSpec> arrows;
  std::map<std::pair<std::size_t, std::size_t>, int> seen;
  for (std::size_t m = 0; m < nodes.size(); ++m)
    for (auto p : nodes[m].preds) {
      int k = seen[{p, m}]++;
      std::string name = "x" + names[p] + "_" + names[m] + (k > 0 ? "_" + std::to_string(k) : "");
      arrows.push_back({name, names[p], names[m]});
    }
  ar.quiver = Quiver("AR", names, arrows);
  for (std::size_t m = 0; m < nodes.size(); ++m) {
    ar.dimension_vectors.push_back(nodes[m].dim);
    ar.tau_minus.push_back(tau[m]);
    ar.projective_vertex.push_back(nodes[m].projective);
    ar.injective.push_back(status[m] == Status::injective);
  }
  return ar;
}

std::string ar_quiver_to_dot(const ARQuiver& ar) {
  std::ostringstream os;
  os << "digraph AR {\n  rankdir=LR;\n";
  const auto& vs = ar.quiver.vertices();
  for (std::size_t m = 0; m < vs.size(); ++m) {
    os << "  \"" << vs[m] << "\" [label=\"" << vs[m] << "\\n(";
    for (std::size_t w = 0; w < ar.dimension_vectors[m].size(); ++w)
      os << (w ? "," : "") << ar.dimension_vectors[m][w];
    os << ")\"];\n";
  }
  for (std::size_t a = 0; a < ar.quiver.arrow_count(); ++a) {
    const auto& arrow = ar.quiver.arrow(a);
    os << "  \"" << vs[arrow.source] << "\" -> \"" << vs[arrow.target] << "\";\n";
  }
  for (std::size_t m = 0; m < vs.size(); ++m)
    if (ar.tau_minus[m])
      os << "  \"" << vs[*ar.tau_minus[m]] << "\" -> \"" << vs[m] << "\" [style=dashed, constraint=false];\n";
  os << "}\n";
  return os.str();
}

}  // namespace tpa
