#include "tpa/preprojective.hpp"

#include <algorithm>

namespace tpa {

AlgebraPresentation preprojective_presentation(const Quiver& q, const std::map<std::string, std::string>& star_names) {
  auto dq = double_quiver(q, star_names);
  std::vector<PathElement> rho(q.vertex_count());
  for (std::size_t a = 0; a < dq.quiver.arrow_count(); ++a) {
    if (dq.starred[a]) continue;
    const auto s = dq.partner[a];
    const auto i = dq.quiver.arrow(a).source, j = dq.quiver.arrow(a).target;
    rho[i].add_term(Path{i, {a, s}}, Scalar(1));   // a* a at i
    rho[j].add_term(Path{j, {s, a}}, Scalar(-1));  // a a* at j
  }
  AlgebraPresentation p{dq.quiver, {}};
  for (auto& r : rho)
    if (!r.is_zero()) p.relations.push_back(std::move(r));
  return p;
}

FDAlgebra pi_combinatorial(const DynkinType& type, const std::vector<bool>& reversed) {
  auto q = build_dynkin(type, reversed);
  auto p = preprojective_presentation(q);
  p.quiver = Quiver("Pi(" + type.str() + ")", p.quiver.vertices(), p.quiver.arrow_specs());
  return quotient_algebra(p);
}

std::size_t tau_iteration_bound(const FDAlgebra& alg) { return alg.dim(); }

TauTower::TauTower(TauFunctorData td, std::vector<Representation> modules, std::size_t bound) : td_(std::move(td)) {
  for (auto& x : modules) {
    std::vector<Representation> pw;
    std::vector<TauContext> ctx;
    if (x.total_dim() > 0) pw.push_back(std::move(x));
    while (!pw.empty()) {
      ctx.push_back(tau_context(td_, pw.back()));
      auto next = tau_minus(td_, pw.back(), ctx.back());
      if (next.total_dim() == 0) break;
      if (pw.size() > bound) throw BoundExceeded("not tau_d-finite within " + std::to_string(bound) + " iterations");
      pw.push_back(std::move(next));
    }
    powers_.push_back(std::move(pw));
    contexts_.push_back(std::move(ctx));
  }
}

TauTower::TauTower(const FDAlgebra& alg, std::vector<Representation> modules) {
  td_.algebra = alg;
  for (auto& x : modules) {
    powers_.emplace_back();
    if (x.total_dim() > 0) powers_.back().push_back(std::move(x));
    contexts_.emplace_back();
  }
}

std::optional<ModuleMorphism> TauTower::apply(std::size_t i, std::size_t k, std::size_t s, std::size_t l,
                                              std::size_t t, const ModuleMorphism& f) const {
  ModuleMorphism cur = f;
  for (std::size_t step = 0; step < i; ++step) {
    if (s + step + 1 >= height(k) || t + step + 1 >= height(l)) return std::nullopt;
    cur = tau_minus_morphism(td_, contexts_[k][s + step], contexts_[l][t + step], cur);
  }
  return cur;
}

const std::vector<std::size_t>& GradedHomAlgebra::block(std::size_t degree, std::size_t source,
                                                        std::size_t target) const {
  static const std::vector<std::size_t> empty;
  auto it = blocks.find({degree, source, target});
  return it == blocks.end() ? empty : it->second;
}

std::optional<Vector> GradedHomAlgebra::coordinates(std::size_t degree, std::size_t source, std::size_t target,
                                                    const ModuleMorphism& f) const {
  auto it = block_coords.find({degree, source, target});
  if (it == block_coords.end()) {
    if (f.is_zero()) return Vector{};
    return std::nullopt;
  }
  return it->second.coordinates(flatten(f));
}

namespace {

bool pairwise_non_isomorphic(const FDAlgebra& alg, const std::vector<Representation>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i].dims == xs[j].dims && is_isomorphic(alg, xs[i], xs[j]).isomorphic) return false;
  return true;
}

}  // namespace

GradedHomAlgebra assemble_graded_hom(const GradedHomRecipe& r) {
  const FDAlgebra& over = *r.over;
  const std::size_t n = r.summands.size();
  GradedHomAlgebra out;
  out.base = over;
  out.summands = r.summands;
  out.names = r.names;
  out.d = r.d;

  FDAlgebra& a = out.algebra;
  a.name = r.name;
  a.field = over.field;
  a.vertices = r.names;
  a.graded = true;
  a.idempotents.assign(n, 0);
  for (std::size_t deg = 0; deg <= r.top; ++deg)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l) {
        const Representation* y = r.target(deg, l);
        if (!y) continue;
        const auto& x = r.summands[k];
        auto hs = r.piece ? r.piece(deg, k, l) : hom_basis(over, x, *y);
        if (deg == 0 && k == l) {
          // Put the identity first so that it is a basis element.
          std::vector<ModuleMorphism> with_id{identity_morphism(x)};
          EchelonSpan span(flatten(with_id[0]).size());
          span.add(flatten(with_id[0]));
          for (auto& h : hs)
            if (span.add(flatten(h))) with_id.push_back(std::move(h));
          hs = std::move(with_id);
          a.idempotents[k] = a.basis.size();
        }
        if (hs.empty()) continue;
        std::vector<std::size_t> idx;
        std::vector<Vector> flat;
        for (std::size_t m = 0; m < hs.size(); ++m) {
          idx.push_back(a.basis.size());
          flat.push_back(flatten(hs[m]));
          a.basis.push_back(BasisElement{std::to_string(deg) + ":" + r.names[k] + "->" + r.names[l] + "#" +
                                             std::to_string(m),
                                         k, l, static_cast<int>(deg), std::nullopt});
          out.elements.push_back({deg, k, l, std::move(hs[m])});
        }
        out.block_coords.emplace(std::make_tuple(deg, k, l), SpanCoordinates(flat, flat.front().size()));
        out.blocks.emplace(std::make_tuple(deg, k, l), std::move(idx));
      }

  a.reset_table();
  for (std::size_t gi = 0; gi < out.elements.size(); ++gi) {
    const auto& g = out.elements[gi];
    for (std::size_t fi = 0; fi < out.elements.size(); ++fi) {
      const auto& f = out.elements[fi];
      if (f.target != g.source) continue;
      const std::size_t deg = f.degree + g.degree;
      if (deg > r.top || !r.target(deg, g.target)) continue;
      auto h = r.product(gi, fi, out);
      if (!h) continue;
      auto c = out.coordinates(deg, f.source, g.target, *h);
      if (!c) throw Error("product left its graded piece");
      const auto& blk = out.block(deg, f.source, g.target);
      SparseVector sv;
      for (std::size_t m = 0; m < c->size(); ++m)
        if (!(*c)[m].is_zero()) sv.emplace_back(blk[m], (*c)[m]);
      a.set_product(gi, fi, std::move(sv));
    }
  }
  a.quiver = Quiver(a.name, r.names, {});
  out.basic = pairwise_non_isomorphic(over, out.summands);
  if (r.attach && out.basic && over.field == 0) attach_generators(a);
  return out;
}

GradedHomAlgebra psi_x(const TauTower& tower, const std::vector<std::string>& names,
                       std::optional<std::size_t> max_degree, bool attach) {
  const std::size_t n = tower.size();
  GradedHomRecipe r;
  r.over = &tower.base();
  r.names = names;
  r.d = tower.data().d;
  r.attach = attach;
  for (std::size_t k = 0; k < n; ++k) {
    if (tower.height(k) == 0) throw InputError("summands must be nonzero");
    r.summands.push_back(tower.power(k, 0));
    r.top = std::max(r.top, tower.height(k) - 1);
  }
  if (max_degree) r.top = std::min(r.top, *max_degree);
  r.target = [&tower](std::size_t deg, std::size_t l) -> const Representation* {
    return deg < tower.height(l) ? &tower.power(l, deg) : nullptr;
  };
  // tau^{-i}(g) per (g, i), computed on demand.
  std::map<std::pair<std::size_t, std::size_t>, std::optional<ModuleMorphism>> twisted;
  r.product = [&](std::size_t gi, std::size_t fi, const GradedHomAlgebra& out) -> std::optional<ModuleMorphism> {
    const auto& g = out.elements[gi];
    const auto& f = out.elements[fi];
    if (f.degree == 0) return compose(g.map, f.map);
    auto key = std::make_pair(gi, f.degree);
    auto it = twisted.find(key);
    if (it == twisted.end())
      it = twisted.emplace(key, tower.apply(f.degree, g.source, 0, g.target, g.degree, g.map)).first;
    if (!it->second) return std::nullopt;
    return compose(*it->second, f.map);
  };
  return assemble_graded_hom(r);
}

GradedHomAlgebra psi_x(const FDAlgebra& alg, const std::vector<Representation>& summands, std::size_t d,
                       const PsiOptions& opts) {
  std::vector<std::string> names = opts.names;
  for (std::size_t k = names.size(); k < summands.size(); ++k) names.push_back("X" + std::to_string(k + 1));
  if (opts.max_degree && *opts.max_degree == 0) return psi_x(TauTower(alg, summands), names, 0, opts.attach);
  TauTower tower(tau_functor_data(alg, d), summands, tau_iteration_bound(alg));
  return psi_x(tower, names, opts.max_degree, opts.attach);
}

GradedHomAlgebra pi_graded(const FDAlgebra& alg, std::size_t d) {
  std::vector<Representation> ps;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) ps.push_back(projective(alg, v));
  PsiOptions opts;
  opts.names = alg.vertices;
  auto out = psi_x(alg, ps, d, opts);
  out.algebra.name = "Pi";
  return out;
}

FDAlgebra corner_algebra(const FDAlgebra& a, const std::vector<std::size_t>& vertices) {
  std::vector<long> vmap(a.vertex_count(), -1);
  FDAlgebra c;
  c.name = a.name + "_corner";
  c.field = a.field;
  c.graded = a.graded;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (vmap.at(vertices[k]) >= 0) throw InputError("repeated vertex in corner");
    vmap[vertices[k]] = static_cast<long>(k);
    c.vertices.push_back(a.vertices[vertices[k]]);
  }
  std::vector<long> bmap(a.dim(), -1);
  std::vector<std::size_t> kept;
  for (std::size_t b = 0; b < a.dim(); ++b) {
    const auto& e = a.basis[b];
    if (vmap[e.source] < 0 || vmap[e.target] < 0) continue;
    bmap[b] = static_cast<long>(kept.size());
    kept.push_back(b);
    BasisElement ne = e;
    ne.source = static_cast<std::size_t>(vmap[e.source]);
    ne.target = static_cast<std::size_t>(vmap[e.target]);
    ne.path.reset();
    c.basis.push_back(std::move(ne));
  }
  for (auto v : vertices) c.idempotents.push_back(static_cast<std::size_t>(bmap[a.idempotents[v]]));
  c.reset_table();
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = 0; j < kept.size(); ++j) {
      SparseVector sv;
      for (const auto& [k, v] : a.product(kept[i], kept[j])) sv.emplace_back(static_cast<std::size_t>(bmap[k]), v);
      if (!sv.empty()) c.set_product(i, j, std::move(sv));
    }
  c.quiver = Quiver(c.name, c.vertices, {});
  if (c.field == 0) attach_generators(c);
  return c;
}

FDAlgebra morita_reduce(const GradedHomAlgebra& psi, const std::vector<Representation>& y) {
  const FDAlgebra& base = psi.base;
  std::vector<std::size_t> ks;
  for (const auto& z : y) {
    std::optional<std::size_t> found;
    for (std::size_t k = 0; k < psi.summands.size() && !found; ++k)
      if (psi.summands[k].dims == z.dims && is_isomorphic(base, psi.summands[k], z).isomorphic) found = k;
    if (!found) throw InputError("module is not in add X");
    if (std::find(ks.begin(), ks.end(), *found) == ks.end()) ks.push_back(*found);
  }
  std::sort(ks.begin(), ks.end());
  if (ks.size() == psi.summands.size()) return psi.algebra;
  return corner_algebra(psi.algebra, ks);
}

std::vector<Representation> SummandCatalog::modules() const {
  std::vector<Representation> out;
  for (const auto& e : entries) out.push_back(e.module);
  return out;
}

std::vector<std::string> SummandCatalog::names() const {
  std::vector<std::string> out;
  for (const auto& e : entries) out.push_back(e.name);
  return out;
}

SummandCatalog build_catalog(const TauTower& tower, const FDAlgebra& alg) {
  struct Candidate {
    std::size_t i, j;
  };
  std::vector<Candidate> cands;
  for (std::size_t j = 0; j < tower.size(); ++j)
    for (std::size_t i = 0; i < tower.height(j); ++i) cands.push_back({i, j});
  std::sort(cands.begin(), cands.end(),
            [](const Candidate& a, const Candidate& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });

  SummandCatalog cat;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> cls;  // (i, j) -> entry
  for (const auto& c : cands) {
    const auto& x = tower.power(c.j, c.i);
    std::optional<std::size_t> found;
    for (std::size_t e = 0; e < cat.entries.size() && !found; ++e)
      if (cat.entries[e].module.dims == x.dims && is_isomorphic(alg, cat.entries[e].module, x).isomorphic) found = e;
    if (found) {
      cls[{c.i, c.j}] = *found;
      continue;
    }
    CatalogEntry e;
    e.tau_power = c.i;
    e.projective = c.j;
    e.module = x;
    e.name = (c.i == 0 ? "" : "t" + std::to_string(c.i)) + "P" + alg.vertices[c.j];
    cls[{c.i, c.j}] = cat.entries.size();
    cat.entries.push_back(std::move(e));
  }
  for (std::size_t k = 0; k < cat.entries.size(); ++k) {
    auto& e = cat.entries[k];
    if (e.tau_power + 1 >= tower.height(e.projective)) {
      e.injective = true;
      continue;
    }
    const std::size_t s = cls.at({e.tau_power + 1, e.projective});
    e.successor = s;
    const auto& image = tower.power(e.projective, e.tau_power + 1);
    const auto& succ = cat.entries[s].module;
    if (succ == image) {
      e.successor_iso = identity_morphism(image);
    } else {
      auto r = is_isomorphic(alg, succ, image);
      if (!r.isomorphic) throw Error("catalog successor is not isomorphic to the computed translate");
      e.successor_iso = r.witness;
    }
    cat.entries[s].predecessors.push_back(k);
  }
  return cat;
}

AuslanderResult auslander_algebra(const FDAlgebra& alg, std::size_t d) {
  std::vector<Representation> ps;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) ps.push_back(projective(alg, v));
  TauTower tower(tau_functor_data(alg, d), ps, tau_iteration_bound(alg));
  AuslanderResult out;
  out.catalog = build_catalog(tower, alg);
  out.gamma = psi_x(TauTower(alg, out.catalog.modules()), out.catalog.names(), 0, true);
  out.gamma.algebra.name = "Gamma";
  if (!out.gamma.algebra.presentation) throw DomainError("Auslander algebra has no presentation (not basic?)");
  out.presentation = *out.gamma.algebra.presentation;
  out.presentation.quiver =
      Quiver("Gamma", out.presentation.quiver.vertices(), out.presentation.quiver.arrow_specs());
  return out;
}

}  // namespace tpa
