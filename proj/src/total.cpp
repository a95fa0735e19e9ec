#include "tpa/total.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace tpa {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

SparseVector column_entries(const Matrix& m, std::size_t c) {
  SparseVector out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m(r, c).is_zero()) out.emplace_back(r, m(r, c));
  return out;
}

Matrix vertex_projector(const std::vector<std::size_t>& vertex_of, std::size_t v) {
  Matrix p(vertex_of.size(), vertex_of.size());
  for (std::size_t k = 0; k < vertex_of.size(); ++k)
    if (vertex_of[k] == v) p(k, k) = Scalar(1);
  return p;
}

// Right action of a path traversing a1, ..., am: am acts first.
Matrix right_path_matrix(const Bimodule& b, const Path& p) {
  if (p.is_trivial()) return vertex_projector(b.right_vertex, p.start);
  Matrix m = b.right.at(p.arrows.front());
  for (std::size_t k = 1; k < p.arrows.size(); ++k) m = m * b.right.at(p.arrows[k]);
  return m;
}

// Left action of the same path: a1 acts first.
Matrix left_path_matrix(const Bimodule& b, const Path& p) {
  if (p.is_trivial()) return vertex_projector(b.left_vertex, p.start);
  Matrix m = b.left.at(p.arrows.front());
  for (std::size_t k = 1; k < p.arrows.size(); ++k) m = b.left.at(p.arrows[k]) * m;
  return m;
}

Matrix element_matrix(const Bimodule& b, const PathElement& e, bool left) {
  Matrix m(b.dim(), b.dim());
  for (const auto& [p, c] : e.terms()) m += (left ? left_path_matrix(b, p) : right_path_matrix(b, p)) * c;
  return m;
}

void add_to(Vector& acc, const Vector& v, const Scalar& c) {
  if (v.empty()) return;
  if (acc.empty()) acc.assign(v.size(), Scalar());
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) acc[k] += v[k] * c;
}

Vector unit_vector(std::size_t n, std::size_t k) {
  Vector v(n);
  v[k] = Scalar(1);
  return v;
}

}  // namespace

Bimodule bimodule_from_summands(const FDAlgebra& left_alg, const FDAlgebra& right_alg,
                                const std::vector<Representation>& summands,
                                const std::vector<ModuleMorphism>& left_maps) {
  if (summands.size() != left_alg.vertex_count()) throw InputError("one summand per vertex is required");
  const Quiver& lq = left_alg.quiver;
  const Quiver& rq = right_alg.quiver;
  if (left_maps.size() != lq.arrow_count()) throw InputError("one left map per arrow is required");
  Bimodule b;
  // offset[u][w]: first coordinate of (X_u)_w.
  std::vector<std::vector<std::size_t>> offset(summands.size());
  for (std::size_t u = 0; u < summands.size(); ++u)
    for (std::size_t w = 0; w < right_alg.vertex_count(); ++w) {
      offset[u].push_back(b.dim());
      for (std::size_t c = 0; c < summands[u].dims.at(w); ++c) {
        b.left_vertex.push_back(u);
        b.right_vertex.push_back(w);
      }
    }
  const std::size_t n = b.dim();
  for (std::size_t a = 0; a < rq.arrow_count(); ++a) {
    const auto i = rq.arrow(a).source, j = rq.arrow(a).target;
    Matrix m(n, n);
    for (std::size_t u = 0; u < summands.size(); ++u) m.set_block(offset[u][i], offset[u][j], summands[u].actions[a]);
    b.right.push_back(std::move(m));
  }
  for (std::size_t a = 0; a < lq.arrow_count(); ++a) {
    const auto i = lq.arrow(a).source, j = lq.arrow(a).target;
    Matrix m(n, n);
    for (std::size_t w = 0; w < right_alg.vertex_count(); ++w) m.set_block(offset[j][w], offset[i][w], left_maps[a].maps[w]);
    b.left.push_back(std::move(m));
  }
  return b;
}

Bimodule regular_bimodule(const FDAlgebra& a, const std::vector<Vector>& left_images,
                          const std::vector<Vector>& right_images) {
  Bimodule b;
  const std::size_t n = a.dim();
  for (const auto& e : a.basis) {
    b.left_vertex.push_back(e.target);
    b.right_vertex.push_back(e.source);
  }
  for (const auto& g : left_images) {
    Matrix m(n, n);
    for (std::size_t x = 0; x < n; ++x) {
      Vector img = a.multiply(g, a.unit(x));
      for (std::size_t r = 0; r < n; ++r) m(r, x) = img[r];
    }
    b.left.push_back(std::move(m));
  }
  for (const auto& g : right_images) {
    Matrix m(n, n);
    for (std::size_t x = 0; x < n; ++x) {
      Vector img = a.multiply(a.unit(x), g);
      for (std::size_t r = 0; r < n; ++r) m(r, x) = img[r];
    }
    b.right.push_back(std::move(m));
  }
  return b;
}

Bimodule restrict_bimodule(const Bimodule& b, const std::vector<std::size_t>& keep, bool with_left) {
  std::vector<long> pos(b.dim(), -1);
  for (std::size_t k = 0; k < keep.size(); ++k) pos.at(keep[k]) = static_cast<long>(k);
  auto cut = [&](const Matrix& m) {
    Matrix out(keep.size(), keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c)
      for (const auto& [r, v] : column_entries(m, keep[c])) {
        if (pos[r] < 0) throw InputError("basis vectors do not span a sub-bimodule");
        out(static_cast<std::size_t>(pos[r]), c) = v;
      }
    return out;
  };
  Bimodule out;
  for (auto k : keep) {
    out.left_vertex.push_back(b.left_vertex[k]);
    out.right_vertex.push_back(b.right_vertex[k]);
  }
  for (const auto& m : b.right) out.right.push_back(cut(m));
  if (with_left)
    for (const auto& m : b.left) out.left.push_back(cut(m));
  return out;
}

std::vector<Matrix> left_element_actions(const FDAlgebra& left_alg, const Bimodule& b) {
  std::vector<Matrix> out;
  for (const auto& e : left_alg.expressions()) out.push_back(element_matrix(b, e, true));
  return out;
}

std::vector<Matrix> right_element_actions(const FDAlgebra& right_alg, const Bimodule& b) {
  std::vector<Matrix> out;
  for (const auto& e : right_alg.expressions()) out.push_back(element_matrix(b, e, false));
  return out;
}

void check_bimodule(const FDAlgebra& left_alg, const FDAlgebra& right_alg, const Bimodule& b) {
  const Quiver& lq = left_alg.quiver;
  const Quiver& rq = right_alg.quiver;
  if (b.left.size() != lq.arrow_count() || b.right.size() != rq.arrow_count())
    throw InputError("bimodule has the wrong number of actions");
  // Arrows respect the vertex decomposition.
  for (std::size_t a = 0; a < rq.arrow_count(); ++a)
    for (std::size_t c = 0; c < b.dim(); ++c)
      for (const auto& [r, v] : column_entries(b.right[a], c))
        if (b.right_vertex[c] != rq.arrow(a).target || b.right_vertex[r] != rq.arrow(a).source ||
            b.left_vertex[r] != b.left_vertex[c])
          throw InputError("right action does not respect the vertices");
  for (std::size_t a = 0; a < lq.arrow_count(); ++a)
    for (std::size_t c = 0; c < b.dim(); ++c)
      for (const auto& [r, v] : column_entries(b.left[a], c))
        if (b.left_vertex[c] != lq.arrow(a).source || b.left_vertex[r] != lq.arrow(a).target ||
            b.right_vertex[r] != b.right_vertex[c])
          throw InputError("left action does not respect the vertices");
  if (right_alg.presentation)
    for (const auto& rel : right_alg.presentation->relations)
      if (!element_matrix(b, rel, false).is_zero()) throw InputError("right relation fails on the bimodule");
  if (left_alg.presentation)
    for (const auto& rel : left_alg.presentation->relations)
      if (!element_matrix(b, rel, true).is_zero()) throw InputError("left relation fails on the bimodule");
  for (const auto& l : b.left)
    for (const auto& r : b.right)
      if (l * r != r * l) throw InputError("left and right actions do not commute");
}

Vector ModuleView::lift(std::size_t w, const Vector& v, std::size_t ambient) const {
  Vector out(ambient);
  for (std::size_t k = 0; k < v.size(); ++k) out[basis[w][k]] = v[k];
  return out;
}

Vector ModuleView::restrict_to(std::size_t w, const Vector& v) const {
  Vector out(basis[w].size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    const auto& [pw, pos] = position[k];
    if (pw != w) throw Error("vector leaves the module view");
    out[pos] = v[k];
  }
  return out;
}

ModuleView right_module_view(const FDAlgebra& right_alg, const Bimodule& b, const std::vector<std::size_t>& keep) {
  ModuleView view;
  const std::size_t nv = right_alg.vertex_count();
  view.basis.assign(nv, {});
  view.position.assign(b.dim(), {npos, npos});
  for (auto k : keep) {
    const auto w = b.right_vertex[k];
    view.position[k] = {w, view.basis[w].size()};
    view.basis[w].push_back(k);
  }
  for (std::size_t w = 0; w < nv; ++w) view.module.dims.push_back(view.basis[w].size());
  const Quiver& q = right_alg.quiver;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto i = q.arrow(a).source, j = q.arrow(a).target;
    Matrix m(view.basis[i].size(), view.basis[j].size());
    for (std::size_t c = 0; c < view.basis[j].size(); ++c)
      for (const auto& [r, v] : column_entries(b.right.at(a), view.basis[j][c])) {
        const auto& [pw, pos] = view.position[r];
        if (pw != i) throw InputError("basis vectors are not closed under the right action");
        m(pos, c) = v;
      }
    view.module.actions.push_back(std::move(m));
  }
  return view;
}

const SparseVector& TensorProduct::project(std::size_t m, std::size_t n) const {
  static const SparseVector empty;
  const long c = column.at(m * right_factor_dim + n);
  return c < 0 ? empty : projection[static_cast<std::size_t>(c)];
}

Vector TensorProduct::project(const Vector& m, const Vector& n) const {
  Vector out(module.dim());
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (m[x].is_zero()) continue;
    for (std::size_t y = 0; y < n.size(); ++y) {
      if (n[y].is_zero()) continue;
      const Scalar c = m[x] * n[y];
      for (const auto& [k, v] : project(x, y)) out[k] += v * c;
    }
  }
  return out;
}

TensorProduct tensor(const std::vector<MiddleAction>& middle, const Bimodule& m, const Bimodule& n) {
  TensorProduct t;
  t.right_factor_dim = n.dim();
  t.column.assign(m.dim() * n.dim(), -1);
  std::vector<std::pair<std::size_t, std::size_t>> cols;
  for (std::size_t x = 0; x < m.dim(); ++x)
    for (std::size_t y = 0; y < n.dim(); ++y)
      if (m.right_vertex[x] == n.left_vertex[y]) {
        t.column[x * n.dim() + y] = static_cast<long>(cols.size());
        cols.emplace_back(x, y);
      }
  auto col = [&](std::size_t x, std::size_t y) {
    const long c = t.column[x * n.dim() + y];
    if (c < 0) throw Error("tensor relation leaves the matching pairs");
    return static_cast<std::size_t>(c);
  };

  SparseEchelon ech(cols.size());
  for (const auto& act : middle) {
    for (std::size_t x = 0; x < m.dim(); ++x) {
      if (m.right_vertex[x] != act.target) continue;
      auto xa = column_entries(act.on_left_factor, x);
      for (std::size_t y = 0; y < n.dim(); ++y) {
        if (n.left_vertex[y] != act.source) continue;
        std::map<std::size_t, Scalar> row;
        for (const auto& [r, v] : xa) row[col(r, y)] += v;
        for (const auto& [r, v] : column_entries(act.on_right_factor, y)) row[col(x, r)] -= v;
        SparseRow sr;
        for (const auto& [c, v] : row)
          if (!v.is_zero()) sr.emplace_back(c, v);
        if (!sr.empty()) ech.add_row(sr);
      }
    }
  }

  const auto reduced = ech.reduced();
  std::vector<long> basis_of(cols.size(), -1);
  for (std::size_t c = 0; c < cols.size(); ++c)
    if (!reduced.count(c)) {
      basis_of[c] = static_cast<long>(t.representatives.size());
      t.representatives.push_back(cols[c]);
    }
  t.projection.resize(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (basis_of[c] >= 0) {
      t.projection[c] = {{static_cast<std::size_t>(basis_of[c]), Scalar(1)}};
      continue;
    }
    SparseVector sv;
    for (const auto& [k, v] : reduced.at(c))
      if (k != c) sv.emplace_back(static_cast<std::size_t>(basis_of[k]), -v);
    t.projection[c] = std::move(sv);
  }

  Bimodule& out = t.module;
  for (const auto& [x, y] : t.representatives) {
    out.left_vertex.push_back(m.left_vertex[x]);
    out.right_vertex.push_back(n.right_vertex[y]);
  }
  const std::size_t dim = out.dim();
  for (const auto& l : m.left) {
    Matrix a(dim, dim);
    for (std::size_t b = 0; b < dim; ++b) {
      const auto [x, y] = t.representatives[b];
      for (const auto& [r, v] : column_entries(l, x))
        for (const auto& [k, w] : t.project(r, y)) a(k, b) += v * w;
    }
    out.left.push_back(std::move(a));
  }
  for (const auto& rt : n.right) {
    Matrix a(dim, dim);
    for (std::size_t b = 0; b < dim; ++b) {
      const auto [x, y] = t.representatives[b];
      for (const auto& [r, v] : column_entries(rt, y))
        for (const auto& [k, w] : t.project(x, r)) a(k, b) += v * w;
    }
    out.right.push_back(std::move(a));
  }
  return t;
}

TensorProduct tensor_over(const FDAlgebra& middle, const Bimodule& m, const Bimodule& n) {
  const Quiver& q = middle.quiver;
  if (m.right.size() != q.arrow_count() || n.left.size() != q.arrow_count())
    throw InputError("factors do not carry the middle actions");
  std::vector<MiddleAction> acts;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    acts.push_back({q.arrow(a).source, q.arrow(a).target, m.right[a], n.left[a]});
  return tensor(acts, m, n);
}

Vector TensorAlgebra::global(std::size_t i, const Vector& x) const {
  Vector out(algebra.dim());
  for (std::size_t k = 0; k < x.size(); ++k) out[offsets[i] + k] = x[k];
  return out;
}

Vector TensorAlgebra::product(std::size_t i, const Vector& x, std::size_t j, std::size_t y) const {
  if (x.empty() || i + j > top()) return {};
  if (j == 0) return right_elements[i][y] * x;
  if (i == 0) {
    Vector out(pieces[j].dim());
    for (std::size_t b = 0; b < x.size(); ++b)
      if (!x[b].is_zero()) add_to(out, left_elements[j][b].col(y), x[b]);
    return out;
  }
  if (j == 1) {
    Vector out(pieces[i + 1].dim());
    for (std::size_t c = 0; c < x.size(); ++c) {
      if (x[c].is_zero()) continue;
      for (const auto& [k, v] : steps[i - 1].project(c, y)) out[k] += x[c] * v;
    }
    return out;
  }
  const auto [y1, m] = steps[j - 2].representatives[y];
  return product(i + j - 1, product(i, x, j - 1, y1), 1, m);
}

Vector TensorAlgebra::product(std::size_t i, const Vector& x, std::size_t j, const Vector& y) const {
  Vector out;
  for (std::size_t b = 0; b < y.size(); ++b)
    if (!y[b].is_zero()) add_to(out, product(i, x, j, b), y[b]);
  return out;
}

std::vector<std::pair<Vector, Vector>> TensorAlgebra::split(std::size_t n, std::size_t b, std::size_t k) const {
  const FDAlgebra& base = m.base;
  if (k == n)
    return {{unit_vector(pieces[n].dim(), b), base.idempotent(pieces[n].right_vertex[b])}};
  if (k == 0)
    return {{base.idempotent(pieces[n].left_vertex[b]), unit_vector(pieces[n].dim(), b)}};
  const auto [b1, mm] = steps[n - 2].representatives[b];
  std::vector<std::pair<Vector, Vector>> out;
  for (auto& [y, t] : split(n - 1, b1, k)) {
    Vector t2 = product(n - 1 - k, t, 1, mm);
    if (t2.empty() || is_zero_vector(t2)) continue;
    out.emplace_back(std::move(y), std::move(t2));
  }
  return out;
}

TensorAlgebra tensor_algebra(const BimoduleData& md, std::optional<std::size_t> bound) {
  const FDAlgebra& base = md.base;
  TensorAlgebra t;
  t.m = md;
  const std::size_t limit = bound.value_or(base.dim() + md.module.dim());
  const Bimodule lam = regular_bimodule(base, base.arrow_elements, base.arrow_elements);
  t.pieces.push_back(lam);
  if (md.module.dim() > 0) t.pieces.push_back(md.module);
  while (!t.pieces.back().left_vertex.empty() && t.pieces.size() > 1) {
    if (t.pieces.size() > limit) throw BoundExceeded("not nilpotent: tensor powers survive degree " + std::to_string(limit));
    t.steps.push_back(tensor_over(base, t.pieces.back(), md.module));
    t.pieces.push_back(t.steps.back().module);
  }
  if (t.pieces.size() > 1 && t.pieces.back().dim() == 0) {
    t.pieces.pop_back();
    t.steps.pop_back();
  }
  t.m.nilpotency = t.pieces.size();

  for (const auto& p : t.pieces) {
    t.left_elements.push_back(left_element_actions(base, p));
    t.right_elements.push_back(right_element_actions(base, p));
  }

  FDAlgebra& a = t.algebra;
  a.name = "T";
  a.field = base.field;
  a.vertices = base.vertices;
  a.graded = true;
  for (std::size_t i = 0; i < t.pieces.size(); ++i) {
    t.offsets.push_back(a.basis.size());
    const auto& p = t.pieces[i];
    for (std::size_t b = 0; b < p.dim(); ++b)
      a.basis.push_back(BasisElement{"T" + std::to_string(i) + "#" + std::to_string(b), p.right_vertex[b],
                                     p.left_vertex[b], static_cast<int>(i), std::nullopt});
  }
  for (std::size_t v = 0; v < base.vertex_count(); ++v) a.idempotents.push_back(base.idempotents[v]);
  a.reset_table();
  for (std::size_t i = 0; i < t.pieces.size(); ++i)
    for (std::size_t x = 0; x < t.pieces[i].dim(); ++x)
      for (std::size_t j = 0; i + j < t.pieces.size(); ++j)
        for (std::size_t y = 0; y < t.pieces[j].dim(); ++y) {
          if (t.pieces[i].right_vertex[x] != t.pieces[j].left_vertex[y]) continue;
          Vector z = t.product(i, unit_vector(t.pieces[i].dim(), x), j, y);
          SparseVector sv;
          for (std::size_t k = 0; k < z.size(); ++k)
            if (!z[k].is_zero()) sv.emplace_back(t.offsets[i + j] + k, z[k]);
          if (!sv.empty()) a.set_product(t.offsets[i] + x, t.offsets[j] + y, std::move(sv));
        }
  a.quiver = Quiver(a.name, a.vertices, {});
  if (a.field == 0) attach_generators(a);
  return t;
}

ModuleMorphism left_multiplication(const FDAlgebra& alg, const Vector& a, std::size_t i, std::size_t j) {
  ModuleMorphism f;
  for (std::size_t w = 0; w < alg.vertex_count(); ++w) {
    const auto src = alg.basis_between(w, i);
    const auto dst = alg.basis_between(w, j);
    std::vector<long> pos(alg.dim(), -1);
    for (std::size_t k = 0; k < dst.size(); ++k) pos[dst[k]] = static_cast<long>(k);
    Matrix m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      Vector img = alg.multiply(a, alg.unit(src[c]));
      for (std::size_t k = 0; k < img.size(); ++k) {
        if (img[k].is_zero()) continue;
        if (pos[k] < 0) throw InputError("element does not map P_i to P_j");
        m(static_cast<std::size_t>(pos[k]), c) = img[k];
      }
    }
    f.maps.push_back(std::move(m));
  }
  return f;
}

BimoduleData tau_bimodule(const FDAlgebra& alg, std::size_t d) {
  auto td = tau_functor_data(alg, d);
  std::vector<Representation> ps, xs;
  std::vector<TauContext> ctx;
  for (std::size_t u = 0; u < alg.vertex_count(); ++u) {
    ps.push_back(projective(alg, u));
    ctx.push_back(tau_context(td, ps.back()));
    xs.push_back(tau_minus(td, ps.back(), ctx.back()));
  }
  const Quiver& q = alg.quiver;
  std::vector<ModuleMorphism> left;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto i = q.arrow(a).source, j = q.arrow(a).target;
    auto l = left_multiplication(alg, alg.arrow_elements[a], i, j);
    left.push_back(tau_minus_morphism(td, ctx[i], ctx[j], l));
  }
  BimoduleData out;
  out.base = alg;
  out.module = bimodule_from_summands(alg, alg, xs, left);
  return out;
}

TensorAlgebra pi_tensor(const FDAlgebra& alg, std::size_t d) {
  auto t = tensor_algebra(tau_bimodule(alg, d));
  t.algebra.name = "Pi";
  return t;
}

ExtendedTensorAlgebra extended_tensor_algebra(const TensorAlgebra& t) {
  const FDAlgebra& base = t.m.base;
  const std::size_t nv = base.vertex_count();
  ExtendedTensorAlgebra out;
  out.views.resize(t.pieces.size());
  for (std::size_t n = 0; n < t.pieces.size(); ++n)
    for (std::size_t w = 0; w < nv; ++w) {
      std::vector<std::size_t> keep;
      for (std::size_t b = 0; b < t.pieces[n].dim(); ++b)
        if (t.pieces[n].left_vertex[b] == w) keep.push_back(b);
      if (keep.empty()) {
        out.views[n].emplace_back();
        continue;
      }
      out.views[n].emplace_back(right_module_view(base, t.pieces[n], keep));
    }

  GradedHomRecipe r;
  r.over = &base;
  r.d = 1;
  r.name = "U";
  r.top = t.top();
  std::vector<std::vector<long>> vertex_of(t.pieces.size(), std::vector<long>(nv, -1));
  for (std::size_t j = 0; j < t.pieces.size(); ++j)
    for (std::size_t v = 0; v < nv; ++v) {
      if (!out.views[j][v]) continue;
      vertex_of[j][v] = static_cast<long>(out.keys.size());
      out.keys.emplace_back(v, j);
      r.summands.push_back(out.views[j][v]->module);
      r.names.push_back(base.vertices[v] + "_T" + std::to_string(j));
    }
  const auto& keys = out.keys;
  const auto& views = out.views;
  r.target = [&](std::size_t deg, std::size_t l) -> const Representation* {
    const auto [w, k] = keys[l];
    if (k + deg >= views.size() || !views[k + deg][w]) return nullptr;
    return &views[k + deg][w]->module;
  };

  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<std::pair<Vector, Vector>>> split_cache;
  auto split = [&](std::size_t n, std::size_t b, std::size_t k) -> const std::vector<std::pair<Vector, Vector>>& {
    auto key = std::make_tuple(n, b, k);
    auto it = split_cache.find(key);
    if (it == split_cache.end()) it = split_cache.emplace(key, t.split(n, b, k)).first;
    return it->second;
  };

  r.product = [&](std::size_t gi, std::size_t fi, const GradedHomAlgebra& u) -> std::optional<ModuleMorphism> {
    const auto& g = u.elements[gi];
    const auto& f = u.elements[fi];
    const auto [v, j] = keys[f.source];
    const auto [w, k] = keys[f.target];
    const auto [uu, l] = keys[g.target];
    const std::size_t i = f.degree, i2 = g.degree;
    const std::size_t out_deg = l + i2 + i;
    if (out_deg > t.top() || !views[out_deg][uu]) return std::nullopt;
    const ModuleView& src = *views[j][v];
    const ModuleView& mid = *views[k + i][w];
    const ModuleView& gsrc = *views[k][w];
    const ModuleView& gdst = *views[l + i2][uu];
    const ModuleView& dst = *views[out_deg][uu];
    ModuleMorphism h;
    for (std::size_t r0 = 0; r0 < nv; ++r0) {
      Matrix m(dst.basis[r0].size(), src.basis[r0].size());
      for (std::size_t c = 0; c < src.basis[r0].size(); ++c) {
        Vector z = mid.lift(r0, f.map.maps[r0].col(c), t.pieces[k + i].dim());
        Vector acc(t.pieces[out_deg].dim());
        for (std::size_t b = 0; b < z.size(); ++b) {
          if (z[b].is_zero()) continue;
          for (const auto& [y, tt] : split(k + i, b, k)) {
            // g(y) with y in e_w T_k, then (g(y)) (x) t.
            Vector gy(t.pieces[l + i2].dim());
            for (std::size_t e = 0; e < y.size(); ++e) {
              if (y[e].is_zero()) continue;
              const auto [rw, pos] = gsrc.position[e];
              add_to(gy, gdst.lift(rw, g.map.maps[rw].col(pos), gy.size()), y[e]);
            }
            add_to(acc, t.product(l + i2, gy, i, tt), z[b]);
          }
        }
        Vector res = dst.restrict_to(r0, acc);
        for (std::size_t q = 0; q < res.size(); ++q) m(q, c) = res[q];
      }
      h.maps.push_back(std::move(m));
    }
    return h;
  };
  out.u = assemble_graded_hom(r);
  return out;
}

ExtendedTensorAlgebra extended_tensor_algebra(const BimoduleData& m) {
  // The views inside the result refer only to data copied into it.
  return extended_tensor_algebra(tensor_algebra(m));
}

PiWithBase pi_with_base(const GradedHomAlgebra& pg) {
  PiWithBase out;
  out.pi = pg.algebra;
  out.base = pg.base;
  const Quiver& q = pg.base.quiver;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto i = q.arrow(a).source, j = q.arrow(a).target;
    auto l = left_multiplication(pg.base, pg.base.arrow_elements[a], i, j);
    auto c = pg.coordinates(0, i, j, l);
    if (!c) throw InputError("Pi does not contain the arrows of its base");
    Vector v = pg.algebra.zero();
    const auto& blk = pg.block(0, i, j);
    for (std::size_t k = 0; k < c->size(); ++k) v[blk[k]] = (*c)[k];
    out.base_arrows.push_back(std::move(v));
  }
  return out;
}

PiWithBase pi_with_base(const TensorAlgebra& t) {
  PiWithBase out;
  out.pi = t.algebra;
  out.base = t.m.base;
  for (const auto& a : t.m.base.arrow_elements) out.base_arrows.push_back(t.global(0, a));
  return out;
}

PiTensorPiEnd end_of_pi_tensor_pi(const PiWithBase& p) {
  const FDAlgebra& pi = p.pi;
  const FDAlgebra& base = p.base;
  if (pi.quiver.arrow_count() == 0 && pi.dim() > pi.vertex_count())
    throw InputError("Pi needs generators for its module category");
  PiTensorPiEnd out;
  const Bimodule left_pi = regular_bimodule(pi, {}, p.base_arrows);           // (-, Lambda)
  const Bimodule right_pi = regular_bimodule(pi, p.base_arrows, pi.arrow_elements);  // (Lambda, Pi)
  int top = 0;
  for (const auto& b : pi.basis) top = std::max(top, b.degree);

  GradedHomRecipe r;
  r.over = &pi;
  r.d = 1;
  r.name = "EndPiPi";
  for (int i = 0; i <= top; ++i)
    for (std::size_t v = 0; v < pi.vertex_count(); ++v) {
      std::vector<std::size_t> keep;
      for (std::size_t b = 0; b < pi.dim(); ++b)
        if (pi.basis[b].degree == i && pi.basis[b].target == v) keep.push_back(b);
      if (keep.empty()) continue;
      auto factor = restrict_bimodule(left_pi, keep, false);
      auto tp = tensor_over(base, factor, right_pi);
      if (tp.module.dim() == 0) continue;
      std::vector<std::size_t> all(tp.module.dim());
      for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
      auto view = right_module_view(pi, tp.module, all);
      std::vector<int> grade;
      for (const auto& [x, y] : tp.representatives) grade.push_back(pi.basis[y].degree);
      out.keys.emplace_back(v, static_cast<std::size_t>(i));
      out.first_factor.push_back(std::move(keep));
      r.summands.push_back(view.module);
      r.names.push_back(pi.vertices[v] + "_" + std::to_string(i));
      out.products.push_back(std::move(tp));
      out.views.push_back(std::move(view));
      out.grades.push_back(std::move(grade));
    }
  const std::size_t n = r.summands.size();
  auto masked = [&](long deg, std::size_t k, std::size_t l) {
    const auto& sv = out.views[k];
    const auto& tv = out.views[l];
    const auto& sg = out.grades[k];
    const auto& tg = out.grades[l];
    return hom_basis(pi, r.summands[k], r.summands[l], [&](std::size_t w, std::size_t row, std::size_t c) {
      return tg[tv.basis[w][row]] == sg[sv.basis[w][c]] + deg;
    });
  };
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      out.ungraded_dim += hom_basis(pi, r.summands[k], r.summands[l]).size();
      for (long deg = -top; deg < 0; ++deg)
        if (!masked(deg, k, l).empty()) out.negative_degrees_vanish = false;
    }
  r.top = static_cast<std::size_t>(top);
  r.target = [&](std::size_t, std::size_t l) -> const Representation* { return &r.summands[l]; };
  r.piece = [&](std::size_t deg, std::size_t k, std::size_t l) { return masked(static_cast<long>(deg), k, l); };
  r.product = [](std::size_t gi, std::size_t fi, const GradedHomAlgebra& e) -> std::optional<ModuleMorphism> {
    return compose(e.elements[gi].map, e.elements[fi].map);
  };
  out.end = assemble_graded_hom(r);
  return out;
}

TensorDegreeReport u_is_tensor_of_degree_one(const GradedHomAlgebra& ug) {
  const FDAlgebra& u = ug.algebra;
  TensorDegreeReport rep;
  rep.dims = u.graded_dims();
  const std::size_t top = rep.dims.size() - 1;
  std::vector<std::vector<std::size_t>> idx(top + 2);
  for (std::size_t b = 0; b < u.dim(); ++b) idx[static_cast<std::size_t>(u.basis[b].degree)].push_back(b);
  auto piece = [&](std::size_t i) {
    Bimodule p;
    for (auto b : idx[i]) {
      p.left_vertex.push_back(u.basis[b].target);
      p.right_vertex.push_back(u.basis[b].source);
    }
    return p;
  };
  // Matrix of z -> (product) restricted to degree i coordinates.
  auto restricted = [&](std::size_t i, const Vector& z) {
    std::vector<long> pos(u.dim(), -1);
    for (std::size_t k = 0; k < idx[i].size(); ++k) pos[idx[i][k]] = static_cast<long>(k);
    Vector out(idx[i].size());
    for (std::size_t k = 0; k < z.size(); ++k)
      if (!z[k].is_zero()) {
        if (pos[k] < 0) throw Error("product left its degree");
        out[static_cast<std::size_t>(pos[k])] = z[k];
      }
    return out;
  };
  if (top == 0) return rep;
  const Bimodule u1 = piece(1);
  for (std::size_t i = 1; i <= top; ++i) {
    const Bimodule ui = piece(i);
    std::vector<MiddleAction> acts;
    for (auto b : idx[0]) {
      MiddleAction act;
      act.source = u.basis[b].source;
      act.target = u.basis[b].target;
      act.on_left_factor = Matrix(u1.dim(), u1.dim());
      for (std::size_t x = 0; x < u1.dim(); ++x) {
        Vector img = restricted(1, u.multiply(u.unit(idx[1][x]), u.unit(b)));
        for (std::size_t k = 0; k < img.size(); ++k) act.on_left_factor(k, x) = img[k];
      }
      act.on_right_factor = Matrix(ui.dim(), ui.dim());
      for (std::size_t y = 0; y < ui.dim(); ++y) {
        Vector img = restricted(i, u.multiply(u.unit(b), u.unit(idx[i][y])));
        for (std::size_t k = 0; k < img.size(); ++k) act.on_right_factor(k, y) = img[k];
      }
      acts.push_back(std::move(act));
    }
    auto tp = tensor(acts, u1, ui);
    TensorDegreeStep step;
    step.degree = i;
    step.tensor_dim = tp.module.dim();
    step.target_dim = idx[i + 1].size();
    std::vector<Vector> images;
    for (const auto& [x, y] : tp.representatives)
      images.push_back(restricted(i + 1, u.multiply(u.unit(idx[1][x]), u.unit(idx[i][y]))));
    step.rank = images.empty() || step.target_dim == 0 ? 0 : rank(Matrix::from_columns(images, step.target_dim));
    if (!step.bijective()) rep.ok = false;
    rep.steps.push_back(step);
  }
  return rep;
}

AlphaReport check_alpha(const TensorAlgebra& t, const ExtendedTensorAlgebra& ue, const PiTensorPiEnd& e) {
  const GradedHomAlgebra& u = ue.u;
  const FDAlgebra& T = t.algebra;
  AlphaReport rep;
  if (ue.keys != e.keys) return rep;
  // alpha(f) for each basis element f of U, as coordinates in e.end.
  std::vector<Vector> images;
  for (const auto& f : u.elements) {
    const auto [v, j] = ue.keys[f.source];
    const auto [w, k] = ue.keys[f.target];
    const ModuleView& src = *ue.views[j][v];
    const ModuleView& mid = *ue.views[k + f.degree][w];
    const auto& stp = e.products[f.source];
    const auto& ttp = e.products[f.target];
    const auto& tkeep = e.first_factor[f.target];
    std::vector<long> tpos(T.dim(), -1);
    for (std::size_t q = 0; q < tkeep.size(); ++q) tpos[tkeep[q]] = static_cast<long>(q);
    // Columns: basis of e_v T_j (x) T; images in e_w T_k (x) T.
    Matrix total(ttp.module.dim(), stp.module.dim());
    for (std::size_t c = 0; c < stp.module.dim(); ++c) {
      const auto [xpos, y] = stp.representatives[c];
      const std::size_t x_global = e.first_factor[f.source][xpos];
      const std::size_t x_local = x_global - t.offsets[j];
      const auto [rw, pos] = src.position[x_local];
      Vector fx = mid.lift(rw, f.map.maps[rw].col(pos), t.pieces[k + f.degree].dim());
      Vector acc(ttp.module.dim());
      for (std::size_t b = 0; b < fx.size(); ++b) {
        if (fx[b].is_zero()) continue;
        for (const auto& [x2, tt] : t.split(k + f.degree, b, k)) {
          Vector ty = T.multiply(t.global(f.degree, tt), T.unit(y));
          Vector xl(tkeep.size());
          for (std::size_t q = 0; q < x2.size(); ++q)
            if (!x2[q].is_zero()) xl[static_cast<std::size_t>(tpos[t.offsets[k] + q])] = x2[q];
          add_to(acc, ttp.project(xl, ty), fx[b]);
        }
      }
      for (std::size_t q = 0; q < acc.size(); ++q) total(q, c) = acc[q];
    }
    const ModuleView& sv = e.views[f.source];
    const ModuleView& tv = e.views[f.target];
    ModuleMorphism h;
    for (std::size_t w = 0; w < sv.basis.size(); ++w) {
      Matrix m(tv.basis[w].size(), sv.basis[w].size());
      for (std::size_t c = 0; c < sv.basis[w].size(); ++c)
        for (std::size_t q = 0; q < tv.basis[w].size(); ++q) m(q, c) = total(tv.basis[w][q], sv.basis[w][c]);
      h.maps.push_back(std::move(m));
    }
    auto coords = e.end.coordinates(f.degree, f.source, f.target, h);
    if (!coords) return rep;
    Vector g = e.end.algebra.zero();
    const auto& blk = e.end.block(f.degree, f.source, f.target);
    for (std::size_t q = 0; q < coords->size(); ++q) g[blk[q]] = (*coords)[q];
    images.push_back(std::move(g));
  }
  rep.bijective = images.size() == e.end.algebra.dim() &&
                  (images.empty() || rank(Matrix::from_columns(images, e.end.algebra.dim())) == images.size());
  if (!rep.bijective) return rep;
  // alpha(g.f) = alpha(g) o alpha(f) on all basis pairs.
  const FDAlgebra& ua = u.algebra;
  const FDAlgebra& ea = e.end.algebra;
  rep.multiplicative = true;
  for (std::size_t gi = 0; gi < ua.dim(); ++gi)
    for (std::size_t fi = 0; fi < ua.dim(); ++fi) {
      Vector lhs(ea.dim());
      const Vector gf = ua.multiply(ua.unit(gi), ua.unit(fi));
      for (std::size_t q = 0; q < gf.size(); ++q)
        if (!gf[q].is_zero()) add_to(lhs, images[q], gf[q]);
      Vector rhs = ea.multiply(images[gi], images[fi]);
      ++rep.products_checked;
      if (lhs != rhs) {
        rep.multiplicative = false;
        return rep;
      }
    }
  return rep;
}

std::size_t pi_tensor_pi_self_ext(const PiWithBase& pi, const PiTensorPiEnd& e, std::size_t degree) {
  std::size_t total = 0;
  for (const auto& x : e.end.summands)
    for (const auto& y : e.end.summands) total += ext_space(pi.pi, degree, x, y).dim;
  return total;
}

// ---------------------------------------------------------------------------
// Presentations through phi

namespace {

PathElement remap_element(const Quiver& from, const Quiver& to, const PathElement& x) {
  PathElement out;
  for (const auto& [p, c] : x.terms()) {
    Path r{p.start, {}};
    for (auto a : p.arrows) r.arrows.push_back(to.arrow_index(from.arrow(a).name));
    out.add_term(r, c);
  }
  return out;
}

PathElement apply_phi(const PhiData& phi, const PathElement& x) {
  const Quiver& q = phi.presentation.quiver;
  PathElement out;
  for (const auto& [p, c] : x.terms()) {
    const auto& v = phi.vertex_map.at(p.start);
    if (!v) continue;
    PathElement img = PathElement::of_path(Path::trivial(*v), c);
    for (auto a : p.arrows) {
      img = compose(q, img, phi.arrow_images.at(a));
      if (img.is_zero()) break;
    }
    out += img;
  }
  return out;
}

ModuleMorphism element_morphism(const GradedHomAlgebra& g, const Vector& x, std::size_t source, std::size_t target) {
  ModuleMorphism out = zero_morphism(g.summands.at(source), g.summands.at(target));
  for (std::size_t b = 0; b < x.size(); ++b) {
    if (x[b].is_zero()) continue;
    const auto& e = g.elements[b];
    if (e.degree != 0 || e.source != source || e.target != target)
      throw Error("element is not a degree-0 morphism between the given summands");
    out = out + x[b] * e.map;
  }
  return out;
}

Vector embed_block(const GradedHomAlgebra& g, std::size_t degree, std::size_t source, std::size_t target,
                   const ModuleMorphism& f) {
  auto c = g.coordinates(degree, source, target, f);
  if (!c) throw Error("morphism lies outside the expected graded piece");
  Vector out = g.algebra.zero();
  const auto& idx = g.block(degree, source, target);
  for (std::size_t i = 0; i < idx.size(); ++i) out[idx[i]] = (*c)[i];
  return out;
}

}  // namespace

std::vector<std::size_t> PhiData::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vertex_map.size(); ++i)
    if (vertex_map[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> PhiData::f_vertices() const {
  std::vector<std::size_t> out;
  for (const auto& v : vertex_map)
    if (v) out.push_back(*v);
  std::sort(out.begin(), out.end());
  return out;
}

std::string q_arrow_name(const Quiver& q, std::size_t i) { return "q_" + q.vertex(i); }

void validate_phi(const PhiData& phi) {
  const Quiver& q = phi.presentation.quiver;
  if (phi.vertex_map.size() != q.vertex_count()) throw InputError("phi: one vertex image per vertex expected");
  if (phi.arrow_images.size() != q.arrow_count()) throw InputError("phi: one arrow image per arrow expected");
  std::vector<bool> hit(q.vertex_count(), false);
  for (const auto& v : phi.vertex_map) {
    if (!v) continue;
    if (*v >= q.vertex_count()) throw InputError("phi: vertex image out of range");
    if (hit[*v]) throw DomainError("phi is not injective on its support");
    hit[*v] = true;
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    const auto& img = phi.arrow_images[a];
    const auto& s = phi.vertex_map[arr.source];
    const auto& t = phi.vertex_map[arr.target];
    if (!s || !t) {
      if (!img.is_zero()) throw DomainError("phi: arrow " + arr.name + " leaves the support but has an image");
      continue;
    }
    for (const auto& [p, c] : img.terms())
      if (p.source() != *s || p.target(q) != *t)
        throw DomainError("phi: image of " + arr.name + " has wrong endpoints");
  }
  auto gb = groebner_complete(phi.presentation);
  for (const auto& r : phi.presentation.relations) {
    auto nf = gb.normal_form(apply_phi(phi, r));
    if (!nf.is_zero()) throw DomainError("phi does not preserve the relation " + render_element(q, r));
  }
}

AlgebraPresentation tensor_presentation_via_phi(const PhiData& phi) {
  validate_phi(phi);
  const Quiver& q = phi.presentation.quiver;
  auto specs = q.arrow_specs();
  for (auto i : phi.support()) {
    const std::string name = q_arrow_name(q, i);
    if (q.find_arrow(name)) throw InputError("arrow name " + name + " is already taken");
    specs.push_back({name, q.vertex(*phi.vertex_map[i]), q.vertex(i)});
  }
  AlgebraPresentation out;
  out.quiver = Quiver(q.name(), q.vertices(), specs);
  const Quiver& nq = out.quiver;
  for (const auto& r : phi.presentation.relations) out.relations.push_back(remap_element(q, nq, r));
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    if (!phi.vertex_map[arr.source]) continue;
    const auto qi = Path::of_arrow(nq, nq.arrow_index(q_arrow_name(q, arr.source)));
    const auto an = Path::of_arrow(nq, nq.arrow_index(arr.name));
    // a q_i, then minus q_j phi(a) when j is in S.
    PathElement r = PathElement::of_path(concat(nq, qi, an));
    if (phi.vertex_map[arr.target]) {
      const auto qj = PathElement::of_path(Path::of_arrow(nq, nq.arrow_index(q_arrow_name(q, arr.target))));
      r -= compose(nq, remap_element(q, nq, phi.arrow_images[a]), qj);
    }
    if (!r.is_zero()) out.relations.push_back(r);
  }
  return out;
}

TotalPresentation total_presentation(const FDAlgebra& alg, std::size_t d) {
  TotalPresentation out;
  out.auslander = auslander_algebra(alg, d);
  const auto& cat = out.auslander.catalog;
  const auto& gamma = out.auslander.gamma;
  const auto& pres = out.auslander.presentation;
  const Quiver& q = pres.quiver;
  const auto td = tau_functor_data(alg, d);

  std::vector<Representation> translates(cat.entries.size());
  for (std::size_t k = 0; k < cat.entries.size(); ++k) {
    const auto& e = cat.entries[k];
    translates[k] = tau_minus(td, e.module);
    if (e.injective != translates[k].is_zero()) throw Error("catalog disagrees with tau^- on " + e.name);
    if (e.successor && !is_morphism(alg, cat.entries[*e.successor].module, translates[k], *e.successor_iso))
      throw Error("successor identification does not target tau^- of " + e.name);
  }

  PhiData& phi = out.phi;
  phi.presentation = pres;
  for (const auto& e : cat.entries) phi.vertex_map.push_back(e.successor);
  auto gb = groebner_complete(pres);
  const auto& expr = gamma.algebra.expressions();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    const auto& x = cat.entries[arr.source];
    const auto& y = cat.entries[arr.target];
    if (!x.successor || !y.successor) {
      phi.arrow_images.emplace_back();
      continue;
    }
    const auto f = element_morphism(gamma, gamma.algebra.arrow_elements.at(a), arr.source, arr.target);
    const auto tf = tau_minus_morphism(td, x.module, y.module, f);
    const auto back = inverse(*y.successor_iso);
    if (!back) throw Error("successor identification is not invertible");
    const auto g = compose(*back, compose(tf, *x.successor_iso));
    const Vector coords = embed_block(gamma, 0, *x.successor, *y.successor, g);
    PathElement img;
    for (std::size_t b = 0; b < coords.size(); ++b)
      if (!coords[b].is_zero()) img += expr[b] * coords[b];
    phi.arrow_images.push_back(gb.normal_form(img));
  }
  out.presentation = tensor_presentation_via_phi(phi);
  out.presentation.quiver = Quiver("Psi", out.presentation.quiver.vertices(), out.presentation.quiver.arrow_specs());
  return out;
}

GradedHomAlgebra total_psi(const FDAlgebra& alg, std::size_t d, const SummandCatalog& catalog) {
  TauTower tower(tau_functor_data(alg, d), catalog.modules(), tau_iteration_bound(alg));
  auto psi = psi_x(tower, catalog.names(), std::nullopt, false);
  psi.algebra.name = "Psi";
  return psi;
}

SurjectionReport verify_iso_via_surjection(const AlgebraPresentation& pres, const GradedHomAlgebra& psi,
                                           const std::vector<Vector>& arrow_images,
                                           const std::map<std::string, int>& arrow_degrees) {
  const FDAlgebra& a = psi.algebra;
  if (pres.quiver.vertex_count() != a.vertex_count()) throw InputError("vertex counts differ");
  if (arrow_images.size() != pres.quiver.arrow_count()) throw InputError("one image per arrow expected");
  SurjectionReport rep;
  for (const auto& r : pres.relations) {
    const Vector img = evaluate(a, arrow_images, r);
    const auto norm = static_cast<std::size_t>(std::count_if(img.begin(), img.end(), [](const Scalar& c) { return !c.is_zero(); }));
    rep.relation_image_norms.push_back(norm);
    if (norm) rep.failed_relations.push_back(render_element(pres.quiver, r));
  }

  EchelonSpan span(a.dim());
  std::vector<Vector> queue;
  for (std::size_t v = 0; v < a.vertex_count(); ++v)
    if (span.add(a.idempotent(v))) queue.push_back(a.idempotent(v));
  for (std::size_t k = 0; k < queue.size() && span.dim() < a.dim(); ++k)
    for (const auto& img : arrow_images) {
      Vector next = a.multiply(img, queue[k]);
      if (span.add(next)) queue.push_back(std::move(next));
    }
  rep.surjective = span.dim() == a.dim();

  QuotientOptions opts;
  opts.arrow_degrees = arrow_degrees;
  const auto quotient = quotient_algebra(pres, opts);
  rep.quotient_dim = quotient.dim();
  rep.psi_dim = a.dim();
  rep.quotient_graded = quotient.graded_dims();
  rep.psi_graded = psi.graded_dims();
  return rep;
}

std::vector<Vector> total_arrow_images(const TotalPresentation& tp, const GradedHomAlgebra& psi) {
  const auto& gamma = tp.auslander.gamma;
  const Quiver& gq = tp.auslander.presentation.quiver;
  const Quiver& q = tp.presentation.quiver;
  std::vector<std::optional<std::size_t>> q_vertex(q.arrow_count());
  for (auto i : tp.phi.support()) q_vertex[q.arrow_index(q_arrow_name(gq, i))] = i;
  std::vector<Vector> out;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    if (q_vertex[a]) {
      const auto& e = tp.auslander.catalog.entries[*q_vertex[a]];
      out.push_back(embed_block(psi, 1, *e.successor, *q_vertex[a], *e.successor_iso));
      continue;
    }
    const auto f = element_morphism(gamma, gamma.algebra.arrow_elements.at(gq.arrow_index(arr.name)), arr.source,
                                    arr.target);
    out.push_back(embed_block(psi, 0, arr.source, arr.target, f));
  }
  return out;
}

SurjectionReport verify_iso_via_surjection(const TotalPresentation& tp, const GradedHomAlgebra& psi) {
  std::map<std::string, int> degrees;
  const Quiver& gq = tp.auslander.presentation.quiver;
  for (const auto& arr : tp.presentation.quiver.arrows()) degrees[arr.name] = gq.find_arrow(arr.name) ? 0 : 1;
  return verify_iso_via_surjection(tp.presentation, psi, total_arrow_images(tp, psi), degrees);
}

// ---------------------------------------------------------------------------
// Comparison with a reference presentation

namespace {

struct RelationGroup {
  std::vector<Path> columns;
  RowReduction rr;
};

using GroupKey = std::pair<std::size_t, std::size_t>;

// Relations (already in golden indexing) grouped by endpoints, each group
// row-reduced over the union of the paths occurring in either side.
std::map<GroupKey, std::vector<PathElement>> group_relations(const Quiver& q, const std::vector<PathElement>& rels) {
  std::map<GroupKey, std::vector<PathElement>> out;
  for (const auto& r : rels) {
    if (r.is_zero()) continue;
    const auto& p = r.terms().begin()->first;
    out[{p.source(), p.target(q)}].push_back(r);
  }
  return out;
}

RowReduction reduce_group(const std::vector<Path>& columns, const std::vector<PathElement>& rels) {
  std::map<Path, std::size_t> col;
  for (std::size_t i = 0; i < columns.size(); ++i) col[columns[i]] = i;
  Matrix m(rels.size(), columns.size());
  for (std::size_t r = 0; r < rels.size(); ++r)
    for (const auto& [p, c] : rels[r].terms()) m(r, col.at(p)) = c;
  return row_reduce(m);
}

std::vector<std::size_t> row_support(const Matrix& m, std::size_t r) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!m(r, c).is_zero()) out.push_back(c);
  return out;
}

// Splits |v| into prime powers; factors above the trial bound stay whole.
void factor_into(mpz_class v, std::map<mpz_class, long>& out, long sign) {
  if (v < 0) v = -v;
  for (mpz_class p = 2; p * p <= v && p < 100000; ++p)
    while (v % p == 0) {
      out[p] += sign;
      v /= p;
    }
  if (v > 1) out[v] += sign;
}

}  // namespace

PresentationMatch compare_presentations(const AlgebraPresentation& ours, const AlgebraPresentation& golden,
                                        const std::vector<std::size_t>& vertex_map) {
  PresentationMatch m;
  const Quiver& oq = ours.quiver;
  const Quiver& gq = golden.quiver;
  const std::size_t n = oq.vertex_count();
  if (vertex_map.size() != n || gq.vertex_count() != n) {
    m.detail = "vertex counts differ";
    return m;
  }
  {
    auto sorted = vertex_map;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i)
      if (sorted[i] != i) {
        m.detail = "vertex map is not a bijection";
        return m;
      }
  }
  if (oq.arrow_count() != gq.arrow_count()) {
    m.detail = "arrow counts differ";
    return m;
  }
  // Arrows by endpoints; parallel arrows pair up in name order.
  std::map<GroupKey, std::vector<std::size_t>> golden_arrows;
  for (std::size_t a = 0; a < gq.arrow_count(); ++a) golden_arrows[{gq.arrow(a).source, gq.arrow(a).target}].push_back(a);
  std::map<GroupKey, std::size_t> used;
  m.arrow_map.resize(oq.arrow_count());
  for (std::size_t a = 0; a < oq.arrow_count(); ++a) {
    GroupKey key{vertex_map[oq.arrow(a).source], vertex_map[oq.arrow(a).target]};
    auto it = golden_arrows.find(key);
    if (it == golden_arrows.end() || used[key] >= it->second.size()) {
      m.detail = "no partner for arrow " + oq.arrow(a).name;
      return m;
    }
    m.arrow_map[a] = it->second[used[key]++];
  }
  m.quiver_match = true;

  auto translate = [&](const PathElement& x, const std::vector<Scalar>* scale) {
    PathElement out;
    for (const auto& [p, c] : x.terms()) {
      Path r{vertex_map[p.start], {}};
      Scalar k = c;
      for (auto a : p.arrows) {
        r.arrows.push_back(m.arrow_map[a]);
        if (scale) k *= (*scale)[a];
      }
      out.add_term(r, k);
    }
    return out;
  };
  std::vector<PathElement> mine;
  for (const auto& r : ours.relations) mine.push_back(translate(r, nullptr));
  auto og = group_relations(gq, mine);
  auto gg = group_relations(gq, golden.relations);
  if (og.size() != gg.size()) {
    m.detail = "relations sit at different vertex pairs";
    return m;
  }

  // Equations t^(p - p0) = g_p / o_p, one per off-pivot entry.
  struct Equation {
    std::vector<long> exponents;
    mpq_class value;
  };
  std::vector<Equation> eqs;
  std::map<GroupKey, std::vector<Path>> columns;
  for (const auto& [key, rels] : gg) {
    auto it = og.find(key);
    if (it == og.end()) {
      m.detail = "no relations of ours at a golden vertex pair";
      return m;
    }
    std::set<Path> cols;
    for (const auto& r : rels)
      for (const auto& t : r.terms()) cols.insert(t.first);
    for (const auto& r : it->second)
      for (const auto& t : r.terms()) cols.insert(t.first);
    auto& c = columns[key];
    c.assign(cols.begin(), cols.end());
    auto rg = reduce_group(c, rels);
    auto ro = reduce_group(c, it->second);
    if (rg.rank != ro.rank || rg.pivot_columns != ro.pivot_columns) {
      m.detail = "relation spaces differ in shape between " + gq.vertex(key.first) + " and " + gq.vertex(key.second);
      return m;
    }
    for (std::size_t r = 0; r < rg.rank; ++r) {
      if (row_support(rg.rref, r) != row_support(ro.rref, r)) {
        m.detail = "relation supports differ between " + gq.vertex(key.first) + " and " + gq.vertex(key.second);
        return m;
      }
      const Path& p0 = c[rg.pivot_columns[r]];
      for (auto col : row_support(rg.rref, r)) {
        if (col == rg.pivot_columns[r]) continue;
        Equation e;
        e.exponents.assign(oq.arrow_count(), 0);
        // Golden arrow indices back to ours.
        for (auto ga : c[col].arrows)
          for (std::size_t a = 0; a < oq.arrow_count(); ++a)
            if (m.arrow_map[a] == ga) ++e.exponents[a];
        for (auto ga : p0.arrows)
          for (std::size_t a = 0; a < oq.arrow_count(); ++a)
            if (m.arrow_map[a] == ga) --e.exponents[a];
        e.value = rg.rref(r, col).to_rational() / ro.rref(r, col).to_rational();
        eqs.push_back(std::move(e));
      }
    }
  }

  const std::size_t na = oq.arrow_count();
  std::vector<mpq_class> magnitude(na, 1);
  std::vector<bool> negative(na, false);
  if (!eqs.empty()) {
    Matrix ex(eqs.size(), na);
    for (std::size_t r = 0; r < eqs.size(); ++r)
      for (std::size_t a = 0; a < na; ++a) ex(r, a) = Scalar(eqs[r].exponents[a]);
    std::vector<std::map<mpz_class, long>> factors(eqs.size());
    std::set<mpz_class> primes;
    for (std::size_t r = 0; r < eqs.size(); ++r) {
      factor_into(eqs[r].value.get_num(), factors[r], 1);
      factor_into(eqs[r].value.get_den(), factors[r], -1);
      for (const auto& f : factors[r]) primes.insert(f.first);
    }
    for (const auto& p : primes) {
      Vector rhs(eqs.size());
      for (std::size_t r = 0; r < eqs.size(); ++r) {
        auto it = factors[r].find(p);
        rhs[r] = Scalar(it == factors[r].end() ? 0L : it->second);
      }
      auto sol = solve_linear(ex, rhs);
      if (!sol.consistent) {
        m.detail = "no arrow rescaling matches (prime " + p.get_str() + ")";
        return m;
      }
      for (std::size_t a = 0; a < na; ++a) {
        const mpq_class e = sol.particular[a].to_rational();
        if (e.get_den() != 1) {
          m.detail = "arrow rescaling needs a fractional power of " + p.get_str();
          return m;
        }
        const long k = e.get_num().get_si();
        mpz_class pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
        if (k >= 0)
          magnitude[a] *= pk;
        else
          magnitude[a] /= pk;
      }
    }
    Matrix ex2(eqs.size(), na);
    Vector rhs2(eqs.size());
    for (std::size_t r = 0; r < eqs.size(); ++r) {
      for (std::size_t a = 0; a < na; ++a) ex2(r, a) = Scalar::residue(eqs[r].exponents[a], 2);
      rhs2[r] = Scalar::residue(eqs[r].value < 0 ? 1 : 0, 2);
    }
    auto sol = solve_linear(ex2, rhs2);
    if (!sol.consistent) {
      m.detail = "no arrow rescaling matches the signs";
      return m;
    }
    for (std::size_t a = 0; a < na; ++a) negative[a] = !sol.particular[a].is_zero();
  }
  m.scale.clear();
  for (std::size_t a = 0; a < na; ++a) {
    mpq_class v = magnitude[a];
    if (negative[a]) v = -v;
    m.scale.push_back(Scalar(v));
  }

  std::vector<PathElement> scaled;
  for (const auto& r : ours.relations) scaled.push_back(translate(r, &m.scale));
  auto sg = group_relations(gq, scaled);
  for (const auto& [key, rels] : gg) {
    const auto& c = columns.at(key);
    if (reduce_group(c, sg.at(key)).rref != reduce_group(c, rels).rref) {
      m.detail = "rescaled relations differ between " + gq.vertex(key.first) + " and " + gq.vertex(key.second);
      return m;
    }
  }
  m.relations_match = true;
  return m;
}

}  // namespace tpa
