#include "tpa/repmod.hpp"

#include <random>

namespace tpa {

std::size_t Representation::total_dim() const {
  std::size_t n = 0;
  for (auto d : dims) n += d;
  return n;
}

std::vector<std::size_t> Representation::offsets() const {
  std::vector<std::size_t> off(dims.size() + 1, 0);
  for (std::size_t v = 0; v < dims.size(); ++v) off[v + 1] = off[v] + dims[v];
  return off;
}

bool ModuleMorphism::is_zero() const {
  for (const auto& m : maps)
    if (!m.is_zero()) return false;
  return true;
}

Matrix path_action(const Representation& x, const Path& p) {
  if (p.is_trivial()) return Matrix::identity(x.dims.at(p.start));
  Matrix m = x.actions.at(p.arrows.front());
  for (std::size_t k = 1; k < p.arrows.size(); ++k) m = m * x.actions.at(p.arrows[k]);
  return m;
}

Matrix element_action(const Representation& x, const Quiver& q, const PathElement& e) {
  if (e.is_zero()) throw InputError("action of the zero element has no fixed shape");
  if (!e.is_uniform(q)) throw InputError("element is not uniform");
  const Path& lead = e.leading_path();
  Matrix m(x.dims.at(lead.source()), x.dims.at(lead.target(q)));
  for (const auto& [p, c] : e.terms()) m += path_action(x, p) * c;
  return m;
}

void validate(const FDAlgebra& alg, const Representation& x) {
  const Quiver& q = alg.quiver;
  if (x.dims.size() != alg.vertex_count()) throw InputError("representation has the wrong number of vertices");
  if (x.actions.size() != q.arrow_count()) throw InputError("representation has the wrong number of arrows");
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& m = x.actions[a];
    if (m.rows() != x.dims[q.arrow(a).source] || m.cols() != x.dims[q.arrow(a).target])
      throw InputError("action of arrow '" + q.arrow(a).name + "' has the wrong shape");
  }
  if (!alg.presentation) return;
  for (const auto& r : alg.presentation->relations)
    if (!element_action(x, q, r).is_zero())
      throw InputError("relation '" + render_element(q, r) + "' does not hold");
}

bool is_morphism(const FDAlgebra& alg, const Representation& x, const Representation& y, const ModuleMorphism& f) {
  const Quiver& q = alg.quiver;
  if (f.maps.size() != x.dims.size()) return false;
  for (std::size_t v = 0; v < x.dims.size(); ++v)
    if (f.maps[v].rows() != y.dims[v] || f.maps[v].cols() != x.dims[v]) return false;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    auto i = q.arrow(a).source, j = q.arrow(a).target;
    if (f.maps[i] * x.actions[a] != y.actions[a] * f.maps[j]) return false;
  }
  return true;
}

ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f) {
  if (g.maps.size() != f.maps.size()) throw InputError("morphisms live over different vertex sets");
  ModuleMorphism h;
  for (std::size_t v = 0; v < f.maps.size(); ++v) h.maps.push_back(g.maps[v] * f.maps[v]);
  return h;
}

ModuleMorphism identity_morphism(const Representation& x) {
  ModuleMorphism f;
  for (auto d : x.dims) f.maps.push_back(Matrix::identity(d));
  return f;
}

ModuleMorphism zero_morphism(const Representation& x, const Representation& y) {
  ModuleMorphism f;
  for (std::size_t v = 0; v < x.dims.size(); ++v) f.maps.emplace_back(y.dims[v], x.dims[v]);
  return f;
}

ModuleMorphism combine(const std::vector<ModuleMorphism>& fs, const Vector& coeffs, const Representation& x,
                       const Representation& y) {
  ModuleMorphism out = zero_morphism(x, y);
  for (std::size_t k = 0; k < fs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    for (std::size_t v = 0; v < out.maps.size(); ++v) out.maps[v] += fs[k].maps[v] * coeffs[k];
  }
  return out;
}

ModuleMorphism operator+(const ModuleMorphism& f, const ModuleMorphism& g) {
  ModuleMorphism h = f;
  for (std::size_t v = 0; v < h.maps.size(); ++v) h.maps[v] += g.maps[v];
  return h;
}

ModuleMorphism operator*(const Scalar& c, const ModuleMorphism& f) {
  ModuleMorphism h = f;
  for (auto& m : h.maps) m *= c;
  return h;
}

Matrix total_matrix(const ModuleMorphism& f, const Representation& x, const Representation& y) {
  auto ox = x.offsets(), oy = y.offsets();
  Matrix m(y.total_dim(), x.total_dim());
  for (std::size_t v = 0; v < x.dims.size(); ++v) m.set_block(oy[v], ox[v], f.maps[v]);
  return m;
}

ModuleMorphism from_total_matrix(const Matrix& m, const Representation& x, const Representation& y) {
  auto ox = x.offsets(), oy = y.offsets();
  ModuleMorphism f;
  for (std::size_t v = 0; v < x.dims.size(); ++v) f.maps.push_back(m.block(oy[v], ox[v], y.dims[v], x.dims[v]));
  return f;
}

Vector flatten(const ModuleMorphism& f) {
  Vector out;
  for (const auto& m : f.maps) out.insert(out.end(), m.entries().begin(), m.entries().end());
  return out;
}

namespace {

// Basis indices of the algebra grouped by vertex, according to `key`.
template <class Key>
std::vector<std::vector<std::size_t>> group_basis(const FDAlgebra& alg, Key key) {
  std::vector<std::vector<std::size_t>> out(alg.vertex_count());
  for (std::size_t i = 0; i < alg.dim(); ++i)
    if (auto w = key(alg.basis[i])) out[*w].push_back(i);
  return out;
}

}  // namespace

Representation projective(const FDAlgebra& alg, std::size_t v) {
  // e_v A: basis elements ending at v, sorted into vertices by source.
  auto groups = group_basis(alg, [v](const BasisElement& b) -> std::optional<std::size_t> {
    if (b.target != v) return std::nullopt;
    return b.source;
  });
  Representation x;
  for (const auto& g : groups) x.dims.push_back(g.size());
  std::vector<std::size_t> pos(alg.dim(), 0);
  for (const auto& g : groups)
    for (std::size_t k = 0; k < g.size(); ++k) pos[g[k]] = k;
  const Quiver& q = alg.quiver;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    auto i = q.arrow(a).source, j = q.arrow(a).target;
    Matrix m(groups[i].size(), groups[j].size());
    for (std::size_t c = 0; c < groups[j].size(); ++c) {
      Vector img = alg.multiply(alg.unit(groups[j][c]), alg.arrow_elements[a]);
      for (std::size_t k = 0; k < img.size(); ++k)
        if (!img[k].is_zero()) m(pos[k], c) += img[k];
    }
    x.actions.push_back(std::move(m));
  }
  return x;
}

Representation injective(const FDAlgebra& alg, std::size_t v) {
  // D(A e_v): dual basis of elements starting at v, sorted by target.
  auto groups = group_basis(alg, [v](const BasisElement& b) -> std::optional<std::size_t> {
    if (b.source != v) return std::nullopt;
    return b.target;
  });
  Representation x;
  for (const auto& g : groups) x.dims.push_back(g.size());
  std::vector<std::size_t> pos(alg.dim(), 0);
  for (const auto& g : groups)
    for (std::size_t k = 0; k < g.size(); ++k) pos[g[k]] = k;
  const Quiver& q = alg.quiver;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    auto i = q.arrow(a).source, j = q.arrow(a).target;
    // (phi_x . a)(y) = phi_x(a y): entry [y, x] is the x-coefficient of a*y.
    Matrix m(groups[i].size(), groups[j].size());
    for (std::size_t r = 0; r < groups[i].size(); ++r) {
      Vector img = alg.multiply(alg.arrow_elements[a], alg.unit(groups[i][r]));
      for (std::size_t k = 0; k < img.size(); ++k)
        if (!img[k].is_zero()) m(r, pos[k]) += img[k];
    }
    x.actions.push_back(std::move(m));
  }
  return x;
}

Representation simple(const FDAlgebra& alg, std::size_t v) {
  Representation x = zero_module(alg);
  x.dims.at(v) = 1;
  const Quiver& q = alg.quiver;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    x.actions[a] = Matrix(x.dims[q.arrow(a).source], x.dims[q.arrow(a).target]);
  return x;
}

Representation zero_module(const FDAlgebra& alg) {
  Representation x;
  x.dims.assign(alg.vertex_count(), 0);
  x.actions.assign(alg.quiver.arrow_count(), Matrix());
  return x;
}

Representation regular_module(const FDAlgebra& alg) {
  std::vector<Representation> ps;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) ps.push_back(projective(alg, v));
  return direct_sum(alg, ps).sum;
}

Representation dual_module(const FDAlgebra& alg) {
  std::vector<Representation> is;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) is.push_back(injective(alg, v));
  return direct_sum(alg, is).sum;
}

Representation dualize(const FDAlgebra& alg, const Representation& x) {
  const Quiver& q = alg.quiver;
  std::vector<ArrowSpec> arrows;
  for (const auto& s : q.arrow_specs()) arrows.push_back({s.name, s.target, s.source});
  Quiver op(q.name() + "^op", q.vertices(), arrows);
  Representation d;
  d.dims = x.dims;
  d.actions.resize(op.arrow_count());
  for (std::size_t a = 0; a < q.arrow_count(); ++a) d.actions[op.arrow_index(q.arrow(a).name)] = x.actions[a].transpose();
  return d;
}

ModuleMorphism dualize(const ModuleMorphism& f) {
  ModuleMorphism d;
  for (const auto& m : f.maps) d.maps.push_back(m.transpose());
  return d;
}

std::vector<ModuleMorphism> hom_basis(const FDAlgebra& alg, const Representation& x, const Representation& y,
                                      const HomMask& mask) {
  const Quiver& q = alg.quiver;
  if (x.dims.size() != alg.vertex_count() || y.dims.size() != alg.vertex_count() ||
      x.actions.size() != q.arrow_count() || y.actions.size() != q.arrow_count())
    throw InputError("modules do not belong to the algebra");
  const std::size_t nv = alg.vertex_count();
  // Variable index of entry (r, c) of the map at v, or -1 if masked out.
  std::vector<std::vector<long>> var(nv);
  std::size_t n = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    var[v].assign(y.dims[v] * x.dims[v], -1);
    for (std::size_t r = 0; r < y.dims[v]; ++r)
      for (std::size_t c = 0; c < x.dims[v]; ++c)
        if (!mask || mask(v, r, c)) var[v][r * x.dims[v] + c] = static_cast<long>(n++);
  }
  std::vector<SparseRow> rows;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto i = q.arrow(a).source, j = q.arrow(a).target;
    const Matrix& xa = x.actions[a];  // X_j -> X_i
    const Matrix& ya = y.actions[a];  // Y_j -> Y_i
    // f_i * xa - ya * f_j = 0, entry (r, c) with r in Y_i, c in X_j.
    for (std::size_t r = 0; r < y.dims[i]; ++r)
      for (std::size_t c = 0; c < x.dims[j]; ++c) {
        SparseRow row;
        for (std::size_t k = 0; k < x.dims[i]; ++k) {
          const Scalar& e = xa(k, c);
          if (e.is_zero()) continue;
          long id = var[i][r * x.dims[i] + k];
          if (id >= 0) row.emplace_back(static_cast<std::size_t>(id), e);
        }
        for (std::size_t k = 0; k < y.dims[j]; ++k) {
          const Scalar& e = ya(r, k);
          if (e.is_zero()) continue;
          long id = var[j][k * x.dims[j] + c];
          if (id >= 0) row.emplace_back(static_cast<std::size_t>(id), -e);
        }
        if (!row.empty()) rows.push_back(std::move(row));
      }
  }
  auto ker = sparse_kernel(n, rows);
  std::vector<ModuleMorphism> out;
  for (const auto& k : ker) {
    ModuleMorphism f = zero_morphism(x, y);
    for (std::size_t v = 0; v < nv; ++v)
      for (std::size_t r = 0; r < y.dims[v]; ++r)
        for (std::size_t c = 0; c < x.dims[v]; ++c) {
          long id = var[v][r * x.dims[v] + c];
          if (id >= 0) f.maps[v](r, c) = k[static_cast<std::size_t>(id)];
        }
    out.push_back(std::move(f));
  }
  return out;
}

DirectSum direct_sum(const FDAlgebra& alg, const std::vector<Representation>& xs) {
  const Quiver& q = alg.quiver;
  DirectSum out;
  out.sum.dims.assign(alg.vertex_count(), 0);
  for (const auto& x : xs) {
    if (x.dims.size() != alg.vertex_count() || x.actions.size() != q.arrow_count())
      throw InputError("summand does not belong to the algebra");
    for (std::size_t v = 0; v < x.dims.size(); ++v) out.sum.dims[v] += x.dims[v];
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    auto i = q.arrow(a).source, j = q.arrow(a).target;
    Matrix m(out.sum.dims[i], out.sum.dims[j]);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& x : xs) {
      m.set_block(r0, c0, x.actions[a]);
      r0 += x.dims[i];
      c0 += x.dims[j];
    }
    out.sum.actions.push_back(std::move(m));
  }
  std::vector<std::size_t> off(alg.vertex_count(), 0);
  for (const auto& x : xs) {
    ModuleMorphism inj, proj;
    for (std::size_t v = 0; v < x.dims.size(); ++v) {
      Matrix in(out.sum.dims[v], x.dims[v]);
      for (std::size_t k = 0; k < x.dims[v]; ++k) in(off[v] + k, k) = Scalar(1);
      proj.maps.push_back(in.transpose());
      inj.maps.push_back(std::move(in));
      off[v] += x.dims[v];
    }
    out.injections.push_back(std::move(inj));
    out.projections.push_back(std::move(proj));
  }
  return out;
}

std::optional<ModuleMorphism> inverse(const ModuleMorphism& f) {
  ModuleMorphism g;
  for (const auto& m : f.maps) {
    if (m.rows() != m.cols()) return std::nullopt;
    if (m.rows() == 0) {
      g.maps.push_back(m);
      continue;
    }
    auto inv = tpa::inverse(m);
    if (!inv) return std::nullopt;
    g.maps.push_back(*inv);
  }
  return g;
}

namespace {
std::uint64_t g_witness_seed = 1;
}  // namespace

void set_witness_seed(std::uint64_t seed) { g_witness_seed = seed; }
std::uint64_t witness_seed() { return g_witness_seed; }

IsoResult is_isomorphic(const FDAlgebra& alg, const Representation& x, const Representation& y,
                        std::optional<std::uint64_t> seed) {
  IsoResult out;
  if (x.dims != y.dims) return out;
  if (x.total_dim() == 0) {
    out.isomorphic = true;
    out.witness = zero_morphism(x, y);
    return out;
  }
  auto hom = hom_basis(alg, x, y);
  if (hom.empty()) return out;
  auto invertible = [&](const Vector& c) -> std::optional<ModuleMorphism> {
    ModuleMorphism f = combine(hom, c, x, y);
    if (inverse(f)) return f;
    return std::nullopt;
  };
  std::mt19937_64 rng(seed.value_or(g_witness_seed));
  std::uniform_int_distribution<int> dist(-50, 50);
  for (int attempt = 0; attempt < 4; ++attempt) {
    Vector c(hom.size());
    for (auto& v : c) v = Scalar(dist(rng));
    if (auto f = invertible(c)) {
      out.isomorphic = true;
      out.witness = f;
      return out;
    }
  }
  // The determinant has degree <= N in each coefficient, so a nonzero value
  // exists on the grid {0..N}^k whenever it is not identically zero.
  const std::size_t n = x.total_dim();
  double cells = 1;
  for (std::size_t k = 0; k < hom.size(); ++k) cells *= static_cast<double>(n + 1);
  if (cells > 20000) {
    out.certified = false;
    return out;
  }
  std::vector<std::size_t> idx(hom.size(), 0);
  while (true) {
    Vector c(hom.size());
    for (std::size_t k = 0; k < idx.size(); ++k) c[k] = Scalar(static_cast<long>(idx[k]));
    if (auto f = invertible(c)) {
      out.isomorphic = true;
      out.witness = f;
      return out;
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] > n) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

bool is_indecomposable(const FDAlgebra& alg, const Representation& x) {
  if (alg.field != 0) throw DomainError("indecomposability test needs characteristic 0");
  if (x.total_dim() == 0) return false;
  auto end = hom_basis(alg, x, x);
  const std::size_t m = end.size();
  // tr(f o g) on x vanishes exactly on the radical of End(x) in char 0.
  Matrix form(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      Scalar t;
      for (std::size_t v = 0; v < x.dims.size(); ++v) {
        const Matrix& a = end[i].maps[v];
        const Matrix& b = end[j].maps[v];
        for (std::size_t r = 0; r < a.rows(); ++r)
          for (std::size_t k = 0; k < a.cols(); ++k)
            if (!a(r, k).is_zero()) t += a(r, k) * b(k, r);
      }
      form(i, j) = t;
      form(j, i) = t;
    }
  return m - kernel(form).size() == 1;
}

std::vector<std::size_t> dimension_vector(const Representation& x) { return x.dims; }

}  // namespace tpa

namespace tpa {

std::vector<Matrix> basis_actions(const FDAlgebra& alg, const Representation& x) {
  const auto& exprs = alg.expressions();
  std::vector<Matrix> out;
  out.reserve(exprs.size());
  for (std::size_t b = 0; b < exprs.size(); ++b) {
    const auto& be = alg.basis[b];
    Matrix m(x.dims.at(be.source), x.dims.at(be.target));
    for (const auto& [p, c] : exprs[b].terms()) m += path_action(x, p) * c;
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

Matrix columns_basis(std::vector<Vector> cols, std::size_t rows) {
  // Independent subset in the given order.
  EchelonSpan span(rows);
  std::vector<Vector> kept;
  for (auto& c : cols)
    if (span.add(c)) kept.push_back(std::move(c));
  return Matrix::from_columns(kept, rows);
}

}  // namespace

Submodule submodule(const FDAlgebra& alg, const Representation& x, const std::vector<Matrix>& bases) {
  const Quiver& q = alg.quiver;
  Submodule out;
  std::vector<SpanCoordinates> coords;
  for (std::size_t v = 0; v < x.dims.size(); ++v) {
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < bases[v].cols(); ++c) cols.push_back(bases[v].col(c));
    coords.emplace_back(cols, x.dims[v]);
    out.module.dims.push_back(bases[v].cols());
    out.inclusion.maps.push_back(bases[v]);
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    auto i = q.arrow(a).source, j = q.arrow(a).target;
    Matrix m(bases[i].cols(), bases[j].cols());
    for (std::size_t c = 0; c < bases[j].cols(); ++c) {
      auto img = coords[i].coordinates(x.actions[a] * bases[j].col(c));
      if (!img) throw InputError("subspace is not a submodule");
      for (std::size_t r = 0; r < img->size(); ++r) m(r, c) = (*img)[r];
    }
    out.module.actions.push_back(std::move(m));
  }
  return out;
}

Submodule kernel_module(const FDAlgebra& alg, const Representation& x, const ModuleMorphism& f) {
  std::vector<Matrix> bases;
  for (std::size_t v = 0; v < x.dims.size(); ++v) bases.push_back(Matrix::from_columns(kernel(f.maps[v]), x.dims[v]));
  return submodule(alg, x, bases);
}

std::vector<Matrix> radical_bases(const FDAlgebra& alg, const Representation& x) {
  const Quiver& q = alg.quiver;
  std::vector<std::vector<Vector>> cols(x.dims.size());
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& m = x.actions[a];
    for (std::size_t c = 0; c < m.cols(); ++c) cols[q.arrow(a).source].push_back(m.col(c));
  }
  std::vector<Matrix> out;
  for (std::size_t v = 0; v < x.dims.size(); ++v) out.push_back(columns_basis(std::move(cols[v]), x.dims[v]));
  return out;
}

}  // namespace tpa
