#include "tpa/algebra.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace tpa {

void FDAlgebra::reset_table() { table_.assign(basis.size() * basis.size(), {}); }

void FDAlgebra::set_product(std::size_t i, std::size_t j, SparseVector v) {
  if (table_.size() != basis.size() * basis.size()) reset_table();
  table_[i * basis.size() + j] = std::move(v);
}

Vector FDAlgebra::unit(std::size_t i) const {
  Vector v(basis.size());
  v.at(i) = Scalar(1);
  return v;
}

Vector FDAlgebra::one() const {
  Vector v(basis.size());
  for (auto i : idempotents) v[i] = Scalar(1);
  return v;
}

Vector FDAlgebra::multiply(const Vector& x, const Vector& y) const {
  const std::size_t n = basis.size();
  Vector out(n);
  std::vector<std::size_t> ys;
  for (std::size_t j = 0; j < n; ++j)
    if (!y[j].is_zero()) ys.push_back(j);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (auto j : ys) {
      const auto& p = table_[i * n + j];
      if (p.empty()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& [k, v] : p) out[k] += c * v;
    }
  }
  return out;
}

std::vector<std::size_t> FDAlgebra::basis_between(std::size_t source, std::size_t target) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].source == source && basis[i].target == target) out.push_back(i);
  return out;
}

std::vector<std::vector<std::size_t>> FDAlgebra::cartan() const {
  std::vector<std::vector<std::size_t>> c(vertices.size(), std::vector<std::size_t>(vertices.size(), 0));
  for (const auto& b : basis) ++c[b.source][b.target];
  return c;
}

std::vector<std::size_t> FDAlgebra::graded_dims() const {
  std::vector<std::size_t> out;
  for (const auto& b : basis) {
    if (b.degree < 0) continue;
    auto d = static_cast<std::size_t>(b.degree);
    if (out.size() <= d) out.resize(d + 1, 0);
    ++out[d];
  }
  return out;
}

Matrix FDAlgebra::left_matrix(const Vector& x) const {
  const std::size_t n = basis.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, v] : table_[i * n + j]) m(k, j) += x[i] * v;
  }
  return m;
}

Matrix FDAlgebra::right_matrix(const Vector& x) const {
  const std::size_t n = basis.size();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [k, v] : table_[i * n + j]) m(k, i) += x[j] * v;
  }
  return m;
}

void FDAlgebra::check_structure() const {
  const std::size_t n = basis.size();
  if (table_.size() != n * n) throw Error("algebra '" + name + "' has no multiplication table");
  if (idempotents.size() != vertices.size()) throw Error("idempotent count mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (basis[i].source != basis[j].target && !table_[i * n + j].empty())
        throw Error("product of non-composable basis elements is nonzero");
      for (const auto& [k, v] : table_[i * n + j]) {
        if (basis[k].source != basis[j].source || basis[k].target != basis[i].target)
          throw Error("product leaves the expected corner");
        if (graded && basis[k].degree != basis[i].degree + basis[j].degree)
          throw Error("product violates the grading");
      }
    }
  Vector e = one();
  for (std::size_t i = 0; i < n; ++i) {
    if (multiply(e, unit(i)) != unit(i) || multiply(unit(i), e) != unit(i))
      throw Error("idempotents do not sum to the identity");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (table_[i * n + j].empty()) continue;
      Vector ij = multiply(unit(i), unit(j));
      for (std::size_t k = 0; k < n; ++k) {
        if (basis[j].source != basis[k].target) continue;
        if (multiply(ij, unit(k)) != multiply(unit(i), multiply(unit(j), unit(k))))
          throw Error("multiplication is not associative");
      }
    }
}

namespace {

std::uint64_t field_of(const AlgebraPresentation& p) {
  for (const auto& r : p.relations)
    for (const auto& [path, c] : r.terms())
      if (c.modulus()) return c.modulus();
  return 0;
}

}  // namespace

FDAlgebra quotient_algebra(const AlgebraPresentation& p, const QuotientOptions& opts) {
  return quotient_algebra(p, groebner_complete(p, opts.degree_bound), opts);
}

FDAlgebra quotient_algebra(const AlgebraPresentation& p, const GroebnerBasis& gb, const QuotientOptions& opts) {
  const Quiver& q = p.quiver;
  auto arrow_degree = [&](std::size_t a) {
    auto it = opts.arrow_degrees.find(q.arrow(a).name);
    return it == opts.arrow_degrees.end() ? 1 : it->second;
  };
  auto path_degree = [&](const Path& path) {
    int d = 0;
    for (auto a : path.arrows) d += arrow_degree(a);
    return d;
  };

  FDAlgebra alg;
  alg.name = q.name();
  alg.field = field_of(p);
  alg.vertices = q.vertices();
  auto [paths, finite] = gb.normal_paths(std::numeric_limits<std::size_t>::max());
  std::map<Path, std::size_t> index;
  for (const auto& path : paths) {
    index.emplace(path, alg.basis.size());
    alg.basis.push_back({render_path(q, path), path.source(), path.target(q), path_degree(path), path});
  }
  for (std::size_t v = 0; v < q.vertex_count(); ++v) alg.idempotents.push_back(index.at(Path::trivial(v)));

  alg.graded = true;
  for (const auto& r : p.relations) {
    int d = path_degree(r.leading_path());
    for (const auto& [path, c] : r.terms())
      if (path_degree(path) != d) alg.graded = false;
  }

  const std::size_t n = alg.basis.size();
  alg.reset_table();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (alg.basis[i].source != alg.basis[j].target) continue;
      const Path& first = *alg.basis[j].path;
      const Path& second = *alg.basis[i].path;
      PathElement nf = gb.normal_form(PathElement::of_path(concat(q, first, second)));
      SparseVector sv;
      for (const auto& [path, c] : nf.terms()) sv.emplace_back(index.at(path), c);
      std::sort(sv.begin(), sv.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      alg.set_product(i, j, std::move(sv));
    }

  alg.quiver = q;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) alg.arrow_elements.push_back(alg.unit(index.at(Path::of_arrow(q, a))));
  alg.presentation = p;
  return alg;
}

FDAlgebra opposite(const FDAlgebra& a) {
  FDAlgebra op;
  op.name = a.name + "^op";
  op.field = a.field;
  op.vertices = a.vertices;
  op.idempotents = a.idempotents;
  op.graded = a.graded;
  std::vector<ArrowSpec> arrows;
  for (const auto& s : a.quiver.arrow_specs()) arrows.push_back({s.name, s.target, s.source});
  op.quiver = Quiver(a.quiver.name() + "^op", a.quiver.vertices(), arrows);
  auto reverse_path = [&](const Path& p) {
    Path r{p.target(a.quiver), {}};
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it)
      r.arrows.push_back(op.quiver.arrow_index(a.quiver.arrow(*it).name));
    return r;
  };
  for (const auto& b : a.basis) {
    BasisElement c = b;
    std::swap(c.source, c.target);
    if (b.path) {
      c.path = reverse_path(*b.path);
      c.label = render_path(op.quiver, *c.path);
    }
    op.basis.push_back(c);
  }
  const std::size_t n = a.dim();
  op.reset_table();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) op.set_product(i, j, a.product(j, i));
  op.arrow_elements.resize(op.quiver.arrow_count());
  for (std::size_t k = 0; k < a.quiver.arrow_count(); ++k)
    op.arrow_elements[op.quiver.arrow_index(a.quiver.arrow(k).name)] = a.arrow_elements.at(k);
  if (a.presentation) {
    AlgebraPresentation p{op.quiver, {}};
    for (const auto& r : a.presentation->relations) {
      PathElement x;
      for (const auto& [path, c] : r.terms()) x.add_term(reverse_path(path), c);
      p.relations.push_back(x);
    }
    op.presentation = p;
  }
  return op;
}

std::vector<Vector> radical_basis(const FDAlgebra& a) {
  if (a.field != 0) throw DomainError("radical computation needs characteristic 0");
  const std::size_t n = a.dim();
  Vector t(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < n; ++m)
      for (const auto& [idx, v] : a.product(k, m))
        if (idx == m) t[k] += v;
  Matrix form(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, v] : a.product(i, j)) form(i, j) += v * t[k];
  // The form is symmetric, so its kernel is the radical.
  auto ker = kernel(form);
  if (ker.empty()) return ker;
  auto red = row_reduce(Matrix::from_rows(ker, n));
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < red.rank; ++r) rows.push_back(red.rref.row(r));
  return rows;
}

namespace {

std::vector<Vector> products_span(const FDAlgebra& a, const std::vector<Vector>& xs, const std::vector<Vector>& ys) {
  EchelonSpan span(a.dim());
  std::vector<Vector> out;
  for (const auto& x : xs)
    for (const auto& y : ys) {
      Vector p = a.multiply(x, y);
      if (!is_zero_vector(p) && span.add(p)) out.push_back(p);
    }
  return out;
}

}  // namespace

std::vector<Vector> radical_square_basis(const FDAlgebra& a, const std::vector<Vector>& rad) {
  return products_span(a, rad, rad);
}

std::size_t loewy_length(const FDAlgebra& a) {
  if (a.dim() == 0) return 0;
  auto rad = radical_basis(a);
  std::size_t len = 1;
  auto power = rad;
  while (!power.empty()) {
    power = products_span(a, power, rad);
    ++len;
  }
  return len;
}

Vector evaluate(const FDAlgebra& a, const std::vector<Vector>& lifts, const PathElement& x) {
  Vector out = a.zero();
  for (const auto& [path, c] : x.terms()) {
    Vector v = a.idempotent(path.source());
    for (auto arrow : path.arrows) v = a.multiply(lifts.at(arrow), v);
    for (std::size_t i = 0; i < v.size(); ++i) out[i] += c * v[i];
  }
  return out;
}

const std::vector<PathElement>& FDAlgebra::expressions() const {
  if (!expressions_) expressions_ = std::make_shared<const std::vector<PathElement>>(basis_expressions(*this));
  return *expressions_;
}

std::vector<PathElement> basis_expressions(const FDAlgebra& a) {
  std::vector<PathElement> out;
  bool paths = std::all_of(a.basis.begin(), a.basis.end(), [](const BasisElement& b) { return b.path.has_value(); });
  if (paths) {
    for (const auto& b : a.basis) out.push_back(PathElement::of_path(*b.path));
    return out;
  }
  // Breadth-first over paths, keeping those with independent images.
  const Quiver& q = a.quiver;
  EchelonSpan span(a.dim());
  std::vector<Path> kept;
  std::vector<Vector> images;
  std::vector<Path> layer;
  for (std::size_t v = 0; v < a.vertex_count(); ++v) layer.push_back(Path::trivial(v));
  while (!layer.empty() && span.dim() < a.dim()) {
    std::vector<Path> next;
    for (const auto& p : layer) {
      Vector img = evaluate(a, a.arrow_elements, PathElement::of_path(p));
      if (!span.add(img)) continue;
      kept.push_back(p);
      images.push_back(std::move(img));
      for (auto arrow : q.arrows_from(p.target(q))) {
        Path e = p;
        e.arrows.push_back(arrow);
        next.push_back(std::move(e));
      }
    }
    layer = std::move(next);
  }
  if (span.dim() < a.dim()) throw DomainError("arrows do not generate the algebra");
  SpanCoordinates coords(images, a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto c = coords.coordinates(a.unit(i));
    PathElement x;
    for (std::size_t k = 0; k < kept.size(); ++k) x.add_term(kept[k], (*c)[k]);
    out.push_back(std::move(x));
  }
  return out;
}

namespace {

Vector restrict_to(const Vector& v, const std::vector<std::size_t>& idx) {
  Vector out(v.size());
  for (auto i : idx) out[i] = v[i];
  return out;
}

struct RadicalData {
  std::vector<Vector> rad;
  std::vector<Vector> rad2;
};

RadicalData basic_radical(const FDAlgebra& a) {
  RadicalData r;
  r.rad = radical_basis(a);
  if (a.dim() - r.rad.size() != a.vertex_count())
    throw DomainError("algebra '" + a.name + "' is not basic: dim A/rad = " +
                      std::to_string(a.dim() - r.rad.size()) + ", vertices = " + std::to_string(a.vertex_count()));
  r.rad2 = radical_square_basis(a, r.rad);
  return r;
}

std::vector<Vector> corner_rows(const std::vector<Vector>& span, const std::vector<std::size_t>& idx, std::size_t n) {
  std::vector<Vector> rows;
  for (const auto& v : span) rows.push_back(restrict_to(v, idx));
  if (rows.empty()) return rows;
  auto red = row_reduce(Matrix::from_rows(rows, n));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < red.rank; ++i) out.push_back(red.rref.row(i));
  return out;
}

struct ArrowChoice {
  Quiver quiver;
  std::vector<Vector> lifts;
};

// Whether the algebra's own generators give a basis of rad/rad^2.
bool own_generators_fit(const FDAlgebra& a, const RadicalData& r) {
  if (a.arrow_elements.size() != a.quiver.arrow_count() || a.quiver.vertices() != a.vertices) return false;
  const std::size_t n = a.dim();
  SpanCoordinates rad_span(r.rad, n);
  EchelonSpan modulo(n);
  for (const auto& v : r.rad2) modulo.add(v);
  for (const auto& x : a.arrow_elements) {
    if (!rad_span.contains(x)) return false;
    if (!modulo.add(x)) return false;
  }
  return modulo.dim() == r.rad.size();
}

ArrowChoice choose_arrows(const FDAlgebra& a, const RadicalData& r) {
  if (own_generators_fit(a, r)) return {a.quiver, a.arrow_elements};
  const std::size_t n = a.dim();
  std::vector<ArrowSpec> specs;
  std::vector<Vector> lifts;
  for (std::size_t s = 0; s < a.vertex_count(); ++s)
    for (std::size_t t = 0; t < a.vertex_count(); ++t) {
      auto idx = a.basis_between(s, t);
      if (idx.empty()) continue;
      auto rad_rows = corner_rows(r.rad, idx, n);
      auto rad2_rows = corner_rows(r.rad2, idx, n);
      EchelonSpan modulo(n);
      for (const auto& v : rad2_rows) modulo.add(v);
      std::vector<Vector> chosen;
      for (const auto& v : rad_rows)
        if (modulo.add(v)) chosen.push_back(v);
      for (std::size_t m = 0; m < chosen.size(); ++m) {
        std::string name = "x_" + a.vertices[s] + "_" + a.vertices[t];
        if (chosen.size() > 1) name += "_" + std::to_string(m + 1);
        specs.push_back({name, a.vertices[s], a.vertices[t]});
        lifts.push_back(chosen[m]);
      }
    }
  ArrowChoice c{Quiver(a.name + "_quiver", a.vertices, specs), {}};
  c.lifts.resize(specs.size());
  for (std::size_t k = 0; k < specs.size(); ++k) c.lifts[c.quiver.arrow_index(specs[k].name)] = lifts[k];
  return c;
}

}  // namespace

Quiver algebra_quiver(const FDAlgebra& a) { return choose_arrows(a, basic_radical(a)).quiver; }

RecoveredPresentation recover_presentation(const FDAlgebra& a) {
  auto radical = basic_radical(a);
  auto arrows = choose_arrows(a, radical);
  const Quiver& q = arrows.quiver;
  const std::size_t n = a.dim();

  // Loewy length: paths of this length vanish.
  std::size_t loewy = 1;
  {
    auto power = radical.rad;
    while (!power.empty()) {
      power = products_span(a, power, radical.rad);
      ++loewy;
    }
  }

  // Paths of length 2..loewy grouped by endpoints, with their images.
  auto all = enumerate_paths(q, loewy);
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Path>> groups;
  for (const auto& p : all)
    if (p.length() >= 2) groups[{p.source(), p.target(q)}].push_back(p);

  struct Candidate {
    PathElement element;
    std::pair<std::size_t, std::size_t> key;
  };
  std::vector<Candidate> candidates;
  std::map<std::pair<std::size_t, std::size_t>, std::map<Path, std::size_t>> column_of;
  for (auto& [key, paths] : groups) {
    std::sort(paths.begin(), paths.end(), [](const Path& x, const Path& y) { return y < x; });
    auto& cols = column_of[key];
    for (std::size_t c = 0; c < paths.size(); ++c) cols.emplace(paths[c], c);
    auto idx = a.basis_between(key.first, key.second);
    Matrix m(idx.size(), paths.size());
    for (std::size_t c = 0; c < paths.size(); ++c) {
      Vector img = evaluate(a, arrows.lifts, PathElement::of_path(paths[c]));
      for (std::size_t r = 0; r < idx.size(); ++r) m(r, c) = img[idx[r]];
    }
    auto ker = kernel(m);
    if (ker.empty()) continue;
    auto red = row_reduce(Matrix::from_rows(ker, paths.size()));
    for (std::size_t r = 0; r < red.rank; ++r) {
      PathElement x;
      for (std::size_t c = 0; c < paths.size(); ++c) x.add_term(paths[c], red.rref(r, c));
      candidates.push_back({x, key});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
    return x.element.leading_path() < y.element.leading_path();
  });

  std::map<std::pair<std::size_t, std::size_t>, EchelonSpan> spans;
  for (const auto& [key, paths] : groups) spans.emplace(key, EchelonSpan(paths.size()));
  auto vectorize = [&](const PathElement& x, std::pair<std::size_t, std::size_t> key) {
    const auto& cols = column_of.at(key);
    Vector v(cols.size());
    for (const auto& [p, c] : x.terms()) {
      auto it = cols.find(p);
      if (it != cols.end()) v[it->second] += c;
    }
    return v;
  };

  std::vector<Path> before_paths = all;  // paths of length <= loewy
  AlgebraPresentation out{q, {}};
  for (const auto& cand : candidates) {
    if (spans.at(cand.key).contains(vectorize(cand.element, cand.key))) continue;
    out.relations.push_back(cand.element);
    const std::size_t slack = loewy - cand.element.min_length();
    for (const auto& u : before_paths) {
      if (u.length() > slack || u.target(q) != cand.key.first) continue;
      for (const auto& v : before_paths) {
        if (u.length() + v.length() > slack || v.source() != cand.key.second) continue;
        PathElement w = sandwich(q, u, cand.element, v);
        PathElement kept;
        for (const auto& [p, c] : w.terms())
          if (p.length() <= loewy) kept.add_term(p, c);
        if (kept.is_zero()) continue;
        std::pair<std::size_t, std::size_t> key{u.source(), v.target(q)};
        spans.at(key).add(vectorize(kept, key));
      }
    }
  }

  // The surjection kQ -> A must be well defined and the dimensions equal.
  for (const auto& r : out.relations)
    if (!is_zero_vector(evaluate(a, arrows.lifts, r))) throw Error("recovered relation does not vanish");
  auto check = quotient_algebra(out);
  if (check.dim() != n)
    throw Error("recovered presentation has dimension " + std::to_string(check.dim()) + ", expected " +
                std::to_string(n));
  EchelonSpan image(n);
  for (const auto& b : check.basis) image.add(evaluate(a, arrows.lifts, PathElement::of_path(*b.path)));
  if (image.dim() != n) throw Error("recovered generators do not span the algebra");
  return {out, arrows.lifts};
}

void attach_generators(FDAlgebra& a) {
  auto rec = recover_presentation(a);
  a.quiver = rec.presentation.quiver;
  a.arrow_elements = rec.arrow_lifts;
  a.presentation = rec.presentation;
  a.clear_cache();
}

}  // namespace tpa
