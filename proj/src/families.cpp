#include "tpa/families.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace tpa {

namespace {

std::optional<LatticePoint> shifted(const LatticePoint& x, int d, int i) {
  auto f = lattice_direction(d, i);
  LatticePoint y = x;
  for (std::size_t k = 0; k < y.size(); ++k) {
    y[k] += f[k];
    if (y[k] < 0) return std::nullopt;
  }
  return y;
}

PathElement two_step(const Quiver& q, const LatticePoint& x, int i, const LatticePoint& xi, int j) {
  Path p{q.vertex_index(lattice_label(x)), {q.arrow_index(lattice_arrow_name(x, i)), q.arrow_index(lattice_arrow_name(xi, j))}};
  return PathElement::of_path(p);
}

PathElement remap(const Quiver& from, const Quiver& to, const PathElement& x) {
  PathElement out;
  for (const auto& [p, c] : x.terms()) {
    Path r{to.vertex_index(from.vertex(p.start)), {}};
    for (auto a : p.arrows) r.arrows.push_back(to.arrow_index(from.arrow(a).name));
    out.add_term(r, c);
  }
  return out;
}

// Degree 1 on the arrows a_{x,top}, 0 elsewhere.
std::map<std::string, int> direction_degrees(const Quiver& q, int top) {
  const std::string suffix = "_" + std::to_string(top);
  std::map<std::string, int> out;
  for (const auto& a : q.arrows()) out[a.name] = a.name.ends_with(suffix) ? 1 : 0;
  return out;
}

std::size_t point_index(const std::vector<LatticePoint>& points, const LatticePoint& x) {
  auto it = std::find(points.begin(), points.end(), x);
  if (it == points.end()) throw DomainError("module " + lattice_label(x) + " is not a lattice vertex");
  return static_cast<std::size_t>(it - points.begin());
}

// Compares ours with the reference and pushes the transported arrow images
// through verify_iso_via_surjection.
FamilyCheck check_against(const std::string& name, const AlgebraPresentation& ours, const std::vector<Vector>& images,
                          const AlgebraPresentation& golden, const std::vector<std::size_t>& vmap,
                          const GradedHomAlgebra& target, const std::map<std::string, int>& degrees) {
  FamilyCheck c;
  c.name = name;
  c.match = compare_presentations(ours, golden, vmap);
  if (!c.match.ok()) return c;
  auto ref_images = transport_arrow_images(c.match, images, golden.quiver.arrow_count());
  auto reordered = reorder_vertices(golden, vmap);
  std::vector<Vector> re(reordered.quiver.arrow_count());
  for (std::size_t a = 0; a < re.size(); ++a)
    re[a] = ref_images.at(golden.quiver.arrow_index(reordered.quiver.arrow(a).name));
  c.surjection = verify_iso_via_surjection(reordered, target, re, degrees);
  return c;
}

}  // namespace

std::vector<FamilyRelation> family_relations(int d, int n) {
  const Quiver q = build_q_dn(d, n);
  std::vector<FamilyRelation> out;
  for (const auto& x : lattice_points(d, n))
    for (int i = 1; i <= d + 1; ++i)
      for (int j = i + 1; j <= d + 1; ++j) {
        auto xi = shifted(x, d, i);
        auto xj = shifted(x, d, j);
        std::optional<LatticePoint> xij = xi ? shifted(*xi, d, j) : (xj ? shifted(*xj, d, i) : std::nullopt);
        if (!xij) continue;
        FamilyRelation r;
        if (xi && xj) {
          r.tag = {x, i, j, true};
          r.element = two_step(q, x, i, *xi, j) - two_step(q, x, j, *xj, i);
        } else if (xi) {
          r.tag = {x, i, j, false};
          r.element = two_step(q, x, i, *xi, j);
        } else {
          r.tag = {x, j, i, false};
          r.element = two_step(q, x, j, *xj, i);
        }
        out.push_back(std::move(r));
      }
  return out;
}

AlgebraPresentation pi_dn(int d, int n) {
  AlgebraPresentation p;
  p.quiver = build_q_dn(d, n);
  for (auto& r : family_relations(d, n)) p.relations.push_back(std::move(r.element));
  p.quiver = Quiver("Pi(" + std::to_string(d) + "," + std::to_string(n) + ")", p.quiver.vertices(),
                    p.quiver.arrow_specs());
  return p;
}

AlgebraPresentation lambda_dn(int d, int n) {
  const Quiver full = build_q_dn(d, n);
  const std::string suffix = "_" + std::to_string(d + 1);
  std::vector<ArrowSpec> kept;
  for (const auto& s : full.arrow_specs())
    if (!s.name.ends_with(suffix)) kept.push_back(s);
  AlgebraPresentation p;
  p.quiver = Quiver("Lambda(" + std::to_string(d) + "," + std::to_string(n) + ")", full.vertices(), kept);
  for (const auto& r : family_relations(d, n))
    if (r.tag.i != d + 1 && r.tag.j != d + 1) p.relations.push_back(remap(full, p.quiver, r.element));
  return p;
}

AlgebraPresentation psi_dn(int d, int n) {
  AlgebraPresentation p;
  const Quiver full = build_q_dn(d, n);
  p.quiver = Quiver("Psi(" + std::to_string(d) + "," + std::to_string(n) + ")", full.vertices(), full.arrow_specs());
  for (const auto& r : family_relations(d, n)) {
    const bool excluded = !r.tag.commutator && r.tag.j == d + 1 && r.tag.x[static_cast<std::size_t>(d)] == 0;
    if (!excluded) p.relations.push_back(r.element);
  }
  return p;
}

LatticePoint translate_point(const LatticePoint& y, std::size_t i) {
  LatticePoint x = y;
  x.push_back(static_cast<int>(i));
  x[0] -= static_cast<int>(i);
  return x;
}

std::vector<DictionaryEntry> family_dictionary(int d, int n) {
  const int e = d + 2;  // direction of the q arrows in Q^(d+1,n)
  std::vector<DictionaryEntry> out;
  for (const auto& x : lattice_points(d + 1, n)) {
    DictionaryEntry de;
    de.point = x;
    const int i = x.back();
    LatticePoint y(x.begin(), x.end() - 1);
    y[0] += i;
    de.tag = (i == 0 ? "" : "t" + std::to_string(i)) + "P" + lattice_label(y);
    de.projective = i == 0;
    de.injective = x[0] == 0;
    // q_x: x - f_{d+2} -> x exists when x - f_{d+2} is a vertex.
    LatticePoint src = x;
    src[0] -= 1;
    src.back() += 1;
    if (src[0] >= 0) de.q_arrow = lattice_arrow_name(src, e);
    out.push_back(std::move(de));
  }
  return out;
}

AlgebraPresentation reorder_vertices(const AlgebraPresentation& p, const std::vector<std::size_t>& new_to_old) {
  const Quiver& q = p.quiver;
  if (new_to_old.size() != q.vertex_count()) throw InputError("vertex order has the wrong length");
  std::vector<std::string> names;
  std::vector<std::size_t> old_to_new(q.vertex_count());
  for (std::size_t k = 0; k < new_to_old.size(); ++k) {
    names.push_back(q.vertex(new_to_old[k]));
    old_to_new.at(new_to_old[k]) = k;
  }
  AlgebraPresentation out;
  out.quiver = Quiver(q.name(), names, q.arrow_specs());
  for (const auto& r : p.relations) out.relations.push_back(remap(q, out.quiver, r));
  return out;
}

std::vector<Vector> transport_arrow_images(const PresentationMatch& m, const std::vector<Vector>& ours,
                                           std::size_t reference_arrows) {
  if (!m.ok()) throw InputError("presentations do not match");
  std::vector<Vector> out(reference_arrows);
  for (std::size_t a = 0; a < ours.size(); ++a) {
    Vector v = ours[a];
    const Scalar inv = m.scale.at(a).inverse();
    for (auto& c : v) c *= inv;
    out.at(m.arrow_map.at(a)) = std::move(v);
  }
  return out;
}

bool FamilyReport::ok() const {
  return checks.size() == 3 && std::all_of(checks.begin(), checks.end(), [](const FamilyCheck& c) { return c.ok(); });
}

FamilyReport verify_family_proposition(int d, int n) {
  FamilyReport rep;
  rep.d = d;
  rep.n = n;
  const auto lam = quotient_algebra(lambda_dn(d, n));
  const auto base_points = lattice_points(d, n);
  const auto points = lattice_points(d + 1, n);
  const auto ud = static_cast<std::size_t>(d);

  auto catalog_map = [&](const SummandCatalog& cat) {
    std::vector<std::size_t> vmap;
    for (const auto& e : cat.entries) vmap.push_back(point_index(points, translate_point(base_points[e.projective], e.tau_power)));
    return vmap;
  };
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      rep.checks.push_back(body());
    } catch (const Error& err) {
      FamilyCheck c;
      c.name = name;
      c.detail = err.what();
      rep.checks.push_back(std::move(c));
    }
  };

  guarded("auslander", [&] {
    auto ar = auslander_algebra(lam, ud);
    auto golden = lambda_dn(d + 1, n);
    std::map<std::string, int> degrees;
    for (const auto& a : golden.quiver.arrows()) degrees[a.name] = 0;
    return check_against("auslander", ar.presentation, ar.gamma.algebra.arrow_elements, golden, catalog_map(ar.catalog),
                         ar.gamma, degrees);
  });

  guarded("preprojective", [&] {
    auto pi = pi_graded(lam, ud);
    if (!pi.algebra.presentation) throw DomainError("no presentation recovered for Pi");
    auto golden = pi_dn(d, n);
    std::vector<std::size_t> vmap(golden.quiver.vertex_count());
    for (std::size_t k = 0; k < vmap.size(); ++k) vmap[k] = k;
    return check_against("preprojective", *pi.algebra.presentation, pi.algebra.arrow_elements, golden, vmap, pi,
                         direction_degrees(golden.quiver, d + 1));
  });

  guarded("total", [&] {
    auto tp = total_presentation(lam, ud);
    auto psi = total_psi(lam, ud, tp.auslander.catalog);
    auto golden = psi_dn(d + 1, n);
    auto vmap = catalog_map(tp.auslander.catalog);
    auto c = check_against("total", tp.presentation, total_arrow_images(tp, psi), golden, vmap, psi,
                           direction_degrees(golden.quiver, d + 2));
    // q_x must land on a_{x - f_{d+2}, d+2}.
    if (c.match.ok()) {
      const Quiver& oq = tp.presentation.quiver;
      const Quiver& gq = golden.quiver;
      for (auto k : tp.phi.support()) {
        const auto qa = oq.arrow_index(q_arrow_name(tp.auslander.presentation.quiver, k));
        LatticePoint src = points[vmap[k]];
        src[0] -= 1;
        src.back() += 1;
        if (gq.arrow(c.match.arrow_map[qa]).name != lattice_arrow_name(src, d + 2))
          c.detail = "q arrow of " + tp.auslander.catalog.entries[k].name + " is not " + lattice_arrow_name(src, d + 2);
      }
    }
    return c;
  });
  return rep;
}

}  // namespace tpa
