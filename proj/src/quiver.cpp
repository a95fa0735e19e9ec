#include "tpa/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "tpa/errors.hpp"

namespace tpa {

Quiver::Quiver(std::string name, std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows)
    : name_(std::move(name)), vertices_(std::move(vertices)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_lookup_.emplace(vertices_[i], i).second)
      throw InputError("duplicate vertex '" + vertices_[i] + "'");
  }
  for (const auto& spec : arrows) {
    auto s = find_vertex(spec.source);
    auto t = find_vertex(spec.target);
    if (!s) throw InputError("arrow '" + spec.name + "' has undeclared source '" + spec.source + "'");
    if (!t) throw InputError("arrow '" + spec.name + "' has undeclared target '" + spec.target + "'");
    arrows_.push_back(Arrow{spec.name, *s, *t});
  }
  std::sort(arrows_.begin(), arrows_.end(), [](const Arrow& a, const Arrow& b) {
    return std::tie(a.source, a.target, a.name) < std::tie(b.source, b.target, b.name);
  });
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (!arrow_lookup_.emplace(arrows_[i].name, i).second)
      throw InputError("duplicate arrow '" + arrows_[i].name + "'");
  }
}

std::optional<std::size_t> Quiver::find_vertex(const std::string& name) const {
  auto it = vertex_lookup_.find(name);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& name) const {
  auto it = arrow_lookup_.find(name);
  if (it == arrow_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t Quiver::vertex_index(const std::string& name) const {
  auto v = find_vertex(name);
  if (!v) throw InputError("unknown vertex '" + name + "'");
  return *v;
}

std::size_t Quiver::arrow_index(const std::string& name) const {
  auto a = find_arrow(name);
  if (!a) throw InputError("unknown arrow '" + name + "'");
  return *a;
}

std::vector<std::size_t> Quiver::arrows_from(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].source == v) out.push_back(a);
  return out;
}

std::vector<std::size_t> Quiver::arrows_to(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].target == v) out.push_back(a);
  return out;
}

bool Quiver::is_acyclic() const {
  std::vector<std::size_t> indeg(vertices_.size(), 0);
  for (const auto& a : arrows_) ++indeg[a.target];
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < indeg.size(); ++v)
    if (indeg[v] == 0) stack.push_back(v);
  std::size_t seen = 0;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    ++seen;
    for (const auto& a : arrows_)
      if (a.source == v && --indeg[a.target] == 0) stack.push_back(a.target);
  }
  return seen == vertices_.size();
}

std::vector<ArrowSpec> Quiver::arrow_specs() const {
  std::vector<ArrowSpec> out;
  for (const auto& a : arrows_) out.push_back({a.name, vertices_[a.source], vertices_[a.target]});
  return out;
}

bool operator<(const Path& a, const Path& b) {
  if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
  if (a.arrows != b.arrows) return a.arrows < b.arrows;
  return a.start < b.start;
}

bool is_valid_path(const Quiver& q, const Path& p) {
  if (p.start >= q.vertex_count()) return false;
  std::size_t at = p.start;
  for (auto a : p.arrows) {
    if (a >= q.arrow_count() || q.arrow(a).source != at) return false;
    at = q.arrow(a).target;
  }
  return true;
}

Path concat(const Quiver& q, const Path& first, const Path& second) {
  if (first.target(q) != second.source()) throw InputError("paths do not compose");
  Path p = first;
  p.arrows.insert(p.arrows.end(), second.arrows.begin(), second.arrows.end());
  return p;
}

std::string render_path(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e_" + q.vertex(p.start);
  std::string out;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!out.empty()) out += '*';
    out += q.arrow(*it).name;
  }
  return out;
}

std::string DynkinType::str() const {
  const char* f = family == DynkinFamily::A ? "A" : family == DynkinFamily::D ? "D" : "E";
  return f + std::to_string(rank);
}

DynkinType DynkinType::parse(const std::string& text) {
  if (text.size() < 2) throw InputError("bad Dynkin type '" + text + "'");
  DynkinType t;
  switch (text[0]) {
    case 'A': case 'a': t.family = DynkinFamily::A; break;
    case 'D': case 'd': t.family = DynkinFamily::D; break;
    case 'E': case 'e': t.family = DynkinFamily::E; break;
    default: throw InputError("bad Dynkin type '" + text + "'");
  }
  std::string digits = text.substr(1);
  if (!digits.empty() && digits[0] == '_') digits = digits.substr(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
    throw InputError("bad Dynkin type '" + text + "'");
  t.rank = std::stoi(digits);
  return t;
}

std::vector<std::pair<int, int>> dynkin_edges(const DynkinType& type) {
  const int n = type.rank;
  std::vector<std::pair<int, int>> edges;
  switch (type.family) {
    case DynkinFamily::A:
      if (n < 1) throw InputError("A_n needs n >= 1");
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case DynkinFamily::D:
      if (n < 4) throw InputError("D_n needs n >= 4, got " + std::to_string(n));
      edges = {{1, 4}, {2, 4}, {3, 4}};
      if (n >= 5) edges.emplace_back(3, 5);
      for (int i = 5; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case DynkinFamily::E:
      if (n < 6 || n > 8) throw InputError("E_n needs 6 <= n <= 8, got " + std::to_string(n));
      for (int i = 1; i < n - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(3, n);
      break;
  }
  return edges;
}

Quiver build_dynkin(const DynkinType& type, const std::vector<bool>& reversed) {
  auto edges = dynkin_edges(type);
  if (!reversed.empty() && reversed.size() != edges.size())
    throw InputError("orientation has " + std::to_string(reversed.size()) + " entries, graph has " +
                     std::to_string(edges.size()) + " edges");
  std::vector<std::string> vertices;
  for (int i = 1; i <= type.rank; ++i) vertices.push_back(std::to_string(i));
  std::vector<ArrowSpec> arrows;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto [u, v] = edges[k];
    if (!reversed.empty() && reversed[k]) std::swap(u, v);
    std::string name = edges.size() <= 26 ? std::string(1, static_cast<char>('a' + k)) : "x" + std::to_string(k);
    arrows.push_back({name, std::to_string(u), std::to_string(v)});
  }
  return Quiver(type.str(), vertices, arrows);
}

DoubleQuiver double_quiver(const Quiver& q, const std::map<std::string, std::string>& star_names) {
  std::vector<ArrowSpec> arrows = q.arrow_specs();
  std::vector<std::string> star(q.arrow_count());
  for (std::size_t i = 0; i < q.arrow_count(); ++i) {
    const auto& a = q.arrow(i);
    auto it = star_names.find(a.name);
    star[i] = it == star_names.end() ? a.name + "_star" : it->second;
    arrows.push_back({star[i], q.vertex(a.target), q.vertex(a.source)});
  }
  DoubleQuiver out{Quiver(q.name() + "_double", q.vertices(), arrows), {}, {}};
  const auto& dq = out.quiver;
  out.partner.resize(dq.arrow_count());
  out.starred.resize(dq.arrow_count(), false);
  for (std::size_t i = 0; i < q.arrow_count(); ++i) {
    auto a = dq.arrow_index(q.arrow(i).name);
    auto b = dq.arrow_index(star[i]);
    out.partner[a] = b;
    out.partner[b] = a;
    out.starred[b] = true;
  }
  return out;
}

std::string lattice_label(const LatticePoint& x) {
  bool wide = std::any_of(x.begin(), x.end(), [](int c) { return c >= 10; });
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (wide && i) s += '.';
    s += std::to_string(x[i]);
  }
  return s;
}

std::vector<LatticePoint> lattice_points(int d, int n) {
  if (d < 1 || n < 1) throw InputError("lattice quiver needs d >= 1 and n >= 1");
  std::vector<LatticePoint> out;
  LatticePoint x(static_cast<std::size_t>(d + 1), 0);
  // Enumerate compositions of n-1 into d+1 parts, lexicographically descending.
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i + 1 == x.size()) {
      x[i] = remaining;
      out.push_back(x);
      return;
    }
    for (int c = remaining; c >= 0; --c) {
      x[i] = c;
      self(self, i + 1, remaining - c);
    }
  };
  rec(rec, 0, n - 1);
  return out;
}

LatticePoint lattice_direction(int d, int i) {
  if (i < 1 || i > d + 1) throw InputError("direction index out of range");
  LatticePoint f(static_cast<std::size_t>(d + 1), 0);
  if (i <= d) {
    f[static_cast<std::size_t>(i - 1)] = -1;
    f[static_cast<std::size_t>(i)] = 1;
  } else {
    f[0] = 1;
    f[static_cast<std::size_t>(d)] = -1;
  }
  return f;
}

std::string lattice_arrow_name(const LatticePoint& x, int i) {
  return "a_" + lattice_label(x) + "_" + std::to_string(i);
}

Quiver build_q_dn(int d, int n) {
  auto points = lattice_points(d, n);
  std::vector<std::string> names;
  for (const auto& x : points) names.push_back(lattice_label(x));
  std::vector<ArrowSpec> arrows;
  for (const auto& x : points)
    for (int i = 1; i <= d + 1; ++i) {
      LatticePoint y = x;
      auto f = lattice_direction(d, i);
      bool ok = true;
      for (std::size_t k = 0; k < y.size(); ++k) {
        y[k] += f[k];
        ok = ok && y[k] >= 0;
      }
      if (ok) arrows.push_back({lattice_arrow_name(x, i), lattice_label(x), lattice_label(y)});
    }
  return Quiver("Q(" + std::to_string(d) + "," + std::to_string(n) + ")", names, arrows);
}

std::vector<Path> enumerate_paths(const Quiver& q, std::size_t max_length) {
  std::vector<Path> out;
  std::vector<Path> layer;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) layer.push_back(Path::trivial(v));
  out = layer;
  for (std::size_t len = 1; len <= max_length && !layer.empty(); ++len) {
    std::vector<Path> next;
    for (const auto& p : layer)
      for (auto a : q.arrows_from(p.target(q))) {
        Path e = p;
        if (e.arrows.empty()) e.start = q.arrow(a).source;
        e.arrows.push_back(a);
        next.push_back(std::move(e));
      }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::string quiver_to_dot(const Quiver& q) {
  std::ostringstream os;
  os << "digraph \"" << q.name() << "\" {\n";
  for (const auto& v : q.vertices()) os << "  \"" << v << "\";\n";
  for (const auto& a : q.arrows())
    os << "  \"" << q.vertex(a.source) << "\" -> \"" << q.vertex(a.target) << "\" [label=\"" << a.name << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace tpa
