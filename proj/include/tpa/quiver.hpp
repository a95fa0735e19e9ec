#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tpa {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Arrow given by vertex names, used when building quivers.
struct ArrowSpec {
  std::string name;
  std::string source;
  std::string target;
};

/// Finite quiver. Arrows are kept in canonical order: sorted by
/// (source index, target index, name). Arrow indices refer to that order.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::string name, std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows);

  const std::string& name() const { return name_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::string& vertex(std::size_t v) const { return vertices_.at(v); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }

  std::optional<std::size_t> find_vertex(const std::string& name) const;
  std::optional<std::size_t> find_arrow(const std::string& name) const;
  std::size_t vertex_index(const std::string& name) const;  // throws InputError
  std::size_t arrow_index(const std::string& name) const;   // throws InputError

  std::vector<std::size_t> arrows_from(std::size_t v) const;
  std::vector<std::size_t> arrows_to(std::size_t v) const;
  bool is_acyclic() const;

  std::vector<ArrowSpec> arrow_specs() const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, std::size_t> vertex_lookup_;
  std::map<std::string, std::size_t> arrow_lookup_;
};

/// Path stored in traversal order: arrows[0] is traversed first. The
/// rendered product is right-to-left, so [a, b] prints as "b*a".
struct Path {
  std::size_t start = 0;             // base vertex (source)
  std::vector<std::size_t> arrows;

  static Path trivial(std::size_t v) { return Path{v, {}}; }
  static Path of_arrow(const Quiver& q, std::size_t a) { return Path{q.arrow(a).source, {a}}; }

  std::size_t length() const { return arrows.size(); }
  bool is_trivial() const { return arrows.empty(); }
  std::size_t source() const { return start; }
  std::size_t target(const Quiver& q) const { return arrows.empty() ? start : q.arrow(arrows.back()).target; }

  /// Length first, then lexicographic on arrow indices, then base vertex.
  friend bool operator<(const Path& a, const Path& b);
  friend bool operator==(const Path& a, const Path& b) = default;
};

/// The path "first then second"; throws if the endpoints do not match.
Path concat(const Quiver& q, const Path& first, const Path& second);
/// Whether arrows are composable and start matches the first arrow.
bool is_valid_path(const Quiver& q, const Path& p);
/// Renders with the right-to-left product convention, e.g. "b*a", "e_1".
std::string render_path(const Quiver& q, const Path& p);

enum class DynkinFamily { A, D, E };

struct DynkinType {
  DynkinFamily family = DynkinFamily::A;
  int rank = 1;
  std::string str() const;
  /// "A3", "D4", "E6" ...; throws InputError.
  static DynkinType parse(const std::string& text);
};

/// Edges of the Dynkin graph, each as (u, v) with u < v, in canonical order.
/// Vertices are named "1".."n". A_n: path 1-2-...-n. D_n: 1,2,3 attached to
/// 4, then 3-5-6-...-n. E_n: path 1-...-(n-1) with n attached to 3.
std::vector<std::pair<int, int>> dynkin_edges(const DynkinType& type);

/// Quiver on the Dynkin graph; edge k points u -> v unless reversed[k].
/// An empty `reversed` means all edges point from smaller to larger label.
Quiver build_dynkin(const DynkinType& type, const std::vector<bool>& reversed = {});

struct DoubleQuiver {
  Quiver quiver;
  /// For each arrow index of the result, the index of its partner.
  std::vector<std::size_t> partner;
  /// Whether the arrow is one of the added starred arrows.
  std::vector<bool> starred;
};

/// Adds a*: j -> i (named "a_star") for every a: i -> j. `star_names` renames
/// the added arrows (keyed by the original arrow name).
DoubleQuiver double_quiver(const Quiver& q, const std::map<std::string, std::string>& star_names = {});

using LatticePoint = std::vector<int>;

std::string lattice_label(const LatticePoint& x);
/// All x in Z_{>=0}^{d+1} with sum n-1, ordered lexicographically descending.
std::vector<LatticePoint> lattice_points(int d, int n);
/// Direction f_i (1-based i in 1..d+1).
LatticePoint lattice_direction(int d, int i);
/// Arrow name of a_{x,i}.
std::string lattice_arrow_name(const LatticePoint& x, int i);

/// The quiver Q^(d,n): lattice points, arrows a_{x,i}: x -> x + f_i.
Quiver build_q_dn(int d, int n);

/// All paths of length <= max_length, ordered by length then arrows.
std::vector<Path> enumerate_paths(const Quiver& q, std::size_t max_length);

std::string quiver_to_dot(const Quiver& q);

}  // namespace tpa
