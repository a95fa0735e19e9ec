#include "tpa/presentation.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <tuple>

namespace tpa {

PathElement PathElement::of_path(const Path& p, const Scalar& c) {
  PathElement x;
  x.add_term(p, c);
  return x;
}

void PathElement::add_term(const Path& p, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::size_t PathElement::min_length() const {
  std::size_t m = terms_.empty() ? 0 : terms_.begin()->first.length();
  return m;  // terms are length-ordered
}

bool PathElement::is_uniform(const Quiver& q) const {
  if (terms_.empty()) return true;
  auto s = terms_.begin()->first.source();
  auto t = terms_.begin()->first.target(q);
  for (const auto& [p, c] : terms_)
    if (p.source() != s || p.target(q) != t) return false;
  return true;
}

PathElement PathElement::monic() const {
  if (terms_.empty()) return *this;
  return *this * leading_coefficient().inverse();
}

PathElement& PathElement::operator+=(const PathElement& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

PathElement& PathElement::operator-=(const PathElement& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

PathElement& PathElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

PathElement compose(const Quiver& q, const PathElement& first, const PathElement& second) {
  PathElement out;
  for (const auto& [p, c] : first.terms())
    for (const auto& [r, d] : second.terms())
      if (p.target(q) == r.source()) out.add_term(concat(q, p, r), c * d);
  return out;
}

PathElement sandwich(const Quiver& q, const Path& before, const PathElement& x, const Path& after) {
  PathElement out;
  for (const auto& [p, c] : x.terms()) {
    if (before.target(q) != p.source() || p.target(q) != after.source()) continue;
    out.add_term(concat(q, concat(q, before, p), after), c);
  }
  return out;
}

std::string render_element(const Quiver& q, const PathElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    Scalar c = it->second;
    bool negative = c.modulus() == 0 && c.to_rational() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (negative) c = -c;
    if (!c.is_one()) out += c.str() + "*";
    out += render_path(q, it->first);
  }
  return out;
}

void AlgebraPresentation::validate() const {
  for (const auto& r : relations) {
    if (r.is_zero()) throw InputError("zero relation");
    if (!r.is_uniform(quiver)) throw InputError("relation '" + render_element(quiver, r) + "' is not uniform");
    if (r.min_length() < 2)
      throw InputError("relation '" + render_element(quiver, r) + "' has a term of length < 2");
    for (const auto& [p, c] : r.terms())
      if (!is_valid_path(quiver, p)) throw InputError("relation contains an invalid path");
  }
}

GroebnerBasis::GroebnerBasis(const Quiver& q, std::vector<PathElement> elements)
    : quiver_(q), elements_(std::move(elements)) {
  std::set<std::size_t> lengths;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& lt = elements_[i].leading_path();
    leading_.emplace(lt.arrows, i);
    lengths.insert(lt.length());
  }
  leading_lengths_.assign(lengths.begin(), lengths.end());
}

std::optional<std::pair<std::size_t, std::size_t>> GroebnerBasis::divisor(const Path& p) const {
  const auto& w = p.arrows;
  std::vector<std::size_t> key;
  for (auto len : leading_lengths_) {
    if (len > w.size() || len == 0) continue;
    for (std::size_t off = 0; off + len <= w.size(); ++off) {
      key.assign(w.begin() + static_cast<long>(off), w.begin() + static_cast<long>(off + len));
      auto it = leading_.find(key);
      if (it != leading_.end()) return std::make_pair(it->second, off);
    }
  }
  return std::nullopt;
}

namespace {

// Full reduction of x by monic elements indexed through `div`.
template <class DivisorFn>
PathElement reduce_with(const Quiver& q, PathElement x, const std::vector<PathElement>& elems, DivisorFn div) {
  while (!x.is_zero()) {
    bool changed = false;
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
      auto d = div(it->first);
      if (!d) continue;
      const Path t = it->first;
      const Scalar c = it->second;
      const auto& g = elems[d->first];
      const std::size_t off = d->second;
      const std::size_t len = g.leading_path().length();
      Path before{t.start, std::vector<std::size_t>(t.arrows.begin(), t.arrows.begin() + static_cast<long>(off))};
      Path after{q.arrow(t.arrows[off + len - 1]).target,
                 std::vector<std::size_t>(t.arrows.begin() + static_cast<long>(off + len), t.arrows.end())};
      x -= sandwich(q, before, g, after) * (c / g.leading_coefficient());
      changed = true;
      break;
    }
    if (!changed) break;
  }
  return x;
}

}  // namespace

PathElement GroebnerBasis::normal_form(PathElement x) const {
  return reduce_with(quiver_, std::move(x), elements_, [this](const Path& p) { return divisor(p); });
}

std::pair<std::vector<Path>, bool> GroebnerBasis::normal_paths(std::size_t max_length) const {
  std::vector<Path> out;
  std::vector<Path> layer;
  for (std::size_t v = 0; v < quiver_.vertex_count(); ++v) layer.push_back(Path::trivial(v));
  out = layer;
  if (layer.empty()) return {out, true};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Path> next;
    for (const auto& p : layer)
      for (auto a : quiver_.arrows_from(p.target(quiver_))) {
        Path e = p;
        e.arrows.push_back(a);
        if (is_normal(e)) next.push_back(std::move(e));
      }
    if (next.empty()) return {out, true};
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return {out, false};
}

std::size_t default_degree_bound(const Quiver& q) { return 2 * q.arrow_count() + 2; }

namespace {

class Completion {
 public:
  explicit Completion(const Quiver& q) : q_(q) {}

  void add(PathElement f) {
    f = reduce(std::move(f));
    if (f.is_zero()) return;
    f = f.monic();
    const auto& lt = f.leading_path().arrows;
    std::vector<PathElement> displaced;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (!alive_[i]) continue;
      if (contains(elems_[i].leading_path().arrows, lt)) {
        alive_[i] = false;
        index_.erase(elems_[i].leading_path().arrows);
        displaced.push_back(elems_[i]);
      }
    }
    std::size_t id = elems_.size();
    elems_.push_back(f);
    alive_.push_back(true);
    index_.emplace(lt, id);
    lengths_.insert(lt.size());
    for (std::size_t j = 0; j <= id; ++j) {
      if (!alive_[j]) continue;
      queue_overlaps(id, j);
      if (j != id) queue_overlaps(j, id);
    }
    for (auto& g : displaced) add(std::move(g));
  }

  // Processes overlaps whose lcm length is <= bound (all if bound is empty).
  void run(std::optional<std::size_t> bound) {
    while (!queue_.empty()) {
      auto top = queue_.top();
      if (bound && std::get<0>(top) > *bound) return;
      queue_.pop();
      auto [len, i, j, k] = top;
      if (!alive_[i] || !alive_[j]) continue;
      add(s_polynomial(i, j, k));
    }
  }

  std::vector<PathElement> basis() const {
    std::vector<PathElement> out;
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (alive_[i]) out.push_back(elems_[i]);
    // Tail reduction against the other elements.
    std::vector<PathElement> reduced;
    for (std::size_t i = 0; i < out.size(); ++i) {
      PathElement lead = PathElement::of_path(out[i].leading_path(), out[i].leading_coefficient());
      PathElement tail = out[i] - lead;
      tail = reduce(std::move(tail));
      reduced.push_back(lead + tail);
    }
    std::sort(reduced.begin(), reduced.end(),
              [](const PathElement& a, const PathElement& b) { return a.leading_path() < b.leading_path(); });
    return reduced;
  }

 private:
  using Item = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;

  static bool contains(const std::vector<std::size_t>& w, const std::vector<std::size_t>& s) {
    return std::search(w.begin(), w.end(), s.begin(), s.end()) != w.end();
  }

  std::optional<std::pair<std::size_t, std::size_t>> divisor(const Path& p) const {
    const auto& w = p.arrows;
    std::vector<std::size_t> key;
    for (auto len : lengths_) {
      if (len > w.size()) continue;
      for (std::size_t off = 0; off + len <= w.size(); ++off) {
        key.assign(w.begin() + static_cast<long>(off), w.begin() + static_cast<long>(off + len));
        auto it = index_.find(key);
        if (it != index_.end()) return std::make_pair(it->second, off);
      }
    }
    return std::nullopt;
  }

  PathElement reduce(PathElement f) const {
    return reduce_with(q_, std::move(f), elems_, [this](const Path& p) { return divisor(p); });
  }

  void queue_overlaps(std::size_t i, std::size_t j) {
    const auto& a = elems_[i].leading_path().arrows;
    const auto& b = elems_[j].leading_path().arrows;
    for (std::size_t k = 1; k < std::min(a.size(), b.size()); ++k)
      if (std::equal(a.end() - static_cast<long>(k), a.end(), b.begin()))
        queue_.emplace(a.size() + b.size() - k, i, j, k);
  }

  PathElement s_polynomial(std::size_t i, std::size_t j, std::size_t k) const {
    const auto& g1 = elems_[i];
    const auto& g2 = elems_[j];
    const Path& l1 = g1.leading_path();
    const Path& l2 = g2.leading_path();
    Path v{l1.target(q_), std::vector<std::size_t>(l2.arrows.begin() + static_cast<long>(k), l2.arrows.end())};
    Path u{l1.source(), std::vector<std::size_t>(l1.arrows.begin(), l1.arrows.end() - static_cast<long>(k))};
    return sandwich(q_, Path::trivial(l1.source()), g1, v) - sandwich(q_, u, g2, Path::trivial(l2.target(q_)));
  }

  const Quiver& q_;
  std::vector<PathElement> elems_;
  std::vector<bool> alive_;
  std::map<std::vector<std::size_t>, std::size_t> index_;
  std::set<std::size_t> lengths_;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue_;
};

}  // namespace

GroebnerBasis groebner_complete(const AlgebraPresentation& p, std::optional<std::size_t> degree_bound) {
  p.validate();
  const std::size_t bound = degree_bound.value_or(default_degree_bound(p.quiver));
  Completion work(p.quiver);
  std::vector<PathElement> rels = p.relations;
  std::sort(rels.begin(), rels.end(),
            [](const PathElement& a, const PathElement& b) { return a.leading_path() < b.leading_path(); });
  for (const auto& r : rels) work.add(r);
  work.run(bound);

  GroebnerBasis partial(p.quiver, work.basis());
  auto [paths, finite] = partial.normal_paths(bound);
  if (!finite)
    throw GroebnerBoundExceeded("possibly infinite-dimensional: normal paths persist up to length " +
                                    std::to_string(bound),
                                partial.elements());
  // Once normal paths die out, only finitely many reductions remain.
  work.run(std::nullopt);
  GroebnerBasis gb(p.quiver, work.basis());
  gb.set_complete(true);
  return gb;
}

}  // namespace tpa
