#include "logpair/dualgraph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

#include "logpair/errors.hpp"

namespace logpair {

DualGraph::DualGraph(std::vector<GraphVertex> vertices, std::vector<GraphEdge> edges,
                     std::optional<ClassBinding> binding)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), binding_(std::move(binding)) {
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& v = vertices_[i];
    if (v.id.empty()) throw InputError("dual graph: vertex " + std::to_string(i) + " has an empty id");
    if (v.genus < 0) throw InputError("dual graph: vertex '" + v.id + "' has negative genus");
    if (!index.emplace(v.id, i).second) throw InputError("dual graph: duplicate vertex id '" + v.id + "'");
  }

  adjacency_.assign(vertices_.size(), {});
  for (const auto& e : edges_) {
    const auto u = index.find(e.u);
    const auto v = index.find(e.v);
    if (u == index.end()) throw InputError("dual graph: edge references unknown vertex '" + e.u + "'");
    if (v == index.end()) throw InputError("dual graph: edge references unknown vertex '" + e.v + "'");
    if (u->second == v->second) throw InputError("dual graph: self-loop at '" + e.u + "'");
    if (e.mult < 1) throw InputError("dual graph: edge " + e.u + "-" + e.v + " must have positive multiplicity");
    for (const auto& [nb, w] : adjacency_[u->second]) {
      (void)w;
      if (nb == v->second) throw InputError("dual graph: more than one edge record for " + e.u + "-" + e.v);
    }
    adjacency_[u->second].emplace_back(v->second, e.mult);
    adjacency_[v->second].emplace_back(u->second, e.mult);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

  if (!binding_) return;
  const auto& model = binding_->model;
  const auto& classes = binding_->classes;
  if (classes.size() != vertices_.size()) {
    throw InputError("dual graph: class map has " + std::to_string(classes.size()) + " classes for " +
                     std::to_string(vertices_.size()) + " vertices");
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].size() != model.rank()) {
      throw InputError("dual graph: class of '" + vertices_[i].id + "' does not match the model rank");
    }
    const Rational sq = self_intersection(model, classes[i]);
    if (sq != vertices_[i].self_int) {
      throw InputError("dual graph: '" + vertices_[i].id + "' has self-intersection " +
                       std::to_string(vertices_[i].self_int) + " but its class squares to " + to_string(sq));
    }
    if (model.has_canonical()) {
      const Rational pa = arithmetic_genus(model, classes[i]);
      if (pa != vertices_[i].genus) {
        throw InputError("dual graph: '" + vertices_[i].id + "' has genus " + std::to_string(vertices_[i].genus) +
                         " but adjunction on its class gives " + to_string(pa));
      }
    }
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      const Rational p = intersect(model, classes[i], classes[j]);
      if (p != edge_mult(i, j)) {
        throw InputError("dual graph: " + vertices_[i].id + "." + vertices_[j].id + " is " + to_string(p) +
                         " in the lattice but the edge weight is " + std::to_string(edge_mult(i, j)));
      }
    }
  }
}

DualGraph DualGraph::from_classes(const SurfaceModel& model, std::vector<std::string> ids,
                                  std::vector<DivisorClass> classes, std::vector<long> genera) {
  if (ids.size() != classes.size() || genera.size() != classes.size()) {
    throw InputError("from_classes: ids, classes and genera must have equal length");
  }
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    vertices.push_back({ids[i], genera[i], to_long(self_intersection(model, classes[i]))});
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      const long p = to_long(intersect(model, classes[i], classes[j]));
      if (p < 0) throw InputError("from_classes: distinct components " + ids[i] + " and " + ids[j] + " pair negatively");
      if (p > 0) edges.push_back({ids[i], ids[j], p});
    }
  }
  return DualGraph(std::move(vertices), std::move(edges), ClassBinding{model, std::move(classes)});
}

std::optional<std::size_t> DualGraph::find(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t DualGraph::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw InputError("dual graph: unknown vertex '" + std::string(id) + "'");
}

long DualGraph::edge_mult(std::size_t i, std::size_t j) const {
  for (const auto& [nb, w] : adjacency_.at(i)) {
    if (nb == j) return w;
  }
  return 0;
}

long DualGraph::total_edge_weight() const {
  long l = 0;
  for (const auto& e : edges_) l += e.mult;
  return l;
}

std::vector<std::vector<std::size_t>> DualGraph::connected_components() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(size(), false);
  for (std::size_t s = 0; s < size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      const auto v = q.front();
      q.pop();
      comp.push_back(v);
      for (const auto& [nb, w] : adjacency_[v]) {
        (void)w;
        if (!seen[nb]) {
          seen[nb] = true;
          q.push(nb);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

RationalMatrix DualGraph::gram(std::span<const std::size_t> subset) const {
  RationalMatrix m(subset.size(), subset.size());
  for (std::size_t a = 0; a < subset.size(); ++a) {
    m(a, a) = vertices_.at(subset[a]).self_int;
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      const long w = edge_mult(subset[a], subset[b]);
      m(a, b) = w;
      m(b, a) = w;
    }
  }
  return m;
}

RationalMatrix DualGraph::gram() const {
  std::vector<std::size_t> all(size());
  for (std::size_t i = 0; i < size(); ++i) all[i] = i;
  return gram(all);
}

std::optional<DivisorClass> DualGraph::total_class() const {
  if (!binding_) return std::nullopt;
  DivisorClass total = DivisorClass::zero(binding_->model.rank());
  for (const auto& c : binding_->classes) total += c;
  return total;
}

long branching_number(const DualGraph& g, std::size_t vertex) {
  if (vertex >= g.size()) throw InputError("branching_number: vertex index out of range");
  return static_cast<long>(g.neighbors(vertex).size());
}

long branching_number(const DualGraph& g, std::string_view id) { return branching_number(g, g.index_of(id)); }

long graph_arithmetic_genus(const DualGraph& g) {
  long genus_sum = 0;
  for (const auto& v : g.vertices()) genus_sum += v.genus;
  return genus_sum + 1 + g.total_edge_weight() - static_cast<long>(g.size());
}

std::vector<std::string> snc_violations(const DualGraph& g) {
  std::vector<std::string> out;
  for (const auto& e : g.edges()) {
    if (e.mult > 1) {
      out.push_back("components " + e.u + " and " + e.v + " meet with multiplicity " + std::to_string(e.mult) +
                    "; transversality is not certified");
    }
  }
  return out;
}

std::string_view to_string(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::Rod: return "rod";
    case SegmentKind::Twig: return "twig";
    case SegmentKind::Fork: return "fork";
  }
  return "?";
}

std::vector<const Segment*> SegmentReport::all_segments() const {
  std::vector<const Segment*> out;
  for (const auto& s : rods) out.push_back(&s);
  for (const auto& s : twigs) out.push_back(&s);
  for (const auto& s : forks) out.push_back(&s);
  return out;
}

namespace {

std::optional<std::string> ineligibility(const DualGraph& g, std::size_t v) {
  const auto& vx = g.vertex(v);
  if (vx.genus > 0) return "genus " + std::to_string(vx.genus) + " component is not rational";
  if (vx.self_int == -1) return "(-1)-curve";
  if (vx.self_int >= 0) return "self-intersection " + std::to_string(vx.self_int) + " is not negative";
  for (const auto& [nb, w] : g.neighbors(v)) {
    if (w >= 2) return "meets " + g.vertex(nb).id + " with multiplicity " + std::to_string(w);
  }
  return std::nullopt;
}

// Walks a chain starting at `start`, leaving through the neighbour that is not
// `from`, collecting vertices while `keep` accepts them.
template <class Keep>
std::vector<std::size_t> walk_chain(const DualGraph& g, std::size_t from, std::size_t start, Keep keep) {
  std::vector<std::size_t> out;
  std::size_t prev = from;
  std::size_t cur = start;
  while (keep(cur)) {
    out.push_back(cur);
    std::optional<std::size_t> next;
    for (const auto& [nb, w] : g.neighbors(cur)) {
      (void)w;
      if (nb != prev) next = nb;
    }
    if (!next) break;
    prev = cur;
    cur = *next;
  }
  return out;
}

long edge_count(const DualGraph& g, std::span<const std::size_t> comp) {
  long twice = 0;
  for (auto v : comp) twice += static_cast<long>(g.neighbors(v).size());
  return twice / 2;
}

}  // namespace

SegmentReport classify_segments(const DualGraph& g) {
  SegmentReport report;
  const std::size_t n = g.size();
  std::vector<bool> eligible(n, false);
  std::vector<bool> used(n, false);

  for (std::size_t v = 0; v < n; ++v) {
    if (branching_number(g, v) == 1) report.tips.push_back(v);
    if (auto why = ineligibility(g, v)) {
      report.excluded.push_back({{v}, *why});
    } else {
      eligible[v] = true;
    }
  }

  for (const auto& comp : g.connected_components()) {
    const bool all_eligible = std::all_of(comp.begin(), comp.end(), [&](auto v) { return eligible[v]; });
    if (!all_eligible) continue;
    const bool tree = edge_count(g, comp) + 1 == static_cast<long>(comp.size());
    if (!tree) continue;

    long max_beta = 0;
    std::vector<std::size_t> branch;
    for (auto v : comp) {
      const long b = branching_number(g, v);
      max_beta = std::max(max_beta, b);
      if (b >= 3) branch.push_back(v);
    }

    if (max_beta <= 2) {
      // Chain component: start at an end.
      std::size_t start = comp.front();
      for (auto v : comp) {
        if (branching_number(g, v) <= 1) {
          start = v;
          break;
        }
      }
      Segment rod;
      rod.kind = SegmentKind::Rod;
      rod.vertices = walk_chain(g, start, start, [](std::size_t) { return true; });
      rod.negative_definite = is_negative_definite(g.gram(rod.vertices));
      for (auto v : rod.vertices) used[v] = true;
      report.rods.push_back(std::move(rod));
      continue;
    }

    if (branch.size() == 1 && branching_number(g, branch.front()) == 3) {
      const std::size_t centre = branch.front();
      Segment fork;
      fork.kind = SegmentKind::Fork;
      fork.vertices.push_back(centre);
      for (const auto& [nb, w] : g.neighbors(centre)) {
        (void)w;
        auto arm = walk_chain(g, centre, nb, [&](std::size_t) { return true; });
        fork.vertices.insert(fork.vertices.end(), arm.begin(), arm.end());
        fork.arms.push_back(std::move(arm));
      }
      fork.negative_definite = is_negative_definite(g.gram(fork.vertices));
      if (!fork.negative_definite) {
        report.excluded.push_back({comp, "star-shaped component whose Gram matrix is not negative definite"});
        continue;
      }
      // Log terminal star: arm discriminants d_i satisfy sum 1/d_i > 1.
      Rational inverse_sum = 0;
      for (const auto& arm : fork.arms) {
        Rational det = determinant(g.gram(arm));
        if (arm.size() % 2 == 1) det = -det;
        inverse_sum += Rational(1) / det;
      }
      if (inverse_sum <= 1) {
        report.excluded.push_back({comp, "star-shaped component is not log terminal (sum of 1/d_i is " +
                                             to_string(inverse_sum) + ")"});
        continue;
      }
      for (auto v : fork.vertices) used[v] = true;
      report.forks.push_back(std::move(fork));
    }
  }

  for (auto tip : report.tips) {
    if (used[tip] || !eligible[tip]) continue;
    Segment twig;
    twig.kind = SegmentKind::Twig;
    twig.vertices.push_back(tip);
    std::size_t prev = tip;
    std::size_t cur = g.neighbors(tip).front().first;
    while (eligible[cur] && !used[cur] && branching_number(g, cur) == 2) {
      twig.vertices.push_back(cur);
      const auto& nbrs = g.neighbors(cur);
      const std::size_t next = nbrs[0].first == prev ? nbrs[1].first : nbrs[0].first;
      prev = cur;
      cur = next;
    }
    twig.attachment = cur;
    twig.negative_definite = is_negative_definite(g.gram(twig.vertices));
    for (auto v : twig.vertices) used[v] = true;
    report.twigs.push_back(std::move(twig));
  }

  return report;
}

}  // namespace logpair
