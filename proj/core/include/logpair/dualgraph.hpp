#pragma once

// Weighted dual graphs of reduced divisors D = sum C_i.
//
// Each vertex is a prime component with its (arithmetic) genus and
// self-intersection. Edges carry the intersection number C_u . C_v, so a
// component pair meeting in m points is one edge of weight m rather than m
// parallel edges. SNC simplicity (every weight 1) is not required by the
// type; snc_violations() reports where it fails.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "logpair/lattice.hpp"
#include "logpair/linalg.hpp"

namespace logpair {

struct GraphVertex {
  std::string id;
  long genus = 0;
  long self_int = 0;
};

struct GraphEdge {
  std::string u;
  std::string v;
  long mult = 1;
};

/// Lattice classes for the vertices, in vertex order.
struct ClassBinding {
  SurfaceModel model;
  std::vector<DivisorClass> classes;
};

class DualGraph {
 public:
  DualGraph() = default;
  /// Validates ids, edge endpoints, loops, duplicate pairs and (when a binding
  /// is given) agreement of every pairing with the lattice. Throws InputError.
  DualGraph(std::vector<GraphVertex> vertices, std::vector<GraphEdge> edges,
            std::optional<ClassBinding> binding = std::nullopt);

  /// Builds the graph whose weights are the lattice pairings of `classes`.
  static DualGraph from_classes(const SurfaceModel& model, std::vector<std::string> ids,
                                std::vector<DivisorClass> classes, std::vector<long> genera);

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const std::vector<GraphVertex>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const GraphVertex& vertex(std::size_t i) const { return vertices_.at(i); }

  /// Throws InputError for an unknown id.
  std::size_t index_of(std::string_view id) const;
  std::optional<std::size_t> find(std::string_view id) const;

  /// (neighbor index, edge weight) pairs, sorted by neighbor index.
  const std::vector<std::pair<std::size_t, long>>& neighbors(std::size_t i) const { return adjacency_.at(i); }
  long edge_mult(std::size_t i, std::size_t j) const;
  /// l = sum of all edge weights.
  long total_edge_weight() const;

  /// Components as sorted vertex-index lists, ordered by smallest member.
  std::vector<std::vector<std::size_t>> connected_components() const;

  /// Intersection matrix restricted to `subset` (self-intersections on the diagonal).
  RationalMatrix gram(std::span<const std::size_t> subset) const;
  RationalMatrix gram() const;

  const std::optional<ClassBinding>& binding() const { return binding_; }
  bool has_binding() const { return binding_.has_value(); }
  /// Sum of the bound classes.
  std::optional<DivisorClass> total_class() const;

 private:
  std::vector<GraphVertex> vertices_;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<std::pair<std::size_t, long>>> adjacency_;
  std::optional<ClassBinding> binding_;
};

/// Number of distinct neighbours; edge weight does not count.
long branching_number(const DualGraph& g, std::size_t vertex);
long branching_number(const DualGraph& g, std::string_view id);

/// sum p_a(C_i) + 1 + l - r.
long graph_arithmetic_genus(const DualGraph& g);

/// Edges of weight >= 2. The lattice cannot tell m transverse crossings from a
/// tangency, so these are the places where SNC is not certified.
std::vector<std::string> snc_violations(const DualGraph& g);

enum class SegmentKind { Rod, Twig, Fork };
std::string_view to_string(SegmentKind kind);

struct Segment {
  SegmentKind kind = SegmentKind::Rod;
  /// Chains: tip first. Forks: centre first, then each arm from the centre outwards.
  std::vector<std::size_t> vertices;
  /// Twigs: the component C_{r+1} the chain hangs from.
  std::optional<std::size_t> attachment;
  /// Forks: the three arms, each listed from the centre outwards.
  std::vector<std::vector<std::size_t>> arms;
  bool negative_definite = false;
};

struct ExcludedPart {
  std::vector<std::size_t> vertices;
  std::string reason;
};

struct SegmentReport {
  /// Vertices with branching number 1.
  std::vector<std::size_t> tips;
  std::vector<Segment> rods;
  std::vector<Segment> twigs;
  std::vector<Segment> forks;
  std::vector<ExcludedPart> excluded;

  std::vector<const Segment*> all_segments() const;
};

/// Splits the admissible rational part of the graph into maximal twigs, rods
/// and forks.
///
/// A vertex can join a segment only if it has genus 0, self-intersection
/// <= -2, and no incident edge of weight >= 2. Rods are chain components made
/// entirely of such vertices (a single vertex counts). Forks are star-shaped
/// tree components with one branch vertex of valence 3, three chain arms,
/// a negative-definite Gram matrix and arm discriminants d_i with
/// sum 1/d_i > 1. Twigs grow from every remaining tip through valence-2
/// vertices and stop before the first vertex that is not admissible or
/// branches; that vertex is recorded as the attachment.
SegmentReport classify_segments(const DualGraph& g);

}  // namespace logpair
