#pragma once

// Peeling: barks of the maximal twigs, rods and forks of a reduced divisor,
// the Q-divisor D# = D - Bk(D), and almost-minimalization by contracting
// exceptional curves of the first kind.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logpair/dualgraph.hpp"
#include "logpair/lattice.hpp"
#include "logpair/linalg.hpp"

namespace logpair {

/// Solves gram * a = rhs exactly. Throws InputError unless gram is symmetric
/// and negative definite.
std::vector<Rational> orthogonal_correction(const RationalMatrix& gram, std::span<const Rational> rhs);

struct SegmentBark {
  Segment segment;
  /// Parallel to segment.vertices.
  std::vector<Rational> coefficients;
  /// Bk(segment)^2 = sum a_i (-2 + beta_D(C_i)).
  Rational square;
  long tips = 0;
};

struct BarkResult {
  /// Bark coefficient a_i per vertex; 0 off the bark support.
  std::vector<Rational> coefficients;
  /// Multiplicity of each vertex in D#: 1 - a_i.
  std::vector<Rational> sharp_coeffs;
  Rational bark_square = 0;
  /// Tips of the bark support. A component with beta_D = 1 is one tip; an
  /// isolated component (a one-vertex rod) is both ends of its chain and
  /// counts twice.
  long tips_count = 0;
  std::vector<SegmentBark> segments;
  SegmentReport report;
  /// Pairs of segments that share a vertex or meet; empty when peeling is
  /// independent.
  std::vector<std::string> disjointness_violations;

  bool in_support(std::size_t vertex) const { return coefficients.at(vertex) != 0; }
};

/// Peels every admissible segment of `g`. Throws InternalError if a bark
/// coefficient falls outside (0, 1].
BarkResult bark(const DualGraph& g);

/// Bk(D)^2 >= -t.
bool bark_square_bound_check(const BarkResult& b);

/// (K + D#) . C_j for every vertex, from the graph data alone:
/// (K + D) . C_j = 2 p_a(C_j) - 2 + sum_{i != j} C_i . C_j, minus Bk(D) . C_j.
std::vector<Rational> sharp_pairings(const DualGraph& g, const BarkResult& b);

/// D# as a lattice class. Requires a class binding.
DivisorClass sharp_class(const DualGraph& g, const BarkResult& b);
/// Bk(D) as a lattice class. Requires a class binding.
DivisorClass bark_class(const DualGraph& g, const BarkResult& b);

/// Checks the negative-curve lemma on one test class E: if E^2 <= -2 and
/// (K + D) . E < 0 then E must be a component of D. Returns a description of
/// the violation, or nothing when the lemma's conclusion holds.
std::optional<std::string> negative_curve_violation(const DualGraph& g, const DivisorClass& e);

struct MinimalizationStep {
  std::size_t point = 0;
  std::string contracted;  // basis label before contraction
  Rational pairing;        // (K + D#) . E
  std::vector<std::string> removed_components;
  std::vector<std::string> warnings;
};

struct NefCertificate {
  struct Entry {
    std::string name;
    Rational pairing;
  };
  std::vector<Entry> pairings;
  bool nef_on_test_set = true;
  std::string scope;
};

struct MinimalizationResult {
  SurfaceModel model;
  DualGraph graph;
  BarkResult bark;
  std::vector<MinimalizationStep> log;
  std::vector<std::string> warnings;
  std::vector<std::string> negative_curve_violations;
  NefCertificate certificate;
};

/// Repeatedly contracts a basis exceptional class E with E^2 = -1 and
/// (K + D#) . E < 0, pushing D forward and re-peeling after every step.
/// Components of D that would qualify but are not basis classes are skipped
/// with a warning. The final nefness certificate covers the D-components,
/// the remaining basis exceptionals and `test_classes` only.
///
/// Requires a class binding on `g` and a model with a canonical class.
MinimalizationResult almost_minimalize(const DualGraph& g, std::span<const DivisorClass> test_classes = {});

}  // namespace logpair
