#pragma once

// The three rational pencils used throughout the tests and the CLI:
//  ex2: three conics on P^2 blown up at 8 points, D = 6H - 2 sum E_i;
//  ex3: a degree-3a curve with one point of multiplicity 3a-3 and 4a-4
//       double points;
//  ex4: a boundary xD + yG - 2 sum E_i on a Hirzebruch surface blown up at
//       the 4g+4 base points of a hyperelliptic pencil.

#include <string>
#include <vector>

#include "logpair/dualgraph.hpp"
#include "logpair/invariants.hpp"
#include "logpair/lattice.hpp"
#include "logpair/peeling.hpp"
#include "logpair/pencil.hpp"
#include "logpair/search.hpp"
#include "logpair/zariski.hpp"

namespace logpair {

/// A value quoted alongside the example next to the one computed here.
struct Discrepancy {
  std::string quantity;
  std::string stated;
  std::string computed;
  bool agrees = false;
};

struct Example2Data {
  SurfaceModel model;
  DivisorClass D;
  std::vector<std::string> ids;
  std::vector<DivisorClass> components;
  std::vector<DivisorClass> fixed_candidates;
};

Example2Data example2_data();
DualGraph example2_graph(const Example2Data& data);

struct Example2Run {
  Example2Data data;
  DualGraph graph;
  PencilReport pencil;
  LogInvariants invariants;
  bool noether = false;
  EulerBoundReport euler;
  BarkResult bark;
  /// K + D = P + N over the components of D and the exceptional classes.
  ZariskiDecomposition zariski;
  Rational P_sq;
  Rational N_sq;
  bool bmy = false;
  std::vector<Discrepancy> discrepancies;
};

Example2Run run_example2();

struct Example3Data {
  long a = 2;
  SurfaceModel model;
  DivisorClass D;
  std::vector<DivisorClass> fixed_candidates;
};

/// Throws InputError for a < 2.
Example3Data example3_data(long a);

struct Example3Run {
  Example3Data data;
  PencilReport pencil;
  /// residual == (2a - 2)(H - E0)
  bool residual_matches = false;
  Rational k_stated;
  std::vector<Discrepancy> discrepancies;
};

Example3Run run_example3(long a);

struct Example4Data {
  Example4Instance inst;
  SurfaceModel model;
  DivisorClass D;
  DivisorClass F;
  DivisorClass M;
};

/// Builds the lattice data; validates 0 <= e <= g.
Example4Data example4_data(const Example4Instance& inst);

struct Example4Run {
  Example4Data data;
  ConstraintReport constraints;
  PencilReport pencil;
  /// (K + D) . M in the lattice.
  Rational adjoint_dot_M;
  /// K + D - M == F
  bool residual_is_F = false;
  std::vector<Discrepancy> discrepancies;
};

Example4Run run_example4(const Example4Instance& inst);

}  // namespace logpair
