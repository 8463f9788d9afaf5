#pragma once

// Adjoint linear systems |K + D| on rational models: dimension lower bounds,
// bigness, extraction of fixed parts from a supplied candidate list, and
// detection of a pencil K + D = n F + Z with F^2 = 0.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logpair/lattice.hpp"

namespace logpair {

/// d(d+3)/2 - sum nu_i(nu_i+1)/2 for plane curves of degree d with the given
/// multiplicities.
Rational dim_lower_bound_p2(long d, std::span<const long> mults);
/// d^2 - sum nu_i^2 > 0.
bool is_big_p2(long d, std::span<const long> mults);

/// (a+1)(b + ae/2) + a - sum nu_i(nu_i+1)/2 for a D + b G on a degree-e
/// Hirzebruch surface.
Rational dim_lower_bound_hirzebruch(const Rational& a, const Rational& b, long e, std::span<const long> mults);
/// a(b + ae/2) - sum nu_i^2 / 2 > 0.
bool is_big_hirzebruch(const Rational& a, const Rational& b, long e, std::span<const long> mults);

struct BignessWitness {
  bool big = false;
  /// d^2 - sum nu^2 on plane models, a(b + ae/2) - sum nu^2 / 2 on Hirzebruch
  /// models, c^2 on custom lattices.
  Rational value;
  std::string formula;
};

BignessWitness bigness(const SurfaceModel& model, const DivisorClass& c);

/// Dimension lower bound for |c|, when c is integral with integral base
/// coefficients on a plane or Hirzebruch model.
std::optional<Rational> expected_dimension(const SurfaceModel& model, const DivisorClass& c);

struct FixedPart {
  std::size_t candidate = 0;
  DivisorClass G;
  /// (current adjoint class) . G at the moment G was removed.
  Rational pairing;
  Rational G_sq;
  std::optional<Rational> expected_dim;
};

struct PencilReport {
  DivisorClass D;
  DivisorClass adjoint;
  BignessWitness big;
  std::vector<FixedPart> fixed_parts;
  DivisorClass residual;
  Rational residual_sq;
  bool pencil_detected = false;
  std::string reason;
  DivisorClass F;
  long n = 0;
  Rational F_sq;
  Rational fiber_genus;
  long base_genus = 0;
  Rational k;
  std::vector<std::string> notes;
};

/// Strips fixed parts from K + D: while some candidate G with G^2 < 0 has
/// (current) . G < 0, subtract G. Then tests the residual for the shape n F
/// with F primitive, F^2 = 0. Candidates are trusted to be effective.
/// Throws InputError after 1000 extractions.
PencilReport analyze_adjoint_system(const SurfaceModel& model, const DivisorClass& D,
                                    std::span<const DivisorClass> fixed_candidates);

}  // namespace logpair
