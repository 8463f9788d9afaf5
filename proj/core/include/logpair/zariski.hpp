#pragma once

// Zariski-Fujita decomposition X = P + N relative to a finite set of
// candidate curves. P is certified nef against the candidates only.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "logpair/errors.hpp"
#include "logpair/lattice.hpp"

namespace logpair {

/// The support is not negative definite, or a coefficient went negative.
class NotDecomposable : public InputError {
 public:
  explicit NotDecomposable(const std::string& what) : InputError("not decomposable over candidate set: " + what) {}
};

struct ZariskiDecomposition {
  DivisorClass X;
  DivisorClass P;
  DivisorClass N;
  /// Candidate indices in increasing order.
  std::vector<std::size_t> support;
  /// Parallel to support; all > 0.
  std::vector<Rational> N_coeffs;
  std::size_t rounds = 0;
  std::string scope;
};

ZariskiDecomposition zariski_decompose(const SurfaceModel& model, const DivisorClass& X,
                                       std::span<const DivisorClass> candidates);

struct DecompositionCheck {
  bool sum_ok = false;             // P + N = X
  bool coefficients_ok = false;    // N_coeffs >= 0 and N = sum N_coeffs C_i
  bool negative_definite = false;  // Gram of the support
  bool orthogonal = false;         // P . C_i = 0 on the support
  bool nef_on_candidates = false;  // P . C >= 0 for every candidate
  std::vector<std::string> failures;
  std::string scope;

  bool ok() const { return sum_ok && coefficients_ok && negative_definite && orthogonal && nef_on_candidates; }
};

DecompositionCheck verify_decomposition(const SurfaceModel& model, const ZariskiDecomposition& z,
                                        std::span<const DivisorClass> candidates);

}  // namespace logpair
