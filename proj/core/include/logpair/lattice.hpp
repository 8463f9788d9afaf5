#pragma once

// Intersection theory on Picard lattices of rational surface models.
//
// A PlaneBlowup model with n points has basis (H, E1, ..., En): the total
// transform of a line and the total transforms of the exceptional curves.
// A HirzebruchBlowup model of degree e has basis (D, G, E1, ..., En) where D
// is the positive section (D^2 = e), G the fiber class. A CustomGram model
// carries an explicit base Gram matrix; blown-up points are appended the
// same way. Exceptional classes are ordered by insertion.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logpair/linalg.hpp"
#include "logpair/rational.hpp"

namespace logpair {

enum class ModelKind { PlaneBlowup, HirzebruchBlowup, CustomGram };

struct HodgeData {
  long q = 0;
  long p_g = 0;
  long h11 = 0;
  long euler_e = 0;

  /// e(S) = 2 - 4q + 2p_g + h^{1,1}
  bool satisfies_euler_relation() const { return euler_e == 2 - 4 * q + 2 * p_g + h11; }
  bool is_rational_type() const { return q == 0 && p_g == 0; }

  friend bool operator==(const HodgeData&, const HodgeData&) = default;
};

class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}
  DivisorClass(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {}

  static DivisorClass zero(std::size_t rank) { return DivisorClass(std::vector<Rational>(rank, Rational(0))); }

  std::size_t size() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_integral() const;

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  DivisorClass& operator*=(const Rational& s);

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }
  friend DivisorClass operator*(DivisorClass a, const Rational& s) { return a *= s; }
  friend DivisorClass operator-(DivisorClass a) { return a *= Rational(-1); }
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  std::vector<Rational> coeffs_;
};

class SurfaceModel {
 public:
  static SurfaceModel plane_blowup(std::size_t points);
  static SurfaceModel hirzebruch_blowup(long e, std::size_t points);
  /// An abstract lattice for dual-graph work. `canonical` and `hodge`, when
  /// given, describe the base (before any blow-ups made through this API).
  static SurfaceModel custom(RationalMatrix base_gram, std::optional<DivisorClass> canonical = std::nullopt,
                             std::optional<HodgeData> hodge = std::nullopt);

  ModelKind kind() const { return kind_; }
  long degree_e() const { return e_; }
  std::size_t num_points() const { return points_; }
  std::size_t base_rank() const;
  std::size_t rank() const { return base_rank() + points_; }

  /// Basis index of the exceptional class of point i (0-based insertion order).
  std::size_t exceptional_index(std::size_t point) const;
  DivisorClass basis_vector(std::size_t index) const;
  DivisorClass exceptional(std::size_t point) const { return basis_vector(exceptional_index(point)); }

  Rational gram_entry(std::size_t i, std::size_t j) const;
  RationalMatrix gram() const;

  bool has_canonical() const { return kind_ != ModelKind::CustomGram || base_canonical_.has_value(); }
  const std::optional<DivisorClass>& base_canonical() const { return base_canonical_; }
  std::optional<HodgeData> hodge() const;

  std::vector<std::string> basis_labels() const;

  SurfaceModel with_points(std::size_t points) const;

  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;

 private:
  ModelKind kind_ = ModelKind::PlaneBlowup;
  long e_ = 0;
  std::size_t points_ = 0;
  RationalMatrix base_gram_;
  std::optional<DivisorClass> base_canonical_;
  std::optional<HodgeData> base_hodge_;
};

/// Gram pairing a . b. Throws InputError when a length differs from the rank.
Rational intersect(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& b);
inline Rational self_intersection(const SurfaceModel& model, const DivisorClass& c) { return intersect(model, c, c); }

/// -3H + sum E_i on plane models, -2D + (e-2)G + sum E_i on Hirzebruch models.
/// Throws InputError for a custom model built without a canonical class.
DivisorClass canonical_class(const SurfaceModel& model);

/// p_a(c) = c.(c + K)/2 + 1. Non-integral values are returned as they are.
Rational arithmetic_genus(const SurfaceModel& model, const DivisorClass& c);

/// dH - sum mults[i] E_i; missing trailing multiplicities are zero.
DivisorClass plane_class(const SurfaceModel& model, const Rational& degree, std::span<const Rational> mults);
/// aD + bG - sum mults[i] E_i on a Hirzebruch model.
DivisorClass hirzebruch_class(const SurfaceModel& model, const Rational& a, const Rational& b,
                              std::span<const Rational> mults);
/// sum_i E_i over all blown-up points.
DivisorClass exceptional_sum(const SurfaceModel& model);

/// Total transform on a model with one more point (appends a zero coefficient).
DivisorClass pullback(const DivisorClass& c);

struct BlowUp {
  SurfaceModel model;
  std::vector<DivisorClass> classes;
  std::optional<DivisorClass> canonical;
};

/// Blows up one new point. Each class becomes pullback(c) - mult * E_new; the
/// canonical class becomes pullback(K) + E_new.
BlowUp blow_up(const SurfaceModel& model, std::span<const DivisorClass> classes, std::span<const Rational> mults);

struct Contraction {
  SurfaceModel model;
  std::vector<DivisorClass> classes;
};

/// Contracts the exceptional class of `point` and pushes every class forward by
/// deleting that coordinate. Only basis exceptional classes can be contracted.
Contraction contract_exceptional(const SurfaceModel& model, std::size_t point, std::span<const DivisorClass> classes);

/// The point whose exceptional class equals c, if c is a basis exceptional.
std::optional<std::size_t> basis_exceptional_point(const SurfaceModel& model, const DivisorClass& c);

}  // namespace logpair
