#include "logpair/lattice.hpp"

#include <string>

#include "logpair/errors.hpp"

namespace logpair {

namespace {

void require_rank(const SurfaceModel& model, const DivisorClass& c, const char* what) {
  if (c.size() != model.rank()) {
    throw InputError(std::string(what) + ": class has " + std::to_string(c.size()) +
                     " coefficients but the model rank is " + std::to_string(model.rank()));
  }
}

}  // namespace

bool DivisorClass::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool DivisorClass::is_integral() const {
  for (const auto& c : coeffs_) {
    if (!is_integer(c)) return false;
  }
  return true;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  if (other.size() != size()) throw InputError("adding divisor classes of different lengths");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  if (other.size() != size()) throw InputError("subtracting divisor classes of different lengths");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

SurfaceModel SurfaceModel::plane_blowup(std::size_t points) {
  SurfaceModel m;
  m.kind_ = ModelKind::PlaneBlowup;
  m.points_ = points;
  return m;
}

SurfaceModel SurfaceModel::hirzebruch_blowup(long e, std::size_t points) {
  if (e < 0) throw InputError("Hirzebruch degree must be non-negative, got " + std::to_string(e));
  SurfaceModel m;
  m.kind_ = ModelKind::HirzebruchBlowup;
  m.e_ = e;
  m.points_ = points;
  return m;
}

SurfaceModel SurfaceModel::custom(RationalMatrix base_gram, std::optional<DivisorClass> canonical,
                                  std::optional<HodgeData> hodge) {
  if (!base_gram.is_symmetric()) throw InputError("custom model: Gram matrix must be square and symmetric");
  if (canonical && canonical->size() != base_gram.rows()) {
    throw InputError("custom model: canonical class length does not match the Gram matrix");
  }
  SurfaceModel m;
  m.kind_ = ModelKind::CustomGram;
  m.base_gram_ = std::move(base_gram);
  m.base_canonical_ = std::move(canonical);
  m.base_hodge_ = hodge;
  return m;
}

std::size_t SurfaceModel::base_rank() const {
  switch (kind_) {
    case ModelKind::PlaneBlowup: return 1;
    case ModelKind::HirzebruchBlowup: return 2;
    case ModelKind::CustomGram: return base_gram_.rows();
  }
  return 0;
}

std::size_t SurfaceModel::exceptional_index(std::size_t point) const {
  if (point >= points_) {
    throw InputError("exceptional point " + std::to_string(point) + " out of range (model has " +
                     std::to_string(points_) + " points)");
  }
  return base_rank() + point;
}

DivisorClass SurfaceModel::basis_vector(std::size_t index) const {
  if (index >= rank()) throw InputError("basis index " + std::to_string(index) + " out of range");
  DivisorClass c = DivisorClass::zero(rank());
  c[index] = 1;
  return c;
}

Rational SurfaceModel::gram_entry(std::size_t i, std::size_t j) const {
  const std::size_t base = base_rank();
  if (i >= rank() || j >= rank()) throw InputError("Gram index out of range");
  if (i >= base || j >= base) return (i == j) ? Rational(-1) : Rational(0);
  switch (kind_) {
    case ModelKind::PlaneBlowup: return 1;
    case ModelKind::HirzebruchBlowup:
      if (i == 0 && j == 0) return e_;
      if (i != j) return 1;
      return 0;
    case ModelKind::CustomGram: return base_gram_(i, j);
  }
  return 0;
}

RationalMatrix SurfaceModel::gram() const {
  RationalMatrix g(rank(), rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) g(i, j) = gram_entry(i, j);
  }
  return g;
}

std::optional<HodgeData> SurfaceModel::hodge() const {
  const long n = static_cast<long>(points_);
  switch (kind_) {
    case ModelKind::PlaneBlowup: return HodgeData{0, 0, n + 1, n + 3};
    case ModelKind::HirzebruchBlowup: return HodgeData{0, 0, n + 2, n + 4};
    case ModelKind::CustomGram:
      if (!base_hodge_) return std::nullopt;
      return HodgeData{base_hodge_->q, base_hodge_->p_g, base_hodge_->h11 + n, base_hodge_->euler_e + n};
  }
  return std::nullopt;
}

std::vector<std::string> SurfaceModel::basis_labels() const {
  std::vector<std::string> labels;
  switch (kind_) {
    case ModelKind::PlaneBlowup: labels.push_back("H"); break;
    case ModelKind::HirzebruchBlowup:
      labels.push_back("Dinf");
      labels.push_back("F");
      break;
    case ModelKind::CustomGram:
      for (std::size_t i = 0; i < base_rank(); ++i) labels.push_back("B" + std::to_string(i));
      break;
  }
  for (std::size_t p = 0; p < points_; ++p) labels.push_back("E" + std::to_string(p + 1));
  return labels;
}

SurfaceModel SurfaceModel::with_points(std::size_t points) const {
  SurfaceModel m = *this;
  m.points_ = points;
  return m;
}

Rational intersect(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& b) {
  require_rank(model, a, "intersect");
  require_rank(model, b, "intersect");
  const std::size_t base = model.base_rank();
  Rational total = 0;
  switch (model.kind()) {
    case ModelKind::PlaneBlowup: total = a[0] * b[0]; break;
    case ModelKind::HirzebruchBlowup: total = model.degree_e() * a[0] * b[0] + a[0] * b[1] + a[1] * b[0]; break;
    case ModelKind::CustomGram:
      for (std::size_t i = 0; i < base; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < base; ++j) total += a[i] * model.gram_entry(i, j) * b[j];
      }
      break;
  }
  for (std::size_t i = base; i < model.rank(); ++i) total -= a[i] * b[i];
  return total;
}

DivisorClass canonical_class(const SurfaceModel& model) {
  DivisorClass k = DivisorClass::zero(model.rank());
  switch (model.kind()) {
    case ModelKind::PlaneBlowup: k[0] = -3; break;
    case ModelKind::HirzebruchBlowup:
      k[0] = -2;
      k[1] = model.degree_e() - 2;
      break;
    case ModelKind::CustomGram: {
      const auto base = model.base_canonical();
      if (!base) throw InputError("custom model has no canonical class");
      for (std::size_t i = 0; i < base->size(); ++i) k[i] = (*base)[i];
      break;
    }
  }
  for (std::size_t i = model.base_rank(); i < model.rank(); ++i) k[i] = 1;
  return k;
}

Rational arithmetic_genus(const SurfaceModel& model, const DivisorClass& c) {
  const DivisorClass k = canonical_class(model);
  return intersect(model, c, c + k) / 2 + 1;
}

DivisorClass plane_class(const SurfaceModel& model, const Rational& degree, std::span<const Rational> mults) {
  if (model.kind() != ModelKind::PlaneBlowup) throw InputError("plane_class needs a plane blow-up model");
  if (mults.size() > model.num_points()) throw InputError("more multiplicities than blown-up points");
  DivisorClass c = DivisorClass::zero(model.rank());
  c[0] = degree;
  for (std::size_t i = 0; i < mults.size(); ++i) c[model.exceptional_index(i)] = -mults[i];
  return c;
}

DivisorClass hirzebruch_class(const SurfaceModel& model, const Rational& a, const Rational& b,
                              std::span<const Rational> mults) {
  if (model.kind() != ModelKind::HirzebruchBlowup) throw InputError("hirzebruch_class needs a Hirzebruch model");
  if (mults.size() > model.num_points()) throw InputError("more multiplicities than blown-up points");
  DivisorClass c = DivisorClass::zero(model.rank());
  c[0] = a;
  c[1] = b;
  for (std::size_t i = 0; i < mults.size(); ++i) c[model.exceptional_index(i)] = -mults[i];
  return c;
}

DivisorClass exceptional_sum(const SurfaceModel& model) {
  DivisorClass c = DivisorClass::zero(model.rank());
  for (std::size_t i = model.base_rank(); i < model.rank(); ++i) c[i] = 1;
  return c;
}

DivisorClass pullback(const DivisorClass& c) {
  std::vector<Rational> coeffs = c.coeffs();
  coeffs.emplace_back(0);
  return DivisorClass(std::move(coeffs));
}

BlowUp blow_up(const SurfaceModel& model, std::span<const DivisorClass> classes, std::span<const Rational> mults) {
  if (classes.size() != mults.size()) throw InputError("blow_up: one multiplicity per class is required");
  BlowUp out{model.with_points(model.num_points() + 1), {}, std::nullopt};
  const std::size_t fresh = out.model.rank() - 1;
  out.classes.reserve(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    require_rank(model, classes[i], "blow_up");
    DivisorClass c = pullback(classes[i]);
    c[fresh] = -mults[i];
    out.classes.push_back(std::move(c));
  }
  if (model.has_canonical()) {
    DivisorClass k = pullback(canonical_class(model));
    k[fresh] = 1;
    out.canonical = std::move(k);
  }
  return out;
}

Contraction contract_exceptional(const SurfaceModel& model, std::size_t point, std::span<const DivisorClass> classes) {
  const std::size_t drop = model.exceptional_index(point);
  Contraction out{model.with_points(model.num_points() - 1), {}};
  out.classes.reserve(classes.size());
  for (const auto& c : classes) {
    require_rank(model, c, "contract_exceptional");
    std::vector<Rational> coeffs;
    coeffs.reserve(c.size() - 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i != drop) coeffs.push_back(c[i]);
    }
    out.classes.emplace_back(std::move(coeffs));
  }
  return out;
}

std::optional<std::size_t> basis_exceptional_point(const SurfaceModel& model, const DivisorClass& c) {
  if (c.size() != model.rank()) return std::nullopt;
  for (std::size_t p = 0; p < model.num_points(); ++p) {
    if (c == model.exceptional(p)) return p;
  }
  return std::nullopt;
}

}  // namespace logpair
