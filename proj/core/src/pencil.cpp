#include "logpair/pencil.hpp"

#include "logpair/errors.hpp"

namespace logpair {

namespace {

constexpr int kMaxExtractions = 1000;

Rational half_sum_nu_nu1(std::span<const long> mults) {
  Rational s = 0;
  for (long v : mults) s += Rational(v) * (v + 1);
  return s / 2;
}

Rational sum_sq(std::span<const long> mults) {
  Rational s = 0;
  for (long v : mults) s += Rational(v) * v;
  return s;
}

// Multiplicities nu_i = -coefficient of E_i, if all are integers.
std::optional<std::vector<long>> point_mults(const SurfaceModel& model, const DivisorClass& c) {
  std::vector<long> out;
  for (std::size_t p = 0; p < model.num_points(); ++p) {
    const Rational& v = c[model.exceptional_index(p)];
    if (!is_integer(v)) return std::nullopt;
    out.push_back(-to_long(v));
  }
  return out;
}

}  // namespace

Rational dim_lower_bound_p2(long d, std::span<const long> mults) {
  return Rational(d) * (d + 3) / 2 - half_sum_nu_nu1(mults);
}

bool is_big_p2(long d, std::span<const long> mults) { return Rational(d) * d - sum_sq(mults) > 0; }

Rational dim_lower_bound_hirzebruch(const Rational& a, const Rational& b, long e, std::span<const long> mults) {
  return (a + 1) * (b + a * e / 2) + a - half_sum_nu_nu1(mults);
}

bool is_big_hirzebruch(const Rational& a, const Rational& b, long e, std::span<const long> mults) {
  return a * (b + a * e / 2) - sum_sq(mults) / 2 > 0;
}

BignessWitness bigness(const SurfaceModel& model, const DivisorClass& c) {
  BignessWitness w;
  const auto mults = point_mults(model, c);
  switch (model.kind()) {
    case ModelKind::PlaneBlowup:
      if (mults && is_integer(c[0])) {
        const long d = to_long(c[0]);
        w.value = Rational(d) * d - sum_sq(*mults);
        w.big = is_big_p2(d, *mults);
        w.formula = "d^2 - sum nu_i^2";
        return w;
      }
      break;
    case ModelKind::HirzebruchBlowup:
      if (mults) {
        w.value = c[0] * (c[1] + c[0] * model.degree_e() / 2) - sum_sq(*mults) / 2;
        w.big = is_big_hirzebruch(c[0], c[1], model.degree_e(), *mults);
        w.formula = "a(b + ae/2) - sum nu_i^2 / 2";
        return w;
      }
      break;
    case ModelKind::CustomGram:
      break;
  }
  w.value = self_intersection(model, c);
  w.big = w.value > 0;
  w.formula = "c^2 (positive square only; effectivity assumed)";
  return w;
}

std::optional<Rational> expected_dimension(const SurfaceModel& model, const DivisorClass& c) {
  const auto mults = point_mults(model, c);
  if (!mults) return std::nullopt;
  switch (model.kind()) {
    case ModelKind::PlaneBlowup:
      if (!is_integer(c[0])) return std::nullopt;
      return dim_lower_bound_p2(to_long(c[0]), *mults);
    case ModelKind::HirzebruchBlowup:
      return dim_lower_bound_hirzebruch(c[0], c[1], model.degree_e(), *mults);
    case ModelKind::CustomGram:
      return std::nullopt;
  }
  return std::nullopt;
}

PencilReport analyze_adjoint_system(const SurfaceModel& model, const DivisorClass& D,
                                    std::span<const DivisorClass> fixed_candidates) {
  if (D.size() != model.rank()) throw InputError("analyze_adjoint_system: divisor does not match the model rank");
  for (const auto& c : fixed_candidates) {
    if (c.size() != model.rank()) throw InputError("analyze_adjoint_system: candidate does not match the model rank");
  }

  PencilReport rep;
  rep.D = D;
  rep.adjoint = canonical_class(model) + D;
  rep.big = bigness(model, rep.adjoint);
  rep.notes.push_back("fixed-part candidates are taken as effective; their systems are not checked");

  DivisorClass current = rep.adjoint;
  for (int step = 0;; ++step) {
    if (step >= kMaxExtractions) throw InputError("analyze_adjoint_system: more than 1000 fixed-part extractions");
    bool extracted = false;
    for (std::size_t i = 0; i < fixed_candidates.size(); ++i) {
      const DivisorClass& G = fixed_candidates[i];
      const Rational pairing = intersect(model, current, G);
      if (pairing >= 0) continue;
      const Rational g_sq = self_intersection(model, G);
      if (g_sq >= 0) continue;  // removing G would not raise current . G
      rep.fixed_parts.push_back({i, G, pairing, g_sq, expected_dimension(model, G)});
      current -= G;
      extracted = true;
      break;
    }
    if (!extracted) break;
  }

  rep.residual = current;
  rep.residual_sq = self_intersection(model, current);

  if (model.kind() == ModelKind::CustomGram) {
    const auto h = model.hodge();
    if (!h || h->q != 0) rep.notes.push_back("base genus 0 assumed: the model does not certify q = 0");
  }
  rep.base_genus = 0;

  if (!current.is_integral()) {
    rep.reason = "residual is not integral";
    return rep;
  }
  Integer content = 0;
  for (const auto& v : current.coeffs()) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_num_mpz_t());
  }
  if (content == 0) {
    rep.reason = "residual is zero";
    return rep;
  }
  rep.n = content.get_si();
  rep.F = Rational(1) / Rational(content) * current;
  rep.F_sq = self_intersection(model, rep.F);
  if (rep.F_sq != 0) {
    rep.reason = "residual has square " + to_string(rep.residual_sq) + ", not a multiple of a square-zero class";
    return rep;
  }
  if (model.kind() != ModelKind::CustomGram) {
    DivisorClass ample = model.basis_vector(0);
    if (model.kind() == ModelKind::HirzebruchBlowup) ample += model.basis_vector(1);
    if (intersect(model, rep.F, ample) <= 0) {
      rep.reason = "residual is not effective on the base surface";
      return rep;
    }
  }
  rep.pencil_detected = true;
  rep.fiber_genus = arithmetic_genus(model, rep.F);
  rep.k = intersect(model, D, rep.F);
  return rep;
}

}  // namespace logpair
