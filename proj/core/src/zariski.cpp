#include "logpair/zariski.hpp"

#include <algorithm>

#include "logpair/linalg.hpp"

namespace logpair {

namespace {

const char* const kScope = "P is certified nef against the supplied candidate curves only";

RationalMatrix support_gram(const SurfaceModel& model, std::span<const DivisorClass> candidates,
                            const std::vector<std::size_t>& support) {
  RationalMatrix g(support.size(), support.size());
  for (std::size_t i = 0; i < support.size(); ++i) {
    for (std::size_t j = 0; j < support.size(); ++j) {
      g(i, j) = intersect(model, candidates[support[i]], candidates[support[j]]);
    }
  }
  return g;
}

}  // namespace

ZariskiDecomposition zariski_decompose(const SurfaceModel& model, const DivisorClass& X,
                                       std::span<const DivisorClass> candidates) {
  if (X.size() != model.rank()) throw InputError("zariski_decompose: class does not match the model rank");
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i].size() != model.rank()) {
      throw InputError("zariski_decompose: candidate " + std::to_string(i) + " does not match the model rank");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (candidates[i] == candidates[j]) {
        throw InputError("zariski_decompose: candidates " + std::to_string(j) + " and " + std::to_string(i) +
                         " are equal");
      }
    }
  }

  ZariskiDecomposition z{X, X, DivisorClass::zero(model.rank()), {}, {}, 0, kScope};
  std::vector<std::size_t> support;
  const std::size_t max_rounds = candidates.size() + 1;

  for (;;) {
    std::vector<std::size_t> fresh;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (std::binary_search(support.begin(), support.end(), i)) continue;
      if (intersect(model, z.P, candidates[i]) < 0) fresh.push_back(i);
    }
    if (fresh.empty()) break;
    if (++z.rounds > max_rounds) throw InternalError("zariski_decompose: fixpoint did not converge");
    support.insert(support.end(), fresh.begin(), fresh.end());
    std::sort(support.begin(), support.end());

    const RationalMatrix gram = support_gram(model, candidates, support);
    if (!is_negative_definite(gram)) throw NotDecomposable("support Gram matrix is not negative definite");
    std::vector<Rational> rhs;
    rhs.reserve(support.size());
    for (auto i : support) rhs.push_back(intersect(model, X, candidates[i]));
    // (X - sum a_i C_i) . C_j = 0  <=>  G a = (X . C_j).
    const auto a = solve(gram, rhs);
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] < 0) {
        throw NotDecomposable("candidate " + std::to_string(support[k]) + " would get coefficient " + to_string(a[k]));
      }
    }

    z.N = DivisorClass::zero(model.rank());
    z.support.clear();
    z.N_coeffs.clear();
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] == 0) continue;
      z.N += a[k] * candidates[support[k]];
      z.support.push_back(support[k]);
      z.N_coeffs.push_back(a[k]);
    }
    z.P = X - z.N;
  }
  return z;
}

DecompositionCheck verify_decomposition(const SurfaceModel& model, const ZariskiDecomposition& z,
                                        std::span<const DivisorClass> candidates) {
  DecompositionCheck c;
  c.scope = kScope;
  const std::size_t rank = model.rank();
  if (z.X.size() != rank || z.P.size() != rank || z.N.size() != rank) {
    c.failures.push_back("class lengths do not match the model rank");
    return c;
  }

  c.sum_ok = z.P + z.N == z.X;
  if (!c.sum_ok) c.failures.push_back("P + N differs from X");

  bool indices_ok = z.support.size() == z.N_coeffs.size();
  for (auto i : z.support) indices_ok = indices_ok && i < candidates.size();
  if (!indices_ok) {
    c.failures.push_back("support indices are inconsistent with the candidate list");
    return c;
  }

  DivisorClass rebuilt = DivisorClass::zero(rank);
  c.coefficients_ok = true;
  for (std::size_t k = 0; k < z.support.size(); ++k) {
    if (z.N_coeffs[k] < 0) c.coefficients_ok = false;
    rebuilt += z.N_coeffs[k] * candidates[z.support[k]];
  }
  if (rebuilt != z.N) c.coefficients_ok = false;
  if (!c.coefficients_ok) c.failures.push_back("N is not the non-negative combination its coefficients describe");

  c.negative_definite = is_negative_definite(support_gram(model, candidates, z.support));
  if (!c.negative_definite) c.failures.push_back("support Gram matrix is not negative definite");

  c.orthogonal = true;
  for (auto i : z.support) {
    const Rational p = intersect(model, z.P, candidates[i]);
    if (p != 0) {
      c.orthogonal = false;
      c.failures.push_back("P . C" + std::to_string(i) + " = " + to_string(p) + " on the support");
    }
  }

  c.nef_on_candidates = true;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Rational p = intersect(model, z.P, candidates[i]);
    if (p < 0) {
      c.nef_on_candidates = false;
      c.failures.push_back("P . C" + std::to_string(i) + " = " + to_string(p) + " < 0");
    }
  }
  return c;
}

}  // namespace logpair
