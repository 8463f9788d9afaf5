#include "logpair/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

#include "logpair/errors.hpp"

namespace logpair {

void validate(const Example4Instance& inst) {
  if (inst.e < 0 || inst.e > inst.g) {
    throw InputError("example 4 instance needs 0 <= e <= g, got g=" + std::to_string(inst.g) +
                     " e=" + std::to_string(inst.e));
  }
}

ConstraintReport example4_constraints(const Example4Instance& inst) {
  validate(inst);
  const Rational g = inst.g, e = inst.e, x = inst.x, y = inst.y, a = inst.a();
  const Rational pts = inst.points();

  ConstraintReport r;
  r.inst = inst;
  r.D_value = (x + 1) * (y + e * x / 2) + x - 3 * pts;
  r.D = r.D_value > 0;
  r.big_value = (x - 2) * (y + e - 2 + (x - 2) * e / 2) - pts / 2;
  r.big = r.big_value > 0;
  r.effective_value = (x - 3) * (y + e - a - 1 + (x - 4) * e / 2);
  r.effective = r.effective_value > 0;
  r.fixed_value = (x - 4) * (x - 2) + (x - 2) * (y + e - a - 2) + (x - 4) * (y + e - 2);
  r.fixed = r.fixed_value < 0;
  r.fixed_lattice_value = (x - 4) * (x - 2) * e + (x - 2) * (y + e - a - 2) + (x - 4) * (y + e - 2);
  r.fixed_lattice = r.fixed_lattice_value < 0;
  r.k = x * (g + 1 + e) + 2 * y - 8 * g - 8;
  return r;
}

IntervalRow example4_interval(long g) {
  IntervalRow row;
  row.g = g;
  row.lower_D = ratio(12 * g - 5, 36);
  row.lower_D_alt = ratio(12 * g - 13, 36);
  row.lower_big = ratio(g + 4, 12);
  row.lower_effective = ratio(g + 1, 4);
  row.upper_fixed = ratio(3 * g - 4, 8);
  row.ordering_holds = row.upper_fixed > row.lower_D_alt && row.lower_D_alt > row.lower_effective &&
                       row.lower_effective > row.lower_big;

  row.reductions_match = true;
  for (long e = 0; e <= g; ++e) {
    const auto c = example4_constraints({g, e, 8, 1});
    const bool match = c.D == (e > row.lower_D) && c.big == (e > row.lower_big) &&
                       c.effective == (e > row.lower_effective) && c.fixed == (e < row.upper_fixed);
    row.reductions_match = row.reductions_match && match;
    if (c.feasible()) row.feasible_e.push_back(e);
  }
  for (long e = 0; e <= g; ++e) {
    if (e > row.lower_D_alt && e < row.upper_fixed) row.alt_interval_e.push_back(e);
  }
  return row;
}

unsigned search_thread_count() {
  if (const char* env = std::getenv("LOGPAIR_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SearchResult example4_search(IntRange g_range, IntRange x_range, IntRange y_range, std::optional<IntRange> e_range,
                             unsigned threads) {
  if (g_range.size() == 0 || x_range.size() == 0 || y_range.size() == 0 || (e_range && e_range->size() == 0)) {
    throw InputError("example4_search: empty range");
  }
  if (g_range.lo < 0) throw InputError("example4_search: g must be non-negative");

  // One task per (g, e); each produces its x, y rows in order.
  std::vector<std::pair<long, long>> tasks;
  for (long g = g_range.lo; g <= g_range.hi; ++g) {
    const long lo = e_range ? std::max(0L, e_range->lo) : 0;
    const long hi = e_range ? std::min(g, e_range->hi) : g;
    for (long e = lo; e <= hi; ++e) tasks.emplace_back(g, e);
  }

  SearchResult result;
  const unsigned n_threads = std::max(1u, std::min<unsigned>(threads ? threads : search_thread_count(),
                                                             static_cast<unsigned>(std::max<std::size_t>(1, tasks.size()))));
  result.threads_used = n_threads;
  std::vector<std::vector<ConstraintReport>> chunks(n_threads);
  auto work = [&](unsigned t) {
    const std::size_t begin = tasks.size() * t / n_threads;
    const std::size_t end = tasks.size() * (t + 1) / n_threads;
    auto& out = chunks[t];
    for (std::size_t i = begin; i < end; ++i) {
      for (long x = x_range.lo; x <= x_range.hi; ++x) {
        for (long y = y_range.lo; y <= y_range.hi; ++y) {
          out.push_back(example4_constraints({tasks[i].first, tasks[i].second, x, y}));
        }
      }
    }
  };
  if (n_threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (auto& c : chunks) {
    for (auto& r : c) {
      if (r.feasible()) ++result.feasible_count;
      if (r.feasible_lattice()) ++result.feasible_lattice_count;
      result.rows.push_back(std::move(r));
    }
  }

  for (long g = g_range.lo; g <= g_range.hi; ++g) {
    result.interval.push_back(example4_interval(g));
    const auto& row = result.interval.back();
    if (g >= 27 && row.alt_interval_e.empty()) result.alt_interval_gaps.push_back(g);
    if (g >= 27 && row.feasible_e.empty()) result.exact_gaps.push_back(g);
  }
  return result;
}

}  // namespace logpair
