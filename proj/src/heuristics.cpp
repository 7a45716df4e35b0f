#include "flowshop/heuristics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace flowshop {

namespace {

void require_machines_for_gupta(const Instance& inst) {
  if (inst.n_machines() < 2) {
    throw Error(ErrorKind::SingleMachine, "needs at least two machines");
  }
}

void require_composite(const Instance& inst) {
  if (inst.n_machines() < 3) {
    throw Error(ErrorKind::TooFewMachines, "composite machines need at least three machines, got " +
                                               std::to_string(inst.n_machines()));
  }
}

AlgoResult finish(const Instance& inst, Algorithm algo, std::vector<JobIndex> order) {
  AlgoResult r;
  r.algorithm = algo;
  r.sequence = JobSequence(std::move(order));
  r.makespan = makespan(inst, r.sequence);
  return r;
}

}  // namespace

std::string_view to_string(Algorithm algo) noexcept {
  switch (algo) {
    case Algorithm::Johnson: return "johnson";
    case Algorithm::Gupta: return "gupta";
    case Algorithm::Hybrid: return "hybrid";
    case Algorithm::HybridConcat: return "hybrid-concat";
    case Algorithm::NehBaseline: return "neh-baseline";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "johnson") return Algorithm::Johnson;
  if (name == "gupta") return Algorithm::Gupta;
  if (name == "hybrid") return Algorithm::Hybrid;
  if (name == "hybrid-concat") return Algorithm::HybridConcat;
  if (name == "neh" || name == "neh-baseline") return Algorithm::NehBaseline;
  throw Error(ErrorKind::UnknownAlgorithm, "unknown algorithm '" + std::string(name) + "'");
}

// Gupta

Duration pi_value(const Instance& inst, JobIndex job) {
  require_machines_for_gupta(inst);
  auto r = inst.row(job);
  Duration best = std::numeric_limits<Duration>::max();
  for (std::size_t k = 0; k + 1 < r.size(); ++k) best = std::min(best, r[k] + r[k + 1]);
  return best;
}

PriorityTable priority_table(const Instance& inst) {
  PriorityTable t;
  t.pi.reserve(inst.n_jobs());
  for (JobIndex j = 0; j < inst.n_jobs(); ++j) t.pi.push_back(pi_value(inst, j));
  return t;
}

Partition gupta_partition(const Instance& inst) {
  require_machines_for_gupta(inst);
  const MachineIndex last = inst.n_machines() - 1;
  Partition p;
  for (JobIndex j = 0; j < inst.n_jobs(); ++j) {
    (inst.time(j, 0) < inst.time(j, last) ? p.u : p.v).push_back(j);
  }
  return p;
}

AlgoResult gupta_sequence(const Instance& inst) {
  Partition p = gupta_partition(inst);
  const PriorityTable t = priority_table(inst);
  std::stable_sort(p.u.begin(), p.u.end(),
                   [&](JobIndex a, JobIndex b) { return t.pi[a] < t.pi[b]; });
  std::stable_sort(p.v.begin(), p.v.end(),
                   [&](JobIndex a, JobIndex b) { return t.pi[a] > t.pi[b]; });
  std::vector<JobIndex> order = std::move(p.u);
  order.insert(order.end(), p.v.begin(), p.v.end());
  return finish(inst, Algorithm::Gupta, std::move(order));
}

// Johnson

AlgoResult johnson_two_machine(const Instance& inst) {
  if (inst.n_machines() != 2) {
    throw Error(ErrorKind::NotTwoMachines,
                "Johnson's rule needs exactly 2 machines, got " + std::to_string(inst.n_machines()));
  }
  std::vector<JobIndex> first, second;
  for (JobIndex j = 0; j < inst.n_jobs(); ++j) {
    (inst.time(j, 0) < inst.time(j, 1) ? first : second).push_back(j);
  }
  std::stable_sort(first.begin(), first.end(),
                   [&](JobIndex a, JobIndex b) { return inst.time(a, 0) < inst.time(b, 0); });
  std::stable_sort(second.begin(), second.end(),
                   [&](JobIndex a, JobIndex b) { return inst.time(a, 1) > inst.time(b, 1); });
  first.insert(first.end(), second.begin(), second.end());
  return finish(inst, Algorithm::Johnson, std::move(first));
}

// Composite-machine hybrid

CompositeTimes composite_times(const Instance& inst) {
  require_composite(inst);
  const std::size_t m = inst.n_machines();
  CompositeTimes c;
  c.x.reserve(inst.n_jobs());
  c.y.reserve(inst.n_jobs());
  for (JobIndex j = 0; j < inst.n_jobs(); ++j) {
    auto r = inst.row(j);
    c.x.push_back(std::accumulate(r.begin(), r.begin() + (m - 1), Duration{0}));
    c.y.push_back(std::accumulate(r.begin() + 1, r.end(), Duration{0}));
  }
  return c;
}

ConditionFlags dominance_conditions(const Instance& inst) {
  require_composite(inst);
  const std::size_t m = inst.n_machines();
  Duration max_first = std::numeric_limits<Duration>::min();
  Duration min_last = std::numeric_limits<Duration>::max();
  Duration min_mid = std::numeric_limits<Duration>::max();
  Duration max_mid = std::numeric_limits<Duration>::min();
  for (JobIndex j = 0; j < inst.n_jobs(); ++j) {
    max_first = std::max(max_first, inst.time(j, 0));
    min_last = std::min(min_last, inst.time(j, m - 1));
    for (MachineIndex k = 1; k + 1 < m; ++k) {
      min_mid = std::min(min_mid, inst.time(j, k));
      max_mid = std::max(max_mid, inst.time(j, k));
    }
  }
  ConditionFlags f;
  f.cond1 = max_first >= min_mid;
  f.cond2 = min_last >= max_mid;
  f.any = f.cond1 || f.cond2;
  return f;
}

Partition hybrid_priority_list(const Instance& inst) {
  const CompositeTimes c = composite_times(inst);
  Partition p;
  for (JobIndex j = 0; j < inst.n_jobs(); ++j) (c.x[j] < c.y[j] ? p.u : p.v).push_back(j);
  std::stable_sort(p.u.begin(), p.u.end(), [&](JobIndex a, JobIndex b) {
    return std::pair(c.x[a], c.y[a]) < std::pair(c.x[b], c.y[b]);
  });
  std::stable_sort(p.v.begin(), p.v.end(), [&](JobIndex a, JobIndex b) { return c.y[a] > c.y[b]; });
  return p;
}

// Insertion

std::pair<JobIndex, JobIndex> best_pair_order(const Instance& inst, JobIndex a, JobIndex b) {
  if (a == b || a >= inst.n_jobs() || b >= inst.n_jobs()) {
    throw Error(ErrorKind::InvalidJobs, "need two distinct valid jobs, got " +
                                            std::to_string(a + 1) + " and " + std::to_string(b + 1));
  }
  const JobIndex ab[] = {a, b};
  const JobIndex ba[] = {b, a};
  if (partial_makespan(inst, ba) < partial_makespan(inst, ab)) return {b, a};
  return {a, b};
}

namespace kernels {

std::vector<Duration> insertion_costs_serial(const Instance& inst,
                                             std::span<const JobIndex> partial, JobIndex job) {
  const std::size_t k = partial.size();
  std::vector<Duration> costs(k + 1);
  std::vector<JobIndex> candidate(k + 1);
  std::vector<Duration> front(inst.n_machines());
  for (std::size_t pos = 0; pos <= k; ++pos) {
    std::copy(partial.begin(), partial.begin() + pos, candidate.begin());
    candidate[pos] = job;
    std::copy(partial.begin() + pos, partial.end(), candidate.begin() + pos + 1);
    costs[pos] = sequence_makespan(inst, candidate, front);
  }
  return costs;
}

std::vector<Duration> insertion_costs_parallel(const Instance& inst,
                                               std::span<const JobIndex> partial, JobIndex job) {
  const std::ptrdiff_t k = static_cast<std::ptrdiff_t>(partial.size());
  std::vector<Duration> costs(partial.size() + 1);
#pragma omp parallel
  {
    std::vector<JobIndex> candidate(partial.size() + 1);
    std::vector<Duration> front(inst.n_machines());
#pragma omp for schedule(static)
    for (std::ptrdiff_t pos = 0; pos <= k; ++pos) {
      std::copy(partial.begin(), partial.begin() + pos, candidate.begin());
      candidate[pos] = job;
      std::copy(partial.begin() + pos, partial.end(), candidate.begin() + pos + 1);
      costs[pos] = sequence_makespan(inst, candidate, front);
    }
  }
  return costs;
}

}  // namespace kernels

std::vector<JobIndex> neh_insert_best(const Instance& inst, std::span<const JobIndex> partial,
                                      JobIndex job, const InsertionObserver& observer) {
  if (job >= inst.n_jobs()) {
    throw Error(ErrorKind::InvalidJobs, "job id " + std::to_string(job + 1) + " out of range");
  }
  if (std::find(partial.begin(), partial.end(), job) != partial.end()) {
    throw Error(ErrorKind::DuplicateJob, "job " + std::to_string(job + 1) + " already placed");
  }
  // Validates the partial list itself (range and duplicates).
  (void)partial_makespan(inst, partial);

  std::vector<Duration> costs = partial.size() < kernels::kParallelInsertionThreshold
                                    ? kernels::insertion_costs_serial(inst, partial, job)
                                    : kernels::insertion_costs_parallel(inst, partial, job);
  // Ties go to the latest position, so an inserted job never jumps ahead of
  // an equally good earlier choice (matches best_pair_order's tie rule).
  std::size_t chosen = 0;
  for (std::size_t p = 1; p < costs.size(); ++p) {
    if (costs[p] <= costs[chosen]) chosen = p;
  }

  std::vector<JobIndex> out(partial.begin(), partial.end());
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(chosen), job);
  if (observer) {
    observer(InsertionStep{std::vector<JobIndex>(partial.begin(), partial.end()), job,
                           std::move(costs), chosen});
  }
  return out;
}

AlgoResult hybrid_from_priority(const Instance& inst, std::span<const JobIndex> priority,
                                HybridVariant variant, const InsertionObserver& observer) {
  if (!JobSequence(std::vector<JobIndex>(priority.begin(), priority.end()))
           .is_permutation_of(inst.n_jobs())) {
    throw Error(ErrorKind::InvalidPermutation, "priority list is not a permutation of the jobs");
  }
  const Algorithm algo =
      variant == HybridVariant::Insertion ? Algorithm::Hybrid : Algorithm::HybridConcat;
  if (variant == HybridVariant::Concatenation || priority.size() < 2) {
    return finish(inst, algo, std::vector<JobIndex>(priority.begin(), priority.end()));
  }
  auto [first, second] = best_pair_order(inst, priority[0], priority[1]);
  std::vector<JobIndex> partial{first, second};
  for (std::size_t k = 2; k < priority.size(); ++k) {
    partial = neh_insert_best(inst, partial, priority[k], observer);
  }
  return finish(inst, algo, std::move(partial));
}

AlgoResult hybrid_solve(const Instance& inst, HybridVariant variant,
                        const InsertionObserver& observer) {
  const Algorithm algo =
      variant == HybridVariant::Insertion ? Algorithm::Hybrid : Algorithm::HybridConcat;
  if (inst.n_machines() == 1) {
    std::vector<JobIndex> order(inst.n_jobs());
    std::iota(order.begin(), order.end(), JobIndex{0});
    AlgoResult r = finish(inst, algo, std::move(order));
    r.notes.push_back("single machine: every order has the same makespan, returned id order");
    return r;
  }
  if (inst.n_machines() == 2) {
    AlgoResult r = johnson_two_machine(inst);
    r.algorithm = algo;
    r.notes.push_back("two machines: delegated to Johnson's rule");
    return r;
  }

  const ConditionFlags flags = dominance_conditions(inst);
  Partition p = hybrid_priority_list(inst);
  std::vector<JobIndex> priority = std::move(p.u);
  priority.insert(priority.end(), p.v.begin(), p.v.end());

  AlgoResult r = hybrid_from_priority(inst, priority, variant, observer);
  r.flags = flags;
  if (!flags.any) {
    r.notes.push_back(
        "neither dominance condition holds; the composite two-machine reduction is not justified "
        "for this instance");
  }
  return r;
}

AlgoResult neh_baseline(const Instance& inst, const InsertionObserver& observer) {
  std::vector<JobIndex> order(inst.n_jobs());
  std::iota(order.begin(), order.end(), JobIndex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](JobIndex a, JobIndex b) { return inst.row_sum(a) > inst.row_sum(b); });
  std::vector<JobIndex> partial;
  partial.reserve(order.size());
  for (JobIndex job : order) partial = neh_insert_best(inst, partial, job, observer);
  return finish(inst, Algorithm::NehBaseline, std::move(partial));
}

AlgoResult solve(const Instance& inst, Algorithm algo) {
  switch (algo) {
    case Algorithm::Johnson: return johnson_two_machine(inst);
    case Algorithm::Gupta: return gupta_sequence(inst);
    case Algorithm::Hybrid: return hybrid_solve(inst, HybridVariant::Insertion);
    case Algorithm::HybridConcat: return hybrid_solve(inst, HybridVariant::Concatenation);
    case Algorithm::NehBaseline: return neh_baseline(inst);
  }
  throw Error(ErrorKind::UnknownAlgorithm, "unhandled algorithm");
}

}  // namespace flowshop
