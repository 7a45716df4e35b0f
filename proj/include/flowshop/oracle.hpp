#pragma once

#include <cstdint>
#include <optional>

#include "flowshop/heuristics.hpp"
#include "flowshop/model.hpp"

namespace flowshop {

inline constexpr std::size_t kDefaultMaxJobs = 10;

struct OptimumResult {
  JobSequence sequence;  // lexicographically smallest optimal permutation
  Duration makespan = 0;
  std::uint64_t explored = 0;
};

// Exact rational, always reduced; den > 0.
struct Ratio {
  Duration num = 1;
  Duration den = 1;

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

// n! when it fits in 64 bits (n <= 20).
std::optional<std::uint64_t> factorial(std::size_t n) noexcept;

// Evaluates all n! permutations. Throws TooLarge when n > max_jobs.
// Partitioned across OpenMP threads; the result does not depend on the
// thread count.
OptimumResult exhaustive_optimum(const Instance& inst, std::size_t max_jobs = kDefaultMaxJobs);

// Single-threaded reference enumeration in lexicographic order.
OptimumResult exhaustive_optimum_serial(const Instance& inst,
                                        std::size_t max_jobs = kDefaultMaxJobs);

// result.makespan / opt.makespan; 1 when the optimum is zero.
Ratio heuristic_gap(const AlgoResult& result, const OptimumResult& opt);
Ratio makespan_ratio(Duration value, Duration best);

}  // namespace flowshop
