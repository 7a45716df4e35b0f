#include "flowshop/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

namespace flowshop {

namespace {

void check_size(const Instance& inst, std::size_t max_jobs) {
  const std::size_t n = inst.n_jobs();
  if (n <= max_jobs) return;
  std::ostringstream msg;
  msg << "instance has " << n << " jobs, " << n << "! = ";
  if (auto f = factorial(n)) {
    msg << *f;
  } else {
    msg.precision(3);
    msg << std::exp(std::lgamma(static_cast<double>(n) + 1.0));
  }
  msg << " permutations; exhaustive search is capped at " << max_jobs << " jobs";
  throw Error(ErrorKind::TooLarge, msg.str());
}

// Permutation of {0..n-1} with lexicographic rank `rank` (factorial number system).
std::vector<JobIndex> unrank(std::size_t n, std::uint64_t rank) {
  std::vector<JobIndex> pool(n);
  std::iota(pool.begin(), pool.end(), JobIndex{0});
  std::vector<JobIndex> out;
  out.reserve(n);
  for (std::size_t i = n; i > 0; --i) {
    const std::uint64_t block = *factorial(i - 1);
    const auto idx = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return out;
}

struct ChunkBest {
  Duration makespan = 0;
  std::vector<JobIndex> sequence;
};

// Scans `count` consecutive permutations starting at `perm`. Strict < keeps the
// first, i.e. lexicographically smallest, optimum of the chunk.
ChunkBest scan(const Instance& inst, std::vector<JobIndex> perm, std::uint64_t count) {
  std::vector<Duration> front(inst.n_machines());
  ChunkBest best{kernels::sequence_makespan(inst, perm, front), perm};
  for (std::uint64_t i = 1; i < count; ++i) {
    std::next_permutation(perm.begin(), perm.end());
    const Duration c = kernels::sequence_makespan(inst, perm, front);
    if (c < best.makespan) {
      best.makespan = c;
      best.sequence = perm;
    }
  }
  return best;
}

constexpr std::uint64_t kChunks = 1024;

}  // namespace

std::optional<std::uint64_t> factorial(std::size_t n) noexcept {
  if (n > 20) return std::nullopt;
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

OptimumResult exhaustive_optimum_serial(const Instance& inst, std::size_t max_jobs) {
  check_size(inst, max_jobs);
  const std::size_t n = inst.n_jobs();
  const std::uint64_t total = *factorial(n);
  ChunkBest best = scan(inst, unrank(n, 0), total);
  return {JobSequence(std::move(best.sequence)), best.makespan, total};
}

OptimumResult exhaustive_optimum(const Instance& inst, std::size_t max_jobs) {
  check_size(inst, max_jobs);
  const std::size_t n = inst.n_jobs();
  const std::uint64_t total = *factorial(n);
  const std::uint64_t chunks = std::min(total, kChunks);
  std::vector<ChunkBest> partial(chunks);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const auto uc = static_cast<std::uint64_t>(c);
    const std::uint64_t lo = total * uc / chunks;
    const std::uint64_t hi = total * (uc + 1) / chunks;
    partial[uc] = scan(inst, unrank(n, lo), hi - lo);
  }

  // Chunks cover increasing rank ranges, so on equal makespan the earlier
  // chunk holds the lexicographically smaller sequence.
  std::size_t winner = 0;
  for (std::size_t c = 1; c < partial.size(); ++c) {
    if (partial[c].makespan < partial[winner].makespan) winner = c;
  }
  return {JobSequence(std::move(partial[winner].sequence)), partial[winner].makespan, total};
}

Ratio makespan_ratio(Duration value, Duration best) {
  if (best == 0) return {1, 1};
  const Duration g = std::gcd(value, best);
  return {value / g, best / g};
}

Ratio heuristic_gap(const AlgoResult& result, const OptimumResult& opt) {
  return makespan_ratio(result.makespan, opt.makespan);
}

}  // namespace flowshop
