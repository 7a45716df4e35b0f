#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flowshop/model.hpp"

namespace flowshop {

enum class Algorithm { Johnson, Gupta, Hybrid, HybridConcat, NehBaseline };

std::string_view to_string(Algorithm algo) noexcept;
// Accepts the canonical ids plus "neh" as a short form of "neh-baseline".
// Throws UnknownAlgorithm.
Algorithm parse_algorithm(std::string_view name);

// Gupta's per-job key: min over adjacent machine pairs of t_k + t_{k+1}.
struct PriorityTable {
  std::vector<Duration> pi;  // indexed by job
};

// Jobs with t_first < t_last go to u; ties and the rest go to v.
struct Partition {
  std::vector<JobIndex> u;
  std::vector<JobIndex> v;
};

// Two-machine aggregate: x = sum of machines 1..m-1, y = sum of machines 2..m.
struct CompositeTimes {
  std::vector<Duration> x;
  std::vector<Duration> y;
};

struct ConditionFlags {
  bool cond1 = false;  // max t_first >= min over intermediate machines
  bool cond2 = false;  // min t_last >= max over intermediate machines
  bool any = false;

  friend bool operator==(const ConditionFlags&, const ConditionFlags&) = default;
};

struct AlgoResult {
  Algorithm algorithm = Algorithm::NehBaseline;
  JobSequence sequence;
  Duration makespan = 0;
  std::optional<ConditionFlags> flags;
  std::vector<std::string> notes;
};

enum class HybridVariant { Insertion, Concatenation };

// One NEH-style insertion decision. costs[p] is the partial makespan of
// placing `job` before partial[p] (p == partial.size() means append).
struct InsertionStep {
  std::vector<JobIndex> partial;
  JobIndex job = 0;
  std::vector<Duration> costs;
  std::size_t chosen = 0;
};

using InsertionObserver = std::function<void(const InsertionStep&)>;

// Throws SingleMachine when m == 1.
Duration pi_value(const Instance& inst, JobIndex job);
PriorityTable priority_table(const Instance& inst);
Partition gupta_partition(const Instance& inst);
AlgoResult gupta_sequence(const Instance& inst);

// Throws NotTwoMachines unless m == 2.
AlgoResult johnson_two_machine(const Instance& inst);

// Throws TooFewMachines when m < 3.
CompositeTimes composite_times(const Instance& inst);
ConditionFlags dominance_conditions(const Instance& inst);
// u ascending by (x, y, id); v descending by y, then ascending id.
Partition hybrid_priority_list(const Instance& inst);

// Order of {a, b} with the smaller two-job makespan; ties keep (a, b).
// Throws InvalidJobs if a == b or either id is out of range.
std::pair<JobIndex, JobIndex> best_pair_order(const Instance& inst, JobIndex a, JobIndex b);

// Inserts `job` at the position minimizing partial makespan; ties pick the
// latest position. Throws DuplicateJob if `job` is already in `partial`.
std::vector<JobIndex> neh_insert_best(const Instance& inst, std::span<const JobIndex> partial,
                                      JobIndex job, const InsertionObserver& observer = {});

// Builds a sequence from an explicit priority list: Concatenation returns it
// unchanged; Insertion orders the first two jobs with best_pair_order and
// inserts every remaining job at its best position.
AlgoResult hybrid_from_priority(const Instance& inst, std::span<const JobIndex> priority,
                                HybridVariant variant, const InsertionObserver& observer = {});

// m >= 3 runs the composite-machine hybrid; m == 2 delegates to Johnson's
// rule and m == 1 returns id order, both with a note.
AlgoResult hybrid_solve(const Instance& inst, HybridVariant variant = HybridVariant::Insertion,
                        const InsertionObserver& observer = {});

// Descending total work (ties by id), then incremental best insertion.
AlgoResult neh_baseline(const Instance& inst, const InsertionObserver& observer = {});

// Dispatches on the algorithm id.
AlgoResult solve(const Instance& inst, Algorithm algo);

namespace kernels {

// Partitions smaller than this are scored serially.
inline constexpr std::size_t kParallelInsertionThreshold = 48;

std::vector<Duration> insertion_costs_serial(const Instance& inst,
                                             std::span<const JobIndex> partial, JobIndex job);
// OpenMP over insertion positions; element-wise identical to the serial result.
std::vector<Duration> insertion_costs_parallel(const Instance& inst,
                                               std::span<const JobIndex> partial, JobIndex job);

}  // namespace kernels

}  // namespace flowshop
