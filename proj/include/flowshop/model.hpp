#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "flowshop/error.hpp"

namespace flowshop {

using Duration = std::int64_t;
// Job and machine indices are 0-based in the library. External formats
// (text, JSON, CSV, CLI) use 1-based ids.
using JobIndex = std::size_t;
using MachineIndex = std::size_t;

// Immutable n x m matrix of processing times, row = job, column = machine.
// Only constructible through validate_instance().
class Instance {
 public:
  std::size_t n_jobs() const noexcept { return n_jobs_; }
  std::size_t n_machines() const noexcept { return n_machines_; }

  Duration time(JobIndex job, MachineIndex machine) const noexcept {
    return times_[job * n_machines_ + machine];
  }
  std::span<const Duration> row(JobIndex job) const noexcept {
    return {times_.data() + job * n_machines_, n_machines_};
  }
  Duration row_sum(JobIndex job) const noexcept;

  std::vector<std::vector<Duration>> to_rows() const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  friend Instance validate_instance(const std::vector<std::vector<Duration>>&);
  Instance(std::size_t n, std::size_t m, std::vector<Duration> times)
      : n_jobs_(n), n_machines_(m), times_(std::move(times)) {}

  std::size_t n_jobs_;
  std::size_t n_machines_;
  std::vector<Duration> times_;
};

// A permutation of {0..n-1}: the single processing order used on every
// machine. Validity against a particular instance is checked by the
// operations that consume it.
class JobSequence {
 public:
  JobSequence() = default;
  explicit JobSequence(std::vector<JobIndex> order) : order_(std::move(order)) {}

  static JobSequence identity(std::size_t n);
  // Builds from 1-based ids such as {1, 2, 5, 7, 4, 3, 6}.
  static JobSequence from_ids(std::span<const std::size_t> ids);
  static JobSequence from_ids(std::initializer_list<std::size_t> ids);

  std::size_t size() const noexcept { return order_.size(); }
  JobIndex operator[](std::size_t pos) const noexcept { return order_[pos]; }
  std::span<const JobIndex> jobs() const noexcept { return order_; }
  std::vector<std::size_t> ids() const;

  JobSequence reversed() const;
  bool is_permutation_of(std::size_t n_jobs) const;

  friend bool operator==(const JobSequence&, const JobSequence&) = default;

 private:
  std::vector<JobIndex> order_;
};

// Semi-active schedule: every operation starts as soon as both its machine
// and its job predecessor are done. Matrices are indexed (position, machine).
struct Schedule {
  JobSequence sequence;
  std::size_t n_machines = 0;
  std::vector<Duration> start;
  std::vector<Duration> completion;
  Duration makespan = 0;

  Duration start_at(std::size_t pos, MachineIndex machine) const noexcept {
    return start[pos * n_machines + machine];
  }
  Duration completion_at(std::size_t pos, MachineIndex machine) const noexcept {
    return completion[pos * n_machines + machine];
  }
};

struct Bounds {
  Duration machine_load_lb = 0;
  Duration job_length_lb = 0;
  Duration combined = 0;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

// Throws EmptyMatrix, RaggedRows or NegativeTime.
Instance validate_instance(const std::vector<std::vector<Duration>>& raw);

// Throws InvalidPermutation unless seq is a permutation of the instance's jobs.
Schedule compute_schedule(const Instance& inst, const JobSequence& seq);
Duration makespan(const Instance& inst, const JobSequence& seq);

// Makespan of scheduling only the listed jobs, in order. Empty prefix -> 0.
// Throws InvalidPrefix on duplicate or out-of-range ids.
Duration partial_makespan(const Instance& inst, std::span<const JobIndex> prefix);

Bounds lower_bound(const Instance& inst);

// Machine columns in reverse order.
Instance reverse_instance(const Instance& inst);

namespace kernels {

// Unchecked completion-time recursion over a job list. `front` must hold at
// least n_machines entries and is overwritten; on return it contains the
// completion times of the last listed job on each machine.
Duration sequence_makespan(const Instance& inst, std::span<const JobIndex> jobs,
                           std::span<Duration> front) noexcept;

}  // namespace kernels

}  // namespace flowshop
