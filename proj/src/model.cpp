#include "flowshop/model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace flowshop {

Duration Instance::row_sum(JobIndex job) const noexcept {
  auto r = row(job);
  return std::accumulate(r.begin(), r.end(), Duration{0});
}

std::vector<std::vector<Duration>> Instance::to_rows() const {
  std::vector<std::vector<Duration>> rows;
  rows.reserve(n_jobs_);
  for (JobIndex j = 0; j < n_jobs_; ++j) {
    auto r = row(j);
    rows.emplace_back(r.begin(), r.end());
  }
  return rows;
}

JobSequence JobSequence::identity(std::size_t n) {
  std::vector<JobIndex> order(n);
  std::iota(order.begin(), order.end(), JobIndex{0});
  return JobSequence(std::move(order));
}

JobSequence JobSequence::from_ids(std::span<const std::size_t> ids) {
  std::vector<JobIndex> order;
  order.reserve(ids.size());
  for (std::size_t id : ids) {
    if (id == 0) {
      throw Error(ErrorKind::InvalidPermutation, "job ids are 1-based, got 0");
    }
    order.push_back(id - 1);
  }
  return JobSequence(std::move(order));
}

JobSequence JobSequence::from_ids(std::initializer_list<std::size_t> ids) {
  return from_ids(std::span<const std::size_t>(ids.begin(), ids.size()));
}

std::vector<std::size_t> JobSequence::ids() const {
  std::vector<std::size_t> out;
  out.reserve(order_.size());
  for (JobIndex j : order_) out.push_back(j + 1);
  return out;
}

JobSequence JobSequence::reversed() const {
  return JobSequence(std::vector<JobIndex>(order_.rbegin(), order_.rend()));
}

bool JobSequence::is_permutation_of(std::size_t n_jobs) const {
  if (order_.size() != n_jobs) return false;
  std::vector<bool> seen(n_jobs, false);
  for (JobIndex j : order_) {
    if (j >= n_jobs || seen[j]) return false;
    seen[j] = true;
  }
  return true;
}

Instance validate_instance(const std::vector<std::vector<Duration>>& raw) {
  if (raw.empty() || raw.front().empty()) {
    throw Error(ErrorKind::EmptyMatrix, "instance needs at least one job and one machine");
  }
  const std::size_t n = raw.size();
  const std::size_t m = raw.front().size();
  std::vector<Duration> flat;
  flat.reserve(n * m);
  for (std::size_t j = 0; j < n; ++j) {
    if (raw[j].size() != m) {
      throw Error(ErrorKind::RaggedRows,
                  "job " + std::to_string(j + 1) + " has " + std::to_string(raw[j].size()) +
                      " times, expected " + std::to_string(m));
    }
    for (std::size_t k = 0; k < m; ++k) {
      if (raw[j][k] < 0) {
        throw Error(ErrorKind::NegativeTime, "job " + std::to_string(j + 1) + " machine " +
                                                 std::to_string(k + 1) + " has time " +
                                                 std::to_string(raw[j][k]));
      }
      flat.push_back(raw[j][k]);
    }
  }
  return Instance(n, m, std::move(flat));
}

namespace kernels {

Duration sequence_makespan(const Instance& inst, std::span<const JobIndex> jobs,
                           std::span<Duration> front) noexcept {
  const std::size_t m = inst.n_machines();
  std::fill_n(front.begin(), m, Duration{0});
  for (JobIndex job : jobs) {
    auto r = inst.row(job);
    Duration prev = 0;  // completion of this job on the previous machine
    for (std::size_t k = 0; k < m; ++k) {
      prev = std::max(prev, front[k]) + r[k];
      front[k] = prev;
    }
  }
  return jobs.empty() ? 0 : front[m - 1];
}

}  // namespace kernels

Schedule compute_schedule(const Instance& inst, const JobSequence& seq) {
  if (!seq.is_permutation_of(inst.n_jobs())) {
    throw Error(ErrorKind::InvalidPermutation,
                "sequence is not a permutation of " + std::to_string(inst.n_jobs()) + " jobs");
  }
  const std::size_t n = inst.n_jobs();
  const std::size_t m = inst.n_machines();
  Schedule s;
  s.sequence = seq;
  s.n_machines = m;
  s.start.assign(n * m, 0);
  s.completion.assign(n * m, 0);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t k = 0; k < m; ++k) {
      Duration above = p > 0 ? s.completion[(p - 1) * m + k] : 0;
      Duration left = k > 0 ? s.completion[p * m + k - 1] : 0;
      s.start[p * m + k] = std::max(above, left);
      s.completion[p * m + k] = s.start[p * m + k] + inst.time(seq[p], k);
    }
  }
  s.makespan = s.completion[n * m - 1];
  return s;
}

Duration makespan(const Instance& inst, const JobSequence& seq) {
  if (!seq.is_permutation_of(inst.n_jobs())) {
    throw Error(ErrorKind::InvalidPermutation,
                "sequence is not a permutation of " + std::to_string(inst.n_jobs()) + " jobs");
  }
  std::vector<Duration> front(inst.n_machines());
  return kernels::sequence_makespan(inst, seq.jobs(), front);
}

Duration partial_makespan(const Instance& inst, std::span<const JobIndex> prefix) {
  std::vector<bool> seen(inst.n_jobs(), false);
  for (JobIndex j : prefix) {
    if (j >= inst.n_jobs()) {
      throw Error(ErrorKind::InvalidPrefix, "job id " + std::to_string(j + 1) + " out of range");
    }
    if (seen[j]) {
      throw Error(ErrorKind::InvalidPrefix, "job id " + std::to_string(j + 1) + " repeated");
    }
    seen[j] = true;
  }
  std::vector<Duration> front(inst.n_machines());
  return kernels::sequence_makespan(inst, prefix, front);
}

Bounds lower_bound(const Instance& inst) {
  Bounds b;
  for (MachineIndex k = 0; k < inst.n_machines(); ++k) {
    Duration load = 0;
    for (JobIndex j = 0; j < inst.n_jobs(); ++j) load += inst.time(j, k);
    b.machine_load_lb = std::max(b.machine_load_lb, load);
  }
  for (JobIndex j = 0; j < inst.n_jobs(); ++j) {
    b.job_length_lb = std::max(b.job_length_lb, inst.row_sum(j));
  }
  b.combined = std::max(b.machine_load_lb, b.job_length_lb);
  return b;
}

Instance reverse_instance(const Instance& inst) {
  auto rows = inst.to_rows();
  for (auto& r : rows) std::reverse(r.begin(), r.end());
  return validate_instance(rows);
}

}  // namespace flowshop
