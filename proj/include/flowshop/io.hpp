#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "flowshop/heuristics.hpp"
#include "flowshop/model.hpp"

namespace flowshop {

// Instance text format:
//
//   # comment lines start with '#', blank lines are ignored
//   <n_jobs> <n_machines>
//   <t_11> <t_12> ... <t_1m>      one line per job
//   ...
//
// Errors carry the 1-based line and column of the offending token.
Instance parse_instance(std::string_view text);
// Canonical form: no comments, single spaces, '\n' line ends.
std::string format_instance(const Instance& inst);

Instance read_instance_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// JSON object with sorted keys:
//   algorithm, condition_flags ({any, cond1, cond2} or null), intervals
//   ([{end, job, machine, start}] in position/machine order, 1-based ids),
//   makespan, notes, sequence (1-based ids).
std::string serialize_result(const AlgoResult& result, const Schedule& schedule);

// "job,machine,start,end" header, then one row per operation in
// (sequence position, machine) order.
std::string gantt_csv(const Schedule& schedule);

struct GenSpec {
  std::size_t n_jobs = 0;
  std::size_t n_machines = 0;
  Duration min_time = 0;
  Duration max_time = 0;
  std::uint64_t seed = 0;
};

// Cells are filled row-major from std::mt19937_64(seed). Each draw x maps to
// min + x mod span, where span = max - min + 1, after rejecting
// x < 2^64 mod span. Throws BadRange for min < 0, min > max or zero counts.
Instance generate_instance(const GenSpec& spec);

// 64-bit FNV-1a over the canonical text.
std::uint64_t content_hash(const Instance& inst);

}  // namespace flowshop
