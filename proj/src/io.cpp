#include "flowshop/io.hpp"

#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

namespace flowshop {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t begin = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(begin, i - begin), begin + 1});
  }
  return out;
}

std::optional<std::int64_t> to_int(std::string_view s) {
  std::int64_t v = 0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || first == s.data() + s.size()) {
    return std::nullopt;
  }
  return v;
}

std::string where(std::size_t line, std::size_t col) {
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t n = 0, m = 0;
  bool have_header = false;
  std::vector<std::vector<Duration>> rows;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (eol == text.size() && line.empty()) break;

    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;

    if (!have_header) {
      if (tokens.size() != 2) {
        throw Error(ErrorKind::BadHeader, "expected '<jobs> <machines>' at " + where(line_no, 1),
                    line_no, 1);
      }
      std::int64_t dims[2];
      for (int k = 0; k < 2; ++k) {
        auto v = to_int(tokens[k].text);
        if (!v || *v < 1) {
          throw Error(ErrorKind::BadHeader,
                      "header counts must be positive integers at " +
                          where(line_no, tokens[k].column),
                      line_no, tokens[k].column);
        }
        dims[k] = *v;
      }
      n = static_cast<std::size_t>(dims[0]);
      m = static_cast<std::size_t>(dims[1]);
      have_header = true;
      continue;
    }

    if (rows.size() == n) {
      throw Error(ErrorKind::WrongRowCount,
                  "expected " + std::to_string(n) + " job rows, found extra row at " +
                      where(line_no, tokens.front().column),
                  line_no, tokens.front().column);
    }
    std::vector<Duration> row;
    row.reserve(m);
    for (const Token& tok : tokens) {
      if (row.size() == m) {
        throw Error(ErrorKind::WrongColumnCount,
                    "expected " + std::to_string(m) + " times, found more at " +
                        where(line_no, tok.column),
                    line_no, tok.column);
      }
      auto v = to_int(tok.text);
      if (!v) {
        throw Error(ErrorKind::NonInteger,
                    "'" + std::string(tok.text) + "' is not an integer at " +
                        where(line_no, tok.column),
                    line_no, tok.column);
      }
      if (*v < 0) {
        throw Error(ErrorKind::NegativeTime,
                    "negative time " + std::string(tok.text) + " at " + where(line_no, tok.column),
                    line_no, tok.column);
      }
      row.push_back(*v);
    }
    if (row.size() != m) {
      const std::size_t col = line.size() + 1;
      throw Error(ErrorKind::WrongColumnCount,
                  "expected " + std::to_string(m) + " times, found " + std::to_string(row.size()) +
                      " at " + where(line_no, col),
                  line_no, col);
    }
    rows.push_back(std::move(row));
  }

  if (!have_header) {
    throw Error(ErrorKind::BadHeader, "missing '<jobs> <machines>' header", line_no, 1);
  }
  if (rows.size() != n) {
    throw Error(ErrorKind::WrongRowCount,
                "expected " + std::to_string(n) + " job rows, found " + std::to_string(rows.size()),
                line_no, 1);
  }
  return validate_instance(rows);
}

std::string format_instance(const Instance& inst) {
  std::string out = std::to_string(inst.n_jobs()) + " " + std::to_string(inst.n_machines()) + "\n";
  for (JobIndex j = 0; j < inst.n_jobs(); ++j) {
    for (MachineIndex k = 0; k < inst.n_machines(); ++k) {
      if (k > 0) out += ' ';
      out += std::to_string(inst.time(j, k));
    }
    out += '\n';
  }
  return out;
}

Instance read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string serialize_result(const AlgoResult& result, const Schedule& schedule) {
  using nlohmann::json;
  json j;
  j["algorithm"] = std::string(to_string(result.algorithm));
  j["sequence"] = result.sequence.ids();
  j["makespan"] = result.makespan;
  if (result.flags) {
    j["condition_flags"] = {
        {"any", result.flags->any}, {"cond1", result.flags->cond1}, {"cond2", result.flags->cond2}};
  } else {
    j["condition_flags"] = nullptr;
  }
  j["notes"] = result.notes;
  json intervals = json::array();
  for (std::size_t p = 0; p < schedule.sequence.size(); ++p) {
    for (MachineIndex k = 0; k < schedule.n_machines; ++k) {
      intervals.push_back({{"job", schedule.sequence[p] + 1},
                           {"machine", k + 1},
                           {"start", schedule.start_at(p, k)},
                           {"end", schedule.completion_at(p, k)}});
    }
  }
  j["intervals"] = std::move(intervals);
  return j.dump(2) + "\n";
}

std::string gantt_csv(const Schedule& schedule) {
  std::string out = "job,machine,start,end\n";
  for (std::size_t p = 0; p < schedule.sequence.size(); ++p) {
    for (MachineIndex k = 0; k < schedule.n_machines; ++k) {
      out += std::to_string(schedule.sequence[p] + 1) + "," + std::to_string(k + 1) + "," +
             std::to_string(schedule.start_at(p, k)) + "," +
             std::to_string(schedule.completion_at(p, k)) + "\n";
    }
  }
  return out;
}

Instance generate_instance(const GenSpec& spec) {
  if (spec.n_jobs == 0 || spec.n_machines == 0) {
    throw Error(ErrorKind::BadRange, "job and machine counts must be positive");
  }
  if (spec.min_time < 0 || spec.min_time > spec.max_time) {
    throw Error(ErrorKind::BadRange, "need 0 <= min <= max, got [" +
                                         std::to_string(spec.min_time) + ", " +
                                         std::to_string(spec.max_time) + "]");
  }
  std::mt19937_64 rng(spec.seed);
  const auto span = static_cast<std::uint64_t>(spec.max_time - spec.min_time) + 1;
  const std::uint64_t reject_below = (0 - span) % span;  // 2^64 mod span
  auto draw = [&] {
    std::uint64_t x = rng();
    while (x < reject_below) x = rng();
    return spec.min_time + static_cast<Duration>(x % span);
  };
  std::vector<std::vector<Duration>> rows(spec.n_jobs, std::vector<Duration>(spec.n_machines));
  for (auto& row : rows) {
    for (auto& cell : row) cell = draw();
  }
  return validate_instance(rows);
}

std::uint64_t content_hash(const Instance& inst) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : format_instance(inst)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace flowshop
