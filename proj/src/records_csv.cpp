#include "fifogap/records_csv.hpp"

#include <charconv>
#include <istream>
#include <map>
#include <optional>
#include <ostream>

#include <fmt/format.h>

#include "fifogap/error.hpp"

namespace fifogap {
namespace {

std::string quote(std::string_view field) {
  if (field.find_first_of(",\"") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string opt(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

template <class T>
T parse_field(const std::string& s, std::string_view column, std::size_t line) {
  T v{};
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end) {
    throw ValidationError(fmt::format("line {}: bad value '{}' in column {}", line, s, column));
  }
  return v;
}

template <class T>
std::optional<T> parse_optional(const std::string& s, std::string_view column, std::size_t line) {
  if (s.empty()) return std::nullopt;
  return parse_field<T>(s, column, line);
}

}  // namespace

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

void write_records_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
  for (std::size_t c = 0; c < kRecordColumns.size(); ++c) {
    out << (c ? "," : "") << kRecordColumns[c];
  }
  out << '\n';
  for (const auto& r : records) {
    out << quote(r.distribution) << ',' << format_double(r.block_size) << ',' << r.trial << ','
        << r.sub_seed << ',' << r.n << ',' << format_double(r.p0) << ','
        << format_double(r.r_star) << ',' << format_double(r.p_fifo) << ',' << opt(r.p_star)
        << ',' << r.k_bar << ',' << (r.m ? std::to_string(*r.m) : std::string()) << ','
        << opt(r.gap_lower) << ',' << opt(r.ratio_lb) << ',' << opt(r.ratio_ub) << ','
        << opt(r.bound_ratio) << ',' << (r.condition_holds ? "true" : "false") << '\n';
  }
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (quoted) throw ValidationError("unterminated quoted field");
  fields.push_back(std::move(cur));
  return fields;
}

std::vector<TrialRecord> read_records_csv(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };
  if (!next_line()) throw ValidationError("line 1: missing CSV header");

  const auto header = split_csv_line(line);
  std::map<std::string, std::size_t, std::less<>> pos;
  for (std::size_t i = 0; i < header.size(); ++i) pos[header[i]] = i;
  for (auto col : kRecordColumns) {
    if (pos.find(col) == pos.end()) {
      throw ValidationError(fmt::format("line 1: missing column '{}'", col));
    }
  }

  std::vector<TrialRecord> records;
  while (next_line()) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    try {
      f = split_csv_line(line);
    } catch (const ValidationError& e) {
      throw ValidationError(fmt::format("line {}: {}", lineno, e.what()));
    }
    if (f.size() != header.size()) {
      throw ValidationError(fmt::format("line {}: expected {} fields, got {}", lineno,
                                        header.size(), f.size()));
    }
    auto get = [&](std::string_view col) -> const std::string& { return f[pos.find(col)->second]; };
    TrialRecord r;
    r.distribution = get("distribution");
    r.block_size = parse_field<double>(get("block_size"), "block_size", lineno);
    r.trial = parse_field<std::size_t>(get("trial"), "trial", lineno);
    r.sub_seed = parse_field<std::uint64_t>(get("sub_seed"), "sub_seed", lineno);
    r.n = parse_field<std::size_t>(get("n"), "n", lineno);
    r.p0 = parse_field<double>(get("p0"), "p0", lineno);
    r.r_star = parse_field<double>(get("r_star"), "r_star", lineno);
    r.p_fifo = parse_field<double>(get("p_fifo"), "p_fifo", lineno);
    r.p_star = parse_optional<double>(get("p_star"), "p_star", lineno);
    r.k_bar = parse_field<std::size_t>(get("k_bar"), "k_bar", lineno);
    r.m = parse_optional<std::uint64_t>(get("m"), "m", lineno);
    r.gap_lower = parse_optional<double>(get("gap_lower"), "gap_lower", lineno);
    r.ratio_lb = parse_optional<double>(get("ratio_lb"), "ratio_lb", lineno);
    r.ratio_ub = parse_optional<double>(get("ratio_ub"), "ratio_ub", lineno);
    r.bound_ratio = parse_optional<double>(get("bound_ratio"), "bound_ratio", lineno);
    const auto& cond = get("condition_holds");
    if (cond == "true") {
      r.condition_holds = true;
    } else if (cond != "false") {
      throw ValidationError(fmt::format("line {}: condition_holds must be true/false", lineno));
    }
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace fifogap
