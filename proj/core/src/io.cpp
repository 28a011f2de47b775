#include "gfbm/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <system_error>
#include <vector>

#include "gfbm/errors.hpp"

namespace gfbm {

std::string format_double(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

double parse_csv_double(std::string_view text, std::size_t line, std::size_t field) {
  double value = 0.0;
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc{} || result.ptr != text.data() + text.size()) {
    throw csv_parse_error("not a number: '" + std::string(text) + "'", line, field);
  }
  return value;
}

std::uint64_t parse_csv_u64(std::string_view text, std::size_t line, std::size_t field) {
  std::uint64_t value = 0;
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc{} || result.ptr != text.data() + text.size()) {
    throw csv_parse_error("not an unsigned integer: '" + std::string(text) + "'", line, field);
  }
  return value;
}

// The `<key>=<value>` tokens of the comment line, in fixed order.
std::string_view take_token(std::string_view& rest, std::string_view key,
                            std::size_t line, std::size_t field) {
  const std::string prefix = std::string(key) + "=";
  if (rest.substr(0, prefix.size()) != prefix) {
    throw csv_parse_error("expected '" + prefix + "...'", line, field);
  }
  rest.remove_prefix(prefix.size());
  const std::size_t space = rest.find(' ');
  std::string_view token = rest.substr(0, space);
  rest = (space == std::string_view::npos) ? std::string_view{} : rest.substr(space + 1);
  if (token.empty()) {
    throw csv_parse_error("empty value for '" + std::string(key) + "'", line, field);
  }
  return token;
}

}  // namespace

void write_ensemble_csv(const PathEnsemble& ensemble, std::ostream& out) {
  const GfbmParams& params = ensemble.params();
  out << "# gfbm a=" << format_double(params.a()) << " b=" << format_double(params.b())
      << " H=" << format_double(params.hurst()) << " seed=" << ensemble.spec().seed
      << " method=" << to_string(ensemble.spec().method) << "\n";
  out << "t";
  for (std::size_t p = 0; p < ensemble.n_paths(); ++p) {
    out << ",path_" << p;
  }
  out << "\n";
  const auto& points = ensemble.grid().points();
  for (std::size_t k = 0; k < points.size(); ++k) {
    out << format_double(points[k]);
    for (std::size_t p = 0; p < ensemble.n_paths(); ++p) {
      out << "," << format_double(ensemble.value(p, k));
    }
    out << "\n";
  }
}

void write_ensemble_csv(const PathEnsemble& ensemble, const std::string& file_path) {
  std::ofstream out(file_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + file_path + "' for writing");
  }
  write_ensemble_csv(ensemble, out);
  out.flush();
  if (!out) {
    throw std::runtime_error("write to '" + file_path + "' failed");
  }
}

PathEnsemble read_ensemble_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  auto next_line = [&](const char* what) {
    if (!std::getline(in, line)) {
      throw csv_parse_error(std::string("unexpected end of file, expected ") + what,
                            line_no + 1, 1);
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
  };

  next_line("the '# gfbm ...' header comment");
  std::string_view rest(line);
  if (rest.substr(0, 7) != "# gfbm ") {
    throw csv_parse_error("file must start with '# gfbm a=... b=... H=... seed=... method=...'",
                          line_no, 1);
  }
  rest.remove_prefix(7);
  const double a = parse_csv_double(take_token(rest, "a", line_no, 1), line_no, 1);
  const double b = parse_csv_double(take_token(rest, "b", line_no, 2), line_no, 2);
  const double hurst = parse_csv_double(take_token(rest, "H", line_no, 3), line_no, 3);
  const std::uint64_t seed = parse_csv_u64(take_token(rest, "seed", line_no, 4), line_no, 4);
  std::string method_name(take_token(rest, "method", line_no, 5));

  GfbmParams params = [&] {
    try {
      return GfbmParams(a, b, hurst);
    } catch (const std::invalid_argument& err) {
      throw csv_parse_error(err.what(), line_no, 1);
    }
  }();
  SampleMethod method = [&] {
    try {
      return sample_method_from_string(method_name);
    } catch (const std::invalid_argument& err) {
      throw csv_parse_error(err.what(), line_no, 5);
    }
  }();

  next_line("the column header row");
  const auto header = split_fields(line);
  if (header.empty() || header[0] != "t") {
    throw csv_parse_error("first column must be named 't'", line_no, 1);
  }
  if (header.size() < 2) {
    throw csv_parse_error("need at least one path column", line_no, 1);
  }
  const std::size_t n_paths = header.size() - 1;

  std::vector<double> times;
  std::vector<std::vector<double>> columns(n_paths);
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;  // tolerate a trailing blank line
    const auto fields = split_fields(line);
    if (fields.size() != header.size()) {
      std::ostringstream msg;
      msg << "expected " << header.size() << " fields, got " << fields.size();
      throw csv_parse_error(msg.str(), line_no, fields.size() + 1);
    }
    const double t = parse_csv_double(fields[0], line_no, 1);
    if (times.empty()) {
      if (t != 0.0) throw csv_parse_error("first time point must be exactly 0", line_no, 1);
    } else if (!(t > times.back())) {
      throw csv_parse_error("time points must be strictly increasing", line_no, 1);
    }
    times.push_back(t);
    for (std::size_t p = 0; p < n_paths; ++p) {
      const double value = parse_csv_double(fields[p + 1], line_no, p + 2);
      if (times.size() == 1 && value != 0.0) {
        throw csv_parse_error("values at t=0 must be exactly 0", line_no, p + 2);
      }
      columns[p].push_back(value);
    }
  }
  if (times.size() < 2) {
    throw csv_parse_error("need at least two data rows (t=0 plus one point)", line_no + 1, 1);
  }

  SampleSpec spec{n_paths, seed, method};
  SampleProvenance provenance;
  provenance.method = method;
  provenance.seed = seed;
  PathEnsemble ensemble(params, TimeGrid::from_points(std::move(times)), spec, provenance);
  for (std::size_t p = 0; p < n_paths; ++p) {
    auto row = ensemble.mutable_path(p);
    for (std::size_t k = 0; k < columns[p].size(); ++k) {
      row[k] = columns[p][k];
    }
  }
  return ensemble;
}

PathEnsemble read_ensemble_csv(const std::string& file_path) {
  std::ifstream in(file_path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + file_path + "' for reading");
  }
  return read_ensemble_csv(in);
}

}  // namespace gfbm
