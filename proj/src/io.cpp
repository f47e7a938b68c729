#include "polarimeter/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "polarimeter/error.hpp"

namespace polarimeter {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(ErrorCode::IoError, "cannot read '" + path.string() + "'");
  return buf.str();
}

double parse_field(std::string_view text, std::size_t line, std::string_view column) {
  const auto t = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ": column " + std::string(column) +
                    " is not a number: '" + std::string(t) + "'",
                std::nullopt, line);
  }
  return value;
}

Distribution build(const std::vector<double>& pi, const std::vector<double>& y,
                   const ParseOptions& options) {
  return options.merge_duplicates ? merge_duplicate_characteristics(pi, y)
                                  : Distribution::validate(pi, y);
}

Distribution parse_csv(std::string_view text, const ParseOptions& options) {
  std::vector<double> pi;
  std::vector<double> y;
  std::vector<std::size_t> row_lines;
  std::size_t line_no = 0;
  bool header_seen = false;
  for (auto raw : split(text, '\n')) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (trim(raw).empty()) continue;
    const auto fields = split(raw, ',');
    if (!header_seen) {
      if (fields.size() != 2 || trim(fields[0]) != "pi" || trim(fields[1]) != "y") {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_no) + ": expected header 'pi,y'", std::nullopt,
                    line_no);
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 2) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected 2 fields, got " +
                      std::to_string(fields.size()),
                  std::nullopt, line_no);
    }
    pi.push_back(parse_field(fields[0], line_no, "pi"));
    y.push_back(parse_field(fields[1], line_no, "y"));
    row_lines.push_back(line_no);
  }
  if (!header_seen) throw Error(ErrorCode::ParseError, "empty input: expected header 'pi,y'");
  try {
    return build(pi, y, options);
  } catch (const Error& e) {
    if (!e.group() || *e.group() >= row_lines.size()) throw;
    const std::size_t line = row_lines[*e.group()];
    throw Error(e.code(), "line " + std::to_string(line) + ": " + e.detail(), e.group(), line);
  }
}

std::vector<double> json_numbers(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    fail(ErrorCode::ParseError, std::string("JSON field '") + key + "' must be an array");
  }
  std::vector<double> out;
  for (const auto& v : doc[key]) {
    if (!v.is_number()) {
      fail(ErrorCode::ParseError, std::string("JSON field '") + key + "' holds a non-number");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

Distribution parse_json(std::string_view text, const ParseOptions& options) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::ParseError, "JSON distribution must be an object");
  return build(json_numbers(doc, "pi"), json_numbers(doc, "y"), options);
}

std::vector<std::pair<double, double>> parse_table(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  std::vector<std::pair<double, double>> points;
  std::size_t line_no = 0;
  bool header_seen = false;
  for (auto raw : split(text, '\n')) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (trim(raw).empty()) continue;
    const auto fields = split(raw, ',');
    if (!header_seen) {
      if (fields.size() != 2 || trim(fields[0]) != "d" || trim(fields[1]) != "f") {
        throw Error(ErrorCode::ParseError,
                    path.string() + " line " + std::to_string(line_no) +
                        ": expected header 'd,f'",
                    std::nullopt, line_no);
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 2) {
      throw Error(ErrorCode::ParseError,
                  path.string() + " line " + std::to_string(line_no) + ": expected 2 fields",
                  std::nullopt, line_no);
    }
    points.emplace_back(parse_field(fields[0], line_no, "d"), parse_field(fields[1], line_no, "f"));
  }
  return points;
}

}  // namespace

Distribution parse_distribution_text(std::string_view text, const ParseOptions& options) {
  const auto body = trim(text);
  if (!body.empty() && body.front() == '{') return parse_json(body, options);
  return parse_csv(text, options);
}

Distribution parse_distribution_file(const std::filesystem::path& path,
                                     const ParseOptions& options) {
  return parse_distribution_text(read_file(path), options);
}

void write_distribution_csv(std::ostream& out, const Distribution& dist) {
  out << "pi,y\n";
  const auto pi = dist.populations();
  const auto y = dist.positions();
  for (std::size_t i = 0; i < dist.size(); ++i) {
    out << pi[i] << ',' << format_double(y[i]) << '\n';
  }
}

double parse_number(std::string_view text, std::string_view what) {
  const auto t = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(value)) {
    fail(ErrorCode::GrammarError,
         "expected a number for " + std::string(what) + ", got '" + std::string(t) + "'");
  }
  return value;
}

Alienation parse_alienation_descriptor(std::string_view text,
                                       const std::filesystem::path& base_dir) {
  const auto t = trim(text);
  if (t == "linear") return Alienation::linear();
  const auto colon = t.find(':');
  if (colon == std::string_view::npos) {
    fail(ErrorCode::GrammarError,
         "unknown alienation '" + std::string(t) +
             "'; expected linear, power:<r>, poly:<c1>,..., exp:<k> or table:<path>");
  }
  const auto name = t.substr(0, colon);
  const auto arg = t.substr(colon + 1);
  if (name == "power") return Alienation::power(parse_number(arg, "power exponent"));
  if (name == "exp") return Alienation::exponential(parse_number(arg, "exp rate"));
  if (name == "poly") {
    std::vector<double> coefficients;
    for (auto part : split(arg, ',')) coefficients.push_back(parse_number(part, "poly coefficient"));
    return Alienation::polynomial(std::move(coefficients));
  }
  if (name == "table") {
    if (trim(arg).empty()) fail(ErrorCode::GrammarError, "table: needs a file path");
    std::filesystem::path path{std::string(trim(arg))};
    if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
    return Alienation::tabulated(parse_table(path));
  }
  fail(ErrorCode::GrammarError, "unknown alienation kind '" + std::string(name) + "'");
}

AntagonismSpec parse_spec_descriptor(std::string_view text, const std::filesystem::path& base_dir) {
  const auto t = trim(text);
  const auto comma = t.find(',');
  if (t.substr(0, 6) != "alpha=" || comma == std::string_view::npos) {
    fail(ErrorCode::GrammarError,
         "expected 'alpha=<a>,<alienation>', got '" + std::string(t) + "'");
  }
  const double alpha = parse_number(t.substr(6, comma - 6), "alpha");
  return AntagonismSpec(alpha, parse_alienation_descriptor(t.substr(comma + 1), base_dir));
}

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace polarimeter
