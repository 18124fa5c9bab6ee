#include "dramsey/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "dramsey/error.hpp"

namespace dramsey {

using nlohmann::json;

namespace {

const json& locate_configuration(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "configuration must be a JSON object");
  if (j.contains("points")) return j;
  if (j.contains("configuration")) return locate_configuration(j.at("configuration"));
  if (j.contains("outputs") && j.at("outputs").is_object() &&
      j.at("outputs").contains("configuration")) {
    return locate_configuration(j.at("outputs").at("configuration"));
  }
  throw Error(ErrorCode::ParseError, "no \"points\" array found");
}

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view field, std::size_t line) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": cannot parse number '" +
                                           std::string(field) + "'");
  }
  return value;
}

}  // namespace

Configuration configuration_from_json(const json& root) {
  const json& j = locate_configuration(root);
  const json& points = j.at("points");
  if (!points.is_array() || points.empty()) {
    throw Error(ErrorCode::ParseError, "\"points\" must be a nonempty array");
  }
  std::size_t dim = 0;
  if (j.contains("dim")) {
    if (!j.at("dim").is_number_integer() || j.at("dim").get<long long>() < 1) {
      throw Error(ErrorCode::ParseError, "\"dim\" must be a positive integer");
    }
    dim = j.at("dim").get<std::size_t>();
  } else if (points.at(0).is_array()) {
    dim = points.at(0).size();
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const json& p = points[i];
    if (!p.is_array() || p.size() != dim) {
      throw Error(ErrorCode::ParseError, "point " + std::to_string(i) + " does not have " +
                                             std::to_string(dim) + " coordinates");
    }
    std::vector<double> row;
    row.reserve(dim);
    for (const auto& x : p) {
      if (!x.is_number()) {
        throw Error(ErrorCode::ParseError, "point " + std::to_string(i) + " has a non-numeric entry");
      }
      row.push_back(x.get<double>());
    }
    rows.push_back(std::move(row));
  }
  try {
    return Configuration(dim, rows);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Configuration parse_configuration_json(std::string_view text) {
  return configuration_from_json(parse_json_text(text));
}

Configuration parse_configuration_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    std::vector<double> row;
    while (true) {
      const auto comma = line.find(',');
      row.push_back(parse_double(line.substr(0, comma), line_no));
      if (comma == std::string_view::npos) break;
      line = line.substr(comma + 1);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected " +
                                             std::to_string(rows.front().size()) + " columns, got " +
                                             std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::ParseError, "CSV input contains no points");
  try {
    return Configuration(rows.front().size(), rows);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Configuration parse_configuration(std::string_view text, Format format) {
  return format == Format::Json ? parse_configuration_json(text) : parse_configuration_csv(text);
}

json to_json(const Configuration& c) {
  return json{{"dim", c.dim()}, {"points", c.rows()}};
}

std::string to_csv(const Configuration& c) {
  std::ostringstream out;
  out.precision(17);
  for (const auto& row : c.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  }
  return out.str();
}

ColoredConfiguration parse_colored_configuration_json(std::string_view text) {
  const json j = parse_json_text(text);
  if (!j.is_object() || !j.contains("colors") || !j.at("colors").is_array()) {
    throw Error(ErrorCode::ParseError, "coloured configuration needs a \"colors\" array");
  }
  std::vector<std::int64_t> colors;
  for (const auto& v : j.at("colors")) {
    if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, "colours must be integers");
    colors.push_back(v.get<std::int64_t>());
  }
  ColoredConfiguration out{configuration_from_json(j), std::move(colors)};
  try {
    out.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return out;
}

json to_json(const ColoredConfiguration& c) {
  return json{{"configuration", to_json(c.configuration)}, {"colors", c.colors}};
}

namespace {

std::vector<double> to_vec(const Vector& v) { return {v.data(), v.data() + v.size()}; }

std::vector<std::vector<double>> to_rows(const Matrix& m) {
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) rows[static_cast<std::size_t>(i)].push_back(m(i, j));
  }
  return rows;
}

}  // namespace

json to_json(const Ball& b) { return json{{"center", to_vec(b.center)}, {"radius", b.radius}}; }

json to_json(const Sphere& s) {
  // carrier columns are the basis vectors
  return json{{"center", to_vec(s.center)},
              {"radius", s.radius},
              {"residual", s.residual},
              {"hull_dimension", s.carrier.cols()},
              {"carrier", to_rows(s.carrier.transpose())}};
}

json to_json(const Verdict& v) {
  return json{{"status", verdict_status_name(v.status)},
              {"circumradius", v.circumradius},
              {"diameter", v.diameter},
              {"threshold", v.threshold},
              {"margin", v.margin}};
}

json to_json(const RigidMotion& m) {
  return json{{"rotation", to_rows(m.rotation())}, {"translation", to_vec(m.translation())}};
}

json to_json(const FalsifyReport& r) {
  json j{{"samples", r.samples},
         {"monochromatic", r.monochromatic},
         {"num_colors", r.num_colors},
         {"radius", r.radius},
         {"shell_width", r.shell_width},
         {"seed", r.seed},
         {"ambient_dim", r.ambient_dim},
         {"vacuous", r.vacuous()}};
  if (r.vacuous()) {
    j["min_spread"] = nullptr;
    j["min_color_span"] = nullptr;
  } else {
    j["min_spread"] = r.min_spread;
    j["min_color_span"] = r.min_color_span;
  }
  j["first_violation"] = r.first_violation ? json(*r.first_violation) : json(nullptr);
  return j;
}

json to_json(const SpreadOptions& o) {
  return json{{"restarts", o.restarts},
              {"seed", o.seed},
              {"penalty_schedule", o.penalty_schedule},
              {"tolerance", o.tolerance},
              {"feasibility_tolerance", o.feasibility_tolerance},
              {"max_evaluations", o.max_evaluations},
              {"oracle_samples", o.oracle_samples}};
}

json to_json(const SpreadEstimate& e, const SpreadProblem& p, const SpreadOptions& o) {
  json j{{"feasible", e.feasible},
         {"radius", p.radius},
         {"ambient_dim", e.ambient_dim},
         {"meb_radius", e.meb_radius},
         {"options", to_json(o)}};
  if (!e.feasible) {
    j["c_estimate"] = nullptr;
    return j;
  }
  j["c_estimate"] = e.c_estimate;
  j["restarts"] = e.restarts;
  j["feasible_restarts"] = e.feasible_restarts;
  j["evaluations"] = e.evaluations;
  j["oracle_value"] = e.oracle_value ? json(*e.oracle_value) : json(nullptr);
  j["polished_from_oracle"] = e.polished_from_oracle;
  j["best_motion"] = to_json(e.best_motion);
  j["lifted_target"] = to_json(e.lifted_target);
  j["placement"] = to_json(e.placement());
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace dramsey
