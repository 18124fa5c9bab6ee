#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "dramsey/coloring.hpp"
#include "dramsey/geom.hpp"
#include "dramsey/obstruction.hpp"
#include "dramsey/spheres.hpp"
#include "dramsey/spread.hpp"

namespace dramsey {

enum class Format { Json, Csv };

/// Accepts {"dim": d, "points": [[...], ...]}, or an object carrying such a
/// value under "configuration" or "outputs"."configuration" (so run reports
/// and coloured configurations can be fed back in). Ragged rows are rejected.
Configuration configuration_from_json(const nlohmann::json& j);
Configuration parse_configuration_json(std::string_view text);

/// One point per line, comma separated, no header. Blank lines are skipped.
Configuration parse_configuration_csv(std::string_view text);

Configuration parse_configuration(std::string_view text, Format format);

nlohmann::json to_json(const Configuration& c);
std::string to_csv(const Configuration& c);

/// {"configuration": {...}, "colors": [...]}; a bare configuration object
/// with a top-level "colors" array is accepted as well.
ColoredConfiguration parse_colored_configuration_json(std::string_view text);
nlohmann::json to_json(const ColoredConfiguration& c);

nlohmann::json to_json(const Ball& b);
nlohmann::json to_json(const Sphere& s);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const RigidMotion& m);
nlohmann::json to_json(const FalsifyReport& r);
nlohmann::json to_json(const SpreadOptions& o);
/// Estimate together with the problem and options that produced it.
nlohmann::json to_json(const SpreadEstimate& e, const SpreadProblem& p, const SpreadOptions& o);

std::string read_text_file(const std::string& path);

}  // namespace dramsey
