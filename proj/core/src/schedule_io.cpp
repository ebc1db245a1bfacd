// Copyright 2026 The holochip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "holochip/adiabatic.hpp"

namespace holochip::adiabatic {

namespace {

using nlohmann::json;

CouplingProfile profile_from(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_object()) {
    throw ScheduleError(std::string("schedule: missing profile '") + key + "'");
  }
  const auto& p = doc.at(key);
  for (const char* field : {"peak", "center", "sigma"}) {
    if (!p.contains(field) || !p.at(field).is_number()) {
      throw ScheduleError(std::string("schedule: profile '") + key + "' needs numeric '" + field + "'");
    }
  }
  return {p.at("peak").get<double>(), p.at("center").get<double>(), p.at("sigma").get<double>()};
}

json profile_to(const CouplingProfile& p) {
  return {{"peak", p.peak}, {"center", p.center}, {"sigma", p.sigma}};
}

}  // namespace

PulseSchedule parse_schedule(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ScheduleError(std::string("schedule: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ScheduleError("schedule: top level must be an object");

  PulseSchedule s;
  s.east = profile_from(doc, "east");
  s.west = profile_from(doc, "west");
  s.aux = profile_from(doc, "aux");

  if (!doc.contains("z_span") || !doc.at("z_span").is_array() || doc.at("z_span").size() != 2 ||
      !doc.at("z_span")[0].is_number() || !doc.at("z_span")[1].is_number()) {
    throw ScheduleError("schedule: 'z_span' must be [start, end]");
  }
  s.z_start = doc.at("z_span")[0].get<double>();
  s.z_end = doc.at("z_span")[1].get<double>();

  if (!doc.contains("steps") || !doc.at("steps").is_number_integer() ||
      doc.at("steps").get<long long>() < 1 || doc.at("steps").get<long long>() > 100'000'000) {
    throw ScheduleError("schedule: 'steps' must be a positive integer");
  }
  s.steps = doc.at("steps").get<int>();
  return s;
}

PulseSchedule load_schedule(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScheduleError("schedule: cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_schedule(buffer.str());
}

std::string schedule_to_json(const PulseSchedule& s) {
  const json doc = {{"east", profile_to(s.east)},
                    {"west", profile_to(s.west)},
                    {"aux", profile_to(s.aux)},
                    {"z_span", {s.z_start, s.z_end}},
                    {"steps", s.steps}};
  return doc.dump(2) + "\n";
}

}  // namespace holochip::adiabatic
