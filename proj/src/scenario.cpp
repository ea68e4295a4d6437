// Copyright 2026 The uavplan Authors.
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

#include "uavplan/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace uavplan {

using nlohmann::ordered_json;

double v_min_for(const FlightLimits &limits, double wind_speed) {
  return std::max(limits.stall_speed, wind_speed);
}

namespace {

[[noreturn]] void bad(const std::string &field, const std::string &why) {
  throw InputError("scenario field '" + field + "': " + why);
}

double num(const ordered_json &j, const std::string &field) {
  if (!j.is_number()) bad(field, "expected a number");
  return j.get<double>();
}

Vec2 vec2(const ordered_json &j, const std::string &field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    bad(field, "expected [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

// Fetch j[key] as a number if present, else keep the default and log it.
void take(const ordered_json &j, const char *key, const std::string &scope,
          double &out, ValidationReport &rep) {
  if (j.contains(key)) {
    out = num(j.at(key), scope + "." + key);
  } else {
    std::ostringstream os;
    os << scope << "." << key << " = " << out;
    rep.defaulted.push_back(os.str());
  }
}

void take_vec(const ordered_json &j, const char *key, const std::string &scope,
              Vec2 &out, ValidationReport &rep) {
  if (j.contains(key)) {
    out = vec2(j.at(key), scope + "." + key);
  } else {
    std::ostringstream os;
    os << scope << "." << key << " = [" << out.x() << ", " << out.y() << "]";
    rep.defaulted.push_back(os.str());
  }
}

void warn_unknown(const ordered_json &j, const std::set<std::string> &known,
                  const std::string &scope, ValidationReport &rep) {
  for (const auto &[key, value] : j.items()) {
    (void)value;
    if (!known.count(key))
      rep.warnings.push_back("unknown key '" + scope + "." + key + "' ignored");
  }
}

void validate(const Scenario &s, ValidationReport &rep) {
  if (s.buoys.empty()) bad("buoys", "at least one buoy is required");
  std::set<int> ids;
  for (const auto &b : s.buoys) {
    if (!ids.insert(b.id).second)
      bad("buoys", "duplicate id " + std::to_string(b.id));
    if (b.target_bits < 0) bad("buoys.target_bits", "must be >= 0");
    if (!std::isfinite(b.target_bits)) bad("buoys.target_bits", "not finite");
  }
  if (s.channel.bandwidth_hz <= 0) bad("channel.bandwidth_hz", "must be > 0");
  if (s.channel.gamma0 <= 0) bad("channel.gamma0", "must be > 0");
  if (s.channel.altitude_m <= 0) bad("channel.altitude_m", "must be > 0");
  if (s.energy.w1 <= 0) bad("energy.w1", "must be > 0");
  if (s.energy.w2 <= 0) bad("energy.w2", "must be > 0");
  if (s.energy.gravity <= 0) bad("energy.gravity", "must be > 0");
  if (s.energy.mass_kg <= 0) bad("energy.mass_kg", "must be > 0");
  if (s.limits.stall_speed <= 0) bad("limits.stall_speed", "must be > 0");
  if (s.limits.v_max <= s.limits.stall_speed)
    bad("limits.v_max", "must exceed the stall speed");
  if (s.limits.a_max <= 0) bad("limits.a_max", "must be > 0");
  if (s.slotting.slot_s <= 0) bad("slotting.slot_s", "must be > 0");
  if (s.slotting.n_slots < 1) bad("slotting.n_slots", "must be >= 1");
  if (s.wind.sigma_f < 0) bad("wind.sigma_f", "must be >= 0");
  if (s.wind.rho_c < 0 || s.wind.rho_c >= 1)
    bad("wind.rho_c", "must lie in [0, 1)");
  if (s.tolerances.eps1 < 0 || s.tolerances.eps2 < 0)
    bad("tolerances.eps1/eps2", "must be >= 0");
  if (s.tolerances.xi_q < 0 || s.tolerances.xi_v < 0)
    bad("tolerances.xi_q/xi_v", "must be >= 0");
  if (s.tolerances.w3 < 0) bad("tolerances.w3", "must be >= 0");
  if (s.endpoints.v0.norm() > s.limits.v_max + 1e-9)
    bad("endpoints.v0", "start airspeed exceeds v_max");
  if (s.endpoints.vF.norm() > s.limits.v_max + 1e-9)
    bad("endpoints.vF", "final airspeed exceeds v_max");
  if (s.wind.mean.norm() >= s.limits.v_max)
    bad("wind.mean", "mean wind at or above v_max leaves no feasible airspeed");
  for (const auto &b : s.buoys) {
    if (b.target_bits > 0 && b.target_bits < 1.0)
      rep.warnings.push_back("buoy " + std::to_string(b.id) +
                             " target below one bit");
  }
}

}  // namespace

LoadedScenario parse_scenario(const std::string &json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const std::exception &e) {
    throw InputError(std::string("scenario JSON parse error: ") + e.what());
  }
  if (!j.is_object()) throw InputError("scenario root must be an object");

  LoadedScenario out;
  Scenario &s = out.scenario;
  ValidationReport &rep = out.report;

  warn_unknown(j,
               {"name", "buoys", "channel", "energy", "limits", "slotting",
                "endpoints", "wind", "tolerances"},
               "", rep);

  if (j.contains("name")) {
    if (!j["name"].is_string()) bad("name", "expected a string");
    s.name = j["name"].get<std::string>();
  }

  if (!j.contains("buoys")) bad("buoys", "missing");
  if (!j["buoys"].is_array()) bad("buoys", "expected an array");
  int auto_id = 1;
  for (const auto &jb : j["buoys"]) {
    if (!jb.is_object()) bad("buoys", "each entry must be an object");
    warn_unknown(jb, {"id", "position", "target_bits"}, "buoys[]", rep);
    Buoy b;
    b.id = jb.contains("id") ? jb.at("id").get<int>() : auto_id;
    if (!jb.contains("position")) bad("buoys.position", "missing");
    b.position = vec2(jb.at("position"), "buoys.position");
    if (!jb.contains("target_bits")) bad("buoys.target_bits", "missing");
    b.target_bits = num(jb.at("target_bits"), "buoys.target_bits");
    s.buoys.push_back(b);
    ++auto_id;
  }

  const ordered_json empty = ordered_json::object();
  {
    const auto &jc = j.contains("channel") ? j["channel"] : empty;
    warn_unknown(jc, {"bandwidth_hz", "gamma0", "ref_snr_db", "altitude_m"},
                 "channel", rep);
    take(jc, "bandwidth_hz", "channel", s.channel.bandwidth_hz, rep);
    if (jc.contains("gamma0") && jc.contains("ref_snr_db"))
      bad("channel", "give gamma0 or ref_snr_db, not both");
    if (jc.contains("ref_snr_db")) {
      s.channel.gamma0 =
          std::pow(10.0, num(jc.at("ref_snr_db"), "channel.ref_snr_db") / 10.0);
    } else {
      take(jc, "gamma0", "channel", s.channel.gamma0, rep);
    }
    take(jc, "altitude_m", "channel", s.channel.altitude_m, rep);
  }
  {
    const auto &je = j.contains("energy") ? j["energy"] : empty;
    warn_unknown(je, {"w1", "w2", "gravity", "mass_kg"}, "energy", rep);
    take(je, "w1", "energy", s.energy.w1, rep);
    take(je, "w2", "energy", s.energy.w2, rep);
    take(je, "gravity", "energy", s.energy.gravity, rep);
    take(je, "mass_kg", "energy", s.energy.mass_kg, rep);
  }
  {
    const auto &jl = j.contains("limits") ? j["limits"] : empty;
    warn_unknown(jl, {"v_max", "stall_speed", "a_max"}, "limits", rep);
    take(jl, "v_max", "limits", s.limits.v_max, rep);
    take(jl, "stall_speed", "limits", s.limits.stall_speed, rep);
    take(jl, "a_max", "limits", s.limits.a_max, rep);
  }
  {
    const auto &js = j.contains("slotting") ? j["slotting"] : empty;
    warn_unknown(js, {"slot_s", "n_slots"}, "slotting", rep);
    take(js, "slot_s", "slotting", s.slotting.slot_s, rep);
    if (js.contains("n_slots")) {
      if (!js.at("n_slots").is_number_integer()) bad("slotting.n_slots", "expected an integer");
      s.slotting.n_slots = js.at("n_slots").get<int>();
    } else {
      rep.defaulted.push_back("slotting.n_slots = " +
                              std::to_string(s.slotting.n_slots));
    }
  }
  {
    const auto &jp = j.contains("endpoints") ? j["endpoints"] : empty;
    warn_unknown(jp, {"q0", "qF", "v0", "vF"}, "endpoints", rep);
    take_vec(jp, "q0", "endpoints", s.endpoints.q0, rep);
    take_vec(jp, "qF", "endpoints", s.endpoints.qF, rep);
    take_vec(jp, "v0", "endpoints", s.endpoints.v0, rep);
    take_vec(jp, "vF", "endpoints", s.endpoints.vF, rep);
  }
  {
    const auto &jw = j.contains("wind") ? j["wind"] : empty;
    warn_unknown(jw, {"mean", "sigma_f", "rho_c"}, "wind", rep);
    take_vec(jw, "mean", "wind", s.wind.mean, rep);
    take(jw, "sigma_f", "wind", s.wind.sigma_f, rep);
    take(jw, "rho_c", "wind", s.wind.rho_c, rep);
  }
  {
    const auto &jt = j.contains("tolerances") ? j["tolerances"] : empty;
    warn_unknown(jt, {"eps1", "eps2", "xi_q", "xi_v", "w3"}, "tolerances", rep);
    take(jt, "eps1", "tolerances", s.tolerances.eps1, rep);
    take(jt, "eps2", "tolerances", s.tolerances.eps2, rep);
    take(jt, "xi_q", "tolerances", s.tolerances.xi_q, rep);
    take(jt, "xi_v", "tolerances", s.tolerances.xi_v, rep);
    take(jt, "w3", "tolerances", s.tolerances.w3, rep);
  }

  validate(s, rep);
  return out;
}

LoadedScenario load_scenario(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_scenario(buf.str());
  } catch (const InputError &e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string scenario_to_json(const Scenario &s) {
  ordered_json j;
  j["name"] = s.name;
  j["buoys"] = ordered_json::array();
  for (const auto &b : s.buoys) {
    ordered_json jb;
    jb["id"] = b.id;
    jb["position"] = {b.position.x(), b.position.y()};
    jb["target_bits"] = b.target_bits;
    j["buoys"].push_back(jb);
  }
  j["channel"] = {{"bandwidth_hz", s.channel.bandwidth_hz},
                  {"gamma0", s.channel.gamma0},
                  {"altitude_m", s.channel.altitude_m}};
  j["energy"] = {{"w1", s.energy.w1},
                 {"w2", s.energy.w2},
                 {"gravity", s.energy.gravity},
                 {"mass_kg", s.energy.mass_kg}};
  j["limits"] = {{"v_max", s.limits.v_max},
                 {"stall_speed", s.limits.stall_speed},
                 {"a_max", s.limits.a_max}};
  j["slotting"] = {{"slot_s", s.slotting.slot_s},
                   {"n_slots", s.slotting.n_slots}};
  j["endpoints"] = {{"q0", {s.endpoints.q0.x(), s.endpoints.q0.y()}},
                    {"qF", {s.endpoints.qF.x(), s.endpoints.qF.y()}},
                    {"v0", {s.endpoints.v0.x(), s.endpoints.v0.y()}},
                    {"vF", {s.endpoints.vF.x(), s.endpoints.vF.y()}}};
  j["wind"] = {{"mean", {s.wind.mean.x(), s.wind.mean.y()}},
               {"sigma_f", s.wind.sigma_f},
               {"rho_c", s.wind.rho_c}};
  j["tolerances"] = {{"eps1", s.tolerances.eps1},
                     {"eps2", s.tolerances.eps2},
                     {"xi_q", s.tolerances.xi_q},
                     {"xi_v", s.tolerances.xi_v},
                     {"w3", s.tolerances.w3}};
  return j.dump(2) + "\n";
}

void save_scenario(const Scenario &s, const std::string &path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write scenario file: " + path);
  out << scenario_to_json(s);
}

}  // namespace uavplan
