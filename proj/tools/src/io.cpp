#include "io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "toricmot/error.hpp"

namespace toricmot::cli {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ToricError(Errc::ParseError, msg); }

Int exact_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where + ": expected an integer, got " + j.dump());
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    fail(where + ": integer out of range");
  }
  return j.get<Int>();
}

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where + ": missing \"" + key + "\"");
  return j.at(key);
}

const json& array_at(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where + ": expected an array");
  return j;
}

std::optional<bool> optional_flag(const json& flags, const char* key) {
  if (!flags.contains(key) || flags.at(key).is_null()) return std::nullopt;
  if (!flags.at(key).is_boolean()) fail(std::string("flags.") + key + ": expected true or false");
  return flags.at(key).get<bool>();
}

Fan parse_fan_body(const json& j, std::size_t rank, const std::string& where) {
  std::vector<LatticeVector> rays;
  const auto& jr = array_at(member(j, "rays", where), where + ".rays");
  for (std::size_t i = 0; i < jr.size(); ++i) {
    const std::string w = where + ".rays[" + std::to_string(i) + "]";
    const auto& row = array_at(jr[i], w);
    std::vector<Int> coords;
    for (std::size_t k = 0; k < row.size(); ++k) coords.push_back(exact_int(row[k], w));
    rays.emplace_back(std::move(coords));
  }
  std::vector<Cone> cones;
  const auto& jc = array_at(member(j, "cones", where), where + ".cones");
  for (std::size_t i = 0; i < jc.size(); ++i) {
    const std::string w = where + ".cones[" + std::to_string(i) + "]";
    const auto& row = array_at(jc[i], w);
    std::vector<std::size_t> idx;
    for (const auto& x : row) {
      const Int v = exact_int(x, w);
      if (v < 0) throw ToricError(Errc::BadConeIndex, w + ": negative ray index " + std::to_string(v));
      idx.push_back(static_cast<std::size_t>(v));
    }
    cones.emplace_back(std::move(idx));
  }
  return Fan(rank, std::move(rays), std::move(cones));
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(path + ": " + e.what());
  }
}

}  // namespace

FanFile parse_fan_file(const json& j) {
  const Int rank = exact_int(member(j, "rank", "fan"), "fan.rank");
  if (rank != 2 && rank != 3) throw ToricError(Errc::RankMismatch, "rank must be 2 or 3, got " + std::to_string(rank));
  FanFile f{parse_fan_body(j, static_cast<std::size_t>(rank), "fan"), {}, {}, {}, {}};
  if (j.contains("flags")) {
    const auto& flags = j.at("flags");
    if (!flags.is_object()) fail("fan.flags: expected an object");
    f.quasiprojective = optional_flag(flags, "quasiprojective");
    f.complete_hint = optional_flag(flags, "complete_hint");
  }
  if (j.contains("refinement")) f.refinement = parse_fan_body(j.at("refinement"), static_cast<std::size_t>(rank), "refinement");
  if (j.contains("homology")) f.homology = parse_homology(j.at("homology"));
  return f;
}

FanFile load_fan_file(const std::string& path) { return parse_fan_file(read_json(path)); }

GradedGroups parse_homology(const json& j) {
  const Int top = exact_int(member(j, "top_degree", "homology"), "homology.top_degree");
  if (top < 0 || top > 64) fail("homology.top_degree out of range");
  GradedGroups h(static_cast<int>(top));
  const auto& groups = array_at(member(j, "groups", "homology"), "homology.groups");
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const std::string w = "homology.groups[" + std::to_string(i) + "]";
    const Int degree = exact_int(member(groups[i], "degree", w), w + ".degree");
    const Int free_rank = groups[i].contains("free_rank") ? exact_int(groups[i].at("free_rank"), w + ".free_rank") : 0;
    std::vector<Int> torsion;
    if (groups[i].contains("torsion"))
      for (const auto& t : array_at(groups[i].at("torsion"), w + ".torsion")) torsion.push_back(exact_int(t, w + ".torsion"));
    if (degree < 0 || degree > top) fail(w + ": degree " + std::to_string(degree) + " outside [0, top_degree]");
    if (!h.at(static_cast<int>(degree)).is_zero()) fail(w + ": degree " + std::to_string(degree) + " listed twice");
    h.set(static_cast<int>(degree), FGAbelianGroup::normalize(free_rank, torsion));
  }
  return h;
}

GradedGroups load_homology_file(const std::string& path) { return parse_homology(read_json(path)); }

json vector_to_json(const LatticeVector& v) { return json(v.coords()); }

json fan_to_json(const Fan& f) {
  json rays = json::array();
  for (const auto& r : f.rays()) rays.push_back(vector_to_json(r));
  json cones = json::array();
  for (const auto& c : f.max_cones()) cones.push_back(c.rays);
  return json{{"rank", f.rank()}, {"rays", rays}, {"cones", cones}};
}

json homology_to_json(const GradedGroups& h) {
  json groups = json::array();
  for (const auto& [deg, g] : h.by_degree())
    groups.push_back({{"degree", deg}, {"free_rank", g.free_rank()}, {"torsion", g.torsion()}});
  return json{{"top_degree", h.top_degree()}, {"groups", groups}};
}

json motive_to_json(const Motive& m) {
  json summands = json::array();
  for (const auto& s : m.summands()) {
    summands.push_back(
        {{"twist", s.twist}, {"shift", s.shift}, {"free_rank", s.group.free_rank()}, {"torsion", s.group.torsion()}});
  }
  return json{{"text", m.to_string()}, {"summands", summands}};
}

Motive motive_from_json(const json& j) {
  const json& list = j.is_object() ? member(j, "summands", "motive") : j;
  std::vector<MotiveSummand> out;
  for (std::size_t i = 0; i < array_at(list, "motive.summands").size(); ++i) {
    const auto& s = list[i];
    const std::string w = "motive.summands[" + std::to_string(i) + "]";
    std::vector<Int> torsion;
    if (s.contains("torsion"))
      for (const auto& t : array_at(s.at("torsion"), w + ".torsion")) torsion.push_back(exact_int(t, w + ".torsion"));
    const Int free_rank = s.contains("free_rank") ? exact_int(s.at("free_rank"), w + ".free_rank") : 0;
    out.push_back(MotiveSummand{FGAbelianGroup::normalize(free_rank, torsion),
                                static_cast<int>(exact_int(member(s, "twist", w), w + ".twist")),
                                static_cast<int>(exact_int(member(s, "shift", w), w + ".shift"))});
  }
  return Motive(std::move(out));
}

}  // namespace toricmot::cli
