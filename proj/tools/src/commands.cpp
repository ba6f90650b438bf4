#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <future>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "io.hpp"
#include "toricmot/error.hpp"
#include "toricmot/pipeline.hpp"

namespace toricmot::cli {

namespace {

struct Report {
  int code = kOk;
  json data = json::object();
  std::string text;
  std::string error;
};

struct Options {
  bool as_json = false;
  std::string homology_path;
  bool compact_support = false;
  int bound = default_search_bound();
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int code_for(Errc e) {
  switch (e) {
    case Errc::HypothesisViolated: return kUndetermined;
    case Errc::CellularityNotCertified: return kNotCertified;
    default: return kValidation;
  }
}

Report guarded(const std::string& label, const std::function<void(Report&)>& body) {
  Report r;
  try {
    body(r);
  } catch (const UsageError& e) {
    r = Report{kUsage, json::object(), {}, e.what()};
    r.data["error"] = {{"kind", "Usage"}, {"message", e.what()}};
  } catch (const ToricError& e) {
    r = Report{code_for(e.code()), json::object(), {}, e.what()};
    r.data["error"] = {{"kind", std::string(errc_name(e.code()))}, {"message", e.what()}};
  } catch (const std::exception& e) {
    r = Report{kValidation, json::object(), {}, e.what()};
    r.data["error"] = {{"kind", "Error"}, {"message", e.what()}};
  }
  r.data["file"] = label;
  r.data["exit_code"] = r.code;
  return r;
}

std::string join_vectors(const std::vector<LatticeVector>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].to_string();
  return s;
}

json cone_json(const Fan& f, const Cone& c) {
  json gens = json::array();
  for (const auto& g : f.generators(c)) gens.push_back(vector_to_json(g));
  return json{{"indices", c.rays}, {"rays", gens}, {"dimension", cone_dimension(f, c)}};
}

json certificate_json(const CellularityCertificate& c) {
  json j{{"status", std::string(status_name(c.status))},
         {"quasiprojective_source", std::string(source_name(c.quasiprojective_source))}};
  if (c.u) j["u"] = vector_to_json(*c.u);
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j;
}

std::string certificate_text(const CellularityCertificate& c) {
  std::string s = std::string(status_name(c.status));
  if (c.u) s += ", u = " + c.u->to_string();
  s += " (quasiprojective: " + std::string(source_name(c.quasiprojective_source)) + ")";
  if (!c.reason.empty()) s += ": " + c.reason;
  return s;
}

json graph_json(const OrbitGraph& g) {
  json vertices = json::array();
  for (const auto& v : g.vertices) {
    vertices.push_back({{"kind", v.kind == OrbitGraph::VertexKind::FixedPoint ? "fixed-point" : "open-end"},
                        {"cone", v.cone.rays}});
  }
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back({{"face", e.face.rays}, {"ends", {e.a, e.b}}});
  return json{{"vertices", vertices},
              {"edges", edges},
              {"components", g.component_count},
              {"first_betti", g.first_betti},
              {"junctions", g.junction_count()}};
}

std::string graph_text(const OrbitGraph& g, std::size_t isolated) {
  std::ostringstream os;
  os << g.edges.size() << " singular curve(s), " << isolated << " isolated point(s), " << g.junction_count()
     << " junction(s), b1 = " << g.first_betti;
  return os.str();
}

json cofiber_json(const CofiberReport& c) {
  json cons = json::array();
  for (const auto& t : c.constraints) {
    cons.push_back({{"twist", t.twist},
                    {"source_rank", t.source_rank},
                    {"target_rank", t.target_rank},
                    {"euler_defect", t.euler_defect},
                    {"max_map_rank", t.max_map_rank}});
  }
  return json{{"source", motive_to_json(c.source)},
              {"target", motive_to_json(c.target)},
              {"constraints", cons},
              {"status", c.status}};
}

CellularityOptions options_from(const FanFile& ff, const Options& opt) {
  CellularityOptions c;
  c.quasiprojective = ff.quasiprojective;
  c.search_bound = opt.bound;
  return c;
}

FanFile load_checked(const std::string& path) {
  FanFile ff = load_fan_file(path);
  const FanProfile p = validate_fan(ff.fan);
  if (ff.complete_hint && *ff.complete_hint != p.is_complete) {
    throw ToricError(Errc::BadParameters, std::string("complete_hint says ") + (*ff.complete_hint ? "complete" : "not complete") +
                                              " but the fan is " + (p.is_complete ? "complete" : "not complete"));
  }
  return ff;
}

// ---------------------------------------------------------------------------

void fan_check(const std::string& path, Report& r) {
  const FanFile ff = load_checked(path);
  const Fan& f = ff.fan;
  const FanProfile p = validate_fan(f);
  if (ff.refinement) check_refinement(f, *ff.refinement);
  const auto singular = minimal_singular_cones(f);

  std::ostringstream os;
  os << path << ": valid rank-" << f.rank() << " fan, " << f.rays().size() << " ray(s), " << f.max_cones().size()
     << " maximal cone(s)\n";
  os << "  d = (";
  for (std::size_t i = 0; i < p.d.size(); ++i) os << (i ? "," : "") << p.d[i];
  os << "), span " << p.span_dim << ", " << (p.is_complete ? "complete" : "not complete");
  if (p.index_m) os << ", index " << *p.index_m;
  os << "\n";
  if (p.degenerate(f.rank())) os << "  degenerate fan: rays span less than the lattice, torsion read as trivial\n";
  os << "  minimal singular cones: " << singular.size() << "\n";
  json sj = json::array();
  for (const auto& c : singular) {
    json cj = cone_json(f, c);
    os << "    " << f.describe(c) << "  dim " << cone_dimension(f, c);
    if (c.size() == 2) {
      const Int m = cone_multiplicity(f, c);
      cj["multiplicity"] = m;
      os << ", multiplicity " << m;
    }
    os << "\n";
    sj.push_back(cj);
  }
  if (ff.refinement) os << "  refinement: valid, " << (is_smooth(*ff.refinement) ? "smooth" : "singular") << "\n";

  json pj{{"d", p.d}, {"span_dim", p.span_dim}, {"complete", p.is_complete}, {"degenerate", p.degenerate(f.rank())}};
  if (p.index_m) pj["index"] = *p.index_m;
  r.data = {{"valid", true}, {"rank", f.rank()}, {"profile", pj}, {"minimal_singular_cones", sj}, {"smooth", singular.empty()}};
  if (ff.refinement) r.data["refinement_smooth"] = is_smooth(*ff.refinement);
  r.text = os.str();
}

void resolve(const std::string& path, Report& r) {
  const FanFile ff = load_checked(path);
  if (ff.fan.rank() != 2) throw UsageError("resolve handles rank-2 fans; supply a refinement for rank 3");
  const ResolutionResult res = resolve_fan_2d(ff.fan);
  const ExceptionalModel e = res.exceptional_model();
  const Motive em = exceptional_motive(e);

  std::ostringstream os;
  os << path << ": added " << res.added_rays.size() << " ray(s)\n";
  if (!res.added_rays.empty()) os << "  added rays: " << join_vectors(res.added_rays) << "\n";
  json chains = json::array();
  for (const auto& [cone, len] : res.per_cone_chains) {
    os << "  chain over " << ff.fan.describe(cone) << ": " << len << "\n";
    chains.push_back({{"cone", cone.rays}, {"length", len}});
  }
  os << "  exceptional locus: " << e.num_components << " component(s), " << e.total_lines << " line(s); motive "
     << em.to_string() << "\n";
  os << "  refined fan: rays " << join_vectors(res.refined_fan.rays()) << "; cones";
  for (const auto& c : res.refined_fan.max_cones()) {
    os << " [";
    for (std::size_t i = 0; i < c.rays.size(); ++i) os << (i ? "," : "") << c.rays[i];
    os << "]";
  }
  os << "\n";

  json added = json::array();
  for (const auto& v : res.added_rays) added.push_back(vector_to_json(v));
  r.data = {{"added_rays", added},
            {"chains", chains},
            {"exceptional", {{"components", e.num_components}, {"lines", e.total_lines}, {"chain_lengths", e.chain_lengths}}},
            {"exceptional_motive", motive_to_json(em)},
            {"refined_fan", fan_to_json(res.refined_fan)}};
  r.text = os.str();
}

void surface_motive(const std::string& path, const FanFile& ff, const Options& opt, Report& r) {
  if (!opt.homology_path.empty()) throw UsageError("--homology applies to rank-3 fans only");
  const SurfaceMotiveReport rep = toric_surface_motive(ff.fan, options_from(ff, opt));
  const std::string kind = rep.complete && !opt.compact_support ? "M" : "M^c";

  std::ostringstream os;
  os << path << ": " << kind << " = " << rep.motive.to_string() << "\n";
  os << "  status: determined\n";
  os << "  pure Tate: " << (rep.pure_tate ? "yes" : "no") << "\n";
  os << "  homology: " << rep.homology.to_string() << "\n";
  if (rep.degenerate) os << "  degenerate fan: torsion term read as trivial\n";
  const std::size_t added = rep.resolution ? rep.resolution->added_rays.size() : 0;
  os << "  resolution: " << added << " ray(s) added\n";
  os << "  certificate: " << certificate_text(rep.certificate) << "\n";

  r.data = {{"status", "determined"},
            {"kind", kind},
            {"motive", motive_to_json(rep.motive)},
            {"pure_tate", rep.pure_tate},
            {"complete", rep.complete},
            {"degenerate", rep.degenerate},
            {"homology", homology_to_json(rep.homology)},
            {"certificate", certificate_json(rep.certificate)}};
  if (rep.resolution) {
    json a = json::array();
    for (const auto& v : rep.resolution->added_rays) a.push_back(vector_to_json(v));
    r.data["resolution"] = {{"added_rays", a}, {"chain_lengths", rep.resolution->exceptional_model().chain_lengths}};
  }
  if (auto cof = surface_cofiber(rep)) {
    os << "  cofiber presentation: " << cof->source.to_string() << " -> " << cof->target.to_string() << " ("
       << cof->status << ")\n";
    r.data["cofiber"] = cofiber_json(*cof);
  }
  r.text = os.str();
}

void threefold(const std::string& path, const FanFile& ff, const Options& opt, Report& r) {
  std::optional<GradedGroups> h = ff.homology;
  if (!opt.homology_path.empty()) h = load_homology_file(opt.homology_path);
  if (!h) throw UsageError("rank-3 fans need --homology or an embedded \"homology\" section");
  const ThreefoldMotiveReport rep = threefold_motive(ff.fan, *h, ff.refinement, options_from(ff, opt));
  const std::string kind = rep.complete && !opt.compact_support ? "M" : "M^c";
  const std::string status(motive_status_name(rep.status));

  std::ostringstream os;
  if (rep.motive) os << path << ": " << kind << " = " << rep.motive->to_string() << "\n";
  else os << path << ": motive " << status << "\n";
  os << "  status: " << status << "\n";
  if (!rep.reason.empty()) os << "  reason: " << rep.reason << "\n";
  if (rep.motive) os << "  pure Tate: " << (is_pure_tate(*rep.motive) ? "yes" : "no") << "\n";
  os << "  homology: " << h->to_string() << "\n";
  os << "  singular locus: " << graph_text(rep.singular_curves, rep.isolated_points.size()) << "\n";
  if (rep.certificate) os << "  certificate: " << certificate_text(*rep.certificate) << "\n";
  for (const auto& a : rep.assumptions) os << "  assumption: " << a << "\n";

  json iso = json::array();
  for (const auto& c : rep.isolated_points) iso.push_back(c.rays);
  r.data = {{"status", status},
            {"kind", kind},
            {"complete", rep.complete},
            {"homology", homology_to_json(*h)},
            {"singular_locus", {{"curves", graph_json(rep.singular_curves)}, {"isolated_points", iso}}},
            {"assumptions", rep.assumptions}};
  if (rep.motive) {
    r.data["motive"] = motive_to_json(*rep.motive);
    r.data["pure_tate"] = is_pure_tate(*rep.motive);
  }
  if (rep.violated_index) r.data["violated_index"] = *rep.violated_index;
  if (!rep.reason.empty()) r.data["reason"] = rep.reason;
  if (rep.certificate) r.data["certificate"] = certificate_json(*rep.certificate);
  r.text = os.str();
  switch (rep.status) {
    case MotiveStatus::Determined: r.code = kOk; break;
    case MotiveStatus::Undetermined: r.code = kUndetermined; break;
    default: r.code = kNotCertified; break;
  }
}

void motive(const std::string& path, const Options& opt, Report& r) {
  const FanFile ff = load_checked(path);
  if (ff.fan.rank() == 2) surface_motive(path, ff, opt, r);
  else threefold(path, ff, opt, r);
}

void cellularity(const std::string& path, const Options& opt, Report& r) {
  const FanFile ff = load_checked(path);
  CellularityOptions co = options_from(ff, opt);
  const Fan* target = &ff.fan;
  std::optional<Fan> resolved;
  std::string note;
  if (!ff.refinement && ff.fan.rank() == 2 && !is_smooth(ff.fan)) {
    resolved = resolve_fan_2d(ff.fan).refined_fan;
    note = "minimal resolution";
  } else if (ff.refinement) {
    check_refinement(ff.fan, *ff.refinement);
    resolved = ff.refinement;
    note = "supplied refinement";
  }
  if (resolved) {
    target = &*resolved;
    const bool inherited = ff.quasiprojective.value_or(false) || ff.fan.max_cones().size() == 1;
    if (co.quasiprojective != false) {
      co.quasiprojective.reset();
      co.refines_quasiprojective = inherited;
    }
  }
  const CellularityCertificate cert = certify_cellular(*target, co);

  std::ostringstream os;
  os << path << ": " << certificate_text(cert) << "\n";
  if (resolved) os << "  certified the " << note << "\n";
  r.data = {{"certificate", certificate_json(cert)}, {"certified_fan", resolved ? note : std::string("input")}};
  if (cert.status == CellularityStatus::Obstructed) {
    // conditions a) and b) still make sense on the singular fan itself
    const RegularVectorSearch s = regular_vector_search(*target, co.search_bound);
    if (s.u) {
      os << "  regular vector on the input fan: " << s.u->to_string() << "\n";
      r.data["regular_vector_search"] = {{"u", vector_to_json(*s.u)}};
    } else {
      os << "  regular vector search on the input fan: " << s.reason << "\n";
      r.data["regular_vector_search"] = {{"reason", s.reason}};
    }
  }
  if (ff.fan.rank() == 3 && !is_smooth(ff.fan)) {
    std::vector<Cone> curves;
    std::size_t isolated = 0;
    for (const auto& c : minimal_singular_cones(ff.fan)) {
      if (cone_dimension(ff.fan, c) == 3) ++isolated;
      else curves.push_back(c);
    }
    const OrbitGraph g = orbit_graph(ff.fan, curves);
    os << "  singular locus: " << graph_text(g, isolated) << "\n";
    r.data["singular_locus"] = graph_json(g);
  }
  r.text = os.str();
  r.code = cert.cellular() ? kOk : kNotCertified;
}

void curve(const std::string& branches, Report& r) {
  std::vector<Int> b;
  std::stringstream ss(branches);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty()) continue;
    std::size_t used = 0;
    Int v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw ToricError(Errc::ParseError, "bad branch count '" + item + "'");
    b.push_back(v);
  }
  const Motive m = curve_motive(b);
  r.text = "M = " + m.to_string() + "\n  pure Tate: " + (is_pure_tate(m) ? "yes" : "no") + "\n";
  r.data = {{"branches", b}, {"motive", motive_to_json(m)}, {"pure_tate", is_pure_tate(m)}};
}

int emit(const std::vector<Report>& reports, const Options& opt, std::ostream& out, std::ostream& err) {
  int code = kOk;
  for (const auto& r : reports) code = std::max(code, r.code);
  if (opt.as_json) {
    if (reports.size() == 1) {
      out << reports.front().data.dump(2) << "\n";
    } else {
      json all = json::array();
      for (const auto& r : reports) all.push_back(r.data);
      out << all.dump(2) << "\n";
    }
  } else {
    for (const auto& r : reports) {
      out << r.text;
      if (!r.error.empty()) err << r.data["file"].get<std::string>() << ": error: " << r.error << "\n";
    }
  }
  return code;
}

std::vector<Report> batch(const std::vector<std::string>& files,
                          const std::function<void(const std::string&, Report&)>& body) {
  std::vector<std::future<Report>> jobs;
  for (const auto& path : files) {
    jobs.push_back(std::async(std::launch::async, [&body, path] {
      return guarded(path, [&](Report& r) { body(path, r); });
    }));
  }
  std::vector<Report> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Motives of toric varieties from fan data", "toricmot"};
  app.set_version_flag("--version", "toricmot 0.1.0");
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::vector<std::string> files;
  std::string branches;
  bool branches_given = false;
  app.add_flag("--json", opt.as_json, "Structured JSON output");

  auto* fc = app.add_subcommand("fan-check", "Validate fans and report profile and singular cones");
  fc->add_option("files", files, "Fan files")->required();

  auto* rs = app.add_subcommand("resolve", "Minimal smooth refinement of a rank-2 fan");
  rs->add_option("files", files, "Fan files")->required();

  auto* mo = app.add_subcommand("motive", "Motive of the toric variety of each fan");
  mo->add_option("files", files, "Fan files")->required();
  mo->add_option("--homology", opt.homology_path, "Borel-Moore homology file (rank 3)");
  mo->add_flag("--compact-support", opt.compact_support, "Label complete results as M^c");
  mo->add_option("--bound", opt.bound, "Search bound for the regular vector")->check(CLI::Range(1, 1000));

  auto* cu = app.add_subcommand("curve", "Motive of a rational curve from its branch counts");
  cu->add_option("--branches", branches, "Comma-separated branch counts, e.g. 2,2,2")->required();

  auto* ce = app.add_subcommand("cellularity", "Cellularity certificate for each fan");
  ce->add_option("files", files, "Fan files")->required();
  ce->add_option("--bound", opt.bound, "Search bound for the regular vector")->check(CLI::Range(1, 1000));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }
  branches_given = cu->parsed();

  std::vector<Report> reports;
  if (fc->parsed()) {
    reports = batch(files, fan_check);
  } else if (rs->parsed()) {
    reports = batch(files, resolve);
  } else if (mo->parsed()) {
    reports = batch(files, [&](const std::string& p, Report& r) { motive(p, opt, r); });
  } else if (ce->parsed()) {
    reports = batch(files, [&](const std::string& p, Report& r) { cellularity(p, opt, r); });
  } else if (branches_given) {
    reports.push_back(guarded("curve", [&](Report& r) { curve(branches, r); }));
  }
  return emit(reports, opt, out, err);
}

}  // namespace toricmot::cli
