#include "toricmot/motive.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "toricmot/error.hpp"

namespace toricmot {

Motive::Motive(std::vector<MotiveSummand> summands) {
  std::map<std::pair<int, int>, FGAbelianGroup> slots;
  for (auto& s : summands) {
    if (s.twist < 0) throw ToricError(Errc::BadParameters, "negative Tate twist " + std::to_string(s.twist));
    if (s.shift != 0 && s.shift != 1) {
      throw ToricError(Errc::BadParameters, "shift must be 0 or 1, got " + std::to_string(s.shift));
    }
    auto& slot = slots[{s.twist, s.shift}];
    slot = slot.direct_sum(s.group);
  }
  for (auto& [key, group] : slots) {
    if (group.is_zero()) continue;
    summands_.push_back(MotiveSummand{std::move(group), key.first, key.second});
  }
}

Motive Motive::direct_sum(const Motive& other) const {
  std::vector<MotiveSummand> all = summands_;
  all.insert(all.end(), other.summands_.begin(), other.summands_.end());
  return Motive(std::move(all));
}

namespace {

std::string decorate(const std::string& base, int twist, int shift) {
  std::string out = base;
  if (twist != 0) out += "{" + std::to_string(twist) + "}";
  if (shift != 0) out += "[" + std::to_string(shift) + "]";
  return out;
}

}  // namespace

std::string Motive::to_string() const {
  if (summands_.empty()) return "0";
  std::vector<std::string> terms;
  for (const auto& s : summands_) {
    const auto& g = s.group;
    if (g.free_rank() > 0) {
      std::string base = g.free_rank() == 1 ? "Z" : "Z^" + std::to_string(g.free_rank());
      terms.push_back(decorate(base, s.twist, s.shift));
    }
    const auto& t = g.torsion();
    for (std::size_t i = 0; i < t.size();) {
      std::size_t j = i;
      while (j < t.size() && t[j] == t[i]) ++j;
      const std::size_t run = j - i;
      std::string base = "Z/" + std::to_string(t[i]);
      if (run > 1) base = "(" + base + ")^" + std::to_string(run);
      terms.push_back(decorate(base, s.twist, s.shift));
      i = j;
    }
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) os << " + ";
    os << terms[i];
  }
  return os.str();
}

Motive Motive::parse(const std::string& text) {
  static const std::regex term_re(
      R"(^(?:Z(?:\^(\d+))?|Z/(\d+)|\(Z/(\d+)\)\^(\d+))(?:\{(\d+)\})?(?:\[(\d+)\])?$)");
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\n");
    const auto e = s.find_last_not_of(" \t\n");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  };
  const std::string body = trim(text);
  if (body == "0") return Motive{};

  std::vector<MotiveSummand> summands;
  std::size_t start = 0;
  for (;;) {
    const std::size_t plus = body.find('+', start);
    const std::string term = trim(body.substr(start, plus == std::string::npos ? std::string::npos : plus - start));
    std::smatch m;
    if (!std::regex_match(term, m, term_re)) throw ToricError(Errc::ParseError, "bad motive term '" + term + "'");
    MotiveSummand s;
    if (m[2].matched) {
      s.group = FGAbelianGroup::cyclic(std::stoll(m[2]));
    } else if (m[3].matched) {
      std::vector<Int> t(static_cast<std::size_t>(std::stoll(m[4])), std::stoll(m[3]));
      s.group = FGAbelianGroup::normalize(0, t);
    } else {
      s.group = FGAbelianGroup::free(m[1].matched ? std::stoll(m[1]) : 1);
    }
    s.twist = m[5].matched ? std::stoi(m[5]) : 0;
    s.shift = m[6].matched ? std::stoi(m[6]) : 0;
    summands.push_back(std::move(s));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return Motive(std::move(summands));
}

std::optional<int> first_hypothesis_violation(const GradedGroups& h) {
  const int dim = h.top_degree() / 2;
  for (int i = 0; i <= dim; ++i) {
    if (!h.at(2 * i).is_free() && !h.at(2 * i + 1).is_zero()) return i;
  }
  return std::nullopt;
}

Motive assemble_motive(const GradedGroups& h) {
  if (auto bad = first_hypothesis_violation(h)) throw HypothesisViolated(*bad);
  std::vector<MotiveSummand> summands;
  for (const auto& [degree, group] : h.by_degree()) {
    summands.push_back(MotiveSummand{group, degree / 2, degree % 2});
  }
  return Motive(std::move(summands));
}

Motive cellular_motive(std::span<const Int> cell_counts) {
  std::vector<MotiveSummand> summands;
  for (std::size_t i = 0; i < cell_counts.size(); ++i) {
    if (cell_counts[i] < 0) throw ToricError(Errc::BadParameters, "negative cell count");
    summands.push_back(MotiveSummand{FGAbelianGroup::free(cell_counts[i]), static_cast<int>(i), 0});
  }
  return Motive(std::move(summands));
}

Motive curve_motive(std::span<const Int> branch_counts) {
  // The normalization square is a cellular resolution, and the curve's
  // homology is torsion-free, so the direct-sum formula applies.
  return assemble_motive(curve_homology(branch_counts));
}

bool is_pure_tate(const Motive& m) {
  return std::all_of(m.summands().begin(), m.summands().end(),
                     [](const MotiveSummand& s) { return s.shift == 0 && s.group.is_free(); });
}

CofiberReport cofiber_diagnostic(const GradedGroups& e, const GradedGroups& z, const GradedGroups& xt) {
  for (const auto* h : {&e, &z, &xt}) {
    if (!h->only_even_free()) {
      throw ToricError(Errc::NonCellularInput, "cofiber inputs must have free homology in even degrees only, got " +
                                                   h->to_string());
    }
  }
  CofiberReport report;
  report.source = assemble_motive(e);
  report.target = assemble_motive(z).direct_sum(assemble_motive(xt));

  std::set<int> twists;
  for (const auto* h : {&e, &z, &xt})
    for (const auto& [deg, g] : h->by_degree()) twists.insert(deg / 2);
  for (int i : twists) {
    const Int a = e.at(2 * i).free_rank();
    const Int b = checked_add(z.at(2 * i).free_rank(), xt.at(2 * i).free_rank());
    report.constraints.push_back({i, a, b, b - a, std::min(a, b)});
  }
  return report;
}

}  // namespace toricmot
