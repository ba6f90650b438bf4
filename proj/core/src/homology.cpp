#include "toricmot/homology.hpp"

#include <algorithm>
#include <sstream>

#include "toricmot/error.hpp"
#include "toricmot/resolution.hpp"

namespace toricmot {

FGAbelianGroup FGAbelianGroup::normalize(Int free_rank, std::span<const Int> divisors) {
  if (free_rank < 0) throw ToricError(Errc::NegativeRank, "negative free rank " + std::to_string(free_rank));
  FGAbelianGroup g;
  g.free_rank_ = free_rank;
  if (divisors.empty()) return g;
  IntegerMatrix diag(divisors.size(), divisors.size());
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (divisors[i] <= 0) {
      throw ToricError(Errc::BadParameters, "torsion divisors must be positive, got " + std::to_string(divisors[i]));
    }
    diag(i, i) = divisors[i];
  }
  for (Int d : smith_normal_form(diag).diag)
    if (d > 1) g.torsion_.push_back(d);
  return g;
}

FGAbelianGroup FGAbelianGroup::cyclic(Int order) {
  const Int divisors[] = {order};
  return normalize(0, divisors);
}

FGAbelianGroup FGAbelianGroup::direct_sum(const FGAbelianGroup& other) const {
  std::vector<Int> t = torsion_;
  t.insert(t.end(), other.torsion_.begin(), other.torsion_.end());
  return normalize(checked_add(free_rank_, other.free_rank_), t);
}

std::string FGAbelianGroup::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << 'Z';
    if (free_rank_ > 1) os << '^' << free_rank_;
    first = false;
  }
  for (Int t : torsion_) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

GradedGroups::GradedGroups(int top_degree) : top_degree_(top_degree) {
  if (top_degree < 0) throw ToricError(Errc::BadParameters, "negative top degree");
}

FGAbelianGroup GradedGroups::at(int degree) const {
  auto it = by_degree_.find(degree);
  return it == by_degree_.end() ? FGAbelianGroup{} : it->second;
}

void GradedGroups::set(int degree, FGAbelianGroup g) {
  if (degree < 0 || degree > top_degree_) {
    throw ToricError(Errc::BadParameters, "degree " + std::to_string(degree) + " outside [0, " +
                                              std::to_string(top_degree_) + "]");
  }
  if (g.is_zero()) {
    by_degree_.erase(degree);
  } else {
    by_degree_[degree] = std::move(g);
  }
}

bool GradedGroups::only_even_free() const {
  return std::all_of(by_degree_.begin(), by_degree_.end(),
                     [](const auto& kv) { return kv.first % 2 == 0 && kv.second.is_free(); });
}

std::string GradedGroups::to_string() const {
  if (by_degree_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [deg, g] : by_degree_) {
    if (!first) os << ' ';
    os << 'H' << deg << '=' << g.to_string();
    first = false;
  }
  return os.str();
}

GradedGroups surface_bm_homology(const FanProfile& p) {
  if (p.d.size() != 3) throw ToricError(Errc::RankMismatch, "surface homology needs a rank-2 fan profile");
  const Int d0 = static_cast<Int>(p.d[0]);
  const Int d1 = static_cast<Int>(p.d[1]);
  const Int d2 = static_cast<Int>(p.d[2]);
  const Int s = static_cast<Int>(p.span_dim);
  auto need = [](Int v, const char* what) {
    if (v < 0) throw ToricError(Errc::NegativeRank, std::string(what) + " rank formula is negative");
    return v;
  };

  GradedGroups h(4);
  if (p.is_complete) h.set(0, FGAbelianGroup::free(1));
  if (!p.is_complete) h.set(1, FGAbelianGroup::free(need(-d2 + d1 - d0, "H1")));
  std::vector<Int> torsion;
  if (p.index_m) torsion.push_back(*p.index_m);
  h.set(2, FGAbelianGroup::normalize(need(d1 - s, "H2"), torsion));
  h.set(3, FGAbelianGroup::free(need(2 - s, "H3")));
  h.set(4, FGAbelianGroup::free(1));
  return h;
}

GradedGroups cellular_bm_homology(std::span<const Int> cell_counts) {
  const int top = cell_counts.empty() ? 0 : 2 * static_cast<int>(cell_counts.size() - 1);
  GradedGroups h(top);
  for (std::size_t i = 0; i < cell_counts.size(); ++i) {
    if (cell_counts[i] < 0) throw ToricError(Errc::BadParameters, "negative cell count");
    h.set(2 * static_cast<int>(i), FGAbelianGroup::free(cell_counts[i]));
  }
  return h;
}

GradedGroups tree_exceptional_homology(const ExceptionalModel& e) {
  GradedGroups h(2);
  h.set(0, FGAbelianGroup::free(static_cast<Int>(e.num_components)));
  h.set(2, FGAbelianGroup::free(static_cast<Int>(e.total_lines)));
  return h;
}

GradedGroups curve_homology(std::span<const Int> branch_counts) {
  Int total = 0;
  for (Int b : branch_counts) {
    if (b < 1) throw ToricError(Errc::BadBranchCount, "branch counts must be >= 1, got " + std::to_string(b));
    total = checked_add(total, b);
  }
  // H0(E) -> H0(Z) + H0(P^1): each preimage point goes to its singular
  // point and (with a sign) to the point class of the normalization.
  const std::size_t n = branch_counts.size();
  IntegerMatrix alpha(n + 1, static_cast<std::size_t>(total));
  std::size_t col = 0;
  for (std::size_t z = 0; z < n; ++z) {
    for (Int b = 0; b < branch_counts[z]; ++b, ++col) {
      alpha(z, col) = 1;
      alpha(n, col) = -1;
    }
  }
  SmithForm s = smith_normal_form(alpha);
  const Int r = static_cast<Int>(s.rank);
  std::vector<Int> coker_torsion;
  for (Int d : s.diag)
    if (d > 1) coker_torsion.push_back(d);

  GradedGroups h(2);
  h.set(0, FGAbelianGroup::normalize(static_cast<Int>(n + 1) - r, coker_torsion));
  h.set(1, FGAbelianGroup::free(total - r));
  h.set(2, FGAbelianGroup::free(1));
  return h;
}

}  // namespace toricmot
