#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ahyp/catalog.hpp"

namespace ahyp {

/// Upper bounds a reductive L acting properly and cocompactly on G/H must respect.
///
///   ahyp([l,l])            <= ahyp(g) - ahyp(h)
///   rank_R(l)              <= rank_R(g) - rank_R(h)
///   rank k_{[l,l]}         <= rank k          (L reductive in G, so k_l embeds in k)
///   dim p_{[l,l]}          <= d(g) - d(h)
///   dim [l,l]              <= dim g
struct Budgets {
  int ahyp;
  int real_rank;
  int rank_maxcompact;
  int dim_p;
  int dim_g;
};

struct BudgetUse {
  int used;
  int limit;
  bool ok() const { return used <= limit; }
};

/// One admissible noncompact derived part [l,l] and the range of d(L) it allows.
///
/// d(L) = dim p_0 + (split central dimension), and the split centre can take
/// any dimension from 0 to the unused real-rank budget, so the reachable d(L)
/// form the interval [d_lo, d_hi].
struct CandidateReport {
  std::vector<SimpleRealForm> derived_parts;
  int d_lo;
  int d_hi;
  BudgetUse ahyp;
  BudgetUse real_rank;
  BudgetUse rank_maxcompact;
  BudgetUse dim_p;
  BudgetUse dim_g;

  bool reaches(int d) const { return d_lo <= d && d <= d_hi; }
  /// "e6(-26)", "sl(2,R)+sl(2,R)", or "0" for a compact/trivial derived part.
  std::string name() const;
};

enum class FormVerdict { NoStandardForm, Inconclusive };
std::string_view to_string(FormVerdict v);

struct StandardFormVerdict {
  int d_g;
  int d_h;
  int required_d;
  FormVerdict verdict;
  int max_achievable;
  Budgets budgets;
  std::size_t candidate_count;
  /// Candidates whose interval contains required_d, in canonical order.
  std::vector<CandidateReport> witnesses;
  /// Highest d_hi first, ties in canonical order.
  std::vector<CandidateReport> top_candidates;
};

/// Throws SpaceObstruction when G/H already fails the rank inequalities
/// (or d(H) > d(G)).
Budgets obstruction_budgets(const SimpleRealForm& g, const ReductiveDescriptor& h);

/// Every catalog simple form within the per-part budgets, canonical order.
std::vector<SimpleRealForm> candidate_simple_parts(const SimpleRealForm& g,
                                                   const ReductiveDescriptor& h);

/// Every multiset of candidate parts (including the empty one) whose sums stay
/// within the budgets, in lexicographic order of part indices.
std::vector<CandidateReport> candidate_combinations(const SimpleRealForm& g,
                                                    const ReductiveDescriptor& h);

/// NoStandardForm iff no candidate interval contains d(g) - d(h). Never
/// asserts existence of a form.
StandardFormVerdict standard_form_verdict(const SimpleRealForm& g, const ReductiveDescriptor& h,
                                          std::size_t top = 10);

}  // namespace ahyp
