#include "ahyp/obstruction.hpp"

#include <algorithm>

#include "ahyp/errors.hpp"

namespace ahyp {

std::string CandidateReport::name() const {
  std::string s;
  for (const auto& p : derived_parts) s += (s.empty() ? "" : "+") + p.name;
  return s.empty() ? "0" : s;
}

std::string_view to_string(FormVerdict v) {
  return v == FormVerdict::NoStandardForm ? "NoStandardForm" : "Inconclusive";
}

Budgets obstruction_budgets(const SimpleRealForm& g, const ReductiveDescriptor& h) {
  const auto ih = derived_invariants(h);
  const int ahyp_g = ahyp(g);
  if (ahyp_g < ih.ahyp || g.real_rank() < ih.real_rank || g.dim_p < ih.d)
    throw SpaceObstruction(g.name + "/" + h.str() + " is inadmissible: ahyp " +
                           std::to_string(ahyp_g) + " vs " + std::to_string(ih.ahyp) +
                           ", real rank " + std::to_string(g.real_rank()) + " vs " +
                           std::to_string(ih.real_rank) + ", d " + std::to_string(g.dim_p) +
                           " vs " + std::to_string(ih.d));
  return {ahyp_g - ih.ahyp, g.real_rank() - ih.real_rank, g.rank_maxcompact, g.dim_p - ih.d,
          g.dim_g};
}

std::vector<SimpleRealForm> candidate_simple_parts(const SimpleRealForm& g,
                                                   const ReductiveDescriptor& h) {
  const Budgets b = obstruction_budgets(g, h);
  return scan_catalog([&](const SimpleRealForm& s) {
    return ahyp(s) <= b.ahyp && s.real_rank() <= b.real_rank &&
           s.rank_maxcompact <= b.rank_maxcompact && s.dim_p <= b.dim_p && s.dim_g <= b.dim_g;
  });
}

namespace {

struct Totals {
  int ahyp = 0;
  int real_rank = 0;
  int rank_maxcompact = 0;
  int dim_p = 0;
  int dim_g = 0;
};

CandidateReport make_report(const std::vector<SimpleRealForm>& parts, const Totals& t,
                            const Budgets& b) {
  const int c_max = b.real_rank - t.real_rank;
  return {parts,
          t.dim_p,
          t.dim_p + c_max,
          {t.ahyp, b.ahyp},
          {t.real_rank, b.real_rank},
          {t.rank_maxcompact, b.rank_maxcompact},
          {t.dim_p, b.dim_p},
          {t.dim_g, b.dim_g}};
}

void extend(const std::vector<SimpleRealForm>& candidates, const std::vector<int>& ahyps,
            const Budgets& b, std::size_t start, std::vector<SimpleRealForm>& parts, Totals t,
            std::vector<CandidateReport>& out) {
  out.push_back(make_report(parts, t, b));
  for (std::size_t i = start; i < candidates.size(); ++i) {
    const auto& s = candidates[i];
    Totals next{t.ahyp + ahyps[i], t.real_rank + s.real_rank(),
                t.rank_maxcompact + s.rank_maxcompact, t.dim_p + s.dim_p, t.dim_g + s.dim_g};
    if (next.ahyp > b.ahyp || next.real_rank > b.real_rank ||
        next.rank_maxcompact > b.rank_maxcompact || next.dim_p > b.dim_p || next.dim_g > b.dim_g)
      continue;
    parts.push_back(s);
    extend(candidates, ahyps, b, i, parts, next, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<CandidateReport> candidate_combinations(const SimpleRealForm& g,
                                                    const ReductiveDescriptor& h) {
  const Budgets b = obstruction_budgets(g, h);
  const auto candidates = candidate_simple_parts(g, h);
  std::vector<int> ahyps;
  for (const auto& s : candidates) ahyps.push_back(ahyp(s));
  std::vector<CandidateReport> out;
  std::vector<SimpleRealForm> parts;
  extend(candidates, ahyps, b, 0, parts, Totals{}, out);
  return out;
}

StandardFormVerdict standard_form_verdict(const SimpleRealForm& g, const ReductiveDescriptor& h,
                                          std::size_t top) {
  const Budgets b = obstruction_budgets(g, h);
  const int d_h = derived_invariants(h).d;
  auto combos = candidate_combinations(g, h);

  StandardFormVerdict v{g.dim_p, d_h, g.dim_p - d_h, FormVerdict::NoStandardForm, 0, b,
                        combos.size(), {}, {}};
  for (const auto& c : combos) {
    v.max_achievable = std::max(v.max_achievable, c.d_hi);
    if (c.reaches(v.required_d)) v.witnesses.push_back(c);
  }
  if (!v.witnesses.empty()) v.verdict = FormVerdict::Inconclusive;

  std::stable_sort(combos.begin(), combos.end(),
                   [](const auto& a, const auto& c) { return a.d_hi > c.d_hi; });
  if (combos.size() > top) combos.resize(top);
  v.top_candidates = std::move(combos);
  return v;
}

}  // namespace ahyp
