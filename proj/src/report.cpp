#include "ahyp/report.hpp"

namespace ahyp {

namespace {

Json header(const char* command, Json inputs, std::string_view verdict) {
  Json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["verdict"] = std::string(verdict);
  j["checks"] = Json::array();
  j["witnesses"] = Json::array();
  return j;
}

Json check(const std::string& name, int lhs, int rhs, bool passed) {
  Json c;
  c["name"] = name;
  c["lhs"] = lhs;
  c["rhs"] = rhs;
  c["passed"] = passed;
  return c;
}

Json form_json(const SimpleRealForm& f) {
  Json j;
  j["name"] = f.name;
  j["family"] = std::string(family_name(f.family));
  j["restricted_system"] = f.restricted_name();
  j["real_rank"] = f.real_rank();
  j["ahyp"] = ahyp(f);
  j["dim_g"] = f.dim_g;
  j["dim_k"] = f.dim_k;
  j["dim_p"] = f.dim_p;
  j["rank_maxcompact"] = f.rank_maxcompact;
  j["complex_as_real"] = f.is_complex_as_real;
  return j;
}

Json use_json(const BudgetUse& u) {
  Json j;
  j["used"] = u.used;
  j["limit"] = u.limit;
  return j;
}

Json word_json(const std::vector<int>& word) {
  Json w = Json::array();
  for (int i : word) w.push_back(i + 1);
  return w;
}

}  // namespace

Json to_json(const RationalVector& v) {
  Json j = Json::array();
  for (const auto& c : v.coords()) j.push_back(c.str());
  return j;
}

Json to_json(const Matrix& m) {
  Json j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) j.push_back(to_json(m.row(r)));
  return j;
}

Json to_json(const CandidateReport& c) {
  Json j;
  j["derived_part"] = c.name();
  Json parts = Json::array();
  for (const auto& p : c.derived_parts) parts.push_back(p.name);
  j["parts"] = std::move(parts);
  j["d_interval"] = Json::array({c.d_lo, c.d_hi});
  Json b;
  b["ahyp"] = use_json(c.ahyp);
  b["real_rank"] = use_json(c.real_rank);
  b["rank_maxcompact"] = use_json(c.rank_maxcompact);
  b["dim_p"] = use_json(c.dim_p);
  b["dim_g"] = use_json(c.dim_g);
  j["budgets"] = std::move(b);
  return j;
}

Json info_report(const std::string& text, const ReductiveDescriptor& desc) {
  Json inputs;
  inputs["algebra"] = text;
  Json j = header("info", std::move(inputs), "Computed");
  j["canonical"] = desc.str();
  Json parts = Json::array();
  for (const auto& p : desc.noncompact_simple_parts) parts.push_back(form_json(p));
  j["parts"] = std::move(parts);
  Json compact = Json::array();
  for (const auto& c : desc.compact_simple_parts) {
    Json cj;
    cj["name"] = c.name;
    cj["dim"] = c.dim;
    cj["rank"] = c.rank;
    compact.push_back(std::move(cj));
  }
  j["compact_parts"] = std::move(compact);
  j["split_center_dim"] = desc.split_center_dim;
  j["compact_center_dim"] = desc.compact_center_dim;
  auto inv = derived_invariants(desc);
  Json ij;
  ij["real_rank"] = inv.real_rank;
  ij["ahyp"] = inv.ahyp;
  ij["d"] = inv.d;
  ij["rank_maxcompact"] = inv.rank_maxcompact_sum;
  ij["dim"] = inv.dim;
  j["invariants"] = std::move(ij);
  return j;
}

Json table1_report(int k_max) {
  const auto rows = table1_rows(k_max);
  const int scan_rank = std::max(8, 2 * k_max + 1);
  const auto unexplained = table1_unexplained(scan_rank);
  bool all = unexplained.empty();
  for (const auto& r : rows) all &= r.matches();

  Json inputs;
  inputs["k_max"] = k_max;
  Json j = header("table1", std::move(inputs), all ? "Reproduced" : "Mismatch");
  for (const auto& r : rows) {
    j["checks"].push_back(check(r.form.name + " ahyp", r.ahyp, r.table_ahyp, r.ahyp == r.table_ahyp));
    j["checks"].push_back(check(r.form.name + " real_rank", r.real_rank, r.table_real_rank,
                                r.real_rank == r.table_real_rank));
  }
  j["checks"].push_back(check("completeness: unexplained forms with real rank <= " +
                                  std::to_string(scan_rank),
                              static_cast<int>(unexplained.size()), 0, unexplained.empty()));
  for (const auto& f : unexplained) j["witnesses"].push_back(form_json(f));
  Json rj = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["family"] = r.family;
    row["k"] = r.k;
    row["algebra"] = r.form.name;
    row["ahyp"] = r.ahyp;
    row["real_rank"] = r.real_rank;
    row["table_ahyp"] = r.table_ahyp;
    row["table_real_rank"] = r.table_real_rank;
    rj.push_back(std::move(row));
  }
  j["rows"] = std::move(rj);
  j["completeness_scan_rank"] = scan_rank;
  return j;
}

Json catalog_proper_report(const std::string& g_text, const std::string& h_text,
                           const std::string& l_text, const ReductiveDescriptor& g,
                           const ReductiveDescriptor& h, const ReductiveDescriptor& l) {
  Json inputs;
  inputs["mode"] = "catalog";
  inputs["g"] = g_text;
  inputs["h"] = h_text;
  inputs["l"] = l_text;
  auto report = necessary_conditions(g, h, l);
  Json j = header("check-proper", std::move(inputs), to_string(report.overall));
  for (const auto& c : report.checks) j["checks"].push_back(check(c.name, c.lhs, c.rhs, c.passed));
  auto cc = cocompact_dimension_check(g, h, l);
  Json cj;
  cj["d_g"] = cc.d_g;
  cj["d_h"] = cc.d_h;
  cj["d_l"] = cc.d_l;
  cj["required_d_l"] = cc.required_d_l();
  cj["equal"] = cc.equal;
  j["cocompact"] = std::move(cj);
  return j;
}

Json embedded_proper_report(const RootSystem& system, const std::string& ah_path,
                            const std::string& al_path, std::uint64_t cap, const Subspace& a_h,
                            const Subspace& a_l, const EmbeddedVerdict& verdict) {
  Json inputs;
  inputs["mode"] = "embedded";
  inputs["system"] = system.name();
  inputs["ah"] = ah_path;
  inputs["al"] = al_path;
  inputs["cap"] = cap;
  Json j = header("check-proper", std::move(inputs), verdict.proper ? "Proper" : "NotProper");
  j["checks"].push_back(check("nontrivial intersections w*a_l cap a_h", verdict.proper ? 0 : 1, 0,
                              verdict.proper));
  if (!verdict.proper) {
    Json w;
    w["w_index"] = *verdict.w_index;
    w["word"] = word_json(verdict.w->word);
    w["matrix"] = to_json(verdict.w->matrix);
    w["vector"] = to_json(*verdict.witness);
    j["witnesses"].push_back(std::move(w));
  }
  j["group_order"] = verdict.group_order;
  j["dim_ah"] = a_h.dim();
  j["dim_al"] = a_l.dim();
  Json bh = Json::array(), bl = Json::array();
  for (const auto& v : a_h.basis()) bh.push_back(to_json(v));
  for (const auto& v : a_l.basis()) bl.push_back(to_json(v));
  j["basis_ah"] = std::move(bh);
  j["basis_al"] = std::move(bl);
  return j;
}

Json standard_form_report(const std::string& g_text, const std::string& h_text,
                          const StandardFormVerdict& v) {
  Json inputs;
  inputs["g"] = g_text;
  inputs["h"] = h_text;
  Json j = header("standard-form", std::move(inputs), to_string(v.verdict));
  j["checks"].push_back(
      check("max_achievable >= required_d", v.max_achievable, v.required_d,
            v.max_achievable >= v.required_d));
  j["checks"].push_back(check("candidates reaching required_d",
                              static_cast<int>(v.witnesses.size()), 1, !v.witnesses.empty()));
  for (const auto& c : v.witnesses) j["witnesses"].push_back(to_json(c));
  j["d_g"] = v.d_g;
  j["d_h"] = v.d_h;
  j["required_d"] = v.required_d;
  j["max_achievable"] = v.max_achievable;
  Json b;
  b["ahyp"] = v.budgets.ahyp;
  b["real_rank"] = v.budgets.real_rank;
  b["rank_maxcompact"] = v.budgets.rank_maxcompact;
  b["dim_p"] = v.budgets.dim_p;
  b["dim_g"] = v.budgets.dim_g;
  j["budgets"] = std::move(b);
  j["candidate_count"] = v.candidate_count;
  Json top = Json::array();
  for (const auto& c : v.top_candidates) top.push_back(to_json(c));
  j["top_candidates"] = std::move(top);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ahyp
