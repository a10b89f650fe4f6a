// Command-line front end: catalog queries, properness checks and the
// standard compact Clifford-Klein form obstruction.
//
// Exit codes: 0 computation completed (whatever the verdict), 2 usage or
// input error, 3 Weyl enumeration cap exceeded.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ahyp/errors.hpp"
#include "ahyp/report.hpp"

namespace {

using ahyp::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

ahyp::RootSystem parse_system(const std::string& text) {
  std::vector<ahyp::RootSystem> parts;
  std::stringstream ss(text);
  std::string block;
  while (std::getline(ss, block, '+')) {
    auto comma = block.find(',');
    if (comma == std::string::npos)
      throw ahyp::ParseError("--system expects TYPE,RANK (e.g. A,4 or A,1+A,1), got '" + text + "'");
    int rank = 0;
    try {
      std::size_t used = 0;
      rank = std::stoi(block.substr(comma + 1), &used);
      if (used != block.size() - comma - 1) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw ahyp::ParseError("bad rank in --system '" + text + "'");
    }
    parts.push_back(ahyp::RootSystem::build(ahyp::parse_root_type(block.substr(0, comma)), rank));
  }
  if (parts.empty()) throw ahyp::ParseError("empty --system");
  if (parts.size() == 1) return parts.front();
  return ahyp::RootSystem::direct_sum(parts);
}

std::string vec_text(const Json& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get<std::string>();
  return s + ")";
}

void print_checks(std::ostream& os, const Json& j) {
  for (const auto& c : j["checks"])
    os << "  [" << (c["passed"].get<bool>() ? "pass" : "FAIL") << "] " << c["name"].get<std::string>()
       << ": " << c["lhs"].get<int>() << " vs " << c["rhs"].get<int>() << "\n";
}

void render_info(std::ostream& os, const Json& j) {
  os << "algebra: " << j["canonical"].get<std::string>() << "\n";
  for (const auto& p : j["parts"]) {
    os << "  " << p["name"].get<std::string>() << (p["complex_as_real"].get<bool>() ? " (complex, viewed as real)" : "")
       << "\n"
       << "    restricted root system: " << p["restricted_system"].get<std::string>() << "\n"
       << "    real rank: " << p["real_rank"].get<int>() << "\n"
       << "    a-hyperbolic rank: " << p["ahyp"].get<int>() << "\n"
       << "    dim g / dim k / dim p: " << p["dim_g"].get<int>() << " / " << p["dim_k"].get<int>()
       << " / " << p["dim_p"].get<int>() << "\n"
       << "    rank of maximal compact: " << p["rank_maxcompact"].get<int>() << "\n";
  }
  for (const auto& c : j["compact_parts"])
    os << "  " << c["name"].get<std::string>() << " (compact, dim " << c["dim"].get<int>() << ")\n";
  if (j["split_center_dim"].get<int>() > 0) os << "  split center R^" << j["split_center_dim"].get<int>() << "\n";
  if (j["compact_center_dim"].get<int>() > 0)
    os << "  compact center u(1)^" << j["compact_center_dim"].get<int>() << "\n";
  const auto& inv = j["invariants"];
  os << "total: real rank " << inv["real_rank"].get<int>() << ", a-hyperbolic rank "
     << inv["ahyp"].get<int>() << ", d = dim p " << inv["d"].get<int>() << ", rank k "
     << inv["rank_maxcompact"].get<int>() << ", dim " << inv["dim"].get<int>() << "\n";
}

void render_table1(std::ostream& os, const Json& j) {
  os << "family            k  algebra           ahyp  real rank  table\n";
  for (const auto& r : j["rows"]) {
    std::ostringstream line;
    line << r["family"].get<std::string>();
    std::string s = line.str();
    s.resize(18, ' ');
    std::string k = std::to_string(r["k"].get<int>());
    k.resize(3, ' ');
    std::string alg = r["algebra"].get<std::string>();
    alg.resize(18, ' ');
    bool ok = r["ahyp"] == r["table_ahyp"] && r["real_rank"] == r["table_real_rank"];
    os << s << k << alg << r["ahyp"].get<int>() << "     " << r["real_rank"].get<int>()
       << "          (" << r["table_ahyp"].get<int>() << ", " << r["table_real_rank"].get<int>()
       << ") " << (ok ? "ok" : "MISMATCH") << "\n";
  }
  const auto& last = j["checks"].back();
  os << "completeness: " << last["lhs"].get<int>()
     << " non-complex forms outside these families with ahyp != real rank (real rank <= "
     << j["completeness_scan_rank"].get<int>() << ")\n";
  for (const auto& w : j["witnesses"]) os << "  unexplained: " << w["name"].get<std::string>() << "\n";
  os << "verdict: " << j["verdict"].get<std::string>() << "\n";
}

void render_catalog_proper(std::ostream& os, const Json& j) {
  const auto& in = j["inputs"];
  os << "G/H = " << in["g"].get<std::string>() << " / " << in["h"].get<std::string>()
     << ", L = " << in["l"].get<std::string>() << "\n";
  print_checks(os, j);
  const auto& cc = j["cocompact"];
  os << "  d(L) + d(H) = " << cc["d_l"].get<int>() << " + " << cc["d_h"].get<int>()
     << ", d(G) = " << cc["d_g"].get<int>() << " (" << (cc["equal"].get<bool>() ? "equal" : "not equal")
     << "; cocompactness needs d(L) = " << cc["required_d_l"].get<int>() << ")\n";
  os << "verdict: " << j["verdict"].get<std::string>() << "\n";
}

void render_embedded(std::ostream& os, const Json& j) {
  const auto& in = j["inputs"];
  os << "system " << in["system"].get<std::string>() << ", |W| = " << j["group_order"].get<std::uint64_t>()
     << ", dim a_h = " << j["dim_ah"].get<int>() << ", dim a_l = " << j["dim_al"].get<int>() << "\n";
  os << "verdict: " << j["verdict"].get<std::string>() << "\n";
  for (const auto& w : j["witnesses"]) {
    os << "  w index " << w["w_index"].get<std::size_t>() << ", word (";
    for (std::size_t i = 0; i < w["word"].size(); ++i) os << (i ? " " : "") << "s" << w["word"][i].get<int>();
    os << ")\n  matrix:\n";
    for (const auto& row : w["matrix"]) os << "    " << vec_text(row) << "\n";
    os << "  witness X in w*a_l cap a_h: " << vec_text(w["vector"]) << "\n";
  }
}

void render_candidate(std::ostream& os, const Json& c) {
  std::string name = c["derived_part"].get<std::string>();
  name.resize(std::max<std::size_t>(name.size(), 26), ' ');
  os << "  " << name << " d(L) in [" << c["d_interval"][0].get<int>() << ", "
     << c["d_interval"][1].get<int>() << "]\n";
}

void render_standard_form(std::ostream& os, const Json& j) {
  const auto& in = j["inputs"];
  os << "G/H = " << in["g"].get<std::string>() << " / " << in["h"].get<std::string>() << "\n";
  os << "d(G) = " << j["d_g"].get<int>() << ", d(H) = " << j["d_h"].get<int>()
     << ", required d(L) = " << j["required_d"].get<int>() << "\n";
  const auto& b = j["budgets"];
  os << "budgets for [l,l]: ahyp <= " << b["ahyp"].get<int>() << ", real rank <= "
     << b["real_rank"].get<int>() << ", rank k <= " << b["rank_maxcompact"].get<int>()
     << ", dim p <= " << b["dim_p"].get<int>() << ", dim <= " << b["dim_g"].get<int>() << "\n";
  os << "candidates: " << j["candidate_count"].get<std::size_t>()
     << ", max achievable d(L) = " << j["max_achievable"].get<int>() << "\n";
  os << "top candidates:\n";
  for (const auto& c : j["top_candidates"]) render_candidate(os, c);
  if (!j["witnesses"].empty()) {
    os << "candidates reaching the required d(L):\n";
    for (const auto& c : j["witnesses"]) render_candidate(os, c);
  }
  os << "verdict: " << j["verdict"].get<std::string>() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proper actions on reductive homogeneous spaces via a-hyperbolic rank", "ahyp"};
  app.require_subcommand(1);
  bool json = false;
  std::uint64_t cap = ahyp::kDefaultWeylCap;
  app.add_flag("--json", json, "Emit the JSON report");
  app.add_option("--cap", cap, "Weyl group enumeration cap")->capture_default_str();

  auto* info = app.add_subcommand("info", "Invariants of a reductive algebra descriptor");
  info->fallthrough();
  std::string algebra;
  info->add_option("algebra", algebra, "Descriptor, e.g. \"sl(5,R)\" or \"so(4,7)+R^1\"")->required();

  auto* table1 = app.add_subcommand("table1", "Recompute the forms with ahyp != real rank");
  table1->fallthrough();
  int k_max = 3;
  table1->add_option("k_max", k_max, "Largest family parameter k")->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* proper = app.add_subcommand("check-proper", "Necessary conditions for L acting properly on G/H");
  proper->fallthrough();
  std::vector<std::string> ghl;
  std::string system_text, ah_path, al_path;
  proper->add_option("descriptors", ghl, "g h l (catalog mode)");
  proper->add_option("--system", system_text, "Root system of g, TYPE,RANK (embedded mode)");
  proper->add_option("--ah", ah_path, "Subspace file spanning a_h");
  proper->add_option("--al", al_path, "Subspace file spanning a_l");

  auto* standard = app.add_subcommand("standard-form", "Obstruction to standard compact Clifford-Klein forms");
  standard->fallthrough();
  std::string g_text, h_text;
  standard->add_option("G", g_text, "Simple algebra g")->required();
  standard->add_option("H", h_text, "Reductive subalgebra h")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Json report;
    void (*render)(std::ostream&, const Json&) = nullptr;
    if (*info) {
      report = ahyp::info_report(algebra, ahyp::parse_descriptor(algebra));
      render = render_info;
    } else if (*table1) {
      report = ahyp::table1_report(k_max);
      render = render_table1;
    } else if (*proper) {
      const bool embedded = !system_text.empty() || !ah_path.empty() || !al_path.empty();
      if (embedded) {
        if (system_text.empty() || ah_path.empty() || al_path.empty() || !ghl.empty())
          throw ahyp::ParseError("embedded mode needs --system, --ah and --al and no descriptors");
        auto system = parse_system(system_text);
        auto a_h = ahyp::read_subspace_file(ah_path, system);
        auto a_l = ahyp::read_subspace_file(al_path, system);
        auto verdict = ahyp::check_proper_embedded(system, a_h, a_l, cap);
        report = ahyp::embedded_proper_report(system, ah_path, al_path, cap, a_h, a_l, verdict);
        render = render_embedded;
      } else {
        if (ghl.size() != 3) throw ahyp::ParseError("catalog mode needs exactly three descriptors: g h l");
        report = ahyp::catalog_proper_report(ghl[0], ghl[1], ghl[2], ahyp::parse_descriptor(ghl[0]),
                                             ahyp::parse_descriptor(ghl[1]),
                                             ahyp::parse_descriptor(ghl[2]));
        render = render_catalog_proper;
      }
    } else if (*standard) {
      auto g = ahyp::parse_descriptor(g_text);
      if (g.noncompact_simple_parts.size() != 1 || !g.compact_simple_parts.empty() ||
          g.split_center_dim != 0 || g.compact_center_dim != 0)
        throw ahyp::ParseError("standard-form needs a single noncompact simple g, got '" + g_text + "'");
      auto verdict = ahyp::standard_form_verdict(g.noncompact_simple_parts.front(),
                                                 ahyp::parse_descriptor(h_text));
      report = ahyp::standard_form_report(g_text, h_text, verdict);
      render = render_standard_form;
    }
    if (json)
      std::cout << ahyp::dump(report);
    else
      render(std::cout, report);
    return kExitOk;
  } catch (const ahyp::CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise it with --cap)\n";
    return kExitCap;
  } catch (const ahyp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
