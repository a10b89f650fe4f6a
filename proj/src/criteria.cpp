#include "ahyp/criteria.hpp"

#include <fstream>
#include <sstream>

#include "ahyp/errors.hpp"

namespace ahyp {

Subspace::Subspace(const RootSystem& system, std::vector<RationalVector> spanning)
    : ambient_dim_(system.ambient_dim()), spanning_(std::move(spanning)) {
  for (const auto& v : spanning_) system.require_in_span(v);
  basis_ = reduced_basis(spanning_, ambient_dim_);
}

Subspace read_subspace(std::istream& in, const RootSystem& system) {
  std::vector<RationalVector> vectors;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::vector<Rational> coords;
    std::string tok;
    while (tokens >> tok) {
      try {
        coords.push_back(Rational::parse(tok));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (coords.size() != system.ambient_dim())
      throw DimensionMismatch("line " + std::to_string(line_no) + ": " +
                              std::to_string(coords.size()) + " entries, system " +
                              system.name() + " has ambient dimension " +
                              std::to_string(system.ambient_dim()));
    vectors.emplace_back(std::move(coords));
  }
  return Subspace(system, std::move(vectors));
}

Subspace read_subspace_file(const std::string& path, const RootSystem& system) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open subspace file '" + path + "'");
  return read_subspace(in, system);
}

std::string_view to_string(Overall o) {
  return o == Overall::ObstructionFound ? "ObstructionFound" : "NoObstruction";
}

PropernessReport necessary_conditions(const ReductiveDescriptor& g, const ReductiveDescriptor& h,
                                      const ReductiveDescriptor& l) {
  auto ig = derived_invariants(g), ih = derived_invariants(h), il = derived_invariants(l);
  PropernessReport report;
  auto add = [&](std::string name, int lhs, int rhs) {
    report.checks.push_back({std::move(name), lhs, rhs, lhs <= rhs});
  };
  add("real_rank", il.real_rank + ih.real_rank, ig.real_rank);
  add("ahyp_rank", il.ahyp + ih.ahyp, ig.ahyp);
  bool failed = false;
  for (const auto& c : report.checks) failed |= !c.passed;
  report.overall = failed ? Overall::ObstructionFound : Overall::NoObstruction;
  return report;
}

CocompactCheck cocompact_dimension_check(const ReductiveDescriptor& g, const ReductiveDescriptor& h,
                                         const ReductiveDescriptor& l) {
  CocompactCheck c{derived_invariants(g).d, derived_invariants(h).d, derived_invariants(l).d, false};
  c.equal = c.d_l + c.d_h == c.d_g;
  return c;
}

EmbeddedVerdict check_proper_embedded(const RootSystem& system, const Subspace& a_h,
                                      const Subspace& a_l, std::uint64_t cap) {
  if (a_h.ambient_dim() != system.ambient_dim() || a_l.ambient_dim() != system.ambient_dim())
    throw DimensionMismatch("subspace ambient dimension differs from system " + system.name());
  EmbeddedVerdict verdict{true, weyl_group_order(system), {}, {}, {}};
  if (a_h.dim() == 0 || a_l.dim() == 0) return verdict;

  const auto elements = enumerate_weyl(system, cap);
  verdict.group_order = elements.size();
  const std::size_t dh = a_h.dim(), dl = a_l.dim(), n = system.ambient_dim();
  Matrix stacked(n, dh + dl);
  for (std::size_t c = 0; c < dh; ++c)
    for (std::size_t r = 0; r < n; ++r) stacked(r, c) = a_h.basis()[c][r];

  for (std::size_t idx = 0; idx < elements.size(); ++idx) {
    const auto& w = elements[idx];
    for (std::size_t c = 0; c < dl; ++c) {
      RationalVector image = w(a_l.basis()[c]);
      for (std::size_t r = 0; r < n; ++r) stacked(r, dh + c) = -image[r];
    }
    if (rank(stacked) == dh + dl) continue;
    RationalVector coeffs = kernel_basis(stacked).front();
    RationalVector x(n);
    for (std::size_t c = 0; c < dh; ++c) x += coeffs[c] * a_h.basis()[c];
    verdict.proper = false;
    verdict.w_index = idx;
    verdict.w = w;
    verdict.witness = std::move(x);
    return verdict;
  }
  return verdict;
}

AntipodalResult antipodal_orbit_check(const RootSystem& system, const RationalVector& x) {
  RationalVector rep = dominant_representative(system, x);
  return {rep == dominant_representative(system, -x), rep};
}

}  // namespace ahyp
