#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ahyp/catalog.hpp"
#include "ahyp/weyl.hpp"

namespace ahyp {

/// Linear subspace of the root span of a system (an a_h or a_l inside a).
class Subspace {
public:
  /// Throws DimensionMismatch / NotInSpan if a vector is outside the root span.
  Subspace(const RootSystem& system, std::vector<RationalVector> spanning);

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<RationalVector>& spanning_vectors() const { return spanning_; }
  /// Nonzero rows of the RREF of the spanning vectors.
  const std::vector<RationalVector>& basis() const { return basis_; }

private:
  std::size_t ambient_dim_;
  std::vector<RationalVector> spanning_;
  std::vector<RationalVector> basis_;
};

/// Reads the subspace file format: '#' comment lines, blank lines ignored,
/// otherwise one spanning vector per line with whitespace-separated integer
/// or p/q entries. Throws ParseError, DimensionMismatch, NotInSpan.
Subspace read_subspace(std::istream& in, const RootSystem& system);
Subspace read_subspace_file(const std::string& path, const RootSystem& system);

struct Check {
  std::string name;
  int lhs;
  int rhs;
  bool passed;
};

enum class Overall { ObstructionFound, NoObstruction };
std::string_view to_string(Overall o);

struct PropernessReport {
  std::vector<Check> checks;
  Overall overall;
};

/// rank_R(l) + rank_R(h) <= rank_R(g) and ahyp(l) + ahyp(h) <= ahyp(g).
/// A failure rules out proper actions for every embedding; passing never
/// asserts properness.
PropernessReport necessary_conditions(const ReductiveDescriptor& g, const ReductiveDescriptor& h,
                                      const ReductiveDescriptor& l);

struct CocompactCheck {
  int d_g;
  int d_h;
  int d_l;
  bool equal;
  /// d(L) needed for L\G/H to be compact.
  int required_d_l() const { return d_g - d_h; }
};

CocompactCheck cocompact_dimension_check(const ReductiveDescriptor& g, const ReductiveDescriptor& h,
                                         const ReductiveDescriptor& l);

struct EmbeddedVerdict {
  bool proper;
  std::uint64_t group_order;
  /// Set when !proper: canonical index of the first w with w a_l cap a_h != 0.
  std::optional<std::size_t> w_index;
  std::optional<WeylElement> w;
  std::optional<RationalVector> witness;
};

/// Decides w a_l cap a_h = {0} for every w in W by exact rank computations:
/// the intersection is trivial iff rank[basis(a_h) | w basis(a_l)] = dim a_h + dim a_l.
/// The witness is the a_h-part of the first kernel vector of [basis(a_h) | -w basis(a_l)].
/// The caller is responsible for a_h, a_l being the conjugated split Cartan
/// subspaces of reductive subgroups. Throws CapExceeded, DimensionMismatch.
EmbeddedVerdict check_proper_embedded(const RootSystem& system, const Subspace& a_h,
                                      const Subspace& a_l, std::uint64_t cap = kDefaultWeylCap);

struct AntipodalResult {
  bool antipodal;
  RationalVector dominant_rep;
};

AntipodalResult antipodal_orbit_check(const RootSystem& system, const RationalVector& x);

}  // namespace ahyp
