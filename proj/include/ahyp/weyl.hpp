#pragma once

#include <cstdint>
#include <vector>

#include "ahyp/root_system.hpp"

namespace ahyp {

inline constexpr std::uint64_t kDefaultWeylCap = 1'000'000;

/// Element of the Weyl group, stored as its exact ambient matrix.
///
/// `word` lists 0-based simple reflection indices with
/// matrix = S[word[0]] * S[word[1]] * ... ; it is the lexicographically
/// smallest reduced word for elements produced by enumerate_weyl.
struct WeylElement {
  Matrix matrix;
  std::vector<int> word;

  RationalVector operator()(const RationalVector& v) const { return matrix * v; }
};

/// Dominant vector of the orbit together with the simple reflections applied
/// to reach it, in application order.
struct DominantChain {
  RationalVector dominant;
  std::vector<int> reflections;
};

/// Repeatedly reflects in the first simple root pairing negatively with v.
DominantChain dominant_chain(const RootSystem& system, const RationalVector& v);
RationalVector dominant_representative(const RootSystem& system, const RationalVector& v);

/// |W| from the closed formula for each irreducible component.
std::uint64_t weyl_group_order(const RootSystem& system);

/// All of W in canonical order: by length, ties broken lexicographically by
/// the minimal reduced word; the identity comes first. Throws CapExceeded
/// when |W| > cap.
std::vector<WeylElement> enumerate_weyl(const RootSystem& system,
                                        std::uint64_t cap = kDefaultWeylCap);

/// The element mapping the dominant chamber onto its negative, obtained
/// from the reflection chain taking -rho_check back to rho_check.
WeylElement longest_element(const RootSystem& system);

/// The involution X -> -(w0 X) as an ambient matrix.
Matrix minus_w0(const RootSystem& system);

/// Permutation p of simple root indices with -w0(a_i) = a_{p[i]}.
std::vector<int> simple_root_permutation(const RootSystem& system);

/// dim Fix(-w0) on the root span, via the kernel of w0 + 1.
int ahyp_dimension_by_kernel(const RootSystem& system);
/// Number of orbits of the -w0 permutation of simple roots.
int ahyp_dimension_by_orbits(const RootSystem& system);
/// a-hyperbolic rank; computes both routes and throws Error if they disagree.
int ahyp_dimension(const RootSystem& system);

/// Basis of b = Fix(-w0) chosen inside the cone b+ = b cap (dominant chamber):
/// one coweight sum per -w0 orbit on simple roots, orbits ordered by smallest index.
struct FixedCone {
  std::vector<RationalVector> basis;
  Matrix minus_w0;
};

FixedCone fixed_cone(const RootSystem& system);

/// Membership in b+: fixed by -w0 and dominant.
bool in_fixed_cone(const RootSystem& system, const FixedCone& cone, const RationalVector& v);

/// True iff v and -v lie in the same W-orbit.
bool is_antipodal(const RootSystem& system, const RationalVector& v);

}  // namespace ahyp
