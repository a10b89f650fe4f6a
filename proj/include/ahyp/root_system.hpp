#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ahyp/linalg.hpp"

namespace ahyp {

enum class RootType { A, B, C, D, E, F, G, BC };

std::string_view to_string(RootType t);
/// "A", "B", ..., "BC"; throws ParseError for anything else.
RootType parse_root_type(std::string_view letter);

/// An irreducible block of a (possibly reducible) root system.
struct RootComponent {
  RootType type;
  int rank;
  std::size_t offset;       ///< first ambient coordinate of this block
  std::size_t ambient_dim;  ///< number of ambient coordinates of this block
  std::size_t first_simple; ///< index of this block's first simple root
};

/// Exact realization of a finite (possibly non-reduced, possibly reducible)
/// root system.
///
/// Coordinate realizations (fixed; subspace files are written against them):
///   A_n   e_i - e_j in R^{n+1}; vectors must have coordinate sum 0
///   B_n   +-e_i +- e_j, +-e_i                    in R^n
///   C_n   +-e_i +- e_j, +-2e_i                   in R^n
///   D_n   +-e_i +- e_j                           in R^n
///   BC_n  +-e_i +- e_j, +-e_i, +-2e_i            in R^n
///   G_2   e_i - e_j, +-(2e_i - e_j - e_k)        in the sum-zero plane of R^3
///   F_4   +-e_i, +-e_i +- e_j, (+-1/2,...,+-1/2) in R^4
///   E_8   +-e_i +- e_j, (+-1/2,...) with an even number of minus signs, in R^8
///   E_7   roots of E_8 orthogonal to e_7 + e_8
///   E_6   roots of E_8 orthogonal to e_7 + e_8 and e_6 - e_7
/// Simple roots follow Bourbaki numbering. Direct sums place the blocks on
/// consecutive coordinate ranges.
class RootSystem {
public:
  /// Throws UnsupportedSystem outside A_n (n>=1), B_n/C_n (n>=2), D_n (n>=3),
  /// BC_n (n>=1), G_2, F_4, E_6, E_7, E_8.
  static RootSystem build(RootType type, int rank);
  static RootSystem direct_sum(std::span<const RootSystem> parts);

  /// Type of an irreducible system; nullopt for a direct sum.
  std::optional<RootType> type_letter() const;
  /// "A4", "BC2", "A1+A1".
  std::string name() const;
  int rank() const { return static_cast<int>(simple_roots_.size()); }
  std::size_t ambient_dim() const { return ambient_dim_; }
  bool is_irreducible() const { return components_.size() == 1; }

  std::span<const RootComponent> components() const { return components_; }
  std::span<const RationalVector> roots() const { return roots_; }
  std::span<const RationalVector> simple_roots() const { return simple_roots_; }
  std::span<const RationalVector> positive_roots() const { return positive_roots_; }
  /// Dual basis to the simple roots inside the root span: <w_i, a_j> = delta_ij.
  std::span<const RationalVector> fundamental_coweights() const { return coweights_; }
  /// Sum of fundamental coweights; pairs to 1 with every simple root.
  const RationalVector& rho_check() const { return rho_check_; }

  bool is_root(const RationalVector& v) const;
  bool in_span(const RationalVector& v) const;
  /// Throws DimensionMismatch or NotInSpan.
  void require_in_span(const RationalVector& v) const;

private:
  RootSystem() = default;
  void finish();

  std::vector<RootComponent> components_;
  std::size_t ambient_dim_ = 0;
  std::vector<RationalVector> roots_;
  std::vector<RationalVector> simple_roots_;
  std::vector<RationalVector> positive_roots_;
  std::vector<RationalVector> coweights_;
  RationalVector rho_check_;
  /// Basis of the orthogonal complement of the root span in the ambient space.
  std::vector<RationalVector> complement_;
};

/// True iff <v, a> >= 0 for every simple root a (the closed dominant chamber).
bool is_dominant(const RootSystem& system, const RationalVector& v);

/// v - 2<v,root>/<root,root> root. Throws ZeroRoot, DimensionMismatch.
RationalVector reflect(const RationalVector& v, const RationalVector& root);

/// Ambient matrix of the reflection in `root` (identity on the orthogonal complement).
Matrix reflection_matrix(const RationalVector& root);

}  // namespace ahyp
