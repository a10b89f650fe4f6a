#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ahyp/root_system.hpp"

namespace ahyp {

enum class Family {
  SlR,      ///< sl(n,R)
  SlC,      ///< sl(n,C)
  SuStar,   ///< su*(2n)
  Su,       ///< su(p,q)
  So,       ///< so(p,q)
  SoC,      ///< so(n,C)
  SoStar,   ///< so*(2n)
  SpR,      ///< sp(n,R)
  SpC,      ///< sp(n,C)
  Sp,       ///< sp(p,q)
  ExceptionalReal,
  ExceptionalComplex,
};

std::string_view family_name(Family f);

/// Noncompact real simple Lie algebra with the invariants used throughout.
///
/// dim_k and rank_maxcompact describe a maximal compact subalgebra k; dim_p is
/// d = dim p for the Cartan decomposition g = k + p. The restricted root system
/// Sigma(g, a) is recorded as (restricted_type, restricted_rank); rank-one
/// reduced systems are recorded as A1.
struct SimpleRealForm {
  std::string name;
  Family family;
  std::vector<int> params;
  RootType restricted_type;
  int restricted_rank;
  int dim_g;
  int dim_k;
  int dim_p;
  int rank_maxcompact;
  bool is_complex_as_real;

  int real_rank() const { return restricted_rank; }
  std::string restricted_name() const;
  RootSystem restricted_system() const;

  friend bool operator==(const SimpleRealForm& a, const SimpleRealForm& b) { return a.name == b.name; }
};

/// a-hyperbolic rank of the restricted root system (memoized per system type).
int ahyp(const SimpleRealForm& form);

struct AttributeRecord {
  std::string restricted_system;
  int real_rank;
  int ahyp;
  int dim_g;
  int dim_k;
  int dim_p;
  int rank_maxcompact;
};

AttributeRecord attributes(const SimpleRealForm& form);

/// Builds a catalog entry. Returns nullopt when the parameters do not name a
/// noncompact simple algebra (out of range, compact, or a non-simple
/// low-rank case such as so(2,2)). Two-parameter families are normalized to p <= q.
std::optional<SimpleRealForm> make_form(Family family, std::vector<int> params);

/// Looks up an exceptional form by descriptor name ("e6(-26)", "e6(IV)", "f4(C)", ...).
std::optional<SimpleRealForm> exceptional_form(std::string_view name);

/// The 12 noncompact non-complex exceptional forms followed by the 5 complex ones.
std::vector<SimpleRealForm> exceptional_forms();

/// Walks every classical family with parameters in increasing order and all
/// exceptional forms, keeping forms for which `within` holds.
///
/// `within` must be monotone: if it fails for some parameters it must fail
/// for every larger parameter in the same family. Each family scan stops at
/// the first failing parameter; `param_ceiling` is a hard stop.
std::vector<SimpleRealForm> scan_catalog(const std::function<bool(const SimpleRealForm&)>& within,
                                         int param_ceiling = 512);

/// A row of the table of real forms whose a-hyperbolic rank differs from
/// the real rank, with the tabulated values next to the computed ones.
struct Table1Row {
  std::string family;  ///< row label, e.g. "sl(2k+1,R)"
  int k;               ///< 0 for the exceptional rows
  SimpleRealForm form;
  int ahyp;
  int real_rank;
  int table_ahyp;
  int table_real_rank;

  bool matches() const { return ahyp == table_ahyp && real_rank == table_real_rank; }
};

/// All rows with parameter k <= k_max (each family from its smallest valid k),
/// followed by e6(6) and e6(-26).
std::vector<Table1Row> table1_rows(int k_max);

/// True when the form belongs to one of the tabulated families, including
/// so(3,3) which is isomorphic to sl(4,R).
bool in_table1_family(const SimpleRealForm& form);

/// Non-complex catalog forms with real rank <= max_rank and parameters
/// <= 2 max_rank + 4 whose a-hyperbolic rank differs from the real rank but
/// which lie outside the tabulated families. Empty when the table is complete
/// on that range.
std::vector<SimpleRealForm> table1_unexplained(int max_rank);

struct CompactPart {
  std::string name;
  int dim;
  int rank;
};

/// Reductive algebra l = (center) + (semisimple part), split into noncompact
/// simple parts, compact simple parts, and split/compact abelian summands.
struct ReductiveDescriptor {
  std::vector<SimpleRealForm> noncompact_simple_parts;
  std::vector<CompactPart> compact_simple_parts;
  int split_center_dim = 0;
  int compact_center_dim = 0;

  /// Canonical text: noncompact parts, compact parts, then R^n and u(1)^n; "0" if trivial.
  std::string str() const;
};

/// Parses the descriptor grammar
///   descriptor := term ("+" term)*
///   term       := simple | "R^" int | "u(1)^" int | compactname
/// An empty (or "0") descriptor is the trivial algebra. Throws ParseError or NotSemisimple.
ReductiveDescriptor parse_descriptor(std::string_view text);

struct DerivedInvariants {
  int real_rank;
  int ahyp;
  int d;
  int rank_maxcompact_sum;
  int dim;
};

DerivedInvariants derived_invariants(const ReductiveDescriptor& desc);

}  // namespace ahyp
