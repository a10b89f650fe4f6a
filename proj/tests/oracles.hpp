#pragma once

// Brute-force reference computations used only by the tests. None of these
// go through enumerate_weyl, dominant_chain or the elimination-based
// checker, so they can serve as independent oracles for them.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ahyp/linalg.hpp"
#include "ahyp/root_system.hpp"

namespace oracle {

using ahyp::Rational;
using ahyp::RationalVector;

/// W-orbit of v, by closing {v} under reflections in all roots.
inline std::set<RationalVector> orbit(const ahyp::RootSystem& sys, const RationalVector& v) {
  std::set<RationalVector> seen{v};
  std::vector<RationalVector> todo{v};
  while (!todo.empty()) {
    RationalVector x = todo.back();
    todo.pop_back();
    for (const auto& r : sys.roots()) {
      Rational c = Rational(2) * ahyp::dot(x, r) / ahyp::dot(r, r);
      RationalVector y = x - c * r;
      if (seen.insert(y).second) todo.push_back(std::move(y));
    }
  }
  return seen;
}

/// The unique orbit element pairing nonnegatively with every positive root.
inline RationalVector dominant_by_orbit(const ahyp::RootSystem& sys, const RationalVector& v) {
  std::vector<RationalVector> found;
  for (const auto& x : orbit(sys, v)) {
    bool dom = true;
    for (const auto& a : sys.positive_roots())
      if (ahyp::dot(x, a).sign() < 0) dom = false;
    if (dom) found.push_back(x);
  }
  if (found.size() != 1) throw std::logic_error("orbit has no unique dominant element");
  return found.front();
}

/// Signed permutation matrices of size n (the Weyl group of B_n / C_n / BC_n).
inline std::vector<ahyp::Matrix> signed_permutations(std::size_t n) {
  std::vector<ahyp::Matrix> out;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      ahyp::Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) m(perm[i], i) = (mask >> i) & 1 ? -1 : 1;
      out.push_back(std::move(m));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Permutation matrices of size n (the Weyl group of A_{n-1} on R^n).
inline std::vector<ahyp::Matrix> permutations(std::size_t n) {
  std::vector<ahyp::Matrix> out;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    ahyp::Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(perm[i], i) = 1;
    out.push_back(std::move(m));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// dim(U cap V) via Grassmann: dim U + dim V - dim(U + V), ranks by elimination.
inline std::size_t intersection_dim(const std::vector<RationalVector>& u,
                                    const std::vector<RationalVector>& v, std::size_t dim) {
  std::vector<RationalVector> all = u;
  all.insert(all.end(), v.begin(), v.end());
  auto r = [&](const std::vector<RationalVector>& s) {
    return s.empty() ? 0 : ahyp::rank(ahyp::Matrix::from_rows(s, dim));
  };
  return r(u) + r(v) - r(all);
}

/// True iff g u cap v = 0 for all listed group matrices.
inline bool proper_by_group(const std::vector<ahyp::Matrix>& group,
                            const std::vector<RationalVector>& a_h,
                            const std::vector<RationalVector>& a_l, std::size_t dim) {
  for (const auto& g : group) {
    std::vector<RationalVector> image;
    for (const auto& v : a_l) image.push_back(g * v);
    if (intersection_dim(a_h, image, dim) != 0) return false;
  }
  return true;
}

/// Random rational in [-range, range] with denominator in 1..max_den.
inline Rational random_rational(std::mt19937_64& rng, int range = 5, int max_den = 3) {
  std::uniform_int_distribution<int> num(-range * max_den, range * max_den);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

/// Random vector in the root span: a random rational combination of simple roots.
inline RationalVector random_span_vector(std::mt19937_64& rng, const ahyp::RootSystem& sys) {
  RationalVector v(sys.ambient_dim());
  for (const auto& a : sys.simple_roots()) v += random_rational(rng) * a;
  return v;
}

}  // namespace oracle
