#include <doctest.h>

#include <random>
#include <set>

#include "ahyp/errors.hpp"
#include "ahyp/weyl.hpp"
#include "oracles.hpp"

using namespace ahyp;

namespace {

RootSystem sys(RootType t, int n) { return RootSystem::build(t, n); }

std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Number of indivisible positive roots sent to negative roots (the length).
std::size_t inversions(const RootSystem& s, const Matrix& m) {
  std::set<RationalVector> pos(s.positive_roots().begin(), s.positive_roots().end());
  std::size_t n = 0;
  for (const auto& a : s.positive_roots())
    if (!pos.count(Rational(1, 2) * a)) n += !pos.count(m * a);
  return n;
}

}  // namespace

TEST_CASE("dominant representatives") {
  CHECK(dominant_representative(sys(RootType::A, 2), RationalVector{-1, 0, 1}) ==
        RationalVector{1, 0, -1});
  auto b2 = sys(RootType::B, 2);
  CHECK(dominant_representative(b2, RationalVector{-1, -2}) == RationalVector{2, 1});
  // Signed-permutation oracle for B2.
  RationalVector v{-1, -2};
  std::vector<RationalVector> dominant;
  for (const auto& g : oracle::signed_permutations(2))
    if (is_dominant(b2, g * v)) dominant.push_back(g * v);
  CHECK(dominant == std::vector<RationalVector>{{2, 1}});
  CHECK(dominant_representative(b2, RationalVector{3, 1}) == RationalVector{3, 1});
}

TEST_CASE("dominant chain replays to the dominant vector") {
  std::mt19937_64 rng(7);
  for (auto s : {sys(RootType::A, 3), sys(RootType::B, 3), sys(RootType::G, 2), sys(RootType::F, 4)}) {
    for (int i = 0; i < 20; ++i) {
      auto v = oracle::random_span_vector(rng, s);
      auto chain = dominant_chain(s, v);
      RationalVector x = v;
      for (int r : chain.reflections) x = reflect(x, s.simple_roots()[r]);
      CHECK(x == chain.dominant);
      CHECK(is_dominant(s, x));
    }
  }
}

TEST_CASE("dominant representative is a W-invariant and matches the orbit oracle") {
  std::mt19937_64 rng(11);
  for (auto s : {sys(RootType::A, 2), sys(RootType::A, 3), sys(RootType::B, 3), sys(RootType::C, 3),
                 sys(RootType::BC, 2), sys(RootType::G, 2), sys(RootType::D, 3)}) {
    CAPTURE(s.name());
    auto group = enumerate_weyl(s);
    for (int i = 0; i < 10; ++i) {
      auto v = oracle::random_span_vector(rng, s);
      auto d = dominant_representative(s, v);
      CHECK(d == oracle::dominant_by_orbit(s, v));
      for (std::size_t k = 0; k < group.size(); k += 3) CHECK(dominant_representative(s, group[k](v)) == d);
    }
  }
}

TEST_CASE("enumeration sizes and cap") {
  CHECK(enumerate_weyl(sys(RootType::A, 2), 100).size() == 6);
  CHECK(enumerate_weyl(sys(RootType::B, 3), 100).size() == 48);
  CHECK_THROWS_AS(enumerate_weyl(sys(RootType::F, 4), 1000), CapExceeded);
  try {
    enumerate_weyl(sys(RootType::F, 4), 1000);
  } catch (const CapExceeded& e) {
    CHECK(e.cap() == 1000);
    CHECK(e.order() == 1152);
  }
}

TEST_CASE("group orders agree with closed formulas") {
  for (int n = 1; n <= 5; ++n)
    CHECK(weyl_group_order(sys(RootType::A, n)) == factorial(n + 1));
  for (int n = 2; n <= 5; ++n) {
    CHECK(weyl_group_order(sys(RootType::B, n)) == (1ull << n) * factorial(n));
    CHECK(weyl_group_order(sys(RootType::C, n)) == (1ull << n) * factorial(n));
  }
  for (int n = 3; n <= 5; ++n)
    CHECK(weyl_group_order(sys(RootType::D, n)) == (1ull << (n - 1)) * factorial(n));
  CHECK(weyl_group_order(sys(RootType::G, 2)) == 12);
  CHECK(weyl_group_order(sys(RootType::F, 4)) == 1152);
  CHECK(weyl_group_order(sys(RootType::E, 6)) == 51840);
  CHECK(weyl_group_order(sys(RootType::E, 7)) == 2903040);
  CHECK(weyl_group_order(sys(RootType::E, 8)) == 696729600);
  std::vector<RootSystem> parts{sys(RootType::A, 1), sys(RootType::A, 1)};
  CHECK(weyl_group_order(RootSystem::direct_sum(parts)) == 4);
}

TEST_CASE("enumerated elements are orthogonal, permute roots, and match their words") {
  for (auto s : {sys(RootType::A, 3), sys(RootType::B, 3), sys(RootType::BC, 2), sys(RootType::G, 2)}) {
    CAPTURE(s.name());
    auto group = enumerate_weyl(s);
    std::set<RationalVector> roots(s.roots().begin(), s.roots().end());
    std::set<std::vector<Rational>> distinct;
    std::size_t prev_len = 0;
    std::vector<int> prev_word;
    CHECK(group.front().matrix.is_identity());
    for (const auto& w : group) {
      Matrix prod = Matrix::identity(s.ambient_dim());
      for (int i : w.word) prod = prod * reflection_matrix(s.simple_roots()[i]);
      CHECK(prod == w.matrix);
      CHECK((w.matrix.transpose() * w.matrix).is_identity());
      for (const auto& a : s.roots()) CHECK(roots.count(w(a)));
      CHECK(inversions(s, w.matrix) == w.word.size());
      // Canonical order: by length, then lexicographic word.
      CHECK(w.word.size() >= prev_len);
      if (w.word.size() == prev_len && !prev_word.empty()) CHECK(prev_word < w.word);
      prev_len = w.word.size();
      prev_word = w.word;
      std::vector<Rational> flat;
      for (std::size_t r = 0; r < w.matrix.rows(); ++r) {
        RationalVector row = w.matrix.row(r);
        flat.insert(flat.end(), row.coords().begin(), row.coords().end());
      }
      distinct.insert(flat);
    }
    CHECK(distinct.size() == group.size());
  }
}

TEST_CASE("enumeration is deterministic") {
  auto s = sys(RootType::B, 3);
  auto a = enumerate_weyl(s), b = enumerate_weyl(s);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].word == b[i].word);
    CHECK(a[i].matrix == b[i].matrix);
  }
}

TEST_CASE("longest element") {
  auto a1 = sys(RootType::A, 1);
  CHECK(longest_element(a1)(RationalVector{1, -1}) == RationalVector{-1, 1});
  for (auto s : {sys(RootType::B, 3), sys(RootType::C, 2), sys(RootType::BC, 3), sys(RootType::G, 2),
                 sys(RootType::F, 4)}) {
    CAPTURE(s.name());
    auto w0 = longest_element(s);
    for (const auto& a : s.simple_roots()) CHECK(w0(a) == -a);
  }
  auto a2 = sys(RootType::A, 2);
  auto w0 = longest_element(a2);
  CHECK(w0(RationalVector{3, 1, -4}) == RationalVector{-4, 1, 3});
}

TEST_CASE("longest element agrees with the brute-force search over W") {
  for (auto s : {sys(RootType::A, 2), sys(RootType::A, 4), sys(RootType::D, 4), sys(RootType::D, 5),
                 sys(RootType::B, 3), sys(RootType::G, 2), sys(RootType::E, 6)}) {
    CAPTURE(s.name());
    auto group = enumerate_weyl(s);
    std::vector<const WeylElement*> hits;
    for (const auto& w : group)
      if (w(s.rho_check()) == -s.rho_check()) hits.push_back(&w);
    REQUIRE(hits.size() == 1);
    auto w0 = longest_element(s);
    CHECK(w0.matrix == hits[0]->matrix);
    CHECK(w0.word.size() == s.positive_roots().size());
    CHECK(w0.word.size() == hits[0]->word.size());
    CHECK((w0.matrix * w0.matrix).is_identity());
  }
}

TEST_CASE("minus w0") {
  CHECK(minus_w0(sys(RootType::B, 2)).is_identity());
  auto a2 = sys(RootType::A, 2);
  CHECK(minus_w0(a2) * RationalVector{3, 1, -4} == RationalVector{4, -1, -3});
  // D3 via the 24 signed permutations with an even number of sign changes.
  auto d3 = sys(RootType::D, 3);
  RationalVector rho = d3.rho_check();
  Matrix expected(3, 3);
  int found = 0;
  for (const auto& g : oracle::signed_permutations(3)) {
    int neg = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) neg += g(i, j).sign() < 0;
    if (neg % 2) continue;
    if (g * rho == -rho) {
      expected = -g;
      ++found;
    }
  }
  REQUIRE(found == 1);
  CHECK(minus_w0(d3) == expected);
  CHECK(minus_w0(d3) * RationalVector{1, 2, 3} == RationalVector{1, 2, -3});
}

TEST_CASE("a-hyperbolic dimension") {
  CHECK(ahyp_dimension(sys(RootType::A, 4)) == 2);
  CHECK(ahyp_dimension(sys(RootType::D, 5)) == 4);
  CHECK(ahyp_dimension(sys(RootType::C, 3)) == 3);
  CHECK(ahyp_dimension(sys(RootType::E, 6)) == 4);
  CHECK(ahyp_dimension(sys(RootType::D, 4)) == 4);
  for (int n = 1; n <= 7; ++n) CHECK(ahyp_dimension(sys(RootType::A, n)) == (n + 1) / 2);
}

TEST_CASE("simple root permutation is an involution") {
  for (auto s : {sys(RootType::A, 5), sys(RootType::D, 5), sys(RootType::E, 6), sys(RootType::F, 4)}) {
    auto p = simple_root_permutation(s);
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(p[p[i]] == int(i));
  }
  auto p = simple_root_permutation(sys(RootType::A, 3));
  CHECK(p == std::vector<int>{2, 1, 0});
}

TEST_CASE("fixed cone") {
  auto a2 = sys(RootType::A, 2);
  auto cone = fixed_cone(a2);
  CHECK(cone.basis == std::vector<RationalVector>{{1, 0, -1}});
  auto b2 = sys(RootType::B, 2);
  auto cb = fixed_cone(b2);
  REQUIRE(cb.basis.size() == 2);
  CHECK(rank(Matrix::from_rows(cb.basis, 2)) == 2);
  for (const auto& v : cb.basis) CHECK(is_dominant(b2, v));
  CHECK(in_fixed_cone(b2, cb, RationalVector{1, 0}));
  CHECK(in_fixed_cone(b2, cb, RationalVector{1, 1}));

  for (auto s : {sys(RootType::E, 6), sys(RootType::A, 5), sys(RootType::D, 5)}) {
    auto c = fixed_cone(s);
    CHECK(int(c.basis.size()) == ahyp_dimension(s));
    for (const auto& v : c.basis) {
      CHECK(c.minus_w0 * v == v);
      CHECK(is_dominant(s, v));
      CHECK(in_fixed_cone(s, c, v));
    }
    CHECK(rank(Matrix::from_rows(c.basis, s.ambient_dim())) == c.basis.size());
  }
  CHECK(fixed_cone(sys(RootType::E, 6)).basis.size() == 4);
}

TEST_CASE("antipodality") {
  auto a2 = sys(RootType::A, 2);
  CHECK(is_antipodal(a2, RationalVector{1, 0, -1}));
  CHECK_FALSE(is_antipodal(a2, RationalVector{2, -1, -1}));
  auto c2 = sys(RootType::C, 2);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) CHECK(is_antipodal(c2, oracle::random_span_vector(rng, c2)));
}
