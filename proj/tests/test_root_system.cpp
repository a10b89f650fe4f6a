#include <doctest.h>

#include <set>

#include "ahyp/errors.hpp"
#include "ahyp/root_system.hpp"

using namespace ahyp;

namespace {

struct Case {
  RootType type;
  int rank;
  std::size_t roots;
};

std::vector<Case> all_small() {
  std::vector<Case> out;
  for (int n = 1; n <= 7; ++n) out.push_back({RootType::A, n, std::size_t(n * (n + 1))});
  for (int n = 2; n <= 6; ++n) {
    out.push_back({RootType::B, n, std::size_t(2 * n * n)});
    out.push_back({RootType::C, n, std::size_t(2 * n * n)});
  }
  for (int n = 3; n <= 6; ++n) out.push_back({RootType::D, n, std::size_t(2 * n * (n - 1))});
  for (int n = 1; n <= 5; ++n) out.push_back({RootType::BC, n, std::size_t(2 * n * (n + 1))});
  out.push_back({RootType::G, 2, 12});
  out.push_back({RootType::F, 4, 48});
  out.push_back({RootType::E, 6, 72});
  out.push_back({RootType::E, 7, 126});
  out.push_back({RootType::E, 8, 240});
  return out;
}

}  // namespace

TEST_CASE("root counts match closed formulas") {
  for (const auto& s : all_small()) {
    auto sys = RootSystem::build(s.type, s.rank);
    CAPTURE(sys.name());
    CHECK(sys.roots().size() == s.roots);
    CHECK(sys.positive_roots().size() * 2 == s.roots);
    CHECK(sys.rank() == s.rank);
  }
}

TEST_CASE("roots are closed under reflection") {
  for (const auto& s : all_small()) {
    auto sys = RootSystem::build(s.type, s.rank);
    CAPTURE(sys.name());
    std::set<RationalVector> set(sys.roots().begin(), sys.roots().end());
    bool closed = true;
    for (const auto& a : sys.roots())
      for (const auto& b : sys.roots())
        if (!set.count(reflect(b, a))) closed = false;
    CHECK(closed);
  }
}

TEST_CASE("simple roots form a basis with nonnegative integer positive coefficients") {
  for (const auto& s : all_small()) {
    auto sys = RootSystem::build(s.type, s.rank);
    CAPTURE(sys.name());
    std::vector<RationalVector> simple(sys.simple_roots().begin(), sys.simple_roots().end());
    Matrix basis = Matrix::from_columns(simple, sys.ambient_dim());
    CHECK(rank(basis) == std::size_t(sys.rank()));
    std::vector<RationalVector> all(sys.roots().begin(), sys.roots().end());
    CHECK(rank(Matrix::from_rows(all, sys.ambient_dim())) == std::size_t(sys.rank()));

    std::set<RationalVector> pos(sys.positive_roots().begin(), sys.positive_roots().end());
    for (const auto& a : sys.positive_roots()) {
      RationalVector c;
      REQUIRE(solve(basis, a, c));
      for (const auto& x : c.coords()) {
        CHECK(x.is_integer());
        CHECK(x.sign() >= 0);
      }
      CHECK_FALSE(pos.count(-a));
    }
    for (const auto& a : sys.roots()) CHECK((pos.count(a) || pos.count(-a)));
  }
}

TEST_CASE("BC has exactly the pairs e_i, 2e_i as proportional roots") {
  for (int n = 1; n <= 4; ++n) {
    auto sys = RootSystem::build(RootType::BC, n);
    int pairs = 0;
    for (const auto& a : sys.positive_roots())
      for (const auto& b : sys.positive_roots())
        if (a != b && b == Rational(2) * a) {
          ++pairs;
          int nonzero = 0;
          for (const auto& x : a.coords()) nonzero += x.sign() != 0;
          CHECK(nonzero == 1);
        }
    CHECK(pairs == n);
  }
  auto bc1 = RootSystem::build(RootType::BC, 1);
  std::set<RationalVector> roots(bc1.roots().begin(), bc1.roots().end());
  CHECK(roots == std::set<RationalVector>{{1}, {-1}, {2}, {-2}});
}

TEST_CASE("reduced systems have no proportional roots other than negatives") {
  for (const auto& s : all_small()) {
    if (s.type == RootType::BC) continue;
    auto sys = RootSystem::build(s.type, s.rank);
    for (const auto& a : sys.roots()) {
      CHECK_FALSE(sys.is_root(Rational(2) * a));
      CHECK(sys.is_root(-a));
    }
  }
}

TEST_CASE("type A lives in the sum-zero hyperplane") {
  auto a2 = RootSystem::build(RootType::A, 2);
  CHECK(a2.roots().size() == 6);
  CHECK(a2.ambient_dim() == 3);
  for (const auto& a : a2.roots()) CHECK(a.sum() == Rational(0));
  CHECK(a2.in_span(RationalVector{1, 0, -1}));
  CHECK_FALSE(a2.in_span(RationalVector{1, 0, 0}));
  CHECK_THROWS_AS(a2.require_in_span(RationalVector{1, 0, 0}), NotInSpan);
  CHECK_THROWS_AS(a2.require_in_span(RationalVector{1, -1}), DimensionMismatch);
}

TEST_CASE("unsupported systems are rejected") {
  CHECK_THROWS_AS(RootSystem::build(RootType::D, 2), UnsupportedSystem);
  CHECK_THROWS_AS(RootSystem::build(RootType::E, 5), UnsupportedSystem);
  CHECK_THROWS_AS(RootSystem::build(RootType::F, 3), UnsupportedSystem);
  CHECK_THROWS_AS(RootSystem::build(RootType::B, 1), UnsupportedSystem);
  CHECK_THROWS_AS(RootSystem::build(RootType::A, 0), UnsupportedSystem);
  CHECK_THROWS_AS(RootSystem::build(RootType::G, 3), UnsupportedSystem);
}

TEST_CASE("dominance") {
  auto a2 = RootSystem::build(RootType::A, 2);
  auto b2 = RootSystem::build(RootType::B, 2);
  CHECK(is_dominant(a2, RationalVector{1, 0, -1}));
  CHECK_FALSE(is_dominant(a2, RationalVector{0, 1, -1}));
  CHECK(is_dominant(b2, RationalVector{2, 1}));
  CHECK_FALSE(is_dominant(b2, RationalVector{1, 2}));
  CHECK_THROWS_AS(is_dominant(a2, RationalVector{1, 0, 0}), NotInSpan);
}

TEST_CASE("reflections") {
  CHECK(reflect(RationalVector{1, 0, -1}, RationalVector{1, -1, 0}) == RationalVector{0, 1, -1});
  CHECK(reflect(RationalVector{2, 1}, RationalVector{0, 1}) == RationalVector{2, -1});
  RationalVector r{1, Rational(1, 2), -3};
  CHECK(reflect(r, r) == -r);
  CHECK(reflect(reflect(RationalVector{3, 7, 1}, r), r) == RationalVector{3, 7, 1});
  CHECK_THROWS_AS(reflect(r, RationalVector{0, 0, 0}), ZeroRoot);
  CHECK_THROWS_AS(reflect(r, RationalVector{1, 0}), DimensionMismatch);
  Matrix m = reflection_matrix(r);
  CHECK((m * m).is_identity());
  CHECK(m * r == -r);
}

TEST_CASE("fundamental coweights are dual to simple roots") {
  for (const auto& s : all_small()) {
    auto sys = RootSystem::build(s.type, s.rank);
    CAPTURE(sys.name());
    for (std::size_t i = 0; i < sys.simple_roots().size(); ++i)
      for (std::size_t j = 0; j < sys.simple_roots().size(); ++j)
        CHECK(dot(sys.fundamental_coweights()[i], sys.simple_roots()[j]) == Rational(i == j));
    for (const auto& a : sys.simple_roots()) CHECK(dot(sys.rho_check(), a) == Rational(1));
    CHECK(sys.in_span(sys.rho_check()));
  }
}

TEST_CASE("direct sums stack blocks") {
  std::vector<RootSystem> parts{RootSystem::build(RootType::A, 1), RootSystem::build(RootType::B, 2)};
  auto sum = RootSystem::direct_sum(parts);
  CHECK(sum.name() == "A1+B2");
  CHECK(sum.ambient_dim() == 4);
  CHECK(sum.rank() == 3);
  CHECK(sum.roots().size() == 2 + 8);
  CHECK_FALSE(sum.type_letter().has_value());
  CHECK(sum.is_root(RationalVector{0, 0, 1, 1}));
  CHECK_FALSE(sum.is_root(RationalVector{1, -1, 1, 0}));
}

TEST_CASE("root type names round trip") {
  for (auto t : {RootType::A, RootType::B, RootType::C, RootType::D, RootType::E, RootType::F,
                 RootType::G, RootType::BC})
    CHECK(parse_root_type(to_string(t)) == t);
  CHECK_THROWS_AS(parse_root_type("H"), ParseError);
}
