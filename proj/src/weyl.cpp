#include "ahyp/weyl.hpp"

#include <unordered_map>

#include "ahyp/errors.hpp"

namespace ahyp {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t component_order(const RootComponent& c) {
  switch (c.type) {
    case RootType::A: return factorial(c.rank + 1);
    case RootType::B:
    case RootType::C:
    case RootType::BC: return (std::uint64_t{1} << c.rank) * factorial(c.rank);
    case RootType::D: return (std::uint64_t{1} << (c.rank - 1)) * factorial(c.rank);
    case RootType::G: return 12;
    case RootType::F: return 1152;
    case RootType::E:
      return c.rank == 6 ? 51840 : c.rank == 7 ? 2903040 : std::uint64_t{696729600};
  }
  return 0;
}

}  // namespace

DominantChain dominant_chain(const RootSystem& system, const RationalVector& v) {
  system.require_in_span(v);
  DominantChain out{v, {}};
  const auto simple = system.simple_roots();
  for (;;) {
    int bad = -1;
    for (std::size_t i = 0; i < simple.size(); ++i)
      if (dot(out.dominant, simple[i]).sign() < 0) {
        bad = static_cast<int>(i);
        break;
      }
    if (bad < 0) return out;
    out.dominant = reflect(out.dominant, simple[static_cast<std::size_t>(bad)]);
    out.reflections.push_back(bad);
  }
}

RationalVector dominant_representative(const RootSystem& system, const RationalVector& v) {
  return dominant_chain(system, v).dominant;
}

std::uint64_t weyl_group_order(const RootSystem& system) {
  std::uint64_t order = 1;
  for (const auto& c : system.components()) {
    std::uint64_t f = component_order(c);
    if (order > UINT64_MAX / f) return UINT64_MAX;
    order *= f;
  }
  return order;
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& system, std::uint64_t cap) {
  const std::uint64_t order = weyl_group_order(system);
  if (order > cap) throw CapExceeded(cap, order, order != UINT64_MAX);

  const std::size_t n = system.ambient_dim();
  const auto simple = system.simple_roots();
  std::vector<Rational> factor;
  for (const auto& a : simple) factor.push_back(Rational(2) / dot(a, a));

  // Elements are identified by their image of rho_check, which has trivial stabilizer.
  std::vector<WeylElement> elements;
  std::vector<RationalVector> keys;
  std::unordered_map<RationalVector, std::size_t, RationalVectorHash> seen;
  elements.reserve(order);
  keys.reserve(order);
  elements.push_back({Matrix::identity(n), {}});
  keys.push_back(system.rho_check());
  seen.emplace(system.rho_check(), 0);

  for (std::size_t idx = 0; idx < elements.size(); ++idx) {
    for (std::size_t i = 0; i < simple.size(); ++i) {
      const Matrix& m = elements[idx].matrix;
      // M S_i = M - f (M a)(a^T), and <a_i, rho_check> = 1.
      RationalVector u = m * simple[i];
      RationalVector key = keys[idx] - factor[i] * u;
      if (seen.contains(key)) continue;
      if (elements.size() >= cap) throw CapExceeded(cap, elements.size() + 1, false);
      Matrix next = m;
      for (std::size_t r = 0; r < n; ++r) {
        if (u[r].is_zero()) continue;
        Rational fu = factor[i] * u[r];
        for (std::size_t c = 0; c < n; ++c)
          if (!simple[i][c].is_zero()) next(r, c) -= fu * simple[i][c];
      }
      std::vector<int> word = elements[idx].word;
      word.push_back(static_cast<int>(i));
      seen.emplace(key, elements.size());
      keys.push_back(std::move(key));
      elements.push_back({std::move(next), std::move(word)});
    }
  }
  return elements;
}

WeylElement longest_element(const RootSystem& system) {
  DominantChain chain = dominant_chain(system, -system.rho_check());
  // s_{i_k} ... s_{i_1} sends -rho_check to rho_check, hence is w0.
  WeylElement w0{Matrix::identity(system.ambient_dim()), {}};
  for (int i : chain.reflections)
    w0.matrix = reflection_matrix(system.simple_roots()[static_cast<std::size_t>(i)]) * w0.matrix;
  w0.word.assign(chain.reflections.rbegin(), chain.reflections.rend());
  return w0;
}

Matrix minus_w0(const RootSystem& system) { return -longest_element(system).matrix; }

std::vector<int> simple_root_permutation(const RootSystem& system) {
  const Matrix m = minus_w0(system);
  const auto simple = system.simple_roots();
  std::vector<int> perm;
  for (const auto& a : simple) {
    RationalVector image = m * a;
    int found = -1;
    for (std::size_t j = 0; j < simple.size(); ++j)
      if (simple[j] == image) found = static_cast<int>(j);
    if (found < 0) throw Error("-w0 does not permute the simple roots of " + system.name());
    perm.push_back(found);
  }
  return perm;
}

int ahyp_dimension_by_kernel(const RootSystem& system) {
  Matrix w0_plus_one = longest_element(system).matrix + Matrix::identity(system.ambient_dim());
  // w0 is the identity off the root span, so the kernel already lies in it.
  return static_cast<int>(kernel_basis(w0_plus_one).size());
}

int ahyp_dimension_by_orbits(const RootSystem& system) {
  std::vector<int> perm = simple_root_permutation(system);
  std::vector<bool> visited(perm.size(), false);
  int orbits = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (visited[i]) continue;
    ++orbits;
    for (auto j = i; !visited[j]; j = static_cast<std::size_t>(perm[j])) visited[j] = true;
  }
  return orbits;
}

int ahyp_dimension(const RootSystem& system) {
  int by_kernel = ahyp_dimension_by_kernel(system);
  int by_orbits = ahyp_dimension_by_orbits(system);
  if (by_kernel != by_orbits)
    throw Error("a-hyperbolic rank routes disagree for " + system.name() + ": kernel " +
                std::to_string(by_kernel) + ", orbits " + std::to_string(by_orbits));
  return by_kernel;
}

FixedCone fixed_cone(const RootSystem& system) {
  std::vector<int> perm = simple_root_permutation(system);
  FixedCone cone{{}, minus_w0(system)};
  std::vector<bool> visited(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (visited[i]) continue;
    RationalVector v(system.ambient_dim());
    for (auto j = i; !visited[j]; j = static_cast<std::size_t>(perm[j])) {
      visited[j] = true;
      v += system.fundamental_coweights()[j];
    }
    cone.basis.push_back(std::move(v));
  }
  return cone;
}

bool in_fixed_cone(const RootSystem& system, const FixedCone& cone, const RationalVector& v) {
  return is_dominant(system, v) && cone.minus_w0 * v == v;
}

bool is_antipodal(const RootSystem& system, const RationalVector& v) {
  return dominant_representative(system, v) == dominant_representative(system, -v);
}

}  // namespace ahyp
