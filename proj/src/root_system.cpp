#include "ahyp/root_system.hpp"

#include <algorithm>

#include "ahyp/errors.hpp"

namespace ahyp {

namespace {

RationalVector unit(std::size_t dim, std::size_t i, Rational scale = 1) {
  RationalVector v(dim);
  v[i] = scale;
  return v;
}

// +-e_i +- e_j for i < j.
void add_long_pairs(std::vector<RationalVector>& roots, std::size_t n, std::size_t dim) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          RationalVector v(dim);
          v[i] = si;
          v[j] = sj;
          roots.push_back(std::move(v));
        }
}

std::vector<RationalVector> e8_roots() {
  std::vector<RationalVector> roots;
  add_long_pairs(roots, 8, 8);
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    RationalVector v(8);
    for (std::size_t i = 0; i < 8; ++i) v[i] = Rational((mask >> i) & 1 ? -1 : 1, 2);
    roots.push_back(std::move(v));
  }
  return roots;
}

std::vector<RationalVector> e8_simple() {
  const Rational h(1, 2);
  std::vector<RationalVector> s;
  s.push_back(RationalVector{h, -h, -h, -h, -h, -h, -h, h});
  s.push_back(RationalVector{1, 1, 0, 0, 0, 0, 0, 0});
  for (std::size_t i = 0; i < 6; ++i) {
    RationalVector v(8);
    v[i] = -1;
    v[i + 1] = 1;
    s.push_back(std::move(v));
  }
  return s;
}

struct Realization {
  std::size_t dim;
  std::vector<RationalVector> roots;
  std::vector<RationalVector> simple;
};

Realization realize(RootType type, int rank) {
  const auto n = static_cast<std::size_t>(rank);
  Realization out;
  auto chain = [&](std::size_t dim, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      RationalVector v(dim);
      v[i] = 1;
      v[i + 1] = -1;
      out.simple.push_back(std::move(v));
    }
  };
  switch (type) {
    case RootType::A: {
      out.dim = n + 1;
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j)
          if (i != j) {
            RationalVector v(out.dim);
            v[i] = 1;
            v[j] = -1;
            out.roots.push_back(std::move(v));
          }
      chain(out.dim, n);
      break;
    }
    case RootType::B:
    case RootType::C:
    case RootType::D:
    case RootType::BC: {
      out.dim = n;
      add_long_pairs(out.roots, n, n);
      for (std::size_t i = 0; i < n; ++i) {
        if (type == RootType::B || type == RootType::BC) {
          out.roots.push_back(unit(n, i));
          out.roots.push_back(unit(n, i, -1));
        }
        if (type == RootType::C || type == RootType::BC) {
          out.roots.push_back(unit(n, i, 2));
          out.roots.push_back(unit(n, i, -2));
        }
      }
      chain(n, n - 1);
      if (type == RootType::D) {
        RationalVector last(n);
        last[n - 2] = 1;
        last[n - 1] = 1;
        out.simple.push_back(std::move(last));
      } else {
        out.simple.push_back(unit(n, n - 1, type == RootType::C ? 2 : 1));
      }
      break;
    }
    case RootType::G: {
      out.dim = 3;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          if (i == j) continue;
          RationalVector v(3);
          v[i] = 1;
          v[j] = -1;
          out.roots.push_back(std::move(v));
        }
      for (std::size_t i = 0; i < 3; ++i)
        for (int s : {1, -1}) {
          RationalVector v(3);
          for (std::size_t j = 0; j < 3; ++j) v[j] = (i == j ? 2 : -1) * s;
          out.roots.push_back(std::move(v));
        }
      out.simple.push_back(RationalVector{1, -1, 0});
      out.simple.push_back(RationalVector{-2, 1, 1});
      break;
    }
    case RootType::F: {
      out.dim = 4;
      add_long_pairs(out.roots, 4, 4);
      for (std::size_t i = 0; i < 4; ++i) {
        out.roots.push_back(unit(4, i));
        out.roots.push_back(unit(4, i, -1));
      }
      for (unsigned mask = 0; mask < 16; ++mask) {
        RationalVector v(4);
        for (std::size_t i = 0; i < 4; ++i) v[i] = Rational((mask >> i) & 1 ? -1 : 1, 2);
        out.roots.push_back(std::move(v));
      }
      const Rational h(1, 2);
      out.simple = {RationalVector{0, 1, -1, 0}, RationalVector{0, 0, 1, -1},
                    RationalVector{0, 0, 0, 1}, RationalVector{h, -h, -h, -h}};
      break;
    }
    case RootType::E: {
      out.dim = 8;
      RationalVector e78{0, 0, 0, 0, 0, 0, 1, 1};
      RationalVector e67{0, 0, 0, 0, 0, 1, -1, 0};
      for (auto& r : e8_roots()) {
        if (rank <= 7 && !dot(r, e78).is_zero()) continue;
        if (rank == 6 && !dot(r, e67).is_zero()) continue;
        out.roots.push_back(std::move(r));
      }
      auto s = e8_simple();
      out.simple.assign(s.begin(), s.begin() + rank);
      break;
    }
  }
  return out;
}

bool supported(RootType type, int rank) {
  switch (type) {
    case RootType::A:
    case RootType::BC: return rank >= 1;
    case RootType::B:
    case RootType::C: return rank >= 2;
    case RootType::D: return rank >= 3;
    case RootType::E: return rank >= 6 && rank <= 8;
    case RootType::F: return rank == 4;
    case RootType::G: return rank == 2;
  }
  return false;
}

}  // namespace

std::string_view to_string(RootType t) {
  switch (t) {
    case RootType::A: return "A";
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::D: return "D";
    case RootType::E: return "E";
    case RootType::F: return "F";
    case RootType::G: return "G";
    case RootType::BC: return "BC";
  }
  return "?";
}

RootType parse_root_type(std::string_view letter) {
  for (RootType t : {RootType::A, RootType::B, RootType::C, RootType::D, RootType::E, RootType::F,
                     RootType::G, RootType::BC})
    if (to_string(t) == letter) return t;
  throw ParseError("unknown root system type '" + std::string(letter) + "'");
}

RootSystem RootSystem::build(RootType type, int rank) {
  if (!supported(type, rank))
    throw UnsupportedSystem("unsupported root system " + std::string(to_string(type)) +
                            std::to_string(rank));
  Realization r = realize(type, rank);
  RootSystem sys;
  sys.ambient_dim_ = r.dim;
  sys.components_.push_back({type, rank, 0, r.dim, 0});
  sys.roots_ = std::move(r.roots);
  sys.simple_roots_ = std::move(r.simple);
  sys.finish();
  return sys;
}

RootSystem RootSystem::direct_sum(std::span<const RootSystem> parts) {
  if (parts.empty()) throw UnsupportedSystem("empty direct sum");
  RootSystem sys;
  for (const auto& p : parts) sys.ambient_dim_ += p.ambient_dim_;
  auto embed = [&](const RationalVector& v, std::size_t offset) {
    RationalVector out(sys.ambient_dim_);
    for (std::size_t i = 0; i < v.ambient_dim(); ++i) out[offset + i] = v[i];
    return out;
  };
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (auto c : p.components_) {
      c.offset += offset;
      c.first_simple += sys.simple_roots_.size();
      sys.components_.push_back(c);
    }
    for (const auto& v : p.roots_) sys.roots_.push_back(embed(v, offset));
    for (const auto& v : p.simple_roots_) sys.simple_roots_.push_back(embed(v, offset));
    offset += p.ambient_dim_;
  }
  sys.finish();
  return sys;
}

void RootSystem::finish() {
  const std::size_t n = simple_roots_.size();
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = dot(simple_roots_[i], simple_roots_[j]);

  // Coweight w_j = sum_k c_jk a_k with gram * c_j = e_j.
  coweights_.clear();
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector c;
    if (!solve(gram, unit(n, j), c)) throw Error("simple roots are linearly dependent");
    RationalVector w(ambient_dim_);
    for (std::size_t k = 0; k < n; ++k) w += c[k] * simple_roots_[k];
    coweights_.push_back(std::move(w));
  }
  rho_check_ = RationalVector(ambient_dim_);
  for (const auto& w : coweights_) rho_check_ += w;

  complement_ = kernel_basis(Matrix::from_rows(simple_roots_, ambient_dim_));

  std::vector<RationalVector> pos, neg;
  for (auto& r : roots_) (dot(r, rho_check_).sign() > 0 ? pos : neg).push_back(r);
  std::sort(pos.begin(), pos.end(), [&](const auto& a, const auto& b) {
    auto ha = dot(a, rho_check_), hb = dot(b, rho_check_);
    if (ha != hb) return ha < hb;
    return b < a;
  });
  positive_roots_ = pos;
  roots_ = pos;
  for (const auto& p : pos) roots_.push_back(-p);
}

std::optional<RootType> RootSystem::type_letter() const {
  if (!is_irreducible()) return std::nullopt;
  return components_.front().type;
}

std::string RootSystem::name() const {
  std::string s;
  for (const auto& c : components_) {
    if (!s.empty()) s += "+";
    s += std::string(to_string(c.type)) + std::to_string(c.rank);
  }
  return s;
}

bool RootSystem::is_root(const RationalVector& v) const {
  return std::find(roots_.begin(), roots_.end(), v) != roots_.end();
}

bool RootSystem::in_span(const RationalVector& v) const {
  if (v.ambient_dim() != ambient_dim_) return false;
  for (const auto& c : complement_)
    if (!dot(c, v).is_zero()) return false;
  return true;
}

void RootSystem::require_in_span(const RationalVector& v) const {
  if (v.ambient_dim() != ambient_dim_)
    throw DimensionMismatch("vector has " + std::to_string(v.ambient_dim()) +
                            " coordinates, system " + name() + " needs " +
                            std::to_string(ambient_dim_));
  if (!in_span(v))
  {
    bool sum_zero_blocks = std::any_of(components_.begin(), components_.end(), [](const auto& c) {
      return c.type == RootType::A || c.type == RootType::G;
    });
    throw NotInSpan("vector " + v.str() + " is not in the root span of " + name() +
                    (sum_zero_blocks ? " (A and G blocks need coordinate sum 0)" : ""));
  }
}

bool is_dominant(const RootSystem& system, const RationalVector& v) {
  system.require_in_span(v);
  for (const auto& a : system.simple_roots())
    if (dot(v, a).sign() < 0) return false;
  return true;
}

RationalVector reflect(const RationalVector& v, const RationalVector& root) {
  if (root.is_zero()) throw ZeroRoot("reflection in the zero vector");
  Rational c = Rational(2) * dot(v, root) / dot(root, root);
  if (c.is_zero()) return v;
  return v - c * root;
}

Matrix reflection_matrix(const RationalVector& root) {
  if (root.is_zero()) throw ZeroRoot("reflection in the zero vector");
  const std::size_t n = root.ambient_dim();
  Rational f = Rational(2) / dot(root, root);
  Matrix m = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!root[i].is_zero() && !root[j].is_zero()) m(i, j) -= f * root[i] * root[j];
  return m;
}

}  // namespace ahyp
