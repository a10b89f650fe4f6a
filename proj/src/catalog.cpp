#include "ahyp/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>

#include "ahyp/errors.hpp"
#include "ahyp/weyl.hpp"

namespace ahyp {

namespace {

std::string pq_name(std::string_view head, int p, int q) {
  return std::string(head) + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

SimpleRealForm make(std::string name, Family family, std::vector<int> params, RootType type,
                    int rrank, int dim_g, int dim_k, int rank_k, bool complex = false) {
  if (rrank == 1 && (type == RootType::B || type == RootType::C)) type = RootType::A;
  return {std::move(name), family, std::move(params), type, rrank, dim_g, dim_k,
          dim_g - dim_k, rank_k, complex};
}

struct ExceptionalEntry {
  const char* name;
  const char* alias;
  RootType type;
  int rrank;
  int dim_g;
  int dim_k;
  int rank_k;
  bool complex;
};

// Maximal compact subalgebras: g2(2) su2+su2; f4(4) sp3+su2; f4(-20) so9;
// e6(6) sp4; e6(2) su6+su2; e6(-14) so10+u1; e6(-26) f4; e7(7) su8;
// e7(-5) so12+su2; e7(-25) e6+u1; e8(8) so16; e8(-24) e7+su2.
constexpr ExceptionalEntry kExceptional[] = {
    {"g2(2)", nullptr, RootType::G, 2, 14, 6, 2, false},
    {"f4(4)", nullptr, RootType::F, 4, 52, 24, 4, false},
    {"f4(-20)", nullptr, RootType::BC, 1, 52, 36, 4, false},
    {"e6(6)", "e6(I)", RootType::E, 6, 78, 36, 4, false},
    {"e6(2)", nullptr, RootType::F, 4, 78, 38, 6, false},
    {"e6(-14)", nullptr, RootType::BC, 2, 78, 46, 6, false},
    {"e6(-26)", "e6(IV)", RootType::A, 2, 78, 52, 4, false},
    {"e7(7)", nullptr, RootType::E, 7, 133, 63, 7, false},
    {"e7(-5)", nullptr, RootType::F, 4, 133, 69, 7, false},
    {"e7(-25)", nullptr, RootType::C, 3, 133, 79, 7, false},
    {"e8(8)", nullptr, RootType::E, 8, 248, 120, 8, false},
    {"e8(-24)", nullptr, RootType::F, 4, 248, 136, 8, false},
    {"g2(C)", nullptr, RootType::G, 2, 28, 14, 2, true},
    {"f4(C)", nullptr, RootType::F, 4, 104, 52, 4, true},
    {"e6(C)", nullptr, RootType::E, 6, 156, 78, 6, true},
    {"e7(C)", nullptr, RootType::E, 7, 266, 133, 7, true},
    {"e8(C)", nullptr, RootType::E, 8, 496, 248, 8, true},
};

SimpleRealForm from_entry(const ExceptionalEntry& e) {
  return make(e.name, e.complex ? Family::ExceptionalComplex : Family::ExceptionalReal, {},
              e.type, e.rrank, e.dim_g, e.dim_k, e.rank_k, e.complex);
}

struct CompactEntry {
  const char* name;
  int dim;
  int rank;
};

constexpr CompactEntry kCompactExceptional[] = {
    {"g2", 14, 2}, {"f4", 52, 4}, {"e6", 78, 6}, {"e7", 133, 7}, {"e8", 248, 8}};

std::string trim_all(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') out += c;
  return out;
}

int parse_int(std::string_view s, std::string_view context) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v < 0)
    throw ParseError("expected a nonnegative integer in '" + std::string(context) + "', got '" +
                     std::string(s) + "'");
  return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

[[noreturn]] void not_semisimple(const std::string& term, const std::string& what,
                                 const std::string& sum_form) {
  throw NotSemisimple(term + " is " + what + "; enter the sum form \"" + sum_form + "\"");
}

void add_compact(ReductiveDescriptor& d, std::string name, int dim, int rank) {
  d.compact_simple_parts.push_back({std::move(name), dim, rank});
}

void add_compact_classical(ReductiveDescriptor& d, const std::string& term, std::string_view head,
                           int n) {
  if (head == "su") {
    if (n < 2) throw ParseError(term + ": su(n) requires n >= 2");
    add_compact(d, "su(" + std::to_string(n) + ")", n * n - 1, n - 1);
  } else if (head == "so") {
    if (n == 2) not_semisimple(term, "abelian (so(2) = u(1))", "u(1)^1");
    if (n == 4) not_semisimple(term, "not simple (so(4) = su(2)+su(2))", "su(2)+su(2)");
    if (n < 3) throw ParseError(term + ": so(n) requires n >= 3");
    add_compact(d, "so(" + std::to_string(n) + ")", n * (n - 1) / 2, n / 2);
  } else {
    if (n < 1) throw ParseError(term + ": sp(n) requires n >= 1");
    add_compact(d, "sp(" + std::to_string(n) + ")", n * (2 * n + 1), n);
  }
}

void parse_term(ReductiveDescriptor& d, const std::string& term) {
  if (term.empty()) throw ParseError("empty term in descriptor");
  if (term.rfind("R^", 0) == 0) {
    d.split_center_dim += parse_int(term.substr(2), term);
    return;
  }
  if (term == "u(1)") {
    d.compact_center_dim += 1;
    return;
  }
  if (term.rfind("u(1)^", 0) == 0) {
    d.compact_center_dim += parse_int(term.substr(5), term);
    return;
  }
  for (const auto& c : kCompactExceptional)
    if (term == c.name) {
      add_compact(d, c.name, c.dim, c.rank);
      return;
    }
  if (auto ex = exceptional_form(term)) {
    d.noncompact_simple_parts.push_back(*ex);
    return;
  }

  auto open = term.find('(');
  if (open == std::string::npos || term.back() != ')')
    throw ParseError("unrecognized term '" + term + "'");
  std::string head = term.substr(0, open);
  auto args = split(std::string_view(term).substr(open + 1, term.size() - open - 2), ',');

  auto field = [&](char f) { return args.size() == 2 && args[1].size() == 1 && args[1][0] == f; };
  auto one = [&] { return parse_int(args[0], term); };
  auto push = [&](Family fam, std::vector<int> params, const char* need) {
    auto form = make_form(fam, std::move(params));
    if (!form) throw ParseError(term + ": " + need);
    d.noncompact_simple_parts.push_back(*form);
  };

  if (head == "sl" && field('R')) return push(Family::SlR, {one()}, "sl(n,R) requires n >= 2");
  if (head == "sl" && field('C')) return push(Family::SlC, {one()}, "sl(n,C) requires n >= 2");
  if (head == "sp" && field('R')) return push(Family::SpR, {one()}, "sp(n,R) requires n >= 1");
  if (head == "sp" && field('C')) return push(Family::SpC, {one()}, "sp(n,C) requires n >= 1");
  if (head == "so" && field('C')) {
    int n = one();
    if (n == 2) not_semisimple(term, "abelian (so(2,C) = C)", "R^1+u(1)^1");
    if (n == 4) not_semisimple(term, "not simple (so(4,C) = sl(2,C)+sl(2,C))", "sl(2,C)+sl(2,C)");
    return push(Family::SoC, {n}, "so(n,C) requires n >= 3");
  }
  if (head == "su*" && args.size() == 1) {
    int m = one();
    if (m % 2 != 0) throw ParseError(term + ": su*(2n) requires an even argument");
    if (m == 2) not_semisimple(term, "compact (su*(2) = su(2))", "su(2)");
    return push(Family::SuStar, {m}, "su*(2n) requires 2n >= 4");
  }
  if (head == "so*" && args.size() == 1) {
    int m = one();
    if (m % 2 != 0) throw ParseError(term + ": so*(2n) requires an even argument");
    if (m == 2) not_semisimple(term, "abelian (so*(2) = u(1))", "u(1)^1");
    if (m == 4) not_semisimple(term, "not simple (so*(4) = su(2)+sl(2,R))", "su(2)+sl(2,R)");
    return push(Family::SoStar, {m}, "so*(2n) requires 2n >= 6");
  }
  if ((head == "su" || head == "so" || head == "sp") && args.size() == 1)
    return add_compact_classical(d, term, head, one());
  if ((head == "su" || head == "so" || head == "sp") && args.size() == 2 && !field('R') &&
      !field('C')) {
    int p = parse_int(args[0], term), q = parse_int(args[1], term);
    if (p > q) std::swap(p, q);
    if (p == 0) return add_compact_classical(d, term, head, q);
    if (head == "so" && p == 1 && q == 1) not_semisimple(term, "abelian (so(1,1) = R)", "R^1");
    if (head == "so" && p == 2 && q == 2)
      not_semisimple(term, "not simple (so(2,2) = sl(2,R)+sl(2,R))", "sl(2,R)+sl(2,R)");
    Family fam = head == "su" ? Family::Su : head == "so" ? Family::So : Family::Sp;
    return push(fam, {p, q}, "parameters out of range");
  }
  throw ParseError("unrecognized term '" + term + "'");
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::SlR: return "sl(n,R)";
    case Family::SlC: return "sl(n,C)";
    case Family::SuStar: return "su*(2n)";
    case Family::Su: return "su(p,q)";
    case Family::So: return "so(p,q)";
    case Family::SoC: return "so(n,C)";
    case Family::SoStar: return "so*(2n)";
    case Family::SpR: return "sp(n,R)";
    case Family::SpC: return "sp(n,C)";
    case Family::Sp: return "sp(p,q)";
    case Family::ExceptionalReal: return "exceptional-real";
    case Family::ExceptionalComplex: return "exceptional-complex";
  }
  return "?";
}

std::string SimpleRealForm::restricted_name() const {
  return std::string(to_string(restricted_type)) + std::to_string(restricted_rank);
}

RootSystem SimpleRealForm::restricted_system() const {
  return RootSystem::build(restricted_type, restricted_rank);
}

int ahyp(const SimpleRealForm& form) {
  static std::mutex mutex;
  static std::map<std::pair<RootType, int>, int> memo;
  const auto key = std::make_pair(form.restricted_type, form.restricted_rank);
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  int value = ahyp_dimension(form.restricted_system());
  std::lock_guard lock(mutex);
  memo.emplace(key, value);
  return value;
}

AttributeRecord attributes(const SimpleRealForm& form) {
  return {form.restricted_name(), form.real_rank(), ahyp(form),        form.dim_g,
          form.dim_k,             form.dim_p,       form.rank_maxcompact};
}

std::optional<SimpleRealForm> make_form(Family family, std::vector<int> params) {
  auto p1 = [&] { return params.size() == 1 ? params[0] : -1; };
  switch (family) {
    case Family::SlR: {
      int n = p1();
      if (n < 2) return std::nullopt;
      return make("sl(" + std::to_string(n) + ",R)", family, {n}, RootType::A, n - 1, n * n - 1,
                  n * (n - 1) / 2, n / 2);
    }
    case Family::SlC: {
      int n = p1();
      if (n < 2) return std::nullopt;
      return make("sl(" + std::to_string(n) + ",C)", family, {n}, RootType::A, n - 1,
                  2 * (n * n - 1), n * n - 1, n - 1, true);
    }
    case Family::SuStar: {
      int m = p1();
      if (m < 4 || m % 2 != 0) return std::nullopt;
      int n = m / 2;
      return make("su*(" + std::to_string(m) + ")", family, {m}, RootType::A, n - 1, m * m - 1,
                  n * (2 * n + 1), n);
    }
    case Family::SoC: {
      int n = p1();
      if (n < 3 || n == 4) return std::nullopt;
      return make("so(" + std::to_string(n) + ",C)", family, {n},
                  n % 2 == 0 ? RootType::D : RootType::B, n / 2, n * (n - 1), n * (n - 1) / 2,
                  n / 2, true);
    }
    case Family::SoStar: {
      int m = p1();
      if (m < 6 || m % 2 != 0) return std::nullopt;
      int n = m / 2;
      return make("so*(" + std::to_string(m) + ")", family, {m},
                  n % 2 == 0 ? RootType::C : RootType::BC, n / 2, n * (2 * n - 1), n * n, n);
    }
    case Family::SpR: {
      int n = p1();
      if (n < 1) return std::nullopt;
      return make("sp(" + std::to_string(n) + ",R)", family, {n}, RootType::C, n, n * (2 * n + 1),
                  n * n, n);
    }
    case Family::SpC: {
      int n = p1();
      if (n < 1) return std::nullopt;
      return make("sp(" + std::to_string(n) + ",C)", family, {n}, RootType::C, n,
                  2 * n * (2 * n + 1), n * (2 * n + 1), n, true);
    }
    case Family::Su:
    case Family::So:
    case Family::Sp: {
      if (params.size() != 2) return std::nullopt;
      int p = std::min(params[0], params[1]), q = std::max(params[0], params[1]);
      if (p < 1) return std::nullopt;
      const int n = p + q;
      if (family == Family::Su)
        return make(pq_name("su", p, q), family, {p, q}, p == q ? RootType::C : RootType::BC, p,
                    n * n - 1, p * p + q * q - 1, n - 1);
      if (family == Family::So) {
        if (n < 3 || (p == 2 && q == 2)) return std::nullopt;
        return make(pq_name("so", p, q), family, {p, q}, p == q ? RootType::D : RootType::B, p,
                    n * (n - 1) / 2, p * (p - 1) / 2 + q * (q - 1) / 2, p / 2 + q / 2);
      }
      return make(pq_name("sp", p, q), family, {p, q}, p == q ? RootType::C : RootType::BC, p,
                  n * (2 * n + 1), p * (2 * p + 1) + q * (2 * q + 1), n);
    }
    case Family::ExceptionalReal:
    case Family::ExceptionalComplex: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<SimpleRealForm> exceptional_form(std::string_view name) {
  for (const auto& e : kExceptional)
    if (name == e.name || (e.alias && name == e.alias)) return from_entry(e);
  return std::nullopt;
}

std::vector<SimpleRealForm> exceptional_forms() {
  std::vector<SimpleRealForm> out;
  for (const auto& e : kExceptional) out.push_back(from_entry(e));
  return out;
}

std::vector<SimpleRealForm> scan_catalog(const std::function<bool(const SimpleRealForm&)>& within,
                                         int param_ceiling) {
  std::vector<SimpleRealForm> out;
  auto single = [&](Family fam, int start, int step) {
    for (int x = start; x <= param_ceiling; x += step) {
      auto form = make_form(fam, {x});
      if (!form) continue;
      if (!within(*form)) break;
      out.push_back(std::move(*form));
    }
  };
  auto pair = [&](Family fam) {
    for (int p = 1; p <= param_ceiling; ++p) {
      bool first = true;
      bool stop_outer = false;
      for (int q = p; q <= param_ceiling; ++q) {
        auto form = make_form(fam, {p, q});
        if (!form) continue;
        if (!within(*form)) {
          stop_outer = first;
          break;
        }
        first = false;
        out.push_back(std::move(*form));
      }
      if (stop_outer) break;
    }
  };
  single(Family::SlR, 2, 1);
  single(Family::SlC, 2, 1);
  single(Family::SuStar, 4, 2);
  pair(Family::Su);
  pair(Family::So);
  single(Family::SoC, 3, 1);
  single(Family::SoStar, 6, 2);
  single(Family::SpR, 1, 1);
  single(Family::SpC, 1, 1);
  pair(Family::Sp);
  for (auto& e : exceptional_forms())
    if (within(e)) out.push_back(std::move(e));
  return out;
}

std::vector<Table1Row> table1_rows(int k_max) {
  std::vector<Table1Row> rows;
  auto add = [&](std::string family, int k, std::optional<SimpleRealForm> form, int table_ahyp,
                 int table_rank) {
    rows.push_back({std::move(family), k, *form, ahyp(*form), form->real_rank(), table_ahyp,
                    table_rank});
  };
  for (int k = 2; k <= k_max; ++k) add("sl(2k,R)", k, make_form(Family::SlR, {2 * k}), k, 2 * k - 1);
  for (int k = 1; k <= k_max; ++k)
    add("sl(2k+1,R)", k, make_form(Family::SlR, {2 * k + 1}), k, 2 * k);
  for (int k = 2; k <= k_max; ++k)
    add("su*(4k)", k, make_form(Family::SuStar, {4 * k}), k, 2 * k - 1);
  for (int k = 1; k <= k_max; ++k)
    add("su*(4k+2)", k, make_form(Family::SuStar, {4 * k + 2}), k, 2 * k);
  for (int k = 2; k <= k_max; ++k)
    add("so(2k+1,2k+1)", k, make_form(Family::So, {2 * k + 1, 2 * k + 1}), 2 * k, 2 * k + 1);
  add("e6(I)", 0, exceptional_form("e6(6)"), 4, 6);
  add("e6(IV)", 0, exceptional_form("e6(-26)"), 1, 2);
  return rows;
}

bool in_table1_family(const SimpleRealForm& form) {
  switch (form.family) {
    case Family::SlR: return form.params[0] >= 3;
    case Family::SuStar: return form.params[0] >= 6;
    case Family::So:
      return form.params[0] == form.params[1] && form.params[0] % 2 == 1 && form.params[0] >= 3;
    case Family::ExceptionalReal: return form.name == "e6(6)" || form.name == "e6(-26)";
    default: return false;
  }
}

std::vector<SimpleRealForm> table1_unexplained(int max_rank) {
  auto forms = scan_catalog([&](const SimpleRealForm& s) { return s.real_rank() <= max_rank; },
                            2 * max_rank + 4);
  std::vector<SimpleRealForm> out;
  for (auto& f : forms)
    if (!f.is_complex_as_real && ahyp(f) != f.real_rank() && !in_table1_family(f))
      out.push_back(std::move(f));
  return out;
}

std::string ReductiveDescriptor::str() const {
  std::string s;
  auto add = [&](const std::string& t) {
    if (!s.empty()) s += "+";
    s += t;
  };
  for (const auto& p : noncompact_simple_parts) add(p.name);
  for (const auto& c : compact_simple_parts) add(c.name);
  if (split_center_dim > 0) add("R^" + std::to_string(split_center_dim));
  if (compact_center_dim > 0) add("u(1)^" + std::to_string(compact_center_dim));
  return s.empty() ? "0" : s;
}

ReductiveDescriptor parse_descriptor(std::string_view text) {
  std::string s = trim_all(text);
  ReductiveDescriptor d;
  if (s.empty() || s == "0") return d;
  for (const auto& term : split(s, '+')) parse_term(d, term);
  return d;
}

DerivedInvariants derived_invariants(const ReductiveDescriptor& desc) {
  DerivedInvariants inv{desc.split_center_dim, 0, desc.split_center_dim, desc.compact_center_dim,
                        desc.split_center_dim + desc.compact_center_dim};
  for (const auto& p : desc.noncompact_simple_parts) {
    inv.real_rank += p.real_rank();
    inv.ahyp += ahyp(p);
    inv.d += p.dim_p;
    inv.rank_maxcompact_sum += p.rank_maxcompact;
    inv.dim += p.dim_g;
  }
  for (const auto& c : desc.compact_simple_parts) {
    inv.rank_maxcompact_sum += c.rank;
    inv.dim += c.dim;
  }
  return inv;
}

}  // namespace ahyp
