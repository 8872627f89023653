#pragma once

// Brute-force reference implementations. None of these call into the library
// under test beyond its plain data types; they work on raw masks and mpq_class.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Mask = std::uint64_t;

inline bool hits_all(Mask c, const std::vector<Mask>& fam) {
  for (Mask a : fam)
    if ((a & c) == 0) return false;
  return true;
}

inline std::vector<Mask> keep_minimal(const std::vector<Mask>& sets) {
  std::vector<Mask> out;
  for (Mask a : sets) {
    bool minimal = true;
    for (Mask b : sets)
      if (b != a && (b & ~a) == 0) minimal = false;
    if (minimal) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Scan every subset of {1..n}.
inline std::vector<Mask> minimal_covers(int n, const std::vector<Mask>& fam) {
  std::vector<Mask> covers;
  for (Mask c = 0; c < (Mask{1} << n); ++c)
    if (hits_all(c, fam)) covers.push_back(c);
  return keep_minimal(covers);
}

/// 2-good: avoids element 1, meets every member except ∅ and {1}.
inline bool two_good(const std::vector<Mask>& fam, Mask s) {
  if (s & 1U) return false;
  for (Mask a : fam)
    if (a != 0 && a != 1 && (a & s) == 0) return false;
  return true;
}

inline std::vector<Mask> minimal_two_good(int n, const std::vector<Mask>& fam) {
  std::vector<Mask> good;
  for (Mask s = 0; s < (Mask{1} << n); ++s)
    if (two_good(fam, s)) good.push_back(s);
  return keep_minimal(good);
}

/// Repeat pairwise unions until nothing new appears.
inline std::vector<Mask> closure(std::vector<Mask> fam) {
  std::set<Mask> cur(fam.begin(), fam.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> v(cur.begin(), cur.end());
    for (Mask a : v)
      for (Mask b : v)
        if (cur.insert(a | b).second) grew = true;
  }
  return {cur.begin(), cur.end()};
}

inline bool union_closed(const std::vector<Mask>& fam) {
  std::set<Mask> s(fam.begin(), fam.end());
  for (Mask a : fam)
    for (Mask b : fam)
      if (!s.count(a | b)) return false;
  return true;
}

inline std::size_t count_containing(const std::vector<Mask>& fam, int e) {
  std::size_t c = 0;
  for (Mask a : fam) c += (a >> (e - 1)) & 1U;
  return c;
}

/// Second largest element frequency over {1..n}, as a fraction of |fam|.
inline mpq_class f2(int n, const std::vector<Mask>& fam) {
  std::vector<std::size_t> c;
  for (int e = 1; e <= n; ++e) c.push_back(count_containing(fam, e));
  std::sort(c.rbegin(), c.rend());
  mpq_class r(static_cast<long>(c.at(1)), static_cast<long>(fam.size()));
  r.canonicalize();
  return r;
}

/// Decodes a subfamily index over the universe of all masks < 2^n.
inline std::vector<Mask> decode(std::uint64_t code, int n) {
  std::vector<Mask> fam;
  for (Mask a = 0; a < (Mask{1} << n); ++a)
    if ((code >> a) & 1U) fam.push_back(a);
  return fam;
}

struct FamilyCounts {
  std::size_t union_closed = 0;       // nonempty
  std::size_t covering_ground = 0;    // nonempty, union of members = {1..n}
  std::optional<mpq_class> min_f2;    // over covering_ground, n >= 2
  std::size_t antichains = 0;         // nonempty antichains of nonempty sets
};

/// Filters all 2^(2^n) subfamilies; n <= 4.
inline FamilyCounts count_families(int n) {
  FamilyCounts out;
  const Mask full = (Mask{1} << n) - 1;
  const std::uint64_t total = std::uint64_t{1} << (1U << n);
  for (std::uint64_t code = 1; code < total; ++code) {
    const auto fam = decode(code, n);
    bool anti = (code & 1U) == 0;
    for (Mask a : fam)
      for (Mask b : fam)
        if (a != b && (a & ~b) == 0) anti = false;
    if (anti) ++out.antichains;
    if (!union_closed(fam)) continue;
    ++out.union_closed;
    Mask sup = 0;
    for (Mask a : fam) sup |= a;
    if (sup != full) continue;
    ++out.covering_ground;
    if (n >= 2) {
      const mpq_class v = f2(n, fam);
      if (!out.min_f2 || v < *out.min_f2) out.min_f2 = v;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Linear programs with x >= 0, by vertex and extreme-ray enumeration.

enum class Rel { kLe, kGe, kEq };

struct Lp {
  std::vector<std::vector<mpq_class>> a;
  std::vector<Rel> rel;
  std::vector<mpq_class> b;
  std::vector<mpq_class> c;  // minimize
};

struct LpAnswer {
  enum Kind { kOptimal, kInfeasible, kUnbounded } kind = kInfeasible;
  mpq_class value;
};

/// Solves M x = r; nullopt unless the system has a unique solution.
inline std::optional<std::vector<mpq_class>> solve_square(std::vector<std::vector<mpq_class>> m,
                                                         std::vector<mpq_class> r) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(r[piv], r[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      const mpq_class f = m[i][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
      r[i] -= f * r[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) r[i] /= m[i][i];
  return r;
}

inline bool satisfies(const Lp& lp, const std::vector<mpq_class>& x, bool homogeneous) {
  for (const auto& v : x)
    if (v < 0) return false;
  for (std::size_t i = 0; i < lp.a.size(); ++i) {
    mpq_class lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += lp.a[i][j] * x[j];
    const mpq_class rhs = homogeneous ? mpq_class(0) : lp.b[i];
    if ((lp.rel[i] == Rel::kLe && lhs > rhs) || (lp.rel[i] == Rel::kGe && lhs < rhs) ||
        (lp.rel[i] == Rel::kEq && lhs != rhs))
      return false;
  }
  return true;
}

/// Calls fn on every k-subset of {0..n-1}.
template <class Fn>
void choose(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// The feasible set lies in the nonnegative orthant, so it is pointed: it is
/// empty iff it has no vertex, and unbounded below iff some extreme ray of the
/// recession cone (a vertex of the cone cut by Σ r = 1) has c·r < 0.
inline LpAnswer solve_lp(const Lp& lp) {
  const std::size_t n = lp.c.size();
  // Hyperplanes: each row, then each x_j = 0.
  std::vector<std::vector<mpq_class>> planes = lp.a;
  std::vector<mpq_class> rhs = lp.b;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<mpq_class> e(n, 0);
    e[j] = 1;
    planes.push_back(e);
    rhs.emplace_back(0);
  }
  LpAnswer ans;
  bool found = false;
  choose(planes.size(), n, [&](const std::vector<std::size_t>& pick) {
    std::vector<std::vector<mpq_class>> m;
    std::vector<mpq_class> r;
    for (std::size_t i : pick) {
      m.push_back(planes[i]);
      r.push_back(rhs[i]);
    }
    const auto x = solve_square(m, r);
    if (!x || !satisfies(lp, *x, false)) return;
    mpq_class v = 0;
    for (std::size_t j = 0; j < n; ++j) v += lp.c[j] * (*x)[j];
    if (!found || v < ans.value) ans.value = v;
    found = true;
  });
  if (!found) return {LpAnswer::kInfeasible, 0};
  bool unbounded = false;
  const std::vector<mpq_class> ones(n, 1);
  choose(planes.size(), n - 1, [&](const std::vector<std::size_t>& pick) {
    std::vector<std::vector<mpq_class>> m{ones};
    std::vector<mpq_class> r{1};
    for (std::size_t i : pick) {
      m.push_back(planes[i]);
      r.emplace_back(0);
    }
    const auto d = solve_square(m, r);
    if (!d || !satisfies(lp, *d, true)) return;
    mpq_class v = 0;
    for (std::size_t j = 0; j < n; ++j) v += lp.c[j] * (*d)[j];
    if (v < 0) unbounded = true;
  });
  if (unbounded) return {LpAnswer::kUnbounded, 0};
  ans.kind = LpAnswer::kOptimal;
  return ans;
}

}  // namespace oracle
