// Copyright 2026 The rrseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rrseq/theorem_lab.hpp"

#include <algorithm>
#include <stdexcept>

namespace rrseq {

namespace {

Frac frac_pow(const Frac& x, unsigned long e) {
  // x is canonical, so numerator and denominator powers stay coprime.
  Frac r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(x.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(x.get_mpq_t()), e);
  return r;
}

Int clear_den(const Frac& a, const Frac& b, const Frac& c) {
  return lcm(lcm(a.get_den(), b.get_den()), c.get_den());
}

// Number of roots of f in the open interval (-1, 0); powers of (x+1)
// dividing f are removed first so the Sturm endpoints are clean.
long roots_in_minus1_0(const Poly& f) {
  Poly g = f;
  const Poly xp1{std::vector<Int>{1, 1}};
  while (!g.is_zero() && sign_at(g, Frac(-1)) == 0) g = divide_exact(g, xp1);
  if (g.degree() < 1) return 0;
  if (sign_at(g, Frac(0)) == 0) {
    // shift the right endpoint off the root at zero: count in (-1, 0] minus
    // the root at zero itself cannot be expressed, so divide out x instead
    std::vector<Int> c(g.coeffs());
    std::size_t k = 0;
    while (k < c.size() && sgn(c[k]) == 0) ++k;
    c.erase(c.begin(), c.begin() + static_cast<long>(k));
    g = Poly(std::move(c));
    if (g.degree() < 1) return 0;
  }
  return sturm_count(g, Frac(-1), Frac(0));
}

}  // namespace

Poly build_qn(const Frac& a, const Frac& b, const Frac& c, long n) {
  if (n < 2) throw std::invalid_argument("build_qn requires n >= 2");
  const Int l = clear_den(a, b, c);
  auto scaled = [&](const Frac& v) {
    Frac s = v * Frac(l);
    return Int(s.get_num());
  };
  const Frac fn(n);
  std::vector<Int> q(static_cast<std::size_t>(n) + 4);
  q[0] = scaled(c);
  q[1] = scaled(a + b - c * 2);
  q[2] = scaled(a - b + c);
  q[static_cast<std::size_t>(n) + 1] =
      scaled(-(a * (fn + 1) * (fn + 1) + b * (fn + 1) + c));
  q[static_cast<std::size_t>(n) + 2] =
      scaled(a * (fn * fn * 2 + fn * 2 - 1) + b * (fn * 2 + 1) + c * 2);
  q[static_cast<std::size_t>(n) + 3] = scaled(-(a * fn * fn + b * fn + c));
  return Poly(std::move(q));
}

QuadClassification classify_quadratic(const Frac& a, const Frac& b,
                                      const Frac& c, long odd_check_bound) {
  QuadClassification out;
  auto note = [&](const char* cond, bool val) {
    out.details.emplace_back(cond, val);
    return val;
  };

  if (!note("a >= 0 and b >= 0 and c >= 0",
            sgn(a) >= 0 && sgn(b) >= 0 && sgn(c) >= 0)) {
    out.verdict = QuadVerdict::invalid;
    return out;
  }
  if (!note("(a, b, c) != (0, 0, 0)",
            sgn(a) != 0 || sgn(b) != 0 || sgn(c) != 0)) {
    out.verdict = QuadVerdict::invalid;
    return out;
  }
  if (!note("c > 0", sgn(c) > 0)) {
    out.verdict = QuadVerdict::not_minimal;
    return out;
  }

  const Frac bma = b - a;
  if (c < bma) {
    // b > a holds automatically here since c > 0.
    if (note("b/2 <= c < b - a", c * 2 >= b)) {
      out.verdict = QuadVerdict::case_i;
      return out;
    }
    out.verdict = QuadVerdict::not_minimal;
    return out;
  }
  if (c == bma) {
    if (note("c = b - a and b >= 2a", b >= a * 2)) {
      out.verdict = QuadVerdict::case_ii;
      return out;
    }
    out.verdict = QuadVerdict::not_minimal;
    return out;
  }

  note("c > b - a", true);
  if (note("c >= (a + b)/2", c * 2 >= a + b)) {
    out.verdict = QuadVerdict::case_iii_i;
    return out;
  }
  if (note("b/2 <= c <= (3b - a)/4", c * 2 >= b && c * 4 <= b * 3 - a)) {
    out.verdict = QuadVerdict::case_iii_ii;
    return out;
  }
  const bool window =
      note("(3b - a)/4 < c < (a + b)/2", c * 4 > b * 3 - a && c * 2 < a + b);
  const bool discr = note("8ac >= (a + b)^2", a * c * 8 >= (a + b) * (a + b));
  if (window && discr) {
    bool roots_ok = true;
    // n = 1 always holds: the first section's root -c/(a+b+c) is in (-1, 0).
    for (long n = 3; n <= odd_check_bound; n += 2) {
      if (roots_in_minus1_0(build_qn(a, b, c, n)) != 1) {
        roots_ok = false;
        break;
      }
    }
    if (note("q_n has one root in (-1, 0) for odd n within bound", roots_ok)) {
      out.verdict = QuadVerdict::case_iii_iii_candidate;
      return out;
    }
  }
  out.verdict = QuadVerdict::not_minimal;
  return out;
}

std::optional<RatioFit> detect_rational_ratio(const std::vector<Int>& terms) {
  if (terms.size() < 4)
    throw std::invalid_argument("need at least 4 terms");
  for (const Int& t : terms)
    if (sgn(t) == 0) throw std::invalid_argument("terms must be nonzero");

  // Unknown x = (a, b, c, d) with (a n + b) a_n - (c n + d) a_{n+1} = 0 for
  // n = 0, 1, 2.  Solve the 3x4 system exactly and test the fit globally.
  Frac m[3][4];
  for (int n = 0; n < 3; ++n) {
    const Frac an(terms[static_cast<std::size_t>(n)]);
    const Frac an1(terms[static_cast<std::size_t>(n) + 1]);
    m[n][0] = an * n;
    m[n][1] = an;
    m[n][2] = -(an1 * n);
    m[n][3] = -an1;
  }

  // Gauss-Jordan with column pivot bookkeeping.
  int pivot_col[3] = {-1, -1, -1};
  int row = 0;
  for (int col = 0; col < 4 && row < 3; ++col) {
    int pr = -1;
    for (int r = row; r < 3; ++r)
      if (sgn(m[r][col]) != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int cc = 0; cc < 4; ++cc) std::swap(m[pr][cc], m[row][cc]);
    const Frac inv = m[row][col];
    for (int cc = 0; cc < 4; ++cc) m[row][cc] /= inv;
    for (int r = 0; r < 3; ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const Frac f = m[r][col];
      for (int cc = 0; cc < 4; ++cc) m[r][cc] -= f * m[row][cc];
    }
    pivot_col[row] = col;
    ++row;
  }
  const int rank = row;

  Frac sol[4];
  if (rank == 3) {
    // One free column: set it to 1, read pivots off the reduced rows.
    bool is_pivot[4] = {false, false, false, false};
    for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
    int free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    sol[free_col] = 1;
    for (int r = 0; r < rank; ++r) sol[pivot_col[r]] = -m[r][free_col];
  } else {
    // Underdetermined: the constant-ratio fit covers the geometric case.
    sol[0] = 0;
    sol[1] = Frac(terms[1]);
    sol[2] = 0;
    sol[3] = Frac(terms[0]);
  }

  // Clear denominators, remove the content, normalize sign on (c, d).
  Int l = 1;
  for (const Frac& s : sol) l = lcm(l, s.get_den());
  Int v[4];
  for (int i = 0; i < 4; ++i) {
    Frac s = sol[i] * Frac(l);
    v[i] = s.get_num();
  }
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (sgn(g) == 0) return std::nullopt;
  for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  const int lead = sgn(v[2]) != 0 ? sgn(v[2]) : sgn(v[3]);
  if (lead == 0) return std::nullopt;  // c = d = 0 cannot produce a fit
  if (lead < 0)
    for (Int& x : v) x = -x;

  for (std::size_t n = 0; n + 1 < terms.size(); ++n) {
    const Int nn(static_cast<unsigned long>(n));
    if ((v[2] * nn + v[3]) * terms[n + 1] != (v[0] * nn + v[1]) * terms[n])
      return std::nullopt;
  }

  RatioFit fit{v[0], v[1], v[2], v[3], terms.size() - 2, false};
  fit.side_conditions_hold = sgn(fit.a) >= 0 && sgn(fit.b) >= 0 &&
                             sgn(fit.c) >= 0 && sgn(fit.d) >= 0 &&
                             fit.c <= fit.d;
  return fit;
}

Poly Extension::cleared() const {
  Int l = 1;
  for (const Frac& f : q) l = lcm(l, f.get_den());
  std::vector<Int> c(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    Frac s = q[i] * Frac(l);
    c[i] = s.get_num();
  }
  return Poly(std::move(c));
}

namespace {

Extension make_extension(const Poly& p, const Frac& u) {
  Extension e;
  e.u = u;
  e.q.reserve(p.size() + 1);
  for (const Int& c : p.coeffs()) e.q.emplace_back(c);
  e.q.push_back(u);
  return e;
}

}  // namespace

Extension extend_distinct_roots(const Poly& p) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("degree must be at least 1");
  RootCount rc = num_real_roots(p);
  if (rc.total != n || rc.distinct != n)
    throw std::invalid_argument("polynomial must have n distinct real roots");

  // p is square-free here (n distinct roots at degree n), so the regions can
  // be narrowed against p directly until consecutive ones have strict gaps.
  std::vector<IsolRegion> regs;
  regs.reserve(rc.regions.size());
  for (const auto& [r, mult] : rc.regions) regs.push_back(r);
  auto narrow = [&](IsolRegion& r) {
    if (r.kind == IsolRegion::Kind::point) return;
    Frac mid = r.lo + r.hi;
    mid /= 2;
    const int sm = sign_at(p, mid);
    if (sm == 0) {
      r = {IsolRegion::Kind::point, mid, mid};
      return;
    }
    if (sign_at(p, r.lo) != sm)
      r.hi = mid;
    else
      r.lo = mid;
  };
  for (;;) {
    bool clean = true;
    for (std::size_t i = 0; i + 1 < regs.size(); ++i) {
      if (regs[i].hi < regs[i + 1].lo) continue;
      clean = false;
      narrow(regs[i]);
      narrow(regs[i + 1]);
    }
    if (clean) break;
  }

  // Sample points: below all roots, inside each root gap, above all roots.
  const Int B = root_bound(p) + 1;
  std::vector<Frac> samples;
  samples.emplace_back(-B);
  for (std::size_t i = 0; i + 1 < regs.size(); ++i) {
    Frac s = regs[i].hi + regs[i + 1].lo;
    s /= 2;
    if (sgn(s) == 0) {
      // keep the sample inside the gap but away from zero
      s = sgn(regs[i].hi) != 0 ? regs[i].hi : regs[i + 1].lo;
      s /= 2;
    }
    samples.push_back(std::move(s));
  }
  samples.emplace_back(B);

  // |u| below min |p(s)| / |s|^(n+1) keeps the sign of every sample.
  Frac bound;
  bool first = true;
  for (const Frac& s : samples) {
    Frac ps = eval(p, s);
    Frac cand = abs(ps) / frac_pow(abs(s), static_cast<unsigned long>(n) + 1);
    if (first || cand < bound) {
      bound = cand;
      first = false;
    }
  }
  Frac u = bound / 2;

  Extension ext = make_extension(p, u);
  const RootCount check = num_real_roots(ext.cleared());
  if (check.total != n + 1 || check.distinct != n + 1)
    throw std::runtime_error("extension verification failed");
  return ext;
}

Extension extend_minimal(const Poly& p, int max_exponent) {
  const int n = p.degree();
  if (n < 0) throw std::invalid_argument("polynomial must be nonzero");
  if (sgn(p.coeff(0)) <= 0)
    throw std::invalid_argument("constant term must be positive");
  if (num_real_roots(p).total != n % 2)
    throw std::invalid_argument(
        "polynomial must have exactly (degree mod 2) real roots");

  const long want = (n + 1) % 2;
  for (int t = 0; t <= max_exponent; ++t) {
    for (int dir = 0; dir < (t == 0 ? 1 : 2); ++dir) {
      const long e = dir == 0 ? t : -t;
      // u = 2^e; cleared form is 2^max(0,-e) p + 2^max(0,e) x^(n+1).
      std::vector<Int> c(p.coeffs());
      c.resize(static_cast<std::size_t>(n) + 2);
      if (e >= 0) {
        mpz_ui_pow_ui(c.back().get_mpz_t(), 2, static_cast<unsigned long>(e));
      } else {
        for (std::size_t i = 0; i + 1 < c.size(); ++i)
          mpz_mul_2exp(c[i].get_mpz_t(), c[i].get_mpz_t(),
                       static_cast<unsigned long>(-e));
        c.back() = 1;
      }
      if (num_real_roots(Poly(std::move(c))).total == want) {
        Frac u(1);
        if (e >= 0)
          mpz_mul_2exp(mpq_numref(u.get_mpq_t()), mpq_numref(u.get_mpq_t()),
                       static_cast<unsigned long>(e));
        else
          mpz_mul_2exp(mpq_denref(u.get_mpq_t()), mpq_denref(u.get_mpq_t()),
                       static_cast<unsigned long>(-e));
        return make_extension(p, u);
      }
    }
  }
  throw SearchExhausted("no extension parameter found within budget");
}

PropScanReport proposition_scan(long n_lo, long n_hi,
                                const std::vector<Frac>& u_samples) {
  if (n_lo < 3 || n_hi < n_lo)
    throw std::invalid_argument("need 3 <= n_lo <= n_hi");
  for (const Frac& u : u_samples)
    if (sgn(u) == 0) throw std::invalid_argument("u samples must be nonzero");

  auto binomial_pow = [](long n) {  // (x-1)^n
    std::vector<Int> c(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
      mpz_bin_uiui(c[static_cast<std::size_t>(i)].get_mpz_t(),
                   static_cast<unsigned long>(n), static_cast<unsigned long>(i));
      if ((n - i) % 2 == 1) c[static_cast<std::size_t>(i)] = -c[static_cast<std::size_t>(i)];
    }
    return Poly(std::move(c));
  };
  auto extended = [&](long n, const Frac& u) {
    // den(u) (x-1)^n + num(u) x^(n+1)
    Poly base = binomial_pow(n) * u.get_den();
    return base + Poly::monomial(u.get_num(), static_cast<std::size_t>(n) + 1);
  };

  PropScanReport rep;
  rep.all_within_bound = true;
  for (long n = n_lo; n <= n_hi; ++n) {
    for (const Frac& u : u_samples) {
      const long total = num_real_roots(extended(n, u)).total;
      const bool within = total <= n;
      rep.entries.push_back({n, u, total, within});
      if (!within) rep.all_within_bound = false;
    }
  }

  {
    // n = 2 is the genuine exception: u = -1/12 lies in (-1/6, 0) and gives
    // three real roots.
    const Frac u = make_frac(-1, 12);
    rep.n2_exception_holds = num_real_roots(extended(2, u)).total == 3;
  }

  rep.double_root_counts_hold = true;
  for (long n = n_lo; n <= n_hi; ++n) {
    Int num, den;
    mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(n));
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(n) + 1,
                  static_cast<unsigned long>(n) + 1);
    const Frac ustar = make_frac(-num, den);
    const long total = num_real_roots(extended(n, ustar)).total;
    const long expect = n % 2 == 1 ? 2 : 3;
    if (total != expect) rep.double_root_counts_hold = false;
  }
  return rep;
}

HyperExpReport hyperexp_criteria(const std::vector<Int>& terms, long n_check) {
  if (n_check < 1) throw std::invalid_argument("n_check must be positive");
  if (terms.size() < 2 * static_cast<std::size_t>(n_check) + 2)
    throw std::invalid_argument("not enough terms for requested n_check");
  for (const Int& t : terms)
    if (sgn(t) <= 0) throw std::invalid_argument("terms must be positive");

  // Explicit return types force evaluation; a deduced gmp expression template
  // would dangle past the temporaries it references.
  auto a = [&](long i) -> Frac { return Frac(terms[static_cast<std::size_t>(i)]); };
  auto u_of = [&](long n) -> Frac { return a(2 * n - 1) / a(2 * n); };
  auto v_of = [&](long n) -> Frac {
    return a(2 * n) * Frac(2 * n) / (a(2 * n + 1) * Frac(2 * n + 1));
  };

  HyperExpReport rep;
  rep.checked_n = n_check;
  rep.ratios_decreasing = true;
  for (long n = 1; n + 1 <= n_check; ++n)
    if (!(u_of(n + 1) < u_of(n)) || !(v_of(n + 1) < v_of(n))) {
      rep.ratios_decreasing = false;
      break;
    }

  rep.ineq_ii_holds = true;
  rep.ineq_iii_holds = true;
  for (long n = 1; n <= n_check; ++n) {
    const Frac un = u_of(n);
    const Frac vn = v_of(n);
    Frac sum_ii = 0, sum_iii = 0;
    for (long i = 1; i <= n; ++i) {
      sum_ii += a(2 * i - 1) * frac_pow(un, static_cast<unsigned long>(2 * i - 1));
      sum_iii += a(2 * i) * Frac(2 * i) *
                 frac_pow(vn, static_cast<unsigned long>(2 * i - 1));
    }
    if (!(sum_ii < a(0))) rep.ineq_ii_holds = false;
    if (!(sum_iii < a(1))) rep.ineq_iii_holds = false;
  }
  return rep;
}

}  // namespace rrseq
