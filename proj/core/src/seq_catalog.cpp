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

#include "rrseq/seq_catalog.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace rrseq {

namespace {

// Smallest-prime-factor sieve covering 1..limit.
std::vector<std::size_t> spf_sieve(std::size_t limit) {
  std::vector<std::size_t> spf(limit + 1, 0);
  for (std::size_t i = 2; i <= limit; ++i) {
    if (spf[i] != 0) continue;
    for (std::size_t j = i; j <= limit; j += i)
      if (spf[j] == 0) spf[j] = i;
  }
  return spf;
}

// First m primes via a sieve sized with the usual p_m upper bound.
std::vector<Int> first_primes(std::size_t m) {
  std::size_t limit = 15;
  if (m >= 6) {
    const double dm = static_cast<double>(m);
    limit = static_cast<std::size_t>(dm * (std::log(dm) + std::log(std::log(dm)))) + 16;
  }
  for (;;) {
    std::vector<bool> comp(limit + 1, false);
    std::vector<Int> out;
    for (std::size_t i = 2; i <= limit && out.size() < m; ++i) {
      if (comp[i]) continue;
      out.push_back(Int(static_cast<unsigned long>(i)));
      for (std::size_t j = i * i; j <= limit; j += i) comp[j] = true;
    }
    if (out.size() >= m) return out;
    limit *= 2;  // bound was too small (tiny m); retry
  }
}

Int int_pow(unsigned long base, unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

unsigned long checked_pow_ul(std::size_t base, long e) {
  unsigned long acc = 1;
  for (long i = 0; i < e; ++i) {
    if (base != 0 && acc > (~0ul) / base)
      throw std::invalid_argument("exponent n^k does not fit a machine word");
    acc *= static_cast<unsigned long>(base);
  }
  return acc;
}

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::vector<Int> gen_multiplicative(const SeqSpec& spec, std::size_t n_max) {
  // phi, mu, sigma_j, pi and primes all come off one factor sieve.
  const std::size_t limit = n_max + 2;
  const std::vector<std::size_t> spf = spf_sieve(limit);
  std::vector<Int> out(n_max + 1);
  if (spec.family == SeqFamily::prime_pi) {
    std::size_t count = 0;
    std::vector<std::size_t> pi(limit + 1, 0);
    for (std::size_t v = 2; v <= limit; ++v) {
      if (spf[v] == v) ++count;
      pi[v] = count;
    }
    for (std::size_t n = 0; n <= n_max; ++n)
      out[n] = Int(static_cast<unsigned long>(pi[n + 2]));
    return out;
  }
  for (std::size_t n = 0; n <= n_max; ++n) {
    std::size_t v = n + 1;
    if (spec.family == SeqFamily::euler_phi) {
      Int phi = 1;
      while (v > 1) {
        const std::size_t p = spf[v];
        unsigned long pe = 1;
        while (v % p == 0) {
          v /= p;
          pe *= p;
        }
        phi *= Int(static_cast<unsigned long>(pe - pe / p));
      }
      out[n] = phi;
    } else if (spec.family == SeqFamily::moebius) {
      int mu = 1;
      while (v > 1) {
        const std::size_t p = spf[v];
        v /= p;
        if (v % p == 0) {
          mu = 0;
          break;
        }
        mu = -mu;
      }
      out[n] = mu;
    } else {  // sigma_j
      Int s = 1;
      while (v > 1) {
        const std::size_t p = spf[v];
        unsigned e = 0;
        while (v % p == 0) {
          v /= p;
          ++e;
        }
        // 1 + p^j + ... + p^(ej)
        Int pj = int_pow(p, static_cast<unsigned long>(spec.j));
        Int term = 1, acc = 1;
        for (unsigned t = 0; t < e; ++t) {
          term *= pj;
          acc += term;
        }
        s *= acc;
      }
      out[n] = s;
    }
  }
  return out;
}

}  // namespace

SeqSpec SeqSpec::simple(SeqFamily f) {
  SeqSpec s;
  s.family = f;
  return s;
}

SeqSpec SeqSpec::with_k(SeqFamily f, long k) {
  SeqSpec s;
  s.family = f;
  s.k = k;
  return s;
}

SeqSpec SeqSpec::with_c(const Int& c) {
  SeqSpec s;
  s.family = SeqFamily::exponential;
  s.c = c;
  return s;
}

SeqSpec SeqSpec::with_j(long j) {
  SeqSpec s;
  s.family = SeqFamily::sigma;
  s.j = j;
  return s;
}

SeqSpec SeqSpec::make_quadratic(const Frac& a, const Frac& b, const Frac& c) {
  SeqSpec s;
  s.family = SeqFamily::quadratic;
  s.qa = a;
  s.qb = b;
  s.qc = c;
  return s;
}

std::string SeqSpec::name() const {
  switch (family) {
    case SeqFamily::primes: return "primes";
    case SeqFamily::fibonacci: return "fibonacci";
    case SeqFamily::k_fibonacci: return "k_fibonacci(k=" + std::to_string(k) + ")";
    case SeqFamily::exponential: return "exponential(c=" + c.get_str() + ")";
    case SeqFamily::binomial: return "binomial(k=" + std::to_string(k) + ")";
    case SeqFamily::n_plus_1: return "n_plus_1";
    case SeqFamily::n_plus_1_sq: return "n_plus_1_sq";
    case SeqFamily::power: return "power(k=" + std::to_string(k) + ")";
    case SeqFamily::catalan: return "catalan";
    case SeqFamily::central_binomial: return "central_binomial";
    case SeqFamily::central_binomial_odd: return "central_binomial_odd";
    case SeqFamily::factorial: return "factorial";
    case SeqFamily::double_factorial_odd: return "double_factorial_odd";
    case SeqFamily::double_factorial_even: return "double_factorial_even";
    case SeqFamily::self_power: return "self_power";
    case SeqFamily::two_pow: return "two_pow(k=" + std::to_string(k) + ")";
    case SeqFamily::euler_phi: return "euler_phi";
    case SeqFamily::prime_pi: return "prime_pi";
    case SeqFamily::moebius: return "moebius";
    case SeqFamily::sigma: return "sigma(j=" + std::to_string(j) + ")";
    case SeqFamily::quadratic:
      return "quadratic(a=" + frac_str(qa) + ",b=" + frac_str(qb) +
             ",c=" + frac_str(qc) + ")";
  }
  return "unknown";
}

std::vector<Int> generate(const SeqSpec& spec, std::size_t n_max) {
  std::vector<Int> out;
  out.reserve(n_max + 1);
  switch (spec.family) {
    case SeqFamily::primes:
      return first_primes(n_max + 1);
    case SeqFamily::fibonacci: {
      Int a = 1, b = 1;  // F(1), F(2)
      for (std::size_t n = 0; n <= n_max; ++n) {
        out.push_back(a);
        Int next = a + b;
        a = std::move(b);
        b = std::move(next);
      }
      return out;
    }
    case SeqFamily::k_fibonacci: {
      require(spec.k >= 2, "k_fibonacci requires k >= 2");
      // t_0 = ... = t_{k-2} = 0, t_{k-1} = 1, then k-term sums;
      // a_n = t_{n+k-1}, so the sequence starts 1, 1, 2, ...
      const std::size_t k = static_cast<std::size_t>(spec.k);
      std::vector<Int> t(n_max + k);
      t[k - 1] = 1;
      for (std::size_t i = k; i < n_max + k; ++i) {
        Int s = 0;
        for (std::size_t j = i - k; j < i; ++j) s += t[j];
        t[i] = std::move(s);
      }
      for (std::size_t n = 0; n <= n_max; ++n) out.push_back(t[n + k - 1]);
      return out;
    }
    case SeqFamily::exponential: {
      require(sgn(spec.c) != 0, "exponential requires c != 0");
      Int v = 1;
      for (std::size_t n = 0; n <= n_max; ++n) {
        out.push_back(v);
        v *= spec.c;
      }
      return out;
    }
    case SeqFamily::binomial: {
      require(spec.k >= 1, "binomial requires k >= 1");
      Int v = 1;
      for (std::size_t n = 0; n <= n_max; ++n) {
        out.push_back(v);
        v *= Int(static_cast<unsigned long>(n + 1 + static_cast<std::size_t>(spec.k)));
        mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n + 1));
      }
      return out;
    }
    case SeqFamily::n_plus_1:
      for (std::size_t n = 0; n <= n_max; ++n)
        out.push_back(Int(static_cast<unsigned long>(n + 1)));
      return out;
    case SeqFamily::n_plus_1_sq:
      for (std::size_t n = 0; n <= n_max; ++n)
        out.push_back(int_pow(static_cast<unsigned long>(n + 1), 2));
      return out;
    case SeqFamily::power:
      require(spec.k >= 1, "power requires k >= 1");
      for (std::size_t n = 0; n <= n_max; ++n)
        out.push_back(int_pow(static_cast<unsigned long>(n + 1),
                              static_cast<unsigned long>(spec.k)));
      return out;
    case SeqFamily::catalan: {
      Int v = 1;  // C(0) = 1
      for (std::size_t n = 0; n <= n_max; ++n) {
        out.push_back(v);
        v *= Int(static_cast<unsigned long>(4 * n + 2));
        mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n + 2));
      }
      return out;
    }
    case SeqFamily::central_binomial: {
      Int v = 1;
      for (std::size_t n = 0; n <= n_max; ++n) {
        out.push_back(v);
        v *= Int(static_cast<unsigned long>(2 * (2 * n + 1)));
        mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n + 1));
      }
      return out;
    }
    case SeqFamily::central_binomial_odd: {
      // C(2n+1, n) = C(2n, n) * (2n+1)/(n+1)
      Int v = 1;
      for (std::size_t n = 0; n <= n_max; ++n) {
        Int w = v * Int(static_cast<unsigned long>(2 * n + 1));
        mpz_divexact_ui(w.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(n + 1));
        out.push_back(w);
        v *= Int(static_cast<unsigned long>(2 * (2 * n + 1)));
        mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n + 1));
      }
      return out;
    }
    case SeqFamily::factorial: {
      Int v = 1;
      for (std::size_t n = 0; n <= n_max; ++n) {
        out.push_back(v);
        v *= Int(static_cast<unsigned long>(n + 1));
      }
      return out;
    }
    case SeqFamily::double_factorial_odd: {
      Int v = 1;
      for (std::size_t n = 0; n <= n_max; ++n) {
        out.push_back(v);
        v *= Int(static_cast<unsigned long>(2 * n + 1));
      }
      return out;
    }
    case SeqFamily::double_factorial_even: {
      Int v = 1;
      for (std::size_t n = 0; n <= n_max; ++n) {
        out.push_back(v);
        v *= Int(static_cast<unsigned long>(2 * n + 2));
      }
      return out;
    }
    case SeqFamily::self_power:
      out.push_back(1);
      for (std::size_t n = 1; n <= n_max; ++n)
        out.push_back(int_pow(static_cast<unsigned long>(n),
                              static_cast<unsigned long>(n)));
      return out;
    case SeqFamily::two_pow: {
      require(spec.k >= 2, "two_pow requires k >= 2");
      for (std::size_t n = 0; n <= n_max; ++n)
        out.push_back(int_pow(2, checked_pow_ul(n, spec.k)));
      return out;
    }
    case SeqFamily::euler_phi:
    case SeqFamily::prime_pi:
    case SeqFamily::moebius:
      return gen_multiplicative(spec, n_max);
    case SeqFamily::sigma:
      require(spec.j >= 1, "sigma requires j >= 1");
      return gen_multiplicative(spec, n_max);
    case SeqFamily::quadratic: {
      require(sgn(spec.qc) != 0, "quadratic requires c != 0");
      Int l = lcm(lcm(spec.qa.get_den(), spec.qb.get_den()), spec.qc.get_den());
      for (std::size_t n = 0; n <= n_max; ++n) {
        const Frac nn(static_cast<unsigned long>(n));
        Frac v = spec.qa * nn * nn + spec.qb * nn + spec.qc;
        v *= Frac(l);
        out.push_back(v.get_num());
      }
      return out;
    }
  }
  throw std::invalid_argument("unknown sequence family");
}

Frac ratio_exact(const SeqSpec& spec, std::size_t n) {
  const std::vector<Int> t = generate(spec, n + 1);
  if (sgn(t[n]) == 0) throw std::invalid_argument("ratio with zero denominator term");
  return make_frac(t[n + 1], t[n]);
}

EulerianRow eulerian_row(unsigned n) {
  if (n < 1) throw std::invalid_argument("eulerian row needs n >= 1");
  EulerianRow row{n, {}};
  row.values.reserve(n);
  for (unsigned m = 0; m < n; ++m) {
    // A(n, m) = sum_{k=0}^{m+1} (-1)^k C(n+1, k) (m+1-k)^n
    Int a = 0;
    for (unsigned k = 0; k <= m + 1; ++k) {
      Int binom;
      mpz_bin_uiui(binom.get_mpz_t(), n + 1, k);
      Int term = binom * int_pow(m + 1 - k, n);
      if (k % 2 == 0)
        a += term;
      else
        a -= term;
    }
    row.values.push_back(std::move(a));
  }
  return row;
}

std::vector<FamilyInfo> family_catalog() {
  return {
      {"primes", "", "a_n = (n+1)-th prime"},
      {"fibonacci", "", "a_n = F(n+1)"},
      {"k_fibonacci", "k>=2", "k-step Fibonacci, a_0 = a_1 = 1"},
      {"exponential", "c!=0", "a_n = c^n"},
      {"binomial", "k>=1", "a_n = C(n+k, k)"},
      {"n_plus_1", "", "a_n = n+1"},
      {"n_plus_1_sq", "", "a_n = (n+1)^2"},
      {"power", "k>=1", "a_n = (n+1)^k"},
      {"catalan", "", "a_n = C(2n, n)/(n+1)"},
      {"central_binomial", "", "a_n = C(2n, n)"},
      {"central_binomial_odd", "", "a_n = C(2n+1, n)"},
      {"factorial", "", "a_n = n!"},
      {"double_factorial_odd", "", "a_n = 1*3*...*(2n-1)"},
      {"double_factorial_even", "", "a_n = 2*4*...*(2n)"},
      {"self_power", "", "a_n = n^n, a_0 = 1"},
      {"two_pow", "k>=2", "a_n = 2^(n^k)"},
      {"euler_phi", "", "a_n = phi(n+1)"},
      {"prime_pi", "", "a_n = pi(n+2)"},
      {"moebius", "", "a_n = mu(n+1)"},
      {"sigma", "j>=1", "a_n = sigma_j(n+1)"},
      {"quadratic", "a,b,c rational, c!=0", "a_n = a n^2 + b n + c, scaled integral"},
  };
}

std::optional<SeqFamily> family_from_name(const std::string& name) {
  static const std::pair<const char*, SeqFamily> table[] = {
      {"primes", SeqFamily::primes},
      {"fibonacci", SeqFamily::fibonacci},
      {"k_fibonacci", SeqFamily::k_fibonacci},
      {"exponential", SeqFamily::exponential},
      {"binomial", SeqFamily::binomial},
      {"n_plus_1", SeqFamily::n_plus_1},
      {"n_plus_1_sq", SeqFamily::n_plus_1_sq},
      {"power", SeqFamily::power},
      {"catalan", SeqFamily::catalan},
      {"central_binomial", SeqFamily::central_binomial},
      {"central_binomial_odd", SeqFamily::central_binomial_odd},
      {"factorial", SeqFamily::factorial},
      {"double_factorial_odd", SeqFamily::double_factorial_odd},
      {"double_factorial_even", SeqFamily::double_factorial_even},
      {"self_power", SeqFamily::self_power},
      {"two_pow", SeqFamily::two_pow},
      {"euler_phi", SeqFamily::euler_phi},
      {"prime_pi", SeqFamily::prime_pi},
      {"moebius", SeqFamily::moebius},
      {"sigma", SeqFamily::sigma},
      {"quadratic", SeqFamily::quadratic},
  };
  for (const auto& [n, f] : table)
    if (name == n) return f;
  return std::nullopt;
}

}  // namespace rrseq
