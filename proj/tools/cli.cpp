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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rrseq/parallel.hpp"
#include "rrseq/poly.hpp"
#include "rrseq/root_count.hpp"
#include "rrseq/seq_catalog.hpp"
#include "rrseq/theorem_lab.hpp"

namespace rrseq::cli {

namespace {

const char* bool_str(bool v) { return v ? "true" : "false"; }

Frac parse_frac(const std::string& text) {
  Frac r;
  if (text.empty() ||
      mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0 ||
      mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
    throw std::invalid_argument("cannot parse rational: '" + text + "'");
  r.canonicalize();
  return r;
}

Int parse_int(const std::string& text) {
  Int r;
  if (text.empty() || mpz_set_str(r.get_mpz_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("cannot parse integer: '" + text + "'");
  return r;
}

std::vector<Frac> parse_frac_list(const std::string& text) {
  std::vector<Frac> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(parse_frac(item));
  if (out.empty()) throw std::invalid_argument("empty rational list");
  return out;
}

// Inline text and file path are mutually exclusive; the caller's option
// group guarantees exactly one is set.
Poly load_poly(const std::string& text, const std::string& path) {
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return Poly::parse(buf.str());
  }
  return Poly::parse(text);
}

struct SeqFlags {
  std::string family;
  long k = 0;
  long j = 0;
  std::string a = "0";
  std::string b = "0";
  std::string c;
};

void add_seq_flags(CLI::App* sub, SeqFlags& f) {
  sub->add_option("--seq", f.family, "sequence family (run `catalog` to list)")
      ->required();
  sub->add_option("--k", f.k, "family parameter k");
  sub->add_option("--j", f.j, "family parameter j");
  sub->add_option("--a", f.a, "quadratic coefficient a (rational)");
  sub->add_option("--b", f.b, "quadratic coefficient b (rational)");
  sub->add_option("--c", f.c,
                  "exponential base (integer) or quadratic coefficient c "
                  "(rational)");
}

SeqSpec build_spec(const SeqFlags& f) {
  const SeqFamily fam = *family_from_name(f.family);
  switch (fam) {
    case SeqFamily::k_fibonacci:
    case SeqFamily::binomial:
    case SeqFamily::power:
    case SeqFamily::two_pow:
      return SeqSpec::with_k(fam, f.k);
    case SeqFamily::exponential:
      return SeqSpec::with_c(parse_int(f.c.empty() ? "0" : f.c));
    case SeqFamily::sigma:
      return SeqSpec::with_j(f.j);
    case SeqFamily::quadratic:
      return SeqSpec::make_quadratic(parse_frac(f.a), parse_frac(f.b),
                                     parse_frac(f.c.empty() ? "0" : f.c));
    default:
      return SeqSpec::simple(fam);
  }
}

void emit_catalog(std::ostream& os) {
  const auto families = family_catalog();
  std::size_t wn = 0, wp = 0;
  for (const auto& fam : families) {
    wn = std::max(wn, fam.name.size());
    wp = std::max(wp, fam.params.size());
  }
  for (const auto& fam : families) {
    os << std::left << std::setw(static_cast<int>(wn) + 2) << fam.name
       << std::setw(static_cast<int>(wp) + 2)
       << (fam.params.empty() ? "-" : fam.params) << fam.description << '\n';
  }
}

void emit_regions(const RootCount& rc, std::ostream& os) {
  for (const auto& [region, mult] : rc.regions)
    os << region.lo.get_str() << ' ' << region.hi.get_str() << ' ' << mult
       << '\n';
}

const char* verdict_name(QuadVerdict v) {
  switch (v) {
    case QuadVerdict::invalid: return "invalid";
    case QuadVerdict::not_minimal: return "not_minimal";
    case QuadVerdict::case_i: return "case_i";
    case QuadVerdict::case_ii: return "case_ii";
    case QuadVerdict::case_iii_i: return "case_iii_i";
    case QuadVerdict::case_iii_ii: return "case_iii_ii";
    case QuadVerdict::case_iii_iii_candidate: return "case_iii_iii_candidate";
  }
  return "invalid";
}

void print_extension(const Extension& ext, std::ostream& os) {
  const Poly q = ext.cleared();
  const RootCount rc = num_real_roots(q);
  os << "u: " << ext.u.get_str() << '\n';
  os << "extended: " << q.str() << '\n';
  os << "total: " << rc.total << '\n';
  os << "distinct: " << rc.distinct << '\n';
}

}  // namespace

void emit_bfile(const RRReport& report, std::ostream& os) {
  for (std::size_t n = 0; n < report.b.size(); ++n)
    os << n << ' ' << report.b[n] << '\n';
}

void emit_csv(const RRReport& report, std::ostream& os) {
  os << "n,a_n,b_n\n";
  for (std::size_t n = 0; n < report.b.size(); ++n)
    os << n << ',' << report.terms[n].get_str() << ',' << report.b[n] << '\n';
}

void emit_table(const RRReport& report, std::ostream& os) {
  const std::size_t rows = report.b.size();
  std::size_t wn = 1, wa = 3, wb = 3, wd = 5;  // header widths
  std::vector<std::string> an(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    an[i] = report.terms[i].get_str();
    wa = std::max(wa, an[i].size());
    wn = std::max(wn, std::to_string(i).size());
    wb = std::max(wb, std::to_string(report.b[i]).size());
    wd = std::max(wd, std::to_string(report.dual[i]).size());
  }
  if (!report.source.empty()) os << "sequence: " << report.source << '\n';
  os << std::right << std::setw(static_cast<int>(wn)) << "n" << "  "
     << std::setw(static_cast<int>(wa)) << "a_n" << "  "
     << std::setw(static_cast<int>(wb)) << "b_n" << "  "
     << std::setw(static_cast<int>(wd)) << "n-b_n" << '\n';
  for (std::size_t i = 0; i < rows; ++i) {
    os << std::setw(static_cast<int>(wn)) << i << "  "
       << std::setw(static_cast<int>(wa)) << an[i] << "  "
       << std::setw(static_cast<int>(wb)) << report.b[i] << "  "
       << std::setw(static_cast<int>(wd)) << report.dual[i] << '\n';
  }
  if (report.first_nonminimal)
    os << "first_nonminimal: " << *report.first_nonminimal << '\n';
  else
    os << "minimal: true\n";
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact real-root counts of power-series sections", "rrseq"};
  app.require_subcommand(1);

  // rr
  auto* rr_cmd = app.add_subcommand(
      "rr", "transform a catalog sequence: b_n = real roots of section n");
  SeqFlags rr_seq;
  add_seq_flags(rr_cmd, rr_seq);
  long rr_n_max = 0;
  rr_cmd->add_option("--n-max", rr_n_max, "last index to transform")
      ->required();
  std::string rr_format = "table";
  rr_cmd->add_option("--format", rr_format, "bfile, csv or table")
      ->check(CLI::IsMember({"bfile", "csv", "table"}));
  int rr_threads = 0;
  rr_cmd->add_option("--threads", rr_threads, "worker threads (0 = auto)");
  std::string rr_output;
  rr_cmd->add_option("--output", rr_output, "write to a file instead of stdout");

  // count / isolate / check-cr share polynomial input.
  std::string poly_text, poly_path;
  auto add_poly_input = [&](CLI::App* sub) {
    auto* group = sub->add_option_group("input");
    group->add_option("--poly", poly_text,
                      "ascending integer coefficients, e.g. \"1 0 -2\"");
    group->add_option("--poly-file", poly_path, "file with the same format");
    group->require_option(1);
  };
  auto* count_cmd =
      app.add_subcommand("count", "count real roots of one polynomial");
  add_poly_input(count_cmd);
  auto* isolate_cmd = app.add_subcommand(
      "isolate", "isolating regions for the real roots of one polynomial");
  add_poly_input(isolate_cmd);
  auto* checkcr_cmd = app.add_subcommand(
      "check-cr", "is every section of the polynomial completely real?");
  add_poly_input(checkcr_cmd);

  // cn
  auto* cn_cmd = app.add_subcommand(
      "cn", "least k making every section of sum (i+1)^k x^i fully real");
  long cn_n = 0;
  cn_cmd->add_option("--n", cn_n, "section degree")->required();
  long cn_cap = 2000;
  cn_cmd->add_option("--k-cap", cn_cap, "largest exponent to try");
  long cn_start = -1;
  cn_cmd->add_option("--k-start", cn_start, "first exponent to try");
  int cn_threads = 0;
  cn_cmd->add_option("--threads", cn_threads, "worker threads (0 = auto)");

  // table2
  auto* t2_cmd = app.add_subcommand(
      "table2", "least k making prod (i^k x + 1), i <= n, completely real");
  long t2_n = 0;
  t2_cmd->add_option("--n", t2_n, "number of factors")->required();
  long t2_cap = 2000;
  t2_cmd->add_option("--k-cap", t2_cap, "largest exponent to try");
  int t2_threads = 0;
  t2_cmd->add_option("--threads", t2_threads, "worker threads (0 = auto)");

  // eulerian-scan
  auto* eu_cmd = app.add_subcommand(
      "eulerian-scan", "complete-realness of Eulerian-row polynomials");
  long eu_lo = 1, eu_hi = 1;
  eu_cmd->add_option("--n-lo", eu_lo, "first row")->required();
  eu_cmd->add_option("--n-hi", eu_hi, "last row")->required();
  int eu_threads = 0;
  eu_cmd->add_option("--threads", eu_threads, "worker threads (0 = auto)");

  // classify-quadratic
  auto* cq_cmd = app.add_subcommand(
      "classify-quadratic",
      "minimality case of a_n = a n^2 + b n + c over nonnegative rationals");
  std::string cq_a, cq_b, cq_c;
  cq_cmd->add_option("--a", cq_a, "rational a")->required();
  cq_cmd->add_option("--b", cq_b, "rational b")->required();
  cq_cmd->add_option("--c", cq_c, "rational c")->required();
  long cq_bound = 99;
  cq_cmd->add_option("--odd-bound", cq_bound,
                     "largest odd n checked in the root condition");

  // detect-ratio
  auto* dr_cmd = app.add_subcommand(
      "detect-ratio",
      "fit (c n + d) a_{n+1} = (a n + b) a_n to a catalog sequence");
  SeqFlags dr_seq;
  add_seq_flags(dr_cmd, dr_seq);
  long dr_n_max = 12;
  dr_cmd->add_option("--n-max", dr_n_max, "terms used for the fit");

  // extend-distinct / extend-minimal
  auto* ed_cmd = app.add_subcommand(
      "extend-distinct",
      "append u x^(n+1) keeping all roots real and distinct");
  add_poly_input(ed_cmd);
  long ed_iters = 64;
  ed_cmd->add_option("--iters", ed_iters,
                     "search budget (unused; the construction is direct)");
  auto* em_cmd = app.add_subcommand(
      "extend-minimal",
      "append u x^(n+1) keeping the real-root count minimal");
  add_poly_input(em_cmd);
  long em_iters = 64;
  em_cmd->add_option("--iters", em_iters, "largest power-of-two exponent");

  // prop-scan
  auto* ps_cmd = app.add_subcommand(
      "prop-scan", "real-root totals of (x-1)^n + u x^(n+1) over a u grid");
  long ps_lo = 3, ps_hi = 3;
  ps_cmd->add_option("--n-lo", ps_lo, "first n")->required();
  ps_cmd->add_option("--n-hi", ps_hi, "last n")->required();
  std::string ps_u;
  ps_cmd->add_option("--u", ps_u, "comma-separated rationals, e.g. 1,-1/2")
      ->required();

  // hyperexp
  auto* hx_cmd = app.add_subcommand(
      "hyperexp", "ratio and partial-sum criteria for a positive sequence");
  SeqFlags hx_seq;
  add_seq_flags(hx_cmd, hx_seq);
  long hx_check = 10;
  hx_cmd->add_option("--n-check", hx_check, "criteria checked for n up to this");

  auto* cat_cmd = app.add_subcommand("catalog", "list the sequence families");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return 1;
  }

  auto resolve_family = [&](const SeqFlags& f) -> std::optional<SeqSpec> {
    if (family_from_name(f.family)) return build_spec(f);
    err << "unknown family: " << f.family << "\n\n";
    emit_catalog(err);
    return std::nullopt;
  };

  try {
    if (*rr_cmd) {
      const auto spec = resolve_family(rr_seq);
      if (!spec) return 1;
      const auto n_max = static_cast<std::size_t>(rr_n_max);
      RRReport report = rr_transform(generate(*spec, n_max), n_max,
                                     resolve_threads(rr_threads), spec->name());
      std::ofstream file;
      if (!rr_output.empty()) {
        file.open(rr_output);
        if (!file) throw std::invalid_argument("cannot open file: " + rr_output);
      }
      std::ostream& sink = rr_output.empty() ? out : file;
      if (rr_format == "bfile")
        emit_bfile(report, sink);
      else if (rr_format == "csv")
        emit_csv(report, sink);
      else
        emit_table(report, sink);
      sink.flush();
      if (!sink) throw std::runtime_error("write failed");
      return 0;
    }
    if (*count_cmd) {
      const RootCount rc = num_real_roots(load_poly(poly_text, poly_path));
      out << "total=" << rc.total << " distinct=" << rc.distinct << '\n';
      emit_regions(rc, out);
      return 0;
    }
    if (*isolate_cmd) {
      emit_regions(num_real_roots(load_poly(poly_text, poly_path)), out);
      return 0;
    }
    if (*checkcr_cmd) {
      const auto [cr, b] = is_completely_real(load_poly(poly_text, poly_path));
      out << "completely_real: " << bool_str(cr) << '\n';
      out << "b:";
      for (const long v : b) out << ' ' << v;
      out << '\n';
      return 0;
    }
    if (*cn_cmd) {
      std::optional<long> start;
      if (cn_start >= 0) start = cn_start;
      const auto k = find_c_n(cn_n, start, cn_cap, resolve_threads(cn_threads));
      if (!k) {
        err << "no k <= " << cn_cap << " works for n = " << cn_n << '\n';
        return 2;
      }
      out << "c_" << cn_n << " = " << *k << '\n';
      return 0;
    }
    if (*t2_cmd) {
      const auto k = table2_min_k(t2_n, t2_cap, resolve_threads(t2_threads));
      if (!k) {
        err << "no k <= " << t2_cap << " works for n = " << t2_n << '\n';
        return 2;
      }
      out << "k_" << t2_n << " = " << *k << '\n';
      return 0;
    }
    if (*eu_cmd) {
      const auto entries =
          eulerian_poly_cr_scan(eu_lo, eu_hi, resolve_threads(eu_threads));
      for (const auto& e : entries) {
        out << "n=" << e.n << " completely_real=" << bool_str(e.completely_real);
        if (!e.completely_real) {
          out << " b=";
          for (std::size_t i = 0; i < e.b.size(); ++i)
            out << (i ? "," : "") << e.b[i];
        }
        out << '\n';
      }
      return 0;
    }
    if (*cq_cmd) {
      const auto cls = classify_quadratic(parse_frac(cq_a), parse_frac(cq_b),
                                          parse_frac(cq_c), cq_bound);
      out << "verdict: " << verdict_name(cls.verdict) << '\n';
      for (const auto& [cond, val] : cls.details)
        out << "  " << cond << ": " << bool_str(val) << '\n';
      return 0;
    }
    if (*dr_cmd) {
      const auto spec = resolve_family(dr_seq);
      if (!spec) return 1;
      const auto fit = detect_rational_ratio(
          generate(*spec, static_cast<std::size_t>(dr_n_max)));
      if (!fit) {
        out << "fit: none\n";
        return 0;
      }
      out << "fit: a=" << fit->a.get_str() << " b=" << fit->b.get_str()
          << " c=" << fit->c.get_str() << " d=" << fit->d.get_str() << '\n';
      out << "side_conditions_hold: " << bool_str(fit->side_conditions_hold)
          << '\n';
      out << "verified_through: " << fit->verified_through << '\n';
      return 0;
    }
    if (*ed_cmd) {
      print_extension(extend_distinct_roots(load_poly(poly_text, poly_path)),
                      out);
      return 0;
    }
    if (*em_cmd) {
      print_extension(extend_minimal(load_poly(poly_text, poly_path),
                                     static_cast<int>(em_iters)),
                      out);
      return 0;
    }
    if (*ps_cmd) {
      const PropScanReport rep =
          proposition_scan(ps_lo, ps_hi, parse_frac_list(ps_u));
      for (const auto& e : rep.entries)
        out << "n=" << e.n << " u=" << e.u.get_str()
            << " real_roots=" << e.real_roots
            << " within_bound=" << bool_str(e.within_bound) << '\n';
      out << "all_within_bound: " << bool_str(rep.all_within_bound) << '\n';
      out << "n2_exception_holds: " << bool_str(rep.n2_exception_holds) << '\n';
      out << "double_root_counts_hold: "
          << bool_str(rep.double_root_counts_hold) << '\n';
      return 0;
    }
    if (*hx_cmd) {
      const auto spec = resolve_family(hx_seq);
      if (!spec) return 1;
      const auto terms =
          generate(*spec, 2 * static_cast<std::size_t>(hx_check) + 1);
      const HyperExpReport rep = hyperexp_criteria(terms, hx_check);
      out << "ratios_decreasing: " << bool_str(rep.ratios_decreasing) << '\n';
      out << "ineq_ii_holds: " << bool_str(rep.ineq_ii_holds) << '\n';
      out << "ineq_iii_holds: " << bool_str(rep.ineq_iii_holds) << '\n';
      out << "checked_n: " << rep.checked_n << '\n';
      return 0;
    }
    if (*cat_cmd) {
      emit_catalog(out);
      return 0;
    }
  } catch (const SearchExhausted& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace rrseq::cli
