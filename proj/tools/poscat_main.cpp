#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "poscat/deogram.hpp"
#include "poscat/hecke.hpp"
#include "poscat/homfly.hpp"
#include "poscat/positroid.hpp"
#include "poscat/qtcatalan.hpp"
#include "poscat/soergel.hpp"
#include "poscat/sweeps.hpp"

using nlohmann::json;
using namespace poscat;

namespace {

json poly_json(const Laurent& p) { return json::parse(p.to_json()); }

// input-string parsing failures are usage errors (exit 2); everything else
// downstream is a domain error (exit 1)
Perm parse_perm_arg(const std::string& s) {
  try {
    return Perm::parse(s);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError(e.what());
  }
}

BoundedAffinePerm parse_window_arg(const std::string& s) {
  try {
    return BoundedAffinePerm::parse(s);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError(e.what());
  }
}

BraidWord parse_braid_arg(int n, const std::string& s) {
  try {
    return BraidWord::parse(n, s);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError(e.what());
  }
}

int run_qtcat(int a, int b, bool as_json, bool table) {
  Laurent c = qt_catalan(a, b);
  if (as_json) {
    json out{{"a", a}, {"b", b}, {"qt_catalan", poly_json(c)}};
    if (table) {
      json rows = json::array();
      for (const DyckPath& p : enumerate_dyck(a, b))
        rows.push_back({{"path", p.to_string()}, {"area", area(p)}, {"dinv", dinv(p)}});
      out["paths"] = rows;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (table) {
    for (const DyckPath& p : enumerate_dyck(a, b))
      std::cout << p.to_string() << "  area=" << area(p) << "  dinv=" << dinv(p) << "\n";
  }
  std::cout << "C_{" << a << "," << b << "}(q,t) = " << c.to_string() << "\n";
  return 0;
}

int run_rpoly(const std::string& vs, const std::string& ws, bool as_json, bool use_trace) {
  Perm v = parse_perm_arg(vs), w = parse_perm_arg(ws);
  Laurent r = use_trace ? r_polynomial_trace(v, w) : r_polynomial_recursive(v, w);
  if (as_json) {
    std::cout << json{{"v", vs}, {"w", ws}, {"r_polynomial", poly_json(r)}}.dump(2) << "\n";
  } else {
    std::cout << r.to_string() << "\n";
  }
  return 0;
}

int run_homfly(const std::string& braid, int strands, const std::string& vs,
               const std::string& ws, bool pair, int k, int n, bool top, bool as_json) {
  Perm v, w;
  bool have_pair = false;
  if (pair) {
    if (k < 0 || n <= 0) throw CLI::ValidationError("--pair requires --k and --n");
    v = Perm::identity(n);
    w = max_grassmannian(k, n);
    have_pair = true;
  } else if (!vs.empty() || !ws.empty()) {
    if (vs.empty() || ws.empty())
      throw CLI::ValidationError("--v and --w must be given together");
    v = parse_perm_arg(vs);
    w = parse_perm_arg(ws);
    have_pair = true;
  }
  if (top) {
    if (!have_pair) throw CLI::ValidationError("--top needs a permutation pair");
    QFraction f = homfly_top(v, w);
    if (as_json)
      std::cout << json{{"v", v.to_string()},
                        {"w", w.to_string()},
                        {"numerator", poly_json(f.num)},
                        {"den_pow_qm1", f.den_pow_qm1}}
                       .dump(2)
                << "\n";
    else
      std::cout << f.to_string() << "\n";
    return 0;
  }
  BraidWord b = have_pair ? braid_from_pair(v, w) : parse_braid_arg(strands, braid);
  Laurent p = homfly(b);
  if (as_json)
    std::cout << json{{"braid", b.to_string()}, {"strands", b.n}, {"homfly", poly_json(p)}}
                     .dump(2)
              << "\n";
  else
    std::cout << p.to_string() << "\n";
  return 0;
}

int run_pointcount(const std::string& fs, bool quotient, bool catalan, bool as_json) {
  BoundedAffinePerm f = parse_window_arg(fs);
  json out{{"f", f.to_string()}, {"k", f.k()}, {"n", f.n()}};
  Laurent count = positroid_point_count(f);
  out["point_count"] = poly_json(count);
  if (!as_json && !quotient && !catalan)
    std::cout << count.to_string() << "\n";
  if (catalan) {
    BigInt c = f_catalan(f);
    out["f_catalan"] = c.str();
    if (!as_json) std::cout << c.str() << "\n";
  }
  if (quotient || catalan) {
    Laurent quot = quotient_point_count(f);
    out["quotient"] = poly_json(quot);
    if (!as_json && quotient) std::cout << quot.to_string() << "\n";
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return 0;
}

int run_deograms(const std::string& fs, bool maximal, bool render, bool as_json) {
  BoundedAffinePerm f = parse_window_arg(fs);
  auto [v, w] = f_to_pair(f);
  std::vector<Deogram> list;
  int min_elbows = -1;
  if (maximal) {
    MaximalDeograms md = maximal_deograms(f);
    list = std::move(md.list);
    min_elbows = md.min_elbows;
  } else {
    GridWord g = grid_word(f.k(), f.n(), shape_of_grassmannian(w, f.k()));
    list = enumerate_deograms(g, v);
  }
  auto choices_string = [](const Deogram& d) {
    std::string s;
    for (Box b : d.choices) s += b == Box::crossing ? 'X' : 'O';
    return s;
  };
  if (as_json) {
    json rows = json::array();
    for (const Deogram& d : list)
      rows.push_back({{"choices", choices_string(d)},
                      {"xing", d.xing()},
                      {"elb", d.elb()}});
    json out{{"f", f.to_string()},
             {"v", v.to_string()},
             {"w", w.to_string()},
             {"count", list.size()},
             {"deograms", rows}};
    if (maximal) out["min_elbows"] = min_elbows;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << (maximal ? "maximal " : "") << "deograms for f=" << f.to_string()
            << " (v=" << v.to_string() << ", w=" << w.to_string() << "): " << list.size()
            << "\n";
  if (min_elbows >= 0) std::cout << "min elbows: " << min_elbows << "\n";
  for (const Deogram& d : list) {
    if (render)
      std::cout << render_deogram(d);
    else
      std::cout << choices_string(d) << "  xing=" << d.xing() << " elb=" << d.elb() << "\n";
  }
  return 0;
}

int run_khr(const std::string& braid, int cutoff, bool nonequivariant, bool as_json) {
  BraidWord b = parse_braid_arg(2, braid);
  BimoduleComplex c = rouquier_complex(b);
  DimTable dims = nonequivariant ? hhhc_dims(c, cutoff) : hhh_dims(c, cutoff);
  Laurent normalized = nonequivariant ? pkrc_top(b, cutoff) : pkr_top(b, cutoff);
  if (as_json) {
    json rows = json::array();
    for (const auto& [kp, dim] : dims)
      rows.push_back({{"k", kp.first}, {"p", kp.second}, {"dim", dim}});
    std::cout << json{{"braid", b.to_string()},
                      {"cutoff", cutoff},
                      {"equivariant", !nonequivariant},
                      {"dims", rows},
                      {"polynomial", poly_json(normalized)}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << (nonequivariant ? "HHH_C^0" : "HHH^0") << " bigraded dimensions (k, p, dim) for 2p <= "
            << cutoff << ":\n";
  for (const auto& [kp, dim] : dims)
    std::cout << "  k=" << kp.first << "  p=" << kp.second << "  dim=" << dim << "\n";
  std::cout << (nonequivariant ? "PKR;C^top" : "PKR^top") << " = " << normalized.to_string()
            << "\n";
  return 0;
}

int run_predict_mhp(int k, int n, bool as_json) {
  Laurent p = predicted_mixed_hodge(k, n);
  if (as_json)
    std::cout << json{{"k", k}, {"n", n}, {"mixed_hodge", poly_json(p)}}.dump(2) << "\n";
  else
    std::cout << p.to_string() << "\n";
  return 0;
}

void print_report(const SweepReport& rep, bool as_json, json& acc) {
  if (as_json) {
    json fails = json::array();
    for (const SweepFailure& f : rep.failures)
      fails.push_back({{"case", f.key}, {"expected", f.expected}, {"got", f.got}});
    acc.push_back({{"suite", rep.name},
                   {"cases", rep.cases},
                   {"failures", fails},
                   {"seconds", rep.seconds}});
    return;
  }
  std::cout << rep.name << ": cases=" << rep.cases << " failures=" << rep.failures.size()
            << " time=" << rep.seconds << "s" << (rep.ok() ? "  [ok]" : "  [FAIL]") << "\n";
  for (const SweepFailure& f : rep.failures)
    std::cout << "  " << f.key << "\n    expected: " << f.expected << "\n    got:      " << f.got
              << "\n";
}

int run_verify(const std::string& suite, int max_n, int cases, uint64_t seed, bool serial,
               bool as_json) {
  bool par = !serial;
  std::vector<SweepReport> reports;
  auto want = [&](const std::string& s) { return suite == "all" || suite == s; };
  if (!want("hecke") && !want("homfly") && !want("deodhar") && !want("catalan") &&
      !want("positroid") && !want("khr"))
    throw CLI::ValidationError("unknown suite '" + suite + "'");
  if (want("hecke")) {
    reports.push_back(sweep_trace_vs_recursive(std::min(max_n, 5), par));
    reports.push_back(sweep_bruhat_oracle(std::min(max_n, 5), par));
  }
  if (want("homfly")) {
    reports.push_back(sweep_homfly_thm2(std::min(max_n, 5), par));
    reports.push_back(sweep_homfly_skein(cases, seed, par));
    reports.push_back(sweep_homfly_markov(cases, seed + 1, par));
    reports.push_back(sweep_laurent_axioms(1000, seed + 2, par));
  }
  if (want("deodhar")) {
    reports.push_back(sweep_deodhar(std::min(max_n, 7), par));
    reports.push_back(sweep_distinguished_agreement(std::min(max_n, 7), 10, par));
  }
  if (want("catalan")) {
    reports.push_back(sweep_catalan_symmetry(std::min(max_n + 7, 13), par));
    reports.push_back(sweep_maximal_counts(std::min(max_n + 4, 10), par));
  }
  if (want("positroid")) {
    reports.push_back(sweep_point_counts(std::min(max_n + 4, 10), std::min(max_n + 2, 8), par));
    reports.push_back(sweep_stratification(std::min(max_n, 6), par));
    reports.push_back(sweep_min_matrix(std::min(max_n, 6), par));
  }
  if (want("khr")) reports.push_back(sweep_khr_golden(24));
  bool ok = true;
  json acc = json::array();
  for (const SweepReport& rep : reports) {
    ok = ok && rep.ok();
    print_report(rep, as_json, acc);
  }
  if (as_json) std::cout << acc.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for positroid point counts, Richardson links and rational q,t-Catalan numbers"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON on stdout");

  auto* qtcat = app.add_subcommand("qtcat", "rational q,t-Catalan number");
  int qa = 0, qb = 0;
  bool qtable = false;
  qtcat->add_option("--a", qa, "height")->required();
  qtcat->add_option("--b", qb, "width")->required();
  qtcat->add_flag("--table", qtable, "list paths with area and dinv");

  auto* rpoly = app.add_subcommand("rpoly", "Kazhdan-Lusztig R-polynomial");
  std::string rv, rw;
  bool rtrace = false;
  rpoly->add_option("--v", rv, "one-line permutation")->required();
  rpoly->add_option("--w", rw, "one-line permutation")->required();
  rpoly->add_flag("--trace", rtrace, "use the Hecke trace formula");

  auto* hom = app.add_subcommand("homfly", "HOMFLY polynomial of a braid closure");
  std::string hbraid, hv, hw;
  int hstrands = 0, hk = -1, hn = 0;
  bool hpair = false, htop = false;
  hom->add_option("--braid", hbraid, "space-separated signed letters");
  hom->add_option("--strands", hstrands, "strand count for --braid");
  hom->add_option("--v", hv, "one-line permutation");
  hom->add_option("--w", hw, "one-line permutation");
  hom->add_flag("--pair", hpair, "use the pair (id, w_{k,n})");
  hom->add_option("--k", hk, "k for --pair");
  hom->add_option("--n", hn, "n for --pair");
  hom->add_flag("--top", htop, "top a-degree invariant in q");

  auto* pc = app.add_subcommand("pointcount", "positroid point count over F_q");
  std::string pf;
  bool pquot = false, pcat = false;
  pc->add_option("--f", pf, "window notation")->required();
  pc->add_flag("--quotient", pquot, "divide by (q-1)^{n-1}");
  pc->add_flag("--catalan", pcat, "f-Catalan number (q=1)");

  auto* deo = app.add_subcommand("deograms", "Deodhar diagrams of a positroid");
  std::string df;
  bool dmax = false, drender = false;
  deo->add_option("--f", df, "window notation")->required();
  deo->add_flag("--maximal", dmax, "only maximal-crossing Deograms");
  deo->add_flag("--render", drender, "draw each Deogram");

  auto* khr = app.add_subcommand("khr", "2-strand Khovanov-Rozansky top row");
  std::string kbraid;
  int kcutoff = 24;
  bool knon = false;
  khr->add_option("--braid", kbraid, "2-strand braid word")->required();
  khr->add_option("--cutoff", kcutoff, "polynomial degree cutoff (2p <= cutoff)");
  khr->add_flag("--nonequivariant", knon, "use HHH_C (y -> 0)");

  auto* mhp = app.add_subcommand("predict-mhp", "mixed Hodge polynomial of the top cell");
  int mk = 0, mn = 0;
  mhp->add_option("--k", mk, "k")->required();
  mhp->add_option("--n", mn, "n")->required();

  auto* ver = app.add_subcommand("verify", "run verification sweeps");
  std::string suite = "all";
  int vmax_n = 6, vcases = 500;
  uint64_t vseed = 20240817;
  bool vserial = false;
  ver->add_option("--suite", suite, "hecke|homfly|deodhar|catalan|positroid|khr|all");
  ver->add_option("--max-n", vmax_n, "size bound for exhaustive sweeps");
  ver->add_option("--cases", vcases, "random case count");
  ver->add_option("--seed", vseed, "random seed");
  ver->add_flag("--serial", vserial, "run the serial reference kernels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*qtcat) return run_qtcat(qa, qb, as_json, qtable);
    if (*rpoly) return run_rpoly(rv, rw, as_json, rtrace);
    if (*hom) return run_homfly(hbraid, hstrands > 0 ? hstrands : 2, hv, hw, hpair, hk, hn, htop, as_json);
    if (*pc) return run_pointcount(pf, pquot, pcat, as_json);
    if (*deo) return run_deograms(df, dmax, drender, as_json);
    if (*khr) return run_khr(kbraid, kcutoff, knon, as_json);
    if (*mhp) return run_predict_mhp(mk, mn, as_json);
    if (*ver) return run_verify(suite, vmax_n, vcases, vseed, vserial, as_json);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
