// contalg: finite-ring content algebra explorer.
//
// Subcommands: analyze, graph, verify, dm, monoid-demo. Exit codes:
// 0 success / all checks verified, 1 some check refuted, 2 input error,
// 3 resource limit or inconclusive.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "contalg/checks.hpp"
#include "contalg/format.hpp"
#include "contalg/parse.hpp"
#include "contalg/report.hpp"
#include "contalg/zdgraph.hpp"

namespace ca = contalg;

namespace {

struct Options {
  std::uint32_t degree = 2;
  std::vector<std::uint32_t> degrees;  // empty -> {1,2} for diam
  std::uint32_t nmax = 0;              // 0 -> termCount(g)+1
  std::string json_path, dot_path;
  std::uint64_t cap = 0;   // 0 -> keep default/env
  std::uint64_t seed = 0;  // 0 -> keep default
};

ca::Limits effective_limits(const Options& o) {
  ca::Limits lim = ca::limits_from_env();
  if (o.cap) {
    lim.order_cap = o.cap;
    lim.vertex_cap = o.cap;
  }
  if (o.seed) lim.seed = o.seed;
  return lim;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void emit(const ca::Json& report, const Options& o) {
  std::cout << ca::render_text(report);
  if (!o.json_path.empty()) write_file(o.json_path, report.dump(2) + "\n");
}

/// Deterministic pseudo-random polynomial over R[X] of degree <= d,
/// resampled until nonzero.
ca::MRElem random_poly(const ca::RingPtr& r, const ca::MonoidPtr& m,
                       std::uint32_t d, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> coeff(0, r->order() - 1);
  while (true) {
    ca::MRElem f = ca::mr_zero(r, m);
    for (std::uint32_t e = 0; e <= d; ++e) {
      std::uint32_t c = coeff(rng);
      if (c != r->zero())
        f = ca::mr_add(f, ca::mr_term(r, m, c, ca::MonoidElem{e}));
    }
    if (!f.is_zero()) return f;
  }
}

ca::CheckOutcome dm_suite(const ca::RingPtr& r, std::uint32_t d,
                          std::uint32_t nmax, const ca::Limits& lim,
                          std::uint64_t count) {
  auto m = ca::Monoid::free_comm(1);
  std::mt19937_64 rng(lim.seed);
  std::uint32_t dd = std::min<std::uint32_t>(d, 3);
  for (std::uint64_t i = 0; i < count; ++i) {
    ca::MRElem f = random_poly(r, m, dd, rng);
    ca::MRElem g = random_poly(r, m, dd, rng);
    ca::DMResult res = ca::dm_exponent(f, g, nmax);
    if (!res.exponent)
      return ca::CheckOutcome::refuted(
          "dm", i + 1, dd, {f, g},
          "no Dedekind-Mertens exponent up to " +
              std::to_string(res.searched_up_to));
  }
  return ca::CheckOutcome::verified("dm", count, dd,
                                    "exponent exists for every sampled pair");
}

std::vector<ca::CheckOutcome> run_suite(const std::string& suite,
                                        const ca::RingPtr& r, const Options& o,
                                        const ca::Limits& lim) {
  auto m1 = ca::Monoid::free_comm(1);
  std::uint32_t d = o.degree;
  std::vector<std::uint32_t> dl = o.degrees;
  std::vector<ca::CheckOutcome> out;
  auto guard = [&](const char* name, auto&& fn) {
    try {
      fn();
    } catch (const ca::ResourceLimit& e) {
      out.push_back(ca::CheckOutcome::inconclusive(name, e.what(), d));
    }
  };
  bool all = suite == "all";
  if (all || suite == "content") {
    guard("unit_content",
          [&] { out.push_back(ca::unit_content_check(r, m1, d, lim)); });
    guard("weak_content",
          [&] { out.push_back(ca::weak_content_check(r, m1, d, lim)); });
  }
  if (all || suite == "mccoy")
    guard("mccoy_equiv",
          [&] { out.push_back(ca::mccoy_equiv_check(r, m1, d, lim)); });
  if (all || suite == "dm")
    guard("dm", [&] { out.push_back(dm_suite(r, d, o.nmax, lim, 100)); });
  if (all || suite == "minprimes")
    guard("min_prime_bijection",
          [&] { out.push_back(ca::min_prime_bijection_check(r, d, lim)); });
  if (all || suite == "ass")
    guard("ass_extension",
          [&] { out.push_back(ca::ass_extension_check(r, d, lim)); });
  if (all || suite == "zdcover") {
    guard("zd_cover_ass", [&] {
      out.push_back(ca::zd_cover_check(r, d, ca::CoverMode::Ass, lim));
    });
    guard("zd_cover_min", [&] {
      out.push_back(ca::zd_cover_check(r, d, ca::CoverMode::Min, lim));
    });
  }
  if (all || suite == "regular")
    guard("regular_content",
          [&] { out.push_back(ca::regular_content_check(r, d, lim)); });
  if (all || suite == "nil")
    guard("nil_extension",
          [&] { out.push_back(ca::nil_extension_check(r, d, lim)); });
  if (all || suite == "zpow")
    guard("zpow", [&] { out.push_back(ca::zpow_check(r, d, lim)); });
  if (all || suite == "primeto")
    guard("prime_to", [&] {
      for (const auto& i : ca::enumerate_ideals(*r, lim))
        if (!i.is_whole() && ca::is_prime(i))
          out.push_back(ca::prime_to_check(r, i, d, lim));
    });
  if (all || suite == "primal")
    guard("primal_extension",
          [&] { out.push_back(ca::primal_extension_check(r, d, lim)); });
  if (all || suite == "diam")
    guard("diam", [&] { out.push_back(ca::verify_diam(r, dl, lim)); });
  return out;
}

const std::vector<std::string> kSuites = {
    "dm",  "mccoy", "content", "minprimes", "ass",    "zdcover", "regular",
    "nil", "zpow",  "primeto", "primal",    "diam",   "all"};

int exit_code_for(const std::vector<ca::CheckOutcome>& outcomes) {
  bool refuted = false, inconclusive = false;
  for (const auto& o : outcomes) {
    refuted |= o.verdict == ca::Verdict::Refuted;
    inconclusive |= o.verdict == ca::Verdict::Inconclusive;
  }
  if (refuted) return 1;
  if (inconclusive) return 3;
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"finite-ring content algebra explorer"};
  app.require_subcommand(1);

  std::string expr, suite, f_lit, g_lit, demo_kind, demo_ring = "Z3";
  std::uint32_t demo_order = 2;
  Options opt;
  std::string degrees_csv;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--degree", opt.degree, "truncation degree (default 2)");
    cmd->add_option("--degrees", degrees_csv,
                    "comma-separated degree list for diameter checks");
    cmd->add_option("--nmax", opt.nmax, "Dedekind-Mertens search bound");
    cmd->add_option("--json", opt.json_path, "write a JSON report here");
    cmd->add_option("--dot", opt.dot_path, "write a DOT graph here");
    cmd->add_option("--cap", opt.cap, "order/vertex cap override");
    cmd->add_option("--seed", opt.seed, "sampling seed override");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "structural report");
  analyze->add_option("expr", expr, "ring expression")->required();
  add_common(analyze);

  CLI::App* graph = app.add_subcommand("graph", "zero-divisor graph");
  graph->add_option("expr", expr, "ring expression")->required();
  bool truncated = false;
  graph->add_flag("--poly", truncated,
                  "graph of degree-truncated polynomials instead of the ring");
  add_common(graph);

  CLI::App* verify = app.add_subcommand("verify", "run a check suite");
  verify->add_option("suite", suite, "one of: dm mccoy content minprimes ass "
                                     "zdcover regular nil zpow primeto primal "
                                     "diam all")
      ->required()
      ->check(CLI::IsMember(kSuites));
  verify->add_option("expr", expr, "ring expression")->required();
  add_common(verify);

  CLI::App* dm = app.add_subcommand("dm", "Dedekind-Mertens exponent");
  dm->add_option("expr", expr, "ring expression")->required();
  dm->add_option("f", f_lit, "polynomial literal")->required();
  dm->add_option("g", g_lit, "polynomial literal")->required();
  add_common(dm);

  CLI::App* demo = app.add_subcommand(
      "monoid-demo", "zero-divisor constructions over bad monoids");
  demo->add_option("kind", demo_kind, "torsion | noncancellative")
      ->required()
      ->check(CLI::IsMember({"torsion", "noncancellative"}));
  demo->add_option("--ring", demo_ring, "coefficient ring (default Z3)");
  demo->add_option("--order", demo_order,
                   "cyclic-monoid order for the torsion demo (default 2)");
  add_common(demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (!degrees_csv.empty()) {
    std::size_t at = 0;
    while (at < degrees_csv.size()) {
      std::size_t comma = degrees_csv.find(',', at);
      if (comma == std::string::npos) comma = degrees_csv.size();
      opt.degrees.push_back(
          static_cast<std::uint32_t>(std::stoul(degrees_csv.substr(at, comma - at))));
      at = comma + 1;
    }
  }
  ca::Limits lim = effective_limits(opt);

  if (analyze->parsed()) {
    ca::RingPtr r = ca::ring_from_text(expr, lim);
    ca::Json rep = ca::ring_report(r, {opt.degree}, lim);
    ca::attach_outcomes(rep, {ca::tq_triviality_check(r)});
    emit(rep, opt);
    if (!opt.dot_path.empty())
      write_file(opt.dot_path, ca::to_dot(ca::gamma_of_ring(r)));
    return 0;
  }
  if (graph->parsed()) {
    ca::RingPtr r = ca::ring_from_text(expr, lim);
    ca::ZDGraph g = truncated ? ca::gamma_poly_truncated(r, opt.degree, lim)
                              : ca::gamma_of_ring(r);
    ca::DiamReport dr = ca::diameter(g);
    std::cout << "vertices: " << g.vertex_count()
              << ", edges: " << g.edge_count() << ", diameter: "
              << (dr.diameter < 0 ? std::string("empty")
                                  : std::to_string(dr.diameter));
    if (dr.diameter > 0)
      std::cout << " (witness " << dr.witness_a << " -- " << dr.witness_b << ")";
    std::cout << "\n";
    std::string dot = ca::to_dot(g);
    if (!opt.dot_path.empty())
      write_file(opt.dot_path, dot);
    else
      std::cout << dot;
    if (!opt.json_path.empty()) {
      ca::Json rep = ca::ring_report(r, {opt.degree}, lim);
      write_file(opt.json_path, rep.dump(2) + "\n");
    }
    return 0;
  }
  if (verify->parsed()) {
    ca::RingPtr r = ca::ring_from_text(expr, lim);
    std::vector<ca::CheckOutcome> outcomes = run_suite(suite, r, opt, lim);
    ca::Json rep = ca::ring_report(
        r, opt.degrees.empty() ? std::vector<std::uint32_t>{opt.degree}
                               : opt.degrees,
        lim);
    ca::attach_outcomes(rep, outcomes);
    emit(rep, opt);
    if (!opt.dot_path.empty())
      write_file(opt.dot_path, ca::to_dot(ca::gamma_of_ring(r)));
    return exit_code_for(outcomes);
  }
  if (dm->parsed()) {
    ca::RingPtr r = ca::ring_from_text(expr, lim);
    ca::MRElem f = ca::parse_poly_literal(f_lit, r);
    ca::MRElem g = ca::parse_poly_literal(g_lit, r);
    ca::DMResult res = ca::dm_exponent(f, g, opt.nmax);
    std::vector<ca::CheckOutcome> outcomes;
    if (res.exponent)
      outcomes.push_back(ca::CheckOutcome::verified(
          "dm", res.searched_up_to, 0,
          "exponent " + std::to_string(*res.exponent) + " for f = " +
              ca::poly_to_string(f) + ", g = " + ca::poly_to_string(g)));
    else
      outcomes.push_back(ca::CheckOutcome::inconclusive(
          "dm", "no exponent up to " + std::to_string(res.searched_up_to)));
    ca::Json rep = ca::ring_report(r, {opt.degree}, lim);
    ca::attach_outcomes(rep, outcomes);
    emit(rep, opt);
    return exit_code_for(outcomes);
  }
  if (demo->parsed()) {
    ca::RingPtr r = ca::ring_from_text(demo_ring, lim);
    std::vector<ca::CheckOutcome> outcomes;
    ca::Json rep;
    if (demo_kind == "torsion") {
      ca::MonoidPtr m = ca::Monoid::cyclic(demo_order);
      auto w = m->torsion_failure();
      if (!w) {
        std::cerr << "the cyclic monoid of order " << demo_order
                  << " has no torsion pair\n";
        return 2;
      }
      ca::TorsionCounterexample tc = ca::counterexample_torsion(m, r, w->s, w->t);
      outcomes.push_back(ca::CheckOutcome::refuted(
          "mccoy_equiv", 1, 0, {tc.f, tc.g},
          "torsion pair with k = " + std::to_string(tc.k) + ": fg = 0"));
      rep["monoid"] = m->describe();
    } else {
      // smallest commutative monoid with a cancellation failure:
      // {1, a, z} with a*a = a*z = z*z = z
      auto m = ca::Monoid::from_table({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, 0,
                                      {"1", "a", "z"});
      auto w = m->cancellation_failure();
      auto [f, g] = ca::counterexample_noncancellative(r, m, w->s, w->t, w->u);
      outcomes.push_back(ca::CheckOutcome::refuted(
          "unit_content", 1, 0, {f, g},
          "cancellation failure: fg = 0 with c(f) = c(g) = R"));
      rep["monoid"] = m->describe();
    }
    rep["ring"] = r->construction().text;
    rep["checkOutcomes"] = ca::Json::array();
    rep["witnesses"] = ca::Json::array();
    ca::attach_outcomes(rep, outcomes);
    std::cout << "ring: " << rep["ring"].get<std::string>() << "\n"
              << "monoid: " << rep["monoid"].get<std::string>() << "\n";
    for (const auto& o : rep["checkOutcomes"])
      std::cout << "[" << o["verdict"].get<std::string>() << "] "
                << o["name"].get<std::string>() << ": "
                << o["detail"].get<std::string>() << " witness: "
                << rep["witnesses"][0].get<std::string>() << ", "
                << rep["witnesses"][1].get<std::string>() << "\n";
    if (!opt.json_path.empty()) write_file(opt.json_path, rep.dump(2) + "\n");
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ca::ParseError& e) {
    std::cerr << "error: " << e.what() << " (expected " << e.expected()
              << ")\n";
    return 2;
  } catch (const ca::InvalidParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ca::ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
