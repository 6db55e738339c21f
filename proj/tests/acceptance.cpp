// Acceptance gate: one line per criterion, nonzero exit if any fails.
//
// Criterion 12 shells out to the CLI binary; its path arrives in the
// CONTALG_CLI environment variable (set by the test harness).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "contalg/checks.hpp"
#include "contalg/format.hpp"
#include "contalg/parse.hpp"
#include "contalg/report.hpp"
#include "contalg/zdgraph.hpp"

using namespace contalg;

namespace {

int g_failures = 0;

void criterion(int num, const std::string& what, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
  std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", num,
              what.c_str(), dt.count(), detail.empty() ? "" : " -- ",
              detail.c_str());
  if (!ok) ++g_failures;
}

bool verified(const CheckOutcome& o, std::string& detail) {
  if (o.verdict == Verdict::Verified) return true;
  detail += o.name + ": " + verdict_name(o.verdict) + " (" + o.detail + ") ";
  return false;
}

MRElem random_poly(const RingPtr& r, const MonoidPtr& m, std::uint32_t d,
                   std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> coeff(0, r->order() - 1);
  while (true) {
    MRElem f = mr_zero(r, m);
    for (std::uint32_t e = 0; e <= d; ++e) {
      std::uint32_t c = coeff(rng);
      if (c != r->zero()) f = mr_add(f, mr_term(r, m, c, MonoidElem{e}));
    }
    if (!f.is_zero()) return f;
  }
}

// deterministic fixture lists for criterion 11 / 6
std::vector<RingPtr> classification_fleet() {
  std::vector<RingPtr> base;
  for (std::uint32_t n = 2; n <= 50; ++n) base.push_back(make_zn(n));
  for (std::uint32_t p : {2u, 3u})
    for (std::uint32_t c1 = 0; c1 < p; ++c1)
      for (std::uint32_t c0 = 0; c0 < p; ++c0)
        base.push_back(make_univariate_quotient(p, "y", {c0, c1, 1}));
  std::vector<RingPtr> fleet = base;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j)
      if (std::uint64_t{base[i]->order()} * base[j]->order() <= 64)
        fleet.push_back(make_product(base[i], base[j]));
  return fleet;
}

int run_cli(const std::string& args) {
  const char* cli = std::getenv("CONTALG_CLI");
  if (!cli) throw std::runtime_error("CONTALG_CLI is not set");
  std::string cmd = std::string("\"") + cli + "\" " + args + " > /dev/null 2>&1";
  return std::system(cmd.c_str());
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main() {
  MonoidPtr free1 = Monoid::free_comm(1);
  MonoidPtr free2 = Monoid::free_comm(2);
  MonoidPtr cyc2 = Monoid::cyclic(2);
  MonoidPtr cyc3 = Monoid::cyclic(3);
  MonoidPtr tbl3 =
      Monoid::from_table({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, 0, {"1", "a", "z"});

  criterion(1, "content/McCoy checks verify exactly over cancellative torsion-free monoids",
            [&](std::string& detail) {
    bool ok = true;
    for (auto r : {make_zn(2), make_zn(3), make_zn(4), make_zn(6)}) {
      for (auto& [m, good, d] :
           std::vector<std::tuple<MonoidPtr, bool, std::uint32_t>>{
               {free1, true, 2},
               {free2, true, 1},  // degree 1 keeps the pair scan inside the cap
               {cyc2, false, 0},
               {cyc3, false, 0},
               {tbl3, false, 0}}) {
        Verdict want = good ? Verdict::Verified : Verdict::Refuted;
        for (auto& o : {unit_content_check(r, m, d), weak_content_check(r, m, d),
                        mccoy_equiv_check(r, m, d)}) {
          if (o.verdict != want) {
            ok = false;
            detail += r->construction().text + "/" + m->describe() + " " +
                      o.name + "=" + verdict_name(o.verdict) + " ";
          }
        }
        // replay the constructed witnesses on the bad monoids
        if (auto w = m->cancellation_failure()) {
          auto [f, g] = counterexample_noncancellative(r, m, w->s, w->t, w->u);
          if (!mr_mul(f, g).is_zero()) ok = false;
        } else if (auto t = m->torsion_failure()) {
          TorsionCounterexample tc = counterexample_torsion(m, r, t->s, t->t);
          if (!mr_mul(tc.f, tc.g).is_zero()) ok = false;
        }
      }
    }
    return ok;
  });

  criterion(2, "Dedekind-Mertens exponents: exact desk case plus 1000 random pairs",
            [&](std::string& detail) {
    RingPtr ruv = ring_from_text("Z2[u,v]@3");
    MRElem f = parse_poly_literal("(u)*X+(v)", ruv);
    DMResult exact = dm_exponent(f, f);
    if (!exact.exponent || *exact.exponent != 2) {
      detail = "desk case exponent != 2";
      return false;
    }
    std::uint32_t uv = *ruv->index_of("u*v");
    Ideal cf = content(f);
    if (!ideal_product(cf, cf).contains(uv) ||
        content(mr_mul(f, f)).contains(uv)) {
      detail = "u*v does not separate the n = 1 stage";
      return false;
    }
    for (auto n : {4u, 6u, 8u}) {
      RingPtr r = make_zn(n);
      std::mt19937_64 rng(limits_from_env().seed + n);
      for (int i = 0; i < 1000; ++i) {
        MRElem a = random_poly(r, free1, 3, rng);
        MRElem b = random_poly(r, free1, 3, rng);
        if (!dm_exponent(a, b).exponent) {
          detail = "no exponent over Z" + std::to_string(n) + " for " +
                   poly_to_string(a) + ", " + poly_to_string(b);
          return false;
        }
      }
    }
    return true;
  });

  criterion(3, "minimal primes extend to a bijection onto the polynomial side",
            [&](std::string& detail) {
    bool ok = true;
    for (auto expr : {"Z4", "Z6", "Z8", "Z9", "Z2 x Z2", "Z2 x Z4",
                      "Z2[u,v]@3"})
      ok &= verified(min_prime_bijection_check(ring_from_text(expr), 2), detail);
    return ok;
  });

  criterion(4, "associated primes extend as annihilators of the same elements",
            [&](std::string& detail) {
    bool ok = true;
    for (auto expr : {"Z4", "Z6", "Z8", "Z9"})
      ok &= verified(ass_extension_check(ring_from_text(expr), 2), detail);
    return ok;
  });

  criterion(5, "zero-divisor covers and zd-degree transfer",
            [&](std::string& detail) {
    bool ok = true;
    for (auto expr : {"Z4", "Z6", "Z8", "Z9", "Z2 x Z2"}) {
      RingPtr r = ring_from_text(expr);
      ok &= verified(zd_cover_check(r, 2, CoverMode::Ass), detail);
      ok &= verified(zd_cover_check(r, 2, CoverMode::Min), detail);
    }
    auto deg = [&](const char* expr, std::uint32_t want) {
      auto zd = zd_degree(*ring_from_text(expr));
      if (zd && zd->degree == want) return true;
      detail += std::string(expr) + ": zd degree mismatch ";
      return false;
    };
    ok &= deg("Z4", 1);
    ok &= deg("Z8", 1);
    ok &= deg("Z6", 2);
    ok &= deg("Z2 x Z2", 2);
    ok &= deg("Z2 x Z2 x Z2", 3);
    ok &= deg("Z4 x Z6", 3);
    return ok;
  });

  criterion(6, "Property (A) everywhere small; regular elements keep regular content",
            [&](std::string& detail) {
    bool ok = true;
    for (const auto& r : classification_fleet())
      if (r->order() <= 64 && !has_property_A(*r)) {
        ok = false;
        detail += r->construction().text + " lacks Property (A) ";
      }
    for (auto expr : {"Z4", "Z6", "Z8", "Z2 x Z4"})
      ok &= verified(regular_content_check(ring_from_text(expr), 2), detail);
    return ok;
  });

  criterion(7, "prime-to-I transfers between scalars and polynomials",
            [&](std::string& detail) {
    bool ok = true;
    RingPtr r4 = make_zn(4), r6 = make_zn(6);
    ok &= verified(
        prime_to_check(r4, ideal_generated(*r4, std::vector<std::uint32_t>{2}), 2),
        detail);
    ok &= verified(
        prime_to_check(r6, ideal_generated(*r6, std::vector<std::uint32_t>{2}), 2),
        detail);
    ok &= verified(
        prime_to_check(r6, ideal_generated(*r6, std::vector<std::uint32_t>{3}), 2),
        detail);
    return ok;
  });

  criterion(8, "primal rings extend primally; non-primal rings carry witnesses",
            [&](std::string& detail) {
    bool ok = true;
    for (auto expr : {"Z4", "Z8", "Z9", "Z2[y]/(y^2)"})
      ok &= verified(primal_extension_check(ring_from_text(expr), 2), detail);
    for (auto expr : {"Z6", "Z2 x Z2"}) {
      RingPtr r = ring_from_text(expr);
      PrimalityResult pr = primality(*r);
      if (pr.primal || !pr.closure_witness) {
        ok = false;
        detail += std::string(expr) + ": expected a closure witness ";
        continue;
      }
      auto [a, b] = *pr.closure_witness;
      ElemSet z = zero_divisors(*r);
      if (!z.test(a) || !z.test(b) || z.test(r->add(a, b))) {
        ok = false;
        detail += std::string(expr) + ": witness does not replay ";
      }
    }
    return ok;
  });

  criterion(9, "nilpotency transfers; Z(R)^n = (0) exponents match",
            [&](std::string& detail) {
    bool ok = true;
    for (auto& [expr, n] : std::vector<std::pair<const char*, int>>{
             {"Z4", 2}, {"Z9", 2}, {"Z8", 3}}) {
      RingPtr r = ring_from_text(expr);
      ok &= verified(nil_extension_check(r, 2), detail);
      CheckOutcome o = zpow_check(r, 2);
      ok &= verified(o, detail);
      if (o.detail.find("n = " + std::to_string(n)) == std::string::npos) {
        ok = false;
        detail += std::string(expr) + ": wrong exponent (" + o.detail + ") ";
      }
    }
    ok &= verified(nil_extension_check(make_zn(6), 2), detail);
    CheckOutcome z6 = zpow_check(make_zn(6), 2);
    if (z6.verdict != Verdict::Inconclusive ||
        z6.detail.find("no n") == std::string::npos) {
      ok = false;
      detail += "Z6 zpow should be Inconclusive(no n) ";
    }
    return ok;
  });

  criterion(10, "diameter table: base values, predictions and truncated equality",
            [&](std::string& detail) {
    struct Row {
      const char* expr;
      int base;
      int predicted;
    };
    bool ok = true;
    for (auto& row : std::vector<Row>{{"Z4", 0, 1},
                                      {"Z2[y]/(y^2)", 0, 1},
                                      {"Z9", 1, 1},
                                      {"Z2 x Z2", 1, 2},
                                      {"Z6", 2, 2},
                                      {"Z8", 2, 2},
                                      {"Z2 x Z4", 3, 3}}) {
      RingPtr r = ring_from_text(row.expr);
      int base = diameter(gamma_of_ring(r)).diameter;
      Prediction p = predict_extension_diam(r);
      CheckOutcome v = verify_diam(r, {1, 2});
      if (base != row.base || p.value != row.predicted ||
          v.verdict != Verdict::Verified) {
        ok = false;
        detail += std::string(row.expr) + ": base " + std::to_string(base) +
                  ", predicted " + std::to_string(p.value) + ", " +
                  verdict_name(v.verdict) + " ";
      }
    }
    return ok;
  });

  criterion(11, "structural classification agrees with BFS on 200 rings",
            [&](std::string& detail) {
    auto fleet = classification_fleet();
    if (fleet.size() < 200) {
      detail = "fleet too small: " + std::to_string(fleet.size());
      return false;
    }
    for (std::size_t i = 0; i < 200; ++i) {
      try {
        classify_gamma(fleet[i]);
      } catch (const std::exception& e) {
        detail = fleet[i]->construction().text + ": " + e.what();
        return false;
      }
    }
    return true;
  });

  criterion(12, "verify-all reports are byte-identical across runs",
            [&](std::string& detail) {
    for (auto expr : {"Z4", "Z6", "Z9", "Z2xZ2"}) {
      std::string a = std::string("/tmp/contalg_accept_a.json");
      std::string b = std::string("/tmp/contalg_accept_b.json");
      std::string args = std::string("verify all \"") + expr + "\" --json ";
      int rc1 = run_cli(args + a);
      int rc2 = run_cli(args + b);
      if (rc1 != rc2) {
        detail = std::string(expr) + ": exit codes differ";
        return false;
      }
      std::string ja = slurp(a), jb = slurp(b);
      if (ja.empty() || ja != jb) {
        detail = std::string(expr) + ": JSON differs or is empty";
        return false;
      }
      std::remove(a.c_str());
      std::remove(b.c_str());
    }
    return true;
  });

  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
