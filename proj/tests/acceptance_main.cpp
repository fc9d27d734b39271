// Acceptance runner: twelve end-to-end checks, one PASS/FAIL line each.
// Exits nonzero if any check fails or overruns its time budget.

#include <cstdio>
#include <string>
#include <vector>

#include "kfq/kfq.hpp"

using namespace kfq;

namespace {

int g_index = 0;
int g_failures = 0;

void report(const std::string& name, bool ok, double seconds, double budget,
            long long cases, const std::vector<std::string>& details) {
  ++g_index;
  const bool in_budget = budget <= 0 || seconds < budget;
  const bool pass = ok && in_budget;
  if (!pass) ++g_failures;
  std::printf("[%2d/12] %s %s", g_index, pass ? "PASS" : "FAIL", name.c_str());
  if (cases > 0) std::printf(" cases=%lld", cases);
  std::printf(" (%.2fs)\n", seconds);
  if (!in_budget)
    std::printf("        over budget: %.2fs, limit %.0fs\n", seconds, budget);
  for (const std::string& d : details) std::printf("        %s\n", d.c_str());
  std::fflush(stdout);
}

void report_check(const CheckResult& r, double budget) {
  std::vector<std::string> details;
  for (const std::string& f : r.failures) details.push_back("failure: " + f);
  for (const std::string& n : r.notes) details.push_back("note: " + n);
  report(r.name, r.ok, r.seconds, budget, r.cases, details);
}

double elapsed(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

int main() {
  PartitionFnCache pf;
  CharCache cc;

  // 1: the row flavors against the shifted Kostka-Foulkes polynomials,
  // fully worked reference values
  {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> details;
    const Partition lambda({2, 1, 0}), mu({4, 2, 1});
    const QPolynomial u = qmult(pf, Flavor::u, lambda, mu);
    const QPolynomial U = qmult(pf, Flavor::U, lambda, mu);
    const QPolynomial kd =
        kostka_foulkes(pf, RootSystem(Kind::D, 3), Partition({6, 5, 4}),
                       Partition({5, 4, 2}));
    const QPolynomial kc =
        kostka_foulkes(pf, RootSystem(Kind::C, 3), Partition({6, 5, 4}),
                       Partition({5, 4, 2}));
    bool ok = true;
    if (u.to_string() != "q^3 + q^2") {
      ok = false;
      details.push_back("u = " + u.to_string() + ", want q^3 + q^2");
    }
    if (U.to_string() != "q^5 + 2*q^4 + 3*q^3 + 2*q^2") {
      ok = false;
      details.push_back("U = " + U.to_string() + ", want q^5 + 2*q^4 + 3*q^3 + 2*q^2");
    }
    if (kd != u) {
      ok = false;
      details.push_back("orthogonal Kostka = " + kd.to_string() + ", u = " + u.to_string());
    }
    if (kc != U) {
      ok = false;
      details.push_back("symplectic Kostka = " + kc.to_string() + ", U = " + U.to_string());
    }
    report("row-golden", ok, elapsed(t0), 1.0, 4, details);
  }

  // 2: the column flavors, same shape
  {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> details;
    const Partition lambda({2, 1, 0, 0, 0}), mu({2, 2, 1, 0, 0});
    const QPolynomial v = qmult(pf, Flavor::v, lambda, mu);
    const QPolynomial V = qmult(pf, Flavor::V, lambda, mu);
    const QPolynomial kd = kostka_foulkes(pf, RootSystem(Kind::D, 2),
                                          Partition({3, 2}), Partition({2, 1}));
    const QPolynomial kc = kostka_foulkes(pf, RootSystem(Kind::C, 2),
                                          Partition({3, 2}), Partition({2, 1}));
    bool ok = true;
    if (v.to_string() != "q") {
      ok = false;
      details.push_back("v = " + v.to_string() + ", want q");
    }
    if (V.to_string() != "q^2 + q") {
      ok = false;
      details.push_back("V = " + V.to_string() + ", want q^2 + q");
    }
    if (kd != v) {
      ok = false;
      details.push_back("orthogonal Kostka = " + kd.to_string() + ", v = " + v.to_string());
    }
    if (kc != V) {
      ok = false;
      details.push_back("symplectic Kostka = " + kc.to_string() + ", V = " + V.to_string());
    }
    report("column-golden", ok, elapsed(t0), 1.0, 4, details);
  }

  // 3, 4: the duality sweeps
  const CheckResult duality_row = sweep_duality_row(pf, 3, 6, 0);
  report_check(duality_row, 300.0);
  const CheckResult duality_col = sweep_duality_column(pf, 6, 5, 0);
  report_check(duality_col, 300.0);

  // 5: multiplicities at q = 1 against character-product decompositions
  const CheckResult oracle = sweep_oracle_q1(pf, cc, 3, 6, 4);
  report_check(oracle, 600.0);

  // 6: single row/column modules give irreducible characters
  {
    long long d_exact = 0, d_split = 0;
    CheckResult singles = sweep_single_modules(cc, 4, 3, &d_exact, &d_split);
    singles.notes.push_back("type D, last part zero (irreducible match): " +
                            std::to_string(d_exact) + " cases");
    singles.notes.push_back("type D, last part positive (mirror-pair match): " +
                            std::to_string(d_split) + " cases");
    bool covered = d_exact > 0 && d_split > 0;
    if (!covered) singles.fail("type D coverage incomplete");
    report_check(singles, 0);
  }

  // 7: pair-decomposition expansion of the partition functions
  report_check(sweep_pair_expansion(pf, 3, 6, 6), 0);

  // 8: the Kostka-number route for the row flavors
  const CheckResult route = sweep_kostka_route(pf, 3, 6, 4);
  report_check(route, 0);

  // 9: box-complement symmetry in type A
  report_check(sweep_ahat(pf, 3, 6), 0);

  // 10: positivity, aggregated from the sweeps above plus a directed
  // Kostka-Foulkes scan over partition pairs
  {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> details;
    bool ok = true;
    long long cases = 0;
    if (!duality_row.positivity_ok) {
      ok = false;
      details.push_back("row duality sweep saw a negative coefficient");
    }
    if (!duality_col.positivity_ok) {
      ok = false;
      details.push_back("column duality sweep saw a negative coefficient");
    }
    if (!oracle.positivity_ok) {
      ok = false;
      details.push_back("q=1 oracle sweep saw a negative value");
    }
    if (!route.positivity_ok) {
      ok = false;
      details.push_back("Kostka-number route sweep saw a negative coefficient");
    }
    for (int m = 1; m <= 3 && ok; ++m) {
      const auto parts = partitions_up_to(6, m);
      for (const Partition& mu : parts) {
        for (const Partition& lambda : parts) {
          for (Kind kind : {Kind::B, Kind::C, Kind::D}) {
            ++cases;
            if (!kostka_foulkes(pf, RootSystem(kind, m), lambda, mu)
                     .nonnegative_coefficients()) {
              ok = false;
              details.push_back("negative coefficient in K^" + kind_name(kind) +
                                " lambda=(" + lambda.to_string() + ") mu=(" +
                                mu.to_string() + ")");
            }
          }
          ++cases;
          if (!kostka_extended_A(pf, lambda, Weight::from_partition(mu))
                   .nonnegative_coefficients()) {
            ok = false;
            details.push_back("negative coefficient in type A Kostka, lambda=(" +
                              lambda.to_string() + ") mu=(" + mu.to_string() + ")");
          }
          if (details.size() > 8) break;
        }
        if (details.size() > 8) break;
      }
    }
    report("positivity", ok, elapsed(t0), 0, cases, details);
  }

  // 11: the generating-series oracle for the pairing kernels
  report_check(sweep_series(pf, {2, 3}, 4), 0);

  // 12: the rank-two closed form for u
  report_check(sweep_m2_closed_form(pf, 5), 0);

  if (g_failures == 0) {
    std::printf("acceptance: all 12 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d of 12 criteria FAILED\n", g_failures);
  return 1;
}
