// kfq: exact q-Kostant partition functions, Kostka-Foulkes polynomials and
// tensor product q-multiplicities for the classical root systems.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
// guard tripped.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "kfq/kfq.hpp"

namespace {

using namespace kfq;

struct Options {
  std::string format = "text";
  std::size_t cache_cap = 4000000;
  bool force = false;
};

void emit_single(const Options& opt, const OutputRow& row, const QPolynomial& p) {
  if (opt.format == "csv")
    std::cout << render_csv({row});
  else if (opt.format == "json")
    std::cout << render_json({row}, {p});
  else
    std::cout << row.polynomial << '\n';
}

/// Alternating sums enumerate a whole Weyl group; keep that within reason
/// unless the caller insists.
void check_rank_guard(Kind kind, int m, bool force) {
  if (force) return;
  const int cap = kind == Kind::A ? 8 : 5;
  if (m > cap)
    throw GuardExceeded("rank " + std::to_string(m) + " needs a Weyl group of order " +
                        weyl_order(kind, m).str() +
                        "; rerun with --force to allow it");
}

int run_verify(PartitionFnCache& pf, const std::string& suite, int max_m,
               int max_weight, int degree, std::uint64_t seed) {
  CharCache cc;
  std::vector<CheckResult> results;
  auto want = [&suite](const char* name) { return suite == "all" || suite == name; };

  if (want("duality1")) results.push_back(sweep_duality_row(pf, max_m, max_weight, seed));
  if (want("duality2"))
    results.push_back(sweep_duality_column(pf, max_m, max_weight, seed));
  if (want("oracle"))
    results.push_back(
        sweep_oracle_q1(pf, cc, max_m, max_weight, std::min(max_weight, 4)));
  if (want("kostka-numbers")) {
    results.push_back(sweep_kostka_route(pf, max_m, max_weight, 4));
    results.push_back(sweep_pair_expansion(pf, max_m, max_weight, max_weight));
  }
  if (want("ahat")) results.push_back(sweep_ahat(pf, max_m, max_weight));
  if (want("series"))
    results.push_back(sweep_series(pf, [max_m] {
                        std::vector<int> ms;
                        for (int m = 1; m <= std::min(max_m, 3); ++m) ms.push_back(m);
                        return ms;
                      }(),
                      degree));
  if (results.empty()) throw InvalidInput("unknown suite: '" + suite + "'");

  bool all_ok = true;
  for (const CheckResult& r : results) {
    // timings go to stderr so stdout is byte-identical across runs
    std::cout << r.name << ": " << (r.ok ? "PASS" : "FAIL") << " cases=" << r.cases
              << (r.positivity_ok ? "" : " positivity=violated") << '\n';
    for (const std::string& n : r.notes) std::cout << "  note: " << n << '\n';
    for (const std::string& f : r.failures) std::cout << "  failure: " << f << '\n';
    std::cerr << r.name << ": " << r.seconds << "s\n";
    all_ok = all_ok && r.ok && r.positivity_ok;
  }
  std::cout << (all_ok ? "verification passed" : "verification FAILED") << '\n';
  return all_ok ? 0 : 1;
}

int run(int argc, char** argv) {
  CLI::App app{
      "kfq: exact q-Kostant partition functions, Kostka-Foulkes polynomials\n"
      "and tensor product q-multiplicities for classical root systems"};
  app.require_subcommand(1);

  Options opt;

  // partfn
  auto* partfn_cmd = app.add_subcommand(
      "partfn", "q-analogue of the Kostant partition function of beta");
  std::string pf_type;
  std::string pf_beta;
  partfn_cmd->add_option("--type", pf_type, "root system kind: A, B, C or D")
      ->required();
  partfn_cmd->add_option("--beta", pf_beta, "target vector, e.g. 1,1 or 2,-1,0")
      ->required();

  // kostka
  auto* kostka_cmd = app.add_subcommand(
      "kostka", "Kostka-Foulkes polynomial K^X_{lambda,mu}(q)");
  std::string ko_type, ko_lambda, ko_mu;
  kostka_cmd->add_option("--type", ko_type, "root system kind: A, B, C or D")
      ->required();
  kostka_cmd->add_option("--lambda", ko_lambda, "partition, e.g. 6,5,4")->required();
  kostka_cmd
      ->add_option("--mu", ko_mu,
                   "partition; for type A any integral vector is allowed")
      ->required();

  // qmult
  auto* qmult_cmd = app.add_subcommand(
      "qmult", "tensor product q-multiplicity u, U, v or V at (lambda, mu)");
  std::string qm_flavor, qm_lambda, qm_mu;
  qmult_cmd->add_option("--flavor", qm_flavor, "u, U, v or V")->required();
  qmult_cmd->add_option("--lambda", qm_lambda, "partition")->required();
  qmult_cmd->add_option("--mu", qm_mu, "partition of the same length")->required();

  // table
  auto* table_cmd = app.add_subcommand(
      "table", "all q-multiplicities of one flavor for a fixed mu");
  std::string tb_flavor, tb_mu;
  table_cmd->add_option("--flavor", tb_flavor, "u, U, v or V")->required();
  table_cmd->add_option("--mu", tb_mu, "partition")->required();

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "run a verification sweep and report PASS or FAIL");
  std::string vf_suite = "all";
  int vf_max_m = 2, vf_max_weight = 4, vf_degree = 3;
  std::uint64_t vf_seed = 0;
  verify_cmd->add_option(
      "--suite", vf_suite,
      "duality1, duality2, oracle, kostka-numbers, ahat, series or all");
  verify_cmd->add_option("--max-m", vf_max_m, "largest rank/length swept");
  verify_cmd->add_option("--max-weight", vf_max_weight, "largest |mu| swept");
  verify_cmd->add_option("--degree", vf_degree, "series truncation degree");
  verify_cmd->add_option("--seed", vf_seed,
                         "seed for the randomized extra shifts (output is "
                         "byte-identical for identical seeds)");

  for (CLI::App* sub :
       {partfn_cmd, kostka_cmd, qmult_cmd, table_cmd, verify_cmd}) {
    sub->add_option("--format", opt.format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--cache-cap", opt.cache_cap,
                    "partition function memo entry cap")
        ->envname("KF_CACHE_CAP");
    sub->add_flag("--force", opt.force, "bypass the rank guard");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help and version exit cleanly; anything else is a usage error
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  PartitionFnCache pf(opt.cache_cap);

  if (partfn_cmd->parsed()) {
    const Kind kind = parse_kind(pf_type);
    const Weight beta = Weight::parse(pf_beta);
    if (beta.rank() < 1) throw InvalidInput("beta must be nonempty");
    QPolynomial p = pf.kostant_q(RootSystem(kind, beta.rank()), beta);
    emit_single(opt, make_row("P", kind_name(kind), "", pf_beta, "", p,
                              p.is_zero() ? "zero" : "ok"),
                p);
    return 0;
  }

  if (kostka_cmd->parsed()) {
    const Kind kind = parse_kind(ko_type);
    const Partition lambda = Partition::parse(ko_lambda);
    QPolynomial p;
    if (kind == Kind::A) {
      const Weight gamma = Weight::parse(ko_mu);
      check_rank_guard(kind, lambda.length(), opt.force);
      p = kostka_extended_A(pf, lambda, gamma);
    } else {
      const Partition mu = Partition::parse(ko_mu);
      check_rank_guard(kind, lambda.length(), opt.force);
      p = kostka_foulkes(pf, RootSystem(kind, lambda.length()), lambda, mu);
    }
    emit_single(opt, make_row("K", kind_name(kind), ko_lambda, ko_mu, "", p,
                              p.is_zero() ? "zero" : "ok"),
                p);
    return 0;
  }

  if (qmult_cmd->parsed()) {
    const Flavor flavor = parse_flavor(qm_flavor);
    const Partition lambda = Partition::parse(qm_lambda);
    const Partition mu = Partition::parse(qm_mu);
    const bool row_flavor = flavor == Flavor::u || flavor == Flavor::U;
    const int rank = row_flavor ? lambda.length()
                                : std::max(lambda.first(), mu.first());
    check_rank_guard(Kind::A, rank, opt.force);
    QPolynomial p = qmult(pf, flavor, lambda, mu);
    std::string status = p.is_zero() ? "zero" : "ok";
    if (!row_flavor && lambda.length() < mu.weight())
      status = "warning:interpretation-condition-failed";
    emit_single(opt, make_row(flavor_name(flavor), "", qm_lambda, qm_mu, "", p, status),
                p);
    return 0;
  }

  if (table_cmd->parsed()) {
    const Flavor flavor = parse_flavor(tb_flavor);
    const Partition mu = Partition::parse(tb_mu);
    const int l = mu.length();
    const int w = static_cast<int>(mu.weight());
    const bool row_flavor = flavor == Flavor::u || flavor == Flavor::U;
    std::vector<Partition> lambdas;
    for (const Partition& lambda : partitions_up_to(w, l, w))
      lambdas.push_back(lambda);
    std::sort(lambdas.begin(), lambdas.end(),
              [](const Partition& a, const Partition& b) {
                if (a.weight() != b.weight()) return a.weight() > b.weight();
                return b < a;
              });
    std::vector<OutputRow> rows;
    std::vector<QPolynomial> polys;
    for (const Partition& lambda : lambdas) {
      const int rank = row_flavor ? lambda.length()
                                  : std::max(lambda.first(), mu.first());
      check_rank_guard(Kind::A, rank, opt.force);
      QPolynomial p = qmult(pf, flavor, lambda, mu);
      std::string status = p.is_zero() ? "zero" : "ok";
      if (!row_flavor && l < w) status = "warning:interpretation-condition-failed";
      rows.push_back(make_row(flavor_name(flavor), "", lambda.to_string(),
                              tb_mu, "", p, status));
      polys.push_back(std::move(p));
    }
    if (opt.format == "csv")
      std::cout << render_csv(rows);
    else if (opt.format == "json")
      std::cout << render_json(rows, polys);
    else
      std::cout << render_text(rows);
    return 0;
  }

  if (verify_cmd->parsed()) {
    if (vf_max_m > 5 && !opt.force)
      throw GuardExceeded("verify with --max-m above 5 needs --force");
    return run_verify(pf, vf_suite, vf_max_m, vf_max_weight, vf_degree, vf_seed);
  }

  throw InvalidInput("no subcommand");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const kfq::GuardExceeded& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    return 3;
  } catch (const kfq::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
