#include "zeeman2d/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "zeeman2d/format.hpp"
#include "zeeman2d/perturb.hpp"
#include "zeeman2d/validation.hpp"

namespace zeeman2d::cli {

namespace {

struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_rational_arg(const std::string& text, const std::string& flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageFailure(flag + ": cannot parse '" + text + "' as an exact number");
  }
}

void require_level(int n, int l) {
  if (n < 1) throw UsageFailure("n must satisfy n ≥ 1 (got n=" + std::to_string(n) + ")");
  if (l < 0 || l > n - 1) {
    throw UsageFailure("l must satisfy 0 ≤ l ≤ n−1 (got n=" + std::to_string(n) + ", l=" + std::to_string(l) + ")");
  }
}

/// B0 in tesla as an exact decimal.
Rational atomic_unit_tesla() { return Rational::parse("235051.75675"); }

struct CoeffArgs {
  int n = 0;
  int l = -1;
  int all_up_to = 0;
  std::string format = "md";
  int digits = 12;
  std::string route = "closed";
};

OutputRecord coeff_record(const CoeffArgs& a) {
  Provenance prov;
  if (a.route == "closed") {
    prov = Provenance::ClosedForm;
  } else if (a.route == "sturmian") {
    prov = Provenance::SturmianSum;
  } else {
    throw UsageFailure("--route must be 'closed' or 'sturmian'");
  }
  if (a.digits < 1 || a.digits > 60) throw UsageFailure("--digits must lie in 1..60");

  std::vector<std::pair<int, int>> levels;
  if (a.all_up_to > 0) {
    for (int n = 1; n <= a.all_up_to; ++n) {
      for (int l = 0; l < n; ++l) levels.emplace_back(n, l);
    }
  } else {
    require_level(a.n, a.l);
    levels.emplace_back(a.n, a.l);
  }

  OutputRecord rec;
  rec.columns = {"n",    "l",          "eps0",         "eps0_decimal", "eps2",
                 "eps2_factorized", "eps2_decimal", "eps4",         "eps4_factorized", "eps4_decimal"};
  for (auto [n, l] : levels) {
    const CoefficientSet& c = coefficients(n, l, prov);
    rec.rows.push_back({std::to_string(n), std::to_string(l), c.eps0.to_string(), to_decimal(c.eps0, a.digits),
                        c.eps2.to_string(), factorized_string(c.eps2), to_decimal(c.eps2, a.digits),
                        c.eps4.to_string(), factorized_string(c.eps4), to_decimal(c.eps4, a.digits)});
  }
  return rec;
}

struct EnergyArgs {
  int n = 0;
  int l = -1;
  int ml = 0;
  std::string ms;
  std::string Z = "1";
  std::string b;
  std::string tesla;
  int order = 4;
  bool spin = false;
  std::string format = "md";
  int digits = 12;
};

std::optional<SpinProjection> parse_spin(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text == "+1/2" || text == "1/2" || text == "up" || text == "+") return SpinProjection::Up;
  if (text == "-1/2" || text == "down" || text == "-") return SpinProjection::Down;
  throw UsageFailure("--ms must be +1/2 or -1/2 (got '" + text + "')");
}

int cmd_energy(const EnergyArgs& a, std::ostream& out, std::ostream& err) {
  require_level(a.n, a.l);
  if (std::abs(a.ml) != a.l) {
    throw UsageFailure("|ml| must equal l (got l=" + std::to_string(a.l) + ", ml=" + std::to_string(a.ml) + ")");
  }
  if (a.b.empty() == a.tesla.empty()) throw UsageFailure("give exactly one of --B-over-B0 or --tesla");
  if (a.digits < 1 || a.digits > 60) throw UsageFailure("--digits must lie in 1..60");
  const auto ms = parse_spin(a.ms);
  if (a.spin && !ms) throw UsageFailure("--spin needs --ms");
  Order order;
  try {
    order = order_from_int(a.order);
  } catch (const std::exception& e) {
    throw UsageFailure(std::string("--order: ") + e.what());
  }
  const Rational Z = parse_rational_arg(a.Z, "--Z");
  if (Z.sign() <= 0) throw UsageFailure("--Z must be positive");
  const Rational b = a.b.empty() ? parse_rational_arg(a.tesla, "--tesla") / atomic_unit_tesla()
                                 : parse_rational_arg(a.b, "--B-over-B0");
  if (b.sign() < 0) throw UsageFailure("field strength must be non-negative");

  const EnergyResult r = assemble_energy(QuantumState(a.n, a.l, a.ml, ms), Z, b, order, a.spin);
  OutputRecord rec;
  rec.columns = {"term", "exact", "decimal"};
  auto row = [&](const std::string& name, const Rational& v) {
    rec.rows.push_back({name, v.to_string(), to_decimal(v, a.digits)});
  };
  row("b", b);
  row("B_tesla", b * atomic_unit_tesla());
  row("E0", r.e0);
  row("E1", r.e1);
  row("E2", r.e2);
  row("E4", r.e4);
  row("total", r.total);
  rec.rows.push_back({"truncation", r.truncation_note, ""});
  rec.rows.push_back({"regime_warning", r.perturbative_regime_exceeded ? "true" : "false", ""});
  out << rec.render(parse_output_format(a.format));
  if (r.perturbative_regime_exceeded) {
    err << "warning: |E4| > |E2|; the truncated series is probably outside its useful range (heuristic)\n";
  }
  return Ok;
}

struct ValidateArgs {
  int max_n = 3;
  std::string grid_scale = "1";
  std::string json_path;
  int basis = 120;
  int dual_max_n = 12;
};

int cmd_validate(const ValidateArgs& a, std::ostream& out, std::ostream& err) {
  if (a.max_n < 0) throw UsageFailure("--max-n must be >= 0");
  ValidationOptions opt;
  opt.oracle_max_n = a.max_n;
  opt.dual_route_max_n = a.dual_max_n;
  opt.oracle.basis_size = a.basis;
  opt.oracle.grid_scale = parse_rational_arg(a.grid_scale, "--grid-scale");
  if (opt.oracle.grid_scale.sign() <= 0) throw UsageFailure("--grid-scale must be positive");

  ValidationReport report;
  try {
    report = run_validation(opt);
  } catch (const std::invalid_argument& e) {
    throw UsageFailure(e.what());
  } catch (const std::exception& e) {
    err << "validation aborted: " << e.what() << "\n";
    return ValidationFailed;
  }

  auto section = [&](const std::string& title, const std::vector<CheckResult>& checks) {
    int passed = 0;
    for (const auto& c : checks) passed += c.passed ? 1 : 0;
    out << title << ": " << passed << "/" << checks.size() << " passed\n";
    for (const auto& c : checks) {
      if (!c.passed) out << "  FAIL " << c.name << ": " << c.detail << "\n";
    }
  };
  section("table1", report.table1);
  section("dual routes (n <= " + std::to_string(a.dual_max_n) + ")", report.dual_routes);
  for (const auto& o : report.oracle) {
    for (const auto& v : o.verdicts) out << (v.passed ? "  PASS " : "  FAIL ") << v.name << ": " << v.detail << "\n";
  }
  out << report.disputed.verdict_line() << "\n";
  const bool ok = report.passed();
  out << (ok ? "validation passed" : "validation FAILED") << "\n";
  if (!a.json_path.empty()) {
    std::ofstream f(a.json_path, std::ios::binary);
    if (!f) {
      err << "cannot write " << a.json_path << "\n";
      return ValidationFailed;
    }
    f << report.json();
  }
  return ok ? Ok : ValidationFailed;
}

}  // namespace

std::string table1_markdown() {
  OutputRecord rec;
  rec.columns = {"n", "l", "eps2 rational", "eps2 factorized", "eps4 rational", "eps4 factorized"};
  for (const auto& ref : table1_reference()) {
    const Table1Entry row = table1_row(ref.n, ref.l);
    rec.rows.push_back({std::to_string(row.n), std::to_string(row.l), row.eps2_rational, row.eps2_factorized,
                        row.eps4_rational, row.eps4_factorized});
  }
  return rec.markdown();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weak-field Zeeman coefficients of the planar hydrogenic atom", "zeeman2d"};
  app.require_subcommand(1);

  CoeffArgs ca;
  auto* coeff = app.add_subcommand("coeff", "Exact eps0/eps2/eps4 for one level or all levels up to n");
  coeff->add_option("N", ca.n, "principal quantum number");
  coeff->add_option("L", ca.l, "|m_l|");
  coeff->add_option("--all-up-to", ca.all_up_to, "every (n, l) with n <= NMAX");
  coeff->add_option("--format", ca.format, "md, csv or json");
  coeff->add_option("--digits", ca.digits, "significant digits of decimal columns");
  coeff->add_option("--route", ca.route, "closed or sturmian");

  EnergyArgs ea;
  auto* energy = app.add_subcommand("energy", "Term-by-term energy of one state in a field");
  energy->add_option("--n", ea.n)->required();
  energy->add_option("--l", ea.l)->required();
  energy->add_option("--ml", ea.ml)->required();
  energy->add_option("--ms", ea.ms, "+1/2 or -1/2");
  energy->add_option("--Z", ea.Z, "nuclear charge (exact)");
  energy->add_option("--B-over-B0", ea.b, "dimensionless field b (exact)");
  energy->add_option("--tesla", ea.tesla, "field in tesla, converted with B0 = 235051.75675 T");
  energy->add_option("--order", ea.order, "0, 1, 2 or 4");
  energy->add_flag("--spin", ea.spin, "include the spin Zeeman term");
  energy->add_option("--format", ea.format, "md, csv or json");
  energy->add_option("--digits", ea.digits);

  std::string table_format = "md";
  auto* table1 = app.add_subcommand("table1", "Reference coefficient table for n <= 4");
  table1->add_option("--format", table_format, "md, csv or json");

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "Run every cross-check; exit 1 on any failure");
  validate->add_option("--max-n", va.max_n, "oracle fits for n <= max-n");
  validate->add_option("--grid-scale", va.grid_scale, "multiplier of the default field window");
  validate->add_option("--json", va.json_path, "write the machine-readable report here");
  validate->add_option("--basis", va.basis, "Galerkin basis size");
  validate->add_option("--dual-max-n", va.dual_max_n, "exact route comparison for n <= this");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  }

  try {
    if (*coeff) {
      if (ca.all_up_to == 0 && (coeff->count("N") == 0 || coeff->count("L") == 0)) {
        throw UsageFailure("coeff needs N L or --all-up-to NMAX");
      }
      out << coeff_record(ca).render(parse_output_format(ca.format));
      return Ok;
    }
    if (*energy) return cmd_energy(ea, out, err);
    if (*table1) {
      const OutputFormat f = parse_output_format(table_format);
      if (f == OutputFormat::Markdown) {
        out << table1_markdown();
      } else {
        OutputRecord rec;
        rec.columns = {"n", "l", "eps2", "eps2_factorized", "eps4", "eps4_factorized"};
        for (const auto& ref : table1_reference()) {
          const Table1Entry r = table1_row(ref.n, ref.l);
          rec.rows.push_back({std::to_string(r.n), std::to_string(r.l), r.eps2_rational, r.eps2_factorized,
                              r.eps4_rational, r.eps4_factorized});
        }
        out << rec.render(f);
      }
      return Ok;
    }
    if (*validate) return cmd_validate(va, out, err);
  } catch (const UsageFailure& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  }
  return UsageError;
}

}  // namespace zeeman2d::cli
