#include <twistps/io.hpp>
#include <twistps/pipeline.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace twistps;
using io::json;

namespace {

struct RunConfig {
  std::string carrier = "rotation-gamma";
  std::optional<int> k, l, gamma;
  int order = 6;
  std::string format = "text";
  std::string out;
  std::uint64_t seed = NumericConfig{}.seed;
  int grid_points = NumericConfig{}.grid_points;
  bool all = false;
  bool jacobi = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TwistCarrier make_carrier(const RunConfig& cfg) {
  auto kind = parse_case(cfg.carrier);
  if (!kind) throw UsageError("unknown carrier " + cfg.carrier);
  try {
    switch (*kind) {
      case CarrierCase::RotationGamma:
        return TwistCarrier::rotation_gamma(cfg.k.value_or(1), cfg.l.value_or(2), cfg.gamma.value_or(3));
      case CarrierCase::RotationZero:
        if (cfg.gamma) throw UsageError("--gamma applies to rotation-gamma only");
        return TwistCarrier::rotation_zero(cfg.k.value_or(1), cfg.l.value_or(2));
      case CarrierCase::Boost:
        if (cfg.gamma) throw UsageError("--gamma applies to rotation-gamma only");
        return TwistCarrier::boost(cfg.k.value_or(1), cfg.l.value_or(2));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown carrier");
}

NumericConfig numeric_config(const RunConfig& cfg) {
  NumericConfig n;
  n.seed = cfg.seed;
  n.grid_points = cfg.grid_points;
  return n;
}

void require_format(const RunConfig& cfg, bool latex_ok) {
  if (cfg.format == "latex" && !latex_ok) throw UsageError("latex output is not available for this command");
}

int run_coproducts(const RunConfig& cfg, std::ostream& os) {
  require_format(cfg, false);
  const TwistCarrier c = make_carrier(cfg);
  const TwistedPoincare hopf(c, cfg.order);
  const auto cmp = verify_coproducts(hopf);
  bool ok = true;
  if (cfg.format == "json") {
    json a = json::array();
    for (const auto& x : cmp) {
      ok = ok && x.verdict != CoproductVerdict::Mismatch;
      a.push_back({{"generator", x.generator.name()},
                   {"verdict", verdict_name(x.verdict)},
                   {"readings", x.matching_readings},
                   {"terms", io::tensor_json(hopf.coproduct(x.generator))}});
    }
    os << json{{"carrier", io::carrier_json(c)}, {"order", cfg.order}, {"coproducts", a}}.dump(2) << "\n";
  } else {
    os << "# twisted coproducts, carrier " << c.describe() << ", order " << cfg.order << "\n";
    for (const auto& x : cmp) {
      ok = ok && x.verdict != CoproductVerdict::Mismatch;
      os << "Delta(" << x.generator.name() << ") = " << hopf.coproduct(x.generator).str() << "\n";
      os << "  closed form: " << verdict_name(x.verdict);
      for (const auto& r : x.matching_readings) os << " " << r;
      os << "\n";
    }
  }
  return ok ? 0 : 1;
}

int run_phase_space(const RunConfig& cfg, std::ostream& os) {
  const TwistCarrier c = make_carrier(cfg);
  const PhaseSpaceTable t = build_phase_space(c, cfg.order);
  const Report jac = jacobi_check(t);
  const DiscrepancyLedger ledger = compare_with_reference(t);
  if (cfg.format == "json")
    os << io::table_json(t, &ledger).dump(2) << "\n";
  else if (cfg.format == "latex")
    os << io::table_latex(t);
  else
    os << io::table_text(t);
  return jac.all_pass() ? 0 : 1;
}

int run_contract(const RunConfig& cfg, std::ostream& os) {
  const TwistCarrier c = make_carrier(cfg);
  const PhaseSpaceTable rel = build_phase_space(c, cfg.order);
  const LimitResult lim = contract(rel);
  const Report props = contraction_properties(rel);
  const DiscrepancyLedger ledger = verify_contraction(rel);
  if (cfg.format == "json") {
    json j = io::table_json(lim.table, &ledger);
    j["checks"] = io::report_json(props);
    os << j.dump(2) << "\n";
  } else if (cfg.format == "latex") {
    os << io::table_latex(lim.table);
  } else {
    os << io::table_text(lim.table) << io::report_text(props) << io::ledger_text(ledger);
  }
  return props.all_pass() ? 0 : 1;
}

std::string bound_latex(const UncertaintyBound& b, const std::string& param) {
  std::string lhs = "\\Delta(" + b.a.latex() + ")\\Delta(" + b.b.latex() + ") \\geq ";
  const auto mag = b.closed ? magnitude(*b.closed) : std::nullopt;
  if (!mag) return lhs + "\\frac{1}{2}|\\langle \\text{" + b.commutator.str() + "} \\rangle|";
  if (mag->shape == Shape::Constant && mag->s_power == 0 && mag->prefactor == Scalar(1)) return lhs + "\\frac{1}{2}";
  return lhs + "\\frac{1}{2}|\\langle " + to_latex(*mag, param) + " \\rangle|";
}

int run_uncertainty(const RunConfig& cfg, std::ostream& os) {
  const TwistCarrier c = make_carrier(cfg);
  const PhaseSpaceTable rel = build_phase_space(c, cfg.order);
  const PhaseSpaceTable gal = contract(rel).table;
  const NumericConfig ncfg = numeric_config(cfg);
  bool ok = true;
  json j = json::array();
  std::ostringstream text, latex;
  for (const PhaseSpaceTable* t : {&rel, &gal}) {
    const auto bs = bounds(*t);
    const Report cmp = cfg.order >= 3 ? compare_bounds(*t) : Report{"bounds comparison skipped below order 3", {}};
    const MomentumRealization r = realize(*t);
    const Report vf = vector_field_check(r);
    const NumericSummary num = numeric_check(*t, ncfg);
    ok = ok && vf.all_pass() && num.report.all_pass();
    json jb = json::array();
    text << "# " << regime_name(t->regime) << " bounds, carrier " << c.describe() << ", s = 1/(2 " << t->parameter
         << ")\n";
    latex << "% " << regime_name(t->regime) << " bounds, carrier " << c.describe() << "\n\\begin{gather*}\n";
    for (size_t i = 0; i < bs.size(); ++i) {
      const auto& b = bs[i];
      const std::string rhs = b.closed ? bound_rhs_text(*b.closed) : "1/2*|<" + b.commutator.str() + ">|";
      jb.push_back({{"pair", {b.a.name(), b.b.name()}}, {"rhs", rhs}});
      text << "D(" << b.a.display() << ")D(" << b.b.display() << ") >= " << rhs << "\n";
      latex << bound_latex(b, io::latex_parameter(t->parameter)) << (i + 1 < bs.size() ? " \\\\\n" : "\n");
    }
    latex << "\\end{gather*}\n";
    text << io::report_text(cmp) << io::report_text(vf) << io::report_text(num.report, false);
    j.push_back({{"regime", regime_name(t->regime)},
                 {"parameter", t->parameter},
                 {"bounds", jb},
                 {"comparison", io::report_json(cmp)},
                 {"vector_fields", io::report_json(vf)},
                 {"numeric", io::report_json(num.report)},
                 {"samples", num.samples}});
  }
  if (cfg.format == "json")
    os << json{{"carrier", io::carrier_json(c)}, {"order", cfg.order}, {"seed", cfg.seed}, {"tables", j}}.dump(2)
       << "\n";
  else if (cfg.format == "latex")
    os << latex.str();
  else
    os << text.str();
  return ok ? 0 : 1;
}

int run_verify(const RunConfig& cfg, std::ostream& os) {
  require_format(cfg, false);
  std::vector<TwistCarrier> carriers = cfg.all ? default_carriers() : std::vector<TwistCarrier>{make_carrier(cfg)};
  VerifyOptions opt;
  opt.order = cfg.order;
  opt.jacobi_only = cfg.jacobi;
  opt.numeric = numeric_config(cfg);
  bool ok = true;
  json reports = json::array();
  DiscrepancyLedger ledger;
  std::ostringstream text;
  for (const auto& c : carriers) {
    const VerifyResult r = verify_carrier(c, opt);
    ok = ok && r.pass();
    for (const auto& rep : r.reports) {
      reports.push_back(io::report_json(rep));
      text << io::report_text(rep);
    }
    ledger.append(r.ledger);
  }
  const auto bad = ledger.unexplained();
  if (cfg.format == "json") {
    os << json{{"order", cfg.order},
               {"pass", ok},
               {"reports", reports},
               {"ledger", io::ledger_json(ledger)},
               {"unexplained", bad.size()}}
              .dump(2)
       << "\n";
  } else {
    os << text.str();
    if (!ledger.entries.empty()) {
      os << "# ledger: " << ledger.entries.size() << " rows, " << ledger.count(Verdict::Match) << " match, "
         << ledger.count(Verdict::SignFlip) << " sign-flip, " << ledger.count(Verdict::Mismatch) << " mismatch, "
         << bad.size() << " unexplained\n";
      os << io::ledger_text(ledger);
    }
    os << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted Poincare phase spaces: coproducts, phase-space tables, contraction and uncertainty bounds"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a TOML/INI file");
  RunConfig cfg;
  app.add_option("--carrier", cfg.carrier, "rotation-gamma | rotation-zero | boost")
      ->check(CLI::IsMember({"rotation-gamma", "rotation-zero", "boost"}));
  app.add_option("--k", cfg.k, "first carrier index");
  app.add_option("--l", cfg.l, "second carrier index");
  app.add_option("--gamma", cfg.gamma, "momentum index of rotation-gamma");
  app.add_option("--order", cfg.order, "truncation order N")->check(CLI::Range(0, 24));
  app.add_option("--format", cfg.format, "text | json | latex")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--out", cfg.out, "output file (stdout when omitted)");
  app.add_option("--seed", cfg.seed, "seed of the numeric states");
  app.add_option("--grid-points", cfg.grid_points, "quadrature points per axis")->check(CLI::Range(16, 1 << 20));

  auto* cop = app.add_subcommand("coproducts", "twisted coproducts and closed-form check")->fallthrough();
  auto* ps = app.add_subcommand("phase-space", "relativistic phase-space table")->fallthrough();
  auto* con = app.add_subcommand("contract", "Galilean contraction of the table")->fallthrough();
  auto* unc = app.add_subcommand("uncertainty", "uncertainty bounds and numeric checks")->fallthrough();
  auto* ver = app.add_subcommand("verify", "run verification suites")->fallthrough();
  ver->add_flag("--all", cfg.all, "all three default carriers");
  ver->add_flag("--jacobi", cfg.jacobi, "Jacobi closure only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::ostringstream buf;
  int code = 0;
  try {
    if (cop->parsed())
      code = run_coproducts(cfg, buf);
    else if (ps->parsed())
      code = run_phase_space(cfg, buf);
    else if (con->parsed())
      code = run_contract(cfg, buf);
    else if (unc->parsed())
      code = run_uncertainty(cfg, buf);
    else
      code = run_verify(cfg, buf);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (cfg.out.empty()) {
    std::cout << buf.str();
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << cfg.out << "\n";
      return 2;
    }
    f << buf.str();
  }
  return code;
}
