// dmbound: command-line front end for the generalized Davenport-Mahler bound.
//
// Exit status: 0 when the bound holds (or the command succeeded), 2 when the
// verdict stays inconclusive at the precision ceiling, 1 on input errors and
// 3 if a bound is certified violated.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dmb/bound.hpp"
#include "dmb/parse.hpp"
#include "dmb/report.hpp"
#include "dmb/sweep.hpp"

namespace {

constexpr int kHolds = 0;
constexpr int kInputError = 1;
constexpr int kInconclusive = 2;
constexpr int kViolated = 3;

struct Common {
  std::string poly;
  std::string graph = "path";
  std::string variant = "main";
  long precision = 128;
  long ceiling = 1024;
  std::string subset;
  std::string hints;
  std::string out;
  bool serial = false;
};

void emit(const dmb::json& j, const std::string& out) {
  std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    dmb::write_atomic(out, text);
  }
}

int verdict_status(dmb::Verdict v) {
  switch (v) {
    case dmb::Verdict::holds: return kHolds;
    case dmb::Verdict::violated: return kViolated;
    default: return kInconclusive;
  }
}

dmb::Variant variant_or_throw(const std::string& name) {
  auto v = dmb::parse_variant(name);
  if (!v) throw std::invalid_argument("unknown variant '" + name + "'");
  return *v;
}

dmb::VerifyRequest make_request(const Common& c) {
  dmb::validate_precision(c.precision);
  dmb::validate_precision(c.ceiling);
  if (c.ceiling < c.precision) throw std::invalid_argument("ceiling is below the starting precision");
  dmb::VerifyRequest req;
  req.poly = dmb::parse_polynomial(c.poly, c.precision);
  req.variant = variant_or_throw(c.variant);
  req.graph = dmb::parse_graph(c.graph);
  if (!c.subset.empty()) req.subset = dmb::parse_subset(c.subset);
  if (!c.hints.empty()) req.hints = dmb::parse_hints(c.hints);
  if (req.variant == dmb::Variant::sep_product && req.subset.empty()) {
    throw std::invalid_argument("sep_product needs --subset");
  }
  req.precision = c.precision;
  req.ceiling = c.ceiling;
  req.parallel = !c.serial;
  return req;
}

int run_verify(const Common& c) {
  dmb::VerifyRequest req = make_request(c);
  dmb::VerifyOutcome out = dmb::verify(req);
  const dmb::Analysis* a = out.analysis ? &*out.analysis : nullptr;
  dmb::json j = dmb::to_json(out.report, &req.poly, a);
  j["initial_verdict"] = dmb::to_string(out.initial_verdict);
  j["initial_precision_bits"] = out.initial_precision;
  emit(j, c.out);
  return verdict_status(out.report.verdict);
}

int run_certificate(const Common& c) {
  dmb::VerifyRequest req = make_request(c);
  if (req.variant == dmb::Variant::sep_product) throw std::invalid_argument("certificate needs an explicit graph");
  req.variant = dmb::Variant::main;
  dmb::VerifyOutcome out = dmb::verify(req);
  dmb::json j;
  j["polynomial"] = dmb::to_string(req.poly);
  j["precision_bits"] = out.report.precision;
  if (out.analysis) j["roots"] = dmb::to_json(out.analysis->roots);
  j["edges"] = out.report.edges;
  if (out.report.certificate) {
    j["certificate"] = dmb::to_json(*out.report.certificate);
  } else {
    j["certificate"] = nullptr;
    j["note"] = out.report.degenerate ? "single distinct root: nothing to reduce" : out.report.note;
  }
  emit(j, c.out);
  if (out.report.degenerate) return kHolds;
  return out.report.certificate && out.report.certificate->conclusive() ? kHolds : kInconclusive;
}

int run_invariants(const Common& c) {
  dmb::validate_precision(c.precision);
  dmb::Polynomial p = dmb::parse_polynomial(c.poly, c.precision);
  std::optional<dmb::Analysis> a;
  std::string note;
  for (long prec = c.precision; prec <= c.ceiling; prec *= 2) {
    try {
      a = dmb::analyze(p, dmb::RootOptions{prec, 0, !c.serial, std::nullopt});
      break;
    } catch (const dmb::RootCertificationError& e) {
      note = e.what();
    }
  }
  if (!a) {
    dmb::json j = dmb::error_json("certification", note);
    emit(j, c.out);
    return kInconclusive;
  }
  dmb::json j = dmb::to_json(a->inv);
  j["polynomial"] = dmb::to_string(p);
  j["precision_bits"] = a->precision();
  j["roots"] = dmb::to_json(a->roots);
  emit(j, c.out);
  return kHolds;
}

struct SweepArgs {
  std::size_t count = 1000;
  std::uint64_t seed = 42;
  std::size_t max_degree = 12;
  int max_multiplicity = 4;
  std::vector<std::string> presets;
  std::string variant = "main";
  long precision = 128;
  long ceiling = 512;
  bool monic = false;
  bool detailed = false;
  bool serial = false;
  std::string out;
};

int run_sweep(const SweepArgs& s) {
  dmb::validate_precision(s.precision);
  dmb::validate_precision(s.ceiling);
  dmb::SweepParams params;
  params.count = s.count;
  params.seed = s.seed;
  params.max_degree = s.max_degree;
  params.max_multiplicity = s.max_multiplicity;
  if (!s.presets.empty()) params.presets = s.presets;
  for (const auto& name : params.presets) {
    if (name != "random" && !dmb::parse_preset(name)) throw std::invalid_argument("unknown preset '" + name + "'");
  }
  params.variant = variant_or_throw(s.variant);
  if (params.variant != dmb::Variant::main && params.variant != dmb::Variant::sep_product) {
    throw std::invalid_argument("sweep supports the main and sep_product variants");
  }
  params.precision = s.precision;
  params.ceiling = s.ceiling;
  params.monic = s.monic;
  dmb::SweepSummary summary = s.serial ? dmb::run_sweep_serial(params) : dmb::run_sweep(params);
  emit(dmb::to_json(summary, s.detailed), s.out);
  if (summary.violations > 0 || summary.errors > 0) return kViolated;
  if (summary.unresolved > 0) return kInconclusive;
  return kHolds;
}

void add_common(CLI::App* cmd, Common& c, bool graph_options) {
  cmd->add_option("--poly", c.poly, "polynomial: expanded, factored, or JSON coefficients")->required();
  cmd->add_option("--precision", c.precision, "starting precision in bits (power of two, 64..1024)");
  cmd->add_option("--ceiling", c.ceiling, "largest precision tried (power of two, 64..1024)");
  cmd->add_option("--out", c.out, "write the JSON report here instead of stdout");
  cmd->add_flag("--serial", c.serial, "use the serial root-finding kernel");
  if (graph_options) {
    cmd->add_option("--graph,--preset", c.graph, "preset name or {\"edges\": [[i, j], ...]}");
    cmd->add_option("--subset", c.subset, "sep_product root subset, e.g. [0, 2]");
    cmd->add_option("--hints", c.hints, "remark_pairs hints, e.g. [[0, 1, 2.5]]");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Davenport-Mahler bound for graphs on polynomial roots"};
  app.require_subcommand(1);

  Common verify_args, cert_args, inv_args;
  CLI::App* verify = app.add_subcommand("verify", "check the bound for one polynomial and graph");
  add_common(verify, verify_args, true);
  verify->add_option("--variant", verify_args.variant,
                     "classical, main, remark_degree, remark_pairs or sep_product");

  CLI::App* cert = app.add_subcommand("certificate", "dump the Vandermonde reduction certificate");
  add_common(cert, cert_args, true);

  CLI::App* inv = app.add_subcommand("invariants", "Mahler measure, discriminant and subdiscriminant");
  add_common(inv, inv_args, false);

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "randomized soundness campaign");
  sweep->add_option("--count", sweep_args.count, "number of instances");
  sweep->add_option("--seed", sweep_args.seed, "master seed");
  sweep->add_option("--max-degree", sweep_args.max_degree, "largest degree");
  sweep->add_option("--max-multiplicity", sweep_args.max_multiplicity, "largest root multiplicity");
  sweep->add_option("--preset", sweep_args.presets, "graph presets to draw from (repeatable)");
  sweep->add_option("--variant", sweep_args.variant, "main or sep_product");
  sweep->add_option("--precision", sweep_args.precision, "starting precision in bits");
  sweep->add_option("--ceiling", sweep_args.ceiling, "largest precision tried");
  sweep->add_flag("--monic", sweep_args.monic, "generate monic polynomials only");
  sweep->add_flag("--detailed", sweep_args.detailed, "include every instance in the report");
  sweep->add_flag("--serial", sweep_args.serial, "run instances on one thread");
  sweep->add_option("--out", sweep_args.out, "write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << dmb::error_json("usage", e.what()).dump(2) << "\n";
    return kInputError;
  }

  const std::string& out = verify->parsed()  ? verify_args.out
                           : cert->parsed()  ? cert_args.out
                           : inv->parsed()   ? inv_args.out
                                             : sweep_args.out;
  try {
    if (verify->parsed()) return run_verify(verify_args);
    if (cert->parsed()) return run_certificate(cert_args);
    if (inv->parsed()) return run_invariants(inv_args);
    return run_sweep(sweep_args);
  } catch (const dmb::ParseError& e) {
    emit(dmb::error_json("parse", e.what()), out);
  } catch (const dmb::GraphError& e) {
    emit(dmb::error_json("graph", e.what()), out);
  } catch (const dmb::PreconditionError& e) {
    emit(dmb::error_json("precondition", e.what()), out);
  } catch (const std::invalid_argument& e) {
    emit(dmb::error_json("input", e.what()), out);
  } catch (const std::exception& e) {
    emit(dmb::error_json("internal", e.what()), out);
    return kViolated;
  }
  return kInputError;
}
