#include "dmb/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace dmb {

json to_json(const Interval& x) { return {{"mid", x.mid_d()}, {"rad", x.rad_d()}}; }

json to_json(const CInterval& z) {
  Complex m = z.mid();
  return {{"re", m.re.to_double()}, {"im", m.im.to_double()}, {"rad", z.rad().to_double(MPFR_RNDU)}};
}

json to_json(const RootSet& roots) {
  json out = json::array();
  for (const auto& e : roots.entries) {
    out.push_back({{"re", e.value.re.to_string(30)},
                   {"im", e.value.im.to_string(30)},
                   {"rad", e.radius.to_double(MPFR_RNDU)},
                   {"multiplicity", e.multiplicity}});
  }
  return out;
}

json to_json(const VandermondeCertificate& cert) {
  json steps = json::array();
  for (const auto& f : cert.step_factors) steps.push_back(to_json(f));
  json rows = json::array();
  for (const auto& r : cert.rows) rows.push_back({{"norm", to_json(r.norm)}, {"bound", to_json(r.bound)}});
  return {{"det_w", to_json(cert.det_w)},
          {"det_w1", to_json(cert.det_w1)},
          {"edge_product", to_json(cert.edge_product)},
          {"step_factors", steps},
          {"row_norms", rows},
          {"hadamard", to_json(cert.hadamard_rhs)},
          {"identity_certified", cert.identity_certified},
          {"relative_discrepancy", cert.relative_discrepancy},
          {"hadamard_certified", cert.hadamard_certified}};
}

json to_json(const InvariantBundle& inv) {
  json out = {{"mahler", to_json(inv.mahler)},
              {"sdisc_abs", to_json(inv.sdisc_abs)},
              {"sdisc_index", inv.sdisc_index},
              {"degree", inv.degree},
              {"distinct_roots", inv.distinct}};
  out["disc_abs"] = inv.disc_abs ? to_json(*inv.disc_abs) : json(nullptr);
  if (inv.sdisc_exact) out["sdisc_exact"] = inv.sdisc_exact->to_string();
  if (inv.disc_exact) out["disc_exact"] = inv.disc_exact->to_string();
  return out;
}

json to_json(const BoundReport& rep, const Polynomial* poly, const Analysis* analysis) {
  json edges = json::array();
  for (const auto& [a, b] : rep.edges) edges.push_back({a, b});
  json out = {
      {"variant", to_string(rep.variant)},
      {"polynomial", poly != nullptr ? json(to_string(*poly)) : json(nullptr)},
      {"graph", {{"edges", edges}}},
      {"lhs", to_json(rep.lhs)},
      {"rhs", to_json(rep.rhs)},
      {"components",
       {{"sdisc_sqrt", to_json(rep.components.sdisc_sqrt)},
        {"mahler_power", to_json(rep.components.mahler_power)},
        {"edge_factor", to_json(rep.components.edge_factor)},
        {"r_power", to_json(rep.components.r_power)},
        {"multiplicity_factor", to_json(rep.components.multiplicity_factor)}}},
      {"margin", rep.margin.to_double(MPFR_RNDD)},
      {"verdict", to_string(rep.verdict)},
      {"precision_bits", rep.precision},
      {"degree", rep.degree},
      {"distinct_roots", rep.distinct},
      {"degenerate", rep.degenerate},
  };
  out["certificate"] = rep.certificate ? to_json(*rep.certificate) : json(nullptr);
  if (rep.split) {
    json e0 = json::array(), e1 = json::array();
    for (const auto& [a, b] : rep.split->support) e0.push_back({a, b});
    for (const auto& [a, b] : rep.split->doubled) e1.push_back({a, b});
    out["split"] = {{"subset", rep.split->subset}, {"e0", e0}, {"e1", e1}};
  }
  if (analysis != nullptr) {
    out["roots"] = to_json(analysis->roots);
    out["invariants"] = to_json(analysis->inv);
  }
  if (!rep.note.empty()) out["note"] = rep.note;
  return out;
}

json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

void write_atomic(const std::string& path, const std::string& contents) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp + " for writing");
    f << contents;
    f.flush();
    if (!f) throw std::runtime_error("failed writing " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
  }
}

}  // namespace dmb
