#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fanohyp/catalog.hpp"
#include "fanohyp/export.hpp"
#include "fanohyp/golden.hpp"
#include "fanohyp/inequality.hpp"
#include "fanohyp/ledger.hpp"

namespace fanohyp::cli {

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  std::string subcommand;
  int max_weight = kDefaultMaxWeight;
  unsigned threads = 0;
  std::string out;
  std::string format = "json";
  std::string catalog_file;
  std::string report;
  int gimel = 0;
  bool json = false;
  std::string system;
  bool certificate = false;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

inline Catalog load_catalog(const CliConfig& cfg) {
  if (cfg.catalog_file.empty()) return enumerate_families(cfg.max_weight, cfg.threads);
  try {
    return catalog_from_json(Json::parse(read_file(cfg.catalog_file)));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("bad catalog file " + cfg.catalog_file + ": " + e.what());
  }
}

inline std::string ambient(const FamilyRecord& r) {
  std::string s = "1";
  for (int w : r.weights()) s += "," + std::to_string(w);
  return s;
}

inline std::string render_family(const FamilyRecord& r) {
  std::ostringstream o;
  o << "family " << r.gimel << "\n";
  o << "weights " << ambient(r) << "\n";
  o << "degree " << r.degree() << "\n";
  o << "-K^3 " << r.kx3 << "\n";
  o << "basket";
  if (r.basket.entries.empty()) o << " empty";
  o << "\n";
  for (const auto& p : r.points) {
    o << "  " << p.count << " \xC3\x97 " << p.qtype.str() << " at " << p.locus.str() << "\n";
    o << "    ku3 " << p.ku3 << " (" << to_string(p.sign) << ")\n";
    o << "    involutions";
    if (p.involutions.empty()) o << " none";
    for (const auto& i : p.involutions) o << " " << to_string(i.kind) << "(" << i.j << ")";
    o << "\n    children";
    if (p.children.empty()) o << " none";
    for (const auto& c : p.children) o << " " << c.str();
    o << "\n";
    for (const auto& i : p.involutions) {
      auto b = mu_bounds(r.ws, p.qtype, i.j, i.kind);
      o << "    mu bounds " << to_string(i.kind) << "(" << i.j << "):";
      if (b.upper_quadratic) o << " mu <= " << *b.upper_quadratic << " <= " << *b.upper_cap;
      if (b.lower_elliptic) o << " mu > " << *b.lower_elliptic;
      o << "\n";
    }
  }
  return o.str();
}

inline int cmd_enumerate(const CliConfig& cfg, std::ostream& out) {
  Catalog c = enumerate_families(cfg.max_weight, cfg.threads);
  if (!cfg.out.empty()) {
    write_file(cfg.out, export_catalog(c, cfg.format == "csv" ? Format::Csv : Format::Json));
    out << "wrote " << c.size() << " families to " << cfg.out << "\n";
    return kOk;
  }
  for (const auto& r : c)
    out << r.gimel << "  P(" << ambient(r) << ")  degree " << r.degree() << "  -K^3 " << r.kx3 << "\n";
  out << c.size() << " families\n";
  return kOk;
}

inline int cmd_family(const CliConfig& cfg, std::ostream& out) {
  Catalog c = load_catalog(cfg);
  const FamilyRecord* r;
  try {
    r = &family(c, cfg.gimel);
  } catch (const OutOfRange& e) {
    throw UsageError(e.what());
  }
  if (cfg.json) out << record_to_json(*r).dump(2) << "\n";
  else out << render_family(*r);
  return kOk;
}

inline int cmd_ledger_verify(const CliConfig& cfg, std::ostream& out) {
  Catalog c = load_catalog(cfg);
  auto rep = verify_all(c);
  auto list = [](const IndexSet& s) {
    std::string t;
    for (int g : s) t += (t.empty() ? "" : ",") + std::to_string(g);
    return "{" + t + "}";
  };
  for (const auto& r : rep.claims) {
    out << r.id << " " << to_string(r.status);
    if (!r.convention.empty()) out << " [" << r.convention << "]";
    if (!r.missing.empty()) out << " missing " << list(r.missing);
    if (!r.extra.empty()) out << " extra " << list(r.extra);
    if (r.expected_count) out << " count " << r.computed.size() << " of expected " << *r.expected_count;
    out << "\n";
  }
  for (const auto& f : rep.fm) {
    out << f.id << " " << to_string(f.verdict) << (f.certificate_ok ? " checked" : " UNCHECKED");
    if (f.discrepancy()) out << " DISCREPANCY expected " << to_string(f.expected);
    out << "\n";
  }
  out << "overall " << to_string(rep.overall) << "\n";
  if (!cfg.report.empty()) write_file(cfg.report, report_to_json(rep).dump(2) + "\n");
  return rep.overall == ClaimStatus::Mismatch ? kMismatch : kOk;
}

inline int cmd_lp_check(const CliConfig& cfg, std::ostream& out) {
  LinearSystem sys;
  bool golden = false;
  for (const auto& id : golden_ids()) golden |= id == cfg.system;
  if (golden) {
    sys = golden_system(cfg.system);
  } else {
    try {
      sys = parse_system(read_file(cfg.system));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  auto res = fm_feasibility(sys);
  if (auto* inf = std::get_if<Infeasible>(&res)) {
    bool ok = check_certificate(sys, inf->certificate);
    out << "INFEASIBLE\n";
    if (cfg.certificate) {
      const auto& rows = sys.constraints();
      for (std::size_t k = 0; k < rows.size(); ++k)
        if (!inf->certificate.multipliers[k].is_zero())
          out << "  " << inf->certificate.multipliers[k] << " x [" << format_constraint(sys, rows[k]) << "]\n";
      out << "certificate " << (ok ? "valid" : "INVALID") << "\n";
    }
    return ok ? kOk : kMismatch;
  }
  const auto& w = std::get<Feasible>(res).witness;
  out << "FEASIBLE\n";
  for (std::size_t k = 0; k < w.size(); ++k) out << "  " << sys.variables()[k] << " = " << w[k] << "\n";
  return satisfies(sys, w) ? kOk : kMismatch;
}

/// Runs the command line; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CliConfig cfg;
  CLI::App app{"Weighted Fano threefold hypersurface calculator", "fanohyp"};
  app.require_subcommand(1);

  auto* en = app.add_subcommand("enumerate", "Build the catalog of families");
  en->add_option("--max-weight", cfg.max_weight, "Largest weight searched")->check(CLI::Range(1, 1000));
  en->add_option("--out", cfg.out, "Output file");
  en->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  en->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");

  auto* fa = app.add_subcommand("family", "Show one family");
  fa->add_option("gimel", cfg.gimel, "Family ordinal")->required();
  fa->add_flag("--json", cfg.json, "Print the JSON record");
  fa->add_option("--catalog", cfg.catalog_file, "Read a previously exported JSON catalog");
  fa->add_option("--max-weight", cfg.max_weight, "Largest weight searched")->check(CLI::Range(1, 1000));

  auto* le = app.add_subcommand("ledger", "Index-set claims");
  le->require_subcommand(1);
  auto* lv = le->add_subcommand("verify", "Evaluate every claim");
  lv->add_option("--report", cfg.report, "Write the JSON report here");
  lv->add_option("--catalog", cfg.catalog_file, "Read a previously exported JSON catalog");

  auto* lp = app.add_subcommand("lp", "Linear inequality systems");
  lp->require_subcommand(1);
  auto* lc = lp->add_subcommand("check", "Decide feasibility");
  lc->add_option("system", cfg.system, "Registered system id or a file")->required();
  lc->add_flag("--certificate", cfg.certificate, "Print the infeasibility certificate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, eo;
    int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (en->parsed()) return cmd_enumerate(cfg, out);
    if (fa->parsed()) return cmd_family(cfg, out);
    if (lv->parsed()) return cmd_ledger_verify(cfg, out);
    if (lc->parsed()) return cmd_lp_check(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CountMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}

} // namespace fanohyp::cli
