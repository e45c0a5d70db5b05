#include "tvq/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "tvq/catalog.hpp"
#include "tvq/constructions.hpp"
#include "tvq/error.hpp"
#include "tvq/homology.hpp"
#include "tvq/reference.hpp"
#include "tvq/report_format.hpp"
#include "tvq/statesum.hpp"

namespace tvq {

namespace {

struct Subject {
  std::string label;
  std::optional<Triangulation> tri;  // empty: no fixture available
  int p = 0;                         // lens parameters for reference lookup; 0 = none
  int q = 0;
  std::optional<std::string> reference_name;
};

const ReferenceRow* reference_for(const Subject& s, int r) {
  if (s.reference_name) return find_reference(*s.reference_name, r);
  if (s.p > 0) return find_reference(s.p, s.q, r);
  return nullptr;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Subject subject_from_entry(const CatalogEntry& e) {
  Subject s;
  s.label = e.name;
  s.tri = Triangulation::build(e.spec());
  s.p = e.p;
  s.q = e.q;
  return s;
}

// The manifold chosen by --input or --manifold; empty when neither is given.
std::optional<Subject> selected_subject(const RunConfig& cfg) {
  if (cfg.input) {
    Subject s;
    s.label = std::filesystem::path(*cfg.input).filename().string();
    s.tri = Triangulation::build(GluingSpec::parse(read_file(*cfg.input)));
    s.reference_name = cfg.reference;
    return s;
  }
  if (cfg.manifold) {
    Subject s = subject_from_entry(catalog_lookup(*cfg.manifold));
    if (cfg.reference) s.reference_name = cfg.reference;
    return s;
  }
  return std::nullopt;
}

// Table manifolds in reference order, then the remaining catalog entries.
std::vector<Subject> all_subjects(bool include_gaps) {
  std::vector<Subject> out;
  std::vector<const CatalogEntry*> used;
  std::string last;
  for (const auto& row : reference_rows()) {
    if (row.manifold == last) continue;
    last = std::string(row.manifold);
    const CatalogEntry* match = nullptr;
    for (const auto& e : catalog()) {
      if (row.p == 0) break;
      if (e.p == row.p && (row.p == 1 ? e.name == "S3" : canonical_lens_q(e.p, e.q) == canonical_lens_q(row.p, row.q))) {
        match = &e;
        break;
      }
    }
    if (match) {
      out.push_back(subject_from_entry(*match));
      used.push_back(match);
    } else if (include_gaps) {
      Subject s;
      s.label = last;
      s.reference_name = last;
      out.push_back(std::move(s));
    }
  }
  for (const auto& e : catalog()) {
    if (std::find(used.begin(), used.end(), &e) == used.end()) out.push_back(subject_from_entry(e));
  }
  return out;
}

void validate(const RunConfig& cfg) {
  if (cfg.r_min < 3 || cfg.r_min > cfg.r_max) throw InvalidArgument("need 3 <= r_min <= r_max");
  if (cfg.digits < 1) throw InvalidArgument("digits must be at least 1");
  if (cfg.workers < 1) throw InvalidArgument("workers must be at least 1");
  if (cfg.format != "table" && cfg.format != "json" && cfg.format != "csv") {
    throw InvalidArgument("unknown format " + cfg.format);
  }
  if (cfg.input && cfg.manifold) throw InvalidArgument("--input and --manifold are exclusive");
}

void emit_reports(const RunConfig& cfg, const std::vector<Subject>& subjects, std::ostream& out) {
  if (cfg.format == "csv") out << csv_header() << "\n";
  bool first_block = true;
  for (const auto& s : subjects) {
    if (!s.tri) {
      if (cfg.format == "table") {
        out << (first_block ? "" : "\n") << s.label << "\nfixture required\n";
      } else if (cfg.format == "json") {
        out << nlohmann::json{{"manifold", s.label}, {"status", "fixture required"}}.dump() << "\n";
      } else {
        out << '"' << s.label << "\",,,,,,,,,,,,,fixture required\n";
      }
      first_block = false;
      continue;
    }
    std::vector<TableRow> rows;
    for (int r = cfg.r_min; r <= cfg.r_max; ++r) {
      const InvariantReport rep = compute_report(*s.tri, QSpec::standard(r), cfg.workers);
      std::optional<RowComparison> cmp;
      if (const ReferenceRow* row = reference_for(s, r)) cmp = compare_with_reference(rep, *row);
      const RowComparison* ref = cmp ? &*cmp : nullptr;
      if (cfg.format == "table") {
        rows.push_back(table_row(rep, cfg.digits, ref));
      } else if (cfg.format == "json") {
        out << report_json(s.label, rep, ref).dump() << "\n";
      } else {
        out << csv_row(s.label, rep, cfg.digits, ref) << "\n";
      }
    }
    if (cfg.format == "table") {
      out << (first_block ? "" : "\n") << render_table(s.label, rows);
      first_block = false;
    }
  }
}

int cmd_verify(const RunConfig& cfg, const std::vector<Subject>& subjects, std::ostream& out) {
  int failed = 0;
  int flagged = 0;
  int total = 0;
  const bool json = cfg.format == "json";
  auto line = [&](const char* status, const std::string& subject, int r, const std::string& what,
                  const std::string& detail = "") {
    ++total;
    if (json) {
      nlohmann::json j{{"status", status}, {"subject", subject}, {"r", r}, {"check", what}};
      if (!detail.empty()) j["detail"] = detail;
      out << j.dump() << "\n";
    } else {
      out << status << "  " << subject << " r=" << r << "  " << what;
      if (!detail.empty()) out << "  (" << detail << ")";
      out << "\n";
    }
  };

  for (int r = cfg.r_min; r <= cfg.r_max; ++r) {
    const WeightIdentityReport w = check_weight_identities(quantum_tables(QSpec::standard(r)));
    const std::pair<const char*, bool> items[] = {{"sum of w_{2t}^4 = -r/(q-q^{-1})^2", w.even_fourth_powers},
                                                  {"even loop identity for every even j", w.even_loop},
                                                  {"full loop identity equals omega^2 for every j", w.full_loop}};
    for (const auto& [name, ok] : items) {
      line(ok ? "PASS" : "FAIL", "weights", r, name);
      failed += ok ? 0 : 1;
    }
  }

  for (const auto& s : subjects) {
    if (!s.tri) continue;
    for (int r = cfg.r_min; r <= cfg.r_max; ++r) {
      const IdentityReport rep = verify_identities(*s.tri, r, cfg.workers);
      for (const auto& c : rep.checks) {
        line(c.passed ? "PASS" : "FAIL", s.label, r, c.name, c.detail);
        failed += c.passed ? 0 : 1;
      }
      const bool rational = rep.at_q.checks.rational;
      const bool real = rep.at_q.checks.real;
      line(rational ? "PASS" : "FAIL", s.label, r, "class sums lie in Q(q)");
      line(real ? "PASS" : "FAIL", s.label, r, "invariants are real");
      failed += (rational ? 0 : 1) + (real ? 0 : 1);

      if (const ReferenceRow* row = reference_for(s, r)) {
        const RowComparison cmp = compare_with_reference(rep.at_q, *row);
        for (const auto& sc : cmp.summands) {
          const std::string what = "reference " + sc.name;
          if (sc.status == MatchStatus::Match) {
            line("PASS", s.label, r, what);
          } else if (sc.status == MatchStatus::PrintedPolynomialInconsistent) {
            ++flagged;
            line("FLAG", s.label, r, what,
                 "printed polynomial " + sc.expected_poly + " is not real; computed " + sc.computed_poly + " = " +
                     format_decimal(sc.computed_value, cfg.digits) + " agrees with the printed decimal");
          } else {
            ++failed;
            line("FAIL", s.label, r, what,
                 "printed " + sc.expected_poly + " = " + format_decimal(sc.expected_value, cfg.digits) +
                     ", computed " + sc.computed_poly + " = " + format_decimal(sc.computed_value, cfg.digits));
          }
        }
        const std::string what = "reference TV*";
        line(cmp.tvstar_match ? "PASS" : "FAIL", s.label, r, what,
             cmp.tvstar_match ? "" : "computed " + format_decimal(cmp.tvstar_computed, cfg.digits));
        failed += cmp.tvstar_match ? 0 : 1;
      }
    }
  }
  if (!json) out << total << " checks, " << failed << " failed, " << flagged << " flagged\n";
  return failed == 0 ? kExitOk : kExitIdentity;
}

void cmd_catalog(const RunConfig& cfg, std::ostream& out) {
  struct Line {
    std::string name, aliases, h1, construction;
    int tets, vertices, edges;
  };
  std::vector<Line> lines;
  for (const auto& e : catalog()) {
    const Triangulation tri = Triangulation::build(e.spec());
    std::string aliases;
    for (const auto& a : e.aliases) aliases += (aliases.empty() ? "" : " ") + a;
    lines.push_back({e.name, aliases, homology_h1(tri).to_string(), e.construction, tri.num_tetrahedra(),
                     tri.num_vertices(), tri.num_edges()});
  }
  if (cfg.format == "json") {
    for (const auto& l : lines) {
      out << nlohmann::json{{"name", l.name},       {"aliases", l.aliases},   {"tetrahedra", l.tets},
                            {"vertices", l.vertices}, {"edges", l.edges},     {"h1", l.h1},
                            {"construction", l.construction}}
                 .dump()
          << "\n";
    }
    for (const auto& n : fixture_required()) out << nlohmann::json{{"name", n}, {"status", "fixture required"}}.dump() << "\n";
    return;
  }
  if (cfg.format == "csv") {
    out << "name,tetrahedra,vertices,edges,h1,construction,aliases\n";
    for (const auto& l : lines) {
      out << '"' << l.name << "\"," << l.tets << "," << l.vertices << "," << l.edges << "," << l.h1 << ","
          << l.construction << ",\"" << l.aliases << "\"\n";
    }
    return;
  }
  std::size_t w = 4;
  for (const auto& l : lines) w = std::max(w, l.name.size());
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-*s  %4s  %8s  %5s  %-5s  %s\n", static_cast<int>(w), "name", "tets", "vertices",
                "edges", "H1", "construction");
  out << buf;
  for (const auto& l : lines) {
    std::string extra = l.construction;
    if (!l.aliases.empty()) extra += " (also " + l.aliases + ")";
    std::snprintf(buf, sizeof buf, "%-*s  %4d  %8d  %5d  %-5s  %s\n", static_cast<int>(w), l.name.c_str(), l.tets,
                  l.vertices, l.edges, l.h1.c_str(), extra.c_str());
    out << buf;
  }
  for (const auto& n : fixture_required()) out << n << ": fixture required\n";
}

}  // namespace

void parse_r_range(const std::string& text, RunConfig& config) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidArgument("r range must look like A:B");
  try {
    std::size_t used = 0;
    const std::string a = text.substr(0, colon);
    const std::string b = text.substr(colon + 1);
    config.r_min = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    config.r_max = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
  } catch (const std::logic_error&) {
    throw InvalidArgument("r range must look like A:B, got " + text);
  }
  if (config.r_min < 3 || config.r_max < config.r_min) {
    throw InvalidArgument("r range needs 3 <= A <= B, got " + text);
  }
}

int default_workers() {
  if (const char* env = std::getenv("TVQ_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
    throw InvalidArgument(std::string("TVQ_WORKERS must be a positive integer, got '") + env + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::optional<int> single_r;
  std::optional<std::string> r_range;

  CLI::App app{"Exact Turaev-Viro summand invariants of closed 3-manifolds", "tvq"};
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) {
      sub->add_option("--input", cfg.input, "Triangulation file");
      sub->add_option("--manifold", cfg.manifold, "Builtin manifold name, e.g. L(3,1)");
      sub->add_option("--reference", cfg.reference, "Stored reference values to compare against, e.g. S3/Q8");
      auto* r1 = sub->add_option("--r", single_r, "Single level r");
      auto* r2 = sub->add_option("--r-range", r_range, "Levels A:B (default 3:7)");
      r1->excludes(r2);
      sub->add_option("--workers", cfg.workers, "Worker threads (default TVQ_WORKERS or all cores)");
    }
    sub->add_option("--format", cfg.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--digits", cfg.digits, "Decimal digits");
  };
  auto* compute = app.add_subcommand("compute", "Invariants of one manifold");
  auto* tables = app.add_subcommand("tables", "Invariants of every builtin manifold");
  auto* verify = app.add_subcommand("verify", "Identity checks and reference comparison");
  auto* list = app.add_subcommand("catalog", "List builtin manifolds");
  add_common(compute, true);
  add_common(tables, true);
  add_common(verify, true);
  add_common(list, false);

  try {
    cfg.workers = default_workers();
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (single_r) cfg.r_min = cfg.r_max = *single_r;
    if (r_range) parse_r_range(*r_range, cfg);
    validate(cfg);

    if (list->parsed()) {
      cmd_catalog(cfg, out);
      return kExitOk;
    }
    std::optional<Subject> chosen = selected_subject(cfg);
    if (compute->parsed()) {
      if (!chosen) throw InvalidArgument("compute needs --input or --manifold");
      emit_reports(cfg, {std::move(*chosen)}, out);
      return kExitOk;
    }
    std::vector<Subject> subjects;
    if (chosen) {
      subjects.push_back(std::move(*chosen));
    } else {
      subjects = all_subjects(tables->parsed());
    }
    if (tables->parsed()) {
      emit_reports(cfg, subjects, out);
      return kExitOk;
    }
    return cmd_verify(cfg, subjects, out);
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << "\n";
    return kExitValidation;
  } catch (const InvolutionError& e) {
    err << "error: gluing: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NotClosed& e) {
    err << "error: NotClosed: " << e.what() << "\n";
    return kExitValidation;
  } catch (const BadEdge& e) {
    err << "error: BadEdge: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NotManifold& e) {
    err << "error: NotManifold: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NotInCatalog& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const DenominatorVanished& e) {
    err << "internal error: DenominatorVanished: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace tvq
