// Command-line front end: validation, ideal listings, classification,
// theorem audits, quotients and the built-in catalog.

#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gring/audit.hpp"
#include "gring/catalog.hpp"
#include "gring/error.hpp"
#include "gring/ideals.hpp"
#include "gring/primality.hpp"
#include "gring/quotient.hpp"
#include "gring/report.hpp"
#include "gring/ringfile.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_counterexample = 2;
constexpr int exit_cap = 3;

int exit_code_for(const gring::Error& e) {
  return e.kind() == gring::ErrorKind::cap_exceeded ? exit_cap : exit_invalid;
}

gring::ElementSet parse_indices(const std::string& csv, std::size_t universe) {
  gring::ElementSet out(universe);
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    long v = 0;
    try {
      std::size_t used = 0;
      v = std::stol(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw gring::Error(gring::ErrorKind::domain_error,
                         "bad ideal index '" + tok + "'");
    }
    if (v < 0 || static_cast<std::size_t>(v) >= universe)
      throw gring::Error(gring::ErrorKind::domain_error,
                         "ideal index " + tok + " out of range");
    out.set(static_cast<gring::Elem>(v));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations on finite graded rings"};
  app.require_subcommand(1);

  long max_order = -1;
  app.add_option("--max-order", max_order,
                 "override both the validation and enumeration caps");

  std::string file;
  std::string catalog_name;
  std::optional<long> catalog_param;
  std::string ideal_csv;
  std::string theorems_csv;
  std::string reading_arg = "both";
  bool twosided = false;
  bool machine = false;
  bool use_corpus = false;
  bool converse = false;

  CLI::App* validate = app.add_subcommand("validate", "validate a ring file");
  validate->add_option("file", file)->required();

  CLI::App* ideals = app.add_subcommand("ideals", "list graded ideals");
  ideals->add_option("file", file)->required();
  ideals->add_flag("--twosided", twosided, "list two-sided instead of right ideals");

  CLI::App* classify = app.add_subcommand("classify", "classify all graded right ideals");
  classify->add_option("file", file)->required();
  classify->add_flag("--machine", machine, "tab-separated machine output");

  CLI::App* audit = app.add_subcommand("audit", "audit the theorems on a ring or corpus");
  audit->add_option("file", file);
  audit->add_flag("--corpus", use_corpus, "audit the built-in corpus");
  audit->add_option("--theorems", theorems_csv, "comma-separated theorem ids");
  audit->add_option("--reading", reading_arg, "principal-ideal reading: xr, rxr or both")
      ->check(CLI::IsMember({"xr", "rxr", "both"}));
  audit->add_flag("--converse", converse,
                  "also search for quotient-transfer converse failures");

  CLI::App* quotient = app.add_subcommand("quotient", "emit the quotient by an ideal");
  quotient->add_option("file", file)->required();
  quotient->add_option("--ideal", ideal_csv, "comma-separated member indices")
      ->required();

  CLI::App* catalog = app.add_subcommand("catalog", "emit a built-in ring file");
  catalog->add_option("name", catalog_name);
  long param_value = 0;
  CLI::Option* param_opt = catalog->add_option("--param", param_value, "family parameter");
  bool list_entries = false;
  catalog->add_flag("--list", list_entries, "list catalog entries");

  CLI11_PARSE(app, argc, argv);

  gring::Config cfg;
  if (max_order >= 0) {
    cfg.max_order = static_cast<std::size_t>(max_order);
    cfg.max_enum_order = static_cast<std::size_t>(max_order);
  }

  try {
    if (*validate) {
      const gring::NamedRing nr = gring::load_ring_file(file, cfg);
      std::cout << "ok: ring " << nr.name << " order=" << nr.graded.order()
                << " group=" << nr.graded.group_order() << " unity=";
      if (nr.graded.ring().has_unity())
        std::cout << *nr.graded.ring().unity();
      else
        std::cout << "none";
      std::cout << " homogeneous=" << nr.graded.homogeneous().count() << "\n";
      return exit_ok;
    }

    if (*ideals) {
      const gring::NamedRing nr = gring::load_ring_file(file, cfg);
      const auto list = twosided
                            ? gring::enumerate_graded_twosided_ideals(nr.graded, cfg)
                            : gring::enumerate_graded_right_ideals(nr.graded, cfg);
      std::cout << gring::render_ideal_list(list);
      return exit_ok;
    }

    if (*classify) {
      const gring::NamedRing nr = gring::load_ring_file(file, cfg);
      const gring::ClassificationReport rep = gring::classify_all(nr.graded, cfg);
      std::cout << (machine
                        ? gring::render_classification_machine(nr.name, nr.graded, rep)
                        : gring::render_classification_text(nr.name, nr.graded, rep));
      return exit_ok;
    }

    if (*audit) {
      if (use_corpus == !file.empty()) {
        std::cerr << "error: audit needs exactly one of <file> or --corpus\n";
        return exit_invalid;
      }
      std::vector<gring::CorpusRing> corpus;
      if (use_corpus) {
        corpus = gring::default_corpus(cfg);
      } else {
        gring::NamedRing nr = gring::load_ring_file(file, cfg);
        corpus.push_back({nr.name, std::move(nr.graded)});
      }
      std::set<gring::Reading> readings;
      if (reading_arg == "xr" || reading_arg == "both")
        readings.insert(gring::Reading::xr_only);
      if (reading_arg == "rxr" || reading_arg == "both")
        readings.insert(gring::Reading::rxr);
      gring::AuditEngine engine(std::move(corpus), cfg, readings);

      std::vector<std::string> ids;
      if (theorems_csv.empty()) {
        ids = gring::AuditEngine::theorem_ids();
      } else {
        std::istringstream in(theorems_csv);
        std::string tok;
        while (std::getline(in, tok, ',')) ids.push_back(tok);
      }
      bool failed = false;
      for (const std::string& id : ids) {
        const gring::AuditResult result = engine.run(id);
        failed = failed || !result.passed();
        std::cout << gring::render_audit_line(result);
      }
      if (converse) {
        const auto findings = engine.converse_search();
        std::cout << "converse-search\tfindings=" << findings.size() << "\n";
        for (const auto& f : findings)
          std::cout << "  finding: " << f.ring << " K=" << f.k.to_string()
                    << " P=" << f.p.to_string()
                    << " (P/K almost prime, P not almost prime)\n";
      }
      return failed ? exit_counterexample : exit_ok;
    }

    if (*quotient) {
      const gring::NamedRing nr = gring::load_ring_file(file, cfg);
      const gring::ElementSet k = parse_indices(ideal_csv, nr.graded.order());
      const gring::QuotientResult q = gring::quotient_ring(nr.graded, k, cfg);
      std::cout << gring::emit_ring_file(nr.name + "-mod-" +
                                             [&] {
                                               std::string s;
                                               k.for_each([&](gring::Elem e) {
                                                 if (!s.empty()) s += "-";
                                                 s += std::to_string(e);
                                               });
                                               return s;
                                             }(),
                                         q.quotient);
      return exit_ok;
    }

    if (*catalog) {
      if (list_entries) {
        for (const gring::CatalogEntry& e : gring::catalog_entries()) {
          std::cout << e.name;
          if (e.takes_param)
            std::cout << " --param <" << e.param_doc << "> (default "
                      << e.default_param << ")";
          std::cout << "\n    " << e.description << "\n";
        }
        return exit_ok;
      }
      if (catalog_name.empty()) {
        std::cerr << "error: catalog needs a name or --list\n";
        return exit_invalid;
      }
      if (param_opt->count() > 0) catalog_param = param_value;
      const gring::GradedRing gr = gring::catalog_build(catalog_name, catalog_param, cfg);
      std::cout << gring::emit_ring_file(
          gring::catalog_instance_name(catalog_name, catalog_param), gr);
      return exit_ok;
    }
  } catch (const gring::Error& e) {
    std::cerr << "error: " << gring::to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invalid;
  }
  return exit_ok;
}
