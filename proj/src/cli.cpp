#include "lefcert/cli.hpp"

#include "lefcert/certifier.hpp"
#include "lefcert/constructions.hpp"
#include "lefcert/errors.hpp"
#include "lefcert/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace lefcert {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Err::SchemaError, "cannot open file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct GlobalOptions {
  std::string format = "text";
  bool strict = false;

  bool json() const { return format == "json"; }
};

Json output_envelope(const InvariantReport& rep, const CertificateReport* cert,
                     const std::vector<std::string>& parse_warnings) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["invariants"] = invariants_to_json(rep);
  if (cert != nullptr) {
    doc["certificate"] = certificate_to_json(*cert);
  }
  Json warnings = Json::array();
  for (const std::string& w : parse_warnings) {
    warnings.push_back(w);
  }
  for (const std::string& w : rep.warnings) {
    warnings.push_back(w);
  }
  doc["warnings"] = std::move(warnings);
  return doc;
}

void print_warnings_text(std::ostream& out, const std::vector<std::string>& parse_warnings,
                         const InvariantReport& rep) {
  for (const std::string& w : parse_warnings) {
    out << "warning: " << w << "\n";
  }
  for (const std::string& w : rep.warnings) {
    out << "warning: " << w << "\n";
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"invariants and realizability certificates for combinatorially described "
               "semistable symplectic Lefschetz fibrations"};
  app.name("lefcert");
  GlobalOptions global;
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--strict", global.strict, "reject unknown document fields");
  app.require_subcommand(1);

  std::string file;
  auto* validate_cmd = app.add_subcommand("validate", "check a fibration document");
  validate_cmd->add_option("file", file, "fibration document")->required();

  auto* invariants_cmd = app.add_subcommand("invariants", "compute the invariant report");
  invariants_cmd->add_option("file", file, "fibration document")->required();

  auto* certify_cmd = app.add_subcommand("certify", "evaluate the inequality battery");
  certify_cmd->add_option("file", file, "fibration document")->required();
  bool assert_not_ruled = false;
  std::vector<std::int64_t> ruled;
  certify_cmd->add_flag("--assert-not-ruled", assert_not_ruled,
                        "assert the total space is not rational or ruled");
  certify_cmd->add_option("--ruled", ruled,
                          "assert the total space is the blowup in b points of a sphere bundle "
                          "over a genus-a surface")
      ->expected(2);

  auto* construct_cmd = app.add_subcommand("construct", "build a fibration document");
  construct_cmd->require_subcommand(1);
  std::int64_t c_h = 2, c_k = 1, c_extra = 1, c_degree = 1;
  std::vector<std::int64_t> c_sep;
  bool c_pencil = false;
  auto* twist_cmd = construct_cmd->add_subcommand(
      "twist-power", "one fiber with k parallel copies of a vanishing cycle");
  twist_cmd->add_option("genus", c_h, "fiber genus")->required();
  twist_cmd->add_option("power", c_k, "number of parallel copies")->required();
  twist_cmd->add_option("--separating", c_sep, "separating curve with genus split g1 g2")
      ->expected(2);
  twist_cmd->add_flag("--pencil", c_pencil,
                      "emit the base-genus-0 pencil instead of closing up at the "
                      "commutator-length bound");
  auto* sum_cmd = construct_cmd->add_subcommand("fiber-sum",
                                                "fiber sum with a trivial bundle over a surface");
  sum_cmd->add_option("file", file, "fibration document")->required();
  sum_cmd->add_option("extra", c_extra, "base genus to add")->required();
  auto* pull_cmd = construct_cmd->add_subcommand("pullback", "pull back to a cover of the base");
  pull_cmd->add_option("file", file, "fibration document")->required();
  pull_cmd->add_option("degree", c_degree, "cover degree")->required();

  std::int64_t clb_h = 2, clb_k = 1;
  auto* clb_cmd = app.add_subcommand("clb", "least base genus not excluded by the "
                                            "commutator-length bound");
  clb_cmd->add_option("genus", clb_h, "fiber genus")->required();
  clb_cmd->add_option("power", clb_k, "twist power")->required();

  std::string catalog_name;
  auto* catalog_cmd = app.add_subcommand("catalog", "list or print seed examples");
  catalog_cmd->add_option("name", catalog_name, "entry name");

  std::vector<const char*> argv;
  argv.push_back("lefcert");
  for (const std::string& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  }

  try {
    if (*validate_cmd) {
      const ParseResult parsed = parse_fibration_document(read_file(file), global.strict);
      if (global.json()) {
        Json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["valid"] = true;
        Json warnings = Json::array();
        for (const std::string& w : parsed.warnings) {
          warnings.push_back(w);
        }
        doc["warnings"] = std::move(warnings);
        out << dump_canonical(doc);
      } else {
        for (const std::string& w : parsed.warnings) {
          out << "warning: " << w << "\n";
        }
        out << "valid\n";
      }
      return 0;
    }
    if (*invariants_cmd) {
      const ParseResult parsed = parse_fibration_document(read_file(file), global.strict);
      const InvariantReport rep = compute_invariants(parsed.fd);
      if (global.json()) {
        out << dump_canonical(output_envelope(rep, nullptr, parsed.warnings));
      } else {
        print_warnings_text(out, parsed.warnings, rep);
        out << render_invariants_text(rep);
      }
      return 0;
    }
    if (*certify_cmd) {
      ParseResult parsed = parse_fibration_document(read_file(file), global.strict);
      if (assert_not_ruled && !ruled.empty()) {
        throw Error(Err::FlagConflict, "--assert-not-ruled and --ruled are mutually exclusive");
      }
      if (assert_not_ruled) {
        if (parsed.fd.ruled_params) {
          throw Error(Err::FlagConflict,
                      "--assert-not-ruled contradicts the document's ruled_params");
        }
        parsed.fd.asserts_not_rational_or_ruled = true;
      }
      if (!ruled.empty()) {
        if (parsed.fd.asserts_not_rational_or_ruled) {
          throw Error(Err::FlagConflict, "--ruled contradicts the document's assertion flag");
        }
        parsed.fd.ruled_params = RuledParams{ruled[0], ruled[1]};
        parsed.fd = validate_fibration(std::move(parsed.fd));
      }
      const InvariantReport rep = compute_invariants(parsed.fd);
      const CertificateReport cert = certify(parsed.fd);
      if (global.json()) {
        out << dump_canonical(output_envelope(rep, &cert, parsed.warnings));
      } else {
        print_warnings_text(out, parsed.warnings, rep);
        out << render_certificate_text(cert);
      }
      return cert.overall == Overall::refuted ? 2 : 0;
    }
    if (*construct_cmd) {
      FibrationDescription fd;
      if (*twist_cmd) {
        const TwistCurveKind kind = c_sep.empty() ? TwistCurveKind::nonsep()
                                                  : TwistCurveKind::sep(c_sep[0], c_sep[1]);
        if (c_pencil) {
          fd.fiber_genus = c_h;
          fd.base_genus = 0;
          fd.fibers.push_back(parallel_twist_fiber(kind, c_k, c_h));
          fd = validate_fibration(std::move(fd));
        } else {
          fd = twist_power_description(kind, c_k, c_h);
        }
      } else if (*sum_cmd) {
        fd = fiber_sum_trivial_bundle(parse_fibration_document(read_file(file), global.strict).fd,
                                      c_extra);
      } else {
        fd = pullback_cover(parse_fibration_document(read_file(file), global.strict).fd,
                            c_degree);
      }
      out << serialize_fibration_document(fd);
      return 0;
    }
    if (*clb_cmd) {
      out << minimal_commutator_genus(clb_h, clb_k) << "\n";
      return 0;
    }
    if (*catalog_cmd) {
      if (catalog_name.empty()) {
        if (global.json()) {
          Json list = Json::array();
          for (const CatalogEntry& entry : catalog()) {
            Json je;
            je["name"] = entry.name;
            je["description"] = entry.description;
            list.push_back(std::move(je));
          }
          out << dump_canonical(list);
        } else {
          for (const CatalogEntry& entry : catalog()) {
            out << entry.name << " - " << entry.description << "\n";
          }
        }
      } else {
        out << serialize_fibration_document(catalog_entry(catalog_name).fd);
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no command\n";
  return 1;
}

}  // namespace lefcert
