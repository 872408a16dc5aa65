#include "lefcert/io.hpp"

#include "lefcert/errors.hpp"

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <string>
#include <utility>

namespace lefcert {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& message) {
  throw Error(Err::SchemaError, path + ": " + message);
}

std::int64_t require_int(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) {
    const std::uint64_t u = j.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      schema_error(path, "integer out of range");
    }
    return static_cast<std::int64_t>(u);
  }
  if (!j.is_number_integer()) {
    schema_error(path, "expected an integer");
  }
  return j.get<std::int64_t>();
}

const Json& require_array(const Json& j, const std::string& path) {
  if (!j.is_array()) {
    schema_error(path, "expected an array");
  }
  return j;
}

const Json& require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) {
    schema_error(path, "expected an object");
  }
  return j;
}

void check_keys(const Json& obj, std::initializer_list<const char*> allowed,
                const std::string& path, bool strict, std::vector<std::string>& warnings) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) {
      known = known || item.key() == key;
    }
    if (known) {
      continue;
    }
    if (strict) {
      schema_error(path.empty() ? item.key() : path + "." + item.key(), "unknown field");
    }
    warnings.push_back("ignoring unknown field " +
                       (path.empty() ? item.key() : path + "." + item.key()));
  }
}

IntMatrix parse_matrix(const Json& j, const std::string& path) {
  require_array(j, path);
  const std::size_t rows = j.size();
  if (rows == 0) {
    schema_error(path, "matrix must not be empty");
  }
  std::size_t cols = 0;
  IntMatrix m;
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_path = path + "[" + std::to_string(r) + "]";
    const Json& row = require_array(j[r], row_path);
    if (r == 0) {
      cols = row.size();
      m = IntMatrix(rows, cols);
    } else if (row.size() != cols) {
      schema_error(row_path, "ragged matrix rows");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m.at(r, c) = require_int(row[c], row_path + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

}  // namespace

ParseResult parse_fibration_document(const std::string& text, bool strict) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Err::SchemaError, std::string("invalid JSON: ") + e.what());
  }
  require_object(doc, "document");

  ParseResult result;
  check_keys(doc,
             {"schema_version", "fiber_genus", "base_genus", "fibers", "handle_matrices",
              "signature", "flags"},
             "", strict, result.warnings);

  if (!doc.contains("schema_version")) {
    schema_error("schema_version", "missing");
  }
  if (require_int(doc["schema_version"], "schema_version") != kSchemaVersion) {
    schema_error("schema_version", "unsupported version (expected " +
                                       std::to_string(kSchemaVersion) + ")");
  }
  for (const char* key : {"fiber_genus", "base_genus", "fibers"}) {
    if (!doc.contains(key)) {
      schema_error(key, "missing");
    }
  }

  FibrationDescription fd;
  fd.fiber_genus = require_int(doc["fiber_genus"], "fiber_genus");
  fd.base_genus = require_int(doc["base_genus"], "base_genus");

  const Json& fibers = require_array(doc["fibers"], "fibers");
  for (std::size_t f = 0; f < fibers.size(); ++f) {
    const std::string fpath = "fibers[" + std::to_string(f) + "]";
    const Json& jf = require_object(fibers[f], fpath);
    check_keys(jf, {"pieces", "curves"}, fpath, strict, result.warnings);
    for (const char* key : {"pieces", "curves"}) {
      if (!jf.contains(key)) {
        schema_error(fpath + "." + key, "missing");
      }
    }

    FiberConfiguration cfg;
    const Json& pieces = require_array(jf["pieces"], fpath + ".pieces");
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      const std::string ppath = fpath + ".pieces[" + std::to_string(p) + "]";
      const Json& jp = require_array(pieces[p], ppath);
      if (jp.size() != 2) {
        schema_error(ppath, "expected [genus, boundary_count]");
      }
      cfg.pieces.push_back({require_int(jp[0], ppath + "[0]"), require_int(jp[1], ppath + "[1]")});
    }
    const Json& curves = require_array(jf["curves"], fpath + ".curves");
    for (std::size_t c = 0; c < curves.size(); ++c) {
      const std::string cpath = fpath + ".curves[" + std::to_string(c) + "]";
      const Json& jc = require_object(curves[c], cpath);
      check_keys(jc, {"ends", "homology"}, cpath, strict, result.warnings);
      if (!jc.contains("ends")) {
        schema_error(cpath + ".ends", "missing");
      }
      const Json& ends = require_array(jc["ends"], cpath + ".ends");
      if (ends.size() != 2) {
        schema_error(cpath + ".ends", "expected [piece, piece]");
      }
      Curve curve;
      const std::int64_t a = require_int(ends[0], cpath + ".ends[0]");
      const std::int64_t b = require_int(ends[1], cpath + ".ends[1]");
      if (a < 0 || b < 0) {
        schema_error(cpath + ".ends", "piece indices must be nonnegative");
      }
      curve.end_a = static_cast<std::size_t>(a);
      curve.end_b = static_cast<std::size_t>(b);
      if (jc.contains("homology")) {
        const Json& hom = require_array(jc["homology"], cpath + ".homology");
        IntVec cls;
        for (std::size_t i = 0; i < hom.size(); ++i) {
          cls.emplace_back(require_int(hom[i], cpath + ".homology[" + std::to_string(i) + "]"));
        }
        curve.homology_class = std::move(cls);
      }
      cfg.curves.push_back(std::move(curve));
    }
    fd.fibers.push_back(std::move(cfg));
  }

  if (doc.contains("handle_matrices")) {
    const Json& handles = require_array(doc["handle_matrices"], "handle_matrices");
    std::vector<IntMatrix> ms;
    for (std::size_t i = 0; i < handles.size(); ++i) {
      ms.push_back(parse_matrix(handles[i], "handle_matrices[" + std::to_string(i) + "]"));
    }
    fd.handle_matrices = std::move(ms);
  }
  if (doc.contains("signature")) {
    fd.signature = require_int(doc["signature"], "signature");
  }
  if (doc.contains("flags")) {
    const Json& flags = require_object(doc["flags"], "flags");
    check_keys(flags, {"asserts_not_rational_or_ruled", "ruled_params"}, "flags", strict,
               result.warnings);
    if (flags.contains("asserts_not_rational_or_ruled")) {
      if (!flags["asserts_not_rational_or_ruled"].is_boolean()) {
        schema_error("flags.asserts_not_rational_or_ruled", "expected a boolean");
      }
      fd.asserts_not_rational_or_ruled = flags["asserts_not_rational_or_ruled"].get<bool>();
    }
    if (flags.contains("ruled_params")) {
      const Json& rp = require_array(flags["ruled_params"], "flags.ruled_params");
      if (rp.size() != 2) {
        schema_error("flags.ruled_params", "expected [a, b]");
      }
      fd.ruled_params = RuledParams{require_int(rp[0], "flags.ruled_params[0]"),
                                    require_int(rp[1], "flags.ruled_params[1]")};
    }
  }

  result.fd = validate_fibration(std::move(fd));
  return result;
}

Json fibration_to_json(const FibrationDescription& fd) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["fiber_genus"] = fd.fiber_genus;
  doc["base_genus"] = fd.base_genus;
  doc["fibers"] = Json::array();
  for (const FiberConfiguration& fiber : fd.fibers) {
    Json jf;
    jf["pieces"] = Json::array();
    for (const Piece& piece : fiber.pieces) {
      jf["pieces"].push_back(Json::array({piece.genus, piece.boundary_count}));
    }
    jf["curves"] = Json::array();
    for (const Curve& curve : fiber.curves) {
      Json jc;
      jc["ends"] = Json::array({static_cast<std::int64_t>(curve.end_a),
                                static_cast<std::int64_t>(curve.end_b)});
      if (curve.homology_class) {
        Json hom = Json::array();
        for (const Int& x : *curve.homology_class) {
          hom.push_back(to_int64(x));
        }
        jc["homology"] = std::move(hom);
      }
      jf["curves"].push_back(std::move(jc));
    }
    doc["fibers"].push_back(std::move(jf));
  }
  if (fd.handle_matrices) {
    Json handles = Json::array();
    for (const IntMatrix& m : *fd.handle_matrices) {
      Json jm = Json::array();
      for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
          row.push_back(to_int64(m.at(r, c)));
        }
        jm.push_back(std::move(row));
      }
      handles.push_back(std::move(jm));
    }
    doc["handle_matrices"] = std::move(handles);
  }
  if (fd.signature) {
    doc["signature"] = *fd.signature;
  }
  if (fd.asserts_not_rational_or_ruled || fd.ruled_params) {
    Json flags;
    if (fd.asserts_not_rational_or_ruled) {
      flags["asserts_not_rational_or_ruled"] = true;
    }
    if (fd.ruled_params) {
      flags["ruled_params"] = Json::array({fd.ruled_params->a, fd.ruled_params->b});
    }
    doc["flags"] = std::move(flags);
  }
  return doc;
}

std::string serialize_fibration_document(const FibrationDescription& fd) {
  return dump_canonical(fibration_to_json(fd));
}

Json invariants_to_json(const InvariantReport& rep) {
  Json j;
  j["fiber_genus"] = rep.fiber_genus;
  j["base_genus"] = rep.base_genus;
  j["chi"] = rep.chi;
  Json counts;
  counts["k"] = rep.counts.k;
  counts["n"] = rep.counts.n;
  counts["s"] = rep.counts.s;
  counts["D"] = rep.counts.D;
  counts["N"] = rep.counts.N;
  j["counts"] = std::move(counts);
  Json b1;
  if (rep.b1.exact) {
    b1["exact"] = rep.b1.value;
  } else {
    b1["lower"] = rep.b1.lower;
    b1["upper"] = rep.b1.upper;
  }
  j["b1"] = std::move(b1);
  j["b2_minus_lower_bound"] = rep.b2_minus_lower;
  if (rep.b2_plus) {
    j["b2_plus"] = *rep.b2_plus;
  }
  if (rep.b2_minus) {
    j["b2_minus"] = *rep.b2_minus;
  }
  if (rep.k_squared) {
    j["K2"] = *rep.k_squared;
  }
  if (rep.k_squared_upper) {
    j["K2_upper_bound"] = *rep.k_squared_upper;
  }
  if (rep.b1.exact) {
    Json torsion = Json::array();
    for (const Int& t : rep.torsion) {
      torsion.push_back(t.str());
    }
    j["h1_torsion"] = std::move(torsion);
  }
  j["semistable"] = rep.all_semistable;
  j["stable"] = rep.all_stable;
  j["monodromy_shadow"] = shadow_verdict_name(rep.monodromy);
  return j;
}

Json certificate_to_json(const CertificateReport& cert) {
  Json j;
  j["overall"] = overall_name(cert.overall);
  Json verdicts = Json::array();
  for (const InequalityVerdict& v : cert.verdicts) {
    Json jv;
    jv["id"] = v.id;
    jv["ref"] = v.ref;
    jv["status"] = status_name(v.status);
    if (v.slack_known) {
      jv["slack"] = to_fraction_string(v.slack);
    }
    verdicts.push_back(std::move(jv));
  }
  j["verdicts"] = std::move(verdicts);
  return j;
}

std::string render_verdict_line(const InequalityVerdict& v) {
  std::string line = v.id;
  line += " ";
  line += status_name(v.status);
  if (v.slack_known) {
    line += " slack=" + to_fraction_string(v.slack);
  }
  line += " [" + v.ref + "]";
  return line;
}

std::string render_invariants_text(const InvariantReport& rep) {
  std::ostringstream out;
  out << "fiber genus h = " << rep.fiber_genus << "\n";
  out << "base genus g = " << rep.base_genus << (rep.is_pencil() ? " (pencil)" : "") << "\n";
  out << "chi = " << rep.chi << "\n";
  out << "counts: k = " << rep.counts.k << ", n = " << rep.counts.n << ", s = " << rep.counts.s
      << ", D = " << rep.counts.D << ", N = " << rep.counts.N << "\n";
  if (rep.b1.exact) {
    out << "b1 = " << rep.b1.value << " (exact)\n";
  } else {
    out << "b1 in [" << rep.b1.lower << ", " << rep.b1.upper << "]\n";
  }
  out << "b2- >= " << rep.b2_minus_lower << "\n";
  if (rep.b2_plus && rep.b2_minus) {
    out << "b2+ = " << *rep.b2_plus << ", b2- = " << *rep.b2_minus << "\n";
  }
  if (rep.k_squared) {
    out << "K^2 = " << *rep.k_squared << "\n";
  }
  if (rep.k_squared_upper) {
    out << "K^2 <= " << *rep.k_squared_upper << " (bound form)\n";
  }
  if (rep.b1.exact) {
    out << "H1 torsion (auxiliary, not used by the certificate):";
    if (rep.torsion.empty()) {
      out << " none";
    } else {
      for (const Int& t : rep.torsion) {
        out << " " << t.str();
      }
    }
    out << "\n";
  }
  out << "semistable: " << (rep.all_semistable ? "yes" : "no") << "\n";
  out << "stable: " << (rep.all_stable ? "yes" : "no") << "\n";
  out << "monodromy shadow: " << shadow_verdict_name(rep.monodromy) << "\n";
  return out.str();
}

std::string render_certificate_text(const CertificateReport& cert) {
  std::ostringstream out;
  for (const InequalityVerdict& v : cert.verdicts) {
    out << render_verdict_line(v) << "\n";
  }
  out << "overall: " << overall_name(cert.overall) << "\n";
  return out.str();
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lefcert
