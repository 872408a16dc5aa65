#include "lefcert/certifier.hpp"

#include "lefcert/errors.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace lefcert {

namespace {

// Slack formulas over exact rationals. R(x) keeps the arithmetic readable.
Rational R(std::int64_t x) { return Rational(x); }

struct Quantities {
  Rational k, n, s, D, N, g, h;
};

Quantities quantities(const InvariantReport& rep) {
  return {R(rep.counts.k), R(rep.counts.n), R(rep.counts.s), R(rep.counts.D),
          R(rep.counts.N), R(rep.base_genus), R(rep.fiber_genus)};
}

Rational slack_eq6(const Quantities& q) {
  return 5 * q.k + 6 * (3 * q.h - 1) * (q.g - 1) - 6 * (q.N - q.D);
}
Rational slack_eq9(const Quantities& q) { return 6 * (3 * q.h - 1) * (q.g - 1) + 5 * q.n - q.s; }
Rational slack_eq10(const Quantities& q) {
  return 6 * (3 * q.h - 1) * (q.g - 1) + 6 * q.h * q.D - q.k;
}
Rational slack_eq11(const Quantities& q) {
  return 6 * (3 * q.h - 1) * (q.g - 1) + (5 * q.h + 1) * q.D - q.N;
}
Rational slack_eq13(const Quantities& q) {
  return q.k - (2 * q.h - 2) - Rational(3, 2) * (q.N - q.D);
}
Rational slack_eq14(const Quantities& q) {
  return q.n - (2 * q.h - 2) - Rational(1, 2) * (q.N - q.D);
}
Rational slack_eq15(const Quantities& q, const RuledParams& rp) {
  return 2 + 2 * q.h - Rational(rp.b, 2) - 4 * R(rp.a);
}
Rational slack_eq16(const Quantities& q) { return 5 * q.k - 6 * q.h - 6 * (q.N - q.D); }
Rational slack_eq17(const Quantities& q) { return 5 * q.n - 6 * q.h - q.s; }
Rational slack_eq18(const Quantities& q) { return 6 * q.h * (q.D - 1) - q.k; }
Rational slack_eq19(const Quantities& q) {
  return (5 * q.h + 1) * (q.D - 1) - (q.h - 1) - q.N;
}
Rational slack_eq21(const Quantities& q) { return 5 * q.k - (8 * q.h - 3) - 5 * (q.N - q.D); }
Rational slack_eq22(const Quantities& q) { return 5 * q.n - (8 * q.h - 3); }
Rational slack_thm21(const Quantities& q) { return 5 * q.n - (8 * q.h - 3); }
Rational slack_eq26(const Quantities& q, const Rational& t) {
  return 5 * q.n - t * q.s - (8 - 2 * t) * q.h - 3 * (t - 1);
}

InequalityVerdict verdict_without_slack(std::string id, std::string ref, Status status) {
  InequalityVerdict v;
  v.id = std::move(id);
  v.ref = std::move(ref);
  v.status = status;
  return v;
}

struct K2Rule {
  std::string id;
  std::string source;
  std::string ref;
  std::int64_t bound;
};

// Applicable named K^2 lower bounds for a semistable description. For g >= 1
// relative minimality already forces X minimal and not ruled; for pencils
// the Li bound needs the explicit assertion while the Stipsicz bound does
// not. Nontriviality (D >= 1) is required throughout.
std::vector<K2Rule> applicable_k2_rules(std::int64_t g, std::int64_t h, std::int64_t k,
                                        std::int64_t D, bool asserts_not_ruled) {
  std::vector<K2Rule> rules;
  if (D < 1) {
    return rules;
  }
  if (g >= 1) {
    rules.push_back({"K2_KNESER", "kneser", "Thm. 8 proof (Kneser)",
                     to_int64(Int(2) * (h - 1) * (g - 1))});
  } else if (k >= 1) {
    if (asserts_not_ruled) {
      rules.push_back({"K2_LI", "li", "Eq. (20) (Li)", 2 - 2 * h});
    }
    rules.push_back({"K2_STIPSICZ", "stipsicz", "Stipsicz pencil bound", 4 * (1 - h)});
  }
  return rules;
}

}  // namespace

InequalityVerdict evaluate_inequality(const std::string& id, const InvariantReport& rep,
                                      const EvalParams& params) {
  const Quantities q = quantities(rep);
  // All pencil statements assume a nontrivial pencil (at least one critical
  // point); certify() rejects k = 0 pencils outright, the single-inequality
  // entry point reports their pencil family as not applicable.
  const bool pencil = rep.is_pencil() && rep.counts.k >= 1;
  const bool asserted_not_ruled = rep.asserts_not_rational_or_ruled;
  const bool asserted_ruled = rep.ruled_params.has_value();

  // EQ26 parameter: either via params.t or embedded in the id as "EQ26@p/q".
  std::string base = id;
  std::optional<Rational> t = params.t;
  if (const auto at = id.find('@'); at != std::string::npos) {
    base = id.substr(0, at);
    try {
      t = Rational(id.substr(at + 1));
    } catch (const std::exception&) {
      throw Error(Err::UnknownInequalityId, "malformed parameter in '" + id + "'");
    }
  }

  const auto positive_genus_verdict = [&](const char* ref, Rational slack) {
    if (rep.base_genus < 1) {
      return verdict_without_slack(base, ref, Status::not_applicable);
    }
    return make_verdict(base, ref, std::move(slack));
  };
  const auto pencil_verdict = [&](const char* ref, Rational slack) {
    if (!pencil) {
      return verdict_without_slack(base, ref, Status::not_applicable);
    }
    return make_verdict(base, ref, std::move(slack));
  };
  // Thm. 20 family: needs the not-rational-or-ruled assertion.
  const auto non_ruled_pencil_verdict = [&](const char* ref, Rational slack) {
    if (!pencil || asserted_ruled) {
      return verdict_without_slack(base, ref, Status::not_applicable);
    }
    InequalityVerdict v = make_verdict(base, ref, std::move(slack));
    if (!asserted_not_ruled) {
      v.status = Status::unknown;
    }
    return v;
  };
  // Prop. 14 family: needs the ruled-surface assertion.
  const auto ruled_pencil_verdict = [&](const char* ref, Rational slack, bool have_slack) {
    if (!pencil || asserted_not_ruled) {
      return verdict_without_slack(base, ref, Status::not_applicable);
    }
    InequalityVerdict v;
    if (have_slack) {
      v = make_verdict(base, ref, std::move(slack));
    } else {
      v = verdict_without_slack(base, ref, Status::unknown);
    }
    if (!asserted_ruled) {
      v.status = Status::unknown;
    }
    return v;
  };

  if (base == "EQ3") {
    if (rep.counts.D < 1 || !rep.b2_minus) {
      return verdict_without_slack(base, "Prop. 5, Eq. (3)",
                                   rep.counts.D < 1 ? Status::not_applicable : Status::unknown);
    }
    return make_verdict(base, "Prop. 5, Eq. (3)",
                        R(*rep.b2_minus) - (1 + q.N - q.D));
  }
  if (base == "EQ4") {
    return make_verdict(base, "Prop. 6, Eq. (4)", q.N - q.s - q.D);
  }
  if (base == "EQ5") {
    return make_verdict(base, "Prop. 6, Eq. (5)", q.N - q.k + (q.h - 1) * q.D);
  }
  if (base == "REM7K" || base == "REM7N") {
    const Rational slack = base == "REM7K" ? 3 * (q.h - 1) * q.D - q.k
                                           : 2 * (q.h - 1) * q.D - q.N;
    InequalityVerdict v = make_verdict(base, "Remark 7 (stable fibers)", slack);
    if (!(rep.all_stable && rep.fiber_genus >= 2)) {
      v.status = Status::not_applicable;
    }
    return v;
  }
  if (base == "EQ6") return positive_genus_verdict("Thm. 8, Eq. (6)", slack_eq6(q));
  if (base == "EQ9") return positive_genus_verdict("Cor. 9, Eq. (9)", slack_eq9(q));
  if (base == "EQ10") return positive_genus_verdict("Cor. 9, Eq. (10)", slack_eq10(q));
  if (base == "EQ11") return positive_genus_verdict("Cor. 9, Eq. (11)", slack_eq11(q));
  if (base == "EQ13") return ruled_pencil_verdict("Prop. 14, Eq. (13)", slack_eq13(q), true);
  if (base == "EQ14") return ruled_pencil_verdict("Prop. 14, Eq. (14)", slack_eq14(q), true);
  if (base == "EQ15") {
    const bool have = rep.ruled_params.has_value();
    return ruled_pencil_verdict("Prop. 14, Eq. (15)",
                                have ? slack_eq15(q, *rep.ruled_params) : Rational(0), have);
  }
  if (base == "EQ16") return pencil_verdict("Thm. 15, Eq. (16)", slack_eq16(q));
  if (base == "EQ17") return pencil_verdict("Thm. 15, Eq. (17)", slack_eq17(q));
  if (base == "EQ18") return pencil_verdict("Thm. 15, Eq. (18)", slack_eq18(q));
  if (base == "EQ19") return pencil_verdict("Thm. 15, Eq. (19)", slack_eq19(q));
  if (base == "EQ21") return non_ruled_pencil_verdict("Thm. 20, Eq. (21)", slack_eq21(q));
  if (base == "EQ22") return non_ruled_pencil_verdict("Thm. 20, Eq. (22)", slack_eq22(q));
  if (base == "THM21") return pencil_verdict("Thm. 21", slack_thm21(q));
  if (base == "EQ26") {
    if (!t) {
      throw Error(Err::ParameterOutOfRange, "EQ26 needs a parameter t in [0, 1]");
    }
    if (*t < 0 || *t > 1) {
      throw Error(Err::ParameterOutOfRange, "EQ26 parameter t = " + to_fraction_string(*t) +
                                                " outside [0, 1]");
    }
    InequalityVerdict v = pencil_verdict("Remark 23, Eq. (26)", slack_eq26(q, *t));
    v.id = "EQ26@" + to_fraction_string(*t);
    return v;
  }
  throw Error(Err::UnknownInequalityId, base);
}

CertificateReport certify(const InvariantReport& rep) {
  if (!rep.all_semistable) {
    throw Error(Err::NotSemistable, "certification requires a semistable description");
  }
  if (rep.is_pencil() && rep.counts.k == 0) {
    throw Error(Err::TrivialPencil, "a pencil must have at least one critical point");
  }

  std::vector<InequalityVerdict> verdicts;
  if (rep.counts.D >= 1 && rep.b2_minus) {
    verdicts.push_back(evaluate_inequality("EQ3", rep));
  }
  for (InequalityVerdict& v :
       component_bounds_check(rep.counts.k, rep.counts.n, rep.counts.s, rep.counts.D,
                              rep.counts.N, rep.fiber_genus, rep.all_stable)) {
    verdicts.push_back(std::move(v));
  }
  if (rep.base_genus >= 1) {
    for (const char* id : {"EQ6", "EQ9", "EQ10", "EQ11"}) {
      verdicts.push_back(evaluate_inequality(id, rep));
    }
  } else {
    if (rep.ruled_params) {
      for (const char* id : {"EQ13", "EQ14", "EQ15"}) {
        verdicts.push_back(evaluate_inequality(id, rep));
      }
    }
    for (const char* id : {"EQ16", "EQ17", "EQ18", "EQ19"}) {
      verdicts.push_back(evaluate_inequality(id, rep));
    }
    if (rep.asserts_not_rational_or_ruled) {
      verdicts.push_back(evaluate_inequality("EQ21", rep));
      verdicts.push_back(evaluate_inequality("EQ22", rep));
    }
    verdicts.push_back(evaluate_inequality("THM21", rep));
    EvalParams p0, p1;
    p0.t = Rational(0);
    p1.t = Rational(1);
    verdicts.push_back(evaluate_inequality("EQ26", rep, p0));
    verdicts.push_back(evaluate_inequality("EQ26", rep, p1));
  }
  if (rep.k_squared) {
    for (const K2Rule& rule :
         applicable_k2_rules(rep.base_genus, rep.fiber_genus, rep.counts.k, rep.counts.D,
                             rep.asserts_not_rational_or_ruled)) {
      verdicts.push_back(make_verdict(rule.id, rule.ref, R(*rep.k_squared) - R(rule.bound)));
    }
  }

  // Fixed report order: equation number, then the named bounds.
  const std::vector<std::string> order = {"EQ3",  "EQ4",  "EQ5",  "EQ6",  "EQ9",    "EQ10",
                                          "EQ11", "EQ13", "EQ14", "EQ15", "EQ16",   "EQ17",
                                          "EQ18", "EQ19", "EQ21", "EQ22", "THM21",  "EQ26@0",
                                          "EQ26@1", "REM7K", "REM7N", "K2_KNESER", "K2_LI",
                                          "K2_STIPSICZ"};
  const auto rank = [&order](const std::string& id) {
    const auto it = std::find(order.begin(), order.end(), id);
    return it == order.end() ? order.size() : static_cast<std::size_t>(it - order.begin());
  };
  std::stable_sort(verdicts.begin(), verdicts.end(),
                   [&rank](const InequalityVerdict& a, const InequalityVerdict& b) {
                     return rank(a.id) < rank(b.id);
                   });

  CertificateReport cert;
  cert.verdicts = std::move(verdicts);
  bool any_violated = false;
  bool any_unknown = false;
  for (const InequalityVerdict& v : cert.verdicts) {
    any_violated = any_violated || v.status == Status::violated;
    any_unknown = any_unknown || v.status == Status::unknown;
  }
  cert.overall = any_violated ? Overall::refuted
                              : (any_unknown ? Overall::incomplete
                                             : Overall::realizable_consistent);
  return cert;
}

CertificateReport certify(const FibrationDescription& fd) {
  for (std::size_t f = 0; f < fd.fibers.size(); ++f) {
    if (!check_semistable(fd.fibers[f])) {
      throw Error(Err::NotSemistable,
                  "fiber " + std::to_string(f) + " has a sphere component with fewer than 2 nodes");
    }
  }
  return certify(compute_invariants(fd));
}

K2BoundsReport k2_lower_bounds(const FibrationDescription& fd) {
  const InvariantReport rep = compute_invariants(fd);
  K2BoundsReport out;
  for (const K2Rule& rule :
       applicable_k2_rules(rep.base_genus, rep.fiber_genus, rep.counts.k, rep.counts.D,
                           rep.asserts_not_rational_or_ruled)) {
    out.bounds.push_back({rule.source, rule.ref, rule.bound});
    if (rep.k_squared) {
      out.cross_checks.push_back(
          make_verdict(rule.id, rule.ref, R(*rep.k_squared) - R(rule.bound)));
    }
  }
  return out;
}

std::int64_t minimal_commutator_genus(std::int64_t h, std::int64_t k) {
  if (h < 2) {
    throw Error(Err::GenusTooSmall, "commutator-length bound needs fiber genus >= 2");
  }
  if (k < 1) {
    throw Error(Err::ParameterOutOfRange, "twist power k must be >= 1");
  }
  const Int m = Int(6) * (3 * Int(h) - 1);
  const Int g = 1 + (Int(k) + m - 1) / m;  // least integer >= 1 + k/m
  return to_int64(g);
}

}  // namespace lefcert
