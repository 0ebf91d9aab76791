#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "arithcurv/core.hpp"
#include "arithcurv/curvature.hpp"
#include "arithcurv/numtheory.hpp"
#include "arithcurv/padic.hpp"

using namespace arithcurv;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kNotInvertible = 3, kTermLimit = 4 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SessionConfig {
  std::string command;
  std::string q = "split-antisym";
  std::size_t n = 2;
  std::vector<unsigned long> primes = {3, 5, 7};
  unsigned precision = 4;
  std::vector<std::string> suites;
  std::string element;
  std::string out;
  std::string format = "json";
};

const std::vector<std::string> kSuites = {"claim5", "psi", "traces", "jerry", "fprime", "jor2", "nonvanishing", "induction"};

struct Session {
  SessionConfig cfg;
  PolyMatrix q;
  std::optional<QKind> kind;  // set for split presets and matching files
  std::string q_label;
};

Session open_session(const SessionConfig& cfg) {
  Session s{cfg, PolyMatrix(1), std::nullopt, cfg.q};
  if (cfg.n == 0) throw UsageError("--n must be positive");
  if (cfg.precision == 0) throw UsageError("--precision must be at least 1");
  std::vector<unsigned long> seen;
  for (unsigned long p : cfg.primes) {
    if (p == 2 || !is_prime(p)) throw UsageError("not an odd prime: " + std::to_string(p));
    if (std::find(seen.begin(), seen.end(), p) != seen.end()) throw UsageError("repeated prime: " + std::to_string(p));
    seen.push_back(p);
  }
  if (cfg.q == "split-antisym" || cfg.q == "split-sym" || cfg.q == "identity") {
    SplitQ preset;
    try {
      preset = parse_preset(cfg.q, cfg.n);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    s.q = preset.matrix();
    if (preset.kind != QKind::identity) s.kind = preset.kind;
    return s;
  }
  std::ifstream in(cfg.q);
  if (!in) throw UsageError("cannot read q file: " + cfg.q);
  try {
    s.q = q_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed q file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid q: ") + e.what());
  }
  s.cfg.n = s.q.size();
  if (s.q.size() == 2) {
    if (s.q == SplitQ{QKind::antisymmetric, 2}.matrix()) s.kind = QKind::antisymmetric;
    if (s.q == SplitQ{QKind::symmetric, 2}.matrix()) s.kind = QKind::symmetric;
  }
  return s;
}

QKind structure_kind(const Session& s) {
  if (!s.kind || s.cfg.n != 2) throw UsageError("correspondence structures exist for split q with n = 2 only");
  return *s.kind;
}

json session_json(const Session& s) {
  json j;
  j["command"] = s.cfg.command;
  j["q"] = s.q_label;
  j["n"] = s.cfg.n;
  j["primes"] = s.cfg.primes;
  j["precision"] = s.cfg.precision;
  if (s.cfg.command == "verify") j["suites"] = s.cfg.suites;
  if (s.cfg.command == "curvature") j["element"] = s.cfg.element;
  j["format"] = s.cfg.format;
  return j;
}

std::vector<std::pair<unsigned long, unsigned long>> ordered_pairs(const std::vector<unsigned long>& primes) {
  std::vector<unsigned long> ps = primes;
  std::sort(ps.begin(), ps.end());
  std::vector<std::pair<unsigned long, unsigned long>> out;
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) out.emplace_back(ps[i], ps[j]);
  return out;
}

struct Report {
  json session;
  std::vector<Check> checks;
  json extra = json::object();  // command specific sections
  std::vector<std::string> text;  // human readable lines for --format text
};

void emit(const Session& s, Report& r) {
  sort_checks(r.checks);
  std::string body;
  if (s.cfg.format == "json") {
    json j;
    j["session"] = r.session;
    j["checks"] = json::array();
    for (const auto& c : r.checks) j["checks"].push_back(to_json(c));
    for (auto it = r.extra.begin(); it != r.extra.end(); ++it) j[it.key()] = it.value();
    body = j.dump(2) + "\n";
  } else if (s.cfg.format == "csv") {
    body = to_csv(r.checks);
  } else {
    for (const auto& line : r.text) body += line + "\n";
    body += to_text(r.checks);
  }
  if (s.cfg.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(s.cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + s.cfg.out);
  f << body;
}

Report cmd_frobenius(const Session& s) {
  Report r{session_json(s), {}, json::object(), {}};
  json entries = json::array();
  const VarTable vars(s.cfg.n);
  for (unsigned long p : s.cfg.primes) {
    try {
      check_prime_for_q(s.q, p);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("prime ") + std::to_string(p) + ": " + e.what());
    }
    const Precision prec{p, s.cfg.precision};
    const PadicMatrix phi = chern_frobenius(s.q, prec);
    json rows = json::array();
    for (std::size_t i = 0; i < phi.size(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < phi.size(); ++j) {
        row.push_back(phi(i, j).to_string());
        r.text.push_back("Phi_" + std::to_string(p) + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         "] mod " + std::to_string(p) + "^" + std::to_string(prec.K) + " = " + phi(i, j).to_string());
      }
      rows.push_back(std::move(row));
    }
    entries.push_back({{"p", p}, {"K", prec.K}, {"modulus", prec.modulus().get_str()}, {"phi", rows}});

    const DiagramResult d = check_chern_diagram(s.q, phi);
    Check c{"frobenius", "chern diagram mod p^K", p, 0, d.ok, "Phi^t q Phi", "(x^t q x)^(p)",
            "K=" + std::to_string(prec.K)};
    if (!d.ok)
      c.note += "; entry (" + std::to_string(d.row + 1) + "," + std::to_string(d.col + 1) + ") differs by " + d.witness;
    r.checks.push_back(c);
    r.checks.push_back({"frobenius", "Phi = x^(p) mod p", p, 0, lifts_frobenius(phi), "Phi", "x^(p)", ""});
  }
  r.extra["frobenius"] = entries;
  return r;
}

Report cmd_verify(const Session& s) {
  Report r{session_json(s), {}, json::object(), {}};
  const VarTable vars(2);
  if (s.cfg.n != 2) throw UsageError("verification suites run with n = 2");
  const auto pairs = ordered_pairs(s.cfg.primes);
  auto add = [&r](std::vector<Check> cs) {
    for (auto& c : cs) r.checks.push_back(std::move(c));
  };
  for (const auto& suite : s.cfg.suites) {
    if (suite == "claim5") {
      for (auto [p, p2] : pairs) add(verify_claim5(p, p2, vars));
    } else if (suite == "psi") {
      for (auto [p, p2] : pairs) add(psi_partial_commute_check(p, p2, vars));
    } else if (suite == "traces") {
      for (unsigned long p : s.cfg.primes) add(traces_suite(p, vars));
    } else if (suite == "jerry") {
      for (unsigned long p : s.cfg.primes) add(jerry_suite(p, vars));
    } else if (suite == "fprime") {
      for (unsigned long p : s.cfg.primes) add(fprime_suite(p, vars));
    } else if (suite == "jor2") {
      add(jor2_suite(vars));
    } else if (suite == "nonvanishing") {
      const QKind kind = structure_kind(s);
      if (kind == QKind::symmetric)
        for (unsigned long p : s.cfg.primes) add(verify_nonvanishing_11(kind, p, p, vars));
      for (auto [p, p2] : pairs) add(verify_nonvanishing_11(kind, p, p2, vars));
    } else if (suite == "induction") {
      const QKind kind = structure_kind(s);
      for (unsigned long p : s.cfg.primes) {
        const Correspondence g = kind == QKind::symmetric ? build_sym_gl2(p, vars) : build_antisym_gl2(p, vars);
        add(partial_induction_check(g, 3, vars, kind == QKind::antisymmetric));
      }
    } else {
      throw UsageError("unknown suite: " + suite);
    }
  }
  return r;
}

json report_json(const CurvatureReport& c, const VarTable& vars) {
  return {{"first", c.first},
          {"second", c.second},
          {"p", c.p},
          {"p2", c.p2},
          {"input", to_string(c.input, vars)},
          {"scale", c.scale.get_str()},
          {"value", to_string(c.value, vars)},
          {"zero", c.zero}};
}

Report cmd_curvature(const Session& s) {
  Report r{session_json(s), {}, json::object(), {}};
  const QKind kind = structure_kind(s);
  const VarTable vars(2);
  const RatFunc e = parse_ratfunc(s.cfg.element, vars);
  auto build = [&](unsigned long p) {
    return kind == QKind::symmetric ? build_sym_gl2(p, vars) : build_antisym_gl2(p, vars);
  };
  json reports = json::array();
  auto record = [&](const CurvatureReport& nested, const CurvatureReport& composed, const std::string& what) {
    reports.push_back(report_json(nested, vars));
    r.text.push_back(what + "(" + nested.first + ", " + nested.second + ")(" + to_string(e, vars) +
                     ") = " + to_string(nested.value, vars));
    r.checks.push_back({"curvature", what + ": composed equals nested", nested.p, nested.p2,
                        nested.lhs == composed.lhs && nested.rhs == composed.rhs, to_string(composed.value, vars),
                        to_string(nested.value, vars), nested.zero ? "zero" : "nonzero"});
  };
  try {
    for (auto [p, p2] : ordered_pairs(s.cfg.primes)) {
      const Correspondence g = build(p), g2 = build(p2);
      record(curvature(g, g2, e), curvature_via_composition(g, g2, e), "curvature");
    }
    std::vector<unsigned long> ps = s.cfg.primes;
    std::sort(ps.begin(), ps.end());
    for (unsigned long p : ps) {
      const Correspondence g = build(p);
      for (unsigned long p2 : ps)
        record(one_one_curvature(g, p2, e, vars), curvature_via_composition(g, build_canonical(p2, vars), e),
               "(1,1)-curvature");
    }
  } catch (const NotInvertible& ex) {
    throw NotInvertible("element " + s.cfg.element + ": " + ex.what());
  }
  r.extra["curvatures"] = reports;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chern connections and curvature of correspondence structures on GL_n"};
  app.require_subcommand(1);
  SessionConfig cfg;
  std::string primes_text;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--q", cfg.q, "split-antisym, split-sym, identity or a JSON matrix file");
    sub->add_option("--n", cfg.n, "matrix size for presets");
    sub->add_option("--primes", primes_text, "comma separated odd primes");
    sub->add_option("--precision", cfg.precision, "p-adic precision K");
    sub->add_option("--out", cfg.out, "write the report to a file");
    sub->add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  };
  CLI::App* frob = app.add_subcommand("frobenius", "Chern Frobenius lifts mod p^K and their diagrams");
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  CLI::App* curv = app.add_subcommand("curvature", "curvature of one element");
  for (CLI::App* sub : {frob, verify, curv}) common(sub);
  verify->add_option("--suite", cfg.suites, "suite names (default: all)")->delimiter(',');
  curv->add_option("--element", cfg.element, "rational function in a, b, c, d")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!primes_text.empty()) {
      cfg.primes.clear();
      std::stringstream ss(primes_text);
      std::string item;
      while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long p = 0;
        try {
          p = std::stoul(item, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used == 0 || used != item.size()) throw UsageError("bad prime list: " + primes_text);
        cfg.primes.push_back(p);
      }
    }
    if (cfg.suites.empty()) cfg.suites = kSuites;
    cfg.command = frob->parsed() ? "frobenius" : verify->parsed() ? "verify" : "curvature";

    const Session s = open_session(cfg);
    Report r = frob->parsed() ? cmd_frobenius(s) : verify->parsed() ? cmd_verify(s) : cmd_curvature(s);
    emit(s, r);
    return all_pass(r.checks) ? kOk : kFail;
  } catch (const TermLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kTermLimit;
  } catch (const NotInvertible& e) {
    std::cerr << "error: non-invertible: " << e.what() << "\n";
    return kNotInvertible;
  } catch (const ParseError& e) {
    std::cerr << "error: cannot parse element: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
