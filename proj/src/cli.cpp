#include "fz/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>
#include <ostream>
#include <thread>

#include "fz/serialize.hpp"
#include "fz/text.hpp"
#include "fz/zeta.hpp"

namespace fz {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

struct RunConfig {
  std::uint32_t p = 0;
  std::uint32_t m = 1;
  std::uint64_t q = 0;
  std::string modulus;
  int r = 0, s = 0, n = 0, upto = 0;
  std::string tuple, corpus, format;
  int max_degree = 7;
  int budget = ReductionBudget{}.max_theta_degree;
  bool cross_check = false;
};

FieldPtr make_field(const RunConfig& c) {
  std::uint32_t m = c.m;
  if (c.q) {
    std::uint64_t pw = 1;
    m = 0;
    while (pw < c.q) {
      pw *= c.p;
      ++m;
    }
    if (pw != c.q) throw std::invalid_argument("q = " + std::to_string(c.q) + " is not a power of p");
    if (c.m != 1 && c.m != m) throw std::invalid_argument("--q and --m disagree");
  }
  std::optional<std::vector<std::uint32_t>> mod;
  if (!c.modulus.empty()) mod = parse_modulus(c.modulus, c.p);
  return Field::make(c.p, m, mod);
}

void add_field_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--p", c.p, "characteristic")->required();
  sub->add_option("--m", c.m, "extension degree")->check(CLI::PositiveNumber);
  sub->add_option("--q", c.q, "field size, a power of p");
  sub->add_option("--modulus", c.modulus, "irreducible modulus in z, e.g. z^2+z+1");
}

void add_format_option(CLI::App* sub, RunConfig& c) {
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}));
}

Json epoint_json(const EPoint& e) { return to_json(e); }

struct CheckOutcome {
  Json report;
  int code = kExitTorsion;
};

CheckOutcome check_one(const ShuffleTuple& c, const RunConfig& cfg, const ATContext* at) {
  const TorsionReport rep = decide_torsion(c, at, ReductionBudget{cfg.budget});
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["field"] = field_to_json(c.field());
  j["r"] = c.r;
  j["s"] = c.s;
  j["tuple"] = format_tuple(c);
  j["isTorsion"] = rep.is_torsion;
  j["caseTag"] = to_string(rep.case_tag);
  j["annihilator"] = to_string(rep.annihilator);
  j["filterViolations"] = rep.filter_violations;
  j["vC"] = epoint_json(rep.vc);
  j["rhoA_vC"] = epoint_json(rep.rho_a_vc);
  j["verdict"] = to_string(rep.verdict);
  CheckOutcome out{std::move(j), rep.is_torsion ? kExitTorsion : kExitNotTorsion};
  if (cfg.cross_check) {
    Json x;
    if (rep.case_tag == CaseTag::Divisible) {
      x["applicable"] = false;
    } else {
      const NumericCheck nc = check_sr_numeric(c, make_plan(cfg.max_degree, c));
      x["applicable"] = true;
      x["maxDegree"] = cfg.max_degree;
      x["guarantee"] = nc.guarantee;
      x["numericVanishes"] = nc.vanishes();
      x["agree"] = nc.vanishes() == rep.is_torsion;
      if (nc.vanishes() != rep.is_torsion) out.code = kExitDisagreement;
    }
    out.report["crossCheck"] = std::move(x);
  }
  return out;
}

void print_report(std::ostream& out, const Json& j, const std::string& format) {
  if (format == "json") {
    out << j.dump() << '\n';
    return;
  }
  for (const auto& [k, v] : j.items()) {
    if (k == "vC" || k == "rhoA_vC") {
      out << k << ":";
      for (const auto& s : v) out << " (" << s["l"] << "," << s["j"] << ")=" << s["value"].get<std::string>();
      out << '\n';
    } else if (v.is_string()) {
      out << k << ": " << v.get<std::string>() << '\n';
    } else {
      out << k << ": " << v.dump() << '\n';
    }
  }
}

int cmd_check_shuffle(const RunConfig& cfg, std::ostream& out) {
  const FieldPtr f = make_field(cfg);
  if (cfg.corpus.empty()) {
    if (cfg.tuple.empty()) throw std::invalid_argument("--tuple or --corpus is required");
    const ShuffleTuple c = parse_tuple(cfg.tuple, f, cfg.r, cfg.s);
    const CheckOutcome o = check_one(c, cfg, nullptr);
    print_report(out, o.report, cfg.format);
    return o.code;
  }
  std::ifstream in(cfg.corpus);
  if (!in) throw std::invalid_argument("cannot open corpus file " + cfg.corpus);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    const std::string t = trim(line);
    if (!t.empty() && t[0] != '#') lines.push_back(t);
  }
  // Evaluate concurrently in bounded batches; print in file order.
  const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  int code = kExitTorsion;
  auto task = [&](const std::string& line) -> CheckOutcome {
    try {
      return check_one(parse_corpus_line(line, f), cfg, nullptr);
    } catch (const std::exception& e) {
      Json j;
      j["schemaVersion"] = kSchemaVersion;
      j["line"] = line;
      j["error"] = e.what();
      return {std::move(j), kExitUsage};
    }
  };
  for (std::size_t start = 0; start < lines.size(); start += width) {
    std::vector<std::future<CheckOutcome>> batch;
    for (std::size_t i = start; i < std::min(lines.size(), start + width); ++i) {
      batch.push_back(std::async(std::launch::async, task, std::cref(lines[i])));
    }
    for (auto& fut : batch) {
      const CheckOutcome o = fut.get();
      out << o.report.dump() << '\n';
      if (o.code == kExitDisagreement) code = kExitDisagreement;
      else if (o.code == kExitUsage && code != kExitDisagreement) code = kExitUsage;
    }
  }
  return code;
}

int cmd_verify_numeric(const RunConfig& cfg, std::ostream& out) {
  const FieldPtr f = make_field(cfg);
  const ShuffleTuple c = parse_tuple(cfg.tuple, f, cfg.r, cfg.s);
  const NumericCheck nc = check_sr_numeric(c, make_plan(cfg.max_degree, c));
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  const auto v = nc.residual.first_nonzero();
  j["residualValuation"] = v ? Json(*v) : Json(nullptr);
  j["guarantee"] = nc.guarantee;
  j["verdict"] = nc.vanishes() ? "vanishes-to-guarantee" : "nonzero-at " + std::to_string(*nc.nonzero_at);
  print_report(out, j, cfg.format);
  return nc.vanishes() ? kExitTorsion : kExitNotTorsion;
}

int cmd_chen_tuple(const RunConfig& cfg, std::ostream& out) {
  out << format_tuple(chen_tuple(cfg.r, cfg.s, make_field(cfg))) << '\n';
  return 0;
}

int cmd_anderson_thakur(const RunConfig& cfg, std::ostream& out) {
  const ATContext at = anderson_thakur(cfg.upto, make_field(cfg));
  if (cfg.format == "json") {
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    j["field"] = field_to_json(at.field);
    Json hs = Json::array();
    for (const auto& h : at.H) hs.push_back(to_string(h));
    j["H"] = std::move(hs);
    out << j.dump() << '\n';
  } else {
    for (int i = 0; i <= at.max_index; ++i) out << "H_" << i << " = " << to_string(at.h(i)) << '\n';
  }
  return 0;
}

int cmd_annihilator(const RunConfig& cfg, std::ostream& out) {
  out << to_string(annihilator(cfg.n, make_field(cfg))) << '\n';
  return 0;
}

int cmd_phi(const RunConfig& cfg, std::ostream& out) {
  const FieldPtr f = make_field(cfg);
  int n = cfg.n;
  if (!cfg.tuple.empty()) {
    if (cfg.r < 1 || cfg.s < 1) throw std::invalid_argument("--tuple needs --r and --s");
    if (n && n != cfg.r + cfg.s) throw std::invalid_argument("--n must equal r + s");
    n = cfg.r + cfg.s;
  }
  if (n < 2) throw std::invalid_argument("--n must be at least 2");
  const ATContext at = anderson_thakur(n - 1, f);
  BiMatrix m;
  if (cfg.tuple.empty()) {
    m = phi_prime_twisted(n, at);
  } else {
    const ShuffleTuple c = parse_tuple(cfg.tuple, f, cfg.r, cfg.s);
    m = phi_c_twisted(normalize_tuple(c), cfg.r, cfg.s, at);
  }
  if (cfg.format == "json") {
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    j["field"] = field_to_json(f);
    Json rows = Json::array();
    for (const auto& row : m) {
      Json jr = Json::array();
      for (const auto& e : row) jr.push_back(to_string(e));
      rows.push_back(std::move(jr));
    }
    j["matrix"] = std::move(rows);
    out << j.dump() << '\n';
  } else {
    for (const auto& row : m) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " | " : "") << to_string(row[i]);
      out << '\n';
    }
  }
  return 0;
}

}  // namespace

std::vector<RationalFunction> parse_tuple_entries(std::string_view text, const FieldPtr& f, int n) {
  std::vector<RationalFunction> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t semi = text.find(';', start);
    const std::string_view part = text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    try {
      out.push_back(parse_rational(part, f));
    } catch (const ParseError& e) {
      throw ParseError(start + e.position(), "entry " + std::to_string(out.size() + 1) + ": " + e.what());
    } catch (const std::domain_error& e) {
      throw ParseError(start, "entry " + std::to_string(out.size() + 1) + ": " + e.what());
    }
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (static_cast<int>(out.size()) != n) {
    throw std::invalid_argument("tuple needs " + std::to_string(n) + " entries, got " + std::to_string(out.size()));
  }
  return out;
}

ShuffleTuple parse_tuple(std::string_view text, const FieldPtr& f, int r, int s) {
  if (r < 1 || s < 1) throw std::invalid_argument("r and s must be positive");
  auto e = parse_tuple_entries(text, f, r + s);
  ShuffleTuple c{r, s, e.front(), {}};
  c.a.assign(e.begin() + 1, e.end());
  return c;
}

std::string format_tuple(const ShuffleTuple& c) {
  std::string s = to_string(c.b0);
  for (const auto& x : c.a) s += "; " + to_string(x);
  return s;
}

ShuffleTuple parse_corpus_line(std::string_view line, const FieldPtr& f) {
  const std::size_t bar = line.find('|');
  if (bar == std::string_view::npos) throw std::invalid_argument("corpus line needs 'r s | tuple'");
  std::istringstream head{std::string(line.substr(0, bar))};
  int r = 0, s = 0;
  std::string extra;
  if (!(head >> r >> s) || (head >> extra)) throw std::invalid_argument("corpus line needs two weights before '|'");
  return parse_tuple(line.substr(bar + 1), f, r, s);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Torsion criterion and numeric cross-check for shuffle relations of Carlitz double zeta values",
               args.empty() ? "fzshuffle" : args.front()};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* check = app.add_subcommand("check-shuffle", "decide torsion of the extension class of a tuple");
  add_field_options(check, cfg);
  check->add_option("--r", cfg.r)->check(CLI::PositiveNumber);
  check->add_option("--s", cfg.s)->check(CLI::PositiveNumber);
  check->add_option("--tuple", cfg.tuple, "b0; a1; ...; a_{n-1}");
  check->add_option("--corpus", cfg.corpus, "file of 'r s | tuple' lines");
  check->add_flag("--cross-check", cfg.cross_check, "also run the numeric oracle");
  check->add_option("--max-degree", cfg.max_degree, "oracle enumeration degree")->check(CLI::NonNegativeNumber);
  check->add_option("--budget", cfg.budget, "theta-degree budget for reductions")->check(CLI::PositiveNumber);
  add_format_option(check, cfg);

  auto* numeric = app.add_subcommand("verify-numeric", "evaluate the relation residual as a Laurent series");
  add_field_options(numeric, cfg);
  numeric->add_option("--r", cfg.r)->required()->check(CLI::PositiveNumber);
  numeric->add_option("--s", cfg.s)->required()->check(CLI::PositiveNumber);
  numeric->add_option("--tuple", cfg.tuple)->required();
  numeric->add_option("--max-degree", cfg.max_degree)->check(CLI::NonNegativeNumber);
  add_format_option(numeric, cfg);

  auto* chen = app.add_subcommand("chen-tuple", "print Chen's tuple");
  add_field_options(chen, cfg);
  chen->add_option("--r", cfg.r)->required()->check(CLI::PositiveNumber);
  chen->add_option("--s", cfg.s)->required()->check(CLI::PositiveNumber);

  auto* at = app.add_subcommand("anderson-thakur", "print H_0..H_N");
  add_field_options(at, cfg);
  at->add_option("--upto", cfg.upto)->required()->check(CLI::NonNegativeNumber);
  add_format_option(at, cfg);

  auto* ann = app.add_subcommand("annihilator", "print the annihilator polynomial");
  add_field_options(ann, cfg);
  ann->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);

  auto* phi = app.add_subcommand("phi", "print the twisted matrices");
  add_field_options(phi, cfg);
  phi->add_option("--n", cfg.n);
  phi->add_option("--r", cfg.r);
  phi->add_option("--s", cfg.s);
  phi->add_option("--tuple", cfg.tuple);
  add_format_option(phi, cfg);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    app.exit(e, out, err);
    return kExitUsage;
  }
  if (cfg.format.empty()) cfg.format = (check->parsed() || numeric->parsed()) ? "json" : "text";

  try {
    if (check->parsed()) {
      if (cfg.corpus.empty() && (cfg.r < 1 || cfg.s < 1)) throw std::invalid_argument("--r and --s are required");
      return cmd_check_shuffle(cfg, out);
    }
    if (numeric->parsed()) return cmd_verify_numeric(cfg, out);
    if (chen->parsed()) return cmd_chen_tuple(cfg, out);
    if (at->parsed()) return cmd_anderson_thakur(cfg, out);
    if (ann->parsed()) return cmd_annihilator(cfg, out);
    if (phi->parsed()) return cmd_phi(cfg, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fz
