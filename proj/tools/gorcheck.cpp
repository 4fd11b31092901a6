// gorcheck: command-line front end for the gorenstein library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gor/apolarity.hpp"
#include "gor/enumerate.hpp"
#include "gor/errors.hpp"
#include "gor/ideal.hpp"
#include "gor/verify.hpp"

namespace {

constexpr int kExitFatal = 1;
constexpr int kExitAnomaly = 2;
constexpr int kExitUsage = 64;

using json = nlohmann::json;

struct Config {
  std::uint64_t prime = gor::PrimeField::kDefaultPrime;
  std::uint64_t prime2 = gor::PrimeField::kSecondPrime;
  std::uint64_t seed = 1;
  int threads = 0;
  std::string format = "text";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string provenance(const Config& c) {
  std::ostringstream os;
  os << "# " << gor::kToolName << ' ' << gor::kToolVersion << " seed=" << c.seed << " p=" << c.prime
     << " p2=" << c.prime2;
  return os.str();
}

json provenance_json(const Config& c) {
  return {{"tool", gor::kToolName}, {"version", gor::kToolVersion}, {"seed", c.seed},
          {"primes", {c.prime, c.prime2}}};
}

std::string parens(const gor::HVector& h) { return "(" + h.to_string() + ")"; }

std::string list(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw gor::Error("cannot write " + path);
  out << text;
}

void check_field_config(const Config& c, int socle_degree) {
  if (static_cast<std::uint64_t>(socle_degree) >= c.prime || static_cast<std::uint64_t>(socle_degree) >= c.prime2)
    throw UsageError("primes must exceed the socle degree " + std::to_string(socle_degree));
}

// --- check -----------------------------------------------------------------

int cmd_check(const Config& c, const std::string& literal) {
  const auto h = gor::HVector::parse(literal);
  const bool o = gor::is_o_sequence(h);
  const bool sym = gor::is_symmetric(h);
  const bool uni = gor::is_unimodal(h);
  const bool si = gor::is_si_sequence(h);
  std::vector<std::string> tags;
  bool candidate = true;
  try {
    for (const auto& cert : gor::guarantees(h)) tags.push_back(cert.tag());
  } catch (const gor::NotGorensteinCandidate&) {
    candidate = false;
  }
  std::string status;
  if (h.value(1) == 4 && h.value(0) == 1 && sym) status = gor::to_string(gor::classify_codim4(h));

  if (c.format == "json") {
    json j{{"provenance", provenance_json(c)}, {"h", h.entries()}, {"o_sequence", o}, {"symmetric", sym},
           {"unimodal", uni}, {"si", si}, {"gorenstein_candidate", candidate}, {"guarantees", tags}};
    if (!status.empty()) j["codim4_status"] = status;
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::string tag_text;
  for (const auto& t : tags) tag_text += (tag_text.empty() ? "" : " ") + t;
  std::cout << provenance(c) << '\n';
  if (c.format == "csv") {
    std::cout << "h,o_sequence,symmetric,unimodal,si,guarantees\n"
              << '"' << h.to_string() << "\"," << yes_no(o) << ',' << yes_no(sym) << ',' << yes_no(uni) << ','
              << yes_no(si) << ",\"" << tag_text << "\"\n";
    return 0;
  }
  std::cout << "h=" << parens(h) << '\n'
            << "o_sequence=" << yes_no(o) << '\n'
            << "symmetric=" << yes_no(sym) << '\n'
            << "unimodal=" << yes_no(uni) << '\n'
            << "si=" << yes_no(si) << '\n'
            << "guarantees=" << (candidate ? (tag_text.empty() ? "none" : tag_text) : "n/a (not a Gorenstein candidate)")
            << '\n';
  if (!status.empty()) std::cout << "codim4_status=" << status << '\n';
  return 0;
}

// --- enum ------------------------------------------------------------------

int cmd_enum(const Config& c, int codim, int e, bool quartic_filter, bool count_only) {
  if (codim < 1 || e < 1) throw UsageError("--codim and --socle must be positive");
  if (quartic_filter && codim != 4) throw UsageError("--quartic-filter applies to codimension 4 only");
  if (count_only) {
    std::string n;
    if (quartic_filter) {
      n = std::to_string(gor::enumerate_gorenstein_codim4(e, true).size());
    } else {
      n = gor::count_si(codim, e).str();
    }
    if (c.format == "json") {
      std::cout << json{{"provenance", provenance_json(c)}, {"codim", codim}, {"socle_degree", e},
                        {"quartic_filter", quartic_filter}, {"count", n}}.dump(2)
                << '\n';
    } else {
      std::cout << provenance(c) << '\n' << n << '\n';
    }
    return 0;
  }

  struct Row {
    gor::HVector h;
    std::string status;
  };
  std::vector<Row> rows;
  if (codim == 4) {
    gor::GorensteinCodim4Enumerator it(e, quartic_filter);
    while (auto v = it.next()) rows.push_back({v->h, gor::to_string(v->status)});
  } else {
    gor::SiEnumerator it(codim, e);
    while (auto v = it.next()) rows.push_back({*v, ""});
  }
  if (c.format == "json") {
    json vectors = json::array();
    for (const auto& r : rows) {
      json item{{"h", r.h.entries()}};
      if (!r.status.empty()) item["status"] = r.status;
      vectors.push_back(std::move(item));
    }
    std::cout << json{{"provenance", provenance_json(c)}, {"codim", codim}, {"socle_degree", e},
                      {"quartic_filter", quartic_filter}, {"count", rows.size()}, {"vectors", vectors}}.dump(2)
              << '\n';
    return 0;
  }
  std::cout << provenance(c) << '\n';
  if (c.format == "csv") {
    for (int i = 0; i <= e; ++i) std::cout << (i ? "," : "") << 'h' << i;
    std::cout << (codim == 4 ? ",status\n" : "\n");
    for (const auto& r : rows) std::cout << r.h.to_string() << (r.status.empty() ? "" : "," + r.status) << '\n';
    return 0;
  }
  for (const auto& r : rows) std::cout << parens(r.h) << (r.status.empty() ? "" : " " + r.status) << '\n';
  return 0;
}

// --- hilbert ---------------------------------------------------------------

int cmd_hilbert(const Config& c, const std::string& path, int degree) {
  const auto ideal = gor::read_ideal_file(path);
  const int d = degree >= 0 ? degree : std::max(1, ideal.degree_sum());
  const auto gi = gor::GradedIdeal::generate(ideal, d);
  const auto prof = gi.profile();
  std::vector<std::int64_t> socle;
  if (prof.artinian_certified) {
    socle = gi.socle();
    socle.push_back(0);
  }
  std::int64_t socle_total = 0;
  for (auto v : socle) socle_total += v;
  if (c.format == "json") {
    json j{{"provenance", provenance_json(c)}, {"r", ideal.r}, {"p", ideal.field.modulus()},
           {"generators", ideal.generators.size()}, {"truncation", d}, {"hilbert", prof.values},
           {"artinian", prof.artinian_certified}};
    if (prof.artinian_certified) {
      j["socle"] = socle;
      j["gorenstein"] = socle_total == 1;
    }
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << provenance(c) << '\n';
  if (c.format == "csv") {
    std::cout << "degree,hilbert" << (prof.artinian_certified ? ",socle" : "") << '\n';
    for (int i = 0; i <= d; ++i) {
      std::cout << i << ',' << prof.values[static_cast<std::size_t>(i)];
      if (prof.artinian_certified) std::cout << ',' << socle[static_cast<std::size_t>(i)];
      std::cout << '\n';
    }
    return 0;
  }
  std::cout << "r=" << ideal.r << " p=" << ideal.field.modulus() << " generators=" << ideal.generators.size() << '\n'
            << "truncation=" << d << '\n'
            << "hilbert=" << list(prof.values) << '\n'
            << "artinian=" << yes_no(prof.artinian_certified) << '\n';
  if (prof.artinian_certified) {
    std::cout << "socle=" << list(socle) << '\n' << "gorenstein=" << yes_no(socle_total == 1) << '\n';
  }
  return 0;
}

// --- apolar ----------------------------------------------------------------

int vars_in(const std::string& text) {
  static const std::regex var_re("x([0-9]+)");
  int r = 0;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), var_re); it != std::sregex_iterator(); ++it)
    r = std::max(r, std::stoi((*it)[1]));
  return r;
}

struct ApolarArgs {
  std::string monomial;
  int powers = 0;
  int degree = 0;
  std::string file;
  std::string realize;
  std::size_t budget = 4000;
  int vars = 0;
  bool annihilator = false;
  bool experimental = false;
  std::string out;
};

json realization_json(const gor::RealizationResult& res, const gor::PrimeField& field, bool experimental) {
  json j{{"target", res.target.entries()}, {"found", res.found()}, {"vars", res.vars}, {"experimental", experimental},
         {"trials", res.trials_used}, {"primes_checked", res.primes_checked}, {"transcript", res.transcript}};
  if (res.found()) {
    j["strategy"] = res.witness->strategy;
    j["description"] = res.witness->description;
    j["seed"] = res.trial_seed;
    j["witness_polynomial"] = gor::format_poly(res.witness->materialize(field));
  } else {
    j["strategy"] = nullptr;
    j["seed"] = nullptr;
    j["witness_polynomial"] = nullptr;
  }
  return j;
}

int cmd_realize(const Config& c, const ApolarArgs& a) {
  gor::HVector target;
  try {
    target = gor::HVector::parse(a.realize);
  } catch (const gor::InvalidHVector& ex) {
    throw UsageError(ex.what());
  }
  check_field_config(c, target.socle_degree());
  gor::RealizationConfig rc;
  rc.seed = c.seed;
  rc.budget = a.budget;
  rc.vars = a.vars;
  rc.experimental = a.experimental;
  rc.primes = {c.prime, c.prime2};
  gor::RealizationResult res;
  try {
    res = gor::realization_search(target, rc);
  } catch (const gor::NotSiSequence& ex) {
    throw UsageError(std::string("rejected: ") + ex.what());
  } catch (const gor::DimensionError& ex) {
    throw UsageError(ex.what());
  }
  const gor::PrimeField field(c.prime);
  const auto record = realization_json(res, field, a.experimental);
  if (!a.out.empty()) write_file(a.out, record.dump(2) + "\n");
  if (c.format == "json") {
    json j = record;
    j["provenance"] = provenance_json(c);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << provenance(c) << '\n' << "target=" << parens(target) << (a.experimental ? " (experimental)" : "") << '\n';
    if (res.found()) {
      std::cout << "strategy=" << res.witness->strategy << " (" << res.witness->description << ")\n"
                << "seed=" << res.trial_seed << '\n'
                << "witness=" << record["witness_polynomial"].get<std::string>() << '\n'
                << "primes_checked=" << c.prime << ',' << c.prime2 << '\n';
    } else {
      std::cout << "NOT_FOUND\n";
    }
    std::cout << "trials=" << res.trials_used << '\n';
    for (const auto& line : res.transcript) std::cout << "# " << line << '\n';
  }
  return res.found() ? 0 : kExitAnomaly;
}

int cmd_apolar(const Config& c, const ApolarArgs& a) {
  const int modes = !a.monomial.empty() + (a.powers > 0) + !a.file.empty() + !a.realize.empty();
  if (modes != 1) throw UsageError("choose exactly one of --monomial, --powers, --file, --realize");
  if (!a.realize.empty()) return cmd_realize(c, a);

  const gor::PrimeField field(c.prime);
  const gor::PrimeField field2(c.prime2);
  gor::DualForm form;
  if (!a.monomial.empty()) {
    const int r = a.vars > 0 ? a.vars : std::max(1, vars_in(a.monomial));
    form = gor::DualForm::from_poly(gor::parse_poly(a.monomial, field, r), "monomial");
  } else if (a.powers > 0) {
    if (a.degree < 1) throw UsageError("--powers needs --degree >= 1");
    gor::Rng rng(c.seed);
    form = gor::random_power_sum(rng, a.vars > 0 ? a.vars : 4, a.degree, a.powers);
  } else {
    const auto ideal = gor::read_ideal_file(a.file);
    if (ideal.generators.size() != 1) throw UsageError("a dual-form file holds exactly one nonzero polynomial");
    form = gor::DualForm::from_poly(ideal.generators.front(), "input");
  }
  check_field_config(c, form.e);
  const auto f = form.materialize(field);
  if (f.is_zero()) throw UsageError("the dual form is zero");
  const auto h = gor::hvector_of_dual(f);
  const auto h2 = gor::hvector_of_dual(form, field2);
  const bool agree = h == h2;
  std::string ann;
  if (a.annihilator) ann = gor::format_ideal(gor::annihilator_presentation(f));

  if (c.format == "json") {
    json j{{"provenance", provenance_json(c)}, {"r", form.r}, {"e", form.e}, {"strategy", form.strategy},
           {"form", gor::format_poly(f)}, {"h", h.entries()}, {"h_second_prime", h2.entries()},
           {"primes_agree", agree}};
    if (a.annihilator) j["annihilator"] = ann;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << provenance(c) << '\n'
              << "r=" << form.r << " e=" << form.e << " strategy=" << form.strategy << '\n'
              << "form=" << gor::format_poly(f) << '\n'
              << "h=" << parens(h) << '\n'
              << "h_second_prime=" << parens(h2) << '\n';
    if (a.annihilator) std::cout << "annihilator:\n" << ann;
  }
  return agree ? 0 : kExitAnomaly;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::size_t trials = 0;
  std::uint64_t p = 0;
  std::string out = "auto";
};

std::size_t default_trials(const std::string& suite) {
  if (suite == "forward") return 1000;
  if (suite == "wlp") return 5;
  return 100;
}

int cmd_verify(const Config& c, const VerifyArgs& a) {
  gor::SuiteConfig sc;
  sc.seed = c.seed;
  sc.trials = a.trials ? a.trials : default_trials(a.suite);
  sc.primes = {c.prime, c.prime2};
  gor::Report report;
  if (a.suite == "prop25") {
    report = gor::check_prop_2_5(sc);
  } else if (a.suite == "lemma24") {
    report = gor::check_lemma_2_4(sc);
  } else if (a.suite == "wlp") {
    if (a.p && (!gor::is_prime(a.p) || a.p > 97)) throw UsageError("--p must be a small prime");
    report = gor::wlp_probe(a.p, sc);
  } else if (a.suite == "multi") {
    report = gor::probe_multi_generator(sc);
  } else if (a.suite == "forward") {
    report = gor::theorem_forward_scan(sc);
  } else if (a.suite == "tables") {
    report = gor::check_restriction_tables(sc);
  } else {
    throw UsageError("unknown suite '" + a.suite + "'");
  }
  json j = gor::to_json(report);
  j["provenance"] = provenance_json(c);
  const std::string out = a.out == "auto" ? "gorcheck-" + a.suite + ".json" : a.out;
  if (!out.empty() && out != "-") write_file(out, j.dump(2) + "\n");
  if (c.format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << provenance(c) << '\n' << gor::to_text(report);
    if (!out.empty() && out != "-") std::cout << "report=" << out << '\n';
  }
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert functions, SI-sequences and Gorenstein h-vectors over prime fields", "gorcheck"};
  app.set_version_flag("--version", std::string(gor::kToolVersion));
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  if (const char* env = std::getenv("GORCHECK_PRIME")) {
    try {
      cfg.prime = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: GORCHECK_PRIME is not an integer\n";
      return kExitUsage;
    }
  }
  app.add_option("--prime", cfg.prime, "Working prime (default 2^31-1, or $GORCHECK_PRIME)");
  app.add_option("--prime2", cfg.prime2, "Second prime for cross-checks");
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--threads", cfg.threads, "Worker threads (0: OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

  std::string literal;
  auto* check = app.add_subcommand("check", "Sequence predicates and certificates for an h-vector");
  check->add_option("hvector", literal, "Comma-separated h-vector, e.g. 1,4,10,4,1")->required();

  int codim = 4, socle = 0;
  bool quartic = false, count = false;
  auto* en = app.add_subcommand("enum", "Enumerate SI-sequences");
  en->add_option("--codim", codim, "h_1")->required();
  en->add_option("--socle", socle, "Socle degree e")->required();
  en->add_flag("--quartic-filter", quartic, "Codimension 4: keep h_4 <= 33");
  en->add_flag("--count", count, "Print only the number of sequences");

  std::string ideal_path;
  int hdegree = -1;
  auto* hil = app.add_subcommand("hilbert", "Hilbert function of R/I for an ideal file");
  hil->add_option("file", ideal_path, "Ideal file: header 'r=<int> p=<prime>', one generator per line")->required();
  hil->add_option("--degree", hdegree, "Truncation degree (default: sum of generator degrees)");

  ApolarArgs apo;
  auto* ap = app.add_subcommand("apolar", "h-vector of R/Ann(F) for a dual form F");
  ap->add_option("--monomial", apo.monomial, "Dual form given as a polynomial, e.g. x1*x2*x3*x4");
  ap->add_option("--powers", apo.powers, "Sum of this many generic divided powers");
  ap->add_option("--degree", apo.degree, "Degree for --powers");
  ap->add_option("--file", apo.file, "Dual-form file (ideal-file grammar, one polynomial)");
  ap->add_option("--realize", apo.realize, "Search for a dual form with this h-vector");
  ap->add_option("--budget", apo.budget, "Trial budget for --realize");
  ap->add_option("--vars", apo.vars, "Number of variables");
  ap->add_flag("--annihilator", apo.annihilator, "Print generators of Ann(F)");
  ap->add_flag("--experimental", apo.experimental, "--realize: allow non-SI targets, structured forms only");
  ap->add_option("--out", apo.out, "Write the realization record (JSON) here");

  VerifyArgs ver;
  auto* vf = app.add_subcommand("verify", "Run a verification suite");
  vf->add_option("suite", ver.suite, "prop25 | lemma24 | wlp | multi | forward | tables")
      ->required()
      ->check(CLI::IsMember({"prop25", "lemma24", "wlp", "multi", "forward", "tables"}));
  vf->add_option("--trials", ver.trials, "Trials (instances per branch for prop25)");
  vf->add_option("--p", ver.p, "wlp: a single small prime (default 2,3,5,7)");
  vf->add_option("--out", ver.out, "Report path (default gorcheck-<suite>.json; '-' for none)");

  for (auto* sub : {check, en, hil, ap, vf}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    gor::PrimeField(cfg.prime);
    gor::PrimeField(cfg.prime2);
    if (cfg.prime == cfg.prime2) throw UsageError("--prime and --prime2 must differ");
    if (cfg.threads > 0) gor::set_worker_count(cfg.threads);
    if (check->parsed()) return cmd_check(cfg, literal);
    if (en->parsed()) return cmd_enum(cfg, codim, socle, quartic, count);
    if (hil->parsed()) return cmd_hilbert(cfg, ideal_path, hdegree);
    if (ap->parsed()) return cmd_apolar(cfg, apo);
    if (vf->parsed()) return cmd_verify(cfg, ver);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const gor::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const gor::InvalidHVector& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const gor::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFatal;
  }
  return kExitUsage;
}
