// surf10: construct, certify and link degree-10 surfaces in P^4 over F_p.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <regex>

#include "CLI11.hpp"
#include "json.hpp"
#include "surfcas/report.hpp"

using namespace surfcas;
namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kFail = 1, kBudget = 2, kNoRow = 3, kNoLink = 4, kUsage = 64, kData = 65 };

struct RunConfig {
  std::uint32_t prime = PrimeField::kDefaultPrime;
  std::uint64_t seed = 1;
  int retries = 5;
  std::string smoothness = "fast";
  std::string range = "-1..7";
  std::string out = ".";
  int lo = -1, hi = 7;

  SmoothnessMode mode() const { return smoothness == "exact" ? SmoothnessMode::exact : SmoothnessMode::probabilistic; }
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void finish_config(RunConfig& c) {
  if (!is_prime(c.prime)) throw UsageError("--prime " + std::to_string(c.prime) + " is not prime");
  if (c.retries < 1) throw UsageError("--retries must be at least 1");
  std::smatch m;
  static const std::regex re(R"((-?\d+)\.\.(-?\d+))");
  if (!std::regex_match(c.range, m, re)) throw UsageError("--range expects a..b");
  c.lo = std::stoi(m[1]);
  c.hi = std::stoi(m[2]);
  if (c.lo > c.hi) throw UsageError("--range is empty");
}

void add_common(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--prime", c.prime, "characteristic")->capture_default_str();
  cmd->add_option("--seed", c.seed, "seed for every random draw")->capture_default_str();
  cmd->add_option("--retries", c.retries, "seed retries per route")->capture_default_str();
  cmd->add_option("--smoothness", c.smoothness, "Jacobian check")
      ->check(CLI::IsMember({"exact", "fast"}))
      ->capture_default_str();
  cmd->add_option("--range", c.range, "twists of the cohomology table, a..b")->capture_default_str();
  cmd->add_option("--out", c.out, "output directory")->capture_default_str();
}

FamilyId family_or_usage(const std::string& s) {
  auto f = parse_family(s);
  if (!f) throw UsageError("unknown family '" + s + "', expected one of A..H");
  return *f;
}

void write_text(const fs::path& p, const std::string& s) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << s;
}

struct FamilyRun {
  int code = kOk;
  std::string log;
};

FamilyRun construct_one(FamilyId f, const RunConfig& cfg) {
  FamilyRun run;
  const std::string name(1, to_char(f));
  const fs::path dir(cfg.out);
  ConstructOptions opt;
  opt.prime = cfg.prime;
  opt.seed = cfg.seed;
  opt.retries = cfg.retries;
  opt.smoothness = cfg.mode();
  auto t0 = std::chrono::steady_clock::now();
  Construction c = construct_family(f, opt);
  double construct_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!c.ok) {
    run.code = kBudget;
    run.log = name + ": retry budget exhausted\n";
    for (const auto& a : c.attempts) run.log += "  " + a.route + " seed " + std::to_string(a.seed) + ": " + a.outcome + "\n";
    return run;
  }
  for (const auto& s : c.stages)
    if (s.name != "S") write_ideal_file((dir / (name + "." + s.name + ".ideal")).string(), s.ideal, {"stage " + s.name});
  std::vector<std::string> header = {"family " + name, "route " + c.route, "seed " + std::to_string(c.seed_used)};
  write_ideal_file((dir / (name + ".ideal")).string(), c.ideal, header);

  CertifyOptions co;
  co.smoothness = cfg.mode();
  co.seed = cfg.seed;
  co.lo = cfg.lo;
  co.hi = cfg.hi;
  CertificationReport r = certify(c.ideal, f, co);
  r.timings.insert(r.timings.begin(), StageTiming{"construct", construct_seconds});
  write_text(dir / (name + ".report.json"), report_json(r, &c));
  write_text(dir / (name + ".report.txt"), report_text(r, &c));
  write_text(dir / (name + ".timings.json"), timings_json(r.timings));
  if (r.betti) write_text(dir / (name + ".betti.txt"), betti_diagram(*r.betti));
  run.code = r.pass() ? kOk : kFail;
  run.log = report_text(r, &c);
  return run;
}

int cmd_construct(const std::vector<std::string>& families, bool all, const RunConfig& cfg) {
  std::vector<FamilyId> todo;
  if (all) {
    todo.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
  } else {
    if (families.empty()) throw UsageError("construct needs a family letter or --all");
    for (const auto& s : families) todo.push_back(family_or_usage(s));
  }
  fs::create_directories(cfg.out);
  std::vector<std::future<FamilyRun>> jobs;
  for (FamilyId f : todo) jobs.push_back(std::async(std::launch::async, construct_one, f, std::cref(cfg)));
  int code = kOk;
  for (auto& j : jobs) {
    FamilyRun r = j.get();
    std::cout << r.log << (todo.size() > 1 ? "\n" : "");
    code = std::max(code, r.code);
  }
  return code;
}

Ideal load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_ideal_file(path);
}

int cmd_certify(const std::string& file, const std::string& fam, bool as_json, const RunConfig& cfg) {
  FamilyId f = family_or_usage(fam);
  Ideal I;
  try {
    I = load(file);
  } catch (const std::exception& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return kData;
  }
  CertifyOptions co;
  co.smoothness = cfg.mode();
  co.seed = cfg.seed;
  co.lo = cfg.lo;
  co.hi = cfg.hi;
  CertificationReport r;
  try {
    r = certify(I, f, co);
  } catch (const std::exception& e) {
    r.family = f;
    r.prime = I.prime();
    r.seed = cfg.seed;
    r.checks.push_back({"input", false, e.what()});
  }
  std::cout << (as_json ? report_json(r) : report_text(r));
  return r.pass() ? kOk : kFail;
}

int cmd_numerology(std::optional<std::int64_t> pi, std::optional<std::int64_t> chi, bool table, bool as_json) {
  using json = nlohmann::ordered_json;
  auto row_json = [](const FamilyDescriptor& d) {
    return json{{"family", std::string(1, to_char(d.id))},
                {"pi", d.pi},
                {"chi", d.chi},
                {"K2", d.K2()},
                {"N6", d.N6},
                {"N5", d.N5},
                {"type", d.birational_type},
                {"minus_one_lines", d.minus_one_lines},
                {"hilbert_scheme_dimension", d.hilbert_scheme_dimension}};
  };
  auto print_rows = [&](const std::vector<FamilyDescriptor>& rows) {
    if (as_json) {
      json a = json::array();
      for (const auto& d : rows) a.push_back(row_json(d));
      std::cout << a.dump(2) << "\n";
      return;
    }
    std::printf("%-6s %3s %4s %4s %3s %3s %-14s %6s %4s\n", "family", "pi", "chi", "K2", "N6", "N5", "type", "(-1)", "dim");
    for (const auto& d : rows)
      std::printf("%-6c %3lld %4lld %4lld %3lld %3lld %-14s %6lld %4d\n", to_char(d.id), (long long)d.pi,
                  (long long)d.chi, (long long)d.K2(), (long long)d.N6, (long long)d.N5, d.birational_type.c_str(),
                  (long long)d.minus_one_lines, d.hilbert_scheme_dimension);
  };
  if (table) {
    print_rows(family_table());
    return kOk;
  }
  if (!pi) throw UsageError("numerology needs --pi or --table");
  try {
    if (!chi) {
      Classification c = classify_d10(*pi);
      if (as_json) {
        json j{{"pi", c.pi}, {"summary", c.summary}};
        json a = json::array();
        for (const auto& d : c.families) a.push_back(row_json(d));
        j["families"] = a;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "pi=" << c.pi << ": " << c.summary << "\n";
        if (!c.families.empty()) print_rows(c.families);
      }
      return kOk;
    }
    MultisecantCounts m = lebarz_counts(*pi, *chi);
    std::int64_t k2 = double_point_K2(10, 2 * *pi - 12, *chi);
    if (as_json) {
      std::cout << json{{"pi", *pi}, {"chi", *chi}, {"sharp5", m.sharp5}, {"sharp6", m.sharp6}, {"K2", k2}}.dump(2)
                << "\n";
    } else {
      std::cout << "pi=" << *pi << " chi=" << *chi << "  #5=" << m.sharp5 << " #6=" << m.sharp6 << "  K^2=" << k2
                << "\n";
    }
    return kOk;
  } catch (const std::out_of_range& e) {
    std::cerr << e.what() << "\n";
    return kNoRow;
  }
}

int cmd_link(const std::string& file, int m, int n, const std::string& output, const RunConfig& cfg) {
  if (m < 1 || n < 1) throw UsageError("link degrees must be positive");
  Ideal I;
  try {
    I = load(file);
  } catch (const std::exception& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return kData;
  }
  Rng rng(cfg.seed);
  LinkResult lr;
  try {
    lr = link(saturate(I), m, n, rng, cfg.retries);
  } catch (const std::exception& e) {
    std::cerr << "link failed: " << e.what() << "\n";
    return kNoLink;
  }
  std::string target = output;
  if (target.empty()) {
    fs::path p(file);
    target = (fs::path(cfg.out) / (p.stem().string() + ".link" + std::to_string(m) + std::to_string(n) + ".ideal")).string();
  }
  if (lr.empty_residual) {
    std::cout << "residual: empty (the complete intersection is the scheme itself)\n";
    write_ideal_file(target, lr.residual, {"empty residual"});
    return kOk;
  }
  write_ideal_file(target, lr.residual,
                   {"(" + std::to_string(m) + "," + std::to_string(n) + ") residual of " + fs::path(file).filename().string()});
  auto inv = surface_invariants(lr.residual.hilbert_polynomial());
  auto dd = dimension_and_degree(lr.residual);
  if (inv)
    std::cout << "residual: degree " << inv->degree << ", pi " << inv->sectional_genus << ", chi " << inv->chi << "\n";
  else
    std::cout << "residual: dimension " << dd.dimension << ", degree " << dd.degree << "\n";
  std::cout << "written to " << target << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and certify smooth degree-10 surfaces in P^4 over F_p"};
  app.require_subcommand(1);
  RunConfig cfg;

  std::vector<std::string> families;
  bool all = false;
  auto* construct = app.add_subcommand("construct", "build a family and certify it");
  construct->add_option("family", families, "family letters A..H");
  construct->add_flag("--all", all, "all eight families in parallel");
  add_common(construct, cfg);

  std::string file, fam;
  bool as_json = false;
  auto* cert = app.add_subcommand("certify", "certify an .ideal file against a family");
  cert->add_option("file", file, ".ideal file")->required();
  cert->add_option("--family", fam, "expected family")->required();
  cert->add_flag("--json", as_json, "print the JSON report");
  add_common(cert, cfg);

  std::optional<std::int64_t> pi, chi;
  bool table = false;
  auto* num = app.add_subcommand("numerology", "classification and multisecant tables");
  num->add_option("--pi", pi, "sectional genus");
  num->add_option("--chi", chi, "Euler characteristic");
  num->add_flag("--table", table, "the eight family rows");
  num->add_flag("--json", as_json, "JSON output");

  int m = 0, n = 0;
  std::string output;
  auto* lk = app.add_subcommand("link", "residual in a general complete intersection");
  lk->add_option("file", file, ".ideal file")->required();
  lk->add_option("m", m, "first degree")->required();
  lk->add_option("n", n, "second degree")->required();
  lk->add_option("-o,--output", output, "residual file");
  add_common(lk, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    finish_config(cfg);
    if (*construct) return cmd_construct(families, all, cfg);
    if (*cert) return cmd_certify(file, fam, as_json, cfg);
    if (*num) return cmd_numerology(pi, chi, table, as_json);
    if (*lk) return cmd_link(file, m, n, output, cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
