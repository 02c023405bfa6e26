// specgeo: verification CLI for homogeneous special geometry.
// Subcommands run the check suites deterministically for a given seed and
// emit JSON on stdout plus a human summary on stderr.
// Exit codes: 0 all checks pass, 1 check failures, 2 usage errors,
// 3 internal route-mismatch errors.

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "specgeo/io.hpp"
#include "specgeo/suites.hpp"

using namespace specgeo;

namespace {

struct Output {
  std::string format = "json";
  std::vector<SuiteReport> reports;

  int finish() {
    if (format == "json")
      std::cout << to_json(reports).dump(2) << "\n";
    else
      for (auto& r : reports) print_text(std::cout, r, false);
    int failures = 0;
    for (auto& r : reports) {
      print_text(std::cerr, r);
      failures += r.failed();
    }
    std::cerr << (failures ? "FAIL" : "PASS") << ": " << failures << " failing check(s)\n";
    return failures ? 1 : 0;
  }
};

CorpusPoly corpus_from_file(const std::string& path) {
  PolyFile pf = load_poly(path);
  CorpusPoly c{std::filesystem::path(path).stem().string(), std::move(pf.h), pf.base_point};
  if (c.base.empty()) c.base.assign(c.h.n(), 1.0);
  if (!(c.h.eval(c.base) > 0))
    throw DomainError("polynomial file needs a base_point with h > 0");
  return c;
}

std::vector<CorpusPoly> corpus_from_dir(const std::string& dir) {
  std::vector<std::filesystem::path> files;
  for (auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw DomainError("no .json polynomial files in " + dir);
  std::vector<CorpusPoly> out;
  for (auto& f : files) out.push_back(corpus_from_file(f.string()));
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"specgeo: machine checks for hypersurface metrics, tube domains, "
               "Lagrangean cones, normal J-algebras and prehomogeneous modules"};
  app.require_subcommand(1);
  Output out;
  app.add_option("--format", out.format, "json|text")->check(CLI::IsMember({"json", "text"}));

  // tube-check
  std::string tube_poly, tube_suite = "isometries";
  int tube_points = 10;
  uint64_t tube_seed = 1;
  auto* tube = app.add_subcommand("tube-check", "tube-domain metric and isometry checks");
  tube->add_option("--poly", tube_poly, "polynomial JSON file")->required();
  tube->add_option("--suite", tube_suite, "isometries|product|pullback")
      ->check(CLI::IsMember({"isometries", "product", "pullback"}));
  tube->add_option("--points", tube_points, "sample points");
  tube->add_option("--seed", tube_seed, "PRNG seed");

  // cone-check
  std::string cone_poly, cone_suite = "lagrangean";
  int cone_points = 10;
  uint64_t cone_seed = 1;
  auto* cone = app.add_subcommand("cone-check", "Lagrangean cone and special-metric checks");
  cone->add_option("--poly", cone_poly, "polynomial JSON file")->required();
  cone->add_option("--suite", cone_suite, "lagrangean|gamma|gc-gs|lemma4h")
      ->check(CLI::IsMember({"lagrangean", "gamma", "gc-gs", "lemma4h"}));
  cone->add_option("--points", cone_points, "sample points");
  cone->add_option("--seed", cone_seed, "PRNG seed");

  // jalg
  auto* jalg = app.add_subcommand("jalg", "normal J-algebra families");
  jalg->require_subcommand(1);
  auto* jbuild = jalg->add_subcommand("build", "build a family member and print it as JSON");
  std::string family = "rank2", psi_file, gram_signs;
  int fp = 0, fs = 1;
  bool flip_x = false;
  jbuild->add_option("--family", family, "rank2|rank3")
      ->check(CLI::IsMember({"rank2", "rank3"}));
  jbuild->add_option("--p", fp, "dim x12- (rank2)");
  jbuild->add_option("--s", fs, "s parameter, mu2 = 1/sqrt(s) (rank2)");
  jbuild->add_flag("--flip-x", flip_x, "flip the sign of the x-block Gram (rank2)");
  jbuild->add_option("--psi", psi_file, "isometric map JSON file (rank3)");
  jbuild->add_option("--gram-signs", gram_signs,
                     "three +/- signs scaling the x23,x12,x13 block Grams, e.g. +,-,+");
  auto* jverify = jalg->add_subcommand("verify", "run the family verification sweep");
  bool jall = false;
  jverify->add_flag("--all", jall, "verify the whole shipped family sweep");

  // pv
  auto* pv = app.add_subcommand("pv", "prehomogeneous module catalog");
  pv->require_subcommand(1);
  auto* pvlist = pv->add_subcommand("list", "list catalog entries");
  std::string pv_entry;
  int pv_samples = 20;
  uint64_t pv_seed = 1;
  auto* pvcheck = pv->add_subcommand("check", "run the invariance/regularity/orbit checks");
  pvcheck->add_option("--entry", pv_entry, "entry name (default: all)");
  pvcheck->add_option("--samples", pv_samples, "sample points");
  pvcheck->add_option("--seed", pv_seed, "PRNG seed");
  int dmax = 3;
  auto* pvkeys = pv->add_subcommand("enumerate-keys", "enumerate key-algebra solutions");
  pvkeys->add_option("--dmax", dmax, "maximal invariant degree");

  // all
  uint64_t all_seed = 7;
  std::string data_dir = "data";
  int all_points = 10;
  auto* all = app.add_subcommand("all", "run every suite on the shipped corpus");
  all->add_option("--seed", all_seed, "PRNG seed");
  all->add_option("--data", data_dir, "corpus directory (default: data)");
  all->add_option("--points", all_points, "sample points per suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (tube->parsed()) {
      CorpusPoly c = corpus_from_file(tube_poly);
      if (tube_suite == "isometries")
        out.reports.push_back(suite_tube_isometries(c, tube_points, tube_seed));
      else if (tube_suite == "product")
        out.reports.push_back(suite_tube_product(c, tube_points, tube_seed));
      else
        out.reports.push_back(suite_tube_pullback(c, tube_points, tube_seed));
    } else if (cone->parsed()) {
      CorpusPoly c = corpus_from_file(cone_poly);
      if (cone_suite == "lagrangean")
        out.reports.push_back(suite_cone_lagrangean(c, cone_points, cone_seed));
      else if (cone_suite == "gamma")
        out.reports.push_back(suite_gamma());
      else if (cone_suite == "lemma4h")
        out.reports.push_back(suite_lemma4h(cone_seed, 100));
      else
        out.reports.push_back(suite_cone_gcgs(c, cone_points, cone_seed));
    } else if (jbuild->parsed()) {
      if (family == "rank2") {
        auto [L, st, h] = build_u0_rank2(fp, fs, flip_x);
        std::cout << algebra_to_json(L, st, h).dump(2) << "\n";
        return 0;
      }
      if (psi_file.empty()) {
        std::cerr << "jalg build --family rank3 requires --psi FILE\n";
        return 2;
      }
      IsometricMap psi = load_psi(psi_file);
      if (!gram_signs.empty()) {
        std::vector<ExactMat*> grams{&psi.gram_x, &psi.gram_y, &psi.gram_z};
        size_t g = 0;
        for (char ch : gram_signs) {
          if (ch == ',') continue;
          if (g >= grams.size()) throw DomainError("--gram-signs: expected three signs");
          if (ch == '-')
            for (auto& row : *grams[g])
              for (auto& v : row) v = -v;
          else if (ch != '+')
            throw DomainError("--gram-signs: use + or -");
          ++g;
        }
      }
      std::string warning;
      auto [L, st, h] = build_u0_rank3(psi, &warning);
      if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
      std::cout << algebra_to_json(L, st, h).dump(2) << "\n";
      return 0;
    } else if (jverify->parsed()) {
      out.reports.push_back(suite_jalg_families());
    } else if (pvlist->parsed()) {
      nlohmann::json list = nlohmann::json::array();
      for (auto& e : catalog())
        list.push_back(nlohmann::json{{"name", e.name},
                                      {"module", e.module_desc},
                                      {"dim", e.dim},
                                      {"degree", e.degree},
                                      {"isotropy", e.isotropy},
                                      {"implemented", e.implemented()}});
      std::cout << list.dump(2) << "\n";
      return 0;
    } else if (pvcheck->parsed()) {
      out.reports.push_back(suite_pv(pv_samples, pv_seed, pv_entry));
    } else if (pvkeys->parsed()) {
      nlohmann::json rows = nlohmann::json::array();
      for (auto& r : enumerate_key_solutions(dmax)) {
        nlohmann::json mu2 = nlohmann::json::array();
        for (auto& [p, q] : r.mu2)
          mu2.push_back(q == 1 ? std::to_string(p) : std::to_string(p) + "/" + std::to_string(q));
        rows.push_back(nlohmann::json{{"d", r.degree},
                                      {"l", r.rank},
                                      {"mu2", mu2},
                                      {"h", to_string(r.h)}});
      }
      SuiteReport rep = suite_keys(dmax);
      if (out.format == "json")
        std::cout << nlohmann::json{{"rows", rows}, {"report", to_json(rep)}}.dump(2) << "\n";
      else {
        for (auto& r : rows)
          std::cout << "d=" << r["d"] << "  l=" << r["l"] << "  mu^2=" << r["mu2"].dump()
                    << "  h=" << r["h"].get<std::string>() << "\n";
        print_text(std::cout, rep, false);
      }
      print_text(std::cerr, rep);
      return rep.pass() ? 0 : 1;
    } else if (all->parsed()) {
      out.reports = run_all(corpus_from_dir(data_dir), all_seed, all_points);
    }
  } catch (const RouteMismatchError& e) {
    std::cerr << "internal route mismatch: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return out.finish();
}
