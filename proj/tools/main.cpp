// tcores: counts, listings and verification sweeps for t-cores.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "tcores/bqf.hpp"
#include "tcores/errors.hpp"
#include "tcores/families.hpp"
#include "tcores/map47.hpp"
#include "tcores/ncoding.hpp"
#include "tcores/suites.hpp"

using namespace tcores;

namespace {

struct Globals {
  std::string format = "table";
  std::string out;
  bool timings = false;
  int jobs = 1;
  int cap = kDefaultPartitionCap;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw std::runtime_error("cannot write " + g.out);
  f << text;
}

// Listing output: TSV when asked, otherwise aligned columns.
std::string listing(const Globals& g, const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  if (g.format == "tsv" || g.format == "json") {
    if (g.format == "tsv") {
      for (const auto& r : rows) {
        for (size_t i = 0; i < r.size(); ++i) os << (i ? "\t" : "") << r[i];
        os << "\n";
      }
      return os.str();
    }
    os << "[";
    for (size_t k = 1; k < rows.size(); ++k) {
      os << (k > 1 ? ",\n " : "\n ") << "{";
      for (size_t i = 0; i < rows[0].size(); ++i)
        os << (i ? ", " : "") << '"' << rows[0][i] << "\": \"" << rows[k][i] << '"';
      os << "}";
    }
    os << (rows.size() > 1 ? "\n" : "") << "]\n";
    return os.str();
  }
  std::vector<size_t> w(rows.empty() ? 0 : rows[0].size(), 0);
  for (const auto& r : rows)
    for (size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
  for (const auto& r : rows) {
    std::string line;
    for (size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(w[i] - r[i].size() + 2, ' ');
    }
    os << line << "\n";
  }
  return os.str();
}

int run_report(const Globals& g, const std::vector<SuiteSpec>& specs) {
  std::vector<ReportRecord> all;
  for (auto s : specs) {
    s.jobs = g.jobs;
    auto recs = run_suite(s);
    std::move(recs.begin(), recs.end(), std::back_inserter(all));
  }
  const auto fmt = g.format == "table" && !g.out.empty() ? ReportFormat::Json : parse_report_format(g.format);
  emit(g, format_records(all, fmt, g.timings));
  return all_ok(all) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"t-core counts, sums-of-squares maps and verification sweeps"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  app.add_option("--format", g.format, "table, json or tsv")->check(CLI::IsMember({"table", "json", "tsv"}));
  app.add_option("--out", g.out, "write the output to this path");
  app.add_flag("--timings", g.timings, "include elapsed_ms in reports");
  app.add_option("--jobs", g.jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--cap", g.cap, "largest n for brute-force partition enumeration");

  int t = 4;
  Int n = 0;
  bool sc = false;
  std::string method = "lattice";

  auto* count = app.add_subcommand("count", "c_t(n) or sc_t(n)");
  count->add_option("--t", t)->required();
  count->add_option("--n", n)->required();
  count->add_flag("--sc", sc, "self-conjugate cores only");
  count->add_option("--method", method, "oracle, lattice or both")->check(CLI::IsMember({"oracle", "lattice", "both"}));

  auto* enumerate = app.add_subcommand("enumerate", "list t-cores of n with abacus and N-coding");
  enumerate->add_option("--t", t)->required();
  enumerate->add_option("--n", n)->required();
  enumerate->add_flag("--sc", sc, "self-conjugate cores only");

  SuiteSpec spec;
  int t_opt = 0;
  Int n_opt = -1;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", spec.suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--t", t_opt, "t, or the first t with --t-max");
  verify->add_option("--t-max", spec.t_max);
  verify->add_option("--n", n_opt, "a single n");
  verify->add_option("--n-min", spec.n_min);
  verify->add_option("--n-max", spec.n_max);
  verify->add_option("--kind", spec.kind, "governance kind");

  Int disc = 0;
  bool seven = false, hurwitz = false, list = false;
  auto* classnum = app.add_subcommand("classnum", "class numbers of binary quadratic forms");
  classnum->add_option("--disc", disc)->required();
  classnum->add_flag("--7primitive", seven, "only forms with gcd(a,b,c) prime to 7");
  classnum->add_flag("--hurwitz", hurwitz, "weight 1/2 and 1/3 on forms with extra automorphisms");
  classnum->add_flag("--list", list, "print the reduced forms");

  auto* map47 = app.add_subcommand("map47", "the 2-to-1 map from C_4(7n+2) to SC_7(8n+1)");
  map47->add_option("--n", n)->required();

  auto* sc6forms = app.add_subcommand("sc6-forms", "self-conjugate 6-cores to forms of discriminant -96n-140");
  sc6forms->add_option("--n", n)->required();

  Int report_n = 10;
  auto* report = app.add_subcommand("report", "run every suite over a default range");
  report->add_option("--n-max", report_n);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count) {
      std::optional<Int> lat, orc;
      if (method != "oracle") lat = sc ? count_sc_t_cores(t, n) : count_t_cores(t, n);
      if (method != "lattice") {
        if (n > g.cap) throw ResourceError("n = " + std::to_string(n) + " exceeds the oracle cap " + std::to_string(g.cap));
        const int ni = static_cast<int>(n);
        orc = static_cast<Int>(sc ? enumerate_sc_t_cores_bruteforce(t, ni, g.cap).size()
                                  : enumerate_t_cores_bruteforce(t, ni, g.cap).size());
      }
      if (lat && orc && *lat != *orc) {
        std::cerr << "lattice " << *lat << " and oracle " << *orc << " disagree\n";
        return 1;
      }
      emit(g, std::to_string(lat ? *lat : *orc) + "\n");
      return 0;
    }
    if (*enumerate) {
      std::vector<std::vector<std::string>> rows{{"partition", "abacus", "ncoding", "size"}};
      const auto codes = sc ? enumerate_sc_t_cores_lattice(t, n) : enumerate_t_cores_lattice(t, n);
      for (const auto& c : codes) {
        const auto p = partition_from_ncoding(c);
        rows.push_back({to_string(p), to_string(normalize_abacus(p, t)), to_string(c), std::to_string(p.size())});
      }
      emit(g, listing(g, rows));
      return 0;
    }
    if (*verify) {
      if (t_opt > 0) {
        spec.t_min = t_opt;
        spec.t_max = std::max(spec.t_max, t_opt);
        if (verify->count("--t-max") == 0) spec.t_max = t_opt;
      }
      if (n_opt >= 0) spec.n_min = spec.n_max = n_opt;
      return run_report(g, {spec});
    }
    if (*classnum) {
      if (list) {
        std::vector<std::vector<std::string>> rows{{"a", "b", "c", "disc"}};
        for (const auto& q : reduced_forms(disc)) {
          if (seven && std::gcd(std::gcd(q.a, std::abs(q.b)), q.c) % 7 == 0) continue;
          rows.push_back({std::to_string(q.a), std::to_string(q.b), std::to_string(q.c), std::to_string(disc)});
        }
        emit(g, listing(g, rows));
        return 0;
      }
      if (hurwitz && seven) throw DomainError("--hurwitz and --7primitive cannot be combined");
      const std::string v = hurwitz ? to_string(class_count_hurwitz(disc))
                            : seven ? std::to_string(class_count_7primitive(disc))
                                    : std::to_string(class_count(disc));
      emit(g, v + "\n");
      return 0;
    }
    if (*map47) {
      if (n % 7 == 4) {
        std::cerr << "map47: n = " << n << " is 4 mod 7; sc_4(7n+2) can be nonzero there and psi may hit a "
                  << "triple with a zero entry, so the map is not defined\n";
        return 2;
      }
      std::vector<std::vector<std::string>> rows{{"partition", "abacus", "b", "psi", "image", "image_partition"}};
      for (const auto& r : map47_rows(n))
        rows.push_back({to_string(r.partition), to_string(r.abacus), to_string(r.b), to_string(r.psi),
                        to_string(r.image), to_string(r.image_partition)});
      if (g.format == "table") g.format = "tsv";
      emit(g, listing(g, rows));
      return 0;
    }
    if (*sc6forms) {
      std::vector<std::vector<std::string>> rows{{"partition", "family", "triple", "form", "disc"}};
      for (const auto& c : enumerate_sc_t_cores_lattice(6, n)) {
        const auto p = partition_from_ncoding(c);
        const auto fc = sc6_constraints_check(normalize_abacus(p, 6));
        const auto q = phi_sc6(p);
        rows.push_back({to_string(p), to_string(fc), to_string(sc6_to_triple(fc, n)), to_string(q),
                        std::to_string(q.discriminant())});
      }
      emit(g, listing(g, rows));
      return 0;
    }
    if (*report) {
      const Int m = report_n;
      return run_report(g, {
                               {"theorem11", 3, 7, 0, m},
                               {"theorem12", 3, 7, 0, m},
                               {"theorem13", 4, 6, 0, m},
                               {"theorem14", 3, 8, 0, m},
                               {"theorem15", 3, 8, 0, m},
                               {"sc6", 6, 6, 0, m},
                               {"s9", 9, 9, 0, m},
                               {"governance", 3, 3, 0, m, "sc2t_sc2t1"},
                               {"governance", 3, 3, 0, std::min<Int>(m, 3), "c4_sc7_union"},
                               {"map47", 4, 4, 0, m},
                               {"kbkm", 4, 4, 0, m},
                               {"hnumbers"},
                           });
    }
  } catch (const std::exception& e) {
    std::cerr << "tcores: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
