// Command-line frontend: class sets, Brandt matrices, isogeny graphs,
// Ramanujan verdicts, surveys, and the algebraic identity checks.
//
// Exit codes: 0 success, 1 verification/internal failure, 2 invalid
// arguments, 3 enumeration ceiling reached.

#include "quatgraphs/compute.hpp"
#include "quatgraphs/parallel.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace qg = quatgraphs;

namespace {

void write_or_die(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
}

void require_prime(long long p, const char* what) {
  if (!qg::is_prime(p))
    throw std::invalid_argument(std::string(what) + " must be prime, got " +
                                std::to_string(p));
}

void require_dimension(int g) {
  if (g < 1 || g > 3)
    throw std::invalid_argument("--g must be 1, 2, or 3");
}

std::string rat_str(const qg::Rat& r) {
  return qg::num(r).str() + "/" + qg::den(r).str();
}

int run(int argc, char** argv) {
  CLI::App app{"Brandt matrices and superspecial isogeny graphs over definite "
               "quaternion algebras"};
  app.require_subcommand(1);

  std::string cache_flag;
  bool no_cache = false;
  int threads = 0;
  app.add_option("--cache-dir", cache_flag,
                 "cache directory (default: $QUATGRAPHS_CACHE_DIR if set)");
  app.add_flag("--no-cache", no_cache, "disable the on-disk cache");
  app.add_option("--threads", threads, "worker threads (default: hardware)");

  int g = 0;
  long long p = 0, n = 0, ell = 0, pmax = 0, nmax = 0;
  std::string json_path, csv_path, dot_path, kind;

  auto* c_class = app.add_subcommand("classset", "enumerate the class set");
  c_class->add_option("--g", g)->required();
  c_class->add_option("--p", p)->required();
  c_class->add_option("--json", json_path, "write the class set as JSON");

  auto* c_brandt = app.add_subcommand("brandt", "compute one Brandt matrix");
  c_brandt->add_option("--g", g)->required();
  c_brandt->add_option("--p", p)->required();
  c_brandt->add_option("--n", n)->required();
  c_brandt->add_option("--json", json_path);
  c_brandt->add_option("--csv", csv_path);

  auto* c_graph = app.add_subcommand("graph", "emit an isogeny graph");
  c_graph->add_option("--kind", kind, "big | little | enhanced")->required();
  c_graph->add_option("--g", g)->required();
  c_graph->add_option("--l", ell)->required();
  c_graph->add_option("--p", p)->required();
  c_graph->add_option("--json", json_path);
  c_graph->add_option("--dot", dot_path);

  auto* c_ram = app.add_subcommand("ramanujan", "exact Ramanujan verdict");
  c_ram->add_option("--g", g)->required();
  c_ram->add_option("--l", ell)->required();
  c_ram->add_option("--p", p)->required();

  auto* c_survey = app.add_subcommand("survey", "verdicts across a prime range");
  c_survey->add_option("--g", g)->required();
  c_survey->add_option("--l", ell)->required();
  c_survey->add_option("--pmax", pmax)->required();
  c_survey->add_option("--csv", csv_path);
  c_survey->add_option("--json", json_path);

  auto* c_verify = app.add_subcommand("verify", "run the identity suite");
  c_verify->add_option("--g", g)->required();
  c_verify->add_option("--p", p)->required();
  c_verify->add_option("--nmax", nmax)->required();

  app.parse(argc, argv);

  if (threads > 0) qg::set_thread_count(threads);
  qg::ComputeOptions opt;
  opt.cache_dir = qg::resolve_cache_dir(cache_flag, no_cache);

  if (*c_class) {
    require_dimension(g);
    require_prime(p, "--p");
    auto cs = qg::get_class_set(g, p, opt);
    std::cout << "g=" << g << " p=" << p << " h=" << cs->h() << "\n";
    std::cout << "mass " << rat_str(cs->mass_value) << "\n";
    std::cout << "aut counts";
    for (long long e : cs->aut_counts) std::cout << " " << e;
    std::cout << "\n";
    if (!json_path.empty()) write_or_die(json_path, qg::class_set_to_json(*cs));
    return 0;
  }

  if (*c_brandt) {
    require_dimension(g);
    require_prime(p, "--p");
    if (n < 1) throw std::invalid_argument("--n must be >= 1");
    auto B = qg::get_brandt(g, p, n, opt);
    std::cout << "g=" << g << " p=" << p << " n=" << n << " h=" << B->h << "\n";
    for (const auto& row : B->entries) {
      for (size_t j = 0; j < row.size(); ++j)
        std::cout << (j ? " " : "") << row[j];
      std::cout << "\n";
    }
    std::cout << "weights";
    for (long long e : B->weights) std::cout << " " << e;
    std::cout << "\n";
    if (!json_path.empty()) write_or_die(json_path, qg::brandt_to_json(*B));
    if (!csv_path.empty()) write_or_die(csv_path, qg::brandt_to_csv(*B));
    return 0;
  }

  if (*c_graph) {
    require_dimension(g);
    require_prime(p, "--p");
    require_prime(ell, "--l");
    if (ell == p) throw std::invalid_argument("--l and --p must differ");
    qg::WeightedGraph G = qg::get_graph(kind, g, ell, p, opt);
    std::cout << G.kind << " graph g=" << g << " l=" << ell << " p=" << p
              << ": " << G.vertex_count() << " vertices, " << G.edges.size()
              << " edge records\n";
    std::cout << "connected " << (qg::is_connected(G) ? "yes" : "no")
              << ", bipartite " << (qg::is_bipartite(G) ? "yes" : "no") << "\n";
    if (!json_path.empty()) write_or_die(json_path, qg::graph_to_json(G));
    if (!dot_path.empty()) write_or_die(dot_path, qg::graph_to_dot(G));
    return 0;
  }

  if (*c_ram) {
    require_dimension(g);
    require_prime(p, "--p");
    require_prime(ell, "--l");
    if (ell == p) throw std::invalid_argument("--l and --p must differ");
    qg::SpectralReport r = qg::get_verdict(g, ell, p, opt);
    std::cout << (r.ramanujan ? "RAMANUJAN" : "NOT RAMANUJAN") << "\n";
    std::cout << "h=" << r.h << " k=" << r.k << "\n";
    std::cout << "charpoly " << qg::poly_to_string(r.charpoly) << "\n";
    if (r.h > 1)
      std::cout << "max nontrivial |eigenvalue| in ["
                << qg::rat_to_decimal(r.second_largest_lo, 9) << ", "
                << qg::rat_to_decimal(r.second_largest_hi, 9) << "], bound "
                << "2*sqrt(" << r.k - 1 << ")\n";
    return 0;
  }

  if (*c_survey) {
    require_dimension(g);
    require_prime(ell, "--l");
    if (pmax < 2) throw std::invalid_argument("--pmax must be >= 2");
    auto rows = qg::ramanujan_survey(g, ell, pmax, opt);
    std::cout << qg::survey_to_csv(rows, g, ell);
    if (!csv_path.empty()) write_or_die(csv_path, qg::survey_to_csv(rows, g, ell));
    if (!json_path.empty()) write_or_die(json_path, qg::survey_to_json(rows, g, ell));
    for (const auto& row : rows)
      if (!row.error.empty()) return 1;
    return 0;
  }

  if (*c_verify) {
    require_dimension(g);
    require_prime(p, "--p");
    if (nmax < 2) throw std::invalid_argument("--nmax must be >= 2");
    auto cs = qg::get_class_set(g, p, opt);
    qg::IdentityReport rep = qg::verify_identities(*cs, nmax);
    for (const auto& c : rep.checks) {
      std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.name;
      if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
      std::cout << "\n";
    }
    return rep.all_pass() ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    CLI::App dummy;
    dummy.exit(e);  // prints the message
    return 2;
  } catch (const qg::enumeration_ceiling_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
