// Command-line surface over the core library. Every command prints a single
// machine-readable document (JSON, or CSV for tables); identical inputs
// produce byte-identical output. Exit codes: 0 success, 1 validation error,
// 2 precision failure.

#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dimerwind/bigfloat.hpp"
#include "dimerwind/enumeration.hpp"
#include "dimerwind/errors.hpp"
#include "dimerwind/honeycomb.hpp"
#include "dimerwind/io.hpp"
#include "dimerwind/kasteleyn.hpp"
#include "dimerwind/limitlaw.hpp"
#include "dimerwind/spectral.hpp"
#include "dimerwind/theta.hpp"
#include "dimerwind/verify.hpp"

namespace {

using dimerwind::BigInt;
using ordered_json = nlohmann::ordered_json;
using cxd = std::complex<double>;

ordered_json count_json(const BigInt& c) {
  static const BigInt kMaxExact = (BigInt(1) << 53);
  if (c <= kMaxExact) return c.convert_to<std::int64_t>();
  return c.str();
}

std::string precision_label(unsigned digits) {
  return digits == 0 ? "double" : "mpfr-" + std::to_string(digits);
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

unsigned env_default_precision() {
  if (const char* env = std::getenv("DIMERWIND_PRECISION")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v < 0 || v > 100000) {
      throw std::invalid_argument("DIMERWIND_PRECISION must be a small nonnegative integer");
    }
    return static_cast<unsigned>(v);
  }
  return 0;
}

struct Args {
  int m = 1;
  int n = 3;
  double alpha = 0.0;
  double beta = 0.0;
  unsigned precision = 0;  // 0 = hardware double (or auto for extraction)
  int cap = dimerwind::kEnumerationCap;
  std::string method = "brute";
  std::string format = "csv";
  std::string out;
  std::string out_dir;
  std::string graph_out;
  std::string suite;
  double rho = std::numbers::sqrt3;
  std::string sizes = "2x6,4x12,8x24";
  double tol = 1e-9;
  std::string fe_method = "both";
  int theta_index = 3;
  double zeta_re = 0.0, zeta_im = 0.0;
  double q_re = 0.0, q_im = 0.0;
  bool has_q = false;
  double tau_re = 0.0, tau_im = 0.0;
  bool has_tau = false;
  std::string side = "series";
};

std::vector<std::pair<int, int>> parse_sizes(const std::string& list) {
  std::vector<std::pair<int, int>> sizes;
  std::size_t pos = 0;
  while (pos < list.size()) {
    std::size_t comma = list.find(',', pos);
    if (comma == std::string::npos) comma = list.size();
    const std::string item = list.substr(pos, comma - pos);
    const std::size_t x = item.find('x');
    if (x == std::string::npos) {
      throw std::invalid_argument("sizes must look like 2x6,4x12");
    }
    sizes.push_back({std::stoi(item.substr(0, x)), std::stoi(item.substr(x + 1))});
    pos = comma + 1;
  }
  if (sizes.empty()) throw std::invalid_argument("no sizes given");
  return sizes;
}

int cmd_lattice_info(const Args& a) {
  const auto g = dimerwind::TorusGraph::build(a.m, a.n);
  ordered_json j;
  j["m"] = g.m();
  j["n"] = g.n();
  j["vertices"] = g.num_vertices();
  j["edges"] = g.num_edges();
  j["edge_type_counts"] = {{"I", 2 * g.m() * g.n()},
                           {"II", 2 * g.m() * g.n()},
                           {"III", 2 * g.m() * g.n()}};
  const auto [num, den] = g.modulus_ratio();
  j["modulus"] = {{"description", "i*n/(sqrt(3)*m)"},
                  {"num", num},
                  {"den", den},
                  {"rho", g.rho()}};
  if (g.n() % 3 == 0) {
    const auto m0 = dimerwind::reference_matching(g);
    const auto c = dimerwind::count_types(g, m0);
    j["reference_matching"] = {{"edges", static_cast<int>(m0.edge_ids().size())},
                               {"N_I", c.type_i},
                               {"N_II", c.type_ii},
                               {"N_III", c.type_iii}};
  }
  j["precision"] = "exact";
  if (!a.graph_out.empty()) {
    std::ofstream os(a.graph_out);
    if (!os) throw std::invalid_argument("cannot write " + a.graph_out);
    dimerwind::write_graph(os, g);
    j["graph_path"] = a.graph_out;
  }
  emit(j);
  return 0;
}

int cmd_enumerate(const Args& a) {
  const auto g = dimerwind::TorusGraph::build(a.m, a.n);
  const auto count = dimerwind::count_matchings(g, a.cap);
  ordered_json j;
  j["m"] = a.m;
  j["n"] = a.n;
  j["count"] = count;
  j["cap"] = a.cap;
  j["precision"] = "exact";
  emit(j);
  return 0;
}

int cmd_winding(const Args& a) {
  dimerwind::WindingTable table;
  std::string precision;
  if (a.method == "brute") {
    const auto g = dimerwind::TorusGraph::build(a.m, a.n);
    table = dimerwind::brute_winding_table(g, a.cap);
    precision = "exact";
  } else if (a.method == "dft") {
    table = dimerwind::extract_winding_counts(a.m, a.n, a.precision);
    const unsigned used =
        a.precision ? a.precision : dimerwind::suggested_digits(a.m, a.n);
    precision = "mpfr-" + std::to_string(used);
  } else {
    throw std::invalid_argument("winding method must be brute or dft");
  }

  const std::string body = a.format == "json" ? dimerwind::table_json(table)
                                              : dimerwind::table_csv(table);
  if (a.format != "json" && a.format != "csv") {
    throw std::invalid_argument("format must be csv or json");
  }
  if (a.out.empty()) {
    std::cout << body;
    if (a.format == "json") std::cout << "\n";
    return 0;
  }
  std::ofstream os(a.out);
  if (!os) throw std::invalid_argument("cannot write " + a.out);
  os << body;
  ordered_json j;
  j["m"] = a.m;
  j["n"] = a.n;
  j["method"] = a.method;
  j["total"] = count_json(table.total());
  j["entries"] = static_cast<int>(table.counts.size());
  j["path"] = a.out;
  j["precision"] = precision;
  emit(j);
  return 0;
}

template <class R>
ordered_json partition_payload(const Args& a, unsigned digits) {
  const auto p = dimerwind::Perturbation<R>::make(
      dimerwind::Cx<R>(R(a.alpha)), dimerwind::Cx<R>(R(a.beta)), a.m, a.n);
  const auto z = dimerwind::partition(p);
  ordered_json j;
  j["m"] = a.m;
  j["n"] = a.n;
  j["alpha"] = a.alpha;
  j["beta"] = a.beta;
  if (z.is_zero) {
    j["log_magnitude"] = nullptr;
    j["phase"] = 0.0;
    j["value_if_representable"] = 0.0;
  } else {
    const double lm = static_cast<double>(z.log_mag);
    const double ph = static_cast<double>(z.phase);
    j["log_magnitude"] = lm;
    j["phase"] = ph;
    if (lm < 700.0) {
      j["value_if_representable"] = std::exp(lm) * std::cos(ph);
    } else {
      j["value_if_representable"] = nullptr;
    }
  }
  j["precision"] = precision_label(digits);
  return j;
}

int cmd_partition(const Args& a) {
  if (a.precision == 0) {
    emit(partition_payload<double>(a, 0));
  } else {
    dimerwind::ScopedPrecision prec(a.precision);
    emit(partition_payload<dimerwind::BigFloat>(a, a.precision));
  }
  return 0;
}

int cmd_mgf(const Args& a) {
  ordered_json j;
  j["m"] = a.m;
  j["n"] = a.n;
  j["alpha"] = a.alpha;
  j["beta"] = a.beta;
  if (a.precision == 0) {
    j["value"] = dimerwind::mgf<double>(a.alpha, a.beta, a.m, a.n);
  } else {
    dimerwind::ScopedPrecision prec(a.precision);
    const dimerwind::BigFloat v = dimerwind::mgf<dimerwind::BigFloat>(
        dimerwind::BigFloat(a.alpha), dimerwind::BigFloat(a.beta), a.m, a.n);
    j["value"] = v.convert_to<double>();
    j["value_string"] = v.str();
  }
  j["precision"] = precision_label(a.precision);
  emit(j);
  return 0;
}

int cmd_theta(const Args& a) {
  if (a.has_q == a.has_tau) {
    throw std::invalid_argument("give exactly one of --q-re/--q-im or --tau-re/--tau-im");
  }
  const cxd zeta(a.zeta_re, a.zeta_im);
  ordered_json j;
  int terms = 0;
  cxd value;
  if (a.side == "series" || a.side == "product") {
    const dimerwind::Nome nome = a.has_q
                                     ? dimerwind::Nome::from_q(cxd(a.q_re, a.q_im))
                                     : dimerwind::Nome::from_tau(cxd(a.tau_re, a.tau_im));
    value = a.side == "series"
                ? dimerwind::theta(a.theta_index, zeta, nome, &terms)
                : dimerwind::theta_product(a.theta_index, zeta, nome, &terms);
  } else if (a.side == "sum" || a.side == "closed") {
    if (!a.has_tau) {
      throw std::invalid_argument("combination sides need --tau-re/--tau-im");
    }
    value = dimerwind::theta_combination(
        zeta, cxd(a.tau_re, a.tau_im),
        a.side == "sum" ? dimerwind::CombinationSide::sum
                        : dimerwind::CombinationSide::closed);
    terms = -1;
  } else {
    throw std::invalid_argument("side must be series, product, sum or closed");
  }
  j["value_re"] = value.real();
  j["value_im"] = value.imag();
  j["terms_used"] = terms;
  j["precision"] = "double";
  emit(j);
  return 0;
}

int cmd_free_energy(const Args& a) {
  ordered_json j;
  double v1 = 0.0, v2 = 0.0;
  if (a.fe_method == "both" || a.fe_method == "log-r1") {
    const auto f = dimerwind::free_energy(dimerwind::FreeEnergyMethod::log_r1_integral, a.tol);
    v1 = f.value;
    j["log_r1_integral"] = {{"value", f.value}, {"estimated_error", f.estimated_error}};
  }
  if (a.fe_method == "both" || a.fe_method == "double-integral") {
    const auto f = dimerwind::free_energy(dimerwind::FreeEnergyMethod::double_integral, a.tol);
    v2 = f.value;
    j["double_integral"] = {{"value", f.value}, {"estimated_error", f.estimated_error}};
  }
  if (a.fe_method == "both") {
    j["methods_gap"] = std::abs(v1 - v2);
  } else if (a.fe_method != "log-r1" && a.fe_method != "double-integral") {
    throw std::invalid_argument("free-energy method must be both, log-r1 or double-integral");
  }
  j["precision"] = "double";
  emit(j);
  return 0;
}

int cmd_verify(const Args& a) {
  const auto checks = dimerwind::verify_suite(a.suite);
  bool all = true;
  ordered_json rows = ordered_json::array();
  for (const auto& c : checks) {
    all = all && c.pass;
    rows.push_back({{"check_name", c.check_name},
                    {"value", c.value},
                    {"target", c.target},
                    {"residual", c.residual},
                    {"pass", c.pass}});
  }
  ordered_json j;
  j["suite"] = a.suite;
  j["checks"] = std::move(rows);
  j["pass"] = all;
  j["precision"] = "double";
  emit(j);
  return all ? 0 : 1;
}

int cmd_converge(const Args& a) {
  const auto sizes = parse_sizes(a.sizes);
  const auto report = dimerwind::convergence_report(a.rho, sizes, a.precision, a.out_dir);
  std::cout << dimerwind::report_json(report) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toroidal honeycomb dimer model: exact partition functions, "
               "winding statistics, theta functions, asymptotics"};
  app.require_subcommand(1);
  Args a;
  try {
    a.precision = env_default_precision();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  auto add_mn = [&](CLI::App* c) {
    c->add_option("--m", a.m, "cells in the x direction")->required();
    c->add_option("--n", a.n, "cells in the y direction")->required();
  };

  auto* lattice = app.add_subcommand("lattice-info", "graph shape, modulus, reference matching");
  add_mn(lattice);
  lattice->add_option("--graph-out", a.graph_out, "write the edge list to a file");

  auto* enumerate = app.add_subcommand("enumerate", "exhaustive matching count");
  add_mn(enumerate);
  enumerate->add_option("--cap", a.cap, "max admissible 4mn");

  auto* winding = app.add_subcommand("winding", "winding-class counts");
  add_mn(winding);
  winding->add_option("--method", a.method, "brute or dft")->required();
  winding->add_option("--precision", a.precision, "decimal digits for dft (0 = auto)");
  winding->add_option("--cap", a.cap, "max admissible 4mn for brute");
  winding->add_option("--format", a.format, "csv or json");
  winding->add_option("--out", a.out, "write the table to a file");

  auto* part = app.add_subcommand("partition", "perturbed partition function");
  add_mn(part);
  part->add_option("--alpha", a.alpha, "type-I perturbation");
  part->add_option("--beta", a.beta, "type-II/III perturbation");
  part->add_option("--precision", a.precision, "decimal digits (0 = double)");

  auto* mgfc = app.add_subcommand("mgf", "winding moment generating function");
  add_mn(mgfc);
  mgfc->add_option("--alpha", a.alpha)->required();
  mgfc->add_option("--beta", a.beta)->required();
  mgfc->add_option("--precision", a.precision, "decimal digits (0 = double)");

  auto* th = app.add_subcommand("theta", "Jacobi theta evaluation");
  th->add_option("--index", a.theta_index, "theta index 1..4");
  th->add_option("--zeta-re", a.zeta_re);
  th->add_option("--zeta-im", a.zeta_im);
  auto* qre = th->add_option("--q-re", a.q_re);
  th->add_option("--q-im", a.q_im);
  auto* taure = th->add_option("--tau-re", a.tau_re);
  th->add_option("--tau-im", a.tau_im);
  th->add_option("--side", a.side, "series, product, sum or closed");

  auto* fe = app.add_subcommand("free-energy", "free energy per fundamental domain");
  fe->add_option("--method", a.fe_method, "both, log-r1 or double-integral");
  fe->add_option("--tol", a.tol, "quadrature tolerance");

  auto* verify = app.add_subcommand("verify", "named numerical check suites");
  verify->add_option("--suite", a.suite, "theta, roots, prop18, corollaries, lemma12-13, free-energy")
      ->required();

  auto* converge = app.add_subcommand("converge", "winding-law convergence report");
  converge->add_option("--rho", a.rho, "target modulus ratio");
  converge->add_option("--sizes", a.sizes, "comma list like 2x6,4x12,8x24");
  converge->add_option("--precision", a.precision, "decimal digits for extraction (0 = auto)");
  converge->add_option("--out-dir", a.out_dir, "directory for per-size tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  a.has_q = qre->count() > 0;
  a.has_tau = taure->count() > 0;

  try {
    if (lattice->parsed()) return cmd_lattice_info(a);
    if (enumerate->parsed()) return cmd_enumerate(a);
    if (winding->parsed()) return cmd_winding(a);
    if (part->parsed()) return cmd_partition(a);
    if (mgfc->parsed()) return cmd_mgf(a);
    if (th->parsed()) return cmd_theta(a);
    if (fe->parsed()) return cmd_free_energy(a);
    if (verify->parsed()) return cmd_verify(a);
    if (converge->parsed()) return cmd_converge(a);
    std::cerr << "error: no subcommand\n";
    return 1;
  } catch (const dimerwind::PrecisionFailure& e) {
    std::cerr << "precision failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
