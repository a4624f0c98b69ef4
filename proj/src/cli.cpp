#include "appellkit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "appellkit/appell.hpp"
#include "appellkit/config.hpp"
#include "appellkit/fueter_map.hpp"
#include "appellkit/spaces.hpp"
#include "appellkit/transforms.hpp"
#include "appellkit/verify.hpp"

namespace appellkit {

namespace {

using Json = nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format;

  RunConfig resolve() const {
    RunConfig c = load_config(config_path);
    if (seed) {
      c.seed = *seed;
    }
    if (format) {
      c.format = parse_format(*format);
    }
    c.validate();
    return c;
  }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path, "JSON run config (falls back to $APPELLKIT_CONFIG)");
  cmd->add_option("--seed", flags.seed, "RNG seed for randomized identities");
  cmd->add_option("--format", flags.format, "json | csv | md")->check(CLI::IsMember({"json", "csv", "md"}));
}

// "a" or "a,b,c,d".
QuaternionFloat parse_quaternion(const std::string& s) {
  std::vector<double> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
    } catch (const std::exception&) {
      throw DomainError("cannot parse quaternion '" + s + "'");
    }
  }
  if (parts.size() == 1) {
    return QuaternionFloat(parts[0]);
  }
  if (parts.size() != 4) {
    throw DomainError("quaternion needs 1 or 4 components, got '" + s + "'");
  }
  return {parts[0], parts[1], parts[2], parts[3]};
}

struct Grid {
  double lo = 0.0;
  double hi = 0.0;
  unsigned count = 0;
};

Grid parse_grid(const std::string& s) {
  Grid g;
  char c1 = 0;
  char c2 = 0;
  std::istringstream in(s);
  if (!(in >> g.lo >> c1 >> g.hi >> c2 >> g.count) || c1 != ':' || c2 != ':' || g.count == 0 || !in.eof()) {
    throw DomainError("grid must look like LO:HI:COUNT, got '" + s + "'");
  }
  return g;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f || !(f << text) || !f.flush()) {
    throw std::ios_base::failure("cannot write " + path.string());
  }
}

std::string csv_float(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

int cmd_tables(unsigned kmax, const std::string& out_dir, std::ostream& out) {
  if (kmax > 64) {
    throw DomainError("kmax must be at most 64, got " + std::to_string(kmax));
  }
  std::ostringstream tjk_csv;
  tjk_csv << "k,j,T\n";
  for (unsigned k = 0; k <= kmax; ++k) {
    for (unsigned j = 0; j <= k; ++j) {
      tjk_csv << k << ',' << j << ',' << tjk(k, j).get_str() << '\n';
    }
  }
  std::ostringstream ck_csv;
  ck_csv << "k,c\n";
  for (unsigned k = 0; k <= kmax; ++k) {
    ck_csv << k << ',' << ck(k).get_str() << '\n';
  }
  const std::vector<WeightSequence> ws = {WeightSequence::hardy(), WeightSequence::fock(), WeightSequence::dirichlet(),
                                          WeightSequence::bergman()};
  std::vector<WeightSequence> bs;
  std::ostringstream w_csv;
  w_csv << "k";
  for (const auto& w : ws) {
    bs.push_back(b_from_c(w));
    w_csv << ",c_" << w.name() << ",b_" << w.name();
  }
  w_csv << '\n';
  for (unsigned k = 0; k <= kmax; ++k) {
    w_csv << k;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      w_csv << ',' << ws[i].value(k).get_str() << ',' << bs[i].value(k).get_str();
    }
    w_csv << '\n';
  }
  const std::filesystem::path dir(out_dir);
  write_file(dir / "tjk.csv", tjk_csv.str());
  write_file(dir / "ck.csv", ck_csv.str());
  write_file(dir / "weights.csv", w_csv.str());
  out << "wrote tjk.csv, ck.csv, weights.csv to " << dir.string() << '\n';
  return kExitPass;
}

int cmd_verify(const std::string& suite, const RunConfig& config, const std::string& output, std::ostream& out,
               std::ostream& err) {
  Report report{suite, config, run_suite(suite, config)};
  const std::string text = render(report, config.format);
  if (output.empty()) {
    out << text;
  } else {
    write_file(output, text);
  }
  for (const auto& r : report.results) {
    if (!r.pass) {
      err << "FAIL " << r.identity << (r.note.empty() ? "" : ": " + r.note) << '\n';
    }
  }
  return report.pass() ? kExitPass : kExitFail;
}

int cmd_kernel(const std::string& space, const std::string& q, const std::string& p, const std::string& grid,
               std::optional<unsigned> n, const RunConfig& config, std::ostream& out) {
  const WeightSequence w = WeightSequence::named(space);
  const unsigned kmax = n.value_or(config.degree_cap);
  // buffered so a domain error leaves no partial CSV behind
  std::ostringstream csv;
  csv << "q0,q1,q2,q3,p0,p1,p2,p3,k0,k1,k2,k3,tail\n";
  auto row = [&](const QuaternionFloat& a, const QuaternionFloat& b) {
    const auto k = kernel_eval(w, a, b, kmax);
    for (const auto& x : {a, b, k.value}) {
      csv << csv_float(x.x0) << ',' << csv_float(x.x1) << ',' << csv_float(x.x2) << ',' << csv_float(x.x3) << ',';
    }
    csv << csv_float(k.tail) << '\n';
  };
  if (!grid.empty()) {
    const Grid g = parse_grid(grid);
    for (unsigned i = 0; i < g.count; ++i) {
      for (unsigned j = 0; j < g.count; ++j) {
        const double step = g.count == 1 ? 0.0 : (g.hi - g.lo) / (g.count - 1);
        row(QuaternionFloat(g.lo + i * step), QuaternionFloat(g.lo + j * step));
      }
    }
    out << csv.str();
    return kExitPass;
  }
  if (q.empty() || p.empty()) {
    throw DomainError("kernel needs --q and --p, or --grid");
  }
  row(parse_quaternion(q), parse_quaternion(p));
  out << csv.str();
  return kExitPass;
}

Json quaternion_array(const std::vector<QuaternionFloat>& v) {
  Json a = Json::array();
  for (const auto& x : v) {
    a.push_back({x.x0, x.x1, x.x2, x.x3});
  }
  return a;
}

int cmd_transform(const std::string& input, const std::string& output, const std::string& mode,
                  const RunConfig& config, std::ostream& out) {
  std::ifstream in(input);
  if (!in) {
    throw std::ios_base::failure("cannot read " + input);
  }
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw DomainError(input + " is not valid JSON: " + e.what());
  }
  if (!j.is_array()) {
    throw DomainError("transform input must be a JSON array of 4-tuples");
  }
  L2Function phi;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4 || !std::all_of(e.begin(), e.end(), [](const Json& x) { return x.is_number(); })) {
      throw DomainError("transform input entries must be arrays of 4 numbers");
    }
    phi.beta.emplace_back(e[0].get<double>(), e[1].get<double>(), e[2].get<double>(), e[3].get<double>());
  }
  const AppellSeries<double> f =
      mode == "quadrature" ? bargmann_BF_quadrature(phi, gauss_hermite(config.hermite_nodes)) : bargmann_BF(phi);
  const std::string text = quaternion_array(f.coeffs()).dump() + "\n";
  if (output.empty()) {
    out << text;
  } else {
    write_file(output, text);
  }
  return kExitPass;
}

int cmd_table1(const RunConfig& config, std::ostream& out) {
  const auto rows = table1_report(32);
  switch (config.format) {
    case OutputFormat::csv:
      out << table1_csv(rows);
      break;
    case OutputFormat::md:
      out << table1_markdown(rows);
      break;
    case OutputFormat::json: {
      Json a = Json::array();
      for (const auto& r : rows) {
        a.push_back({{"space", r.space},
                     {"c", r.c_formula},
                     {"b", r.b_formula},
                     {"norm", r.norm_formula},
                     {"deficit", r.deficit.get_str()},
                     {"exact", r.b_exact},
                     {"checked_up_to", r.checked_up_to},
                     {"note", r.note}});
      }
      out << a.dump(2) << '\n';
      break;
    }
  }
  const bool exact = std::all_of(rows.begin(), rows.end(),
                                 [](const FmrRow& r) { return r.b_exact && r.deficit == r.deficit_expected; });
  return exact ? kExitPass : kExitFail;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clifford-Appell polynomials, weighted quaternionic spaces and their identities"};
  app.require_subcommand(1);
  CommonFlags common;

  auto* tables = app.add_subcommand("tables", "Export T^k_j, c_k and weight tables as CSV with exact rationals");
  unsigned kmax = 12;
  std::string out_dir = ".";
  tables->add_option("--kmax", kmax, "Largest k (at most 64)");
  tables->add_option("--out", out_dir, "Output directory");

  auto* verify = app.add_subcommand("verify", "Run identity suites and print a report");
  std::string suite = "all";
  std::optional<double> gamma_fault;
  std::string verify_output;
  verify->add_option("--suite", suite, "all | appell | spaces | operators | transforms | fmr")
      ->check(CLI::IsMember({"all", "appell", "spaces", "operators", "transforms", "fmr"}));
  verify->add_option("--inject-gamma-fault", gamma_fault, "Replace gamma_1 of the weighted shift (negative control)");
  verify->add_option("--output", verify_output, "Write the report to a file");
  add_common(verify, common);

  auto* kernel = app.add_subcommand("kernel", "Evaluate a reproducing kernel, one pair or a real grid, as CSV");
  std::string space = "fock";
  std::string q;
  std::string p;
  std::string grid;
  std::optional<unsigned> n;
  kernel->add_option("--space", space, "hardy | fock | dirichlet | bergman");
  kernel->add_option("--q", q, "a or a,b,c,d");
  kernel->add_option("--p", p, "a or a,b,c,d");
  kernel->add_option("--grid", grid, "LO:HI:COUNT real grid for both arguments");
  kernel->add_option("-N,--kmax", n, "Truncation (default: config degree cap)");
  add_common(kernel, common);

  auto* transform = app.add_subcommand("transform", "Hermite coefficients to Appell coefficients (B^F)");
  std::string input;
  std::string transform_output;
  std::string mode = "coefficient";
  transform->add_option("--input", input, "JSON array of quaternion 4-tuples")->required();
  transform->add_option("--output", transform_output, "Output file (default stdout)");
  transform->add_option("--mode", mode, "coefficient | quadrature")->check(CLI::IsMember({"coefficient", "quadrature"}));
  add_common(transform, common);

  auto* table1 = app.add_subcommand("table1", "Fueter mapping ranges of the four weighted spaces");
  add_common(table1, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*tables) {
      return cmd_tables(kmax, out_dir, out);
    }
    RunConfig config = common.resolve();
    if (*verify) {
      if (gamma_fault) {
        config.gamma_fault = gamma_fault;
      }
      return cmd_verify(suite, config, verify_output, out, err);
    }
    if (*kernel) {
      return cmd_kernel(space, q, p, grid, n, config, out);
    }
    if (*transform) {
      return cmd_transform(input, transform_output, mode, config, out);
    }
    if (*table1) {
      if (!common.format) {
        config.format = OutputFormat::md;
      }
      return cmd_table1(config, out);
    }
  } catch (const Error& e) {
    err << e.kind() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    err << "IOError: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace appellkit
