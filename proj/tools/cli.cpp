#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "aqfock/errors.hpp"
#include "aqfock/operators.hpp"
#include "aqfock/orthopoly.hpp"
#include "aqfock/partitions.hpp"
#include "aqfock/run_config.hpp"
#include "aqfock/text_output.hpp"
#include "aqfock/verify.hpp"

namespace aqfock::cli {

namespace {

namespace pt = partitions;
namespace op = orthopoly;
using text::JsonField;

/// Writes one table row in the configured format. `names` are the column keys.
class TableWriter {
 public:
  TableWriter(std::ostream& out, OutputFormat format, std::vector<std::string> names)
      : out_(out), format_(format), names_(std::move(names)) {}

  void header() {
    if (format_ == OutputFormat::Csv) out_ << text::csv_row(names_) << '\n';
  }

  /// `csv` and `json` hold the same values rendered for each format.
  void row(const std::vector<std::string>& csv, const std::vector<std::string>& json) {
    if (format_ == OutputFormat::Csv) {
      out_ << text::csv_row(csv) << '\n';
      return;
    }
    std::vector<JsonField> fields;
    for (std::size_t i = 0; i < names_.size(); ++i) fields.emplace_back(names_[i], json[i]);
    out_ << text::json_object(fields) << '\n';
  }

 private:
  std::ostream& out_;
  OutputFormat format_;
  std::vector<std::string> names_;
};

std::vector<double> parse_reals(const std::string& list) {
  std::vector<double> values;
  std::stringstream stream(list);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument("not a number: '" + item + "'");
    values.push_back(v);
  }
  return values;
}

std::vector<int> parse_ints(const std::string& list) {
  std::vector<int> out;
  for (double v : parse_reals(list)) {
    if (v != std::floor(v)) throw std::invalid_argument("expected integers in '" + list + "'");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::string blocks_text(const pt::SetPartition& pi, const std::vector<int>& coloring = {}) {
  std::string s;
  for (std::size_t b = 0; b < pi.blocks.size(); ++b) {
    if (b > 0) s += ' ';
    s += coloring.empty() || coloring[b] == 1 ? "{" : "-{";
    for (std::size_t i = 0; i < pi.blocks[b].size(); ++i) {
      if (i > 0) s += ',';
      s += std::to_string(pi.blocks[b][i]);
    }
    s += '}';
  }
  return s;
}

std::string json_blocks(const pt::SetPartition& pi) {
  std::vector<std::string> blocks;
  for (const auto& b : pi.blocks) blocks.push_back(text::json_array(b));
  return text::json_array(blocks);
}

// ---------------------------------------------------------------------------

int cmd_moments(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.order > 12) throw std::invalid_argument("moments: --order must be at most 12");
  const InvolutiveSpace space = config.space();
  const DeformParams params = config.params();
  const FockModel model(space, params);
  const Vector x = reference_vector(space);
  const double c = self_duality(x, space);
  const std::vector<double> jacobi = op::qmp_moments(params.alpha, params.q, c, config.order);
  const double tol = config.tol.value_or(1e-9);

  TableWriter table(out, config.format, {"k", "operator", "partition", "jacobi", "max_diff"});
  table.header();
  double worst = 0.0;
  for (int k = 0; k <= config.order; ++k) {
    const double a = ops::vacuum_moment_power(x, k, model).real();
    const double b = pt::moment_pair_sum(std::vector<Vector>(static_cast<std::size_t>(k), x), params, space).colored;
    const double j = jacobi[static_cast<std::size_t>(k)];
    const double diff = std::max({std::abs(a - b), std::abs(a - j), std::abs(b - j)});
    worst = std::max(worst, diff / std::max(1.0, std::abs(j)));
    table.row({text::number(static_cast<long long>(k)), text::number(a), text::number(b), text::number(j), text::number(diff)},
              {text::json_int(k), text::json_number(a), text::json_number(b), text::json_number(j), text::json_number(diff)});
  }
  if (worst > tol) {
    err << "moments: routes disagree by " << text::number(worst) << " (tolerance " << text::number(tol) << ")\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_density(const RunConfig& config, std::ostream& out) {
  if (config.grid < 2) throw std::invalid_argument("density: --grid must be at least 2");
  const op::DensitySpec spec{config.alpha, config.q};
  const double radius = spec.support_radius();
  const int terms = spec.resolved_terms();

  std::vector<double> ts(static_cast<std::size_t>(config.grid));
  std::vector<double> values(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    ts[i] = -radius + 2.0 * radius * static_cast<double>(i + 1) / (config.grid + 1);
  }
  // Evaluate everything before printing so a domain error leaves no partial table.
  for (std::size_t i = 0; i < ts.size(); ++i) values[i] = op::density(ts[i], spec);

  if (config.format == OutputFormat::Csv) {
    out << "# alpha=" << text::number(config.alpha) << ",q=" << text::number(config.q) << ",K=" << terms << '\n';
  } else {
    out << text::json_object({{"alpha", text::json_number(config.alpha)},
                              {"q", text::json_number(config.q)},
                              {"K", text::json_int(terms)}})
        << '\n';
  }
  TableWriter table(out, config.format, {"t", "density"});
  table.header();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    table.row({text::number(ts[i]), text::number(values[i])}, {text::json_number(ts[i]), text::json_number(values[i])});
  }
  return kExitOk;
}

int cmd_partitions(const RunConfig& config, const std::string& kind, const std::string& eps_text, std::ostream& out) {
  const int n = config.order;
  if (n > pt::kMaxGroundSet) throw std::invalid_argument("partitions: --order must be at most 12");

  std::vector<pt::SetPartition> list;
  if (!eps_text.empty()) {
    list = pt::enumerate_p12_eps(parse_epsilon(eps_text));
  } else if (kind == "pairs" || kind == "typeb") {
    list = pt::enumerate_pair_partitions(n);
  } else if (kind == "p12") {
    list = pt::enumerate_p12(n);
  } else if (kind == "nc2") {
    list = pt::enumerate_nc2(n);
  } else {
    throw std::invalid_argument("partitions: --kind must be pairs, typeb, p12 or nc2");
  }

  TableWriter table(out, config.format, {"blocks", "cr", "ins", "nb", "innb", "slnb", "inn", "out"});
  table.header();
  auto emit = [&](const pt::SetPartition& pi, const std::vector<int>& coloring) {
    const pt::PartitionStats s = pt::stats(pi, coloring);
    auto opt_csv = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
    auto opt_json = [](const std::optional<int>& v) { return v ? text::json_int(*v) : std::string("null"); };
    std::string blocks_json = json_blocks(pi);
    if (!coloring.empty()) {
      blocks_json = text::json_object({{"blocks", blocks_json}, {"coloring", text::json_array(coloring)}});
    }
    table.row({blocks_text(pi, coloring), std::to_string(s.cr), std::to_string(s.ins), std::to_string(s.nb),
               std::to_string(s.innb), std::to_string(s.slnb), opt_csv(s.inn), opt_csv(s.out)},
              {blocks_json, text::json_int(s.cr), text::json_int(s.ins), text::json_int(s.nb), text::json_int(s.innb),
               text::json_int(s.slnb), opt_json(s.inn), opt_json(s.out)});
  };
  for (const auto& pi : list) {
    if (kind == "typeb" && eps_text.empty()) {
      for (const auto& colored : pt::type_b_colorings(pi)) emit(pi, colored.coloring);
    } else {
      emit(pi, {});
    }
  }
  return kExitOk;
}

int cmd_norms(const RunConfig& config, const std::string& x_text, const std::string& m_text, std::ostream& out) {
  const InvolutiveSpace space = config.space();
  const DeformParams params = config.params();
  const FockModel model(space, params);

  Vector x = reference_vector(space);
  if (!x_text.empty()) {
    const std::vector<double> entries = parse_reals(x_text);
    if (entries.size() != space.dim()) throw std::invalid_argument("norms: --x needs one entry per dimension");
    x = Vector(static_cast<Eigen::Index>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i) x(static_cast<Eigen::Index>(i)) = entries[i];
  }
  if (x.norm() == 0.0) throw std::invalid_argument("norms: x must be nonzero");

  std::vector<int> ms;
  if (m_text.empty()) {
    for (int m = 1; m <= config.trunc; ++m) ms.push_back(m);
  } else {
    ms = parse_ints(m_text);
  }
  for (int m : ms) {
    if (m < 1) throw std::invalid_argument("norms: truncation levels must be positive");
  }

  const ops::NormBounds nb = ops::norm_bounds(x, params, space);
  TableWriter table(out, config.format, {"m", "norm", "tensor_lower", "case", "lower", "upper", "strict_lower"});
  table.header();
  for (int m : ms) {
    const double norm = ops::creation_norm(x, m, model);
    double tensor_lower = 0.0;
    for (int n = 1; n <= m; ++n) tensor_lower = std::max(tensor_lower, ops::creation_lower_bound(x, n, params, space));
    const int which = static_cast<int>(nb.which);
    table.row({std::to_string(m), text::number(norm), text::number(tensor_lower), std::to_string(which),
               text::number(nb.lower), text::number(nb.upper), nb.strict_lower ? "1" : "0"},
              {text::json_int(m), text::json_number(norm), text::json_number(tensor_lower), text::json_int(which),
               text::json_number(nb.lower), text::json_number(nb.upper), text::json_bool(nb.strict_lower)});
  }
  return kExitOk;
}

int cmd_trace_defect(const RunConfig& config, int s, int t, std::ostream& out) {
  if (config.dim < 2) throw std::invalid_argument("trace-defect: needs --dim of at least 2");
  if (std::abs(s) != 1 || std::abs(t) != 1) throw std::invalid_argument("trace-defect: --s and --t must be +1 or -1");
  const ops::TraceDefect td = ops::trace_defect(config.params(), s, t);
  TableWriter table(out, config.format, {"measured", "printed_formula", "witness", "unit_formula"});
  table.header();
  table.row({text::number(td.measured), text::number(td.printed_formula), text::number(td.witness),
             text::number(td.unit_formula)},
            {text::json_number(td.measured), text::json_number(td.printed_formula), text::json_number(td.witness),
             text::json_number(td.unit_formula)});
  return kExitOk;
}

int cmd_verify(const RunConfig& config, const std::string& suite, std::ostream& out, std::ostream& err) {
  const verify::Report report = verify::run_suite(suite, config);
  out << (config.format == OutputFormat::Json ? report.to_json_lines() : report.to_csv());
  if (!report.passed()) {
    err << "verify: " << report.failures() << " of " << report.checks.size() << " checks failed\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerics for the (alpha,q)-Fock space of type B", "aqfock"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format = "csv";
  double tol = 0.0;
  app.add_option("--alpha", config.alpha, "deformation parameter alpha");
  app.add_option("--q", config.q, "deformation parameter q");
  app.add_option("--dim", config.dim, "dimension d of H = C^d");
  app.add_option("--involution", config.involution, "identity | swap:1-2,... | signs:+1,-1,...");
  app.add_option("--trunc", config.trunc, "Fock space truncation degree m");
  app.add_option("--order", config.order, "moment order or partition ground set size");
  app.add_option("--grid", config.grid, "number of density grid points");
  app.add_option("--format", format, "csv or json");
  app.add_option("--seed", config.seed, "seed for randomized checks");
  auto* tol_opt = app.add_option("--tol", tol, "tolerance override");

  auto* moments = app.add_subcommand("moments", "vacuum moments of G(x) by three routes");
  auto* density = app.add_subcommand("density", "density of the orthogonality measure on a grid");
  auto* parts = app.add_subcommand("partitions", "partitions with their statistics");
  std::string kind = "pairs";
  std::string eps;
  parts->add_option("--kind", kind, "pairs | typeb | p12 | nc2");
  parts->add_option("--eps", eps, "list P_{1,2;eps} for a pattern over '*' and '1'");
  auto* norms = app.add_subcommand("norms", "truncated creation norms against the theorem bounds");
  std::string x_text;
  std::string m_text;
  norms->add_option("--x", x_text, "real entries of x, comma separated");
  norms->add_option("--m", m_text, "truncation levels, comma separated");
  auto* trace = app.add_subcommand("trace-defect", "non-traciality of the vacuum state on C^2");
  int s = 1;
  int t = 1;
  trace->add_option("--s", s, "J e1 = s e1");
  trace->add_option("--t", t, "J e2 = t e2");
  auto* ver = app.add_subcommand("verify", "run the property suites");
  std::string suite = "all";
  ver->add_option("--suite", suite, "all | group | fock | operators | partitions | orthopoly");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    config.format = parse_format(format);
    if (*tol_opt) config.tol = tol;
    config.validate();
    if (*moments) return cmd_moments(config, out, err);
    if (*density) return cmd_density(config, out);
    if (*parts) return cmd_partitions(config, kind, eps, out);
    if (*norms) return cmd_norms(config, x_text, m_text, out);
    if (*trace) return cmd_trace_defect(config, s, t, out);
    if (*ver) return cmd_verify(config, suite, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace aqfock::cli
