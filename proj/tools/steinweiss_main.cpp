// steinweiss: compute the sharp constants of the weighted Fourier/potential
// inequalities, cross-check kernel norms by quadrature, and run the
// verification suites on explicit radial test families.
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "steinweiss/constants.hpp"
#include "steinweiss/errors.hpp"
#include "steinweiss/kernels.hpp"
#include "steinweiss/special.hpp"
#include "steinweiss/verify.hpp"

namespace {

using namespace steinweiss;

enum class Format { Text, Json, Csv };

struct Options {
  Format format = Format::Text;
  double tol = 1e-8;
  std::uint64_t seed = 1;
  int k_max = 50;
};

std::string fmt_full(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// One emitted record.  The six schema fields are always present; extras are
// appended after them.
struct Row {
  std::string quantity;
  // name -> JSON-encoded value (strings carry their quotes)
  std::vector<std::pair<std::string, std::string>> params;
  std::optional<double> value;
  std::optional<double> check;
  std::optional<double> deviation;
  std::optional<bool> pass;
  std::vector<std::pair<std::string, std::string>> extras;

  Row& p(const std::string& k, double v) {
    params.emplace_back(k, fmt_full(v));
    return *this;
  }
  Row& p(const std::string& k, int v) {
    params.emplace_back(k, std::to_string(v));
    return *this;
  }
  Row& p(const std::string& k, const std::string& v) {
    params.emplace_back(k, "\"" + v + "\"");
    return *this;
  }
  Row& x(const std::string& k, double v) {
    extras.emplace_back(k, fmt_full(v));
    return *this;
  }
  Row& x(const std::string& k, long long v) {
    extras.emplace_back(k, std::to_string(v));
    return *this;
  }
  Row& x(const std::string& k, const std::string& v) {
    extras.emplace_back(k, "\"" + v + "\"");
    return *this;
  }
};

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += "\"";
  return out;
}

class Emitter {
 public:
  explicit Emitter(Format format) : format_(format) {}

  void emit(const Row& row) {
    switch (format_) {
      case Format::Json: emit_json(row); break;
      case Format::Csv: emit_csv(row); break;
      case Format::Text: emit_text(row); break;
    }
  }

 private:
  void emit_json(const Row& row) {
    std::string line = "{\"quantity\":\"" + row.quantity + "\",\"params\":{";
    for (std::size_t i = 0; i < row.params.size(); ++i) {
      if (i) line += ",";
      line += "\"" + row.params[i].first + "\":" + row.params[i].second;
    }
    line += "},\"value\":" + (row.value ? fmt_full(*row.value) : "null");
    line += ",\"check\":" + (row.check ? fmt_full(*row.check) : "null");
    line += ",\"deviation\":" + (row.deviation ? fmt_full(*row.deviation) : "null");
    line += ",\"pass\":" + (row.pass ? std::string(*row.pass ? "true" : "false") : "null");
    for (const auto& [k, v] : row.extras) line += ",\"" + k + "\":" + v;
    line += "}";
    std::puts(line.c_str());
  }

  void emit_csv(const Row& row) {
    if (!header_done_) {
      std::puts("quantity,params,value,check,deviation,pass");
      header_done_ = true;
    }
    std::string params;
    for (std::size_t i = 0; i < row.params.size(); ++i) {
      if (i) params += ";";
      std::string raw = row.params[i].second;
      if (raw.size() >= 2 && raw.front() == '"' && raw.back() == '"') {
        raw = raw.substr(1, raw.size() - 2);
      }
      params += row.params[i].first + "=" + raw;
    }
    std::string line = csv_quote(row.quantity) + "," + csv_quote(params) + ",";
    line += (row.value ? fmt_full(*row.value) : "") + std::string(",");
    line += (row.check ? fmt_full(*row.check) : "") + std::string(",");
    line += (row.deviation ? fmt_full(*row.deviation) : "") + std::string(",");
    line += row.pass ? std::string(*row.pass ? "true" : "false") : "";
    std::puts(line.c_str());
  }

  void emit_text(const Row& row) {
    std::string line = row.quantity + "(";
    for (std::size_t i = 0; i < row.params.size(); ++i) {
      if (i) line += ", ";
      // Re-render numeric params at display precision; strip the JSON
      // quotes off string params.
      std::string raw = row.params[i].second;
      if (raw.size() >= 2 && raw.front() == '"' && raw.back() == '"') {
        raw = raw.substr(1, raw.size() - 2);
      }
      char* end = nullptr;
      const double v = std::strtod(raw.c_str(), &end);
      const bool numeric = end && *end == '\0' && !raw.empty();
      line += row.params[i].first + "=" + (numeric ? fmt_short(v) : raw);
    }
    line += ")";
    if (row.value) line += " = " + fmt_short(*row.value);
    if (row.check) line += "  [check " + fmt_short(*row.check);
    if (row.deviation) line += ", deviation " + fmt_short(*row.deviation);
    if (row.check || row.deviation) line += "]";
    for (const auto& [k, v] : row.extras) line += "  " + k + "=" + v;
    if (row.pass) line += *row.pass ? "  PASS" : "  FAIL";
    std::puts(line.c_str());
  }

  Format format_;
  bool header_done_ = false;
};

// "start:step:stop", endpoints included within 1e-12.
std::vector<double> parse_grid(const std::string& text) {
  double start = 0, step = 0, stop = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &start, &step, &stop, &tail) != 3 ||
      !(step > 0.0) || stop < start) {
    throw std::invalid_argument("grid spec must be start:step:stop with step > 0, got '" +
                                text + "'");
  }
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double v = start + i * step;
    if (v > stop + 1e-12) break;
    grid.push_back(v);
  }
  return grid;
}

const char* kRecursionNote =
    "The order recursion is D(alpha,n,ell+2) = D(alpha,n,ell) - alpha (n-1) / (4 pi^2) "
    "* D(alpha+2,n+2,ell); the 1/pi^2 in the coefficient is required for consistency "
    "with the ell = 2 closed form (the coefficient alpha (n-1)/4 overshoots by exactly "
    "pi^2).";
const char* kKernelNote =
    "Kernel argument is t + 1/t - 2 xi_1, the inversion-symmetric form; pointwise "
    "values at t = 1 exist only for alpha > 1 while L1 norms exist on all of "
    "0 < alpha < n.";

struct VerifySettings {
  int trials = 50;
  int j_max = 4;
};

int run_verify_suite(Emitter& out, const Options& opt, const VerifySettings& vs,
                     const std::string& name, int m, double alpha,
                     const std::function<verify::VerificationReport(
                         const verify::RadialTestFunction&)>& op,
                     const std::function<double(const verify::RadialTestFunction&)>& extra_residual =
                         nullptr,
                     const char* extra_name = nullptr) {
  verify::TestFunctionRng rng(opt.seed);
  int failures = 0;
  for (int trial = 0; trial < vs.trials; ++trial) {
    const auto f = rng.next_function(m, vs.j_max);
    const auto rep = op(f);
    Row row;
    row.quantity = name;
    row.p("m", m);
    if (!std::isnan(alpha)) row.p("alpha", alpha);
    row.p("trial", trial);
    row.value = rep.lhs;
    row.check = rep.constant * rep.rhs;
    row.deviation = rep.constant * rep.rhs - rep.lhs;
    row.pass = rep.pass;
    row.x("ratio", rep.ratio).x("constant", rep.constant);
    out.emit(row);
    if (!rep.pass) {
      ++failures;
      std::fprintf(stderr, "FAIL %s m=%d alpha=%g trial=%d lhs=%.17g rhs=%.17g\n", name.c_str(),
                   m, alpha, trial, rep.lhs, rep.rhs);
    }
    if (extra_residual) {
      const double resid = extra_residual(f);
      Row extra;
      extra.quantity = extra_name;
      extra.p("m", m).p("trial", trial);
      extra.value = resid;
      extra.check = 0.0;
      extra.deviation = resid;
      extra.pass = resid <= 1e-8;
      out.emit(extra);
      if (resid > 1e-8) {
        ++failures;
        std::fprintf(stderr, "FAIL %s trial=%d residual=%.3e\n", extra_name, trial, resid);
      }
    }
  }
  Row summary;
  summary.quantity = name + "_summary";
  summary.p("m", m);
  if (!std::isnan(alpha)) summary.p("alpha", alpha);
  summary.p("trials", vs.trials);
  summary.value = static_cast<double>(failures);
  summary.check = 0.0;
  summary.deviation = static_cast<double>(failures);
  summary.pass = failures == 0;
  out.emit(summary);
  return failures == 0 ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "steinweiss: sharp constants of weighted Fourier-transform and fractional-integral "
      "inequalities, with quadrature cross-checks and inequality verification suites"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Options opt;
  std::map<std::string, Format> format_names{
      {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  app.add_option("--format", opt.format, "output format")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case))
      ->default_str("text");
  app.add_option("--tol", opt.tol, "relative tolerance for quadrature cross-checks")
      ->default_val(1e-8);
  app.add_option("--seed", opt.seed, "seed for randomized verification suites")->default_val(1);
  app.add_option("--k-max", opt.k_max, "largest spherical-harmonic degree in exhaustive maxima")
      ->default_val(50);

  // ---- constants ----
  auto* c_cmd = app.add_subcommand("constants", "closed-form sharp constants");
  c_cmd->require_subcommand(1);
  int n = 3;
  double alpha = 1.0, rho = 1.0, sigma = 1.0, x_arg = 1.0, t_arg = 2.0, beta = 2.0, delta = 2.0;
  int k = 0, ell = 0, m_dim = 4;

  auto add_n = [&](CLI::App* cmd, int min_n = 2) {
    cmd->add_option("--n", n, "dimension")->required()->check(CLI::Range(min_n, 1000000));
  };
  auto add_alpha = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "weight exponent")->required();
  };

  auto* c_pitt = c_cmd->add_subcommand("pitt", "C_alpha of the spectral-weight inequality");
  add_n(c_pitt);
  add_alpha(c_pitt);

  auto* c_logd = c_cmd->add_subcommand("log-d", "logarithmic uncertainty constant D");
  add_n(c_logd, 1);

  auto* c_sw = c_cmd->add_subcommand("stein-weiss", "B_alpha of the fractional integral form");
  add_n(c_sw);
  add_alpha(c_sw);

  auto* c_term = c_cmd->add_subcommand("gradient-term", "one spherical-harmonic stratum");
  add_n(c_term);
  add_alpha(c_term);
  c_term->add_option("--k", k, "stratum degree")->required();

  auto* c_grad = c_cmd->add_subcommand("gradient-d", "gradient constant D_alpha (max over k)");
  add_n(c_grad);
  add_alpha(c_grad);

  auto* c_n2 = c_cmd->add_subcommand("n2-gradient-d", "closed form of D_alpha at n = 2");
  add_alpha(c_n2);

  auto* c_trace = c_cmd->add_subcommand("trace", "trace constant D_1/(2 pi)");
  add_n(c_trace);

  auto* c_regime = c_cmd->add_subcommand("regime", "which stratum attains D_alpha");
  add_n(c_regime);
  add_alpha(c_regime);

  auto* c_asym = c_cmd->add_subcommand("asymptotic", "large-n form (4 pi / n)^alpha");
  add_n(c_asym);
  add_alpha(c_asym);

  auto* c_loge = c_cmd->add_subcommand("log-e", "gradient logarithmic uncertainty constant E");
  add_n(c_loge);

  auto* c_kappa = c_cmd->add_subcommand("kappa-l1", "closed-form L1 norm of the kappa kernel");
  add_n(c_kappa);
  c_kappa->add_option("--rho", rho)->required();
  c_kappa->add_option("--sigma", sigma)->required();

  auto* c_ib = c_cmd->add_subcommand("iterated-b", "four-fold potential constant");
  add_n(c_ib);
  add_alpha(c_ib);
  c_ib->add_option("--rho", rho)->required();
  c_ib->add_option("--sigma", sigma)->required();

  auto* c_ic = c_cmd->add_subcommand("iterated-c", "weighted-Sobolev form constant");
  add_n(c_ic);
  add_alpha(c_ic);
  c_ic->add_option("--rho", rho)->required();
  c_ic->add_option("--sigma", sigma)->required();

  auto* c_psil1 = c_cmd->add_subcommand("psi-l1", "closed-form L1 norm of psi (ell <= 2)");
  add_n(c_psil1);
  add_alpha(c_psil1);
  c_psil1->add_option("--ell", ell)->required();

  auto* c_igd = c_cmd->add_subcommand("iterated-gradient-d", kRecursionNote);
  add_n(c_igd);
  add_alpha(c_igd);
  c_igd->add_option("--ell", ell, "even gradient order")->required();

  auto* c_lambda = c_cmd->add_subcommand("lambda", "stratum log-ratio diagnostics");
  std::string lambda_kind = "trace-w";
  c_lambda->add_option("--kind", lambda_kind)
      ->check(CLI::IsMember({"trace-w", "n3-alpha", "a-boundary"}))
      ->required();
  c_lambda->add_option("--x", x_arg)->required();

  auto* c_opn = c_cmd->add_subcommand("operator-norm", "sharp norm of the half-kernel operator");
  add_n(c_opn);
  add_alpha(c_opn);

  auto* c_sob = c_cmd->add_subcommand("sobolev", "single-layer weighted Sobolev constant");
  add_n(c_sob);
  add_alpha(c_sob);

  auto* c_sob2 = c_cmd->add_subcommand("sobolev-iterated", "its ||T*T|| = ||T||^2 iterate");
  add_n(c_sob2);
  add_alpha(c_sob2);

  // ---- kernel ----
  auto* k_cmd = app.add_subcommand("kernel", "numerical kernel norms and identities");
  k_cmd->require_subcommand(1);

  auto* k_l1 = k_cmd->add_subcommand("l1", std::string("L1 norm of psi by 2-D quadrature.  ") +
                                               kKernelNote);
  add_n(k_l1);
  add_alpha(k_l1);
  k_l1->add_option("--ell", ell)->default_val(0);

  auto* k_kappa = k_cmd->add_subcommand("kappa", "L1 norm of kappa by quadrature");
  add_n(k_kappa);
  k_kappa->add_option("--rho", rho)->required();
  k_kappa->add_option("--sigma", sigma)->required();

  auto* k_rec = k_cmd->add_subcommand(
      "recursion", std::string("pointwise kernel recursion residual.  ") + kRecursionNote);
  add_n(k_rec);
  add_alpha(k_rec);
  k_rec->add_option("--ell", ell)->default_val(0);
  k_rec->add_option("--t", t_arg)->required();

  auto* k_riesz = k_cmd->add_subcommand("riesz", "Riesz composition constant, both routes");
  add_n(k_riesz);
  k_riesz->add_option("--beta", beta)->required();
  k_riesz->add_option("--delta", delta)->required();

  auto* k_psi = k_cmd->add_subcommand("psi", std::string("pointwise psi value.  ") + kKernelNote);
  add_n(k_psi);
  add_alpha(k_psi);
  k_psi->add_option("--ell", ell)->default_val(0);
  k_psi->add_option("--t", t_arg)->required();

  // ---- verify ----
  auto* v_cmd = app.add_subcommand("verify", "inequality suites on radial test families");
  v_cmd->require_subcommand(1);
  VerifySettings vs;
  double sigma_u = 50.0;
  double grid_half_width = 60.0;
  int grid_points = 8193;
  auto add_trials = [&](CLI::App* cmd) {
    cmd->add_option("--trials", vs.trials)->default_val(50);
    cmd->add_option("--j-max", vs.j_max, "largest Laguerre index in test functions")
        ->default_val(4);
  };
  auto add_m = [&](CLI::App* cmd) { cmd->add_option("--m", m_dim)->required(); };
  auto add_grid = [&](CLI::App* cmd) {
    cmd->add_option("--half-width", grid_half_width)->default_val(60.0);
    cmd->add_option("--points", grid_points)->default_val(8193);
  };

  auto* v_pitt = v_cmd->add_subcommand("pitt", "spectral-weight inequality on random functions");
  add_m(v_pitt);
  add_alpha(v_pitt);
  add_trials(v_pitt);

  auto* v_grad = v_cmd->add_subcommand("gradient", "radial gradient bound on random functions");
  add_m(v_grad);
  add_alpha(v_grad);
  add_trials(v_grad);

  auto* v_hr = v_cmd->add_subcommand("hardy-rellich",
                                     "gradient-vs-Laplacian bound; at m = 8 the elementary "
                                     "integration-by-parts identity is checked per trial");
  add_m(v_hr);
  add_trials(v_hr);

  auto* v_log = v_cmd->add_subcommand("log", "logarithmic uncertainty bound");
  add_m(v_log);
  add_trials(v_log);

  auto* v_loggrad = v_cmd->add_subcommand("log-gradient", "gradient logarithmic bound");
  add_m(v_loggrad);
  add_trials(v_loggrad);

  auto* v_plan = v_cmd->add_subcommand("plancherel", "transform preserves the L2 norm");
  add_m(v_plan);
  add_trials(v_plan);

  auto* v_decomp = v_cmd->add_subcommand(
      "decomposition", "degree-one harmonic decomposition identity at n = 3");
  add_alpha(v_decomp);
  int decomp_j = 0;
  v_decomp->add_option("--j", decomp_j)->default_val(0);

  auto* v_sharp = v_cmd->add_subcommand(
      "sharpness", "wide-bump Rayleigh probe of the half-kernel operator norm");
  add_n(v_sharp);
  add_alpha(v_sharp);
  v_sharp->add_option("--sigma-u", sigma_u)->default_val(50.0);
  add_grid(v_sharp);

  auto* v_young = v_cmd->add_subcommand("young",
                                        "wide-bump probe of ||psi (*) h||_2 <= ||psi||_1 ||h||_2");
  add_n(v_young);
  add_alpha(v_young);
  v_young->add_option("--ell", ell)->default_val(0);
  v_young->add_option("--sigma-u", sigma_u)->default_val(50.0);
  add_grid(v_young);

  auto* v_op = v_cmd->add_subcommand("operator", "operator bound on random grid samples");
  add_n(v_op);
  add_alpha(v_op);
  add_trials(v_op);
  add_grid(v_op);

  // ---- regimes ----
  auto* r_cmd = app.add_subcommand("regimes", "argmax stratum across an alpha grid");
  r_cmd->add_option("--n", n, "dimension")->required()->check(CLI::Range(2, 1000000));
  std::string alpha_grid;
  r_cmd->add_option("--alpha-grid", alpha_grid, "start:step:stop")->required();

  // ---- table ----
  auto* t_cmd = app.add_subcommand("table", "tabulated golden values next to computed ones");
  std::string which_table;
  t_cmd->add_option("which", which_table, "cor1 | trace | anchors")
      ->check(CLI::IsMember({"cor1", "trace", "anchors"}))
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Emitter out(opt.format);
  int exit_code = 0;

  try {
    using namespace steinweiss::constants;
    const auto simple = [&](const char* name, const char* formula, Row row, double value) {
      row.quantity = name;
      row.value = value;
      row.x("formula_id", std::string(formula));
      out.emit(row);
    };

    if (c_pitt->parsed()) {
      simple("pitt_C", "C_alpha", Row{}.p("n", n).p("alpha", alpha), pitt_C({n, alpha}));
    } else if (c_logd->parsed()) {
      simple("log_uncertainty_D", "D", Row{}.p("n", n), log_uncertainty_D(n));
    } else if (c_sw->parsed()) {
      simple("stein_weiss_B", "B_alpha", Row{}.p("n", n).p("alpha", alpha),
             stein_weiss_B({n, alpha}));
    } else if (c_term->parsed()) {
      simple("gradient_term", "D_alpha_term_k", Row{}.p("n", n).p("alpha", alpha).p("k", k),
             gradient_term({n, alpha, k}));
    } else if (c_grad->parsed() || c_regime->parsed()) {
      const auto rep = pitt_gradient_D({n, alpha}, opt.k_max);
      Row row;
      row.quantity = c_grad->parsed() ? "pitt_gradient_D" : "regime_classify";
      row.p("n", n).p("alpha", alpha).p("k_max", opt.k_max);
      row.value = rep.d_alpha;
      row.x("argmax_k", static_cast<long long>(rep.argmax_k));
      row.x("regime", std::string(regime_name(rep.label)));
      row.x("formula_id", std::string("D_alpha"));
      out.emit(row);
    } else if (c_n2->parsed()) {
      simple("n2_gradient_D", "D_alpha_n2", Row{}.p("alpha", alpha), n2_gradient_D(alpha));
    } else if (c_trace->parsed()) {
      simple("trace_constant", "D_1_over_2pi", Row{}.p("n", n), trace_constant(n));
    } else if (c_asym->parsed()) {
      simple("asymptotic_D", "D_alpha_asymptotic", Row{}.p("n", n).p("alpha", alpha),
             asymptotic_D({n, alpha}));
    } else if (c_loge->parsed()) {
      simple("log_gradient_E", "E", Row{}.p("n", n), log_gradient_E(n));
    } else if (c_kappa->parsed()) {
      simple("kappa_L1_closed", "kappa_l1", Row{}.p("n", n).p("rho", rho).p("sigma", sigma),
             kappa_L1_closed(n, rho, sigma));
    } else if (c_ib->parsed()) {
      const IteratedParams ip{n, alpha, rho, sigma};
      Row row;
      row.quantity = "iterated_B";
      row.p("n", n).p("alpha", alpha).p("rho", rho).p("sigma", sigma);
      row.value = iterated_B(ip);
      row.x("beta", ip.beta());
      row.x("formula_id", std::string("B_alpha_rho_sigma"));
      out.emit(row);
    } else if (c_ic->parsed()) {
      const IteratedParams ip{n, alpha, rho, sigma};
      Row row;
      row.quantity = "iterated_C";
      row.p("n", n).p("alpha", alpha).p("rho", rho).p("sigma", sigma);
      row.value = iterated_C(ip);
      row.x("beta", ip.beta());
      row.x("formula_id", std::string("C_alpha_rho_sigma"));
      out.emit(row);
    } else if (c_psil1->parsed()) {
      simple("psi_L1_closed", "psi_l1", Row{}.p("n", n).p("alpha", alpha).p("ell", ell),
             psi_L1_closed(n, alpha, ell));
    } else if (c_igd->parsed()) {
      simple("iterated_gradient_D", "D_alpha_ell",
             Row{}.p("n", n).p("alpha", alpha).p("ell", ell),
             iterated_gradient_D({n, alpha, ell}));
    } else if (c_lambda->parsed()) {
      const LambdaKind kind = lambda_kind == "trace-w"    ? LambdaKind::TraceW
                              : lambda_kind == "n3-alpha" ? LambdaKind::N3Alpha
                                                          : LambdaKind::ABoundary;
      simple("lambda_diagnostics", ("Lambda_" + lambda_kind).c_str(),
             Row{}.p("kind", lambda_kind).p("x", x_arg), lambda_diagnostics(kind, x_arg));
    } else if (c_opn->parsed()) {
      simple("stein_weiss_operator_C", "operator_norm", Row{}.p("n", n).p("alpha", alpha),
             stein_weiss_operator_C(n, alpha));
    } else if (c_sob->parsed()) {
      simple("weighted_sobolev_C", "sobolev_c", Row{}.p("n", n).p("alpha", alpha),
             weighted_sobolev_C(n, alpha));
    } else if (c_sob2->parsed()) {
      simple("weighted_sobolev_iterated_C", "sobolev_c_iterated",
             Row{}.p("n", n).p("alpha", alpha), weighted_sobolev_iterated_C(n, alpha));
    } else if (k_l1->parsed()) {
      const auto num = kernels::psi_L1_numeric({n, alpha, ell}, opt.tol);
      Row row;
      row.quantity = "psi_L1_numeric";
      row.p("n", n).p("alpha", alpha).p("ell", ell);
      row.value = num.value;
      if (ell <= 2) {
        const double closed = psi_L1_closed(n, alpha, ell);
        row.check = closed;
        row.deviation = std::abs(num.value - closed) / closed;
        row.pass = *row.deviation <= 1e-6;
      }
      row.x("est_error", num.est_error);
      row.x("evaluations", static_cast<long long>(num.evaluations));
      out.emit(row);
      if (row.pass && !*row.pass) {
        std::fprintf(stderr,
                     "quadrature failure: psi L1 deviates %.3e from the closed form "
                     "(est_error %.3e)\n",
                     *row.deviation, num.est_error);
        return 3;
      }
    } else if (k_kappa->parsed()) {
      const auto num = kernels::kappa_L1_numeric(n, rho, sigma, opt.tol);
      const double closed = kappa_L1_closed(n, rho, sigma);
      Row row;
      row.quantity = "kappa_L1_numeric";
      row.p("n", n).p("rho", rho).p("sigma", sigma);
      row.value = num.value;
      row.check = closed;
      row.deviation = std::abs(num.value - closed) / closed;
      row.pass = *row.deviation <= 1e-6;
      row.x("est_error", num.est_error);
      row.x("evaluations", static_cast<long long>(num.evaluations));
      out.emit(row);
      if (!*row.pass) {
        std::fprintf(stderr,
                     "quadrature failure: kappa L1 deviates %.3e from the closed form "
                     "(est_error %.3e)\n",
                     *row.deviation, num.est_error);
        return 3;
      }
    } else if (k_rec->parsed()) {
      const double resid = kernels::kernel_recursion_residual(n, alpha, ell, t_arg);
      Row row;
      row.quantity = "kernel_recursion_residual";
      row.p("n", n).p("alpha", alpha).p("ell", ell).p("t", t_arg);
      row.value = resid;
      row.check = 0.0;
      row.deviation = std::abs(resid);
      row.pass = std::abs(resid) <= 1e-8;
      out.emit(row);
      if (!*row.pass) {
        std::fprintf(stderr, "quadrature failure: recursion residual %.3e exceeds 1e-8\n",
                     resid);
        return 3;
      }
    } else if (k_riesz->parsed()) {
      const double closed = kernels::riesz_convolution_constant(n, beta, delta);
      const auto num = kernels::riesz_convolution_numeric(n, beta, delta, opt.tol);
      Row row;
      row.quantity = "riesz_convolution";
      row.p("n", n).p("beta", beta).p("delta", delta);
      row.value = num.value;
      row.check = closed;
      row.deviation = std::abs(num.value - closed) / closed;
      row.pass = *row.deviation <= 1e-4;
      row.x("est_error", num.est_error);
      row.x("evaluations", static_cast<long long>(num.evaluations));
      out.emit(row);
      if (!*row.pass) {
        std::fprintf(stderr,
                     "quadrature failure: Riesz value deviates %.3e from the constant "
                     "(est_error %.3e)\n",
                     *row.deviation, num.est_error);
        return 3;
      }
    } else if (k_psi->parsed()) {
      Row row;
      row.quantity = "psi_eval";
      row.p("n", n).p("alpha", alpha).p("ell", ell).p("t", t_arg);
      row.value = kernels::psi_eval({n, alpha, ell}, t_arg);
      out.emit(row);
    } else if (v_pitt->parsed()) {
      exit_code = run_verify_suite(out, opt, vs, "pitt_ratio", m_dim, alpha,
                                   [&](const verify::RadialTestFunction& f) {
                                     return verify::pitt_ratio(f, alpha);
                                   });
    } else if (v_grad->parsed()) {
      exit_code = run_verify_suite(out, opt, vs, "pitt_gradient_radial_ratio", m_dim, alpha,
                                   [&](const verify::RadialTestFunction& f) {
                                     return verify::pitt_gradient_radial_ratio(f, alpha);
                                   });
    } else if (v_hr->parsed()) {
      std::function<double(const verify::RadialTestFunction&)> extra;
      if (m_dim == 8) extra = [](const verify::RadialTestFunction& f) {
        return verify::n8_identity_residual(f);
      };
      exit_code = run_verify_suite(
          out, opt, vs, "hardy_rellich_ratio", m_dim, std::nan(""),
          [](const verify::RadialTestFunction& f) { return verify::hardy_rellich_ratio(f); },
          extra, "n8_identity_residual");
    } else if (v_log->parsed()) {
      exit_code = run_verify_suite(
          out, opt, vs, "log_uncertainty_gap", m_dim, std::nan(""),
          [](const verify::RadialTestFunction& f) { return verify::log_uncertainty_gap(f); });
    } else if (v_loggrad->parsed()) {
      exit_code = run_verify_suite(
          out, opt, vs, "log_gradient_gap", m_dim, std::nan(""),
          [](const verify::RadialTestFunction& f) { return verify::log_gradient_gap(f); });
    } else if (v_plan->parsed()) {
      exit_code = run_verify_suite(out, opt, vs, "plancherel", m_dim, std::nan(""),
                                   [](const verify::RadialTestFunction& f) {
                                     const double a = verify::weighted_norm(f, 0.0);
                                     const double b =
                                         verify::weighted_norm(verify::fourier_eigen(f), 0.0);
                                     verify::VerificationReport rep;
                                     rep.lhs = a;
                                     rep.rhs = b;
                                     rep.constant = 1.0;
                                     rep.ratio = a / b;
                                     rep.tolerance = 1e-10;
                                     rep.pass = std::abs(a - b) <= 1e-10 * std::max(a, b);
                                     return rep;
                                   });
    } else if (v_decomp->parsed()) {
      const auto f = verify::RadialTestFunction::basis(3, decomp_j);
      const double resid = verify::gradient_decomposition_identity(f, alpha);
      Row row;
      row.quantity = "gradient_decomposition_identity";
      row.p("alpha", alpha).p("j", decomp_j);
      row.value = resid;
      row.check = 0.0;
      row.deviation = resid;
      row.pass = resid <= 1e-8;
      out.emit(row);
      if (!*row.pass) exit_code = 4;
    } else if (v_sharp->parsed()) {
      const kernels::LogGrid grid{grid_half_width, grid_points};
      std::vector<double> h(grid.points);
      for (int i = 0; i < grid.points; ++i) {
        const double u = grid.node(i);
        h[i] = std::exp(-u * u / (2.0 * sigma_u * sigma_u));
      }
      const auto rep = verify::stein_weiss_operator_ratio(n, alpha, h, grid);
      const bool near_sharp = rep.ratio >= 0.99 * rep.constant;
      Row row;
      row.quantity = "sharpness_probe";
      row.p("n", n).p("alpha", alpha).p("sigma_u", sigma_u);
      row.value = rep.ratio;
      row.check = rep.constant;
      row.deviation = 1.0 - rep.ratio / rep.constant;
      row.pass = rep.pass && near_sharp;
      out.emit(row);
      if (!*row.pass) exit_code = 4;
    } else if (v_young->parsed()) {
      const kernels::LogGrid grid{grid_half_width, grid_points};
      const double ratio = kernels::young_sharpness_ratio({n, alpha, ell}, sigma_u, grid);
      const double closed = ell <= 2 ? psi_L1_closed(n, alpha, ell)
                                     : kernels::psi_L1_numeric({n, alpha, ell}).value;
      Row row;
      row.quantity = "young_sharpness_ratio";
      row.p("n", n).p("alpha", alpha).p("ell", ell).p("sigma_u", sigma_u);
      row.value = ratio;
      row.check = closed;
      row.deviation = 1.0 - ratio / closed;
      row.pass = ratio <= closed + 1e-6 && ratio >= 0.99 * closed;
      out.emit(row);
      if (!*row.pass) exit_code = 4;
    } else if (v_op->parsed()) {
      const kernels::LogGrid grid{grid_half_width, grid_points};
      verify::TestFunctionRng rng(opt.seed);
      int failures = 0;
      for (int trial = 0; trial < vs.trials; ++trial) {
        std::vector<double> h(grid.points);
        for (double& v : h) v = rng.uniform(-1.0, 1.0);
        const auto rep = verify::stein_weiss_operator_ratio(n, alpha, h, grid);
        Row row;
        row.quantity = "stein_weiss_operator_ratio";
        row.p("n", n).p("alpha", alpha).p("trial", trial);
        row.value = rep.ratio;
        row.check = rep.constant;
        row.deviation = rep.constant - rep.ratio;
        row.pass = rep.pass;
        out.emit(row);
        if (!rep.pass) {
          ++failures;
          std::fprintf(stderr, "FAIL operator n=%d alpha=%g trial=%d ratio=%.17g\n", n, alpha,
                       trial, rep.ratio);
        }
      }
      if (failures) exit_code = 4;
    } else if (r_cmd->parsed()) {
      for (const double a : parse_grid(alpha_grid)) {
        if (!(a > 0.0 && a < n)) {
          throw std::range_error("regimes: grid alpha " + std::to_string(a) +
                                 " outside (0, n)");
        }
        const auto rep = pitt_gradient_D({n, a}, opt.k_max);
        Row row;
        row.quantity = "regime_row";
        row.p("n", n).p("alpha", a);
        row.value = rep.d_alpha;
        row.x("argmax_k", static_cast<long long>(rep.argmax_k));
        row.x("regime", std::string(regime_name(rep.label)));
        out.emit(row);
      }
    } else if (t_cmd->parsed()) {
      const auto golden = [&](const char* name, Row row, double computed, double tabulated,
                              double tol) {
        row.quantity = name;
        row.value = computed;
        row.check = tabulated;
        row.deviation = std::abs(computed - tabulated);
        row.pass = *row.deviation <= tol;
        out.emit(row);
        if (!*row.pass) exit_code = 4;
      };
      if (which_table == "cor1") {
        golden("table_cor1", Row{}.p("n", 3), pitt_gradient_D({3, 2.0}).d_alpha / (M_PI * M_PI),
               144.0 / 25.0, 1e-12);
        golden("table_cor1", Row{}.p("n", 4), pitt_gradient_D({4, 2.0}).d_alpha / (M_PI * M_PI),
               4.0 / 3.0, 1e-12);
        for (int nn = 5; nn <= 12; ++nn) {
          golden("table_cor1", Row{}.p("n", nn),
                 pitt_gradient_D({nn, 2.0}).d_alpha / (M_PI * M_PI), 16.0 / (nn * nn), 1e-12);
        }
      } else if (which_table == "trace") {
        const double g54 = std::tgamma(1.25), g74 = std::tgamma(1.75);
        golden("table_trace", Row{}.p("n", 2), trace_constant(2),
               2.5 * (g54 / g74) * (g54 / g74), 1e-12);
        golden("table_trace", Row{}.p("n", 3), trace_constant(3), M_PI / 4.0, 1e-12);
        const double g_54 = std::tgamma(5.0 / 4.0), g_74 = std::tgamma(7.0 / 4.0);
        golden("table_trace", Row{}.p("n", 4), trace_constant(4),
               0.5 * (g_54 / g_74) * (g_54 / g_74), 1e-12);
      } else {
        golden("table_anchor_lambda_trace", Row{}.p("w", 1.0),
               lambda_diagnostics(LambdaKind::TraceW, 1.0), -2.796, 1e-3);
        golden("table_anchor_lambda_n3", Row{}.p("alpha", 0.2),
               lambda_diagnostics(LambdaKind::N3Alpha, 0.2), 0.0021145, 1e-6);
        golden("table_anchor_lambda_n3", Row{}.p("alpha", 0.1),
               lambda_diagnostics(LambdaKind::N3Alpha, 0.1), -0.00103461, 1e-7);
        golden("table_anchor_lambda_n3_deriv0", Row{}, lambda_n3_deriv_at_zero(), -0.0304815,
               1e-6);
      }
    }
  } catch (const quadrature_error& e) {
    std::fprintf(stderr, "quadrature failure: %s\n", e.what());
    return 3;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "invalid parameters: %s\n", e.what());
    return 2;
  } catch (const std::range_error& e) {
    std::fprintf(stderr, "invalid parameters: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid parameters: %s\n", e.what());
    return 2;
  }
  return exit_code;
}
