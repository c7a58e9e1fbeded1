#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "qqpft/io.hpp"
#include "qqpft/reference.hpp"

namespace qqpft::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<QQPFTParams> suite_params() {
  return {{QPFTParams(0, 1, 0, 0, 0), QPFTParams(0, 1, 0, 0, 0)},
          {QPFTParams(1, 2, 1, 1, 1), QPFTParams(0, -1, 1, 0, 1)},
          {QPFTParams(0.5, -2, 0, 1, 0), QPFTParams(1, 1, 0, 1, 1)}};
}

Grid2D suite_grid(const SuiteOptions& o) { return Grid2D::centered(o.n, o.extent); }

QSignal2D random_signal(const SuiteOptions& o, std::uint64_t seed) {
  return sample_function(suite_grid(o), RandomSmoothSpec{seed});
}

QSignal2D real_part(const QSignal2D& f) {
  std::vector<Quaternion> s(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) s[k] = Quaternion{f[k].r};
  return {f.grid(), std::move(s)};
}

json seeded(VerificationReport r, std::optional<std::uint64_t> seed, const std::string& suffix = {}) {
  r.seed = seed;
  r.name += suffix;
  return to_json(r);
}

json exact_match(const std::string& name, bool equal, const std::string& parameters) {
  return to_json(VerificationReport::make(name, equal ? 0.0 : 1.0, 0.0, {}, parameters));
}

void suite_roundtrip(const SuiteOptions& o, json& out) {
  const QSignal2D f = random_signal(o, o.seed);
  for (const auto& p : suite_params()) out.push_back(seeded(verify_roundtrip(f, p), o.seed));
}

void suite_parseval(const SuiteOptions& o, json& out) {
  const QSignal2D f = random_signal(o, o.seed), g = random_signal(o, o.seed + 1);
  for (const auto& p : suite_params()) {
    out.push_back(seeded(verify_parseval_norm(f, p), o.seed));
    out.push_back(seeded(verify_parseval_inner(f, g, p), o.seed));
  }
}

void suite_fast_vs_direct(const SuiteOptions& o, json& out) {
  const QSignal2D f = random_signal(o, o.seed);
  for (const auto& p : suite_params()) {
    out.push_back(seeded(verify_fast_vs_direct(f, p), o.seed));
    // the naive reference costs O(N^4); skip it on large grids
    if (o.n <= 32) {
      const double e = max_abs_diff(forward_direct(f, p), reference::forward_direct(f, p));
      out.push_back(seeded(VerificationReport::make("direct_vs_reference", e, 1e-12, describe(f.grid()), p.to_string()),
                           o.seed));
    }
  }
}

void suite_shift(const SuiteOptions& o, json& out) {
  const QSignal2D f = random_signal(o, o.seed);
  const QSignal2D g = sample_function(suite_grid(o), GaussianSpec{1.0, 1.0});
  const double dx1 = f.grid().dx1(), dx2 = f.grid().dx2();
  auto params = suite_params();
  params.push_back({QPFTParams(1, 1, 0, 0, 0), QPFTParams(1, 1, 0, 0, 0)});
  for (const auto& p : params) {
    out.push_back(seeded(verify_shift(f, p, {2 * dx1, -dx2}), o.seed, ":random"));
    out.push_back(seeded(verify_shift(g, p, {dx1, 0.0}), std::nullopt, ":gaussian"));
  }
}

void suite_modulation(const SuiteOptions& o, json& out) {
  const QSignal2D f = random_signal(o, o.seed);
  const QSignal2D g = sample_function(suite_grid(o), GaussianSpec{1.0, 1.0});
  for (const auto& p : suite_params()) {
    const Grid2D w = induced_frequency_grid(f.grid(), p);
    const std::array<double, 2> w0{3 * w.dx1() * p.mu1.b(), -2 * w.dx2() * p.mu2.b()};
    out.push_back(seeded(verify_modulation(f, p, w0), o.seed, ":random"));
    out.push_back(seeded(verify_modulation(g, p, {w0[0], 0.0}), std::nullopt, ":gaussian"));
  }
}

void suite_hausdorff_young(const SuiteOptions& o, json& out) {
  const QSignal2D f = random_signal(o, o.seed);
  for (const auto& p : suite_params()) {
    const QSignal2D spectrum = forward_fast(f, p);
    for (double pp : {1.0, 4.0 / 3.0, 2.0}) {
      json j = to_json(hausdorff_young_slack(f, spectrum, p, pp), p.to_string());
      j["seed"] = o.seed;
      out.push_back(std::move(j));
    }
  }
}

void suite_special_cases(const SuiteOptions& o, json& out) {
  const QSignal2D f = random_signal(o, o.seed);
  out.push_back(seeded(verify_qft_reduction(real_part(f)), o.seed));
  out.push_back(seeded(verify_fast_vs_direct(f, special_case_qft()), o.seed, ":qft"));
  out.push_back(exact_match("frqft_half_pi_is_qft", special_case_frqft(std::numbers::pi / 2) == special_case_qft(),
                            special_case_qft().to_string()));
  const double t = 0.7;
  out.push_back(exact_match("frqft_is_qlct",
                            special_case_frqft(t) == special_case_qlct(std::cos(t) / std::sin(t), -1.0 / std::sin(t),
                                                                       std::cos(t) / std::sin(t)),
                            special_case_frqft(t).to_string()));
  out.push_back(seeded(verify_fast_vs_direct(f, special_case_frqft(t)), o.seed, ":frqft"));
}

void suite_split_lemma(const SuiteOptions& o, json& out) {
  const QSignal2D f = random_signal(o, o.seed);
  for (const auto& p : suite_params()) out.push_back(seeded(verify_split_lemma(f, p), o.seed));
}

void write_json(const json& j, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw FormatError("cannot open " + path + " for writing");
  f << j.dump(2) << '\n';
  if (!f) throw FormatError("write to " + path + " failed");
}

void summarize(const json& reports, std::ostream& out) {
  for (const auto& r : reports) {
    const bool asserted = r.value("asserted", true);
    const char* tag = !asserted ? "INFO" : r.at("pass").get<bool>() ? "PASS" : "FAIL";
    out << tag << "  " << r.at("name").get<std::string>();
    if (r.contains("max_abs_error") && r.at("max_abs_error").is_number())
      out << "  error=" << r.at("max_abs_error").get<double>();
    if (r.contains("value")) out << "  value=" << r.at("value").get<double>();
    if (r.contains("parameters") && !r.at("parameters").get<std::string>().empty())
      out << "  [" << r.at("parameters").get<std::string>() << "]";
    out << '\n';
  }
}

QsigForm parse_form(const std::string& s) { return s == "text" ? QsigForm::text : QsigForm::binary; }

// Centered space grid whose induced frequency grid is `w`.
Grid2D space_grid_for(const Grid2D& w, const QQPFTParams& p) {
  const double dx1 = 2 * std::numbers::pi / (static_cast<double>(w.n1()) * w.dx1() * std::fabs(p.mu1.b()));
  const double dx2 = 2 * std::numbers::pi / (static_cast<double>(w.n2()) * w.dx2() * std::fabs(p.mu2.b()));
  return Grid2D::centered(w.n1(), w.n2(), dx1 * static_cast<double>(w.n1()), dx2 * static_cast<double>(w.n2()));
}

Variant parse_variant(const std::string& s) {
  if (s == "left") return Variant::left;
  if (s == "right") return Variant::right;
  return Variant::two_sided;
}

json transform_report(const std::string& command, const QSignal2D& result, const QQPFTParams& p,
                      const std::string& method, const std::string& path) {
  return {{"command", command},
          {"grid", describe(result.grid())},
          {"parameters", p.to_string()},
          {"method", method},
          {"output", path}};
}

}  // namespace

QPFTParams parse_params(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double d;
    try {
      d = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad parameter list '" + text + "': expected a,b,c,d,e");
    }
    if (used != item.size()) throw UsageError("bad parameter list '" + text + "': expected a,b,c,d,e");
    v.push_back(d);
  }
  if (v.size() != 5) throw UsageError("bad parameter list '" + text + "': expected five values a,b,c,d,e");
  return QPFTParams(v[0], v[1], v[2], v[3], v[4]);
}

json to_json(const VerificationReport& r) {
  json j{{"name", r.name},   {"max_abs_error", r.max_abs_error}, {"tolerance", r.tolerance}, {"pass", r.pass},
         {"grid", r.grid},   {"parameters", r.parameters},       {"details", r.details}};
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  return j;
}

json to_json(const UPReport& r, const std::string& parameters) {
  double shortfall = 0.0;
  if (r.kind == BoundKind::ratio) shortfall = std::fmax(0.0, 1.0 - r.value);
  if (r.kind == BoundKind::slack) shortfall = std::fmax(0.0, -r.value);
  if (r.kind == BoundKind::diagnostic) shortfall = std::fabs(r.value - r.rhs);
  return {{"name", r.name},
          {"kind", to_string(r.kind)},
          {"lhs", r.lhs},
          {"bound", r.rhs},
          {"value", r.value},
          {"max_abs_error", shortfall},
          {"tolerance", r.tolerance},
          {"pass", r.pass},
          {"asserted", r.asserted},
          {"b1", r.b1},
          {"b2", r.b2},
          {"constant", r.constant},
          {"grid", r.grid},
          {"parameters", parameters},
          {"seed", nullptr},
          {"details", r.extra}};
}

bool all_pass(const json& reports) {
  for (const auto& r : reports)
    if (r.value("asserted", true) && !r.at("pass").get<bool>()) return false;
  return true;
}

json run_suite(const std::string& name, const SuiteOptions& options) {
  json out = json::array();
  if (name == "all") {
    for (const auto& s : suite_names())
      for (auto& r : run_suite(s, options)) out.push_back(std::move(r));
    return out;
  }
  if (name == "roundtrip") suite_roundtrip(options, out);
  else if (name == "parseval") suite_parseval(options, out);
  else if (name == "fast-vs-direct") suite_fast_vs_direct(options, out);
  else if (name == "shift") suite_shift(options, out);
  else if (name == "modulation") suite_modulation(options, out);
  else if (name == "hausdorff-young") suite_hausdorff_young(options, out);
  else if (name == "special-cases") suite_special_cases(options, out);
  else if (name == "split-lemma") suite_split_lemma(options, out);
  else throw std::invalid_argument("unknown suite " + name);
  return out;
}

CommandResult run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quaternion quadratic-phase Fourier transform tool", "qqpft"};
  app.require_subcommand(1);
  const std::vector<std::string> any_form{"binary", "text"};

  std::string mu1, mu2, in, out_path, method, variant = "two", form = "binary", json_path;

  auto* transform = app.add_subcommand("transform", "Forward transform of a QSIG signal");
  transform->add_option("--mu1", mu1, "a,b,c,d,e for the i-kernel on x1")->required();
  transform->add_option("--mu2", mu2, "a,b,c,d,e for the j-kernel on x2")->required();
  transform->add_option("--in", in)->required();
  transform->add_option("--out", out_path)->required();
  transform->add_option("--method", method)->check(CLI::IsMember({"fast", "direct"}))->default_val("fast");
  transform->add_option("--variant", variant)->check(CLI::IsMember({"two", "left", "right"}))->default_val("two");
  transform->add_option("--format", form)->check(CLI::IsMember(any_form))->default_val("binary");

  auto* inv = app.add_subcommand("inverse", "Inverse transform onto the centered space grid");
  inv->add_option("--mu1", mu1)->required();
  inv->add_option("--mu2", mu2)->required();
  inv->add_option("--in", in)->required();
  inv->add_option("--out", out_path)->required();
  inv->add_option("--method", method)->check(CLI::IsMember({"exact", "direct"}))->default_val("exact");
  inv->add_option("--format", form)->check(CLI::IsMember(any_form))->default_val("binary");

  double k1 = 0.5, k2 = 0.5, extent = 12.0;
  std::size_t n = 16;
  std::uint64_t seed = 0;
  auto* gauss = app.add_subcommand("gaussian", "Closed-form transform of exp(-(k1 x1^2 + k2 x2^2))");
  gauss->add_option("--k1", k1)->default_val(0.5);
  gauss->add_option("--k2", k2)->default_val(0.5);
  gauss->add_option("--mu1", mu1)->required();
  gauss->add_option("--mu2", mu2)->required();
  gauss->add_option("--n", n)->default_val(64);
  gauss->add_option("--extent", extent)->default_val(16.0);
  gauss->add_option("--out", out_path)->required();
  gauss->add_option("--format", form)->check(CLI::IsMember(any_form))->default_val("binary");

  std::string suite = "all";
  std::vector<std::string> suite_choices{"all"};
  for (const auto& s : suite_names()) suite_choices.push_back(s);
  auto* verify = app.add_subcommand("verify", "Run invariant suites on seeded random signals");
  verify->add_option("--suite", suite)->check(CLI::IsMember(suite_choices))->default_val("all");
  verify->add_option("--n", n)->default_val(16);
  verify->add_option("--extent", extent)->default_val(12.0);
  verify->add_option("--seed", seed)->default_val(0);
  verify->add_option("--json", json_path, "write the report array here instead of stdout");

  std::string e1_path, e2_path, log_constant_choice = "both";
  auto* unc = app.add_subcommand("uncertainty", "Evaluate the uncertainty inequalities on a signal");
  unc->add_option("--in", in)->required();
  unc->add_option("--mu1", mu1)->required();
  unc->add_option("--mu2", mu2)->required();
  auto* e1_opt = unc->add_option("--e1", e1_path, "PBM mask on the space grid");
  auto* e2_opt = unc->add_option("--e2", e2_path, "PBM mask on the frequency grid");
  e1_opt->needs(e2_opt);
  e2_opt->needs(e1_opt);
  unc->add_option("--log-constant", log_constant_choice)
      ->check(CLI::IsMember({"paper", "corrected", "both"}))
      ->default_val("both");
  unc->add_option("--json", json_path);

  auto* image = app.add_subcommand("image", "Convert between PPM and QSIG");
  image->require_subcommand(1);
  auto* import = image->add_subcommand("import", "PPM -> QSIG");
  import->add_option("--in", in)->required();
  import->add_option("--out", out_path)->required();
  import->add_option("--format", form)->check(CLI::IsMember(any_form))->default_val("binary");
  auto* exp = image->add_subcommand("export", "QSIG -> PPM");
  exp->add_option("--in", in)->required();
  exp->add_option("--out", out_path)->required();

  std::vector<const char*> argv{"qqpft"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? 0 : 2, json{{"error", e.what()}}};
  }

  try {
    if (*transform) {
      const QQPFTParams p{parse_params(mu1), parse_params(mu2)};
      const QSignal2D f = read_qsig(in);
      const Method m = method == "direct" ? Method::direct : Method::fast;
      QSignal2D result = variant == "two"
                             ? (m == Method::fast ? forward_fast(f, p) : forward_direct(f, p))
                             : forward_sided(f, p, parse_variant(variant), m);
      write_qsig(result, out_path, parse_form(form));
      json report = transform_report("transform", result, p, method, out_path);
      report["variant"] = variant;
      out << "wrote " << out_path << " (" << describe(result.grid()) << ")\n";
      return {0, report};
    }
    if (*inv) {
      const QQPFTParams p{parse_params(mu1), parse_params(mu2)};
      const QSignal2D spectrum = read_qsig(in);
      const QSignal2D f = inverse(spectrum, p, space_grid_for(spectrum.grid(), p),
                                  method == "direct" ? InverseMethod::direct : InverseMethod::exact);
      write_qsig(f, out_path, parse_form(form));
      out << "wrote " << out_path << " (" << describe(f.grid()) << ")\n";
      return {0, transform_report("inverse", f, p, method, out_path)};
    }
    if (*gauss) {
      const QQPFTParams p{parse_params(mu1), parse_params(mu2)};
      const Grid2D w = induced_frequency_grid(Grid2D::centered(n, extent), p);
      std::vector<Quaternion> s(w.size());
      for (std::size_t i1 = 0; i1 < w.n1(); ++i1)
        for (std::size_t i2 = 0; i2 < w.n2(); ++i2) s[w.index(i1, i2)] = gaussian_oracle(p, k1, k2, {w.x1(i1), w.x2(i2)});
      write_qsig(QSignal2D(w, std::move(s)), out_path, parse_form(form));
      out << "wrote " << out_path << " (" << describe(w) << ")\n";
      return {0, transform_report("gaussian", QSignal2D(w), p, "closed-form", out_path)};
    }
    if (*verify) {
      const json reports = run_suite(suite, SuiteOptions{n, extent, seed});
      if (json_path.empty()) {
        out << reports.dump(2) << '\n';
      } else {
        write_json(reports, json_path);
        summarize(reports, out);
      }
      return {all_pass(reports) ? 0 : 1, reports};
    }
    if (*unc) {
      const QQPFTParams p{parse_params(mu1), parse_params(mu2)};
      const QSignal2D f = read_qsig(in);
      const QSignal2D spectrum = forward_fast(f, p);
      const std::string ps = p.to_string();
      json reports = json::array();
      reports.push_back(to_json(heisenberg_ratio(f, spectrum, p, 1), ps));
      reports.push_back(to_json(heisenberg_ratio(f, spectrum, p, 2), ps));
      reports.push_back(to_json(directional_ratio(f, spectrum, p), ps));
      if (p.mu1.b() == p.mu2.b()) {
        if (log_constant_choice != "paper")
          reports.push_back(to_json(log_up_slack(f, spectrum, p, LogConstant::corrected), ps));
        if (log_constant_choice != "corrected")
          reports.push_back(to_json(log_up_slack(f, spectrum, p, LogConstant::paper), ps));
      } else {
        err << "note: logarithmic inequality skipped, it needs b1 == b2\n";
      }
      for (double pp : {1.0, 4.0 / 3.0, 2.0}) reports.push_back(to_json(hausdorff_young_slack(f, spectrum, p, pp), ps));
      if (!e1_path.empty()) {
        const GridMask e1 = read_pbm(std::filesystem::path(e1_path), f.grid());
        const GridMask e2 = read_pbm(std::filesystem::path(e2_path), spectrum.grid());
        reports.push_back(to_json(donoho_stark_check(f, spectrum, p, e1, e2), ps));
      }
      try {
        reports.push_back(to_json(hardy_diagnostic(f, spectrum, p), ps));
      } catch (const std::invalid_argument& e) {
        err << "note: decay-rate diagnostic skipped: " << e.what() << '\n';
      }
      if (json_path.empty()) {
        out << reports.dump(2) << '\n';
      } else {
        write_json(reports, json_path);
        summarize(reports, out);
      }
      return {all_pass(reports) ? 0 : 1, reports};
    }
    if (*import) {
      const QSignal2D f = read_ppm(std::filesystem::path(in));
      write_qsig(f, out_path, parse_form(form));
      out << "wrote " << out_path << " (" << describe(f.grid()) << ")\n";
      return {0, json{{"command", "image import"}, {"grid", describe(f.grid())}, {"output", out_path}}};
    }
    if (*exp) {
      const QSignal2D f = read_qsig(in);
      const PpmWriteResult w = write_ppm(f, std::filesystem::path(out_path));
      if (w.scalar_dropped) err << "warning: nonzero scalar parts were dropped\n";
      if (w.clamped) err << "warning: channel values outside [0, 1] were clamped\n";
      out << "wrote " << out_path << '\n';
      return {0, json{{"command", "image export"},
                      {"grid", describe(f.grid())},
                      {"output", out_path},
                      {"scalar_dropped", w.scalar_dropped},
                      {"clamped", w.clamped}}};
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return {2, json{{"error", e.what()}}};
  }
  return {2, json{{"error", "no command"}}};
}

}  // namespace qqpft::cli
