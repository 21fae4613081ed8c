#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "permulex/errors.hpp"
#include "permulex/io.hpp"
#include "permulex/permutation.hpp"
#include "permulex/sturmian.hpp"

using namespace permulex;

namespace {

int code(ExitCode c) { return static_cast<int>(c); }

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw ValidationError(out + ": cannot open for writing");
  f << text;
}

mpfr_prec_t precision_from_env() {
  const char* env = std::getenv("PERMULEX_PRECISION_BITS");
  if (!env || !*env) return kDefaultPrecision;
  char* end = nullptr;
  const long bits = std::strtol(env, &end, 10);
  if (*end != '\0' || bits < 64 || bits > kMaxPrecision) {
    throw ValidationError("PERMULEX_PRECISION_BITS must be an integer in [64, 4096]");
  }
  return bits;
}

struct Common {
  std::string spec;
  std::size_t prefix = kDefaultTypePrefix;
  std::size_t depth = kDefaultTypeDepth;
  long precision = 0;
  bool auto_power = false;
  bool force_ball = false;
  std::string out;

  void add(CLI::App* app) {
    app->add_option("spec", spec, "morphism spec file (JSON)")->required()->check(CLI::ExistingFile);
    app->add_option("--prefix", prefix, "prefix length used for the type order")->capture_default_str();
    app->add_option("--depth", depth, "maximal shift comparison depth")->capture_default_str();
    app->add_option("--precision", precision, "ball precision in bits (default from PERMULEX_PRECISION_BITS or 256)");
    app->add_flag("--auto-power", auto_power, "use the least monotone power when the morphism is not monotone");
    app->add_flag("--force-ball", force_ball, "use ball arithmetic even when exact values exist");
    app->add_option("--out", out, "write the result to this file instead of stdout");
  }

  AnalyzeOptions options() const {
    AnalyzeOptions o;
    o.prefix = prefix;
    o.depth = depth;
    o.precision = precision > 0 ? precision : precision_from_env();
    o.auto_power = auto_power;
    o.force_ball = force_ball;
    return o;
  }
};

Format parse_format(const std::string& s) { return s == "json" ? Format::Json : Format::Csv; }

int run_analyze(const Common& c) {
  const Analysis a = analyze(parse_spec(c.spec), c.options());
  emit(analysis_report(a), c.out);
  return a.ok() ? 0 : code(a.rejection->code);
}

int reject_to_stderr(const Analysis& a) {
  std::cerr << analysis_report(a);
  std::cerr << "permulex: " << a.rejection->reason << ": " << a.rejection->message << "\n";
  return code(a.rejection->code);
}

int run_generate(const Common& c, std::size_t n, const std::string& format) {
  if (n == 0) throw ValidationError("-n must be at least 1");
  const Analysis a = analyze(parse_spec(c.spec), c.options());
  if (!a.ok()) return reject_to_stderr(a);
  const auto values = with_precision_escalation(
      *a.inputs, [n](const IntervalMorphism& im) { return canonical_prefix(im, n); }, a.options.precision);
  emit(format_rows(sequence_rows(values), parse_format(format), a.spec.name), c.out);
  return 0;
}

std::optional<SturmianParams> sturmian_from(const std::string& sigma, const std::string& rho, mpfr_prec_t prec) {
  if (sigma.empty() && rho.empty()) return std::nullopt;
  if (sigma.empty() || rho.empty()) throw ValidationError("--sigma and --rho must be given together");
  return make_sturmian_params(parse_scalar(sigma, prec), parse_scalar(rho, prec));
}

int run_verify(const Common& c, VerifyOptions vo, bool swap_types, const std::string& sigma, const std::string& rho) {
  AnalyzeOptions ao = c.options();
  ao.swap_types = swap_types;
  const Analysis a = analyze(parse_spec(c.spec), ao);
  if (!a.ok()) return reject_to_stderr(a);
  vo.sturmian = sturmian_from(sigma, rho, ao.precision);
  const VerifySummary s = verify(a, vo);
  emit(verify_report(a, vo, s), c.out);
  if (!s.pass && s.oracle.first_mismatch) {
    std::cerr << "permulex: first mismatch at shifts " << s.oracle.first_mismatch->first << " and "
              << s.oracle.first_mismatch->second << "\n";
  }
  return s.pass ? 0 : code(ExitCode::VerificationFailed);
}

int run_sturmian(const std::string& sigma, const std::string& rho, std::size_t n, const std::string& format,
                 bool check, const std::string& out) {
  const mpfr_prec_t prec = precision_from_env();
  const SturmianParams params = *sturmian_from(sigma, rho, prec);
  if (check) {
    // Doubling identity and the cross-check against the Fibonacci square.
    const auto beta = rotation_sequence(params, 2 * n + 2);
    for (std::size_t k = 0; k <= n; ++k) {
      const auto [l, r] = doubling_step(beta[k], params);
      if (!equal(l, beta[2 * k]) || !equal(r, beta[2 * k + 1])) {
        std::cerr << "permulex: doubling step fails at n = " << k << "\n";
        return code(ExitCode::VerificationFailed);
      }
    }
    const Morphism fib2(2, {{0, 1, 0}, {0, 1}}, "fibonacci-squared");
    const SturmianCrossCheck r = sturmian_cross_check(params, fib2, 0, n);
    std::cout << "doubling: pass (n <= " << n << ")\n";
    std::cout << "shift order: " << (r.matches_shift_order ? "pass" : "fail") << "\n";
    std::cout << "canonical sequence: " << (r.matches_canonical ? "pass" : "fail") << "\n";
    if (r.first_mismatch) std::cout << "first mismatch: " << *r.first_mismatch << "\n";
    return r.agree() ? 0 : code(ExitCode::VerificationFailed);
  }
  emit(format_rows(sequence_rows(rotation_sequence(params, n)), parse_format(format), "rotation"), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permulex: canonical representatives of permutations generated by morphic words"};
  app.set_version_flag("--version", std::string("permulex ") + kVersion);
  app.require_subcommand(1);

  Common analyze_c;
  auto* analyze_cmd = app.add_subcommand("analyze", "spectral data, monotonicity, type order and interval layout");
  analyze_c.add(analyze_cmd);

  Common generate_c;
  std::size_t gen_n = 16;
  std::string gen_format = "csv";
  auto* generate_cmd = app.add_subcommand("generate", "first n values of the canonical sequence with ranks");
  generate_c.add(generate_cmd);
  generate_cmd->add_option("-n", gen_n, "number of values")->capture_default_str();
  generate_cmd->add_option("--format", gen_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  Common verify_c;
  VerifyOptions vo;
  bool swap_types = false;
  std::string v_sigma;
  std::string v_rho;
  auto* verify_cmd = app.add_subcommand("verify", "compare the construction with the shift order and statistics");
  verify_c.add(verify_cmd);
  verify_cmd->add_option("-n", vo.n, "number of values compared")->capture_default_str();
  verify_cmd->add_option("--levels", vo.dyadic_levels, "dyadic interval levels checked")->capture_default_str();
  verify_cmd->add_option("--tol", vo.canonical_tol, "tolerance on interval frequencies")->capture_default_str();
  verify_cmd->add_flag("--swap-types", swap_types, "negative control: exchange two adjacent types");
  verify_cmd->add_option("--sigma", v_sigma, "also compare the rotation by sigma");
  verify_cmd->add_option("--rho", v_rho, "starting point of the rotation");

  std::string s_sigma;
  std::string s_rho;
  std::size_t s_n = 16;
  std::string s_format = "csv";
  std::string s_out;
  bool s_check = false;
  auto* sturmian_cmd = app.add_subcommand("sturmian", "rotation sequences and the doubling cross-check");
  sturmian_cmd->add_option("--sigma", s_sigma, "rotation angle, e.g. \"(3-sqrt(5))/2\"")->required();
  sturmian_cmd->add_option("--rho", s_rho, "starting point")->required();
  sturmian_cmd->add_option("-n", s_n, "number of values")->capture_default_str();
  sturmian_cmd->add_option("--format", s_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sturmian_cmd->add_flag("--check", s_check, "check the doubling identity and compare with the Fibonacci square");
  sturmian_cmd->add_option("--out", s_out, "write the result to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : code(ExitCode::Validation);
  }

  try {
    if (*analyze_cmd) return run_analyze(analyze_c);
    if (*generate_cmd) return run_generate(generate_c, gen_n, gen_format);
    if (*verify_cmd) {
      vo.depth = verify_c.depth;
      return run_verify(verify_c, vo, swap_types, v_sigma, v_rho);
    }
    if (*sturmian_cmd) return run_sturmian(s_sigma, s_rho, s_n, s_format, s_check, s_out);
  } catch (const Error& e) {
    std::cerr << "permulex: " << e.kind() << ": " << e.what() << "\n";
    return code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "permulex: error: " << e.what() << "\n";
    return code(ExitCode::Validation);
  }
  return 0;
}
