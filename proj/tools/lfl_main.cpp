// lfl: command-line front end for the verification suites, single
// evaluations and CSV tables.
//
//   lfl eval <object> [--s a+bi] [--z a+bi] [--terms N]
//   lfl verify <suite|all> [--tol T] [--tmax T] [--terms N] [--X N] [--seed S] [--timing]
//   lfl table <kind> [--max N] [--X N] [--bins B] [--mmax M] [--s a+bi] [--n N] [--out FILE]
//
// verify prints one JSON report per line; exit status 0 when every check
// passes, 1 on any failure, 2 on usage errors.

#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lfl/diophantine.hpp"
#include "lfl/eisenstein.hpp"
#include "lfl/hecke_l.hpp"
#include "lfl/langlands.hpp"
#include "lfl/modular_forms.hpp"
#include "lfl/special_fn.hpp"
#include "lfl/suites.hpp"
#include "lfl/zeta.hpp"

namespace {

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_double(std::string_view text, const std::string& whole) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("cannot parse complex number '" + whole + "'");
  }
  return v;
}

// Accepts "a", "bi", "a+bi", "a-bi" (also "i", "-i"), locale-independent.
lfl::ComplexPoint parse_complex(const std::string& raw) {
  std::string text;
  for (const char c : raw) {
    if (c != ' ') text += c;
  }
  if (text.empty()) throw UsageError("empty complex number");
  if (text.back() != 'i') return {parse_double(text, raw), 0.0};
  text.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = text.size(); i-- > 1;) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string re_part = split == std::string::npos ? "" : text.substr(0, split);
  std::string im_part = split == std::string::npos ? text : text.substr(split);
  if (!im_part.empty() && im_part.front() == '+') im_part.erase(0, 1);
  if (im_part.empty()) im_part = "1";
  if (im_part == "-") im_part = "-1";
  const double re = re_part.empty() ? 0.0 : parse_double(re_part, raw);
  return {re, parse_double(im_part, raw)};
}

nlohmann::ordered_json value_line(lfl::ComplexPoint v, double attained_error) {
  return {{"re", v.real()}, {"im", v.imag()}, {"attained_error", attained_error}};
}

nlohmann::ordered_json run_eval(const std::string& object, const std::optional<std::string>& s_text,
                                const std::optional<std::string>& z_text, std::uint32_t terms) {
  using namespace lfl;
  const auto need = [](const std::optional<std::string>& t, const char* flag) {
    if (!t) throw UsageError(std::string("eval: missing ") + flag);
    return parse_complex(*t);
  };
  if (object == "xi") {
    const XiValue v = xi(need(s_text, "--s"));
    return value_line(v.value, v.attained_error);
  }
  if (object == "zeta") {
    const ComplexPoint s = need(s_text, "--s");
    const XiValue x = xi(s);
    // zeta = xi pi^{s/2} / Gamma(s/2): the xi error scales by the same factor.
    const double scale = std::abs(std::exp(s / 2.0 * std::log(kPi)) * rgamma(s / 2.0));
    return value_line(zeta(s), x.attained_error * scale);
  }
  if (object == "zeta-halfplane") {
    const ComplexPoint s = need(s_text, "--s");
    const int N = static_cast<int>(terms);
    return value_line(zeta_halfplane(s, N, 1.0), zeta_halfplane_error(s, N));
  }
  if (object == "gamma") {
    const ComplexPoint v = gamma(need(s_text, "--s"));
    return value_line(v, 1e-15 * std::abs(v));
  }
  if (object == "log-gamma") {
    const ComplexPoint v = log_gamma(need(s_text, "--s"));
    return value_line(v, 1e-15 * std::max(1.0, std::abs(v)));
  }
  if (object == "theta") {
    const ComplexPoint t = need(s_text, "--s");
    if (t.imag() != 0.0) throw UsageError("eval theta: --s must be a positive real t");
    return value_line(theta(t.real()), 1e-16);
  }
  if (object == "phi-delta" || object == "phi-theta") {
    const ComplexPoint s = need(s_text, "--s");
    const QExpansion f = object == "phi-delta" ? delta_q_expansion(200) : theta_q_expansion(2000);
    return value_line(phi_completed(s, f), 1e-16);
  }
  if (object == "scattering-phi") {
    const ComplexPoint s = need(s_text, "--s");
    return value_line(scattering_phi(s), 1e-15 * std::abs(scattering_phi(s)));
  }
  if (object == "eisenstein") {
    const ComplexPoint s = need(s_text, "--s");
    const ComplexPoint z = need(z_text, "--z");
    const ComplexPoint v = eisenstein_fourier(UpperHalfPoint(z.real(), z.imag()), s);
    return value_line(v, 1e-14 * std::max(1.0, std::abs(v)));
  }
  if (object == "delta") {
    const ComplexPoint z = need(z_text, "--z");
    const QEvaluation v = evaluate(delta_q_expansion(terms), z, 1e-12);
    return value_line(v.value, v.tail_bound);
  }
  throw UsageError("eval: unknown object '" + object + "'");
}

int run_verify(const std::string& target, const lfl::SuiteOptions& options, bool timing) {
  std::vector<const lfl::Suite*> selected;
  if (target == "all") {
    for (const auto& s : lfl::suites()) selected.push_back(&s);
  } else if (const lfl::Suite* s = lfl::find_suite(target)) {
    selected.push_back(s);
  } else {
    throw UsageError("verify: unknown suite '" + target + "'");
  }
  bool all_pass = true;
  for (const lfl::Suite* suite : selected) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<lfl::VerificationReport> reports;
    try {
      reports = suite->run(options);
    } catch (const lfl::DomainError& e) {
      throw UsageError(e.what());
    } catch (const std::exception& e) {
      lfl::VerificationReport failed(suite->name, std::string("suite aborted: ") + e.what(), 0.0);
      failed.fail(e.what());
      reports.push_back(failed);
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    for (auto& r : reports) {
      // Timings vary run to run; they are reported only on request so the
      // default output is byte-identical across invocations.
      if (timing) r.set_runtime_ms(elapsed);
      all_pass = all_pass && r.pass();
      std::cout << r.to_json().dump() << '\n';
    }
    std::cout.flush();
  }
  return all_pass ? 0 : 1;
}

void run_table(const std::string& kind, std::ostream& out, std::uint32_t max_n, std::uint32_t X, int bins,
               int m_max, const std::optional<std::string>& s_text, std::uint64_t n) {
  using namespace lfl;
  if (kind == "tau") {
    write_coefficients_csv(out, delta_q_expansion(max_n), max_n);
  } else if (kind == "satotake-moments" || kind == "sato-tate-moments") {
    const auto coeffs = delta_prime_coefficients(X);
    write_moments_csv(out, sato_tate_report(coeffs, X, m_max, bins));
  } else if (kind == "histogram") {
    const auto coeffs = delta_prime_coefficients(X);
    write_histogram_csv(out, sato_tate_report(coeffs, X, 0, bins));
  } else if (kind == "eisenstein-grid") {
    const ComplexPoint s = s_text ? parse_complex(*s_text) : ComplexPoint(2.0, 0.0);
    out << "# E(x+iy, s) from the Fourier expansion a_0 + sum a_n(y,s) e^{2 pi i n x}, s=" << s.real()
        << (s.imag() < 0 ? "-" : "+") << std::abs(s.imag()) << "i\n";
    out << "x,y,re_E,im_E\n";
    char buf[128];
    for (int j = 0; j <= 6; ++j) {
      const double y = 0.5 + 0.25 * j;
      for (int i = -5; i <= 5; ++i) {
        const double x = 0.1 * i;
        const ComplexPoint v = eisenstein_fourier(UpperHalfPoint(x, y), s);
        std::snprintf(buf, sizeof buf, "%.2f,%.2f,%.15g,%.15g\n", x, y, v.real(), v.imag());
        out << buf;
      }
    }
  } else if (kind == "three-squares") {
    write_three_squares_csv(out, n);
  } else {
    throw UsageError("table: unknown kind '" + kind + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lfl: L-functions toolkit - verification suites, evaluations and tables"};
  app.require_subcommand(1);

  std::string object;
  std::optional<std::string> s_text;
  std::optional<std::string> z_text;
  std::uint32_t terms = 0;
  auto* eval = app.add_subcommand("eval", "Evaluate one object: xi, zeta, zeta-halfplane, gamma, log-gamma, theta, "
                                          "phi-delta, phi-theta, scattering-phi, eisenstein, delta");
  eval->add_option("object", object, "Object to evaluate")->required();
  eval->add_option("--s", s_text, "Complex argument a+bi");
  eval->add_option("--z", z_text, "Point of the upper half plane a+bi");
  eval->add_option("--terms", terms, "Series length (zeta-halfplane: N, delta: truncation)");

  std::string target;
  lfl::SuiteOptions options;
  double tol = 0.0;
  double tmax = 0.0;
  std::uint32_t verify_terms = 0;
  std::uint32_t X = 0;
  bool timing = false;
  std::string suite_names;
  for (const auto& s : lfl::suites()) suite_names += "\n  " + s.name + ": " + s.description;
  auto* verify = app.add_subcommand("verify", "Run a named suite or 'all'. Suites:" + suite_names);
  verify->add_option("suite", target, "Suite name or 'all'")->required();
  auto* tol_opt = verify->add_option("--tol", tol, "Override every tolerance")->check(CLI::PositiveNumber);
  auto* tmax_opt = verify->add_option("--tmax", tmax, "Height of t-grids")->check(CLI::PositiveNumber);
  auto* terms_opt = verify->add_option("--terms", verify_terms, "Dirichlet-series length");
  auto* x_opt = verify->add_option("--X", X, "Prime cutoff");
  verify->add_option("--seed", options.seed, "Seed for randomized demos");
  verify->add_flag("--timing", timing, "Fill runtime_ms (output then differs between runs)");

  std::string kind;
  std::uint32_t max_n = 100;
  std::uint32_t table_X = 100000;
  int bins = 40;
  int m_max = 8;
  std::uint64_t n = 50;
  std::optional<std::string> table_s;
  std::string out_path;
  auto* table = app.add_subcommand("table", "Write a CSV table: tau, satotake-moments (alias sato-tate-moments), "
                                            "histogram, eisenstein-grid, three-squares");
  table->add_option("kind", kind, "Table kind")->required();
  table->add_option("--max", max_n, "tau: number of rows")->check(CLI::Range(1u, 1000000u));
  table->add_option("--X", table_X, "Prime cutoff for moments and histogram");
  table->add_option("--bins", bins, "Histogram bins")->check(CLI::Range(1, 10000));
  table->add_option("--mmax", m_max, "Largest moment")->check(CLI::Range(0, 20));
  table->add_option("--s", table_s, "eisenstein-grid: s as a+bi");
  table->add_option("--n", n, "three-squares: n")->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1000000}));
  table->add_option("--out", out_path, "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*eval) {
      if (terms == 0) terms = object == "zeta-halfplane" ? 1000 : 200;
      std::cout << run_eval(object, s_text, z_text, terms).dump() << '\n';
      return 0;
    }
    if (*verify) {
      if (*tol_opt) options.tol = tol;
      if (*tmax_opt) options.tmax = tmax;
      if (*terms_opt) options.terms = verify_terms;
      if (*x_opt) options.X = X;
      return run_verify(target, options, timing);
    }
    if (*table) {
      if (out_path.empty()) {
        run_table(kind, std::cout, max_n, table_X, bins, m_max, table_s, n);
      } else {
        std::ostringstream buffer;
        run_table(kind, buffer, max_n, table_X, bins, m_max, table_s, n);
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw UsageError("table: cannot open '" + out_path + "'");
        file << buffer.str();
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const lfl::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsageError;
}
