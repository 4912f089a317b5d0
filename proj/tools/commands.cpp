#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "symcub/error.hpp"
#include "symcub/schur_cubature.hpp"
#include "symcub/serialization.hpp"
#include "symcub/verify.hpp"

namespace symcub::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text;
  if (!out) throw InvalidArgument("failed writing '" + path + "'");
}

std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw InvalidArgument("cannot parse complex number '" + std::string(whole) + "'");
  }
  return v;
}

// Runs a command body, mapping library errors to exit code 1.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "symcub: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  if (text.empty()) throw InvalidArgument("empty complex number");
  if (text.back() != 'i') return {parse_double(text, text), 0.0};
  const auto body = text.substr(0, text.size() - 1);
  // Split at the last sign that is neither leading nor part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const auto imag_text = split == std::string_view::npos ? body : body.substr(split);
  double im = 0.0;
  if (imag_text.empty() || imag_text == "+") {
    im = 1.0;
  } else if (imag_text == "-") {
    im = -1.0;
  } else {
    im = parse_double(imag_text, text);
  }
  const double re = split == std::string_view::npos ? 0.0 : parse_double(body.substr(0, split), text);
  return {re, im};
}

OrthoFamily make_family(const FamilyOptions& opts) {
  const auto& f = opts.family;
  if (f == "hermite") return OrthoFamily::hermite();
  if (f == "laguerre") return OrthoFamily::laguerre(opts.alpha);
  if (f == "jacobi") return OrthoFamily::jacobi(opts.alpha, opts.beta);
  if (f.size() == 10 && f.starts_with("chebyshev") && f[9] >= '1' && f[9] <= '4') {
    return OrthoFamily::bernstein_szego(BSParams::chebyshev(f[9] - '0'));
  }
  if (f == "bs") {
    if (opts.eps.size() != 2) throw InvalidArgument("--eps takes two values");
    std::vector<std::complex<double>> poles;
    for (const auto& p : opts.poles) poles.push_back(parse_complex(p));
    if (opts.auto_conjugate) {
      const auto given = poles;
      for (const auto& a : given) {
        if (a.imag() == 0.0) continue;
        const auto c = std::conj(a);
        const auto count = [&](std::complex<double> z) {
          return std::count_if(poles.begin(), poles.end(),
                               [&](auto p) { return std::abs(p - z) <= 1e-12; });
        };
        if (count(c) < count(a)) poles.push_back(c);
      }
    }
    return OrthoFamily::bernstein_szego(
        BSParams(opts.eps[0], opts.eps[1], std::move(poles), opts.allow_zero_poles));
  }
  throw InvalidArgument("unknown family '" + f +
                        "' (expected hermite, laguerre, jacobi, chebyshev1..4 or bs)");
}

int cmd_rule_gen(const GlobalOptions& g, const RuleGenOptions& opts, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    const auto family = make_family(opts.family);
    const auto start = std::chrono::steady_clock::now();
    const auto rule = build_rule(family, opts.m, opts.n, g.threads);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto text = to_json(rule);
    if (opts.output.empty()) {
      out << text;
      return 0;
    }
    write_file(opts.output, text);
    if (g.json) {
      out << "{\"nodes\": " << rule.size() << ", \"seconds\": " << format17(seconds)
          << ", \"output\": \"" << opts.output << "\"}\n";
    } else {
      out << "wrote " << rule.size() << " nodes to " << opts.output << " in " << seconds
          << " s\n";
    }
    return 0;
  });
}

int cmd_integrate(const GlobalOptions& g, const IntegrateOptions& opts, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    const auto rule = cubature_from_json(read_file(opts.rule_path));
    const auto spec = integrand_from_json(read_file(opts.spec_path));
    const double value = integrate_spec(rule, spec);
    if (g.json) {
      out << "{\"value\": " << format17(value) << "}\n";
    } else {
      out << format17(value) << "\n";
    }
    return 0;
  });
}

int cmd_roots(const GlobalOptions& g, const RootsOptions& opts, std::ostream& out,
              std::ostream& err) {
  if (opts.degree < 1) {
    err << "symcub roots: --degree must be at least 1\n";
    return 2;
  }
  return guarded(err, [&] {
    const auto family = make_family(opts.family);
    if (family.kind() != FamilyKind::bernstein_szego) {
      throw InvalidArgument("roots works on Bernstein-Szego families (chebyshev1..4 or bs)");
    }
    const auto& params = family.bs();
    const auto rule = bs_christoffel(params, opts.degree);
    if (g.json) out << "[\n";
    for (std::size_t l = 0; l < rule.nodes.size(); ++l) {
      const double xi = rule.nodes[l];
      const auto br = bs_root_bracket(params, opts.degree, static_cast<int>(l));
      if (g.json) {
        out << "  {\"l\": " << l << ", \"xi\": " << format17(xi)
            << ", \"cos_xi\": " << format17(std::cos(xi)) << ", \"lower\": " << format17(br.lower)
            << ", \"upper\": " << format17(br.upper) << ", \"weight\": " << format17(rule.weights[l])
            << "}" << (l + 1 < rule.nodes.size() ? "," : "") << "\n";
      } else {
        if (l == 0) out << "l\txi\tcos_xi\tlower\tupper\tweight\n";
        out << l << "\t" << format17(xi) << "\t" << format17(std::cos(xi)) << "\t"
            << format17(br.lower) << "\t" << format17(br.upper) << "\t"
            << format17(rule.weights[l]) << "\n";
      }
    }
    if (g.json) out << "]\n";
    return 0;
  });
}

int cmd_verify(const GlobalOptions& g, const VerifyOptions& opts, std::ostream& out,
               std::ostream& err) {
  OracleConfig cfg;
  cfg.points_per_axis = opts.points;
  cfg.mc_samples = opts.mc_samples;
  cfg.seed = g.seed;
  cfg.threads = g.threads;

  VerificationReport report;
  try {
    if (opts.rule_path.empty()) {
      report = run_default_sweep(cfg);
    } else {
      const auto rule = cubature_from_json(read_file(opts.rule_path));
      describe_config(report, cfg);
      report.environment.emplace_back("rule_family", rule.family.name());
      report.environment.emplace_back("rule_m", std::to_string(rule.m));
      report.environment.emplace_back("rule_n", std::to_string(rule.n));
      report.merge(run_orthogonality_suite(rule), "");
      report.merge(run_exactness_suite(rule, cfg), "");
    }
  } catch (const Error& e) {
    err << "symcub verify: " << e.what() << "\n";
    return 1;
  }

  const auto text = report.to_json();
  try {
    if (opts.output.empty()) {
      out << text;
    } else {
      write_file(opts.output, text);
    }
  } catch (const Error& e) {
    err << "symcub verify: " << e.what() << "\n";
    return 1;
  }
  if (!opts.output.empty()) {
    const auto failed = std::count_if(report.checks.begin(), report.checks.end(),
                                      [](const Check& c) { return !c.pass; });
    out << report.checks.size() - static_cast<std::size_t>(failed) << "/"
        << report.checks.size() << " checks passed, oracle "
        << (report.oracle_status == OracleStatus::ok ? "ok" : "imprecise") << "\n";
  }
  return report.exit_code();
}

}  // namespace symcub::cli
