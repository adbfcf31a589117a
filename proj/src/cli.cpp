#include "pgl2q/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "pgl2q/io.hpp"
#include "pgl2q/tables.hpp"
#include "pgl2q/verify.hpp"

namespace pgl2q {

namespace {

// Pools the families m = p+1 .. floor(r/2): the quadrics through the
// p-th osculating variety of the rational normal curve.
std::vector<FormFamily> osculating_pool(int r, int p) {
  std::vector<FormFamily> pool;
  for (int m = p + 1; 2 * m <= r; ++m) pool.push_back(build_closed(make_params(r, m), Rational(1)));
  return pool;
}

int usage_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << "\n";
  return 2;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact quadratic equations of the projective varieties cut out by the "
               "equivariant projections of S^2(S^r(C^2))"};
  app.require_subcommand(0, 1);
  std::string out_path;
  app.add_option("--out", out_path, "write the result to this file instead of standard output");

  int r = 0, m = 0, p = 0, r_max = 0;
  std::string format_name = "plain";
  std::string lambda_text = "1";
  std::string fixture_path;

  CLI::App* generate = app.add_subcommand(
      "generate", "construct and print the n+1 quadrics for one (r, m)");
  generate->add_option("--r", r, "ambient projective dimension, r >= 2")->required();
  generate->add_option("--m", m, "projection index, 0 <= m <= r/2")->required();
  generate->add_option("--format", format_name, "plain | json | m2 | singular");
  generate->add_option("--lambda", lambda_text,
                       "scale of the family, exact rational like 7/3 (output is normalized, "
                       "hence independent of lambda)");

  CLI::App* ideal = app.add_subcommand(
      "ideal", "pooled quadrics of the p-th osculating variety (families m = p+1 .. floor(r/2))");
  ideal->add_option("--r", r, "ambient projective dimension, r >= 2")->required();
  ideal->add_option("--p", p, "osculating order, 0 <= p, with p+1 <= floor(r/2)")->required();
  ideal->add_option("--format", format_name, "plain | json | m2 | singular");

  CLI::App* verify = app.add_subcommand("verify", "run the exact invariant suite over a grid");
  verify->add_option("--r-max", r_max, "largest r in the grid, >= 2")->required();

  CLI::App* certify_cmd = app.add_subcommand(
      "certify", "dimension/degree certificate from exact Jacobian ranks at witnesses");
  certify_cmd->add_option("--r", r, "ambient projective dimension, r >= 2")->required();
  certify_cmd->add_option("--m", m, "projection index, 0 <= m <= r/2")->required();
  certify_cmd->add_option("--format", format_name, "plain | json");

  CLI::App* osculate = app.add_subcommand(
      "osculate", "symbolic containment test of the p-th osculating variety");
  osculate->add_option("--r", r, "ambient projective dimension, r >= 2")->required();
  osculate->add_option("--m", m, "projection index, 0 <= m <= r/2")->required();
  osculate->add_option("--p", p, "osculating order, 0 <= p <= r")->required();

  CLI::App* hilbert = app.add_subcommand(
      "hilbert", "Hilbert polynomial of the p-th osculating variety, with dimension and degree");
  hilbert->add_option("--r", r, "curve degree, r >= 2")->required();
  hilbert->add_option("--p", p, "osculating order, 0 <= p <= r-1")->required();

  CLI::App* compare = app.add_subcommand(
      "compare", "span comparison of generated pooled quadrics against a polynomial file");
  compare->add_option("--r", r, "ambient projective dimension, r >= 2")->required();
  compare->add_option("--p", p, "osculating order, 0 <= p, with p+1 <= floor(r/2)")->required();
  compare->add_option("--fixture", fixture_path, "file of quadrics, one per line")->required();

  CLI::App* tables = app.add_subcommand(
      "tables", "certify the reference dimension/degree data for r up to --r-max");
  tables->add_option("--r-max", r_max, "largest r checked (reference data covers r <= 13)")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }
  if (app.get_subcommands().empty()) {
    err << app.help();
    return 2;
  }

  std::ostringstream result;
  int status = 0;
  try {
    if (generate->parsed()) {
      if (r < 2 || m < 0 || 2 * m > r)
        return usage_error(err, "generate requires r >= 2 and 0 <= m <= floor(r/2)");
      const auto format = parse_format(format_name);
      if (!format) return usage_error(err, "unknown format '" + format_name + "'");
      Rational lambda;
      try {
        lambda = parse_rational(lambda_text);
      } catch (const std::invalid_argument& e) {
        return usage_error(err, std::string("bad --lambda: ") + e.what());
      }
      if (lambda == 0) return usage_error(err, "--lambda must be nonzero");
      result << render(build_closed(make_params(r, m), lambda), *format);
    } else if (ideal->parsed()) {
      if (r < 2 || p < 0 || 2 * (p + 1) > r)
        return usage_error(err,
                           "ideal requires r >= 2 and 0 <= p with p+1 <= floor(r/2) "
                           "(nonempty pool)");
      const auto format = parse_format(format_name);
      if (!format) return usage_error(err, "unknown format '" + format_name + "'");
      result << render_pool(osculating_pool(r, p), *format);
    } else if (verify->parsed()) {
      if (r_max < 2) return usage_error(err, "verify requires --r-max >= 2");
      const VerifySuite suite = run_verification(r_max);
      result << suite.report;
      status = suite.pass ? 0 : 1;
    } else if (certify_cmd->parsed()) {
      if (r < 2 || m < 0 || 2 * m > r)
        return usage_error(err, "certify requires r >= 2 and 0 <= m <= floor(r/2)");
      const auto format = parse_format(format_name);
      if (!format || (*format != ExportFormat::plain_text &&
                      *format != ExportFormat::structured_json))
        return usage_error(err, "certify supports --format plain or json");
      result << render_report(certify(make_params(r, m)), *format);
    } else if (osculate->parsed()) {
      if (r < 2 || m < 0 || 2 * m > r)
        return usage_error(err, "osculate requires r >= 2 and 0 <= m <= floor(r/2)");
      if (p < 0 || p > r) return usage_error(err, "osculate requires 0 <= p <= r");
      const FormFamily family = build_closed(make_params(r, m), Rational(1));
      const OsculatingChart c = chart(r, p);
      bool contained = true;
      result << "substitution of the order-" << p << " chart into the quadrics of (r=" << r
             << ", m=" << m << "):\n";
      for (const QuadraticForm& q : family.forms) {
        const bool vanishes = substitute(q, c).is_zero();
        contained = contained && vanishes;
        result << "  k=" << q.k() << ": " << (vanishes ? "vanishes" : "does not vanish") << "\n";
      }
      result << (contained ? "contained: the variety contains the osculating variety\n"
                           : "not contained\n");
      status = contained ? 0 : 1;
    } else if (hilbert->parsed()) {
      if (r < 2) return usage_error(err, "hilbert requires r >= 2");
      if (p < 0 || p >= r) return usage_error(err, "hilbert requires 0 <= p <= r-1");
      const UniPoly h = hilbert_poly(r, p);
      result << "H(d) = ";
      bool first = true;
      for (int i = h.degree(); i >= 0; --i) {
        const Rational c = h.coeff(i);
        if (c == 0) continue;
        if (first) {
          if (c < 0) result << "-";
          first = false;
        } else {
          result << (c < 0 ? " - " : " + ");
        }
        const Rational magnitude = abs(c);
        if (magnitude != 1 || i == 0) result << to_string(magnitude);
        if (i > 0) {
          if (magnitude != 1) result << "*";
          result << "d";
          if (i > 1) result << "^" << i;
        }
      }
      result << "\n";
      const DimDeg dd = dim_deg_from_hilbert(h);
      result << "dimension " << dd.dimension << "\n";
      result << "degree " << dd.degree.get_str() << "\n";
    } else if (compare->parsed()) {
      if (r < 2 || p < 0 || 2 * (p + 1) > r)
        return usage_error(err,
                           "compare requires r >= 2 and 0 <= p with p+1 <= floor(r/2) "
                           "(nonempty pool)");
      std::ifstream in(fixture_path);
      if (!in) return usage_error(err, "cannot open fixture file '" + fixture_path + "'");
      std::stringstream buffer;
      buffer << in.rdbuf();
      std::vector<ParsedForm> fixture;
      try {
        fixture = parse_quadrics(buffer.str());
      } catch (const ParseError& e) {
        err << "error: fixture does not parse: " << e.what() << "\n";
        return 1;
      }
      std::vector<ParsedForm> generated;
      for (const FormFamily& family : osculating_pool(r, p)) {
        const FormFamily normal = normalize(family);
        for (const QuadraticForm& q : normal.forms) generated.push_back(to_parsed(q));
      }
      const SpanComparison cmp = span_equal(generated, fixture);
      result << "generated " << generated.size() << " quadrics (span dimension " << cmp.dim_a
             << "), file has " << fixture.size() << " (span dimension " << cmp.dim_b
             << "), joint span dimension " << cmp.dim_joint << "\n";
      if (cmp.equal) {
        result << "spans equal\n";
      } else {
        status = 1;
        result << "spans differ\n";
        if (cmp.dim_joint == cmp.dim_b)
          result << "every generated quadric lies in the file's span; the file spans a "
                    "strictly larger space\n";
        if (cmp.dim_joint == cmp.dim_a)
          result << "every file quadric lies in the generated span; the generated set spans a "
                    "strictly larger space\n";
        const OsculatingChart c = chart(r, p);
        int vanishing = 0;
        for (const ParsedForm& f : fixture)
          if (substitute_parsed(f, c).is_zero()) ++vanishing;
        result << vanishing << " of " << fixture.size()
               << " file quadrics vanish on the order-" << p << " osculating chart\n";
      }
    } else if (tables->parsed()) {
      if (r_max < 2) return usage_error(err, "tables requires --r-max >= 2");
      const TableCheck check = tables_report(r_max);
      result << check.report;
      status = check.pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) return usage_error(err, "cannot open output file '" + out_path + "'");
    file << result.str();
  } else {
    out << result.str();
  }
  return status;
}

}  // namespace pgl2q
