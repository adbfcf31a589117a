#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "pgl2q/io.hpp"

namespace pgl2q {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* kNormalizationNote =
    "each form scaled to coprime integer monomial coefficients with the "
    "smallest-index coefficient positive";

std::string monomial_text(int i, int j) {
  if (i == j) return "x_" + std::to_string(i) + "^2";
  return "x_" + std::to_string(j) + "*x_" + std::to_string(i);
}

// "x_4*x_0 - 4*x_3*x_1 + 3*x_2^2": terms by ascending smaller index, the
// higher index printed first inside each monomial, unit coefficients omitted.
std::string plain_form(const QuadraticForm& q) {
  const auto mono = monomials(q);
  if (mono.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : mono) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = abs(c);
    if (magnitude != 1) out += to_string(magnitude) + "*";
    out += monomial_text(key.first, key.second);
  }
  return out;
}

std::vector<std::string> pool_lines(const std::vector<FormFamily>& normalized) {
  std::vector<std::string> lines;
  for (const FormFamily& family : normalized)
    for (const QuadraticForm& q : family.forms) lines.push_back(plain_form(q));
  return lines;
}

ordered_json family_json(const FormFamily& family) {
  ordered_json forms = ordered_json::array();
  for (const QuadraticForm& q : family.forms) {
    ordered_json entries = ordered_json::array();
    for (const auto& [key, c] : monomials(q))
      entries.push_back({{"i", key.first}, {"j", key.second}, {"c", to_string(c)}});
    forms.push_back({{"k", q.k()}, {"monomials", std::move(entries)}});
  }
  return ordered_json{{"r", family.params.r},
                      {"m", family.params.m},
                      {"n", family.params.n},
                      {"lambda", to_string(family.lambda)},
                      {"forms", std::move(forms)}};
}

std::string m2_script(int r, const std::vector<std::string>& lines) {
  std::ostringstream out;
  out << "R = QQ[x_0..x_" << r << "];\n";
  out << "I = ideal(\n";
  for (size_t idx = 0; idx < lines.size(); ++idx)
    out << "  " << lines[idx] << (idx + 1 < lines.size() ? "," : "") << "\n";
  out << ");\n";
  return out.str();
}

std::string singular_script(int r, const std::vector<std::string>& lines) {
  std::ostringstream out;
  out << "ring R = 0,(";
  for (int i = 0; i <= r; ++i) out << (i ? "," : "") << "x_" << i;
  out << "),dp;\n";
  out << "ideal I =\n";
  for (size_t idx = 0; idx < lines.size(); ++idx)
    out << "  " << lines[idx] << (idx + 1 < lines.size() ? "," : ";") << "\n";
  return out.str();
}

std::string render_normalized(const std::vector<FormFamily>& normalized, int r,
                              ExportFormat format, bool single) {
  switch (format) {
    case ExportFormat::plain_text: {
      std::string out;
      for (const std::string& line : pool_lines(normalized)) {
        out += line;
        out += "\n";
      }
      return out;
    }
    case ExportFormat::structured_json: {
      ordered_json doc;
      doc["schema"] = 1;
      doc["normalization"] = kNormalizationNote;
      if (single) {
        doc["kind"] = "family";
        doc.update(family_json(normalized.front()));
      } else {
        doc["kind"] = "pool";
        doc["r"] = r;
        ordered_json families = ordered_json::array();
        for (const FormFamily& family : normalized) families.push_back(family_json(family));
        doc["families"] = std::move(families);
      }
      return doc.dump(2) + "\n";
    }
    case ExportFormat::m2_script:
      return m2_script(r, pool_lines(normalized));
    case ExportFormat::singular_script:
      return singular_script(r, pool_lines(normalized));
  }
  throw std::logic_error("render: unknown format");
}

}  // namespace

std::optional<ExportFormat> parse_format(const std::string& name) {
  if (name == "plain") return ExportFormat::plain_text;
  if (name == "json") return ExportFormat::structured_json;
  if (name == "m2") return ExportFormat::m2_script;
  if (name == "singular") return ExportFormat::singular_script;
  return std::nullopt;
}

std::string render(const FormFamily& family, ExportFormat format) {
  return render_normalized({normalize(family)}, family.params.r, format, true);
}

std::string render_pool(const std::vector<FormFamily>& families, ExportFormat format) {
  if (families.empty()) throw std::invalid_argument("render_pool: empty family list");
  const int r = families.front().params.r;
  std::vector<FormFamily> normalized;
  normalized.reserve(families.size());
  for (const FormFamily& family : families) {
    if (family.params.r != r)
      throw std::invalid_argument("render_pool: families live in different ambient spaces");
    normalized.push_back(normalize(family));
  }
  return render_normalized(normalized, r, format, false);
}

std::string render_report(const CertificateReport& report, ExportFormat format) {
  const Params& p = report.params;
  if (format == ExportFormat::plain_text) {
    std::ostringstream out;
    out << "certificate r=" << p.r << " m=" << p.m << " n=" << p.n << "\n";
    out << "witnesses:\n";
    for (const Witness& w : report.witnesses) {
      out << "  " << w.label << ": point=(";
      for (int i = 0; i <= p.r; ++i) out << (i ? "," : "") << to_string(w.point.coords[i]);
      out << ") member=" << (w.member ? "yes" : "no") << " jacobian_rank=" << w.jacobian_rank
          << "\n";
    }
    if (report.codim_lower)
      out << "codim_lower: " << *report.codim_lower
          << " (largest Jacobian rank at a member witness; the x_" << p.r
          << " bound is global because the closed orbit of x_" << p.r
          << " lies in every component)\n";
    else
      out << "codim_lower: none (no member witness)\n";
    if (report.dim_upper) out << "dim_upper: " << *report.dim_upper << "\n";
    if (report.dim_lower)
      out << "dim_lower: " << *report.dim_lower << " (the variety contains the "
          << (p.m - 1) << "-osculating variety of the rational normal curve)\n";
    if (report.degree_claim)
      out << "degree_claim: " << report.degree_claim->get_str()
          << " (Jacobian rank attains the number of defining quadrics, n+1 = " << p.n + 1
          << ": complete intersection)\n";
    else
      out << "degree_claim: none (rank below n+1 = " << p.n + 1
          << "; the degree is not certified by this tool)\n";
    if (p.m == 0)
      out << "empty_certificate: " << (report.empty_certificate ? "yes" : "no")
          << " (triangular elimination forces every coordinate of a common zero to vanish)\n";
    return out.str();
  }
  if (format == ExportFormat::structured_json) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["kind"] = "certificate";
    doc["r"] = p.r;
    doc["m"] = p.m;
    doc["n"] = p.n;
    ordered_json witnesses = ordered_json::array();
    for (const Witness& w : report.witnesses) {
      ordered_json coords = ordered_json::array();
      for (const Rational& a : w.point.coords) coords.push_back(to_string(a));
      witnesses.push_back({{"label", w.label},
                           {"point", std::move(coords)},
                           {"member", w.member},
                           {"jacobian_rank", w.jacobian_rank}});
    }
    doc["witnesses"] = std::move(witnesses);
    doc["codim_lower"] =
        report.codim_lower ? ordered_json(*report.codim_lower) : ordered_json(nullptr);
    doc["dim_upper"] = report.dim_upper ? ordered_json(*report.dim_upper) : ordered_json(nullptr);
    doc["dim_lower"] = report.dim_lower ? ordered_json(*report.dim_lower) : ordered_json(nullptr);
    doc["degree_claim"] =
        report.degree_claim ? ordered_json(report.degree_claim->get_str()) : ordered_json(nullptr);
    doc["empty_certificate"] = report.empty_certificate;
    return doc.dump(2) + "\n";
  }
  throw std::invalid_argument("render_report: only plain and json formats are supported");
}

}  // namespace pgl2q
