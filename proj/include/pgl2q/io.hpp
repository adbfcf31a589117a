#ifndef PGL2Q_IO_HPP
#define PGL2Q_IO_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pgl2q/certificates.hpp"
#include "pgl2q/quadrics.hpp"
#include "pgl2q/veronese.hpp"

namespace pgl2q {

enum class ExportFormat {
  plain_text,       // one polynomial per line, integer coefficients
  structured_json,  // schema-versioned JSON with exact string coefficients
  m2_script,        // Macaulay2: ring + ideal declaration
  singular_script,  // Singular: ring + ideal declaration
};

// Accepts "plain", "json", "m2", "singular"; empty optional otherwise.
std::optional<ExportFormat> parse_format(const std::string& name);

// One parsed quadratic polynomial: monomial coefficients keyed by unordered
// index pairs (stored with i <= j), r inferred as the highest variable index
// occurring in this form.
struct ParsedForm {
  int r = 0;
  std::map<std::pair<int, int>, Rational> coeffs;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int col);
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// Monomial view of one form as a ParsedForm (the exporter/parser bridge).
ParsedForm to_parsed(const QuadraticForm& q);

// Renders a family in the requested format. Families are normalized first
// (idempotent when already normalized): plain text requires the coprime
// integer monomial coefficients, e.g. "x_4*x_0 - 4*x_3*x_1 + 3*x_2^2".
// Generator order is ascending k; within one polynomial, terms are listed by
// ascending smaller index, each monomial printed higher index first.
std::string render(const FormFamily& family, ExportFormat format);

// Renders several families (ascending m, ascending k within each) as one
// generator pool: the degree-two part of the ideal of an intersection of
// the corresponding varieties.
std::string render_pool(const std::vector<FormFamily>& families, ExportFormat format);

// Parses the plain-text grammar:
//   polynomials separated by newlines or commas
//   expression := term (('+'|'-') term)*
//   term      := [integer] factor factor?
//   factor    := 'x' '_'? ('{' digits '}' | digits) ['^' '2' | '^' '{' '2' '}']
// Whitespace and '*' are optional separators. A factor with exponent 2 counts
// as two factors; every monomial must have total degree exactly 2. Throws
// ParseError with 1-based line/column on malformed tokens, non-quadratic
// monomials, or empty input.
std::vector<ParsedForm> parse_quadrics(const std::string& text);

struct SpanComparison {
  bool equal = false;
  int dim_a = 0;
  int dim_b = 0;
  int dim_joint = 0;
};

// Compares the linear spans of two sets of quadrics inside the space of
// monomial coefficient vectors: equal iff rank(A) = rank(B) = rank(A u B).
// The ambient index of a set is the max over its forms; throws
// std::invalid_argument when the two sets' ambients differ.
SpanComparison span_equal(const std::vector<ParsedForm>& a, const std::vector<ParsedForm>& b);

// The exact polynomial obtained by feeding the chart coordinates into a
// parsed quadric (monomial convention: coefficient applied once per unordered
// pair). Throws when the form mentions an index beyond the chart.
MultiPoly substitute_parsed(const ParsedForm& form, const OsculatingChart& c);

// Shallow syntactic validation of exported text: balanced delimiters and
// every token drawn from the format's lexicon. Used as a self-check on the
// CAS script exporters.
bool script_well_formed(const std::string& text, ExportFormat format);

// Text serialization of a certificate (plain or JSON; other formats are
// rejected with std::invalid_argument).
std::string render_report(const CertificateReport& report, ExportFormat format);

}  // namespace pgl2q

#endif  // PGL2Q_IO_HPP
