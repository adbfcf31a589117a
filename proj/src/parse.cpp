#include <cctype>

#include "pgl2q/io.hpp"

namespace pgl2q {

ParseError::ParseError(const std::string& message, int line, int col)
    : std::runtime_error(message + " at " + std::to_string(line) + ":" + std::to_string(col)),
      line_(line),
      col_(col) {}

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line, col);
  }
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Spaces, tabs, carriage returns and '*' separate tokens inside one
// polynomial; newlines and commas separate polynomials and stop the skip.
void skip_inline(Cursor& c) {
  while (!c.eof()) {
    const char ch = c.peek();
    if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '*')
      c.advance();
    else
      return;
  }
}

std::string read_digits(Cursor& c) {
  std::string digits;
  while (!c.eof() && is_digit(c.peek())) {
    digits += c.peek();
    c.advance();
  }
  return digits;
}

// factor := 'x' '_'? ('{' digits '}' | digits); the cursor sits on 'x'.
int parse_variable_index(Cursor& c) {
  c.advance();  // 'x'
  if (!c.eof() && c.peek() == '_') c.advance();
  bool braced = false;
  if (!c.eof() && c.peek() == '{') {
    braced = true;
    c.advance();
  }
  if (c.eof() || !is_digit(c.peek())) c.fail("malformed token: expected variable index");
  const std::string digits = read_digits(c);
  if (braced) {
    if (c.eof() || c.peek() != '}') c.fail("malformed token: expected '}'");
    c.advance();
  }
  if (digits.size() > 6) c.fail("malformed token: variable index out of range");
  return std::stoi(digits);
}

// Consumes '^2' or '^{2}'; any other exponent is rejected.
void parse_square_exponent(Cursor& c) {
  c.advance();  // '^'
  bool braced = false;
  if (!c.eof() && c.peek() == '{') {
    braced = true;
    c.advance();
  }
  if (c.eof() || !is_digit(c.peek())) c.fail("malformed token: expected exponent");
  if (read_digits(c) != "2") c.fail("non-quadratic monomial: exponent must be 2");
  if (braced) {
    if (c.eof() || c.peek() != '}') c.fail("malformed token: expected '}'");
    c.advance();
  }
}

// term := [integer] factor factor?, with '^2' counting as a doubled factor.
// The accumulated monomial must have total degree exactly 2.
void parse_term(Cursor& c, int sign, ParsedForm& form) {
  skip_inline(c);
  const int term_line = c.line;
  const int term_col = c.col;
  Rational coefficient(sign);
  if (!c.eof() && is_digit(c.peek())) {
    coefficient = sign * Rational(Int(read_digits(c)));
    skip_inline(c);
  }
  if (c.eof() || c.peek() != 'x')
    throw ParseError("malformed token: expected variable", c.line, c.col);

  int indices[2];
  int degree = 0;
  while (degree < 2) {
    const int index = parse_variable_index(c);
    indices[degree++] = index;
    if (!c.eof() && c.peek() == '^') {
      if (degree == 2) c.fail("non-quadratic monomial");
      parse_square_exponent(c);
      indices[degree++] = index;
    }
    skip_inline(c);
    if (degree < 2) {
      if (c.eof() || c.peek() != 'x')
        throw ParseError("non-quadratic monomial: degree 1 term", term_line, term_col);
    }
  }
  if (!c.eof() && c.peek() == 'x') c.fail("non-quadratic monomial");

  const std::pair<int, int> key = std::minmax(indices[0], indices[1]);
  form.r = std::max({form.r, key.second});
  auto it = form.coeffs.find(key);
  if (it == form.coeffs.end()) {
    form.coeffs.emplace(key, coefficient);
  } else {
    it->second += coefficient;
    if (it->second == 0) form.coeffs.erase(it);
  }
}

// expression := term (('+'|'-') term)*, ending at a newline, a comma or EOF.
ParsedForm parse_polynomial(Cursor& c) {
  ParsedForm form;
  skip_inline(c);
  int sign = 1;
  if (!c.eof() && (c.peek() == '+' || c.peek() == '-')) {
    if (c.peek() == '-') sign = -1;
    c.advance();
  }
  parse_term(c, sign, form);
  for (;;) {
    skip_inline(c);
    if (c.eof()) break;
    const char ch = c.peek();
    if (ch == '\n' || ch == ',') break;
    if (ch == '+' || ch == '-') {
      c.advance();
      parse_term(c, ch == '-' ? -1 : 1, form);
      continue;
    }
    c.fail(std::string("malformed token: unexpected character '") + ch + "'");
  }
  return form;
}

}  // namespace

std::vector<ParsedForm> parse_quadrics(const std::string& text) {
  Cursor c{text};
  std::vector<ParsedForm> forms;
  for (;;) {
    while (!c.eof() && (std::isspace(static_cast<unsigned char>(c.peek())) || c.peek() == ','))
      c.advance();
    if (c.eof()) break;
    forms.push_back(parse_polynomial(c));
  }
  if (forms.empty()) throw ParseError("empty input", c.line, c.col);
  return forms;
}

}  // namespace pgl2q
