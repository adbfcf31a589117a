#include <nlohmann/json.hpp>
#include <set>
#include <stdexcept>
#include <string>

#include "pgl2q/io.hpp"
#include "pgl2q/veronese.hpp"

namespace pgl2q {

ParsedForm to_parsed(const QuadraticForm& q) {
  ParsedForm form;
  form.coeffs = monomials(q);
  for (const auto& [key, c] : form.coeffs) form.r = std::max(form.r, key.second);
  return form;
}

namespace {

int ambient_index(const std::vector<ParsedForm>& forms) {
  int r = -1;
  for (const ParsedForm& f : forms) r = std::max(r, f.r);
  return r;
}

}  // namespace

SpanComparison span_equal(const std::vector<ParsedForm>& a, const std::vector<ParsedForm>& b) {
  const int ra = ambient_index(a);
  const int rb = ambient_index(b);
  if (ra != rb)
    throw std::invalid_argument("span_equal: mixed ambient index (" + std::to_string(ra) +
                                " vs " + std::to_string(rb) + ")");

  std::set<std::pair<int, int>> keys;
  for (const ParsedForm& f : a)
    for (const auto& [key, c] : f.coeffs) keys.insert(key);
  for (const ParsedForm& f : b)
    for (const auto& [key, c] : f.coeffs) keys.insert(key);

  std::map<std::pair<int, int>, int> column;
  int next = 0;
  for (const auto& key : keys) column[key] = next++;

  const int cols = next;
  ExactMatrix joint(0, cols);
  auto append_rows = [&](ExactMatrix& mat, const std::vector<ParsedForm>& forms) {
    for (const ParsedForm& f : forms) {
      std::vector<Rational> row(cols, Rational(0));
      for (const auto& [key, c] : f.coeffs) row[column[key]] = c;
      mat.append_row(row);
      joint.append_row(row);
    }
  };
  ExactMatrix ma(0, cols), mb(0, cols);
  append_rows(ma, a);
  append_rows(mb, b);

  SpanComparison cmp;
  cmp.dim_a = rank_exact(ma);
  cmp.dim_b = rank_exact(mb);
  cmp.dim_joint = rank_exact(joint);
  cmp.equal = cmp.dim_a == cmp.dim_b && cmp.dim_b == cmp.dim_joint;
  return cmp;
}

MultiPoly substitute_parsed(const ParsedForm& form, const OsculatingChart& c) {
  if (form.r > c.r)
    throw std::invalid_argument("substitute_parsed: form index " + std::to_string(form.r) +
                                " exceeds chart index " + std::to_string(c.r));
  MultiPoly total(c.p + 1);
  for (const auto& [key, coeff] : form.coeffs)
    total = total + c.coords[key.first] * c.coords[key.second] * coeff;
  return total;
}

namespace {

bool word_in_lexicon(const std::string& word, ExportFormat format) {
  if (word.size() >= 3 && word[0] == 'x' && word[1] == '_') {
    for (size_t i = 2; i < word.size(); ++i)
      if (word[i] < '0' || word[i] > '9') return false;
    return true;
  }
  switch (format) {
    case ExportFormat::plain_text:
      return false;
    case ExportFormat::m2_script:
      return word == "R" || word == "QQ" || word == "I" || word == "ideal";
    case ExportFormat::singular_script:
      return word == "ring" || word == "R" || word == "ideal" || word == "I" || word == "dp";
    default:
      return false;
  }
}

}  // namespace

bool script_well_formed(const std::string& text, ExportFormat format) {
  if (format == ExportFormat::structured_json) {
    // delegated to the JSON grammar itself
    return nlohmann::json::accept(text);
  }
  std::vector<char> stack;
  const std::string punctuation = format == ExportFormat::plain_text ? "+-*^ \t\r\n,"
                                  : format == ExportFormat::m2_script
                                      ? "+-*^=.,; \t\r\n"
                                      : "+-*^=,; \t\r\n";
  size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if ((ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') || ch == '_') {
      std::string word;
      while (i < text.size() &&
             ((text[i] >= 'A' && text[i] <= 'Z') || (text[i] >= 'a' && text[i] <= 'z') ||
              (text[i] >= '0' && text[i] <= '9') || text[i] == '_')) {
        word += text[i];
        ++i;
      }
      if (!word_in_lexicon(word, format)) return false;
      continue;
    }
    if (ch >= '0' && ch <= '9') {
      ++i;
      continue;
    }
    if (ch == '(' || ch == '[' || ch == '{') {
      stack.push_back(ch);
      ++i;
      continue;
    }
    if (ch == ')' || ch == ']' || ch == '}') {
      const char open = ch == ')' ? '(' : ch == ']' ? '[' : '{';
      if (stack.empty() || stack.back() != open) return false;
      stack.pop_back();
      ++i;
      continue;
    }
    if (punctuation.find(ch) != std::string::npos) {
      ++i;
      continue;
    }
    return false;
  }
  return stack.empty();
}

}  // namespace pgl2q
