// Polynomial text grammar:
//   poly   := term ('+' term)*
//   term   := [uint '*'?] factor ('*'? factor)*
//   factor := ident ('^' uint)?
//   ident  := letter alnum*
// or a JSON matrix literal {"E": [[...], ...], "vars": [...]}.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <regex>

#include <json.hpp>

#include "saito/errors.hpp"
#include "saito/polynomial.hpp"

namespace saito {
namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
  }
  bool atEnd() {
    skipSpace();
    return pos_ >= text_.size();
  }
  char peek() {
    skipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  std::string identifier() {
    skipSpace();
    std::string out;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      out.push_back(text_[pos_]);
      advance();
    }
    return out;
  }

  Integer unsignedInteger(const char* what) {
    skipSpace();
    const std::size_t line = line_, col = column_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      throw ParseError(std::string("negative or signed ") + what + " is not allowed", line, col);
    }
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits.push_back(text_[pos_]);
      advance();
    }
    if (digits.empty()) throw ParseError(std::string("expected ") + what, line, col);
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == '/')) {
      throw ParseError(std::string("non-integer ") + what, line_, column_);
    }
    return Integer(digits);
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, column_); }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

using Monomial = std::map<std::string, Integer>;

std::vector<std::string> orderVariables(const std::vector<std::string>& firstSeen) {
  static const std::regex indexed(R"(^([A-Za-z_]+)([0-9]+)$)");
  std::optional<std::string> prefix;
  std::vector<std::pair<Integer, std::string>> keyed;
  for (const auto& name : firstSeen) {
    std::smatch m;
    if (!std::regex_match(name, m, indexed)) return firstSeen;
    if (prefix && *prefix != m[1].str()) return firstSeen;
    prefix = m[1].str();
    keyed.emplace_back(Integer(m[2].str()), name);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::string> out;
  for (auto& [k, name] : keyed) out.push_back(name);
  return out;
}

ParseResult parseMatrixLiteral(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("malformed matrix literal", line, col);
  }
  if (!doc.is_object() || !doc.contains("E") || !doc["E"].is_array() || doc["E"].empty()) {
    throw ParseError("matrix literal needs a non-empty \"E\" array", 1, 1);
  }
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : doc["E"]) {
    if (!r.is_array() || r.empty()) throw ParseError("\"E\" rows must be non-empty arrays", 1, 1);
    std::vector<Integer> row;
    for (const auto& v : r) {
      if (!v.is_number_integer()) throw ParseError("non-integer exponent in \"E\"", 1, 1);
      if (v.get<long long>() < 0) throw ParseError("negative exponent in \"E\"", 1, 1);
      row.emplace_back(std::to_string(v.get<long long>()));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ShapeError("\"E\" rows have different lengths");
    }
    rows.push_back(std::move(row));
  }
  if (rows.size() != rows.front().size()) {
    throw ShapeError("exponent matrix has " + std::to_string(rows.size()) + " monomials in " +
                     std::to_string(rows.front().size()) + " variables");
  }
  IntMatrix e = IntMatrix::fromRows(rows);
  std::vector<std::string> vars;
  if (doc.contains("vars")) {
    for (const auto& v : doc["vars"]) {
      if (!v.is_string()) throw ParseError("\"vars\" must be a list of strings", 1, 1);
      vars.push_back(v.get<std::string>());
    }
    if (vars.size() != e.cols()) throw ShapeError("\"vars\" length does not match \"E\"");
  } else {
    vars = defaultVariableNames(e.cols());
  }
  return {InvertiblePolynomial(std::move(e), std::move(vars)), {}};
}

}  // namespace

ParseResult parsePolynomial(std::string_view text) {
  Lexer lex(text);
  if (lex.atEnd()) lex.fail("empty polynomial");
  if (lex.peek() == '{') return parseMatrixLiteral(text);

  std::vector<std::string> warnings;
  std::vector<Monomial> monomials;
  std::vector<std::string> firstSeen;
  do {
    Monomial mono;
    bool anyFactor = false;
    if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
      const std::size_t col = lex.column();
      const Integer coeff = lex.unsignedInteger("coefficient");
      if (coeff != 1) {
        warnings.push_back("coefficient " + coeff.get_str() + " at column " +
                           std::to_string(col) + " discarded (coefficients normalized to 1)");
      }
      lex.accept('*');
    }
    while (std::isalpha(static_cast<unsigned char>(lex.peek())) || lex.peek() == '_') {
      const std::string name = lex.identifier();
      Integer power = 1;
      if (lex.accept('^')) power = lex.unsignedInteger("exponent");
      if (std::find(firstSeen.begin(), firstSeen.end(), name) == firstSeen.end()) {
        firstSeen.push_back(name);
      }
      mono[name] += power;
      anyFactor = true;
      if (lex.accept('*')) {
        const char next = lex.peek();
        if (!std::isalpha(static_cast<unsigned char>(next)) && next != '_') {
          lex.fail("expected a variable after '*'");
        }
      }
    }
    if (!anyFactor) lex.fail("expected a monomial");
    monomials.push_back(std::move(mono));
  } while (lex.accept('+'));
  if (!lex.atEnd()) lex.fail(std::string("unexpected character '") + lex.peek() + "'");

  const std::vector<std::string> vars = orderVariables(firstSeen);
  if (monomials.size() != vars.size()) {
    throw ShapeError("polynomial has " + std::to_string(monomials.size()) + " monomials in " +
                     std::to_string(vars.size()) + " variables");
  }
  IntMatrix e(monomials.size(), vars.size());
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    for (std::size_t j = 0; j < vars.size(); ++j) {
      if (auto it = monomials[i].find(vars[j]); it != monomials[i].end()) e(i, j) = it->second;
    }
  }
  return {InvertiblePolynomial(std::move(e), vars), std::move(warnings)};
}

}  // namespace saito
