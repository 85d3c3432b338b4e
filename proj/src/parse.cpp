#include "dmb/parse.hpp"

#include <cctype>

#include <json.hpp>

namespace dmb {

namespace {

using json = nlohmann::json;

class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : s_(s) {}

  ParsedPolynomial run() {
    ExactPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return {std::move(p), decimal_};
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'x' || c == 'X' || c == 'i' ||
           c == 'I' || c == '(';
  }

  ExactPoly expr() {
    ExactPoly acc = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      ExactPoly rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  ExactPoly term() {
    ExactPoly acc = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (c == '/') {
        std::size_t at = ++pos_;
        ExactPoly den = unary();
        if (den.is_zero() || den.degree() != 0) {
          pos_ = at;
          fail("division is only allowed by a nonzero constant");
        }
        acc = (GaussQ(1) / den.coeff(0)) * acc;
      } else if (starts_factor(c)) {
        acc = acc * unary();
      } else {
        return acc;
      }
    }
  }

  ExactPoly unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return GaussQ(-1) * unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  ExactPoly power() {
    ExactPoly base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    if (pos_ - start > 4) fail("exponent too large");
    return pow(base, static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
  }

  ExactPoly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      ExactPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x' || c == 'X') {
      ++pos_;
      return ExactPoly::x();
    }
    if (c == 'i' || c == 'I') {
      ++pos_;
      return ExactPoly::constant(GaussQ(0, 1));
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return ExactPoly::constant(number());
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  // Decimal literals are read exactly: "0.125" -> 1/8.
  GaussQ number() {
    std::size_t start = pos_;
    std::string digits;
    long scale = 0;
    bool seen_point = false;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        if (seen_point) ++scale;
      } else if (c == '.' && !seen_point) {
        seen_point = true;
        decimal_ = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (digits.empty()) {
      pos_ = start;
      fail("malformed number");
    }
    long exponent = 0;
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t epos = ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (dstart == pos_ || pos_ - dstart > 4) {
        pos_ = epos;
        fail("malformed exponent");
      }
      exponent = std::stol(s_.substr(epos, pos_ - epos));
      decimal_ = true;
    }
    mpz_class value(digits);
    long shift = exponent - scale;
    mpz_class ten;
    mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    mpq_class q = shift >= 0 ? mpq_class(value * ten) : mpq_class(value, ten);
    q.canonicalize();
    return GaussQ(q);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  bool decimal_ = false;
};

mpz_class json_integer(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

ParsedPolynomial parse_coeff_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("coeffs") || !doc["coeffs"].is_array()) {
    throw ParseError("expected {\"coeffs\": [...]}", 0);
  }
  std::vector<GaussQ> coeffs;
  for (const auto& c : doc["coeffs"]) {
    if (!c.is_array() || c.size() != 4) throw ParseError("each coefficient needs [re_num, re_den, im_num, im_den]", 0);
    try {
      mpq_class re(json_integer(c[0]), json_integer(c[1]));
      mpq_class im(json_integer(c[2]), json_integer(c[3]));
      if (sgn(re.get_den()) == 0 || sgn(im.get_den()) == 0) throw ParseError("zero denominator", 0);
      re.canonicalize();
      im.canonicalize();
      coeffs.emplace_back(re, im);
    } catch (const std::invalid_argument& e) {
      if (dynamic_cast<const ParseError*>(&e) != nullptr) throw;
      throw ParseError(e.what(), 0);
    }
  }
  return {ExactPoly(std::move(coeffs)), false};
}

json parse_json_or_throw(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
}

std::size_t json_index(const json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError("expected a nonnegative integer index", 0);
  return static_cast<std::size_t>(j.get<long long>());
}

}  // namespace

ParsedPolynomial parse_polynomial_text(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_coeff_json(text);
  return ExprParser(text).run();
}

Polynomial parse_polynomial(const std::string& text, Precision prec) {
  ParsedPolynomial parsed = parse_polynomial_text(text);
  if (parsed.exact.is_zero() || parsed.exact.degree() == 0) {
    throw std::invalid_argument("polynomial must have degree >= 1");
  }
  if (parsed.has_decimal) return NumericPoly::from_exact(parsed.exact, prec);
  return parsed.exact;
}

GraphInput parse_graph(const std::string& text) {
  if (auto preset = parse_preset(text)) return *preset;
  json doc = parse_json_or_throw(text);
  if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array()) {
    throw ParseError("expected {\"edges\": [[i, j], ...]} or a preset name", 0);
  }
  EdgeList edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2) throw ParseError("each edge needs two indices", 0);
    edges.emplace_back(json_index(e[0]), json_index(e[1]));
  }
  return edges;
}

std::vector<HintPair> parse_hints(const std::string& text) {
  json doc = parse_json_or_throw(text);
  if (!doc.is_array()) throw ParseError("hints must be a JSON array", 0);
  std::vector<HintPair> out;
  for (const auto& h : doc) {
    if (h.is_array() && h.size() == 3 && h[2].is_number()) {
      out.push_back({json_index(h[0]), json_index(h[1]), h[2].get<double>()});
    } else if (h.is_object() && h.contains("pair") && h.contains("delta") && h["pair"].is_array() &&
               h["pair"].size() == 2 && h["delta"].is_number()) {
      out.push_back({json_index(h["pair"][0]), json_index(h["pair"][1]), h["delta"].get<double>()});
    } else {
      throw ParseError("hint entries need [a, b, delta] or {\"pair\": [a, b], \"delta\": x}", 0);
    }
  }
  return out;
}

std::vector<std::size_t> parse_subset(const std::string& text) {
  json doc = parse_json_or_throw(text);
  if (!doc.is_array()) throw ParseError("subset must be a JSON array of indices", 0);
  std::vector<std::size_t> out;
  for (const auto& v : doc) out.push_back(json_index(v));
  return out;
}

}  // namespace dmb
