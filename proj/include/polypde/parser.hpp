#ifndef POLYPDE_PARSER_HPP
#define POLYPDE_PARSER_HPP

// Expression parser for polynomials, differential operators, and points.
//
//   expr    := term (("+" | "-") term)*
//   term    := factor (("*" | "/")? factor)*        juxtaposition multiplies
//   factor  := ("+" | "-") factor | power
//   power   := primary ("^" posint)*
//   primary := integer | "i" | name | "(" expr ")"
//
// Precedence is ^ over unary sign over "*"/"/" over "+"/"-".  "/" accepts
// only a non-zero constant divisor.  Names are matched longest-first against
// the context's variable list, so juxtaposed variables need no separator
// ("2xy" is 2*x*y when the variables are x and y).  "i" is always the
// imaginary unit and cannot be a variable name.
//
// In operator mode the names are "D" + variable ("Dx", "Dy", ...) for the
// partial derivatives and "I" for the identity; parse_operator returns the
// symbol of the parsed operator (each D_j replaced by i*x_j).

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "multi_index.hpp"
#include "poly.hpp"
#include "scalar.hpp"

namespace polypde {

struct parse_context {
  enum class mode_t { symbol, operator_mode };

  std::vector<std::string> variables;
  mode_t mode = mode_t::symbol;

  parse_context(std::vector<std::string> vars, mode_t m = mode_t::symbol)
      : variables(std::move(vars)), mode(m) {
    if (variables.empty()) throw empty_list("parse_context variables");
    for (const std::string& v : variables) {
      if (v.empty() || v == "i" || (mode == mode_t::operator_mode && v == "I"))
        throw error("invalid variable name '" + v + "'");
      if (!std::isalpha(static_cast<unsigned char>(v.front())))
        throw error("variable name must start with a letter: '" + v + "'");
      for (char c : v)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
          throw error("invalid character in variable name '" + v + "'");
      if (std::count(variables.begin(), variables.end(), v) != 1)
        throw error("duplicate variable name '" + v + "'");
    }
  }
};

namespace detail {

struct token {
  enum class kind_t {
    integer,
    imag_unit,
    name,      // index into the variable list
    identity,  // "I" in operator mode
    plus,
    minus,
    star,
    slash,
    caret,
    lparen,
    rparen,
    end
  };
  kind_t kind;
  std::size_t pos;
  big_int value;   // integer
  std::size_t var; // name
};

class lexer {
 public:
  lexer(std::string_view text, const parse_context& ctx)
      : text_(text), ctx_(ctx) {
    // Candidate names, longest first so that prefixes never shadow.
    for (std::size_t v = 0; v < ctx.variables.size(); ++v) {
      std::string n = ctx.variables[v];
      if (ctx.mode == parse_context::mode_t::operator_mode) n = "D" + n;
      names_.push_back({std::move(n), v});
    }
    std::sort(names_.begin(), names_.end(), [](const auto& a, const auto& b) {
      return a.first.size() > b.first.size();
    });
  }

  std::vector<token> run() {
    std::vector<token> out;
    std::size_t p = 0;
    while (true) {
      while (p < text_.size() &&
             std::isspace(static_cast<unsigned char>(text_[p])))
        ++p;
      if (p == text_.size()) {
        out.push_back({token::kind_t::end, p, 0, 0});
        return out;
      }
      char c = text_[p];
      switch (c) {
        case '+': out.push_back({token::kind_t::plus, p++, 0, 0}); continue;
        case '-': out.push_back({token::kind_t::minus, p++, 0, 0}); continue;
        case '*': out.push_back({token::kind_t::star, p++, 0, 0}); continue;
        case '/': out.push_back({token::kind_t::slash, p++, 0, 0}); continue;
        case '^': out.push_back({token::kind_t::caret, p++, 0, 0}); continue;
        case '(': out.push_back({token::kind_t::lparen, p++, 0, 0}); continue;
        case ')': out.push_back({token::kind_t::rparen, p++, 0, 0}); continue;
        default: break;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = p;
        while (p < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[p])))
          ++p;
        out.push_back({token::kind_t::integer, start,
                       big_int(std::string(text_.substr(start, p - start))),
                       0});
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t matched = match_name(p, out);
        if (matched) {
          p += matched;
          continue;
        }
        std::size_t start = p;
        while (p < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[p])) ||
                text_[p] == '_'))
          ++p;
        throw unknown_variable(std::string(text_.substr(start, p - start)),
                               start);
      }
      throw parse_error("unexpected character '" + std::string(1, c) + "'", p);
    }
  }

 private:
  // Emits the longest name, "I" (operator mode), or "i" matching at p;
  // returns the matched length, 0 if none.
  std::size_t match_name(std::size_t p, std::vector<token>& out) const {
    for (const auto& [name, var] : names_) {
      if (text_.compare(p, name.size(), name) == 0) {
        out.push_back({token::kind_t::name, p, 0, var});
        return name.size();
      }
    }
    if (text_[p] == 'i') {
      out.push_back({token::kind_t::imag_unit, p, 0, 0});
      return 1;
    }
    if (ctx_.mode == parse_context::mode_t::operator_mode && text_[p] == 'I') {
      out.push_back({token::kind_t::identity, p, 0, 0});
      return 1;
    }
    return 0;
  }

  std::string_view text_;
  const parse_context& ctx_;
  std::vector<std::pair<std::string, std::size_t>> names_;
};

class poly_parser {
 public:
  poly_parser(std::vector<token> tokens, int dim)
      : tokens_(std::move(tokens)), dim_(dim) {}

  multi_poly run() {
    multi_poly p = expr(0);
    expect(token::kind_t::end, "end of input");
    return p;
  }

 private:
  static constexpr int bp_add = 10;
  static constexpr int bp_mul = 20;
  static constexpr int bp_sign = 30;
  static constexpr int bp_pow = 60;

  const token& peek() const { return tokens_[pos_]; }
  const token& advance() { return tokens_[pos_++]; }
  void expect(token::kind_t k, const std::string& what) {
    if (peek().kind != k)
      throw parse_error("expected " + what, peek().pos);
    ++pos_;
  }

  static bool starts_primary(token::kind_t k) {
    using k_t = token::kind_t;
    return k == k_t::integer || k == k_t::imag_unit || k == k_t::name ||
           k == k_t::identity || k == k_t::lparen;
  }

  multi_poly primary() {
    const token& t = advance();
    switch (t.kind) {
      case token::kind_t::integer:
        return multi_poly::constant(dim_, gaussian_rational(t.value));
      case token::kind_t::imag_unit:
        return multi_poly::constant(dim_, gaussian_rational::i());
      case token::kind_t::identity:
        return multi_poly::constant(dim_, 1);
      case token::kind_t::name:
        return multi_poly::variable(dim_, static_cast<int>(t.var));
      case token::kind_t::lparen: {
        multi_poly p = expr(0);
        expect(token::kind_t::rparen, "')'");
        return p;
      }
      default:
        throw parse_error("expected a value", t.pos);
    }
  }

  int exponent() {
    const token& t = advance();
    if (t.kind != token::kind_t::integer)
      throw parse_error("exponent must be a nonnegative integer", t.pos);
    if (t.value > 1000) throw parse_error("exponent too large", t.pos);
    return static_cast<int>(t.value);
  }

  multi_poly expr(int min_bp) {
    multi_poly lhs(dim_);
    const token& t = peek();
    if (t.kind == token::kind_t::minus || t.kind == token::kind_t::plus) {
      bool neg = t.kind == token::kind_t::minus;
      ++pos_;
      lhs = expr(bp_sign);
      if (neg) lhs = -lhs;
    } else {
      lhs = primary();
    }
    while (true) {
      const token& op = peek();
      using k_t = token::kind_t;
      if (op.kind == k_t::caret && bp_pow >= min_bp) {
        ++pos_;
        lhs = lhs.pow(exponent());
      } else if ((op.kind == k_t::plus || op.kind == k_t::minus) &&
                 bp_add >= min_bp) {
        ++pos_;
        multi_poly rhs = expr(bp_add + 1);
        lhs = op.kind == k_t::plus ? lhs + rhs : lhs - rhs;
      } else if (op.kind == k_t::star && bp_mul >= min_bp) {
        ++pos_;
        lhs = lhs * expr(bp_mul + 1);
      } else if (op.kind == k_t::slash && bp_mul >= min_bp) {
        std::size_t at = op.pos;
        ++pos_;
        multi_poly rhs = expr(bp_mul + 1);
        if (rhs.degree() > 0)
          throw parse_error("division by a non-constant", at);
        if (rhs.is_zero()) throw parse_error("division by zero", at);
        lhs = lhs * rhs.coeff(multi_index::zero(dim_)).inverse();
      } else if (starts_primary(op.kind) && bp_mul >= min_bp) {
        lhs = lhs * expr(bp_mul + 1);
      } else {
        return lhs;
      }
    }
  }

  std::vector<token> tokens_;
  int dim_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline multi_poly parse_poly(std::string_view text, const parse_context& ctx) {
  if (ctx.mode != parse_context::mode_t::symbol)
    throw error("parse_poly needs a symbol-mode context");
  detail::lexer lx(text, ctx);
  return detail::poly_parser(lx.run(), static_cast<int>(ctx.variables.size()))
      .run();
}

// Parses an operator expression and returns its symbol.
inline multi_poly parse_operator(std::string_view text,
                                 const parse_context& ctx) {
  if (ctx.mode != parse_context::mode_t::operator_mode)
    throw error("parse_operator needs an operator-mode context");
  detail::lexer lx(text, ctx);
  multi_poly op =
      detail::poly_parser(lx.run(), static_cast<int>(ctx.variables.size()))
          .run();
  return symbol_from_operator(op);
}

// "(s1, ..., sd)" with each component a scalar literal.
inline point parse_point(std::string_view text, int dim) {
  std::size_t p = 0;
  detail::skip_ws(text, p);
  if (p == text.size() || text[p] != '(')
    throw parse_error("expected '('", p);
  std::size_t close = text.find_last_of(')');
  if (close == std::string_view::npos)
    throw parse_error("expected ')'", text.size());
  for (std::size_t q = close + 1; q < text.size(); ++q)
    if (!std::isspace(static_cast<unsigned char>(text[q])))
      throw parse_error("trailing characters", q);
  std::string_view body = text.substr(p + 1, close - p - 1);
  std::size_t base = p + 1;

  point out;
  std::size_t start = 0;
  for (std::size_t q = 0; q <= body.size(); ++q) {
    if (q != body.size() && body[q] != ',') continue;
    std::string_view piece = body.substr(start, q - start);
    try {
      out.push_back(parse_scalar(piece));
    } catch (const parse_error& e) {
      throw parse_error("bad point component", base + start + e.position);
    }
    start = q + 1;
  }
  if (static_cast<int>(out.size()) != dim)
    throw arity_mismatch("point of arity " + std::to_string(out.size()) +
                         ", expected " + std::to_string(dim));
  return out;
}

}  // namespace polypde

#endif
