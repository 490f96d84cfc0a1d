#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ladfn/arith_function.hpp"

namespace ladfn {

/// AST of the function-expression language.
///
///   expr  := name | dp | block | call ;
///   call  := ("conv"|"mul"|"compose"|"ladd") "(" expr "," expr ")" ;
///   dp    := "Dp" "[" integer "]" ;
///   block := ("cadd"|"cmul") "{" [pairs] [";" "default" defval] "}" ;
///   pairs := pair {"," pair} ;   pair := integer ":" ratio ;
///   ratio := integer ["/" integer] ;   defval := ratio | "p" | "1/p" ;
///   name  := "D"|"N"|"E"|"ld"|"eps"|"tau" ;
struct FnExpr {
  enum class BlockKind { cadd, cmul };
  enum class CallKind { conv, mul, compose, ladd };

  struct Name {
    std::string id;
    bool operator==(const Name&) const = default;
  };
  struct Dp {
    Int p;
    bool operator==(const Dp&) const = default;
  };
  struct Block {
    BlockKind kind;
    std::map<Int, Rational> assignments;
    std::optional<PrimeAssignment::DefaultRule> default_rule;
    bool operator==(const Block&) const = default;
  };
  struct Call {
    CallKind kind;
    std::vector<FnExpr> args;
    bool operator==(const Call&) const = default;
  };

  std::variant<Name, Dp, Block, Call> node;
  bool operator==(const FnExpr&) const = default;
};

namespace detail {

struct Token {
  enum class Kind {
    ident, integer, lparen, rparen, lbrace, rbrace, lbracket, rbracket,
    comma, semicolon, colon, slash, end, bad,
  };
  Kind kind;
  std::string text;     // the lexeme; empty at end of input
  std::size_t position; // byte offset of the lexeme's first byte
};

class Lexer {
 public:
  explicit Lexer(std::string_view input) : input_(input) {}

  Token next() {
    while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_])))
      ++pos_;
    std::size_t start = pos_;
    if (pos_ >= input_.size()) return {Token::Kind::end, "", start};

    char c = input_[pos_];
    switch (c) {
      case '(': ++pos_; return {Token::Kind::lparen, "(", start};
      case ')': ++pos_; return {Token::Kind::rparen, ")", start};
      case '{': ++pos_; return {Token::Kind::lbrace, "{", start};
      case '}': ++pos_; return {Token::Kind::rbrace, "}", start};
      case '[': ++pos_; return {Token::Kind::lbracket, "[", start};
      case ']': ++pos_; return {Token::Kind::rbracket, "]", start};
      case ',': ++pos_; return {Token::Kind::comma, ",", start};
      case ';': ++pos_; return {Token::Kind::semicolon, ";", start};
      case ':': ++pos_; return {Token::Kind::colon, ":", start};
      case '/': ++pos_; return {Token::Kind::slash, "/", start};
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < input_.size() &&
             std::isalpha(static_cast<unsigned char>(input_[pos_])))
        ++pos_;
      return {Token::Kind::ident, std::string(input_.substr(start, pos_ - start)), start};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && pos_ + 1 < input_.size() &&
         std::isdigit(static_cast<unsigned char>(input_[pos_ + 1])))) {
      ++pos_;
      while (pos_ < input_.size() &&
             std::isdigit(static_cast<unsigned char>(input_[pos_])))
        ++pos_;
      return {Token::Kind::integer, std::string(input_.substr(start, pos_ - start)), start};
    }
    ++pos_;
    return {Token::Kind::bad, std::string(1, c), start};
  }

 private:
  std::string_view input_;
  std::size_t pos_ = 0;
};

class FnParser {
 public:
  explicit FnParser(std::string_view input) : lexer_(input), cur_(lexer_.next()) {}

  FnExpr parse_all() {
    FnExpr e = parse_expr();
    if (cur_.kind != Token::Kind::end) fail("end of input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    throw parse_error(cur_.position, expected, cur_.text);
  }
  [[noreturn]] void fail_at(const Token& t, const std::string& expected) const {
    throw parse_error(t.position, expected, t.text);
  }

  Token take() {
    Token t = cur_;
    cur_ = lexer_.next();
    return t;
  }

  Token expect(Token::Kind kind, const std::string& what) {
    if (cur_.kind != kind) fail(what);
    return take();
  }

  FnExpr parse_expr() {
    if (cur_.kind != Token::Kind::ident) fail("function expression");
    const std::string& id = cur_.text;
    if (id == "D" || id == "N" || id == "E" || id == "ld" || id == "eps" ||
        id == "tau") {
      return FnExpr{FnExpr::Name{take().text}};
    }
    if (id == "Dp") return parse_dp();
    if (id == "cadd") return parse_block(FnExpr::BlockKind::cadd);
    if (id == "cmul") return parse_block(FnExpr::BlockKind::cmul);
    if (id == "conv") return parse_call(FnExpr::CallKind::conv);
    if (id == "mul") return parse_call(FnExpr::CallKind::mul);
    if (id == "compose") return parse_call(FnExpr::CallKind::compose);
    if (id == "ladd") return parse_call(FnExpr::CallKind::ladd);
    fail("function expression");
  }

  FnExpr parse_dp() {
    take();  // Dp
    expect(Token::Kind::lbracket, "'['");
    Token num = expect(Token::Kind::integer, "prime");
    Int p(num.text);
    if (!is_prime(p)) fail_at(num, "prime");
    expect(Token::Kind::rbracket, "']'");
    return FnExpr{FnExpr::Dp{std::move(p)}};
  }

  FnExpr parse_call(FnExpr::CallKind kind) {
    take();  // the combinator name
    expect(Token::Kind::lparen, "'('");
    std::vector<FnExpr> args;
    args.push_back(parse_expr());
    expect(Token::Kind::comma, "','");
    args.push_back(parse_expr());
    expect(Token::Kind::rparen, "')'");
    return FnExpr{FnExpr::Call{kind, std::move(args)}};
  }

  FnExpr parse_block(FnExpr::BlockKind kind) {
    take();  // cadd / cmul
    expect(Token::Kind::lbrace, "'{'");
    FnExpr::Block block{kind, {}, std::nullopt};

    bool saw_pairs = false;
    if (cur_.kind == Token::Kind::integer) {
      saw_pairs = true;
      parse_pair(block);
      while (cur_.kind == Token::Kind::comma) {
        take();
        parse_pair(block);
      }
    }
    if (cur_.kind == Token::Kind::semicolon) {
      take();
      if (!(cur_.kind == Token::Kind::ident && cur_.text == "default"))
        fail("'default'");
    }
    if (cur_.kind == Token::Kind::ident && cur_.text == "default") {
      take();
      block.default_rule = parse_defval();
    } else if (saw_pairs && cur_.kind != Token::Kind::rbrace) {
      fail("',' or ';' or '}'");
    }
    expect(Token::Kind::rbrace, "'}'");
    return FnExpr{std::move(block)};
  }

  void parse_pair(FnExpr::Block& block) {
    Token key = expect(Token::Kind::integer, "prime key");
    Int p(key.text);
    if (!is_prime(p)) fail_at(key, "prime key");
    if (block.assignments.count(p)) fail_at(key, "distinct prime keys");
    expect(Token::Kind::colon, "':'");
    block.assignments.emplace(std::move(p), parse_ratio());
  }

  Rational parse_ratio() {
    Token num = expect(Token::Kind::integer, "rational value");
    Int a(num.text);
    if (cur_.kind != Token::Kind::slash) return Rational(std::move(a));
    take();
    Token den = expect(Token::Kind::integer, "denominator");
    Int b(den.text);
    if (b.is_zero()) fail_at(den, "nonzero denominator");
    return Rational(std::move(a), std::move(b));
  }

  PrimeAssignment::DefaultRule parse_defval() {
    if (cur_.kind == Token::Kind::ident && cur_.text == "p") {
      take();
      return PrimeAssignment::Ident{};
    }
    if (cur_.kind != Token::Kind::integer) fail("default value");
    Token num = take();
    Int a(num.text);
    if (cur_.kind != Token::Kind::slash) return Rational(std::move(a));
    take();
    if (cur_.kind == Token::Kind::ident && cur_.text == "p") {
      if (a != 1) fail("denominator");  // only 1/p names the reciprocal rule
      take();
      return PrimeAssignment::Recip{};
    }
    Token den = expect(Token::Kind::integer, "denominator");
    Int b(den.text);
    if (b.is_zero()) fail_at(den, "nonzero denominator");
    return Rational(std::move(a), std::move(b));
  }

  Lexer lexer_;
  Token cur_;
};

}  // namespace detail

inline FnExpr parse(std::string_view input) {
  return detail::FnParser(input).parse_all();
}

inline std::string print_canonical(const FnExpr& e) {
  struct Visitor {
    std::string operator()(const FnExpr::Name& n) const { return n.id; }
    std::string operator()(const FnExpr::Dp& d) const {
      return "Dp[" + d.p.str() + "]";
    }
    std::string operator()(const FnExpr::Call& c) const {
      static const char* names[] = {"conv", "mul", "compose", "ladd"};
      std::string out = names[static_cast<int>(c.kind)];
      out += '(';
      for (std::size_t i = 0; i < c.args.size(); ++i) {
        if (i) out += ", ";
        out += print_canonical(c.args[i]);
      }
      out += ')';
      return out;
    }
    std::string operator()(const FnExpr::Block& b) const {
      std::string out = b.kind == FnExpr::BlockKind::cadd ? "cadd{" : "cmul{";
      bool first = true;
      for (const auto& [p, v] : b.assignments) {
        if (!first) out += ", ";
        first = false;
        out += p.str() + ": " + v.str();
      }
      if (b.default_rule) {
        if (!first) out += "; ";
        out += "default ";
        struct Rule {
          std::string operator()(const Rational& r) const { return r.str(); }
          std::string operator()(const PrimeAssignment::Ident&) const { return "p"; }
          std::string operator()(const PrimeAssignment::Recip&) const { return "1/p"; }
        };
        out += std::visit(Rule{}, *b.default_rule);
      }
      out += '}';
      return out;
    }
  };
  return std::visit(Visitor{}, e.node);
}

namespace detail {

inline PrimeAssignment block_assignment(const FnExpr::Block& b) {
  PrimeAssignment::DefaultRule rule =
      b.default_rule ? *b.default_rule
                     : PrimeAssignment::DefaultRule(
                           Rational(b.kind == FnExpr::BlockKind::cadd ? 0 : 1));
  return PrimeAssignment(b.assignments, std::move(rule));
}

}  // namespace detail

/// Turns an AST into an evaluatable function.  `ladd(gblock, hblock)` builds
/// the pointwise product g·h of the completely additive function g and the
/// completely multiplicative function h — an L-additive function whose
/// part is h, so that ladd(cadd{default 1/p}, cmul{default p}) is the
/// arithmetic derivative.
inline ArithFunction build(const FnExpr& e) {
  struct Visitor {
    ArithFunction operator()(const FnExpr::Name& n) const {
      if (n.id == "D") return ArithFunction::derivative();
      if (n.id == "N") return ArithFunction::identity();
      if (n.id == "E") return ArithFunction::ones();
      if (n.id == "ld") return ArithFunction::log_deriv();
      if (n.id == "eps") return ArithFunction::unit();
      if (n.id == "tau") return ArithFunction::divisor_count();
      throw build_error("unknown identifier '" + n.id + "'");
    }
    ArithFunction operator()(const FnExpr::Dp& d) const {
      return ArithFunction::partial(d.p);
    }
    ArithFunction operator()(const FnExpr::Block& b) const {
      return b.kind == FnExpr::BlockKind::cadd
                 ? ArithFunction::completely_additive(detail::block_assignment(b))
                 : ArithFunction::completely_multiplicative(detail::block_assignment(b));
    }
    ArithFunction operator()(const FnExpr::Call& c) const {
      if (c.args.size() != 2) throw build_error("combinator expects two arguments");
      if (c.kind == FnExpr::CallKind::ladd) return build_ladd(c);
      ArithFunction u = build(c.args[0]);
      ArithFunction v = build(c.args[1]);
      try {
        switch (c.kind) {
          case FnExpr::CallKind::conv:
            return ArithFunction::convolution(std::move(u), std::move(v));
          case FnExpr::CallKind::mul:
            return pointwise_product(std::move(u), std::move(v));
          default:
            return compose(std::move(u), std::move(v));
        }
      } catch (const domain_error& err) {
        throw build_error(err.what());
      }
    }
    static ArithFunction build_ladd(const FnExpr::Call& c) {
      const auto* gb = std::get_if<FnExpr::Block>(&c.args[0].node);
      if (!gb || gb->kind != FnExpr::BlockKind::cadd)
        throw build_error("ladd: first argument must be a cadd block");
      const auto* hb = std::get_if<FnExpr::Block>(&c.args[1].node);
      if (!hb || hb->kind != FnExpr::BlockKind::cmul)
        throw build_error("ladd: second argument must be a cmul block");
      return pointwise_product(
          ArithFunction::completely_additive(detail::block_assignment(*gb)),
          ArithFunction::completely_multiplicative(detail::block_assignment(*hb)));
    }
  };
  return std::visit(Visitor{}, e.node);
}

}  // namespace ladfn
