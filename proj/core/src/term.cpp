#include "probid/term.hpp"

#include <cctype>
#include <variant>

#include "probid/error.hpp"

namespace probid {

namespace {

constexpr unsigned kMaxExponent = 4096;

enum class Op { Add, Mul, Pow };

}  // namespace

struct Term::Node {
  struct Constant {
    BigInt value;
  };
  struct Variable {};
  struct Binary {
    Op op;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };
  std::variant<Constant, Variable, Binary> body;
};

namespace {

using NodePtr = std::shared_ptr<const Term::Node>;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr root = sum();
    skip_blanks();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return root;
  }

 private:
  // sum := product ('+' product)*
  NodePtr sum() {
    NodePtr lhs = product();
    while (accept('+')) lhs = binary(Op::Add, lhs, product());
    return lhs;
  }

  // product := power ('*' power)*
  NodePtr product() {
    NodePtr lhs = power();
    while (accept('*')) lhs = binary(Op::Mul, lhs, power());
    return lhs;
  }

  // power := primary ('^' power)?
  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return binary(Op::Pow, base, power());
    return base;
  }

  NodePtr primary() {
    skip_blanks();
    if (pos_ >= text_.size()) fail("unexpected end of term");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = sum();
      if (!accept(')')) fail("missing ')'");
      return inner;
    }
    if (c == 'j') {
      ++pos_;
      return std::make_shared<Term::Node>(Term::Node{Term::Node::Variable{}});
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + (text_[pos_] - '0');
        ++pos_;
      }
      return std::make_shared<Term::Node>(Term::Node{Term::Node::Constant{value}});
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  static NodePtr binary(Op op, NodePtr lhs, NodePtr rhs) {
    return std::make_shared<Term::Node>(
        Term::Node{Term::Node::Binary{op, std::move(lhs), std::move(rhs)}});
  }

  bool accept(char c) {
    skip_blanks();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_blanks() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::BadTerm,
                "term '" + std::string(text_) + "' at " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

BigInt evaluate(const Term::Node& node, const BigInt& j) {
  struct Visitor {
    const BigInt& j;
    BigInt operator()(const Term::Node::Constant& c) const { return c.value; }
    BigInt operator()(const Term::Node::Variable&) const { return j; }
    BigInt operator()(const Term::Node::Binary& b) const {
      const BigInt lhs = evaluate(*b.lhs, j);
      const BigInt rhs = evaluate(*b.rhs, j);
      switch (b.op) {
        case Op::Add:
          return lhs + rhs;
        case Op::Mul:
          return lhs * rhs;
        case Op::Pow:
          if (rhs > kMaxExponent) {
            throw Error(ErrorKind::BadTerm, "exponent " + rhs.str() + " exceeds " +
                                                std::to_string(kMaxExponent));
          }
          return boost::multiprecision::pow(lhs, rhs.convert_to<unsigned>());
      }
      return 0;
    }
  };
  return std::visit(Visitor{j}, node.body);
}

}  // namespace

Term Term::parse(std::string_view text) {
  return Term(Parser(text).parse(), std::string(text));
}

BigInt Term::eval(const BigInt& j) const { return evaluate(*root_, j); }

}  // namespace probid
