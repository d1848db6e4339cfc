#include "mdv/expr.hpp"

#include <cctype>
#include <map>

#include "mdv/errors.hpp"

namespace mdv {

namespace {

// One recursive-descent core for both algebras; T needs +, -, *,
// scaling by Rat, and the symbol/one values supplied by the caller.
template <typename T>
class Parser {
 public:
  Parser(const std::string& src, std::map<std::string, T> symbols, T one)
      : src_(src), symbols_(std::move(symbols)), one_(std::move(one)) {}

  T parse() {
    T r = expr();
    skip_ws();
    if (pos_ != src_.size())
      throw UsageError("unexpected input at position " + std::to_string(pos_));
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  T expr() {
    T r = term();
    for (;;) {
      if (eat('+')) {
        r = r + term();
      } else if (eat('-')) {
        r = r - term();
      } else {
        return r;
      }
    }
  }

  T term() {
    T r = factor();
    while (eat('*')) r = r * factor();
    return r;
  }

  T factor() {
    T base = primary();
    if (!eat('^')) return base;
    long k = integer();
    if (k < 0) throw UsageError("negative exponent");
    T r = one_;
    for (long i = 0; i < k; ++i) r = r * base;
    return r;
  }

  T primary() {
    if (eat('(')) {
      T r = expr();
      if (!eat(')')) throw UsageError("missing ')'");
      return r;
    }
    if (eat('-')) return factor() * Rat(-1);
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = integer();
      if (eat('/')) {
        long den = integer();
        return one_ * rat(num, den);
      }
      return one_ * Rat(num);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < src_.size() &&
             std::isalnum(static_cast<unsigned char>(src_[pos_])))
        name += src_[pos_++];
      auto it = symbols_.find(name);
      if (it == symbols_.end()) throw UsageError("unknown name '" + name + "'");
      return it->second;
    }
    throw UsageError("expected a value at position " + std::to_string(pos_));
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    if (pos_ == start) throw UsageError("expected an integer");
    return std::stol(src_.substr(start, pos_ - start));
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  std::map<std::string, T> symbols_;
  T one_;
};

}  // namespace

PBWOp parse_pbw(const std::string& s) {
  std::map<std::string, PBWOp> symbols{
      {"e", PBWOp::e()}, {"h", PBWOp::h()}, {"f", PBWOp::f()}};
  return Parser<PBWOp>(s, std::move(symbols), PBWOp::one()).parse();
}

WeylOp parse_weyl(const std::string& s, Side side) {
  std::map<std::string, WeylOp> symbols;
  if (side == Side::line) {
    symbols.emplace("x", WeylOp::x_gen(side));
    symbols.emplace("D", WeylOp::d_gen(side));
  } else {
    symbols.emplace("xh", WeylOp::x_gen(side));
    symbols.emplace("Dh", WeylOp::d_gen(side));
  }
  return Parser<WeylOp>(s, std::move(symbols), WeylOp::one(side)).parse();
}

}  // namespace mdv
