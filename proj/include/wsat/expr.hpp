#pragma once

// A small expression language over the exterior algebra, for exploration:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*          at most one non-scalar factor
//   factor := '-' factor | INT | '(' expr ')'
//           | 'e' SET | 'f' SET             standard / seeded orthonormal basis
//           | 'wedge' '(' expr ',' expr ')'
//           | 'lip' '(' expr ',' expr ')'    left interior product g ⌞ f
//           | 'inner' '(' expr ',' expr ')'  scalar
//   SET    := '{' [INT (',' INT)*] '}' | DIGITS   (e.g. e{0,1} or e01)

#include <cctype>
#include <optional>
#include <string>

#include <json.hpp>

#include "wsat/exterior.hpp"

namespace wsat {

template <typename S>
class ExprEvaluator {
  using T = ScalarTraits<S>;

 public:
  struct Value {
    Multivector<S> mv;
    bool scalar = false;
  };

  ExprEvaluator(int ground, std::optional<BasisChange<S>> basis = std::nullopt) : ground_(ground), basis_(std::move(basis)) {
    if (basis_ && basis_->size() != ground_) throw InputError("basis size differs from the ground set");
  }

  Value eval(const std::string& text) {
    src_ = text;
    pos_ = 0;
    Value v = expr();
    skip();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return v;
  }

  static nlohmann::json to_json(const Value& v) {
    if (v.scalar) return {{"scalar", T::to_string(v.mv.coeff(0))}};
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [set, c] : v.mv.terms()) terms.push_back({{"set", vertices_of(set)}, {"coeff", T::to_string(c)}});
    return {{"ground", v.mv.ground()}, {"terms", terms}};
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw InputError("expression: " + msg + " at offset " + std::to_string(pos_)); }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  Value scalar_value(const S& c) const { return {Multivector<S>::basis(ground_, 0, c), true}; }

  Value expr() {
    Value acc = term();
    while (true) {
      if (eat('+')) acc = add(acc, term(), false);
      else if (eat('-')) acc = add(acc, term(), true);
      else return acc;
    }
  }

  Value add(const Value& a, const Value& b, bool minus) {
    if (a.scalar != b.scalar) fail("cannot add a scalar and a multivector");
    return {minus ? a.mv - b.mv : a.mv + b.mv, a.scalar};
  }

  Value term() {
    Value acc = factor();
    while (eat('*')) {
      Value b = factor();
      if (acc.scalar) acc = {b.mv.scaled(acc.mv.coeff(0)), b.scalar};
      else if (b.scalar) acc = {acc.mv.scaled(b.mv.coeff(0)), false};
      else fail("use wedge(x, y) to multiply two multivectors");
    }
    return acc;
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stol(src_.substr(start, pos_ - start));
  }

  Mask set() {
    Mask m = 0;
    auto add_vertex = [&](long v) {
      if (v < 0 || v >= ground_) fail("vertex " + std::to_string(v) + " outside the ground set");
      if (m & bit(static_cast<Vertex>(v))) fail("repeated vertex");
      m |= bit(static_cast<Vertex>(v));
    };
    if (eat('{')) {
      if (eat('}')) return 0;
      do add_vertex(integer());
      while (eat(','));
      expect('}');
      return m;
    }
    if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) add_vertex(src_[pos_++] - '0');
      return m;
    }
    fail("expected a vertex set");
  }

  std::string word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return src_.substr(start, pos_ - start);
  }

  std::pair<Value, Value> args() {
    expect('(');
    Value a = expr();
    expect(',');
    Value b = expr();
    expect(')');
    return {a, b};
  }

  Value factor() {
    skip();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (c == '-') {
      ++pos_;
      Value v = factor();
      return {-v.mv, v.scalar};
    }
    if (c == '(') {
      ++pos_;
      Value v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return scalar_value(T::from_int(integer()));
    const std::string w = word();
    if (w == "e") return {Multivector<S>::basis(ground_, set()), false};
    if (w == "f") {
      if (!basis_) fail("f-basis elements need a basis seed");
      return {basis_->expand_f(set()), false};
    }
    if (w == "wedge" || w == "lip" || w == "inner") {
      auto [a, b] = args();
      if (a.scalar || b.scalar) fail(w + " takes multivectors");
      if (w == "wedge") return {wedge(a.mv, b.mv), false};
      if (w == "lip") return {left_interior(a.mv, b.mv), false};
      return scalar_value(inner(a.mv, b.mv));
    }
    fail("unknown name '" + w + "'");
  }

  int ground_;
  std::optional<BasisChange<S>> basis_;
  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace wsat
