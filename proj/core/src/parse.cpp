#include "bingtau/parse.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "bingtau/errors.hpp"

namespace bingtau {

namespace {

constexpr int kMaxNesting = 512;

bool name_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
         (c >= '0' && c <= '9') || c == '_';
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  // Peek past whitespace *without* consuming (raw next significant char).
  std::size_t pos() {
    skip_ws();
    return pos_;
  }

  bool try_eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!try_eat(c)) fail(std::string("expected '") + c + "' " + what, pos());
  }

  [[noreturn]] void fail(const std::string& what, std::size_t at) {
    throw ParseError(what, at);
  }

  std::string lex_name() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a name", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t lex_twist() {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t end = pos_;
    if (end < text_.size() && (text_[end] == '-' || text_[end] == '+')) ++end;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end])))
      ++end;
    std::int64_t value = 0;
    const auto* first = text_.data() + start;
    const auto* last = text_.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || last == first)
      fail("expected an integer", start);
    pos_ = end;
    if (value < kMinTwist || value > kMaxTwist) fail("twist out of range", start);
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : cur_(text) {}

  KnotExpr run() {
    KnotExpr e = expr();
    if (!cur_.at_end()) cur_.fail("unexpected trailing input", cur_.pos());
    return e;
  }

 private:
  Cursor cur_;
  int depth_ = 0;

  struct DepthGuard {
    explicit DepthGuard(ExprParser& p) : p(p) {
      if (++p.depth_ > kMaxNesting) p.cur_.fail("expression nested too deeply", p.cur_.pos());
    }
    ~DepthGuard() { --p.depth_; }
    ExprParser& p;
  };

  KnotExpr expr() {
    DepthGuard guard(*this);
    std::vector<KnotExpr> atoms;
    atoms.push_back(atom());
    while (cur_.try_eat('#')) atoms.push_back(atom());
    KnotExpr acc = std::move(atoms.back());
    for (std::size_t i = atoms.size() - 1; i-- > 0;)
      acc = connected_sum(std::move(atoms[i]), std::move(acc));
    return acc;
  }

  KnotExpr atom() {
    const std::size_t at = cur_.pos();
    const char c = cur_.peek();
    if (c == '-') {
      cur_.try_eat('-');
      cur_.expect('(', "after '-'");
      KnotExpr e = expr();
      cur_.expect(')', "to close '-('");
      return negate(std::move(e));
    }
    if (!name_char(c)) cur_.fail("expected an expression", at);

    const std::string name = cur_.lex_name();
    if (name == "m" && cur_.peek() == '(') {
      cur_.try_eat('(');
      KnotExpr e = expr();
      cur_.expect(')', "to close 'm('");
      return mirror(std::move(e));
    }
    if (name == "r" && cur_.peek() == '(') {
      cur_.try_eat('(');
      KnotExpr e = expr();
      cur_.expect(')', "to close 'r('");
      return reverse(std::move(e));
    }
    if (name == "D" && cur_.peek() == '[') {
      cur_.try_eat('[');
      KnotExpr j = expr();
      cur_.expect(',', "before the companion twist");
      const std::int64_t s = cur_.lex_twist();
      cur_.expect(']', "to close 'D['");
      cur_.expect('(', "before the doubling argument");
      KnotExpr k = expr();
      std::int64_t t = 0;
      if (cur_.try_eat(',')) t = cur_.lex_twist();
      cur_.expect(')', "to close the doubling argument");
      return doubling(std::move(j), s, std::move(k), t);
    }
    if (name == "Wh" && (cur_.peek() == '+' || cur_.peek() == '-')) {
      const ClaspSign sign =
          cur_.try_eat('+') ? ClaspSign::Positive
                            : (cur_.try_eat('-'), ClaspSign::Negative);
      cur_.expect('(', "after the Whitehead sign");
      KnotExpr k = expr();
      std::int64_t t = 0;
      if (cur_.try_eat(',')) t = cur_.lex_twist();
      cur_.expect(')', "to close the Whitehead double");
      return whitehead(sign, std::move(k), t);
    }
    return make_base(name);
  }
};

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : cur_(text) {}

  TreeShape run() {
    TreeShape t = tree();
    if (!cur_.at_end()) cur_.fail("unexpected trailing input", cur_.pos());
    return t;
  }

 private:
  Cursor cur_;
  int depth_ = 0;

  TreeShape tree() {
    if (++depth_ > kMaxNesting) cur_.fail("tree nested too deeply", cur_.pos());
    TreeShape result = TreeShape::leaf();
    if (cur_.try_eat('*')) {
      // leaf
    } else if (cur_.try_eat('(')) {
      TreeShape l = tree();
      cur_.expect(',', "between subtrees");
      TreeShape r = tree();
      cur_.expect(')', "to close the subtree");
      result = TreeShape::node(std::move(l), std::move(r));
    } else {
      cur_.fail("expected '*' or '('", cur_.pos());
    }
    --depth_;
    return result;
  }
};

}  // namespace

KnotExpr parse_expr(std::string_view text) { return ExprParser(text).run(); }

TreeShape parse_tree(std::string_view text) { return TreeParser(text).run(); }

}  // namespace bingtau
