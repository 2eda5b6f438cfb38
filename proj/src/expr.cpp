#include "houghton/expr.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <set>

namespace houghton {

ParseError::ParseError(std::size_t offset, const std::string& message)
    : std::runtime_error("offset " + std::to_string(offset) + ": " + message),
      offset_(offset),
      detail_(message) {}

bool Expr::uses_shift() const {
  for (const auto& node : nodes_)
    if (node.kind == Kind::Shift) return true;
  return false;
}

namespace {

constexpr Index kMaxLiteral = 1'000'000'000;
constexpr Index kMaxExponent = 100'000;
constexpr int kMaxNesting = 200;

Expr::Node make(Expr::Kind kind, std::size_t offset) {
  Expr::Node node;
  node.kind = kind;
  node.offset = offset;
  return node;
}

class Parser {
 public:
  Parser(std::string_view text, int n) : text_(text), n_(n) {}

  std::vector<Expr::Node> nodes;

  std::size_t parse_all() {
    const std::size_t lhs = product();
    skip_ws();
    if (peek() == ';') {
      const std::size_t at = pos_++;
      skip_ws();
      const std::size_t rays_at = pos_;
      const std::size_t rhs = product();
      if (nodes[rhs].kind != Expr::Kind::Rays) fail_at(rays_at, "expected a ray permutation after ';'");
      Expr::Node node = make(Expr::Kind::Product, at);
      node.children = {lhs, rhs};
      skip_ws();
      if (!at_end()) fail("unexpected input after expression");
      return push(std::move(node));
    }
    if (!at_end()) fail(peek() == ']' ? "unmatched ']'" : "unexpected character");
    return lhs;
  }

 private:
  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
  int depth_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    throw ParseError(at, msg);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  std::size_t push(Expr::Node node) {
    nodes.push_back(std::move(node));
    return nodes.size() - 1;
  }

  Index integer(bool allow_sign) {
    skip_ws();
    const std::size_t start = pos_;
    bool neg = false;
    if (allow_sign && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail_at(digits, "expected integer");
    Index value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_ || value > kMaxLiteral)
      fail_at(start, "integer out of range");
    return neg ? -value : value;
  }

  int ray_index(Index v, std::size_t at) const {
    if (v < 1 || v > n_) fail_at(at, "ray index " + std::to_string(v) + " outside 1.." + std::to_string(n_));
    return static_cast<int>(v);
  }

  Point point() {
    skip_ws();
    const std::size_t at = pos_;
    const Index r = integer(false);
    if (peek() != '.') fail("expected '.' in point");
    ++pos_;
    const std::size_t pos_at = pos_;
    const Index p = integer(false);
    if (p < 1) fail_at(pos_at, "positions start at 1");
    return {ray_index(r, at), p};
  }

  bool starts_factor() {
    skip_ws();
    const char c = peek();
    return c == 'g' || c == 'a' || c == 'i' || c == 's' || c == 'r' || c == 'T' || c == '(' ||
           c == '[';
  }

  std::size_t product() {
    skip_ws();
    const std::size_t at = pos_;
    if (!starts_factor()) fail(at_end() ? "unexpected end of input, expected a factor" : "expected a factor");
    std::vector<std::size_t> items;
    while (starts_factor()) items.push_back(factor());
    if (items.size() == 1) return items.front();
    Expr::Node node = make(Expr::Kind::Product, at);
    node.children = std::move(items);
    return push(std::move(node));
  }

  std::size_t factor() {
    std::size_t base = primary();
    while (true) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('\'')) {
        Expr::Node node = make(Expr::Kind::Power, at);
        node.exponent = -1;
        node.children = {base};
        base = push(std::move(node));
      } else if (accept('^')) {
        Expr::Node node = make(Expr::Kind::Power, at);
        node.exponent = integer(true);
        if (node.exponent > kMaxExponent || node.exponent < -kMaxExponent)
          fail_at(at, "exponent too large");
        node.children = {base};
        base = push(std::move(node));
      } else {
        return base;
      }
    }
  }

  std::string word() {
    const std::size_t start = pos_;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::vector<Index> int_list() {
    std::vector<Index> out;
    expect('[');
    out.push_back(integer(true));
    while (accept(',')) out.push_back(integer(true));
    expect(']');
    return out;
  }

  std::size_t primary() {
    skip_ws();
    const std::size_t at = pos_;
    const char c = peek();
    if (c == '[') {
      if (++depth_ > kMaxNesting) fail("brackets nested too deeply");
      ++pos_;
      const std::size_t inner = product();
      expect(']');
      --depth_;
      return inner;
    }
    if (c == '(') return cycle_literal();

    const std::string w = word();
    if (w == "g") {
      const Index i = integer(false);
      if (i < 1 || i > n_ - 1)
        fail_at(at, "generator g" + std::to_string(i) + " needs 1 <= i <= " + std::to_string(n_ - 1));
      Expr::Node node = make(Expr::Kind::Gen, at);
      node.index = static_cast<int>(i);
      return push(std::move(node));
    }
    if (w == "a") return push(make(Expr::Kind::Alpha, at));
    if (w == "id") return push(make(Expr::Kind::Identity, at));
    if (w == "sh") {
      if (n_ != 1) fail_at(at, "'sh' exists only for one ray");
      return push(make(Expr::Kind::Shift, at));
    }
    if (w == "s") {
      if (pos_ + 2 > text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))
        fail("expected two ray digits after 's'");
      const int i = ray_index(text_[pos_] - '0', pos_);
      const int j = ray_index(text_[pos_ + 1] - '0', pos_ + 1);
      if (i == j) fail_at(at, "ray transposition needs two distinct rays");
      pos_ += 2;
      Expr::Node node = make(Expr::Kind::Rays, at);
      node.rays = RayPerm::transposition(n_, i, j).images();
      return push(std::move(node));
    }
    if (w == "rho") {
      const std::size_t list_at = pos_;
      const auto vals = int_list();
      if (vals.size() != static_cast<std::size_t>(n_))
        fail_at(list_at, "ray permutation needs " + std::to_string(n_) + " entries");
      std::vector<int> images;
      for (Index v : vals) images.push_back(ray_index(v, list_at));
      if (std::set<int>(images.begin(), images.end()).size() != images.size())
        fail_at(list_at, "ray permutation repeats a ray");
      Expr::Node node = make(Expr::Kind::Rays, at);
      node.rays = std::move(images);
      return push(std::move(node));
    }
    if (w == "T") return literal(at);
    if (w.empty()) fail("expected a factor");
    fail_at(at, "unknown symbol '" + w + "'");
  }

  std::size_t cycle_literal() {
    const std::size_t at = pos_;
    expect('(');
    Expr::Node node = make(Expr::Kind::Cycle, at);
    std::set<Point> seen;
    do {
      skip_ws();
      const std::size_t pt_at = pos_;
      const Point p = point();
      if (!seen.insert(p).second) fail_at(pt_at, "point repeated in cycle");
      node.points.push_back(p);
      skip_ws();
    } while (peek() != ')' && !at_end());
    expect(')');
    return push(std::move(node));
  }

  std::size_t literal(std::size_t at) {
    const std::size_t list_at = pos_;
    Expr::Node node = make(Expr::Kind::Literal, at);
    node.translation = int_list();
    if (node.translation.size() != static_cast<std::size_t>(n_))
      fail_at(list_at, "translation needs " + std::to_string(n_) + " entries");
    expect('{');
    if (!accept('}')) {
      do {
        const Point src = point();
        skip_ws();
        if (text_.substr(pos_, 2) != "->") fail("expected '->'");
        pos_ += 2;
        node.pairs.push_back({src, point()});
      } while (accept(','));
      expect('}');
    }
    try {
      (void)HoughtonElem::from_parts(node.translation, node.pairs);
    } catch (const std::invalid_argument& e) {
      fail_at(at, std::string("literal is not an eventual translation: ") + e.what());
    }
    return push(std::move(node));
  }
};

template <class G, class Atom>
G evaluate(const Expr& e, std::size_t idx, const G& unit, const Atom& atom) {
  const auto& node = e.nodes()[idx];
  switch (node.kind) {
    case Expr::Kind::Product: {
      G acc = unit;
      for (std::size_t c : node.children) acc = acc * evaluate(e, c, unit, atom);
      return acc;
    }
    case Expr::Kind::Power: {
      G base = evaluate(e, node.children.front(), unit, atom);
      Index k = node.exponent;
      if (k < 0) {
        base = inverse(base);
        k = -k;
      }
      G acc = unit;
      while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
      }
      return acc;
    }
    default:
      return atom(node);
  }
}

HoughtonElem literal_value(const Expr::Node& node) {
  return HoughtonElem::from_parts(node.translation, node.pairs);
}

}  // namespace

Expr parse_expr(std::string_view text, int n) {
  if (n < 1) throw std::invalid_argument("need at least one ray");
  Parser p(text, n);
  Expr e;
  e.n_ = n;
  e.root_ = p.parse_all();
  e.nodes_ = std::move(p.nodes);
  return e;
}

NormElem eval_norm(const Expr& e) {
  const int n = e.n();
  auto atom = [n](const Expr::Node& node) -> NormElem {
    switch (node.kind) {
      case Expr::Kind::Gen: return NormElem(gen_g(n, node.index));
      case Expr::Kind::Alpha: return NormElem(gen_alpha(n));
      case Expr::Kind::Identity: return NormElem(n);
      case Expr::Kind::Cycle:
        return NormElem(HoughtonElem::from_finite_perm(FinitePerm::cycle(n, node.points)));
      case Expr::Kind::Rays: return NormElem(RayPerm(node.rays));
      case Expr::Kind::Literal: return NormElem(literal_value(node));
      case Expr::Kind::Shift:
        throw EvalError("'sh' is not an element of the normalizer of H_1");
      default: throw std::logic_error("unexpected node");
    }
  };
  return evaluate(e, e.root(), NormElem(n), atom);
}

HoughtonElem eval_elem(const Expr& e) {
  const NormElem w = eval_norm(e);
  if (!w.sigma().is_identity())
    throw EvalError("expression has ray part " + to_string(w.sigma()) + "; an element of H_n is required");
  return w.g();
}

ShiftElem eval_shift(const Expr& e) {
  if (e.n() != 1) throw EvalError("shift expressions need exactly one ray");
  auto atom = [](const Expr::Node& node) -> ShiftElem {
    switch (node.kind) {
      case Expr::Kind::Alpha: return {as_finite_perm(gen_alpha(1)), 0};
      case Expr::Kind::Identity: return {};
      case Expr::Kind::Shift: return ShiftElem::pure_shift();
      case Expr::Kind::Cycle: return {FinitePerm::cycle(1, node.points), 0};
      case Expr::Kind::Rays: return {};
      case Expr::Kind::Literal: return {as_finite_perm(literal_value(node)), 0};
      default: throw std::logic_error("unexpected node");
    }
  };
  return evaluate(e, e.root(), ShiftElem(), atom);
}

}  // namespace houghton
