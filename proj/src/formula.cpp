#include "vgraph/formula.hpp"

#include <cctype>

#include "vgraph/error.hpp"

namespace vgraph {

std::string_view to_string(Style style) {
  switch (style) {
    case Style::text: return "text";
    case Style::latex: return "latex";
    case Style::machine: return "machine";
  }
  return "?";
}

Style parse_style(std::string_view text) {
  if (text == "text") return Style::text;
  if (text == "latex") return Style::latex;
  if (text == "machine") return Style::machine;
  throw UnsupportedStyle("unsupported style '" + std::string(text) + "' (expected text, latex or machine)");
}

namespace {

std::string join_orders(const std::vector<unsigned>& orders) {
  std::string out;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(orders[i]);
  }
  return out;
}

std::string superscript(unsigned k) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s = std::to_string(k), out;
  for (char c : s) out += digits[c - '0'];
  return out;
}

std::string primes(unsigned k, Style style) {
  if (style == Style::latex) {
    if (k <= 3) return std::string(k, '\'');
    return "^{(" + std::to_string(k) + ")}";
  }
  switch (k) {
    case 0: return "";
    case 1: return "′";
    case 2: return "″";
    case 3: return "‴";
    default: return "⁽" + superscript(k) + "⁾";
  }
}

std::string d_power(unsigned k, Style style) {
  if (k == 1) return "D";
  if (style == Style::latex) return "D^{" + std::to_string(k) + "}";
  return "D" + superscript(k);
}

}  // namespace

std::string Symbol::key() const {
  switch (kind) {
    case Kind::field: return "D" + join_orders(orders) + "f";
    case Kind::inverse_factor: return "Dg";
    case Kind::partial: return expression + "^" + join_orders(orders);
    case Kind::increment: return "d" + name;
  }
  return "?";
}

Expr to_expr(const DerivativeGraph& graph) {
  struct Builder {
    const DerivativeGraph& g;
    Expr operator()(const Tree& t) const {
      Expr e;
      switch (g.regime) {
        case Regime::ode:
          e.head = Symbol{Symbol::Kind::field, "f", {static_cast<unsigned>(t.degree())}, "", ""};
          break;
        case Regime::inverse:
          if (t.is_leaf()) {
            e.head = Symbol{Symbol::Kind::inverse_factor, "g", {1}, "", ""};
          } else {
            e.head = Symbol{Symbol::Kind::field, "f", {static_cast<unsigned>(t.degree())}, "", ""};
            e.post = Symbol{Symbol::Kind::inverse_factor, "g", {1}, "", ""};
          }
          break;
        case Regime::composite: {
          const auto& node = g.skeleton->node(t.colour());
          if (node.variable) {
            e.head = Symbol{Symbol::Kind::increment, node.name, {}, node.expression, ""};
          } else {
            e.head = Symbol{Symbol::Kind::partial, node.colour.name, slot_orders(t, *g.skeleton),
                            node.expression, node.arguments};
          }
          break;
        }
      }
      for (const auto& c : t.children()) e.args.push_back((*this)(c));
      return e;
    }
  };
  validate(graph);
  return Builder{graph}(graph.tree);
}

std::string render_symbol(const Symbol& s, Regime regime, Style style) {
  const bool latex = style == Style::latex;
  switch (s.kind) {
    case Symbol::Kind::field: {
      unsigned k = s.orders.at(0);
      std::string point = (regime == Regime::inverse) ? (latex ? "(g(y))" : "") : "(y)";
      if (style == Style::machine) return "D" + std::to_string(k) + "f";
      return (k == 0 ? std::string() : d_power(k, style)) + "f" + point;
    }
    case Symbol::Kind::inverse_factor:
      if (style == Style::machine) return "Dg";
      return latex ? "Dg(y)" : "Dg";
    case Symbol::Kind::partial: {
      if (style == Style::machine) return s.name + "^" + join_orders(s.orders);
      std::string out = s.name;
      if (s.orders.size() == 1) {
        out += primes(s.orders[0], style);
      } else {
        out += latex ? "^{(" + join_orders(s.orders) + ")}" : "^(" + join_orders(s.orders) + ")";
      }
      return out + "(" + s.arguments + ")";
    }
    case Symbol::Kind::increment:
      return (latex ? "\\mathrm{d}" : "d") + s.name;
  }
  return "?";
}

namespace {

struct Tokens {
  std::string open, close, dot;
};

Tokens tokens(Style style) {
  if (style == Style::latex) return {"\\langle ", "\\rangle", "\\cdot "};
  return {"⟨", "⟩", "·"};
}

bool has_factor_args(const Expr& e) {
  for (const auto& a : e.args)
    if (a.head.kind != Symbol::Kind::increment) return true;
  return false;
}

// Application and inverse regimes: arguments first, then the derivative,
// then the closing Dg.
std::string render_postfix(const Expr& e, Regime regime, Style style) {
  const Tokens tk = tokens(style);
  std::string out;
  if (e.args.size() == 1) {
    out = render_postfix(e.args[0], regime, style) + tk.dot;
  } else if (!e.args.empty()) {
    out = tk.open;
    for (std::size_t i = 0; i < e.args.size(); ++i) {
      if (i) out += ',';
      out += render_postfix(e.args[i], regime, style);
    }
    out += tk.close + tk.dot;
  }
  out += render_symbol(e.head, regime, style);
  if (e.post) out += tk.dot + render_symbol(*e.post, regime, style);
  return out;
}

// Composite regime: the vertex's own derivative, then its differentiated
// arguments; increments are left implicit.
std::string render_prefix(const Expr& e, Style style) {
  const Tokens tk = tokens(style);
  std::string out = render_symbol(e.head, Regime::composite, style);
  for (const auto& a : e.args) {
    if (a.head.kind == Symbol::Kind::increment) continue;
    out += tk.dot;
    if (has_factor_args(a)) {
      out += "(" + render_prefix(a, style) + ")";
    } else {
      out += render_prefix(a, style);
    }
  }
  return out;
}

// Ode and inverse regimes; the closing Dg of an inverse vertex is implicit.
std::string render_machine(const Expr& e, Regime regime) {
  std::string head = render_symbol(e.head, regime, Style::machine);
  if (e.args.empty()) return regime == Regime::ode ? "f" : head;
  std::string out = "(" + head;
  for (const auto& a : e.args) out += " " + render_machine(a, regime);
  return out + ")";
}

std::string render_body(const Expr& e, Regime regime, Style style) {
  if (regime == Regime::composite) return render_prefix(e, style);
  if (regime == Regime::inverse && e.head.kind == Symbol::Kind::inverse_factor)
    return style == Style::latex ? "(Df(g(y)))^{-1}" : "(Df(g(y)))⁻¹";
  return render_postfix(e, regime, style);
}

std::string weight_prefix(const Rational& w, Style style) {
  if (w == 1) return "";
  if (style == Style::latex && w.get_den() != 1)
    return "\\frac{" + w.get_num().get_str() + "}{" + w.get_den().get_str() + "}";
  return w.get_str();
}

std::string machine_term(int sign, const Rational& weight, const Expr& e, Regime regime) {
  return std::string("(term ") + (sign < 0 ? "-" : "+") + " " + weight.get_str() + " " +
         render_machine(e, regime) + ")";
}

std::string machine_expr_for(const DerivativeGraph& g) {
  // Composite leaves carry the colour name so slots stay distinguishable.
  struct Walk {
    const DerivativeGraph& g;
    std::string operator()(const Tree& t) const {
      if (g.regime != Regime::composite) return {};
      const auto& node = g.skeleton->node(t.colour());
      if (node.variable) return "d" + node.colour.name;
      std::string out = "(" + node.colour.name + "^" + join_orders(slot_orders(t, *g.skeleton));
      for (const auto& c : t.children()) out += " " + (*this)(c);
      return out + ")";
    }
  };
  return Walk{g}(g.tree);
}

void require_style(Style style) {
  if (style != Style::text && style != Style::latex && style != Style::machine)
    throw UnsupportedStyle("unsupported style tag " + std::to_string(static_cast<int>(style)));
}

std::string render_term_parts(int sign, const Rational& weight, const Expr& expr,
                              const DerivativeGraph& graph, Style style) {
  require_style(style);
  if (style == Style::machine) {
    if (graph.regime == Regime::composite)
      return std::string("(term ") + (sign < 0 ? "-" : "+") + " " + weight.get_str() + " " +
             machine_expr_for(graph) + ")";
    return machine_term(sign, weight, expr, graph.regime);
  }
  return std::string(sign < 0 ? "-" : "") + weight_prefix(weight, style) +
         render_body(expr, graph.regime, style);
}

}  // namespace

std::string render_term(const WeightedGraph& graph, Style style) {
  return render_term_parts(graph.sign, graph.weight, to_expr(graph.graph), graph.graph, style);
}

Formula make_formula(Regime regime, std::size_t order, const std::vector<WeightedGraph>& graphs) {
  Formula f{regime, order, {}};
  for (const auto& g : graphs) {
    if (g.graph.regime != regime) throw InvalidArgument("graph regime differs from formula regime");
    f.terms.push_back(Term{g.sign, g.weight, to_expr(g.graph), g});
  }
  return f;
}

Formula render_derivative(Regime regime, std::size_t n, std::shared_ptr<const SkeletonPalette> skeleton) {
  return make_formula(regime, n, weigh_all(enumerate(regime, n, std::move(skeleton))));
}

std::string to_string(const Formula& formula, Style style) {
  require_style(style);
  std::string out;
  if (style == Style::machine) {
    out = "(sum";
    for (const auto& t : formula.terms)
      out += " " + render_term_parts(t.sign, t.weight, t.expr, t.source.graph, style);
    return out + ")";
  }
  const std::string minus = style == Style::latex ? " - " : " − ";
  for (std::size_t i = 0; i < formula.terms.size(); ++i) {
    const auto& t = formula.terms[i];
    std::string body = weight_prefix(t.weight, style) + render_body(t.expr, formula.regime, style);
    if (i == 0) {
      // Inverse-regime terms carry signed weights, so the leading sign is explicit.
      if (t.sign < 0) {
        out += "-";
      } else if (formula.regime == Regime::inverse && formula.terms.size() > 1) {
        out += "+";
      }
      out += body;
    } else {
      out += (t.sign < 0 ? minus : std::string(" + ")) + body;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Machine grammar
//
//   term   := "(term" sign weight expr ")"
//   sign   := "+" | "-"
//   expr   := atom | "(" head expr* ")"
//   ode      atom "f", head "D<k>f"
//   inverse  atom "Dg", head "D<k>f"
//   composite atom "d<colour>", head "<colour>^<k1,k2,...>"

namespace {

class MachineParser {
 public:
  MachineParser(std::string_view text, Regime regime, const SkeletonPalette* skeleton)
      : text_(text), regime_(regime), skeleton_(skeleton) {}

  WeightedGraph parse(std::shared_ptr<const SkeletonPalette> owner) {
    expect('(');
    if (atom() != "term") throw ParseError("expected 'term'", pos_);
    std::size_t sign_pos = pos_;
    std::string sign = atom();
    if (sign != "+" && sign != "-") throw ParseError("expected sign '+' or '-'", sign_pos);
    std::size_t weight_pos = pos_;
    Rational weight;
    try {
      weight = Rational(atom());
      weight.canonicalize();
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed weight", weight_pos);
    }
    Tree tree = expr(std::nullopt);
    expect(')');
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing characters after term", pos_);

    WeightedGraph wg = weigh(DerivativeGraph{std::move(tree), regime_, std::move(owner)});
    if (wg.sign != (sign == "-" ? -1 : 1)) throw ParseError("sign does not match the tree", sign_pos);
    if (wg.weight != weight) throw ParseError("weight does not match the tree", weight_pos);
    return wg;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string atom() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) throw ParseError("expected token", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  bool peek_open() {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == '(';
  }

  Colour resolve(const std::optional<Colour>& parent, std::string_view name, std::size_t at) {
    auto c = skeleton_->resolve(parent, name);
    if (!c) throw ParseError("unknown colour '" + std::string(name) + "'", at);
    return *c;
  }

  Tree expr(const std::optional<Colour>& parent) {
    if (!peek_open()) {
      std::size_t at = pos_;
      std::string a = atom();
      switch (regime_) {
        case Regime::ode:
          if (a != "f") throw ParseError("expected 'f'", at);
          return Tree::leaf();
        case Regime::inverse:
          if (a != "Dg") throw ParseError("expected 'Dg'", at);
          return Tree::leaf();
        case Regime::composite:
          if (a.size() < 2 || a[0] != 'd') throw ParseError("expected increment 'd<variable>'", at);
          return Tree::leaf(resolve(parent, std::string_view(a).substr(1), at));
      }
    }
    expect('(');
    std::size_t at = pos_;
    std::string head = atom();
    std::vector<Tree> children;
    std::optional<Colour> colour;
    std::vector<unsigned> orders;
    if (regime_ == Regime::composite) {
      auto caret = head.find('^');
      if (caret == std::string::npos) throw ParseError("expected '<colour>^<orders>'", at);
      colour = resolve(parent, std::string_view(head).substr(0, caret), at);
      orders = parse_orders(head.substr(caret + 1), at);
    } else {
      if (head.size() < 3 || head[0] != 'D' || head.back() != 'f') throw ParseError("expected 'D<k>f'", at);
      orders = parse_orders(head.substr(1, head.size() - 2), at);
    }
    while (peek_open() || (skip_space(), pos_ < text_.size() && text_[pos_] != ')'))
      children.push_back(expr(colour));
    expect(')');

    if (regime_ == Regime::composite) {
      Tree t(*colour, std::move(children));
      if (slot_orders(t, *skeleton_) != orders) throw ParseError("orders do not match arguments", at);
      return t;
    }
    if (orders.size() != 1 || orders[0] != children.size())
      throw ParseError("derivative order does not match argument count", at);
    return Tree(Colour{}, std::move(children));
  }

  std::vector<unsigned> parse_orders(const std::string& s, std::size_t at) {
    std::vector<unsigned> out;
    std::size_t i = 0;
    while (i <= s.size()) {
      std::size_t j = s.find(',', i);
      if (j == std::string::npos) j = s.size();
      std::string part = s.substr(i, j - i);
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("malformed derivative orders", at);
      out.push_back(static_cast<unsigned>(std::stoul(part)));
      i = j + 1;
    }
    return out;
  }

  std::string_view text_;
  Regime regime_;
  const SkeletonPalette* skeleton_;
  std::size_t pos_ = 0;
};

}  // namespace

WeightedGraph parse_machine_term(std::string_view text, Regime regime,
                                 std::shared_ptr<const SkeletonPalette> skeleton) {
  if (regime == Regime::composite && !skeleton) throw InvalidArgument("composite regime requires a skeleton");
  MachineParser parser(text, regime, skeleton.get());
  try {
    return parser.parse(std::move(skeleton));
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("invalid tree: ") + e.what(), 0);
  }
}

}  // namespace vgraph
