#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vgraph/error.hpp"
#include "vgraph/skeleton.hpp"

using namespace vgraph;

TEST_CASE("parse and print") {
  Skeleton s = parse_skeleton(" F( f(x), g( x ,y) ) ");
  CHECK(s.name == "F");
  REQUIRE(s.arity() == 2);
  CHECK(s.args[1].args[1].name == "y");
  CHECK(s.args[1].args[1].is_variable());
  CHECK(to_text(s) == "F(f(x),g(x,y))");
  CHECK(to_text(parse_skeleton("x")) == "x");
  CHECK(to_text(parse_skeleton("f_1(x2)")) == "f_1(x2)");
}

TEST_CASE("parse errors carry positions") {
  auto position = [](std::string_view text) -> std::optional<std::size_t> {
    try {
      parse_skeleton(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::nullopt;
  };
  CHECK(position("f(g(x)") == 6);
  CHECK(position("f(x))") == 4);
  CHECK(position("") == 0);
  CHECK(position("f(,x)") == 2);
  CHECK(position("f(x y)") == 4);
  CHECK(position("1f(x)") == 0);
  CHECK(position("f()").has_value());
}

TEST_CASE("palette follows pre-order") {
  SkeletonPalette p(parse_skeleton("F(f(x),g(x,y))"));
  REQUIRE(p.size() == 6);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < p.size(); ++i) names.push_back(p.node(i).colour.name);
  CHECK(names == std::vector<std::string>{"F", "f", "x", "g", "x", "y"});
  CHECK(p.root().expression == "F(f(x),g(x,y))");
  CHECK(p.node(3).expression == "g(x,y)");
  CHECK(p.node(3).arguments == "x,y");
  CHECK(p.node(3).parent == 0);
  CHECK(p.node(3).slot == 1);
  CHECK(p.node(5).variable);
  CHECK(p.node(3).args == std::vector<std::size_t>{4, 5});
  CHECK(p.resolve(std::nullopt, "F")->index == 0);
  CHECK(p.resolve(p.node(3).colour, "y")->index == 5);
  CHECK(!p.resolve(p.node(1).colour, "y"));
}

TEST_CASE("repeated argument names get slot suffixes") {
  SkeletonPalette p(parse_skeleton("h(x,x)"));
  CHECK(p.node(1).colour.name == "x.1");
  CHECK(p.node(2).colour.name == "x.2");
  CHECK(p.node(1).name == "x");
}
