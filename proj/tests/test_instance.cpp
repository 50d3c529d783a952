#include <doctest.h>

#include "artin/homology.hpp"
#include "artin/instance.hpp"
#include "artin/theorems.hpp"

using namespace artin;

namespace {

// Runs the parser and returns the (line, column) of the error, or (0, 0).
std::pair<std::size_t, std::size_t> error_at(const std::string& text) {
  try {
    parse_instance_text(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST_CASE("minimal instance file") {
  auto t = parse_instance_text("[ring]\nvars = x\nrel = x^3\n");
  CHECK_FALSE(t.field);
  CHECK(t.vars == std::vector<std::string>{"x"});
  CHECK(t.relations.size() == 1);
  auto inst = build_instance(t, PrimeField(101));
  CHECK(hilbert(*inst.ring) == std::vector<std::size_t>{1, 1, 1});
  CHECK(inst.modules.empty());
}

TEST_CASE("AGP text builds the AGP ring") {
  auto t = parse_instance_text(kAgpInstanceText);
  REQUIRE(t.field);
  CHECK(*t.field == "GF(101)");
  CHECK(parse_field_name(*t.field) == 101u);
  auto inst = build_instance(t, PrimeField(101));
  CHECK(hilbert(*inst.ring) == std::vector<std::size_t>{1, 4, 3});
  REQUIRE(inst.modules.size() == 1);
  CHECK(inst.modules[0].first == "M");
  CHECK(min_gens(inst.module("M")) == 2);
}

TEST_CASE("comments, blank lines and params") {
  auto t = parse_instance_text(
      "# header\n\n[ring]   # trailing\n  field = Q\nvars = x, y\nrel = x^2\nrel = y^2 # c\n"
      "[module N]\nrow = x\n[params]\nn = 7\nj = 2\n");
  CHECK(*t.field == "Q");
  CHECK(t.params.at("n") == 7);
  CHECK(t.params.at("j") == 2);
  auto inst = build_instance(t, RationalField());
  CHECK(inst.cutoff() == 7);
  CHECK(inst.module("N").dim() == 2);
  CHECK_THROWS_AS(inst.module("M"), UndefinedInputError);
}

TEST_CASE("free module written with empty rows") {
  auto inst = build_instance(parse_instance_text("[ring]\nvars = x\nrel = x^2\n[module F]\nrow =\nrow =\n"),
                             PrimeField(7));
  CHECK(inst.module("F").dim() == 4);
  CHECK(resolve(inst.module("F"), 1)->betti(1) == 0);
}

TEST_CASE("parse errors carry line and column") {
  // Caret position: the value starts at column 7 and the error is at the end of `x^`.
  auto [line, col] = error_at("[ring]\nvars = x\nrel = x^\n");
  CHECK(line == 3);
  CHECK(col >= 7);
  CHECK(col <= 9);

  CHECK(error_at("[ring]\nvars = x\n[module M]\nrow = x\n[module M]\nrow = x\n") == std::pair<std::size_t, std::size_t>{5, 9});
  CHECK(error_at("vars = x\n").first == 1);
  CHECK(error_at("[ring]\nrel = x^2\n").first == 2);
  CHECK(error_at("[ring]\nvars = x\n[oops]\n") == std::pair<std::size_t, std::size_t>{3, 2});
  CHECK(error_at("[ring]\nvars = x, y\n[module M]\nrow = x, y\nrow = x\n").first == 5);
  CHECK(error_at("[ring]\nvars = x, x\n") == std::pair<std::size_t, std::size_t>{2, 11});
  CHECK(error_at("[ring]\nvars = x\nfoo = 1\n").first == 3);
  CHECK(error_at("[ring]\nvars = x\n[params]\nn = seven\n") == std::pair<std::size_t, std::size_t>{4, 5});
  CHECK(error_at("[ring]\nvars = x\nrel = y^2\n").first == 3);
  CHECK(error_at("[module M]\n").first == 1);
  CHECK(error_at("# nothing\n").first >= 1);
  CHECK(error_at("[ring]\nvars = x\n[ring]\n").first == 3);
}

TEST_CASE("build errors") {
  CHECK_THROWS_AS(build_instance(parse_instance_text("[ring]\nvars = x\nrel = x + x^2\n"), PrimeField(101)),
                  PresentationError);
  CHECK_THROWS_AS(build_instance(parse_instance_text("[ring]\nvars = x, y\nrel = x^2\n"), PrimeField(101)),
                  NotArtinianError);
  CHECK_THROWS_AS(parse_field_name("GF(x)"), PresentationError);
  CHECK_FALSE(parse_field_name("Q"));
  CHECK(parse_field_name("7") == 7u);
}

TEST_CASE("duplicate module names rejected by Instance::add") {
  auto inst = build_instance(parse_instance_text("[ring]\nvars = x\nrel = x^2\n[module M]\nrow = x\n"),
                             PrimeField(101));
  CHECK_THROWS_AS(inst.add("M", free_module(inst.ring, 1)), PreconditionError);
}

TEST_CASE("serialize then parse reproduces the model") {
  for (const char* text :
       {kAgpInstanceText, "[ring]\nvars = x, y\nrel = x^2\nrel = y^2\n[module M]\nrow = x, y\n[params]\nn = 5\n",
        "[ring]\nvars = x\nrel = x^3\n[module F]\nrow =\n"}) {
    auto inst = build_instance(parse_instance_text(text), PrimeField(101));
    auto s1 = serialize_instance(inst);
    auto again = build_instance(parse_instance_text(s1), PrimeField(101));
    CHECK(serialize_instance(again) == s1);
    CHECK(hilbert(*again.ring) == hilbert(*inst.ring));
    REQUIRE(again.modules.size() == inst.modules.size());
    for (std::size_t i = 0; i < inst.modules.size(); ++i) {
      CHECK(again.modules[i].first == inst.modules[i].first);
      CHECK(resolve(again.modules[i].second, 3)->betti_list(3) == resolve(inst.modules[i].second, 3)->betti_list(3));
    }
    CHECK(again.params == inst.params);
  }
}

TEST_CASE("serialization over Q clears denominators") {
  auto inst = build_instance(parse_instance_text("[ring]\nfield = Q\nvars = x, y\nrel = x^2 - 3*y^2\nrel = x*y\n"
                                                 "[module M]\nrow = 2*x, 3*y\n"),
                             RationalField());
  auto s = serialize_instance(inst);
  CHECK(s.find("field = Q") != std::string::npos);
  CHECK(s.find('/') == std::string::npos);
  auto again = build_instance(parse_instance_text(s), RationalField());
  CHECK(serialize_instance(again) == s);
  CHECK(gamma(again.module("M")) == gamma(inst.module("M")));
}

TEST_CASE("coefficients reduce mod p on load") {
  auto inst = build_instance(parse_instance_text("[ring]\nvars = x, y\nrel = 6*x^2 + y^2\nrel = x*y\n"), PrimeField(5));
  auto s = serialize_instance(inst);
  CHECK(s.find("field = GF(5)") != std::string::npos);
  CHECK(hilbert(*inst.ring) == std::vector<std::size_t>{1, 2, 1});
}
