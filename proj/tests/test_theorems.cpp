#include <doctest.h>

#include <set>

#include "artin/homology.hpp"
#include "artin/theorems.hpp"
#include "helpers.hpp"

using namespace artin;
using namespace testing_helpers;

namespace {

Instance<PrimeField> instance_of(const std::string& text) {
  return build_instance(parse_instance_text(text), PrimeField(101), "test");
}

std::string fact(const Verdict& v, const std::string& key) {
  for (const auto& [k, val] : v.facts)
    if (k == key) return val;
  return "";
}

}  // namespace

TEST_CASE("registry holds S1 through S29 with anchors") {
  const auto& reg = registry();
  REQUIRE(reg.size() == 29);
  for (std::size_t i = 0; i < reg.size(); ++i) {
    CHECK(reg[i].id == "S" + std::to_string(i + 1));
    CHECK_FALSE(reg[i].anchor.empty());
    CHECK_FALSE(reg[i].title.empty());
  }
  std::size_t conjectures = 0;
  for (const auto& s : reg) conjectures += s.conjecture;
  CHECK(conjectures == 1);
  CHECK(find_statement("S24").conjecture);
  CHECK(find_statement("S4.3").id == "S4");
  CHECK_THROWS_AS(find_statement("S30"), UndefinedInputError);
  CHECK_THROWS_AS(find_statement("S4.9"), UndefinedInputError);
  CHECK_THROWS_AS(find_statement("bogus"), UndefinedInputError);

  auto ids = suite_statement_ids();
  CHECK(ids.size() == 27);
  CHECK(std::find(ids.begin(), ids.end(), "S24") == ids.end());
  CHECK(std::find(ids.begin(), ids.end(), "S25") == ids.end());
}

TEST_CASE("check rejects unknown ids") {
  auto inst = instance_of("[ring]\nvars = x\nrel = x^3\n[module M]\nrow = x\n");
  CHECK_THROWS_AS(check("S99", inst), UndefinedInputError);
  CHECK_THROWS_AS(check("S13.7", inst), UndefinedInputError);
}

TEST_CASE("AGP: S16 passes with e = 4, a = 3, gamma = 3") {
  auto inst = agp_instance(PrimeField(101));
  auto v = check("S16", inst);
  CHECK(v.status == Status::Pass);
  CHECK(fact(v, "e") == "4");
  CHECK(fact(v, "a") == "3");
  CHECK(fact(v, "gamma.M") == "3");
  CHECK(fact(v, "gamma.omega1") == "1");
  CHECK(v.cutoff == 12);
  CHECK(v.counterexample.empty());
}

TEST_CASE("AGP: ring-level statements") {
  auto inst = agp_instance(PrimeField(101));
  CHECK(check("S15", inst).status == Status::Pass);
  CHECK(check("S15.4", inst).status == Status::Pass);
  CHECK(check("S17", inst).status == Status::Pass);
  CHECK(check("S12", inst).status == Status::Pass);
  // Type 3: outside the range of S29.
  CHECK(check("S29", inst).status == Status::Vacuous);
}

TEST_CASE("S17 clause 2 on the m^2 = 0 ring in two variables") {
  auto inst = instance_of("[ring]\nvars = x, y\nrel = x^2\nrel = x*y\nrel = y^2\n");
  auto v = check("S17.2", inst);
  CHECK(v.status == Status::Pass);
  CHECK(fact(v, "tor.omega.omega.1") != "0");
}

TEST_CASE("S13 with a free module is vacuous") {
  auto inst = agp_instance(PrimeField(101));
  Instance<PrimeField> free_inst;
  free_inst.name = "free";
  free_inst.ring = inst.ring;
  free_inst.add("M", free_module(inst.ring, 1));
  free_inst.add("N", inst.module("M"));
  auto v = check("S13", free_inst);
  CHECK(v.status == Status::Vacuous);
  CHECK(v.hypothesis.find("free") != std::string::npos);
}

TEST_CASE("S13 on the AGP syzygy pair") {
  auto agp = agp_instance(PrimeField(101));
  Instance<PrimeField> inst;
  inst.ring = agp.ring;
  inst.add("M", resolve(agp.module("M"), 1)->syzygy_module(1));
  inst.add("N", resolve(agp.module("N"), 1)->syzygy_module(1));
  auto v = check("S13", inst);
  CHECK(v.status == Status::Pass);
  CHECK(fact(v, "gamma.M.M,N") == "3");
  CHECK(fact(v, "gamma.N.M,N") == "1");
  CHECK(check("S13.4", inst).status == Status::Pass);
  CHECK(check("S7", inst).status == Status::Pass);
  CHECK(check("S8", inst).status == Status::Pass);
}

TEST_CASE("instance without modules is vacuous for module statements") {
  auto inst = instance_of("[ring]\nvars = x, y\nrel = x^2\nrel = y^2\n");
  CHECK(check("S1", inst).status == Status::Vacuous);
  CHECK(check("S3", inst).status == Status::Vacuous);
  CHECK(check("S17", inst).status == Status::Pass);
}

TEST_CASE("S9 contrapositive over an m^2 = 0 ring") {
  auto inst = instance_of("[ring]\nvars = x, y\nrel = x^2\nrel = x*y\nrel = y^2\n[module M]\nrow = x, y\n");
  auto v = check("S9", inst);
  CHECK(v.status == Status::Pass);
  CHECK(v.conclusion.find("contrapositive") != std::string::npos);
}

TEST_CASE("S24 is never PASS") {
  auto inst = agp_instance(PrimeField(101));
  CHECK(check("S24", inst).status != Status::Pass);
  auto m3 = instance_of("[ring]\nvars = x\nrel = x^4\n[module M]\nrow = x^2\n");
  auto v = check("S24", m3);
  CHECK(v.status != Status::Pass);
  for (const auto& i : canned_corpus(PrimeField(101))) {
    if (i.name.starts_with("monomial")) continue;
    CHECK(check("S24", i).status != Status::Pass);
  }
}

TEST_CASE("S25 on the AGP pair") {
  auto agp = agp_instance(PrimeField(101));
  Instance<PrimeField> inst;
  inst.ring = agp.ring;
  inst.add("M", resolve(agp.module("M"), 1)->syzygy_module(1));
  inst.add("N", resolve(agp.module("N"), 1)->syzygy_module(1));
  auto v = check("S25", inst);
  CHECK(v.status == Status::Pass);
}

TEST_CASE("clause selection restricts the parts evaluated") {
  auto inst = agp_instance(PrimeField(101));
  auto all = check("S4", inst);
  auto one = check("S4.3", inst);
  CHECK(one.status == Status::Pass);
  CHECK(one.hypothesis.find("(1)") == std::string::npos);
  CHECK(all.hypothesis.find("(1)") != std::string::npos);
}

TEST_CASE("cutoff parameter is recorded") {
  auto inst = agp_instance(PrimeField(101));
  inst.params["n"] = 6;
  auto v = check("S16", inst);
  CHECK(v.cutoff == 6);
  CHECK(v.status == Status::Pass);
}

TEST_CASE("empty suite reports success") {
  auto rep = check_suite<PrimeField>({}, suite_statement_ids());
  CHECK(rep.verdicts.empty());
  CHECK_FALSE(rep.any_fail());
  auto rep2 = check_suite(std::vector<Instance<PrimeField>>{agp_instance(PrimeField(101))}, {});
  CHECK(rep2.verdicts.empty());
}

TEST_CASE("suite over the AGP instance has no FAIL") {
  auto rep = check_suite(std::vector<Instance<PrimeField>>{agp_instance(PrimeField(101))}, suite_statement_ids());
  CHECK(rep.verdicts.size() == 27);
  CHECK_FALSE(rep.any_fail());
  CHECK(rep.counts[Status::Pass] > 10);
}

TEST_CASE("serialized instance re-checks identically") {
  auto inst = agp_instance(PrimeField(101));
  auto text = serialize_instance(inst);
  auto again = build_instance(parse_instance_text(text), PrimeField(101), "agp");
  for (const char* id : {"S16", "S15", "S10", "S3"}) {
    auto a = check(id, inst), b = check(id, again);
    CHECK(a.status == b.status);
    CHECK(a.facts == b.facts);
  }
}

TEST_CASE("checks agree over Q on the AGP instance") {
  auto inst = agp_instance(RationalField());
  auto v = check("S16", inst);
  CHECK(v.status == Status::Pass);
  CHECK(fact(v, "gamma.M") == "3");
}

TEST_CASE("corpus builders") {
  auto rings = monomial_m3_rings(PrimeField(5), 2);
  // e = 1: {}, {x^2}; e = 2: subsets of {x^2, xy, y^2} up to swapping x and y.
  CHECK(rings.size() == 2 + 6);
  for (const auto& r : rings) CHECK(ring_invariants(*r).loewy <= 2);

  auto omega = omega_corpus(PrimeField(5));
  CHECK(omega.size() >= 20);
  for (const auto& inst : omega) CHECK_FALSE(ring_invariants(*inst.ring).gorenstein);

  auto r1 = random_m3_ring(PrimeField(101), 3, 2, 7);
  auto r2 = random_m3_ring(PrimeField(101), 3, 2, 7);
  CHECK(hilbert(*r1) == hilbert(*r2));
  CHECK(ring_invariants(*r1).loewy == 2);
}
