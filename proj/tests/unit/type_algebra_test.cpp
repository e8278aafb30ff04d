#include <random>

#include "doctest.h"
#include "flux/sampling.hpp"
#include "flux/syntax.hpp"
#include "flux/type_algebra.hpp"
#include "gen.hpp"
#include "oracle.hpp"

using namespace flux;
using namespace flux::testing;

namespace {

bool sub(const char* a, const char* b, const Signature& sig = {}) {
  return subtype(parse_type(a), parse_type(b), sig);
}

}  // namespace

TEST_CASE("subtyping golden pairs") {
  CHECK(sub("a[]", "a[]*"));
  CHECK(sub("a[],a[]", "a[]*"));
  CHECK(sub("()", "a[]*"));
  CHECK_FALSE(sub("a[]*", "a[],a[]*"));
  CHECK(sub("a[]|b[]", "(a[]|b[]|c[])*"));
  CHECK(sub("a[b[]]", "a[b[]*]"));
  CHECK_FALSE(sub("a[b[]*]", "a[b[]]"));
  CHECK(sub("(a[],b[])*", "(a[]|b[])*"));
  CHECK_FALSE(sub("(a[]|b[])*", "(a[],b[])*"));
  CHECK(sub("a[string|bool]", "a[bool]|a[string]"));
  CHECK_FALSE(sub("string", "bool"));
  CHECK(sub("a[b[]],a[c[]]", "a[b[]|c[]]*"));
}

TEST_CASE("subtyping with recursive definitions") {
  Schema s = parse_schema("type T = t[T*]; type U = t[(T|U)*]; schema T;");
  CHECK(subtype(t_var("T"), t_var("U"), s.sig));
  CHECK(subtype(t_var("U"), t_var("T"), s.sig));
  CHECK(subtype(parse_type("t[t[],t[t[]]]"), t_var("T"), s.sig));
  CHECK_FALSE(subtype(parse_type("t[s[]]"), t_var("T"), s.sig));
  Schema odd = parse_schema("type E = e[O?]; type O = o[E]; schema E;");
  CHECK(member(parse_value("e[o[e[]]]"), t_var("E"), odd.sig));
  CHECK_FALSE(member(parse_value("e[o[]]"), t_var("E"), odd.sig));
}

TEST_CASE("signature checks") {
  CHECK_THROWS_AS(parse_schema("type T = T; schema T;"), Error);
  CHECK_THROWS_AS(parse_schema("schema U;"), Error);
  try {
    parse_schema("type T = a[], T; schema T;");
    FAIL("guardedness not enforced");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnguardedTypeVar);
  }
}

TEST_CASE("uninhabited types") {
  Schema s = parse_schema("type L = l[L]; schema L;");
  CHECK(is_uninhabited(t_var("L"), s.sig));
  CHECK_FALSE(is_uninhabited(t_star(t_var("L")), s.sig));
  CHECK_FALSE(is_uninhabited(parse_type("a[]"), {}));
}

TEST_CASE("as_atom merges alternatives with one label") {
  Type t = as_atom(parse_type("a[b[]]|a[c[]]"), {});
  REQUIRE(t);
  CHECK(type_equiv(t, parse_type("a[b[]|c[]]"), {}));
  CHECK_FALSE(as_atom(parse_type("a[]|b[]"), {}));
  CHECK_FALSE(as_atom(parse_type("a[]*"), {}));
  CHECK(as_atom(parse_type("(),a[],()"), {}));
}

TEST_CASE("simplify preserves the language") {
  Rng r(11);
  for (int i = 0; i < 300; ++i) {
    Type t = random_type(r, 4);
    CHECK(type_equiv(simplify(t, true), t, {}));
  }
}

TEST_CASE("type printer round-trips") {
  Rng r(12);
  for (int i = 0; i < 300; ++i) {
    Type t = random_type(r, 4);
    Type back = parse_type(to_string(t));
    CAPTURE(to_string(t));
    CHECK(to_string(back) == to_string(t));
    CHECK(type_equiv(back, t, {}));
  }
}

TEST_CASE("automaton membership agrees with the backtracking oracle") {
  Rng r(13);
  for (int i = 0; i < 300; ++i) {
    Type t = random_type(r, 3);
    Type other = random_type(r, 3);
    auto v = sample_member(t, {}, r.engine());
    if (!v) continue;
    CHECK(member(*v, t, {}));
    CHECK(oracle_member(*v, t, {}));
    CHECK(member(*v, other, {}) == oracle_member(*v, other, {}));
  }
}

TEST_CASE("sampling respects recursive schemas") {
  Schema s = parse_schema("type T = t[T*, string?]; schema T*;");
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto v = sample_member(s.root, s.sig, rng);
    REQUIRE(v);
    CHECK(member(*v, s.root, s.sig));
  }
  Schema dead = parse_schema("type L = l[L]; schema L;");
  CHECK_FALSE(sample_member(dead.root, dead.sig, rng));
}

TEST_CASE("subtyping is a preorder on random types") {
  Rng r(14);
  for (int i = 0; i < 200; ++i) {
    Type a = random_type(r, 3), b = mutate_type(r, a), c = mutate_type(r, b);
    CHECK(subtype(a, a, {}));
    if (subtype(a, b, {}) && subtype(b, c, {})) CHECK(subtype(a, c, {}));
    CHECK(subtype(a, t_alt(a, b), {}));
    CHECK(subtype(t_seq(a, a), t_star(a), {}));
  }
}
