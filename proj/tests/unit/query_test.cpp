#include "doctest.h"
#include "flux/query.hpp"
#include "flux/syntax.hpp"
#include "flux/type_algebra.hpp"
#include "gen.hpp"
#include "oracle.hpp"

using namespace flux;
using namespace flux::testing;

namespace {

const ProcEnv kNoProcs;

Forest eval(const char* q, const QueryEnv& env = {}) { return eval_query(env, parse_query(q), kNoProcs); }

Type infer(const char* q, const QueryTypeEnv& env = {}) { return infer_query_type(env, parse_query(q), {}, kNoProcs); }

ErrorKind infer_error(const char* q, const QueryTypeEnv& env = {}) {
  try {
    infer(q, env);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a type error for " << q);
  return ErrorKind::Syntax;
}

}  // namespace

TEST_CASE("query evaluation") {
  CHECK(to_string(eval("a[\"x\"], ()")) == "a[\"x\"]");
  CHECK(to_string(eval("let $x := (a[], b[]) return ($x, $x)")) == "a[],b[],a[],b[]");
  CHECK(to_string(eval("if \"s\" = \"s\" then true else false")) == "true");
  CHECK(to_string(eval("(a[], b[], a[\"q\"])::a")) == "a[],a[\"q\"]");
  CHECK(to_string(eval("for $y in (a[b[]], c[d[]]) return $y/child")) == "b[],d[]");
  CHECK(to_string(eval("for $y in () return $y")) == "()");
  QueryEnv env;
  env.forests["x"] = parse_value("a[\"1\"],a[\"2\"]");
  CHECK(to_string(eval("for $y in $x return n[$y/child]", env)) == "n[\"1\"],n[\"2\"]");
}

TEST_CASE("query evaluation errors") {
  CHECK_THROWS_AS(eval("$nope"), Error);
  try {
    eval("if a[] then () else ()");
    FAIL("condition accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConditionNotBool);
  }
}

TEST_CASE("query typing rules") {
  CHECK(type_equiv(infer("a[\"x\"], b[]"), parse_type("a[string],b[]"), {}));
  CHECK(type_equiv(infer("if true then a[] else b[]"), parse_type("a[]|b[]"), {}));
  QueryTypeEnv env;
  env.forests["x"] = parse_type("(a[string]|b[])*");
  CHECK(type_equiv(infer("$x::a", env), parse_type("a[string]*"), {}));
  CHECK(type_equiv(infer("for $y in $x return $y", env), parse_type("(a[string]|b[])*"), {}));
  env.trees["t"] = parse_type("n[m[]]");
  CHECK(type_equiv(infer("$t/child", env), parse_type("m[]"), {}));
  CHECK(type_equiv(infer("$t", env), parse_type("n[m[]]"), {}));
}

TEST_CASE("query typing errors") {
  CHECK(infer_error("$x") == ErrorKind::TypeError);
  CHECK(infer_error("a[] = \"s\"") == ErrorKind::TypeError);
  CHECK(infer_error("if \"s\" then () else ()") == ErrorKind::TypeError);
  QueryTypeEnv env;
  env.trees["t"] = t_string();
  CHECK(infer_error("$t/child", env) == ErrorKind::TypeError);
}

TEST_CASE("label projection on types") {
  Type t = parse_type("a[],(b[]|a[string])*,c[]");
  CHECK(type_equiv(label_project(t, "a", {}), parse_type("a[],a[string]*"), {}));
  Schema s = parse_schema("type T = a[T*]; schema T;");
  CHECK(type_equiv(label_project(t_star(t_var("T")), "a", s.sig), t_star(t_var("T")), s.sig));
}

TEST_CASE("transform queries are gated") {
  CHECK_THROWS_AS(parse_query("transform a[] by { delete }"), Error);
  ParseOptions on;
  on.enable_transform = true;
  QueryPtr q = parse_query("transform (a[], b[]) by { iter [a? delete] }", on);
  CHECK(to_string(eval_query({}, q, kNoProcs)) == "b[]");
  CHECK(type_equiv(infer_query_type({}, q, {}, kNoProcs), parse_type("b[]"), {}));
  ExecOptions off;
  off.enable_transform = false;
  CHECK_THROWS_AS(eval_query({}, q, kNoProcs, off), Error);
}

TEST_CASE("query soundness on random queries") {
  Rng r(21);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    QueryTypeEnv env;
    env.forests["x0"] = random_type(r, 3);
    env.trees["y0"] = random_atom(r, 2);
    if (is_uninhabited(env.forests["x0"], {}) || is_uninhabited(env.trees["y0"], {})) continue;
    QueryPtr q = random_query(r, env, {}, kNoProcs, 4);
    Type t = infer_query_type(env, q, {}, kNoProcs);
    QueryEnv g;
    REQUIRE(sample_env(r, env, {}, g));
    Forest v = eval_query(g, q, kNoProcs);
    CAPTURE(print_query(q));
    CHECK(oracle_member(v, t, {}));
    ++checked;
  }
  CHECK(checked > 200);
}

TEST_CASE("query printer round-trips") {
  Rng r(22);
  QueryTypeEnv env;
  env.forests["x0"] = parse_type("a[string]*");
  for (int i = 0; i < 300; ++i) {
    QueryPtr q = random_query(r, env, {}, kNoProcs, 4);
    std::string text = print_query(q);
    CAPTURE(text);
    QueryPtr back = parse_query(text);
    CHECK(same_query(back, q));
    CHECK(print_query(back) == text);
  }
  // Free tree variables read back as one-tree forests: same meaning, and
  // printing is stable from the second round on.
  QueryTypeEnv open = env;
  open.trees["y0"] = parse_type("b[c[]]");
  for (int i = 0; i < 200; ++i) {
    QueryPtr q = random_query(r, open, {}, kNoProcs, 4);
    QueryPtr back = parse_query(print_query(q));
    CAPTURE(print_query(q));
    CHECK(type_equiv(infer_query_type(open, back, {}, kNoProcs), infer_query_type(open, q, {}, kNoProcs), {}));
    QueryEnv g;
    REQUIRE(sample_env(r, open, {}, g));
    CHECK(value_eq(eval_query(g, back, kNoProcs), eval_query(g, q, kNoProcs)));
    CHECK(print_query(parse_query(print_query(back))) == print_query(back));
  }
}
