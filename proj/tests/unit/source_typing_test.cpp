#include "doctest.h"
#include "flux/source_typing.hpp"
#include "flux/syntax.hpp"
#include "flux/type_algebra.hpp"
#include "flux/value_io.hpp"
#include "gen.hpp"

using namespace flux;
using namespace flux::testing;

namespace {

const ProcEnv kNoProcs;

Type doc(const char* content) { return t_elem(kDocumentLabel, parse_type(content)); }

Type check(const char* src, const char* content, const Signature& sig = {}) {
  return check_source({}, doc(content), parse_source(src), sig, kNoProcs);
}

bool checks_to(const char* src, const char* content, const char* want) {
  Type got = check(src, content);
  bool ok = type_equiv(got, doc(want), {});
  if (!ok) MESSAGE(src << " gave " << to_string(got));
  return ok;
}

ErrorKind rejects(const char* src, const char* content) {
  try {
    check(src, content);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("accepted " << src);
  return ErrorKind::Syntax;
}

CtxBinding bind(int z, const char* t) { return {z, {}, parse_type(t)}; }

}  // namespace

TEST_CASE("substitution operations") {
  CtxSubst a{{bind(0, "a[]"), bind(2, "b[]")}};
  CtxSubst b{{bind(1, "c[]")}};
  CtxSubst ab = merge_disjoint(a, b);
  REQUIRE(ab.size() == 3);
  CHECK(ab.bindings[1].z == 1);
  CHECK_THROWS_AS(merge_disjoint(a, a), Error);

  CtxSubst alt = merge_or(a, CtxSubst{{bind(0, "x[]"), bind(2, "y[]")}});
  CHECK(type_equiv(alt.find(0)->type, parse_type("a[]|x[]"), {}));
  try {
    merge_or(a, b);
    FAIL("domains differ");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainMismatch);
  }

  Type t = t_seq(t_flex(0), t_flex(1));
  CHECK(to_string(apply_subst(t, ab)) == "a[],c[]");
  CtxSubst m = maybe(b);
  CHECK(type_equiv(apply_subst(m.find(1)->type, CtxSubst{{bind(1, "q[]")}}), parse_type("q[]|c[]"), {}));
  CtxSubst ext = extend_scope(a, "x");
  CHECK(type_equiv(ext.find(2)->ctx.forests.at("x"), parse_type("b[]"), {}));
}

TEST_CASE("path splitting") {
  SourceChecker c({}, kNoProcs);
  PathSplit s = c.check_path({}, parse_type("r[a[],b[],a[string]]"), parse_source("DELETE a")->upd.path);
  CHECK(s.theta.size() == 2);
  PathSplit none = c.check_path({}, parse_type("r[b[]]"), parse_source("DELETE a")->upd.path);
  CHECK(none.theta.empty());
  CHECK(type_equiv(none.type, parse_type("r[b[]]"), {}));
  PathSplit here = c.check_path({}, parse_type("a[]*"), parse_source("DELETE .")->upd.path);
  CHECK(here.theta.size() == 1);
  CHECK(here.type->kind == TypeNode::Kind::Flex);
}

TEST_CASE("source typing of simple updates") {
  CHECK(checks_to("INSERT AS LAST INTO db VALUE books[]", "db[]", "db[books[]]"));
  CHECK(checks_to("DELETE db/a", "db[a[],b[]]", "db[b[]]"));
  CHECK(checks_to("DELETE db/a", "db[a[]*,b[]]", "db[b[]]"));
  CHECK(checks_to("RENAME db/a TO z", "db[a[string]]", "db[z[string]]"));
  CHECK(checks_to("REPLACE IN db/a WITH \"s\"", "db[a[b[]]]", "db[a[string]]"));
  CHECK(checks_to("DELETE $x AS db/a WHERE $x/child = \"s\"", "db[a[string]*]", "db[a[string]*]"));
  CHECK(checks_to("UPDATE db BY INSERT AS FIRST INTO . VALUE n[]", "db[a[]]", "db[n[],a[]]"));
  CHECK(checks_to("IF true THEN DELETE db", "db[]", "db[]|()"));
  CHECK(checks_to("DELETE db/missing", "db[a[]]", "db[a[]]"));
}

TEST_CASE("source typing errors") {
  for (const char* input : {"db[],db[]", "db[]*", "db[]|x[]"}) {
    try {
      check_source({}, parse_type(input), parse_source("DELETE a"), {}, kNoProcs);
      FAIL("accepted at " << input);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NonAtomicSimpleUpdate);
    }
  }
  CHECK(checks_to("DELETE db/a/b", "db[a[]|c[],a[]]", "db[a[]|c[],a[]]"));
  CHECK(rejects("DELETE db/text()/b", "db[string]") == ErrorKind::PathTypeError);
  CHECK(rejects("RENAME db/text() TO b", "db[string]") == ErrorKind::TypeError);
  CHECK(rejects("INSERT AS LAST INTO db VALUE $nope", "db[]") == ErrorKind::TypeError);
  CHECK(rejects("DELETE $x AS db/a WHERE $x/child = \"s\"", "db[a[b[]]]") == ErrorKind::TypeError);
}

TEST_CASE("unmatched paths are recorded") {
  SourceChecker c({}, kNoProcs);
  c.check_compound({}, doc("db[a[]]"), parse_source("DELETE db/a;\nDELETE db/zzz"));
  auto spans = c.unmatched_updates();
  REQUIRE(spans.size() == 1);
  CHECK(spans.front().line == 2);
}

TEST_CASE("bookstore U1 result") {
  SStmtPtr u1 = parse_source(read_file(std::string(FLUX_SAMPLES_DIR) + "/bookstore/u1.flux"));
  Type got = check_source({}, doc("db[]"), u1, {}, kNoProcs);
  CHECK(type_equiv(got, doc("db[books[],authors[]]"), {}));
}

TEST_CASE("source and core typing agree on random statements") {
  Rng r(51);
  int accepted = 0;
  for (int i = 0; i < 300; ++i) {
    Signature sig = random_signature(r);
    Type root = t_elem("r", random_type(r, 3));
    SStmtPtr s = random_source(r, 3, root, sig);
    Type src, core;
    try {
      src = check_source({}, root, s, sig, kNoProcs);
    } catch (const Error&) {
    }
    try {
      core = infer_update_type({}, Arity::Singular, root, normalize_stmt(s), kNoProcs, sig);
    } catch (const Error&) {
    }
    CAPTURE(print_source(s));
    CHECK(bool(src) == bool(core));
    if (src && core) {
      CHECK(type_equiv(src, core, sig));
      ++accepted;
    }
  }
  CHECK(accepted > 100);
}
