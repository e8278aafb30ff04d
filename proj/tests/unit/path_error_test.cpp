#include "doctest.h"
#include "flux/path_error.hpp"
#include "flux/syntax.hpp"
#include "flux/type_algebra.hpp"
#include "flux/update.hpp"

using namespace flux;

namespace {

const ProcEnv kNoProcs;

std::vector<int> report(const char* s, const char* t, Arity a = Arity::Plural, const ProcEnv& procs = kNoProcs,
                        const Signature& sig = {}) {
  StmtPtr l = label_statement(parse_stmt(s));
  Analysis an = analyze({}, a, parse_type(t), l, procs, sig);
  return report_errors(l, an.unproductive);
}

}  // namespace

TEST_CASE("labels are preorder and unique") {
  StmtPtr s = label_statement(parse_stmt("children [iter [a? delete]]; rename b"));
  CHECK(s->label == 0);
  CHECK(subterm_at(s, 1)->kind == Stmt::Kind::Children);
  CHECK(subterm_at(s, 4)->kind == Stmt::Kind::Delete);
  CHECK(subterm_at(s, 5)->kind == Stmt::Kind::Rename);
  CHECK_THROWS_AS(subterm_at(s, 6), Error);
  CHECK(print_stmt(replace_at(s, 3)) == "children [iter [skip]]; rename b");
  CHECK(strip_labels(s)->label == -1);
}

TEST_CASE("conditional union") {
  CHECK(cond_union({1, 2}, {1, 2}, 7) == LocationSet{1, 2, 7});
  CHECK(cond_union({1}, {1, 2}, 7) == LocationSet{1});
  CHECK(cond_union({}, {}, 7) == LocationSet{7});
}

TEST_CASE("golden path-errors") {
  CHECK(report("skip", "a[]").empty());
  CHECK(report("delete", "()") == std::vector<int>{0});
  CHECK(report("rename a", "a[string]", Arity::Singular) == std::vector<int>{0});
  CHECK(report("rename b", "a[string]", Arity::Singular).empty());
  CHECK(report("b? delete", "a[]", Arity::Singular) == std::vector<int>{0});
  CHECK(report("insert ()", "()") == std::vector<int>{0});
  CHECK(report("iter [b? delete]", "a[]*") == std::vector<int>{0, 1});
  CHECK(report("iter [b? delete]", "(a[]|b[])*").empty());
  // Both branches dead makes the conditional dead; the skip branch is not reported.
  CHECK(report("if true then delete else skip", "()") == std::vector<int>{0, 1});
  CHECK(report("rename b; delete", "a[]", Arity::Singular).empty());
}

TEST_CASE("procedure calls are never reported") {
  CoreScript cs = parse_core_script("procedure keep() : a[]* => a[]* = skip;");
  CHECK(report("keep()", "a[]*", Arity::Plural, cs.procs).empty());
  CHECK(report("delete; keep()", "()", Arity::Plural, cs.procs) == std::vector<int>{1});
}

TEST_CASE("optimize removes reported code and preserves behaviour") {
  StmtPtr l = label_statement(parse_stmt("iter [a? rename a; b? delete]"));
  Type t = parse_type("(a[]|c[])*");
  Analysis an = analyze({}, Arity::Plural, t, l, kNoProcs, {});
  auto rep = report_errors(l, an.unproductive);
  CHECK_FALSE(rep.empty());
  StmtPtr opt = optimize(l, an.unproductive);
  for (const char* v : {"a[],c[]", "()", "c[],a[],a[]"}) {
    Forest in = parse_value(v);
    CHECK(value_eq(exec_update({}, in, l, kNoProcs), exec_update({}, in, opt, kNoProcs)));
  }
  CHECK(type_equiv(an.type, infer_update_type({}, Arity::Plural, t, l, kNoProcs, {}), {}));
}
