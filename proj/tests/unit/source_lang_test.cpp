#include "doctest.h"
#include "flux/source.hpp"
#include "flux/syntax.hpp"
#include "flux/value_io.hpp"
#include "gen.hpp"

using namespace flux;
using namespace flux::testing;

namespace {

std::string norm(const char* src) { return print_stmt(normalize_stmt(parse_source(src))); }

bool norm_is(const char* src, const char* core) {
  bool ok = same_stmt(normalize_stmt(parse_source(src)), parse_stmt(core));
  if (!ok) MESSAGE(src << " normalized to " << norm(src));
  return ok;
}

}  // namespace

TEST_CASE("normalization of paths") {
  CHECK(norm_is("DELETE books", "children [iter [books? delete]]"));
  CHECK(norm_is("DELETE .", "delete"));
  CHECK(norm_is("DELETE a/b", "children [iter [a? children [iter [b? delete]]]]"));
  CHECK(norm_is("DELETE $x AS a", "children [iter [a? snapshot $x in delete]]"));
  CHECK(norm_is("DELETE a[true]", "children [iter [a? if true then delete else skip]]"));
}

TEST_CASE("normalization of simple updates") {
  CHECK(norm_is("INSERT BEFORE a VALUE x[]", "children [iter [a? left [insert x[]]]]"));
  CHECK(norm_is("INSERT AFTER a VALUE x[]", "children [iter [a? right [insert x[]]]]"));
  CHECK(norm_is("INSERT AS FIRST INTO a VALUE x[]", "children [iter [a? children [left [insert x[]]]]]"));
  CHECK(norm_is("INSERT AS LAST INTO a VALUE x[]", "children [iter [a? children [right [insert x[]]]]]"));
  CHECK(norm_is("INSERT INTO a VALUE x[]", "children [iter [a? children [right [insert x[]]]]]"));
  CHECK(norm_is("DELETE FROM a", "children [iter [a? children [delete]]]"));
  CHECK(norm_is("RENAME a TO b", "children [iter [a? rename b]]"));
  CHECK(norm_is("REPLACE a WITH x[]", "children [iter [a? {delete; insert x[]}]]"));
  CHECK(norm_is("REPLACE IN a WITH \"s\"", "children [iter [a? children [{delete; insert \"s\"}]]]"));
  CHECK(norm_is("UPDATE a BY DELETE b", "children [iter [a? children [iter [b? delete]]]]"));
}

TEST_CASE("WHERE becomes a filter on the path") {
  CHECK(same_source(desugar(parse_source("DELETE $x AS a WHERE true")), parse_source("DELETE ($x AS a)[true]")));
  CHECK(norm_is("DELETE $x AS a WHERE $x/child = \"s\"",
                "children [iter [a? snapshot $x in if (for $_1 in $x return $_1/child) = \"s\" then delete else skip]]"));
}

TEST_CASE("compound statements") {
  CHECK(norm_is("DELETE a; DELETE b", "children [iter [a? delete]]; children [iter [b? delete]]"));
  CHECK(norm_is("IF true THEN DELETE a", "if true then children [iter [a? delete]] else skip"));
  CHECK(norm_is("LET $v := x[] IN DELETE a", "let $v := x[] in children [iter [a? delete]]"));
}

TEST_CASE("keywords are case-insensitive and comments nest") {
  CHECK(same_source(parse_source("delete a (* x (* y *) *)"), parse_source("DELETE a")));
  CHECK(same_source(parse_source("DELETE *"), parse_source("DELETE node()")));
  CHECK_THROWS_AS(parse_source("DELETE"), Error);
  CHECK_THROWS_AS(parse_source("INSERT a VALUE b[]"), Error);
}

TEST_CASE("bookstore samples parse and normalize") {
  for (int k = 1; k <= 10; ++k) {
    std::string path = std::string(FLUX_SAMPLES_DIR) + "/bookstore/u" + std::to_string(k) + ".flux";
    CAPTURE(path);
    SStmtPtr s = parse_source(read_file(path));
    CHECK(same_source(parse_source(print_source(s)), s));
    StmtPtr core = normalize_stmt(s);
    CHECK(same_stmt(parse_stmt(print_stmt(core)), core));
  }
}

TEST_CASE("source printer round-trips and normalization is stable") {
  Rng r(41);
  for (int i = 0; i < 300; ++i) {
    Type focus = t_elem("r", random_type(r, 3));
    SStmtPtr s = random_source(r, 3, focus, {});
    std::string text = print_source(s);
    CAPTURE(text);
    SStmtPtr back = parse_source(text);
    CHECK(same_source(back, s));
    CHECK(print_source(back) == text);
    std::string core = print_stmt(normalize_stmt(back));
    CHECK(print_stmt(parse_stmt(core)) == core);
  }
}
