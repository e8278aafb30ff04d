#include "doctest.h"
#include "flux/syntax.hpp"
#include "flux/value.hpp"
#include "flux/value_io.hpp"

using namespace flux;

TEST_CASE("trees share children and compare by value") {
  Forest kids = {Tree::string("x"), Tree::boolean(true)};
  Tree a = Tree::element("a", kids);
  Tree b = Tree::element("a", {Tree::string("x"), Tree::boolean(true)});
  CHECK(value_eq(a, b));
  CHECK_FALSE(value_eq(a, Tree::element("b", kids)));
  CHECK_FALSE(value_eq(Tree::string("true"), Tree::boolean(true)));
  CHECK(a.kids().size() == 2);
  CHECK(children_of(Tree::string("x")).empty());
  CHECK(value_size({a, Tree::string("y")}) == 4);
}

TEST_CASE("native value syntax prints and parses") {
  const char* cases[] = {"()", "a[]", "a[b[],\"x\",true]", "a[],b[c[false]],\"q\""};
  for (const char* text : cases) {
    Forest v = parse_value(text);
    CHECK(to_string(v) == text);
    CHECK(value_eq(parse_value(to_string(v)), v));
  }
  CHECK(to_string(parse_value("\"a\\\"b\"")) == "\"a\\\"b\"");
  CHECK_THROWS_AS(parse_value("a[b"), Error);
}

TEST_CASE("concat and for_each keep document order") {
  Forest v = parse_value("a[],b[]");
  Forest w = concat(v, parse_value("c[]"));
  CHECK(to_string(w) == "a[],b[],c[]");
  Forest doubled = for_each(w, [](const Tree& t) { return Forest{t, t}; });
  CHECK(to_string(doubled) == "a[],a[],b[],b[],c[],c[]");
}

TEST_CASE("xml reader accepts elements and text") {
  Forest v = parse_xml("<?xml version=\"1.0\"?>\n<db>\n  <book><title>A &amp; B</title></book>\n  <empty/>\n</db>");
  CHECK(to_string(v) == "db[book[title[\"A & B\"]],empty[]]");
  CHECK(to_string(parse_xml("<a>&#65;&lt;</a>")) == "a[\"A<\"]");
}

TEST_CASE("xml reader rejects what the data model cannot hold") {
  for (const char* bad : {"<a x=\"1\"/>", "<a><!-- c --></a>", "<a><![CDATA[x]]></a>", "<!DOCTYPE a><a/>",
                          "<a><?pi x?></a>", "<a></b>", "<a>", "<p:a/>"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_xml(bad), Error);
  }
}

TEST_CASE("xml writer is byte-stable and round-trips") {
  Forest v = parse_value("db[book[title[\"<T>\"],year[]]]");
  std::string xml = write_xml(v);
  CHECK(xml == "<db><book><title>&lt;T&gt;</title><year/></book></db>");
  CHECK(write_xml(parse_xml(xml)) == xml);
  CHECK_THROWS_AS(write_xml(parse_value("a[true]")), Error);
}

TEST_CASE("document wrapping") {
  Forest content = parse_value("db[]");
  Tree d = wrap_document(content);
  CHECK(d.label() == kDocumentLabel);
  CHECK(value_eq(unwrap_document({d}), content));
  CHECK(value_eq(unwrap_document(content), content));
}
