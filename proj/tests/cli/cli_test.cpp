#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_driver.hpp"
#include "doctest.h"
#include "flux/syntax.hpp"
#include "flux/type_algebra.hpp"
#include "flux/value_io.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using flux::cli::run_cli;

namespace {

struct Result {
  int code = 0;
  std::string out, err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class Scratch {
public:
  Scratch() {
    dir_ = fs::temp_directory_path() / ("flux_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }

  std::string put(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
  static inline int counter_ = 0;
  fs::path dir_;
};

std::string sample(const std::string& name) { return std::string(FLUX_SAMPLES_DIR) + "/bookstore/" + name; }

}  // namespace

TEST_CASE("check prints the bookstore U1 type") {
  Result r = cli({"check", "--schema", sample("db.schema"), "--script", sample("u1.flux")});
  CHECK(r.code == 0);
  CHECK(r.out == "db[books[],authors[]]\n");
}

TEST_CASE("exit codes follow the diagnostic class") {
  Scratch s;
  std::string schema = s.put("s.schema", "schema db[a[string]];");
  CHECK(cli({"check", "--schema", schema, "--script", s.put("bad.flux", "DELETE")}).code == 1);
  CHECK(cli({"check", "--schema", schema, "--script", s.path("missing.flux")}).code == 1);
  CHECK(cli({"check", "--schema", schema, "--script", s.put("t.flux", "RENAME db/a/text() TO b")}).code == 2);
  CHECK(cli({"check", "--schema", schema, "--script", s.put("ok.flux", "DELETE db/a")}).code == 0);
  CHECK(cli({"frobnicate"}).code == 1);

  // rename on a text node is stuck at run time.
  std::string input = s.put("in.val", "db[a[\"x\"]]");
  std::string stuck = s.put("stuck.flux", "children [iter [db? children [iter [a? children [iter [rename b]]]]]]");
  Result r = cli({"run", "--schema", schema, "--script", stuck, "--core", "--input", input, "--unchecked"});
  CHECK(r.code == 3);
  CHECK(r.err.find("Stuck") != std::string::npos);

  std::string loop = s.put("loop.core", "procedure f() : () => () = f();\nchildren [f()]");
  Result fuel = cli({"run", "--schema", s.put("e.schema", "schema ();"), "--script", loop, "--core", "--input",
                     s.put("e.val", "()"), "--fuel", "500"});
  CHECK(fuel.code == 3);
}

TEST_CASE("run updates a document and is deterministic") {
  Scratch s;
  std::string doc = s.put("db.val",
                          "db[books[book[author[\"Charles Dickens\"],title[\"A Tale of Two Cities\"],year[\"1858\"]]],"
                          "authors[]]");
  std::string schema = s.put("db.schema",
                             "schema db[books[book[author[string],title[string],year[string]]*],"
                             "authors[author[name[string],born[string],died[string]]*]];");
  std::vector<std::string> args = {"run", "--schema", schema, "--script", sample("u3.flux"), "--input", doc};
  Result a = cli(args), b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("year[\"1859\"]") != std::string::npos);

  std::string out1 = s.path("o1.xml"), out2 = s.path("o2.xml");
  std::string xml = s.put("db.xml", flux::write_xml(flux::parse_value(flux::read_file(doc))));
  CHECK(cli({"run", "--schema", schema, "--script", sample("u3.flux"), "--input", xml, "--output", out1}).code == 0);
  CHECK(cli({"run", "--schema", schema, "--script", sample("u3.flux"), "--input", xml, "--output", out2}).code == 0);
  CHECK(flux::read_file(out1) == flux::read_file(out2));
  CHECK(flux::read_file(out1).find("<year>1859</year>") != std::string::npos);
}

TEST_CASE("run output is a member of the checked type") {
  Scratch s;
  std::string schema = s.put("s.schema", "schema db[a[string]*];");
  std::string script = s.put("u.flux", "INSERT AFTER db/a VALUE b[]");
  std::string result_schema = s.path("out.schema");
  REQUIRE(cli({"check", "--schema", schema, "--script", script, "--output", result_schema}).code == 0);
  std::string out = s.path("out.val");
  REQUIRE(cli({"run", "--schema", schema, "--script", script, "--input", s.put("in.val", "db[a[\"1\"],a[\"2\"]]"),
               "--output", out})
              .code == 0);
  flux::Schema res = flux::parse_schema(flux::read_file(result_schema));
  CHECK(flux::member(flux::parse_value(flux::read_file(out)), res.root, res.sig));
}

TEST_CASE("run rejects inputs outside the schema unless unchecked") {
  Scratch s;
  std::string schema = s.put("s.schema", "schema db[a[]];");
  std::string script = s.put("u.flux", "DELETE db/a");
  std::string input = s.put("in.val", "db[b[]]");
  CHECK(cli({"run", "--schema", schema, "--script", script, "--input", input}).code == 2);
  CHECK(cli({"run", "--schema", schema, "--script", script, "--input", input, "--unchecked"}).code == 0);
}

TEST_CASE("normalize emits re-parsable core syntax") {
  Scratch s;
  Result r = cli({"normalize", "--script", s.put("d.flux", "DELETE books")});
  CHECK(r.code == 0);
  CHECK(r.out == "children [iter [books? delete]]\n");
  Result again = cli({"normalize", "--core", "--script", s.put("d.core", r.out)});
  CHECK(again.out == r.out);
}

TEST_CASE("analyze reports dead code") {
  Scratch s;
  std::string schema = s.put("s.schema", "schema db[a[]];");
  Result dead = cli({"analyze", "--schema", schema, "--script", s.put("x.flux", "DELETE db/zzz")});
  CHECK(dead.code == 0);
  CHECK(dead.out.find("path-error at 1:") != std::string::npos);
  Result clean = cli({"analyze", "--schema", schema, "--script", s.put("y.flux", "DELETE db/a")});
  CHECK(clean.code == 0);
  CHECK(clean.out.empty());
  Result opt = cli({"analyze", "--schema", schema, "--core", "--optimize", "--script",
                    s.put("z.core", "children [iter [db? children [iter [b? delete]]]]")});
  CHECK(opt.out.find("skip") != std::string::npos);
}

TEST_CASE("structured output") {
  Scratch s;
  std::string schema = s.put("s.schema", "schema db[a[string]];");
  Result r = cli({"check", "--json", "--schema", schema, "--script", s.put("t.flux", "RENAME db/a/text() TO b")});
  CHECK(r.code == 2);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["diagnostics"].is_array());
  REQUIRE(j["diagnostics"].size() == 1);
  auto d = j["diagnostics"][0];
  CHECK(d["class"] == "type");
  CHECK(d["line"] == 1);
  CHECK(d["kind"].is_string());
  Result ok = cli({"check", "--json", "--schema", schema, "--script", s.put("u.flux", "DELETE db/a")});
  auto k = nlohmann::json::parse(ok.out);
  CHECK(k["type"] == "db[]");
}

TEST_CASE("schema search path") {
  Scratch s;
  s.put("found.schema", "schema db[];");
  std::string dir = fs::path(s.path("found.schema")).parent_path().string();
  ::setenv("FLUX_SCHEMA_PATH", dir.c_str(), 1);
  Result r = cli({"check", "--schema", "found.schema", "--script", sample("u1.flux")});
  ::unsetenv("FLUX_SCHEMA_PATH");
  CHECK(r.code == 0);
}

TEST_CASE("the installed binary maps exit codes") {
  Scratch s;
  std::string bad = s.put("bad.flux", "DELETE");
  std::string cmd = std::string(FLUX_BINARY) + " check --schema " + sample("db.schema") + " --script " + bad +
                    " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 1);
}
