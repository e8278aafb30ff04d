#include "cli_driver.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <json.hpp>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "flux/path_error.hpp"
#include "flux/sampling.hpp"
#include "flux/source.hpp"
#include "flux/source_typing.hpp"
#include "flux/syntax.hpp"
#include "flux/type_algebra.hpp"
#include "flux/update.hpp"
#include "flux/value_io.hpp"

namespace flux::cli {

namespace {

using json = nlohmann::json;

struct Config {
  std::string command;
  std::string schema;
  std::string script;
  std::string input;
  std::string output;
  bool core = false;
  bool json = false;
  bool enable_transform = false;
  bool optimize = false;
  bool unchecked = false;
  bool analyze_procedures = false;
  long long fuel = 1'000'000;
  std::uint64_t seed = 0;
};

// Everything a command needs after loading; the script is either core or
// source.
struct Loaded {
  Schema schema;
  Type input_type;
  CoreScript core;
  SStmtPtr source;
};

std::string resolve_schema(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) return path;
  const char* search = std::getenv("FLUX_SCHEMA_PATH");
  if (search && fs::path(path).is_relative()) {
    std::stringstream dirs(search);
    std::string dir;
    while (std::getline(dirs, dir, ':')) {
      if (dir.empty()) continue;
      fs::path candidate = fs::path(dir) / path;
      if (fs::exists(candidate)) return candidate.string();
    }
  }
  throw Error(ErrorKind::Io, "schema file " + path + " not found (also searched FLUX_SCHEMA_PATH)");
}

Schema load_schema(const std::string& path) {
  std::string resolved = resolve_schema(path);
  try {
    Schema s = parse_schema(read_file(resolved));
    check_signature(s.sig);
    check_type(s.root, s.sig);
    return s;
  } catch (Error& e) {
    if (e.context.empty()) e.context = "in schema " + resolved;
    throw;
  }
}

Loaded load(const Config& cfg, bool need_schema) {
  Loaded l;
  if (need_schema) {
    if (cfg.schema.empty()) throw Error(ErrorKind::Io, "--schema is required for " + cfg.command);
    l.schema = load_schema(cfg.schema);
    l.input_type = t_elem(kDocumentLabel, l.schema.root);
  }
  if (cfg.script.empty()) throw Error(ErrorKind::Io, "--script is required for " + cfg.command);
  std::string text = read_file(cfg.script);
  ParseOptions opts;
  opts.enable_transform = cfg.enable_transform;
  if (cfg.core) {
    l.core = parse_core_script(text, opts);
  } else {
    l.source = parse_source(text, opts);
  }
  return l;
}

StmtPtr core_main(const Loaded& l) {
  if (l.source) return normalize_stmt(l.source);
  return l.core.main ? l.core.main : s_skip();
}

// The document type without the synthetic root.
Type content_type(const Type& t) {
  if (t->kind == TypeNode::Kind::Element && t->name == kDocumentLabel) return t->left;
  return t;
}

struct CheckResult {
  Type type;
  std::vector<Span> unmatched;
};

CheckResult typecheck(const Loaded& l) {
  CheckResult r;
  if (l.source) {
    SourceChecker checker(l.schema.sig, l.core.procs);
    r.type = checker.check_compound({}, l.input_type, l.source);
    r.unmatched = checker.unmatched_updates();
  } else {
    check_declarations(l.core.procs, l.schema.sig);
    r.type = infer_update_type({}, Arity::Singular, l.input_type, core_main(l), l.core.procs, l.schema.sig);
  }
  if (has_flex(r.type))
    throw Error(ErrorKind::UnresolvedFlexVar, "result type " + to_string(r.type) + " mentions a placeholder");
  return r;
}

std::string class_name(ErrorClass c) {
  switch (c) {
    case ErrorClass::Syntax: return "syntax";
    case ErrorClass::Type: return "type";
    case ErrorClass::Runtime: return "runtime";
  }
  return "?";
}

int exit_for(ErrorClass c) {
  switch (c) {
    case ErrorClass::Syntax: return kSyntax;
    case ErrorClass::Type: return kType;
    case ErrorClass::Runtime: return kRuntime;
  }
  return kSyntax;
}

json diagnostic(const Error& e, const std::string& file) {
  json d;
  d["kind"] = std::string(to_string(e.kind()));
  d["class"] = class_name(classify(e.kind()));
  d["file"] = file;
  d["line"] = e.span().line;
  d["column"] = e.span().column;
  d["message"] = e.message();
  if (!e.expected.empty()) d["expected"] = e.expected;
  if (!e.found.empty()) d["found"] = e.found;
  if (!e.focus.empty()) d["focus"] = e.focus;
  if (!e.context.empty()) d["context"] = e.context;
  return d;
}

void print_diagnostic(std::ostream& err, const Error& e, const std::string& file) {
  err << file;
  if (e.span().known()) err << ':' << e.span().to_string();
  err << ": " << class_name(classify(e.kind())) << " error (" << to_string(e.kind()) << "): " << e.message() << '\n';
  if (!e.expected.empty()) err << "  expected: " << e.expected << '\n';
  if (!e.found.empty()) err << "  found:    " << e.found << '\n';
  if (!e.focus.empty()) err << "  focus:    " << e.focus << '\n';
  if (!e.context.empty()) err << "  context:  " << e.context << '\n';
}

std::string warning_text(const Span& s) {
  return "warning at " + s.to_string() + ": path selects nothing under the input type";
}

// Reported locations that are not nested under another reported location.
std::vector<int> outermost(const StmtPtr& s, const LocationSet& set) {
  std::vector<int> out;
  std::vector<const Stmt*> stack{s.get()};
  while (!stack.empty()) {
    const Stmt* cur = stack.back();
    stack.pop_back();
    if (set.count(cur->label) && cur->kind != Stmt::Kind::Skip) {
      out.push_back(cur->label);
      continue;
    }
    if (cur->b) stack.push_back(cur->b.get());
    if (cur->a) stack.push_back(cur->a.get());
  }
  return out;
}

struct PathErrorLine {
  std::string where;  // "main" or the procedure name
  Span span;
  std::string input_type;
};

std::vector<PathErrorLine> path_errors(const StmtPtr& labeled, const Analysis& a, const std::string& where) {
  std::vector<PathErrorLine> out;
  std::set<std::pair<std::pair<int, int>, std::string>> seen;
  for (int l : outermost(labeled, a.unproductive)) {
    const StmtPtr& sub = subterm_at(labeled, l);
    auto it = a.inputs.find(l);
    std::string ty = it == a.inputs.end() ? "?" : to_string(content_type(it->second));
    if (!seen.insert({{sub->span.line, sub->span.column}, ty}).second) continue;
    out.push_back({where, sub->span, ty});
  }
  return out;
}

std::string path_error_text(const PathErrorLine& p) {
  std::string text = "path-error at " + (p.span.known() ? p.span.to_string() : std::string("?")) +
                     ": subexpression is dead under input type " + p.input_type;
  if (p.where != "main") text += " (procedure " + p.where + ")";
  return text;
}

// ---- commands ---------------------------------------------------------------

int cmd_check(const Config& cfg, std::ostream& out, std::ostream& err) {
  Loaded l = load(cfg, true);
  CheckResult r = typecheck(l);
  std::string ty = to_string(simplify(content_type(r.type), true));
  if (cfg.json) {
    json j{{"command", "check"}, {"ok", true}, {"type", ty}, {"warnings", json::array()}};
    for (const Span& s : r.unmatched) j["warnings"].push_back(warning_text(s));
    out << j.dump() << '\n';
  } else {
    for (const Span& s : r.unmatched) err << cfg.script << ": " << warning_text(s) << '\n';
    out << ty << '\n';
  }
  if (!cfg.output.empty()) write_file(cfg.output, print_schema({l.schema.sig, simplify(content_type(r.type), true)}));
  return kOk;
}

int cmd_run(const Config& cfg, std::ostream& out, std::ostream&) {
  Loaded l = load(cfg, true);
  if (cfg.input.empty()) throw Error(ErrorKind::Io, "--input is required for run");
  Forest input = load_value(cfg.input);
  if (!cfg.unchecked) {
    typecheck(l);
    if (!member(input, l.schema.root, l.schema.sig)) {
      Error e(ErrorKind::TypeError, "input document is not a member of the schema root type");
      e.expected = to_string(l.schema.root);
      e.context = "in " + cfg.input;
      throw e;
    }
  }
  ExecOptions opts;
  opts.fuel = cfg.fuel;
  opts.enable_transform = cfg.enable_transform;
  Forest result = exec_update({}, {wrap_document(input)}, core_main(l), l.core.procs, opts);
  result = unwrap_document(result);
  if (!cfg.output.empty()) {
    save_value(cfg.output, result);
    if (cfg.json) out << json{{"command", "run"}, {"ok", true}, {"output", cfg.output}}.dump() << '\n';
    return kOk;
  }
  bool xml = cfg.input.size() >= 4 && cfg.input.compare(cfg.input.size() - 4, 4, ".xml") == 0;
  std::string text = xml ? write_xml(result) : to_string(result);
  if (cfg.json) {
    out << json{{"command", "run"}, {"ok", true}, {"value", text}}.dump() << '\n';
  } else {
    out << text << '\n';
  }
  return kOk;
}

int cmd_normalize(const Config& cfg, std::ostream& out, std::ostream&) {
  Loaded l = load(cfg, false);
  std::string text;
  if (l.source) {
    text = print_stmt(normalize_stmt(l.source)) + "\n";
  } else {
    text = print_core_script(l.core);
  }
  if (!cfg.output.empty()) {
    write_file(cfg.output, text);
  } else if (cfg.json) {
    out << json{{"command", "normalize"}, {"ok", true}, {"core", text}}.dump() << '\n';
  } else {
    out << text;
  }
  return kOk;
}

int cmd_analyze(const Config& cfg, std::ostream& out, std::ostream& err) {
  Loaded l = load(cfg, true);
  typecheck(l);
  StmtPtr main = label_statement(core_main(l));
  Analysis a = analyze({}, Arity::Singular, l.input_type, main, l.core.procs, l.schema.sig);
  std::vector<PathErrorLine> lines = path_errors(main, a, "main");
  CoreScript optimized = l.core;
  optimized.main = strip_labels(optimize(main, a.unproductive));
  if (cfg.analyze_procedures) {
    for (auto& [name, p] : optimized.procs.decls) {
      QueryTypeEnv env;
      for (const auto& [x, t] : p.params) env.forests[x] = t;
      StmtPtr body = label_statement(p.body);
      Analysis pa = analyze(env, Arity::Plural, p.in, body, l.core.procs, l.schema.sig);
      for (auto& line : path_errors(body, pa, name)) lines.push_back(std::move(line));
      p.body = strip_labels(optimize(body, pa.unproductive));
    }
  }
  std::string optimized_text = print_core_script(optimized);
  if (cfg.json) {
    json j{{"command", "analyze"}, {"ok", true}, {"path_errors", json::array()}};
    for (const auto& p : lines)
      j["path_errors"].push_back(
          {{"where", p.where}, {"line", p.span.line}, {"column", p.span.column}, {"input_type", p.input_type}});
    if (cfg.optimize && cfg.output.empty()) j["optimized"] = optimized_text;
    out << j.dump() << '\n';
  } else {
    for (const auto& p : lines) out << path_error_text(p) << '\n';
    if (lines.empty()) err << cfg.script << ": no path-errors\n";
    if (cfg.optimize && cfg.output.empty()) out << optimized_text;
  }
  if (cfg.optimize && !cfg.output.empty()) write_file(cfg.output, optimized_text);
  return kOk;
}

int cmd_sample(const Config& cfg, std::ostream& out, std::ostream&) {
  if (cfg.schema.empty()) throw Error(ErrorKind::Io, "--schema is required for sample");
  Schema s = load_schema(cfg.schema);
  std::mt19937_64 rng(cfg.seed);
  std::optional<Forest> v = sample_member(s.root, s.sig, rng);
  if (!v) throw Error(ErrorKind::TypeError, "the schema root type " + to_string(s.root) + " has no members");
  if (!cfg.output.empty()) {
    save_value(cfg.output, *v);
  } else {
    out << to_string(*v) << '\n';
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"flux: typed XML updates"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool with_input) {
    sub->add_option("--schema", cfg.schema, "schema file (searched in FLUX_SCHEMA_PATH when relative)");
    sub->add_option("--script", cfg.script, "update script");
    sub->add_flag("--core", cfg.core, "the script is in core syntax");
    sub->add_flag("--json", cfg.json, "machine-readable output");
    sub->add_flag("--enable-transform", cfg.enable_transform, "allow transform queries");
    if (with_input) sub->add_option("--input", cfg.input, "input document (.xml or native syntax)");
    sub->add_option("--output", cfg.output, "output file");
  };
  CLI::App* check = app.add_subcommand("check", "typecheck a script and print the result type");
  add_common(check, false);
  CLI::App* run = app.add_subcommand("run", "run a script on a document");
  add_common(run, true);
  run->add_option("--fuel", cfg.fuel, "step budget")->check(CLI::PositiveNumber);
  run->add_flag("--unchecked", cfg.unchecked, "skip typechecking and input validation");
  CLI::App* normalize = app.add_subcommand("normalize", "print the core form of a script");
  add_common(normalize, false);
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "report path-errors");
  add_common(analyze_cmd, false);
  analyze_cmd->add_flag("--optimize", cfg.optimize, "also print the script with dead parts replaced by skip");
  analyze_cmd->add_flag("--analyze-procedures", cfg.analyze_procedures, "also analyze procedure bodies");
  CLI::App* sample = app.add_subcommand("sample", "print a random document of the schema");
  sample->add_option("--schema", cfg.schema, "schema file");
  sample->add_option("--seed", cfg.seed, "random seed");
  sample->add_option("--output", cfg.output, "output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "flux: " << e.what() << '\n';
    return kSyntax;
  }

  for (CLI::App* sub : {check, run, normalize, analyze_cmd, sample})
    if (sub->parsed()) cfg.command = sub->get_name();

  const std::string file = cfg.command == "run" && cfg.script.empty() ? cfg.input : cfg.script;
  try {
    if (cfg.command == "check") return cmd_check(cfg, out, err);
    if (cfg.command == "run") return cmd_run(cfg, out, err);
    if (cfg.command == "normalize") return cmd_normalize(cfg, out, err);
    if (cfg.command == "analyze") return cmd_analyze(cfg, out, err);
    return cmd_sample(cfg, out, err);
  } catch (const Error& e) {
    if (cfg.json) {
      out << json{{"command", cfg.command}, {"ok", false}, {"diagnostics", {diagnostic(e, file)}}}.dump() << '\n';
    } else {
      print_diagnostic(err, e, file);
    }
    return exit_for(classify(e.kind()));
  } catch (const std::length_error& e) {
    err << file << ": type error: " << e.what() << '\n';
    return kType;
  }
}

}  // namespace flux::cli
