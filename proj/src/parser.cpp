// Lexer and recursive descent parsers for types, values, queries, core
// statements and source statements.

#include <algorithm>
#include <cctype>
#include <sstream>

#include "flux/source.hpp"
#include "flux/syntax.hpp"

namespace flux {

namespace {

enum class Tok {
  End,
  Name,
  Var,
  Str,
  LParen,
  RParen,
  LBrack,
  RBrack,
  LBrace,
  RBrace,
  Comma,
  Semi,
  Bar,
  Star,
  Plus,
  Quest,
  Slash,
  DSlash,
  DColon,
  Colon,
  Assign,
  Eq,
  Arrow,
  Dot,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Span span;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Name: return "'" + t.text + "'";
    case Tok::Var: return "$" + t.text;
    case Tok::Str: return "string literal";
    default: return "'" + t.text + "'";
  }
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool is_stmt_keyword(const std::string& kw) {
  static const char* const kKeywords[] = {"skip", "delete", "insert", "rename",   "if",   "let",  "snapshot",
                                          "left", "right",  "children", "iter", "node", "text", "procedure"};
  return std::find(std::begin(kKeywords), std::end(kKeywords), kw) != std::end(kKeywords);
}

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'; }

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (true) {
    while (i < src.size()) {
      if (std::isspace(static_cast<unsigned char>(src[i]))) {
        advance(1);
      } else if (src.substr(i, 2) == "(*") {
        Span start{line, col};
        int depth = 0;
        do {
          if (i >= src.size()) throw Error(ErrorKind::Syntax, "unterminated comment", start);
          if (src.substr(i, 2) == "(*") {
            ++depth;
            advance(2);
          } else if (src.substr(i, 2) == "*)") {
            --depth;
            advance(2);
          } else {
            advance(1);
          }
        } while (depth > 0);
      } else {
        break;
      }
    }
    Token t;
    t.span = {line, col};
    if (i >= src.size()) {
      out.push_back(t);
      return out;
    }
    char c = src[i];
    if (name_start(c)) {
      std::size_t j = i;
      while (j < src.size() && name_char(src[j])) ++j;
      t.kind = Tok::Name;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (c == '$') {
      std::size_t j = i + 1;
      if (j >= src.size() || !name_start(src[j])) throw Error(ErrorKind::Syntax, "expected a variable name after $", t.span);
      while (j < src.size() && name_char(src[j])) ++j;
      t.kind = Tok::Var;
      t.text = std::string(src.substr(i + 1, j - i - 1));
      advance(j - i);
    } else if (c == '"') {
      std::string s;
      advance(1);
      while (true) {
        if (i >= src.size()) throw Error(ErrorKind::Syntax, "unterminated string literal", t.span);
        char d = src[i];
        if (d == '"') {
          advance(1);
          break;
        }
        if (d == '\\') {
          if (i + 1 >= src.size()) throw Error(ErrorKind::Syntax, "unterminated string literal", t.span);
          char e = src[i + 1];
          switch (e) {
            case 'n': s += '\n'; break;
            case 't': s += '\t'; break;
            case '"': s += '"'; break;
            case '\\': s += '\\'; break;
            default: throw Error(ErrorKind::Syntax, std::string("unknown escape \\") + e, {line, col});
          }
          advance(2);
        } else {
          s += d;
          advance(1);
        }
      }
      t.kind = Tok::Str;
      t.text = std::move(s);
    } else {
      auto two = src.substr(i, 2);
      if (two == "::") t.kind = Tok::DColon, t.text = "::";
      else if (two == ":=") t.kind = Tok::Assign, t.text = ":=";
      else if (two == "=>") t.kind = Tok::Arrow, t.text = "=>";
      else if (two == "//") t.kind = Tok::DSlash, t.text = "//";
      if (!t.text.empty()) {
        advance(2);
      } else {
        switch (c) {
          case '(': t.kind = Tok::LParen; break;
          case ')': t.kind = Tok::RParen; break;
          case '[': t.kind = Tok::LBrack; break;
          case ']': t.kind = Tok::RBrack; break;
          case '{': t.kind = Tok::LBrace; break;
          case '}': t.kind = Tok::RBrace; break;
          case ',': t.kind = Tok::Comma; break;
          case ';': t.kind = Tok::Semi; break;
          case '|': t.kind = Tok::Bar; break;
          case '*': t.kind = Tok::Star; break;
          case '+': t.kind = Tok::Plus; break;
          case '?': t.kind = Tok::Quest; break;
          case '/': t.kind = Tok::Slash; break;
          case ':': t.kind = Tok::Colon; break;
          case '=': t.kind = Tok::Eq; break;
          case '.': t.kind = Tok::Dot; break;
          default:
            throw Error(ErrorKind::Syntax, std::string("unexpected character '") + c + "'", t.span);
        }
        t.text = std::string(1, c);
        advance(1);
      }
    }
    out.push_back(std::move(t));
  }
}

class Parser {
public:
  Parser(std::string_view src, ParseOptions opts) : toks_(lex(src)), opts_(opts) {}

  // ---- helpers -------------------------------------------------------------

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at(Tok k, std::size_t ahead = 0) const { return peek(ahead).kind == k; }
  bool at_kw(std::string_view kw, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Name && lower(peek(ahead).text) == kw;
  }
  Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& expected) const {
    throw Error(ErrorKind::Syntax, "expected " + expected + " but found " + describe(peek()), peek().span);
  }

  Token expect(Tok k, const char* what) {
    if (!at(k)) fail(what);
    return take();
  }

  void expect_kw(std::string_view kw) {
    if (!at_kw(kw)) fail("'" + std::string(kw) + "'");
    take();
  }

  bool accept(Tok k) {
    if (!at(k)) return false;
    take();
    return true;
  }

  bool accept_kw(std::string_view kw) {
    if (!at_kw(kw)) return false;
    take();
    return true;
  }

  void finish() {
    if (at(Tok::DSlash)) throw Error(ErrorKind::Syntax, "the descendant axis // is not supported", peek().span);
    if (!at(Tok::End)) fail("end of input");
  }

  // ---- types ---------------------------------------------------------------

  Type type() {
    Type t = seq_type();
    while (accept(Tok::Bar)) t = t_alt(t, seq_type());
    return t;
  }

  // Alternatives of postfix types; sequences need parentheses. Used where a
  // comma separates list items.
  Type list_type() {
    Type t = postfix_type();
    while (accept(Tok::Bar)) t = t_alt(t, postfix_type());
    return t;
  }

  Type seq_type() {
    Type t = postfix_type();
    while (accept(Tok::Comma)) t = t_seq(t, postfix_type());
    return t;
  }

  Type postfix_type() {
    Type t = primary_type();
    while (true) {
      if (accept(Tok::Star)) t = t_star(t);
      else if (accept(Tok::Plus)) t = t_plus(t);
      else if (accept(Tok::Quest)) t = t_opt(t);
      else return t;
    }
  }

  Type primary_type() {
    if (accept(Tok::LParen)) {
      if (accept(Tok::RParen)) return t_empty();
      Type t = type();
      expect(Tok::RParen, "')'");
      return t;
    }
    if (!at(Tok::Name)) fail("a type");
    Token n = take();
    if (accept(Tok::LBrack)) {
      if (accept(Tok::RBrack)) return t_elem(n.text);
      Type body = type();
      expect(Tok::RBrack, "']'");
      return t_elem(n.text, body);
    }
    if (n.text == "string") return t_string();
    if (n.text == "bool") return t_bool();
    return t_var(n.text);
  }

  Schema schema() {
    Schema s;
    while (at_kw("type")) {
      Span sp = take().span;
      Token n = expect(Tok::Name, "a type name");
      expect(Tok::Eq, "'='");
      if (s.sig.defs.count(n.text)) throw Error(ErrorKind::Syntax, "type " + n.text + " is defined twice", sp);
      s.sig.defs[n.text] = type();
      accept(Tok::Semi);
    }
    expect_kw("schema");
    s.root = type();
    accept(Tok::Semi);
    finish();
    return s;
  }

  // ---- values --------------------------------------------------------------

  Forest value_forest() {
    Forest f;
    if (at(Tok::LParen) && at(Tok::RParen, 1)) {
      take();
      take();
      return f;
    }
    f.push_back(value_tree());
    while (accept(Tok::Comma)) {
      if (at(Tok::LParen) && at(Tok::RParen, 1)) {
        take();
        take();
        continue;
      }
      f.push_back(value_tree());
    }
    return f;
  }

  Tree value_tree() {
    if (at(Tok::Str)) return Tree::string(take().text);
    if (!at(Tok::Name)) fail("a value");
    Token n = take();
    if (accept(Tok::LBrack)) {
      Forest kids;
      if (!at(Tok::RBrack)) kids = value_forest();
      expect(Tok::RBrack, "']'");
      return Tree::element(n.text, std::move(kids));
    }
    if (n.text == "true") return Tree::boolean(true);
    if (n.text == "false") return Tree::boolean(false);
    throw Error(ErrorKind::Syntax, "expected '[' after element name " + n.text, peek().span);
  }

  // ---- queries -------------------------------------------------------------

  QueryPtr expr() {
    Span sp = peek().span;
    QueryPtr e = single();
    while (accept(Tok::Comma)) e = with_span(q_seq(e, single()), sp);
    return e;
  }

  QueryPtr single() {
    Span sp = peek().span;
    if (at_kw("for") && at(Tok::Var, 1)) {
      take();
      std::string x = take().text;
      expect_kw("in");
      QueryPtr in = single();
      expect_kw("return");
      scope_.push_back({x, true});
      QueryPtr body = single();
      scope_.pop_back();
      return with_span(q_for(x, in, body), sp);
    }
    if (at_kw("let") && at(Tok::Var, 1)) {
      take();
      std::string x = take().text;
      expect(Tok::Assign, "':='");
      QueryPtr bound = single();
      expect_kw("return");
      scope_.push_back({x, false});
      QueryPtr body = single();
      scope_.pop_back();
      return with_span(q_let(x, bound, body), sp);
    }
    if (at_kw("if") && !at(Tok::LBrack, 1)) {
      take();
      QueryPtr c = single();
      expect_kw("then");
      QueryPtr a = single();
      expect_kw("else");
      QueryPtr b = single();
      return with_span(q_if(c, a, b), sp);
    }
    if (at_kw("transform") && !at(Tok::LBrack, 1)) {
      if (!opts_.enable_transform)
        throw Error(ErrorKind::TransformDisabled, "transform queries need --enable-transform", sp);
      take();
      QueryPtr e = single();
      expect_kw("by");
      expect(Tok::LBrace, "'{'");
      StmtPtr s = stmt();
      expect(Tok::RBrace, "'}'");
      return with_span(q_transform(e, s), sp);
    }
    QueryPtr l = path_expr();
    if (accept(Tok::Eq)) return with_span(q_eq(l, path_expr()), sp);
    return l;
  }

  bool is_tree_var(const std::string& x) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == x) return it->second;
    return false;
  }

  std::string fresh_var() { return "_" + std::to_string(++fresh_); }

  QueryPtr child_of(const QueryPtr& e, Span sp) {
    if (e->kind == Query::Kind::TreeVar) return with_span(q_child(e->name), sp);
    std::string y = fresh_var();
    return with_span(q_for(y, e, q_child(y)), sp);
  }

  QueryPtr path_expr() {
    QueryPtr e = primary_query();
    while (true) {
      Span sp = peek().span;
      if (accept(Tok::DColon)) {
        Token n = expect(Tok::Name, "a label after '::'");
        e = with_span(q_filter(e, n.text), sp);
      } else if (at(Tok::Slash)) {
        take();
        if (at_kw("child")) {
          take();
          e = child_of(e, sp);
        } else if (at_kw("node") && at(Tok::LParen, 1)) {
          take();
          expect(Tok::LParen, "'('");
          expect(Tok::RParen, "')'");
          e = child_of(e, sp);
        } else if (at(Tok::Name) && !at(Tok::LParen, 1)) {
          Token n = take();
          e = with_span(q_filter(child_of(e, sp), n.text), sp);
        } else {
          fail("'child', 'node()' or a label after '/'");
        }
      } else if (at(Tok::DSlash)) {
        throw Error(ErrorKind::Syntax, "the descendant axis // is not supported", sp);
      } else {
        return e;
      }
    }
  }

  QueryPtr primary_query() {
    Span sp = peek().span;
    if (accept(Tok::LParen)) {
      if (accept(Tok::RParen)) return with_span(q_empty(), sp);
      QueryPtr e = expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (at(Tok::Str)) return with_span(q_str(take().text), sp);
    if (at(Tok::Var)) {
      std::string x = take().text;
      return with_span(is_tree_var(x) ? q_tvar(x) : q_fvar(x), sp);
    }
    if (at(Tok::Name)) {
      if (at(Tok::LBrack, 1)) {
        std::string n = take().text;
        take();
        if (accept(Tok::RBrack)) return with_span(q_elem(n, q_empty()), sp);
        QueryPtr body = expr();
        expect(Tok::RBrack, "']'");
        return with_span(q_elem(n, body), sp);
      }
      if (at_kw("true")) return take(), with_span(q_bool(true), sp);
      if (at_kw("false")) return take(), with_span(q_bool(false), sp);
    }
    fail("a query expression");
  }

  // ---- core statements -----------------------------------------------------

  StmtPtr stmt() {
    Span sp = peek().span;
    StmtPtr s = unit();
    while (accept(Tok::Semi)) {
      if (at(Tok::End) || at(Tok::RBrace) || at(Tok::RBrack) || at(Tok::RParen)) break;
      s = with_span(s_seq(s, unit()), sp);
    }
    return s;
  }

  std::optional<Test> test_head() {
    if (at(Tok::Name) && at(Tok::Quest, 1)) {
      Test t = Test::named(take().text);
      take();
      return t;
    }
    if ((at_kw("node") || at_kw("text")) && at(Tok::LParen, 1) && at(Tok::RParen, 2) && at(Tok::Quest, 3)) {
      bool node = at_kw("node");
      pos_ += 4;
      return node ? Test::node() : Test::text();
    }
    if (at(Tok::Star) && at(Tok::Quest, 1)) {
      pos_ += 2;
      return Test::node();
    }
    return std::nullopt;
  }

  StmtPtr bracketed() {
    expect(Tok::LBrack, "'['");
    StmtPtr s = stmt();
    expect(Tok::RBrack, "']'");
    return s;
  }

  StmtPtr unit() {
    Span sp = peek().span;
    if (auto phi = test_head()) return with_span(s_test(*phi, unit()), sp);
    if (accept(Tok::LBrace)) {
      StmtPtr s = stmt();
      expect(Tok::RBrace, "'}'");
      return s;
    }
    if (accept(Tok::LParen)) {
      StmtPtr s = stmt();
      expect(Tok::RParen, "')'");
      return s;
    }
    if (!at(Tok::Name)) fail("a statement");
    std::string kw = lower(peek().text);
    if (at(Tok::LParen, 1) && !is_stmt_keyword(kw)) {
      std::string p = take().text;
      take();
      std::vector<QueryPtr> args;
      if (!at(Tok::RParen)) {
        args.push_back(single());
        while (accept(Tok::Comma)) args.push_back(single());
      }
      expect(Tok::RParen, "')'");
      return with_span(s_call(p, std::move(args)), sp);
    }
    if (kw == "skip") return take(), with_span(s_skip(), sp);
    if (kw == "delete") return take(), with_span(s_delete(), sp);
    if (kw == "insert") {
      take();
      return with_span(s_insert(expr()), sp);
    }
    if (kw == "rename") {
      take();
      return with_span(s_rename(expect(Tok::Name, "a label").text), sp);
    }
    if (kw == "if") {
      take();
      QueryPtr c = single();
      expect_kw("then");
      StmtPtr a = unit();
      expect_kw("else");
      StmtPtr b = unit();
      return with_span(s_if(c, a, b), sp);
    }
    if (kw == "let") {
      take();
      std::string x = expect(Tok::Var, "a variable").text;
      expect(Tok::Assign, "':='");
      QueryPtr e = single();
      expect_kw("in");
      scope_.push_back({x, false});
      StmtPtr body = unit();
      scope_.pop_back();
      return with_span(s_let(x, e, body), sp);
    }
    if (kw == "snapshot") {
      take();
      std::string x = expect(Tok::Var, "a variable").text;
      expect_kw("in");
      scope_.push_back({x, false});
      StmtPtr body = unit();
      scope_.pop_back();
      return with_span(s_snapshot(x, body), sp);
    }
    if (kw == "left") return take(), with_span(s_left(bracketed()), sp);
    if (kw == "right") return take(), with_span(s_right(bracketed()), sp);
    if (kw == "children") return take(), with_span(s_children(bracketed()), sp);
    if (kw == "iter") return take(), with_span(s_iter(bracketed()), sp);
    fail("a statement");
  }

  ProcDecl procedure() {
    ProcDecl p;
    p.span = peek().span;
    expect_kw("procedure");
    p.name = expect(Tok::Name, "a procedure name").text;
    if (is_stmt_keyword(lower(p.name))) throw Error(ErrorKind::Syntax, "procedure name " + p.name + " is a keyword", p.span);
    expect(Tok::LParen, "'('");
    if (!at(Tok::RParen)) {
      do {
        std::string x = expect(Tok::Var, "a parameter").text;
        expect(Tok::Colon, "':'");
        p.params.emplace_back(x, list_type());
      } while (accept(Tok::Comma));
    }
    expect(Tok::RParen, "')'");
    expect(Tok::Colon, "':'");
    p.in = type();
    expect(Tok::Arrow, "'=>'");
    p.out = type();
    expect(Tok::Eq, "'='");
    for (const auto& prm : p.params) scope_.push_back({prm.first, false});
    p.body = unit();
    scope_.resize(scope_.size() - p.params.size());
    accept(Tok::Semi);
    return p;
  }

  CoreScript core_script() {
    CoreScript cs;
    while (at_kw("procedure")) {
      Span sp = peek().span;
      ProcDecl p = procedure();
      if (cs.procs.decls.count(p.name)) throw Error(ErrorKind::Syntax, "procedure " + p.name + " is declared twice", sp);
      cs.procs.decls.emplace(p.name, std::move(p));
    }
    if (!at(Tok::End)) cs.main = stmt();
    finish();
    return cs;
  }

  // ---- source statements ---------------------------------------------------

  SStmtPtr source_stmt() {
    Span sp = peek().span;
    SStmtPtr s = source_simple(true);
    while (accept(Tok::Semi)) {
      if (at(Tok::End) || at(Tok::RBrace)) break;
      SStmtPtr rhs = source_simple(true);
      auto seq = std::make_shared<SourceStmt>(*ss_seq(s, rhs));
      seq->span = sp;
      s = seq;
    }
    return s;
  }

  SStmtPtr source_simple(bool allow_where) {
    Span sp = peek().span;
    SStmtPtr out;
    if (accept(Tok::LBrace)) {
      SStmtPtr inner = source_stmt();
      expect(Tok::RBrace, "'}'");
      out = inner;
    } else if (at_kw("if")) {
      take();
      QueryPtr c = single();
      expect_kw("then");
      out = ss_if(c, source_simple(allow_where));
    } else if (at_kw("let") && at(Tok::Var, 1)) {
      take();
      std::string x = take().text;
      expect(Tok::Assign, "':='");
      QueryPtr e = single();
      expect_kw("in");
      scope_.push_back({x, false});
      SStmtPtr body = source_simple(allow_where);
      scope_.pop_back();
      out = ss_let(x, e, body);
    } else {
      std::size_t mark = scope_.size();
      SourceUpd u = source_upd();
      QueryPtr where;
      if (allow_where && accept_kw("where")) where = single();
      scope_.resize(mark);
      out = ss_upd(std::move(u), where);
    }
    auto c = std::make_shared<SourceStmt>(*out);
    c->span = sp;
    return c;
  }

  SourceUpd source_upd() {
    Span sp = peek().span;
    using UK = SourceUpd::Kind;
    SourceUpd u;
    if (accept_kw("insert")) {
      if (accept_kw("before")) {
        u.kind = UK::InsertBefore;
      } else if (accept_kw("after")) {
        u.kind = UK::InsertAfter;
      } else {
        bool had_as = accept_kw("as");
        if (accept_kw("first")) u.kind = UK::InsertFirst;
        else if (accept_kw("last") || !had_as) u.kind = UK::InsertLast;
        else fail("'FIRST' or 'LAST'");
        expect_kw("into");
      }
      u.path = source_path();
      expect_kw("value");
      u.value = expr();
    } else if (accept_kw("delete")) {
      u.kind = accept_kw("from") ? UK::DeleteFrom : UK::Delete;
      u.path = source_path();
    } else if (accept_kw("rename")) {
      u.kind = UK::Rename;
      u.path = source_path();
      expect_kw("to");
      u.label = expect(Tok::Name, "a label").text;
    } else if (accept_kw("replace")) {
      u.kind = accept_kw("in") ? UK::ReplaceIn : UK::Replace;
      u.path = source_path();
      expect_kw("with");
      u.value = expr();
    } else if (accept_kw("update")) {
      u.kind = UK::UpdateBy;
      u.path = source_path();
      expect_kw("by");
      u.body = source_simple(false);
    } else {
      fail("an update (INSERT, DELETE, RENAME, REPLACE, UPDATE)");
    }
    u.span = sp;
    return u;
  }

  PathPtr source_path() {
    Span sp = peek().span;
    if (at(Tok::DSlash)) throw Error(ErrorKind::Syntax, "the descendant axis // is not supported", sp);
    if (at(Tok::Var) && at_kw("as", 1)) {
      std::string x = take().text;
      take();
      PathPtr rest = source_path();
      scope_.push_back({x, false});
      return spanned(p_bind(x, rest), sp);
    }
    PathPtr p = path_postfix();
    if (at(Tok::DSlash)) throw Error(ErrorKind::Syntax, "the descendant axis // is not supported", peek().span);
    if (accept(Tok::Slash)) return spanned(p_slash(p, source_path()), sp);
    return p;
  }

  PathPtr path_postfix() {
    Span sp = peek().span;
    PathPtr p = path_atom();
    while (at(Tok::LBrack)) {
      take();
      QueryPtr c = expr();
      expect(Tok::RBrack, "']'");
      p = spanned(p_filter(p, c), sp);
    }
    return p;
  }

  PathPtr path_atom() {
    Span sp = peek().span;
    if (accept(Tok::Dot)) return spanned(p_here(), sp);
    if (accept(Tok::Star)) return spanned(p_step(Test::node()), sp);
    if (accept(Tok::LParen)) {
      PathPtr p = source_path();
      expect(Tok::RParen, "')'");
      return p;
    }
    if (at(Tok::Name)) {
      if ((at_kw("node") || at_kw("text")) && at(Tok::LParen, 1)) {
        bool node = at_kw("node");
        take();
        take();
        expect(Tok::RParen, "')'");
        return spanned(node ? p_step(Test::node()) : p_step(Test::text()), sp);
      }
      return spanned(p_step(Test::named(take().text)), sp);
    }
    fail("a path");
  }

  static PathPtr spanned(const PathPtr& p, Span sp) {
    auto c = std::make_shared<SourcePath>(*p);
    c->span = sp;
    return c;
  }

private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  ParseOptions opts_;
  std::vector<std::pair<std::string, bool>> scope_;  // (name, is tree variable)
  int fresh_ = 0;
};

}  // namespace

Type parse_type(std::string_view text) {
  Parser p(text, {});
  Type t = p.type();
  p.finish();
  return t;
}

Schema parse_schema(std::string_view text) {
  Parser p(text, {});
  Schema s = p.schema();
  check_signature(s.sig);
  check_type(s.root, s.sig);
  return s;
}

Forest parse_value(std::string_view text) {
  Parser p(text, {});
  Forest f = p.value_forest();
  p.finish();
  return f;
}

QueryPtr parse_query(std::string_view text, const ParseOptions& opts) {
  Parser p(text, opts);
  QueryPtr q = p.expr();
  p.finish();
  return q;
}

StmtPtr parse_stmt(std::string_view text, const ParseOptions& opts) {
  Parser p(text, opts);
  StmtPtr s = p.stmt();
  p.finish();
  return s;
}

CoreScript parse_core_script(std::string_view text, const ParseOptions& opts) {
  Parser p(text, opts);
  return p.core_script();
}

SStmtPtr parse_source(std::string_view text, const ParseOptions& opts) {
  Parser p(text, opts);
  SStmtPtr s = p.source_stmt();
  p.finish();
  return s;
}

}  // namespace flux
