#include "flux/value_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "flux/error.hpp"
#include "flux/syntax.hpp"

namespace flux {

namespace {

class XmlReader {
public:
  explicit XmlReader(std::string_view src) : src_(src) {}

  Forest document() {
    skip_ws();
    if (starts("<?xml")) {
      std::size_t end = src_.find("?>", pos_);
      if (end == std::string_view::npos) fail("unterminated XML declaration");
      advance(end + 2 - pos_);
    }
    Forest out = content();
    if (pos_ < src_.size()) fail("unexpected closing tag at top level");
    return out;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw Error(ErrorKind::Syntax, msg, {line_, col_}); }

  bool starts(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

  void advance(std::size_t n) {
    for (std::size_t k = 0; k < n && pos_ < src_.size(); ++k, ++pos_) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance(1);
  }

  // Reads items until a closing tag or end of input.
  Forest content() {
    Forest out;
    std::string text;
    auto flush = [&] {
      bool blank = true;
      for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (!blank) out.push_back(Tree::string(text));
      text.clear();
    };
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '<') {
        if (starts("</")) break;
        if (starts("<!--")) fail("XML comments are not supported");
        if (starts("<![CDATA[")) fail("CDATA sections are not supported");
        if (starts("<!")) fail("DOCTYPE and other declarations are not supported");
        if (starts("<?")) fail("processing instructions are not supported");
        flush();
        out.push_back(element());
      } else if (c == '&') {
        text += entity();
      } else {
        text += c;
        advance(1);
      }
    }
    flush();
    return out;
  }

  std::string name() {
    std::size_t start = pos_;
    if (pos_ >= src_.size() || !(std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      fail("expected an element name");
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' || src_[pos_] == '-'))
      advance(1);
    if (pos_ < src_.size() && (src_[pos_] == ':' || src_[pos_] == '.'))
      fail("element names with ':' or '.' are not supported");
    return std::string(src_.substr(start, pos_ - start));
  }

  Tree element() {
    advance(1);  // '<'
    std::string n = name();
    skip_ws();
    if (starts("/>")) {
      advance(2);
      return Tree::element(n, {});
    }
    if (!starts(">")) fail("attributes are not supported (element " + n + ")");
    advance(1);
    Forest kids = content();
    if (!starts("</")) fail("missing closing tag for " + n);
    advance(2);
    std::string closing = name();
    if (closing != n) fail("closing tag " + closing + " does not match " + n);
    skip_ws();
    if (!starts(">")) fail("expected '>'");
    advance(1);
    return Tree::element(n, std::move(kids));
  }

  static void put_utf8(std::string& out, unsigned long cp) {
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      out += static_cast<char>(0xC0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
      out += static_cast<char>(0xE0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (cp >> 18));
      out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    }
  }

  std::string entity() {
    std::size_t end = src_.find(';', pos_);
    if (end == std::string_view::npos || end - pos_ > 12) fail("malformed entity reference");
    std::string_view ref = src_.substr(pos_ + 1, end - pos_ - 1);
    std::string out;
    if (ref == "lt") out = "<";
    else if (ref == "gt") out = ">";
    else if (ref == "amp") out = "&";
    else if (ref == "quot") out = "\"";
    else if (ref == "apos") out = "'";
    else if (!ref.empty() && ref[0] == '#') {
      bool hex = ref.size() > 1 && (ref[1] == 'x' || ref[1] == 'X');
      std::string digits(ref.substr(hex ? 2 : 1));
      if (digits.empty()) fail("malformed character reference");
      unsigned long cp = 0;
      try {
        std::size_t used = 0;
        cp = std::stoul(digits, &used, hex ? 16 : 10);
        if (used != digits.size()) fail("malformed character reference");
      } catch (const std::logic_error&) {
        fail("malformed character reference");
      }
      if (cp == 0 || cp > 0x10FFFF) fail("character reference out of range");
      put_utf8(out, cp);
    } else {
      fail("unknown entity &" + std::string(ref) + ";");
    }
    advance(end + 1 - pos_);
    return out;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

void escape(std::ostream& os, const std::string& s) {
  for (char c : s) {
    switch (c) {
      case '<': os << "&lt;"; break;
      case '>': os << "&gt;"; break;
      case '&': os << "&amp;"; break;
      default: os << c;
    }
  }
}

void write(std::ostream& os, const Forest& v) {
  for (const Tree& t : v) {
    switch (t.kind) {
      case Tree::Kind::String: escape(os, t.text); break;
      case Tree::Kind::Bool: throw Error(ErrorKind::Io, "boolean values cannot be written as XML");
      case Tree::Kind::Element:
        if (t.kids().empty()) {
          os << '<' << t.text << "/>";
        } else {
          os << '<' << t.text << '>';
          write(os, t.kids());
          os << "</" << t.text << '>';
        }
        break;
    }
  }
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

Forest parse_xml(std::string_view text) { return XmlReader(text).document(); }

std::string write_xml(const Forest& v) {
  std::ostringstream os;
  write(os, v);
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  out << data;
  if (!out) throw Error(ErrorKind::Io, "failed writing " + path);
}

Forest load_value(const std::string& path) {
  std::string text = read_file(path);
  try {
    return ends_with(path, ".xml") ? parse_xml(text) : parse_value(text);
  } catch (Error& e) {
    if (e.context.empty()) e.context = "in " + path;
    throw;
  }
}

void save_value(const std::string& path, const Forest& v) {
  write_file(path, ends_with(path, ".xml") ? write_xml(v) : to_string(v) + "\n");
}

Tree wrap_document(const Forest& content) { return Tree::element(kDocumentLabel, content); }

Forest unwrap_document(const Forest& v) {
  if (v.size() == 1 && v[0].is_element() && v[0].label() == kDocumentLabel) return v[0].kids();
  return v;
}

}  // namespace flux
