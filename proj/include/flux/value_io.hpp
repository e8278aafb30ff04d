#pragma once

#include <string>
#include <string_view>

#include "flux/value.hpp"

namespace flux {

/// Restricted XML: elements and character data only. Attributes, comments,
/// processing instructions, CDATA and DOCTYPE are rejected with a Syntax
/// error. An optional `<?xml ...?>` declaration is skipped. Whitespace-only
/// character data is dropped; the five predefined entities and numeric
/// character references are decoded.
Forest parse_xml(std::string_view text);

/// No whitespace is added. Empty elements print as `<n/>`. Throws Io for
/// boolean leaves, which have no XML form.
std::string write_xml(const Forest& v);

/// Throws Io when the file cannot be read.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view data);

/// Files ending in `.xml` are XML, everything else is native syntax.
Forest load_value(const std::string& path);
void save_value(const std::string& path, const Forest& v);

/// Label of the synthetic root that update scripts navigate from.
inline constexpr const char* kDocumentLabel = "#document";

Tree wrap_document(const Forest& content);
/// The children of a `#document` root; other forests are returned as is.
Forest unwrap_document(const Forest& v);

}  // namespace flux
