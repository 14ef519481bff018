#pragma once

#include <filesystem>
#include <string>

#include "cayley/raw_table.hpp"

namespace cayley {

/// Canonical group document: UTF-8 JSON with keys format_version, elements,
/// table (in that order), table entries as indices into elements, compact
/// separators, trailing newline. Re-encoding a decoded document is
/// byte-identical.
inline constexpr int kDocumentFormatVersion = 1;

std::string encode_document(const RawTable& t);

/// Throws malformed_document_error with field context on bad input.
RawTable decode_document(const std::string& bytes);

void save_group(const RawTable& t, const std::filesystem::path& path);
RawTable load_group(const std::filesystem::path& path);

} // namespace cayley
