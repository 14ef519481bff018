#include "cayley/serialize.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "cayley/errors.hpp"
#include "cayley/scan.hpp"

namespace cayley {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json encode_elem(const Elem& e) {
  if (e.is_int())
    return e.as_int();
  ordered_json arr = ordered_json::array();
  for (const Elem& m : e.as_seq())
    arr.push_back(encode_elem(m));
  return arr;
}

Elem decode_elem(const ordered_json& j, const std::string& where) {
  if (j.is_number_integer()) {
    const std::int64_t v = j.get<std::int64_t>();
    if (v < 0)
      throw malformed_document_error(where + ": negative element value");
    return Elem(v);
  }
  if (j.is_array()) {
    if (j.empty())
      throw malformed_document_error(where + ": empty sequence element");
    std::vector<Elem> seq;
    seq.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
      seq.push_back(decode_elem(j[i], where + "[" + std::to_string(i) + "]"));
    return Elem(std::move(seq));
  }
  throw malformed_document_error(where + ": element must be an integer or an array");
}

} // namespace

std::string encode_document(const RawTable& t) {
  const auto elements = t.elements();
  const auto map = scan::element_index_map(elements);
  const int n = t.order();

  ordered_json doc;
  doc["format_version"] = kDocumentFormatVersion;
  ordered_json elems = ordered_json::array();
  for (const Elem& e : elements)
    elems.push_back(encode_elem(e));
  doc["elements"] = std::move(elems);

  ordered_json table = ordered_json::array();
  for (int i = 0; i < n; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < n; ++j) {
      auto it = map.find(t.entry(i, j));
      if (it == map.end())
        throw not_closed_error("encode: entry (" + std::to_string(i) + "," +
                               std::to_string(j) + ") = " + t.entry(i, j).str() +
                               " is outside the element list and cannot be indexed");
      row.push_back(it->second);
    }
    table.push_back(std::move(row));
  }
  doc["table"] = std::move(table);

  return doc.dump() + "\n";
}

RawTable decode_document(const std::string& bytes) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw malformed_document_error(std::string("document: ") + e.what());
  }
  if (!doc.is_object())
    throw malformed_document_error("document: top level must be an object");
  if (!doc.contains("format_version") || !doc["format_version"].is_number_integer() ||
      doc["format_version"].get<int>() != kDocumentFormatVersion)
    throw malformed_document_error("document: format_version must be " +
                                   std::to_string(kDocumentFormatVersion));
  if (!doc.contains("elements") || !doc["elements"].is_array() || doc["elements"].empty())
    throw malformed_document_error("document: elements must be a non-empty array");
  if (!doc.contains("table") || !doc["table"].is_array())
    throw malformed_document_error("document: table must be an array");

  std::vector<Elem> elements;
  for (std::size_t i = 0; i < doc["elements"].size(); ++i)
    elements.push_back(decode_elem(doc["elements"][i], "elements[" + std::to_string(i) + "]"));

  const std::size_t n = elements.size();
  if (doc["table"].size() != n)
    throw malformed_document_error("document: table must have one row per element");

  std::vector<std::vector<Elem>> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = doc["table"][i];
    const std::string where = "table[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != n)
      throw malformed_document_error("document: " + where + " must have " +
                                     std::to_string(n) + " entries");
    std::vector<Elem> out_row;
    out_row.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (!row[j].is_number_integer())
        throw malformed_document_error("document: " + where + "[" + std::to_string(j) +
                                       "] must be an element index");
      const std::int64_t k = row[j].get<std::int64_t>();
      if (k < 0 || static_cast<std::size_t>(k) >= n)
        throw malformed_document_error("document: " + where + "[" + std::to_string(j) +
                                       "] index " + std::to_string(k) + " is out of range");
      out_row.push_back(elements[k]);
    }
    rows.push_back(std::move(out_row));
  }
  return RawTable(std::move(rows));
}

void save_group(const RawTable& t, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw error("cannot open " + path.string() + " for writing");
  out << encode_document(t);
  if (!out)
    throw error("write to " + path.string() + " failed");
}

RawTable load_group(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw error("cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_document(bytes);
}

} // namespace cayley
