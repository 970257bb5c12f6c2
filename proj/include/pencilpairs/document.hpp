#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "pencilpairs/chern_ring.hpp"

namespace pp {

using Cell = std::variant<Int, std::string>;

enum class DocumentKind { table, records, report };
enum class OutputFormat { table, csv, json };

// Tabular payload produced by every command: a kind tag, a header, rows of
// exact integers and strings, and free-text annotations.
struct OutputDocument {
    DocumentKind kind = DocumentKind::table;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> annotations;

    bool operator==(const OutputDocument&) const = default;
};

struct DocumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string document_kind_name(DocumentKind kind);
DocumentKind document_kind_from_name(const std::string& name);

std::string format_name(OutputFormat format);
OutputFormat format_from_name(const std::string& name);

// Every row must be exactly as wide as the header.
void validate_document(const OutputDocument& doc);

// table: fixed-width columns, integers right-aligned, annotations appended.
// csv:   RFC 4180, header row, LF line endings; annotations are dropped.
// json:  single line, stable key order, integers written exactly.
std::string render(const OutputDocument& doc, OutputFormat format);

// Inverse of render(doc, json). Integers of any size are restored exactly;
// non-integer numbers are rejected.
OutputDocument parse_document(const std::string& json_text);

}  // namespace pp
