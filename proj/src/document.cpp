#include "pencilpairs/document.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

namespace pp {

std::string document_kind_name(DocumentKind kind) {
    switch (kind) {
        case DocumentKind::table:
            return "table";
        case DocumentKind::records:
            return "records";
        case DocumentKind::report:
            return "report";
    }
    throw std::logic_error("unreachable");
}

DocumentKind document_kind_from_name(const std::string& name) {
    if (name == "table") return DocumentKind::table;
    if (name == "records") return DocumentKind::records;
    if (name == "report") return DocumentKind::report;
    throw DocumentError("unknown document kind '" + name + "'");
}

std::string format_name(OutputFormat format) {
    switch (format) {
        case OutputFormat::table:
            return "table";
        case OutputFormat::csv:
            return "csv";
        case OutputFormat::json:
            return "json";
    }
    throw std::logic_error("unreachable");
}

OutputFormat format_from_name(const std::string& name) {
    if (name == "table") return OutputFormat::table;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw DocumentError("unknown output format '" + name + "': use table, csv or json");
}

void validate_document(const OutputDocument& doc) {
    for (const auto& row : doc.rows)
        if (row.size() != doc.columns.size())
            throw DocumentError("document row width " + std::to_string(row.size()) +
                                " does not match the " + std::to_string(doc.columns.size()) +
                                " columns");
}

namespace {

std::string cell_text(const Cell& cell) {
    if (const auto* n = std::get_if<Int>(&cell)) return n->str();
    return std::get<std::string>(cell);
}

void append_json_string(std::string& out, const std::string& text) {
    out += '"';
    for (char raw : text) {
        unsigned char c = static_cast<unsigned char>(raw);
        switch (c) {
            case '"':
                out += "\\\"";
                break;
            case '\\':
                out += "\\\\";
                break;
            case '\b':
                out += "\\b";
                break;
            case '\f':
                out += "\\f";
                break;
            case '\n':
                out += "\\n";
                break;
            case '\r':
                out += "\\r";
                break;
            case '\t':
                out += "\\t";
                break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += raw;
                }
        }
    }
    out += '"';
}

void append_string_array(std::string& out, const std::vector<std::string>& items) {
    out += '[';
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += ',';
        append_json_string(out, items[i]);
    }
    out += ']';
}

std::string render_json(const OutputDocument& doc) {
    std::string out = "{\"kind\":";
    append_json_string(out, document_kind_name(doc.kind));
    out += ",\"columns\":";
    append_string_array(out, doc.columns);
    out += ",\"rows\":[";
    for (std::size_t r = 0; r < doc.rows.size(); ++r) {
        if (r > 0) out += ',';
        out += '[';
        for (std::size_t c = 0; c < doc.rows[r].size(); ++c) {
            if (c > 0) out += ',';
            if (const auto* n = std::get_if<Int>(&doc.rows[r][c]))
                out += n->str();
            else
                append_json_string(out, std::get<std::string>(doc.rows[r][c]));
        }
        out += ']';
    }
    out += "],\"annotations\":";
    append_string_array(out, doc.annotations);
    out += "}\n";
    return out;
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string render_csv(const OutputDocument& doc) {
    std::string out;
    for (std::size_t c = 0; c < doc.columns.size(); ++c) {
        if (c > 0) out += ',';
        out += csv_field(doc.columns[c]);
    }
    out += '\n';
    for (const auto& row : doc.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out += ',';
            out += csv_field(cell_text(row[c]));
        }
        out += '\n';
    }
    return out;
}

std::string render_table(const OutputDocument& doc) {
    std::vector<std::size_t> widths(doc.columns.size(), 0);
    for (std::size_t c = 0; c < doc.columns.size(); ++c)
        widths[c] = doc.columns[c].size();
    for (const auto& row : doc.rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], cell_text(row[c]).size());

    std::string out;
    auto emit_line = [&](const std::vector<std::string>& cells,
                         const std::vector<bool>& right) {
        std::string line;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c > 0) line += "  ";
            std::string pad(widths[c] - cells[c].size(), ' ');
            line += right[c] ? pad + cells[c] : cells[c] + pad;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    };

    if (!doc.columns.empty()) {
        emit_line(doc.columns, std::vector<bool>(doc.columns.size(), false));
        std::vector<std::string> rules;
        for (std::size_t w : widths) rules.push_back(std::string(w, '-'));
        emit_line(rules, std::vector<bool>(doc.columns.size(), false));
    }
    for (const auto& row : doc.rows) {
        std::vector<std::string> cells;
        std::vector<bool> right;
        for (const auto& cell : row) {
            cells.push_back(cell_text(cell));
            right.push_back(std::holds_alternative<Int>(cell));
        }
        emit_line(cells, right);
    }
    if (!doc.annotations.empty() && (!doc.columns.empty() || !doc.rows.empty())) out += '\n';
    for (const auto& note : doc.annotations) {
        out += note;
        out += '\n';
    }
    return out;
}

// SAX handler that rebuilds a document while keeping oversized integers
// exact: the parser hands integers that overflow 64 bits to number_float
// together with their raw token, which converts losslessly.
class DocumentSax : public nlohmann::json_sax<nlohmann::json> {
  public:
    OutputDocument document;

    bool null() override { throw DocumentError("null is not allowed in documents"); }
    bool boolean(bool) override {
        throw DocumentError("booleans are not allowed in documents");
    }
    bool binary(binary_t&) override {
        throw DocumentError("binary values are not allowed in documents");
    }

    bool number_integer(number_integer_t value) override { return number(Int(value)); }
    bool number_unsigned(number_unsigned_t value) override { return number(Int(value)); }
    bool number_float(number_float_t, const string_t& raw) override {
        std::string digits = raw;
        if (!digits.empty() && digits[0] == '-') digits.erase(0, 1);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw DocumentError("non-integer number '" + raw + "' in document");
        return number(Int(raw));
    }

    bool string(string_t& value) override {
        switch (section_) {
            case Section::kind:
                document.kind = document_kind_from_name(value);
                section_ = Section::none;
                return true;
            case Section::columns:
                if (!in_array_) break;
                document.columns.push_back(value);
                return true;
            case Section::annotations:
                if (!in_array_) break;
                document.annotations.push_back(value);
                return true;
            case Section::rows:
                if (!in_row_) break;
                row_.emplace_back(value);
                return true;
            case Section::none:
                break;
        }
        throw DocumentError("misplaced string in document");
    }

    bool start_object(std::size_t) override {
        if (root_seen_) throw DocumentError("nested objects are not allowed in documents");
        root_seen_ = true;
        return true;
    }

    bool key(string_t& name) override {
        if (section_ != Section::none)
            throw DocumentError("misplaced key '" + name + "' in document");
        if (name == "kind")
            section_ = Section::kind;
        else if (name == "columns")
            section_ = Section::columns;
        else if (name == "rows")
            section_ = Section::rows;
        else if (name == "annotations")
            section_ = Section::annotations;
        else
            throw DocumentError("unknown document field '" + name + "'");
        std::size_t index = static_cast<std::size_t>(section_) - 1;
        if (seen_[index]) throw DocumentError("duplicate document field '" + name + "'");
        seen_[index] = true;
        return true;
    }

    bool end_object() override {
        if (section_ != Section::none || !root_seen_)
            throw DocumentError("malformed document object");
        for (std::size_t i = 0; i < 4; ++i)
            if (!seen_[i])
                throw DocumentError(
                    "document needs fields kind, columns, rows and annotations");
        complete_ = true;
        return true;
    }

    bool start_array(std::size_t) override {
        if (section_ == Section::rows) {
            if (!in_array_) {
                in_array_ = true;
                return true;
            }
            if (!in_row_) {
                in_row_ = true;
                row_.clear();
                return true;
            }
            throw DocumentError("row cells must be integers or strings");
        }
        if ((section_ == Section::columns || section_ == Section::annotations) && !in_array_) {
            in_array_ = true;
            return true;
        }
        throw DocumentError("misplaced array in document");
    }

    bool end_array() override {
        if (in_row_) {
            document.rows.push_back(std::move(row_));
            row_.clear();
            in_row_ = false;
            return true;
        }
        if (in_array_) {
            in_array_ = false;
            section_ = Section::none;
            return true;
        }
        throw DocumentError("unexpected end of array in document");
    }

    bool parse_error(std::size_t position, const std::string&,
                     const nlohmann::detail::exception& ex) override {
        throw DocumentError("invalid document JSON at offset " + std::to_string(position) +
                            ": " + ex.what());
    }

    bool complete() const { return complete_; }

  private:
    enum class Section { none = 0, kind, columns, rows, annotations };

    bool number(Int value) {
        if (section_ != Section::rows || !in_row_)
            throw DocumentError("numbers may only appear inside rows");
        row_.emplace_back(std::move(value));
        return true;
    }

    Section section_ = Section::none;
    bool root_seen_ = false;
    bool in_array_ = false;
    bool in_row_ = false;
    bool complete_ = false;
    bool seen_[4] = {false, false, false, false};
    std::vector<Cell> row_;
};

}  // namespace

std::string render(const OutputDocument& doc, OutputFormat format) {
    validate_document(doc);
    switch (format) {
        case OutputFormat::table:
            return render_table(doc);
        case OutputFormat::csv:
            return render_csv(doc);
        case OutputFormat::json:
            return render_json(doc);
    }
    throw std::logic_error("unreachable");
}

OutputDocument parse_document(const std::string& json_text) {
    DocumentSax sax;
    nlohmann::json::sax_parse(json_text, &sax);
    if (!sax.complete()) throw DocumentError("document JSON must be a single object");
    validate_document(sax.document);
    return sax.document;
}

}  // namespace pp
