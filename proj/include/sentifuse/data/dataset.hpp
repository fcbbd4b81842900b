#pragma once

#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sentifuse/core/types.hpp"
#include "sentifuse/data/normalize.hpp"
#include "sentifuse/error.hpp"

namespace sentifuse {

struct TextRecord {
    std::string id;
    std::string text;
    std::string normalized;
    SentimentLabel label = SentimentLabel::neutral;
};

// Source-dataset label token -> canonical label. Must cover every token
// that appears in the file being loaded.
struct LabelMapping {
    std::map<std::string, SentimentLabel> mapping;
};

// Mapping file: `source_token<TAB>canonical_label`, '#' comments.
inline LabelMapping load_label_mapping(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCategory::config, "cannot open label mapping '" + path + "'");
    LabelMapping out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw Error(ErrorCategory::data, path + ":" + std::to_string(line_no) +
                                                 ": expected 'token<TAB>label'");
        out.mapping[line.substr(0, tab)] = label_from_string(line.substr(tab + 1));
    }
    return out;
}

// Delimited-file layout. Columns are header names when has_header,
// otherwise zero-based indices written as digits. id_column empty ->
// ids synthesized from the data-row index.
struct DatasetFormat {
    char delimiter = ',';
    char quote = '"';
    bool has_header = true;
    std::string text_column = "text";
    std::string label_column = "label";
    std::string id_column;
};

namespace detail {

// One delimited row; supports quoted fields with doubled-quote escapes.
inline bool read_delimited_row(std::istream& in, char delimiter, char quote,
                               std::vector<std::string>& fields, std::size_t& line_no) {
    fields.clear();
    std::string line;
    if (!std::getline(in, line)) return false;
    ++line_no;
    std::string field;
    bool in_quotes = false;
    std::size_t i = 0;
    while (true) {
        if (i >= line.size()) {
            if (in_quotes) {  // quoted field continues across a newline
                if (!std::getline(in, line)) {
                    throw Error(ErrorCategory::data,
                                "line " + std::to_string(line_no) + ": unterminated quote");
                }
                ++line_no;
                field.push_back('\n');
                i = 0;
                continue;
            }
            break;
        }
        const char c = line[i];
        if (in_quotes) {
            if (c == quote) {
                if (i + 1 < line.size() && line[i + 1] == quote) {
                    field.push_back(quote);
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == quote && field.empty()) {
            in_quotes = true;
        } else if (c == delimiter) {
            fields.push_back(std::move(field));
            field.clear();
        } else if (c == '\r' && i + 1 == line.size()) {
            // trailing CR from CRLF files
        } else {
            field.push_back(c);
        }
        ++i;
    }
    fields.push_back(std::move(field));
    return true;
}

inline std::size_t resolve_column(const std::string& spec,
                                  const std::vector<std::string>& header, bool has_header,
                                  const std::string& path) {
    if (has_header) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == spec) return i;
        }
        throw Error(ErrorCategory::config, path + ": no column named '" + spec + "' in header");
    }
    try {
        std::size_t used = 0;
        const unsigned long idx = std::stoul(spec, &used);
        if (used != spec.size()) throw std::invalid_argument("junk");
        return idx;
    } catch (const std::exception&) {
        throw Error(ErrorCategory::config,
                    path + ": column '" + spec + "' must be a zero-based index (file has no header)");
    }
}

}  // namespace detail

// Loads and normalizes a delimited dataset. Rows with unmappable labels,
// short rows and duplicate explicit ids fail with the offending line.
inline std::vector<TextRecord> load_dataset(const std::string& path, const DatasetFormat& format,
                                            const LabelMapping& labels) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCategory::config, "cannot open dataset '" + path + "'");

    std::vector<std::string> fields;
    std::size_t line_no = 0;

    std::vector<std::string> header;
    if (format.has_header) {
        if (!detail::read_delimited_row(in, format.delimiter, format.quote, header, line_no))
            throw Error(ErrorCategory::data, path + ": missing header row");
    }
    const std::size_t text_col =
        detail::resolve_column(format.text_column, header, format.has_header, path);
    const std::size_t label_col =
        detail::resolve_column(format.label_column, header, format.has_header, path);
    const bool has_id = !format.id_column.empty();
    const std::size_t id_col =
        has_id ? detail::resolve_column(format.id_column, header, format.has_header, path) : 0;

    std::vector<TextRecord> records;
    std::set<std::string> seen_ids;
    std::size_t row_index = 0;
    while (detail::read_delimited_row(in, format.delimiter, format.quote, fields, line_no)) {
        if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
        const std::size_t needed = std::max({text_col, label_col, has_id ? id_col : 0});
        if (fields.size() <= needed)
            throw Error(ErrorCategory::data, path + ":" + std::to_string(line_no) +
                                                 ": row has " + std::to_string(fields.size()) +
                                                 " fields, need at least " +
                                                 std::to_string(needed + 1));
        TextRecord record;
        record.id = has_id ? fields[id_col] : std::to_string(row_index);
        record.text = fields[text_col];
        record.normalized = normalize(record.text);
        const std::string& token = fields[label_col];
        auto it = labels.mapping.find(token);
        if (it == labels.mapping.end())
            throw Error(ErrorCategory::data, path + ":" + std::to_string(line_no) +
                                                 ": unmapped label token '" + token + "'");
        record.label = it->second;
        if (!seen_ids.insert(record.id).second)
            throw Error(ErrorCategory::data, path + ":" + std::to_string(line_no) +
                                                 ": duplicate id '" + record.id + "'");
        records.push_back(std::move(record));
        ++row_index;
    }
    return records;
}

}  // namespace sentifuse
