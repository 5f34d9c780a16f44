#include "trustres/detail/csv.hpp"

#include "trustres/errors.hpp"

namespace trustres::detail {

std::string csv_quote(const std::string& field) {
    bool needs = false;
    for (char c : field) {
        if (c == ',' || c == '"' || c == '\n' || c == '\r') {
            needs = true;
            break;
        }
    }
    if (!needs) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_quote(fields[i]);
    }
    out += '\n';
    return out;
}

std::vector<std::vector<std::string>> csv_parse(const std::string& text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> fields;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;
    std::size_t i = 0;
    const std::size_t n = text.size();

    auto end_field = [&]() {
        fields.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_record = [&]() {
        end_field();
        records.push_back(std::move(fields));
        fields.clear();
    };

    while (i < n) {
        char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < n && text[i + 1] == '"') {
                    field += '"';
                    i += 2;
                } else {
                    in_quotes = false;
                    ++i;
                }
            } else {
                field += c;
                ++i;
            }
        } else if (c == '"' && !field_started && field.empty()) {
            in_quotes = true;
            field_started = true;
            ++i;
        } else if (c == ',') {
            end_field();
            ++i;
        } else if (c == '\n') {
            end_record();
            ++i;
        } else if (c == '\r' && i + 1 < n && text[i + 1] == '\n') {
            end_record();
            i += 2;
        } else {
            field += c;
            field_started = true;
            ++i;
        }
    }
    if (in_quotes) throw ParseError("unterminated quoted CSV field");
    if (field_started || !field.empty() || !fields.empty()) end_record();
    return records;
}

}  // namespace trustres::detail
