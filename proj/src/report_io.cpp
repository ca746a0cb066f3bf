#include "muntzkit/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace muntzkit {

std::string format_double(double value) {
    if (!std::isfinite(value))
        throw std::logic_error("attempted to serialize a non-finite value");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string format_long(long value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%ld", value);
    return buf;
}

std::string json_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size() + 2);
    for (unsigned char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    return out;
}

// ============================================================
// Json
// ============================================================

Json Json::object() { Json j; j.kind_ = Kind::object; return j; }
Json Json::array() { Json j; j.kind_ = Kind::array; return j; }
Json Json::number(double v) { Json j; j.kind_ = Kind::num; j.num_ = v; return j; }
Json Json::integer(long v) { Json j; j.kind_ = Kind::integer_num; j.int_ = v; return j; }
Json Json::boolean(bool v) { Json j; j.kind_ = Kind::boolean_val; j.bool_ = v; return j; }
Json Json::string(std::string v) { Json j; j.kind_ = Kind::str; j.str_ = std::move(v); return j; }
Json Json::null() { return Json(); }

Json& Json::add(const std::string& key, Json value) {
    if (kind_ != Kind::object) throw std::logic_error("Json::add on a non-object");
    fields_.emplace_back(key, std::move(value));
    return *this;
}

Json& Json::push(Json value) {
    if (kind_ != Kind::array) throw std::logic_error("Json::push on a non-array");
    elements_.push_back(std::move(value));
    return *this;
}

void Json::write(std::string& out, int indent) const {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string pad_in(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (kind_) {
        case Kind::null_val: out += "null"; break;
        case Kind::boolean_val: out += bool_ ? "true" : "false"; break;
        case Kind::num: out += format_double(num_); break;
        case Kind::integer_num: out += format_long(int_); break;
        case Kind::str: out += '"' + json_escape(str_) + '"'; break;
        case Kind::object: {
            if (fields_.empty()) { out += "{}"; break; }
            out += "{\n";
            for (std::size_t i = 0; i < fields_.size(); ++i) {
                out += pad_in + '"' + json_escape(fields_[i].first) + "\": ";
                fields_[i].second.write(out, indent + 1);
                if (i + 1 < fields_.size()) out += ',';
                out += '\n';
            }
            out += pad + '}';
            break;
        }
        case Kind::array: {
            if (elements_.empty()) { out += "[]"; break; }
            // Scalar-only arrays stay on one line; nested ones get a line
            // per element.
            bool scalar = true;
            for (const Json& e : elements_)
                if (e.kind_ == Kind::object || e.kind_ == Kind::array) scalar = false;
            if (scalar) {
                out += '[';
                for (std::size_t i = 0; i < elements_.size(); ++i) {
                    if (i) out += ", ";
                    elements_[i].write(out, indent);
                }
                out += ']';
            } else {
                out += "[\n";
                for (std::size_t i = 0; i < elements_.size(); ++i) {
                    out += pad_in;
                    elements_[i].write(out, indent + 1);
                    if (i + 1 < elements_.size()) out += ',';
                    out += '\n';
                }
                out += pad + ']';
            }
            break;
        }
    }
}

std::string Json::dump() const {
    std::string out;
    write(out, 0);
    out += '\n';
    return out;
}

// ============================================================
// Csv
// ============================================================

Csv::Csv(std::vector<std::string> header) : columns_(header.size()) {
    if (header.empty()) throw std::logic_error("CSV needs a header row");
    rows_.push_back(std::move(header));
}

void Csv::add_row(std::vector<std::string> cells) {
    if (cells.size() != columns_) throw std::logic_error("CSV row width mismatch");
    rows_.push_back(std::move(cells));
}

std::string Csv::str() const {
    std::string out;
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    std::string out;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += "  ";
            out.append(width[i] - row[i].size(), ' ');
            out += row[i];
        }
        out += '\n';
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    return out;
}

} // namespace muntzkit
