#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace muntzkit {

// Shortest-faithful rendering with up to 17 significant digits ("%.17g").
// Identical inputs always produce identical bytes, which is what the
// golden-file and determinism tests rely on.  Non-finite values are a bug
// in the caller and are rejected.
std::string format_double(double value);
std::string format_long(long value);

std::string json_escape(const std::string& text);

// ============================================================
// Minimal deterministic JSON document builder.
//
// Object keys keep insertion order, doubles go through format_double, and
// dump() emits two-space indentation with a stable layout.  This is all the
// report writer needs; parsing is out of scope.
// ============================================================
class Json {
public:
    static Json object();
    static Json array();
    static Json number(double v);
    static Json integer(long v);
    static Json boolean(bool v);
    static Json string(std::string v);
    static Json null();

    // Object field setters (insertion-ordered).  *this must be an object.
    Json& add(const std::string& key, Json value);
    Json& add(const std::string& key, double v) { return add(key, number(v)); }
    Json& add(const std::string& key, long v) { return add(key, integer(v)); }
    Json& add(const std::string& key, int v) { return add(key, integer(v)); }
    Json& add(const std::string& key, bool v) { return add(key, boolean(v)); }
    Json& add(const std::string& key, const std::string& v) { return add(key, string(v)); }
    Json& add(const std::string& key, const char* v) { return add(key, string(v)); }

    // Array element appenders.  *this must be an array.
    Json& push(Json value);
    Json& push(double v) { return push(number(v)); }
    Json& push(long v) { return push(integer(v)); }

    std::string dump() const;

private:
    enum class Kind { object, array, num, integer_num, boolean_val, str, null_val };
    Kind kind_ = Kind::null_val;
    double num_ = 0.0;
    long int_ = 0;
    bool bool_ = false;
    std::string str_;
    std::vector<std::pair<std::string, Json>> fields_;
    std::vector<Json> elements_;

    void write(std::string& out, int indent) const;
};

// ============================================================
// CSV writer: comma delimiter, '.' decimal point, header row first,
// one trailing newline per row.
// ============================================================
class Csv {
public:
    explicit Csv(std::vector<std::string> header);
    void add_row(std::vector<std::string> cells);
    std::string str() const;

private:
    std::size_t columns_;
    std::vector<std::vector<std::string>> rows_;
};

// Fixed-width text table for human eyes; columns right-aligned.
std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows);

} // namespace muntzkit
