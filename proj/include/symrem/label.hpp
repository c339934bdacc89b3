#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>

namespace symrem {

// Vertex and group-element labels as they appear in input files: integers or
// strings, compared by exact value. Integers and strings never compare equal.
struct Label {
    std::variant<std::int64_t, std::string> value;

    Label() : value(std::int64_t{0}) {}
    Label(std::int64_t v) : value(v) {}
    Label(int v) : value(std::int64_t{v}) {}
    Label(std::string v) : value(std::move(v)) {}
    Label(const char* v) : value(std::string(v)) {}

    bool is_int() const { return std::holds_alternative<std::int64_t>(value); }

    friend bool operator==(const Label&, const Label&) = default;

    friend bool operator<(const Label& a, const Label& b) {
        if (a.value.index() != b.value.index()) return a.value.index() < b.value.index();
        if (a.is_int())
            return std::get<std::int64_t>(a.value) < std::get<std::int64_t>(b.value);
        return std::get<std::string>(a.value) < std::get<std::string>(b.value);
    }

    std::string str() const {
        if (is_int()) return std::to_string(std::get<std::int64_t>(value));
        return std::get<std::string>(value);
    }
};

struct LabelHash {
    std::size_t operator()(const Label& l) const {
        if (l.is_int())
            return std::hash<std::int64_t>{}(std::get<std::int64_t>(l.value)) ^ 0x9e3779b97f4a7c15ull;
        return std::hash<std::string>{}(std::get<std::string>(l.value));
    }
};

} // namespace symrem
