#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace clbf {

/// Membership query tuple: each slot is a concrete token or a wildcard.
/// The CLI wildcard token is the literal "?".
class WildcardTuple {
public:
    WildcardTuple() = default;
    explicit WildcardTuple(std::vector<std::optional<std::string>> slots)
        : slots_(std::move(slots)) {}

    /// A fully concrete tuple (no wildcards).
    static WildcardTuple concrete(const std::vector<std::string>& values) {
        std::vector<std::optional<std::string>> slots;
        slots.reserve(values.size());
        for (const auto& v : values) slots.emplace_back(v);
        return WildcardTuple(std::move(slots));
    }

    size_t arity() const { return slots_.size(); }

    bool is_wildcard(size_t i) const { return !slots_[i].has_value(); }

    const std::string& value(size_t i) const { return *slots_[i]; }

    const std::vector<std::optional<std::string>>& slots() const { return slots_; }

    bool fully_concrete() const {
        for (const auto& s : slots_)
            if (!s) return false;
        return true;
    }

    size_t concrete_count() const {
        size_t n = 0;
        for (const auto& s : slots_) n += s.has_value();
        return n;
    }

    /// Projection keeping only slots whose bit is set in mask; the rest
    /// become wildcards.
    WildcardTuple masked(uint64_t mask) const {
        std::vector<std::optional<std::string>> out(slots_.size());
        for (size_t i = 0; i < slots_.size(); ++i)
            if (mask >> i & 1) out[i] = slots_[i];
        return WildcardTuple(std::move(out));
    }

    bool operator==(const WildcardTuple& other) const = default;

private:
    std::vector<std::optional<std::string>> slots_;
};

/// Canonical byte encoding of a wildcard tuple, injective over distinct
/// tuples: concrete slots carry column index + token length + bytes,
/// wildcards a fixed sentinel byte. Insert-time and query-time encodings
/// of the same pattern are identical.
inline std::string serialize_tuple_subset(const WildcardTuple& t) {
    std::string out;
    out.reserve(t.arity() * 8);
    auto put_u32 = [&out](uint32_t v) {
        for (int i = 0; i < 4; ++i) out.push_back(char(v >> (8 * i)));
    };
    for (size_t i = 0; i < t.arity(); ++i) {
        if (t.is_wildcard(i)) {
            out.push_back(char(0xFF));
        } else {
            const std::string& tok = t.value(i);
            out.push_back(char(0x01));
            put_u32(uint32_t(i));
            put_u32(uint32_t(tok.size()));
            out.append(tok);
        }
    }
    return out;
}

/// Parses a CLI tuple string: comma-separated values, "?" for wildcard.
inline WildcardTuple parse_tuple(const std::string& text) {
    std::vector<std::optional<std::string>> slots;
    std::string field;
    auto flush = [&]() {
        if (field == "?")
            slots.emplace_back(std::nullopt);
        else
            slots.emplace_back(field);
        field.clear();
    };
    for (char c : text) {
        if (c == ',')
            flush();
        else
            field.push_back(c);
    }
    flush();
    return WildcardTuple(std::move(slots));
}

inline std::string format_tuple(const WildcardTuple& t) {
    std::string out;
    for (size_t i = 0; i < t.arity(); ++i) {
        if (i) out.push_back(',');
        out += t.is_wildcard(i) ? "?" : t.value(i);
    }
    return out;
}

}  // namespace clbf
