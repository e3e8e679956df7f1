#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace clbf {

/// Dense string -> integer id mapping for one categorical column.
/// Ids are assigned in first-appearance order and cover [0, size())
/// exactly; id_of/token_of are mutually inverse. Immutable once built.
class Dictionary {
public:
    Dictionary() = default;

    Dictionary(std::string column_name, std::span<const std::string> values)
        : name_(std::move(column_name)) {
        if (values.empty()) throw std::invalid_argument("empty column");
        for (const auto& v : values) add(v);
    }

    const std::string& name() const { return name_; }

    /// Distinct-value count; the exclusive upper bound of ids.
    uint64_t size() const { return tokens_.size(); }

    std::optional<uint64_t> id_of(const std::string& token) const {
        auto it = ids_.find(token);
        if (it == ids_.end()) return std::nullopt;
        return it->second;
    }

    const std::string& token_of(uint64_t id) const {
        if (id >= tokens_.size()) throw std::out_of_range("id out of dictionary range");
        return tokens_[id];
    }

    /// Tokens in id order.
    const std::vector<std::string>& tokens() const { return tokens_; }

    void add(const std::string& token) {
        auto [it, inserted] = ids_.try_emplace(token, tokens_.size());
        if (inserted) tokens_.push_back(token);
    }

    static Dictionary from_tokens(std::string column_name, std::vector<std::string> tokens) {
        Dictionary d;
        d.name_ = std::move(column_name);
        for (auto& t : tokens) d.add(t);
        return d;
    }

private:
    std::string name_;
    std::unordered_map<std::string, uint64_t> ids_;
    std::vector<std::string> tokens_;
};

inline Dictionary build_dictionary(std::string column_name,
                                   std::span<const std::string> column_values) {
    return Dictionary(std::move(column_name), column_values);
}

}  // namespace clbf
