#ifndef ORC_VALUE_HPP
#define ORC_VALUE_HPP

#include <string>
#include <variant>
#include <vector>

namespace orc {

// An instance value: either an atom (opaque label) or a tuple of values.
// Tuples are what confluences synthesize as heads; equality is structural.
class InstanceValue {
public:
    InstanceValue() : data_(std::string{}) {}

    static InstanceValue atom(std::string label) {
        InstanceValue v;
        v.data_ = std::move(label);
        return v;
    }

    static InstanceValue tuple(std::vector<InstanceValue> components) {
        InstanceValue v;
        v.data_ = std::move(components);
        return v;
    }

    bool is_atom() const { return std::holds_alternative<std::string>(data_); }
    bool is_tuple() const { return !is_atom(); }

    const std::string& label() const { return std::get<std::string>(data_); }
    const std::vector<InstanceValue>& components() const {
        return std::get<std::vector<InstanceValue>>(data_);
    }

    bool operator==(const InstanceValue& other) const { return data_ == other.data_; }
    bool operator!=(const InstanceValue& other) const { return !(*this == other); }

    // Atoms order before tuples; within a kind the order is lexicographic.
    bool operator<(const InstanceValue& other) const {
        if (is_atom() != other.is_atom()) return is_atom();
        if (is_atom()) return label() < other.label();
        return components() < other.components();
    }

    std::string to_string() const;

private:
    std::variant<std::string, std::vector<InstanceValue>> data_;
};

}  // namespace orc

#endif
