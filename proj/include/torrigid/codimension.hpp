#pragma once

#include <optional>
#include <string>

namespace torrigid {

/// A codimension that may be infinite (empty locus).
class Codimension {
public:
    Codimension() = default; // infinite
    explicit Codimension(int value) : value_(value) {}
    static Codimension infinite() { return {}; }

    bool is_infinite() const { return !value_.has_value(); }
    int value() const { return *value_; }
    bool at_least(int k) const { return !value_ || *value_ >= k; }

    Codimension min(Codimension other) const
    {
        if (!value_)
            return other;
        if (!other.value_)
            return *this;
        return Codimension(*value_ < *other.value_ ? *value_ : *other.value_);
    }

    std::string to_string() const { return value_ ? std::to_string(*value_) : "infinity"; }

    friend bool operator==(const Codimension&, const Codimension&) = default;

private:
    std::optional<int> value_;
};

} // namespace torrigid
