#pragma once

#include <string>
#include <vector>

namespace csurg {

/// Outcome of a (non)vanishing decision, with the rules that produced it.
struct Verdict {
    enum class Value { Nonzero, Zero, Unknown };

    struct Step {
        std::string rule;
        std::string cite;
    };

    Value value = Value::Unknown;
    std::vector<Step> trace;

    bool nonzero() const { return value == Value::Nonzero; }
    bool zero() const { return value == Value::Zero; }
    bool unknown() const { return value == Value::Unknown; }

    std::string value_str() const {
        switch (value) {
            case Value::Nonzero: return "nonzero";
            case Value::Zero: return "zero";
            case Value::Unknown: return "unknown";
        }
        return "?";
    }

    Verdict& step(std::string rule, std::string cite) {
        trace.push_back({std::move(rule), std::move(cite)});
        return *this;
    }
};

}  // namespace csurg
