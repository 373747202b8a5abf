#include "hyplan/operators.hpp"

#include <algorithm>
#include <cmath>

#include "hyplan/errors.hpp"

namespace hyplan {

std::string OperatorArity::describe() const {
    if (max_args < 0)
        return "at least " + std::to_string(min_args) + " operands";
    if (min_args == max_args)
        return std::to_string(min_args) + " operand" + (min_args == 1 ? "" : "s");
    return std::to_string(min_args) + " to " + std::to_string(max_args) + " operands";
}

OperatorRegistry::OperatorRegistry(const OperatorRegistry &other)
    : entries_(other.entries_), index_(other.index_), frozen_(other.frozen_.load()) {}

OperatorRegistry &OperatorRegistry::operator=(const OperatorRegistry &other) {
    entries_ = other.entries_;
    index_ = other.index_;
    frozen_.store(other.frozen_.load());
    return *this;
}

OperatorRegistry OperatorRegistry::standard() {
    OperatorRegistry reg;
    auto fold = [](std::span<const double> xs, auto op) {
        double acc = xs[0];
        for (std::size_t i = 1; i < xs.size(); ++i)
            acc = op(acc, xs[i]);
        return acc;
    };
    reg.register_operator("+", OperatorArity::at_least(2), [fold](std::span<const double> xs) {
        return fold(xs, [](double a, double b) { return a + b; });
    });
    reg.register_operator("-", OperatorArity::between(1, 2), [](std::span<const double> xs) {
        return xs.size() == 1 ? -xs[0] : xs[0] - xs[1];
    });
    reg.register_operator("*", OperatorArity::at_least(2), [fold](std::span<const double> xs) {
        return fold(xs, [](double a, double b) { return a * b; });
    });
    reg.register_operator("/", OperatorArity::exactly(2),
                          [](std::span<const double> xs) { return xs[0] / xs[1]; });
    reg.register_operator("^", OperatorArity::exactly(2),
                          [](std::span<const double> xs) { return std::pow(xs[0], xs[1]); });
    return reg;
}

void OperatorRegistry::register_operator(const std::string &symbol, OperatorArity arity,
                                         OperatorFn fn) {
    if (frozen())
        throw ConfigError("operator registry is frozen once search starts; cannot register '" +
                          symbol + "'");
    if (auto it = index_.find(symbol); it != index_.end()) {
        const Entry &existing = entries_[static_cast<std::size_t>(it->second)];
        throw ConfigError("operator '" + symbol + "' already registered with " +
                          existing.arity.describe());
    }
    index_.emplace(symbol, static_cast<int>(entries_.size()));
    entries_.push_back({symbol, arity, std::move(fn)});
}

const OperatorRegistry::Entry *OperatorRegistry::find(const std::string &symbol) const {
    auto it = index_.find(symbol);
    return it == index_.end() ? nullptr : &entries_[static_cast<std::size_t>(it->second)];
}

int OperatorRegistry::id_of(const std::string &symbol) const {
    auto it = index_.find(symbol);
    return it == index_.end() ? -1 : it->second;
}

std::vector<std::string> OperatorRegistry::registered_symbols() const {
    std::vector<std::string> names;
    names.reserve(entries_.size());
    for (const auto &e : entries_)
        names.push_back(e.symbol);
    std::sort(names.begin(), names.end());
    return names;
}

} // namespace hyplan
