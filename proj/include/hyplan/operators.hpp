#pragma once

#include <atomic>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace hyplan {

struct OperatorArity {
    int min_args = 0;
    int max_args = -1; // -1 = unbounded

    bool accepts(int n) const { return n >= min_args && (max_args < 0 || n <= max_args); }
    std::string describe() const;

    static OperatorArity exactly(int n) { return {n, n}; }
    static OperatorArity at_least(int n) { return {n, -1}; }
    static OperatorArity between(int lo, int hi) { return {lo, hi}; }
};

using OperatorFn = std::function<double(std::span<const double>)>;

// Numeric operators usable in PDDL expressions. Extending the language is a
// single register_operator call; symbols may declare unrestricted cardinality.
class OperatorRegistry {
public:
    struct Entry {
        std::string symbol;
        OperatorArity arity;
        OperatorFn fn;
    };

    OperatorRegistry() = default;
    OperatorRegistry(const OperatorRegistry &other);
    OperatorRegistry &operator=(const OperatorRegistry &other);

    // +, -, *, / and the power operator ^.
    static OperatorRegistry standard();

    // Throws ConfigError on duplicate symbols or after freeze().
    void register_operator(const std::string &symbol, OperatorArity arity, OperatorFn fn);

    const Entry *find(const std::string &symbol) const;
    int id_of(const std::string &symbol) const; // -1 if absent
    const Entry &entry(int id) const { return entries_[static_cast<std::size_t>(id)]; }
    std::vector<std::string> registered_symbols() const; // sorted

    // Registrations close once search starts.
    void freeze() const { frozen_.store(true, std::memory_order_release); }
    bool frozen() const { return frozen_.load(std::memory_order_acquire); }

private:
    std::vector<Entry> entries_;
    std::unordered_map<std::string, int> index_;
    mutable std::atomic<bool> frozen_{false};
};

} // namespace hyplan
