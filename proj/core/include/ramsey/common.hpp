#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ramsey {

using Vertex = std::int32_t;

/// Three-valued outcome of a decision procedure that may run out of budget.
enum class Verdict { no, yes, inconclusive };

constexpr std::string_view to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::no: return "false";
    case Verdict::yes: return "true";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

constexpr Verdict to_verdict(bool b) noexcept { return b ? Verdict::yes : Verdict::no; }

/// Caps on a search. Zero means unlimited.
struct SearchLimits {
    std::uint64_t max_nodes = 0;
    std::chrono::milliseconds timeout{0};
};

/// Thrown when a search exceeds its SearchLimits. Callers convert it into
/// Verdict::inconclusive at the API boundary.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded() : std::runtime_error("search budget exceeded") {}
};

/// Node counter shared by one search call.
class Budget {
public:
    explicit Budget(SearchLimits limits = {}) :
        limits_(limits),
        start_(std::chrono::steady_clock::now())
    {
    }

    void tick()
    {
        ++nodes_;
        if (limits_.max_nodes != 0 && nodes_ > limits_.max_nodes)
            throw BudgetExceeded{};
        if (limits_.timeout.count() != 0 && (nodes_ & 0x3ff) == 0
            && std::chrono::steady_clock::now() - start_ > limits_.timeout)
            throw BudgetExceeded{};
    }

    std::uint64_t nodes() const noexcept { return nodes_; }
    const SearchLimits & limits() const noexcept { return limits_; }

private:
    SearchLimits limits_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
};

/// Malformed instance file. Carries the 1-based line number of the problem.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string & what) :
        std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace ramsey
