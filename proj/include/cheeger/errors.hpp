#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cheeger {

// Enumeration request whose estimated cost exceeds the caller's budget.
// Carries the estimate so callers can report how much would be needed.
class BudgetError : public std::runtime_error {
public:
    BudgetError(double required, double budget)
        : std::runtime_error(message(required, budget)),
          required_(required),
          budget_(budget) {}

    double required() const noexcept { return required_; }
    double budget() const noexcept { return budget_; }

private:
    static std::string message(double required, double budget) {
        std::ostringstream os;
        os << "enumeration budget exceeded: need about " << required
           << " label vectors, budget is " << budget;
        return os.str();
    }

    double required_;
    double budget_;
};

// No sampled random partition passed the mass test within the attempt cap.
// Existence is only guaranteed in expectation, so we surface the statistics
// instead of looping forever.
class PipelineError : public std::runtime_error {
public:
    PipelineError(int attempts, int mass_failures, int merge_failures)
        : std::runtime_error(message(attempts, mass_failures, merge_failures)),
          attempts_(attempts),
          mass_failures_(mass_failures),
          merge_failures_(merge_failures) {}

    int attempts() const noexcept { return attempts_; }
    int mass_failures() const noexcept { return mass_failures_; }
    int merge_failures() const noexcept { return merge_failures_; }

private:
    static std::string message(int attempts, int mass_failures, int merge_failures) {
        std::ostringstream os;
        os << "partition sampling exhausted after " << attempts
           << " attempts (" << mass_failures << " failed the mass condition, "
           << merge_failures << " failed cluster merging)";
        return os.str();
    }

    int attempts_;
    int mass_failures_;
    int merge_failures_;
};

}  // namespace cheeger
