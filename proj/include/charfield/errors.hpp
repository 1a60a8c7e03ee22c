#pragma once

#include <stdexcept>

namespace charfield {

// Raised when an enumeration would exceed its configured budget. Callers skip
// the case; the result is never guessed.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace charfield
