#pragma once

#include <stdexcept>

namespace cedrf {

// Thrown when a request is structurally valid but cannot be satisfied,
// e.g. a target distortion below the infinite-rate floor.
class infeasibility_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Thrown when a problem instance exceeds the size limits of an exact
// evaluation path (callers should switch to a sampling/fast path).
class size_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace cedrf
