#pragma once

#include <stdexcept>

namespace tvoa {

// malformed input: element not in basis span, index/parity mismatch, ...
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// operation needs data the object does not carry (missing coproduct, ...)
struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a computation left the truncation window; never silent
struct truncation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// degenerate input: isotropic reflection vector, zero extension class, ...
struct degenerate_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tvoa
