#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace engel {

// Exact rational scalar. All arithmetic in the engine is over Q; there is
// no floating-point mode.
using Rat = mpq_class;
using Int = mpz_class;

// Thrown when a computation exceeds a configured size cap (ambient layer
// dimension, big-integer digit count, ...).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

inline std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

inline Rat parse_rat(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace engel
