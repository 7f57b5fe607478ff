#pragma once

#include <stdexcept>

namespace welch {

// Base class for every library error.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A unit was required but p divides the value.
struct non_unit : error {
    using error::error;
};
struct non_unit_base : non_unit {
    using non_unit::non_unit;
};
struct non_unit_x : non_unit {
    using non_unit::non_unit;
};

struct odd_prime_required : error {
    using error::error;
};
struct even_x : error {
    using error::error;
};
struct even_g : non_unit {
    using non_unit::non_unit;
};

// p-adic series argument outside the convergence disk.
struct domain_error : error {
    using error::error;
};

struct not_a_root : error {
    using error::error;
};
struct singular_root : error {
    using error::error;
};
struct not_primitive_root : error {
    using error::error;
};
struct not_a_solution : error {
    using error::error;
};

struct budget_exceeded : error {
    using error::error;
};
struct invalid_input : error {
    using error::error;
};

}  // namespace welch
