#ifndef JMYC_ERROR_HPP
#define JMYC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace jmyc {

// Base class for every error thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A parameter value outside its documented range (family sizes, colour counts).
class invalid_parameter_error : public error {
public:
    using error::error;
};

// An edge that cannot belong to a simple graph (self-loop).
class invalid_edge_error : public error {
public:
    using error::error;
};

// A vertex index outside 0..n-1.
class out_of_range_error : public error {
public:
    using error::error;
};

// A guard against exponential blowups fired (vertex count, subset count).
class size_limit_error : public error {
public:
    using error::error;
};

// Malformed input file (JSON shape, unknown fields, bad label strings).
class parse_error : public error {
public:
    using error::error;
};

} // namespace jmyc

#endif
