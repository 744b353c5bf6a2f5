#pragma once

#include <stdexcept>
#include <string>

namespace planesplit {

// Base class for all errors raised by this library.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Input violates an operation's precondition (bad parameters, malformed data).
struct input_error : error {
    explicit input_error(const std::string& what) : error(what) {}
};

// An operation that requires a planar graph was handed a non-planar one.
struct nonplanar_error : error {
    explicit nonplanar_error(const std::string& what) : error(what) {}
};

// Torus wrap data does not describe a genuine toroidal embedding.
struct invalid_embedding_error : error {
    explicit invalid_embedding_error(const std::string& what) : error(what) {}
};

// Edge signature does not arise from a projective-planar embedding.
struct invalid_signature_error : error {
    explicit invalid_signature_error(const std::string& what) : error(what) {}
};

// Parse failure in one of the text file formats; carries line/field context.
struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

}  // namespace planesplit
