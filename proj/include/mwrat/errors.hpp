#pragma once

#include <stdexcept>
#include <string>

namespace mwrat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Lattice layer.
class DimensionError : public Error { using Error::Error; };
class InvalidModelError : public Error { using Error::Error; };
class ParityError : public Error { using Error::Error; };
class DegeneracyError : public Error { using Error::Error; };
class FormError : public Error { using Error::Error; };

// Scenario and fiber layer.
class ConfigurationError : public Error { using Error::Error; };
class InvalidComponentError : public Error { using Error::Error; };
class NotAFiberError : public Error { using Error::Error; };

// Polynomial layer.
class CoefficientError : public Error { using Error::Error; };
class ShapeError : public Error { using Error::Error; };
class BranchShapeError : public Error { using Error::Error; };
class InfiniteContactError : public Error { using Error::Error; };
class InternalConsistencyError : public Error { using Error::Error; };

// Input decoding (JSON files, CLI arguments).
class InputError : public Error { using Error::Error; };

}  // namespace mwrat
