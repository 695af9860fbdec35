#pragma once

#include <stdexcept>
#include <string>

namespace vedit {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid job description, preset, or serialized config.
class ConfigError : public Error {
public:
    using Error::Error;
};

// A caller broke an operation contract (shape mismatch, bad index, out-of-range step, ...).
class ContractError : public Error {
public:
    using Error::Error;
};

// An adapter (backbone, control model, interpolator, embedder) failed or misbehaved.
class AdapterError : public Error {
public:
    using Error::Error;
};

// Unreadable input, unwritable output, unsupported format.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace vedit
