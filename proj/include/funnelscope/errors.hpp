#pragma once

#include <stdexcept>
#include <string>

namespace funnelscope {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- ingest ---

class SchemaError : public Error {
public:
    using Error::Error;
};

class ValueError : public Error {
public:
    using Error::Error;
};

// Duplicate (provider, diagnosis, stratum) cell; carries both source rows.
class DuplicateCell : public Error {
public:
    DuplicateCell(const std::string& what, long first_row, long second_row)
        : Error(what), first_row_(first_row), second_row_(second_row) {}
    long first_row() const { return first_row_; }
    long second_row() const { return second_row_; }

private:
    long first_row_;
    long second_row_;
};

class UnknownIdentifier : public Error {
public:
    using Error::Error;
};

class InsufficientCount : public Error {
public:
    using Error::Error;
};

// --- population ---

class EmptySpecialty : public Error {
public:
    using Error::Error;
};

class NoTreatingProviders : public Error {
public:
    using Error::Error;
};

class AllocationInfeasible : public Error {
public:
    using Error::Error;
};

// --- casemix ---

class InconsistentStratum : public Error {
public:
    using Error::Error;
};

// --- engine ---

class InvalidPopulation : public Error {
public:
    using Error::Error;
};

class InconsistentCounts : public Error {
public:
    using Error::Error;
};

class InsufficientProviders : public Error {
public:
    using Error::Error;
};

class InvalidStandardError : public Error {
public:
    using Error::Error;
};

class InvalidGrid : public Error {
public:
    using Error::Error;
};

// --- simulate ---

class InvalidScenario : public Error {
public:
    using Error::Error;
};

}  // namespace funnelscope
