#pragma once

#include <stdexcept>
#include <string>

namespace cotsel {

// Error taxonomy shared by the library and the CLI. The CLI maps these to
// stable exit codes: data problems exit 2, infeasible selection exits 3,
// usage mistakes exit 64.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable or unwritable files.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent input data (bad records, schema violations,
// mismatched ids, invalid distributions).
class DataError : public Error {
 public:
  using Error::Error;
};

// API preconditions violated by the caller (shape mismatches, out-of-range
// parameters, tractability guards).
class ContractError : public Error {
 public:
  using Error::Error;
};

// Selection cannot satisfy its capacity constraints (t*o > N).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Command-line usage problems.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace cotsel
