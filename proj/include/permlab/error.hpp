#pragma once

#include <stdexcept>
#include <string>

namespace permlab {

// Each error class maps to one CLI exit code (see tools/permlab.cpp).

struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct size_error : precondition_error {
  using precondition_error::precondition_error;
};

struct range_error : precondition_error {
  using precondition_error::precondition_error;
};

struct parse_error : precondition_error {
  using precondition_error::precondition_error;
};

struct domain_error : precondition_error {
  using precondition_error::precondition_error;
};

struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computed object contradicts a claim the library was asked to check.
struct falsification_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace permlab
