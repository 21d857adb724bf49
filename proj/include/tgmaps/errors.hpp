#pragma once

#include <stdexcept>
#include <string>

namespace tgmaps {

// A parameter outside its documented range (bad ell, bad descriptor, ...).
class parameter_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exponent tuple that is not a valid normal form for the group.
class malformed_element_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Request exceeds an exhaustive-computation gate.
class scale_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tuples of different kinds or from different groups.
class mismatch_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace tgmaps
