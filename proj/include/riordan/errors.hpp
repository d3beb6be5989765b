#pragma once

#include <stdexcept>
#include <string>

namespace riordan {

// Exact division failed; upstream math is inconsistent, not a recoverable state.
struct NotDivisible : std::domain_error {
  using std::domain_error::domain_error;
};

struct DegreeExceeded : std::domain_error {
  using std::domain_error::domain_error;
};

struct NonzeroConstantTerm : std::domain_error {
  using std::domain_error::domain_error;
};

struct NonUnitConstantTerm : std::domain_error {
  using std::domain_error::domain_error;
};

struct BadLowOrderTerms : std::domain_error {
  using std::domain_error::domain_error;
};

struct InsufficientOrder : std::domain_error {
  using std::domain_error::domain_error;
};

struct InsufficientData : std::domain_error {
  using std::domain_error::domain_error;
};

struct InsufficientMoments : InsufficientData {
  using InsufficientData::InsufficientData;
};

struct NotTridiagonal : std::domain_error {
  using std::domain_error::domain_error;
};

struct NonMonicSuperdiagonal : std::domain_error {
  using std::domain_error::domain_error;
};

struct TooLarge : std::domain_error {
  using std::domain_error::domain_error;
};

struct UnknownFamily : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace riordan
