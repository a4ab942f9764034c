#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace slicegb {

/// Byte offsets [start, end) into parsed text.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, SourceSpan span)
      : std::invalid_argument(what + " at " + std::to_string(span.start) + ".." +
                              std::to_string(span.end)),
        span_(span) {}
  SourceSpan span() const noexcept { return span_; }

 private:
  SourceSpan span_;
};

/// A theorem's hypothesis failed on the given data. Base of all errors that
/// mean "the construction does not apply here" rather than "bad input".
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
};

#define SLICEGB_HYPOTHESIS_ERROR(Name)                                  \
  class Name : public HypothesisError {                                 \
   public:                                                              \
    using HypothesisError::HypothesisError;                             \
    const char* kind() const noexcept override { return #Name; }        \
  };

/// LT_sigma(g) != LT_sigmahat(pi_L(g)) for some basis element; `offending`
/// holds the element positions.
class HypothesisViolation : public HypothesisError {
 public:
  HypothesisViolation(const std::string& what, std::vector<std::size_t> offending)
      : HypothesisError(what), offending_(std::move(offending)) {}
  const char* kind() const noexcept override { return "HypothesisViolation"; }
  const std::vector<std::size_t>& offending() const noexcept { return offending_; }

 private:
  std::vector<std::size_t> offending_;
};

SLICEGB_HYPOTHESIS_ERROR(ZeroDivisor)
SLICEGB_HYPOTHESIS_ERROR(NotSectionBasis)
SLICEGB_HYPOTHESIS_ERROR(NonGenericSlices)
SLICEGB_HYPOTHESIS_ERROR(LTDrift)
SLICEGB_HYPOTHESIS_ERROR(MembershipFailed)
SLICEGB_HYPOTHESIS_ERROR(DependentParameters)
SLICEGB_HYPOTHESIS_ERROR(DenominatorVanishes)
SLICEGB_HYPOTHESIS_ERROR(NotLinearInParams)
SLICEGB_HYPOTHESIS_ERROR(Underdetermined)
SLICEGB_HYPOTHESIS_ERROR(Inconsistent)
SLICEGB_HYPOTHESIS_ERROR(NonPrincipal)

#undef SLICEGB_HYPOTHESIS_ERROR

/// Timeout or retry cap reached.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace slicegb
