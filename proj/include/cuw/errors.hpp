#ifndef CUW_ERRORS_HPP
#define CUW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cuw {

// Base for all workbench errors; `kind` is a stable machine-readable tag
// used in JSON reports.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

#define CUW_ERROR_KIND(Name)                                        \
  class Name : public Error {                                       \
  public:                                                           \
    explicit Name(const std::string& msg) : Error(#Name, msg) {}    \
  }

CUW_ERROR_KIND(SpecParseError);
CUW_ERROR_KIND(SizeLimitExceeded);
CUW_ERROR_KIND(AxiomViolation);
CUW_ERROR_KIND(NotAnIdeal);
CUW_ERROR_KIND(DimensionMismatch);
CUW_ERROR_KIND(RingMismatch);
CUW_ERROR_KIND(BudgetExceeded);
CUW_ERROR_KIND(ClassPreconditionFailed);
CUW_ERROR_KIND(NotIdempotent);
CUW_ERROR_KIND(HypothesisFailed);
CUW_ERROR_KIND(DecompositionWitnessNotFound);
CUW_ERROR_KIND(WitnessNotFound);
CUW_ERROR_KIND(NotAChain);
CUW_ERROR_KIND(TailInadmissible);
CUW_ERROR_KIND(NotInS);
CUW_ERROR_KIND(NotIncreasing);
CUW_ERROR_KIND(SearchExhausted);
CUW_ERROR_KIND(FgSearchUnsupported);
CUW_ERROR_KIND(InterpolantNotFound);
CUW_ERROR_KIND(CofinalityFailed);
CUW_ERROR_KIND(NotWeaklySUnital);
CUW_ERROR_KIND(ParseError);
CUW_ERROR_KIND(UnknownSuite);
CUW_ERROR_KIND(UnknownConstructor);
CUW_ERROR_KIND(UnsupportedFormat);
CUW_ERROR_KIND(InternalError);

#undef CUW_ERROR_KIND

// Running operation counter. Search routines charge elementary ring
// operations against it and abort with BudgetExceeded when exhausted.
class Budget {
public:
  explicit Budget(uint64_t limit = kDefaultLimit) : limit_(limit) {}

  void charge(uint64_t ops) {
    used_ += ops;
    if (used_ > limit_)
      throw BudgetExceeded("operation budget exhausted (" +
                           std::to_string(used_) + " > " +
                           std::to_string(limit_) + ")");
  }
  bool try_charge(uint64_t ops) {
    if (used_ + ops > limit_) return false;
    used_ += ops;
    return true;
  }
  uint64_t used() const { return used_; }
  uint64_t remaining() const { return used_ >= limit_ ? 0 : limit_ - used_; }
  uint64_t limit() const { return limit_; }

  static constexpr uint64_t kDefaultLimit = 100000000;  // 1e8 ring ops

private:
  uint64_t limit_;
  uint64_t used_ = 0;
};

}  // namespace cuw

#endif
