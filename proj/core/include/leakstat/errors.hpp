#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace leakstat {

// Base class for all library errors. `code()` is a stable machine-readable
// identifier; `what()` carries the human-readable context.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define LEAKSTAT_DEFINE_ERROR(NAME, CODE)                   \
  class NAME : public Error {                               \
   public:                                                  \
    explicit NAME(const std::string& message)               \
        : Error(CODE, message) {}                           \
  }

LEAKSTAT_DEFINE_ERROR(TooFewKeywordsError, "too_few_keywords");
LEAKSTAT_DEFINE_ERROR(SizesExceedCorpusError, "sizes_exceed_corpus");
LEAKSTAT_DEFINE_ERROR(MissingTimestampError, "missing_timestamp");
LEAKSTAT_DEFINE_ERROR(EmptyDatasetError, "empty_dataset");
LEAKSTAT_DEFINE_ERROR(DimensionMismatchError, "dimension_mismatch");
LEAKSTAT_DEFINE_ERROR(TooManyQueriesError, "too_many_queries");
LEAKSTAT_DEFINE_ERROR(KTooLargeError, "k_too_large");
LEAKSTAT_DEFINE_ERROR(NoKnownQueriesError, "no_known_queries");
LEAKSTAT_DEFINE_ERROR(InfeasibleError, "infeasible");
LEAKSTAT_DEFINE_ERROR(TokenSetMismatchError, "token_set_mismatch");
LEAKSTAT_DEFINE_ERROR(DomainError, "domain_error");
LEAKSTAT_DEFINE_ERROR(DegenerateDesignError, "degenerate_design");
LEAKSTAT_DEFINE_ERROR(NoFiniteBoundError, "no_finite_bound");
LEAKSTAT_DEFINE_ERROR(SlopeSignError, "slope_sign_error");
LEAKSTAT_DEFINE_ERROR(InvalidCountsError, "invalid_counts");
LEAKSTAT_DEFINE_ERROR(InsufficientDataError, "insufficient_data");
LEAKSTAT_DEFINE_ERROR(ConfigError, "config_error");
LEAKSTAT_DEFINE_ERROR(IoError, "io_error");
LEAKSTAT_DEFINE_ERROR(ParseError, "parse_error");

#undef LEAKSTAT_DEFINE_ERROR

}  // namespace leakstat
