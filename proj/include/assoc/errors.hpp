#ifndef ASSOC_ERRORS_HPP
#define ASSOC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace assoc {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- table construction and algebra ---
struct NegativeEntry : Error { using Error::Error; };
struct ZeroTable : Error { using Error::Error; };
struct NonPositiveScale : Error { using Error::Error; };
struct DegenerateTable : Error { using Error::Error; };
struct InfeasibleD : Error { using Error::Error; };
struct NoValidRoot : Error { using Error::Error; };

// --- measures ---
struct UndefinedOdds : Error { using Error::Error; };
struct DegenerateMarginal : Error { using Error::Error; };
struct NonPositiveLambda : Error { using Error::Error; };
struct UndefinedRatio : Error { using Error::Error; };

// --- estimation ---
struct EmptyData : Error { using Error::Error; };
struct TooFewDraws : Error { using Error::Error; };
struct InvalidLevel : Error { using Error::Error; };

// --- empirical Bayes screening ---
struct DegenerateMargin : Error { using Error::Error; };
struct TooFewPairs : Error { using Error::Error; };
struct NonPositiveExpected : Error { using Error::Error; };

// --- ingestion; carries the 1-based line number of the offending input ---
struct ParseError : Error {
  ParseError(const std::string& msg, long line_no)
      : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
  long line;
};
struct NegativeCount : Error {
  NegativeCount(const std::string& msg, long line_no)
      : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
  long line;
};

}  // namespace assoc

#endif  // ASSOC_ERRORS_HPP
