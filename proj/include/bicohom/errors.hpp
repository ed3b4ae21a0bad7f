#ifndef BICOHOM_ERRORS_HPP
#define BICOHOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bicohom {

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct SubspaceViolation : std::invalid_argument {
    explicit SubspaceViolation(const std::string& what) : std::invalid_argument(what) {}
};

struct BadNumber : std::invalid_argument {
    explicit BadNumber(const std::string& what) : std::invalid_argument(what) {}
};

struct BadShape : std::invalid_argument {
    explicit BadShape(const std::string& what) : std::invalid_argument(what) {}
};

struct BadSpec : std::invalid_argument {
    explicit BadSpec(const std::string& what) : std::invalid_argument(what) {}
};

struct BadDimension : std::invalid_argument {
    explicit BadDimension(const std::string& what) : std::invalid_argument(what) {}
};

struct BadBidegree : std::invalid_argument {
    explicit BadBidegree(const std::string& what) : std::invalid_argument(what) {}
};

struct BadQ : std::invalid_argument {
    explicit BadQ(const std::string& what) : std::invalid_argument(what) {}
};

struct MissingDimension : std::invalid_argument {
    explicit MissingDimension(const std::string& what) : std::invalid_argument(what) {}
};

struct UnsupportedPair : std::invalid_argument {
    explicit UnsupportedPair(const std::string& what) : std::invalid_argument(what) {}
};

struct UnknownStatement : std::invalid_argument {
    explicit UnknownStatement(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when an operation is handed a complex whose validation report is
/// nonempty. The report text is embedded in the message.
struct InvalidComplex : std::invalid_argument {
    explicit InvalidComplex(const std::string& what) : std::invalid_argument(what) {}
};

/// A Frolicher breach can only come from broken linear algebra, never from
/// the input model, so it is a logic error.
struct InequalityViolated : std::logic_error {
    explicit InequalityViolated(const std::string& what) : std::logic_error(what) {}
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

}  // namespace bicohom

#endif  // BICOHOM_ERRORS_HPP
