#pragma once

#include <stdexcept>
#include <string>

namespace lrsel {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NonFiniteInput : public Error {
public:
    explicit NonFiniteInput(const std::string& where)
        : Error("non-finite value in " + where) {}
};

class ConstantColumn : public Error {
public:
    explicit ConstantColumn(int column)
        : Error("column " + std::to_string(column + 1) + " has zero sample variance"),
          column_(column) {}
    int column() const { return column_; }

private:
    int column_;
};

class EmptySubset : public Error {
public:
    EmptySubset() : Error("OLS fit requested for an empty subset") {}
};

class RankDeficient : public Error {
public:
    explicit RankDeficient(const std::string& what) : Error("rank-deficient design: " + what) {}
};

class DegenerateDesign : public Error {
public:
    explicit DegenerateDesign(const std::string& what) : Error("degenerate design: " + what) {}
};

class NoProgress : public Error {
public:
    NoProgress() : Error("path step is non-positive beyond tolerance") {}
};

class NoCandidates : public Error {
public:
    NoCandidates() : Error("every candidate subset was excluded") {}
};

class AllInfeasible : public Error {
public:
    explicit AllInfeasible(const std::string& criterion)
        : Error("every candidate scores +inf under " + criterion) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error("domain error: " + what) {}
};

class Infeasible : public Error {
public:
    Infeasible() : Error("n(1-rho) <= df: alpha* does not exist") {}
};

class DimensionTooLarge : public Error {
public:
    explicit DimensionTooLarge(int d, int limit)
        : Error("d = " + std::to_string(d) + " exceeds exhaustive-search limit " +
                std::to_string(limit)) {}
};

class NoConvergence : public Error {
public:
    explicit NoConvergence(long iters)
        : Error("coordinate descent did not converge after " + std::to_string(iters) +
                " sweeps") {}
};

class AllZeroCoefficients : public Error {
public:
    AllZeroCoefficients() : Error("lasso coefficient vector is identically zero") {}
};

class DegreesOfFreedomOverflow : public Error {
public:
    DegreesOfFreedomOverflow() : Error("effective degrees of freedom >= n") {}
};

class PerfectFit : public Error {
public:
    PerfectFit() : Error("residual sum of squares is zero") {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& file, long row, const std::string& column,
               const std::string& what)
        : Error(file + ": row " + std::to_string(row) + ", column '" + column + "': " + what) {}
};

class MissingDataFile : public Error {
public:
    explicit MissingDataFile(const std::string& path)
        : Error("data file not found: " + path) {}
};

}  // namespace lrsel
