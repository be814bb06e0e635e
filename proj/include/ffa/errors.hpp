#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ffa {

// Base for all library errors. `code()` is the stable machine-readable name
// used in CLI output and verification reports.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct NotPrimeError : Error {
    explicit NotPrimeError(long long v)
        : Error("NotPrime", "not a prime power: " + std::to_string(v)) {}
};

struct BoundExceededError : Error {
    explicit BoundExceededError(long long q, long long bound)
        : Error("BoundExceeded", "field size " + std::to_string(q) +
                                     " exceeds bound " + std::to_string(bound)) {}
};

struct ZeroElementError : Error {
    ZeroElementError() : Error("ZeroElement", "operation undefined at the zero element") {}
};

struct MixedFieldsError : Error {
    MixedFieldsError() : Error("MixedFields", "operands belong to different fields") {}
};

struct MixedRootsError : Error {
    MixedRootsError(int a, int b)
        : Error("MixedRoots", "cyclotomic operands have different root orders: " +
                                  std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct NonDivisibleError : Error {
    explicit NonDivisibleError(long long d)
        : Error("NonDivisible", "exact division by " + std::to_string(d) +
                                    " failed; this indicates an arithmetic bug") {}
};

struct ArityMismatchError : Error {
    explicit ArityMismatchError(const std::string& msg) : Error("ArityMismatch", msg) {}
};

struct BudgetExceededError : Error {
    explicit BudgetExceededError(std::uint64_t domain, std::uint64_t budget)
        : Error("BudgetExceeded", "exhaustive domain of " + std::to_string(domain) +
                                      " assignments exceeds budget " + std::to_string(budget)),
          domain_size(domain) {}
    std::uint64_t domain_size;
};

struct InternalNoGeneratorError : Error {
    InternalNoGeneratorError()
        : Error("InternalNoGenerator", "no generator found for F*_q; this is a bug") {}
};

}  // namespace ffa
