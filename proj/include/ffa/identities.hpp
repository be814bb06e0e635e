#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ffa/appell.hpp"

namespace ffa {

// Memo keys pack up to 7 parameter slots at 16 bits each.
using MemoKey = unsigned __int128;
struct MemoKeyHash {
    std::size_t operator()(MemoKey k) const {
        return static_cast<std::size_t>(static_cast<std::uint64_t>(k) ^
                                        static_cast<std::uint64_t>(k >> 64) *
                                            0x9e3779b97f4a7c15ULL);
    }
};

// Shared evaluation state for one field: tables plus memo caches so that
// theta-sum identities reuse F2/2F1 evaluations. Not thread-safe; use one
// context per worker.
class EvalContext {
public:
    EvalContext(const FieldTable& f, const BinomialTable& bt) : f_(&f), bt_(&bt) {}

    const FieldTable& field() const { return *f_; }
    const BinomialTable& bintab() const { return *bt_; }
    int q() const { return f_->q; }
    int n() const { return f_->n; }

    // Character exponent arithmetic mod n.
    int cinv(int m) const { return ((-m) % n() + n()) % n(); }
    int cmul(int a, int b) const { return ((a + b) % n() + n()) % n(); }
    Character chr(int m) const { return Character{f_, ((m % n()) + n()) % n()}; }

    // Element shorthands.
    Elem eneg(Elem a) const { return f_->neg(a); }
    Elem eadd(Elem a, Elem b) const { return f_->add(a, b); }
    Elem esub(Elem a, Elem b) const { return f_->sub(a, b); }
    Elem emul(Elem a, Elem b) const { return f_->mul(a, b); }
    Elem ediv(Elem a, Elem b) const { return f_->div(a, b); }
    Elem one_minus(Elem a) const { return f_->one_minus(a); }
    Elem neg1() const { return f_->neg(1); }

    CycNum chi(int m, Elem x) const { return char_eval(chr(m), x); }
    CycNum eps(Elem x) const { return cyc_int(n(), x == 0 ? 0 : 1); }
    const CycNum& bn(int a, int b) const { return bt_->entry(a, b); }
    CycNum ci(long long v) const { return cyc_int(n(), v); }
    int dchar(int m) const { return ((m % n()) + n()) % n() == 0 ? 1 : 0; }

    // Memoized evaluators (definitional forms).
    const CycNum& F2(int a, int b, int bp, int c, int cp, Elem x, Elem y);
    const CycNum& F21(int a, int b, int c, Elem x);
    const CycNum& F32(int a0, int a1, int b1, int a2, int b2, Elem x);

    // Unmemoized character-sum forms (the objects under test).
    CycNum F21cs(int a, int b, int c, Elem x) const;
    CycNum F2cs(int a, int b, int bp, int c, int cp, Elem x, Elem y) const;

private:
    const FieldTable* f_;
    const BinomialTable* bt_;
    std::unordered_map<MemoKey, CycNum, MemoKeyHash> f2_memo_, f21_memo_, f32_memo_;
};

enum class ParamKind { Character, Element };

struct ParamSpec {
    std::string name;
    ParamKind kind;
};

using Assignment = std::vector<int>;  // per-param character exponent or element index

struct IdentitySpec {
    std::string id;
    std::vector<ParamSpec> params;
    std::function<bool(const EvalContext&, const Assignment&)> domain;
    std::function<CycNum(EvalContext&, const Assignment&)> lhs;
    std::function<CycNum(EvalContext&, const Assignment&)> rhs;
    std::string citation;
    bool quarantined = false;
    std::string note;
};

// Every identity in the verification corpus; ids are stable.
const std::vector<IdentitySpec>& registry();
const IdentitySpec& find_identity(const std::string& id);

enum class Mode { Exact, Float };
enum class Strategy { Exhaustive, Sampled };

struct Failure {
    Assignment assignment;
    CycNum lhs, rhs;
};

struct VerifyReport {
    std::string identity;
    int q = 0;
    Mode mode = Mode::Exact;
    Strategy strategy = Strategy::Exhaustive;
    std::uint64_t seed = 0;
    std::uint64_t tuples_checked = 0;
    std::uint64_t rejected = 0;
    std::vector<Failure> failures;
    double elapsed_ms = 0;
    bool quarantined = false;
    std::string error;  // error code when the check could not run
    std::vector<ParamSpec> params;

    bool passed() const { return error.empty() && failures.empty(); }
};

constexpr std::uint64_t kDefaultBudget = 10'000'000;
constexpr std::uint64_t kFloatToleranceDen = 1'000'000;  // rel tol 1e-6

// Checks one identity at one field. Exhaustive iterates the full assignment
// space (throws BudgetExceeded past the budget); sampled draws `samples`
// domain-accepted tuples with a generator seeded from (seed, q, id).
VerifyReport check_identity(EvalContext& ctx, const IdentitySpec& spec, Strategy strategy,
                            Mode mode = Mode::Exact, std::uint64_t seed = 0,
                            std::uint64_t samples = 1000,
                            std::uint64_t budget = kDefaultBudget);

struct RunConfig {
    std::vector<long long> qs;
    std::vector<std::string> ids;  // empty = all
    Mode mode = Mode::Exact;
    std::optional<Strategy> strategy;  // default: exhaustive for q <= 5, sampled above
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;
    long long field_bound = kDefaultFieldBound;
    int jobs = 1;
};

// Runs the (filtered) registry over every q. Per-identity errors are recorded
// in the reports instead of aborting the batch.
std::vector<VerifyReport> check_all(const RunConfig& cfg);

std::uint64_t raw_domain_size(const IdentitySpec& spec, int q);

}  // namespace ffa
