// Acceptance gate: one pass/fail line per top-level criterion; exits nonzero
// if any criterion fails.

#include <cstdio>
#include <exception>
#include <functional>
#include <thread>

#include "ffa/report.hpp"

using namespace ffa;

namespace {

int g_failures = 0;
bool g_nondivisible_seen = false;

int hw_jobs() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 2 : static_cast<int>(hc);
}

void criterion(const char* name, const std::function<bool()>& body) {
    bool ok = false;
    std::string detail;
    try {
        ok = body();
    } catch (const NonDivisibleError& e) {
        g_nondivisible_seen = true;
        detail = e.what();
    } catch (const std::exception& e) {
        detail = e.what();
    }
    if (!ok) ++g_failures;
    std::printf("%s  %s%s%s\n", ok ? "PASS" : "FAIL", name, detail.empty() ? "" : "  -- ",
                detail.c_str());
    std::fflush(stdout);
}

bool clean(const std::vector<VerifyReport>& reports, bool allow_quarantined_failures = false) {
    for (const auto& r : reports) {
        if (r.error == "NonDivisible") g_nondivisible_seen = true;
        if (!r.error.empty()) return false;
        if (!r.failures.empty() && !(allow_quarantined_failures && r.quarantined)) return false;
    }
    return true;
}

std::vector<VerifyReport> run(std::vector<long long> qs, std::vector<std::string> ids,
                              std::optional<Strategy> strat = std::nullopt, Mode mode = Mode::Exact,
                              std::uint64_t seed = 42, std::uint64_t samples = 1000) {
    RunConfig cfg;
    cfg.qs = std::move(qs);
    cfg.ids = std::move(ids);
    cfg.strategy = strat;
    cfg.mode = mode;
    cfg.seed = seed;
    cfg.samples = samples;
    cfg.jobs = hw_jobs();
    return check_all(cfg);
}

nlohmann::ordered_json stripped(std::vector<VerifyReport> reports) {
    for (auto& r : reports) r.elapsed_ms = 0;
    return reports_to_json(reports);
}

}  // namespace

int main() {
    criterion("2F1 character sum == defining sum, q in {3,4,5,7}, exhaustive", [] {
        const auto reports = run({3, 4, 5, 7}, {"f21-def-eq-charsum"}, Strategy::Exhaustive);
        if (!clean(reports)) return false;
        // q = 7: 6^3 character triples times 7 arguments.
        return reports.back().tuples_checked == 1512;
    });

    criterion("F2 character sum == defining sum, q<=5 exhaustive, q in {7,8,9} sampled", [] {
        const auto ex = run({3, 4, 5}, {"f2-def-eq-charsum"}, Strategy::Exhaustive);
        if (!clean(ex)) return false;
        if (ex[2].tuples_checked != 25600) return false;
        const auto sa = run({7, 8, 9}, {"f2-def-eq-charsum"}, Strategy::Sampled);
        if (!clean(sa)) return false;
        for (const auto& r : sa)
            if (r.tuples_checked < 1000) return false;
        return true;
    });

    criterion("full registry: q in {3,4,5} exhaustive and {7,8,9} sampled, seed 42", [] {
        const auto ex = run({3, 4, 5}, {}, Strategy::Exhaustive);
        const auto sa = run({7, 8, 9}, {}, Strategy::Sampled);
        if (!clean(ex, true) || !clean(sa, true)) return false;
        // A quarantined identity may fail, but then its report must carry
        // explicit witnesses.
        for (const auto& reports : {ex, sa})
            for (const auto& r : reports)
                if (r.quarantined && !r.passed() && r.failures.empty()) return false;
        return true;
    });

    criterion("binomial symmetry identities, exhaustive at every prime power q <= 25", [] {
        std::vector<long long> qs;
        for (long long q = 2; q <= 25; ++q)
            if (is_prime_power(q)) qs.push_back(q);
        return clean(run(qs, {"binom-sym-1", "binom-sym-2", "binom-sym-3", "binom-sym-4"},
                         Strategy::Exhaustive));
    });

    criterion("binomial and trinomial theorems, exhaustive at q <= 7", [] {
        return clean(
            run({2, 3, 4, 5, 7}, {"binom-theorem", "trinomial"}, Strategy::Exhaustive));
    });

    criterion("float mode consistent with exact mode on the full registry at q = 5", [] {
        return clean(run({5}, {}, Strategy::Exhaustive, Mode::Float), true);
    });

    criterion("determinism: repeated seeded multi-q runs give identical reports", [] {
        const auto a = run({3, 4, 5, 7, 8, 9}, {});
        const auto b = run({3, 4, 5, 7, 8, 9}, {});
        return stripped(a) == stripped(b);
    });

    criterion("no exact-divisibility violation occurred in any run", [] {
        return !g_nondivisible_seen;
    });

    if (g_failures > 0) {
        std::printf("ACCEPTANCE: %d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("ACCEPTANCE: all criteria passed\n");
    return 0;
}
