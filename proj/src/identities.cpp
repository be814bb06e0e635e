#include "ffa/identities.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <thread>

namespace ffa {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

MemoKey pack_key(std::initializer_list<int> vals) {
    MemoKey key = 0;
    for (int v : vals) key = (key << 16) | static_cast<MemoKey>(static_cast<unsigned>(v));
    return key;
}

}  // namespace

const CycNum& EvalContext::F2(int a, int b, int bp, int c, int cp, Elem x, Elem y) {
    a = ((a % n()) + n()) % n();
    b = ((b % n()) + n()) % n();
    bp = ((bp % n()) + n()) % n();
    c = ((c % n()) + n()) % n();
    cp = ((cp % n()) + n()) % n();
    const MemoKey key = pack_key({a, b, bp, c, cp, x, y});
    auto it = f2_memo_.find(key);
    if (it == f2_memo_.end())
        it = f2_memo_
                 .emplace(key, f2_def(chr(a), chr(b), chr(bp), chr(c), chr(cp), x, y))
                 .first;
    return it->second;
}

const CycNum& EvalContext::F21(int a, int b, int c, Elem x) {
    a = ((a % n()) + n()) % n();
    b = ((b % n()) + n()) % n();
    c = ((c % n()) + n()) % n();
    const MemoKey key = pack_key({a, b, c, x});
    auto it = f21_memo_.find(key);
    if (it == f21_memo_.end())
        it = f21_memo_.emplace(key, f21_def(chr(a), chr(b), chr(c), x)).first;
    return it->second;
}

const CycNum& EvalContext::F32(int a0, int a1, int b1, int a2, int b2, Elem x) {
    a0 = ((a0 % n()) + n()) % n();
    a1 = ((a1 % n()) + n()) % n();
    b1 = ((b1 % n()) + n()) % n();
    a2 = ((a2 % n()) + n()) % n();
    b2 = ((b2 % n()) + n()) % n();
    const MemoKey key = pack_key({a0, a1, b1, a2, b2, x});
    auto it = f32_memo_.find(key);
    if (it == f32_memo_.end())
        it = f32_memo_
                 .emplace(key, fpq_charsum(*bt_, {chr(a0), chr(a1), chr(a2)}, {chr(b1), chr(b2)}, x))
                 .first;
    return it->second;
}

CycNum EvalContext::F21cs(int a, int b, int c, Elem x) const {
    return f21_charsum(*bt_, chr(a), chr(b), chr(c), x);
}

CycNum EvalContext::F2cs(int a, int b, int bp, int c, int cp, Elem x, Elem y) const {
    return f2_charsum(*bt_, chr(a), chr(b), chr(bp), chr(c), chr(cp), x, y);
}

std::uint64_t raw_domain_size(const IdentitySpec& spec, int q) {
    std::uint64_t size = 1;
    for (const auto& p : spec.params) {
        const std::uint64_t radix = p.kind == ParamKind::Character
                                        ? static_cast<std::uint64_t>(q - 1)
                                        : static_cast<std::uint64_t>(q);
        if (size > kDefaultBudget * 1024 / std::max<std::uint64_t>(radix, 1))
            return UINT64_MAX;  // saturate; caller only compares against budgets
        size *= std::max<std::uint64_t>(radix, 1);
    }
    return size;
}

namespace {

bool values_agree(Mode mode, const CycNum& l, const CycNum& r) {
    if (mode == Mode::Exact) return l == r;
    const auto lc = to_complex(l), rc = to_complex(r);
    return std::abs(lc - rc) < 1e-6 * (1.0 + std::abs(lc));
}

}  // namespace

VerifyReport check_identity(EvalContext& ctx, const IdentitySpec& spec, Strategy strategy,
                            Mode mode, std::uint64_t seed, std::uint64_t samples,
                            std::uint64_t budget) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.identity = spec.id;
    rep.q = ctx.q();
    rep.mode = mode;
    rep.strategy = strategy;
    rep.seed = seed;
    rep.quarantined = spec.quarantined;
    rep.params = spec.params;

    const size_t np = spec.params.size();
    std::vector<int> radix(np);
    for (size_t i = 0; i < np; ++i)
        radix[i] = spec.params[i].kind == ParamKind::Character ? ctx.n() : ctx.q();

    auto run_tuple = [&](const Assignment& v) {
        ++rep.tuples_checked;
        CycNum l = spec.lhs(ctx, v);
        CycNum r = spec.rhs(ctx, v);
        if (!values_agree(mode, l, r)) rep.failures.push_back({v, std::move(l), std::move(r)});
    };

    if (strategy == Strategy::Exhaustive) {
        const std::uint64_t raw = raw_domain_size(spec, ctx.q());
        if (raw > budget) throw BudgetExceededError(raw, budget);
        Assignment v(np, 0);
        while (true) {
            if (spec.domain(ctx, v))
                run_tuple(v);
            else
                ++rep.rejected;
            size_t i = 0;
            while (i < np && ++v[i] == radix[i]) v[i++] = 0;
            if (i == np) break;
        }
    } else {
        std::seed_seq sseq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                           static_cast<std::uint32_t>(ctx.q()),
                           static_cast<std::uint32_t>(fnv1a(spec.id)),
                           static_cast<std::uint32_t>(fnv1a(spec.id) >> 32)};
        std::mt19937_64 rng(sseq);
        Assignment v(np, 0);
        std::uint64_t accepted = 0, draws = 0;
        const std::uint64_t max_draws = samples * 10000 + 1000;
        while (accepted < samples) {
            if (++draws > max_draws)
                throw Error("SamplingStalled",
                            "domain predicate rejected nearly all samples for " + spec.id);
            for (size_t i = 0; i < np; ++i)
                v[i] = static_cast<int>(rng() % static_cast<std::uint64_t>(radix[i]));
            if (!spec.domain(ctx, v)) {
                ++rep.rejected;
                continue;
            }
            ++accepted;
            run_tuple(v);
        }
    }

    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::vector<VerifyReport> check_all(const RunConfig& cfg) {
    std::vector<const IdentitySpec*> selected;
    if (cfg.ids.empty()) {
        for (const auto& s : registry()) selected.push_back(&s);
    } else {
        for (const auto& id : cfg.ids) selected.push_back(&find_identity(id));
    }

    std::vector<VerifyReport> reports;
    for (long long q : cfg.qs) {
        const size_t base = reports.size();
        reports.resize(base + selected.size());
        FieldTable field;
        bool field_ok = true;
        std::string field_err;
        try {
            field = build_field_q(q, cfg.field_bound);
        } catch (const Error& e) {
            field_ok = false;
            field_err = e.code();
        }
        const Strategy strat =
            cfg.strategy.value_or(q <= 5 ? Strategy::Exhaustive : Strategy::Sampled);
        if (!field_ok) {
            for (size_t i = 0; i < selected.size(); ++i) {
                VerifyReport& rep = reports[base + i];
                rep.identity = selected[i]->id;
                rep.q = static_cast<int>(q);
                rep.mode = cfg.mode;
                rep.strategy = strat;
                rep.seed = cfg.seed;
                rep.quarantined = selected[i]->quarantined;
                rep.params = selected[i]->params;
                rep.error = field_err;
            }
            continue;
        }
        const BinomialTable bt(field);

        std::atomic<size_t> next{0};
        auto worker = [&]() {
            EvalContext ctx(field, bt);
            for (size_t i = next.fetch_add(1); i < selected.size(); i = next.fetch_add(1)) {
                const IdentitySpec& spec = *selected[i];
                VerifyReport& rep = reports[base + i];
                try {
                    rep = check_identity(ctx, spec, strat, cfg.mode, cfg.seed, cfg.samples,
                                         cfg.budget);
                } catch (const Error& e) {
                    rep.identity = spec.id;
                    rep.q = field.q;
                    rep.mode = cfg.mode;
                    rep.strategy = strat;
                    rep.seed = cfg.seed;
                    rep.quarantined = spec.quarantined;
                    rep.params = spec.params;
                    rep.error = e.code();
                }
            }
        };
        const int jobs = std::max(1, cfg.jobs);
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
    }
    return reports;
}

}  // namespace ffa
