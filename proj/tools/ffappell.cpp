// ffappell: build finite fields, evaluate hypergeometric/Appell functions,
// dump tables, and run identity verification batches.
//
// Exit codes: 0 all pass, 1 identity failure, 2 usage error,
// 3 environment/limits (non-prime-power q, bound or budget exceeded, ...).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ffa/report.hpp"

namespace {

using namespace ffa;

void print_value(const CycNum& v, bool as_float) {
    std::cout << "coeffs " << cyc_to_json(v).dump() << "\n";
    std::cout << "= " << cyc_to_string(v) << "\n";
    if (as_float) {
        const auto c = to_complex(v);
        std::cout << "~ " << c.real() << (c.imag() < 0 ? " - " : " + ")
                  << std::abs(c.imag()) << "i\n";
    }
}

void print_field_header(const FieldTable& f) {
    std::cout << "q=" << f.q << " p=" << f.spec.p << " k=" << f.spec.k << " generator="
              << f.generator << " modulus=" << nlohmann::json(f.spec.modulus).dump() << "\n";
}

int run_verify(const RunConfig& cfg, const std::string& out, const std::string& format) {
    const auto reports = check_all(cfg);
    long long cur_q = -1;
    bool any_fail = false, any_err = false;
    for (const auto& rep : reports) {
        if (rep.q != cur_q) {
            cur_q = rep.q;
            try {
                print_field_header(build_field_q(cur_q, cfg.field_bound));
            } catch (const Error&) {
                std::cout << "q=" << cur_q << " (field construction failed)\n";
            }
        }
        std::cout << report_summary_line(rep) << "\n";
        if (!rep.error.empty()) any_err = true;
        if (!rep.failures.empty() && !rep.quarantined) any_fail = true;
    }
    if (!out.empty()) {
        std::ofstream os(out);
        if (!os) {
            std::cerr << "error: cannot open output file " << out << "\n";
            return 3;
        }
        if (format == "csv")
            os << reports_to_csv(reports);
        else
            os << reports_to_json(reports).dump(2) << "\n";
    }
    if (any_fail) return 1;
    if (any_err) return 3;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-field hypergeometric/Appell evaluator and identity checker"};
    app.require_subcommand(1);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run identity checks and write a report");
    long long q_single = -1, q_min = -1, q_max = -1;
    std::vector<std::string> identities;
    std::string mode_s = "exact", strategy_s, out_path, format = "json";
    std::uint64_t samples = 1000, seed = 0, budget = ffa::kDefaultBudget;
    long long field_bound = ffa::kDefaultFieldBound;
    int jobs = 1;
    verify->add_option("--q", q_single, "single field size (prime power)");
    verify->add_option("--q-min", q_min, "range start; range keeps prime powers only");
    verify->add_option("--q-max", q_max, "range end (inclusive)");
    verify->add_option("--identities", identities, "identity ids (default: all)")
        ->delimiter(',');
    verify->add_option("--mode", mode_s, "exact|float")
        ->check(CLI::IsMember({"exact", "float"}));
    verify->add_option("--strategy", strategy_s, "exhaustive|sampled (default: by q)")
        ->check(CLI::IsMember({"exhaustive", "sampled"}));
    verify->add_option("--samples", samples, "tuples per identity when sampling");
    verify->add_option("--seed", seed, "sampling seed");
    verify->add_option("--out", out_path, "report file path");
    verify->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--budget", budget, "max evaluations per exhaustive check")
        ->envname("FFAPPELL_BUDGET");
    verify->add_option("--field-bound", field_bound, "max field size");
    verify->add_option("--jobs", jobs, "worker threads");

    // ---- eval ----
    auto* eval = app.add_subcommand("eval", "evaluate one function at one point");
    eval->require_subcommand(1);
    long long eq = 0;
    int A = 0, B = 0, Bp = 0, C = 0, Cp = 0, D = 0, E = 0, x = 0, y = 0;
    bool as_float = false;
    auto add_common = [&](CLI::App* s, bool chars_ab, bool char_c, bool has_x, bool has_y,
                          bool char_bp_cp = false, bool chars_de = false) {
        s->add_option("--q", eq, "field size")->required();
        if (chars_ab) {
            s->add_option("--A", A, "character exponent A")->required();
            s->add_option("--B", B, "character exponent B")->required();
        }
        if (char_c) s->add_option("--C", C, "character exponent C")->required();
        if (char_bp_cp) {
            s->add_option("--Bp", Bp, "character exponent B'")->required();
            s->add_option("--Cp", Cp, "character exponent C'")->required();
        }
        if (chars_de) {
            s->add_option("--D", D, "character exponent D")->required();
            s->add_option("--E", E, "character exponent E")->required();
        }
        if (has_x) s->add_option("--x", x, "element index x")->required();
        if (has_y) s->add_option("--y", y, "element index y")->required();
        s->add_flag("--float", as_float, "also print the complex approximation");
    };
    auto* e_jac = eval->add_subcommand("jacobi", "Jacobi sum J(A,B)");
    add_common(e_jac, true, false, false, false);
    auto* e_bin = eval->add_subcommand("binom", "binomial coefficient {A|B}");
    add_common(e_bin, true, false, false, false);
    auto* e_2f1 = eval->add_subcommand("2f1", "2F1(A,B;C|x), defining sum");
    add_common(e_2f1, true, true, true, false);
    auto* e_2f1cs = eval->add_subcommand("2f1cs", "2F1(A,B;C|x), character sum");
    add_common(e_2f1cs, true, true, true, false);
    auto* e_3f2 = eval->add_subcommand("3f2", "3F2(A,B,C;D,E|x), character sum");
    add_common(e_3f2, true, true, true, false, false, true);
    auto* e_f1 = eval->add_subcommand("f1", "Appell F1(A;B,B';C;x,y)");
    e_f1->add_option("--q", eq)->required();
    e_f1->add_option("--A", A)->required();
    e_f1->add_option("--B", B)->required();
    e_f1->add_option("--Bp", Bp)->required();
    e_f1->add_option("--C", C)->required();
    e_f1->add_option("--x", x)->required();
    e_f1->add_option("--y", y)->required();
    e_f1->add_flag("--float", as_float);
    auto* e_f2 = eval->add_subcommand("f2", "Appell F2(A;B,B';C,C';x,y), double sum");
    add_common(e_f2, true, true, true, true, true);
    auto* e_f2cs = eval->add_subcommand("f2cs", "Appell F2, character sum + boundary term");
    add_common(e_f2cs, true, true, true, true, true);

    // ---- table ----
    auto* table = app.add_subcommand("table", "dump dlog/binom/chars tables");
    table->require_subcommand(1);
    long long tq = 0;
    std::string tformat = "csv";
    auto* t_dlog = table->add_subcommand("dlog", "element -> discrete log");
    auto* t_binom = table->add_subcommand("binom", "full binomial coefficient table");
    auto* t_chars = table->add_subcommand("chars", "character values on all elements");
    for (auto* s : {t_dlog, t_binom, t_chars}) {
        s->add_option("--q", tq, "field size")->required();
        s->add_option("--format", tformat, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            ffa::RunConfig cfg;
            if (q_single > 0) cfg.qs.push_back(q_single);
            if (q_min > 0 || q_max > 0) {
                if (q_min <= 0 || q_max < q_min) {
                    std::cerr << "error: --q-min/--q-max must give a nonempty range\n";
                    return 2;
                }
                for (long long v = q_min; v <= q_max; ++v)
                    if (ffa::is_prime_power(v)) cfg.qs.push_back(v);
            }
            if (cfg.qs.empty()) {
                std::cerr << "error: no field sizes given (use --q or --q-min/--q-max)\n";
                return 2;
            }
            for (const auto& id : identities)
                if (id != "all") cfg.ids.push_back(id);
            cfg.mode = mode_s == "float" ? ffa::Mode::Float : ffa::Mode::Exact;
            if (strategy_s == "exhaustive") cfg.strategy = ffa::Strategy::Exhaustive;
            if (strategy_s == "sampled") cfg.strategy = ffa::Strategy::Sampled;
            cfg.samples = samples;
            cfg.seed = seed;
            cfg.budget = budget;
            cfg.field_bound = field_bound;
            cfg.jobs = jobs;
            for (const auto& id : cfg.ids) ffa::find_identity(id);  // fail fast on typos
            return run_verify(cfg, out_path, format);
        }

        if (*eval) {
            const ffa::FieldTable f = ffa::build_field_q(eq);
            auto chk = [&](int v, const char* name) {
                if (v < 0 || v >= f.q)
                    throw ffa::Error("BadElement",
                                     std::string(name) + " must be an element index in [0, q)");
            };
            auto ch = [&](int m) {
                return ffa::Character{&f, ((m % f.n) + f.n) % f.n};
            };
            ffa::CycNum val = ffa::cyc_zero(f.n);
            if (*e_jac) {
                val = ffa::jacobi(ch(A), ch(B));
            } else if (*e_bin) {
                const ffa::BinomialTable bt(f);
                val = ffa::binom(bt, ch(A), ch(B));
            } else if (*e_2f1) {
                chk(x, "x");
                val = ffa::f21_def(ch(A), ch(B), ch(C), x);
            } else if (*e_2f1cs) {
                chk(x, "x");
                const ffa::BinomialTable bt(f);
                val = ffa::f21_charsum(bt, ch(A), ch(B), ch(C), x);
            } else if (*e_3f2) {
                chk(x, "x");
                const ffa::BinomialTable bt(f);
                val = ffa::fpq_charsum(bt, {ch(A), ch(B), ch(C)}, {ch(D), ch(E)}, x);
            } else if (*e_f1) {
                chk(x, "x");
                chk(y, "y");
                val = ffa::f1_def(ch(A), ch(B), ch(Bp), ch(C), x, y);
            } else if (*e_f2) {
                chk(x, "x");
                chk(y, "y");
                val = ffa::f2_def(ch(A), ch(B), ch(Bp), ch(C), ch(Cp), x, y);
            } else if (*e_f2cs) {
                chk(x, "x");
                chk(y, "y");
                const ffa::BinomialTable bt(f);
                val = ffa::f2_charsum(bt, ch(A), ch(B), ch(Bp), ch(C), ch(Cp), x, y);
            }
            print_field_header(f);
            print_value(val, as_float);
            return 0;
        }

        if (*table) {
            const ffa::FieldTable f = ffa::build_field_q(tq);
            nlohmann::ordered_json dump;
            if (*t_dlog) {
                dump = ffa::dump_dlog(f);
            } else if (*t_binom) {
                const ffa::BinomialTable bt(f);
                dump = ffa::dump_binom(f, bt);
            } else {
                dump = ffa::dump_chars(f);
            }
            if (tformat == "json")
                std::cout << dump.dump(2) << "\n";
            else
                std::cout << ffa::table_to_csv(dump);
            return 0;
        }
    } catch (const ffa::Error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
