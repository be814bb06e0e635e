#include "ffa/report.hpp"

#include <limits>
#include <sstream>

namespace ffa {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json cyc_to_json(const CycNum& a) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : a.coeffs) {
        // Coefficients at desk-scale q fit comfortably in 64 bits; fall back
        // to a decimal string if one ever does not.
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
            arr.push_back(c.convert_to<long long>());
        else
            arr.push_back(c.str());
    }
    return arr;
}

namespace {

const char* mode_name(Mode m) { return m == Mode::Exact ? "exact" : "float"; }
const char* strategy_name(Strategy s) {
    return s == Strategy::Exhaustive ? "exhaustive" : "sampled";
}

}  // namespace

ordered_json report_to_json(const VerifyReport& rep) {
    ordered_json j;
    j["identity"] = rep.identity;
    j["q"] = rep.q;
    j["mode"] = mode_name(rep.mode);
    j["strategy"] = strategy_name(rep.strategy);
    j["seed"] = rep.seed;
    j["tuples_checked"] = rep.tuples_checked;
    j["rejected"] = rep.rejected;
    ordered_json fails = ordered_json::array();
    for (const auto& f : rep.failures) {
        ordered_json fj;
        ordered_json params;
        for (size_t i = 0; i < rep.params.size(); ++i) params[rep.params[i].name] = f.assignment[i];
        fj["params"] = params;
        fj["lhs"] = cyc_to_json(f.lhs);
        fj["rhs"] = cyc_to_json(f.rhs);
        fails.push_back(fj);
    }
    j["failures"] = fails;
    j["elapsed_ms"] = rep.elapsed_ms;
    j["quarantined"] = rep.quarantined;
    if (!rep.error.empty()) j["error"] = rep.error;
    return j;
}

ordered_json reports_to_json(const std::vector<VerifyReport>& reps) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reps) arr.push_back(report_to_json(r));
    return arr;
}

std::string reports_to_csv(const std::vector<VerifyReport>& reps) {
    std::ostringstream os;
    os << "identity,q,mode,strategy,seed,tuples_checked,rejected,failures,elapsed_ms,quarantined,"
          "error\n";
    for (const auto& r : reps) {
        os << r.identity << ',' << r.q << ',' << mode_name(r.mode) << ',' << strategy_name(r.strategy)
           << ',' << r.seed << ',' << r.tuples_checked << ',' << r.rejected << ','
           << r.failures.size() << ',' << r.elapsed_ms << ',' << (r.quarantined ? 1 : 0) << ','
           << r.error << '\n';
    }
    return os.str();
}

std::string report_summary_line(const VerifyReport& rep) {
    std::ostringstream os;
    os << (rep.error.empty() ? (rep.failures.empty() ? "PASS" : (rep.quarantined ? "QUAR" : "FAIL"))
                             : "ERR ")
       << "  q=" << rep.q << "  " << rep.identity << "  tuples=" << rep.tuples_checked
       << "  failures=" << rep.failures.size();
    if (!rep.error.empty()) os << "  error=" << rep.error;
    return os.str();
}

ordered_json field_header(const FieldTable& f) {
    ordered_json h;
    h["q"] = f.q;
    h["p"] = f.spec.p;
    h["k"] = f.spec.k;
    h["modulus"] = f.spec.modulus;
    h["generator"] = f.generator;
    return h;
}

ordered_json dump_dlog(const FieldTable& f) {
    ordered_json j = field_header(f);
    j["kind"] = "dlog";
    ordered_json rows = ordered_json::array();
    // Rows in power order g^1, g^2, ..., ending with the identity.
    for (int jj = 1; jj <= f.n; ++jj) {
        const int e = jj % f.n;
        rows.push_back(ordered_json::array({f.exp(e), e}));
    }
    j["rows"] = rows;
    return j;
}

ordered_json dump_binom(const FieldTable& f, const BinomialTable& bt) {
    ordered_json j = field_header(f);
    j["kind"] = "binom";
    j["n"] = f.n;
    ordered_json rows = ordered_json::array();
    for (int a = 0; a < f.n; ++a)
        for (int b = 0; b < f.n; ++b)
            rows.push_back(ordered_json::array({a, b, cyc_to_json(bt.entry(a, b))}));
    j["entries"] = rows;
    return j;
}

ordered_json dump_chars(const FieldTable& f) {
    ordered_json j = field_header(f);
    j["kind"] = "chars";
    j["n"] = f.n;
    ordered_json chars = ordered_json::array();
    for (int m = 0; m < f.n; ++m) {
        ordered_json cj;
        cj["m"] = m;
        ordered_json vals = ordered_json::array();
        for (Elem x = 0; x < f.q; ++x) vals.push_back(cyc_to_json(char_eval(Character{&f, m}, x)));
        cj["values"] = vals;
        chars.push_back(cj);
    }
    j["chars"] = chars;
    return j;
}

std::string table_to_csv(const nlohmann::ordered_json& dump) {
    std::ostringstream os;
    const std::string kind = dump.at("kind");
    os << "# q=" << dump.at("q") << " p=" << dump.at("p") << " k=" << dump.at("k")
       << " generator=" << dump.at("generator") << " modulus=" << dump.at("modulus").dump() << "\n";
    if (kind == "dlog") {
        os << "element,dlog\n";
        for (const auto& row : dump.at("rows")) os << row[0] << ',' << row[1] << '\n';
    } else if (kind == "binom") {
        os << "a,b,coeffs\n";
        for (const auto& row : dump.at("entries"))
            os << row[0] << ',' << row[1] << ',' << '"' << row[2].dump() << '"' << '\n';
    } else {
        os << "m,x,coeffs\n";
        for (const auto& cj : dump.at("chars")) {
            int x = 0;
            for (const auto& val : cj.at("values")) os << cj.at("m") << ',' << x++ << ',' << '"' << val.dump() << '"' << '\n';
        }
    }
    return os.str();
}

}  // namespace ffa
