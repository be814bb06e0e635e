#include <doctest.h>

#include <sstream>

#include "ffa/report.hpp"

using namespace ffa;

TEST_CASE("report JSON uses the fixed key order") {
    const FieldTable f = build_field_q(3);
    const BinomialTable bt(f);
    EvalContext ctx(f, bt);
    const VerifyReport rep =
        check_identity(ctx, find_identity("f2-symmetry"), Strategy::Exhaustive);
    const auto j = report_to_json(rep);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"identity", "q", "mode", "strategy", "seed",
                                           "tuples_checked", "rejected", "failures",
                                           "elapsed_ms", "quarantined"});
    CHECK(j["identity"] == "f2-symmetry");
    CHECK(j["q"] == 3);
    CHECK(j["tuples_checked"] == 288);
    CHECK(j["failures"].empty());
}

TEST_CASE("failure witnesses serialize parameter names and both sides") {
    IdentitySpec bogus;
    bogus.id = "bogus";
    bogus.params = {{"x", ParamKind::Element}, {"y", ParamKind::Element}};
    bogus.domain = [](const EvalContext&, const Assignment&) { return true; };
    bogus.lhs = [](EvalContext& c, const Assignment& v) { return c.ci(v[0]); };
    bogus.rhs = [](EvalContext& c, const Assignment& v) { return c.ci(v[1]); };
    bogus.citation = "synthetic";
    const FieldTable f = build_field_q(3);
    const BinomialTable bt(f);
    EvalContext ctx(f, bt);
    const auto rep = check_identity(ctx, bogus, Strategy::Exhaustive);
    const auto j = report_to_json(rep);
    REQUIRE(!j["failures"].empty());
    const auto& fail = j["failures"][0];
    CHECK(fail.contains("params"));
    CHECK(fail["params"].contains("x"));
    CHECK(fail["params"].contains("y"));
    CHECK(fail.contains("lhs"));
    CHECK(fail.contains("rhs"));
}

TEST_CASE("error reports carry an error key") {
    VerifyReport rep;
    rep.identity = "binom-sym-1";
    rep.error = "NotPrime";
    const auto j = report_to_json(rep);
    CHECK(j["error"] == "NotPrime");
}

TEST_CASE("CSV summary has one row per report") {
    RunConfig cfg;
    cfg.qs = {3};
    cfg.ids = {"binom-sym-1", "f2-symmetry"};
    const auto reports = check_all(cfg);
    const std::string csv = reports_to_csv(reports);
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    CHECK(line ==
          "identity,q,mode,strategy,seed,tuples_checked,rejected,failures,elapsed_ms,"
          "quarantined,error");
    int rows = 0;
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 2);
}

TEST_CASE("dlog dump matches the worked q = 5 table") {
    const FieldTable f = build_field_q(5);
    const auto j = dump_dlog(f);
    CHECK(j["q"] == 5);
    CHECK(j["generator"] == 2);
    const auto& rows = j["rows"];
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == nlohmann::ordered_json::array({2, 1}));
    CHECK(rows[1] == nlohmann::ordered_json::array({4, 2}));
    CHECK(rows[2] == nlohmann::ordered_json::array({3, 3}));
    CHECK(rows[3] == nlohmann::ordered_json::array({1, 0}));
    const std::string csv = table_to_csv(j);
    CHECK(csv.find("2,1\n4,2\n3,3\n1,0\n") != std::string::npos);
}

TEST_CASE("binom dump round-trips against freshly computed values") {
    const FieldTable f = build_field_q(7);
    const BinomialTable bt(f);
    const auto j = dump_binom(f, bt);
    CHECK(j["n"] == 6);
    REQUIRE(j["entries"].size() == 36);
    const FieldTable f2 = build_field_q(7);
    const BinomialTable bt2(f2);
    for (const auto& row : j["entries"]) {
        const int a = row[0], b = row[1];
        CHECK(row[2] == cyc_to_json(bt2.entry(a, b)));
    }
}

TEST_CASE("chars dump covers the whole character group on all elements") {
    const FieldTable f = build_field_q(4);
    const auto j = dump_chars(f);
    REQUIRE(j["chars"].size() == 3);
    for (const auto& cj : j["chars"]) {
        REQUIRE(cj["values"].size() == 4);
        const int m = cj["m"];
        for (Elem x = 0; x < f.q; ++x)
            CHECK(cj["values"][x] == cyc_to_json(char_eval(Character{&f, m}, x)));
    }
}

TEST_CASE("table dumps are byte-stable across runs") {
    const FieldTable f1 = build_field_q(9);
    const FieldTable f2 = build_field_q(9);
    CHECK(dump_dlog(f1).dump() == dump_dlog(f2).dump());
    CHECK(table_to_csv(dump_chars(f1)) == table_to_csv(dump_chars(f2)));
}
