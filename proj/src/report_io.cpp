#include "cauchykit/report_io.hpp"

#include "cauchykit/errors.hpp"

namespace cauchykit {

using nlohmann::json;

namespace {

Verdict verdict_from_string(const std::string& s) {
    if (s == "ExactMatch") return Verdict::ExactMatch;
    if (s == "WithinTolerance") return Verdict::WithinTolerance;
    if (s == "Fail") return Verdict::Fail;
    throw InvalidConfig("unknown verdict '" + s + "'");
}

} // namespace

json report_to_json(const IdentityReport& rep, bool include_terms) {
    json j;
    j["mode"] = to_string(rep.mode);
    j["order"] = rep.order;
    j["partition_count"] = rep.partition_count;
    if (rep.mode == EvalMode::ExactTruncated) {
        j["lhs"] = rep.lhs_exact->str();
        j["rhs"] = rep.rhs_exact->str();
        j["residual"] = rep.residual_exact->str();
    } else {
        j["lhs"] = *rep.lhs_value;
        j["rhs"] = *rep.rhs_value;
        j["residual"] = *rep.residual_value;
    }
    j["verdict"] = to_string(rep.verdict);
    if (include_terms) {
        json terms = json::array();
        for (const TermLog& t : rep.terms) {
            json e;
            e["lambda"] = t.lambda.str();
            e["staircase"] = t.expo;
            e["G"] = t.g.str();
            e["C"] = t.c.str();
            e["s_a"] = t.s_a.str();
            e["s_x"] = t.s_x.str();
            e["term"] = t.term.str();
            terms.push_back(std::move(e));
        }
        j["terms"] = std::move(terms);
    }
    return j;
}

IdentityReport report_from_json(const json& j) {
    IdentityReport rep;
    std::string mode = j.at("mode").get<std::string>();
    if (mode == "exact") rep.mode = EvalMode::ExactTruncated;
    else if (mode == "analytic") rep.mode = EvalMode::Analytic;
    else throw InvalidConfig("unknown mode '" + mode + "'");

    rep.order = j.at("order").get<int>();
    rep.partition_count = j.at("partition_count").get<long>();
    if (rep.mode == EvalMode::ExactTruncated) {
        rep.lhs_exact = Rational::parse(j.at("lhs").get<std::string>());
        rep.rhs_exact = Rational::parse(j.at("rhs").get<std::string>());
        rep.residual_exact = Rational::parse(j.at("residual").get<std::string>());
    } else {
        rep.lhs_value = j.at("lhs").get<double>();
        rep.rhs_value = j.at("rhs").get<double>();
        rep.residual_value = j.at("residual").get<double>();
    }
    rep.verdict = verdict_from_string(j.at("verdict").get<std::string>());

    if (j.contains("terms")) {
        for (const json& e : j.at("terms")) {
            TermLog t;
            t.lambda = Partition::parse(e.at("lambda").get<std::string>());
            t.expo = e.at("staircase").get<std::vector<int>>();
            t.g = Rational::parse(e.at("G").get<std::string>());
            t.c = Rational::parse(e.at("C").get<std::string>());
            t.s_a = Rational::parse(e.at("s_a").get<std::string>());
            t.s_x = Rational::parse(e.at("s_x").get<std::string>());
            t.term = Rational::parse(e.at("term").get<std::string>());
            rep.terms.push_back(std::move(t));
        }
    }
    return rep;
}

json audit_to_json(const std::vector<AuditRecord>& records) {
    json arr = json::array();
    for (const AuditRecord& r : records) {
        json e;
        e["example"] = to_string(r.example);
        e["lambda"] = r.lambda.str();
        e["claimed"] = r.claimed.str();
        e["computed"] = r.computed.str();
        e["match"] = r.match;
        arr.push_back(std::move(e));
    }
    return arr;
}

} // namespace cauchykit
