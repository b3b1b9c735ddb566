#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fanchar/action.hpp"
#include "fanchar/character.hpp"
#include "fanchar/errors.hpp"
#include "fanchar/fan.hpp"
#include "fanchar/instance.hpp"

namespace fanchar {

struct AnalyzeOptions {
    bool graded = false;
    bool cross_check = false;
    ValidationLevel validation = ValidationLevel::Basic;
    long max_order = 10000;
};

// --- report data ------------------------------------------------------------

struct DivisorRow {
    long divisor = 1;
    long delta = 0;
    Int facets = 0;
    std::vector<Int> f_vector;
    std::vector<Int> h_vector;
    std::vector<Int> q_coefficients;
    std::map<long, long> cyclotomic_exponents;
    std::vector<Int> graded_coefficients;
    Int ungraded = 0;

    bool operator==(const DivisorRow&) const = default;
};

struct DecompositionRow {
    long subgroup = 1;  // divisor l labelling <c^l>
    Int f_value = 0;
    Rat multiplicity = 0;

    bool operator==(const DecompositionRow&) const = default;
};

struct VerdictInfo {
    std::string verdict;  // "Permutation" | "NotPermutation"
    std::optional<long> witness_divisor;
    std::optional<Rat> witness_multiplicity;

    bool operator==(const VerdictInfo&) const = default;
};

struct DegreeRow {
    long degree = 0;
    std::vector<DecompositionRow> decomposition;
    VerdictInfo verdict;

    bool operator==(const DegreeRow&) const = default;
};

struct GradedSection {
    std::vector<DegreeRow> degrees;
    bool all_permutation = true;

    bool operator==(const GradedSection&) const = default;
};

struct PrimePowerSection {
    bool applicable = false;
    long p = 0;
    long r = 0;
    bool pass = false;

    bool operator==(const PrimePowerSection&) const = default;
};

struct QFormulaRow {
    long divisor = 1;
    bool formula_ok = false;    // q_power_from_base matches the direct Q-polynomial
    bool valuation_ok = false;  // Q(1) equals the product of prime powers p^b

    bool operator==(const QFormulaRow&) const = default;
};

struct QuotientRow {
    long l = 1;
    long j = 1;
    bool graded_ok = false;
    bool ungraded_ok = false;

    bool operator==(const QuotientRow&) const = default;
};

struct CrossCheckSection {
    std::vector<QFormulaRow> q_formula;
    std::vector<QuotientRow> quotient;
    bool all_ok = true;

    bool operator==(const CrossCheckSection&) const = default;
};

struct Report {
    std::string name;
    long dim = 0;
    long order = 1;
    std::string validation_requested = "basic";
    std::string validation_achieved = "basic";
    bool h_symmetric = true;
    std::vector<DivisorRow> divisors;
    std::vector<DecompositionRow> decomposition;
    VerdictInfo ungraded_verdict;
    std::optional<GradedSection> graded;
    std::optional<PrimePowerSection> prime_power;
    std::optional<CrossCheckSection> cross_checks;

    bool operator==(const Report&) const = default;
};

// --- pipeline ---------------------------------------------------------------

namespace detail {

inline std::vector<DecompositionRow> decomposition_rows(const Decomposition& dec) {
    std::vector<DecompositionRow> rows;
    for (const auto& [l, f] : dec.f_values) {
        DecompositionRow row;
        row.subgroup = l;
        row.f_value = f;
        row.multiplicity = dec.multiplicities.at(l);
        rows.push_back(std::move(row));
    }
    return rows;
}

inline VerdictInfo verdict_info(const Decomposition& dec) {
    VerdictInfo v;
    v.verdict = verdict_name(dec.verdict);
    if (dec.verdict == Verdict::NotPermutation) {
        v.witness_divisor = dec.witness_divisor;
        v.witness_multiplicity = dec.witness_multiplicity;
    }
    return v;
}

}  // namespace detail

// Full pipeline: validation, per-divisor character data, decomposition, and
// the optional graded / cross-check sections.  Deterministic for identical
// input and options.
inline Report run_analyze(const InstanceFile& instance, const AnalyzeOptions& options = {}) {
    const Fan fan = instance.fan();
    const ValidationReport validation = validate_fan(fan, options.validation);
    const GroupAction action = validate_action(fan, instance.generator_matrix(),
                                               options.max_order);

    Report report;
    report.name = instance.name;
    report.dim = static_cast<long>(fan.dim);
    report.order = action.order;
    report.validation_requested = validation_level_name(validation.requested);
    report.validation_achieved = validation_level_name(validation.achieved);
    report.h_symmetric = validation.h_symmetric;

    const auto table = character_table(fan, action);
    std::map<long, Int> ungraded;
    for (const auto& [j, data] : table) {
        DivisorRow row;
        row.divisor = j;
        row.delta = static_cast<long>(data.fixed.delta);
        row.facets = Int(facet_count(data.fixed.complex));
        row.f_vector = f_vector(data.fixed.complex).counts;
        row.h_vector = h_polynomial(f_vector(data.fixed.complex), data.fixed.delta).coefficients();
        row.q_coefficients = data.q_poly.coefficients();
        row.cyclotomic_exponents = data.cyclo.exponents;
        row.graded_coefficients = data.graded.coefficients();
        row.ungraded = data.ungraded;
        report.divisors.push_back(std::move(row));
        ungraded[j] = data.ungraded;
    }

    const Decomposition dec = decompose(ungraded, action.order);
    report.decomposition = detail::decomposition_rows(dec);
    report.ungraded_verdict = detail::verdict_info(dec);

    if (options.graded) {
        const GradedDecomposition graded = decompose_graded(fan, action);
        GradedSection section;
        section.all_permutation = graded.all_permutation;
        for (std::size_t deg = 0; deg < graded.per_degree.size(); ++deg) {
            DegreeRow row;
            row.degree = static_cast<long>(deg);
            row.decomposition = detail::decomposition_rows(graded.per_degree[deg]);
            row.verdict = detail::verdict_info(graded.per_degree[deg]);
            section.degrees.push_back(std::move(row));
        }
        report.graded = std::move(section);

        PrimePowerSection pp;
        if (prime_power_split(action.order).first != 0) {
            const PrimePowerCheck check = prime_power_check(fan, action);
            pp.applicable = true;
            pp.p = check.p;
            pp.r = check.r;
            pp.pass = check.pass;
        }
        report.prime_power = pp;
    }

    if (options.cross_check) {
        CrossCheckSection section;
        const CyclotomicFactorization qc =
            factor_into_cyclotomics(q_polynomial(action, 1), action.order);
        for (long l : divisors(action.order)) {
            QFormulaRow row;
            row.divisor = l;
            row.formula_ok =
                (q_power_from_base(qc, action.order, l) == table.at(l).q_poly);
            Int valuation = 1;
            for (long p : prime_factors(action.order))
                valuation *= int_pow(Int(p), b_exponent(p, l, action.order, qc));
            row.valuation_ok = (table.at(l).q_poly(1) == valuation);
            section.all_ok = section.all_ok && row.formula_ok && row.valuation_ok;
            section.q_formula.push_back(row);
        }
        for (long l : divisors(action.order))
            for (const auto& entry : cross_check_quotient(fan, action, l)) {
                QuotientRow row;
                row.l = entry.l;
                row.j = entry.j;
                row.graded_ok = entry.graded_ok;
                row.ungraded_ok = entry.ungraded_ok;
                section.all_ok = section.all_ok && row.graded_ok && row.ungraded_ok;
                section.quotient.push_back(row);
            }
        report.cross_checks = std::move(section);
    }
    return report;
}

// --- emission ---------------------------------------------------------------

enum class ReportFormat { Text, Json };

namespace detail {

// The report must still satisfy its own reconstruction identity when emitted;
// a report that fails it must never leave the process.
inline void verify_report_consistency(const Report& report) {
    for (const auto& row : report.divisors) {
        Rat acc = 0;
        for (const auto& dec : report.decomposition)
            if (row.divisor % dec.subgroup == 0) acc += dec.multiplicity * Int(dec.subgroup);
        if (acc != Rat(row.ungraded))
            throw InternalInconsistency(
                "decomposition does not rebuild the ungraded character at divisor " +
                std::to_string(row.divisor));
    }
}

inline std::string subgroup_label(long l, long n) {
    if (l == 1) return "G";
    if (l == n) return "<1>";
    return "<c^" + std::to_string(l) + ">";
}

inline std::string decomposition_line(const std::vector<DecompositionRow>& rows, long n) {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) os << ", ";
        os << subgroup_label(rows[i].subgroup, n) << ":" << to_string(rows[i].multiplicity);
    }
    return os.str();
}

inline std::string verdict_line(const VerdictInfo& v) {
    std::ostringstream os;
    os << v.verdict;
    if (v.witness_divisor)
        os << " (subgroup divisor " << *v.witness_divisor << ", multiplicity "
           << to_string(*v.witness_multiplicity) << ")";
    return os.str();
}

inline std::string coeff_list(const std::vector<Int>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

inline nlohmann::json strings(const std::vector<Int>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

inline std::vector<Int> parse_strings(const nlohmann::json& a, const char* where) {
    if (!a.is_array()) throw ParseError(std::string(where) + ": expected array");
    std::vector<Int> v;
    for (const auto& x : a) v.push_back(json_to_int(x, where));
    return v;
}

inline long parse_long(const nlohmann::json& v, const char* where) {
    Int x = json_to_int(v, where);
    return static_cast<long>(x);
}

inline Rat parse_rat(const nlohmann::json& v, const char* where) {
    if (!v.is_string()) throw ParseError(std::string(where) + ": expected rational string");
    const std::string s = v.get<std::string>();
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ParseError(std::string(where) + ": bad rational '" + s + "'");
    }
}

inline nlohmann::json verdict_json(const VerdictInfo& v) {
    nlohmann::json j;
    j["verdict"] = v.verdict;
    j["witness_divisor"] =
        v.witness_divisor ? nlohmann::json(std::to_string(*v.witness_divisor))
                          : nlohmann::json(nullptr);
    j["witness_multiplicity"] = v.witness_multiplicity
                                    ? nlohmann::json(to_string(*v.witness_multiplicity))
                                    : nlohmann::json(nullptr);
    return j;
}

inline VerdictInfo parse_verdict(const nlohmann::json& j) {
    VerdictInfo v;
    v.verdict = j.at("verdict").get<std::string>();
    if (!j.at("witness_divisor").is_null())
        v.witness_divisor = parse_long(j.at("witness_divisor"), "witness_divisor");
    if (!j.at("witness_multiplicity").is_null())
        v.witness_multiplicity = parse_rat(j.at("witness_multiplicity"), "witness_multiplicity");
    return v;
}

inline nlohmann::json decomposition_json(const std::vector<DecompositionRow>& rows) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json r;
        r["subgroup"] = std::to_string(row.subgroup);
        r["f_value"] = to_string(row.f_value);
        r["multiplicity"] = to_string(row.multiplicity);
        a.push_back(std::move(r));
    }
    return a;
}

inline std::vector<DecompositionRow> parse_decomposition(const nlohmann::json& a) {
    std::vector<DecompositionRow> rows;
    for (const auto& r : a) {
        DecompositionRow row;
        row.subgroup = parse_long(r.at("subgroup"), "subgroup");
        row.f_value = json_to_int(r.at("f_value"), "f_value");
        row.multiplicity = parse_rat(r.at("multiplicity"), "multiplicity");
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace detail

inline nlohmann::json report_to_json(const Report& report) {
    nlohmann::json j;
    j["name"] = report.name;
    j["dim"] = std::to_string(report.dim);
    j["order"] = std::to_string(report.order);
    j["validation"] = {{"requested", report.validation_requested},
                       {"achieved", report.validation_achieved},
                       {"h_symmetric", report.h_symmetric}};

    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.divisors) {
        nlohmann::json r;
        r["divisor"] = std::to_string(row.divisor);
        r["delta"] = std::to_string(row.delta);
        r["facets"] = to_string(row.facets);
        r["f_vector"] = detail::strings(row.f_vector);
        r["h_vector"] = detail::strings(row.h_vector);
        r["q_poly"] = detail::strings(row.q_coefficients);
        nlohmann::json cyc;
        for (const auto& [l, a] : row.cyclotomic_exponents)
            cyc[std::to_string(l)] = std::to_string(a);
        r["cyclotomic"] = std::move(cyc);
        r["graded"] = detail::strings(row.graded_coefficients);
        r["ungraded"] = to_string(row.ungraded);
        rows.push_back(std::move(r));
    }
    j["divisors"] = std::move(rows);
    j["decomposition"] = detail::decomposition_json(report.decomposition);
    j["ungraded_verdict"] = detail::verdict_json(report.ungraded_verdict);

    if (report.graded) {
        nlohmann::json g;
        g["all_permutation"] = report.graded->all_permutation;
        nlohmann::json degs = nlohmann::json::array();
        for (const auto& deg : report.graded->degrees) {
            nlohmann::json d;
            d["degree"] = std::to_string(deg.degree);
            d["decomposition"] = detail::decomposition_json(deg.decomposition);
            d["verdict"] = detail::verdict_json(deg.verdict);
            degs.push_back(std::move(d));
        }
        g["degrees"] = std::move(degs);
        j["graded"] = std::move(g);
    } else {
        j["graded"] = nullptr;
    }

    if (report.prime_power) {
        nlohmann::json p;
        p["applicable"] = report.prime_power->applicable;
        p["p"] = std::to_string(report.prime_power->p);
        p["r"] = std::to_string(report.prime_power->r);
        p["pass"] = report.prime_power->pass;
        j["prime_power"] = std::move(p);
    } else {
        j["prime_power"] = nullptr;
    }

    if (report.cross_checks) {
        nlohmann::json c;
        c["all_ok"] = report.cross_checks->all_ok;
        nlohmann::json qf = nlohmann::json::array();
        for (const auto& row : report.cross_checks->q_formula)
            qf.push_back({{"divisor", std::to_string(row.divisor)},
                          {"formula_ok", row.formula_ok},
                          {"valuation_ok", row.valuation_ok}});
        c["q_formula"] = std::move(qf);
        nlohmann::json qt = nlohmann::json::array();
        for (const auto& row : report.cross_checks->quotient)
            qt.push_back({{"l", std::to_string(row.l)},
                          {"j", std::to_string(row.j)},
                          {"graded_ok", row.graded_ok},
                          {"ungraded_ok", row.ungraded_ok}});
        c["quotient"] = std::move(qt);
        j["cross_checks"] = std::move(c);
    } else {
        j["cross_checks"] = nullptr;
    }
    return j;
}

inline Report report_from_json(const nlohmann::json& j) {
    Report report;
    report.name = j.at("name").get<std::string>();
    report.dim = detail::parse_long(j.at("dim"), "dim");
    report.order = detail::parse_long(j.at("order"), "order");
    report.validation_requested = j.at("validation").at("requested").get<std::string>();
    report.validation_achieved = j.at("validation").at("achieved").get<std::string>();
    report.h_symmetric = j.at("validation").at("h_symmetric").get<bool>();

    for (const auto& r : j.at("divisors")) {
        DivisorRow row;
        row.divisor = detail::parse_long(r.at("divisor"), "divisor");
        row.delta = detail::parse_long(r.at("delta"), "delta");
        row.facets = detail::json_to_int(r.at("facets"), "facets");
        row.f_vector = detail::parse_strings(r.at("f_vector"), "f_vector");
        row.h_vector = detail::parse_strings(r.at("h_vector"), "h_vector");
        row.q_coefficients = detail::parse_strings(r.at("q_poly"), "q_poly");
        for (const auto& [key, value] : r.at("cyclotomic").items())
            row.cyclotomic_exponents[std::stol(key)] = detail::parse_long(value, "cyclotomic");
        row.graded_coefficients = detail::parse_strings(r.at("graded"), "graded");
        row.ungraded = detail::json_to_int(r.at("ungraded"), "ungraded");
        report.divisors.push_back(std::move(row));
    }
    report.decomposition = detail::parse_decomposition(j.at("decomposition"));
    report.ungraded_verdict = detail::parse_verdict(j.at("ungraded_verdict"));

    if (!j.at("graded").is_null()) {
        GradedSection section;
        section.all_permutation = j.at("graded").at("all_permutation").get<bool>();
        for (const auto& d : j.at("graded").at("degrees")) {
            DegreeRow row;
            row.degree = detail::parse_long(d.at("degree"), "degree");
            row.decomposition = detail::parse_decomposition(d.at("decomposition"));
            row.verdict = detail::parse_verdict(d.at("verdict"));
            section.degrees.push_back(std::move(row));
        }
        report.graded = std::move(section);
    }
    if (!j.at("prime_power").is_null()) {
        PrimePowerSection p;
        p.applicable = j.at("prime_power").at("applicable").get<bool>();
        p.p = detail::parse_long(j.at("prime_power").at("p"), "p");
        p.r = detail::parse_long(j.at("prime_power").at("r"), "r");
        p.pass = j.at("prime_power").at("pass").get<bool>();
        report.prime_power = p;
    }
    if (!j.at("cross_checks").is_null()) {
        CrossCheckSection section;
        section.all_ok = j.at("cross_checks").at("all_ok").get<bool>();
        for (const auto& r : j.at("cross_checks").at("q_formula")) {
            QFormulaRow row;
            row.divisor = detail::parse_long(r.at("divisor"), "divisor");
            row.formula_ok = r.at("formula_ok").get<bool>();
            row.valuation_ok = r.at("valuation_ok").get<bool>();
            section.q_formula.push_back(row);
        }
        for (const auto& r : j.at("cross_checks").at("quotient")) {
            QuotientRow row;
            row.l = detail::parse_long(r.at("l"), "l");
            row.j = detail::parse_long(r.at("j"), "j");
            row.graded_ok = r.at("graded_ok").get<bool>();
            row.ungraded_ok = r.at("ungraded_ok").get<bool>();
            section.quotient.push_back(row);
        }
        report.cross_checks = std::move(section);
    }
    return report;
}

inline std::string emit_text(const Report& report) {
    std::ostringstream os;
    os << "instance: " << (report.name.empty() ? "(unnamed)" : report.name) << "\n";
    os << "dim: " << report.dim << "\n";
    os << "validation: requested=" << report.validation_requested
       << " achieved=" << report.validation_achieved
       << " h-symmetry=" << (report.h_symmetric ? "ok" : "flagged") << "\n";
    os << "order: " << report.order << "\n\n";

    os << "divisor table (one row per element class c^j, j | " << report.order << "):\n";
    for (const auto& row : report.divisors) {
        IntPolynomial q(row.q_coefficients), g(row.graded_coefficients);
        os << "  j=" << row.divisor << ": delta=" << row.delta << " facets=" << row.facets
           << " f=" << detail::coeff_list(row.f_vector)
           << " h=" << detail::coeff_list(row.h_vector) << " Q=" << q.str();
        os << " cyclo=[";
        bool first = true;
        for (const auto& [l, a] : row.cyclotomic_exponents) {
            os << (first ? "" : " ") << l << "^" << a;
            first = false;
        }
        os << "] chi[q]=" << g.str() << " chi_u=" << row.ungraded << "\n";
    }

    os << "\ndecomposition of chi_u into induced characters:\n  "
       << detail::decomposition_line(report.decomposition, report.order) << "\n";
    os << "ungraded verdict: " << detail::verdict_line(report.ungraded_verdict) << "\n";

    if (report.graded) {
        os << "\ngraded decomposition:\n";
        for (const auto& deg : report.graded->degrees)
            os << "  degree " << deg.degree << ": "
               << detail::decomposition_line(deg.decomposition, report.order) << " -> "
               << detail::verdict_line(deg.verdict) << "\n";
        os << "graded verdict: "
           << (report.graded->all_permutation ? "Permutation" : "NotPermutation") << "\n";
    }
    if (report.prime_power) {
        if (report.prime_power->applicable)
            os << "prime power check (p=" << report.prime_power->p
               << ", r=" << report.prime_power->r
               << "): " << (report.prime_power->pass ? "pass" : "fail") << "\n";
        else
            os << "prime power check: not applicable (order " << report.order
               << " is not a prime power)\n";
    }
    if (report.cross_checks) {
        os << "\ncross checks:\n  Q-formula:";
        for (const auto& row : report.cross_checks->q_formula)
            os << " l=" << row.divisor << (row.formula_ok && row.valuation_ok ? " ok" : " FAIL");
        os << "\n  quotient identities:";
        for (const auto& row : report.cross_checks->quotient)
            os << " (l=" << row.l << ",j=" << row.j << ")"
               << (row.graded_ok && row.ungraded_ok ? " ok" : " FAIL");
        os << "\n  all: " << (report.cross_checks->all_ok ? "ok" : "FAIL") << "\n";
    }
    return os.str();
}

// Render the report; re-verifies the reconstruction identity first and
// throws InternalInconsistency if the report no longer satisfies it.
inline std::string emit_report(const Report& report, ReportFormat format) {
    detail::verify_report_consistency(report);
    if (format == ReportFormat::Json) return report_to_json(report).dump(2) + "\n";
    return emit_text(report);
}

}  // namespace fanchar
