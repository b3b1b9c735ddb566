// Acceptance suite: one test case per criterion, one printed PASS/FAIL line
// each.  Everything is exact; no tolerances.

#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "fanchar/fanchar.hpp"
#include "helpers.hpp"

using namespace fanchar;
using testutil::poly;

namespace {

class AcceptancePrinter : public Catch::EventListenerBase {
public:
    using Catch::EventListenerBase::EventListenerBase;

    void testCaseEnded(const Catch::TestCaseStats& stats) override {
        std::printf("[%s] %s\n", stats.totals.assertions.allOk() ? "PASS" : "FAIL",
                    stats.testInfo->name.c_str());
        std::fflush(stdout);
    }
};

CATCH_REGISTER_LISTENER(AcceptancePrinter)

std::map<long, Int> to_map(std::vector<std::pair<long, long>> kv) {
    std::map<long, Int> m;
    for (auto& [k, v] : kv) m[k] = v;
    return m;
}

Int ramanujan_sum(long e, long j) {
    Int acc = 0;
    for (long d : divisors(std::gcd(e, j))) acc += Int(d) * moebius_nt(e / d);
    return acc;
}

}  // namespace

TEST_CASE("criterion 01: projective plane with order 3 rotation") {
    const Fan fan = testutil::projective_plane_fan();
    const auto action = validate_action(fan, testutil::order3_generator());
    REQUIRE(action.order == 3);

    CHECK(ungraded_character(fan, action) == to_map({{1, 3}, {3, 3}}));

    const auto dec = decompose(ungraded_character(fan, action), 3);
    CHECK(dec.verdict == Verdict::Permutation);
    CHECK(dec.multiplicities == std::map<long, Rat>{{1, 3}, {3, 0}});

    const auto graded = decompose_graded(fan, action);
    CHECK(graded.all_permutation);
    REQUIRE(graded.per_degree.size() == 3);
    for (const auto& deg : graded.per_degree)
        CHECK(deg.multiplicities == std::map<long, Rat>{{1, 1}, {3, 0}});  // trivial character
}

TEST_CASE("criterion 02: product of lines with 90 degree rotation") {
    const Fan fan = testutil::product_of_lines_fan();
    const auto action = validate_action(fan, testutil::rotation90());
    REQUIRE(action.order == 4);

    CHECK(ungraded_character(fan, action) == to_map({{1, 2}, {2, 4}, {4, 4}}));

    const auto dec = decompose(ungraded_character(fan, action), 4);
    CHECK(dec.verdict == Verdict::Permutation);
    CHECK(dec.multiplicities == std::map<long, Rat>{{1, 2}, {2, 1}, {4, 0}});

    CHECK(prime_power_check(fan, action).pass);

    const auto graded = decompose_graded(fan, action);
    CHECK(graded.all_permutation);
    CHECK(graded.per_degree[0].multiplicities == std::map<long, Rat>{{1, 1}, {2, 0}, {4, 0}});
    CHECK(graded.per_degree[1].multiplicities == std::map<long, Rat>{{1, 0}, {2, 1}, {4, 0}});
    CHECK(graded.per_degree[2].multiplicities == std::map<long, Rat>{{1, 1}, {2, 0}, {4, 0}});
}

TEST_CASE("criterion 03: hexagonal fan with order 6 rotation") {
    const Fan fan = testutil::hexagon_fan();
    const auto action = validate_action(fan, testutil::rotation60());
    REQUIRE(action.order == 6);

    CHECK(ungraded_character(fan, action) == to_map({{1, 1}, {2, 3}, {3, 4}, {6, 6}}));

    const auto dec = decompose(ungraded_character(fan, action), 6);
    CHECK(dec.verdict == Verdict::Permutation);
    CHECK(dec.multiplicities == std::map<long, Rat>{{1, 1}, {2, 1}, {3, 1}, {6, 0}});

    const auto graded = decompose_graded(fan, action);
    CHECK_FALSE(graded.all_permutation);
    CHECK(graded.per_degree[1].verdict == Verdict::NotPermutation);
    CHECK(graded_character(fan, action, 1).coeff(1) == -1);  // value -1 at c in degree 1
    CHECK(graded.per_degree[1].witness_divisor == 1);
    CHECK(graded.per_degree[1].witness_multiplicity == Rat(-1));
    CHECK(graded.per_degree[0].verdict == Verdict::Permutation);
    CHECK(graded.per_degree[2].verdict == Verdict::Permutation);
}

TEST_CASE("criterion 04: reflection fixes a 0-sphere with equal graded characters") {
    const Fan fan = testutil::product_of_lines_fan();
    const auto action = validate_action(fan, testutil::reflection());
    REQUIRE(action.order == 2);

    const auto fixed = fixed_subcomplex(fan, action, 1);
    CHECK(fixed.delta == 1);
    CHECK(fixed.complex.facets == std::vector<Face>{{0}, {1}});  // the 0-sphere on the axis

    CHECK(graded_character(fan, action, 1) == poly({1, 2, 1}));
    CHECK(graded_character(fan, action, 1) == graded_character(fan, action, 2));

    const auto dec = decompose(ungraded_character(fan, action), 2);
    CHECK(dec.verdict == Verdict::Permutation);
    CHECK(dec.multiplicities == std::map<long, Rat>{{1, 4}, {2, 0}});
}

TEST_CASE("criterion 05: oracle equivalence across the generated corpus") {
    const auto start = std::chrono::steady_clock::now();
    const auto instances = corpus::all_instances();
    REQUIRE(instances.size() >= 50);

    for (const auto& inst : instances) {
        INFO(inst.name);
        const auto level =
            inst.fan.dim <= 3 ? ValidationLevel::Geometric : ValidationLevel::Basic;
        validate_fan(inst.fan, level);
        const auto action = validate_action(inst.fan, inst.generator);
        const long n = action.order;
        const auto qc = factor_into_cyclotomics(q_polynomial(action, 1), n);

        for (long l : divisors(n)) {
            // (a) the power formula reproduces the direct Q-polynomial
            CHECK(q_power_from_base(qc, n, l) == q_polynomial(action, l));

            // (b) Q_{c^l}(1) equals the product of prime powers p^{b(p,l,n)}
            Int valuation = 1;
            for (long p : prime_factors(n))
                valuation *= int_pow(Int(p), b_exponent(p, l, n, qc));
            CHECK(q_polynomial(action, l)(1) == valuation);

            // (c) quotient identities, graded and ungraded, for every j | l
            for (const auto& entry : cross_check_quotient(inst.fan, action, l)) {
                CHECK(entry.graded_ok);
                CHECK(entry.ungraded_ok);
            }
        }

        // (d) the ungraded character is a permutation character
        CHECK(decompose(ungraded_character(inst.fan, action), n).verdict ==
              Verdict::Permutation);
    }

    const auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    CHECK(elapsed < 60);
}

TEST_CASE("criterion 06: cyclotomic facts up to 210 and factor products up to 64") {
    for (long l = 2; l <= 210; ++l) {
        const auto [p, k] = prime_power_split(l);
        CHECK(cyclotomic(l)(1) == (p != 0 ? Int(p) : Int(1)));
        if (p != 0) {
            long expected = p - 1;
            for (long i = 1; i < k; ++i) expected *= p;
            CHECK(cyclotomic(l).degree() == expected);  // p^{k-1}(p-1)
        }
    }
    for (long m = 1; m <= 64; ++m) {
        IntPolynomial prod = IntPolynomial::one();
        for (long d : divisors(m)) prod = prod * cyclotomic(d);
        CHECK(prod == q_power_minus_one(m));
    }
}

TEST_CASE("criterion 07: Moebius agreement and transform round-trip") {
    for (long m = 1; m <= 1000; ++m) CHECK(moebius_nt(m) == moebius_recursive(m));

    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> pick_n(1, 120);
    std::uniform_int_distribution<long> value(-100, 100);
    for (int trial = 0; trial < 500; ++trial) {
        const long n = pick_n(rng);
        std::map<long, Int> values;
        for (long j : divisors(n)) values[j] = value(rng);
        CHECK(f_transform_inverse(f_transform(values, n), n) == values);
    }
}

TEST_CASE("criterion 08: rational characters have integral non-negative decompositions") {
    std::mt19937 rng(2025);
    std::uniform_int_distribution<long> pick_n(1, 120);
    std::uniform_int_distribution<long> coeff(0, 9);
    for (int trial = 0; trial < 500; ++trial) {
        const long n = pick_n(rng);
        std::map<long, long> t;
        for (long e : divisors(n)) t[e] = coeff(rng);
        std::map<long, Int> values;
        for (long j : divisors(n)) {
            Int v = 0;
            for (long e : divisors(n)) v += Int(t[e]) * ramanujan_sum(e, j);
            values[j] = v;
        }
        const auto dec = decompose(values, n);
        for (const auto& [l, m] : dec.multiplicities) CHECK(is_integer(m));
        CHECK(dec.multiplicities.at(n) >= 0);
    }
}

TEST_CASE("criterion 09: weighted poset sums stay non-negative") {
    std::mt19937 rng(2026);
    std::uniform_int_distribution<long> pick_n(1, 60);
    std::uniform_int_distribution<long> upper(0, 8);
    std::uniform_int_distribution<long> weight(1, 6);
    for (int trial = 0; trial < 1000; ++trial) {
        const long n = pick_n(rng);
        const auto elems = divisors(n);
        std::map<long, Int> g, fprime, cmap;
        for (long e : elems) g[e] = upper(rng);
        for (long e : elems) {
            Int acc = 0;
            for (long q : elems)
                if (q % e == 0) acc += Int(moebius_nt(q / e)) * g[q];
            fprime[e] = acc;
        }
        for (long e : elems) cmap[e] = weight(rng);
        const auto result = poset_weighted_check(elems, fprime, cmap);
        CHECK(result.hypothesis_ok);
        CHECK(result.value >= 0);
    }
}

#ifndef FANCHAR_CLI_PATH
#define FANCHAR_CLI_PATH "./fanchar"
#endif
#ifndef FANCHAR_DATA_DIR
#define FANCHAR_DATA_DIR "."
#endif

namespace {
std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}
}  // namespace

TEST_CASE("criterion 10: CLI json output is byte-stable and round-trips") {
    const std::string cli = FANCHAR_CLI_PATH;
    const std::string fixture = std::string(FANCHAR_DATA_DIR) + "/product_of_lines_rot4.json";

    std::vector<std::string> outputs;
    for (int run = 0; run < 3; ++run) {
        const std::string out = "acceptance_cli_run_" + std::to_string(run) + ".json";
        const std::string cmd = cli + " --input " + fixture +
                                " --format json --graded --cross-check > " + out +
                                " 2> /dev/null";
        REQUIRE(std::system(cmd.c_str()) == 0);
        outputs.push_back(slurp(out));
    }
    CHECK(outputs[0] == outputs[1]);
    CHECK(outputs[1] == outputs[2]);

    const auto parsed = report_from_json(nlohmann::json::parse(outputs[0]));
    AnalyzeOptions options;
    options.graded = true;
    options.cross_check = true;
    const auto direct = run_analyze(parse_input(fixture), options);
    CHECK(parsed == direct);
    CHECK(emit_report(parsed, ReportFormat::Json) == outputs[0]);
}
