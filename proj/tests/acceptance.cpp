// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "mocklie/cli.hpp"
#include "mocklie/document.hpp"
#include "support/test_support.hpp"

using namespace mocklie;

namespace {

const Field Q = Field::rationals();

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

int run_quiet(const std::vector<std::string>& args, std::string* out = nullptr,
              const FamilyLookup& families = published_family)
{
    std::ostringstream o, e;
    const int code = run_cli(args, o, e, families);
    if (out) *out = o.str();
    return code;
}

std::string fixture(const std::string& name)
{
    return std::string(MOCKLIE_FIXTURE_DIR) + "/" + name;
}

Outcome catalog_verification()
{
    Outcome o;
    const std::vector<std::pair<std::string, std::size_t>> dims = {
        {"A_{1,2}", 2}, {"A_{1,2}+A_{0,1}", 5}, {"A_{1,3}", 4}, {"A_{1,2}+A_{0,1}^2", 10},
        {"A_{1,3}+A_{0,1}", 8}, {"A_{1,2}+A_{1,2}", 6}, {"A_{1,4}", 7}, {"A_{2,4}", 7}};
    const auto reports = verify_catalog();
    o.require(reports.size() == dims.size(), "expected 8 reports");
    for (std::size_t i = 0; i < reports.size() && i < dims.size(); ++i) {
        const auto& r = reports[i];
        o.require(r.catalog_name == dims[i].first, "order: " + r.catalog_name);
        o.require(r.spaces_equal && !r.discrepancy, r.catalog_name + " not equal");
        o.require(r.computed_dim == dims[i].second && r.published_dim == dims[i].second,
                  r.catalog_name + " dim " + std::to_string(r.computed_dim));
        // Independent recount: each published basis matrix is a derivation.
        for (const auto& m : published_family(r.catalog_name).basis()) {
            o.require(oracle::oracle_is_derivation(catalog_entry(r.catalog_name).tensor, m),
                      r.catalog_name + " family member fails the oracle");
        }
    }
    std::string out;
    o.require(run_quiet({"verify-catalog"}, &out) == kExitOk, "verify-catalog exit code");
    std::size_t lines = 0;
    for (std::size_t pos = 0; (pos = out.find("EQUAL", pos)) != std::string::npos; ++pos) ++lines;
    o.require(lines == 8, "verify-catalog printed " + std::to_string(lines) + " EQUAL lines");
    o.detail = o.pass ? "8/8 equal, dims 2,5,4,10,8,6,7,7" : o.detail;
    return o;
}

Outcome axiom_suite()
{
    Outcome o;
    for (const auto& a : catalog()) o.require(check_axioms(a).mock_lie, a.name + " fails axioms");

    StructureTensor nc(Q, 2);
    nc.set(0, 1, 0, Scalar::one(Q));
    const AxiomReport r1 = check_axioms({"nc", nc});
    o.require(!r1.commutative && !r1.mock_lie, "non-commutative table accepted");
    o.require(r1.commutative_witness == std::array<std::size_t, 3>{0, 1, 0}, "commutative witness");

    StructureTensor idem(Q, 1);
    idem.set(0, 0, 0, Scalar::one(Q));
    const AxiomReport r2 = check_axioms({"idem", idem});
    o.require(r2.commutative && !r2.jacobi && !r2.mock_lie, "e1e1=e1 accepted");
    o.require(r2.jacobi_witness == std::array<std::size_t, 4>{0, 0, 0, 0}, "jacobi witness");
    o.require(jacobiator({"idem", idem}, 0, 0, 0)[0] == Scalar::from_int(Q, 3), "J(e1,e1,e1) != 3e1");
    if (o.pass) o.detail = "12 entries mock-Lie; witnesses (1,2,1) and (1,1,1;1)";
    return o;
}

Outcome exhaustive_oracle()
{
    Outcome o;
    const Field f = Field::prime(5);
    const Algebra a{"A_{1,2}", catalog_entry("A_{1,2}").tensor.to_field(f)};
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t visited = 0, matches = 0;
    oracle::for_each_matrix(f, 2, [&](const Matrix& d) {
        ++visited;
        matches += oracle::oracle_is_derivation(a.tensor, d);
    });
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const std::size_t dim = derivation_basis(a).dim();
    o.require(visited == 625, "visited " + std::to_string(visited));
    o.require(matches == 25, "matches " + std::to_string(matches));
    o.require(dim == 2 && matches == oracle::ipow(5, dim), "5^dim mismatch");
    o.require(ms < 100.0, "took " + std::to_string(ms) + " ms");
    char buf[96];
    std::snprintf(buf, sizeof buf, "625 visited, %llu matches = 5^%zu, %.1f ms",
                  static_cast<unsigned long long>(matches), dim, ms);
    if (o.pass) o.detail = buf;
    return o;
}

Outcome soundness()
{
    Outcome o;
    std::mt19937_64 rng(2024);
    std::size_t pairs = 0;
    for (const auto& a : catalog()) {
        const std::size_t n = a.dim();
        const Matrix c = constraint_matrix(a);
        o.require(rank(c) + kernel_basis(c).size() == n * n, a.name + " rank-nullity");
        const Matrix all = constraint_matrix(a, PairSelection::AllPairs);
        o.require(rank(all) + kernel_basis(all).size() == n * n, a.name + " rank-nullity (all pairs)");
        for (const auto& d : derivation_basis(a).basis) {
            o.require(oracle::oracle_is_derivation(a.tensor, d), a.name + " basis defect");
            for (int trial = 0; trial < 100; ++trial) {
                const Vector x = oracle::random_vector(rng, Q, n);
                const Vector y = oracle::random_vector(rng, Q, n);
                o.require(is_zero(oracle::oracle_defect(a.tensor, d, x, y)), a.name + " random pair defect");
                ++pairs;
            }
        }
    }
    if (o.pass) o.detail = std::to_string(pairs) + " random pairs, 100 per basis derivation";
    return o;
}

Outcome lie_structure()
{
    Outcome o;
    for (const auto& a : catalog()) {
        try {
            const StructureTensor t = der_structure_constants(a);
            o.require(oracle::is_antisymmetric(t), a.name + " not antisymmetric");
            o.require(oracle::skew_jacobi_holds(t), a.name + " skew Jacobi fails");
        } catch (const ClosureError& e) {
            o.require(false, a.name + ": " + e.what());
        }
    }
    if (o.pass) o.detail = "closure, antisymmetry and Jacobi on 12 entries";
    return o;
}

Outcome equivariance()
{
    Outcome o;
    std::mt19937_64 rng(99);
    const auto& entries = catalog();
    const std::size_t trials = 120;
    for (std::size_t t = 0; t < trials; ++t) {
        const Algebra& a = entries[t % entries.size()];
        const Matrix p = oracle::random_invertible(rng, Q, a.dim());
        const DerivationSpace s = derivation_basis(a);
        const DerivationSpace moved = derivation_basis(transport(a, p));
        o.require(moved.dim() == s.dim(), a.name + " dim changed");
        o.require(subspace_equal(moved.flattened(), oracle::conjugated_space(s, p)),
                  a.name + " transported space differs");
    }
    if (o.pass) o.detail = std::to_string(trials) + " random base changes";
    return o;
}

Outcome abelian_baseline()
{
    Outcome o;
    std::string dims;
    for (const auto& name : {"A_{0,1}", "A_{0,1}^2", "A_{0,1}^3", "A_{0,1}^4"}) {
        const Algebra& a = catalog_entry(name);
        const std::size_t d = derivation_basis(a).dim();
        o.require(d == a.dim() * a.dim(), std::string(name) + " dim " + std::to_string(d));
        dims += (dims.empty() ? "" : ",") + std::to_string(d);
    }
    if (o.pass) o.detail = "dims " + dims;
    return o;
}

Outcome io_contract()
{
    Outcome o;
    for (const auto& a : catalog()) {
        const std::string text = serialize_algebra(a);
        const Algebra back = parse_algebra(text);
        o.require(back.tensor == a.tensor, a.name + " tensor round trip");
        o.require(serialize_algebra(back) == text, a.name + " bytes differ");
    }
    const FamilyLookup corrupted = [](const std::string& name) {
        if (name != "A_{2,4}") return published_family(name);
        return family_from_strings(Q, {{"d11", "0", "-d41", "-d31"},
                                       {"d21", "2*d11", "d23", "d24"},
                                       {"d31", "0", "d11 - d44", "0"},
                                       {"d41", "0", "0", "d44"}});
    };
    const std::vector<std::pair<std::vector<std::string>, int>> table = {
        {{"check", fixture("a12.alg")}, kExitOk},
        {{"check", fixture("idempotent.alg")}, kExitAxiomViolation},
        {{"check", fixture("noncommutative.alg")}, kExitAxiomViolation},
        {{"check", fixture("bad_index.alg")}, kExitUsage},
        {{"derive", "--json", fixture("a12.alg")}, kExitOk},
        {{"frobnicate"}, kExitUsage},
        {{"verify-catalog"}, kExitOk},
    };
    for (const auto& [args, code] : table) {
        o.require(run_quiet(args) == code, "exit code for '" + args[0] + "'");
    }
    o.require(run_quiet({"verify-catalog"}, nullptr, corrupted) == kExitMismatch, "mismatch exit code");
    if (o.pass) o.detail = "12 round trips, " + std::to_string(table.size() + 1) + " exit-code fixtures";
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"catalog derivation families", catalog_verification},
        {"axiom suite and counterexamples", axiom_suite},
        {"exhaustive GF(5) oracle", exhaustive_oracle},
        {"soundness and rank-nullity", soundness},
        {"Lie structure of Der", lie_structure},
        {"base-change equivariance", equivariance},
        {"abelian baseline", abelian_baseline},
        {"IO contract", io_contract},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %zu. %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
        failures += !o.pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
