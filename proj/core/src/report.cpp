#include "report.hpp"

namespace mocklie {

Json matrix_json(const Matrix& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json family_json(const ParametricFamily& family)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < family.n; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < family.n; ++c) {
            row.push_back(to_string(family.at(r, c), family.parameters));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json report_header(const Algebra& a)
{
    Json j;
    j["format"] = kReportFormat;
    j["algebra"] = a.name;
    j["field"] = a.field().to_string();
    j["dim"] = a.dim();
    return j;
}

namespace {

template <std::size_t N>
Json witness_json(const std::optional<std::array<std::size_t, N>>& w)
{
    if (!w) return nullptr;
    Json arr = Json::array();
    for (auto idx : *w) arr.push_back(idx + 1);
    return arr;
}

}  // namespace

Json axioms_json(const AxiomReport& r)
{
    Json j;
    j["commutative"] = r.commutative;
    j["jacobi"] = r.jacobi;
    j["mock_lie"] = r.mock_lie;
    j["witness"]["commutative"] = witness_json(r.commutative_witness);
    j["witness"]["jacobi"] = witness_json(r.jacobi_witness);
    return j;
}

Json der_json(const DerivationSpace& space)
{
    Json j;
    j["dim"] = space.dim();
    j["basis"] = Json::array();
    for (const auto& d : space.basis) j["basis"].push_back(matrix_json(d));
    const ParametricFamily family = render_parametric(space);
    j["parameters"] = family.parameters;
    j["parametric"] = family_json(family);
    return j;
}

Json verification_json(const VerificationReport& r)
{
    Json j;
    j["paper_dim"] = r.published_dim;
    j["computed_dim"] = r.computed_dim;
    j["equal"] = r.spaces_equal;
    if (r.discrepancy) {
        j["witness"] = matrix_json(*r.discrepancy);
        j["witness_is_derivation"] = r.witness_is_derivation;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

Json tensor_json(const StructureTensor& t)
{
    Json rows = Json::array();
    for (const auto& [key, c] : t.entries()) {
        rows.push_back(Json::array({key[0] + 1, key[1] + 1, key[2] + 1, c.to_string()}));
    }
    return rows;
}

Json invariants_json(const Invariants& inv)
{
    Json j;
    j["dim"] = inv.dim;
    j["dim_square"] = inv.dim_square;
    j["dim_annihilator"] = inv.dim_annihilator;
    j["dim_der"] = inv.dim_der;
    return j;
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

}  // namespace mocklie
