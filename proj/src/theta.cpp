#include "tightsf/theta.hpp"

#include <json.hpp>

namespace tightsf {

namespace {

Int json_int(const nlohmann::json& v)
{
    if (v.is_number_integer())
        return Int(std::to_string(v.get<long long>()), 10);
    if (v.is_number_unsigned())
        return Int(std::to_string(v.get<unsigned long long>()), 10);
    if (v.is_string())
        return parse_int(v.get<std::string>());
    throw ParseError("diagram entries must be integers, got " + v.dump());
}

}  // namespace

SurgeryDiagram parse_diagram_json(std::string_view json_text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("diagram is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("L") || !doc.contains("rot"))
        throw ParseError("diagram must be an object with keys \"L\" and \"rot\"");
    const auto& rows = doc["L"];
    const auto& rot = doc["rot"];
    if (!rows.is_array() || !rot.is_array())
        throw ParseError("\"L\" and \"rot\" must be arrays");
    const std::size_t m = rows.size();
    if (rot.size() != m)
        throw ParseError("\"rot\" has length " + std::to_string(rot.size()) + ", expected " + std::to_string(m));
    SurgeryDiagram d{IntMatrix::square(m), {}};
    for (std::size_t i = 0; i < m; ++i) {
        if (!rows[i].is_array() || rows[i].size() != m)
            throw ParseError("\"L\" must be a square matrix");
        for (std::size_t j = 0; j < m; ++j)
            d.linking(i, j) = json_int(rows[i][j]);
        d.rot.push_back(json_int(rot[i]));
    }
    if (!d.linking.is_symmetric())
        throw ParseError("linking matrix must be symmetric");
    return d;
}

Rational c1_squared(const SurgeryDiagram& d)
{
    auto x = solve(d.linking, d.rot);
    if (!x)
        throw DomainError("c1 not liftable: rotation vector is not in the span of the linking matrix");
    Rational total = 0;
    for (std::size_t i = 0; i < d.rot.size(); ++i)
        total += Rational(d.rot[i]) * (*x)[i];
    total.canonicalize();
    return total;
}

ThetaValue theta(const SurgeryDiagram& d)
{
    if (!d.linking.is_symmetric() || d.linking.rows() != d.rot.size())
        throw DomainError("diagram needs a symmetric linking matrix matching the rotation vector");
    ThetaValue v;
    v.c1_squared = c1_squared(d);
    v.sigma = signature(d.linking);
    v.chi = 1 + static_cast<long>(d.size());
    v.theta = v.c1_squared - 3 * v.sigma - 2 * v.chi;
    v.theta.canonicalize();
    return v;
}

SurgeryDiagram direct_sum(const SurgeryDiagram& a, const SurgeryDiagram& b)
{
    SurgeryDiagram out{direct_sum(a.linking, b.linking), a.rot};
    out.rot.insert(out.rot.end(), b.rot.begin(), b.rot.end());
    return out;
}

IntMatrix e8_matrix()
{
    // chain 0-1-2-3-4-5-6 with vertex 7 attached to vertex 4
    IntMatrix m = IntMatrix::square(8);
    for (std::size_t i = 0; i < 8; ++i)
        m(i, i) = -2;
    auto join = [&](std::size_t i, std::size_t j) {
        m(i, j) = 1;
        m(j, i) = 1;
    };
    for (std::size_t i = 0; i + 1 < 7; ++i)
        join(i, i + 1);
    join(4, 7);
    return m;
}

}  // namespace tightsf
