#include "request.hpp"

#include <json.hpp>

namespace smoothroots {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
    fail(ErrorCode::parse, "schema violation at " + where + ": " + what);
}

Scalar parse_value(const json& v, Mode mode, const std::string& where) {
    auto one_part = [&](const json& part) -> Rational {
        if (part.is_string()) return parse_rational(part.get<std::string>());
        if (part.is_number_integer()) return Rational(part.get<long long>());
        if (part.is_number_float()) return rational_from_double(part.get<double>());
        schema_error(where, "expected a number or a rational string");
    };
    Rational re(0), im(0);
    if (v.is_array()) {
        if (v.size() != 2) schema_error(where, "complex values are [re, im]");
        re = one_part(v[0]);
        im = one_part(v[1]);
    } else {
        re = one_part(v);
    }
    if (mode == Mode::exact) return Scalar::from_rational(re, im);
    return Scalar(std::complex<double>(static_cast<double>(re), static_cast<double>(im)));
}

std::vector<Scalar> parse_side(const json& arr, int order, Mode mode, const std::string& where) {
    if (!arr.is_array()) schema_error(where, "expected a coefficient array");
    if (static_cast<int>(arr.size()) > order + 1)
        schema_error(where, "coefficient array longer than order + 1");
    std::vector<Scalar> out(static_cast<std::size_t>(order) + 1, Scalar::zero(mode));
    for (std::size_t k = 0; k < arr.size(); ++k)
        out[k] = parse_value(arr[k], mode, where + "[" + std::to_string(k) + "]");
    return out;
}

Jet parse_jet(const json& v, int order, Mode mode, const std::string& where) {
    // scalar shorthand: a constant germ; 0 is the zero germ
    if (v.is_number() || v.is_string()) {
        Scalar c = parse_value(v, mode, where);
        if (c.is_zero(0.0)) return Jet::identically_zero(order, mode);
        return Jet::constant(order, c);
    }
    if (v.is_array()) // array shorthand for {"taylor": [...]}
        return Jet::analytic(parse_side(v, order, mode, where));
    if (!v.is_object()) schema_error(where, "expected a jet object, array, or scalar");

    bool left_zero = false, right_zero = false;
    if (v.contains("exact_zero")) {
        std::string flag = v["exact_zero"].get<std::string>();
        if (flag == "left") left_zero = true;
        else if (flag == "right") right_zero = true;
        else if (flag == "both") left_zero = right_zero = true;
        else schema_error(where, "exact_zero must be left, right, or both");
    }
    std::vector<Scalar> left, right;
    if (v.contains("taylor")) {
        if (v.contains("left") || v.contains("right"))
            schema_error(where, "taylor excludes explicit sides");
        right = parse_side(v["taylor"], order, mode, where + ".taylor");
        left = right;
    } else {
        if (v.contains("left") != v.contains("right"))
            schema_error(where, "left and right must be given together");
        if (!v.contains("left")) schema_error(where, "missing jet data");
        left = parse_side(v["left"], order, mode, where + ".left");
        right = parse_side(v["right"], order, mode, where + ".right");
    }
    if (left_zero) std::fill(left.begin(), left.end(), Scalar::zero(mode));
    if (right_zero) std::fill(right.begin(), right.end(), Scalar::zero(mode));
    if (!left[0].equals(right[0], 1e-12))
        schema_error(where, "left[0] != right[0]: the germ is discontinuous at 0");
    return Jet::from_sides(std::move(left), std::move(right), left_zero, right_zero);
}

PointData parse_point(const json& v, const AnalysisRequest& req, const std::string& where) {
    PointData p;
    if (v.contains("t0")) p.t0 = v["t0"].get<double>();
    if (req.kind == RequestKind::polynomial) {
        if (!v.contains("coefficients")) schema_error(where, "missing coefficients");
        const json& arr = v["coefficients"];
        if (!arr.is_array() || static_cast<int>(arr.size()) != req.degree)
            schema_error(where, "coefficients must list a_1..a_n");
        for (std::size_t j = 0; j < arr.size(); ++j)
            p.coefficients.push_back(parse_jet(arr[j], req.order, req.mode,
                                               where + ".coefficients[" + std::to_string(j) + "]"));
    } else {
        if (!v.contains("entries")) schema_error(where, "missing entries");
        const json& rows = v["entries"];
        if (!rows.is_array() || static_cast<int>(rows.size()) != req.degree)
            schema_error(where, "entries must be a square grid");
        p.entries = JetMatrix(req.degree, req.degree, req.order, req.mode);
        for (int i = 0; i < req.degree; ++i) {
            const json& row = rows[static_cast<std::size_t>(i)];
            if (!row.is_array() || static_cast<int>(row.size()) != req.degree)
                schema_error(where, "entries must be a square grid");
            for (int j = 0; j < req.degree; ++j)
                p.entries.at(i, j) =
                    parse_jet(row[static_cast<std::size_t>(j)], req.order, req.mode,
                              where + ".entries[" + std::to_string(i) + "][" +
                                  std::to_string(j) + "]");
        }
    }
    return p;
}

void check_declared_class(const AnalysisRequest& req, const Jet& jet, const std::string& where) {
    long needed = req.smoothness.is_infinite()
                      ? static_cast<long>(req.order)
                      : std::min<long>(req.smoothness.value(), req.order);
    if (jet.two_sided_class(req.tol.zero) < needed)
        schema_error(where, "jet class below the declared smoothness min(p, order) = " +
                                std::to_string(needed));
}

} // namespace

PolyCurve AnalysisRequest::curve_at(std::size_t point) const {
    PolyCurve c;
    c.degree = degree;
    c.smoothness = smoothness;
    c.a = points[point].coefficients;
    return c;
}

MatrixCurve AnalysisRequest::matrix_at(std::size_t point) const {
    MatrixCurve m;
    m.size = degree;
    m.smoothness = smoothness;
    m.entries = points[point].entries;
    return m;
}

AnalysisRequest parse_request(const std::string& json_text, const RequestOverrides& overrides) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        fail(ErrorCode::parse, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) schema_error("$", "expected an object");
    if (doc.contains("schema_version") && doc["schema_version"] != "1")
        schema_error("$.schema_version", "unsupported schema version");

    AnalysisRequest req;
    if (!doc.contains("kind")) schema_error("$", "missing kind");
    std::string kind = doc["kind"].get<std::string>();
    if (kind == "polynomial") req.kind = RequestKind::polynomial;
    else if (kind == "matrix") req.kind = RequestKind::matrix;
    else schema_error("$.kind", "must be polynomial or matrix");

    const char* size_key = req.kind == RequestKind::polynomial ? "degree" : "size";
    if (!doc.contains(size_key)) schema_error("$", std::string("missing ") + size_key);
    req.degree = doc[size_key].get<int>();
    if (req.degree < 1) schema_error(std::string("$.") + size_key, "must be >= 1");

    if (doc.contains("smoothness")) {
        const json& s = doc["smoothness"];
        if (s.is_string() && s.get<std::string>() == "inf") req.smoothness = ExtInt::infinity();
        else if (s.is_number_integer() && s.get<long>() >= 0) req.smoothness = ExtInt(s.get<long>());
        else schema_error("$.smoothness", "must be a natural number or \"inf\"");
    }
    if (doc.contains("order")) req.order = doc["order"].get<int>();
    if (overrides.order) req.order = *overrides.order;
    if (req.order < 0) schema_error("$.order", "must be >= 0");

    if (doc.contains("mode")) {
        std::string mode = doc["mode"].get<std::string>();
        if (mode == "exact") req.mode = Mode::exact;
        else if (mode == "float") req.mode = Mode::floating;
        else schema_error("$.mode", "must be exact or float");
    }

    if (doc.contains("tolerances")) {
        const json& t = doc["tolerances"];
        if (t.contains("zero")) req.tol.zero = t["zero"].get<double>();
        if (t.contains("cluster")) req.tol.cluster = t["cluster"].get<double>();
        if (t.contains("hensel")) req.tol.hensel = t["hensel"].get<double>();
        if (t.contains("match")) req.tol.match = t["match"].get<double>();
    }
    if (overrides.tol_zero) req.tol.zero = *overrides.tol_zero;
    if (overrides.tol_cluster) req.tol.cluster = *overrides.tol_cluster;
    if (overrides.tol_hensel) req.tol.hensel = *overrides.tol_hensel;
    if (overrides.tol_match) req.tol.match = *overrides.tol_match;

    if (doc.contains("verify")) {
        const json& v = doc["verify"];
        if (v.contains("delta")) req.verify.delta = v["delta"].get<double>();
        if (v.contains("samples")) req.verify.samples = v["samples"].get<int>();
    }
    if (overrides.delta) req.verify.delta = *overrides.delta;
    if (overrides.samples) req.verify.samples = *overrides.samples;
    if (req.verify.delta <= 0 || req.verify.samples < 1)
        schema_error("$.verify", "delta must be positive and samples >= 1");

    if (doc.contains("points")) {
        const json& pts = doc["points"];
        if (!pts.is_array() || pts.empty()) schema_error("$.points", "must be a nonempty array");
        for (std::size_t i = 0; i < pts.size(); ++i)
            req.points.push_back(parse_point(pts[i], req, "$.points[" + std::to_string(i) + "]"));
    } else {
        // single-point shorthand at the top level
        req.points.push_back(parse_point(doc, req, "$"));
    }

    if (!overrides.point_selection.empty()) {
        std::vector<PointData> selected;
        for (int idx : overrides.point_selection) {
            if (idx < 0 || idx >= static_cast<int>(req.points.size()))
                schema_error("$.points", "selected point index out of range");
            selected.push_back(req.points[static_cast<std::size_t>(idx)]);
        }
        req.points = std::move(selected);
    }

    for (std::size_t i = 0; i < req.points.size(); ++i) {
        const auto& p = req.points[i];
        std::string where = "$.points[" + std::to_string(i) + "]";
        if (req.kind == RequestKind::polynomial) {
            for (std::size_t j = 0; j < p.coefficients.size(); ++j)
                check_declared_class(req, p.coefficients[j],
                                     where + ".coefficients[" + std::to_string(j) + "]");
        } else {
            for (const auto& jet : p.entries.entries) check_declared_class(req, jet, where);
        }
    }
    return req;
}

} // namespace smoothroots
