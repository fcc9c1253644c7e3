#ifndef SMOOTHROOTS_REQUEST_HPP
#define SMOOTHROOTS_REQUEST_HPP

#include <string>

#include "normal.hpp"

namespace smoothroots {

enum class RequestKind { polynomial, matrix };
enum class Stage { analyze, solve, verify };

struct PointData {
    double t0 = 0.0;
    std::vector<Jet> coefficients; // polynomial kind: a_1..a_n
    JetMatrix entries;             // matrix kind
};

struct VerifyOptions {
    double delta = 0.1;
    int samples = 50; // per side
};

struct AnalysisRequest {
    RequestKind kind = RequestKind::polynomial;
    int degree = 0; // matrix size for matrix kind
    ExtInt smoothness = ExtInt::infinity();
    int order = 8;
    Mode mode = Mode::exact;
    Tolerances tol;
    VerifyOptions verify;
    std::vector<PointData> points;

    PolyCurve curve_at(std::size_t point) const;
    MatrixCurve matrix_at(std::size_t point) const;
};

// Option overrides applied between parsing and running (CLI flags / C API).
struct RequestOverrides {
    std::optional<int> order;
    std::optional<double> delta;
    std::optional<int> samples;
    std::optional<double> tol_zero;
    std::optional<double> tol_cluster;
    std::optional<double> tol_hensel;
    std::optional<double> tol_match;
    std::vector<int> point_selection; // empty = all
};

AnalysisRequest parse_request(const std::string& json_text, const RequestOverrides& overrides);

} // namespace smoothroots

#endif
