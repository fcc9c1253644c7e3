#include "smoothroots.h"

#include <cmath>
#include <string>

#include "report.hpp"

using namespace smoothroots;

struct sr_session {
    std::string request_json;
    RequestOverrides overrides;
    std::string report_json;
    std::string rendered;
    std::string error;
    int warning_count = 0;
    bool has_report = false;
    Report report;
};

namespace {

sr_status status_from(ErrorCode code) {
    switch (code) {
    case ErrorCode::invalid_argument: return SR_ERROR_INVALID_ARGUMENT;
    case ErrorCode::parse: return SR_ERROR_PARSE;
    case ErrorCode::undecidable: return SR_ERROR_UNDECIDABLE;
    case ErrorCode::numeric: return SR_ERROR_NUMERIC;
    case ErrorCode::unsupported: return SR_ERROR_UNSUPPORTED;
    case ErrorCode::internal: return SR_ERROR_INTERNAL;
    }
    return SR_ERROR_INTERNAL;
}

template <typename Fn>
sr_status guarded(sr_session* session, Fn&& fn) {
    try {
        session->error.clear();
        fn();
        return SR_OK;
    } catch (const Error& e) {
        session->error = e.what();
        return status_from(e.code());
    } catch (const std::exception& e) {
        session->error = e.what();
        return SR_ERROR_INTERNAL;
    }
}

} // namespace

extern "C" {

sr_status sr_session_create(const char* request_json, sr_session** out_session) {
    if (!request_json || !out_session) return SR_ERROR_INVALID_ARGUMENT;
    auto* session = new sr_session();
    session->request_json = request_json;
    sr_status status = guarded(session, [&] {
        // syntax check only; semantics are validated with overrides on run
        if (!nlohmann::json::accept(session->request_json))
            fail(ErrorCode::parse, "invalid JSON");
    });
    if (status != SR_OK) {
        delete session;
        *out_session = nullptr;
        return status;
    }
    *out_session = session;
    return SR_OK;
}

void sr_session_destroy(sr_session* session) { delete session; }

sr_status sr_session_set_option(sr_session* session, const char* name, double value) {
    if (!session || !name) return SR_ERROR_INVALID_ARGUMENT;
    std::string key = name;
    return guarded(session, [&] {
        if (key == "order") session->overrides.order = static_cast<int>(std::lround(value));
        else if (key == "samples") session->overrides.samples = static_cast<int>(std::lround(value));
        else if (key == "delta") session->overrides.delta = value;
        else if (key == "tol_zero") session->overrides.tol_zero = value;
        else if (key == "tol_cluster") session->overrides.tol_cluster = value;
        else if (key == "tol_hensel") session->overrides.tol_hensel = value;
        else if (key == "tol_match") session->overrides.tol_match = value;
        else fail(ErrorCode::invalid_argument, "unknown option '" + key + "'");
    });
}

sr_status sr_session_select_points(sr_session* session, const int* indices, size_t count) {
    if (!session || (!indices && count > 0)) return SR_ERROR_INVALID_ARGUMENT;
    session->overrides.point_selection.assign(indices, indices + count);
    return SR_OK;
}

sr_status sr_session_run(sr_session* session, const char* stage_name) {
    if (!session || !stage_name) return SR_ERROR_INVALID_ARGUMENT;
    std::string stage_key = stage_name;
    return guarded(session, [&] {
        Stage stage;
        if (stage_key == "analyze") stage = Stage::analyze;
        else if (stage_key == "solve") stage = Stage::solve;
        else if (stage_key == "verify") stage = Stage::verify;
        else fail(ErrorCode::invalid_argument, "unknown stage '" + stage_key + "'");

        AnalysisRequest request = parse_request(session->request_json, session->overrides);
        session->report = run_analysis(request, stage);
        session->report_json = report_to_json(session->report).dump(2);
        session->has_report = true;
        session->warning_count = static_cast<int>(session->report.warnings.size());
        for (const auto& p : session->report.points)
            session->warning_count += static_cast<int>(p.warnings.size());
    });
}

const char* sr_session_report_json(const sr_session* session) {
    if (!session || !session->has_report) return nullptr;
    return session->report_json.c_str();
}

const char* sr_session_render(sr_session* session, const char* format) {
    if (!session || !session->has_report || !format) return nullptr;
    std::string key = format;
    if (key == "dot") session->rendered = render_dot(session->report);
    else if (key == "ascii") session->rendered = render_ascii(session->report);
    else return nullptr;
    return session->rendered.c_str();
}

const char* sr_session_error_message(const sr_session* session) {
    return session ? session->error.c_str() : "";
}

int sr_session_warning_count(const sr_session* session) {
    return session ? session->warning_count : 0;
}

const char* sr_version(void) { return "1.0.0"; }

} // extern "C"
