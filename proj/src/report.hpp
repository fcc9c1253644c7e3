#ifndef SMOOTHROOTS_REPORT_HPP
#define SMOOTHROOTS_REPORT_HPP

#include <json.hpp>

#include "request.hpp"
#include "solver.hpp"

namespace smoothroots {

struct Warning {
    std::string op;
    std::string message;
};

// Label-level view of a factorization tree (no curve payloads): what reports
// and renderers carry.
struct ReportTree {
    int d = 1;
    std::string q = "0";
    std::string kind = "linear_leaf";
    int r = 0;
    int big_n = 1;
    std::vector<std::string> reductions;
    std::string leaf_reason;
    std::vector<ReportTree> children;
    std::shared_ptr<ReportTree> aux_plus;
    std::shared_ptr<ReportTree> aux_minus;
};

ReportTree report_tree(const TreeNode& node);
ReportTree report_tree(const MatrixTreeNode& node);

struct VerifyResult {
    double delta = 0.1;
    int samples = 50;
    double max_residual = 0.0;
    double envelope_constant = 0.0;
    std::string envelope_exponent = "0";
    double root_match_max = 0.0;
    std::string divided_difference = "skipped"; // ok | warn | skipped
    double eigen_residual_max = 0.0;            // matrix kind
    double orthonormality_max = 0.0;            // matrix kind
    bool pass = true;
};

struct EigenReport {
    std::vector<Jet> values;
    JetMatrix frame;
    ExtInt eigenvalue_class = 0;
    ExtInt eigenvector_class = 0;
};

struct PointReport {
    double t0 = 0.0;
    std::string einf = "empty";
    ReportTree tree;
    TreeClass cls;
    std::optional<Indices> idx;       // polynomial kind, admissible trees
    std::optional<ExtInt> theta_t;    // matrix kind, admissible trees
    std::vector<RootExpansion> expansions;
    std::optional<EigenReport> eigen; // matrix kind
    std::optional<VerifyResult> verify;
    std::vector<Warning> warnings;
};

struct MatrixCertificate {
    ExtInt theta = 0;
    std::optional<ExtInt> eigenvalue_class;
    std::optional<ExtInt> eigenvector_class;
    std::string einf = "empty";
    bool admissible_everywhere = false;
    bool budget_ok = false;
    bool verified = false;
};

struct Report {
    std::string kind = "polynomial";
    std::string stage = "analyze";
    int degree = 0;
    int order = 0;
    std::string mode = "exact";
    ExtInt smoothness = ExtInt::infinity();
    std::vector<PointReport> points;
    std::optional<CombinedIndices> combined;   // polynomial kind
    std::optional<ExtInt> combined_theta;      // matrix kind
    std::optional<Certificate> certificate;              // polynomial kind
    std::optional<MatrixCertificate> matrix_certificate; // matrix kind
    std::vector<Warning> warnings;
};

Report run_analysis(const AnalysisRequest& request, Stage stage);

nlohmann::ordered_json report_to_json(const Report& report);
Report report_from_json(const nlohmann::ordered_json& doc);

std::string render_dot(const Report& report);
std::string render_ascii(const Report& report);

} // namespace smoothroots

#endif
