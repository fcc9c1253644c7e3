#include "report.hpp"
#include <functional>

#include <algorithm>

#include "verify.hpp"

namespace smoothroots {

namespace {

using nlohmann::ordered_json;

std::string rational_str(const Rational& r) { return format_rational(r); }

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

ordered_json scalar_to_json(const Scalar& s) {
    ordered_json out = ordered_json::array();
    if (s.mode() == Mode::exact) {
        out.push_back(format_rational(s.rational().re));
        out.push_back(format_rational(s.rational().im));
    } else {
        out.push_back(s.to_complex().real());
        out.push_back(s.to_complex().imag());
    }
    return out;
}

Scalar scalar_from_json(const ordered_json& v) {
    if (!v.is_array() || v.size() != 2) fail(ErrorCode::parse, "bad scalar encoding");
    if (v[0].is_string())
        return Scalar::from_rational(parse_rational(v[0].get<std::string>()),
                                     parse_rational(v[1].get<std::string>()));
    return Scalar(std::complex<double>(v[0].get<double>(), v[1].get<double>()));
}

ordered_json jet_to_json(const Jet& jet) {
    ordered_json out;
    out["order"] = jet.order();
    const char* flag = "none";
    if (jet.left_exact_zero() && jet.right_exact_zero()) flag = "both";
    else if (jet.left_exact_zero()) flag = "left";
    else if (jet.right_exact_zero()) flag = "right";
    out["exact_zero"] = flag;
    ordered_json left = ordered_json::array();
    ordered_json right = ordered_json::array();
    for (int k = 0; k <= jet.order(); ++k) {
        left.push_back(scalar_to_json(jet.left(k)));
        right.push_back(scalar_to_json(jet.right(k)));
    }
    out["left"] = std::move(left);
    out["right"] = std::move(right);
    return out;
}

Jet jet_from_json(const ordered_json& v) {
    std::vector<Scalar> left, right;
    for (const auto& c : v.at("left")) left.push_back(scalar_from_json(c));
    for (const auto& c : v.at("right")) right.push_back(scalar_from_json(c));
    std::string flag = v.at("exact_zero").get<std::string>();
    return Jet::from_sides(std::move(left), std::move(right), flag == "left" || flag == "both",
                           flag == "right" || flag == "both");
}

ordered_json extint_to_json(const ExtInt& e) {
    if (e.is_infinite()) return ordered_json("inf");
    return ordered_json(e.value());
}

ExtInt extint_from_json(const ordered_json& v) {
    if (v.is_string()) return ExtInt::infinity();
    return ExtInt(v.get<long>());
}

ordered_json series_to_json(const Series& s) {
    ordered_json out;
    out["mode"] = s.mode == Mode::exact ? "exact" : "float";
    out["limit"] = rational_str(s.limit);
    ordered_json terms = ordered_json::array();
    for (const auto& term : s.terms) {
        ordered_json t;
        t["e"] = rational_str(term.exponent);
        t["c"] = scalar_to_json(term.coefficient);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

Series series_from_json(const ordered_json& v) {
    Series out;
    out.mode = v.at("mode").get<std::string>() == "exact" ? Mode::exact : Mode::floating;
    out.limit = parse_rational(v.at("limit").get<std::string>());
    for (const auto& t : v.at("terms"))
        out.terms.push_back({parse_rational(t.at("e").get<std::string>()),
                             scalar_from_json(t.at("c"))});
    return out;
}

ordered_json tree_to_json(const ReportTree& t) {
    ordered_json out;
    out["d"] = t.d;
    out["q"] = t.q;
    out["kind"] = t.kind;
    out["r"] = t.r;
    out["N"] = t.big_n;
    out["reductions"] = t.reductions;
    out["leaf_reason"] = t.leaf_reason;
    ordered_json children = ordered_json::array();
    for (const auto& child : t.children) children.push_back(tree_to_json(child));
    out["children"] = std::move(children);
    out["aux_plus"] = t.aux_plus ? tree_to_json(*t.aux_plus) : ordered_json(nullptr);
    out["aux_minus"] = t.aux_minus ? tree_to_json(*t.aux_minus) : ordered_json(nullptr);
    return out;
}

ReportTree tree_from_json(const ordered_json& v) {
    ReportTree out;
    out.d = v.at("d").get<int>();
    out.q = v.at("q").get<std::string>();
    out.kind = v.at("kind").get<std::string>();
    out.r = v.at("r").get<int>();
    out.big_n = v.at("N").get<int>();
    out.reductions = v.at("reductions").get<std::vector<std::string>>();
    out.leaf_reason = v.at("leaf_reason").get<std::string>();
    for (const auto& child : v.at("children")) out.children.push_back(tree_from_json(child));
    if (!v.at("aux_plus").is_null())
        out.aux_plus = std::make_shared<ReportTree>(tree_from_json(v.at("aux_plus")));
    if (!v.at("aux_minus").is_null())
        out.aux_minus = std::make_shared<ReportTree>(tree_from_json(v.at("aux_minus")));
    return out;
}

ordered_json class_to_json(const TreeClass& c) {
    ordered_json out;
    out["admissible"] = c.admissible;
    out["good"] = c.good;
    out["bad"] = c.bad;
    out["fair"] = c.fair;
    return out;
}

TreeClass class_from_json(const ordered_json& v) {
    TreeClass out;
    out.admissible = v.at("admissible").get<bool>();
    out.good = v.at("good").get<bool>();
    out.bad = v.at("bad").get<bool>();
    out.fair = v.at("fair").get<bool>();
    return out;
}

ordered_json expansion_to_json(const RootExpansion& e) {
    ordered_json out;
    out["branch"] = e.branch_id;
    out["base_N"] = e.base_n;
    out["ambiguous"] = e.pairing_ambiguous;
    out["right"] = series_to_json(e.right);
    out["left"] = series_to_json(e.left);
    return out;
}

RootExpansion expansion_from_json(const ordered_json& v) {
    RootExpansion out;
    out.branch_id = v.at("branch").get<int>();
    out.base_n = v.at("base_N").get<int>();
    out.pairing_ambiguous = v.at("ambiguous").get<bool>();
    out.right = series_from_json(v.at("right"));
    out.left = series_from_json(v.at("left"));
    return out;
}

ordered_json verify_to_json(const VerifyResult& v) {
    ordered_json out;
    out["delta"] = v.delta;
    out["samples"] = v.samples;
    out["max_residual"] = v.max_residual;
    out["envelope_constant"] = v.envelope_constant;
    out["envelope_exponent"] = v.envelope_exponent;
    out["root_match_max"] = v.root_match_max;
    out["divided_difference"] = v.divided_difference;
    out["eigen_residual_max"] = v.eigen_residual_max;
    out["orthonormality_max"] = v.orthonormality_max;
    out["pass"] = v.pass;
    return out;
}

VerifyResult verify_from_json(const ordered_json& v) {
    VerifyResult out;
    out.delta = v.at("delta").get<double>();
    out.samples = v.at("samples").get<int>();
    out.max_residual = v.at("max_residual").get<double>();
    out.envelope_constant = v.at("envelope_constant").get<double>();
    out.envelope_exponent = v.at("envelope_exponent").get<std::string>();
    out.root_match_max = v.at("root_match_max").get<double>();
    out.divided_difference = v.at("divided_difference").get<std::string>();
    out.eigen_residual_max = v.at("eigen_residual_max").get<double>();
    out.orthonormality_max = v.at("orthonormality_max").get<double>();
    out.pass = v.at("pass").get<bool>();
    return out;
}

ordered_json warnings_to_json(const std::vector<Warning>& warnings) {
    ordered_json out = ordered_json::array();
    for (const auto& w : warnings) {
        ordered_json j;
        j["op"] = w.op;
        j["message"] = w.message;
        out.push_back(std::move(j));
    }
    return out;
}

std::vector<Warning> warnings_from_json(const ordered_json& v) {
    std::vector<Warning> out;
    for (const auto& w : v)
        out.push_back({w.at("op").get<std::string>(), w.at("message").get<std::string>()});
    return out;
}

} // namespace

ReportTree report_tree(const TreeNode& node) {
    ReportTree out;
    out.d = node.degree;
    out.q = rational_str(node.q);
    out.kind = node_kind_name(node.kind);
    out.r = node.r;
    out.big_n = node.big_n;
    out.reductions = node.reductions;
    out.leaf_reason = node.leaf_reason;
    for (const auto& child : node.children) out.children.push_back(report_tree(child));
    if (node.aux_plus) out.aux_plus = std::make_shared<ReportTree>(report_tree(*node.aux_plus));
    if (node.aux_minus) out.aux_minus = std::make_shared<ReportTree>(report_tree(*node.aux_minus));
    return out;
}

ReportTree report_tree(const MatrixTreeNode& node) {
    ReportTree out;
    out.d = node.size;
    out.q = rational_str(node.q);
    out.kind = node_kind_name(node.kind);
    out.r = node.r;
    out.reductions = node.reductions;
    out.leaf_reason = node.leaf_reason;
    for (const auto& child : node.children) out.children.push_back(report_tree(child));
    return out;
}

Report run_analysis(const AnalysisRequest& request, Stage stage) {
    Report report;
    report.kind = request.kind == RequestKind::polynomial ? "polynomial" : "matrix";
    report.stage = stage == Stage::analyze ? "analyze" : (stage == Stage::solve ? "solve" : "verify");
    report.degree = request.degree;
    report.order = request.order;
    report.mode = request.mode == Mode::exact ? "exact" : "float";
    report.smoothness = request.smoothness;

    bool all_admissible = true;
    bool any_candidate = false;
    std::vector<std::pair<Indices, TreeClass>> per_point;
    std::vector<ExtInt> thetas;
    bool radical_shape = request.kind == RequestKind::polynomial && request.degree >= 2;

    for (std::size_t i = 0; i < request.points.size(); ++i) {
        PointReport point;
        point.t0 = request.points[i].t0;

        if (request.kind == RequestKind::polynomial) {
            PolyCurve curve = request.curve_at(i);
            curve.validate();
            for (int j = 1; j < curve.degree; ++j)
                if (!curve.a[static_cast<std::size_t>(j - 1)].is_identically_zero_flagged())
                    radical_shape = false;
            EinfResult probe = einf_probe(curve, request.tol.zero);
            point.einf = probe.probe == EinfProbe::empty ? "empty" : "candidate";
            if (probe.probe == EinfProbe::candidate) {
                any_candidate = true;
                point.warnings.push_back(
                    {"einf_probe", "top bezoutiant minor is zero to truncation: cannot exclude "
                                   "infinite order of contact"});
            }
            TreeNode tree = build_tree(curve, request.tol);
            point.tree = report_tree(tree);
            point.cls = classify(tree);
            if (point.cls.admissible) {
                point.idx = indices(tree);
                per_point.push_back({*point.idx, point.cls});
            } else {
                all_admissible = false;
                per_point.push_back({Indices{}, point.cls});
                point.warnings.push_back({"build_tree", "tree is non-admissible"});
            }
            if (stage != Stage::analyze) {
                if (!point.cls.admissible) {
                    point.warnings.push_back({"solve_roots", "skipped: tree is non-admissible"});
                } else if (probe.probe == EinfProbe::candidate) {
                    point.warnings.push_back({"solve_roots", "skipped: E^(inf) candidate"});
                } else {
                    point.expansions = solve_roots(tree, request.tol);
                    for (const auto& b : point.expansions) {
                        if (b.pairing_ambiguous) {
                            point.warnings.push_back(
                                {"solve_roots", "branch pairing across t = 0 is ambiguous"});
                            break;
                        }
                    }
                }
            }
            if (stage == Stage::verify && !point.expansions.empty()) {
                ExtInt guaranteed = point.idx ? point.idx->gamma : ExtInt(0);
                point.verify =
                    verify_polynomial(curve, point.expansions, request.verify, guaranteed);
            }
        } else {
            MatrixCurve curve = request.matrix_at(i);
            curve.validate();
            if (!check_normal(curve, request.tol.hensel))
                fail(ErrorCode::invalid_argument,
                     "input matrix curve is not normal (A A* != A* A)");
            PolyCurve pa = char_poly(curve);
            EinfResult probe = einf_probe(pa, request.tol.zero);
            point.einf = probe.probe == EinfProbe::empty ? "empty" : "candidate";
            if (probe.probe == EinfProbe::candidate) {
                any_candidate = true;
                point.warnings.push_back({"einf_probe", "cannot exclude infinite order of "
                                                        "contact of the eigenvalues"});
            }
            MatrixTreeNode tree = build_tree_normal(curve, request.tol);
            point.tree = report_tree(tree);
            point.cls = classify_matrix_tree(tree);
            if (point.cls.admissible) {
                point.theta_t = theta(tree);
                thetas.push_back(*point.theta_t);
            } else {
                all_admissible = false;
                std::string reason = "tree is non-admissible";
                std::function<void(const MatrixTreeNode&)> find_reason =
                    [&](const MatrixTreeNode& n) {
                        if (!n.leaf_reason.empty()) reason = "non-admissible: " + n.leaf_reason;
                        for (const auto& c : n.children) find_reason(c);
                    };
                find_reason(tree);
                point.warnings.push_back({"build_tree_normal", reason});
            }
            if (stage != Stage::analyze) {
                if (!point.cls.admissible) {
                    point.warnings.push_back(
                        {"eigendecompose", "skipped: tree is non-admissible"});
                } else if (probe.probe == EinfProbe::candidate) {
                    point.warnings.push_back({"eigendecompose", "skipped: E^(inf) candidate"});
                } else {
                    EigenDecomposition eig =
                        eigendecompose(curve, tree, *point.theta_t, request.tol);
                    EigenReport er;
                    er.values = std::move(eig.eigenvalues);
                    er.frame = std::move(eig.frame);
                    er.eigenvalue_class = eig.eigenvalue_class;
                    er.eigenvector_class = eig.eigenvector_class;
                    point.eigen = std::move(er);
                }
            }
            if (stage == Stage::verify && point.eigen)
                point.verify = verify_matrix(curve, *point.eigen, request.verify);
        }
        report.points.push_back(std::move(point));
    }

    EinfProbe einf = any_candidate ? EinfProbe::candidate : EinfProbe::empty;
    if (request.kind == RequestKind::polynomial) {
        if (all_admissible) {
            report.combined = combine_points(per_point);
            report.certificate = certify(per_point, *report.combined, request.smoothness, einf,
                                         radical_shape);
        } else {
            Certificate cert;
            cert.theorem_case = TheoremCase::bad;
            cert.required_known = false;
            cert.einf = einf;
            cert.admissible_everywhere = false;
            cert.budget_ok = false;
            cert.verified = false;
            report.certificate = cert;
            report.warnings.push_back(
                {"certify", "no smoothness class asserted: some tree is non-admissible"});
        }
    } else {
        MatrixCertificate cert;
        cert.einf = einf == EinfProbe::empty ? "empty" : "candidate";
        cert.admissible_everywhere = all_admissible;
        if (all_admissible) {
            cert.theta = theta_global(thetas);
            report.combined_theta = cert.theta;
            cert.budget_ok = request.smoothness >= cert.theta;
            cert.verified = cert.budget_ok && einf == EinfProbe::empty;
            if (cert.verified) {
                cert.eigenvalue_class = request.smoothness;
                cert.eigenvector_class = request.smoothness.is_infinite()
                                             ? ExtInt::infinity()
                                             : ExtInt(request.smoothness.value() -
                                                      cert.theta.value());
            }
        } else {
            report.warnings.push_back(
                {"certify",
                 "no eigenvalue/eigenvector class asserted: some tree is non-admissible"});
        }
        report.matrix_certificate = cert;
    }
    return report;
}

nlohmann::ordered_json report_to_json(const Report& report) {
    ordered_json out;
    out["schema_version"] = "1";
    out["kind"] = report.kind;
    out["stage"] = report.stage;
    out["degree"] = report.degree;
    out["order"] = report.order;
    out["mode"] = report.mode;
    out["smoothness"] = extint_to_json(report.smoothness);

    ordered_json points = ordered_json::array();
    for (const auto& p : report.points) {
        ordered_json jp;
        jp["t0"] = p.t0;
        jp["einf"] = p.einf;
        jp["tree"] = tree_to_json(p.tree);
        jp["class"] = class_to_json(p.cls);
        if (p.idx) {
            ordered_json idx;
            idx["Gamma"] = extint_to_json(p.idx->big_gamma);
            idx["gamma"] = extint_to_json(p.idx->gamma);
            idx["Gamma_hat"] =
                p.idx->gamma_hat ? extint_to_json(*p.idx->gamma_hat) : ordered_json(nullptr);
            jp["indices"] = std::move(idx);
        } else {
            jp["indices"] = nullptr;
        }
        jp["Theta"] = p.theta_t ? extint_to_json(*p.theta_t) : ordered_json(nullptr);
        ordered_json exps = ordered_json::array();
        for (const auto& e : p.expansions) exps.push_back(expansion_to_json(e));
        jp["expansions"] = std::move(exps);
        if (p.eigen) {
            ordered_json je;
            je["eigenvalue_class"] = extint_to_json(p.eigen->eigenvalue_class);
            je["eigenvector_class"] = extint_to_json(p.eigen->eigenvector_class);
            ordered_json values = ordered_json::array();
            for (const auto& v : p.eigen->values) values.push_back(jet_to_json(v));
            je["values"] = std::move(values);
            ordered_json frame = ordered_json::array();
            for (int i = 0; i < p.eigen->frame.rows; ++i) {
                ordered_json row = ordered_json::array();
                for (int j = 0; j < p.eigen->frame.cols; ++j)
                    row.push_back(jet_to_json(p.eigen->frame.at(i, j)));
                frame.push_back(std::move(row));
            }
            je["frame"] = std::move(frame);
            jp["eigen"] = std::move(je);
        } else {
            jp["eigen"] = nullptr;
        }
        jp["verify"] = p.verify ? verify_to_json(*p.verify) : ordered_json(nullptr);
        jp["warnings"] = warnings_to_json(p.warnings);
        points.push_back(std::move(jp));
    }
    out["points"] = std::move(points);

    if (report.combined) {
        ordered_json c;
        c["Gamma"] = extint_to_json(report.combined->big_gamma);
        c["gamma"] = extint_to_json(report.combined->gamma);
        c["Gamma_hat"] = report.combined->gamma_hat ? extint_to_json(*report.combined->gamma_hat)
                                                    : ordered_json(nullptr);
        out["combined"] = std::move(c);
    } else if (report.combined_theta) {
        ordered_json c;
        c["Theta"] = extint_to_json(*report.combined_theta);
        out["combined"] = std::move(c);
    } else {
        out["combined"] = nullptr;
    }

    if (report.certificate) {
        const Certificate& c = *report.certificate;
        ordered_json jc;
        jc["case"] = theorem_case_name(c.theorem_case);
        jc["required_input_class"] =
            c.required_known ? extint_to_json(c.required_input_class) : ordered_json(nullptr);
        jc["guaranteed_class"] = extint_to_json(c.guaranteed_class);
        ordered_json hyp;
        hyp["einf"] = c.einf == EinfProbe::empty ? "empty" : "candidate";
        hyp["admissible_everywhere"] = c.admissible_everywhere;
        hyp["budget_ok"] = c.budget_ok;
        jc["hypotheses"] = std::move(hyp);
        jc["verified"] = c.verified;
        out["certificate"] = std::move(jc);
    } else {
        out["certificate"] = nullptr;
    }

    if (report.matrix_certificate) {
        const MatrixCertificate& c = *report.matrix_certificate;
        ordered_json jc;
        jc["Theta"] = extint_to_json(c.theta);
        jc["eigenvalue_class"] =
            c.eigenvalue_class ? extint_to_json(*c.eigenvalue_class) : ordered_json(nullptr);
        jc["eigenvector_class"] =
            c.eigenvector_class ? extint_to_json(*c.eigenvector_class) : ordered_json(nullptr);
        ordered_json hyp;
        hyp["einf"] = c.einf;
        hyp["admissible_everywhere"] = c.admissible_everywhere;
        hyp["budget_ok"] = c.budget_ok;
        jc["hypotheses"] = std::move(hyp);
        jc["verified"] = c.verified;
        out["matrix_certificate"] = std::move(jc);
    } else {
        out["matrix_certificate"] = nullptr;
    }

    out["warnings"] = warnings_to_json(report.warnings);
    return out;
}

Report report_from_json(const nlohmann::ordered_json& doc) {
    Report out;
    out.kind = doc.at("kind").get<std::string>();
    out.stage = doc.at("stage").get<std::string>();
    out.degree = doc.at("degree").get<int>();
    out.order = doc.at("order").get<int>();
    out.mode = doc.at("mode").get<std::string>();
    out.smoothness = extint_from_json(doc.at("smoothness"));
    for (const auto& jp : doc.at("points")) {
        PointReport p;
        p.t0 = jp.at("t0").get<double>();
        p.einf = jp.at("einf").get<std::string>();
        p.tree = tree_from_json(jp.at("tree"));
        p.cls = class_from_json(jp.at("class"));
        if (!jp.at("indices").is_null()) {
            Indices idx;
            idx.big_gamma = extint_from_json(jp.at("indices").at("Gamma"));
            idx.gamma = extint_from_json(jp.at("indices").at("gamma"));
            if (!jp.at("indices").at("Gamma_hat").is_null())
                idx.gamma_hat = extint_from_json(jp.at("indices").at("Gamma_hat"));
            p.idx = idx;
        }
        if (!jp.at("Theta").is_null()) p.theta_t = extint_from_json(jp.at("Theta"));
        for (const auto& e : jp.at("expansions")) p.expansions.push_back(expansion_from_json(e));
        if (!jp.at("eigen").is_null()) {
            const auto& je = jp.at("eigen");
            EigenReport er;
            er.eigenvalue_class = extint_from_json(je.at("eigenvalue_class"));
            er.eigenvector_class = extint_from_json(je.at("eigenvector_class"));
            for (const auto& v : je.at("values")) er.values.push_back(jet_from_json(v));
            const auto& frame = je.at("frame");
            int rows = static_cast<int>(frame.size());
            int cols = rows > 0 ? static_cast<int>(frame[0].size()) : 0;
            if (rows > 0) {
                Jet first = jet_from_json(frame[0][0]);
                er.frame = JetMatrix(rows, cols, first.order(), first.mode());
                for (int i = 0; i < rows; ++i)
                    for (int j = 0; j < cols; ++j)
                        er.frame.at(i, j) =
                            jet_from_json(frame[static_cast<std::size_t>(i)]
                                               [static_cast<std::size_t>(j)]);
            }
            p.eigen = std::move(er);
        }
        if (!jp.at("verify").is_null()) p.verify = verify_from_json(jp.at("verify"));
        p.warnings = warnings_from_json(jp.at("warnings"));
        out.points.push_back(std::move(p));
    }
    if (!doc.at("combined").is_null()) {
        if (doc.at("combined").contains("Theta")) {
            out.combined_theta = extint_from_json(doc.at("combined").at("Theta"));
        } else {
            CombinedIndices c;
            c.big_gamma = extint_from_json(doc.at("combined").at("Gamma"));
            c.gamma = extint_from_json(doc.at("combined").at("gamma"));
            if (!doc.at("combined").at("Gamma_hat").is_null())
                c.gamma_hat = extint_from_json(doc.at("combined").at("Gamma_hat"));
            out.combined = c;
        }
    }
    if (!doc.at("certificate").is_null()) {
        const auto& jc = doc.at("certificate");
        Certificate c;
        std::string case_name = jc.at("case").get<std::string>();
        c.theorem_case = case_name == "good"
                             ? TheoremCase::good
                             : (case_name == "fair"
                                    ? TheoremCase::fair
                                    : (case_name == "bad" ? TheoremCase::bad
                                                          : TheoremCase::radical));
        if (jc.at("required_input_class").is_null()) c.required_known = false;
        else c.required_input_class = extint_from_json(jc.at("required_input_class"));
        c.guaranteed_class = extint_from_json(jc.at("guaranteed_class"));
        c.einf = jc.at("hypotheses").at("einf").get<std::string>() == "empty"
                     ? EinfProbe::empty
                     : EinfProbe::candidate;
        c.admissible_everywhere = jc.at("hypotheses").at("admissible_everywhere").get<bool>();
        c.budget_ok = jc.at("hypotheses").at("budget_ok").get<bool>();
        c.verified = jc.at("verified").get<bool>();
        out.certificate = c;
    }
    if (!doc.at("matrix_certificate").is_null()) {
        const auto& jc = doc.at("matrix_certificate");
        MatrixCertificate c;
        c.theta = extint_from_json(jc.at("Theta"));
        if (!jc.at("eigenvalue_class").is_null())
            c.eigenvalue_class = extint_from_json(jc.at("eigenvalue_class"));
        if (!jc.at("eigenvector_class").is_null())
            c.eigenvector_class = extint_from_json(jc.at("eigenvector_class"));
        c.einf = jc.at("hypotheses").at("einf").get<std::string>();
        c.admissible_everywhere = jc.at("hypotheses").at("admissible_everywhere").get<bool>();
        c.budget_ok = jc.at("hypotheses").at("budget_ok").get<bool>();
        c.verified = jc.at("verified").get<bool>();
        out.matrix_certificate = c;
    }
    out.warnings = warnings_from_json(doc.at("warnings"));
    return out;
}

namespace {

void dot_node(const ReportTree& t, const std::string& id, std::string& out) {
    out += "  \"" + id + "\" [label=\"(" + std::to_string(t.d) + ", " + t.q + ")\\n" + t.kind +
           "\"];\n";
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        std::string cid = id + "." + std::to_string(i);
        dot_node(t.children[i], cid, out);
        out += "  \"" + id + "\" -> \"" + cid + "\";\n";
    }
    if (t.aux_plus) {
        std::string cid = id + ".plus";
        dot_node(*t.aux_plus, cid, out);
        out += "  \"" + id + "\" -> \"" + cid + "\" [style=dashed, label=\"+\"];\n";
    }
    if (t.aux_minus) {
        std::string cid = id + ".minus";
        dot_node(*t.aux_minus, cid, out);
        out += "  \"" + id + "\" -> \"" + cid + "\" [style=dashed, label=\"-\"];\n";
    }
}

void ascii_node(const ReportTree& t, int depth, const std::string& prefix, std::string& out) {
    out += std::string(static_cast<std::size_t>(2 * depth), ' ') + prefix + "(" +
           std::to_string(t.d) + ", " + t.q + ") " + t.kind;
    if (!t.reductions.empty()) {
        out += " [";
        for (std::size_t i = 0; i < t.reductions.size(); ++i) {
            if (i) out += ", ";
            out += t.reductions[i];
        }
        out += "]";
    }
    if (!t.leaf_reason.empty()) out += " -- " + t.leaf_reason;
    out += "\n";
    for (const auto& child : t.children) ascii_node(child, depth + 1, "", out);
    if (t.aux_plus) ascii_node(*t.aux_plus, depth + 1, "aux+: ", out);
    if (t.aux_minus) ascii_node(*t.aux_minus, depth + 1, "aux-: ", out);
}

} // namespace

std::string render_dot(const Report& report) {
    std::string out = "digraph factorization {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < report.points.size(); ++i)
        dot_node(report.points[i].tree, "p" + std::to_string(i), out);
    out += "}\n";
    return out;
}

std::string render_ascii(const Report& report) {
    std::string out;
    for (std::size_t i = 0; i < report.points.size(); ++i) {
        const PointReport& p = report.points[i];
        out += "point " + std::to_string(i) + " (t0 = " + std::to_string(p.t0) + ")\n";
        ascii_node(p.tree, 1, "", out);
        out += "  class: ";
        out += p.cls.admissible ? "admissible" : "non-admissible";
        if (p.cls.good) out += ", good";
        if (p.cls.bad) out += ", bad";
        if (p.cls.fair && !p.cls.good) out += ", fair";
        out += "\n";
        if (p.idx) {
            out += "  Gamma = " + p.idx->big_gamma.str() + ", gamma = " + p.idx->gamma.str();
            out += ", Gamma_hat = " + (p.idx->gamma_hat ? p.idx->gamma_hat->str() : "?") + "\n";
        }
        if (p.theta_t) out += "  Theta = " + p.theta_t->str() + "\n";
        for (const auto& w : p.warnings) out += "  warning [" + w.op + "]: " + w.message + "\n";
    }
    return out;
}

} // namespace smoothroots
