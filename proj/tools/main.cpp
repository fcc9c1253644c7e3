// smoothroots CLI: file-driven differentiability analysis of polynomial and
// normal-matrix curves. Talks to the engine exclusively through the public
// C API.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "smoothroots.h"

namespace {

int exit_code_for(sr_status status) {
    switch (status) {
    case SR_OK: return 0;
    case SR_ERROR_INVALID_ARGUMENT: return 2;
    case SR_ERROR_PARSE: return 3;
    case SR_ERROR_UNDECIDABLE: return 4;
    case SR_ERROR_NUMERIC: return 5;
    case SR_ERROR_UNSUPPORTED: return 6;
    case SR_ERROR_INTERNAL: return 7;
    }
    return 7;
}

struct Options {
    std::string input;
    std::string format;
    std::string points;
    double delta = -1;
    int samples = -1;
    int order = -1;
    double tol_zero = -1, tol_cluster = -1, tol_hensel = -1, tol_match = -1;
};

void add_common(CLI::App* cmd, Options& opt, const std::string& default_format) {
    cmd->add_option("input", opt.input, "request JSON file")->required();
    opt.format = default_format;
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "dot", "ascii"}));
    cmd->add_option("--points", opt.points, "comma-separated point indices to analyze");
    cmd->add_option("--order", opt.order, "override the truncation order");
    cmd->add_option("--delta", opt.delta, "verify sampling radius");
    cmd->add_option("--samples", opt.samples, "verify samples per side");
    cmd->add_option("--tol-zero", opt.tol_zero, "float-mode zero tolerance");
    cmd->add_option("--tol-cluster", opt.tol_cluster, "root clustering tolerance");
    cmd->add_option("--tol-hensel", opt.tol_hensel, "lift residual tolerance");
    cmd->add_option("--tol-match", opt.tol_match, "branch pairing tolerance");
}

int run(const Options& opt, const char* stage) {
    std::ifstream file(opt.input);
    if (!file) {
        std::cerr << "error: cannot open '" << opt.input << "'\n";
        return 2;
    }
    std::stringstream buffer;
    buffer << file.rdbuf();
    std::string text = buffer.str();

    sr_session* session = nullptr;
    sr_status status = sr_session_create(text.c_str(), &session);
    if (status != SR_OK) {
        std::cerr << "error: " << (session ? sr_session_error_message(session) : "invalid JSON")
                  << "\n";
        sr_session_destroy(session);
        return exit_code_for(status);
    }

    auto set = [&](const char* name, double value) {
        if (status == SR_OK) status = sr_session_set_option(session, name, value);
    };
    if (opt.order >= 0) set("order", opt.order);
    if (opt.delta > 0) set("delta", opt.delta);
    if (opt.samples > 0) set("samples", opt.samples);
    if (opt.tol_zero > 0) set("tol_zero", opt.tol_zero);
    if (opt.tol_cluster > 0) set("tol_cluster", opt.tol_cluster);
    if (opt.tol_hensel > 0) set("tol_hensel", opt.tol_hensel);
    if (opt.tol_match > 0) set("tol_match", opt.tol_match);

    if (status == SR_OK && !opt.points.empty()) {
        std::vector<int> indices;
        std::stringstream ss(opt.points);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                indices.push_back(std::stoi(item));
            } catch (const std::exception&) {
                std::cerr << "error: bad --points value '" << item << "'\n";
                sr_session_destroy(session);
                return 2;
            }
        }
        status = sr_session_select_points(session, indices.data(), indices.size());
    }

    if (status == SR_OK) status = sr_session_run(session, stage);
    if (status != SR_OK) {
        std::cerr << "error: " << sr_session_error_message(session) << "\n";
        sr_session_destroy(session);
        return exit_code_for(status);
    }

    if (opt.format == "json") {
        std::cout << sr_session_report_json(session) << "\n";
    } else {
        const char* rendered = sr_session_render(session, opt.format.c_str());
        if (!rendered) {
            std::cerr << "error: render failed\n";
            sr_session_destroy(session);
            return 7;
        }
        std::cout << rendered;
    }
    sr_session_destroy(session);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"differentiable roots and eigenvalues of curves given as jets"};
    app.require_subcommand(1);

    Options analyze_opt, solve_opt, verify_opt, tree_opt;
    CLI::App* analyze = app.add_subcommand("analyze", "build trees, indices, certificates");
    add_common(analyze, analyze_opt, "json");
    CLI::App* solve = app.add_subcommand("solve", "analyze plus root/eigenvalue expansions");
    add_common(solve, solve_opt, "json");
    CLI::App* verify = app.add_subcommand("verify", "solve plus numeric soundness checks");
    add_common(verify, verify_opt, "json");
    CLI::App* tree = app.add_subcommand("tree", "render the factorization tree");
    add_common(tree, tree_opt, "ascii");

    CLI11_PARSE(app, argc, argv);

    if (app.got_subcommand(analyze)) return run(analyze_opt, "analyze");
    if (app.got_subcommand(solve)) return run(solve_opt, "solve");
    if (app.got_subcommand(verify)) return run(verify_opt, "verify");
    if (app.got_subcommand(tree)) return run(tree_opt, "analyze");
    return 2;
}
