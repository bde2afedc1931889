// bcx — command-line front end for the bicomplex linear algebra library.
//
// Exit codes: 0 success / true predicate, 1 mathematical falsehood
// (non-positive matrix, NotProduct, NotCP, ...), 2 malformed input.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <bcx/bcx.hpp>

namespace {

using bcx::io::json;

struct Options {
    double tol = 1e-10;
    std::uint64_t seed = 0; // reserved for randomized subcommands
    std::string output;     // empty = stdout
};

void emit(const Options& opt, const json& j) {
    if (opt.output.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        bcx::io::write_json_file(opt.output, j);
    }
}

bcx::MatrixMap load_map(const std::string& path) {
    const json j = bcx::io::read_json_file(path);
    if (bcx::io::looks_like_kraus(j)) {
        return bcx::map_from_kraus(bcx::io::kraus_from_json(j));
    }
    return bcx::io::map_from_json(j);
}

json complex_list(const std::vector<bcx::cplx>& values) {
    json out = json::array();
    for (bcx::cplx v : values) out.push_back(json::array({v.real(), v.imag()}));
    return out;
}

int run_split(const Options& opt, const std::string& path, bool to_cartesian) {
    const bcx::Bicomplex z = bcx::io::scalar_from_json(bcx::io::read_json_file(path));
    emit(opt, bcx::io::scalar_to_json(z, to_cartesian ? bcx::io::Repr::Cartesian
                                                      : bcx::io::Repr::Idempotent));
    return 0;
}

int run_tensor(const Options& opt, const std::string& a_path, const std::string& b_path) {
    const bcx::Matrix a = bcx::io::load_matrix(a_path);
    const bcx::Matrix b = bcx::io::load_matrix(b_path);
    const bcx::Matrix product = bcx::tensor_idempotent(a, b);
    const double route_diff = bcx::max_entry_dist(product, bcx::tensor_cartesian(a, b));
    if (route_diff > 1e-12 * (1.0 + product.frobenius_norm())) {
        throw bcx::DomainError("RouteMismatch",
                               "tensor routes disagree by " + std::to_string(route_diff));
    }
    emit(opt, bcx::io::matrix_to_json(product));
    return 0;
}

int run_positivity(const Options& opt, const std::string& path) {
    const bcx::Matrix a = bcx::io::load_matrix(path);
    const bool components =
        bcx::is_hyperbolic_positive(a, opt.tol, bcx::PositivityMethod::Components);
    const bool cartesian =
        bcx::is_hyperbolic_positive(a, opt.tol, bcx::PositivityMethod::Cartesian);
    const bool eigen =
        bcx::is_hyperbolic_positive(a, opt.tol, bcx::PositivityMethod::Eigenvalues);
    const bool verdict = components && cartesian && eigen;
    emit(opt, json{{"hyperbolic_positive", verdict},
                   {"methods",
                    {{"components", components}, {"cartesian", cartesian}, {"eigen", eigen}}}});
    return verdict ? 0 : 1;
}

int run_state(const Options& opt, const std::string& path) {
    const bcx::Matrix a = bcx::io::load_matrix(path);
    const bool verdict = bcx::is_state(a, opt.tol);
    emit(opt, json{{"state", verdict},
                   {"trace", bcx::io::scalar_to_json(a.trace())}});
    return verdict ? 0 : 1;
}

int run_cholesky(const Options& opt, const std::string& path, bool lower) {
    const bcx::Matrix a = bcx::io::load_matrix(path);
    const bcx::Matrix u =
        bcx::cholesky(a, opt.tol, lower ? bcx::Triangle::Lower : bcx::Triangle::Upper);
    emit(opt, bcx::io::matrix_to_json(u));
    return 0;
}

int run_rank1(const Options& opt, const std::string& path) {
    const bcx::Matrix a = bcx::io::load_matrix(path);
    json vectors = json::array();
    for (const bcx::Vector& v : bcx::rank_one_decomposition(a, opt.tol)) {
        vectors.push_back(bcx::io::vector_to_json(v));
    }
    emit(opt, json{{"vectors", std::move(vectors)}});
    return 0;
}

int run_eig(const Options& opt, const std::string& path) {
    const bcx::EigenPairList ev = bcx::bc_eigenvalues(bcx::io::load_matrix(path));
    emit(opt, json{{"spectrum1", complex_list(ev.spectrum1)},
                   {"spectrum2", complex_list(ev.spectrum2)}});
    return 0;
}

int run_inverse(const Options& opt, const std::string& path) {
    const bcx::Matrix a = bcx::io::load_matrix(path);
    const bcx::Matrix inv = a.inverse(bcx::Matrix::InverseMethod::Componentwise, opt.tol);
    const bcx::Matrix via_cart = a.inverse(bcx::Matrix::InverseMethod::Cartesian, opt.tol);
    const double diff = bcx::max_entry_dist(inv, via_cart);
    if (diff > 1e-10 * (1.0 + inv.frobenius_norm())) {
        throw bcx::DomainError("RouteMismatch",
                               "inverse formulas disagree by " + std::to_string(diff));
    }
    emit(opt, bcx::io::matrix_to_json(inv));
    return 0;
}

int run_recover(const Options& opt, const std::string& path, Eigen::Index n, Eigen::Index m) {
    const bcx::Matrix big = bcx::io::load_matrix(path);
    const bcx::RecoveredFactors rec = bcx::recover_factors(big, n, m, opt.tol);
    emit(opt, json{{"a", bcx::io::matrix_to_json(rec.a)},
                   {"b", bcx::io::matrix_to_json(rec.b)},
                   {"residual", rec.residual},
                   {"normalization", "factor_b_trace_one"}});
    return 0;
}

int run_choi(const Options& opt, const std::string& path) {
    emit(opt, bcx::io::matrix_to_json(bcx::choi_matrix(load_map(path))));
    return 0;
}

int run_cp_test(const Options& opt, const std::string& path) {
    const bool verdict = bcx::is_completely_positive(load_map(path), opt.tol);
    emit(opt, json{{"completely_positive", verdict}});
    return verdict ? 0 : 1;
}

int run_kraus(const Options& opt, const std::string& path) {
    emit(opt, bcx::io::kraus_to_json(bcx::kraus_decomposition(load_map(path), opt.tol)));
    return 0;
}

int run_tp_test(const Options& opt, const std::string& path) {
    const bool verdict = bcx::is_trace_preserving(load_map(path), opt.tol);
    emit(opt, json{{"trace_preserving", verdict}});
    return verdict ? 0 : 1;
}

int run_apply_channel(const Options& opt, const std::string& map_path,
                      const std::string& matrix_path) {
    const bcx::MatrixMap phi = load_map(map_path);
    const bcx::Matrix a = bcx::io::load_matrix(matrix_path);
    const bcx::Matrix image =
        a.rows() == phi.n() ? bcx::apply_map(phi, a) : bcx::block_apply(phi, a);
    emit(opt, bcx::io::matrix_to_json(image));
    return 0;
}

int run_tensor_maps(const Options& opt, const std::string& a_path, const std::string& b_path) {
    emit(opt, bcx::io::map_to_json(bcx::tensor_maps(load_map(a_path), load_map(b_path))));
    return 0;
}

int run_dsp_apply(const Options& opt, const std::string& a_path, const std::string& b_path,
                  const std::string& x_path) {
    const bcx::Matrix a = bcx::io::load_matrix(a_path);
    const bcx::Matrix b = bcx::io::load_matrix(b_path);
    const bcx::Vector x = bcx::io::vector_from_json(bcx::io::read_json_file(x_path));
    bcx::OpCounter factored_counter, direct_counter;
    const bcx::Vector y = bcx::apply_factored(a, b, x, &factored_counter);
    const bcx::Vector y_direct = bcx::apply_direct(a, b, x, &direct_counter);
    const double diff = bcx::max_entry_dist(y.as_column(), y_direct.as_column());
    if (diff > 1e-10 * (1.0 + bcx::d_vector_norm(y).s() + bcx::d_vector_norm(y).t())) {
        throw bcx::DomainError("RouteMismatch",
                               "factored and direct products disagree by " + std::to_string(diff));
    }
    json counts = json::array();
    for (int l = 0; l < 2; ++l) {
        counts.push_back(json{{"direct_mults", direct_counter.complex_mults[l]},
                              {"factored_mults", factored_counter.complex_mults[l]}});
    }
    emit(opt, json{{"y", bcx::io::vector_to_json(y)}, {"counts", std::move(counts)}});
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bicomplex linear algebra toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--tol", opt.tol, "numerical tolerance")->capture_default_str();
    app.add_option("--seed", opt.seed, "RNG seed (reserved)");
    app.add_option("--output", opt.output, "output path (default: stdout)");

    std::string in1, in2, in3;
    Eigen::Index dim_n = 0, dim_m = 0;
    bool lower = false;

    auto* split = app.add_subcommand("split", "scalar cartesian -> idempotent components");
    split->add_option("scalar", in1, "scalar JSON file")->required();
    auto* join = app.add_subcommand("join", "scalar idempotent components -> cartesian");
    join->add_option("scalar", in1, "scalar JSON file")->required();

    auto* tensor = app.add_subcommand("tensor", "tensor product of two matrices");
    tensor->add_option("a", in1, "left factor")->required();
    tensor->add_option("b", in2, "right factor")->required();

    auto* positivity = app.add_subcommand("positivity", "hyperbolic positivity, three methods");
    positivity->add_option("matrix", in1)->required();
    auto* state = app.add_subcommand("state", "hyperbolic positive with trace 1");
    state->add_option("matrix", in1)->required();

    auto* chol = app.add_subcommand("cholesky", "triangular factor U with A = U^{*t} U");
    chol->add_option("matrix", in1)->required();
    chol->add_flag("--lower", lower, "produce the lower-triangular variant");

    auto* rank1 = app.add_subcommand("rank1", "rank-one decomposition A = sum a_i a_i^{*t}");
    rank1->add_option("matrix", in1)->required();

    auto* eig = app.add_subcommand("eig", "component spectra");
    eig->add_option("matrix", in1)->required();

    auto* inverse = app.add_subcommand("inverse", "matrix inverse, both formulas");
    inverse->add_option("matrix", in1)->required();

    auto* recover = app.add_subcommand("recover", "tensor factor recovery");
    recover->add_option("matrix", in1)->required();
    recover->add_option("--n", dim_n, "left factor dimension")->required();
    recover->add_option("--m", dim_m, "right factor dimension")->required();

    auto* choi = app.add_subcommand("choi", "Choi matrix of a map or Kraus set");
    choi->add_option("map", in1)->required();
    auto* cp = app.add_subcommand("cp-test", "complete positivity test");
    cp->add_option("map", in1)->required();
    auto* kraus = app.add_subcommand("kraus", "Kraus decomposition of a CP map");
    kraus->add_option("map", in1)->required();
    auto* tp = app.add_subcommand("tp-test", "trace preservation test");
    tp->add_option("map", in1)->required();

    auto* apply = app.add_subcommand("apply-channel", "apply a map (blockwise if larger)");
    apply->add_option("map", in1)->required();
    apply->add_option("matrix", in2)->required();

    auto* tmaps = app.add_subcommand("tensor-maps", "tensor product of two maps");
    tmaps->add_option("a", in1)->required();
    tmaps->add_option("b", in2)->required();

    auto* dsp = app.add_subcommand("dsp-apply", "factored product Y = (A (x) B) X with counts");
    dsp->add_option("a", in1, "s x s factor")->required();
    dsp->add_option("b", in2, "r x r factor")->required();
    dsp->add_option("x", in3, "input vector (column matrix JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (split->parsed()) return run_split(opt, in1, false);
        if (join->parsed()) return run_split(opt, in1, true);
        if (tensor->parsed()) return run_tensor(opt, in1, in2);
        if (positivity->parsed()) return run_positivity(opt, in1);
        if (state->parsed()) return run_state(opt, in1);
        if (chol->parsed()) return run_cholesky(opt, in1, lower);
        if (rank1->parsed()) return run_rank1(opt, in1);
        if (eig->parsed()) return run_eig(opt, in1);
        if (inverse->parsed()) return run_inverse(opt, in1);
        if (recover->parsed()) return run_recover(opt, in1, dim_n, dim_m);
        if (choi->parsed()) return run_choi(opt, in1);
        if (cp->parsed()) return run_cp_test(opt, in1);
        if (kraus->parsed()) return run_kraus(opt, in1);
        if (tp->parsed()) return run_tp_test(opt, in1);
        if (apply->parsed()) return run_apply_channel(opt, in1, in2);
        if (tmaps->parsed()) return run_tensor_maps(opt, in1, in2);
        if (dsp->parsed()) return run_dsp_apply(opt, in1, in2, in3);
    } catch (const bcx::DomainError& e) {
        emit(opt, json{{"error", e.kind()}, {"detail", e.what()}});
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const bcx::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2; // no subcommand matched (unreachable with require_subcommand)
}
