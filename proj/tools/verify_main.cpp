#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sq/search.hpp"
#include "sq/verify.hpp"

using namespace sq;

namespace {

struct Options {
    std::string quandle;
    std::string map;
    std::string which;
    int n = 2;
    int samples = 0; // 0 = per-command default
    std::uint64_t seed = 1;
    bool exact = false;
    std::string report_path;
    double tolerance = 1e-9;
};

CheckConfig make_cfg(const Options& o, int default_samples) {
    CheckConfig cfg;
    cfg.mode = o.exact ? Mode::Exact : Mode::Float;
    cfg.eps = o.tolerance;
    cfg.samples = o.samples > 0 ? o.samples : default_samples;
    cfg.seed = o.seed;
    return cfg;
}

template <class T>
std::vector<VerificationReport> run_axioms(const Options& o) {
    CheckConfig cfg = make_cfg(o, 10000);
    if (o.quandle == "sphere") return {check_axioms(sphere_quandle<T>(o.n), cfg)};
    if (o.quandle == "projective")
        return {check_axioms(projective_quandle<T>(o.n, cfg.eps), cfg)};
    if (o.quandle == "core-zk")
        return {check_axioms_finite(core_table(cyclic_group(o.n)))};
    if (o.quandle == "conj-o2") return {check_axioms(conj_quandle(o2_group<T>()), cfg)};
    if (o.quandle == "twisted-so2") {
        auto so2 = so2_group<T>();
        return {check_axioms(twisted_conj_quandle(so2, inversion_automorphism(so2)), cfg)};
    }
    throw CLI::ValidationError("--quandle", "unknown quandle: " + o.quandle);
}

template <class T>
std::vector<VerificationReport> run_embedding(const Options& o) {
    CheckConfig cfg = make_cfg(o, 1000);
    if (o.map == "iota1") {
        auto f = iota1_embedding<T>();
        return {check_hom(f, cfg), check_injective(f, cfg)};
    }
    if (o.map == "inn") {
        // inn is an embedding of P^n, not of S^n: the expected behaviour on
        // the sphere is the antipodal collision, which is what gets checked.
        auto f = inn_embedding<T>(o.n);
        return {check_hom(f, cfg), check_inn_collision<T>(o.n, cfg)};
    }
    if (o.map == "i-n") {
        auto f = i_n_embedding<T>(o.n, cfg.eps);
        return {check_hom(f, cfg), check_injective(f, cfg)};
    }
    if (o.map == "iota-n") {
        auto f = iota_n_embedding<T>(o.n);
        return {check_hom(f, cfg), check_injective(f, cfg)};
    }
    if (o.map == "fB") {
        auto f = fB_embedding(su2_group<T>());
        return {check_hom(f, cfg), check_injective(f, cfg)};
    }
    if (o.map == "fA") {
        auto so2 = so2_group<T>();
        auto f = fA_embedding(so2, inversion_automorphism(so2));
        return {check_hom(f, cfg), check_injective(f, cfg)};
    }
    if (o.map == "I1") {
        auto f = I1_embedding<T>();
        return {check_hom(f, cfg), check_injective(f, cfg)};
    }
    if (o.map == "I2") {
        auto f = I2_embedding<T>();
        return {check_hom(f, cfg), check_injective(f, cfg)};
    }
    if (o.map == "iota3") {
        auto f = iota3_embedding<T>();
        return {check_hom(f, cfg), check_injective(f, cfg)};
    }
    throw CLI::ValidationError("--map", "unknown map: " + o.map);
}

std::vector<VerificationReport> run_diagram(const Options& o) {
    CheckConfig cfg = make_cfg(o, 1000);
    if (o.which == "6.3") return {check_diagram_63<double>(cfg)};
    if (o.which == "7.2") return {check_diagram_72<double>(cfg)};
    if (o.which == "covering-square")
        return {check_covering_square<double>(o.n, cfg)};
    if (o.which == "lifted-action") return {check_lifted_action<double>(o.n, cfg)};
    throw CLI::ValidationError("--which", "unknown diagram: " + o.which);
}

int finish(const Options& o, const std::vector<VerificationReport>& reports) {
    print_report_table(std::cout, reports);
    if (!o.report_path.empty()) write_reports(o.report_path, reports);
    return all_pass(reports) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"machine verification of quandle embeddings and coverings"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--report", o.report_path, "write the structured JSON report here");
    app.add_option("--tolerance", o.tolerance, "float-mode tolerance (default 1e-9)");

    auto* ax = app.add_subcommand("axioms", "check quandle axioms Q1-Q3");
    ax->add_option("--quandle", o.quandle,
                   "sphere|projective|core-zk|conj-o2|twisted-so2")
        ->required();
    ax->add_option("--n", o.n, "dimension (or k for core-zk)");
    ax->add_option("--samples", o.samples, "sample count (default 10000)");
    ax->add_option("--seed", o.seed, "RNG seed");
    ax->add_flag("--exact", o.exact, "exact rational mode");

    auto* em = app.add_subcommand("embedding", "check a map is a quandle embedding");
    em->add_option("--map", o.map, "iota1|inn|i-n|iota-n|fB|fA|I1|I2|iota3")->required();
    em->add_option("--n", o.n, "sphere dimension where applicable");
    em->add_option("--samples", o.samples, "sample count (default 1000)");
    em->add_option("--seed", o.seed, "RNG seed");
    em->add_flag("--exact", o.exact, "exact rational mode");

    auto* di = app.add_subcommand("diagram", "check a commuting diagram");
    di->add_option("--which", o.which, "6.3|7.2|covering-square|lifted-action")
        ->required();
    di->add_option("--n", o.n, "dimension for the n-indexed diagrams");
    di->add_option("--samples", o.samples, "sample count (default 1000)");
    di->add_option("--seed", o.seed, "RNG seed");

    auto* ke = app.add_subcommand("kernel-p4", "check Ker p4 = {(I,I), (-I,-I)}");
    ke->add_option("--samples", o.samples, "sample count (default 10000)");
    ke->add_option("--seed", o.seed, "RNG seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ax->parsed())
            return finish(o, o.exact ? run_axioms<Rat>(o) : run_axioms<double>(o));
        if (em->parsed())
            return finish(o, o.exact ? run_embedding<Rat>(o) : run_embedding<double>(o));
        if (di->parsed()) return finish(o, run_diagram(o));
        if (ke->parsed()) {
            CheckConfig cfg = make_cfg(o, 10000);
            return finish(o, {check_kernel_p4<double>(cfg)});
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
