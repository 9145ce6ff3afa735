// twupoly: partial-twuality polynomials of matrices, grafts and
// bouquets.
//
//   twupoly compute   --format graft --ops taudeltatau w5.graft
//   twupoly transform --pivot 1,2 w5.mat
//   twupoly check     --suite all --seed 24301
//   twupoly kn        --n 6 --ops taudeltatau
//
// Results go to stdout, diagnostics to stderr.  Exit codes: 0 ok,
// 1 check failure, 2 parse error, 3 size cap, 4 singular input.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "twupoly/cli.hpp"

namespace {

struct RawFlags {
    std::string ops = "all";
    std::string field;
    std::string set;
    std::string pivot;
};

void add_common(CLI::App* cmd, twupoly::RunConfig& cfg, RawFlags& raw) {
    cmd->add_option("--ops", raw.ops, "comma list of operators, or 'all'");
    cmd->add_option("--max-n", cfg.max_n, "size cap for subset enumeration");
    cmd->add_option("--threads", cfg.threads, "worker threads for the subset sweep");
    cmd->add_option("--seed", cfg.seed, "seed for randomized suites");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partial-twuality polynomials of square matrices, grafts and bouquets"};
    app.require_subcommand(1);

    twupoly::RunConfig cfg;
    RawFlags raw;

    CLI::App* compute = app.add_subcommand("compute", "compute polynomials of one input");
    compute->add_option("input", cfg.input_path, "input file ('-' for stdin)")->required();
    compute->add_option("--format", cfg.format, "matrix | graft | bouquet");
    compute->add_option("--out", cfg.out_mode, "text | json");
    compute->add_option("--set", raw.set, "subset of positions: print exponents instead");
    add_common(compute, cfg, raw);

    CLI::App* transform = app.add_subcommand("transform", "pivot or invert a matrix");
    transform->add_option("input", cfg.input_path, "matrix file ('-' for stdin)")->required();
    transform->add_option("--pivot", raw.pivot, "pivot on these positions");
    transform->add_flag("--invert", cfg.invert, "invert the matrix");
    add_common(transform, cfg, raw);

    CLI::App* check = app.add_subcommand("check", "run a verification suite");
    check->add_option("--suite", cfg.suite,
                      "all, degrees, interpolation, product, isolated, leaf, pivot, "
                      "duality, equivalence, interlace, kn");
    check->add_option("--field", raw.field, "restrict random cases: gf2 | gfp:<p> | q");
    add_common(check, cfg, raw);

    CLI::App* kn = app.add_subcommand("kn", "closed form vs. brute force for (K_n, empty)");
    kn->add_option("--n", cfg.kn_n, "number of vertices")->required();
    kn->add_option("--ops", raw.ops, "operators with closed forms")
        ->default_val("taudeltatau,deltatau,taudelta");
    kn->add_option("--max-n", cfg.max_n, "size cap for subset enumeration");
    kn->add_option("--threads", cfg.threads, "worker threads for the subset sweep");

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.ops = twupoly::parse_ops(raw.ops);
        if (!raw.field.empty()) cfg.field = twupoly::parse_field_tag(raw.field);
        if (!raw.set.empty()) cfg.subset = raw.set;
        if (!raw.pivot.empty()) cfg.pivot_set = raw.pivot;
    } catch (const twupoly::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (compute->parsed()) {
        cfg.command = "compute";
        return twupoly::cmd_compute(cfg, std::cout, std::cerr);
    }
    if (transform->parsed()) {
        cfg.command = "transform";
        return twupoly::cmd_transform(cfg, std::cout, std::cerr);
    }
    if (check->parsed()) {
        cfg.command = "check";
        return twupoly::cmd_check(cfg, std::cout, std::cerr);
    }
    cfg.command = "kn";
    return twupoly::cmd_kn(cfg, std::cout, std::cerr);
}
