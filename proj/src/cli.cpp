#include "twupoly/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "twupoly/io.hpp"
#include "twupoly/suites.hpp"

namespace twupoly {

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return 2;
    if (dynamic_cast<const SizeCapError*>(&e)) return 3;
    if (dynamic_cast<const SingularMatrixError*>(&e)) return 4;
    if (dynamic_cast<const SingularPrincipalMinorError*>(&e)) return 4;
    return 1;
}

std::vector<Twuality> parse_ops(const std::string& list) {
    if (list == "all") return {kAllTwualities.begin(), kAllTwualities.end()};
    std::vector<Twuality> out;
    std::size_t i = 0;
    while (i <= list.size()) {
        std::size_t comma = list.find(',', i);
        if (comma == std::string::npos) comma = list.size();
        std::string name = list.substr(i, comma - i);
        auto op = twuality_from_name(name);
        if (!op) throw ContractError("unknown operator '" + name + "'");
        out.push_back(*op);
        i = comma + 1;
    }
    if (out.empty()) throw ContractError("operator list is empty");
    return out;
}

Field parse_field_tag(const std::string& tag) {
    if (tag == "gf2") return Field::gf2();
    if (tag == "q") return Field::rationals();
    if (tag.rfind("gfp:", 0) == 0) {
        long long p = 0;
        try {
            std::size_t pos = 0;
            p = std::stoll(tag.substr(4), &pos, 10);
            if (pos != tag.size() - 4) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ContractError("bad field tag '" + tag + "'");
        }
        if (p < 2 || p >= (1LL << 31)) throw ContractError("gfp modulus out of range");
        return Field::gfp(static_cast<std::uint32_t>(p));
    }
    throw ContractError("unknown field tag '" + tag + "' (use gf2, gfp:<p>, q)");
}

namespace {

struct LoadedInput {
    std::optional<SquareMatrix> matrix;
    std::optional<Graft> graft;
    std::optional<Bouquet> bouquet;
    std::string field_tag;
    int n = 0;
};

LoadedInput load_input(const RunConfig& cfg) {
    LoadedInput in;
    auto read = [&](auto reader) {
        if (cfg.input_path == "-" || cfg.input_path.empty()) return reader(std::cin);
        std::ifstream f(cfg.input_path);
        if (!f) throw ParseError("cannot open '" + cfg.input_path + "'", 0, 0);
        return reader(f);
    };
    if (cfg.format == "matrix") {
        in.matrix = read(read_matrix);
        in.field_tag = in.matrix->field().tag();
        in.n = in.matrix->size();
    } else if (cfg.format == "graft") {
        in.graft = read(read_graft);
        in.field_tag = "gf2";
        in.n = in.graft->vertex_count();
    } else if (cfg.format == "bouquet") {
        in.bouquet = read(read_bouquet);
        in.field_tag = "gf2";
        in.n = in.bouquet->edge_count();
    } else {
        throw ContractError("unknown format '" + cfg.format + "'");
    }
    return in;
}

}  // namespace

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        LoadedInput in = load_input(cfg);
        SweepOptions opts{cfg.max_n, cfg.threads};

        if (cfg.subset) {
            // Print the exponent r_<op>(M, A) for one subset instead of
            // the full polynomial.
            if (!in.matrix && in.graft) in.matrix = in.graft->adjacency_matrix();
            if (!in.matrix) {
                throw ContractError("--set needs matrix or graft input");
            }
            std::uint64_t mask = parse_position_set(*cfg.subset, in.matrix->size());
            IndexSubset a = IndexSubset::of_mask(*in.matrix, mask);
            for (Twuality op : cfg.ops) {
                out << exponent(op, *in.matrix, a) << "\n";
            }
            return 0;
        }

        for (Twuality op : cfg.ops) {
            IntPolynomial p;
            if (in.matrix) {
                p = polynomial(op, *in.matrix, opts);
            } else if (in.graft) {
                p = graft_polynomial(op, *in.graft, opts);
            } else {
                p = in.bouquet->topological_polynomial(op, opts);
            }
            if (cfg.out_mode == "json") {
                out << polynomial_json(p, op, in.field_tag, in.n) << "\n";
            } else {
                out << p.to_text() << "\n";
            }
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

int cmd_transform(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.format != "matrix") throw ContractError("transform needs matrix input");
        LoadedInput in = load_input(cfg);
        if (cfg.invert == cfg.pivot_set.has_value()) {
            throw ContractError("transform needs exactly one of --pivot SET or --invert");
        }
        SquareMatrix result = *in.matrix;
        if (cfg.invert) {
            result = in.matrix->inverse();
        } else {
            std::uint64_t mask = parse_position_set(*cfg.pivot_set, in.matrix->size());
            result = in.matrix->pivot(IndexSubset::of_mask(*in.matrix, mask));
        }
        write_matrix(out, result);
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        auto reports = suites::run_suites(cfg.suite, cfg.seed, cfg.threads, cfg.field);
        bool all_ok = true;
        for (const auto& report : reports) {
            for (const auto& prop : report.properties) {
                out << "[" << report.suite << "] " << prop.name << ": "
                    << (prop.passed ? "PASS" : "FAIL") << " (" << prop.cases << " cases)\n";
                if (!prop.passed) {
                    all_ok = false;
                    out << "--- counterexample ---\n" << prop.detail;
                    if (!prop.detail.empty() && prop.detail.back() != '\n') out << "\n";
                    out << "----------------------\n";
                }
            }
        }
        out << (all_ok ? "all properties passed\n" : "some properties FAILED\n");
        return all_ok ? 0 : 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

int cmd_kn(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        SweepOptions opts{cfg.max_n, cfg.threads};
        SquareMatrix adj = kn_graft(cfg.kn_n).adjacency_matrix();
        bool all_match = true;
        for (Twuality op : cfg.ops) {
            IntPolynomial closed = kn_closed_form(op, cfg.kn_n);  // may throw Unsupported
            IntPolynomial brute = polynomial(op, adj, opts);
            out << twuality_name(op) << " closed form:  " << closed.to_text() << "\n";
            out << twuality_name(op) << " brute force:  " << brute.to_text() << "\n";
            if (brute == closed) {
                out << twuality_name(op) << " agreement:    yes\n";
            } else {
                all_match = false;
                out << twuality_name(op) << " agreement:    NO (brute force governs)\n";
                err << "discrepancy: closed form for K_" << cfg.kn_n << " "
                    << twuality_name(op) << " disagrees with brute force\n";
            }
        }
        return all_match ? 0 : 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

}  // namespace twupoly
