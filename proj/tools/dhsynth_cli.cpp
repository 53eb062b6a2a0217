#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dhsynth/baseline.hpp"
#include "dhsynth/enumerate.hpp"
#include "dhsynth/lowering.hpp"
#include "dhsynth/sim.hpp"
#include "dhsynth/synth.hpp"

namespace {

struct GateSpecFlags {
    int n = 0;
    std::int64_t id = -1;
    std::string diag, binary;
};

void add_gate_spec(CLI::App* cmd, GateSpecFlags& f) {
    cmd->add_option("--n", f.n, "qubit count (required with --id)");
    cmd->add_option("--id", f.id, "decimal matrix id");
    cmd->add_option("--diag", f.diag, "comma-separated signs, e.g. +,+,-,+");
    cmd->add_option("--binary", f.binary,
                    "binary representation, leftmost bit = position 1");
}

dhs::DiagonalHermitian parse_gate_spec(const GateSpecFlags& f) {
    int specs = (f.id >= 0) + !f.diag.empty() + !f.binary.empty();
    if (specs != 1)
        throw std::invalid_argument(
            "exactly one of --id, --diag, --binary is required");
    if (f.id >= 0) {
        if (f.n < 1) throw std::invalid_argument("--id requires --n");
        return dhs::from_id(static_cast<std::uint64_t>(f.id), f.n);
    }
    if (!f.diag.empty()) {
        std::vector<int> signs;
        std::stringstream ss(f.diag);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok == "+" || tok == "+1" || tok == "1")
                signs.push_back(1);
            else if (tok == "-" || tok == "-1")
                signs.push_back(-1);
            else
                throw std::invalid_argument("bad sign token '" + tok + "'");
        }
        int n = 0;
        while ((std::size_t{1} << n) < signs.size()) ++n;
        if ((std::size_t{1} << n) != signs.size())
            throw std::invalid_argument("sign count must be a power of two");
        return dhs::normalize(dhs::DiagonalHermitian{n, signs, false});
    }
    int n = 0;
    while ((std::size_t{1} << n) - 1 < f.binary.size()) ++n;
    if ((std::size_t{1} << n) - 1 != f.binary.size())
        throw std::invalid_argument("binary length must be 2^n - 1");
    return dhs::diagmat_of(dhs::BitVec::from_string(f.binary), n);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output path " + path);
    out << content;
}

std::string join_basis(const std::vector<unsigned>& basis) {
    if (basis.empty()) return "(none)";
    std::string s;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (i) s += '+';
        s += std::to_string(basis[i]);
    }
    return s;
}

// Max entrywise deviation after fixing the global-phase anchor.
double max_deviation(const dhs::UnitaryMatrix& U, const dhs::UnitaryMatrix& V) {
    Eigen::MatrixXcd A = U.dense(), B = V.dense();
    if (A.rows() != B.rows()) return 1.0;
    std::complex<double> c(0);
    bool found = false;
    double floor = 0.5 / static_cast<double>(A.rows());
    for (int r = 0; r < B.rows() && !found; ++r)
        for (int col = 0; col < B.cols() && !found; ++col)
            if (std::abs(B(r, col)) > floor) {
                c = A(r, col) / B(r, col);
                found = true;
            }
    if (!found) return (A - B).cwiseAbs().maxCoeff();
    c /= std::abs(c);
    return (A - c * B).cwiseAbs().maxCoeff();
}

int run(int argc, char** argv) {
    CLI::App app{"Diagonal Hermitian gate synthesis toolkit"};
    app.require_subcommand(1);

    // decompose
    auto* dec = app.add_subcommand("decompose",
                                   "synthesize a gate and print the lowered circuit");
    GateSpecFlags dec_spec;
    add_gate_spec(dec, dec_spec);
    std::string backend = "subset", format = "text", dec_out = "-";
    dec->add_option("--backend", backend, "solver backend")
        ->check(CLI::IsMember({"gaussian", "subset"}));
    dec->add_option("--format", format, "circuit output format")
        ->check(CLI::IsMember({"text", "qasm"}));
    dec->add_option("--out", dec_out, "circuit output path ('-' = stdout)");

    // verify
    auto* ver = app.add_subcommand("verify",
                                   "check a circuit file against a gate spec");
    std::string ver_file;
    ver->add_option("circuit", ver_file, "circuit text file")->required();
    GateSpecFlags ver_spec;
    add_gate_spec(ver, ver_spec);
    double tol = 1e-10;
    ver->add_option("--tol", tol, "comparison tolerance");

    // compare
    auto* cmp = app.add_subcommand("compare",
                                   "proposed vs baseline costs for one gate");
    GateSpecFlags cmp_spec;
    add_gate_spec(cmp, cmp_spec);

    // enumerate
    auto* enu = app.add_subcommand("enumerate", "sweep all gates for a width");
    int enu_n = 0, sample = 0;
    std::uint64_t seed = 12345;
    std::string enu_out = "-";
    enu->add_option("--n", enu_n, "qubit count")->required();
    enu->add_option("--out", enu_out, "CSV output path ('-' = stdout)");
    enu->add_option("--sample", sample, "sample size for n >= 5");
    enu->add_option("--seed", seed, "sample RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (dec->parsed()) {
            dhs::DiagonalHermitian d = parse_gate_spec(dec_spec);
            dhs::Backend be = backend == "gaussian" ? dhs::Backend::Gaussian
                                                    : dhs::Backend::Subset;
            dhs::CzSelection sel = dhs::decompose(d, be);
            auto [circ, cost] = dhs::lower_selection(sel);
            std::cout << "basis: " << join_basis(sel.selected) << "\n";
            write_output(dec_out, format == "qasm" ? dhs::emit_qasm(circ)
                                                   : dhs::emit_text(circ));
            std::cout << "cost: cz=" << cost.cz << " rotations=" << cost.rotations
                      << " min_rotations=" << cost.min_rotations << "\n";
            return 0;
        }
        if (ver->parsed()) {
            std::ifstream in(ver_file);
            if (!in) throw std::invalid_argument("cannot read " + ver_file);
            std::stringstream buf;
            buf << in.rdbuf();
            dhs::Circuit circ = dhs::parse_text(buf.str());
            dhs::DiagonalHermitian d = parse_gate_spec(ver_spec);
            if (circ.width != d.n)
                throw std::invalid_argument("circuit width does not match gate");
            dhs::UnitaryMatrix U = dhs::unitary_of(circ);
            dhs::UnitaryMatrix V = dhs::unitary_of(d);
            double dev = max_deviation(U, V);
            bool ok = dhs::equal_up_to_phase(U, V, tol);
            std::printf("max deviation %.3e (tol %.1e): %s\n", dev, tol,
                        ok ? "OK" : "MISMATCH");
            return ok ? 0 : 1;
        }
        if (cmp->parsed()) {
            dhs::DiagonalHermitian d = parse_gate_spec(cmp_spec);
            dhs::ComparisonRow r =
                dhs::compare_one(d.n, dhs::matrix_id(d));
            std::cout << "n " << r.n << " id " << r.matrix_id << " basis "
                      << join_basis(r.basis) << "\n";
            std::cout << "proposed: cz=" << r.prop_cz << " 1q=" << r.prop_1q
                      << "\n";
            std::cout << "baseline: cz=" << r.base_cz << " 1q=" << r.base_1q
                      << "\n";
            auto imp = [](bool def, double v) {
                if (!def) return std::string("skip");
                char b[32];
                std::snprintf(b, sizeof(b), "%.1f%%", v);
                return std::string(b);
            };
            std::cout << "improvement: cz=" << imp(r.imp_cz_defined, r.imp_cz_pct)
                      << " 1q=" << imp(r.imp_1q_defined, r.imp_1q_pct) << "\n";
            return 0;
        }
        if (enu->parsed()) {
            dhs::SweepResult res =
                sample > 0 ? dhs::sweep_sampled(enu_n, sample, seed)
                           : dhs::sweep(enu_n);
            write_output(enu_out, dhs::to_csv(res.rows));
            const auto& s = res.summary;
            std::printf("rows %d\n", s.rows);
            std::printf("mean improvement (excl. undefined): cz %.1f%%, 1q %.1f%%\n",
                        s.mean_cz, s.mean_1q);
            std::printf("mean incl. zeros: cz %.1f%%, 1q %.1f%%\n",
                        s.mean_cz_incl_zero, s.mean_1q_incl_zero);
            std::printf("ratio of sums: cz %.1f%%, 1q %.1f%%\n", s.ratio_cz,
                        s.ratio_1q);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
