#include "dhsynth/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dhsynth/lowering.hpp"
#include "dhsynth/sim.hpp"

namespace dhs {

ComparisonRow compare_one(const MuxStructure& st, int n, std::uint64_t id) {
    DiagonalHermitian d = from_id(id, n);
    UnitaryMatrix target = unitary_of(d);

    CzSelection sel = decompose(d);
    auto [prop_circ, prop_cost] = lower_selection(sel);
    if (!equal_up_to_phase(unitary_of(prop_circ), target, 1e-10))
        throw std::runtime_error("proposed circuit failed verification, id " +
                                 std::to_string(id));

    Circuit base_circ = baseline_circuit(st, d);
    if (!equal_up_to_phase(unitary_of(base_circ), target, 1e-9))
        throw std::runtime_error("baseline circuit failed verification, id " +
                                 std::to_string(id));
    CostReport base_cost = count_gates(base_circ);

    ComparisonRow row;
    row.n = n;
    row.matrix_id = id;
    row.basis = sel.selected;
    row.prop_cz = prop_cost.cz;
    row.prop_1q = prop_cost.rotations;
    row.base_cz = base_cost.cz;
    row.base_1q = base_cost.rotations;
    if (row.base_cz > 0) {
        row.imp_cz_defined = true;
        row.imp_cz_pct = 100.0 * (row.base_cz - row.prop_cz) / row.base_cz;
    }
    if (row.base_1q > 0) {
        row.imp_1q_defined = true;
        row.imp_1q_pct = 100.0 * (row.base_1q - row.prop_1q) / row.base_1q;
    }
    return row;
}

ComparisonRow compare_one(int n, std::uint64_t id) {
    return compare_one(build_structure(n), n, id);
}

SweepSummary summarize(const std::vector<ComparisonRow>& rows) {
    SweepSummary s;
    s.rows = static_cast<int>(rows.size());
    double sum_cz = 0, sum_1q = 0;
    long tot_pcz = 0, tot_p1q = 0, tot_bcz = 0, tot_b1q = 0;
    int def_cz = 0, def_1q = 0;
    for (const auto& r : rows) {
        if (r.imp_cz_defined) {
            sum_cz += r.imp_cz_pct;
            ++def_cz;
        } else {
            ++s.skipped_cz;
        }
        if (r.imp_1q_defined) {
            sum_1q += r.imp_1q_pct;
            ++def_1q;
        } else {
            ++s.skipped_1q;
        }
        tot_pcz += r.prop_cz;
        tot_p1q += r.prop_1q;
        tot_bcz += r.base_cz;
        tot_b1q += r.base_1q;
    }
    s.mean_cz = def_cz ? sum_cz / def_cz : 0.0;
    s.mean_1q = def_1q ? sum_1q / def_1q : 0.0;
    s.mean_cz_incl_zero = s.rows ? sum_cz / s.rows : 0.0;
    s.mean_1q_incl_zero = s.rows ? sum_1q / s.rows : 0.0;
    s.ratio_cz = tot_bcz ? 100.0 * (1.0 - double(tot_pcz) / double(tot_bcz)) : 0.0;
    s.ratio_1q = tot_b1q ? 100.0 * (1.0 - double(tot_p1q) / double(tot_b1q)) : 0.0;
    return s;
}

SweepResult sweep(int n) {
    if (n < 2 || n > 4)
        throw std::invalid_argument("exhaustive sweep supports n in {2,3,4}");
    MuxStructure st = build_structure(n);
    std::uint64_t count = std::uint64_t{1} << ((1 << n) - 1);
    SweepResult res;
    res.rows.reserve(count);
    for (std::uint64_t id = 0; id < count; ++id)
        res.rows.push_back(compare_one(st, n, id));
    res.summary = summarize(res.rows);
    return res;
}

SweepResult sweep_sampled(int n, int count, std::uint64_t seed) {
    if (n < 2 || n > 6) throw std::invalid_argument("n out of range");
    MuxStructure st = build_structure(n);
    int bits = (1 << n) - 1;
    std::mt19937_64 rng(seed);
    std::uint64_t lim = bits >= 64 ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << bits) - 1;
    std::uniform_int_distribution<std::uint64_t> dist(0, lim);
    std::set<std::uint64_t> ids;
    while (static_cast<int>(ids.size()) < count) ids.insert(dist(rng));
    SweepResult res;
    for (std::uint64_t id : ids) res.rows.push_back(compare_one(st, n, id));
    res.summary = summarize(res.rows);
    return res;
}

static std::string pct(bool defined, double v) {
    if (!defined) return "skip";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", v);
    return buf;
}

std::string to_csv(const std::vector<ComparisonRow>& rows) {
    std::ostringstream out;
    out << "n,matrix_id,basis,prop_cz,prop_1q,base_cz,base_1q,imp_cz_pct,"
           "imp_1q_pct\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.matrix_id << ',';
        for (std::size_t i = 0; i < r.basis.size(); ++i) {
            if (i) out << '+';
            out << r.basis[i];
        }
        out << ',' << r.prop_cz << ',' << r.prop_1q << ',' << r.base_cz << ','
            << r.base_1q << ',' << pct(r.imp_cz_defined, r.imp_cz_pct) << ','
            << pct(r.imp_1q_defined, r.imp_1q_pct) << "\n";
    }
    return out.str();
}

}  // namespace dhs
