/*
   Copyright 2026 The lscc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lscc/designer.hpp"
#include "lscc/error.hpp"
#include "lscc/io.hpp"
#include "lscc/ldgm.hpp"
#include "lscc/macwilliams.hpp"
#include "lscc/mrd.hpp"
#include "lscc/rng.hpp"

using namespace lscc;

namespace {

std::string g_out;

void emit(const json& j) {
    if (g_out.empty()) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream f(g_out);
    if (!f) throw Error(ErrorKind::IoError, "cannot write " + g_out);
    f << j.dump(2) << '\n';
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw Error(ErrorKind::IoError, "cannot write " + path);
    f << text;
}

json matrix_json(const FieldMatrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) r.push_back(a(i, j));
        rows.push_back(std::move(r));
    }
    return json{{"q", a.field().q()}, {"n", a.rows()}, {"m", a.cols()}, {"rows", rows}};
}

// "0,1|2,3" -> blocks {0,1},{2,3}; empty means the trivial partition.
Partition parse_partition(const std::string& text, std::size_t n) {
    if (text.empty()) return Partition::trivial(n);
    std::vector<std::vector<std::size_t>> blocks;
    std::stringstream ss(text);
    std::string block;
    while (std::getline(ss, block, '|')) {
        std::vector<std::size_t> b;
        std::stringstream bs(block);
        std::string item;
        while (std::getline(bs, item, ',')) b.push_back(std::stoul(item));
        blocks.push_back(std::move(b));
    }
    return Partition(n, std::move(blocks));
}

std::vector<std::uint32_t> parse_counts(const std::string& text) {
    std::vector<std::uint32_t> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    return c;
}

Spectrum spectrum_of_genfun(const RationalPoly& g, std::uint32_t q, std::uint32_t n) {
    const RationalPoly full = g.with_vars(RationalPoly::union_vars(g.vars(), block_vars("u", 0, q)));
    Spectrum s;
    s.q = q;
    s.n = n;
    for (const auto& [e, c] : full.sorted_terms()) s.entries[TypeVector{e}] = c;
    return s;
}

// Type with the given share of zeros on length len, remaining mass spread evenly.
TypeVector balanced_type(std::uint32_t q, std::uint32_t len, double zero_share) {
    std::vector<std::uint32_t> c(q, 0);
    c[0] = static_cast<std::uint32_t>(std::lround(zero_share * len));
    if (c[0] > len) c[0] = len;
    const std::uint32_t rest = len - c[0];
    for (std::uint32_t a = 1; a < q; ++a) c[a] = rest / (q - 1) + (a <= rest % (q - 1) ? 1 : 0);
    return TypeVector{c};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lscc: spectra, MacWilliams transforms, MRD and LDGM code tools"};
    app.require_subcommand(1);
    app.add_option("--out", g_out, "write JSON here instead of stdout");

    // dual
    std::string dual_matrix;
    auto* dual = app.add_subcommand("dual", "dual of the row space of a matrix, with its spectrum by MacWilliams");
    dual->add_option("matrix", dual_matrix, "matrix text file")->required();
    dual->callback([&] {
        const FieldMatrix a = read_matrix_file(dual_matrix);
        const Subspace s = Subspace::span(a);
        const Subspace d = s.orthogonal();
        const RationalPoly g = mw_transform(s, Partition::trivial(a.cols()));
        emit(json{{"basis", matrix_json(d.basis())},
                  {"dimension", d.dim()},
                  {"genfun", to_json(g)},
                  {"spectrum", to_json(spectrum_of_genfun(g, a.field().q(), static_cast<std::uint32_t>(a.cols())))}});
    });

    // macwilliams
    std::string mw_matrix, mw_partition, mw_out_partition;
    bool mw_joint = false;
    auto* mw = app.add_subcommand("macwilliams", "MacWilliams transform of a row space or of a matrix's joint genfun");
    mw->add_option("matrix", mw_matrix, "matrix text file")->required();
    mw->add_option("--partition", mw_partition, "coordinate partition, e.g. 0,1|2,3");
    mw->add_option("--output-partition", mw_out_partition, "output partition with --joint");
    mw->add_flag("--joint", mw_joint, "transform the joint genfun of x -> xA (result describes y -> -yA^T)");
    mw->callback([&] {
        const FieldMatrix a = read_matrix_file(mw_matrix);
        if (mw_joint) {
            const Partition u = parse_partition(mw_partition, a.rows());
            const Partition v = parse_partition(mw_out_partition, a.cols());
            emit(json{{"genfun", to_json(mw_joint_transpose(a, u, v))}});
        } else {
            const Partition u = parse_partition(mw_partition, a.cols());
            emit(json{{"genfun", to_json(mw_transform(Subspace::span(a), u))}});
        }
    });

    // spectrum
    std::string sp_matrix, sp_kind = "joint";
    auto* sp = app.add_subcommand("spectrum", "spectra of the code x -> xA");
    sp->add_option("matrix", sp_matrix, "matrix text file")->required();
    sp->add_option("--kind", sp_kind, "joint, kernel or image")->check(CLI::IsMember({"joint", "kernel", "image"}));
    sp->callback([&] {
        const LinearCode code(read_matrix_file(sp_matrix));
        if (sp_kind == "joint")
            emit(to_json(code_joint_spectrum(code)));
        else if (sp_kind == "kernel")
            emit(to_json(kernel_spectrum(code)));
        else
            emit(to_json(image_spectrum(code)));
    });

    // gabidulin
    std::uint32_t gq = 2, gn = 2, gm = 2, gk = 1, g_count = 1;
    std::optional<std::uint64_t> g_seed;
    std::string g_emit, g_verify;
    auto* gab = app.add_subcommand("gabidulin", "Gabidulin rank-metric codes");
    gab->add_option("--q", gq, "base field order")->required();
    gab->add_option("--n", gn, "rows")->required();
    gab->add_option("--m", gm, "columns")->required();
    gab->add_option("--k", gk, "dimension")->required();
    gab->add_option("--seed", g_seed, "emit sampled codewords instead of the whole code");
    gab->add_option("--count", g_count, "number of sampled codewords with --seed");
    gab->add_option("--emit", g_emit, "write codewords in the matrix text format, one block each");
    gab->add_option("--verify", g_verify, "mrd, scc or kernel")->check(CLI::IsMember({"mrd", "scc", "kernel"}));
    gab->callback([&] {
        const GabidulinSpec spec = GabidulinSpec::make(Field::of_order(gq), gn, gm, gk);
        json j{{"q", gq}, {"n", gn}, {"m", gm}, {"k", gk}, {"size", to_string(spec.code_size())}};
        if (!g_emit.empty()) {
            std::ostringstream text;
            if (g_seed) {
                Rng rng(*g_seed);
                for (std::uint32_t i = 0; i < g_count; ++i) write_matrix(text, sample_code(spec, rng).entries);
            } else {
                for (const auto& c : enumerate_code(spec)) write_matrix(text, c.entries);
            }
            write_text(g_emit, text.str());
            j["emitted"] = g_emit;
        }
        if (g_verify == "mrd") j["mrd"] = to_json(verify_mrd(spec));
        if (g_verify == "scc") j["scc"] = to_json(verify_scc(spec));
        if (g_verify == "kernel") j["kernel"] = to_json(kernel_stats(uniform_support(enumerate_code(spec))));
        emit(j);
    });

    // ldgm-bound
    std::uint32_t lq = 2, lc = 1, ld = 2, ln = 1;
    double lp0 = 0.5, lq0 = 0.5;
    std::string l_ptype, l_qtype;
    auto* lb = app.add_subcommand("ldgm-bound", "evaluate the LDGM alpha bound against the exact value");
    lb->add_option("--q", lq, "field order")->required();
    lb->add_option("--c", lc, "input degree")->required();
    lb->add_option("--d", ld, "check degree")->required();
    lb->add_option("--n", ln, "block parameter")->required();
    lb->add_option("--p0", lp0, "input zero share P(0)");
    lb->add_option("--q0", lq0, "output zero share Q(0)");
    lb->add_option("--ptype", l_ptype, "explicit input type counts, overrides --p0");
    lb->add_option("--qtype", l_qtype, "explicit output type counts, overrides --q0");
    lb->callback([&] {
        const LdgmParams params = LdgmParams::make(Field::of_order(lq), lc, ld, ln);
        const TypeVector p = l_ptype.empty() ? balanced_type(lq, params.input_length(), lp0) : TypeVector{parse_counts(l_ptype)};
        const TypeVector q = l_qtype.empty() ? balanced_type(lq, params.output_length(), lq0) : TypeVector{parse_counts(l_qtype)};
        if (p.n() != params.input_length() || q.n() != params.output_length() || p.q() != lq || q.q() != lq)
            throw Error(ErrorKind::DimensionMismatch, "types must have q entries summing to d'n and c'n");
        const double x = to_double(p.prob(0)), y = to_double(q.prob(0));
        const double bound = ldgm_alpha_bound(params, p, q);
        const Rational a = ldgm_alpha(params, p, q);
        json j{{"q", lq}, {"c", lc}, {"d", ld}, {"n", ln}, {"c_prime", params.c_prime}, {"d_prime", params.d_prime},
               {"p", p.counts}, {"q_type", q.counts}, {"p0", x}, {"q0", y},
               {"delta_qd", delta_qd(lq, ld, x, y)}, {"Delta", Delta(stretch(p, lc))}, {"bound", bound},
               {"alpha", rational_fields(a)}};
        if (sgn(a) > 0) {
            const double lhs = log_rational(a) / params.input_length();
            j["normalized_log_alpha"] = lhs;
            j["holds"] = lhs <= bound + 1e-9;
        } else {
            j["normalized_log_alpha"] = nullptr;
            j["holds"] = true;
        }
        emit(j);
    });

    // ldgm-sample
    std::uint32_t sq = 2, sc = 1, sd = 2, sn = 1;
    std::uint64_t s_seed = 1;
    std::string s_matrix, s_sidecar;
    auto* ls = app.add_subcommand("ldgm-sample", "sample an LDGM generator");
    ls->add_option("--q", sq, "field order")->required();
    ls->add_option("--c", sc, "input degree")->required();
    ls->add_option("--d", sd, "check degree")->required();
    ls->add_option("--n", sn, "block parameter")->required();
    ls->add_option("--seed", s_seed, "sampler seed");
    ls->add_option("--matrix", s_matrix, "write the generator in the matrix text format");
    ls->add_option("--sidecar", s_sidecar, "write the edge structure JSON");
    ls->callback([&] {
        const LdgmSample s = ldgm_sample(LdgmParams::make(Field::of_order(sq), sc, sd, sn), s_seed);
        const json edges = to_json(s);
        if (!s_matrix.empty()) write_text(s_matrix, matrix_to_text(s.generator()));
        if (!s_sidecar.empty()) write_text(s_sidecar, edges.dump(2) + "\n");
        emit(json{{"generator", matrix_json(s.generator())}, {"structure", edges}});
    });

    // design
    std::uint32_t dq = 2;
    std::string d_rate = "1/5", d_p0min = "0.05", d_p0max = "0.95", d_inner, d_overall;
    double d_delta = 0.05;
    auto* des = app.add_subcommand("design", "choose LDGM inner parameters for a serial concatenation");
    des->add_option("--q", dq, "field order")->required();
    des->add_option("--outer-rate", d_rate, "R(f) = n/m of the outer code, as a fraction or decimal")->required();
    des->add_option("--p0-min", d_p0min, "smallest P(0) over nonzero outer codewords")->required();
    des->add_option("--p0-max", d_p0max, "largest P(0) over nonzero outer codewords")->required();
    des->add_option("--delta", d_delta, "target bound")->required();
    auto* inner_opt = des->add_option("--inner-rate", d_inner, "LDGM rate r0 = d/c (default 5/2)");
    des->add_option("--overall-rate", d_overall, "overall rate R(f) r0")->excludes(inner_opt);
    des->callback([&] {
        DesignInput in;
        in.q = dq;
        in.outer_rate = parse_rational(d_rate);
        in.p0_min = parse_rational(d_p0min);
        in.p0_max = parse_rational(d_p0max);
        in.delta = d_delta;
        if (!d_overall.empty()) {
            in.inner_rate = parse_rational(d_overall) / in.outer_rate;
            in.inner_rate.canonicalize();
        } else {
            in.inner_rate = parse_rational(d_inner.empty() ? "5/2" : d_inner);
        }
        emit(to_json(design_concat(in)));
    });

    // compose
    std::vector<std::string> c_matrices, c_perms;
    std::optional<std::uint64_t> c_seed;
    auto* comp = app.add_subcommand("compose", "serially concatenate codes with interleavers");
    comp->add_option("matrices", c_matrices, "stage matrices in order")->required()->expected(2, -1);
    comp->add_option("--perm", c_perms, "permutation file for each junction");
    comp->add_option("--seed", c_seed, "sample the missing interleavers");
    comp->callback([&] {
        std::vector<FieldMatrix> stages;
        for (const auto& path : c_matrices) stages.push_back(read_matrix_file(path));
        if (c_perms.size() > stages.size() - 1) throw Error(ErrorKind::DimensionMismatch, "too many permutation files");
        if (c_perms.size() < stages.size() - 1 && !c_seed)
            throw Error(ErrorKind::DimensionMismatch, "need a permutation per junction or --seed");
        Rng rng(c_seed.value_or(0));
        LinearCode acc(stages[0]);
        json used = json::array();
        for (std::size_t i = 1; i < stages.size(); ++i) {
            const auto perm = i - 1 < c_perms.size() ? read_permutation_file(c_perms[i - 1]) : rng.permutation(acc.m());
            used.push_back(perm);
            acc = compose(acc, perm, LinearCode(stages[i]));
        }
        const Rates r = rates(acc);
        emit(json{{"generator", matrix_json(acc.generator())},
                  {"interleavers", used},
                  {"rank", r.rank},
                  {"rate", rational_fields(r.ratio)}});
    });

    // verify-equivalence
    std::string v_mode = "g1", v_matrix;
    std::uint32_t vq = 2, vn = 2, vm = 2;
    std::uint64_t v_samples = 100000, v_seed = 1;
    bool v_exact = false;
    auto* ve = app.add_subcommand("verify-equivalence", "probability that a random square matrix preserves kernel or image");
    ve->add_option("--mode", v_mode, "g1 (kernel) or g2 (image)")->check(CLI::IsMember({"g1", "g2"}));
    ve->add_option("--matrix", v_matrix, "fixed code F; otherwise F is uniform over all q n m matrices");
    ve->add_option("--q", vq, "field order without --matrix");
    ve->add_option("--n", vn, "input length without --matrix");
    ve->add_option("--m", vm, "output length without --matrix");
    ve->add_option("--samples", v_samples, "Monte Carlo samples");
    ve->add_option("--seed", v_seed, "sampler seed");
    ve->add_flag("--exact", v_exact, "enumerate every square matrix instead of sampling");
    ve->callback([&] {
        const CodeEnsemble f = v_matrix.empty()
                                   ? CodeEnsemble::uniform_all_matrices(Field::of_order(vq), vn, vm)
                                   : CodeEnsemble::single(LinearCode(read_matrix_file(v_matrix)));
        const auto mode = v_mode == "g1" ? EquivalenceMode::G1 : EquivalenceMode::G2;
        emit(to_json(verify_equivalence(f, mode, v_exact, v_samples, v_seed)));
    });

    // lower-bound
    std::uint32_t lb_alpha = 2, lb_m = 1;
    std::string lb_matrix;
    auto* low = app.add_subcommand("lower-bound", "single-code lower bound on max alpha");
    low->add_option("--alphabet-size", lb_alpha, "|Y|")->required();
    low->add_option("--m", lb_m, "output length")->required();
    low->add_option("--matrix", lb_matrix, "check the bound on this code");
    low->callback([&] {
        json j{{"alphabet_size", lb_alpha}, {"m", lb_m}, {"bound", rational_fields(single_code_lower_bound(lb_alpha, lb_m))}};
        if (!lb_matrix.empty()) j["check"] = to_json(check_lower_bound(LinearCode(read_matrix_file(lb_matrix))));
        emit(j);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
