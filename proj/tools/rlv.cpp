// rlv: exact rank-level computations at the command line.
//
// Exit codes: 0 success, 1 a checked identity failed, 2 bad input.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ranklevel/duality.hpp"
#include "ranklevel/io.hpp"
#include "ranklevel/parlin.hpp"
#include "ranklevel/quot.hpp"
#include "ranklevel/subsets.hpp"
#include "ranklevel/verlinde.hpp"

using njson = nlohmann::ordered_json;
using namespace ranklevel;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

void warn_large_order(int order) {
    if (order > 24)
        std::cerr << "warning: subset enumeration over Z/" << order
                  << "Z grows as binomial(" << order << ", r); expect long runtimes\n";
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

std::string float_str(const BigFloat& x) {
    std::ostringstream os;
    os.precision(50);
    os << x;
    return os.str();
}

int cmd_verlinde(int r, int l, int g, const std::string& weights_json,
                 const std::string& variant, const std::string& format, bool oracle,
                 bool timing) {
    Timer timer;
    warn_large_order(r + l);
    WeightSystem w = parse_weight_system(weights_json, r, l);
    VerlindeInstance inst(r, l, g, w);
    VerlindeVariant v = variant == "sl"   ? VerlindeVariant::sl
                        : variant == "gl" ? VerlindeVariant::gl
                                          : VerlindeVariant::twisted;
    Int value = verlinde_value(inst, v);

    if (format == "csv") {
        std::cout << r << "," << l << "," << g << "," << w.points() << ",0,0,"
                  << w.total_size() << "," << variant << "," << value.str() << "\n";
    } else {
        njson out;
        out["variant"] = variant;
        out["r"] = r;
        out["l"] = l;
        out["g"] = g;
        out["n"] = w.points();
        out["total_weight"] = w.total_size();
        out["value"] = value.str();
        out["subset_count"] = binomial(r + l, r);
        if (timing) out["elapsed_ms"] = timer.ms();
        if (oracle) {
            BigFloat approx = verlinde_oracle_value(inst, v);
            BigFloat diff = abs(approx - to_bigfloat(Rat(value)));
            out["oracle_value"] = float_str(approx);
            out["oracle_abs_discrepancy"] = float_str(diff);
            if (!(diff < BigFloat("0.5"))) {
                std::cout << out.dump() << "\n";
                std::cerr << "oracle does not round to the exact value\n";
                return 1;
            }
        }
        std::cout << out.dump() << "\n";
    }
    return 0;
}

int cmd_vi(int r, int l, int g, int n, long long d, const std::string& mu_json, bool oracle) {
    warn_large_order(r + l);
    WeightSystem mu = parse_weight_system(mu_json, r, l);
    IntersectionInstance inst(r, l, g, n, d, mu);
    Int value = intersection_number(inst);
    njson out;
    out["r"] = r;
    out["l"] = l;
    out["g"] = g;
    out["n"] = n;
    out["d"] = d;
    out["quot_dimension"] = quot_dimension(r, l, g, n, d);
    out["value"] = value.str();
    out["subset_count"] = binomial(r + l, l);
    if (oracle) {
        BigFloat approx = intersection_oracle(inst);
        BigFloat diff = abs(approx - to_bigfloat(Rat(value)));
        out["oracle_value"] = float_str(approx);
        out["oracle_abs_discrepancy"] = float_str(diff);
        if (!(diff < BigFloat("0.5"))) {
            std::cout << out.dump() << "\n";
            std::cerr << "oracle does not round to the exact value\n";
            return 1;
        }
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_vi_check(int count, std::uint64_t seed, int rmax, int gmax) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> rl(1, rmax);
    int bad = 0;
    for (int t = 0; t < count; ++t) {
        DualityInstance inst = random_admissible(rng, rl(rng), rl(rng), gmax, 3, 4);
        auto [norm, plan] = normalize(inst, NormalizeOptions{1, true});
        auto rep = vi_equals_verlinde(norm.r, norm.l, norm.g, norm.points(), norm.d,
                                      norm.weights);
        std::printf("r=%d l=%d g=%d n=%d d=%lld quot=%s verlinde=%s %s\n", norm.r, norm.l,
                    norm.g, norm.points(), norm.d, rep.quot_side.str().c_str(),
                    rep.verlinde_side.str().c_str(), rep.equal ? "ok" : "MISMATCH");
        if (!rep.equal) ++bad;
    }
    std::printf("%d/%d instances matched\n", count - bad, count);
    return bad ? 1 : 0;
}

int cmd_symmetry(int N, bool exhaustive, int samples, std::uint64_t seed) {
    warn_large_order(N);
    int bad = 0;
    if (exhaustive) {
        long long checked = 0;
        for (int r = 1; r < N; ++r) {
            auto diagrams = all_diagrams(r, N - r);
            for_each_subset(N, r, [&](const std::vector<int>& S) {
                for (const auto& d : diagrams) {
                    ++checked;
                    if (!reciprocity_check(d, S).holds) ++bad;
                }
            });
        }
        std::printf("reciprocity N=%d: %lld identities, %d failures\n", N, checked, bad);
    }
    std::mt19937_64 rng(seed);
    int rl_bad = 0;
    for (int r = 1; r < N; ++r) {
        const int l = N - r;
        std::uniform_int_distribution<int> genus(0, 2), npts(0, 3), part(0, l);
        for (int t = 0; t < samples; ++t) {
            WeightSystem w(r, l);
            while (true) {
                WeightSystem cand(r, l);
                const int n = npts(rng);
                for (int p = 0; p < n; ++p) {
                    std::vector<int> parts(static_cast<size_t>(r));
                    for (int& a : parts) a = part(rng);
                    std::sort(parts.begin(), parts.end(), std::greater<int>());
                    cand.push_back(YoungDiagram(std::move(parts), r, l));
                }
                if (cand.total_size() % (static_cast<long long>(r) * l) == 0) {
                    w = cand;
                    break;
                }
            }
            if (!check_rank_level(VerlindeInstance(r, l, genus(rng), w)).all_equal()) ++rl_bad;
        }
    }
    std::printf("rank-level N=%d: %d random systems per split, %d failures\n", N, samples,
                rl_bad);
    return (bad + rl_bad) ? 1 : 0;
}

int cmd_normalize(int r, int l, int g, long long d, long long dd,
                  const std::string& weights_json, long long min_drn, bool vi_compatible) {
    WeightSystem w = parse_weight_system(weights_json, r, l);
    DualityInstance inst{r, l, g, d, dd, w};
    auto rep = admissible(inst);
    if (!rep.admissible) {
        std::cerr << "inadmissible: |weights| + l*d + r*dd = " << rep.residue
                  << " mod rl, expected 0\n";
        return 2;
    }
    auto [norm, plan] = normalize(inst, NormalizeOptions{min_drn, vi_compatible});
    njson out;
    out["input"] = njson::parse(instance_to_json(inst));
    out["normalized"] = njson::parse(instance_to_json(norm));
    out["plan"] = njson::parse(plan_to_json(plan));
    out["quot_dimension"] = quot_dimension(norm.r, norm.l, norm.g, norm.points(), norm.d);
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_verdict(int r, int l, int g, long long d, long long dd,
                const std::string& weights_json) {
    WeightSystem w = parse_weight_system(weights_json, r, l);
    DualityInstance inst{r, l, g, d, dd, w};
    auto rep = admissible(inst);
    if (!rep.admissible) {
        std::cerr << "inadmissible: |weights| + l*d + r*dd = " << rep.residue
                  << " mod rl, expected 0\n";
        return 2;
    }
    auto verdict = dimension_verdict(inst);
    njson out;
    out["r_side"] = verdict.r_side.str();
    out["l_side"] = verdict.l_side.str();
    out["equal"] = verdict.equal;
    out["normalized"] = njson::parse(instance_to_json(verdict.normalized));
    std::cout << out.dump() << "\n";
    return verdict.equal ? 0 : 1;
}

int cmd_schur_eval(const std::string& diagram, int N, const std::string& subset_text) {
    warn_large_order(N);
    std::vector<int> subset = parse_int_list(subset_text);
    const int r = static_cast<int>(subset.size());
    if (r < 1 || r >= N) {
        std::cerr << "subset size must be between 1 and N-1\n";
        return 2;
    }
    YoungDiagram d = parse_diagram(diagram, r, N - r);
    CycloNum value = schur_eval(d, EvalPoint{N, subset});
    njson out;
    out["diagram"] = d.to_text();
    out["N"] = N;
    out["subset"] = subset;
    out["value"] = value.to_string();
    auto rational = value.as_rational();
    if (rational) out["rational"] = rational->str();
    Complex100 approx = embed_numeric(value, 30);
    out["approx_re"] = float_str(approx.re);
    out["approx_im"] = float_str(approx.im);
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_parlin_check(int exhaustive_max, int random_seeds, std::uint64_t seed) {
    struct Row {
        const char* name;
        long long checked = 0;
        long long failed = 0;
    };
    Row tensor{"tensor-dim"}, hom{"hom-dim"}, ann{"annihilator"}, str{"string-filtration"},
        schub{"schubert-tangent"};

    for (int r = 1; r <= exhaustive_max; ++r)
        for (int l = 1; l <= exhaustive_max; ++l)
            for (const auto& lam : all_diagrams(r, l)) {
                auto E = standard_space(r, lam);
                auto Ft = standard_space(l, lam.transpose());
                auto F = standard_space(l, lam.transpose().conjugate());
                ++tensor.checked;
                if (tensor_subspace(E, Ft).cols() != lam.size()) ++tensor.failed;
                ++hom.checked;
                if (parabolic_hom(E, F).cols() != static_cast<long long>(r) * l - lam.size())
                    ++hom.failed;
                ++ann.checked;
                if (!annihilator_check(E, F)) ++ann.failed;
                auto sf = string_filtration(QMatrix::identity(r), QMatrix::identity(l), lam);
                ++str.checked;
                for (size_t k = 0; k < sf.dims.size(); ++k)
                    if (sf.dims[k] != sf.k_L[k] * sf.k_R[k] ||
                        (k && sf.dims[k] > sf.dims[k - 1]))
                        ++str.failed;
                ++schub.checked;
                if (schubert_tangent_dim(lam) + lam.size() != static_cast<long long>(r) * l)
                    ++schub.failed;
            }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> rl(1, 5);
    for (int t = 0; t < random_seeds; ++t) {
        const int r = rl(rng), l = rl(rng);
        auto all = all_diagrams(r, l);
        std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
        const YoungDiagram& lam = all[pick(rng)];
        auto E = random_space(r, lam, rng());
        auto Ft = random_space(l, lam.transpose(), rng());
        auto F = random_space(l, lam.transpose().conjugate(), rng());
        ++tensor.checked;
        if (tensor_subspace(E, Ft).cols() != lam.size()) ++tensor.failed;
        ++hom.checked;
        if (parabolic_hom(E, F).cols() != static_cast<long long>(r) * l - lam.size())
            ++hom.failed;
        ++ann.checked;
        if (!annihilator_check(E, F)) ++ann.failed;
    }

    int bad = 0;
    std::printf("%-18s %10s %10s\n", "check", "count", "failures");
    for (const Row* row : {&tensor, &hom, &ann, &str, &schub}) {
        std::printf("%-18s %10lld %10lld\n", row->name, row->checked, row->failed);
        if (row->failed) ++bad;
    }
    return bad ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Verlinde numbers, Quot-scheme intersections and rank-level checks"};
    app.require_subcommand(1);

    int r = 2, l = 1, g = 0, n = 0;
    long long d = 0, dd = 0, min_drn = 1;
    std::string weights = "[]", variant = "sl", format = "json";
    std::string diagram, subset;
    bool oracle = false, timing = false, exhaustive = false, vi_compatible = false;
    int count = 30, rmax = 3, gmax = 2, N = 5, samples = 10;
    int exhaustive_max = 3, random_seeds = 100;
    std::uint64_t seed = 1;

    auto* sv = app.add_subcommand("verlinde", "exact Verlinde number of one instance");
    sv->add_option("--r", r)->required();
    sv->add_option("--l", l)->required();
    sv->add_option("--g", g)->required();
    sv->add_option("--weights", weights, "weight system JSON");
    sv->add_option("--variant", variant)->check(CLI::IsMember({"sl", "gl", "twisted"}));
    sv->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    sv->add_flag("--oracle", oracle, "re-run in 50-digit floating mode");
    sv->add_flag("--timing", timing, "include elapsed_ms in the JSON output");

    auto* svi = app.add_subcommand("vi", "Vafa-Intriligator intersection number");
    svi->add_option("--r", r)->required();
    svi->add_option("--l", l)->required();
    svi->add_option("--g", g)->required();
    svi->add_option("--n", n)->required();
    svi->add_option("--d", d)->required();
    svi->add_option("--mu", weights, "mu weight system JSON")->required();
    svi->add_flag("--oracle", oracle);

    auto* svc = app.add_subcommand("vi-check", "VI = twisted Verlinde equality suite");
    svc->add_option("--count", count);
    svc->add_option("--seed", seed);
    svc->add_option("--rmax", rmax);
    svc->add_option("--gmax", gmax);

    auto* ss = app.add_subcommand("symmetry", "reciprocity and rank-level suites");
    ss->add_option("--N", N)->required();
    ss->add_flag("--exhaustive", exhaustive, "all subsets and diagrams at this order");
    ss->add_option("--samples", samples);
    ss->add_option("--seed", seed);

    auto* sn = app.add_subcommand("normalize", "degree normalization with replayable plan");
    sn->add_option("--r", r)->required();
    sn->add_option("--l", l)->required();
    sn->add_option("--g", g)->required();
    sn->add_option("--d", d)->required();
    sn->add_option("--dd", dd)->required();
    sn->add_option("--weights", weights);
    sn->add_option("--min-drn", min_drn, "lower bound for d' + r n'");
    sn->add_flag("--vi-compatible", vi_compatible, "force (r+l) | d' + r n'");

    auto* sd = app.add_subcommand("verdict", "twisted dimensions of both normalized sides");
    sd->add_option("--r", r)->required();
    sd->add_option("--l", l)->required();
    sd->add_option("--g", g)->required();
    sd->add_option("--d", d)->required();
    sd->add_option("--dd", dd)->required();
    sd->add_option("--weights", weights);

    auto* se = app.add_subcommand("schur-eval", "Schur polynomial at roots of unity");
    se->add_option("--diagram", diagram)->required();
    se->add_option("--N", N)->required();
    se->add_option("--subset", subset)->required();

    auto* sp = app.add_subcommand("parlin-check", "parabolic linear algebra suite");
    sp->add_option("--exhaustive-max", exhaustive_max);
    sp->add_option("--random-seeds", random_seeds);
    sp->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sv->parsed()) return cmd_verlinde(r, l, g, weights, variant, format, oracle, timing);
        if (svi->parsed()) return cmd_vi(r, l, g, n, d, weights, oracle);
        if (svc->parsed()) return cmd_vi_check(count, seed, rmax, gmax);
        if (ss->parsed()) return cmd_symmetry(N, exhaustive, samples, seed);
        if (sn->parsed()) return cmd_normalize(r, l, g, d, dd, weights, min_drn, vi_compatible);
        if (sd->parsed()) return cmd_verdict(r, l, g, d, dd, weights);
        if (se->parsed()) return cmd_schur_eval(diagram, N, subset);
        if (sp->parsed()) return cmd_parlin_check(exhaustive_max, random_seeds, seed);
    } catch (const IntegralityError& e) {
        std::cerr << "identity failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
