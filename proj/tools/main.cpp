// smf2: exact mod-p toolkit for degree-2 Siegel modular forms.
//
// Subcommands: theta-apply, psingular-check, cycle, serre-weight,
// verify-local. All output is JSON on stdout (or --out). Exit codes:
// 0 success, 1 I/O or JSON parse failure, 2 validation error (with a
// machine-readable error object).

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "smf2/cycle.hpp"
#include "smf2/json_io.hpp"
#include "smf2/qexp.hpp"
#include "smf2/serre.hpp"
#include "smf2/theta_local.hpp"

using namespace smf2;

namespace {

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (!in.good() && !in.eof()) throw IoFailure("cannot read " + path);
    return ss.str();
}

void write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw IoFailure("cannot open " + out_path + " for writing");
    out << payload << "\n";
    if (!out.good()) throw IoFailure("cannot write " + out_path);
}

Json error_json(const std::string& code, const std::string& message,
                const std::map<std::string, Int>& params = {}) {
    Json e;
    e["code"] = code;
    e["message"] = message;
    for (const auto& [k, v] : params) e[k] = v;
    return Json{{"error", std::move(e)}};
}

int emit_error(const std::string& code, const std::string& message,
               const std::map<std::string, Int>& params, int exit_code) {
    std::cout << dump_canonical(error_json(code, message, params)) << "\n";
    return exit_code;
}

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const Error& e) {
        return emit_error(e.code(), e.what(), e.params(), 2);
    } catch (const Json::parse_error& e) {
        return emit_error("JsonParseError", e.what(), {}, 1);
    } catch (const IoFailure& e) {
        return emit_error("IoError", e.what(), {}, 1);
    }
}

Json selector_json(const Prime& p, Int w) {
    const SelectorResult s = selector(p, w);
    return Json{{"j", s.j}, {"use_theta3", s.use_theta3}};
}

int run_theta_apply(const std::string& in, Int iterations, const std::string& out) {
    const QExpansion f = qexp_from_json(Json::parse(read_file(in)));
    const QExpansion g = theta_iterate(f, iterations);
    write_output(out, dump_canonical(qexp_to_json(g)));
    return 0;
}

int run_psingular(const std::vector<std::string>& inputs) {
    for (const auto& path : inputs) {
        const QExpansion f = qexp_from_json(Json::parse(read_file(path)));
        Json j;
        j["p"] = f.p().value();
        j["N"] = f.level();
        j["max_trace"] = f.max_trace();
        j["is_zero"] = f.is_zero();
        j["weakly_p_singular"] = is_weakly_p_singular(f);
        j["qualifier"] = "within max_trace";
        std::cout << dump_canonical(j) << "\n";
    }
    return 0;
}

int run_cycle(Int p, Int r, Int k, bool semi, bool use_solver) {
    const Prime prime(p);
    if (use_solver) {
        const auto sols = cycle_solver(prime, r, k, semi);
        Json j;
        j["count"] = sols.size();
        Json arr = Json::array();
        for (const auto& s : sols) arr.push_back(cycle_to_json(s));
        j["solutions"] = std::move(arr);
        std::cout << dump_canonical(j) << "\n";
        return 0;
    }
    std::cout << dump_canonical(cycle_to_json(cycle_closed_form(prime, r, k, semi))) << "\n";
    return 0;
}

int run_serre_weight(const std::vector<std::string>& inputs, bool with_selector,
                     BorelMaxMode mode) {
    for (const auto& path : inputs) {
        const DescriptorInput input = descriptor_from_json(Json::parse(read_file(path)));
        SerreWeight sw{0, 0, 0};
        Int p = 2;
        Json extra;
        if (const auto* k2 = std::get_if<Klingen2Input>(&input)) {
            sw = serre_weight_klingen_p2(k2->c, k2->ram);
        } else {
            const auto& d = std::get<LocalRepDescriptor>(input);
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    p = v.p.value();
                    if constexpr (std::is_same_v<T, BorelDescriptor>)
                        sw = serre_weight_borel(v, mode);
                    else if constexpr (std::is_same_v<T, SiegelDescriptor>)
                        sw = serre_weight_siegel(v);
                    else if constexpr (std::is_same_v<T, KlingenGenericDescriptor>)
                        sw = serre_weight_klingen(v);
                    else if constexpr (std::is_same_v<T, KlingenSplitDescriptor>)
                        sw = serre_weight_klingen(v);
                    else if constexpr (std::is_same_v<T, EndoscopicDescriptor>)
                        sw = serre_weight_endoscopic(v);
                    else if constexpr (std::is_same_v<T, IrreducibleDescriptor>) {
                        const Omega4Digits dig = omega4_digits(v.p, v.a);
                        extra["omega4"] =
                            Json{{"digits", dig.digits}, {"distinct", dig.distinct}};
                        sw = serre_weight_irreducible(v);
                    }
                },
                d);
        }
        Json j = serre_weight_to_json(sw);
        j["meets_classical_bound"] = meets_classical_bound(sw);
        for (auto& [key, value] : extra.items()) j[key] = value;
        if (with_selector) j["selector"] = selector_json(Prime(p), sw.w);
        std::cout << dump_canonical(j) << "\n";
    }
    return 0;
}

int run_verify_local(Int r_max) {
    using namespace smf2::sym;
    if (r_max < 1)
        throw Error("InvalidArgument", "r-max must be >= 1", {{"r_max", r_max}});
    bool ok = true;
    Json entries = Json::array();
    for (Int r = 0; r <= r_max; ++r) {
        for (Int n = 0; n <= r; ++n) {
            Json e;
            e["r"] = r;
            e["n"] = n;
            const SymPoly general = theta_local_general(r, n);
            e["pole_order_general"] = pole_order(general);

            const SymPoly derived = derive_theta_local(r, n);
            const SymPoly derived_diff = sympoly_diff(general.expanded_det(), derived);
            e["diff_general_vs_derived"] = derived_diff.str();
            const bool derived_so = block_of(derived_diff, Block::second_order).is_zero();
            e["derived_second_order_match"] = derived_so;
            ok = ok && derived_so;

            if (r <= 1) {
                const SymPoly spec = r == 0 ? specialize_equal_weights(general)
                                            : specialize_adjacent_weights(general);
                const SymPoly cor = r == 0 ? theta_local_r0() : theta_local_r1(n);
                e["pole_order_specialized"] = pole_order(cor);
                const SymPoly diff = sympoly_diff(spec, cor);
                e["diff_general_vs_specialized"] = diff.str();
                const bool blocks = block_of(diff, Block::second_order).is_zero() &&
                                    block_of(diff, Block::det_block).is_zero() &&
                                    block_of(diff, Block::c_squared).is_zero();
                e["asserted_blocks_match"] = blocks;
                ok = ok && blocks;
            }
            entries.push_back(std::move(e));
        }
    }
    Json report;
    report["r_max"] = r_max;
    report["entries"] = std::move(entries);
    report["ok"] = ok;
    std::cout << dump_canonical(report) << "\n";
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact mod-p toolkit for degree-2 Siegel modular forms"};
    app.require_subcommand(1);

    std::string in_path, out_path;
    std::vector<std::string> in_paths;
    Int iterations = 1;
    Int p = 0, r = 0, k = 0, r_max = 3;
    bool semi = false, use_solver = false, with_selector = false;
    std::string borel_max = "all";

    auto* theta_cmd = app.add_subcommand("theta-apply", "apply the theta operator j times");
    theta_cmd->add_option("--in", in_path, "input q-expansion (JSON)")->required();
    theta_cmd->add_option("--iterations", iterations, "number of applications (default 1)")
        ->check(CLI::NonNegativeNumber);
    theta_cmd->add_option("--out", out_path, "output path (default stdout)");

    auto* psing_cmd =
        app.add_subcommand("psingular-check", "report weak p-singularity within max_trace");
    psing_cmd->add_option("--in", in_paths, "input q-expansion(s) (JSON)")->required();

    auto* cycle_cmd = app.add_subcommand("cycle", "theta cycle of a filtration value");
    cycle_cmd->add_option("--p", p, "prime")->required();
    cycle_cmd->add_option("--r", r, "weight gap k1 - k2")->required();
    cycle_cmd->add_option("--k", k, "second entry of the filtration")->required();
    cycle_cmd->add_flag("--semi-ordinary", semi, "treat the form as semi-ordinary");
    cycle_cmd->add_flag("--solver", use_solver, "enumerate structures instead of closed form");

    auto* serre_cmd = app.add_subcommand("serre-weight", "classical Serre weight of a descriptor");
    serre_cmd->add_option("--in", in_paths, "descriptor file(s) (JSON)")->required();
    serre_cmd->add_flag("--with-selector", with_selector, "include the cycle-position selector");
    serre_cmd->add_option("--borel-max", borel_max, "Borel a>b row max: all (default) or pair")
        ->check(CLI::IsMember({"all", "pair"}));

    auto* verify_cmd =
        app.add_subcommand("verify-local", "compare the local theta coefficient formulas");
    verify_cmd->add_option("--r-max", r_max, "largest weight gap to check (default 3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cout << dump_canonical(error_json("InvalidJobSpec", e.what())) << "\n";
        return 2;
    }

    if (theta_cmd->parsed())
        return guarded([&] { return run_theta_apply(in_path, iterations, out_path); });
    if (psing_cmd->parsed()) return guarded([&] { return run_psingular(in_paths); });
    if (cycle_cmd->parsed()) return guarded([&] { return run_cycle(p, r, k, semi, use_solver); });
    if (serre_cmd->parsed())
        return guarded([&] {
            return run_serre_weight(in_paths, with_selector,
                                    borel_max == "all" ? BorelMaxMode::all_classes
                                                       : BorelMaxMode::upper_pair);
        });
    if (verify_cmd->parsed()) return guarded([&] { return run_verify_local(r_max); });
    return 2;
}
