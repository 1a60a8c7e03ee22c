// Command-line front end. Every subcommand prints JSON on standard output.
// Exit codes: 0 ok, 2 malformed input, 3 budget exceeded, 4 verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "charfield/acceptance.hpp"
#include "charfield/charfields.hpp"
#include "charfield/errors.hpp"
#include "charfield/heckegal.hpp"
#include "charfield/json_io.hpp"
#include "charfield/oracle.hpp"
#include "charfield/powermaps.hpp"

using namespace charfield;
using json_io::json;

namespace {

constexpr int kExitMalformed = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerify = 4;

bool g_pretty = false;

void emit(const json& j) { std::cout << (g_pretty ? j.dump(2) : j.dump()) << "\n"; }

json response(json input, json result, std::vector<std::string> citations) {
    return {{"input", std::move(input)}, {"result", std::move(result)}, {"citations", std::move(citations)}};
}

struct GroupArgs {
    std::string family = "sp";
    int n = 1;
    i64 q = 3;
    int twist = 1;

    void attach(CLI::App* app, bool need_n = true) {
        app->add_option("--family", family, "sp, so-odd or so-even")->required();
        auto* opt = app->add_option("--n", n, "rank");
        if (need_n) opt->required();
        app->add_option("--q", q, "field size, a power of an odd prime")->required();
        app->add_option("--twist", twist, "+1 split, -1 twisted (so-even only)");
    }
    GroupSpec build() const { return GroupSpec(parse_family(family), n, q, twist); }
};

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer list: " + s);
        }
        if (used != item.size()) throw std::invalid_argument("bad integer list: " + s);
        out.push_back(v);
    }
    return out;
}

// Runs `one` on the single --class payload or on every line of --class-file.
int for_each_class(const std::string& payload, const std::string& file,
                   const std::function<json(const SemisimpleClass&)>& one) {
    if (payload.empty() == file.empty()) throw std::invalid_argument("give exactly one of --class and --class-file");
    if (!payload.empty()) {
        emit(one(json_io::class_from_json(json::parse(payload))));
        return 0;
    }
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot read " + file);
    int status = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            emit(one(json_io::class_from_json(json::parse(line))));
        } catch (const std::exception& e) {
            emit({{"error", e.what()}, {"line", line}});
            status = kExitMalformed;
        }
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Character fields and Galois actions for finite symplectic and orthogonal groups"};
    app.require_subcommand(1);
    app.add_flag("--pretty", g_pretty, "indent the JSON output");

    std::string class_json, class_file;

    auto* field = app.add_subcommand("field", "character field of a Lusztig series");
    field->add_option("--class", class_json, "semisimple class as JSON");
    field->add_option("--class-file", class_file, "file with one class JSON per line");

    auto* real = app.add_subcommand("real", "whether a Lusztig series consists of real characters");
    real->add_option("--class", class_json, "semisimple class as JSON");
    real->add_option("--class-file", class_file, "file with one class JSON per line");

    GroupArgs pm_group;
    std::string pm_mu;
    i64 pm_k = 1;
    bool pm_oracle = false;
    auto* powmap = app.add_subcommand("powmap", "whether a unipotent element is conjugate to its k-th power");
    pm_group.attach(powmap);
    powmap->add_option("--mu", pm_mu, "Jordan block sizes, comma separated")->required();
    powmap->add_option("--k", pm_k, "exponent, prime to p")->required();
    powmap->add_flag("--oracle", pm_oracle, "also run the brute-force matrix search (q prime, q <= 13)");

    GroupArgs gd_group;
    int gd_a = 0, gd_b = 0, gd_m = -1;
    i64 gd_k = 1, gd_modulus = 4;
    auto* gammadelta = app.add_subcommand("gammadelta", "sign characters of C(lambda) for a Galois element");
    gd_group.attach(gammadelta, false);
    gammadelta->add_option("--a", gd_a, "torus factors on which lambda is trivial")->required();
    gammadelta->add_option("--b", gd_b, "torus factors on which lambda has order 2")->required();
    gammadelta->add_option("--m", gd_m, "rank of the torus part of the Levi (default a + b, principal series)");
    gammadelta->add_option("--sigma-k", gd_k, "sigma acts as zeta -> zeta^k")->required();
    gammadelta->add_option("--sigma-m", gd_modulus, "on m-th roots of unity, 4 | m")->required();

    int sy_e = 0, sy_f = -1, sy_delta = 1;
    auto* symbol = app.add_subcommand("symbol", "special symbol, or the Springer symbol when --f is given");
    symbol->add_option("--e", sy_e, "size parameter of the special symbol")->required();
    symbol->add_option("--f", sy_f, "second parameter; selects the Springer symbol");
    symbol->add_option("--delta", sy_delta, "defect, 0 or 1")->required();

    int wf_e = 0, wf_f = 0, wf_delta = 1;
    auto* wavefront = app.add_subcommand("wavefront", "wave-front partition of a cuspidal character");
    wavefront->add_option("--e", wf_e, "first cuspidal parameter")->required();
    wavefront->add_option("--f", wf_f, "second cuspidal parameter")->required();
    wavefront->add_option("--delta", wf_delta, "defect, 0 or 1")->required();

    GroupArgs kg_group;
    auto* kgroup = app.add_subcommand("kgroup", "predicates on K(G^F) for so-even");
    kg_group.attach(kgroup);

    GroupArgs cl_group;
    i64 cl_max_d = 0;
    auto* classes = app.add_subcommand("classes", "semisimple classes of the dual group");
    cl_group.attach(classes);
    classes->add_option("--max-d", cl_max_d, "largest element order (default q^n + 1)");

    std::string suite = "all";
    int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--suite", suite, "gauss, weyl, relweyl, powmap, wavefront, gammadelta, brauer, fields or all");
    verify->add_option("--workers", workers, "threads for the matrix search");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitMalformed;
    }

    try {
        if (*field) {
            return for_each_class(class_json, class_file, [](const SemisimpleClass& s) {
                return response(json_io::class_to_json(s), json_io::field_to_json(char_field(s.group(), s)),
                                {"character field of a Lusztig series", "sign of sigma on sqrt(omega p)"});
            });
        }
        if (*real) {
            return for_each_class(class_json, class_file, [](const SemisimpleClass& s) {
                return response(json_io::class_to_json(s), {{"real", is_real_series(s.group(), s)}},
                                {"realness of a Lusztig series"});
            });
        }
        if (*powmap) {
            const GroupSpec g = pm_group.build();
            const EpsPartition mu(Partition(parse_int_list(pm_mu)), g.family == Family::Sp ? 1 : 0);
            json input = json_io::group_to_json(g);
            input["mu"] = json_io::partition_to_json(mu.base());
            input["k"] = pm_k;
            json result = {{"rational", unipotent_rational(g, mu, pm_k)},
                           {"criterion", unipotent_rational_criterion(g, mu, pm_k)}};
            if (pm_oracle) result["oracle"] = oracle::power_conjugate(g, mu, pm_k, oracle::default_budget(), workers);
            emit(response(input, result, {"conjugacy of unipotent elements to their powers"}));
            return 0;
        }
        if (*gammadelta) {
            GroupSpec g = gd_group.build();
            const int m = gd_m >= 0 ? gd_m : gd_a + gd_b;
            if (gammadelta->count("--n") == 0) g = GroupSpec(g.family, m, g.q, g.eps_twist);
            const bool principal = m == g.n;
            const SeriesDescriptor desc = principal ? SeriesDescriptor::principal_series(g, gd_a, gd_b)
                                                    : SeriesDescriptor::levi(g, m, gd_a, gd_b);
            const SigmaData sigma(gd_k, gd_modulus);
            json input = json_io::group_to_json(g);
            input["a"] = gd_a;
            input["b"] = gd_b;
            input["m"] = m;
            input["sigma"] = {{"k", sigma.k}, {"m", sigma.m}};
            const CSign gam = gamma(desc, sigma), del = delta_prime(desc, sigma), prod = gamma_delta(desc, sigma);
            const auto rel = relative_weyl(desc);
            json result = {{"c_order", prod.c_order},
                           {"gamma", gam.value},
                           {"delta_prime", del.value},
                           {"gamma_delta", prod.value},
                           {"action", to_string(hc_series_action(desc, sigma))},
                           {"externally_sourced", rel.externally_sourced}};
            emit(response(input, result, {"Galois action on Harish-Chandra series", "relative Weyl group tables"}));
            return 0;
        }
        if (*symbol) {
            json input = {{"e", sy_e}, {"delta", sy_delta}};
            LSymbol s;
            if (sy_f >= 0) {
                input["f"] = sy_f;
                s = springer_symbol(sy_e, sy_f, sy_delta);
            } else {
                s = special_symbol(sy_e, sy_delta);
            }
            emit(response(input, json_io::symbol_to_json(s), {"symbols of unipotent characters"}));
            return 0;
        }
        if (*wavefront) {
            const EpsPartition mu = wavefront_partition(wf_e, wf_f, wf_delta);
            const auto orders = component_orders(mu);
            json result = {{"partition", json_io::partition_to_json(mu.base())},
                           {"n_cuspidal", n_cuspidal(wf_e, wf_f, wf_delta)},
                           {"component_orders", {{"aG", orders.aG}, {"aG0", orders.aG0}, {"aGad", orders.aGad}}}};
            emit(response({{"e", wf_e}, {"f", wf_f}, {"delta", wf_delta}}, result,
                          {"wave-front sets of cuspidal characters", "multiplicity one of generalized Gelfand-Graev characters"}));
            return 0;
        }
        if (*kgroup) {
            const GroupSpec g = kg_group.build();
            json result = {{"k_group_nontrivial", k_group_nontrivial(g)},
                           {"center_in_o_pprime", o_pprime_member(g, g.n, true)}};
            emit(response(json_io::group_to_json(g), result, {"automorphisms not lifting to asogenies"}));
            return 0;
        }
        if (*classes) {
            const GroupSpec g = cl_group.build();
            i64 max_d = cl_max_d;
            if (max_d <= 0) {
                max_d = 1;
                for (int i = 0; i < g.n; ++i) max_d *= g.q;
                max_d += 1;
            }
            json list = json::array();
            for (const auto& s : enumerate_classes(g, max_d)) list.push_back(json_io::class_to_json(s));
            json input = json_io::group_to_json(g);
            input["max_d"] = max_d;
            emit(response(input, {{"classes", list}, {"count", list.size()}}, {"semisimple classes of the dual group"}));
            return 0;
        }
        if (*verify) {
            acceptance::Options opt;
            opt.workers = std::max(1, workers);
            opt.budget = oracle::default_budget();
            bool ok = true;
            for (const auto& r : acceptance::run_suite(suite, opt)) {
                emit(json_io::criterion_to_json(r));
                ok = ok && r.passed;
            }
            return ok ? 0 : kExitVerify;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const json::exception& e) {
        std::cerr << "malformed JSON: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitMalformed;
    }
    return kExitMalformed;
}
