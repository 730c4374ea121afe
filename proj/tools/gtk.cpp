#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "gct/chartab.hpp"
#include "gct/report.hpp"

namespace {

// Thrown for operator mistakes that CLI11 cannot catch (bad --normal index,
// composite -p); mapped to exit code 2 like other usage errors.
struct UsageFail {
    std::string msg;
};

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace gct;

    CLI::App app{"exact character tables of normal subgroups, with theorem checks"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string format = "text";
    unsigned long seed = 0;
    long max_order = 5000;
    if (const char* env = std::getenv("GTK_MAX_ORDER")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) max_order = v;
    }
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", seed, "seed for the randomized representative choices");
    app.add_option("--max-order", max_order, "largest accepted group order");

    std::string fixture_path;
    int normal_index = 0;
    long p = 0;
    bool lower = false, upper = false;

    CLI::App* c_table = app.add_subcommand("table", "character table of the fixture group");
    c_table->add_option("fixture", fixture_path, "fixture file")->required();

    CLI::App* c_normals = app.add_subcommand("normals", "indexed normal subgroup list");
    c_normals->add_option("fixture", fixture_path, "fixture file")->required();

    CLI::App* c_gtable = app.add_subcommand("gtable", "G-character table of a normal subgroup");
    c_gtable->add_option("fixture", fixture_path, "fixture file")->required();
    c_gtable->add_option("--normal", normal_index, "index from `normals`")->required();

    CLI::App* c_series = app.add_subcommand("series", "central G-series of a normal subgroup");
    c_series->add_option("fixture", fixture_path, "fixture file")->required();
    c_series->add_option("--normal", normal_index, "index from `normals`")->required();
    c_series->add_flag("--lower", lower, "print only the descending series");
    c_series->add_flag("--upper", upper, "print only the ascending series");

    CLI::App* c_check = app.add_subcommand("check", "theorem checks");
    c_check->fallthrough();
    c_check->require_subcommand(1);
    CLI::App* c_th = c_check->add_subcommand("thompson", "normal p-complement predicate");
    c_th->add_option("fixture", fixture_path, "fixture file")->required();
    c_th->add_option("--normal", normal_index, "index from `normals`")->required();
    c_th->add_option("-p,--prime", p, "prime")->required();
    CLI::App* c_nmi = c_check->add_subcommand("nmi", "every character certified by a linear pair");
    c_nmi->add_option("fixture", fixture_path, "fixture file")->required();
    CLI::App* c_gnmi =
        c_check->add_subcommand("gnmi", "every cell certified by a linear invariant pair");
    c_gnmi->add_option("fixture", fixture_path, "fixture file")->required();
    c_gnmi->add_option("--normal", normal_index, "index from `normals`")->required();
    CLI::App* c_taketa = c_check->add_subcommand("taketa", "leader-degree length bound");
    c_taketa->add_option("fixture", fixture_path, "fixture file")->required();
    c_taketa->add_option("--normal", normal_index, "index from `normals`")->required();
    CLI::App* c_fratt = c_check->add_subcommand("fratt", "[G,N] against the Frattini subgroup");
    c_fratt->add_option("fixture", fixture_path, "fixture file")->required();
    c_fratt->add_option("--normal", normal_index, "index from `normals`")->required();

    CLI::App* c_verify = app.add_subcommand("verify", "full invariant suite");
    c_verify->add_option("fixture", fixture_path, "fixture file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    ReportOptions opt;
    opt.json = format == "json";
    opt.seed = seed;

    try {
        Fixture fx = load_fixture(fixture_path, max_order);
        auto resolve = [&](int k) -> SubgroupSet {
            std::vector<SubgroupSet> ns = indexed_normals(fx.group);
            if (k < 1 || k > static_cast<int>(ns.size()))
                throw UsageFail{"--normal " + std::to_string(k) + " is out of range (1.." +
                                std::to_string(ns.size()) + ")"};
            return ns[static_cast<size_t>(k - 1)];
        };

        if (app.got_subcommand(c_table)) {
            std::cout << report_table(fx, character_table(fx.group, max_order), opt);
            return 0;
        }
        if (app.got_subcommand(c_normals)) {
            std::cout << report_normals(fx, opt);
            return 0;
        }
        if (app.got_subcommand(c_gtable)) {
            SubgroupSet N = resolve(normal_index);
            std::cout << report_gtable(fx, character_table(fx.group, max_order), normal_index, N,
                                       opt);
            return 0;
        }
        if (app.got_subcommand(c_series)) {
            SubgroupSet N = resolve(normal_index);
            if (!lower && !upper) lower = upper = true;
            std::cout << report_series(fx, character_table(fx.group, max_order), normal_index, N,
                                       lower, upper, opt);
            return 0;
        }
        if (app.got_subcommand(c_check)) {
            std::string which;
            if (c_check->got_subcommand(c_th)) which = "thompson";
            if (c_check->got_subcommand(c_nmi)) which = "nmi";
            if (c_check->got_subcommand(c_gnmi)) which = "gnmi";
            if (c_check->got_subcommand(c_taketa)) which = "taketa";
            if (c_check->got_subcommand(c_fratt)) which = "fratt";
            if (which == "thompson" && !is_prime(p))
                throw UsageFail{"-p " + std::to_string(p) + " is not a prime"};
            SubgroupSet N;
            const SubgroupSet* Np = nullptr;
            if (which != "nmi") {
                N = resolve(normal_index);
                Np = &N;
            }
            CheckReport rep = report_check(which, fx, character_table(fx.group, max_order),
                                           normal_index, Np, p, opt);
            std::cout << rep.text;
            return rep.verdict.state == Verdict::State::Fails ? 1 : 0;
        }
        if (app.got_subcommand(c_verify)) {
            std::cout << report_verify(fx, opt);
            return 0;
        }
        return 2;
    } catch (const UsageFail& u) {
        std::cerr << "error: " << u.msg << '\n';
        return 2;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const OrderCapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const VerificationFailed& e) {
        std::cerr << "internal verification failure: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}
