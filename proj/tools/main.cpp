#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mehr/io.hpp"
#include "mehr/verification.hpp"

namespace {

struct Options {
    std::string input = "-";
    std::string output;
    bool trace = false;
    int parallel = 1;
    std::uint64_t seed = 1;
    mehr::Coord rmax = 16;
    int cases = 50;
};

std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw mehr::InputError("input: cannot open file '" + path + "'");
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output);
    if (!out) throw mehr::InputError("output: cannot open file '" + opt.output + "'");
    out << text;
}

mehr::CollectionSpec load_spec(const Options& opt) {
    return mehr::parse_collection(read_input(opt.input));
}

const mehr::LatticePolytope& single_polytope(const mehr::CollectionSpec& spec) {
    if (spec.polytopes.size() != 1)
        throw mehr::InputError("input: expected exactly one polytope, got " +
                               std::to_string(spec.polytopes.size()));
    return spec.polytopes.front();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact discrete mixed volumes, mixed Ehrhart polynomials and mixed h*-vectors "
                 "of lattice polytopes"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--input", opt.input, "input JSON file ('-' for standard input)");
    app.add_option("--output", opt.output, "write the result to a file instead of stdout");
    app.add_flag("--trace", opt.trace, "include the per-subset count ledger in the output");
    app.add_option("--parallel", opt.parallel, "worker threads for independent sub-computations")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "seed for the randomized property suite");

    auto* cmd_count = app.add_subcommand("count", "lattice-point count of one polytope");
    auto* cmd_ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial of one polytope");
    auto* cmd_multi = app.add_subcommand("ehrhart-multi", "multivariate enumerator of a collection");
    auto* cmd_hstar = app.add_subcommand("hstar", "h*-vector of one polytope");
    auto* cmd_mixedvol = app.add_subcommand("mixedvol", "mixed-volume table of a collection");
    auto* cmd_dmv = app.add_subcommand("dmv", "discrete mixed volume of a collection");
    auto* cmd_me = app.add_subcommand("mixed-ehrhart", "mixed Ehrhart polynomial of a collection");
    auto* cmd_mh = app.add_subcommand("mixed-hstar", "mixed h*-vector of a collection");
    auto* cmd_check = app.add_subcommand("me-check", "compare both coefficient routes");
    auto* cmd_roots = app.add_subcommand("roots", "root analysis of the mixed h*-polynomial");
    auto* cmd_scan = app.add_subcommand("scan", "per-dilate h* diagnostics (JSON lines)");
    auto* cmd_findr = app.add_subcommand("find-r", "smallest dilate with all diagnostics stable");
    auto* cmd_vpaper = app.add_subcommand("verify-paper", "run the published-value suite");
    auto* cmd_vprops = app.add_subcommand("verify-props", "run the randomized property suite");

    cmd_scan->add_option("--rmax", opt.rmax, "largest dilation factor")->required();
    cmd_findr->add_option("--rmax", opt.rmax, "largest dilation factor")->required();
    cmd_vprops->add_option("--cases", opt.cases, "number of random cases")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const mehr::Parallelism par{opt.parallel};
    const auto started = std::chrono::steady_clock::now();
    int exit_code = 0;
    try {
        if (cmd_count->parsed()) {
            const auto spec = load_spec(opt);
            write_output(opt, mehr::render_count(mehr::count_points(single_polytope(spec))));
        } else if (cmd_ehrhart->parsed()) {
            const auto spec = load_spec(opt);
            write_output(opt, mehr::render_ehrhart(mehr::ehrhart(single_polytope(spec))));
        } else if (cmd_multi->parsed()) {
            const auto spec = load_spec(opt);
            write_output(opt, mehr::render_multivariate(
                                  mehr::multivariate_ehrhart(spec.polytopes, par)));
        } else if (cmd_hstar->parsed()) {
            const auto spec = load_spec(opt);
            write_output(opt, mehr::render_hstar(
                                  mehr::hstar_from_polynomial(mehr::ehrhart(single_polytope(spec)))));
        } else if (cmd_mixedvol->parsed()) {
            const auto spec = load_spec(opt);
            write_output(opt,
                         mehr::render_mixed_volume_table(mehr::mixed_volume_table(spec.polytopes, par)));
        } else if (cmd_dmv->parsed()) {
            const auto spec = load_spec(opt);
            mehr::PolytopeCollection c(spec.polytopes);
            std::vector<mehr::SubsetCount> trace;
            const mehr::Int value = mehr::dmv(c, opt.trace ? &trace : nullptr, par);
            write_output(opt, mehr::render_dmv(value, opt.trace ? &trace : nullptr));
        } else if (cmd_me->parsed()) {
            const auto spec = load_spec(opt);
            mehr::PolytopeCollection c(spec.polytopes);
            const auto me = mehr::mixed_ehrhart(c, par);
            std::vector<mehr::SubsetCount> trace;
            if (opt.trace) mehr::dmv(c, &trace, par);
            write_output(opt, mehr::render_mixed_ehrhart(me, c.sum_dimension(),
                                                         opt.trace ? &trace : nullptr));
        } else if (cmd_mh->parsed()) {
            const auto spec = load_spec(opt);
            write_output(opt, mehr::render_mixed_hstar(
                                  mehr::mixed_hstar(mehr::PolytopeCollection(spec.polytopes), par)));
        } else if (cmd_check->parsed()) {
            const auto spec = load_spec(opt);
            mehr::PolytopeCollection c(spec.polytopes);
            const auto me = mehr::mixed_ehrhart(c, par);
            const auto via_multivariate = mehr::me_from_multivariate(c, par);
            const bool agree = me.coefficients == via_multivariate;
            write_output(opt, mehr::render_me_check(me.coefficients, via_multivariate, agree));
            if (!agree) exit_code = 1;
        } else if (cmd_roots->parsed()) {
            const auto spec = load_spec(opt);
            const auto h = mehr::mixed_hstar(mehr::PolytopeCollection(spec.polytopes), par);
            std::vector<mehr::Rat> coeffs;
            coeffs.reserve(h.entries.size());
            for (const mehr::Int& e : h.entries) coeffs.emplace_back(mehr::Rat(e));
            const mehr::Polynomial hstar_poly{std::move(coeffs)};
            if (hstar_poly.is_zero())
                throw mehr::InputError("input: mixed h*-polynomial is zero, nothing to analyze");
            write_output(opt, mehr::render_root_report(h, mehr::is_real_rooted(hstar_poly)));
        } else if (cmd_scan->parsed()) {
            const auto spec = load_spec(opt);
            const auto reports =
                mehr::scan_dilates(mehr::PolytopeCollection(spec.polytopes), opt.rmax, par);
            std::string lines;
            for (const auto& rep : reports) lines += mehr::render_dilation_report(rep);
            write_output(opt, lines);
        } else if (cmd_findr->parsed()) {
            const auto spec = load_spec(opt);
            const auto r = mehr::find_min_r(mehr::PolytopeCollection(spec.polytopes), opt.rmax, par);
            write_output(opt, mehr::render_find_r(r, opt.rmax));
        } else if (cmd_vpaper->parsed()) {
            const auto ledger = mehr::run_paper_suite(par);
            write_output(opt, mehr::render_ledger(ledger));
            if (!ledger.all_passed()) exit_code = 1;
        } else if (cmd_vprops->parsed()) {
            const auto ledger = mehr::run_property_suite(opt.seed, opt.cases, par);
            write_output(opt, mehr::render_ledger(ledger));
            if (!ledger.all_passed()) exit_code = 1;
        }
    } catch (const mehr::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }

    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
    mehr::log_info(app.get_subcommands().front()->get_name() + " finished in " +
                   std::to_string(elapsed.count()) + " ms");
    return exit_code;
}
