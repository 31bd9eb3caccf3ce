// neurotop: command-line topology of binary neural codes

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "neurotop/code.hpp"
#include "neurotop/complex.hpp"
#include "neurotop/cover.hpp"
#include "neurotop/errors.hpp"
#include "neurotop/ideal.hpp"
#include "neurotop/topology.hpp"

namespace {

using namespace neurotop;

std::string display_name(const std::string& path) {
    return path == "-" ? "<stdin>" : path;
}

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(errc::bad_cover_file, "cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Code load_code(const std::string& path) {
    return parse_code(std::string_view(slurp(path)));
}

Cover load_cover(const std::string& path) {
    return parse_cover(std::string_view(slurp(path)));
}

std::string join(const std::vector<int>& values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

struct Options {
    std::string input = "-";
    bool machine = false;
    std::optional<int> kmax;
    std::optional<int> basepoint;
    int from = 0;
    int to = 0;
};

void run_complete(const Options& opt) {
    const Code completed = simplicial_completion(load_code(opt.input));
    if (opt.machine) {
        std::cout << "n=" << completed.length() << '\n';
        for (const Codeword& w : completed.words())
            std::cout << "word=" << w.to_string() << '\n';
    } else {
        std::cout << completed.render();
    }
}

void run_complex(const Options& opt) {
    const SimplicialComplex k = delta_complex(load_code(opt.input));
    if (opt.machine) {
        std::cout << "n=" << k.vertex_capacity() << '\n';
        for (std::uint64_t f : k.facets())
            std::cout << "facet=" << render_index_set(f) << '\n';
    } else {
        std::cout << k.render_facets();
    }
}

void run_homology(const Options& opt) {
    const SimplicialComplex k = delta_complex(load_code(opt.input));
    const int kmax = opt.kmax ? *opt.kmax : std::max(k.dimension(), 0);
    const BettiVector betti = betti_numbers(k, kmax);
    if (opt.machine) {
        for (std::size_t i = 0; i < betti.values.size(); ++i)
            std::cout << 'b' << i << '=' << betti.values[i] << '\n';
    } else {
        std::cout << betti.to_string() << '\n';
    }
}

void run_pi1(const Options& opt) {
    const SimplicialComplex k = delta_complex(load_code(opt.input));
    int basepoint = 0;
    if (opt.basepoint) {
        basepoint = *opt.basepoint;
    } else {
        const std::vector<int> vertices = k.vertices();
        if (vertices.empty())
            fail(errc::missing_basepoint, "complex has no vertices");
        basepoint = vertices.front();
    }
    const Pi1Presentation presentation = pi1_presentation(k, basepoint);
    if (opt.machine) {
        std::cout << "basepoint=" << presentation.basepoint << '\n'
                  << "generators=" << presentation.generator_count() << '\n'
                  << "relations=" << presentation.relation_count() << '\n';
        for (const auto& [u, v] : presentation.generators)
            std::cout << "generator=e(" << u << ',' << v << ")\n";
        for (const std::vector<int>& word : presentation.relations) {
            std::cout << "relation=";
            for (std::size_t i = 0; i < word.size(); ++i) {
                if (i > 0)
                    std::cout << '*';
                std::cout << 'g' << (word[i] > 0 ? word[i] : -word[i]);
                if (word[i] < 0)
                    std::cout << "^-1";
            }
            std::cout << '\n';
        }
    } else {
        std::cout << presentation.to_string();
    }
}

void run_canonical_form(const Options& opt) {
    const auto cf = canonical_form(load_code(opt.input));
    if (opt.machine)
        std::cout << "count=" << cf.size() << '\n';
    for (const PseudoMonomial& z : cf)
        std::cout << (opt.machine ? "cf=" : "") << z.to_string() << '\n';
}

void run_relations(const Options& opt) {
    const auto relations = rf_relations(load_code(opt.input));
    if (opt.machine)
        std::cout << "count=" << relations.size() << '\n';
    for (const RfRelation& r : relations)
        std::cout << (opt.machine ? "relation=" : "") << r.to_string() << '\n';
}

void run_cover_code(const Options& opt) {
    const Code code = code_of_cover(load_cover(opt.input));
    if (opt.machine) {
        std::cout << "n=" << code.length() << '\n';
        for (const Codeword& w : code.words())
            std::cout << "word=" << w.to_string() << '\n';
    } else {
        std::cout << code.render();
    }
}

void run_atoms(const Options& opt) {
    const Atlas atlas = atoms(load_cover(opt.input));
    if (opt.machine) {
        std::cout << "count=" << atlas.entries().size() << '\n';
        for (const auto& [word, points] : atlas.entries())
            std::cout << "atom=" << word.to_string() << ':' << join(points, ',') << '\n';
    } else {
        std::cout << atlas.render();
    }
}

int run_nerve_check(const Options& opt) {
    const NerveCheckReport report = nerve_equals_delta(load_cover(opt.input));
    if (opt.machine) {
        std::cout << "equal=" << (report.equal ? "true" : "false") << '\n';
        if (report.witness)
            std::cout << "witness=" << render_index_set(*report.witness) << '\n';
    } else {
        std::cout << (report.equal ? "equal" : "unequal") << '\n';
    }
    if (!report.equal) {
        std::cerr << "nerve and code complex disagree at face "
                  << render_index_set(report.witness.value_or(0)) << '\n';
        return 3;
    }
    return 0;
}

void run_dim_bound(const Options& opt) {
    const int bound = helly_lower_bound(delta_complex(load_code(opt.input)));
    if (opt.machine)
        std::cout << "dim_bound=" << bound << '\n';
    else
        std::cout << "dim >= " << bound << '\n';
}

void run_path(const Options& opt) {
    const std::vector<int> path =
        shortest_edge_path(delta_complex(load_code(opt.input)), opt.from, opt.to);
    if (opt.machine)
        std::cout << "path=" << join(path, ',') << '\n';
    else
        std::cout << join(path, ' ') << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"topological analysis of binary neural codes"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--machine", opt.machine, "emit key=value lines instead of text reports");

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", opt.input, "input file, or '-' for standard input")
            ->required();
        sub->fallthrough();
        return sub;
    };

    add_input(app.add_subcommand("complete", "simplicial completion of a code"));
    add_input(app.add_subcommand("complex", "facets of the code's simplicial complex"));
    auto* homology = add_input(
        app.add_subcommand("homology", "F2 Betti numbers of the code's complex"));
    homology->add_option("--kmax", [&](const CLI::results_t& r) {
        opt.kmax = std::stoi(r.front());
        return true;
    }, "highest homology degree to report")->check(CLI::NonNegativeNumber);
    auto* pi1 = add_input(
        app.add_subcommand("pi1", "edge-path fundamental-group presentation"));
    pi1->add_option("--basepoint", [&](const CLI::results_t& r) {
        opt.basepoint = std::stoi(r.front());
        return true;
    }, "basepoint vertex (default: smallest)")->check(CLI::PositiveNumber);
    add_input(app.add_subcommand("canonical-form",
                                 "canonical form of the code's vanishing ideal"));
    add_input(app.add_subcommand("relations", "receptive-field relations of a code"));
    add_input(app.add_subcommand("cover-code", "code of a covering"));
    add_input(app.add_subcommand("atoms", "atoms of a covering"));
    add_input(app.add_subcommand("nerve-check",
                                 "verify the nerve matches the code's complex"));
    add_input(app.add_subcommand("dim-bound", "embedding-dimension lower bound"));
    auto* path_cmd = add_input(
        app.add_subcommand("path", "shortest edge path between two vertices"));
    path_cmd->add_option("--from", opt.from, "start vertex")->required();
    path_cmd->add_option("--to", opt.to, "end vertex")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << e.what() << '\n';
        return 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (command == "complete")
            run_complete(opt);
        else if (command == "complex")
            run_complex(opt);
        else if (command == "homology")
            run_homology(opt);
        else if (command == "pi1")
            run_pi1(opt);
        else if (command == "canonical-form")
            run_canonical_form(opt);
        else if (command == "relations")
            run_relations(opt);
        else if (command == "cover-code")
            run_cover_code(opt);
        else if (command == "atoms")
            run_atoms(opt);
        else if (command == "nerve-check")
            return run_nerve_check(opt);
        else if (command == "dim-bound")
            run_dim_bound(opt);
        else if (command == "path")
            run_path(opt);
    } catch (const neurotop::Error& e) {
        std::cerr << display_name(opt.input) << ": " << e.what() << '\n';
        if (e.code() == neurotop::errc::internal)
            return 3;
        return neurotop::is_parse_error(e.code()) ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
