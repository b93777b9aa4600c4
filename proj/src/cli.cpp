#include "bitonic/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <limits>
#include <optional>

#include <CLI11.hpp>

#include "bitonic/faces.hpp"
#include "bitonic/generator.hpp"
#include "bitonic/graph_io.hpp"
#include "bitonic/layout.hpp"
#include "bitonic/ordering.hpp"
#include "bitonic/splitting.hpp"
#include "bitonic/validate.hpp"

namespace bitonic {

namespace {

struct Options {
    std::string graph_file, drawing_file, out_file, svg_file, mode = "poly", format = "text";
    bool all_transitive = false, emit_graph = false, json = false, validate = false;
    int scale = 20;
    std::size_t n = 2, repeats = 1;
    std::uint64_t seed = 1;
    std::vector<double> mix;
    std::vector<std::size_t> sizes;
};

void emit(const Options& o, std::ostream& out, const std::string& text) {
    if (o.out_file.empty()) out << text;
    else write_file(o.out_file, text);
}

int run_check(const Options& o, std::ostream& out) {
    const auto g = parse_graph(read_file(o.graph_file));
    const auto result = find_bitonic_ordering(g);
    if (const auto* w = std::get_if<RejectionWitness>(&result)) {
        out << format_witness(*w);
        return kExitRejected;
    }
    out << "accept\n";
    return kExitOk;
}

int run_order(const Options& o, std::ostream& out) {
    const auto g = parse_graph(read_file(o.graph_file));
    const auto result = find_bitonic_ordering(g);
    if (const auto* w = std::get_if<RejectionWitness>(&result)) {
        out << format_witness(*w);
        return kExitRejected;
    }
    emit(o, out, format_ordering(std::get<BitonicOrdering>(result)));
    return kExitOk;
}

int run_split(const Options& o, std::ostream& out) {
    const auto g = parse_graph(read_file(o.graph_file));
    const FaceIndex fi = compute_faces(g);
    const SplitPlan plan = o.all_transitive ? transitive_split_plan(g, fi) : minimum_split_plan(g, fi);
    std::string text = format_plan(g, plan);
    if (o.emit_graph) text += format_split_result(apply_splits(g, plan));
    emit(o, out, text);
    return kExitOk;
}

int run_draw(const Options& o, std::ostream& out, std::ostream& err) {
    const auto g = parse_graph(read_file(o.graph_file));
    PolylineDrawing d;
    if (o.mode == "straight") {
        const auto result = find_bitonic_ordering(g);
        if (const auto* w = std::get_if<RejectionWitness>(&result)) {
            err << "no straight-line drawing without splits: " << format_witness(*w);
            return kExitRejected;
        }
        d = to_polyline(g, draw_straightline(g, std::get<BitonicOrdering>(result)));
    } else {
        PolylineOptions opt;
        opt.strategy = o.all_transitive ? SplitStrategy::AllTransitive : SplitStrategy::Minimum;
        d = draw_polyline(g, opt);
    }
    emit(o, out, format_drawing(g, d));
    if (!o.svg_file.empty()) write_file(o.svg_file, emit_svg(g, d, o.scale));
    return kExitOk;
}

int run_validate(const Options& o, std::ostream& out) {
    const auto g = parse_graph(read_file(o.graph_file));
    const auto d = parse_drawing(read_file(o.drawing_file), g);
    const auto mode = o.mode == "straight" ? DrawingMode::StraightLine : DrawingMode::Polyline;
    ValidationReport rep = check_upward_planar(g, d);
    const bool bounds = check_bounds(rep, g.vertex_count(), mode);
    if (!bounds) rep.violations.push_back("drawing exceeds the size or bend limits");
    out << (o.json ? rep.to_json() : rep.to_text());
    return rep.ok() ? kExitOk : kExitRejected;
}

GeneratorConfig generator_config(const Options& o, std::size_t n) {
    GeneratorConfig cfg;
    cfg.n_target = n;
    cfg.seed = o.seed;
    if (!o.mix.empty()) {
        if (o.mix.size() != 3) throw std::invalid_argument("--mix takes three weights");
        std::copy(o.mix.begin(), o.mix.end(), cfg.op_mix.begin());
    }
    return cfg;
}

int run_gen(const Options& o, std::ostream& out) {
    const GeneratorConfig cfg = generator_config(o, o.n);
    const auto g = generate_random_st_graph(cfg);
    emit(o, out, o.format == "json" ? to_json(g) : generator_header(cfg) + to_text(g));
    return kExitOk;
}

int run_bench(const Options& o, std::ostream& out) {
    std::string csv = "n,edges,splits,bends,width,height,ms_total\n";
    for (std::size_t n : o.sizes) {
        const auto g = generate_random_st_graph(generator_config(o, n));
        double best = std::numeric_limits<double>::infinity();
        std::optional<PolylineRun> run;
        for (std::size_t r = 0; r < std::max<std::size_t>(1, o.repeats); ++r) {
            const auto start = std::chrono::steady_clock::now();
            PolylineRun current = run_polyline_pipeline(g);
            const auto stop = std::chrono::steady_clock::now();
            best = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
            run = std::move(current);
        }
        const auto rep = check_upward_planar(g, run->drawing);
        if (o.validate && (!rep.ok() || !check_bounds(rep, n, DrawingMode::Polyline)))
            throw std::runtime_error("bench: invalid drawing for n = " + std::to_string(n));
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.3f", best);
        csv += std::to_string(n) + ',' + std::to_string(g.edge_count()) + ',' +
               std::to_string(run->plan.split_edges.size()) + ',' + std::to_string(run->drawing.bend_count()) + ',' +
               std::to_string(rep.width) + ',' + std::to_string(rep.height) + ',' + ms + '\n';
    }
    emit(o, out, csv);
    return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Bitonic st-orderings and upward planar drawings of planar st-graphs"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "Decide whether the graph admits a bitonic st-ordering");
    check->add_option("graph", o.graph_file, "Graph file")->required();

    auto* order = app.add_subcommand("order", "Print a bitonic st-ordering and its augmentation edges");
    order->add_option("graph", o.graph_file, "Graph file")->required();
    order->add_option("-o,--out", o.out_file, "Output file");

    auto* split = app.add_subcommand("split", "Print a minimum set of edges to split");
    split->add_option("graph", o.graph_file, "Graph file")->required();
    split->add_flag("--all-transitive", o.all_transitive, "Split every transitive edge instead");
    split->add_flag("--emit-graph", o.emit_graph, "Also print the split graph");
    split->add_option("-o,--out", o.out_file, "Output file");

    auto* draw = app.add_subcommand("draw", "Compute an upward planar drawing");
    draw->add_option("graph", o.graph_file, "Graph file")->required();
    draw->add_option("--mode", o.mode, "straight or poly")->check(CLI::IsMember({"straight", "poly"}));
    draw->add_flag("--all-transitive", o.all_transitive, "Split every transitive edge (poly mode)");
    draw->add_option("--svg", o.svg_file, "Also write an SVG rendering");
    draw->add_option("--scale", o.scale, "SVG pixels per grid unit")->check(CLI::PositiveNumber);
    draw->add_option("-o,--out", o.out_file, "Output file");

    auto* validate = app.add_subcommand("validate", "Check a drawing for upwardness, planarity and size");
    validate->add_option("graph", o.graph_file, "Graph file")->required();
    validate->add_option("drawing", o.drawing_file, "Drawing file")->required();
    validate->add_option("--mode", o.mode, "straight or poly")->check(CLI::IsMember({"straight", "poly"}));
    validate->add_flag("--json", o.json, "JSON report");

    auto* gen = app.add_subcommand("gen", "Generate a random planar st-graph");
    gen->add_option("--n", o.n, "Number of vertices")->required()->check(CLI::Range(2, 100000000));
    gen->add_option("--seed", o.seed, "Seed");
    gen->add_option("--mix", o.mix, "Weights of vertex insertion, chord insertion, edge split")->expected(3);
    gen->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    gen->add_option("-o,--out", o.out_file, "Output file");

    auto* bench = app.add_subcommand("bench", "Time the poly-line pipeline on generated graphs");
    bench->add_option("--sizes", o.sizes, "Comma-separated vertex counts")->required()->delimiter(',');
    bench->add_option("--seed", o.seed, "Seed");
    bench->add_option("--repeats", o.repeats, "Runs per size; the fastest is reported");
    bench->add_flag("--validate", o.validate, "Fail unless every drawing validates");
    bench->add_option("-o,--out", o.out_file, "Output file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.get_name() << ": " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        if (check->parsed()) return run_check(o, out);
        if (order->parsed()) return run_order(o, out);
        if (split->parsed()) return run_split(o, out);
        if (draw->parsed()) return run_draw(o, out, err);
        if (validate->parsed()) return run_validate(o, out);
        if (gen->parsed()) return run_gen(o, out);
        if (bench->parsed()) return run_bench(o, out);
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cli_main(args, std::cout, std::cerr);
}

}  // namespace bitonic
