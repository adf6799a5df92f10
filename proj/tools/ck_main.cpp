// Command-line front end: generators | closure | identify | square | check.
// Exit codes: 0 ok, 1 check failures, 2 usage, 3 closure bound exceeded.

#include "ck/check.hpp"
#include "ck/json_io.hpp"
#include "ck/square.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

struct CommonOpts {
    int N = 2;
    std::string omega_csv;
    std::string series = "sa";
    std::string field = "R";
    std::string format = "table";
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_site) {
    cmd->add_option("--N", o.N, "CK parameter N (matrix order is N+1)")->check(CLI::Range(1, 16));
    cmd->add_option("--omega", o.omega_csv,
                    "comma-separated rational coefficients w_1..w_N (default: all ones)");
    if (with_site) {
        cmd->add_option("--series", o.series, "sa | sl | sy")
            ->check(CLI::IsMember({"sa", "sl", "sy"}));
        cmd->add_option("--field", o.field, "R | C | Q (H is accepted as an alias for Q)")
            ->check(CLI::IsMember({"R", "C", "Q", "H"}));
    }
    cmd->add_option("--format", o.format, "table | json")
        ->check(CLI::IsMember({"table", "json"}));
    cmd->add_option("--out", o.out_path, "write output to a file instead of stdout");
}

ck::OmegaVector parse_omega(const CommonOpts& o) {
    ck::OmegaVector w =
        o.omega_csv.empty() ? ck::OmegaVector::ones(o.N) : ck::OmegaVector::parse(o.omega_csv);
    if (w.n() != o.N)
        throw CLI::ValidationError("--omega", "expected " + std::to_string(o.N) +
                                                  " comma-separated values");
    return w;
}

int deliver(const CommonOpts& o, const std::string& text) {
    if (o.out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open " << o.out_path << " for writing\n";
        return 2;
    }
    f << text;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Cayley-Klein Lie algebra engine"};
    app.require_subcommand(1);

    CommonOpts gen_o, clo_o, ide_o, sq_o, chk_o;
    std::vector<std::string> closure_labels;
    bool extended = false;
    int depth = 2;

    CLI::App* gen = app.add_subcommand("generators", "print the labeled basis matrices of a site");
    add_common(gen, gen_o, true);

    CLI::App* clo = app.add_subcommand(
        "closure", "Lie-close a generator list (default: the site's minimal generating set)");
    add_common(clo, clo_o, true);
    clo->add_option("labels", closure_labels, "generator labels, e.g. J(0,1) M(0,1)^1");

    CLI::App* ide = app.add_subcommand("identify", "name a site and print its invariants");
    add_common(ide, ide_o, true);

    CLI::App* sq = app.add_subcommand("square", "emit the 3x3 magic square");
    add_common(sq, sq_o, false);
    sq->add_flag("--extended", extended, "append the printed 4x4 extension (N = 1, 2)");

    CLI::App* chk = app.add_subcommand("check", "run the invariant suites");
    chk->add_option("--depth", depth, "largest N exercised by the suites")->check(CLI::Range(1, 4));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            ck::OmegaVector w = parse_omega(gen_o);
            ck::Series s = ck::series_from_name(gen_o.series);
            ck::Field f = ck::field_from_name(gen_o.field);
            auto gens = ck::basis(s, f, gen_o.N, w);
            if (gen_o.format == "json")
                return deliver(gen_o,
                               ck::generators_to_json(s, f, gen_o.N, w, gens).dump(2) + "\n");
            std::string text = std::string(ck::series_name(s)) + "/" + ck::field_name(f) +
                               "  N=" + std::to_string(gen_o.N) + "  omega=" + w.str() + "  (" +
                               std::to_string(gens.size()) + " basis matrices)\n\n";
            for (const auto& g : gens) text += g.label.str() + ":\n" + g.matrix.str() + "\n";
            return deliver(gen_o, text);
        }

        if (clo->parsed()) {
            ck::OmegaVector w = parse_omega(clo_o);
            ck::Series s = ck::series_from_name(clo_o.series);
            ck::Field f = ck::field_from_name(clo_o.field);
            std::vector<ck::LabeledMatrix> gens;
            if (closure_labels.empty()) {
                gens = ck::min_generators(s, f, clo_o.N, w);
            } else {
                for (const auto& ls : closure_labels) {
                    ck::GeneratorLabel l = ck::GeneratorLabel::parse(ls);
                    gens.push_back({l, ck::build_generator(l, clo_o.N, w, f)});
                }
            }
            ck::LieBasis closed = ck::lie_closure_labeled(gens);
            ck::LieBasis full = ck::lie_closure_labeled(ck::basis(s, f, clo_o.N, w));
            bool equals_site = closed.span == full.span;

            if (clo_o.format == "json") {
                nlohmann::json jl = nlohmann::json::array();
                for (const auto& l : closed.labels) jl.push_back(l);
                nlohmann::json j{{"dim", closed.dim()},
                                 {"equals_site_span", equals_site},
                                 {"basis_labels", jl}};
                return deliver(clo_o, j.dump(2) + "\n");
            }
            std::string text = "closure dimension: " + std::to_string(closed.dim()) + "\n";
            text += std::string("equals ") + ck::series_name(s) + "(" +
                    (s == ck::Series::sy ? std::to_string(2 * (clo_o.N + 1))
                                         : std::to_string(clo_o.N + 1)) +
                    "," + ck::field_symbol(f) + ") basis span: " + (equals_site ? "yes" : "no") +
                    "\n";
            text += "basis:";
            for (const auto& l : closed.labels) text += " " + l;
            text += "\n";
            return deliver(clo_o, text);
        }

        if (ide->parsed()) {
            ck::OmegaVector w = parse_omega(ide_o);
            ck::Series s = ck::series_from_name(ide_o.series);
            ck::Field f = ck::field_from_name(ide_o.field);
            ck::AlgebraDescriptor d;
            try {
                d = ck::build_descriptor(s, f, ide_o.N, w);
            } catch (const ck::DependentBasisError& e) {
                std::cerr << "warning: " << e.what()
                          << "; reporting the span of the printed list\n";
                auto closed = ck::lie_closure_labeled(ck::basis(s, f, ide_o.N, w));
                auto sc = ck::structure_constants(closed);
                d.series = s; d.field = f; d.N = ide_o.N; d.omega = w;
                d.dim = static_cast<long>(closed.dim());
                d.sig = ck::signature(ck::killing_form(sc));
                d.chi = ck::character(d.sig);
                auto id = ck::identify(s, f, ide_o.N, w);
                d.standard_name = id.standard_name;
                d.cartan_label = id.cartan_label;
            }
            if (ide_o.format == "json") return deliver(ide_o, ck::descriptor_to_json(d).dump(2) + "\n");
            std::string text = d.standard_name + ", " + d.cartan_label + ", dim " +
                               std::to_string(d.dim) + ", signature " + d.sig.str() +
                               ", character " + std::to_string(d.chi) + "\n";
            return deliver(ide_o, text);
        }

        if (sq->parsed()) {
            ck::OmegaVector w = parse_omega(sq_o);
            ck::MagicSquare square = ck::build_square(sq_o.N, w);
            for (const auto& warn : square.warnings) std::cerr << "warning: " << warn << "\n";
            std::optional<ck::ExtendedSquareMetadata> meta;
            if (extended) meta = ck::extended_square(sq_o.N);
            return deliver(sq_o, ck::emit(square,
                                          sq_o.format == "json" ? ck::EmitFormat::Json
                                                                : ck::EmitFormat::Table,
                                          meta));
        }

        if (chk->parsed()) {
            auto results = ck::run_checks(depth);
            std::size_t failures = 0;
            for (const auto& r : results) {
                std::cout << (r.pass ? "ok   " : "FAIL ") << r.name;
                if (!r.pass) std::cout << "  [" << r.detail << "]";
                std::cout << "\n";
                if (!r.pass) ++failures;
            }
            std::cout << results.size() - failures << "/" << results.size() << " checks passed\n";
            return failures == 0 ? 0 : 1;
        }
    } catch (const ck::ClosureBoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
