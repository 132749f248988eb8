// Command-line surface for the braid word metric library. One subcommand per
// operation, text or JSON output, stable exit codes:
//   0 success / exact / certified     1 not equivalent
//   2 unknown or inconclusive         64 usage error
//   65 data error                     70 internal consistency failure

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "braidmetric/braid.hpp"
#include "braidmetric/certify.hpp"
#include "braidmetric/derivation.hpp"
#include "braidmetric/json_io.hpp"
#include "braidmetric/metric.hpp"
#include "braidmetric/names.hpp"
#include "braidmetric/render.hpp"

namespace bm = braidmetric;

namespace {

constexpr int kExitNotEquivalent = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitInternal = 70;

std::string resolve_word_text(const std::string& arg, bool& used_stdin) {
    if (arg != "-") return arg;
    if (used_stdin) throw bm::DataError("only one word argument may read from stdin");
    used_stdin = true;
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
}

std::pair<bm::BraidWord, bm::BraidWord> parse_word_pair(const std::string& text1,
                                                        const std::string& text2,
                                                        std::optional<int> n) {
    bm::BraidWord a = bm::parse_word(text1, n);
    bm::BraidWord b = bm::parse_word(text2, n);
    if (!n && a.strand_count() != b.strand_count()) {
        // no explicit count: put both words on the wider default
        int common = std::max(a.strand_count(), b.strand_count());
        a = bm::parse_word(text1, common);
        b = bm::parse_word(text2, common);
    }
    return {std::move(a), std::move(b)};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw bm::DataError("cannot write '" + path + "'");
    out << content;
}

void emit(const std::string& path_or_empty, const std::string& content) {
    if (path_or_empty.empty())
        std::cout << content;
    else
        write_file(path_or_empty, content);
}

std::vector<std::pair<bm::NameEntry, bm::NameEntry>> parse_highlights(
    const std::vector<std::string>& specs) {
    std::vector<std::pair<bm::NameEntry, bm::NameEntry>> pairs;
    for (const std::string& spec : specs) {
        std::size_t split = spec.find('/');
        if (split == std::string::npos)
            throw bm::DataError("highlight '" + spec + "' must be NAME/NAME");
        pairs.emplace_back(bm::parse_name_entry(spec.substr(0, split)),
                           bm::parse_name_entry(spec.substr(split + 1)));
    }
    return pairs;
}

int print_distance(const bm::DistanceResult& result, const std::string& format,
                   const std::string& witness_out) {
    if (result.is_exact() && !witness_out.empty() && result.witness)
        bm::save_derivation_file(witness_out, *result.witness);
    if (format == "json") {
        std::cout << bm::to_json(result).dump() << '\n';
    } else {
        switch (result.status) {
            case bm::DistanceStatus::exact:
                std::cout << "exact " << result.distance << '\n';
                break;
            case bm::DistanceStatus::not_equivalent:
                std::cout << "not_equivalent\n";
                break;
            case bm::DistanceStatus::unknown:
                std::cout << "unknown " << result.reason << '\n';
                break;
        }
    }
    if (result.status == bm::DistanceStatus::not_equivalent) return kExitNotEquivalent;
    if (result.status == bm::DistanceStatus::unknown) return kExitUnknown;
    return 0;
}

int print_certificate(const bm::Certificate& cert, const std::string& format) {
    if (format == "json")
        std::cout << bm::to_json(cert).dump() << '\n';
    else if (cert.certified)
        std::cout << "certified_optimal " << cert.distance << " (" << to_string(cert.method)
                  << ")\n";
    else
        std::cout << "inconclusive gap=" << cert.gap << '\n';
    return cert.certified ? 0 : kExitUnknown;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"crossing names, exact rewriting distance and optimality certificates "
                 "for braid words"};
    app.require_subcommand(1);
    app.fallthrough();
    bool used_stdin = false;

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    int n_value = 0;
    CLI::Option* n_opt =
        app.add_option("--n", n_value, "strand count (default: inferred from the word)");
    auto n_arg = [&]() -> std::optional<int> {
        return n_opt->count() ? std::optional<int>(n_value) : std::nullopt;
    };

    bm::SearchLimits limits;
    app.add_option("--max-states", limits.max_states, "search state cap")
        ->envname("BRAIDMETRIC_MAX_STATES");
    app.add_option("--max-depth", limits.max_depth, "search depth cap");
    std::size_t max_len = 0;
    app.add_option("--max-len", max_len,
                   "intermediate word length cap for the general search "
                   "(default: longest input + 2)");

    // names <word>
    auto* cmd_names = app.add_subcommand("names", "print the crossing-name sequence of a word");
    std::string names_word;
    bool names_signed = false;
    cmd_names->add_option("word", names_word, "word text, or - for stdin")->required();
    cmd_names->add_flag("--signed", names_signed,
                        "force the signed sequence (automatic for words with inverses)");

    // distance <word1> <word2>
    auto* cmd_distance =
        app.add_subcommand("distance", "exact rewriting distance between equivalent words");
    std::string dist_word1, dist_word2, dist_witness_out;
    bool dist_general = false;
    cmd_distance->add_option("word1", dist_word1)->required();
    cmd_distance->add_option("word2", dist_word2)->required();
    cmd_distance->add_flag("--general", dist_general,
                           "allow free insertions/deletions (arbitrary words)");
    cmd_distance->add_option("--witness-out", dist_witness_out,
                             "write the witness derivation to this file");

    // lb <word1> <word2>
    auto* cmd_lb = app.add_subcommand("lb", "inversion-counting distance lower bound");
    std::string lb_word1, lb_word2;
    cmd_lb->add_option("word1", lb_word1)->required();
    cmd_lb->add_option("word2", lb_word2)->required();

    // family <kind>
    auto* cmd_family = app.add_subcommand("family", "print a quadratic-distance family word");
    std::string family_kind;
    int family_m = 1;
    cmd_family->add_option("kind", family_kind, "prop1_left | prop1_right | lcm_right")
        ->required()
        ->check(CLI::IsMember({"prop1_left", "prop1_right", "lcm_right"}));
    cmd_family->add_option("--m", family_m, "family parameter")->required();

    // derive <grid|lcm>
    auto* cmd_derive = app.add_subcommand("derive", "produce a distance-4m^2 derivation");
    std::string derive_kind, derive_out;
    int derive_m = 1;
    cmd_derive->add_option("kind", derive_kind, "grid | lcm")
        ->required()
        ->check(CLI::IsMember({"grid", "lcm"}));
    cmd_derive->add_option("--m", derive_m, "family parameter")->required();
    cmd_derive->add_option("--out", derive_out, "output file (default: stdout)");

    // certify <file>
    auto* cmd_certify = app.add_subcommand("certify", "check a derivation file for optimality");
    std::string certify_file;
    cmd_certify->add_option("file", certify_file, "derivation JSON file")->required();

    // render braid <word> | render derivation <file>
    auto* cmd_render = app.add_subcommand("render", "emit SVG diagrams");
    cmd_render->require_subcommand(1);
    auto* render_braid = cmd_render->add_subcommand("braid", "labelled braid diagram");
    auto* render_chart = cmd_render->add_subcommand("derivation", "separatrix chart");
    std::string render_word, render_file, render_out;
    bool render_labels = false;
    std::vector<std::string> highlight_specs;
    render_braid->add_option("word", render_word, "word text, or - for stdin")->required();
    render_chart->add_option("file", render_file, "derivation JSON file")->required();
    for (auto* sub : {render_braid, render_chart}) {
        sub->add_option("--out", render_out, "output SVG file (default: stdout)");
        sub->add_option("--highlight", highlight_specs,
                        "name pair N(p,q,a)/N(r,s,b) to mark; repeatable");
    }
    render_braid->add_flag("--labels", render_labels, "print the crossing name above each column");
    bm::RenderOptions render_opts;
    for (auto* sub : {render_braid, render_chart}) {
        sub->add_option("--cell-width", render_opts.cell_width)->check(CLI::PositiveNumber);
        sub->add_option("--cell-height", render_opts.cell_height)->check(CLI::PositiveNumber);
    }

    // randpair <word>
    auto* cmd_randpair =
        app.add_subcommand("randpair", "random word equivalent to the input, with its trace");
    std::string randpair_word, randpair_out;
    int randpair_steps = 0;
    std::uint64_t randpair_seed = 0;
    cmd_randpair->add_option("word", randpair_word, "word text, or - for stdin")->required();
    cmd_randpair->add_option("--steps", randpair_steps, "number of random moves")->required();
    cmd_randpair->add_option("--seed", randpair_seed, "RNG seed")->required();
    cmd_randpair->add_option("--derivation-out", randpair_out,
                             "write the applied move trace to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_names->parsed()) {
            bm::BraidWord w = bm::parse_word(resolve_word_text(names_word, used_stdin), n_arg());
            bm::NameSequence seq = (names_signed || !w.is_positive())
                                       ? bm::signed_name_sequence(w)
                                       : bm::name_sequence(w);
            if (format == "json")
                std::cout << bm::to_json(seq).dump() << '\n';
            else if (!seq.entries.empty())
                std::cout << seq.str() << '\n';
            return 0;
        }

        if (cmd_distance->parsed()) {
            auto [a, b] = parse_word_pair(resolve_word_text(dist_word1, used_stdin),
                                          resolve_word_text(dist_word2, used_stdin), n_arg());
            bm::DistanceResult result;
            if (dist_general) {
                limits.max_word_length =
                    max_len ? max_len : std::max(a.length(), b.length()) + 2;
                result = bm::exact_distance_general(a, b, limits);
            } else {
                result = bm::exact_distance(a, b, limits);
            }
            return print_distance(result, format, dist_witness_out);
        }

        if (cmd_lb->parsed()) {
            auto [a, b] = parse_word_pair(resolve_word_text(lb_word1, used_stdin),
                                          resolve_word_text(lb_word2, used_stdin), n_arg());
            bm::LowerBoundReport report = bm::lower_bound(a, b);
            if (format == "json") {
                std::cout << bm::to_json(report).dump() << '\n';
            } else if (!report.multiset_equal) {
                std::cout << "multiset_equal=false\n";
            } else {
                std::cout << "multiset_equal=true disjoint=" << report.disjoint_inversions
                          << " shared=" << report.shared_inversions
                          << " median=" << report.median_inversions
                          << " bound_simple=" << report.bound_simple << " bound=" << report.bound
                          << '\n';
            }
            return report.multiset_equal ? 0 : kExitNotEquivalent;
        }

        if (cmd_family->parsed()) {
            bm::BraidWord w = bm::family_word(bm::family_kind_from_string(family_kind), family_m);
            if (format == "json")
                std::cout << bm::to_json(w).dump() << '\n';
            else
                std::cout << bm::format_word(w) << '\n';
            return 0;
        }

        if (cmd_derive->parsed()) {
            std::optional<bm::Derivation> derivation;
            if (derive_kind == "grid") {
                derivation = bm::grid_derivation(derive_m);
            } else {
                derivation = bm::lcm_derivation(derive_m, limits);
                if (!derivation) {
                    std::cerr << "lcm derivation search hit its limits\n";
                    return kExitUnknown;
                }
            }
            std::string text = bm::to_json(*derivation).dump(2) + "\n";
            emit(derive_out, text);
            return 0;
        }

        if (cmd_certify->parsed()) {
            bm::Derivation d = bm::load_derivation_file(certify_file);
            return print_certificate(bm::optimality_certificate(d), format);
        }

        if (render_braid->parsed()) {
            bm::BraidWord w = bm::parse_word(resolve_word_text(render_word, used_stdin), n_arg());
            render_opts.show_labels = render_labels;
            render_opts.highlight_pairs = parse_highlights(highlight_specs);
            emit(render_out, bm::render_braid_diagram(w, render_opts));
            return 0;
        }

        if (render_chart->parsed()) {
            bm::Derivation d = bm::load_derivation_file(render_file);
            render_opts.highlight_pairs = parse_highlights(highlight_specs);
            emit(render_out, bm::render_derivation_chart(d, render_opts));
            return 0;
        }

        if (cmd_randpair->parsed()) {
            bm::BraidWord w =
                bm::parse_word(resolve_word_text(randpair_word, used_stdin), n_arg());
            bm::RandomPair pair = bm::random_equivalent_pair(w, randpair_steps, randpair_seed);
            if (!randpair_out.empty()) bm::save_derivation_file(randpair_out, pair.derivation);
            if (format == "json") {
                bm::Json j{{"word", bm::to_json(pair.word)},
                           {"derivation", bm::to_json(pair.derivation)}};
                std::cout << j.dump() << '\n';
            } else {
                std::cout << bm::format_word(pair.word) << '\n';
            }
            return 0;
        }
    } catch (const bm::ConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << '\n';
        return kExitInternal;
    } catch (const bm::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const bm::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << '\n';
        return kExitInternal;
    }

    std::cerr << "no subcommand\n";
    return kExitUsage;
}
