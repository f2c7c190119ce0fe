// rotnum: command-line front end for the rotation-number engine.
//
// Exit codes: 0 ok, 1 parse error, 2 validation error, 3 unresolved rotation
// number, 4 relator not satisfied or lift obstruction.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rotnum/error.hpp"
#include "rotnum/monotone.hpp"
#include "rotnum/pl_homeo.hpp"
#include "rotnum/surface.hpp"
#include "rotnum/ziggurat.hpp"

namespace {

using namespace rotnum;

constexpr const char* kFormats = R"(Formats:
  rational      "p/q" or an integer                          e.g. 3/2, -1, 0
  config        letters a-z, numbered by first appearance    e.g. xyxy
  word          letters a-z, ' marks an inverse; letters are
                numbered alphabetically (f=0, g=1)            e.g. fgffg
  PL map        "pl: b0→v0, b1→v1, ..." ("->" also accepted),
                or "rot: p/q" for a translation              e.g. pl: 0→0, 1/2→3/4
  rep file      "genus: g" then one "a1: <PL map>" line per
                generator a1, b1, ..., ag, bg                e.g. genus: 2 / a1: rot: 1/2 / ...
  grid CSV      header "s,t,R", rows of exact fractions      e.g. 1/2,1/2,3/2
  fingerprint   "# genus: g", "# radius: r", a "gen,rot" block, then a
                "word1,word2,tau" block                      e.g. a1,b1',0

Exit codes: 0 ok, 1 parse, 2 validation, 3 not resolved, 4 relator/lift obstruction.)";

int exit_code(Errc code) {
    switch (code) {
        case Errc::Parse: return 1;
        case Errc::NotResolved: return 3;
        case Errc::RelatorNotSatisfied:
        case Errc::LiftObstruction: return 4;
        default: return 2;
    }
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
    if (out.empty()) throw Error(Errc::Parse, "empty rational list");
    return out;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::Parse, "cannot open '" + path + "'");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::InvalidArgument, "cannot write '" + path + "'");
    return out;
}

DetectOptions detect_options(std::int64_t qmax) {
    DetectOptions o;
    o.max_period = qmax;
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rotation numbers, ziggurats and surface-group invariants"};
    app.footer(kFormats);
    app.require_subcommand(1);

    // rot-word
    std::string config_text, rots_text, word_text;
    auto* rot_word = app.add_subcommand("rot-word", "rotation number of a word in maximal monotone maps");
    rot_word->add_option("--config", config_text, "cyclic order of the periodic sets, e.g. xyxy")->required();
    rot_word->add_option("--rots", rots_text, "rotation number per config letter, e.g. 1/2,1/2")->required();
    rot_word->add_option("--word", word_text, "positive word, e.g. fg")->required();

    // rw
    bool want_inf = false;
    auto* rw = app.add_subcommand("rw", "extremal rotation number R_w(s_1, ..., s_n)");
    rw->add_option("--word", word_text, "positive word, e.g. fgffg")->required();
    rw->add_option("--rots", rots_text, "one rational per letter, e.g. 1/2,1/3")->required();
    rw->add_flag("--inf", want_inf, "print the infimum -R_w(-s) instead");

    // rfg
    std::string s_text, t_text;
    auto* rfg = app.add_subcommand("rfg", "closed-form R_fg(s, t)");
    rfg->add_option("s", s_text, "rational s")->required();
    rfg->add_option("t", t_text, "rational t")->required();

    // comm-bound
    auto* comm = app.add_subcommand("comm-bound", "bound for rot[f, g] when rot(f) = s (or 'irrational')");
    comm->add_option("s", s_text, "rational s or 'irrational'")->required();

    // mw-bound
    int genus = 0;
    bool show_chain = false;
    auto* mw = app.add_subcommand("mw-bound", "Milnor-Wood bound 2g-2 via the commutator chain");
    mw->add_option("--genus", genus, "genus g >= 2")->required();
    mw->add_flag("--chain", show_chain, "also print the bound after each of the first g-1 commutators");

    // ziggurat
    int denom = 0, jobs = 1;
    std::string csv_path, pgm_path;
    auto* zig = app.add_subcommand("ziggurat", "R_w over the Farey grid of denominator <= D");
    zig->add_option("--word", word_text, "2-letter positive word")->required();
    zig->add_option("--denom", denom, "denominator bound D >= 1")->required();
    zig->add_option("--csv", csv_path, "CSV output path (default: stdout)");
    zig->add_option("--pgm", pgm_path, "PGM heightmap output path");
    zig->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    // pgm
    std::string in_path, out_path;
    auto* pgm = app.add_subcommand("pgm", "render a grid CSV as a PGM heightmap");
    pgm->add_option("--csv", in_path, "grid CSV written by 'ziggurat'")->required();
    pgm->add_option("--out", out_path, "PGM output path")->required();

    // detect
    std::string map_text, map2_text;
    std::int64_t qmax = 16;
    auto* detect = app.add_subcommand("detect", "rotation number of a PL lift (exact or certified interval)");
    detect->add_option("--map", map_text, "PL map, e.g. 'rot: 2/5'")->required();
    detect->add_option("--qmax", qmax, "largest period searched")->check(CLI::PositiveNumber);

    // tau
    auto* tau_cmd = app.add_subcommand("tau", "tau(f, g) = rot(fg) - rot(f) - rot(g)");
    tau_cmd->add_option("--f", map_text, "PL map f")->required();
    tau_cmd->add_option("--g", map2_text, "PL map g")->required();
    tau_cmd->add_option("--qmax", qmax, "largest period searched")->check(CLI::PositiveNumber);

    // euler
    std::string rep_path;
    auto* euler = app.add_subcommand("euler", "Euler number of a representation file");
    euler->add_option("rep", rep_path, "rep file")->required();

    // fingerprint
    int radius = 1;
    auto* fp = app.add_subcommand("fingerprint", "semi-conjugacy fingerprint of a representation file");
    fp->add_option("rep", rep_path, "rep file")->required();
    fp->add_option("--radius", radius, "word length bound")->check(CLI::PositiveNumber);
    fp->add_option("--qmax", qmax, "largest period searched")->check(CLI::PositiveNumber);
    fp->add_option("--out", out_path, "CSV output path (default: stdout)");

    // compare
    std::string fp2_path;
    auto* cmp = app.add_subcommand("compare", "compare two fingerprint files");
    cmp->add_option("first", in_path, "fingerprint CSV")->required();
    cmp->add_option("second", fp2_path, "fingerprint CSV")->required();

    // census
    int k = 1;
    auto* census = app.add_subcommand("census", "generator rotation vectors of the k-fold lifts");
    census->add_option("--genus", genus, "genus g >= 2")->required();
    census->add_option("--k", k, "cover degree, must divide 2g-2")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        std::ostream& out = std::cout;
        if (*rot_word) {
            auto config = ZPeriodicConfig::parse(config_text);
            auto rots = parse_rational_list(rots_text);
            auto word = Word::parse(word_text);
            MaxMapSystem system(config, rots);
            out << system.rot(word) << '\n';
        } else if (*rw) {
            auto word = Word::parse(word_text);
            auto rots = parse_rational_list(rots_text);
            out << (want_inf ? extremal_rot_inf(word, rots) : extremal_rot(word, rots)) << '\n';
        } else if (*rfg) {
            out << closed_form_rfg(Rational::parse(s_text), Rational::parse(t_text)) << '\n';
        } else if (*comm) {
            out << (s_text == "irrational" ? commutator_rot_bound(Irrational{})
                                           : commutator_rot_bound(Rational::parse(s_text)))
                << '\n';
        } else if (*mw) {
            auto chain = milnor_wood_chain(genus);
            if (show_chain)
                for (std::size_t i = 0; i < chain.partial_bounds.size(); ++i)
                    out << "after " << i + 1 << ": " << chain.partial_bounds[i] << '\n';
            out << chain.bound << '\n';
        } else if (*zig) {
            auto grid = ziggurat_grid(Word::parse(word_text), denom, jobs);
            if (csv_path.empty()) {
                write_grid_csv(out, grid);
            } else {
                auto f = open_output(csv_path);
                write_grid_csv(f, grid);
            }
            if (!pgm_path.empty()) {
                auto f = open_output(pgm_path);
                write_grid_pgm(f, grid);
            }
        } else if (*pgm) {
            auto in = open_input(in_path);
            auto rows = read_grid_csv(in);
            auto f = open_output(out_path);
            write_grid_pgm(f, rows);
        } else if (*detect) {
            auto r = detect_rational_rot(PLLift::parse(map_text), detect_options(qmax));
            out << r.str() << '\n';
            if (!r.resolved()) return exit_code(Errc::NotResolved);
        } else if (*tau_cmd) {
            out << tau(PLLift::parse(map_text), PLLift::parse(map2_text), detect_options(qmax)) << '\n';
        } else if (*euler) {
            auto in = open_input(rep_path);
            out << euler_number(SurfaceRep::read(in)) << '\n';
        } else if (*fp) {
            auto in = open_input(rep_path);
            auto print = fingerprint(SurfaceRep::read(in), radius, detect_options(qmax));
            if (out_path.empty()) {
                write_fingerprint_csv(out, print);
            } else {
                auto f = open_output(out_path);
                write_fingerprint_csv(f, print);
            }
        } else if (*cmp) {
            auto a = open_input(in_path);
            auto b = open_input(fp2_path);
            auto result = compare_fingerprints(read_fingerprint_csv(a), read_fingerprint_csv(b));
            out << (result.distinguished ? "distinguished: " + result.witness : std::string("inconclusive")) << '\n';
        } else if (*census) {
            auto c = lift_census(genus, k);
            out << "# genus " << c.genus << ", k " << c.k << ", euler " << c.euler << ", "
                << c.rot_vectors.size() << " classes\n";
            for (const auto& v : c.rot_vectors) {
                for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
                out << '\n';
            }
        }
    } catch (const Error& e) {
        std::cerr << "rotnum: " << e.what() << '\n';
        return exit_code(e.code());
    }
    return 0;
}
