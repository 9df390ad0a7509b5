#include "sumod/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "sumod/catalog.hpp"
#include "sumod/errors.hpp"
#include "sumod/exactmat.hpp"
#include "sumod/ksum.hpp"
#include "sumod/matroid.hpp"
#include "sumod/serialize.hpp"
#include "sumod/structure.hpp"
#include "sumod/unimodularity.hpp"

namespace sumod::cli {

namespace {

IntMatrix load(const std::string& path) {
    if (path == "-") return read_matrix(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_matrix(in);
}

std::string one_based(const IndexSet& s) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i] + 1;
    out << '}';
    return out.str();
}

void describe(std::ostream& err, const std::string& what, const Witness& w) {
    err << what << ": rows " << one_based(w.rows) << ", cols " << one_based(w.cols);
    if (w.zeroed_entry) err << ", zeroed entry (" << w.zeroed_entry->first + 1 << "," << w.zeroed_entry->second + 1 << ")";
    err << ", determinant " << w.determinant << " (1-based)\n";
}

struct Options {
    std::string property;
    std::string file;
    std::string file_b;
    std::string op;
    std::string profile = "su_small";
    std::uint64_t seed = 1;
    std::size_t count = 50;
    std::size_t max_size = OracleCaps{}.exhaustive;
    std::size_t max_ground = kSeparationCap;
    bool verbose = false;
};

OracleCaps caps_of(const Options& o) {
    OracleCaps caps;
    caps.exhaustive = o.max_size;
    caps.signing_rows = std::max(caps.signing_rows, o.max_size);
    return caps;
}

int do_check(const Options& o, std::ostream& out, std::ostream& err) {
    Property p = o.property == "tu" ? Property::tu : Property::su;
    IntMatrix m = load(o.file);
    Certificate c = check(p, m, caps_of(o));
    out << certificate_json(c) << '\n';
    if (o.verbose) {
        if (c.witness)
            describe(err, std::string(to_string(p)) + " fails", *c.witness);
        else
            err << to_string(p) << " holds\n";
    }
    return c.holds ? kHolds : kFails;
}

int do_witness(const Options& o, std::ostream& out, std::ostream& err) {
    IntMatrix m = load(o.file);
    Certificate c = is_su(m, caps_of(o));
    out << witness_json(c.witness) << '\n';
    if (o.verbose && c.witness) describe(err, c.witness->zeroed_entry ? "not su" : "not tu", *c.witness);
    return c.holds ? kHolds : kFails;
}

int do_compose(const Options& o, std::ostream& out, std::ostream&) {
    IntMatrix a = load(o.file), b = load(o.file_b);
    IntMatrix r;
    if (o.op == "sum1") {
        r = one_sum(a, b);
    } else if (o.op == "sum2") {
        r = two_sum(a, b);
    } else if (o.op == "sum3-delta") {
        r = three_sum(a, b, ThreeSumVariant::delta);
    } else {
        r = three_sum(a, b, ThreeSumVariant::alt);
    }
    write_matrix(out, r);
    return kHolds;
}

int do_decompose(const Options& o, std::ostream& out, std::ostream& err) {
    IntMatrix m = load(o.file);
    Decomposition d = decompose(m, o.max_ground);
    out << tree_json(d) << '\n';
    if (o.verbose) err << d.tree.leaf_count() << " leaves" << (d.complete ? "" : ", incomplete") << '\n';
    return d.complete ? kHolds : kCapExceeded;
}

int do_partition(const Options& o, std::ostream& out, std::ostream& err) {
    IntMatrix m = load(o.file);
    auto p = find_row_partition(m);
    PartitionReport rep;
    if (p) rep = verify_row_partition(m, *p);
    out << partition_json(p, rep) << '\n';
    if (o.verbose) err << (p ? std::to_string(p->size()) + " parts" : std::string("no partition: not su")) << '\n';
    return p ? kHolds : kFails;
}

int do_structure(const Options& o, std::ostream& out, std::ostream& err) {
    IntMatrix m = load(o.file);
    require_signed_unit(m, "structure");
    StructureReport r;
    r.block = find_dense_block(m);
    if (r.block) {
        try {
            r.witness = witness_from_dense_block(m, *r.block, true);
        } catch (const CapExceeded&) {
            throw;
        } catch (const Error& e) {
            r.witness_error = e.what();
        }
    }
    try {
        r.row_partition = find_row_partition(m);
        r.col_partition = find_row_partition(m.transposed());
        if (r.row_partition && r.col_partition && !r.row_partition->empty() && !r.col_partition->empty())
            r.final_structure = verify_final_structure(m, *r.row_partition, *r.col_partition);
    } catch (const CapExceeded& e) {
        r.partition_error = e.what();
    }
    out << structure_json(r) << '\n';
    if (o.verbose && r.witness) describe(err, "dense block witness", r.witness->witness);
    return kHolds;
}

int do_gen(const Options& o, std::ostream& out, std::ostream&) {
    auto profile = corpus_profile_from_string(o.profile);
    if (!profile) throw InvalidArgument("unknown profile '" + o.profile + "'");
    out << corpus_json(o.seed, *profile, gen_corpus(o.seed, *profile, o.count)) << '\n';
    return kHolds;
}

int do_export(const Options& o, std::ostream& out, std::ostream&) {
    IntMatrix m = load(o.file);
    require_signed_unit(m, "export-bg");
    auto block = find_dense_block(m);
    std::vector<BipVertex> path;
    if (block) {
        try {
            path = witness_from_dense_block(m, *block, false).path;
        } catch (const Error&) {
        }
    }
    out << export_dot(m, block, path);
    return kHolds;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Strong unimodularity toolkit", "sumod"};
    app.require_subcommand(1, 1);
    app.add_flag("-v,--verbose", o.verbose, "Print a 1-based summary on stderr");
    app.add_option("--max-size", o.max_size, "Largest min(rows, cols) for the exhaustive oracles")
        ->check(CLI::Range(std::size_t{1}, kMaxExhaustiveOrder));

    auto* check_cmd = app.add_subcommand("check", "Certify TU or SU");
    check_cmd->add_option("property", o.property)->required()->check(CLI::IsMember({"tu", "su"}));
    check_cmd->add_option("file", o.file, "Matrix file, - for stdin")->required();

    auto* witness_cmd = app.add_subcommand("witness", "Print the canonical non-SU witness, or null");
    witness_cmd->add_option("file", o.file)->required();

    auto* compose_cmd = app.add_subcommand("compose", "Compose two matrices");
    compose_cmd->add_option("--op", o.op)
        ->required()
        ->check(CLI::IsMember({"sum1", "sum2", "sum3-delta", "sum3-alt"}));
    compose_cmd->add_option("a", o.file)->required();
    compose_cmd->add_option("b", o.file_b)->required();

    auto* decompose_cmd = app.add_subcommand("decompose", "1-/2-sum decomposition tree");
    decompose_cmd->add_option("file", o.file)->required();
    decompose_cmd->add_option("--max-ground", o.max_ground, "Largest ground set searched for separations")
        ->check(CLI::Range(std::size_t{2}, std::size_t{62}));

    auto* partition_cmd = app.add_subcommand("partition", "Ordered row partition");
    partition_cmd->add_option("file", o.file)->required();

    auto* structure_cmd = app.add_subcommand("structure", "Dense block, witness and block structure");
    structure_cmd->add_option("file", o.file)->required();

    auto* gen_cmd = app.add_subcommand("gen", "Deterministic corpus manifest");
    gen_cmd->add_option("--profile", o.profile)
        ->check(CLI::IsMember({"su_small", "su_composed", "non_su", "tu_random"}));
    gen_cmd->add_option("--seed", o.seed);
    gen_cmd->add_option("--count", o.count);

    auto* export_cmd = app.add_subcommand("export-bg", "Bipartite graph in DOT");
    export_cmd->add_option("file", o.file)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kHolds;
    } catch (const CLI::ParseError& e) {
        err << "sumod: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (check_cmd->parsed()) return do_check(o, out, err);
        if (witness_cmd->parsed()) return do_witness(o, out, err);
        if (compose_cmd->parsed()) return do_compose(o, out, err);
        if (decompose_cmd->parsed()) return do_decompose(o, out, err);
        if (partition_cmd->parsed()) return do_partition(o, out, err);
        if (structure_cmd->parsed()) return do_structure(o, out, err);
        if (gen_cmd->parsed()) return do_gen(o, out, err);
        if (export_cmd->parsed()) return do_export(o, out, err);
    } catch (const CapExceeded& e) {
        err << "sumod: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const std::exception& e) {
        err << "sumod: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace sumod::cli
