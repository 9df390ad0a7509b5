#include "sumod/serialize.hpp"

#include <json.hpp>

#include "sumod/errors.hpp"

namespace sumod {

using nlohmann::json;

namespace {

json witness_value(const std::optional<Witness>& w) {
    if (!w) return nullptr;
    json j;
    j["rows"] = w->rows;
    j["cols"] = w->cols;
    j["determinant"] = w->determinant;
    if (w->zeroed_entry)
        j["zeroed_entry"] = {w->zeroed_entry->first, w->zeroed_entry->second};
    else
        j["zeroed_entry"] = nullptr;
    return j;
}

std::optional<Witness> witness_from_value(const json& j) {
    if (j.is_null()) return std::nullopt;
    Witness w;
    w.rows = j.at("rows").get<IndexSet>();
    w.cols = j.at("cols").get<IndexSet>();
    w.determinant = j.at("determinant").get<Entry>();
    const auto& z = j.at("zeroed_entry");
    if (!z.is_null()) w.zeroed_entry = std::make_pair(z.at(0).get<std::size_t>(), z.at(1).get<std::size_t>());
    return w;
}

json node_value(const SumNode& n) {
    json j;
    j["kind"] = to_string(n.kind);
    if (n.kind == SumNode::Kind::leaf) {
        j["matrix"] = format_matrix(n.block);
        j["incomplete"] = n.incomplete;
        return j;
    }
    j["left"] = node_value(n.left());
    j["right"] = node_value(n.right());
    if (n.kind == SumNode::Kind::sum2) {
        j["left_glue_col"] = n.left_glue_col;
        j["right_glue_row"] = n.right_glue_row;
        j["glue_a"] = n.glue_a;
        j["glue_b"] = n.glue_b;
    }
    return j;
}

SumNode node_from_value(const json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "leaf") {
        SumNode n = SumNode::leaf(parse_matrix(j.at("matrix").get<std::string>()));
        n.incomplete = j.value("incomplete", false);
        return n;
    }
    SumNode n;
    if (kind == "sum1") {
        n.kind = SumNode::Kind::sum1;
    } else if (kind == "sum2") {
        n.kind = SumNode::Kind::sum2;
        n.left_glue_col = j.at("left_glue_col").get<std::size_t>();
        n.right_glue_row = j.at("right_glue_row").get<std::size_t>();
        n.glue_a = j.at("glue_a").get<std::vector<Entry>>();
        n.glue_b = j.at("glue_b").get<std::vector<Entry>>();
    } else {
        throw ParseError("unknown tree node kind '" + kind + "'");
    }
    n.children.push_back(node_from_value(j.at("left")));
    n.children.push_back(node_from_value(j.at("right")));
    return n;
}

json partition_value(const std::optional<RowPartition>& p) {
    if (!p) return nullptr;
    return *p;
}

json dense_block_value(const DenseBlock& d) {
    return json{{"rows", d.rows}, {"cols", d.cols}, {"row_signs", d.row_signs}, {"col_signs", d.col_signs}};
}

}  // namespace

std::string witness_json(const std::optional<Witness>& w) { return witness_value(w).dump(); }

std::string certificate_json(const Certificate& c) {
    json j;
    j["schema"] = kSchema;
    j["property"] = to_string(c.property);
    j["holds"] = c.holds;
    j["witness"] = witness_value(c.witness);
    j["stats"] = {{"subdeterminants", c.stats.subdeterminants},
                  {"zeroings", c.stats.zeroings},
                  {"fast_path", c.stats.fast_path}};
    return j.dump(2);
}

Certificate certificate_from_json(const std::string& text) {
    try {
        json j = json::parse(text);
        if (j.at("schema") != kSchema) throw ParseError("unsupported schema");
        Certificate c;
        const auto prop = j.at("property").get<std::string>();
        if (prop == "tu") {
            c.property = Property::tu;
        } else if (prop == "su") {
            c.property = Property::su;
        } else {
            throw ParseError("unknown property '" + prop + "'");
        }
        c.holds = j.at("holds").get<bool>();
        c.witness = witness_from_value(j.at("witness"));
        const auto& s = j.at("stats");
        c.stats.subdeterminants = s.at("subdeterminants").get<std::uint64_t>();
        c.stats.zeroings = s.at("zeroings").get<std::uint64_t>();
        c.stats.fast_path = s.at("fast_path").get<bool>();
        return c;
    } catch (const json::exception& e) {
        throw ParseError(std::string("certificate: ") + e.what());
    }
}

std::string tree_json(const Decomposition& d) {
    json j;
    j["schema"] = kSchema;
    j["complete"] = d.complete;
    j["row_order"] = d.row_order;
    j["col_order"] = d.col_order;
    j["leaves"] = d.tree.leaf_count();
    j["tree"] = node_value(d.tree);
    return j.dump(2);
}

Decomposition tree_from_json(const std::string& text) {
    try {
        json j = json::parse(text);
        if (j.at("schema") != kSchema) throw ParseError("unsupported schema");
        Decomposition d;
        d.complete = j.at("complete").get<bool>();
        d.row_order = j.at("row_order").get<IndexSet>();
        d.col_order = j.at("col_order").get<IndexSet>();
        d.tree = node_from_value(j.at("tree"));
        return d;
    } catch (const json::exception& e) {
        throw ParseError(std::string("tree: ") + e.what());
    }
}

std::string partition_json(const std::optional<RowPartition>& p, const PartitionReport& report) {
    json j;
    j["schema"] = kSchema;
    j["parts"] = partition_value(p);
    j["verified"] = p.has_value() && report.verified;
    if (report.violation) {
        j["violation"] = {{"column", report.violation->column},
                          {"part", report.violation->part},
                          {"clause", report.violation->clause}};
    } else {
        j["violation"] = nullptr;
    }
    return j.dump(2);
}

std::string corpus_json(std::uint64_t seed, CorpusProfile profile, const std::vector<CorpusEntry>& entries) {
    json j;
    j["schema"] = kSchema;
    j["seed"] = seed;
    j["profile"] = to_string(profile);
    j["generator"] = kCorpusGenerator;
    j["entries"] = json::array();
    for (const auto& e : entries) j["entries"].push_back({{"recipe", e.recipe}, {"matrix", format_matrix(e.matrix)}});
    return j.dump(2);
}

std::string structure_json(const StructureReport& r) {
    json j;
    j["schema"] = kSchema;
    j["dense_block"] = r.block ? dense_block_value(*r.block) : json(nullptr);
    if (r.witness) {
        json w;
        w["witness"] = witness_value(r.witness->witness);
        w["path"] = json::array();
        for (const auto& v : r.witness->path) w["path"].push_back(v.label());
        w["path_rows"] = r.witness->path_rows;
        w["path_cols"] = r.witness->path_cols;
        j["dense_block_witness"] = w;
    } else {
        j["dense_block_witness"] = nullptr;
    }
    if (!r.witness_error.empty()) j["witness_error"] = r.witness_error;
    j["row_partition"] = partition_value(r.row_partition);
    j["col_partition"] = partition_value(r.col_partition);
    if (!r.partition_error.empty()) j["partition_error"] = r.partition_error;
    if (r.final_structure) {
        const auto& f = *r.final_structure;
        json fs;
        fs["holds"] = f.holds();
        fs["row_partition_valid"] = f.row_partition_valid;
        fs["col_partition_valid"] = f.col_partition_valid;
        fs["clause_i"] = f.clause_i;
        fs["clause_ii"] = f.clause_ii;
        fs["clause_iii"] = f.clause_iii;
        fs["blocks"] = json::array();
        for (const auto& b : f.blocks)
            fs["blocks"].push_back({{"row_part", b.row_part}, {"col_part", b.col_part}, {"shape", to_string(b.shape)}});
        j["final_structure"] = fs;
    } else {
        j["final_structure"] = nullptr;
    }
    return j.dump(2);
}

}  // namespace sumod
