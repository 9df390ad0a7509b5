#ifndef SUMOD_SERIALIZE_HPP
#define SUMOD_SERIALIZE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumod/catalog.hpp"
#include "sumod/ksum.hpp"
#include "sumod/structure.hpp"
#include "sumod/unimodularity.hpp"

namespace sumod {

/// Version tag carried by every JSON document.
inline constexpr const char* kSchema = "sumod/1";

/*
 * JSON documents use 0-based indices and sorted object keys, so identical
 * values always serialize to identical bytes. Matrices are embedded as their
 * text form ("m n\n" followed by the rows).
 */
std::string witness_json(const std::optional<Witness>& w);
std::string certificate_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);

std::string tree_json(const Decomposition& d);
Decomposition tree_from_json(const std::string& text);

std::string partition_json(const std::optional<RowPartition>& p, const PartitionReport& report);

std::string corpus_json(std::uint64_t seed, CorpusProfile profile, const std::vector<CorpusEntry>& entries);

/// The `structure` verb payload.
struct StructureReport {
    std::optional<DenseBlock> block;
    std::optional<DenseBlockWitness> witness;
    std::string witness_error;  ///< why no witness was built (empty otherwise)
    std::optional<RowPartition> row_partition;
    std::optional<RowPartition> col_partition;
    std::optional<FinalStructureReport> final_structure;
    std::string partition_error;
};

std::string structure_json(const StructureReport& r);

}  // namespace sumod

#endif
