#pragma once

#include <cstdint>
#include <string>

#include "ulam/aggregation.hpp"
#include "ulam/graph.hpp"
#include "ulam/reductions.hpp"

namespace ulam {

// Parsed "ULAM v1" file; exactly one of the two instance members is meaningful.
struct InstanceFileData {
  bool bichromatic = false;
  UlamInstance mono;
  BichromaticInstance bi;
};

InstanceFileData parse_instance_text(const std::string& text);
std::string serialize_instance(const UlamInstance& in);
std::string serialize_instance(const BichromaticInstance& in);

struct OvFile {
  std::string pattern;  // quantifier pattern: "eeee" or "eaee"
  OvInput sets;
};

OvFile parse_ov_text(const std::string& text);
std::string serialize_ov(const OvFile& f);

Graph parse_graph_text(const std::string& text);
std::string serialize_graph(const Graph& g);

std::string serialize_certificate(const Certificate& cert);
Certificate parse_certificate_text(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Deterministic pseudo-random members for benchmarking; same seed, same bytes.
UlamInstance generate_random_instance(std::size_t n, std::size_t len, std::uint64_t seed);

}  // namespace ulam
