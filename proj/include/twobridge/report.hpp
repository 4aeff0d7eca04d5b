#pragma once

// JSON documents for each operation, shared by the C API and the CLI.

#include <cstdint>
#include <optional>
#include <string>

#include "twobridge/diagram.hpp"
#include "twobridge/farey.hpp"
#include "twobridge/oracle.hpp"
#include "twobridge/word.hpp"

namespace twobridge::report {

std::string relator(const Slope& r);
std::string sseq(const Slope& r);
std::string decompose(const Slope& r);
std::string pieces(const Slope& r, int max_n);
std::string check_sc(const Slope& r);
std::string reduce(const Slope& r, const Slope& s);
std::string tau(std::int64_t p, const Slope& s);
std::string decide(std::int64_t p, const Slope& s, const Slope& s2, std::optional<DiagramFormat> certificate);
std::string oracle(std::int64_t p, const Word& w1, const Word& w2, const OracleBudget& budget, int max_degree);
std::string validate(const AnnularDiagram& diagram, std::int64_t p);

} // namespace twobridge::report
