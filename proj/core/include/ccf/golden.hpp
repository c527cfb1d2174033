#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ccf/oracle.hpp"

namespace ccf {

/// One oracle-certified reference case. kind "moment" integrates a shifted
/// Chebyshev polynomial of degree j on [0,1]; kind "integ"/"bound" integrate
/// a registry function on [0,b].
struct GoldenCase {
    std::string id;
    IntegralSpec spec;
    std::string fid;  // registry id, or "Tj" with degree below
    int cheb_degree = -1;
    std::string family; // moment | integ | bound
};

struct GoldenRow {
    std::string id;
    double b, alpha, m, omega;
    Kernel kernel;
    double value;
    double err_est;
};

/// The fixed case registry (moment grid, CLI spot cases, bound-domination
/// family, sweep anchors). Order is deterministic.
std::vector<GoldenCase> golden_registry();

/// Evaluate every registry case with the oracle and write one line per case:
///   id, b, alpha, m, omega, kernel, value, err_est
/// in full round-trip precision. Byte-identical across runs.
void write_golden_file(std::ostream& out, const OracleConfig& cfg = {});

std::vector<GoldenRow> read_golden_file(std::istream& in);

/// Convenience: look up a row by id; throws if absent.
const GoldenRow& golden_lookup(const std::vector<GoldenRow>& rows, const std::string& id);

} // namespace ccf
