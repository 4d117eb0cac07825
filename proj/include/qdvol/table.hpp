#pragma once

#include <string>
#include <vector>

#include "qdvol/strata.hpp"
#include "qdvol/volume.hpp"

namespace qdvol {

// One row of the shipped volume table (data/appendix_b.csv). The CSV
// columns are dim,genus,stratum,num,den,pi_power; the stratum field uses
// space-separated orders with ^k for repeats, e.g. "5 -1" or "4 1^2 -1^6".
struct TableRow {
    int dim = 0;
    int genus = 0;
    StratumSignature stratum;
    Rational coefficient;  // volume = coefficient * pi^pi_power, AEZ convention
    int pi_power = 0;
};

// Throws std::runtime_error on malformed text or on rows whose dim, genus
// or pi_power disagree with the invariants of the parsed signature.
TableRow parse_table_row(const std::string& line);
std::string serialize_table_row(const TableRow& row);

std::vector<TableRow> load_table(const std::string& path);

// Per-row verdicts:
//   PASS     computed volume equals the row exactly
//   FAIL     computed volume differs
//   CONFLICT the same stratum appears elsewhere in the table with a
//            different value (the table is kept verbatim; the computed
//            value is still recorded when available)
//   SKIP     outside the weight cap and no closed form applies
struct RowReport {
    TableRow row;
    std::string status;
    std::string computed;  // "num/den * pi^k" when a value was computed
    std::string detail;    // method used, or the reason for a skip
};

struct VerifyReport {
    std::vector<RowReport> rows;  // same order as the input
    int pass = 0;
    int fail = 0;
    int conflict = 0;
    int skip = 0;
    bool ok() const { return fail == 0; }
};

VerifyReport verify_table(const std::vector<TableRow>& rows, int max_weight,
                          WeightVariant v = WeightVariant::Frobenius);

}  // namespace qdvol
