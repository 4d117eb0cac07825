#include "qdvol/table.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qdvol {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& s, const char* what) {
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error(std::string("bad ") + what + ": '" + s + "'");
    }
    if (pos != s.size()) throw std::runtime_error(std::string("bad ") + what + ": '" + s + "'");
    return v;
}

}  // namespace

TableRow parse_table_row(const std::string& line) {
    auto fields = split(line, ',');
    if (fields.size() != 6)
        throw std::runtime_error("table row needs 6 fields: '" + line + "'");

    TableRow row;
    row.dim = parse_int(fields[0], "dim");
    row.genus = parse_int(fields[1], "genus");

    // The stratum field is space-separated to keep the CSV comma-free.
    std::string sig_text = fields[2];
    for (char& c : sig_text)
        if (c == ' ') c = ',';
    auto sig = parse_signature(sig_text);
    if (!sig) throw std::runtime_error("bad stratum field: '" + fields[2] + "'");
    auto reason = signature_invalid_reason(*sig);
    if (!reason.empty())
        throw std::runtime_error("invalid stratum '" + fields[2] + "': " + reason);
    row.stratum = *sig;

    Integer num(fields[3]);
    Integer den(fields[4]);
    if (den <= 0) throw std::runtime_error("bad denominator: '" + fields[4] + "'");
    row.coefficient = Rational(num, den);
    row.coefficient.canonicalize();
    if (row.coefficient.get_num() != num || row.coefficient.get_den() != den)
        throw std::runtime_error("coefficient not reduced: '" + fields[3] + "/" + fields[4] + "'");
    row.pi_power = parse_int(fields[5], "pi_power");

    auto inv = invariants(to_profile(row.stratum));
    if (row.dim != inv.dim_c)
        throw std::runtime_error("dim " + fields[0] + " != " + std::to_string(inv.dim_c) +
                                 " for stratum " + format_signature(row.stratum));
    if (row.genus != inv.genus)
        throw std::runtime_error("genus " + fields[1] + " != " + std::to_string(inv.genus) +
                                 " for stratum " + format_signature(row.stratum));
    if (row.pi_power != 2 * inv.g_eff)
        throw std::runtime_error("pi_power " + fields[5] + " != 2*g_eff for stratum " +
                                 format_signature(row.stratum));
    return row;
}

std::string serialize_table_row(const TableRow& row) {
    std::string sig = format_signature(row.stratum);
    for (char& c : sig)
        if (c == ',') c = ' ';
    std::ostringstream out;
    out << row.dim << "," << row.genus << "," << sig << "," << row.coefficient.get_num()
        << "," << row.coefficient.get_den() << "," << row.pi_power;
    return out.str();
}

std::vector<TableRow> load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table file: " + path);
    std::vector<TableRow> rows;
    std::string line;
    bool first = true;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line == "dim,genus,stratum,num,den,pi_power") continue;
        }
        try {
            rows.push_back(parse_table_row(line));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (rows.empty()) throw std::runtime_error("table file has no rows: " + path);
    return rows;
}

VerifyReport verify_table(const std::vector<TableRow>& rows, int max_weight, WeightVariant v) {
    // Strata listed more than once with differing values are conflicts the
    // table itself carries; they are surfaced, never resolved.
    std::map<std::string, std::vector<size_t>> by_stratum;
    for (size_t i = 0; i < rows.size(); ++i)
        by_stratum[format_signature(rows[i].stratum)].push_back(i);
    std::vector<bool> conflicted(rows.size(), false);
    for (const auto& [key, idx] : by_stratum) {
        for (size_t a = 0; a + 1 < idx.size(); ++a)
            for (size_t b = a + 1; b < idx.size(); ++b)
                if (rows[idx[a]].coefficient != rows[idx[b]].coefficient ||
                    rows[idx[a]].pi_power != rows[idx[b]].pi_power)
                    conflicted[idx[a]] = conflicted[idx[b]] = true;
    }

    // Computed values are cached per stratum so duplicate rows cost one run.
    std::map<std::string, std::pair<PiPoly, std::string>> computed;

    VerifyReport report;
    for (size_t i = 0; i < rows.size(); ++i) {
        const TableRow& row = rows[i];
        RowReport rr;
        rr.row = row;
        std::string key = format_signature(row.stratum);

        bool have = false;
        PiPoly value;
        std::string method;
        auto it = computed.find(key);
        if (it != computed.end()) {
            have = !it->second.second.empty();
            value = it->second.first;
            method = it->second.second;
        } else {
            try {
                auto res = compute_volume(row.stratum, VolumeMethod::Auto, v, max_weight);
                value = res.aez;
                method = res.method;
                have = true;
            } catch (const std::exception& e) {
                rr.detail = e.what();
            }
            computed[key] = {value, method};
        }

        if (have) {
            auto [exp, coeff] = value.single_term();
            rr.computed = rat_str(coeff) + " * pi^" + std::to_string(exp);
            rr.detail = method;
            if (conflicted[i])
                rr.status = "CONFLICT";
            else if (exp == row.pi_power && coeff == row.coefficient)
                rr.status = "PASS";
            else
                rr.status = "FAIL";
        } else {
            rr.status = conflicted[i] ? "CONFLICT" : "SKIP";
        }

        if (rr.status == "PASS") ++report.pass;
        else if (rr.status == "FAIL") ++report.fail;
        else if (rr.status == "CONFLICT") ++report.conflict;
        else ++report.skip;
        report.rows.push_back(std::move(rr));
    }
    return report;
}

}  // namespace qdvol
