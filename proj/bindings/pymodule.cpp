#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qdvol/cache.hpp"
#include "qdvol/genfun.hpp"
#include "qdvol/oracle.hpp"
#include "qdvol/table.hpp"
#include "qdvol/volume.hpp"

namespace py = pybind11;
using namespace qdvol;

namespace {

StratumSignature sig_from_text(const std::string& text) {
    auto sig = parse_signature(text);
    if (!sig) throw py::value_error("cannot parse stratum '" + text + "'");
    auto reason = signature_invalid_reason(*sig);
    if (!reason.empty()) throw py::value_error("invalid stratum '" + text + "': " + reason);
    return *sig;
}

py::dict pi_dict(const PiPoly& v) {
    auto [exp, coeff] = v.single_term();
    py::dict d;
    d["num"] = coeff.get_num().get_str();
    d["den"] = coeff.get_den().get_str();
    d["pi_power"] = exp;
    d["value"] = v.to_double();
    return d;
}

}  // namespace

PYBIND11_MODULE(_qdvol, m) {
    m.doc() = "Masur-Veech volumes of strata of quadratic differentials";

    m.def("invariants", [](const std::string& stratum) {
        auto inv = invariants(to_profile(sig_from_text(stratum)));
        py::dict d;
        d["dim"] = inv.dim_c;
        d["genus"] = inv.genus;
        d["g_eff"] = inv.g_eff;
        d["weight"] = inv.weight;
        d["n_poles"] = inv.n_poles;
        return d;
    }, py::arg("stratum"));

    m.def("volume", [](const std::string& stratum, const std::string& convention,
                       int max_weight) {
        auto sig = sig_from_text(stratum);
        auto res = compute_volume(sig, VolumeMethod::Auto, WeightVariant::Frobenius,
                                  max_weight);
        py::dict d = pi_dict(convention == "eo" ? res.eo : res.aez);
        d["stratum"] = format_signature(sig);
        d["convention"] = convention;
        d["method"] = res.method;
        return d;
    }, py::arg("stratum"), py::arg("convention") = "aez", py::arg("max_weight") = 6);

    m.def("genus0_volume", [](const std::string& stratum) {
        return pi_dict(genus0_volume(sig_from_text(stratum)));
    }, py::arg("stratum"));

    m.def("hyperelliptic_volume", [](const std::string& stratum) -> py::object {
        auto v = hyperelliptic_component_volume(sig_from_text(stratum));
        if (!v) return py::none();
        return pi_dict(*v);
    }, py::arg("stratum"));

    m.def("connected_series", [](const std::string& stratum, int terms) {
        auto s = zconnected_series(to_profile(sig_from_text(stratum)), terms);
        std::vector<std::string> out;
        for (int i = 0; i <= s.order; ++i)
            out.push_back(rat_str(s.coeff(i)));
        return out;
    }, py::arg("stratum"), py::arg("terms") = 12);

    m.def("count_covers", [](const std::string& stratum, int degree) {
        auto c = count_pillow_covers(to_profile(sig_from_text(stratum)), degree);
        py::dict d;
        d["all"] = rat_str(c.all);
        d["connected"] = rat_str(c.connected);
        return d;
    }, py::arg("stratum"), py::arg("degree"));

    m.def("estimate_volume", [](const std::string& stratum, int D) {
        auto r = estimate_volume_from_counts(to_profile(sig_from_text(stratum)), D);
        py::dict d;
        d["D"] = r.D;
        d["estimate"] = r.estimate;
        d["exact"] = r.exact;
        d["ratio"] = r.ratio;
        d["warning_small_d"] = r.warning_small_d;
        return d;
    }, py::arg("stratum"), py::arg("D") = 10);

    m.def("verify_table", [](const std::string& path, int max_weight) {
        auto report = verify_table(load_table(path), max_weight);
        py::dict d;
        d["pass"] = report.pass;
        d["fail"] = report.fail;
        d["conflict"] = report.conflict;
        d["skip"] = report.skip;
        py::list rows;
        for (const auto& rr : report.rows) {
            py::dict r;
            r["row"] = serialize_table_row(rr.row);
            r["status"] = rr.status;
            r["computed"] = rr.computed;
            rows.append(r);
        }
        d["rows"] = rows;
        return d;
    }, py::arg("path"), py::arg("max_weight") = 4);

    m.def("validate_sums", [](long scale) {
        py::list out;
        for (const auto& c : validate_sum_identities(scale)) {
            py::dict d;
            d["name"] = c.name;
            d["rel_error"] = c.rel_error;
            d["tolerance"] = c.tolerance;
            d["pass"] = c.pass;
            out.append(d);
        }
        return out;
    }, py::arg("scale") = 1);
}
