#include "ccode/io.hpp"

#include <fstream>

namespace ccode {

namespace {

long expect_int(const Json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw UsageError("expected integer field '" + key + "'");
    return j[key].get<long>();
}

Json mismatch_to_json(const std::optional<EntryMismatch>& m) {
    if (!m) return nullptr;
    Json j;
    j["row"] = m->row;
    j["col"] = m->col;
    j["lhs"] = m->lhs;
    j["rhs"] = m->rhs;
    return j;
}

} // namespace

const Field& parse_field(const Json& j) {
    if (!j.is_object()) throw UsageError("field description must be an object");
    long p = expect_int(j, "p");
    long s = j.contains("s") ? expect_int(j, "s") : 1;
    if (!j.contains("modulus")) return Field::get(p, s);
    const Json& mj = j["modulus"];
    if (!mj.is_array()) throw UsageError("modulus must be a coefficient list");
    std::vector<long> mod;
    for (const auto& c : mj) {
        if (!c.is_number_integer()) throw UsageError("modulus coefficients must be integers");
        mod.push_back(c.get<long>());
    }
    return Field::get(p, s, mod);
}

Json field_to_json(const Field& f) {
    Json j;
    j["p"] = f.p();
    j["s"] = f.s();
    if (f.s() > 1) j["modulus"] = f.modulus();
    return j;
}

PolyMatrix parse_encoder(const Json& j) {
    if (!j.is_object()) throw UsageError("encoder description must be an object");
    if (!j.contains("field")) throw UsageError("encoder description lacks a 'field'");
    const Field& f = parse_field(j["field"]);
    long k = expect_int(j, "k");
    long n = expect_int(j, "n");
    if (k < 1 || n < 1) throw UsageError("encoder needs k >= 1 and n >= 1");
    if (!j.contains("G") || !j["G"].is_array() || j["G"].size() != static_cast<std::size_t>(k))
        throw UsageError("'G' must be a list of k rows");
    PolyMatrix g(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < g.rows(); ++i) {
        const Json& row = j["G"][i];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            throw UsageError("each row of 'G' must list n entries");
        for (std::size_t c = 0; c < g.cols(); ++c) {
            const Json& entry = row[c];
            if (!entry.is_array())
                throw UsageError("each entry of 'G' must be a coefficient list (ascending in D)");
            std::vector<Fq> cs;
            for (const auto& v : entry) {
                if (!v.is_number_integer())
                    throw UsageError("coefficients must be canonical element indices");
                long idx = v.get<long>();
                if (idx < 0 || idx >= f.q())
                    throw UsageError("element index " + std::to_string(idx) + " out of range for " + f.label());
                cs.push_back(f.element(idx));
            }
            g(i, c) = Poly(std::move(cs));
        }
    }
    return g;
}

Json encoder_to_json(const PolyMatrix& g) {
    const Field& f = matrix_field(g);
    Json j;
    j["field"] = field_to_json(f);
    j["k"] = g.rows();
    j["n"] = g.cols();
    Json rows = Json::array();
    for (std::size_t i = 0; i < g.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < g.cols(); ++c) {
            Json entry = Json::array();
            for (const auto& coeff : g(i, c).coeffs()) entry.push_back(coeff.idx());
            row.push_back(std::move(entry));
        }
        rows.push_back(std::move(row));
    }
    j["G"] = std::move(rows);
    return j;
}

Json matrix_to_json(const FqMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).idx());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json wam_to_json(const WamZ& w) {
    Json j;
    j["q"] = w.q();
    j["delta"] = w.delta;
    j["n"] = w.n;
    j["order"] = "lex-msb-left";
    Json entries = Json::array();
    for (long long x = 0; x < w.size(); ++x)
        for (long long y = 0; y < w.size(); ++y) {
            const WPolyZ& e = w.entries(x, y);
            if (e.is_zero()) continue;
            entries.push_back(Json::array({x, y, e.coeffs()}));
        }
    j["entries"] = std::move(entries);
    return j;
}

Json profile_to_json(const CodeProfile& p) {
    Json j;
    j["n"] = p.n;
    j["k"] = p.k;
    j["q"] = p.q;
    j["degree"] = p.degree;
    j["row_degrees"] = p.row_degrees;
    j["forney_indices"] = p.forney;
    j["r"] = p.r;
    j["basic"] = p.basic;
    j["minimal"] = p.minimal;
    return j;
}

Json ccf_to_json(const Ccf& c) {
    Json j;
    j["delta"] = c.delta;
    j["r"] = c.r;
    j["indices"] = c.indices;
    j["row_perm"] = c.row_perm;
    j["A"] = matrix_to_json(c.A);
    j["B"] = matrix_to_json(c.B);
    j["C"] = matrix_to_json(c.C);
    j["E"] = matrix_to_json(c.E);
    return j;
}

Json checks_to_json(const std::vector<CheckResult>& checks) {
    Json arr = Json::array();
    for (const auto& c : checks) {
        Json j;
        j["name"] = c.name;
        j["pass"] = c.pass;
        if (!c.pass) j["detail"] = c.detail;
        arr.push_back(std::move(j));
    }
    return arr;
}

Json sigma_to_json(const SigmaReport& r) {
    Json j;
    j["rank"] = r.rank;
    j["dim_domain"] = r.dim_domain;
    j["rank_matches"] = r.rank_matches;
    j["well_defined"] = r.well_defined;
    j["domain_matches"] = r.domain_matches;
    j["injective"] = r.injective;
    j["orbits_escape"] = r.orbits_escape;
    j["max_orbit_steps"] = r.max_orbit_steps;
    j["pass"] = r.pass;
    return j;
}

Json mw_certificate_to_json(const MwCertificate& cert) {
    Json j;
    j["identity"] = "module-macwilliams";
    j["pass"] = cert.pass;
    j["q"] = cert.q;
    j["n"] = cert.n;
    j["k"] = cert.k;
    j["delta"] = cert.delta;
    j["entries_checked"] = cert.entries_checked;
    j["mismatches"] = cert.mismatches;
    j["first_mismatch"] = mismatch_to_json(cert.first_mismatch);
    j["n_matrix"] = matrix_to_json(cert.n_mat);
    j["dual_n_matrix"] = matrix_to_json(cert.n_hat);
    j["p_matrix"] = matrix_to_json(cert.p);
    if (!cert.failure.empty()) j["failure"] = cert.failure;
    return j;
}

Json sequence_certificate_to_json(const SequenceCertificate& cert) {
    Json j;
    j["identity"] = "sequence-macwilliams";
    j["pass"] = cert.pass;
    j["q"] = cert.q;
    j["n"] = cert.n;
    j["k"] = cert.k;
    j["delta"] = cert.delta;
    j["reversal_transpose_ok"] = cert.reversal_transpose_ok;
    j["entries_checked"] = cert.entries_checked;
    j["mismatches"] = cert.mismatches;
    j["first_mismatch"] = mismatch_to_json(cert.first_mismatch);
    j["r_matrix"] = matrix_to_json(cert.r);
    j["p_tilde_matrix"] = matrix_to_json(cert.p_tilde);
    j["q_matrix"] = matrix_to_json(cert.q_mat);
    if (!cert.failure.empty()) j["failure"] = cert.failure;
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError("invalid JSON in '" + path + "': " + e.what());
    }
}

} // namespace ccode
