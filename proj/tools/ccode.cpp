// ccode: weight adjacency matrices of convolutional codes and their
// MacWilliams-type duality identities, verified in exact arithmetic.
//
// Exit codes: 0 success / identity verified, 1 verification failure or broken
// internal invariant, 2 bad input, bad usage, or resource limits.

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ccode/duality.hpp"
#include "ccode/io.hpp"
#include "ccode/random_codes.hpp"
#include "ccode/transform.hpp"

namespace {

using namespace ccode;

const char* kUsage =
    "usage: ccode <command> [input.json] [options]\n"
    "\n"
    "commands:\n"
    "  info                encoder profile: degrees, Forney indices, basic/minimal flags\n"
    "  ccf                 controller canonical form (A, B, C, E)\n"
    "  wam                 weight adjacency matrix of the realization\n"
    "  dual                minimal basic encoder of the dual code\n"
    "  mw-transform        block MacWilliams transform of a weight polynomial\n"
    "  verify-macwilliams  certify the state-space duality identity\n"
    "  verify-sequence     certify the reversed-dual sequence identity\n"
    "  check-invariants    run the full structural invariant report\n"
    "\n"
    "options:\n"
    "  --in FILE      input path (alternative to the positional argument)\n"
    "  --out FILE     write output to FILE instead of stdout\n"
    "  --dual FILE    user-supplied dual encoder (verify-macwilliams)\n"
    "  --cert FILE    also write the certificate JSON to FILE\n"
    "  --format F     json (default) or pretty\n"
    "  --poly LIST    comma-separated rational coefficients, ascending (mw-transform)\n"
    "  --n N          block length for mw-transform\n"
    "  --q Q          alphabet size for mw-transform\n";

struct Args {
    std::string command;
    std::vector<std::string> positional;
    std::map<std::string, std::string> options;

    bool has(const std::string& key) const { return options.count(key) != 0; }
    std::string get(const std::string& key, const std::string& fallback = "") const {
        auto it = options.find(key);
        return it == options.end() ? fallback : it->second;
    }
};

Args parse_args(int argc, char** argv) {
    static const std::set<std::string> value_opts = {"--in",   "--out",    "--dual", "--cert",
                                                     "--format", "--poly", "--n",    "--q"};
    Args a;
    if (argc < 2) throw UsageError(std::string("no command given\n") + kUsage);
    a.command = argv[1];
    for (int i = 2; i < argc; ++i) {
        std::string s = argv[i];
        if (s.rfind("--", 0) == 0) {
            if (!value_opts.count(s)) throw UsageError("unknown option '" + s + "'");
            if (i + 1 >= argc) throw UsageError("option '" + s + "' needs a value");
            a.options[s.substr(2)] = argv[++i];
        } else {
            a.positional.push_back(s);
        }
    }
    std::string fmt = a.get("format", "json");
    if (fmt != "json" && fmt != "pretty") throw UsageError("--format must be json or pretty");
    return a;
}

std::string input_path(const Args& a) {
    if (a.has("in")) return a.get("in");
    if (!a.positional.empty()) return a.positional.front();
    throw UsageError("no input file (positional argument or --in)");
}

void emit(const Args& a, const Json& j, const std::string& pretty) {
    std::string text = a.get("format", "json") == "json" ? j.dump() + "\n" : pretty;
    if (a.has("out")) {
        std::ofstream out(a.get("out"));
        if (!out) throw UsageError("cannot write '" + a.get("out") + "'");
        out << text;
    } else {
        std::cout << text;
    }
}

std::string matrix_pretty(const FqMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).idx();
        os << "\n";
    }
    if (m.rows() == 0) os << "(empty)\n";
    return os.str();
}

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

int cmd_info(const Args& a) {
    PolyMatrix g = parse_encoder(read_json_file(input_path(a)));
    const Field& f = matrix_field(g);
    CodeProfile p = profile(g, f);
    std::ostringstream os;
    os << "field: " << f.label() << "\n"
       << "n: " << p.n << "\nk: " << p.k << "\ndegree: " << p.degree << "\n"
       << "row degrees: " << join_ints(p.row_degrees) << "\n"
       << "forney indices: " << join_ints(p.forney) << "\n"
       << "r: " << p.r << "\n"
       << "basic: " << (p.basic ? "yes" : "no") << "\n"
       << "minimal: " << (p.minimal ? "yes" : "no") << "\n";
    Json j = profile_to_json(p);
    j["field"] = field_to_json(f);
    emit(a, j, os.str());
    return 0;
}

int cmd_ccf(const Args& a) {
    PolyMatrix g = parse_encoder(read_json_file(input_path(a)));
    Ccf c = build_ccf(g);
    validate_ccf(c);
    std::ostringstream os;
    os << "delta: " << c.delta << "\nr: " << c.r << "\n"
       << "indices: " << join_ints(c.indices) << "\n"
       << "A:\n" << matrix_pretty(c.A) << "B:\n" << matrix_pretty(c.B)
       << "C:\n" << matrix_pretty(c.C) << "E:\n" << matrix_pretty(c.E);
    emit(a, ccf_to_json(c), os.str());
    return 0;
}

int cmd_wam(const Args& a) {
    PolyMatrix g = parse_encoder(read_json_file(input_path(a)));
    Ccf c = build_ccf(g);
    WamZ w = compute_wam(c);
    validate_wam(w, c);
    std::ostringstream os;
    os << "states: " << w.size() << " (order lex-msb-left)\n";
    for (long long x = 0; x < w.size(); ++x)
        for (long long y = 0; y < w.size(); ++y)
            if (!w.entries(x, y).is_zero())
                os << "[" << x << "][" << y << "] = " << w.entries(x, y).str() << "\n";
    emit(a, wam_to_json(w), os.str());
    return 0;
}

int cmd_dual(const Args& a) {
    PolyMatrix g = parse_encoder(read_json_file(input_path(a)));
    PolyMatrix d = dual_encoder(g);
    std::ostringstream os;
    for (std::size_t i = 0; i < d.rows(); ++i) {
        for (std::size_t j = 0; j < d.cols(); ++j) os << (j ? " | " : "") << d(i, j).str();
        os << "\n";
    }
    emit(a, encoder_to_json(d), os.str());
    return 0;
}

int cmd_mw_transform(const Args& a) {
    if (!a.has("poly") || !a.has("n") || !a.has("q"))
        throw UsageError("mw-transform needs --poly, --n, and --q");
    long n = 0, q = 0;
    try {
        n = std::stol(a.get("n"));
        q = std::stol(a.get("q"));
    } catch (const std::exception&) {
        throw UsageError("--n and --q must be integers");
    }
    std::vector<Rat> coeffs;
    std::stringstream ss(a.get("poly"));
    std::string tok;
    while (std::getline(ss, tok, ',')) coeffs.push_back(rat_from_string(tok));
    if (coeffs.empty()) throw UsageError("--poly lists at least one coefficient");
    WPolyQ f{std::vector<Rat>(coeffs)};
    WPolyQ out = mw_transform(f, n, q);
    Json j;
    j["n"] = n;
    j["q"] = q;
    Json cs = Json::array();
    for (int i = 0; i <= out.deg(); ++i) cs.push_back(rat_to_string(out.coeff(i)));
    j["coefficients"] = std::move(cs);
    emit(a, j, out.str() + "\n");
    return 0;
}

std::string mismatch_pretty(const std::optional<EntryMismatch>& m) {
    if (!m) return "";
    return "first mismatch at [" + std::to_string(m->row) + "][" + std::to_string(m->col) +
           "]: " + m->lhs + " vs " + m->rhs + "\n";
}

int cmd_verify_macwilliams(const Args& a) {
    PolyMatrix g = parse_encoder(read_json_file(input_path(a)));
    MwCertificate cert;
    if (a.has("dual")) {
        PolyMatrix gd = parse_encoder(read_json_file(a.get("dual")));
        if (&matrix_field(gd) != &matrix_field(g))
            throw UsageError("primal and dual encoders live over different fields");
        cert = verify_macwilliams(g, &gd);
    } else {
        cert = verify_macwilliams(g);
    }
    Json j = mw_certificate_to_json(cert);
    std::ostringstream os;
    os << (cert.pass ? "PASS" : "FAIL") << " module identity over GF(" << cert.q << "): n=" << cert.n
       << " k=" << cert.k << " delta=" << cert.delta << " entries=" << cert.entries_checked
       << " mismatches=" << cert.mismatches << "\n"
       << mismatch_pretty(cert.first_mismatch);
    if (!cert.failure.empty()) os << "failure: " << cert.failure << "\n";
    emit(a, j, os.str());
    if (a.has("cert")) {
        std::ofstream out(a.get("cert"));
        if (!out) throw UsageError("cannot write '" + a.get("cert") + "'");
        out << j.dump(2) << "\n";
    }
    return cert.pass ? 0 : 1;
}

int cmd_verify_sequence(const Args& a) {
    PolyMatrix g = parse_encoder(read_json_file(input_path(a)));
    SequenceCertificate cert = verify_sequence_macwilliams(g);
    Json j = sequence_certificate_to_json(cert);
    std::ostringstream os;
    os << (cert.pass ? "PASS" : "FAIL") << " sequence identity over GF(" << cert.q << "): n=" << cert.n
       << " k=" << cert.k << " delta=" << cert.delta << " entries=" << cert.entries_checked
       << " mismatches=" << cert.mismatches << "\n"
       << mismatch_pretty(cert.first_mismatch);
    if (!cert.failure.empty()) os << "failure: " << cert.failure << "\n";
    emit(a, j, os.str());
    if (a.has("cert")) {
        std::ofstream out(a.get("cert"));
        if (!out) throw UsageError("cannot write '" + a.get("cert") + "'");
        out << j.dump(2) << "\n";
    }
    return cert.pass ? 0 : 1;
}

int cmd_check_invariants(const Args& a) {
    PolyMatrix g = parse_encoder(read_json_file(input_path(a)));
    Ccf c = build_ccf(g);
    Ccf h = build_ccf(dual_encoder(c.G));
    std::vector<CheckResult> checks = duality_invariant_report(c, h);
    SigmaReport sp = sigma_report(c, h);
    SigmaReport sd = sigma_report(h, c);
    bool pass = true;
    std::ostringstream os;
    for (const auto& chk : checks) {
        pass = pass && chk.pass;
        os << (chk.pass ? "ok   " : "FAIL ") << chk.name;
        if (!chk.pass) os << ": " << chk.detail;
        os << "\n";
    }
    os << (pass ? "all checks passed" : "some checks failed") << " (" << checks.size() << " total)\n";
    Json j;
    j["pass"] = pass;
    j["checks"] = checks_to_json(checks);
    j["sigma_primal"] = sigma_to_json(sp);
    j["sigma_dual"] = sigma_to_json(sd);
    emit(a, j, os.str());
    return pass ? 0 : 1;
}

int run(int argc, char** argv) {
    Args a = parse_args(argc, argv);
    if (a.command == "--help" || a.command == "help") {
        std::cout << kUsage;
        return 0;
    }
    if (a.command == "info") return cmd_info(a);
    if (a.command == "ccf") return cmd_ccf(a);
    if (a.command == "wam") return cmd_wam(a);
    if (a.command == "dual") return cmd_dual(a);
    if (a.command == "mw-transform") return cmd_mw_transform(a);
    if (a.command == "verify-macwilliams") return cmd_verify_macwilliams(a);
    if (a.command == "verify-sequence") return cmd_verify_sequence(a);
    if (a.command == "check-invariants") return cmd_check_invariants(a);
    throw UsageError("unknown command '" + a.command + "'\n" + kUsage);
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
