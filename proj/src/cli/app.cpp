/*
   Copyright 2026 The radu Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "radu/cli/app.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "radu/cli/document.hpp"
#include "radu/embedding.hpp"
#include "radu/errors.hpp"
#include "radu/gallery/catalog.hpp"
#include "radu/gallery/fixtures.hpp"
#include "radu/hopf/enveloping.hpp"
#include "radu/hopf/subgroups.hpp"
#include "radu/hopf/text.hpp"
#include "radu/lie/radical.hpp"
#include "radu/oracle/oracle.hpp"

namespace radu::cli {

using json = nlohmann::ordered_json;

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    std::ostringstream o;
    for (unsigned int i = 0; i < len; ++i) o << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return o.str();
}

namespace {

struct Options {
    std::string command;
    std::string target;
    std::vector<std::string> params;
    std::string field;
    unsigned max_inseparable_exponent = 4;
    std::size_t hopf_cap = 128;
    std::string json_path;
    std::uint64_t seed = 0;
    bool force_nondirected = false;
    std::string strategy;
};

/// Failure that maps to an exit code.
struct Abort {
    int code;
    std::string message;
};

struct Loaded {
    std::string input;  // bytes bound by the digest
    std::optional<gallery::AlgebraWithRep> lie;
    std::optional<HopfAlgebra> hopf;
    std::optional<HopfData> raw_hopf;                      // as parsed, before validation
    std::optional<StructureConstants> raw_lie;              // as parsed, before validation
    std::string name;                                       // gallery name when not a file
};

std::string param(const Options& o, const std::string& key, const std::string& fallback) {
    for (const auto& p : o.params) {
        const auto eq = p.find('=');
        if (eq == std::string::npos) throw Abort{usage, "parameter '" + p + "' must look like key=value"};
        if (p.substr(0, eq) == key) return p.substr(eq + 1);
    }
    return fallback;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

const Field* override_field(const Options& o) {
    if (o.field.empty()) return nullptr;
    try {
        return &parse_field(o.field);
    } catch (const ParseError& e) {
        throw Abort{usage, std::string("--field: ") + e.what()};
    }
}

Loaded load(const Options& o, bool want_hopf) {
    if (o.target.empty()) throw Abort{usage, "command '" + o.command + "' needs a target"};
    Loaded l;
    const Field* f = override_field(o);
    std::string name = o.target;
    const bool explicit_gallery = name.rfind("gallery:", 0) == 0;
    if (explicit_gallery) name = name.substr(8);
    if (!explicit_gallery && std::filesystem::exists(name)) {
        std::ifstream in(name, std::ios::binary);
        if (!in) throw Abort{bad_input, "cannot read " + name};
        std::ostringstream buf;
        buf << in.rdbuf();
        l.input = buf.str();
        const bool is_hopf = std::filesystem::path(name).extension() == ".hopf";
        try {
            if (is_hopf) {
                l.raw_hopf = parse_hopf(l.input, f);
                if (validate_hopf(*l.raw_hopf).ok) l.hopf = HopfAlgebra(*l.raw_hopf);
            } else {
                auto doc = parse_algebra(l.input, f);
                l.raw_lie = doc.constants;
                if (validate(doc.constants).ok)
                    l.lie = gallery::AlgebraWithRep{RestrictedLieAlgebra(doc.constants), doc.representation};
            }
        } catch (const ParseError& e) {
            throw Abort{bad_input, name + ": " + e.what()};
        }
        return l;
    }
    l.name = name;
    l.input = "gallery:" + name;
    try {
        if (want_hopf) {
            if (f) throw Abort{usage, "--field applies to files and Lie gallery objects only"};
            l.hopf = gallery::hopf_by_name(name, o.hopf_cap);
            if (l.hopf) l.raw_hopf = l.hopf->data();
        }
        if (!l.hopf) {
            l.lie = gallery::lie_by_name(name);
            if (!l.lie && !want_hopf && !f) {
                l.hopf = gallery::hopf_by_name(name, o.hopf_cap);
                if (l.hopf) l.raw_hopf = l.hopf->data();
            }
            if (l.lie && f) {
                const auto e = FieldEmbedding::inclusion(l.lie->algebra.field(), *f);
                std::vector<Matrix> rep;
                for (const auto& m : l.lie->representation) rep.push_back(e(m));
                l.lie = gallery::AlgebraWithRep{base_change(l.lie->algebra, e), rep};
            }
            if (l.lie) l.raw_lie = l.lie->algebra.constants();
        }
    } catch (const CapExceeded& e) {
        throw Abort{failure, e.what()};
    } catch (const std::invalid_argument& e) {
        throw Abort{bad_input, e.what()};
    }
    if (!l.lie && !l.hopf)
        throw Abort{bad_input, "'" + name + "' is neither a readable file nor a gallery name"};
    return l;
}

const RestrictedLieAlgebra& need_lie(const Loaded& l) {
    if (l.lie) return l.lie->algebra;
    if (l.raw_lie) {
        const auto r = validate(*l.raw_lie);
        throw Abort{bad_input, "algebra fails validation (" + r.failed_check + "): " + r.detail};
    }
    throw Abort{usage, "this command needs a restricted Lie algebra"};
}

const HopfAlgebra& need_hopf(const Loaded& l) {
    if (l.hopf) return *l.hopf;
    if (l.raw_hopf) {
        const auto r = validate_hopf(*l.raw_hopf);
        throw Abort{bad_input, "Hopf algebra fails validation (" + r.failed_check + "): " + r.detail};
    }
    throw Abort{usage, "this command needs a Hopf algebra"};
}

Subspace lie_subspace(const RestrictedLieAlgebra& g, const std::string& arg) {
    if (arg == "0") return g.zero_subspace();
    if (arg == "all") return g.whole();
    std::vector<Vec> vs;
    try {
        for (const auto& part : split(arg, ',')) vs.push_back(parse_combination(g.field(), g.labels(), part));
    } catch (const ParseError& e) {
        throw Abort{usage, std::string("subspace '") + arg + "': " + e.what()};
    }
    return g.span(vs);
}

Subspace hopf_ideal(const HopfAlgebra& h, const std::string& arg) {
    if (arg == "0") return Subspace(h.field(), h.dim());
    if (arg == "augmentation") return h.augmentation_ideal();
    std::vector<Vec> gens;
    try {
        for (const auto& part : split(arg, ',')) gens.push_back(parse_element(h.algebra(), part));
    } catch (const ParseError& e) {
        throw Abort{usage, std::string("ideal '") + arg + "': " + e.what()};
    }
    return h.algebra().ideal_generated(gens);
}

json basis_json(const std::vector<std::string>& labels, const Subspace& s) {
    json a = json::array();
    for (const auto& b : s.basis()) a.push_back(format_combination(b, labels));
    return a;
}

json report_json(const ValidationReport& r) {
    json j;
    j["ok"] = r.ok;
    j["failed_check"] = r.failed_check;
    j["indices"] = r.indices;
    j["detail"] = r.detail;
    return j;
}

struct Outcome {
    std::string verdict;
    json payload = json::object();
    std::map<std::string, std::string> provenance;  // overrides; default "computed"
};

RadicalOptions radical_options(const Options& o) {
    RadicalOptions r;
    r.seed = o.seed;
    if (!o.strategy.empty()) {
        r.force = parse_strategy(o.strategy);
        if (!r.force) throw Abort{usage, "unknown strategy '" + o.strategy + "'"};
    }
    return r;
}

Outcome cmd_validate(const Loaded& l) {
    Outcome out;
    if (l.raw_hopf) {
        const auto r = validate_hopf(*l.raw_hopf);
        out.verdict = r.ok ? "pass" : "fail";
        out.payload["kind"] = "hopf";
        out.payload["dimension"] = l.raw_hopf->algebra.dim();
        out.payload["report"] = report_json(r);
        return out;
    }
    const auto r = validate(*l.raw_lie);
    out.payload["kind"] = "restricted-lie";
    out.payload["dimension"] = l.raw_lie->dim();
    out.payload["report"] = report_json(r);
    bool ok = r.ok;
    if (ok && l.lie && !l.lie->representation.empty()) {
        const auto rep = gallery::verify_restricted_rep(l.lie->algebra, l.lie->representation);
        out.payload["representation"] = {{"ok", rep.ok}, {"failed_check", rep.failed_check}, {"detail", rep.detail}};
        ok = rep.ok;
    }
    out.verdict = ok ? "pass" : "fail";
    return out;
}

Outcome cmd_report(const RestrictedLieAlgebra& g) {
    Outcome out;
    const auto cs = characteristic_series(g);
    const auto& lab = g.labels();
    out.payload["field"] = g.field().name();
    out.payload["dimension"] = g.dim();
    out.payload["abelian"] = g.is_abelian();
    out.payload["center"] = basis_json(lab, cs.center);
    json derived = json::array(), lower = json::array();
    for (const auto& s : cs.derived) derived.push_back(basis_json(lab, s));
    for (const auto& s : cs.lower_central) lower.push_back(basis_json(lab, s));
    out.payload["derived_series"] = derived;
    out.payload["lower_central_series"] = lower;
    out.payload["solvable"] = cs.solvable;
    out.payload["nilpotent"] = cs.nilpotent;
    if (cs.nilpotent) out.payload["nilpotency_class"] = cs.nilpotency_class;
    out.payload["mult_type"] = is_mult_type(g);
    out.payload["unipotent"] = is_unipotent(g, g.whole());
    out.verdict = "reported";
    return out;
}

Outcome cmd_radical(const RestrictedLieAlgebra& g, const Options& o) {
    Outcome out;
    const auto cert = rad_p(g, radical_options(o));
    out.verdict = to_string(cert.verdict);
    out.payload["radical"] = basis_json(g.labels(), cert.radical);
    out.payload["dimension"] = cert.radical.dim();
    out.payload["strategy"] = to_string(cert.strategy);
    json trace = json::array();
    for (const auto& st : cert.trace) {
        json found = json::array();
        for (const auto& v : st.found_in_quotient) found.push_back(format_combination(v, st.quotient_labels));
        trace.push_back({{"strategy", to_string(st.strategy)}, {"found_in_quotient", found},
                         {"cumulative", basis_json(g.labels(), st.cumulative)}});
    }
    out.payload["trace"] = trace;
    out.payload["notes"] = cert.notes;
    out.payload["replay"] = replay(g, cert) == cert.radical ? "consistent" : "inconsistent";
    return out;
}

Outcome cmd_p_reductive(const RestrictedLieAlgebra& g, const Options& o) {
    Outcome out;
    ReductivityOptions ro;
    ro.max_inseparable_exponent = o.max_inseparable_exponent;
    ro.radical = radical_options(o);
    const auto r = is_p_reductive(g, ro);
    out.verdict = to_string(r.verdict);
    out.payload["criterion"] = r.criterion;
    out.payload["detail"] = r.detail;
    out.payload["max_inseparable_exponent"] = o.max_inseparable_exponent;
    return out;
}

Outcome cmd_series(const RestrictedLieAlgebra& g, const Options& o) {
    Outcome out;
    const std::string chain = param(o, "chain", "");
    if (chain.empty()) throw Abort{usage, "series-verify needs chain=0|...|all"};
    std::vector<Subspace> subs;
    json terms = json::array();
    for (const auto& part : split(chain, '|')) {
        subs.push_back(lie_subspace(g, part));
        terms.push_back(basis_json(g.labels(), subs.back()));
    }
    out.payload["chain"] = terms;
    try {
        json steps = json::array();
        for (const auto& st : verify_subnormal_series(g, subs)) steps.push_back(st.describe());
        out.payload["quotients"] = steps;
        out.verdict = "valid";
    } catch (const NotAPIdeal& e) {
        out.payload["reason"] = e.what();
        out.verdict = "invalid";
    }
    return out;
}

Outcome cmd_hopf_dual(const Loaded& l, const Options& o) {
    Outcome out;
    std::optional<HopfAlgebra> d;
    try {
        if (l.raw_lie) {
            need_lie(l);
            d = dual(restricted_enveloping_algebra(l.lie->algebra, o.hopf_cap).hopf);
            out.payload["source"] = "restricted enveloping algebra";
        } else {
            d = dual(need_hopf(l));
            out.payload["source"] = "hopf algebra";
        }
    } catch (const CapExceeded& e) {
        throw Abort{failure, e.what()};
    }
    const auto r = validate_hopf(d->data());
    out.payload["dimension"] = d->dim();
    out.payload["commutative"] = d->is_commutative();
    out.payload["cocommutative"] = d->is_cocommutative();
    out.payload["validation"] = report_json(r);
    out.payload["document"] = print_hopf(d->data());
    out.verdict = r.ok ? "pass" : "fail";
    return out;
}

Outcome cmd_hopf_union(const HopfAlgebra& h, const Options& o) {
    Outcome out;
    const std::string ideals = param(o, "ideals", "");
    if (ideals.empty()) throw Abort{usage, "hopf-union needs ideals=I1|I2|..."};
    std::vector<Subspace> family;
    json members = json::array();
    for (const auto& part : split(ideals, '|')) {
        family.push_back(hopf_ideal(h, part));
        members.push_back(basis_json(h.labels(), family.back()));
    }
    out.payload["members"] = members;
    try {
        const auto u = schematic_union(h, family, o.force_nondirected);
        out.payload["ideal"] = basis_json(h.labels(), u.ideal);
        out.payload["directed"] = u.directed;
        out.payload["subgroup_ideal"] = u.check.ok;
        if (!u.check.ok) {
            out.payload["failed"] = u.check.failed;
            out.payload["witness"] = h.format(*u.check.witness);
            out.payload["detail"] = u.check.detail;
        }
        out.verdict = u.check.ok ? "subgroup" : "not-subgroup";
    } catch (const NonDirectedFamily& e) {
        throw Abort{failure, e.what()};
    } catch (const NotAPIdeal& e) {
        throw Abort{bad_input, e.what()};
    }
    return out;
}

Outcome cmd_hopf_frobenius(const HopfAlgebra& h, const Options& o) {
    Outcome out;
    const unsigned r = static_cast<unsigned>(std::stoul(param(o, "r", "1")));
    try {
        const Subspace k = frobenius_kernel(h, r);
        const auto check = is_subgroup_ideal(h, k);
        out.payload["r"] = r;
        out.payload["ideal"] = basis_json(h.labels(), k);
        out.payload["codimension"] = h.dim() - k.dim();
        out.payload["subgroup_ideal"] = check.ok;
        out.verdict = h.format(k);
    } catch (const UnsupportedKind& e) {
        throw Abort{bad_input, e.what()};
    }
    return out;
}

Outcome cmd_gallery(const Options& o) {
    Outcome out;
    std::string name = o.target;
    if (name.rfind("gallery:", 0) == 0) name = name.substr(8);
    json rows = json::array();
    bool all = true, matched = false;
    for (const auto& fx : gallery::fixtures()) {
        if (!name.empty() && fx.target != name) continue;
        matched = true;
        for (const auto& r : gallery::run_fixture(fx)) {
            rows.push_back({{"target", fx.target}, {"check", r.row.check}, {"argument", r.row.argument},
                            {"expected", r.row.expected}, {"actual", r.actual}, {"pass", r.pass},
                            {"provenance", r.row.provenance}, {"anchor", r.row.anchor}});
            all = all && r.pass;
        }
    }
    if (!matched) throw Abort{bad_input, "no fixture named '" + name + "'"};
    out.payload["rows"] = rows;
    out.verdict = all ? "pass" : "fail";
    out.provenance["rows"] = "per-row";
    return out;
}

Outcome cmd_oracle_compare(const Options& o) {
    Outcome out;
    std::vector<RestrictedLieAlgebra> instances;
    const RadicalOptions ro = radical_options(o);
    if (!o.target.empty()) {
        const Loaded l = load(o, false);
        const auto& g = need_lie(l);
        if (!g.field().is_finite()) throw Abort{bad_input, "the oracle needs a finite field"};
        instances.push_back(g);
    } else {
        const Field* f = override_field(o);
        const Field& k = f ? *f : Field::prime(2);
        if (!k.is_finite()) throw Abort{usage, "the oracle needs a finite field"};
        const std::size_t cap = std::stoul(param(o, "cap", "10000"));
        for (const auto& d : split(param(o, "dims", "2,3"), ',')) {
            const std::size_t n = std::stoul(d);
            if (n == 0 || n > 4) throw Abort{usage, "dims must lie between 1 and 4"};
            auto batch = oracle::enumerate_algebras(k, n, cap - std::min(cap, instances.size()));
            for (auto& g : batch) instances.push_back(std::move(g));
        }
        out.payload["field"] = k.name();
    }
    std::size_t agree = 0, undecided = 0;
    json disagreements = json::array();
    for (const auto& g : instances) {
        const auto cert = rad_p(g, ro);
        if (cert.verdict != Verdict::exact) ++undecided;
        const Subspace expect = oracle::radical(g);
        if (cert.radical == expect) {
            ++agree;
        } else if (disagreements.size() < 10) {
            disagreements.push_back({{"algebra", print_algebra({g.constants(), {}})},
                                     {"rad_p", basis_json(g.labels(), cert.radical)},
                                     {"oracle", basis_json(g.labels(), expect)}});
        }
    }
    out.payload["instances"] = instances.size();
    out.payload["agreements"] = agree;
    out.payload["undecided"] = undecided;
    out.payload["disagreements"] = disagreements;
    out.provenance["agreements"] = "independent-oracle";
    out.provenance["disagreements"] = "independent-oracle";
    out.verdict = agree == instances.size() ? "agree" : "disagree";
    return out;
}

Outcome dispatch(const Options& o, std::string& input) {
    const std::string& c = o.command;
    if (c == "gallery") {
        input = "gallery-fixtures:" + o.target;
        return cmd_gallery(o);
    }
    if (c == "oracle-compare") {
        input = "oracle-compare:" + o.target;
        if (!o.target.empty()) input = load(o, false).input;
        return cmd_oracle_compare(o);
    }
    const bool hopf_cmd = c.rfind("hopf-", 0) == 0;
    static const std::vector<std::string> known{"validate", "report", "radical", "unipotent", "mult-type",
                                                "p-reductive", "series-verify", "hopf-dual", "hopf-union",
                                                "hopf-frobenius"};
    if (std::find(known.begin(), known.end(), c) == known.end()) throw Abort{usage, "unknown command '" + c + "'"};
    const Loaded l = load(o, hopf_cmd);
    input = l.input;
    if (c == "validate") return cmd_validate(l);
    if (c == "hopf-dual") return cmd_hopf_dual(l, o);
    if (c == "hopf-union") return cmd_hopf_union(need_hopf(l), o);
    if (c == "hopf-frobenius") return cmd_hopf_frobenius(need_hopf(l), o);
    const auto& g = need_lie(l);
    if (c == "report") return cmd_report(g);
    if (c == "radical") return cmd_radical(g, o);
    if (c == "p-reductive") return cmd_p_reductive(g, o);
    if (c == "series-verify") return cmd_series(g, o);
    if (c == "mult-type") {
        Outcome out;
        out.verdict = is_mult_type(g) ? "true" : "false";
        out.payload["abelian"] = g.is_abelian();
        return out;
    }
    Outcome out;  // unipotent
    const Subspace s = lie_subspace(g, param(o, "subspace", "all"));
    out.payload["subspace"] = basis_json(g.labels(), s);
    try {
        out.verdict = is_unipotent(g, s) ? "true" : "false";
    } catch (const NotAPIdeal& e) {
        throw Abort{bad_input, e.what()};
    }
    return out;
}

std::string canonical_options(const Options& o) {
    std::ostringstream s;
    s << "command=" << o.command << "\nfield=" << o.field << "\nmax-inseparable-exponent=" << o.max_inseparable_exponent
      << "\nhopf-cap=" << o.hopf_cap << "\nseed=" << o.seed << "\nforce-nondirected=" << o.force_nondirected
      << "\nstrategy=" << o.strategy;
    for (const auto& p : o.params) s << "\nparam=" << p;
    return s.str();
}

void write_atomically(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Abort{failure, "cannot write " + tmp};
        f << text;
        if (!f) throw Abort{failure, "cannot write " + tmp};
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Abort{failure, "cannot move certificate into place: " + ec.message()};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, json* certificate) {
    Options o;
    CLI::App app{"Restricted unipotent radicals of height-one group schemes and finite Hopf algebras", kToolName};
    app.add_option("command", o.command,
                   "validate | report | radical | unipotent | mult-type | p-reductive | series-verify | "
                   "hopf-dual | hopf-union | hopf-frobenius | gallery | oracle-compare")
        ->required();
    app.add_option("target", o.target, "a .alg or .hopf file, or a gallery name (optionally prefixed gallery:)");
    app.add_option("params", o.params, "key=value parameters: chain, subspace, ideals, r, dims, cap");
    app.add_option("--field", o.field, "override the scalar field, e.g. GF(2^2)");
    app.add_option("--max-inseparable-exponent", o.max_inseparable_exponent, "largest m tried in t -> s^(p^m)")
        ->capture_default_str();
    app.add_option("--hopf-cap", o.hopf_cap, "largest Hopf algebra dimension built")->capture_default_str();
    app.add_option("--json", o.json_path, "write the certificate to this path");
    app.add_option("--seed", o.seed, "seed for randomized searches")->capture_default_str();
    app.add_flag("--force-nondirected", o.force_nondirected, "allow unions of non-directed families");
    app.add_option("--strategy", o.strategy, "force one radical strategy (S1..S4)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }
    // `radu gallery` and `radu oracle-compare` take no target, only parameters.
    const auto eq = o.target.find('=');
    if (eq != std::string::npos && eq > 0 && !std::filesystem::exists(o.target) &&
        std::all_of(o.target.begin(), o.target.begin() + eq, [](unsigned char ch) { return std::isalpha(ch); })) {
        o.params.insert(o.params.begin(), o.target);
        o.target.clear();
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        std::string input;
        Outcome res = dispatch(o, input);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        json cert;
        cert["tool"] = kToolName;
        cert["version"] = kToolVersion;
        cert["input_digest"] = "sha256:" + sha256_hex(input + '\0' + canonical_options(o));
        cert["operation"] = o.command;
        cert["target"] = o.target;
        cert["verdict"] = res.verdict;
        cert["payload"] = res.payload;
        json prov = json::object();
        for (const auto& [k, v] : res.payload.items()) {
            const auto it = res.provenance.find(k);
            prov[k] = it == res.provenance.end() ? "computed" : it->second;
        }
        cert["provenance"] = prov;
        cert["timing_ms"] = std::round(ms * 1000.0) / 1000.0;

        out << kToolName << " " << o.command << (o.target.empty() ? "" : " " + o.target) << "\n";
        out << "verdict: " << res.verdict << "\n";
        for (const auto& [k, v] : res.payload.items()) {
            if (k == "rows" && v.is_array()) {
                for (const auto& r : v)
                    out << (r["pass"].get<bool>() ? "PASS " : "FAIL ") << r["target"].get<std::string>() << " "
                        << r["check"].get<std::string>() << "(" << r["argument"].get<std::string>() << ") = "
                        << r["actual"].get<std::string>() << "  [" << r["provenance"].get<std::string>() << ": "
                        << r["anchor"].get<std::string>() << "]\n";
            } else if (v.is_string()) {
                const std::string s = v.get<std::string>();
                out << k << ":" << (s.find('\n') != std::string::npos ? "\n" + s : " " + s + "\n");
            } else {
                out << k << ": " << v.dump() << "\n";
            }
        }
        if (!o.json_path.empty()) write_atomically(o.json_path, cert.dump(2) + "\n");
        if (certificate) *certificate = cert;
        return ok;
    } catch (const Abort& a) {
        err << kToolName << ": " << a.message << "\n";
        return a.code;
    } catch (const CapExceeded& e) {
        err << kToolName << ": " << e.what() << "\n";
        return failure;
    } catch (const ParseError& e) {
        err << kToolName << ": " << e.what() << "\n";
        return bad_input;
    } catch (const std::exception& e) {
        err << kToolName << ": " << e.what() << "\n";
        return failure;
    }
}

}  // namespace radu::cli
