#include "symdet/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "symdet/cone.hpp"
#include "symdet/errors.hpp"
#include "symdet/euler.hpp"
#include "symdet/faultinj.hpp"
#include "symdet/newton.hpp"
#include "symdet/oracle.hpp"
#include "symdet/semigroup.hpp"
#include "symdet/volume.hpp"

namespace symdet {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIdentity = 3;

// chi/Eu/mu values can exceed 64 bits; emit a JSON number when they fit and a
// decimal string otherwise (documented in the README).
json encode_int(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
    return v.str();
}

std::string int_str(const Int& v) { return v.str(); }

std::vector<std::int64_t> parse_d_list(const std::string& text) {
    std::vector<std::int64_t> d;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        long long v = std::stoll(item, &used);
        if (used != item.size()) throw DomainError("bad degree entry '" + item + "'");
        d.push_back(v);
    }
    if (d.empty()) throw DomainError("empty degree list");
    return d;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto pos = text.find("..");
    if (pos == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    int lo = std::stoi(text.substr(0, pos));
    int hi = std::stoi(text.substr(pos + 2));
    if (lo > hi) throw DomainError("empty range '" + text + "'");
    return {lo, hi};
}

std::string format_d(const DegreeVector& d) {
    std::string s = "(";
    for (int i = 1; i <= d.n; ++i) {
        if (i > 1) s += ", ";
        s += std::to_string(d.at(i));
    }
    return s + ")";
}

json chi_report_json(const ChiReport& r, bool attest_nondeg, bool attest_isolated) {
    json j;
    j["schema"] = 1;
    j["n"] = r.n;
    j["d"] = r.d.d;
    j["chi"] = {{"face_sum", encode_int(r.chi_face_sum)},
                {"closed", encode_int(r.chi_closed)},
                {"product", encode_int(r.chi_product)}};
    j["eu"] = {{"variety", encode_int(r.eu_variety)}, {"function", encode_int(r.eu_function)}};
    if (r.chi_affine && r.milnor_g) {
        j["milnor"] = {{"mu", encode_int(*r.milnor_g)},
                       {"chi_affine", encode_int(*r.chi_affine)},
                       {"identity_ok", r.milnor_identity_ok}};
    } else {
        j["milnor"] = nullptr;
    }
    j["attestations"] = {{"nondegenerate", attest_nondeg}, {"isolated_critical", attest_isolated}};
    j["agreement"] = r.chi_agreement;
    return j;
}

FunctionSupport load_support_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open support file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw DomainError("support file '" + path + "': " + e.what());
    }
    if (!j.contains("n") || !j.contains("monomials"))
        throw DomainError("support file needs fields 'n' and 'monomials'");
    std::vector<Monomial> monomials;
    for (const auto& entry : j["monomials"]) {
        if (!entry.is_array() || entry.size() != 2)
            throw DomainError("each monomial must be an [index, exponent] pair");
        monomials.push_back({entry[0].get<int>(), entry[1].get<std::int64_t>()});
    }
    return FunctionSupport(j["n"].get<int>(), std::move(monomials));
}

// ---------------------------------------------------------------- generators

int cmd_generators(int n, bool as_json, std::ostream& out) {
    const GeneratorSet gs = build_generators(n);
    if (as_json) {
        json j;
        j["schema"] = 1;
        j["n"] = n;
        json arr = json::array();
        for (int pos = 0; pos < gs.size(); ++pos) {
            auto [i, jdx] = gs.label(pos);
            json coords = json::array();
            for (const auto& c : gs.generators[pos]) coords.push_back(encode_int(c));
            arr.push_back({{"i", i}, {"j", jdx}, {"coords", coords}});
        }
        j["generators"] = arr;
        out << j.dump(2) << "\n";
    } else {
        for (int pos = 0; pos < gs.size(); ++pos) {
            auto [i, jdx] = gs.label(pos);
            out << "m[" << i << "," << jdx << "] = (";
            const auto& v = gs.generators[pos];
            for (size_t c = 0; c < v.size(); ++c) out << (c ? ", " : "") << v[c];
            out << ")\n";
        }
    }
    return kExitOk;
}

// ----------------------------------------------------------------------- chi

int cmd_chi(int n, const DegreeVector& d, bool as_json, bool attest_nondeg, bool attest_isolated,
            std::ostream& out, std::ostream& err) {
    const ChiReport r = make_chi_report(n, d);
    if (as_json) {
        out << chi_report_json(r, attest_nondeg, attest_isolated).dump(2) << "\n";
    } else {
        out << "n = " << n << ", d = " << format_d(d) << "\n";
        out << "chi      = " << r.chi_face_sum << "  [face-sum]\n";
        out << "chi      = " << r.chi_closed << "  [closed form]\n";
        out << "chi      = " << r.chi_product << "  [product form]\n";
        out << "Eu       = " << r.eu_variety << "\n";
        out << "Eu_f     = " << r.eu_function << "\n";
        if (r.milnor_g) {
            out << "mu(g)    = " << *r.milnor_g << "\n";
            out << "chi(G0)  = " << *r.chi_affine << "\n";
        }
        out << "agreement: " << (r.chi_agreement ? "yes" : "NO") << "\n";
    }
    if (!r.chi_agreement || !r.milnor_identity_ok) {
        err << "error: computation paths disagree\n";
        return kExitIdentity;
    }
    return kExitOk;
}

// ------------------------------------------------------------------------ eu

int cmd_eu(int n, const std::optional<DegreeVector>& d, bool as_json, std::ostream& out,
           std::ostream& err) {
    Int eu = euler_obstruction(n);
    std::optional<Int> eu_f;
    if (d) eu_f = euler_obstruction_f(n, *d);
    if (as_json) {
        json j;
        j["schema"] = 1;
        j["n"] = n;
        j["eu"] = {{"variety", encode_int(eu)}};
        if (eu_f) {
            j["d"] = d->d;
            j["eu"]["function"] = encode_int(*eu_f);
        }
        out << j.dump(2) << "\n";
    } else {
        out << "Eu = " << eu << "\n";
        if (eu_f) out << "Eu_f = " << *eu_f << "\n";
    }
    (void)err;
    return kExitOk;
}

// -------------------------------------------------------------------- milnor

int cmd_milnor(int n, const DegreeVector& d, bool as_json, std::ostream& out, std::ostream& err) {
    Int chi_aff = chi_affine_space(n, d);
    Int mu = milnor_number(n, d);
    bool identity_ok = true;
    std::string detail;
    try {
        euler_obstruction_f_via_milnor(n, d);
    } catch (const InternalError& e) {
        identity_ok = false;
        detail = e.what();
    }
    if (as_json) {
        json j;
        j["schema"] = 1;
        j["n"] = n;
        j["d"] = d.d;
        j["milnor"] = {{"mu", encode_int(mu)},
                       {"chi_affine", encode_int(chi_aff)},
                       {"identity_ok", identity_ok}};
        out << j.dump(2) << "\n";
    } else {
        out << "mu(g)      = " << mu << "\n";
        out << "chi(G0)    = " << chi_aff << "\n";
        out << "identity   = " << (identity_ok ? "OK" : "VIOLATED") << "\n";
    }
    if (!identity_ok) {
        err << "error: " << detail << "\n";
        return kExitIdentity;
    }
    return kExitOk;
}

// -------------------------------------------------------------------- verify

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

class VerifySuite {
public:
    VerifySuite(int n_max, int bound, int trials, std::uint64_t seed)
        : n_max_(n_max), bound_(bound), trials_(trials), rng_(seed) {}

    template <typename Fn>
    void run(const std::string& name, Fn&& fn) {
        CheckResult res;
        res.name = name;
        try {
            res.detail = fn();
            res.ok = true;
        } catch (const std::exception& e) {
            res.ok = false;
            res.detail = e.what();
        }
        results_.push_back(std::move(res));
    }

    void fail(const std::string& name, const std::string& detail) {
        results_.push_back({name, false, detail});
    }

    DegreeVector random_d(int n, int lo, int hi) {
        std::uniform_int_distribution<std::int64_t> dist(lo, hi);
        std::vector<std::int64_t> d(n);
        for (auto& v : d) v = dist(rng_);
        return DegreeVector(n, std::move(d));
    }

    const std::vector<CheckResult>& results() const { return results_; }
    bool all_ok() const {
        return std::all_of(results_.begin(), results_.end(), [](const auto& r) { return r.ok; });
    }

    int n_max() const { return n_max_; }
    int bound() const { return bound_; }
    int trials() const { return trials_; }

private:
    int n_max_;
    int bound_;
    int trials_;
    std::mt19937_64 rng_;
    std::vector<CheckResult> results_;
};

std::string count_detail(std::int64_t count, const std::string& what) {
    return std::to_string(count) + " " + what;
}

void verify_structure(VerifySuite& s) {
    s.run("minor-relations", [&] {
        std::int64_t total = 0;
        for (int n = 2; n <= s.n_max(); ++n) {
            RelationReport rep = check_minor_relations(n);
            Int expected = binomial(n, 2) * binomial(n, 2);
            if (!rep.ok() || Int(rep.checked) != expected)
                throw InternalError("relation check failed at n = " + std::to_string(n));
            total += rep.checked;
        }
        return count_detail(total, "relations hold");
    });
    s.run("generator-rank", [&] {
        for (int n = 2; n <= std::max(s.n_max(), 12); ++n)
            if (rank(build_generators(n).generators) != n)
                throw InternalError("rank(A) != n at n = " + std::to_string(n));
        return count_detail(std::max(s.n_max(), 12) - 1, "ranks correct");
    });
    s.run("minimality", [&] {
        for (int n = 2; n <= s.n_max(); ++n)
            if (!minimality_check(n)) throw InternalError("minimality failed at n = " + std::to_string(n));
        return count_detail(s.n_max() - 1, "generating sets minimal");
    });
    s.run("face-counts", [&] {
        std::int64_t total = 0;
        for (int n = 2; n <= s.n_max(); ++n) {
            for (int k = 1; k <= n; ++k) {
                auto fs = faces(n, k);
                std::int64_t t1 = std::count_if(fs.begin(), fs.end(), [](const Face& f) {
                    return f.family() == FaceFamily::Type1;
                });
                std::int64_t t2 = static_cast<std::int64_t>(fs.size()) - t1;
                if (Int(fs.size()) != binomial(n, k) || Int(t1) != binomial(n - 1, k - 1) ||
                    Int(t2) != binomial(n - 1, k))
                    throw InternalError("face count mismatch at n = " + std::to_string(n) +
                                        ", k = " + std::to_string(k));
                total += static_cast<std::int64_t>(fs.size());
            }
        }
        return count_detail(total, "faces counted");
    });
    s.run("supporting-forms", [&] {
        std::int64_t total = 0;
        for (int n = 2; n <= s.n_max(); ++n)
            for (int k = 1; k < n; ++k)
                for (const Face& f : faces(n, k)) {
                    supporting_form(n, f); // throws if the sign pattern fails
                    ++total;
                }
        return count_detail(total, "forms validated");
    });
    s.run("oracle-face-check", [&] {
        std::int64_t total = 0;
        for (int n = 2; n <= std::min(s.n_max(), 8); ++n)
            for (int k = 1; k <= n; ++k)
                for (const Face& f : faces(n, k)) {
                    if (!brute_force_face_check(n, f.ray_indices))
                        throw InternalError("oracle rejected a face at n = " + std::to_string(n));
                    ++total;
                }
        return count_detail(total, "subsets accepted");
    });
    s.run("face-normal-form", [&] {
        std::int64_t total = 0;
        for (int n = 2; n <= s.n_max(); ++n)
            for (int k = 2; k <= n; ++k)
                for (const Face& f : faces(n, k)) {
                    GeneratorSet nf = face_normal_form(n, f);
                    GeneratorSet ref = build_generators(k);
                    if (nf.generators != ref.generators)
                        throw InternalError("face normal form mismatch at n = " + std::to_string(n));
                    ++total;
                }
        return count_detail(total, "faces reduced to lower rank-one structure");
    });
    s.run("face-lattices", [&] {
        std::int64_t total = 0;
        for (int n = 2; n <= std::min(s.n_max(), 7); ++n)
            for (int k = 1; k <= n; ++k)
                for (const Face& f : faces(n, k)) {
                    auto a = face_lattice_basis(n, f);
                    auto b = brute_force_lattice_basis(n, f);
                    if (a.size() != b.size())
                        throw InternalError("face lattice rank mismatch");
                    for (const auto& v : a)
                        if (!express_in_basis(v, b).ok())
                            throw InternalError("cone basis vector outside oracle lattice");
                    for (const auto& v : b)
                        if (!express_in_basis(v, a).ok())
                            throw InternalError("oracle basis vector outside cone lattice");
                    ++total;
                }
        return count_detail(total, "face lattices agree");
    });
    s.run("saturation", [&] {
        std::int64_t pts = 0;
        for (int n = 2; n <= std::min(s.n_max(), 3); ++n) {
            SaturationReport rep = saturation_check(n, s.bound());
            if (!rep.ok())
                throw InternalError("saturation violated at n = " + std::to_string(n));
            pts += rep.cone_points;
        }
        return count_detail(pts, "cone points expressible");
    });
}

void verify_chi(VerifySuite& s) {
    s.run("chi-three-paths", [&] {
        std::int64_t total = 0;
        for (int n = 2; n <= std::min(s.n_max(), 7); ++n) {
            VolumeEvaluator ev(n);
            for (int t = 0; t < s.trials(); ++t) {
                DegreeVector d = s.random_d(n, 1, 9);
                Int a = chi_face_sum(ev, d);
                Int b = chi_closed_form(n, d);
                Int c = chi_product_form(n, d);
                Int o = brute_force_chi(n, d);
                if (a != b || b != c || c != o)
                    throw InternalError("chi path disagreement at n = " + std::to_string(n) +
                                        ", d = " + format_d(d));
                ++total;
            }
        }
        return count_detail(total, "instances agree on all four paths");
    });
    s.run("volume-closed-form", [&] {
        std::int64_t total = 0;
        for (int n = 2; n <= std::min(s.n_max(), 7); ++n) {
            for (int t = 0; t < s.trials(); ++t) {
                DegreeVector d = s.random_d(n, 1, 9);
                for (int k = 1; k <= n; ++k)
                    for (const Face& f : faces(n, k)) {
                        if (normalized_volume(n, f, d).value != closed_form_volume(n, f, d))
                            throw InternalError("volume mismatch at n = " + std::to_string(n));
                        ++total;
                    }
            }
        }
        return count_detail(total, "face volumes agree");
    });
    s.run("milnor-brieskorn", [&] {
        std::int64_t total = 0;
        for (int n = 2; n <= std::min(s.n_max(), 6); ++n) {
            for (int t = 0; t < s.trials(); ++t) {
                DegreeVector d = s.random_d(n, 1, 5);
                d.d[0] = 2 + (t % 4); // d_1 in [2,5]
                Int mu = milnor_number(n, d);
                Int classical = Int(d.at(1)) - 1;
                for (int i = 2; i <= n; ++i) classical *= 2 * Int(d.at(i)) - 1;
                if (mu != classical)
                    throw InternalError("Milnor number disagrees with the product formula at n = " +
                                        std::to_string(n) + ", d = " + format_d(d));
                euler_obstruction_f_via_milnor(n, d); // throws on identity violation
                ++total;
            }
        }
        return count_detail(total, "Milnor identities hold");
    });
    s.run("bernstein-identity", [&] {
        for (int n = 1; n <= 30; ++n)
            if (!bernstein_identity_check(n))
                throw InternalError("binomial identity failed at n = " + std::to_string(n));
        return std::string("n = 1..30");
    });
    s.run("parity", [&] {
        for (int n = 2; n <= 15; ++n) {
            Int eu = euler_obstruction(n);
            if (eu != ((n % 2 == 1) ? 1 : 0))
                throw InternalError("parity failed at n = " + std::to_string(n));
        }
        return std::string("Eu alternates 0/1 for n = 2..15");
    });
}

int cmd_verify(int n_max, int bound, int trials, std::uint64_t seed, bool as_json,
               std::ostream& out, std::ostream& err) {
    VerifySuite suite(n_max, bound, trials, seed);
    verify_structure(suite);
    verify_chi(suite);

    if (as_json) {
        json j;
        j["schema"] = 1;
        j["n_max"] = n_max;
        j["bound"] = bound;
        j["trials"] = trials;
        j["seed"] = seed;
        json checks = json::array();
        for (const auto& r : suite.results())
            checks.push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
        j["checks"] = checks;
        j["ok"] = suite.all_ok();
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : suite.results())
            out << (r.ok ? "ok   " : "FAIL ") << std::left << std::setw(20) << r.name << " "
                << r.detail << "\n";
        out << (suite.all_ok() ? "all checks passed\n" : "CHECKS FAILED\n");
    }
    if (!suite.all_ok()) {
        err << "error: verification failed\n";
        return kExitIdentity;
    }
    return kExitOk;
}

// --------------------------------------------------------------------- table

void print_table(const std::vector<std::vector<std::string>>& rows, bool csv, std::ostream& out) {
    if (rows.empty()) return;
    if (csv) {
        for (const auto& row : rows) {
            for (size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
            out << "\n";
        }
        return;
    }
    std::vector<size_t> width(rows[0].size(), 0);
    for (const auto& row : rows)
        for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    for (const auto& row : rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) out << "  ";
            out << std::left << std::setw(static_cast<int>(width[c])) << row[c];
        }
        out << "\n";
    }
}

int cmd_table_parity(const std::string& range, bool csv, std::ostream& out) {
    auto [lo, hi] = parse_range(range);
    if (lo < 2) throw DomainError("table parity: n must be >= 2");
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"n", "eu"});
    for (int n = lo; n <= hi; ++n) rows.push_back({std::to_string(n), int_str(euler_obstruction(n))});
    print_table(rows, csv, out);
    return kExitOk;
}

int cmd_table_chi_grid(int n, int d_max, bool csv, std::ostream& out) {
    if (n < 2) throw DomainError("table chi-grid: n must be >= 2");
    if (d_max < 1) throw DomainError("table chi-grid: d-max must be >= 1");
    VolumeEvaluator ev(n);
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header;
    for (int i = 1; i <= n; ++i) header.push_back("d" + std::to_string(i));
    header.push_back("chi");
    rows.push_back(std::move(header));

    std::vector<std::int64_t> d(n, 1);
    while (true) {
        DegreeVector dv(n, d);
        Int a = chi_face_sum(ev, dv);
        Int b = chi_closed_form(n, dv);
        Int c = chi_product_form(n, dv);
        if (a != b || b != c)
            throw InternalError("chi paths disagree at d = " + format_d(dv));
        std::vector<std::string> row;
        for (auto v : d) row.push_back(std::to_string(v));
        row.push_back(int_str(a));
        rows.push_back(std::move(row));

        int i = n - 1;
        while (i >= 0 && d[i] == d_max) { d[i] = 1; --i; }
        if (i < 0) break;
        ++d[i];
    }
    print_table(rows, csv, out);
    return kExitOk;
}

// ------------------------------------------------------------------ dispatch

struct FaultGuard {
    ~FaultGuard() { faultinj::set(faultinj::Fault::None); }
};

faultinj::Fault parse_fault(const std::string& name) {
    static const std::map<std::string, faultinj::Fault> table = {
        {"det-ray", faultinj::Fault::DetRay},
        {"det-type1", faultinj::Fault::DetType1},
        {"det-type2", faultinj::Fault::DetType2},
        {"closed-type1", faultinj::Fault::ClosedType1},
        {"closed-type2", faultinj::Fault::ClosedType2},
        {"affine-axis", faultinj::Fault::AffineAxis},
        {"affine-type1", faultinj::Fault::AffineType1},
        {"affine-type2", faultinj::Fault::AffineType2},
    };
    auto it = table.find(name);
    if (it == table.end()) throw DomainError("unknown fault '" + name + "'");
    return it->second;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"toric geometry of rank-one symmetric matrices: Milnor fiber Euler "
                 "characteristics, Euler obstructions and Milnor numbers in exact arithmetic"};
    app.name("symdet");
    app.require_subcommand(1);

    // generators
    int gen_n = 0;
    bool gen_json = false;
    auto* gen = app.add_subcommand("generators", "list the semigroup generators with matrix labels");
    gen->add_option("--n", gen_n, "matrix size n (>= 2)")->required();
    gen->add_flag("--json", gen_json, "emit JSON");

    // chi
    int chi_n = 0;
    std::string chi_d;
    std::string chi_support;
    bool chi_json = false, chi_att_nd = false, chi_att_iso = false;
    auto* chi = app.add_subcommand("chi", "Milnor-fiber Euler characteristic by all three paths");
    chi->add_option("--n", chi_n, "matrix size n (>= 2)");
    chi->add_option("--d", chi_d, "degrees, comma separated (e.g. 2,2,2)");
    chi->add_option("--support", chi_support, "JSON support file {n, monomials:[[index,exponent],...]}");
    chi->add_flag("--json", chi_json, "emit JSON report");
    chi->add_flag("--attest-nondegenerate", chi_att_nd, "record that f is non-degenerate (not verified)");
    chi->add_flag("--attest-isolated-critical", chi_att_iso,
                  "record that f has an isolated critical point (not verified)");

    // eu
    int eu_n = 0;
    std::string eu_d;
    bool eu_json = false;
    auto* eu = app.add_subcommand("eu", "local Euler obstruction of the variety (and of f with --d)");
    eu->add_option("--n", eu_n, "matrix size n (>= 2)")->required();
    eu->add_option("--d", eu_d, "degrees of f, comma separated");
    eu->add_flag("--json", eu_json, "emit JSON");

    // milnor
    int mil_n = 0;
    std::string mil_d;
    bool mil_json = false;
    auto* mil = app.add_subcommand("milnor", "Milnor number of the companion polynomial (d_1 >= 2)");
    mil->add_option("--n", mil_n, "matrix size n (>= 2)")->required();
    mil->add_option("--d", mil_d, "degrees, comma separated")->required();
    mil->add_flag("--json", mil_json, "emit JSON");

    // verify
    int ver_n_max = 5, ver_bound = 3, ver_trials = 25;
    std::uint64_t ver_seed = 0x5eed5eedULL;
    bool ver_json = false;
    std::string ver_fault;
    auto* ver = app.add_subcommand("verify", "run the full cross-check suite");
    ver->add_option("--n-max", ver_n_max, "largest n for the structural checks")->check(CLI::Range(2, 12));
    ver->add_option("--bound", ver_bound, "saturation box bound")->check(CLI::Range(1, 6));
    ver->add_option("--trials", ver_trials, "random degree vectors per n")->check(CLI::Range(1, 10000));
    ver->add_option("--seed", ver_seed, "RNG seed");
    ver->add_flag("--json", ver_json, "emit JSON");
    ver->add_option("--inject-fault", ver_fault,
                    "negative control: perturb one volume rule "
                    "(det-ray|det-type1|det-type2|closed-type1|closed-type2|"
                    "affine-axis|affine-type1|affine-type2)");

    // table
    std::string tbl_kind, tbl_n = "2..10";
    int tbl_grid_n = 0, tbl_dmax = 3;
    bool tbl_csv = false;
    auto* tbl = app.add_subcommand("table", "batch tables (parity | chi-grid)");
    tbl->add_option("kind", tbl_kind, "parity or chi-grid")->required();
    tbl->add_option("--n", tbl_n, "n or range n1..n2 (parity); n (chi-grid)");
    tbl->add_option("--d-max", tbl_dmax, "largest degree per coordinate (chi-grid)");
    tbl->add_flag("--csv", tbl_csv, "emit CSV");

    std::vector<const char*> argv;
    argv.push_back("symdet");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    FaultGuard guard; // clears any injected fault on all exits

    try {
        if (gen->parsed()) return cmd_generators(gen_n, gen_json, out);

        if (chi->parsed()) {
            if (chi_d.empty() == chi_support.empty())
                throw DomainError("chi: provide exactly one of --d and --support");
            int n = chi_n;
            std::optional<DegreeVector> d;
            if (!chi_d.empty()) {
                if (n < 2) throw DomainError("chi: --n is required with --d");
                d = DegreeVector(n, parse_d_list(chi_d));
            } else {
                FunctionSupport fs = load_support_file(chi_support);
                if (n != 0 && n != fs.n) throw DomainError("chi: --n disagrees with the support file");
                n = fs.n;
                ValidationResult val = validate_support(fs);
                if (!val.ok) {
                    std::string msg = "support has no pure monomial on ray(s):";
                    for (int r : val.missing_rays) msg += " " + std::to_string(r);
                    throw DomainError(msg);
                }
                d = *val.degrees;
                // Extra terms must stay inside the Newton polyhedron of the
                // pure part, or the volume formulas do not apply.
                const GeneratorSet gs = build_generators(n);
                for (const auto& m : fs.monomials) {
                    LatticeVector p = monomial_point(gs, m);
                    if (!newton_membership(n, p, *d))
                        throw DomainError("monomial [" + std::to_string(m.generator_index) + "," +
                                          std::to_string(m.exponent) +
                                          "] lies outside the Newton polyhedron of the pure part");
                }
            }
            return cmd_chi(n, *d, chi_json, chi_att_nd, chi_att_iso, out, err);
        }

        if (eu->parsed()) {
            std::optional<DegreeVector> d;
            if (!eu_d.empty()) d = DegreeVector(eu_n, parse_d_list(eu_d));
            return cmd_eu(eu_n, d, eu_json, out, err);
        }

        if (mil->parsed()) {
            DegreeVector d(mil_n, parse_d_list(mil_d));
            if (d.at(1) < 2) throw DomainError("milnor: requires d_1 >= 2");
            return cmd_milnor(mil_n, d, mil_json, out, err);
        }

        if (ver->parsed()) {
            if (!ver_fault.empty()) faultinj::set(parse_fault(ver_fault));
            return cmd_verify(ver_n_max, ver_bound, ver_trials, ver_seed, ver_json, out, err);
        }

        if (tbl->parsed()) {
            if (tbl_kind == "parity") return cmd_table_parity(tbl_n, tbl_csv, out);
            if (tbl_kind == "chi-grid") {
                auto [lo, hi] = parse_range(tbl_n);
                if (lo != hi) throw DomainError("table chi-grid: --n must be a single value");
                tbl_grid_n = lo;
                return cmd_table_chi_grid(tbl_grid_n, tbl_dmax, tbl_csv, out);
            }
            throw DomainError("unknown table kind '" + tbl_kind + "' (expected parity or chi-grid)");
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitIdentity;
    }
    return kExitUsage;
}

} // namespace symdet
