// congruent -- exact-arithmetic toolkit for the congruent number problem:
// Tunnell counts and classification tables, Pythagorean generators, the
// triangle <-> curve-point bijection, torsion, Dirichlet characters, zeta
// partial sums, modular-curve genera and q-expansions.

#include <complex>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "congruent/arith.hpp"
#include "congruent/elliptic.hpp"
#include "congruent/lseries.hpp"
#include "congruent/modular.hpp"
#include "congruent/report.hpp"
#include "congruent/triangles.hpp"
#include "congruent/tunnell.hpp"

namespace {

using namespace congruent;

std::string format_point(const CurvePoint& p) {
    if (p.infinity) return "inf";
    return to_string(p.x) + " " + to_string(p.y);
}

// 1, -1, i, -i for the quarter turns; e(j/k) otherwise.
std::string format_root_of_unity(const std::optional<Rat>& turn) {
    if (!turn) return "0";
    const Rat& t = *turn;
    if (t == 0) return "1";
    if (t == Rat(1, 2)) return "-1";
    if (t == Rat(1, 4)) return "i";
    if (t == Rat(3, 4)) return "-i";
    return "e(" + to_string(t) + ")";
}

int run_classify(long n, long bound, const std::string& format, bool no_cache) {
    ResultCache cache(ResultCache::default_path());
    std::optional<ResultRecord> rec;
    Int rep = squarefree_part(Int(n));
    if (!no_cache) rec = cache.get(rep, bound);
    bool from_cache = rec.has_value();
    if (!rec) {
        // cache the canonical class row; the reduction note is display-only
        rec = make_record(rep, bound);
        if (!no_cache) {
            try {
                cache.put(*rec);
            } catch (const std::exception& e) {
                std::cerr << "warning: " << e.what() << "\n";
            }
        }
    }
    if (Int(n) != rep) rec->reduced_from = Int(n);
    if (format == "json") {
        std::cout << record_to_json(*rec).dump() << "\n";
        return 0;
    }
    if (rec->reduced_from) {
        SquareFreeSplit s = squarefree_split(*rec->reduced_from);
        std::cout << *rec->reduced_from << " = " << s.square_root_part << "^2 * "
                  << s.squarefree_part << ", classifying class representative " << rec->n << "\n";
    }
    std::cout << "n = " << rec->n << "  (A,B,C,D) = (" << rec->counts.A << "," << rec->counts.B
              << "," << rec->counts.C << "," << rec->counts.D << ")  L. = " << rec->l_bullet
              << "\n";
    switch (rec->status.kind) {
        case Congruence::NotCongruent:
            std::cout << "not congruent (Tunnell count obstruction)\n";
            break;
        case Congruence::CongruentWitnessed: {
            const auto& w = *rec->status.witness;
            std::cout << "congruent, witness [" << to_string(w.q) << "|" << to_string(w.a) << ","
                      << to_string(w.b) << "," << to_string(w.c) << "]\n";
            break;
        }
        case Congruence::TunnellPositiveUnverified:
            std::cout << "congruent if BSD (no witness up to kappa = " << rec->witness_bound
                      << ")\n";
            break;
    }
    if (from_cache) std::cout << "(cached, bound " << rec->witness_bound << ")\n";
    return 0;
}

int run_table(long limit, long bound, unsigned jobs, const std::string& format) {
    auto rows = kernel_scan(Int(limit), bound, jobs);
    if (format == "csv")
        std::cout << render_table_csv(rows);
    else if (format == "json")
        std::cout << render_table_jsonl(rows);
    else
        std::cout << render_table_human(rows);
    return 0;
}

int run_pyth(long kappa_max, const std::string& format) {
    std::vector<json> rows;
    for (long k = 2; k <= kappa_max; ++k)
        for (long l = 1 + (k % 2); l < k; l += 2) {
            if (std::gcd(k, l) != 1) continue;
            PythTriple t = pythagorean(k, l, 1);
            TriangleClass c = class_of(t);
            if (format == "json") {
                json j;
                j["kappa"] = k;
                j["l"] = l;
                j["triple"] = {to_string(t.leg1), to_string(t.leg2), to_string(t.hyp)};
                j["area"] = to_string(t.area);
                j["n"] = to_string(c.n);
                j["m"] = to_string(c.m);
                j["class"] = triangle_to_json(c.triangle);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "(" << k << "," << l << ")  (" << t.leg1 << "," << t.leg2 << ","
                          << t.hyp << ")  area " << t.area << "  [" << c.n << "|"
                          << to_string(c.triangle.a) << "," << to_string(c.triangle.b) << ","
                          << to_string(c.triangle.c) << "]\n";
            }
        }
    return 0;
}

}  // namespace

int main(int argc, char** argv) try {
    CLI::App app{"exact arithmetic for the congruent number problem"};
    app.require_subcommand(1);

    std::string format = "human";

    auto* classify_cmd = app.add_subcommand("classify", "classify a positive integer");
    long classify_n = 0;
    long witness_bound = 200;
    bool no_cache = false;
    classify_cmd->add_option("n", classify_n, "integer to classify")->required();
    classify_cmd->add_option("--witness-bound", witness_bound, "kappa bound for witness search");
    classify_cmd->add_option("--format", format, "human|json");
    classify_cmd->add_flag("--no-cache", no_cache, "bypass the result cache");

    auto* table_cmd = app.add_subcommand("table", "classification table for square-free n <= limit");
    long limit = 0;
    unsigned jobs = 1;
    table_cmd->add_option("--limit", limit, "upper bound (>= 5)")->required();
    table_cmd->add_option("--witness-bound", witness_bound, "kappa bound for witness search");
    table_cmd->add_option("--jobs", jobs, "worker threads for the scan");
    table_cmd->add_option("--format", format, "csv|json|human");

    auto* pyth_cmd = app.add_subcommand("pyth", "primitive Pythagorean triangles and their classes");
    long kappa_max = 8;
    pyth_cmd->add_option("--kappa-max", kappa_max, "largest kappa");
    pyth_cmd->add_option("--format", format, "human|json");

    auto* point_cmd = app.add_subcommand("point", "curve point of a triangle [q|a,b,c]");
    std::vector<std::string> point_args;
    point_cmd->add_option("qabc", point_args, "q a b c as exact rationals")->expected(4);

    auto* triangle_cmd = app.add_subcommand("triangle", "triangle of a curve point on E[q]");
    std::vector<std::string> triangle_args;
    triangle_cmd->add_option("qxy", triangle_args, "q x y as exact rationals")->expected(3);

    auto* orbit_cmd = app.add_subcommand("orbit", "the eight symmetry-orbit points of a triangle");
    std::vector<std::string> orbit_args;
    orbit_cmd->add_option("qabc", orbit_args, "q a b c as exact rationals")->expected(4);

    auto* torsion_cmd = app.add_subcommand("torsion", "torsion points of E[n]");
    long torsion_n = 0;
    torsion_cmd->add_option("n", torsion_n, "curve label")->required();

    auto* characters_cmd = app.add_subcommand("characters", "Dirichlet character table mod kappa");
    long chars_kappa = 0;
    characters_cmd->add_option("kappa", chars_kappa, "modulus")->required();

    auto* zeta_cmd = app.add_subcommand("zeta", "partial sum of the Riemann zeta series");
    double zeta_s = 2.0;
    long zeta_terms = 10000;
    zeta_cmd->add_option("s", zeta_s, "exponent (> 1)")->required();
    zeta_cmd->add_option("--terms", zeta_terms, "number of terms");

    auto* genus_cmd = app.add_subcommand("genus", "genus of the modular curve X(N)");
    long genus_n = 0;
    genus_cmd->add_option("N", genus_n, "level")->required();

    auto* qexp_cmd = app.add_subcommand("qexp", "q-expansion of E4, E6, delta or j");
    std::string qexp_name;
    long qexp_cutoff = 10;
    qexp_cmd->add_option("form", qexp_name, "E4|E6|delta|j")->required();
    qexp_cmd->add_option("--cutoff", qexp_cutoff, "highest exponent");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*classify_cmd) {
            if (classify_n < 1) throw std::domain_error("classify: n must be >= 1");
            return run_classify(classify_n, witness_bound, format, no_cache);
        }
        if (*table_cmd) {
            if (format == "human" && !table_cmd->get_option("--format")->count()) format = "json";
            return run_table(limit, witness_bound, std::max(1u, jobs), format);
        }
        if (*pyth_cmd) return run_pyth(kappa_max, format);
        if (*point_cmd) {
            Rat q = rat_from_string(point_args[0]);
            RationalTriangle t{q, rat_from_string(point_args[1]), rat_from_string(point_args[2]),
                               rat_from_string(point_args[3])};
            std::cout << format_point(point_from_triangle(t)) << "\n";
            return 0;
        }
        if (*triangle_cmd) {
            Rat q = rat_from_string(triangle_args[0]);
            CurvePoint p = CurvePoint::affine(rat_from_string(triangle_args[1]),
                                              rat_from_string(triangle_args[2]));
            RationalTriangle t = triangle_from_point(q, p);
            std::cout << to_string(t.a) << " " << to_string(t.b) << " " << to_string(t.c) << "\n";
            return 0;
        }
        if (*orbit_cmd) {
            Rat q = rat_from_string(orbit_args[0]);
            RationalTriangle t{q, rat_from_string(orbit_args[1]), rat_from_string(orbit_args[2]),
                               rat_from_string(orbit_args[3])};
            for (const auto& p : orbit8(q, t)) std::cout << format_point(p) << "\n";
            return 0;
        }
        if (*torsion_cmd) {
            for (const auto& p : torsion_points(Int(torsion_n))) std::cout << format_point(p) << "\n";
            return 0;
        }
        if (*characters_cmd) {
            if (chars_kappa > 1000)
                throw std::domain_error("characters: modulus too large for a value-table listing");
            auto chars = characters(chars_kappa);
            std::cout << "chi(n) \\ n";
            for (long n = 0; n < chars_kappa; ++n) std::cout << "\t" << n;
            std::cout << "\n";
            for (size_t i = 0; i < chars.size(); ++i) {
                std::cout << "chi_" << i + 1;
                for (long n = 0; n < chars_kappa; ++n)
                    std::cout << "\t" << format_root_of_unity(chars[i].turn(Int(n)));
                std::cout << "\n";
            }
            return 0;
        }
        if (*zeta_cmd) {
            std::cout.precision(12);
            std::cout << zeta_partial(zeta_s, zeta_terms) << "\n";
            return 0;
        }
        if (*genus_cmd) {
            std::cout << genus_principal(Int(genus_n)) << "\n";
            return 0;
        }
        if (*qexp_cmd) {
            QSeries s = [&] {
                if (qexp_name == "E4") return eisenstein_qexp(4, qexp_cutoff);
                if (qexp_name == "E6") return eisenstein_qexp(6, qexp_cutoff);
                if (qexp_name == "delta") return delta_qexp(qexp_cutoff);
                if (qexp_name == "j") return j_qexp(qexp_cutoff);
                throw std::domain_error("qexp: form must be E4, E6, delta or j");
            }();
            json j;
            j["lowest_exponent"] = s.lowest_exponent();
            json coeffs = json::array();
            for (long k = s.lowest_exponent(); k <= s.cutoff(); ++k)
                coeffs.push_back(to_string(s.coeff(k)));
            j["coefficients"] = coeffs;
            std::cout << j.dump() << "\n";
            return 0;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
} catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
}
