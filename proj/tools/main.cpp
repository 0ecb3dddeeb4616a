#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "keycomb/errors.hpp"
#include "keycomb/insertion.hpp"
#include "keycomb/json_io.hpp"
#include "keycomb/pieri.hpp"
#include "keycomb/space.hpp"
#include "keycomb/stratify.hpp"
#include "keycomb/tableau.hpp"

using namespace keycomb;

namespace {

std::string expansion_text(const SignedKeyExpansion& e) {
    SignedKeyExpansion c = canonicalize(e);
    if (c.terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [coeff, idx] : c.terms) {
        if (!first) out << (coeff < 0 ? " - " : " + ");
        else if (coeff < 0) out << "-";
        first = false;
        long long mag = coeff < 0 ? -coeff : coeff;
        if (mag != 1) out << mag << "*";
        out << "k[" << comp_to_string(idx) << "]";
    }
    return out.str();
}

std::string diagram_text(const Diagram& d) {
    std::ostringstream out;
    bool first = true;
    for (const Cell& c : d.cells()) {
        if (!first) out << " ";
        first = false;
        out << "(" << c.col << "," << c.row << ")";
    }
    return out.str();
}

struct Failure {
    std::string input;
    std::string expected;
    std::string actual;
};

struct Report {
    std::string suite;
    std::size_t instances = 0;
    std::vector<Failure> failures;
};

void print_report(const Report& r) {
    json out{{"suite", r.suite}, {"instances", r.instances}, {"failures", json::array()}};
    for (const Failure& f : r.failures)
        out["failures"].push_back(
            json{{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
    std::cout << out.dump(2) << "\n";
}

// all distinct trimmed compositions with at most n parts summing to at most s
std::vector<Composition> sweep_compositions(int n, int s) {
    std::set<Composition, CompLess> seen;
    Composition cur;
    auto rec = [&](auto&& self, int depth, int left) -> void {
        seen.insert(trimmed(cur));
        if (depth == n) return;
        for (int v = 0; v <= left; ++v) {
            cur.push_back(v);
            self(self, depth + 1, left - v);
            cur.pop_back();
        }
    };
    rec(rec, 0, s);
    return {seen.begin(), seen.end()};
}

std::map<Composition, std::size_t, CompLess> weight_counts(const std::set<Diagram>& diagrams) {
    std::map<Composition, std::size_t, CompLess> counts;
    for (const Diagram& d : diagrams) ++counts[trimmed(row_weight(d))];
    return counts;
}

std::string counts_to_string(const std::map<Composition, std::size_t, CompLess>& counts) {
    std::ostringstream out;
    for (const auto& [b, n] : counts) out << "[" << comp_to_string(b) << "]:" << n << " ";
    return out.str();
}

Report run_bijection_count(int n_max, int size_max, int k_max, int m_max, std::size_t cap) {
    Report r{"bijection-count"};
    for (const Composition& a : sweep_compositions(n_max, size_max))
        for (int k = 1; k <= k_max; ++k)
            for (int m = 1; m <= std::max(1, std::min(m_max, 2)); ++m) {
                ++r.instances;
                Composition strip = unit(k, k);
                strip[k - 1] = m;
                auto lhs_a = enumerate_kd(a, cap).diagrams;
                auto lhs_s = enumerate_kd(strip, cap).diagrams;
                std::map<Composition, std::size_t, CompLess> lhs;
                for (const Diagram& t : lhs_a)
                    for (const Diagram& u : lhs_s) {
                        Composition wa = row_weight(t);
                        Composition wb = row_weight(u);
                        std::size_t n = std::max(wa.size(), wb.size());
                        wa = padded(wa, n);
                        wb = padded(wb, n);
                        for (std::size_t i = 0; i < n; ++i) wa[i] += wb[i];
                        ++lhs[trimmed(wa)];
                    }
                auto rhs = weight_counts(enumerate_target_space(a, k, m, cap).diagrams);
                if (lhs != rhs)
                    r.failures.push_back({"a=" + comp_to_string(a) + " k=" + std::to_string(k) +
                                              " m=" + std::to_string(m),
                                          counts_to_string(lhs), counts_to_string(rhs)});
            }
    return r;
}

Report run_stratum_roundtrip(int n_max, int size_max, int k_max, std::size_t cap) {
    Report r{"stratum-roundtrip"};
    for (const Composition& a : sweep_compositions(n_max, size_max)) {
        if (trimmed(a).empty()) continue;
        for (int k = 2; k <= k_max; ++k) {
            auto kd = enumerate_kd(a, cap).diagrams;
            std::set<Diagram> images;
            for (const Diagram& u : enumerate_target_space(a, k, 1, cap).diagrams) {
                if (stratum_index(u, a, 1) != k) continue;
                ++r.instances;
                std::string input = "a=" + comp_to_string(a) + " k=" + std::to_string(k) +
                                    " U=" + diagram_text(u);
                try {
                    Diagram v = stratum_map(u, a, k);
                    if (kd.count(v) == 0)
                        r.failures.push_back({input, "image in KD(a)", diagram_text(v)});
                    else if (!images.insert(v).second)
                        r.failures.push_back({input, "injective image", diagram_text(v)});
                    Diagram back = stratum_inverse(v, a, k, added_column(u, a));
                    if (back != u)
                        r.failures.push_back({input, diagram_text(u), diagram_text(back)});
                } catch (const std::exception& e) {
                    r.failures.push_back({input, "round trip", e.what()});
                }
            }
        }
    }
    return r;
}

Report run_monkey_identity(int n_max, int size_max, int k_max) {
    Report r{"monkey-identity"};
    for (const Composition& a : sweep_compositions(n_max, size_max))
        for (int k = 1; k <= k_max; ++k) {
            ++r.instances;
            std::size_t n = std::max<std::size_t>(trimmed(a).size(), k);
            Polynomial x1k(n);
            for (int i = 1; i <= k; ++i) {
                std::vector<int> exp(n, 0);
                exp[i - 1] = 1;
                x1k.add_term(exp, 1);
            }
            Polynomial lhs = poly_mul(key_polynomial(a, n), x1k);
            Polynomial rhs = evaluate_expansion(pieri_signed_expansion(a, k), n);
            if (!poly_eq(lhs, rhs))
                r.failures.push_back({"a=" + comp_to_string(a) + " k=" + std::to_string(k),
                                      lhs.to_string(), rhs.to_string()});
        }
    return r;
}

Report run_rsk_rect(int n_max) {
    Report r{"rsk-rect"};
    std::vector<Composition> shapes;
    for (int l1 = 0; l1 <= 3; ++l1)
        for (int l2 = 0; l2 <= l1; ++l2)
            for (int l3 = 0; l3 <= l2; ++l3) shapes.push_back(trimmed({l1, l2, l3}));
    std::sort(shapes.begin(), shapes.end(), CompLess{});
    shapes.erase(std::unique(shapes.begin(), shapes.end()), shapes.end());
    for (int n = 1; n <= n_max; ++n)
        for (const Composition& lambda : shapes) {
            int width = lambda.empty() ? 0 : lambda[0];
            for (const SSYT& t : enumerate_ssyt(lambda, n))
                for (int j = 1; j <= n; ++j) {
                    ++r.instances;
                    Diagram lhs = diagram_of_tableau(rsk_insert(t, j), n);
                    Diagram rhs =
                        rectify(diagram_of_tableau(t, n).with({width + 1, n + 1 - j})).result;
                    if (lhs != rhs)
                        r.failures.push_back({"n=" + std::to_string(n) + " shape=" +
                                                  comp_to_string(lambda) + " j=" + std::to_string(j),
                                              diagram_text(lhs), diagram_text(rhs)});
                }
        }
    return r;
}

Report run_vexillary_sharpness(int n_max, int part_max, int m_max) {
    Report r{"vexillary-sharpness"};
    std::set<Composition, CompLess> seen;
    Composition cur(n_max, 0);
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n_max) {
            seen.insert(trimmed(cur));
            return;
        }
        for (int v = 0; v <= part_max; ++v) {
            cur[depth] = v;
            self(self, depth + 1);
        }
    };
    rec(rec, 0);
    for (const Composition& a : seen) {
        ++r.instances;
        bool nonneg = true;
        for (int k = 1; k <= n_max && nonneg; ++k)
            for (int m = 1; m <= m_max && nonneg; ++m)
                nonneg = expansion_nonnegative(horizontal_strip_expansion(a, k, m));
        bool vex = satisfies_vex2(padded(a, n_max));
        if (nonneg != vex)
            r.failures.push_back({"a=" + comp_to_string(a),
                                  vex ? "nonnegative for all k" : "some negative coefficient",
                                  nonneg ? "nonnegative for all k" : "some negative coefficient"});
    }
    return r;
}

Report run_lswap_consistency(int n_max, int size_max, std::size_t cap) {
    Report r{"lswap-consistency"};
    for (const Composition& a : sweep_compositions(n_max, size_max)) {
        ++r.instances;
        std::set<Composition, CompLess> from_kd;
        for (const Diagram& t : enumerate_kd(a, cap).diagrams) {
            Composition b = trimmed(row_weight(t));
            if (t == key_diagram(b)) from_kd.insert(b);
        }
        auto down = lswap_down_set(a);
        if (from_kd != down) {
            std::ostringstream exp, act;
            for (const Composition& b : down) exp << "[" << comp_to_string(b) << "] ";
            for (const Composition& b : from_kd) act << "[" << comp_to_string(b) << "] ";
            r.failures.push_back({"a=" + comp_to_string(a), exp.str(), act.str()});
        }
    }
    return r;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"key polynomial and Kohnert diagram toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    std::size_t cap = kDefaultCap;
    unsigned long seed = 0;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--max-diagrams", cap, "enumeration cap")->capture_default_str();
    app.add_option("--seed", seed, "random seed for sampled suites");

    std::string kd_comp;
    auto* cmd_kd = app.add_subcommand("kd", "enumerate the Kohnert diagrams of a composition");
    cmd_kd->add_option("composition", kd_comp)->required();

    std::string kp_comp;
    int kp_n = 0;
    auto* cmd_keypoly = app.add_subcommand("keypoly", "print a key polynomial");
    cmd_keypoly->add_option("composition", kp_comp)->required();
    cmd_keypoly->add_option("--n", kp_n, "pad the composition to this many parts");

    std::string pieri_comp, mode = "auto";
    int pieri_k = 0, pieri_m = 1;
    auto* cmd_pieri = app.add_subcommand("pieri", "key expansion of key(a) * s_(m)(x_1..x_k)");
    cmd_pieri->add_option("composition", pieri_comp)->required();
    cmd_pieri->add_option("--k", pieri_k)->required();
    cmd_pieri->add_option("--m", pieri_m)->capture_default_str();
    cmd_pieri->add_option("--mode", mode)
        ->check(CLI::IsMember({"auto", "formula", "oracle"}))
        ->capture_default_str();

    auto* cmd_expand =
        app.add_subcommand("expand", "key expansion of a polynomial read as JSON from stdin");

    std::string rsk_word;
    auto* cmd_rsk = app.add_subcommand("rsk", "row insert a word into the empty tableau");
    cmd_rsk->add_option("word", rsk_word)->required();

    std::string suite;
    int n_max = 3, size_max = 5, k_max = 3, m_max = 2;
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"bijection-count", "stratum-roundtrip", "monkey-identity",
                               "rsk-rect", "vexillary-sharpness", "lswap-consistency"}));
    cmd_verify->add_option("--n-max", n_max)->capture_default_str();
    cmd_verify->add_option("--size-max", size_max,
                           "bound on |a| (largest part for vexillary-sharpness)")
        ->capture_default_str();
    cmd_verify->add_option("--k-max", k_max)->capture_default_str();
    cmd_verify->add_option("--m-max", m_max)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_kd->parsed()) {
            KohnertSpace space = enumerate_kd(parse_composition(kd_comp), cap);
            if (format == "json") {
                std::cout << to_json(space).dump() << "\n";
            } else {
                std::cout << space.diagrams.size() << " diagrams\n";
                for (const Diagram& d : space.diagrams) std::cout << diagram_text(d) << "\n";
            }
            return 0;
        }
        if (cmd_keypoly->parsed()) {
            Composition a = parse_composition(kp_comp);
            if (kp_n > 0) a = padded(a, kp_n);
            Polynomial p = key_polynomial(a, std::max<std::size_t>(a.size(), comp_length(a)));
            std::cout << (format == "json" ? to_json(p).dump() : p.to_string()) << "\n";
            return 0;
        }
        if (cmd_pieri->parsed()) {
            Composition a = parse_composition(pieri_comp);
            SignedKeyExpansion e;
            if (mode == "formula") {
                if (pieri_m != 1) {
                    std::cerr << "formula mode requires m=1\n";
                    return 2;
                }
                e = pieri_signed_expansion(a, pieri_k);
            } else if (mode == "oracle") {
                e = horizontal_strip_expansion(a, pieri_k, pieri_m);
            } else {
                e = horizontal_strip_expansion(a, pieri_k, pieri_m);
                if (pieri_m == 1) {
                    SignedKeyExpansion f = pieri_signed_expansion(a, pieri_k);
                    if (!expansion_eq(e, f)) {
                        std::cerr << "formula/oracle mismatch\nformula: " << expansion_text(f)
                                  << "\noracle:  " << expansion_text(e) << "\n";
                        return 4;
                    }
                }
            }
            std::cout << (format == "json" ? to_json(e).dump() : expansion_text(e)) << "\n";
            return 0;
        }
        if (cmd_expand->parsed()) {
            json j = json::parse(std::cin, nullptr, true);
            SignedKeyExpansion e = key_expand(polynomial_from_json(j));
            std::cout << (format == "json" ? to_json(e).dump() : expansion_text(e)) << "\n";
            return 0;
        }
        if (cmd_rsk->parsed()) {
            SSYT t;
            for (int v : parse_composition(rsk_word)) {
                if (v < 1) throw InvalidComposition("word entries must be positive");
                t = rsk_insert(t, v);
            }
            if (format == "json") {
                std::cout << to_json(t).dump() << "\n";
            } else {
                for (const auto& row : t.rows) {
                    for (std::size_t i = 0; i < row.size(); ++i)
                        std::cout << (i ? " " : "") << row[i];
                    std::cout << "\n";
                }
            }
            return 0;
        }
        if (cmd_verify->parsed()) {
            Report r;
            if (suite == "bijection-count")
                r = run_bijection_count(n_max, size_max, k_max, m_max, cap);
            else if (suite == "stratum-roundtrip")
                r = run_stratum_roundtrip(n_max, size_max, k_max, cap);
            else if (suite == "monkey-identity")
                r = run_monkey_identity(n_max, size_max, k_max);
            else if (suite == "rsk-rect")
                r = run_rsk_rect(n_max);
            else if (suite == "vexillary-sharpness")
                r = run_vexillary_sharpness(n_max, size_max, m_max);
            else
                r = run_lswap_consistency(n_max, size_max, cap);
            print_report(r);
            return r.failures.empty() ? 0 : 1;
        }
    } catch (const CapExceeded& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const json::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
