// bihom: exact structure-constant kernel for bihom-associative and
// bihom-lie superalgebras.  Subcommands verify defining identities,
// classify subgroup-summed associativity, run the constructive theorems,
// and compute twisted derivation spaces.  Exit codes: 0 all checks pass,
// 1 a mathematical check failed, 2 usage or input error.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <string>

#include "bihom/admissibility.hpp"
#include "bihom/constructions.hpp"
#include "bihom/derivations.hpp"
#include "bihom/document.hpp"
#include "bihom/generator.hpp"

namespace {

using namespace bihom;

constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitInputError = 2;

bool g_verbose = false;

std::string term_string(const Rational& c, int index) {
    const std::string basis = "e" + std::to_string(index + 1);
    if (c == 1) return basis;
    if (c == -1) return "-" + basis;
    return to_fraction_string(c) + "*" + basis;
}

std::string combination_string(const Vec& v) {
    std::string out;
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
        if (v[i].is_zero()) continue;
        if (out.empty()) {
            out = term_string(v[i], i);
        } else if (v[i] > 0) {
            out += " + " + term_string(v[i], i);
        } else {
            out += " - " + term_string(-v[i], i);
        }
    }
    return out.empty() ? "0" : out;
}

std::string tuple_string(const std::vector<int>& indices) {
    std::string out = "(";
    for (std::size_t n = 0; n < indices.size(); ++n) {
        if (n) out += ",";
        out += "e" + std::to_string(indices[n] + 1);
    }
    return out + ")";
}

void print_report(std::ostream& os, const IdentityReport& r) {
    if (r.holds) {
        os << r.identity << ": PASS\n";
        return;
    }
    os << r.identity << ": FAIL (" << r.witnesses.size() << " witnesses)\n";
    const std::size_t shown = g_verbose ? r.witnesses.size() : std::min<std::size_t>(5, r.witnesses.size());
    for (std::size_t n = 0; n < shown; ++n) {
        const Witness& w = r.witnesses[n];
        os << "  at " << tuple_string(w.indices);
        if (!w.tag.empty()) os << " [" << w.tag << "]";
        os << ": residual = " << combination_string(w.residual) << "\n";
    }
    if (shown < r.witnesses.size())
        os << "  ... " << (r.witnesses.size() - shown) << " more\n";
}

void print_matrix(std::ostream& os, const Mat& m) {
    for (int i = 0; i < m.rows(); ++i) {
        os << "[";
        for (int j = 0; j < m.cols(); ++j) os << " " << to_fraction_string(m.at(i, j));
        os << " ]\n";
    }
}

void print_header(std::ostream& os, const BiHomSuperalgebra& a) {
    os << "algebra: " << a.name() << "\n";
    os << "dim: " << a.dim() << "\n";
    os << "parities: [";
    for (int i = 0; i < a.dim(); ++i) os << (i ? "," : "") << a.parity(i).bit();
    os << "]\n";
}

int cmd_verify(const std::string& path) {
    const BiHomSuperalgebra a = parse_algebra_file(path);
    const StructureReport r = classify_structure(a);
    print_header(std::cout, a);
    print_report(std::cout, r.commuting);
    print_report(std::cout, r.multiplicative);
    const bool check_assoc = a.kind() != AlgebraKind::lie_candidate;
    const bool check_lie = a.kind() != AlgebraKind::associative_candidate;
    if (check_assoc) print_report(std::cout, r.associative);
    if (check_lie) {
        print_report(std::cout, r.skew_supersymmetry);
        print_report(std::cout, r.jacobi);
    }
    std::string verdict;
    if (r.is_bihom_associative() && r.is_bihom_lie())
        verdict = "bihom-associative and bihom-lie superalgebra";
    else if (r.is_bihom_associative())
        verdict = "bihom-associative superalgebra";
    else if (r.is_bihom_lie())
        verdict = "bihom-lie superalgebra";
    else
        verdict = "neither bihom-associative nor bihom-lie";
    std::cout << "verdict: " << verdict << "\n";

    bool pass = r.common_axioms_hold();
    if (a.kind() == AlgebraKind::associative_candidate)
        pass = pass && r.associative.holds;
    else if (a.kind() == AlgebraKind::lie_candidate)
        pass = pass && r.skew_supersymmetry.holds && r.jacobi.holds;
    else
        pass = r.is_bihom_associative() || r.is_bihom_lie();
    return pass ? kExitPass : kExitMathFailure;
}

int cmd_classify(const std::string& path) {
    const BiHomSuperalgebra a = parse_algebra_file(path);
    print_header(std::cout, a);
    const auto subs = classify_subgroups(a);
    std::string members;
    for (Subgroup g : {Subgroup::G1, Subgroup::G2, Subgroup::G3, Subgroup::G4, Subgroup::G5,
                       Subgroup::G6}) {
        const bool in = subs.count(g) == 1;
        std::cout << subgroup_name(g) << ": " << (in ? "PASS" : "FAIL") << "\n";
        if (in) {
            if (!members.empty()) members += ",";
            members += subgroup_name(g);
        }
    }
    std::cout << "{" << members << "}\n";
    return kExitPass;
}

int cmd_commutator(const std::string& path, const std::string& out_path) {
    const BiHomSuperalgebra a = parse_algebra_file(path);
    print_header(std::cout, a);
    const BiHomSuperalgebra out = supercommutator(a);
    std::cout << "supercommutator bracket verified: bihom-lie\n";
    serialize_algebra_file(out, out_path);
    std::cout << "wrote: " << out_path << "\n";
    return kExitPass;
}

int cmd_twist(const std::string& path, const std::string& alpha_path,
              const std::string& beta_path, const std::string& out_path) {
    const BiHomSuperalgebra lie = parse_algebra_file(path);
    print_header(std::cout, lie);
    const EvenMap a = parse_map_file(alpha_path, lie.space());
    const EvenMap b = parse_map_file(beta_path, lie.space());
    const BiHomSuperalgebra out = yau_twist_lie(lie, a, b);
    std::cout << "twisted bracket verified: bihom-lie\n";
    serialize_algebra_file(out, out_path);
    std::cout << "wrote: " << out_path << "\n";
    return kExitPass;
}

int cmd_derive(const std::string& path, int k) {
    const BiHomSuperalgebra a = parse_algebra_file(path);
    print_header(std::cout, a);
    const StructureReport r = classify_structure(a);
    if (!r.is_bihom_lie()) {
        std::cout << "bihom-lie suite: FAIL\n";
        for (const IdentityReport* rep :
             {&r.commuting, &r.multiplicative, &r.skew_supersymmetry, &r.jacobi})
            if (!rep->holds) print_report(std::cout, *rep);
        return kExitMathFailure;
    }
    std::cout << "bihom-lie suite: PASS\n";
    const DerivationSpace ds = derivation_space(a, k);
    std::cout << "derivations for exponent k = " << k << "\n";
    std::cout << "even basis (" << ds.even_basis.size() << "):\n";
    for (const auto& d : ds.even_basis) {
        print_matrix(std::cout, d.entries());
        std::cout << "\n";
    }
    std::cout << "odd basis (" << ds.odd_basis.size() << "):\n";
    for (const auto& d : ds.odd_basis) {
        print_matrix(std::cout, d.entries());
        std::cout << "\n";
    }
    return kExitPass;
}

int cmd_inner(const std::string& path, int k) {
    const BiHomSuperalgebra a = parse_algebra_file(path);
    print_header(std::cout, a);
    const auto fp = fixed_points(a);
    std::cout << "fixed points: " << fp.size() << "\n";
    bool all_pass = true;
    int counter = 0;
    for (const auto& [parity, vec] : fp) {
        ++counter;
        std::cout << "fixed point " << counter << ": " << combination_string(vec) << " (parity "
                  << parity.bit() << ")\n";
        const HomogeneousMap ad = inner_derivation(a, vec, k);
        std::cout << "inner derivation for k = " << k << ":\n";
        print_matrix(std::cout, ad.entries());
        const bool ok = is_derivation(a, ad, k + 1);
        std::cout << "derivation check (exponent " << (k + 1) << "): " << (ok ? "PASS" : "FAIL")
                  << "\n";
        all_pass = all_pass && ok;
    }
    return all_pass ? kExitPass : kExitMathFailure;
}

int cmd_check_der(const std::string& path, int max_k) {
    const BiHomSuperalgebra a = parse_algebra_file(path);
    print_header(std::cout, a);
    std::cout << "max exponent: " << max_k << "\n";
    std::cout << "derivation basis sizes:";
    for (int k = -1; k <= max_k; ++k)
        std::cout << " k=" << k << ": " << derivation_space(a, k).total_dim();
    std::cout << "\n";
    const DerStructureReport r = verify_der_structure(a, max_k);
    print_report(std::cout, r.commuting);
    print_report(std::cout, r.multiplicative);
    print_report(std::cout, r.skew);
    print_report(std::cout, r.jacobi);
    return r.all_hold() ? kExitPass : kExitMathFailure;
}

int cmd_sample(const std::string& kind, std::uint64_t seed, const std::string& out_path) {
    InstanceGenerator gen(seed);
    BiHomSuperalgebra out = kind == "assoc" ? gen.bihom_associative() : gen.bihom_lie().twisted;
    std::cout << "sample kind: " << kind << " seed: " << seed << "\n";
    std::cout << "verified: " << (kind == "assoc" ? "bihom-associative" : "bihom-lie") << "\n";
    serialize_algebra_file(out, out_path);
    std::cout << "wrote: " << out_path << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification kernel for bihom superalgebra structures"};
    app.require_subcommand(1);
    app.add_flag("--verbose", g_verbose, "print full witness lists");
    app.failure_message(CLI::FailureMessage::help);

    std::string path, out_path, alpha_path, beta_path, kind = "assoc";
    int k = 0, max_k = 2;
    std::uint64_t seed = 1;

    auto* verify = app.add_subcommand("verify", "check the defining identities of a document");
    verify->add_option("file", path)->required();

    auto* classify = app.add_subcommand("classify", "subgroup-summed associativity membership");
    classify->add_option("file", path)->required();

    auto* commutator =
        app.add_subcommand("commutator", "supercommutator bracket of an associative document");
    commutator->add_option("file", path)->required();
    commutator->add_option("-o,--output", out_path)->required();

    auto* twist = app.add_subcommand("twist", "twist a lie superalgebra by a commuting map pair");
    twist->add_option("file", path)->required();
    twist->add_option("--alpha", alpha_path)->required();
    twist->add_option("--beta", beta_path)->required();
    twist->add_option("-o,--output", out_path)->required();

    auto* derive = app.add_subcommand("derive", "twisted derivation space basis");
    derive->add_option("file", path)->required();
    derive->add_option("--k", k, "exponent, -1 or greater")
        ->required()
        ->check(CLI::Range(-1, 1 << 20));

    auto* inner = app.add_subcommand("inner", "inner derivations at the fixed points");
    inner->add_option("file", path)->required();
    inner->add_option("--k", k, "exponent, 0 or greater")->required()->check(CLI::Range(0, 1 << 20));

    auto* check_der = app.add_subcommand("check-der", "bihom-lie structure on derivation spaces");
    check_der->add_option("file", path)->required();
    check_der->add_option("--max-k", max_k)->check(CLI::Range(-1, 1 << 20));

    auto* sample = app.add_subcommand("sample", "emit a seeded verified instance");
    sample->add_option("--kind", kind)->check(CLI::IsMember({"assoc", "lie"}));
    sample->add_option("--seed", seed);
    sample->add_option("-o,--output", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (verify->parsed()) return cmd_verify(path);
        if (classify->parsed()) return cmd_classify(path);
        if (commutator->parsed()) return cmd_commutator(path, out_path);
        if (twist->parsed()) return cmd_twist(path, alpha_path, beta_path, out_path);
        if (derive->parsed()) return cmd_derive(path, k);
        if (inner->parsed()) return cmd_inner(path, k);
        if (check_der->parsed()) return cmd_check_der(path, max_k);
        if (sample->parsed()) return cmd_sample(kind, seed, out_path);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const NotBijectiveError& e) {
        std::cerr << "failed: " << e.what() << "\n";
        return kExitMathFailure;
    } catch (const NotFixedPointError& e) {
        std::cerr << "failed: " << e.what() << "\n";
        return kExitMathFailure;
    } catch (const ConstructionError& e) {
        std::cerr << "failed: " << e.what() << "\n";
        print_report(std::cerr, e.report);
        return kExitMathFailure;
    } catch (const StructuralError& e) {
        std::cerr << "failed: " << e.what() << "\n";
        return kExitMathFailure;
    }
    return kExitInputError;
}
