// hopfca: batch front end for the Hopf-algebra computer-algebra library.
// Exit codes: 0 success, 1 mathematical failure, 2 input error, 3 resource cap.

#include <algorithm>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hopfca/json_io.hpp"

namespace {

using namespace hopfca;

constexpr int kOk = 0, kMathFail = 1, kInputError = 2, kCapExceeded = 3;

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

CWComplexData space_by_name(const std::string& name) {
    static const std::map<std::string, std::string> canon = {
        {"pt", "pt"},   {"s1", "S1"},         {"s1-big", "S1-big"}, {"s2", "S2"},
        {"s2-big", "S2-big"}, {"rp1", "RP1"}, {"rp2", "RP2"},       {"t2", "T2"},
        {"d2", "D2"},
    };
    auto it = canon.find(lower(name));
    if (it == canon.end()) throw InputError("unknown builtin space: " + name);
    return builtin_space(it->second);
}

FieldSpec parse_field(const std::string& s) {
    std::string l = lower(s);
    if (l == "q" || l == "rational") return FieldSpec::rational();
    try {
        return FieldSpec::prime(std::stoull(s));
    } catch (const std::exception&) {
        throw InputError("field must be a prime or Q, got " + s);
    }
}

void print_check_report(const CheckReport& rep) {
    for (const Check& c : rep.checks) {
        std::cout << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name;
        if (!c.pass && !c.detail.empty()) std::cout << "  at " << c.detail;
        std::cout << "\n";
    }
}

void print_info(const HopfPtr& h, std::uint64_t budget) {
    require_verified(h);
    std::cout << "dim " << h->dim() << "\n";
    std::cout << "field " << h->field().str() << "\n";
    auto count = [&](const HopfPtr& a, const char* label) {
        try {
            std::cout << label << " " << group_likes(a, budget).size() << "\n";
        } catch (const CapError&) {
            std::cout << label << " ? (enumeration budget exceeded)\n";
        }
    };
    count(h, "group-likes");
    count(dual(h), "dual group-likes");
    IntegralResult in = integral(h), co = cointegral(h);
    std::cout << "semisimple " << (in.semisimple ? "yes" : "no") << "\n";
    std::cout << "cosemisimple " << (co.semisimple ? "yes" : "no") << "\n";
    auto print_vec = [](const Vec& v) {
        std::cout << "[";
        for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? ", " : "") << v[i].str();
        std::cout << "]\n";
    };
    if (in.normalized_integral) {
        std::cout << "normalized integral ";
        print_vec(*in.normalized_integral);
    }
    if (co.normalized_integral) {
        std::cout << "normalized cointegral ";
        print_vec(*co.normalized_integral);
    }
    TrivialityClass cls = classify_triviality(h, budget);
    std::cout << "class " << to_string(cls) << "\n";
    if (cls == TrivialityClass::Unknown)
        std::cout << "warning: classification inconclusive within the enumeration budget\n";
}

void print_homology(const HomologyResult& r) {
    std::cout << "degree  dim  GE    GE^v  ss   css  class\n";
    for (const DegreeSummary& s : r.degrees) {
        auto opt = [](const std::optional<std::size_t>& v) {
            return v ? std::to_string(*v) : std::string("?");
        };
        std::cout << "  " << s.degree << "     " << s.dim << "    " << opt(s.ge) << "     "
                  << opt(s.ge_dual) << "     " << (s.semisimple ? "y" : "n") << "    "
                  << (s.cosemisimple ? "y" : "n") << "    " << to_string(s.cls) << "\n";
    }
}

SubcomplexSpec parse_relative(const std::string& arg, const CWComplexData& kw) {
    std::string l = lower(arg);
    if (l == "empty" || l == "none") return {};
    // builtin pairs: the 1-skeleton circle inside RP2 / D2
    if ((l == "rp1" || l == "s1") && kw.cells.size() == 3 && kw.cells[0] == 1 && kw.cells[1] == 1)
        return {{0}, {0}};
    return subcomplex_from_json(load_json_file(arg));
}

struct Output {
    std::string path;
    void save(const Json& j) const {
        if (!path.empty()) save_json_file(path, j);
    }
};

int run(int argc, char** argv) {
    CLI::App app{"Exact computer algebra for finite-dimensional bicommutative Hopf algebras"};
    app.require_subcommand(1);

    // verify
    std::string verify_path;
    CLI::App* verify = app.add_subcommand("verify", "run the 11 Hopf axiom checks on a JSON file");
    verify->add_option("file", verify_path, "Hopf algebra JSON")->required();

    // info
    std::string info_path;
    std::uint64_t budget = 10'000'000;
    CLI::App* info = app.add_subcommand("info", "invariants of a Hopf algebra");
    info->add_option("file", info_path, "Hopf algebra JSON")->required();
    info->add_option("--budget", budget, "group-like enumeration budget");

    // construct
    std::string what, group_spec = "1", field_spec = "3";
    Output cons_out;
    CLI::App* cons = app.add_subcommand("construct", "build a named Hopf algebra");
    cons->add_option("what", what, "one of: group, function, d1, d2")->required();
    cons->add_option("--group", group_spec, "comma-separated cyclic orders, e.g. 2,4");
    cons->add_option("--field", field_spec, "prime p or Q");
    cons->add_option("-o,--output", cons_out.path, "write the JSON presentation here");

    // dual / dpair
    std::string dual_path;
    Output dual_out;
    CLI::App* dualc = app.add_subcommand("dual", "dual Hopf algebra");
    dualc->add_option("file", dual_path, "Hopf algebra JSON")->required();
    dualc->add_option("-o,--output", dual_out.path, "output JSON");
    std::string dpair_path;
    Output dpair_out;
    CLI::App* dpairc = app.add_subcommand("dpair", "D(A) = A (x) dual(A)");
    dpairc->add_option("file", dpair_path, "Hopf algebra JSON")->required();
    dpairc->add_option("-o,--output", dpair_out.path, "output JSON");

    // tensor
    std::vector<std::string> tensor_paths;
    Output tensor_out;
    CLI::App* tensorc = app.add_subcommand("tensor", "tensor product of two Hopf algebras");
    tensorc->add_option("files", tensor_paths, "two Hopf algebra JSON files")->expected(2);
    tensorc->add_option("-o,--output", tensor_out.path, "output JSON");

    // endring
    std::string endring_path;
    std::uint64_t endring_budget = 1'000'000;
    Output endring_out;
    CLI::App* endringc = app.add_subcommand("endring", "enumerate the Hopf endomorphism ring");
    endringc->add_option("file", endring_path, "Hopf algebra JSON")->required();
    endringc->add_option("--budget", endring_budget, "candidate-assignment budget");
    endringc->add_option("-o,--output", endring_out.path, "output JSON");

    // homology
    std::string h_space, h_cw, h_coeff, h_relative;
    bool h_les = false, h_emit = false;
    Output h_out;
    CLI::App* homologyc = app.add_subcommand("homology", "Hopf-valued cellular homology");
    homologyc->add_option("--space", h_space, "builtin space name");
    homologyc->add_option("--cw", h_cw, "CW complex JSON");
    homologyc->add_option("--coeff", h_coeff, "coefficient Hopf algebra JSON")->required();
    homologyc->add_option("--relative", h_relative, "subcomplex JSON, or rp1/s1/empty");
    homologyc->add_flag("--les", h_les, "verify the long exact sequence of the pair");
    homologyc->add_flag("--emit-presentations", h_emit, "include presentations in the JSON output");
    homologyc->add_option("-o,--output", h_out.path, "output JSON");

    // expfun
    std::string e_coeff, e_chain, e_space;
    std::uint64_t e_prime = 0;
    Output e_out;
    CLI::App* expfunc = app.add_subcommand("expfun", "apply the exponential functor to a chain");
    expfunc->add_option("--coeff", e_coeff, "coefficient Hopf algebra JSON")->required();
    expfunc->add_option("--prime", e_prime, "p of the F_p-action")->required();
    expfunc->add_option("--chain", e_chain, "F_p chain complex JSON");
    expfunc->add_option("--space", e_space, "builtin space for the cellular chain");
    expfunc->add_option("-o,--output", e_out.path, "output JSON");

    // lift
    std::string lift_path;
    CLI::App* liftc = app.add_subcommand("lift", "read a group homomorphism off a Hopf morphism");
    liftc->add_option("file", lift_path, "morphism JSON")->required();

    CLI11_PARSE(app, argc, argv);

    if (verify->parsed()) {
        HopfPtr h = hopf_from_json(load_json_file(verify_path));
        CheckReport rep = verify_hopf(*h);
        print_check_report(rep);
        return rep.all_pass() ? kOk : kMathFail;
    }
    if (info->parsed()) {
        print_info(hopf_from_json(load_json_file(info_path)), budget);
        return kOk;
    }
    if (cons->parsed()) {
        FieldSpec f = parse_field(field_spec);
        std::string w = lower(what);
        HopfPtr h;
        if (w == "group") h = group_hopf(f, parse_group(group_spec));
        else if (w == "function") h = function_hopf(f, parse_group(group_spec));
        else if (w == "d1") h = appendix_d1();
        else if (w == "d2") h = appendix_d2();
        else throw InputError("unknown construction: " + what);
        std::cout << "constructed " << (h->metadata().origin.empty() ? w : h->metadata().origin)
                  << ", dim " << h->dim() << " over " << h->field().str() << "\n";
        cons_out.save(hopf_to_json(h));
        return kOk;
    }
    if (dualc->parsed()) {
        HopfPtr h = hopf_from_json(load_json_file(dual_path));
        require_verified(h);
        HopfPtr d = dual(h);
        std::cout << "dual computed, dim " << d->dim() << "\n";
        dual_out.save(hopf_to_json(d));
        return kOk;
    }
    if (dpairc->parsed()) {
        HopfPtr h = hopf_from_json(load_json_file(dpair_path));
        require_verified(h);
        HopfPtr d = d_pair(h);
        std::cout << "D(A) computed, dim " << d->dim() << "\n";
        dpair_out.save(hopf_to_json(d));
        return kOk;
    }
    if (tensorc->parsed()) {
        HopfPtr a = hopf_from_json(load_json_file(tensor_paths[0]));
        HopfPtr b = hopf_from_json(load_json_file(tensor_paths[1]));
        require_verified(a);
        require_verified(b);
        HopfPtr t = tensor(a, b);
        std::cout << "tensor product computed, dim " << t->dim() << "\n";
        tensor_out.save(hopf_to_json(t));
        return kOk;
    }
    if (endringc->parsed()) {
        HopfPtr h = hopf_from_json(load_json_file(endring_path));
        EndRingReport rep = enumerate_end_ring(h, endring_budget);
        std::cout << "elements " << rep.elements.size() << "\n";
        std::cout << "ring " << (rep.ring_id ? *rep.ring_id : std::string("(not a field)")) << "\n";
        if (!endring_out.path.empty()) {
            Json j;
            j["elements"] = Json::array();
            for (const HopfMorphism& f : rep.elements) j["elements"].push_back(morphism_to_json(f));
            j["add_table"] = rep.add_table;
            j["mul_table"] = rep.mul_table;
            if (rep.ring_id) j["ring_id"] = *rep.ring_id;
            endring_out.save(j);
        }
        return kOk;
    }
    if (homologyc->parsed()) {
        if (h_space.empty() == h_cw.empty())
            throw InputError("homology needs exactly one of --space or --cw");
        CWComplexData kw = h_space.empty() ? cw_from_json(load_json_file(h_cw)) : space_by_name(h_space);
        HopfPtr coeff = hopf_from_json(load_json_file(h_coeff));
        require_verified(coeff);
        std::optional<SubcomplexSpec> sub;
        if (!h_relative.empty()) sub = parse_relative(h_relative, kw);
        HomologyResult res = homology_all(kw, coeff, sub);
        print_homology(res);
        Json out;
        out["homology"] = homology_result_to_json(res, h_emit);
        bool les_ok = true;
        if (h_les) {
            LesReport les = verify_les(kw, sub.value_or(SubcomplexSpec{}), coeff);
            les_ok = les.all_exact();
            Json lj = Json::array();
            for (const LesSpot& s : les.spots) {
                std::cout << (s.exact ? "exact " : "NOT EXACT ") << "at " << s.description << "\n";
                lj.push_back({{"spot", s.description}, {"exact", s.exact}});
            }
            out["les"] = std::move(lj);
        }
        h_out.save(out);
        return les_ok ? kOk : kMathFail;
    }
    if (expfunc->parsed()) {
        if (e_chain.empty() == e_space.empty())
            throw InputError("expfun needs exactly one of --chain or --space");
        HopfPtr coeff = hopf_from_json(load_json_file(e_coeff));
        ActionSpec spec = canonical_action(coeff, e_prime);
        FpChainComplex chain = e_chain.empty() ? cw_to_fp_chain(space_by_name(e_space), e_prime)
                                               : fp_chain_from_json(load_json_file(e_chain));
        HopfChainComplex hc = apply_exp_to_chain(spec, chain);
        HomologyResult res = homology_all(hc);
        print_homology(res);
        Json out;
        out["homology"] = homology_result_to_json(res, false);
        Json cmp = Json::array();
        bool all_iso = true;
        for (std::size_t q = 0; q < chain.dims.size(); ++q) {
            ExpComparison c = exp_compare_at(spec, chain, q);
            all_iso = all_iso && c.invertible;
            std::cout << "comparison at degree " << q << ": "
                      << (c.invertible ? "isomorphism" : "NOT an isomorphism") << "\n";
            cmp.push_back({{"degree", q}, {"isomorphism", c.invertible}});
        }
        out["comparison"] = std::move(cmp);
        e_out.save(out);
        return all_iso ? kOk : kMathFail;
    }
    if (liftc->parsed()) {
        HopfMorphism f = morphism_from_json(load_json_file(lift_path));
        GroupHom phi = lift_to_group_hom(f);
        auto orders = [](const FiniteAbelianGroup& g) {
            std::string s;
            for (std::size_t i = 0; i < g.cyclic_orders.size(); ++i)
                s += (i ? "," : "") + std::to_string(g.cyclic_orders[i]);
            return s.empty() ? std::string("1") : s;
        };
        std::cout << "group hom from Z/(" << orders(phi.source) << ") to Z/(" << orders(phi.target)
                  << "), generator images:";
        for (std::size_t img : phi.images) std::cout << " " << phi.target.element_name(img);
        std::cout << "\n";
        return kOk;
    }
    return kInputError;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CapError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const MathError& e) {
        std::cerr << "math failure: " << e.what() << "\n";
        return kMathFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
