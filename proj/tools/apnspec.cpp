// apnspec: field info, differential spectra, theorem verification,
// exponent equivalence, Zha-Wang conversion, APN search.
//
// Exit codes: 0 success/verified, 1 verification mismatch or broken
// invariant, 2 usage / hypothesis error.  Stdout is byte-reproducible;
// timing goes to stderr.

#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "apn/chain.hpp"
#include "apn/equiv.hpp"
#include "apn/gf.hpp"
#include "apn/numth.hpp"
#include "apn/parallel.hpp"
#include "apn/spectra.hpp"

namespace {

using nlohmann::json;

std::string elt_str(const apn::gf::FieldElement& x) {
    std::string s;
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(x.coeffs()[i]);
    }
    return s;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// "c0,c1,...,cn" -> coefficient vector
std::vector<std::uint32_t> parse_poly(const std::string& text) {
    std::vector<std::uint32_t> coeffs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::uint32_t v = 0;
        const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + comma, v);
        if (ec != std::errc() || ptr != text.data() + comma)
            throw std::invalid_argument("bad polynomial coefficient list: " + text);
        coeffs.push_back(v);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return coeffs;
}

json spectrum_json(const apn::spectra::SpectrumMultiset& s) {
    json arr = json::array();
    for (const auto& [size, mult] : s.entries)
        arr.push_back(json{{"multiplicity", mult}, {"size", size}});
    return arr;
}

struct Emitter {
    std::string format;  // json | csv | text

    void operator()(const std::string& command, const json& inputs, const json& result,
                    const std::vector<std::vector<std::string>>& csv_rows,
                    const std::string& text) const {
        if (format == "json") {
            const json record{{"command", command}, {"inputs", inputs}, {"result", result}};
            std::cout << record.dump(2) << '\n';
        } else if (format == "csv") {
            for (const auto& row : csv_rows) {
                for (std::size_t i = 0; i < row.size(); ++i) {
                    if (i) std::cout << ',';
                    std::cout << csv_escape(row[i]);
                }
                std::cout << '\n';
            }
        } else {
            std::cout << text;
        }
    }
};

// ---- field-info ------------------------------------------------------

int cmd_field_info(const Emitter& emit, std::uint32_t p, std::uint32_t n,
                   const std::string& poly_text) {
    apn::gf::Field f = poly_text.empty()
                           ? apn::gf::field_new(p, n)
                           : apn::gf::field_new(p, n, parse_poly(poly_text));
    const std::string poly = apn::gf::describe(f);
    const std::string prim = elt_str(apn::gf::primitive_element(f));
    const std::uint64_t q = f->q();
    const std::uint64_t residues = (q - 1) / 2;

    json inputs{{"n", n}, {"p", p}};
    if (!poly_text.empty()) inputs["poly"] = poly_text;
    const json result{
        {"polynomial", poly}, {"primitive", prim}, {"q", q}, {"quadratic_residues", residues}};

    std::vector<std::vector<std::string>> rows{{"key", "value"},
                                               {"polynomial", poly},
                                               {"primitive", prim},
                                               {"q", std::to_string(q)},
                                               {"quadratic_residues", std::to_string(residues)}};
    std::ostringstream text;
    text << "q: " << q << '\n'
         << "polynomial: " << poly << '\n'
         << "primitive: " << prim << '\n'
         << "quadratic_residues: " << residues << '\n';

    emit("field-info", inputs, result, rows, text.str());
    return 0;
}

// ---- spectrum --------------------------------------------------------

int cmd_spectrum(const Emitter& emit, std::uint32_t p, std::uint32_t n,
                 const std::string& exp_text, bool full, bool per_fiber) {
    const apn::gf::Field f = apn::gf::field_new(p, n);
    const auto frac = apn::numth::parse_fraction(exp_text);
    const std::uint64_t d = apn::numth::resolve_exponent(frac, f->q() - 1).value;

    json inputs{{"exp", exp_text}, {"full", full}, {"n", n}, {"p", p}, {"per_fiber", per_fiber}};

    if (per_fiber) {
        const apn::spectra::FiberTable table = apn::spectra::reduced_derivative_table(f, d);
        json fibers = json::array();
        std::vector<std::vector<std::string>> rows{{"c", "count"}};
        std::ostringstream text;
        text << "GF(" << f->q() << ") exponent " << d << " derivative fibers (a=1)\n";
        for (const auto& [c, count] : table.entries) {
            fibers.push_back(json{{"c", elt_str(c)}, {"count", count}});
            rows.push_back({elt_str(c), std::to_string(count)});
            text << elt_str(c) << " -> " << count << '\n';
        }
        emit("spectrum", inputs, json{{"exponent", d}, {"fibers", fibers}}, rows, text.str());
        return 0;
    }

    apn::spectra::SpectrumMultiset spec = apn::spectra::reduced_spectrum(f, d);
    const std::uint64_t uniformity = spec.entries.back().first;
    const bool apn_flag = uniformity == 2;
    if (full) spec = spec.scaled(f->q() - 1);

    const json result{{"apn", apn_flag},
                      {"exponent", d},
                      {"full", full},
                      {"spectrum", spectrum_json(spec)},
                      {"spectrum_text", spec.str()},
                      {"uniformity", uniformity}};

    std::vector<std::vector<std::string>> rows{{"size", "multiplicity"}};
    for (const auto& [size, mult] : spec.entries)
        rows.push_back({std::to_string(size), std::to_string(mult)});

    std::ostringstream text;
    text << "GF(" << f->q() << ") exponent " << d << " (from " << exp_text << ")\n"
         << (full ? "full" : "reduced") << " spectrum: " << spec.str() << '\n'
         << "uniformity: " << uniformity << '\n'
         << "apn: " << (apn_flag ? "true" : "false") << '\n';

    emit("spectrum", inputs, result, rows, text.str());
    return 0;
}

// ---- verify ----------------------------------------------------------

int cmd_verify(const Emitter& emit, std::uint32_t n, std::uint32_t k, bool with_chain) {
    const apn::chain::ChainContext ctx = apn::chain::chain_context(n, k);
    const apn::chain::FiberComparison cmp = apn::chain::verify_derivative_fibers(ctx);
    const apn::spectra::SpectrumMultiset spec = apn::spectra::reduced_spectrum(ctx.F, ctx.d);

    bool chain_match = true;
    std::vector<apn::spectra::SpectrumMultiset> chain_specs;
    if (with_chain) {
        chain_specs = apn::chain::chain_spectra(ctx);
        for (const auto& s : chain_specs) chain_match = chain_match && (s == chain_specs.front());
    }

    json records = json::array();
    std::vector<std::vector<std::string>> rows{{"c", "brute", "predicted", "match"}};
    for (const auto& r : cmp.records) {
        records.push_back(json{{"brute", r.brute},
                               {"c", elt_str(r.c)},
                               {"match", r.match},
                               {"predicted", r.predicted}});
        rows.push_back({elt_str(r.c), std::to_string(r.brute), std::to_string(r.predicted),
                        r.match ? "true" : "false"});
    }

    json result{{"all_match", cmp.all_match},
                {"d", ctx.d},
                {"k", k},
                {"n", n},
                {"q", ctx.F->q()},
                {"records", records},
                {"spectrum_text", spec.str()}};
    if (with_chain) {
        static const char* names[] = {"delta_f", "f1", "f2", "f3", "f4"};
        json chain_obj{{"match", chain_match}};
        for (std::size_t i = 0; i < chain_specs.size(); ++i)
            chain_obj[names[i]] = chain_specs[i].str();
        result["chain"] = chain_obj;
    }

    std::ostringstream text;
    text << "GF(" << ctx.F->q() << "), k=" << k << ", d=" << ctx.d << '\n'
         << "reduced spectrum: " << spec.str() << '\n';
    std::uint64_t matched = 0;
    for (const auto& r : cmp.records) matched += r.match ? 1 : 0;
    text << "fibers: " << matched << '/' << cmp.records.size() << " match\n";
    for (const auto& r : cmp.records)
        if (!r.match)
            text << "MISMATCH at c=" << elt_str(r.c) << ": brute " << r.brute << ", predicted "
                 << r.predicted << '\n';
    if (with_chain) text << "chain multisets: " << (chain_match ? "match" : "DIFFER") << '\n';
    const bool ok = cmp.all_match && chain_match;
    text << (ok ? "verified\n" : "NOT VERIFIED\n");

    emit("verify", json{{"chain", with_chain}, {"k", k}, {"n", n}}, result, rows, text.str());
    return ok ? 0 : 1;
}

// ---- equiv -----------------------------------------------------------

int cmd_equiv(const Emitter& emit, std::uint32_t p, std::uint32_t n, std::uint64_t d,
              std::optional<std::uint64_t> e) {
    if (e) {
        const bool eq = apn::equiv::are_equivalent(d, *e, p, n);
        const json inputs{{"d", d}, {"e", *e}, {"n", n}, {"p", p}};
        emit("equiv", inputs, json{{"equivalent", eq}},
             {{"key", "value"}, {"equivalent", eq ? "true" : "false"}},
             std::string("equivalent: ") + (eq ? "true" : "false") + "\n");
        return 0;
    }

    const apn::equiv::ExponentClass cls = apn::equiv::equivalence_class(d, p, n);
    json members = json::array();
    std::vector<std::vector<std::string>> rows{{"member"}};
    std::string member_list;
    for (std::uint64_t m : cls.members) {
        members.push_back(m);
        rows.push_back({std::to_string(m)});
        if (!member_list.empty()) member_list += ", ";
        member_list += std::to_string(m);
    }
    const json result{
        {"members", members}, {"modulus", cls.modulus}, {"representative", cls.representative}};
    std::ostringstream text;
    text << "class of " << d % cls.modulus << " mod " << cls.modulus << ": {" << member_list
         << "}\n"
         << "representative: " << cls.representative << '\n';
    emit("equiv", json{{"d", d}, {"n", n}, {"p", p}}, result, rows, text.str());
    return 0;
}

// ---- zha-wang --------------------------------------------------------

std::string equation_text(const apn::equiv::ZhaWangParams& zw) {
    std::ostringstream s;
    s << "(3^" << zw.m << "+1)*" << zw.d << " - 2 = " << zw.k << "*(3^" << zw.n << "-1)";
    return s.str();
}

int cmd_zha_wang(const Emitter& emit, std::uint32_t n, std::optional<std::uint32_t> m,
                 std::optional<std::uint64_t> d, std::optional<std::uint32_t> j) {
    const bool forward = m.has_value() || d.has_value();
    if (forward == j.has_value())
        throw std::invalid_argument("pass either --m with --d (forward) or --j (converse)");
    if (forward && !(m.has_value() && d.has_value()))
        throw std::invalid_argument("forward direction needs both --m and --d");

    apn::equiv::ZhaWangParams zw;
    json inputs{{"n", n}};
    if (forward) {
        zw = apn::equiv::zha_wang_params(n, *m, *d);
        inputs["d"] = *d;
        inputs["m"] = *m;
    } else {
        zw = apn::equiv::fraction_to_zha_wang(n, *j);
        inputs["j"] = *j;
    }
    const apn::equiv::FractionForm fr = apn::equiv::zha_wang_to_fraction(zw);

    const json result{{"d", zw.d},
                      {"equation_check", true},
                      {"fraction", json{{"j", fr.j}, {"n", fr.n}, {"resolved", fr.resolved}}},
                      {"k", zw.k},
                      {"m", zw.m},
                      {"n", zw.n}};

    std::vector<std::vector<std::string>> rows{
        {"key", "value"},
        {"n", std::to_string(zw.n)},
        {"m", std::to_string(zw.m)},
        {"d", std::to_string(zw.d)},
        {"k", std::to_string(zw.k)},
        {"fraction_j", std::to_string(fr.j)},
        {"fraction_resolved", std::to_string(fr.resolved)},
        {"equation_check", "true"}};

    std::ostringstream text;
    text << "Zha-Wang instance n=" << zw.n << ", m=" << zw.m << ", d=" << zw.d
         << ", witness k=" << zw.k << '\n'
         << "equation: " << equation_text(zw) << '\n'
         << "fraction form: (3^" << fr.n << "+1)/(3^" << fr.j << "+1) resolves to "
         << fr.resolved << '\n';

    emit("zha-wang", inputs, result, rows, text.str());
    return 0;
}

// ---- search-apn ------------------------------------------------------

int cmd_search_apn(const Emitter& emit, std::uint32_t p, std::uint32_t n, std::uint64_t max_q,
                   unsigned jobs) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (q > apn::gf::kMaxFieldOrder / p)
            throw std::invalid_argument("field order exceeds the supported bound");
        q *= p;
    }
    if (q > max_q) {
        std::ostringstream msg;
        msg << "field order " << q << " exceeds the search bound " << max_q
            << "; raise --max-q to proceed";
        throw std::invalid_argument(msg.str());
    }

    const apn::gf::Field f = apn::gf::field_new(p, n);
    const std::vector<apn::equiv::ExponentClass> classes = apn::equiv::all_classes(p, n);

    std::vector<apn::spectra::SpectrumMultiset> specs(classes.size());
    apn::par::parallel_for(classes.size(), jobs, [&](std::uint64_t i) {
        specs[i] = apn::spectra::reduced_spectrum(f, classes[i].representative);
    });

    json apn_classes = json::array();
    std::vector<std::vector<std::string>> rows{{"representative", "members", "spectrum"}};
    std::ostringstream text;
    std::size_t apn_count = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (specs[i].entries.back().first != 2) continue;
        ++apn_count;
        json members = json::array();
        std::string member_list;
        for (std::uint64_t mval : classes[i].members) {
            members.push_back(mval);
            if (!member_list.empty()) member_list += ", ";
            member_list += std::to_string(mval);
        }
        apn_classes.push_back(json{{"members", members},
                                   {"representative", classes[i].representative},
                                   {"spectrum", spectrum_json(specs[i])},
                                   {"spectrum_text", specs[i].str()}});
        rows.push_back({std::to_string(classes[i].representative), member_list, specs[i].str()});
        text << "APN class " << classes[i].representative << ": members {" << member_list
             << "}, spectrum " << specs[i].str() << '\n';
    }

    const json result{{"apn_classes", apn_classes},
                      {"class_count", classes.size()},
                      {"field", apn::gf::describe(f)},
                      {"q", q}};
    std::ostringstream head;
    head << "GF(" << q << "): " << classes.size() << " exponent classes, " << apn_count
         << " APN\n";
    emit("search-apn", json{{"max_q", max_q}, {"n", n}, {"p", p}}, result, rows,
         head.str() + text.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"differential spectra of power maps over odd-characteristic fields"};
    app.require_subcommand(1);

    std::string format = "text";
    unsigned jobs = 1;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads for sharded sweeps")
        ->envname("APN_SPECTRA_JOBS")
        ->check(CLI::PositiveNumber);

    std::uint32_t p = 3, n = 1, k = 0, m_in = 0, j_in = 0;
    std::uint64_t d_in = 0, e_in = 0, max_q = 19683;  // 3^9
    std::string poly_text, exp_text;
    bool full = false, per_fiber = false, with_chain = false;

    auto* fi = app.add_subcommand("field-info", "describe GF(p^n)");
    fi->add_option("--p", p, "characteristic")->required();
    fi->add_option("--n", n, "extension degree")->required();
    fi->add_option("--poly", poly_text, "defining polynomial coefficients c0,...,cn");

    auto* sp = app.add_subcommand("spectrum", "differential spectrum of x^d");
    sp->add_option("--p", p, "characteristic")->required();
    sp->add_option("--n", n, "extension degree")->required();
    sp->add_option("--exp", exp_text, "exponent, integer or fraction a/b")->required();
    auto* full_flag = sp->add_flag("--full", full, "full spectrum over all derivative directions");
    sp->add_flag("--per-fiber", per_fiber, "per-value fiber counts for the a=1 derivative")
        ->excludes(full_flag);

    auto* vf = app.add_subcommand("verify", "check predicted fiber sizes against brute force");
    vf->add_option("--n", n, "extension degree (odd)")->required();
    vf->add_option("--k", k, "family parameter (even, coprime to n)")->required();
    vf->add_flag("--chain", with_chain, "also compare the substitution-chain fiber multisets");

    auto* eq = app.add_subcommand("equiv", "cyclotomic exponent equivalence");
    eq->add_option("--p", p, "characteristic")->required();
    eq->add_option("--n", n, "extension degree")->required();
    eq->add_option("--d", d_in, "exponent")->required();
    auto* e_opt = eq->add_option("--e", e_in, "second exponent to compare");

    auto* zw = app.add_subcommand("zha-wang", "Zha-Wang parameter correspondence");
    zw->add_option("--n", n, "extension degree (odd)")->required();
    auto* m_opt = zw->add_option("--m", m_in, "Zha-Wang m (forward)");
    auto* d_opt = zw->add_option("--d", d_in, "Zha-Wang d (forward)");
    auto* j_opt = zw->add_option("--j", j_in, "fraction parameter j (converse)");
    j_opt->excludes(m_opt)->excludes(d_opt);

    auto* sa = app.add_subcommand("search-apn", "list all APN exponent classes over GF(p^n)");
    sa->add_option("--p", p, "characteristic")->required();
    sa->add_option("--n", n, "extension degree")->required();
    sa->add_option("--max-q", max_q, "search bound on the field order")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const Emitter emit{format};
    const auto t0 = std::chrono::steady_clock::now();
    int rc = 0;
    try {
        if (fi->parsed()) rc = cmd_field_info(emit, p, n, poly_text);
        else if (sp->parsed()) rc = cmd_spectrum(emit, p, n, exp_text, full, per_fiber);
        else if (vf->parsed()) rc = cmd_verify(emit, n, k, with_chain);
        else if (eq->parsed())
            rc = cmd_equiv(emit, p, n, d_in,
                           e_opt->count() ? std::optional<std::uint64_t>(e_in) : std::nullopt);
        else if (zw->parsed())
            rc = cmd_zha_wang(emit, n,
                              m_opt->count() ? std::optional<std::uint32_t>(m_in) : std::nullopt,
                              d_opt->count() ? std::optional<std::uint64_t>(d_in) : std::nullopt,
                              j_opt->count() ? std::optional<std::uint32_t>(j_in) : std::nullopt);
        else if (sa->parsed())
            rc = cmd_search_apn(emit, p, n, max_q, jobs);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return 1;
    }

    const auto dt =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    std::fprintf(stderr, "elapsed_ms=%lld\n", static_cast<long long>(dt.count()));
    return rc;
}
