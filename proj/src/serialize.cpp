#include "genusq/serialize.hpp"

#include <json.hpp>
#include <sstream>

#include "genusq/errors.hpp"

namespace genusq {

namespace {

using json = nlohmann::ordered_json;

json quad_json(const QuadElem& x) {
    return {{"u", x.u.str()}, {"v", x.v.str()}, {"den", x.den}};
}

// Rational radicands are bare signed decimal strings; the two structured
// kinds are objects. Signs fold into the leading coefficient.
json radicand_json(const Radicand& r) {
    switch (r.kind) {
        case Radicand::Kind::Rational:
            return (r.sign < 0 ? cpp_int(-r.value) : r.value).str();
        case Radicand::Kind::QuadInt:
            return quad_json(r.alpha);
        case Radicand::Kind::UnitMonomial:
            return {{"c", (r.sign * cpp_int(r.coeff)).str()},
                    {"eps", r.eps_exp},
                    {"sqrtp", r.sqrtp_exp}};
    }
    throw Error("unknown radicand kind");
}

json trace_json(const CaseTrace& t) {
    json conds = json::array();
    for (const auto& [name, val] : t.conditions)
        conds.push_back(json{{"name", name}, {"holds", val}});
    json pell = json::array();
    for (const auto& [q, xy] : t.chosen_pell)
        pell.push_back(json{{"q", std::to_string(q)},
                            {"x", xy.first.str()},
                            {"y", xy.second.str()}});
    return {{"case", t.clause},
            {"conditions", conds},
            {"solutions", pell},
            {"notes", t.notes}};
}

json generator_set_json(const GeneratorSet& g) {
    json rads = json::array(), names = json::array();
    for (const Radicand& r : g.radicands) {
        rads.push_back(radicand_json(r));
        names.push_back(radicand_display(r));
    }
    json out = trace_json(g.trace);
    out["generators"] = names;
    out["radicands"] = rads;
    return out;
}

std::string field_display(const FieldContext& ctx) {
    return "Q(sqrt(" + std::to_string(ctx.a) + "*eps*sqrt(" +
           std::to_string(ctx.p) + ")))";
}

std::string adjoin_display(const std::vector<Radicand>& rads) {
    if (rads.empty()) return "K";
    std::string out = "K(";
    for (size_t i = 0; i < rads.size(); ++i) {
        if (i) out += ", ";
        out += radicand_display(rads[i]);
    }
    return out + ")";
}

}  // namespace

bool ComputeResult::all_ok() const {
    for (const RadicandCheck& c : unramified)
        if (!c.ok()) return false;
    return independent && rank_check.consistent && genus_in_hilbert &&
           narrow_span_ok;
}

ComputeResult compute_all(u64 p, u64 a) {
    ComputeResult r;
    r.ctx = build_field(p, a);
    r.disc = discriminant(r.ctx);
    r.genus = genus_field(r.ctx);
    r.narrow = narrow_genus_product(r.ctx);
    r.hilbert = hilbert_genus_field(r.ctx);

    for (const Radicand& rad : r.hilbert.radicands) {
        RadicandCheck chk;
        chk.r = rad;
        try {
            chk.report = is_unramified_generator(r.ctx, rad);
            if (chk.report.unit_criterion)
                chk.note = "unit radicand: accepted by the unit criterion";
        } catch (const NotOddElement&) {
            chk.applicable = false;
            chk.note = "dyadic radicand: accounted for by the construction";
        }
        r.unramified.push_back(std::move(chk));
    }
    r.independent = independence_mod_squares(r.ctx, r.hilbert.radicands);
    r.rank_check = ambiguous_rank_check(r.ctx, r.hilbert);
    r.genus_in_hilbert = genus_contained_in_hilbert(r.ctx, r.genus, r.hilbert);
    r.narrow_span_ok = genus_rationals_in_narrow_span(r.ctx, r.genus, r.narrow);
    return r;
}

std::string radicand_display(const Radicand& r) {
    return "sqrt(" + r.str() + ")";
}

std::string render_text(const ComputeResult& r) {
    std::ostringstream out;
    const FieldContext& c = r.ctx;
    out << "K = " << field_display(c) << "  [p = " << c.p << ", a = " << c.a
        << "]\n";
    out << "k0 = Q(sqrt(" << c.p << ")), eps = " << c.eps.str()
        << ", h(k0) = " << c.h << ", lambda = " << c.lambda << "\n";

    out << "disc(K) = ";
    for (size_t i = 0; i < r.disc.abs_factors.size(); ++i) {
        const auto& [q, e] = r.disc.abs_factors[i];
        if (i) out << " * ";
        out << q << "^" << e;
    }
    out << ", d(K/k0) = (" << r.disc.rel_coeff.str() << ")*sqrt(" << c.p
        << "), t = " << r.disc.t
        << (r.disc.dyadic_ramified ? " (dyadic ramified)" : "") << "\n";

    for (const PrimeInfo& pi : c.primes) {
        out << "q = " << pi.q << ": " << (pi.splits ? "split" : "inert");
        if (pi.alpha) {
            out << ", alpha = " << pi.alpha->str() << " ["
                << mod4_tag_name(pi.alpha_mod4) << " mod 4]";
        }
        out << "\n";
    }

    out << "K^(*) = " << adjoin_display(r.genus.radicands) << "  [case "
        << r.genus.trace.clause << "]\n";
    out << "case " << r.hilbert.trace.clause << "; rank = "
        << rank(r.hilbert) << "\n";
    for (const std::string& n : r.hilbert.trace.notes) out << "  note: " << n << "\n";

    const RankCheck& rc = r.rank_check;
    out << "checks: unramified ";
    bool unram_ok = true;
    for (const RadicandCheck& chk : r.unramified) unram_ok = unram_ok && chk.ok();
    out << (unram_ok ? "ok" : "FAIL") << "; independent "
        << (r.independent ? "ok" : "FAIL") << "; rank "
        << (rc.consistent ? "ok" : "FAIL") << " (t = " << rc.t << ", e in ["
        << rc.e.lo << ", " << rc.e.hi << "]"
        << (rc.e.exact ? " exact" : "") << ", expected [" << rc.expected_lo
        << ", " << rc.expected_hi << "], actual " << rc.actual
        << "); genus in E(K) " << (r.genus_in_hilbert ? "ok" : "FAIL")
        << "; narrow span " << (r.narrow_span_ok ? "ok" : "FAIL") << "\n";

    out << "E(K) = " << adjoin_display(r.hilbert.radicands) << "\n";
    return out.str();
}

std::string render_json(const ComputeResult& r) {
    const FieldContext& c = r.ctx;
    json doc;
    doc["p"] = std::to_string(c.p);
    doc["a"] = std::to_string(c.a);
    doc["field"] = json{{"display", field_display(c)},
                        {"eps", quad_json(c.eps)},
                        {"class_number", std::to_string(c.h)},
                        {"lambda", c.lambda},
                        {"a_even", c.a_even},
                        {"a_odd", std::to_string(c.a_odd)},
                        {"n", c.n},
                        {"m", c.m}};
    doc["field"]["i0"] = c.i0 ? json(*c.i0) : json(nullptr);
    doc["field"]["j0"] = c.j0 ? json(*c.j0) : json(nullptr);
    if (c.p != 2)
        doc["field"]["two_squares"] =
            json{{"b", std::to_string(c.b)}, {"c", std::to_string(c.c)}};
    json primes = json::array();
    for (const PrimeInfo& pi : c.primes) {
        json pj{{"q", std::to_string(pi.q)}, {"splits", pi.splits}};
        if (pi.pell)
            pj["solution"] =
                json{{"x", pi.pell->x.str()}, {"y", pi.pell->y.str()}};
        if (pi.alpha) {
            pj["alpha"] = quad_json(*pi.alpha);
            pj["alpha_mod4"] = mod4_tag_name(pi.alpha_mod4);
        }
        primes.push_back(std::move(pj));
    }
    doc["field"]["primes"] = std::move(primes);

    json factors = json::array();
    for (const auto& [q, e] : r.disc.abs_factors)
        factors.push_back(json{{"prime", std::to_string(q)}, {"exp", e}});
    doc["discriminant"] = json{{"absolute", r.disc.abs_disc.str()},
                               {"factors", factors},
                               {"relative_sqrtp_coeff", r.disc.rel_coeff.str()},
                               {"dyadic_ramified", r.disc.dyadic_ramified},
                               {"t", r.disc.t}};

    doc["genus"] = generator_set_json(r.genus);
    doc["narrow_product"] = generator_set_json(r.narrow);
    doc["hilbert"] = generator_set_json(r.hilbert);

    json names = json::array();
    for (const Radicand& rad : r.hilbert.radicands)
        names.push_back(radicand_display(rad));
    doc["hilbert_generators"] = std::move(names);
    doc["rank"] = rank(r.hilbert);

    json unram = json::array();
    for (const RadicandCheck& chk : r.unramified) {
        json cj{{"radicand", radicand_display(chk.r)},
                {"applicable", chk.applicable}};
        if (chk.applicable) {
            cj["clause1"] = chk.report.clause1;
            cj["clause2"] = chk.report.clause2;
            cj["clause2_via_delta"] = chk.report.clause2_via_delta;
            cj["unit_criterion"] = chk.report.unit_criterion;
        }
        cj["ok"] = chk.ok();
        if (!chk.note.empty()) cj["note"] = chk.note;
        unram.push_back(std::move(cj));
    }
    const RankCheck& rc = r.rank_check;
    doc["verification"] =
        json{{"unramified", unram},
             {"independent", r.independent},
             {"rank_check",
              json{{"t", rc.t},
                   {"e_lo", rc.e.lo},
                   {"e_hi", rc.e.hi},
                   {"e_exact", rc.e.exact},
                   {"infinite_ramified", rc.e.infinite_ramified},
                   {"expected_lo", rc.expected_lo},
                   {"expected_hi", rc.expected_hi},
                   {"actual", rc.actual},
                   {"consistent", rc.consistent}}},
             {"genus_in_hilbert", r.genus_in_hilbert},
             {"narrow_span", r.narrow_span_ok},
             {"all_ok", r.all_ok()}};

    return doc.dump(2) + "\n";
}

}  // namespace genusq
