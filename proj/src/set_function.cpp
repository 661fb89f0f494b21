#include "binmeas/set_function.hpp"

#include <algorithm>

namespace binmeas {

TabulatedSetFunction::TabulatedSetFunction(SetRingFamily ring, std::vector<Bit> values)
    : ring_(std::move(ring)), values_(std::move(values)) {
    if (values_.size() != ring_.members().size())
        throw StructureError("values must be tabulated for every ring member exactly");
    for (Bit v : values_)
        if (v != 0 && v != 1) throw StructureError("set function values must be bits");
}

TabulatedSetFunction dual_transport(const TabulatedSetFunction& mu) {
    const auto& u = mu.ring().universe();
    const LawPair dual_laws =
        mu.ring().laws() == LawPair::DeltaCap ? LawPair::ThetaCup : LawPair::DeltaCap;
    std::vector<SubsetMask> members;
    for (SubsetMask m : mu.ring().members())
        members.push_back(set_op(u, SetOp::Complement, m));
    SetRingFamily dual_ring(u, members, dual_laws);
    std::vector<Bit> values;
    for (SubsetMask m : dual_ring.members())
        values.push_back(bit_not(mu(set_op(u, SetOp::Complement, m))));
    return TabulatedSetFunction(std::move(dual_ring), std::move(values));
}

namespace {

AdditivityReport check_additivity_impl(const TabulatedSetFunction& mu, bool star) {
    const auto& ring = mu.ring();
    const auto& u = ring.universe();
    AdditivityReport report;
    report.verdict_disjoint_form = 1;
    report.verdict_all_pairs_form = 1;
    for (SubsetMask a : ring.members()) {
        for (SubsetMask b : ring.members()) {
            if (!star) {
                if (set_op(u, SetOp::Cap, a, b).bits == 0 &&
                    mu(set_op(u, SetOp::Cup, a, b)) != bit_xor(mu(a), mu(b))) {
                    report.verdict_disjoint_form = 0;
                    if (!report.witness) report.witness = {a, b};
                }
                if (mu(set_op(u, SetOp::Delta, a, b)) != bit_xor(mu(a), mu(b))) {
                    report.verdict_all_pairs_form = 0;
                    if (!report.witness) report.witness = {a, b};
                }
            } else {
                if (set_op(u, SetOp::Cup, a, b).bits == u.full_mask() &&
                    mu(set_op(u, SetOp::Cap, a, b)) != bit_xnor(mu(a), mu(b))) {
                    report.verdict_disjoint_form = 0;
                    if (!report.witness) report.witness = {a, b};
                }
                if (mu(set_op(u, SetOp::Theta, a, b)) != bit_xnor(mu(a), mu(b))) {
                    report.verdict_all_pairs_form = 0;
                    if (!report.witness) report.witness = {a, b};
                }
            }
        }
    }
    if (!report.forms_agree())
        throw StructureError("the two equivalent additivity conditions disagree");
    report.verdict = report.verdict_all_pairs_form;
    return report;
}

std::string mask_str(const FiniteUniverse& u, SubsetMask m) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (char_function_at(m, i)) {
            if (!first) s += ' ';
            s += u.label(i);
            first = false;
        }
    }
    return s + "}";
}

}  // namespace

AdditivityReport check_additive(const TabulatedSetFunction& mu) {
    if (mu.ring().laws() != LawPair::DeltaCap)
        throw PreconditionError("additivity is defined over a delta-cap ring");
    return check_additivity_impl(mu, false);
}

Bit is_additive(const TabulatedSetFunction& mu) { return check_additive(mu).verdict; }

AdditivityReport check_additive_star(const TabulatedSetFunction& mu) {
    if (mu.ring().laws() != LawPair::ThetaCup)
        throw PreconditionError("additivity* is defined over a theta-cup ring");
    return check_additivity_impl(mu, true);
}

Bit is_additive_star(const TabulatedSetFunction& mu) { return check_additive_star(mu).verdict; }

PropertiesReport additive_properties_report(const TabulatedSetFunction& mu) {
    const auto& ring = mu.ring();
    const auto& u = ring.universe();
    const bool star = ring.laws() == LawPair::ThetaCup;
    if (star ? !is_additive_star(mu) : !is_additive(mu))
        throw PreconditionError("properties report requires an additive input");

    PropertiesReport report;
    auto add_item = [&](const std::string& id, bool pass, const std::string& witness) {
        report.items.push_back({id, pass, witness});
    };

    if (!star) {
        add_item("1.empty", mu(SubsetMask{0}) == 0, "value at {}");
        PropertyItem diff{"2.difference", true, ""};
        PropertyItem three{"3.three-term", true, ""};
        for (SubsetMask a : ring.members()) {
            for (SubsetMask b : ring.members()) {
                if (mu(set_op(u, SetOp::Minus, a, b)) !=
                    bit_xor(mu(a), mu(set_op(u, SetOp::Cap, a, b)))) {
                    diff.pass = false;
                    diff.witness = "A=" + mask_str(u, a) + " B=" + mask_str(u, b);
                }
                const Bit lhs = bit_xor(bit_xor(mu(set_op(u, SetOp::Cup, a, b)),
                                                mu(set_op(u, SetOp::Cap, a, b))),
                                        mu(set_op(u, SetOp::Delta, a, b)));
                if (lhs != 0) {
                    three.pass = false;
                    three.witness = "A=" + mask_str(u, a) + " B=" + mask_str(u, b);
                }
            }
        }
        report.items.push_back(diff);
        report.items.push_back(three);
    } else {
        add_item("4.total", mu(SubsetMask{u.full_mask()}) == 1, "value at X");
        PropertyItem diff{"5.difference*", true, ""};
        PropertyItem three{"6.three-term*", true, ""};
        for (SubsetMask a : ring.members()) {
            for (SubsetMask b : ring.members()) {
                const SubsetMask not_b_minus_a =
                    set_op(u, SetOp::Complement, set_op(u, SetOp::Minus, b, a));
                if (mu(not_b_minus_a) != bit_xnor(mu(a), mu(set_op(u, SetOp::Cup, a, b)))) {
                    diff.pass = false;
                    diff.witness = "A=" + mask_str(u, a) + " B=" + mask_str(u, b);
                }
                const Bit lhs = bit_xnor(bit_xnor(mu(set_op(u, SetOp::Cap, a, b)),
                                                  mu(set_op(u, SetOp::Cup, a, b))),
                                         mu(set_op(u, SetOp::Theta, a, b)));
                if (lhs != 1) {
                    three.pass = false;
                    three.witness = "A=" + mask_str(u, a) + " B=" + mask_str(u, b);
                }
            }
        }
        report.items.push_back(diff);
        report.items.push_back(three);
    }
    return report;
}

Measure<SubsetMask> as_measure(const TabulatedSetFunction& mu) {
    return {"tabulated", [mu](const SubsetMask& m) { return mu(m); }};
}

}  // namespace binmeas
