#include "binmeas/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "binmeas/catalog.hpp"
#include "binmeas/derivable.hpp"
#include "binmeas/integration.hpp"
#include "binmeas/interval_ring.hpp"
#include "binmeas/literal.hpp"
#include "binmeas/ls_measure.hpp"
#include "binmeas/set_function.hpp"
#include "binmeas/set_ring.hpp"
#include "binmeas/step_function.hpp"

namespace binmeas {

bool VerifyReport::all_pass() const {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

std::string VerifyReport::machine_text() const {
    std::string out;
    for (const auto& r : results) {
        out += "CHECK " + r.id + (r.pass ? " PASS" : " FAIL");
        if (!r.pass && !r.witness.empty()) out += " " + r.witness;
        out += "\n";
    }
    return out;
}

std::string VerifyReport::human_text() const {
    std::ostringstream out;
    std::size_t passed = 0;
    for (const auto& r : results) {
        out << (r.pass ? "  ok   " : " FAIL  ") << r.id;
        out << "  (" << r.seconds << " s)";
        if (!r.pass && !r.witness.empty()) out << "  -- " << r.witness;
        out << "\n";
        passed += r.pass ? 1 : 0;
    }
    out << passed << "/" << results.size() << " checks passed\n";
    return out.str();
}

std::string render_b2_table() {
    std::ostringstream out;
    out << "a b | not | or | and | xor | xnor\n";
    for (Bit a = 0; a <= 1; ++a) {
        for (Bit b = 0; b <= 1; ++b) {
            out << a << " " << b << " |   " << b2_law(Law::Not, a) << " |  "
                << b2_law(Law::Or, a, b) << " |   " << b2_law(Law::And, a, b) << " |   "
                << b2_law(Law::Xor, a, b) << " |    " << b2_law(Law::Xnor, a, b) << "\n";
        }
    }
    return out.str();
}

namespace {

struct Failure {
    bool failed = false;
    std::string witness;
    void hit(const std::string& w) {
        if (!failed) witness = w;
        failed = true;
    }
};

// ---------------------------------------------------------------------------
// Shared random generators (all draws through the forked Rng).

BinaryStepFunction random_stepfn(Rng& rng, int max_toggles = 6) {
    const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_toggles + 1)));
    std::vector<Rational> raw;
    for (int i = 0; i < k; ++i) raw.push_back(rng.rational(16, 4));
    return sf_normalize(rng.coin() ? 1 : 0, std::move(raw));
}

ExtendedRational random_endpoint(Rng& rng, bool allow_neg_inf, bool allow_pos_inf) {
    const std::uint64_t pick = rng.below(10);
    if (allow_neg_inf && pick == 0) return ExtendedRational::neg_inf();
    if (allow_pos_inf && pick == 1) return ExtendedRational::pos_inf();
    return ExtendedRational(rng.rational(16, 4));
}

// A point strictly inside [lo, hi).
ExtendedRational random_interior(const ExtendedRational& lo, const ExtendedRational& hi,
                                 Rng& rng) {
    const Rational step(rng.range(1, 7), 8);
    if (lo.is_finite() && hi.is_finite())
        return ExtendedRational(lo.value() + (hi.value() - lo.value()) * step);
    if (lo.is_finite()) return ExtendedRational(lo.value() + step + rng.range(0, 4));
    if (hi.is_finite()) return ExtendedRational(hi.value() - step - rng.range(0, 4));
    return ExtendedRational(rng.rational(8, 4));
}

std::vector<IntervalUnion::Component> random_raw_intervals(Rng& rng, std::size_t max_pairs) {
    std::vector<IntervalUnion::Component> raw;
    const std::size_t k = 1 + rng.below(max_pairs);
    for (std::size_t i = 0; i < k; ++i) {
        ExtendedRational a = random_endpoint(rng, true, false);
        ExtendedRational b = random_endpoint(rng, false, true);
        raw.emplace_back(a, b);  // a >= b is allowed: it contributes nothing
    }
    return raw;
}

// ---------------------------------------------------------------------------
// 01: the five-law truth table against the published constants.

Failure check_b2_table(const VerifyConfig&) {
    Failure f;
    static constexpr Bit kNot[2] = {1, 0};
    static constexpr Bit kOr[4] = {0, 1, 1, 1};
    static constexpr Bit kAnd[4] = {0, 0, 0, 1};
    static constexpr Bit kXor[4] = {0, 1, 1, 0};
    static constexpr Bit kXnor[4] = {1, 0, 0, 1};
    for (Bit a = 0; a <= 1; ++a) {
        if (b2_law(Law::Not, a) != kNot[a]) f.hit("not(" + std::to_string(a) + ")");
        for (Bit b = 0; b <= 1; ++b) {
            const int idx = a * 2 + b;
            if (b2_law(Law::Or, a, b) != kOr[idx]) f.hit("or row " + std::to_string(idx));
            if (b2_law(Law::And, a, b) != kAnd[idx]) f.hit("and row " + std::to_string(idx));
            if (b2_law(Law::Xor, a, b) != kXor[idx]) f.hit("xor row " + std::to_string(idx));
            if (b2_law(Law::Xnor, a, b) != kXnor[idx]) f.hit("xnor row " + std::to_string(idx));
        }
    }
    if (render_b2_table().find("xnor") == std::string::npos) f.hit("table rendering");
    return f;
}

// ---------------------------------------------------------------------------
// 02: Theorem 2.1 exhaustively on the power set of a 3-element universe.

SetRingFamily power_set_ring3() {
    FiniteUniverse u({"1", "2", "3"});
    std::vector<SubsetMask> members;
    for (std::uint32_t m = 0; m < 8; ++m) members.push_back({m});
    return SetRingFamily(u, members, LawPair::DeltaCap);
}

Failure check_thm21(const VerifyConfig&) {
    Failure f;
    const SetRingFamily ring = power_set_ring3();
    std::vector<std::vector<Bit>> additive;
    for (std::uint32_t code = 0; code < 256; ++code) {
        std::vector<Bit> values(8);
        for (std::size_t i = 0; i < 8; ++i) values[i] = (code >> i) & 1u;
        TabulatedSetFunction mu(ring, values);
        AdditivityReport r;
        try {
            r = check_additive(mu);
        } catch (const StructureError&) {
            f.hit("verdict forms disagree for code " + std::to_string(code));
            continue;
        }
        if (!r.forms_agree()) f.hit("verdicts differ for code " + std::to_string(code));
        if (r.verdict) additive.push_back(values);
    }
    if (additive.size() != 8)
        f.hit("additive count " + std::to_string(additive.size()) + " != 8");
    // Independent oracle: the eight GF(2)-linear functionals of the
    // characteristic vectors.
    std::vector<std::vector<Bit>> oracle;
    for (std::uint32_t c = 0; c < 8; ++c) {
        std::vector<Bit> values(8);
        for (std::uint32_t m = 0; m < 8; ++m)
            values[m] = parity(static_cast<std::size_t>(__builtin_popcount(m & c)));
        oracle.push_back(values);
    }
    std::sort(additive.begin(), additive.end());
    std::sort(oracle.begin(), oracle.end());
    if (additive != oracle) f.hit("additive set differs from the linear functionals");
    return f;
}

// ---------------------------------------------------------------------------
// 03: Theorem 2.4 items for the additive functions and their duals.

Failure check_thm24(const VerifyConfig&) {
    Failure f;
    const SetRingFamily ring = power_set_ring3();
    for (std::uint32_t c = 0; c < 8; ++c) {
        std::vector<Bit> values(8);
        for (std::uint32_t m = 0; m < 8; ++m)
            values[m] = parity(static_cast<std::size_t>(__builtin_popcount(m & c)));
        TabulatedSetFunction mu(ring, values);
        const PropertiesReport direct = additive_properties_report(mu);
        if (!direct.all_pass()) {
            for (const auto& item : direct.items)
                if (!item.pass) f.hit("item " + item.id + " fails, c=" + std::to_string(c));
        }
        const TabulatedSetFunction dual = dual_transport(mu);
        if (!is_additive_star(dual)) f.hit("dual transport lost additivity*, c=" + std::to_string(c));
        const PropertiesReport star = additive_properties_report(dual);
        if (!star.all_pass()) {
            for (const auto& item : star.items)
                if (!item.pass) f.hit("dual item " + item.id + " fails, c=" + std::to_string(c));
        }
    }
    return f;
}

// ---------------------------------------------------------------------------
// 04 and 05: the two additive-but-not-countably-additive constructions.

Failure check_counterexample_seq(const VerifyConfig& cfg) {
    Failure f;
    const auto r = catalog::counterexample_divergence(catalog::CounterexampleCase::Seq36,
                                                      cfg.depth);
    if (r.union_value != 1) f.hit("union value != 1");
    if (r.xor_sum != 0) f.hit("xor sum != 0");
    if (r.countably_additive != 0) f.hit("family unexpectedly countably additive");
    if (!r.disjoint_ok) f.hit("disjointness");
    return f;
}

Failure check_counterexample_interval(const VerifyConfig& cfg) {
    Failure f;
    const auto r = catalog::counterexample_divergence(catalog::CounterexampleCase::Interval313,
                                                      cfg.depth);
    if (r.union_value != 1) f.hit("union value != 1");
    if (r.xor_sum != 0) f.hit("xor sum != 0");
    if (r.countably_additive != 0) f.hit("family unexpectedly countably additive");
    if (!r.disjoint_ok) f.hit("disjointness");
    return f;
}

// ---------------------------------------------------------------------------
// 06: Lebesgue-Stieltjes evaluation does not depend on the representation.

Failure check_ls_well_defined(const VerifyConfig& cfg) {
    Failure f;
    Rng rng = Rng::fork(cfg.seed, "ls-well-defined");
    for (std::size_t trial = 0; trial < cfg.samples; ++trial) {
        const LSMeasure m{random_stepfn(rng)};
        const auto raw = random_raw_intervals(rng, 4);
        const bool delta_mode = rng.coin();
        const IntervalUnion a =
            normalize(raw, delta_mode ? NormalizeMode::DeltaOf : NormalizeMode::UnionOf);
        const Bit canonical = ls_eval(m, a);
        if (delta_mode && ls_eval_raw_delta(m, raw) != canonical) {
            f.hit("raw delta evaluation differs at trial " + std::to_string(trial));
            continue;
        }
        for (int r = 0; r < 3; ++r) {
            // Split every component at random interior points and evaluate
            // the endpoint XOR on the refinement directly.
            Bit refined = 0;
            for (const auto& [lo, hi] : a.components()) {
                std::vector<ExtendedRational> cuts{lo};
                const std::size_t k = rng.below(3);
                for (std::size_t i = 0; i < k; ++i)
                    cuts.push_back(random_interior(lo, hi, rng));
                std::sort(cuts.begin(), cuts.end(),
                          [](const ExtendedRational& x, const ExtendedRational& y) { return x < y; });
                cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
                cuts.push_back(hi);
                for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
                    refined = bit_xor(refined, bit_xor(sf_eval(m.f, cuts[i]),
                                                       sf_eval(m.f, cuts[i + 1])));
            }
            if (refined != canonical) {
                f.hit("refinement differs at trial " + std::to_string(trial));
                break;
            }
        }
    }
    return f;
}

// ---------------------------------------------------------------------------
// 07: countable additivity of LS measures on telescoping families.

Failure check_thm64(const VerifyConfig& cfg) {
    Failure f;
    Rng rng = Rng::fork(cfg.seed, "thm-6.4");
    for (int fi = 0; fi < 100; ++fi) {
        const BinaryStepFunction fn = random_stepfn(rng);
        const LSMeasure m{fn};
        for (int t = 0; t < 100; ++t) {
            DisjointFamilyGenerator<IntervalUnion> fam;
            if (t % 4 == 3) {
                // Multi-component canonical chain.
                const Rational a0(rng.range(-8, 0));
                const Rational b0 = a0 + Rational(rng.range(1, 4));
                const Rational a1 = b0 + Rational(rng.range(1, 3));
                const Rational b1 = a1 + Rational(rng.range(1, 4));
                fam = ls_chain_family(
                    fn, normalize({{ExtendedRational(a0), ExtendedRational(b0)},
                                   {ExtendedRational(a1), ExtendedRational(b1)}},
                                  NormalizeMode::UnionOf));
            } else {
                const Rational a(rng.range(-8, 8));
                const ExtendedRational b =
                    t % 4 == 2 ? ExtendedRational::pos_inf()
                               : ExtendedRational(a + Rational(rng.range(1, 16)));
                fam = ls_telescope_family(fn, ExtendedRational(a), b);
            }
            const std::size_t depth = std::max(cfg.depth, fam.tail_index);
            const auto report = check_countable_family(as_measure(m), fam, depth);
            if (!report.pass()) {
                f.hit("family " + std::to_string(fi) + "/" + std::to_string(t) +
                      " union=" + std::to_string(report.union_value) +
                      " xor=" + std::to_string(report.xor_sum));
            }
        }
    }
    return f;
}

// ---------------------------------------------------------------------------
// 08: the measure-to-step-function round trip.

Failure check_thm67(const VerifyConfig& cfg) {
    Failure f;
    Rng rng = Rng::fork(cfg.seed, "thm-6.7");
    for (int mi = 0; mi < 100; ++mi) {
        const LSMeasure m{random_stepfn(rng)};
        const ExtendedRational origin =
            rng.below(4) == 0 ? ExtendedRational::neg_inf() : ExtendedRational(rng.rational(16, 4));
        const BinaryStepFunction g1 = ls_cdf(m, origin);
        for (int t = 0; t < 100; ++t) {
            ExtendedRational c(rng.rational(24, 4));
            ExtendedRational d =
                rng.below(8) == 0 ? ExtendedRational::pos_inf() : ExtendedRational(rng.rational(24, 4));
            if (c < origin) c = origin;
            if (d < c) std::swap(d, c);
            if (c < origin || d < origin) continue;
            const Bit lhs = bit_xor(sf_eval(g1, c), sf_eval(g1, d));
            const Bit rhs = ls_eval(m, interval(c, d));
            if (lhs != rhs)
                f.hit("measure " + std::to_string(mi) + " window " + std::to_string(t));
        }
    }
    return f;
}

// ---------------------------------------------------------------------------
// 09: finite derivative supports and the parity reconstruction.

BoxUnion random_box_union(Rng& rng, std::size_t dim, int max_boxes = 3) {
    std::vector<Box> raw;
    const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_boxes)));
    for (int i = 0; i < k; ++i) {
        Box b;
        for (std::size_t a = 0; a < dim; ++a) {
            const Rational lo = rng.rational(8, 2);
            b.sides.emplace_back(lo, lo + Rational(rng.range(1, 8), 2));
        }
        raw.push_back(std::move(b));
    }
    return BoxUnion(dim, raw);
}

LocallyFiniteSet random_finite_set(Rng& rng, std::size_t dim) {
    const std::size_t n = rng.below(13);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) {
        Point p;
        for (std::size_t a = 0; a < dim; ++a) p.coords.push_back(rng.rational(10, 2));
        pts.push_back(std::move(p));
    }
    return LocallyFiniteSet::finite(dim, std::move(pts));
}

LocallyFiniteSet random_lattice(Rng& rng, std::size_t dim) {
    const Rational scale(1, rng.range(1, 3));
    Point offset;
    for (std::size_t a = 0; a < dim; ++a) offset.coords.push_back(rng.rational(4, 2));
    return LocallyFiniteSet::lattice(dim, scale, std::move(offset));
}

Failure check_thm513(const VerifyConfig& cfg) {
    Failure f;
    Rng rng = Rng::fork(cfg.seed, "thm-5.13");
    std::vector<LocallyFiniteSet> carriers;
    for (int i = 0; i < 20; ++i) carriers.push_back(random_finite_set(rng, 1 + i % 3));
    for (int i = 0; i < 5; ++i) carriers.push_back(random_lattice(rng, 1 + i % 3));

    for (const auto& h : carriers) {
        const DerivableMeasure mu = mu_locfin(h);
        for (int t = 0; t < 40; ++t) {
            const BoxUnion a = random_box_union(rng, h.dim());
            const auto support = derivative_support(mu, a);
            // Every returned point lies in A and in H; the count agrees with
            // the floor/ceil counting path; the parity reproduces the measure.
            for (const Point& p : support)
                if (!bx_member(a, p) || !h.member(p)) f.hit("stray support point");
            if (static_cast<long long>(support.size()) != locfin_count(h, a))
                f.hit("support size disagrees with the counting path");
            if (parity(support.size()) != mu(a)) f.hit("parity mismatch");
            // Completeness: random carrier points inside A must be listed.
            for (int probe = 0; probe < 20; ++probe) {
                Point candidate;
                if (h.is_finite()) {
                    if (h.points().empty()) break;
                    candidate = h.points()[rng.below(h.points().size())];
                } else {
                    for (std::size_t k = 0; k < h.dim(); ++k)
                        candidate.coords.push_back(h.offset().coords[k] +
                                                   h.scale() * Rational(rng.range(-20, 20)));
                }
                const bool inside = bx_member(a, candidate) == 1;
                const bool listed =
                    std::find(support.begin(), support.end(), candidate) != support.end();
                if (inside != listed) f.hit("support enumeration misses a carrier point");
            }
        }
        // Partition additivity on single boxes cut along a grid.
        for (int t = 0; t < 4; ++t) {
            const BoxUnion a = random_box_union(rng, h.dim(), 1);
            const Box& base = a.boxes().front();
            std::vector<Box> cells{base};
            for (std::size_t axis = 0; axis < h.dim(); ++axis) {
                std::vector<Box> next;
                for (const Box& b : cells) {
                    const Rational mid =
                        (b.sides[axis].first + b.sides[axis].second) / Rational(rng.range(2, 4));
                    if (b.sides[axis].first < mid && mid < b.sides[axis].second) {
                        Box left = b, right = b;
                        left.sides[axis].second = mid;
                        right.sides[axis].first = mid;
                        next.push_back(left);
                        next.push_back(right);
                    } else {
                        next.push_back(b);
                    }
                }
                cells = std::move(next);
            }
            const std::size_t parts = 1 + rng.below(3);
            std::vector<std::vector<Box>> buckets(parts);
            for (const Box& c : cells) buckets[rng.below(parts)].push_back(c);
            Bit acc = 0;
            for (const auto& bucket : buckets) {
                if (bucket.empty()) continue;
                acc = bit_xor(acc, mu(BoxUnion(h.dim(), bucket)));
            }
            if (acc != mu(a)) f.hit("partition additivity");
        }
    }
    return f;
}

// ---------------------------------------------------------------------------
// 10: derivative of the reconstructed measure, and reconstruction of the
// derivative.

Failure check_thm517(const VerifyConfig& cfg) {
    Failure f;
    Rng rng = Rng::fork(cfg.seed, "thm-5.17");
    std::vector<LocallyFiniteSet> carriers;
    for (int i = 0; i < 8; ++i) carriers.push_back(random_finite_set(rng, 1 + i % 3));
    for (int i = 0; i < 4; ++i) carriers.push_back(random_lattice(rng, 1 + i % 3));
    std::size_t checked_a = 0;
    for (const auto& g : carriers) {
        const DerivableMeasure mu = reconstruct_measure(g);
        if (g.is_finite())
            for (const Point& p : g.points())
                if (derivative_at(mu, p) != 1) f.hit("derivative misses a support point");
        for (int t = 0; t < 100; ++t) {
            Point p;
            for (std::size_t a = 0; a < g.dim(); ++a) p.coords.push_back(rng.rational(12, 3));
            if (derivative_at(mu, p) != g.member(p)) f.hit("derivative differs off support");
        }
        // Reconstruction from the derivative set evaluates like the original.
        const DerivableMeasure rebuilt = reconstruct_measure(*mu.derivative_set);
        const std::size_t per_carrier = cfg.samples / carriers.size() + 1;
        for (std::size_t t = 0; t < per_carrier; ++t) {
            const BoxUnion a = random_box_union(rng, g.dim());
            ++checked_a;
            if (rebuilt(a) != mu(a)) f.hit("rebuilt measure differs");
        }
    }
    if (checked_a < cfg.samples) f.hit("internal: sample budget not reached");
    return f;
}

// ---------------------------------------------------------------------------
// 11: primitives against the Lebesgue-Stieltjes measure, and the duals.

SparsePointFunction random_sparse(Rng& rng, int max_points = 8) {
    const std::size_t n = rng.below(static_cast<std::uint64_t>(max_points + 1));
    std::vector<Rational> pts;
    while (pts.size() < n) {
        const Rational x = rng.rational(16, 4);
        if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
    }
    return SparsePointFunction(std::move(pts));
}

Failure check_sec8(const VerifyConfig& cfg) {
    Failure f;
    Rng rng = Rng::fork(cfg.seed, "sec8-keystone");
    for (std::size_t trial = 0; trial < cfg.samples; ++trial) {
        const SparsePointFunction fn = random_sparse(rng);
        const ExtendedRational a =
            rng.below(4) == 0 ? ExtendedRational::neg_inf() : ExtendedRational(rng.rational(16, 4));
        const BinaryStepFunction primitive = left_primitive(fn, a);
        const LSMeasure ls{primitive};

        ExtendedRational c(rng.rational(24, 4));
        ExtendedRational d(rng.rational(24, 4));
        if (d < c) std::swap(c, d);
        if (c < a) c = a;
        if (d < c) d = c;
        if (!(c < a) && !(d < a)) {
            const Bit via_ls = ls_eval(ls, interval(c, d));
            const Bit direct = left_integral(fn, c, d);
            if (via_ls != direct) f.hit("primitive round trip at trial " + std::to_string(trial));
        }

        // Left continuity at every toggle: value just below equals the value
        // at the toggle.
        const auto& tg = primitive.toggles();
        for (std::size_t i = 0; i < tg.size(); ++i) {
            const Rational prev = i == 0 ? tg[i] - 1 : tg[i - 1];
            const Rational just_below = prev + (tg[i] - prev) / 2;
            if (sf_eval(primitive, ExtendedRational(tg[i])) !=
                sf_eval(primitive, ExtendedRational(just_below)))
                f.hit("primitive not left continuous at a toggle");
        }

        // Algebraic dual within a window: the dual integral against the zero
        // set equals the complemented ordinary integral of the window part.
        const SparsePointFunction zeros = random_sparse(rng, 5);
        ExtendedRational wa(rng.rational(16, 4));
        ExtendedRational wb(rng.rational(16, 4));
        if (wb < wa) std::swap(wa, wb);
        const SparsePointFunction windowed(sp_support_in(zeros, interval(wa, wb)));
        if (dual_left_integral(zeros, wa, wb) != bit_not(left_integral(windowed, wa, wb)))
            f.hit("dual integral identity at trial " + std::to_string(trial));
    }
    return f;
}

// ---------------------------------------------------------------------------
// 12: linearity and a.e. facts exhaustively on the finite carrier.

Failure check_sec7(const VerifyConfig& cfg) {
    Failure f;
    const SetRingFamily ring = power_set_ring3();
    std::vector<TabulatedSetFunction> measures;
    for (std::uint32_t c = 0; c < 8; ++c) {
        std::vector<Bit> values(8);
        for (std::uint32_t m = 0; m < 8; ++m)
            values[m] = parity(static_cast<std::size_t>(__builtin_popcount(m & c)));
        measures.emplace_back(ring, values);
    }
    for (const auto& mu : measures) {
        for (std::uint32_t fs = 0; fs < 8; ++fs) {
            for (std::uint32_t gs = 0; gs < 8; ++gs) {
                const Bit sum = integral(SubsetMask{fs ^ gs}, mu);
                if (sum != bit_xor(integral(SubsetMask{fs}, mu), integral(SubsetMask{gs}, mu)))
                    f.hit("linearity fails");
                // Scalars: 1*f is f, 0*f is the zero function.
                if (integral(SubsetMask{0}, mu) != 0) f.hit("zero scalar");
                if (ae_equal(SubsetMask{fs}, SubsetMask{gs}, mu) == 1 &&
                    integral(SubsetMask{fs}, mu) != integral(SubsetMask{gs}, mu))
                    f.hit("a.e. equal pair with different integrals");
            }
        }
    }
    // Shrinking supports drive the integrals to 0.
    Rng rng = Rng::fork(cfg.seed, "sec7-shrink");
    for (int t = 0; t < 100; ++t) {
        const TabulatedSetFunction& mu = measures[rng.below(measures.size())];
        std::vector<SubsetMask> chain;
        std::uint32_t cur = static_cast<std::uint32_t>(rng.below(8));
        chain.push_back({cur});
        while (cur != 0) {
            const int drop = static_cast<int>(rng.below(3));
            cur &= ~(1u << drop);
            chain.push_back({cur});
        }
        chain.push_back({0});
        const auto report =
            convergence_check(chain, ConvergenceMode::Decreasing, SubsetMask{0}, mu);
        if (!report.pass() || report.limit_integral != 0) f.hit("shrinking family integral");
    }
    return f;
}

struct CheckSpec {
    std::string id;
    double budget_seconds;
    std::function<Failure(const VerifyConfig&)> run;
};

std::vector<CheckSpec> base_checks() {
    return {
        {"01.b2-table", 0.1, check_b2_table},
        {"02.thm-2.1-exhaustive", 1.0, check_thm21},
        {"03.thm-2.4-items", 1.0, check_thm24},
        {"04.counterexample-3.6", 1.0, check_counterexample_seq},
        {"05.counterexample-3.13", 1.0, check_counterexample_interval},
        {"06.ls-well-defined", 5.0, check_ls_well_defined},
        {"07.thm-6.4-telescopes", 10.0, check_thm64},
        {"08.thm-6.7-roundtrip", 5.0, check_thm67},
        {"09.thm-5.13-support", 10.0, check_thm513},
        {"10.thm-5.17-roundtrip", 5.0, check_thm517},
        {"11.sec8-keystone", 10.0, check_sec8},
        {"12.sec7-exhaustive", 5.0, check_sec7},
    };
}

std::vector<CheckResult> run_base_suite(const VerifyConfig& config) {
    std::vector<CheckResult> results;
    for (const auto& spec : base_checks()) {
        CheckResult r;
        r.id = spec.id;
        const auto t0 = std::chrono::steady_clock::now();
        Failure f;
        try {
            f = spec.run(config);
        } catch (const std::exception& e) {
            f.hit(std::string("exception: ") + e.what());
        }
        const auto t1 = std::chrono::steady_clock::now();
        r.seconds = std::chrono::duration<double>(t1 - t0).count();
        r.pass = !f.failed;
        r.witness = f.witness;
        if (r.pass && r.seconds > spec.budget_seconds) {
            r.pass = false;
            r.witness = "over the runtime budget";
        }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace

VerifyReport verify_all(const VerifyConfig& config) {
    VerifyReport report;
    const auto t0 = std::chrono::steady_clock::now();
    report.results = run_base_suite(config);

    // Criterion 13: a replay under the same seed must reproduce the machine
    // section byte for byte, within the whole-suite time budget.
    CheckResult det;
    det.id = "13.verify-deterministic";
    const auto d0 = std::chrono::steady_clock::now();
    VerifyReport first;
    first.results = report.results;
    VerifyReport second;
    second.results = run_base_suite(config);
    const auto d1 = std::chrono::steady_clock::now();
    det.seconds = std::chrono::duration<double>(d1 - d0).count();
    det.pass = first.machine_text() == second.machine_text();
    if (!det.pass) det.witness = "replay differs";
    const double total = std::chrono::duration<double>(d1 - t0).count();
    if (det.pass && total > 60.0) {
        det.pass = false;
        det.witness = "suite exceeded 60 s";
    }
    report.results.push_back(std::move(det));
    return report;
}

}  // namespace binmeas
