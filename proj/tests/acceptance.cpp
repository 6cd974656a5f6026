// Acceptance suite: one pass/fail line per criterion, exit nonzero on any
// failure.  Every expectation is an exact comparison against an independent
// oracle or a frozen hand-checked value.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "helpers.hpp"
#include "wallflip/numex.hpp"
#include "wallflip/strata.hpp"

using namespace wallflip;
using namespace wallflip::testing;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << "criterion " << criterion << " (" << name << "): " << (ok ? "PASS" : "FAIL");
    if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++failures;
}

AmpleCone cone_of(std::vector<NumClass> gens) {
    AmpleCone c;
    c.generators = std::move(gens);
    return c;
}

void criterion1() {
    auto start = std::chrono::steady_clock::now();
    SurfaceLattice lat = quadric();
    NumClass c1({Rat(1), Rat(1)});
    bool ok = true;
    std::string detail;
    for (const auto& cone : {cone_of({nc({Rat(1), Rat(2)}), nc({Rat(2), Rat(1)})}),
                             cone_of({nc({Rat(1), Rat(3)}), nc({Rat(3), Rat(1)})})}) {
        for (int c2 = 0; c2 <= 10; ++c2) {
            auto got = wall_normals(enumerate_walls(ChernData(2, c1, Rat(c2)), cone, lat));
            auto want = rank2_wall_oracle(lat, c1, Rat(c2), cone, 4 * c2 + 6);
            if (got != want) {
                ok = false;
                detail = "mismatch at c2=" + std::to_string(c2);
            }
        }
    }
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() -
                                                                 start)
                    .count();
    if (secs >= 60) {
        ok = false;
        detail = "runtime " + std::to_string(secs) + "s";
    }
    report(1, "rank-2 wall oracle", ok, detail);
}

void criterion2() {
    bool ok = true;
    std::string detail;
    try {
        UnboundedFamily fam = remark17_family(5, nc({Rat(1), Rat(0), Rat(0)}));
        SurfaceLattice lat = product_abelian_lattice();
        std::vector<Rat> expect = {Rat(6), Rat(24), Rat(90), Rat(336), Rat(1254)};
        if (fam.members.size() != 5) ok = false;
        for (std::size_t i = 0; ok && i < 5; ++i) {
            const auto& m = fam.members[i];
            ok = m.c2 == 2 && m.c2 > 0 && m.c2 < 8 && lat.square(m.h) == 6 &&
                 lat.pair(m.h, m.l) == 0 && m.verdict != Stability::UNSTABLE &&
                 m.probe_pairing == expect[i];
            if (!ok) detail = "member " + std::to_string(i);
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(2, "pell family", ok, detail);
}

void criterion3() {
    bool ok = true;
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    try {
        SurfaceLattice lat = quadric();
        ChernData e(2, nc({Rat(1), Rat(1)}), Rat(2));
        AmpleCone cone = cone_of({nc({Rat(1), Rat(2)}), nc({Rat(2), Rat(1)})});
        FlipReport rep = flip_sequence(e, cone, nc({Rat(1), Rat(2)}), nc({Rat(2), Rat(1)}), lat);
        ok = rep.sequences.size() == 1;
        if (ok) {
            const auto& s = rep.sequences[0];
            ok = s.threshold == 3 && s.threshold_min == 2 &&
                 s.strata.crossings == std::vector<Rat>{Rat(1, 3), Rat(2, 3)} &&
                 s.strata.wall_reps[0] == nc({Rat(4), Rat(5)}) &&
                 s.strata.wall_reps[1] == nc({Rat(5), Rat(4)}) &&
                 s.strata.chamber_reps[1] == nc({Rat(9, 2), Rat(9, 2)}) &&
                 s.integral_annotations.size() == 2 && s.integral_annotations[0].has_value() &&
                 s.integral_annotations[0]->c1 == nc({Rat(9), Rat(11)}) &&
                 s.integral_annotations[0]->c2 == 51;
        }
        if (!ok) detail = "diagram mismatch";
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    auto secs =
        std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start)
            .count();
    if (secs >= 5) {
        ok = false;
        detail = "runtime " + std::to_string(secs) + "s";
    }
    report(3, "flip sequence running example", ok, detail);
}

void criterion4() {
    std::mt19937_64 rng(104);
    std::uniform_int_distribution<int> num(-30, 30), den(1, 6);
    bool ok = true;
    for (int it = 0; it < 1000 && ok; ++it) {
        Rat a2(den(rng));
        HilbertPoly pf{a2, Rat(num(rng), den(rng)), Rat(num(rng), den(rng))};
        HilbertPoly pe{a2, Rat(num(rng), den(rng)), Rat(num(rng), den(rng))};
        Order ord = compare_reduced(pf, pe);
        Rat da1 = pf.a1 - pe.a1, da0 = pf.a0 - pe.a0;
        Int n0 = da1 == 0 ? Int(1) : ceil_rat(rat_abs(da0 / da1)) + 1;
        for (const Int& n : {n0, Int(n0 + 1)}) {
            Rat diff = pf.eval(Rat(n)) - pe.eval(Rat(n));
            Order ev = diff < 0 ? Order::LESS : (diff > 0 ? Order::GREATER : Order::EQUAL);
            if (ev != ord) ok = false;
        }
    }
    report(4, "comparator evaluation oracle", ok);
}

void criterion5() {
    std::mt19937_64 rng(105);
    std::uniform_int_distribution<int> numd(-3, 3), dend(1, 4), bnd(0, 50);
    bool ok = true;
    for (int it = 0; it < 50 && ok; ++it) {
        std::size_t n = 2 + it % 2;
        auto gram = random_posdef(rng, n);
        std::vector<Rat> sh(n);
        for (auto& s : sh) s = Rat(numd(rng), dend(rng));
        NumClass shift(sh);
        Rat bound(bnd(rng));
        if (fincke_pohst(gram, shift, bound) != box_scan(gram, shift, bound)) ok = false;
    }
    report(5, "ellipsoid enumeration oracle", ok);
}

void criterion6() {
    SurfaceLattice lat = quadric();
    NumClass h({Rat(1), Rat(1)});
    bool ok = true;
    for (int a = -20; a <= 20 && ok; ++a)
        for (int b = -20; b <= 20 && ok; ++b) {
            HilbertPoly p = reduced_hilbert(ChernData(1, nc({Rat(a), Rat(b)}), Rat(0)),
                                            NumClass::zero(2), h, lat);
            if (p.eval(0) != Rat((a + 1) * (b + 1))) ok = false;
        }
    report(6, "riemann-roch oracle", ok);
}

void criterion7() {
    SurfaceLattice lat = quadric();
    std::mt19937_64 rng(107);
    std::uniform_int_distribution<int> rk(1, 4), coord(-5, 5), c2d(-10, 10), pos(1, 6);
    bool ok = true;
    for (int it = 0; it < 500 && ok; ++it) {
        ChernData e(rk(rng), nc({Rat(coord(rng)), Rat(coord(rng))}), Rat(c2d(rng)));
        NumClass l({Rat(coord(rng)), Rat(coord(rng))});
        NumClass h({Rat(pos(rng)), Rat(pos(rng))});
        HilbertPoly twisted = reduced_hilbert(e, l, h, lat);
        HilbertPoly transformed =
            reduced_hilbert(integral_twist_transform(e, l, lat), NumClass::zero(2), h, lat);
        if (!(twisted == transformed)) ok = false;
        ChernData back = integral_twist_transform(integral_twist_transform(e, l, lat), -l, lat);
        if (back.c1 != e.c1 || back.c2 != e.c2) ok = false;
    }
    report(7, "twist transform consistency", ok);
}

void criterion8() {
    SurfaceLattice lat = quadric();
    AmpleCone cone = cone_of({nc({Rat(1), Rat(2)}), nc({Rat(2), Rat(1)})});
    std::mt19937_64 rng(108);
    std::uniform_int_distribution<int> c2d(2, 8);
    bool ok = true;
    std::string detail;
    auto sign_of = [](const Rat& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); };
    try {
        for (int variant = 0; variant < 21 && ok; ++variant) {
            ChernData e(2, nc({Rat(1), Rat(1)}), Rat(variant == 0 ? 2 : c2d(rng)));
            WallSet walls = enumerate_walls(e, cone, lat);
            NumClass a0 =
                generic_wall_point(walls.hyperplanes[0].normal, cone, walls, lat, variant);
            Int n = lemma36_threshold(e, walls, a0, nc({Rat(1), Rat(2)}), lat) + 1;
            NumClass zs = nc({Rat(1), Rat(2)}) * Rat(n), ze = nc({Rat(2), Rat(1)}) * Rat(n);
            TwistStratification st = twist_strata(e, walls, a0, zs, ze, lat);
            std::vector<Rat> cuts;
            cuts.push_back(Rat(0));
            for (const auto& s : st.crossings) cuts.push_back(s);
            cuts.push_back(Rat(1));
            for (std::size_t i = 0; ok && i + 1 < cuts.size(); ++i) {
                std::vector<int> ref;
                for (int k = 1; k <= 5; ++k) {
                    Rat s = cuts[i] + (cuts[i + 1] - cuts[i]) * Rat(k, 6);
                    std::vector<int> signs;
                    for (const auto& f : st.functionals)
                        signs.push_back(sign_of(f.eval(st.at(s), lat)));
                    if (k == 1)
                        ref = signs;
                    else if (signs != ref)
                        ok = false;
                    for (int v : signs)
                        if (v == 0) ok = false;
                }
            }
            for (std::size_t i = 0; ok && i < st.crossings.size(); ++i) {
                bool some_zero = false;
                for (const auto& f : st.functionals)
                    if (f.eval(st.wall_reps[i], lat) == 0) some_zero = true;
                if (!some_zero) ok = false;
            }
            // crossing set identical under 5 re-drawn generic wall points
            for (std::uint64_t seed = 100; ok && seed < 105; ++seed) {
                NumClass a =
                    generic_wall_point(walls.hyperplanes[0].normal, cone, walls, lat, seed);
                TwistStratification st2 = twist_strata(e, walls, a, zs, ze, lat);
                if (st2.crossings != st.crossings) ok = false;
            }
            if (!ok) detail = "variant " + std::to_string(variant);
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(8, "stratum constancy", ok, detail);
}

void criterion9() {
    SurfaceLattice lat = quadric();
    AmpleCone cone = cone_of({nc({Rat(1), Rat(2)}), nc({Rat(2), Rat(1)})});
    NumClass h({Rat(1), Rat(2)});
    bool ok = true;
    int checked = 0;
    std::string detail;
    try {
        for (int c2 = 2; c2 <= 11 && ok; ++c2) {
            ChernData e(2, nc({Rat(1), Rat(1)}), Rat(c2));
            WallSet walls = enumerate_walls(e, cone, lat);
            NumClass a = generic_wall_point(walls.hyperplanes[0].normal, cone, walls, lat, 7);
            Int n = lemma36_threshold(e, walls, a, h, lat);
            NumClass nh = h * Rat(n);
            for (const auto& hp : walls.hyperplanes)
                for (const auto& d : hp.data) {
                    if (lat.pair(d.xi, a) != 0) continue;
                    for (Int c2f = d.c2f_lo; c2f <= d.c2f_hi; ++c2f) {
                        ChernData f(d.r_f, d.c1_f, Rat(c2f));
                        if (twisted_verdict(e, {f}, nh, a, lat).kind !=
                            twisted_verdict(e, {f}, NumClass::zero(2), h, lat).kind)
                            ok = false;
                        ++checked;
                    }
                }
        }
        if (checked < 100) {
            ok = false;
            detail = "only " + std::to_string(checked) + " data";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(9, "effective lemma 3.6", ok, detail);
}

void criterion10() {
    bool ok = true;
    std::string detail;
    try {
        SurdApprox a = approximate_surd(3, 4);
        std::vector<std::pair<Int, Int>> expect = {{1, 2}, {4, 7}, {15, 26}, {56, 97}};
        ok = a.convergents == expect;
        for (const auto& [p, q] : a.convergents) {
            if (!(q * q > 3 * p * p)) ok = false;
            if (q * p > 1 && !((q * p - 1) * (q * p - 1) < 3 * p * p * p * p)) ok = false;
        }
        if (!ok) detail = "approximant mismatch";
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(10, "diophantine approximants", ok, detail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
