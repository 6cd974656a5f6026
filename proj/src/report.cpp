#include "wallflip/report.hpp"

#include <fstream>
#include <sstream>

namespace wallflip {

namespace {

Rat rat_from(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return Rat(Int(v.get<long long>()));
    if (v.is_string()) return rat_parse(v.get<std::string>());
    throw Error("spec_parse", where + ": expected integer or \"num/den\" string");
}

Int int_from(const Json& v, const std::string& where) {
    Rat r = rat_from(v, where);
    if (!is_integral(r)) throw Error("spec_parse", where + ": expected an integer");
    return numerator(r);
}

NumClass class_from(const Json& v, const std::string& where) {
    if (!v.is_array()) throw Error("spec_parse", where + ": expected an array of rationals");
    std::vector<Rat> c;
    for (std::size_t i = 0; i < v.size(); ++i)
        c.push_back(rat_from(v[i], where + "[" + std::to_string(i) + "]"));
    return NumClass(std::move(c));
}

std::vector<NumClass> classes_from(const Json& v, const std::string& where) {
    if (!v.is_array()) throw Error("spec_parse", where + ": expected an array of classes");
    std::vector<NumClass> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(class_from(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

ChernData chern_from(const Json& v, const std::string& where) {
    if (!v.is_object()) throw Error("spec_parse", where + ": expected an object");
    if (!v.contains("rank") || !v.contains("c1") || !v.contains("c2"))
        throw Error("spec_parse", where + ": needs rank, c1, c2");
    return ChernData(int_from(v["rank"], where + ".rank"), class_from(v["c1"], where + ".c1"),
                     rat_from(v["c2"], where + ".c2"));
}

std::string ratj(const Rat& r) { return rat_str(r); }

Json stability_name(Stability s) {
    switch (s) {
        case Stability::STABLE: return "stable";
        case Stability::STRICTLY_SEMISTABLE: return "strictly_semistable";
        default: return "unstable";
    }
}

}  // namespace

const SurfaceLattice& ProblemSpec::need_lattice() const {
    if (!lattice) throw Error("spec_parse", "missing lattice block");
    return *lattice;
}

const ChernData& ProblemSpec::need_chern() const {
    if (!chern) throw Error("spec_parse", "missing chern block");
    return *chern;
}

const AmpleCone& ProblemSpec::need_cone() const {
    if (!cone) throw Error("spec_parse", "missing cone block");
    return *cone;
}

ProblemSpec parse_spec(const Json& doc) {
    if (!doc.is_object()) throw Error("spec_parse", "top level must be a JSON object");
    if (!doc.contains("spec_version"))
        throw Error("spec_parse", "missing spec_version field");
    if (!doc["spec_version"].is_number_integer() || doc["spec_version"].get<int>() != 1)
        throw Error("spec_parse", "unsupported spec_version (expected 1)");

    ProblemSpec ps;
    if (doc.contains("lattice")) {
        const Json& l = doc["lattice"];
        if (!l.is_object() || !l.contains("rank") || !l.contains("gram") ||
            !l.contains("canonical") || !l.contains("chi"))
            throw Error("spec_parse", "lattice: needs rank, gram, canonical, chi");
        long long rank = l["rank"].is_number_integer() ? l["rank"].get<long long>() : -1;
        if (rank < 1) throw Error("spec_parse", "lattice.rank: expected a positive integer");
        if (!l["gram"].is_array() || l["gram"].size() != static_cast<std::size_t>(rank))
            throw Error("spec_parse", "lattice.gram: expected a rank x rank array");
        std::vector<std::vector<Int>> gram;
        for (std::size_t i = 0; i < l["gram"].size(); ++i) {
            const Json& row = l["gram"][i];
            std::string where = "lattice.gram[" + std::to_string(i) + "]";
            if (!row.is_array() || row.size() != static_cast<std::size_t>(rank))
                throw Error("spec_parse", where + ": expected " + std::to_string(rank) + " entries");
            std::vector<Int> r;
            for (std::size_t j = 0; j < row.size(); ++j)
                r.push_back(int_from(row[j], where + "[" + std::to_string(j) + "]"));
            gram.push_back(std::move(r));
        }
        std::vector<Int> canon;
        NumClass kc = class_from(l["canonical"], "lattice.canonical");
        for (const auto& c : kc.coords) {
            if (!is_integral(c))
                throw Error("spec_parse", "lattice.canonical: expected integer entries");
            canon.push_back(numerator(c));
        }
        if (canon.size() != static_cast<std::size_t>(rank))
            throw Error("spec_parse", "lattice.canonical: wrong length");
        ps.lattice.emplace(static_cast<std::size_t>(rank), std::move(gram), std::move(canon),
                           int_from(l["chi"], "lattice.chi"));
    }
    if (doc.contains("chern")) ps.chern.emplace(chern_from(doc["chern"], "chern"));
    if (doc.contains("cone")) {
        const Json& c = doc["cone"];
        if (!c.is_object() || !c.contains("generators"))
            throw Error("spec_parse", "cone: needs generators");
        ps.cone.emplace();
        ps.cone->generators = classes_from(c["generators"], "cone.generators");
    }
    if (doc.contains("path")) {
        const Json& p = doc["path"];
        if (!p.is_object() || !p.contains("start") || !p.contains("end"))
            throw Error("spec_parse", "path: needs start and end");
        ps.path_start.emplace(class_from(p["start"], "path.start"));
        ps.path_end.emplace(class_from(p["end"], "path.end"));
    }
    if (doc.contains("twist")) {
        const Json& t = doc["twist"];
        if (!t.is_object() || !t.contains("wall_point") || !t.contains("start") ||
            !t.contains("end"))
            throw Error("spec_parse", "twist: needs wall_point, start, end");
        ps.wall_point.emplace(class_from(t["wall_point"], "twist.wall_point"));
        ps.twist_start.emplace(class_from(t["start"], "twist.start"));
        ps.twist_end.emplace(class_from(t["end"], "twist.end"));
    }
    if (doc.contains("classify")) {
        const Json& c = doc["classify"];
        if (!c.is_object() || !c.contains("wall_point") || !c.contains("polarization"))
            throw Error("spec_parse", "classify: needs wall_point and polarization");
        ps.wall_point.emplace(class_from(c["wall_point"], "classify.wall_point"));
        ps.polarization.emplace(class_from(c["polarization"], "classify.polarization"));
        if (c.contains("candidates")) {
            if (!c["candidates"].is_array())
                throw Error("spec_parse", "classify.candidates: expected an array");
            for (std::size_t i = 0; i < c["candidates"].size(); ++i)
                ps.candidates.push_back(
                    chern_from(c["candidates"][i], "classify.candidates[" + std::to_string(i) + "]"));
        }
    }
    if (doc.contains("counterexample")) {
        const Json& c = doc["counterexample"];
        if (!c.is_object() || !c.contains("count") || !c.contains("probe"))
            throw Error("spec_parse", "counterexample: needs count and probe");
        ps.family_count = static_cast<int>(int_from(c["count"], "counterexample.count"));
        ps.probe.emplace(class_from(c["probe"], "counterexample.probe"));
    }
    if (doc.contains("approx")) {
        const Json& a = doc["approx"];
        if (!a.is_object() || !a.contains("d") || !a.contains("count"))
            throw Error("spec_parse", "approx: needs d and count");
        ps.approx_d = int_from(a["d"], "approx.d");
        ps.approx_count = static_cast<int>(int_from(a["count"], "approx.count"));
    }
    if (doc.contains("nef")) {
        const Json& n = doc["nef"];
        if (!n.is_object() || !n.contains("generators") || !n.contains("shrink_steps"))
            throw Error("spec_parse", "nef: needs generators and shrink_steps");
        ps.nef_generators.emplace(classes_from(n["generators"], "nef.generators"));
        ps.shrink_steps = static_cast<int>(int_from(n["shrink_steps"], "nef.shrink_steps"));
    }
    if (doc.contains("plot")) {
        const Json& p = doc["plot"];
        if (!p.is_object()) throw Error("spec_parse", "plot: expected an object");
        if (p.contains("basis")) {
            const Json& b = p["basis"];
            if (!b.is_array() || b.size() != 2)
                throw Error("spec_parse", "plot.basis: expected two classes");
            ps.plot_basis.emplace(class_from(b[0], "plot.basis[0]"),
                                  class_from(b[1], "plot.basis[1]"));
        }
        if (p.contains("coords")) {
            if (!p["coords"].is_boolean())
                throw Error("spec_parse", "plot.coords: expected a boolean");
            ps.plot_coords = p["coords"].get<bool>();
        }
    }
    return ps;
}

ProblemSpec parse_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("spec_io", "cannot open spec file: " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("spec_parse", std::string("JSON parse error: ") + e.what());
    }
    return parse_spec(doc);
}

Json to_json(const NumClass& x) {
    Json a = Json::array();
    for (const auto& c : x.coords) a.push_back(ratj(c));
    return a;
}

Json to_json(const ChernData& e) {
    Json j = Json::object();
    j["rank"] = e.rank.str();
    j["c1"] = to_json(e.c1);
    j["c2"] = ratj(e.c2);
    return j;
}

Json to_json(const WallSet& ws) {
    Json j = Json::object();
    j["hyperplane_count"] = ws.hyperplanes.size();
    Json hs = Json::array();
    for (const auto& h : ws.hyperplanes) {
        Json hj = Json::object();
        hj["normal"] = to_json(h.normal);
        Json data = Json::array();
        for (const auto& d : h.data) {
            Json dj = Json::object();
            dj["r_f"] = d.r_f.str();
            dj["c1_f"] = to_json(d.c1_f);
            dj["l"] = to_json(d.l);
            dj["xi"] = to_json(d.xi);
            dj["c2f_range"] = Json::array({d.c2f_lo.str(), d.c2f_hi.str()});
            data.push_back(std::move(dj));
        }
        hj["data"] = std::move(data);
        hs.push_back(std::move(hj));
    }
    j["hyperplanes"] = std::move(hs);
    if (!ws.notice.empty()) j["notice"] = ws.notice;
    return j;
}

Json to_json(const NefHeuristicResult& res) {
    Json j = Json::object();
    j["stabilized"] = res.stabilized;
    j["step_wall_counts"] = res.step_wall_counts;
    Json errs = Json::array();
    for (const auto& e : res.step_errors) errs.push_back(e);
    j["step_errors"] = std::move(errs);
    j["walls"] = to_json(res.walls);
    return j;
}

Json to_json(const ChamberPath& path) {
    Json j = Json::object();
    j["start"] = to_json(path.start);
    j["end"] = to_json(path.end);
    Json evs = Json::array();
    for (const auto& ev : path.events) {
        Json e = Json::object();
        e["t"] = ratj(ev.t);
        Json ns = Json::array();
        for (const auto& n : ev.normals) ns.push_back(to_json(n));
        e["normals"] = std::move(ns);
        evs.push_back(std::move(e));
    }
    j["events"] = std::move(evs);
    j["chamber_count"] = path.events.size() + 1;
    return j;
}

Json to_json(const TwistStratification& st, const SurfaceLattice& lat) {
    Json j = Json::object();
    j["wall_point"] = to_json(st.wall_point);
    j["line"] = Json::object({{"start", to_json(st.z_start)}, {"end", to_json(st.z_end)}});
    Json fs = Json::array();
    for (const auto& f : st.functionals) {
        Json fj = Json::object();
        fj["r_f"] = f.datum.r_f.str();
        fj["c1_f"] = to_json(f.datum.c1_f);
        fj["c2_f"] = f.c2f.str();
        fj["xi"] = to_json(f.datum.xi);
        fj["tau_diff"] = ratj(f.tau_diff);
        fs.push_back(std::move(fj));
    }
    j["functionals"] = std::move(fs);
    Json cs = Json::array();
    for (const auto& s : st.crossings) cs.push_back(ratj(s));
    j["crossings"] = std::move(cs);
    Json walls = Json::array();
    for (std::size_t i = 0; i < st.wall_reps.size(); ++i) {
        Json w = Json::object();
        w["label"] = "L" + std::to_string(i);
        w["twist"] = to_json(st.wall_reps[i]);
        Json signs = Json::array();
        for (const auto& f : st.functionals) {
            Rat v = f.eval(st.wall_reps[i], lat);
            signs.push_back(v > 0 ? 1 : (v < 0 ? -1 : 0));
        }
        w["delta_signs"] = std::move(signs);
        walls.push_back(std::move(w));
    }
    j["wall_strata"] = std::move(walls);
    Json chambers = Json::array();
    for (std::size_t i = 0; i < st.chamber_reps.size(); ++i) {
        Json c = Json::object();
        c["label"] = "M" + std::to_string(i);
        c["twist"] = to_json(st.chamber_reps[i]);
        Json signs = Json::array();
        for (const auto& f : st.functionals) {
            Rat v = f.eval(st.chamber_reps[i], lat);
            signs.push_back(v > 0 ? 1 : (v < 0 ? -1 : 0));
        }
        c["delta_signs"] = std::move(signs);
        chambers.push_back(std::move(c));
    }
    j["chamber_strata"] = std::move(chambers);
    return j;
}

Json to_json(const FlipReport& rep, const SurfaceLattice& lat) {
    Json j = Json::object();
    if (!rep.note.empty()) j["note"] = rep.note;
    Json seqs = Json::array();
    for (const auto& s : rep.sequences) {
        Json sj = Json::object();
        sj["wall_normal"] = to_json(s.wall_normal);
        sj["wall_point"] = to_json(s.wall_point);
        sj["threshold_min"] = s.threshold_min.str();
        sj["threshold"] = s.threshold.str();
        sj["origin_stratum"] = s.origin_stratum;
        sj["strata"] = to_json(s.strata, lat);
        Json anns = Json::array();
        for (const auto& a : s.integral_annotations)
            anns.push_back(a ? to_json(*a) : Json(nullptr));
        sj["integral_annotations"] = std::move(anns);
        seqs.push_back(std::move(sj));
    }
    j["sequences"] = std::move(seqs);
    return j;
}

Json to_json(const UnboundedFamily& fam) {
    Json j = Json::object();
    Json ms = Json::array();
    for (const auto& m : fam.members) {
        Json mj = Json::object();
        mj["p"] = m.p.str();
        mj["q"] = m.q.str();
        mj["l"] = to_json(m.l);
        mj["h"] = to_json(m.h);
        mj["c2"] = ratj(m.c2);
        mj["probe_pairing"] = ratj(m.probe_pairing);
        mj["verdict"] = stability_name(m.verdict);
        ms.push_back(std::move(mj));
    }
    j["members"] = std::move(ms);
    j["reduced_constant_term"] = ratj(fam.reduced_constant_term);
    j["sign_note"] =
        "the constant term above follows the Riemann-Roch convention used by this "
        "library; sources differ on the sign of the c2/2 contribution";
    return j;
}

Json to_json(const SurdApprox& a) {
    Json j = Json::object();
    j["d"] = a.d.str();
    Json cs = Json::array();
    for (const auto& [p, q] : a.convergents)
        cs.push_back(Json::object({{"p", p.str()}, {"q", q.str()}}));
    j["convergents"] = std::move(cs);
    return j;
}

namespace {

void render_value(const Json& v, const std::string& indent, std::ostream& os);

void render_object(const Json& v, const std::string& indent, std::ostream& os) {
    for (auto it = v.begin(); it != v.end(); ++it) {
        os << indent << it.key() << ":";
        if (it.value().is_object() || (it.value().is_array() && !it.value().empty() &&
                                       (it.value()[0].is_object() || it.value()[0].is_array()))) {
            os << "\n";
            render_value(it.value(), indent + "  ", os);
        } else {
            os << " ";
            render_value(it.value(), "", os);
            os << "\n";
        }
    }
}

void render_value(const Json& v, const std::string& indent, std::ostream& os) {
    if (v.is_object()) {
        render_object(v, indent, os);
    } else if (v.is_array()) {
        bool flat = true;
        for (const auto& e : v)
            if (e.is_object() || e.is_array()) flat = false;
        if (flat) {
            os << "[";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) os << ", ";
                render_value(v[i], "", os);
            }
            os << "]";
        } else {
            for (std::size_t i = 0; i < v.size(); ++i) {
                os << indent << "- [" << i << "]\n";
                render_value(v[i], indent + "  ", os);
            }
        }
    } else if (v.is_string()) {
        os << v.get<std::string>();
    } else {
        os << v.dump();
    }
}

}  // namespace

std::string render_text(const Json& report) {
    std::ostringstream os;
    render_value(report, "", os);
    return os.str();
}

}  // namespace wallflip
