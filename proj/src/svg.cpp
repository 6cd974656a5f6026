#include "wallflip/svg.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

namespace wallflip {

namespace {

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

double to_double(const Rat& r) {
    return numerator(r).convert_to<double>() / denominator(r).convert_to<double>();
}

std::string ambient_label(const NumClass& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (i) s += ", ";
        s += rat_str(x.coords[i]);
    }
    return s + ")";
}

}  // namespace

std::pair<Rat, Rat> chart_coordinates(const NumClass& x, const NumClass& b1, const NumClass& b2) {
    std::size_t n = b1.dim();
    if (b2.dim() != n || x.dim() != n)
        throw Error("plot_plane", "chart basis and point dimensions disagree");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Rat det = b1.coords[i] * b2.coords[j] - b1.coords[j] * b2.coords[i];
            if (det == 0) continue;
            Rat a = (x.coords[i] * b2.coords[j] - x.coords[j] * b2.coords[i]) / det;
            Rat b = (b1.coords[i] * x.coords[j] - b1.coords[j] * x.coords[i]) / det;
            for (std::size_t k = 0; k < n; ++k)
                if (a * b1.coords[k] + b * b2.coords[k] != x.coords[k])
                    throw Error("plot_plane", "point does not lie in the slice plane");
            return {a, b};
        }
    throw Error("plot_plane", "slice basis is degenerate");
}

std::string render_slice_svg(const AmpleCone& cone, const WallSet& walls,
                             const SurfaceLattice& lat, const SlicePlot& plot) {
    // exact chart data first; floats appear only when pixels are emitted
    std::vector<std::pair<Rat, Rat>> gens;
    for (const auto& g : cone.generators)
        gens.push_back(chart_coordinates(g, plot.basis1, plot.basis2));
    std::optional<std::pair<std::pair<Rat, Rat>, std::pair<Rat, Rat>>> path_pts;
    if (plot.path)
        path_pts = {chart_coordinates(plot.path->first, plot.basis1, plot.basis2),
                    chart_coordinates(plot.path->second, plot.basis1, plot.basis2)};

    Rat extent = 1;
    auto widen = [&](const std::pair<Rat, Rat>& p) {
        if (p.first > extent) extent = p.first;
        if (p.second > extent) extent = p.second;
    };
    for (const auto& p : gens) widen(p);
    if (path_pts) {
        widen(path_pts->first);
        widen(path_pts->second);
    }

    const double size = 480, margin = 40;
    double scale = (size - 2 * margin) / to_double(extent);
    auto X = [&](const Rat& a) { return margin + to_double(a) * scale; };
    auto Y = [&](const Rat& b) { return size - margin - to_double(b) * scale; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
          "baseProfile=\"full\" width=\"480\" height=\"480\" viewBox=\"0 0 480 480\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"480\" height=\"480\" fill=\"white\"/>\n";

    // cone edges from the apex through each generator
    for (const auto& g : gens)
        os << "<line class=\"cone-edge\" x1=\"" << px(X(0)) << "\" y1=\"" << px(Y(0)) << "\" x2=\""
           << px(X(g.first)) << "\" y2=\"" << px(Y(g.second))
           << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

    // wall lines: a (n.B1) + b (n.B2) = 0, drawn when the ray enters the chart
    for (const auto& h : walls.hyperplanes) {
        Rat d1 = lat.pair(h.normal, plot.basis2);
        Rat d2 = -lat.pair(h.normal, plot.basis1);
        if (d1 < 0 || (d1 == 0 && d2 < 0)) {
            d1 = -d1;
            d2 = -d2;
        }
        if (d1 < 0 || d2 < 0 || (d1 == 0 && d2 == 0)) continue;
        Rat t = extent / (d1 > d2 ? d1 : d2);
        os << "<line class=\"wall\" x1=\"" << px(X(0)) << "\" y1=\"" << px(Y(0)) << "\" x2=\""
           << px(X(d1 * t)) << "\" y2=\"" << px(Y(d2 * t))
           << "\" stroke=\"#3366cc\" stroke-width=\"1\" stroke-dasharray=\"6,3\"/>\n";
    }

    if (path_pts)
        os << "<line class=\"path\" x1=\"" << px(X(path_pts->first.first)) << "\" y1=\""
           << px(Y(path_pts->first.second)) << "\" x2=\"" << px(X(path_pts->second.first))
           << "\" y2=\"" << px(Y(path_pts->second.second))
           << "\" stroke=\"#cc3333\" stroke-width=\"2\"/>\n";

    auto vertex = [&](const std::pair<Rat, Rat>& p, const NumClass& ambient) {
        os << "<circle class=\"vertex\" cx=\"" << px(X(p.first)) << "\" cy=\"" << px(Y(p.second))
           << "\" r=\"3\" fill=\"black\"/>\n";
        if (plot.coords)
            os << "<text class=\"coords\" x=\"" << px(X(p.first) + 6) << "\" y=\""
               << px(Y(p.second) - 6) << "\" font-size=\"10\">" << ambient_label(ambient)
               << "</text>\n";
    };
    for (std::size_t i = 0; i < gens.size(); ++i) vertex(gens[i], cone.generators[i]);
    if (path_pts) {
        vertex(path_pts->first, plot.path->first);
        vertex(path_pts->second, plot.path->second);
    }

    os << "</svg>\n";
    return os.str();
}

}  // namespace wallflip
