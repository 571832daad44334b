#include "chordforest/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace chordforest::svg {

namespace {

constexpr double kCenter = 140.0;
constexpr double kRadius = 100.0;
constexpr double kLabelRadius = 116.0;

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    if (s == "-0.000") s = "0.000";
    return s;
}

struct Position {
    double x;
    double y;
};

// Point 1 sits half a step past 180 degrees; labels advance clockwise.
Position place(int point, int point_count, double radius) {
    const double step = 2.0 * std::numbers::pi / point_count;
    const double angle = std::numbers::pi + step / 2.0 - point * step;
    return {kCenter + radius * std::cos(angle), kCenter - radius * std::sin(angle)};
}

}  // namespace

std::string render(const diagrams::ChordDiagram& d) {
    const int points = d.point_count();
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"280\" height=\"280\" "
          "viewBox=\"0 0 280 280\">\n"
       << "  <title>" << diagrams::to_text(d) << "</title>\n"
       << "  <circle class=\"boundary\" cx=\"" << fixed(kCenter) << "\" cy=\"" << fixed(kCenter) << "\" r=\""
       << fixed(kRadius) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (const auto& chord : d.chords()) {
        const Position a = place(chord.first, points, kRadius);
        const Position b = place(chord.second, points, kRadius);
        os << "  <line class=\"chord\" x1=\"" << fixed(a.x) << "\" y1=\"" << fixed(a.y) << "\" x2=\""
           << fixed(b.x) << "\" y2=\"" << fixed(b.y) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    for (int p = 1; p <= points; ++p) {
        const Position dot = place(p, points, kRadius);
        const Position label = place(p, points, kLabelRadius);
        os << "  <circle class=\"point\" cx=\"" << fixed(dot.x) << "\" cy=\"" << fixed(dot.y)
           << "\" r=\"3\" fill=\"black\"/>\n";
        os << "  <text class=\"label\" x=\"" << fixed(label.x) << "\" y=\"" << fixed(label.y)
           << "\" font-size=\"11\" text-anchor=\"middle\" dominant-baseline=\"central\">" << p << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace chordforest::svg
