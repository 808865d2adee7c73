#include <doctest.h>

#include <string>

#include "insep/lattice.hpp"
#include "insep/render.hpp"
#include "insep/representation.hpp"

using namespace insep;

namespace {

const Theta kTheta108{{1, 2, 3, 5, 6, 9}, {1, 2, 3, 6, 7, 9}, {1, 2, 3, 4, 6, 9}, {1, 2, 4, 6, 7, 9}};

std::size_t occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++count;
    return count;
}

}  // namespace

TEST_CASE("ASCII drawings") {
    const PointSet sq{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    CHECK(render(sq, RenderFormat::Ascii) == "##\n##\n");
    CHECK(render(Theta{{1}, {1}, {1}, {1}}, RenderFormat::Ascii) == "##\n##\n");
    CHECK(render(PointSet{{0, 0}, {2, 1}}, RenderFormat::Ascii) == "..#\n#..\n");

    // The witness for three points runs along the lower row and up column 0.
    const PointSet three{{0, 0}, {1, 0}, {0, 1}};
    const auto w = find_friendly_path(three);
    REQUIRE(w.has_value());
    RenderOptions opt;
    opt.path = *w;
    const std::string art = render(three, RenderFormat::Ascii, opt);
    CHECK(art.size() == 6);
    CHECK(occurrences(art, "@") == evaluate_path(*w, three).on_path);
}

TEST_CASE("SVG drawing of the 108-point set") {
    const std::string svg = render(kTheta108, RenderFormat::Svg);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(occurrences(svg, "class=\"point\"") == 108);
    CHECK(occurrences(svg, "class=\"red-line\"") == 2);
    CHECK(occurrences(svg, "class=\"path\"") == 0);
    // 18 x 18 bounding box plus a one-site margin.
    CHECK(occurrences(svg, "class=\"site\"") == 20 * 20);
    CHECK(render(kTheta108, RenderFormat::Svg) == svg);
}

TEST_CASE("SVG overlays") {
    const PointSet single{{5, 7}};
    CHECK(occurrences(render(single, RenderFormat::Svg), "class=\"red-line\"") == 0);

    const PointSet big = realize(kTheta108);
    RenderOptions opt;
    opt.path = find_friendly_path(big);
    REQUIRE(opt.path.has_value());
    const std::string svg = render(big, RenderFormat::Svg, opt);
    CHECK(occurrences(svg, "class=\"path\"") == 1);
    CHECK(occurrences(svg, "<polyline") == 1);

    opt.show_quartering = false;
    CHECK(occurrences(render(big, RenderFormat::Svg, opt), "class=\"red-line\"") == 0);
}

TEST_CASE("empty set") {
    CHECK(render(PointSet{}, RenderFormat::Ascii).empty());
    CHECK(occurrences(render(PointSet{}, RenderFormat::Svg), "class=\"point\"") == 0);
}
