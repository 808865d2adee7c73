#pragma once

#include <optional>
#include <string>

#include "insep/lattice.hpp"
#include "insep/representation.hpp"

namespace insep {

enum class RenderFormat { Svg, Ascii };

struct RenderOptions {
    std::optional<MonotonePath> path;  // overlay, e.g. a friendly witness
    /// Draw the red lines y = M + 1/2, x = T + 1/2 when the set quarters.
    bool show_quartering = true;
};

/// Deterministic drawing of a point set. ASCII rows run top to bottom over
/// the bounding box: '#' point, '.' empty site, '*' path vertex, '@' point
/// on the path.
std::string render(const PointSet& set, RenderFormat format, const RenderOptions& options = {});
std::string render(const Theta& theta, RenderFormat format, const RenderOptions& options = {});

}  // namespace insep
