#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "inversive/descartes.hpp"

namespace inversive {

/// Stopping rules for gasket growth; at least one must be set.
struct GenerationLimits {
    std::optional<int> max_depth;          ///< reflection generations beyond the seed
    std::optional<double> max_curvature;   ///< new disks above this curvature are not emitted
    std::optional<std::size_t> max_count;  ///< total disks, seed included
};

struct GasketDisk {
    CircleVector vector;
    int depth = 0;
    std::optional<std::size_t> parent;  ///< quadruple reflected to create this disk; empty for the seed
    std::size_t quadruple = 0;          ///< quadruple this disk was created in
};

struct GasketQuadruple {
    Quadruple quadruple;
    int depth = 0;
    std::optional<std::size_t> parent;
    std::optional<std::size_t> created_index;  ///< slot that was reflected to produce it
};

struct Gasket {
    Quadruple seed;
    GenerationLimits limits;
    std::vector<GasketDisk> disks;            ///< breadth-first order; the first four are the seed
    std::vector<GasketQuadruple> quadruples;  ///< quadruples[0] is the seed
};

using DedupKey = std::array<std::int64_t, 4>;

/// Components quantized to multiples of 1e-7 * max(1, |beta|).
DedupKey dedup_key(const CircleVector &v);

/// Breadth-first closure of the seed under Vieta reflection.
///
/// Each quadruple is reflected at every slot except the one that created
/// it, in slot order. A new disk above max_curvature prunes its whole
/// quadruple; a disk whose key was already seen is dropped with its
/// quadruple. Seed disks are always emitted.
///
/// Throws InvalidSeed when the seed is not a Descartes configuration and
/// InvalidLimits when no limit is set or a limit is out of range.
Gasket generate(const Quadruple &seed, const GenerationLimits &limits);

struct SpectrumLine {
    double curvature = 0.0;
    std::size_t multiplicity = 0;

    friend bool operator==(const SpectrumLine &, const SpectrumLine &) = default;
};

/// Curvatures grouped at the dedup tolerance, ascending. The reported
/// curvature of a group is its mean.
std::vector<SpectrumLine> curvature_spectrum(const Gasket &g);

/// Deterministic geometry for a curvature-only seed (3 or 4 values).
///
/// With three values the larger fourth root is appended. The two largest
/// curvatures are placed on the x-axis touching at the origin, the third
/// above them, and the fourth is the solve_fourth_disk root closest to the
/// requested curvature. Output slots follow the input order.
/// Throws ComplexRoots or InvalidSeed.
Quadruple canonical_quadruple(std::span<const double> curvatures);

struct RenderStyle {
    bool fill_by_depth = false;
    std::string fill = "none";
    std::string stroke = "black";
    double stroke_fraction = 0.005;  ///< stroke width relative to the larger viewport side
    double pixel_width = 800.0;
};

/// SVG 1.1 document: one <circle> per circle disk (enclosing disks
/// unfilled), one viewport-spanning <line> per halfplane. Throws EmptyGasket.
std::string render_svg(const Gasket &g, const RenderStyle &style = {});

}  // namespace inversive
