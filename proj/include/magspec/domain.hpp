#pragma once

// Masked uniform grids for planar domains, vector potentials with their
// discrete link phases, and non-negative electric potentials.

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace magspec {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

namespace shape {
/// [0, a] x [0, b]
struct Rectangle {
    double a = 1.0;
    double b = 1.0;
};
/// Disk of radius R centered at the origin.
struct Disk {
    double radius = 1.0;
};
/// [0, a] x [0, b] with the square [a - cut, a] x [b - cut, b] removed.
struct LShape {
    double a = 1.0;
    double b = 1.0;
    double cut = 0.5;
};
/// r_inner < |x| < r_outer, centered at the origin.
struct Annulus {
    double r_inner = 0.5;
    double r_outer = 1.0;
};
/// 0/1 CSV, row j holds the nodes (i h, j h); the outermost frame must be 0.
struct MaskFile {
    std::string path;
};
}  // namespace shape

using Shape = std::variant<shape::Rectangle, shape::Disk, shape::LShape, shape::Annulus,
                           shape::MaskFile>;

/// Uniform grid over the bounding box of a shape. A node is interior when it
/// lies strictly inside the shape; exterior nodes carry the Dirichlet zero.
class GridDomain {
public:
    GridDomain(double h, int nx, int ny, Point origin, std::vector<std::uint8_t> mask);

    double h() const { return h_; }
    int nx() const { return nx_; }
    int ny() const { return ny_; }
    Point origin() const { return origin_; }

    /// Number of interior nodes N.
    int size() const { return static_cast<int>(nodes_.size()); }
    /// N h^2.
    double measure() const { return measure_; }

    bool is_interior(int i, int j) const;
    /// Interior index of grid node (i, j), or -1 for exterior / out-of-box nodes.
    int index(int i, int j) const;
    /// Grid coordinates (i, j) of interior node k.
    std::array<int, 2> grid_coords(int k) const;
    Point position(int k) const;
    Point grid_position(int i, int j) const;
    const std::vector<std::uint8_t>& mask() const { return mask_; }

private:
    double h_;
    int nx_;
    int ny_;
    Point origin_;
    std::vector<std::uint8_t> mask_;
    std::vector<int> index_;
    std::vector<int> nodes_;
    double measure_;
};

/// Throws DomainError for non-positive parameters or an empty interior, and
/// InputError for unreadable or malformed mask files.
GridDomain build_domain(const Shape& shape, double h);

namespace gauge {
struct None {};
/// Symmetric gauge A = (B/2)(-y, x).
struct Uniform {
    double B = 0.0;
};
/// Uniform field plus the gradient of the quadratic
/// chi = c0 + c1 x + c2 y + c3 x^2/2 + c4 x y + c5 y^2/2.
struct LinearShift {
    double B = 0.0;
    std::array<double, 6> chi{};
};
}  // namespace gauge

using GaugeSpec = std::variant<gauge::None, gauge::Uniform, gauge::LinearShift>;

Point vector_potential(const GaugeSpec& gauge, Point p);

/// The quadratic gauge function of a LinearShift at p.
double gauge_function(const gauge::LinearShift& shift, Point p);

/// Midpoint-rule phase A(mid) . (to - from) along a grid edge of length h.
/// Throws DomainError unless from and to are axis neighbours at distance h.
double link_phase(const GaugeSpec& gauge, Point from, Point to, double h);

namespace potential {
struct Zero {};
struct Constant {
    double c = 0.0;
};
/// a |x - center|^2
struct RadialQuadratic {
    double a = 0.0;
    Point center{};
};
/// Node values read from CSV; rows are grid lines y = y0 + j h.
struct GridTable {
    int nx = 0;
    int ny = 0;
    double h = 0.0;
    Point origin{};
    std::vector<double> values;
};
struct GridFile {
    std::string path;
    std::shared_ptr<const GridTable> table;  // null until bound to a domain
};
}  // namespace potential

using PotentialSpec = std::variant<potential::Zero, potential::Constant,
                                   potential::RadialQuadratic, potential::GridFile>;

/// Reads a grid-file potential and checks its layout against the domain.
/// Throws InputError on unreadable files, negative values, or a shape mismatch.
potential::GridFile load_grid_potential(const std::string& path, const GridDomain& dom);

/// Returns the spec unchanged unless it is an unbound grid file, which is loaded.
PotentialSpec bind_potential(const PotentialSpec& pot, const GridDomain& dom);

/// Value of the potential at p. Grid files must be bound and p must coincide
/// with a node of the file grid.
double sample_potential(const PotentialSpec& pot, Point p);

/// Parses a CSV of numbers (comma or whitespace separated), one row per line.
std::vector<std::vector<double>> read_numeric_csv(const std::string& path);

}  // namespace magspec
