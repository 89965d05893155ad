#include "magspec/domain.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "magspec/errors.hpp"
#include "overloaded.hpp"

namespace magspec {

GridDomain::GridDomain(double h, int nx, int ny, Point origin, std::vector<std::uint8_t> mask)
    : h_(h), nx_(nx), ny_(ny), origin_(origin), mask_(std::move(mask)) {
    if (!(h_ > 0.0) || nx_ < 1 || ny_ < 1 ||
        mask_.size() != static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_)) {
        throw DomainError("GridDomain: inconsistent grid description");
    }
    index_.assign(mask_.size(), -1);
    for (int j = 0; j < ny_; ++j) {
        for (int i = 0; i < nx_; ++i) {
            const std::size_t flat = static_cast<std::size_t>(j) * nx_ + i;
            if (!mask_[flat]) continue;
            if (i == 0 || j == 0 || i == nx_ - 1 || j == ny_ - 1) {
                throw DomainError("GridDomain: interior node on the bounding-box frame");
            }
            index_[flat] = static_cast<int>(nodes_.size());
            nodes_.push_back(static_cast<int>(flat));
        }
    }
    if (nodes_.empty()) throw DomainError("GridDomain: no interior nodes (grid too coarse?)");
    measure_ = static_cast<double>(nodes_.size()) * h_ * h_;
}

bool GridDomain::is_interior(int i, int j) const { return index(i, j) >= 0; }

int GridDomain::index(int i, int j) const {
    if (i < 0 || j < 0 || i >= nx_ || j >= ny_) return -1;
    return index_[static_cast<std::size_t>(j) * nx_ + i];
}

std::array<int, 2> GridDomain::grid_coords(int k) const {
    const int flat = nodes_.at(static_cast<std::size_t>(k));
    return {flat % nx_, flat / nx_};
}

Point GridDomain::position(int k) const {
    const auto [i, j] = grid_coords(k);
    return grid_position(i, j);
}

Point GridDomain::grid_position(int i, int j) const {
    return {origin_.x + i * h_, origin_.y + j * h_};
}

namespace {

using detail::overloaded;

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string("build_domain: ") + what + " must be positive");
    }
}

// Samples `inside` on nodes origin + (i h, j h) covering [x0, x1] x [y0, y1].
template <class Inside>
GridDomain sample_box(double x0, double y0, double x1, double y1, double h, Inside inside) {
    // the tiny tolerance keeps nodes that land on the far edge up to rounding
    const int nx = static_cast<int>(std::floor((x1 - x0) / h + 1e-9)) + 1;
    const int ny = static_cast<int>(std::floor((y1 - y0) / h + 1e-9)) + 1;
    if (nx < 3 || ny < 3) throw DomainError("build_domain: no interior node at this spacing");
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(nx) * ny, 0);
    for (int j = 1; j < ny - 1; ++j) {
        for (int i = 1; i < nx - 1; ++i) {
            if (inside(x0 + i * h, y0 + j * h)) mask[static_cast<std::size_t>(j) * nx + i] = 1;
        }
    }
    return GridDomain(h, nx, ny, {x0, y0}, std::move(mask));
}

GridDomain mask_domain(const std::string& path, double h) {
    const auto rows = read_numeric_csv(path);
    if (rows.empty()) throw InputError("mask file " + path + " is empty");
    const int ny = static_cast<int>(rows.size());
    const int nx = static_cast<int>(rows.front().size());
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(nx) * ny, 0);
    for (int j = 0; j < ny; ++j) {
        if (static_cast<int>(rows[j].size()) != nx) {
            throw InputError("mask file " + path + ": ragged row " + std::to_string(j));
        }
        for (int i = 0; i < nx; ++i) {
            const double v = rows[j][i];
            if (v != 0.0 && v != 1.0) {
                throw InputError("mask file " + path + ": entries must be 0 or 1");
            }
            const bool frame = i == 0 || j == 0 || i == nx - 1 || j == ny - 1;
            if (v == 1.0 && frame) {
                throw InputError("mask file " + path + ": outermost frame must be 0");
            }
            mask[static_cast<std::size_t>(j) * nx + i] = v == 1.0;
        }
    }
    return GridDomain(h, nx, ny, {0.0, 0.0}, std::move(mask));
}

}  // namespace

GridDomain build_domain(const Shape& s, double h) {
    require_positive(h, "grid spacing h");
    return std::visit(
        overloaded{
            [h](const shape::Rectangle& r) {
                require_positive(r.a, "rectangle side a");
                require_positive(r.b, "rectangle side b");
                return sample_box(0.0, 0.0, r.a, r.b, h, [&](double x, double y) {
                    return x > 0.0 && x < r.a && y > 0.0 && y < r.b;
                });
            },
            [h](const shape::Disk& d) {
                require_positive(d.radius, "disk radius");
                const double R = d.radius;
                return sample_box(-R, -R, R, R, h,
                                  [R](double x, double y) { return x * x + y * y < R * R; });
            },
            [h](const shape::LShape& l) {
                require_positive(l.a, "L-shape side a");
                require_positive(l.b, "L-shape side b");
                require_positive(l.cut, "L-shape cut");
                if (l.cut >= std::min(l.a, l.b)) {
                    throw DomainError("build_domain: L-shape cut must be smaller than both sides");
                }
                return sample_box(0.0, 0.0, l.a, l.b, h, [&](double x, double y) {
                    const bool box = x > 0.0 && x < l.a && y > 0.0 && y < l.b;
                    const bool notch = x >= l.a - l.cut && y >= l.b - l.cut;
                    return box && !notch;
                });
            },
            [h](const shape::Annulus& a) {
                require_positive(a.r_inner, "annulus inner radius");
                require_positive(a.r_outer, "annulus outer radius");
                if (a.r_inner >= a.r_outer) {
                    throw DomainError("build_domain: annulus needs r_inner < r_outer");
                }
                const double R = a.r_outer;
                return sample_box(-R, -R, R, R, h, [&](double x, double y) {
                    const double r2 = x * x + y * y;
                    return r2 < R * R && r2 > a.r_inner * a.r_inner;
                });
            },
            [h](const shape::MaskFile& m) { return mask_domain(m.path, h); },
        },
        s);
}

Point vector_potential(const GaugeSpec& g, Point p) {
    return std::visit(overloaded{
                          [](const gauge::None&) { return Point{0.0, 0.0}; },
                          [p](const gauge::Uniform& u) {
                              return Point{-0.5 * u.B * p.y, 0.5 * u.B * p.x};
                          },
                          [p](const gauge::LinearShift& s) {
                              const auto& c = s.chi;
                              return Point{-0.5 * s.B * p.y + c[1] + c[3] * p.x + c[4] * p.y,
                                           0.5 * s.B * p.x + c[2] + c[4] * p.x + c[5] * p.y};
                          },
                      },
                      g);
}

double gauge_function(const gauge::LinearShift& s, Point p) {
    const auto& c = s.chi;
    return c[0] + c[1] * p.x + c[2] * p.y + 0.5 * c[3] * p.x * p.x + c[4] * p.x * p.y +
           0.5 * c[5] * p.y * p.y;
}

double link_phase(const GaugeSpec& g, Point from, Point to, double h) {
    const double dx = to.x - from.x;
    const double dy = to.y - from.y;
    const double tol = 1e-9 * h;
    const bool horizontal = std::abs(dy) <= tol && std::abs(std::abs(dx) - h) <= tol;
    const bool vertical = std::abs(dx) <= tol && std::abs(std::abs(dy) - h) <= tol;
    if (!(h > 0.0) || !(horizontal || vertical)) {
        throw DomainError("link_phase: points are not grid neighbours at spacing h");
    }
    const Point mid{0.5 * (from.x + to.x), 0.5 * (from.y + to.y)};
    const Point a = vector_potential(g, mid);
    return a.x * dx + a.y * dy;
}

std::vector<std::vector<double>> read_numeric_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        for (char& ch : line) {
            if (ch == ',' || ch == ';' || ch == '\t' || ch == '\r') ch = ' ';
        }
        std::istringstream tokens(line);
        std::vector<double> row;
        std::string tok;
        while (tokens >> tok) {
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
                throw InputError(path + ":" + std::to_string(line_no) + ": bad number '" + tok +
                                 "'");
            }
            row.push_back(v);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

potential::GridFile load_grid_potential(const std::string& path, const GridDomain& dom) {
    const auto rows = read_numeric_csv(path);
    if (static_cast<int>(rows.size()) != dom.ny()) {
        throw InputError("potential file " + path + ": " + std::to_string(rows.size()) +
                         " rows, domain grid has " + std::to_string(dom.ny()));
    }
    auto table = std::make_shared<potential::GridTable>();
    table->nx = dom.nx();
    table->ny = dom.ny();
    table->h = dom.h();
    table->origin = dom.origin();
    table->values.reserve(static_cast<std::size_t>(dom.nx()) * dom.ny());
    for (int j = 0; j < dom.ny(); ++j) {
        if (static_cast<int>(rows[j].size()) != dom.nx()) {
            throw InputError("potential file " + path + ": row " + std::to_string(j) + " has " +
                             std::to_string(rows[j].size()) + " values, domain grid has " +
                             std::to_string(dom.nx()));
        }
        for (double v : rows[j]) {
            if (v < 0.0) {
                throw InputError("potential file " + path + ": negative value " +
                                 std::to_string(v) + " in row " + std::to_string(j));
            }
            table->values.push_back(v);
        }
    }
    return {path, std::move(table)};
}

PotentialSpec bind_potential(const PotentialSpec& pot, const GridDomain& dom) {
    if (const auto* file = std::get_if<potential::GridFile>(&pot)) {
        return load_grid_potential(file->path, dom);
    }
    return pot;
}

double sample_potential(const PotentialSpec& pot, Point p) {
    return std::visit(
        overloaded{
            [](const potential::Zero&) { return 0.0; },
            [](const potential::Constant& c) {
                if (!(c.c >= 0.0)) throw InputError("constant potential must be non-negative");
                return c.c;
            },
            [p](const potential::RadialQuadratic& q) {
                if (!(q.a >= 0.0)) throw InputError("radial potential needs a >= 0");
                const double dx = p.x - q.center.x;
                const double dy = p.y - q.center.y;
                return q.a * (dx * dx + dy * dy);
            },
            [p](const potential::GridFile& f) {
                if (!f.table) {
                    throw InputError("grid-file potential " + f.path +
                                     " must be bound to a domain before sampling");
                }
                const auto& t = *f.table;
                const double fi = (p.x - t.origin.x) / t.h;
                const double fj = (p.y - t.origin.y) / t.h;
                const long i = std::lround(fi);
                const long j = std::lround(fj);
                if (std::abs(fi - i) > 1e-6 || std::abs(fj - j) > 1e-6 || i < 0 || j < 0 ||
                    i >= t.nx || j >= t.ny) {
                    throw DomainError("sample_potential: point is not a node of the file grid");
                }
                return t.values[static_cast<std::size_t>(j) * t.nx + i];
            },
        },
        pot);
}

}  // namespace magspec
