//! Sensors in the unit disk, polygon placements and chord geometry.

use std::f64::consts::{PI, TAU};

use thiserror::Error;

/// Relative angular tolerance (radians at unit scale).
pub const ANGLE_EPS: f64 = 1e-9;
/// Absolute tolerance for distance comparisons at unit scale.
pub const DIST_EPS: f64 = 1e-12;
/// Slack allowed for points that sit just outside the disk after normalization.
pub const DISK_EPS: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("an instance needs at least one sensor")]
    Empty,
    #[error("sensor {index} lies outside the disk (r = {r})")]
    OutsideDisk { index: usize, r: f64 },
    #[error("sensor {index} has a non-finite coordinate")]
    NonFinite { index: usize },
    #[error("radius must be positive and finite, got {0}")]
    BadRadius(f64),
}

/// A point in the closed unit disk, kept in both Cartesian and polar form.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sensor {
    pub x: f64,
    pub y: f64,
    /// Polar angle in `[0, 2π)`; zero for the center.
    pub beta: f64,
    pub r: f64,
}

impl Sensor {
    pub fn from_xy(x: f64, y: f64) -> Self {
        let r = x.hypot(y);
        let beta = if r > 0.0 { normalize_angle(y.atan2(x)) } else { 0.0 };
        Sensor { x, y, beta, r }
    }

    pub fn from_polar(r: f64, beta: f64) -> Self {
        let beta = normalize_angle(beta);
        Sensor { x: r * beta.cos(), y: r * beta.sin(), beta, r }
    }

    /// Sensor on the unit circle at `theta`.
    pub fn on_circle(theta: f64) -> Self {
        Self::from_polar(1.0, theta)
    }

    /// Radial projection onto the boundary circle (angle 0 for the center).
    pub fn projected(&self) -> Self {
        Self::on_circle(self.beta)
    }

    /// Distance to the boundary point at angle `theta`.
    pub fn distance_to_angle(&self, theta: f64) -> f64 {
        chord(self.r, theta - self.beta)
    }

    pub fn distance_to_point(&self, x: f64, y: f64) -> f64 {
        (self.x - x).hypot(self.y - y)
    }
}

/// Sensors normalized to the unit disk centered at the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    sensors: Vec<Sensor>,
}

impl Instance {
    /// Radii in `(1, 1 + DISK_EPS]` are snapped onto the circle.
    pub fn new(sensors: Vec<Sensor>) -> Result<Self, GeomError> {
        if sensors.is_empty() {
            return Err(GeomError::Empty);
        }
        let mut out = Vec::with_capacity(sensors.len());
        for (index, s) in sensors.into_iter().enumerate() {
            if !(s.x.is_finite() && s.y.is_finite() && s.r.is_finite() && s.beta.is_finite()) {
                return Err(GeomError::NonFinite { index });
            }
            if s.r > 1.0 + DISK_EPS {
                return Err(GeomError::OutsideDisk { index, r: s.r });
            }
            out.push(if s.r > 1.0 { Sensor::on_circle(s.beta) } else { s });
        }
        Ok(Instance { sensors: out })
    }

    pub fn from_points(points: &[(f64, f64)]) -> Result<Self, GeomError> {
        Self::new(points.iter().map(|&(x, y)| Sensor::from_xy(x, y)).collect())
    }

    /// Translates and scales points from the disk `(center, radius)` to the unit disk.
    pub fn normalized(points: &[(f64, f64)], center: (f64, f64), radius: f64) -> Result<Self, GeomError> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(GeomError::BadRadius(radius));
        }
        let pts: Vec<(f64, f64)> =
            points.iter().map(|&(x, y)| ((x - center.0) / radius, (y - center.1) / radius)).collect();
        Self::from_points(&pts)
    }

    pub fn len(&self) -> usize {
        self.sensors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sensors.is_empty()
    }

    pub fn sensors(&self) -> &[Sensor] {
        &self.sensors
    }

    pub fn sensor(&self, i: usize) -> &Sensor {
        &self.sensors[i]
    }

    /// Angular distance between consecutive polygon vertices.
    pub fn pitch(&self) -> f64 {
        pitch(self.len())
    }

    /// Same instance with every sensor moved radially onto the circle.
    pub fn projected(&self) -> Instance {
        Instance { sensors: self.sensors.iter().map(Sensor::projected).collect() }
    }

    pub fn all_on_boundary(&self, tol: f64) -> bool {
        self.sensors.iter().all(|s| s.r >= 1.0 - tol)
    }
}

pub fn pitch(n: usize) -> f64 {
    TAU / n as f64
}

/// A rotation of the regular n-gon inscribed in the unit circle.
///
/// Vertex `j` sits at angle `(offset - j * pitch) mod 2π`, so indices run clockwise.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Placement {
    n: usize,
    offset: f64,
}

impl Placement {
    /// Reduces `offset` into `[0, 2π/n)`. Vertex labels are shifted accordingly, so
    /// use [`Placement::reduce`] when the labelling of an arbitrary offset matters.
    pub fn new(n: usize, offset: f64) -> Self {
        Self::reduce(n, offset).0
    }

    /// Canonical placement for `offset` together with the label shift `q`: vertex `j`
    /// of the raw offset is vertex `(j + q) mod n` of the canonical one.
    pub fn reduce(n: usize, offset: f64) -> (Self, usize) {
        assert!(n >= 1, "placement needs at least one vertex");
        let h = pitch(n);
        let mut t = offset.rem_euclid(h);
        if t >= h || h - t <= h * 1e-15 {
            t = 0.0;
        }
        let q = ((t - offset) / h).round().rem_euclid(n as f64) as usize % n;
        (Placement { n, offset: t }, q)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn vertex_angle(&self, j: usize) -> f64 {
        normalize_angle(self.offset - j as f64 * pitch(self.n))
    }

    pub fn vertex_xy(&self, j: usize) -> (f64, f64) {
        let a = self.vertex_angle(j);
        (a.cos(), a.sin())
    }
}

/// Closest and farthest boundary points of a sensor.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundaryExtremes {
    pub nearest_angle: f64,
    pub nearest_dist: f64,
    pub farthest_angle: f64,
    pub farthest_dist: f64,
}

pub fn boundary_extremes(s: &Sensor) -> BoundaryExtremes {
    BoundaryExtremes {
        nearest_angle: s.beta,
        nearest_dist: 1.0 - s.r,
        farthest_angle: normalize_angle(s.beta + PI),
        farthest_dist: 1.0 + s.r,
    }
}

/// Distance from a point at radius `r` to a boundary point separated by angle `delta`.
///
/// Written as `(1-r)² + 4r sin²(δ/2)` so values near zero keep full precision.
pub fn chord(r: f64, delta: f64) -> f64 {
    let s = (0.5 * delta).sin();
    ((1.0 - r) * (1.0 - r) + 4.0 * r * s * s).sqrt()
}

/// Distance between two points on the unit circle.
pub fn circle_chord(a: f64, b: f64) -> f64 {
    2.0 * (0.5 * (a - b)).sin().abs()
}

pub fn sensor_vertex_distance(s: &Sensor, p: &Placement, j: usize) -> f64 {
    s.distance_to_angle(p.vertex_angle(j))
}

/// Maps any angle into `[0, 2π)`.
pub fn normalize_angle(a: f64) -> f64 {
    let t = a.rem_euclid(TAU);
    if t >= TAU {
        0.0
    } else {
        t
    }
}

/// Signed difference `a - b` reduced into `(-π, π]`.
pub fn angle_diff(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    if d > PI {
        d - TAU
    } else {
        d
    }
}

/// Boundary angles within distance `lambda` of a sensor.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CoverageArc {
    Empty,
    Full,
    /// Closed arc `[center - half_width, center + half_width]`.
    Arc { center: f64, half_width: f64 },
}

impl CoverageArc {
    pub fn contains(&self, theta: f64, tol: f64) -> bool {
        match *self {
            CoverageArc::Empty => false,
            CoverageArc::Full => true,
            CoverageArc::Arc { center, half_width } => angle_diff(theta, center).abs() <= half_width + tol,
        }
    }

    /// Set inclusion `self ⊆ other`.
    pub fn is_subset_of(&self, other: &CoverageArc) -> bool {
        match (*self, *other) {
            (CoverageArc::Empty, _) | (_, CoverageArc::Full) => true,
            (_, CoverageArc::Empty) | (CoverageArc::Full, _) => false,
            (CoverageArc::Arc { center: c1, half_width: w1 }, CoverageArc::Arc { center: c2, half_width: w2 }) => {
                angle_diff(c1, c2).abs() + w1 <= w2 + ANGLE_EPS
            }
        }
    }
}

pub fn coverage_arc(s: &Sensor, lambda: f64) -> CoverageArc {
    if s.r <= 0.0 {
        return if lambda >= 1.0 { CoverageArc::Full } else { CoverageArc::Empty };
    }
    if lambda < 1.0 - s.r - DIST_EPS {
        return CoverageArc::Empty;
    }
    if lambda >= 1.0 + s.r {
        return CoverageArc::Full;
    }
    // sin²(γ/2) = (λ² - (1-r)²) / 4r avoids the cancellation in the arccos form.
    let q = ((lambda * lambda - (1.0 - s.r) * (1.0 - s.r)) / (4.0 * s.r)).clamp(0.0, 1.0);
    let half_width = 2.0 * q.sqrt().asin();
    CoverageArc::Arc { center: s.beta, half_width }
}
