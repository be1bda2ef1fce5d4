use serde::{Deserialize, Serialize};

use super::roots::RootCloud;
use super::FAILURE_MARGIN;

type Pt = (f64, f64);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Location {
    Vertex,
    Edge,
    Interior,
    /// Inside the hull, but closer to the boundary than the failure margin.
    Indeterminate,
}

impl Location {
    pub fn on_boundary(self) -> bool {
        matches!(self, Location::Vertex | Location::Edge)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HullShape {
    Point,
    Segment,
    Polygon,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassifiedRoot {
    pub re: f64,
    pub im: f64,
    pub multiplicity: u32,
    pub location: Location,
    /// Distance to the hull boundary (zero for points on it).
    pub boundary_distance: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HullClassification {
    pub shape: HullShape,
    /// Counter-clockwise for polygons.
    pub vertices: Vec<Pt>,
    pub roots: Vec<ClassifiedRoot>,
    pub tolerance: f64,
}

fn cross(o: Pt, a: Pt, b: Pt) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn dist(a: Pt, b: Pt) -> f64 {
    (a.0 - b.0).hypot(a.1 - b.1)
}

fn segment_distance(p: Pt, a: Pt, b: Pt) -> f64 {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len2 = dx * dx + dy * dy;
    if len2 == 0.0 {
        return dist(p, a);
    }
    let t = (((p.0 - a.0) * dx + (p.1 - a.1) * dy) / len2).clamp(0.0, 1.0);
    dist(p, (a.0 + t * dx, a.1 + t * dy))
}

/// Andrew's monotone chain. A middle point is dropped when it lies within
/// `tol` of the chord, so near-collinear clouds collapse to a segment.
fn monotone_chain(points: &[Pt], tol: f64) -> Vec<Pt> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    pts.dedup_by(|a, b| dist(*a, *b) <= tol);
    if pts.len() <= 1 {
        return pts;
    }
    let half = |iter: &mut dyn Iterator<Item = Pt>| {
        let mut chain: Vec<Pt> = Vec::new();
        for p in iter {
            while chain.len() >= 2 {
                let (o, a) = (chain[chain.len() - 2], chain[chain.len() - 1]);
                if cross(o, a, p) <= tol * dist(o, p) {
                    chain.pop();
                } else {
                    break;
                }
            }
            chain.push(p);
        }
        chain.pop();
        chain
    };
    let mut hull = half(&mut pts.iter().copied());
    hull.extend(half(&mut pts.iter().rev().copied()));
    hull
}

impl HullClassification {
    fn boundary_distance(&self, p: Pt) -> f64 {
        match self.shape {
            HullShape::Point => dist(p, self.vertices[0]),
            HullShape::Segment => segment_distance(p, self.vertices[0], self.vertices[1]),
            HullShape::Polygon => self
                .edges()
                .map(|(a, b)| segment_distance(p, a, b))
                .fold(f64::INFINITY, f64::min),
        }
    }

    fn edges(&self) -> impl Iterator<Item = (Pt, Pt)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    fn inside_polygon(&self, p: Pt, tol: f64) -> bool {
        self.edges().all(|(a, b)| cross(a, b, p) >= -tol * dist(a, b))
    }

    /// Whether `(re, im)` lies in the hull, up to `tol`.
    pub fn contains(&self, re: f64, im: f64, tol: f64) -> bool {
        let p = (re, im);
        match self.shape {
            HullShape::Polygon => self.inside_polygon(p, tol),
            _ => self.boundary_distance(p) <= tol,
        }
    }

    /// Strict left turns at every vertex.
    pub fn is_convex(&self) -> bool {
        if self.shape != HullShape::Polygon {
            return true;
        }
        let n = self.vertices.len();
        (0..n).all(|i| cross(self.vertices[i], self.vertices[(i + 1) % n], self.vertices[(i + 2) % n]) > 0.0)
    }

    pub fn count(&self, location: Location) -> usize {
        self.roots.iter().filter(|r| r.location == location).count()
    }

    /// Location relative to the affine hull: on a segment hull, points
    /// strictly between the endpoints are interior.
    pub fn relative_location(&self, root: &ClassifiedRoot) -> Location {
        match (self.shape, root.location) {
            (HullShape::Segment, Location::Edge) => Location::Interior,
            (_, loc) => loc,
        }
    }

    pub fn count_relative(&self, location: Location) -> usize {
        self.roots
            .iter()
            .filter(|r| self.relative_location(r) == location)
            .count()
    }
}

/// Builds the hull of the distinct roots and places each root on a vertex,
/// an edge, or in the interior. Interior roots closer to the boundary than
/// `FAILURE_MARGIN * tol` are reported as indeterminate.
pub fn classify_roots(cloud: &RootCloud, tol: f64) -> HullClassification {
    let points: Vec<Pt> = cloud.roots.iter().map(|r| (r.re, r.im)).collect();
    let vertices = monotone_chain(&points, tol);
    let shape = match vertices.len() {
        0 | 1 => HullShape::Point,
        2 => HullShape::Segment,
        _ => HullShape::Polygon,
    };
    let mut hull = HullClassification {
        shape,
        vertices,
        roots: Vec::new(),
        tolerance: tol,
    };
    hull.roots = cloud
        .roots
        .iter()
        .map(|r| {
            let p = (r.re, r.im);
            let d = hull.boundary_distance(p);
            let on_vertex = hull.vertices.iter().any(|&v| dist(v, p) <= tol);
            let location = if on_vertex {
                Location::Vertex
            } else if d <= tol || shape != HullShape::Polygon || !hull.inside_polygon(p, 0.0) {
                Location::Edge
            } else if d > FAILURE_MARGIN * tol {
                Location::Interior
            } else {
                Location::Indeterminate
            };
            let boundary_distance = if location.on_boundary() { 0.0 } else { d };
            ClassifiedRoot {
                re: r.re,
                im: r.im,
                multiplicity: r.multiplicity,
                location,
                boundary_distance,
            }
        })
        .collect();
    hull
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hull::NumericRoot;

    fn cloud(points: &[(f64, f64)]) -> RootCloud {
        RootCloud {
            roots: points
                .iter()
                .map(|&(re, im)| NumericRoot {
                    re,
                    im,
                    multiplicity: 1,
                    residual: 0.0,
                })
                .collect(),
            residual_bound: 0.0,
        }
    }

    #[test]
    fn triangle() {
        let h = classify_roots(&cloud(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]), 1e-8);
        assert_eq!(h.shape, HullShape::Polygon);
        assert_eq!(h.vertices.len(), 3);
        assert_eq!(h.count(Location::Vertex), 3);
        assert!(h.is_convex());
    }

    #[test]
    fn collinear_is_segment() {
        let h = classify_roots(&cloud(&[(-1.0, 0.0), (0.0, 1e-17), (1.0, 0.0)]), 1e-8);
        assert_eq!(h.shape, HullShape::Segment);
        assert_eq!(h.count(Location::Vertex), 2);
        assert_eq!(h.count(Location::Edge), 1);
        assert_eq!(h.count_relative(Location::Interior), 1);
    }

    #[test]
    fn square_with_center() {
        let h = classify_roots(
            &cloud(&[(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0), (0.0, 0.0)]),
            1e-8,
        );
        assert_eq!(h.vertices.len(), 4);
        assert_eq!(h.count(Location::Vertex), 4);
        assert_eq!(h.count(Location::Interior), 1);
        assert!(h.contains(0.5, 0.5, 1e-12));
        assert!(!h.contains(0.6, 0.6, 1e-12));
    }

    #[test]
    fn near_boundary_is_indeterminate() {
        let h = classify_roots(&cloud(&[(0.0, 0.0), (2.0, 0.0), (1.0, 2.0), (1.0, 1e-7)]), 1e-8);
        assert_eq!(
            h.roots.iter().find(|r| r.im == 1e-7).unwrap().location,
            Location::Indeterminate
        );
        let h = classify_roots(&cloud(&[(0.0, 0.0), (2.0, 0.0), (1.0, 2.0), (1.0, 1e-9)]), 1e-8);
        assert_eq!(h.roots.iter().find(|r| r.im == 1e-9).unwrap().location, Location::Edge);
    }

    #[test]
    fn single_point() {
        let h = classify_roots(&cloud(&[(3.0, 0.0)]), 1e-8);
        assert_eq!(h.shape, HullShape::Point);
        assert_eq!(h.roots[0].location, Location::Vertex);
    }
}
