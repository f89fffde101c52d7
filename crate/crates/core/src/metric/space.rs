use super::{Cost, Point};
use crate::error::{Error, Result};
use num_traits::{Signed, Zero};

/// Description of a space before it is materialized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceSpec {
    /// `n` points, all pairwise distances 1.
    Uniform { n: usize },
    /// Points on the real line at the given coordinates.
    Line { coords: Vec<Cost> },
    /// Full distance matrix.
    Explicit { matrix: Vec<Vec<Cost>> },
    /// `clusters` groups of `per_cluster` points; distance 1 inside a group
    /// and `far` across groups. Point `(i, j)` (both 0-based) has index
    /// `i * per_cluster + j`.
    Cluster { clusters: usize, per_cluster: usize, far: Cost },
    /// Disjoint union of uniform spaces, part `i` having `parts[i].0` points
    /// at mutual distance `parts[i].1`. Points of different parts are
    /// `separation` apart.
    ScaledUnion { parts: Vec<(usize, Cost)>, separation: Cost },
}

/// A finite metric space with a materialized distance table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricSpace {
    spec: SpaceSpec,
    n: usize,
    dist: Vec<Cost>,
}

impl MetricSpace {
    pub fn build(spec: SpaceSpec) -> Result<Self> {
        match &spec {
            SpaceSpec::Uniform { n } => {
                let n = *n;
                Ok(Self::from_fn(spec, n, |p, q| if p == q { 0.into() } else { 1.into() }))
            }
            SpaceSpec::Line { coords } => {
                let coords = coords.clone();
                Ok(Self::from_fn(spec, coords.len(), |p, q| (coords[p] - coords[q]).abs()))
            }
            SpaceSpec::Explicit { matrix } => {
                let n = matrix.len();
                if let Some(row) = matrix.iter().position(|r| r.len() != n) {
                    return Err(Error::InvalidMetric(format!("row {} has {} entries, expected {n}", row + 1, matrix[row].len())));
                }
                for p in 0..n {
                    if !matrix[p][p].is_zero() {
                        return Err(Error::InvalidMetric(format!("d({0},{0}) must be 0", p + 1)));
                    }
                    for q in 0..n {
                        if matrix[p][q].is_negative() {
                            return Err(Error::InvalidMetric(format!("d({},{}) is negative", p + 1, q + 1)));
                        }
                        if matrix[p][q] != matrix[q][p] {
                            return Err(Error::InvalidMetric(format!("d({},{}) != d({},{})", p + 1, q + 1, q + 1, p + 1)));
                        }
                    }
                }
                for p in 0..n {
                    for q in 0..n {
                        for r in 0..n {
                            if matrix[p][r] > matrix[p][q] + matrix[q][r] {
                                return Err(Error::InvalidMetric(format!(
                                    "triangle inequality fails for {},{},{}",
                                    p + 1,
                                    q + 1,
                                    r + 1
                                )));
                            }
                        }
                    }
                }
                let m = matrix.clone();
                Ok(Self::from_fn(spec, n, |p, q| m[p][q]))
            }
            SpaceSpec::Cluster { clusters, per_cluster, far } => {
                let (c, size, far) = (*clusters, *per_cluster, *far);
                if c == 0 || size == 0 {
                    return Err(Error::InvalidMetric("cluster space needs at least one cluster and one point per cluster".into()));
                }
                if !far.is_positive() {
                    return Err(Error::InvalidMetric("cluster distance D must be positive".into()));
                }
                if size > 1 && c > 1 && far * Cost::from(2) < Cost::from(1) {
                    return Err(Error::InvalidMetric("cluster distance D below 1/2 breaks the triangle inequality".into()));
                }
                Ok(Self::from_fn(spec, c * size, |p, q| {
                    if p == q {
                        0.into()
                    } else if p / size == q / size {
                        1.into()
                    } else {
                        far
                    }
                }))
            }
            SpaceSpec::ScaledUnion { parts, separation } => {
                if parts.is_empty() {
                    return Err(Error::InvalidMetric("scaled union needs at least one part".into()));
                }
                if parts.iter().any(|(size, beta)| *size == 0 || !beta.is_positive()) {
                    return Err(Error::InvalidMetric("scaled union parts need points and a positive scale".into()));
                }
                let widest = parts.iter().map(|p| p.1).max().unwrap_or_default();
                if parts.len() > 1 && *separation < widest {
                    return Err(Error::InvalidMetric("separation must be at least the largest scale".into()));
                }
                let mut owner = Vec::new();
                for (i, (size, _)) in parts.iter().enumerate() {
                    owner.extend(std::iter::repeat_n(i, *size));
                }
                let parts = parts.clone();
                let sep = *separation;
                let n = owner.len();
                Ok(Self::from_fn(spec, n, |p, q| {
                    if p == q {
                        0.into()
                    } else if owner[p] == owner[q] {
                        parts[owner[p]].1
                    } else {
                        sep
                    }
                }))
            }
        }
    }

    fn from_fn(spec: SpaceSpec, n: usize, f: impl Fn(Point, Point) -> Cost) -> Self {
        let mut dist = Vec::with_capacity(n * n);
        for p in 0..n {
            for q in 0..n {
                dist.push(f(p, q));
            }
        }
        Self { spec, n, dist }
    }

    pub fn uniform(n: usize) -> Self {
        Self::build(SpaceSpec::Uniform { n }).expect("uniform spaces are always valid")
    }

    pub fn line(coords: Vec<Cost>) -> Self {
        Self::build(SpaceSpec::Line { coords }).expect("line spaces are always valid")
    }

    pub fn explicit(matrix: Vec<Vec<Cost>>) -> Result<Self> {
        Self::build(SpaceSpec::Explicit { matrix })
    }

    pub fn cluster(clusters: usize, per_cluster: usize, far: Cost) -> Result<Self> {
        Self::build(SpaceSpec::Cluster { clusters, per_cluster, far })
    }

    pub fn scaled_union(parts: Vec<(usize, Cost)>, separation: Cost) -> Result<Self> {
        Self::build(SpaceSpec::ScaledUnion { parts, separation })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn dist(&self, p: Point, q: Point) -> Cost {
        self.dist[p * self.n + q]
    }

    pub fn spec(&self) -> &SpaceSpec {
        &self.spec
    }

    pub fn kind(&self) -> &'static str {
        match self.spec {
            SpaceSpec::Uniform { .. } => "uniform",
            SpaceSpec::Line { .. } => "line",
            SpaceSpec::Explicit { .. } => "explicit",
            SpaceSpec::Cluster { .. } => "cluster",
            SpaceSpec::ScaledUnion { .. } => "scaled_union",
        }
    }

    /// Index of cluster point `(cluster, slot)`, both 0-based.
    pub fn cluster_point(&self, cluster: usize, slot: usize) -> Option<Point> {
        match self.spec {
            SpaceSpec::Cluster { clusters, per_cluster, .. } if cluster < clusters && slot < per_cluster => {
                Some(cluster * per_cluster + slot)
            }
            _ => None,
        }
    }

    /// Inverse of [`MetricSpace::cluster_point`].
    pub fn cluster_of(&self, p: Point) -> Option<(usize, usize)> {
        match self.spec {
            SpaceSpec::Cluster { per_cluster, .. } if p < self.n => Some((p / per_cluster, p % per_cluster)),
            _ => None,
        }
    }

    /// Largest distance between two points.
    pub fn diameter(&self) -> Cost {
        (0..self.len())
            .flat_map(|p| (p + 1..self.len()).map(move |q| (p, q)))
            .map(|(p, q)| self.dist(p, q))
            .max()
            .unwrap_or_else(Cost::zero)
    }

    /// Sum of `d(p, q)` over unordered pairs.
    pub fn total_pairwise(&self) -> Cost {
        let mut total = Cost::zero();
        for p in 0..self.n {
            for q in p + 1..self.n {
                total += self.dist(p, q);
            }
        }
        total
    }

    /// Full `n x n` table, row-major.
    pub fn matrix(&self) -> Vec<Vec<Cost>> {
        (0..self.n).map(|p| self.dist[p * self.n..(p + 1) * self.n].to_vec()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> Cost {
        Cost::from(v)
    }

    #[test]
    fn uniform() {
        let s = MetricSpace::uniform(4);
        assert_eq!(s.dist(0, 2), c(1));
        assert_eq!(s.dist(1, 1), c(0));
    }

    #[test]
    fn line() {
        let s = MetricSpace::line(vec![c(0), c(1), c(5)]);
        assert_eq!(s.dist(0, 2), c(5));
        assert_eq!(s.dist(2, 1), c(4));
    }

    #[test]
    fn cluster_layout() {
        let s = MetricSpace::cluster(2, 3, c(10)).unwrap();
        let p11 = s.cluster_point(0, 0).unwrap();
        let p12 = s.cluster_point(0, 1).unwrap();
        let p21 = s.cluster_point(1, 0).unwrap();
        assert_eq!((p11, p12, p21), (0, 1, 3));
        assert_eq!(s.dist(p11, p12), c(1));
        assert_eq!(s.dist(p11, p21), c(10));
        assert_eq!(s.cluster_of(4), Some((1, 1)));
    }

    #[test]
    fn cluster_rejects_nonpositive_far() {
        assert!(MetricSpace::cluster(2, 3, c(0)).is_err());
        assert!(MetricSpace::cluster(2, 3, c(-1)).is_err());
    }

    #[test]
    fn explicit_validation() {
        let ok = vec![vec![c(0), c(1), c(2)], vec![c(1), c(0), c(1)], vec![c(2), c(1), c(0)]];
        assert!(MetricSpace::explicit(ok).is_ok());
        let asym = vec![vec![c(0), c(1)], vec![c(2), c(0)]];
        assert!(MetricSpace::explicit(asym).is_err());
        let diag = vec![vec![c(1), c(1)], vec![c(1), c(0)]];
        assert!(MetricSpace::explicit(diag).is_err());
        let tri = vec![vec![c(0), c(1), c(5)], vec![c(1), c(0), c(1)], vec![c(5), c(1), c(0)]];
        assert!(matches!(MetricSpace::explicit(tri), Err(Error::InvalidMetric(_))));
        let ragged = vec![vec![c(0), c(1)], vec![c(1)]];
        assert!(MetricSpace::explicit(ragged).is_err());
    }

    #[test]
    fn scaled_union() {
        let s = MetricSpace::scaled_union(vec![(2, c(1)), (3, c(4))], c(100)).unwrap();
        assert_eq!(s.len(), 5);
        assert_eq!(s.dist(0, 1), c(1));
        assert_eq!(s.dist(2, 4), c(4));
        assert_eq!(s.dist(1, 2), c(100));
        assert!(MetricSpace::scaled_union(vec![(2, c(1)), (2, c(9))], c(5)).is_err());
    }
}
