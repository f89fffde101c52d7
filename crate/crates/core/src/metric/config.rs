use super::Point;
use crate::error::{Error, Result};
use std::fmt;

/// Multiset of server positions, stored sorted so equal multisets compare
/// equal. Derived ordering is the canonical (lexicographic) order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration(Vec<Point>);

impl Configuration {
    pub fn new(mut points: Vec<Point>) -> Self {
        points.sort_unstable();
        Self(points)
    }

    pub fn points(&self) -> &[Point] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    /// Whether some server stands on a point of `request`.
    pub fn serves(&self, request: &Request) -> bool {
        request.points().iter().any(|&p| self.contains(p))
    }

    /// The configuration with one server moved from `from` to `to`.
    /// `from` must be occupied.
    pub fn replace(&self, from: Point, to: Point) -> Self {
        let mut pts = self.0.clone();
        let at = pts.binary_search(&from).expect("replaced point must be occupied");
        pts[at] = to;
        Self::new(pts)
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&p| p >= n) {
            Some(p) => Err(Error::InvalidConfiguration(format!("point {} outside a space of {n} points", p + 1))),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_points(f, &self.0)
    }
}

/// A set of distinct points, one of which must end up covered by a server.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Request(Vec<Point>);

impl Request {
    pub fn new(mut points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidRequest("request is empty".into()));
        }
        points.sort_unstable();
        if let Some(w) = points.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidRequest(format!("point {} repeated", w[0] + 1)));
        }
        Ok(Self(points))
    }

    pub fn points(&self) -> &[Point] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&p| p >= n) {
            Some(p) => Err(Error::InvalidRequest(format!("point {} outside a space of {n} points", p + 1))),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Request {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_points(f, &self.0)
    }
}

fn write_points(f: &mut fmt::Formatter<'_>, pts: &[Point]) -> fmt::Result {
    write!(f, "{{")?;
    for (i, p) in pts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{}", p + 1)?;
    }
    write!(f, "}}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order() {
        assert_eq!(Configuration::new(vec![3, 1, 1]), Configuration::new(vec![1, 3, 1]));
        assert_eq!(Configuration::new(vec![2, 0]).replace(2, 5).points(), &[0, 5]);
        assert_eq!(Configuration::new(vec![0, 4]).to_string(), "{1,5}");
    }

    #[test]
    fn request_rules() {
        assert!(Request::new(vec![]).is_err());
        assert!(Request::new(vec![1, 1]).is_err());
        let r = Request::new(vec![3, 1]).unwrap();
        assert_eq!(r.points(), &[1, 3]);
        assert!(r.validate(3).is_err());
        assert!(Configuration::new(vec![0, 1]).serves(&r));
        assert!(!Configuration::new(vec![0, 2]).serves(&r));
    }
}
