//! Arcs and generalized (half-)arcs of arc diagrams.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// An arc joining two vertices of an arc diagram, with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Arc {
    pub lo: usize,
    pub hi: usize,
}

impl Arc {
    /// Builds an arc, rejecting degenerate or reversed endpoints.
    pub fn new(lo: usize, hi: usize) -> Result<Self, Error> {
        if lo == 0 || lo >= hi {
            return Err(Error::BadArc { lo, hi });
        }
        Ok(Arc { lo, hi })
    }

    /// The span of the arc: the number of dots strictly below it, `hi - lo - 1`.
    pub fn span(&self) -> u64 {
        (self.hi - self.lo - 1) as u64
    }

    /// True iff `self` and `other` cross, i.e. their endpoints interleave
    /// as `i < k < j < l` with `(i, j)` the arc of smaller left endpoint.
    pub fn crosses(&self, other: &Arc) -> bool {
        let (a, b) = if self.lo < other.lo {
            (self, other)
        } else {
            (other, self)
        };
        a.lo < b.lo && b.lo < a.hi && a.hi < b.hi
    }

    /// True iff one arc nests strictly inside the other (`i < k < l < j`).
    pub fn nests(&self, other: &Arc) -> bool {
        let (a, b) = if self.lo < other.lo {
            (self, other)
        } else {
            (other, self)
        };
        a.lo < b.lo && b.hi < a.hi
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lo, self.hi)
    }
}

/// An endpoint of a generalized arc. The derived order gives the total
/// order `LeftInf < Vertex(1) < ... < Vertex(n) < RightInf` used by the
/// crossing predicate on extended diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Endpoint {
    LeftInf,
    Vertex(usize),
    RightInf,
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::LeftInf => write!(f, "-inf"),
            Endpoint::Vertex(v) => write!(f, "{v}"),
            Endpoint::RightInf => write!(f, "+inf"),
        }
    }
}

/// An arc of an extended diagram: a regular arc or a half-arc with one
/// sentinel endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneralizedArc {
    pub lo: Endpoint,
    pub hi: Endpoint,
}

impl GeneralizedArc {
    pub fn full(arc: Arc) -> Self {
        GeneralizedArc {
            lo: Endpoint::Vertex(arc.lo),
            hi: Endpoint::Vertex(arc.hi),
        }
    }

    /// Half-arc from far left into an opener.
    pub fn from_left(opener: usize) -> Self {
        GeneralizedArc {
            lo: Endpoint::LeftInf,
            hi: Endpoint::Vertex(opener),
        }
    }

    /// Half-arc from a closer out to far right.
    pub fn to_right(closer: usize) -> Self {
        GeneralizedArc {
            lo: Endpoint::Vertex(closer),
            hi: Endpoint::RightInf,
        }
    }

    /// Crossing predicate under the sentinel total order: the pair crosses
    /// iff `i < k < j < l` where `(i, j)` is the arc of smaller left endpoint.
    pub fn crosses(&self, other: &GeneralizedArc) -> bool {
        let (a, b) = if self.lo < other.lo {
            (self, other)
        } else {
            (other, self)
        };
        a.lo < b.lo && b.lo < a.hi && a.hi < b.hi
    }
}

impl fmt::Display for GeneralizedArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arc_rejects_bad_endpoints() {
        assert_eq!(Arc::new(3, 3), Err(Error::BadArc { lo: 3, hi: 3 }));
        assert_eq!(Arc::new(5, 2), Err(Error::BadArc { lo: 5, hi: 2 }));
        assert_eq!(Arc::new(0, 4), Err(Error::BadArc { lo: 0, hi: 4 }));
    }

    #[test]
    fn span_examples() {
        assert_eq!(Arc::new(1, 4).unwrap().span(), 2);
        assert_eq!(Arc::new(2, 3).unwrap().span(), 0);
        // (1, 2n) with n = 5 covers all 2n - 2 interior dots
        assert_eq!(Arc::new(1, 10).unwrap().span(), 8);
    }

    #[test]
    fn crossing_is_symmetric_and_strict() {
        let a = Arc::new(1, 3).unwrap();
        let b = Arc::new(2, 4).unwrap();
        assert!(a.crosses(&b));
        assert!(b.crosses(&a));
        // shared endpoint does not cross
        let c = Arc::new(3, 7).unwrap();
        assert!(!a.crosses(&c));
        // nested pair does not cross
        let outer = Arc::new(1, 4).unwrap();
        let inner = Arc::new(2, 3).unwrap();
        assert!(!outer.crosses(&inner));
        assert!(outer.nests(&inner));
    }

    #[test]
    fn endpoint_total_order() {
        assert!(Endpoint::LeftInf < Endpoint::Vertex(1));
        assert!(Endpoint::Vertex(9) < Endpoint::RightInf);
        assert!(Endpoint::Vertex(2) < Endpoint::Vertex(3));
    }

    #[test]
    fn half_arcs_of_equal_kind_never_cross() {
        let l1 = GeneralizedArc::from_left(2);
        let l2 = GeneralizedArc::from_left(5);
        assert!(!l1.crosses(&l2));
        let r1 = GeneralizedArc::to_right(3);
        let r2 = GeneralizedArc::to_right(6);
        assert!(!r1.crosses(&r2));
    }

    #[test]
    fn opposite_half_arcs_cross_iff_interleaved() {
        // (-inf, 3) and (2, +inf) interleave: -inf < 2 < 3 < +inf
        assert!(GeneralizedArc::from_left(3).crosses(&GeneralizedArc::to_right(2)));
        // (-inf, 2) and (3, +inf) do not
        assert!(!GeneralizedArc::from_left(2).crosses(&GeneralizedArc::to_right(3)));
    }
}
