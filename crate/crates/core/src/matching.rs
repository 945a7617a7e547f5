//! Perfect matchings on `[2n]` and their fixed-point-free involution view.

use std::fmt;

use serde::Serialize;

use crate::arc::{Arc, GeneralizedArc};
use crate::error::Error;
use crate::partition::{extend_arcs, SetPartition};

/// A perfect matching on `[2n]`: `n` disjoint arcs covering every vertex,
/// stored sorted by left endpoint.
///
/// Text form is a pair list `1-4,2-3`; a matching is also a set partition
/// with all blocks of size 2, so bar notation is accepted on input.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PerfectMatching {
    n_pairs: usize,
    arcs: Vec<Arc>,
}

impl PerfectMatching {
    /// Validates that the arcs tile `[2n]` exactly.
    pub fn new(mut arcs: Vec<Arc>) -> Result<Self, Error> {
        let n_pairs = arcs.len();
        let n = 2 * n_pairs;
        let mut seen = vec![false; n + 1];
        for arc in &arcs {
            for v in [arc.lo, arc.hi] {
                if v < 1 || v > n {
                    return Err(Error::ElementOutOfRange { element: v, n });
                }
                if seen[v] {
                    return Err(Error::DuplicateElement(v));
                }
                seen[v] = true;
            }
        }
        // 2n distinct values in [1, 2n] necessarily cover [2n]
        arcs.sort_unstable();
        Ok(PerfectMatching { n_pairs, arcs })
    }

    /// Reinterprets a set partition with all blocks of size 2 as a matching.
    pub fn from_partition(p: &SetPartition) -> Result<Self, Error> {
        if !p.ground_size().is_multiple_of(2) {
            return Err(Error::OddGroundSet(p.ground_size()));
        }
        let mut arcs = Vec::with_capacity(p.block_count());
        for block in p.blocks() {
            if block.len() != 2 {
                return Err(Error::BlockSizeNotTwo(block.len()));
            }
            arcs.push(Arc {
                lo: block[0],
                hi: block[1],
            });
        }
        PerfectMatching::new(arcs)
    }

    /// Parses either a pair list `1-4,2-3` or bar notation with blocks of
    /// size 2. Reversed pairs like `4-1` are normalized.
    pub fn parse(text: &str) -> Result<Self, Error> {
        if text.contains('|') {
            return PerfectMatching::from_partition(&SetPartition::parse_infer(text)?);
        }
        let mut arcs = Vec::new();
        for pair in text.split(',') {
            let pair = pair.trim();
            let (a, b) = pair
                .split_once('-')
                .ok_or_else(|| Error::BadToken(pair.to_string()))?;
            let a: usize = a
                .trim()
                .parse()
                .map_err(|_| Error::BadToken(pair.to_string()))?;
            let b: usize = b
                .trim()
                .parse()
                .map_err(|_| Error::BadToken(pair.to_string()))?;
            if a == b || a == 0 || b == 0 {
                return Err(Error::BadArc {
                    lo: a.min(b),
                    hi: a.max(b),
                });
            }
            arcs.push(Arc {
                lo: a.min(b),
                hi: a.max(b),
            });
        }
        PerfectMatching::new(arcs)
    }

    /// Rebuilds a matching from a fixed-point-free involution given in
    /// one-line notation (`sigma[i - 1]` is the image of `i`).
    pub fn from_involution(sigma: &[usize]) -> Result<Self, Error> {
        let n = sigma.len();
        let mut arcs = Vec::new();
        for i in 1..=n {
            let j = sigma[i - 1];
            if j < 1 || j > n {
                return Err(Error::ElementOutOfRange { element: j, n });
            }
            if j == i || sigma[j - 1] != i {
                return Err(Error::BadArc {
                    lo: i.min(j),
                    hi: i.max(j),
                });
            }
            if i < j {
                arcs.push(Arc { lo: i, hi: j });
            }
        }
        PerfectMatching::new(arcs)
    }

    pub fn n_pairs(&self) -> usize {
        self.n_pairs
    }

    /// Size of the ground set, `2 * n_pairs`.
    pub fn ground_size(&self) -> usize {
        2 * self.n_pairs
    }

    /// Arcs sorted by left endpoint.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Left endpoints of the arcs, ascending.
    pub fn openers(&self) -> Vec<usize> {
        self.arcs.iter().map(|a| a.lo).collect()
    }

    /// Right endpoints of the arcs, ascending.
    pub fn closers(&self) -> Vec<usize> {
        let mut closers: Vec<usize> = self.arcs.iter().map(|a| a.hi).collect();
        closers.sort_unstable();
        closers
    }

    /// Arcs of the extended diagram, with a half-arc per opener and closer.
    pub fn extended_arcs(&self) -> Vec<GeneralizedArc> {
        extend_arcs(&self.arcs, &self.openers(), &self.closers())
    }

    /// The matching viewed as a set partition with blocks of size 2.
    pub fn to_partition(&self) -> SetPartition {
        let blocks = self.arcs.iter().map(|a| vec![a.lo, a.hi]).collect();
        SetPartition::new(self.ground_size(), blocks)
            .expect("a perfect matching is a valid partition")
    }

    /// One-line notation of the corresponding fixed-point-free involution:
    /// the returned array has `sigma[i - 1] = j` and `sigma[j - 1] = i` for
    /// every arc `(i, j)`.
    pub fn as_involution(&self) -> Vec<usize> {
        let mut sigma = vec![0; self.ground_size()];
        for arc in &self.arcs {
            sigma[arc.lo - 1] = arc.hi;
            sigma[arc.hi - 1] = arc.lo;
        }
        sigma
    }
}

impl fmt::Display for PerfectMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, arc) in self.arcs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}-{}", arc.lo, arc.hi)?;
        }
        Ok(())
    }
}
