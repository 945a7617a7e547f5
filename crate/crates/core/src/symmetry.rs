//! Constructive bijections on perfect matchings: an involution exchanging
//! crossing and nesting counts while preserving alignments, a length
//! complementing involution, and their composition, which carries the depth
//! index onto the shifted length statistic.
//!
//! The construction is by class pairing. Matchings are grouped by the full
//! statistic key, `(cro, nst, al)` for the crossing/nesting exchange and the
//! length for the complement; each class is sorted by canonical matching
//! order, and the i-th element of a class is paired with the i-th element of
//! the mirrored class. A self-mirrored class pairs its i-th element with its
//! (size-1-i)-th, which fixes the middle element of an odd class. Mirrored
//! classes of unequal size would contradict the underlying distribution
//! symmetries, so that is a hard error.

use std::collections::{BTreeMap, HashMap};

use crate::enumerate::perfect_matchings;
use crate::error::Error;
use crate::matching::PerfectMatching;
use crate::stats::{stat_record, StatRecord};

/// Largest `n` for which tables are built by default; `PM_12` has 10395
/// elements.
pub const DEFAULT_BOUND: usize = 6;

/// A stored bijection on `PM_2n`, replayable and exportable.
#[derive(Debug, Clone)]
pub struct BijectionTable {
    n_pairs: usize,
    elements: Vec<PerfectMatching>,
    image: Vec<usize>,
    index: HashMap<PerfectMatching, usize>,
}

impl BijectionTable {
    fn new(n_pairs: usize, elements: Vec<PerfectMatching>, image: Vec<usize>) -> Self {
        let index = elements.iter().cloned().zip(0..).collect();
        BijectionTable {
            n_pairs,
            elements,
            image,
            index,
        }
    }

    pub fn n_pairs(&self) -> usize {
        self.n_pairs
    }

    /// Number of matchings in the table, `(2n - 1)!!`.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Image of one matching; `None` if it does not belong to `PM_2n`.
    pub fn apply(&self, m: &PerfectMatching) -> Option<&PerfectMatching> {
        self.index.get(m).map(|&i| &self.elements[self.image[i]])
    }

    /// All `(matching, image)` pairs in enumeration order.
    pub fn pairs(&self) -> impl Iterator<Item = (&PerfectMatching, &PerfectMatching)> {
        self.elements
            .iter()
            .enumerate()
            .map(|(i, m)| (m, &self.elements[self.image[i]]))
    }

    pub fn is_involution(&self) -> bool {
        self.image
            .iter()
            .enumerate()
            .all(|(i, &j)| self.image[j] == i)
    }

    /// The composition `outer after self`, defined on the same `PM_2n`.
    pub fn compose(&self, outer: &BijectionTable) -> Result<BijectionTable, Error> {
        if self.n_pairs != outer.n_pairs {
            return Err(Error::SizeMismatch(self.n_pairs, outer.n_pairs));
        }
        let image = self.image.iter().map(|&mid| outer.image[mid]).collect();
        Ok(BijectionTable::new(
            self.n_pairs,
            self.elements.clone(),
            image,
        ))
    }
}

/// The involution exchanging crossings and nestings while preserving
/// alignments, built by pairing the `(cro, nst, al)` class with the
/// `(nst, cro, al)` class. Uses [`DEFAULT_BOUND`].
pub fn cn_involution(n: usize) -> Result<BijectionTable, Error> {
    cn_involution_with_bound(n, DEFAULT_BOUND)
}

pub fn cn_involution_with_bound(n: usize, bound: usize) -> Result<BijectionTable, Error> {
    let (elements, records) = enumerate_with_records(n, bound)?;
    let mut classes: BTreeMap<(u64, u64, u64), Vec<usize>> = BTreeMap::new();
    for (i, r) in records.iter().enumerate() {
        classes.entry((r.cro, r.nst, r.al)).or_default().push(i);
    }
    let mut image = vec![usize::MAX; elements.len()];
    for (&(cro, nst, al), class) in &classes {
        match cro.cmp(&nst) {
            std::cmp::Ordering::Less => {
                let mirror = classes.get(&(nst, cro, al)).ok_or_else(|| {
                    Error::ContractViolation(format!(
                        "no class with (cro, nst, al) = ({nst}, {cro}, {al})"
                    ))
                })?;
                if mirror.len() != class.len() {
                    return Err(Error::ContractViolation(format!(
                        "classes ({cro}, {nst}, {al}) and ({nst}, {cro}, {al}) have sizes {} and {}",
                        class.len(),
                        mirror.len()
                    )));
                }
                for (&a, &b) in class.iter().zip(mirror) {
                    image[a] = b;
                    image[b] = a;
                }
            }
            std::cmp::Ordering::Equal => pair_within(class, &mut image),
            // handled when visiting the mirrored key
            std::cmp::Ordering::Greater => {}
        }
    }
    debug_assert!(image.iter().all(|&j| j != usize::MAX));
    Ok(BijectionTable::new(n, elements, image))
}

/// The length-complementing involution: the image of a matching of length
/// `r` has length `n^2 - n - r`. Level sets of mirrored lengths must have
/// equal sizes, which is the palindromicity of the length distribution.
/// Uses [`DEFAULT_BOUND`].
pub fn length_complement(n: usize) -> Result<BijectionTable, Error> {
    length_complement_with_bound(n, DEFAULT_BOUND)
}

pub fn length_complement_with_bound(n: usize, bound: usize) -> Result<BijectionTable, Error> {
    let (elements, records) = enumerate_with_records(n, bound)?;
    let top = (n * n - n) as u64;
    let mut levels: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (i, r) in records.iter().enumerate() {
        if r.ell > top {
            return Err(Error::ContractViolation(format!(
                "length {} exceeds the maximum {top}",
                r.ell
            )));
        }
        levels.entry(r.ell).or_default().push(i);
    }
    let mut image = vec![usize::MAX; elements.len()];
    for (&r, level) in &levels {
        let mirrored = top - r;
        match r.cmp(&mirrored) {
            std::cmp::Ordering::Less => {
                let mirror = levels.get(&mirrored).ok_or_else(|| {
                    Error::ContractViolation(format!("no matchings of length {mirrored}"))
                })?;
                if mirror.len() != level.len() {
                    return Err(Error::ContractViolation(format!(
                        "levels {r} and {mirrored} have sizes {} and {}",
                        level.len(),
                        mirror.len()
                    )));
                }
                for (&a, &b) in level.iter().zip(mirror) {
                    image[a] = b;
                    image[b] = a;
                }
            }
            std::cmp::Ordering::Equal => pair_within(level, &mut image),
            std::cmp::Ordering::Greater => {}
        }
    }
    debug_assert!(image.iter().all(|&j| j != usize::MAX));
    Ok(BijectionTable::new(n, elements, image))
}

/// The composition of the two involutions above, in the order
/// length-complement after crossing/nesting exchange. For every matching,
/// `dindex(pi) = C(n+1, 2) + length(witness(pi))`. Uses [`DEFAULT_BOUND`].
pub fn depth_length_witness(n: usize) -> Result<BijectionTable, Error> {
    depth_length_witness_with_bound(n, DEFAULT_BOUND)
}

pub fn depth_length_witness_with_bound(n: usize, bound: usize) -> Result<BijectionTable, Error> {
    cn_involution_with_bound(n, bound)?.compose(&length_complement_with_bound(n, bound)?)
}

fn enumerate_with_records(
    n: usize,
    bound: usize,
) -> Result<(Vec<PerfectMatching>, Vec<StatRecord>), Error> {
    if n > bound {
        return Err(Error::BoundExceeded {
            requested: n,
            bound,
        });
    }
    let elements: Vec<PerfectMatching> = perfect_matchings(n).collect();
    debug_assert!(
        elements.windows(2).all(|w| w[0] < w[1]),
        "enumeration is canonical order"
    );
    let records = elements.iter().map(stat_record).collect();
    Ok((elements, records))
}

// Pairs a self-mirrored class i-th with (size-1-i)-th, fixing the middle.
fn pair_within(class: &[usize], image: &mut [usize]) {
    for (offset, &a) in class.iter().enumerate() {
        image[a] = class[class.len() - 1 - offset];
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::Arc;
    use crate::stats::depth_index;

    fn m(pairs: &[(usize, usize)]) -> PerfectMatching {
        PerfectMatching::new(pairs.iter().map(|&(lo, hi)| Arc { lo, hi }).collect()).unwrap()
    }

    #[test]
    fn phi_on_four_vertices_is_forced() {
        let phi = cn_involution(2).unwrap();
        let aligned = m(&[(1, 2), (3, 4)]);
        let crossed = m(&[(1, 3), (2, 4)]);
        let nested = m(&[(1, 4), (2, 3)]);
        assert_eq!(phi.apply(&aligned), Some(&aligned));
        assert_eq!(phi.apply(&crossed), Some(&nested));
        assert_eq!(phi.apply(&nested), Some(&crossed));
        assert!(phi.is_involution());
    }

    #[test]
    fn phi_on_two_vertices_is_the_identity() {
        let phi = cn_involution(1).unwrap();
        let only = m(&[(1, 2)]);
        assert_eq!(phi.apply(&only), Some(&only));
    }

    #[test]
    fn phi_exchanges_the_statistics_pointwise() {
        for n in 1..=4 {
            let phi = cn_involution(n).unwrap();
            for (source, target) in phi.pairs() {
                let s = stat_record(source);
                let t = stat_record(target);
                assert_eq!(t.al, s.al);
                assert_eq!(t.cro, s.nst);
                assert_eq!(t.nst, s.cro);
            }
            assert!(phi.is_involution());
        }
    }

    #[test]
    fn psi_on_four_vertices_is_forced() {
        let psi = length_complement(2).unwrap();
        let aligned = m(&[(1, 2), (3, 4)]);
        let crossed = m(&[(1, 3), (2, 4)]);
        let nested = m(&[(1, 4), (2, 3)]);
        assert_eq!(psi.apply(&aligned), Some(&nested));
        assert_eq!(psi.apply(&nested), Some(&aligned));
        assert_eq!(psi.apply(&crossed), Some(&crossed));
    }

    #[test]
    fn psi_complements_the_length_pointwise() {
        use crate::stats::length_ds;
        for n in 1..=4 {
            let psi = length_complement(n).unwrap();
            let top = (n * n - n) as u64;
            for (source, target) in psi.pairs() {
                assert_eq!(length_ds(target), top - length_ds(source));
            }
            assert!(psi.is_involution());
        }
    }

    #[test]
    fn witness_carries_depth_index_onto_shifted_length() {
        use crate::stats::length_ds;
        for n in 1..=4 {
            let witness = depth_length_witness(n).unwrap();
            let offset = (n * (n + 1) / 2) as u64;
            for (source, target) in witness.pairs() {
                assert_eq!(depth_index(source), offset + length_ds(target), "{source}");
            }
        }
    }

    #[test]
    fn tables_reject_oversized_requests() {
        assert!(matches!(
            cn_involution(7),
            Err(Error::BoundExceeded {
                requested: 7,
                bound: DEFAULT_BOUND
            })
        ));
    }

    #[test]
    fn foreign_matchings_have_no_image() {
        let phi = cn_involution(2).unwrap();
        assert_eq!(phi.apply(&m(&[(1, 2)])), None);
    }
}
