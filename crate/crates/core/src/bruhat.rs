//! The strong Bruhat order restricted to fixed-point-free involutions,
//! compared through rank-matrix dominance, with Hasse covers by transitive
//! reduction and a check that the poset is graded by the length statistic.

use serde::Serialize;

use crate::enumerate::perfect_matchings;
use crate::error::Error;
use crate::matching::PerfectMatching;
use crate::qpoly::QPolynomial;
use crate::stats::length_ds;

/// Largest `n` accepted by the all-pairs routines; `PM_10` already has 945
/// elements and the transitive reduction is cubic in that count.
pub const DEFAULT_BOUND: usize = 5;

/// Rank matrix of a permutation of `[N]` in one-line notation:
/// `r[i][j] = |{k <= i : sigma(k) <= j}|`. Entries increase weakly along
/// rows and columns and `r[N][N] = N`.
///
/// Dominance of rank matrices characterizes the strong Bruhat order; the
/// identity-adjacent matching `1-2,3-4,...` has the entrywise largest
/// matrix, so *smaller* in the order means *larger* entrywise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankMatrix {
    n: usize,
    entries: Vec<usize>,
}

impl RankMatrix {
    pub fn from_permutation(sigma: &[usize]) -> Self {
        let n = sigma.len();
        let mut entries = vec![0usize; n * n];
        for i in 1..=n {
            for j in 1..=n {
                let above = if i > 1 {
                    entries[(i - 2) * n + (j - 1)]
                } else {
                    0
                };
                entries[(i - 1) * n + (j - 1)] = above + usize::from(sigma[i - 1] <= j);
            }
        }
        RankMatrix { n, entries }
    }

    /// Entry at 1-based coordinates.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    /// True iff every entry of `self` is `>=` the corresponding entry of
    /// `other`.
    pub fn dominates(&self, other: &RankMatrix) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.entries.iter().zip(&other.entries).all(|(a, b)| a >= b)
    }
}

/// True iff `a <= b` in the strong Bruhat order on fixed-point-free
/// involutions, i.e. the rank matrix of `a` dominates the rank matrix of
/// `b` entrywise.
pub fn bruhat_leq(a: &PerfectMatching, b: &PerfectMatching) -> Result<bool, Error> {
    if a.n_pairs() != b.n_pairs() {
        return Err(Error::SizeMismatch(a.n_pairs(), b.n_pairs()));
    }
    let ra = RankMatrix::from_permutation(&a.as_involution());
    let rb = RankMatrix::from_permutation(&b.as_involution());
    Ok(ra.dominates(&rb))
}

/// All Hasse covers `(a, b)` of the order on `PM_2n`: `a < b` with nothing
/// strictly between, computed by transitive reduction of the comparability
/// relation. Uses [`DEFAULT_BOUND`].
pub fn hasse_covers(n: usize) -> Result<Vec<(PerfectMatching, PerfectMatching)>, Error> {
    hasse_covers_with_bound(n, DEFAULT_BOUND)
}

pub fn hasse_covers_with_bound(
    n: usize,
    bound: usize,
) -> Result<Vec<(PerfectMatching, PerfectMatching)>, Error> {
    if n > bound {
        return Err(Error::BoundExceeded {
            requested: n,
            bound,
        });
    }
    let elements: Vec<PerfectMatching> = perfect_matchings(n).collect();
    let strict = strict_order_matrix(&elements)?;
    let m = elements.len();
    let mut covers = Vec::new();
    for a in 0..m {
        'pair: for b in 0..m {
            if !strict[a * m + b] {
                continue;
            }
            for c in 0..m {
                if strict[a * m + c] && strict[c * m + b] {
                    continue 'pair;
                }
            }
            covers.push((elements[a].clone(), elements[b].clone()));
        }
    }
    Ok(covers)
}

/// Gradedness report for the order on `PM_2n`: the length statistic must be
/// its rank function.
#[derive(Debug, Clone, Serialize)]
pub struct RankCheckReport {
    pub n: usize,
    pub elements: u64,
    pub pass: bool,
    pub antisymmetric: bool,
    pub transitive: bool,
    /// The all-adjacent matching `1-2,3-4,...` is the unique minimum and
    /// has length 0.
    pub unique_minimum: bool,
    /// The fully nested matching `1-2n,2-(2n-1),...` is the unique maximum
    /// and has length `n^2 - n`.
    pub unique_maximum: bool,
    /// Every Hasse cover increases the length by exactly 1.
    pub covers_increase_length_by_one: bool,
    /// `a <= b` implies `length(a) <= length(b)`.
    pub order_respects_length: bool,
    /// `sum q^length` equals the q-double factorial `[2n-1]_q!!`.
    pub rank_polynomial_matches: bool,
    pub counterexample: Option<String>,
}

/// Checks that the order is graded by the length statistic. Uses
/// [`DEFAULT_BOUND`].
pub fn verify_rank_is_length(n: usize) -> Result<RankCheckReport, Error> {
    verify_rank_is_length_with_bound(n, DEFAULT_BOUND)
}

pub fn verify_rank_is_length_with_bound(n: usize, bound: usize) -> Result<RankCheckReport, Error> {
    if n > bound {
        return Err(Error::BoundExceeded {
            requested: n,
            bound,
        });
    }
    let elements: Vec<PerfectMatching> = perfect_matchings(n).collect();
    let lengths: Vec<u64> = elements.iter().map(length_ds).collect();
    let m = elements.len();
    let leq = order_matrix(&elements)?;
    let mut counterexample = None;
    let note = |c: &mut Option<String>, text: String| {
        if c.is_none() {
            *c = Some(text);
        }
    };

    let mut antisymmetric = true;
    'anti: for a in 0..m {
        for b in 0..m {
            if a != b && leq[a * m + b] && leq[b * m + a] {
                antisymmetric = false;
                note(
                    &mut counterexample,
                    format!("{} and {} compare both ways", elements[a], elements[b]),
                );
                break 'anti;
            }
        }
    }

    let mut transitive = true;
    'trans: for a in 0..m {
        for b in 0..m {
            if !leq[a * m + b] {
                continue;
            }
            for c in 0..m {
                if leq[b * m + c] && !leq[a * m + c] {
                    transitive = false;
                    note(
                        &mut counterexample,
                        format!(
                            "{} <= {} <= {} but the ends do not compare",
                            elements[a], elements[b], elements[c]
                        ),
                    );
                    break 'trans;
                }
            }
        }
    }

    // expected extremes: all-adjacent at the bottom, fully nested at the top
    let bottom = expected_minimum(n);
    let top = expected_maximum(n);
    let bottom_idx = elements
        .iter()
        .position(|e| *e == bottom)
        .expect("minimum enumerated");
    let top_idx = elements
        .iter()
        .position(|e| *e == top)
        .expect("maximum enumerated");

    let mut unique_minimum = lengths[bottom_idx] == 0;
    for b in 0..m {
        if !leq[bottom_idx * m + b] {
            unique_minimum = false;
            note(
                &mut counterexample,
                format!("{} is not below {}", bottom, elements[b]),
            );
        }
    }
    let mut unique_maximum = lengths[top_idx] == (n * n - n) as u64;
    for a in 0..m {
        if !leq[a * m + top_idx] {
            unique_maximum = false;
            note(
                &mut counterexample,
                format!("{} is not above {}", top, elements[a]),
            );
        }
    }

    let mut covers_increase_length_by_one = true;
    let covers = hasse_covers_with_bound(n, bound)?;
    for (a, b) in &covers {
        let la = length_ds(a);
        let lb = length_ds(b);
        if lb != la + 1 {
            covers_increase_length_by_one = false;
            note(
                &mut counterexample,
                format!("cover {} -> {} jumps from {} to {}", a, b, la, lb),
            );
        }
    }

    let mut order_respects_length = true;
    'mono: for a in 0..m {
        for b in 0..m {
            if leq[a * m + b] && lengths[a] > lengths[b] {
                order_respects_length = false;
                note(
                    &mut counterexample,
                    format!(
                        "{} <= {} but lengths are {} > {}",
                        elements[a], elements[b], lengths[a], lengths[b]
                    ),
                );
                break 'mono;
            }
        }
    }

    let mut rank_poly = QPolynomial::zero();
    for &l in &lengths {
        rank_poly.bump(l as usize, 1)?;
    }
    let rank_polynomial_matches = rank_poly == QPolynomial::q_double_factorial(n)?;
    if !rank_polynomial_matches {
        note(
            &mut counterexample,
            format!("rank polynomial is {}", rank_poly),
        );
    }

    let pass = antisymmetric
        && transitive
        && unique_minimum
        && unique_maximum
        && covers_increase_length_by_one
        && order_respects_length
        && rank_polynomial_matches;
    Ok(RankCheckReport {
        n,
        elements: m as u64,
        pass,
        antisymmetric,
        transitive,
        unique_minimum,
        unique_maximum,
        covers_increase_length_by_one,
        order_respects_length,
        rank_polynomial_matches,
        counterexample,
    })
}

/// The bottom element `1-2,3-4,...,(2n-1)-2n`.
pub fn expected_minimum(n: usize) -> PerfectMatching {
    let arcs = (1..=n)
        .map(|i| crate::arc::Arc {
            lo: 2 * i - 1,
            hi: 2 * i,
        })
        .collect();
    PerfectMatching::new(arcs).expect("adjacent pairs tile [2n]")
}

/// The top element `1-2n,2-(2n-1),...,n-(n+1)`.
pub fn expected_maximum(n: usize) -> PerfectMatching {
    let arcs = (1..=n)
        .map(|i| crate::arc::Arc {
            lo: i,
            hi: 2 * n + 1 - i,
        })
        .collect();
    PerfectMatching::new(arcs).expect("nested pairs tile [2n]")
}

fn order_matrix(elements: &[PerfectMatching]) -> Result<Vec<bool>, Error> {
    let m = elements.len();
    let ranks: Vec<RankMatrix> = elements
        .iter()
        .map(|e| RankMatrix::from_permutation(&e.as_involution()))
        .collect();
    let mut leq = vec![false; m * m];
    for a in 0..m {
        for b in 0..m {
            leq[a * m + b] = ranks[a].dominates(&ranks[b]);
        }
    }
    Ok(leq)
}

fn strict_order_matrix(elements: &[PerfectMatching]) -> Result<Vec<bool>, Error> {
    let m = elements.len();
    let mut strict = order_matrix(elements)?;
    for a in 0..m {
        strict[a * m + a] = false;
    }
    Ok(strict)
}
