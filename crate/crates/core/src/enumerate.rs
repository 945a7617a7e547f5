//! Exhaustive, order-deterministic streams over set partitions and perfect
//! matchings, and aggregation of statistic distributions.
//!
//! Partitions of `[n]` are produced in lexicographic order of their
//! restricted growth strings; matchings on `[2n]` follow the recursion
//! "match the smallest free vertex to each larger free vertex in ascending
//! order". Both orders are part of the contract so that golden outputs stay
//! stable. Each stream can be split into shards (by the first pairing
//! choice, or by the first free restricted-growth letter) whose union is
//! exactly the full stream.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::arc::Arc;
use crate::error::Error;
use crate::matching::PerfectMatching;
use crate::partition::SetPartition;
use crate::qpoly::QPolynomial;
use crate::stats::{stat_record, StatRecord};

/// The two enumerated families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Partitions,
    Matchings,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Partitions => write!(f, "partitions"),
            Family::Matchings => write!(f, "matchings"),
        }
    }
}

/// Statistics that can be aggregated into distributions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistic {
    Dindex,
    Inumber,
    Ell,
    Cro,
    Nst,
    Al,
    Tvd,
}

impl Statistic {
    pub const ALL: [Statistic; 7] = [
        Statistic::Dindex,
        Statistic::Inumber,
        Statistic::Ell,
        Statistic::Cro,
        Statistic::Nst,
        Statistic::Al,
        Statistic::Tvd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Dindex => "dindex",
            Statistic::Inumber => "inumber",
            Statistic::Ell => "ell",
            Statistic::Cro => "cro",
            Statistic::Nst => "nst",
            Statistic::Al => "al",
            Statistic::Tvd => "tvd",
        }
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        Self::ALL
            .into_iter()
            .find(|s| s.name() == text)
            .ok_or_else(|| Error::UnknownStatistic(text.to_string()))
    }

    fn of_record(self, r: &StatRecord) -> u64 {
        match self {
            Statistic::Dindex => r.dindex,
            Statistic::Inumber => r.inumber,
            Statistic::Ell => r.ell,
            Statistic::Cro => r.cro,
            Statistic::Nst => r.nst,
            Statistic::Al => r.al,
            Statistic::Tvd => r.tvd,
        }
    }

    /// Whether the statistic makes sense for arbitrary set partitions.
    pub fn defined_for_partitions(self) -> bool {
        matches!(
            self,
            Statistic::Dindex | Statistic::Inumber | Statistic::Tvd
        )
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Streams every partition of `[n]` exactly once, in restricted-growth-string
/// lexicographic order.
pub fn set_partitions(n: usize) -> SetPartitionIter {
    SetPartitionIter {
        rgs: Some(vec![0; n]),
        fixed: 1.min(n),
    }
}

/// Streams every perfect matching on `[2n]` exactly once: the smallest free
/// vertex is matched to each larger free vertex in ascending order, and the
/// rest recursively.
pub fn perfect_matchings(n: usize) -> PerfectMatchingIter {
    PerfectMatchingIter {
        n_pairs: n,
        choices: Some(vec![0; n]),
        fixed: 0,
    }
}

pub struct SetPartitionIter {
    rgs: Option<Vec<usize>>,
    // positions below this index never advance (used by shards; position 0
    // is always 0 in a restricted growth string)
    fixed: usize,
}

impl SetPartitionIter {
    /// Splits the stream over `[n]` into shards by the second letter of the
    /// restricted growth string. The shards are disjoint and their union is
    /// the full stream.
    pub fn sharded(n: usize) -> Vec<SetPartitionIter> {
        if n < 2 {
            return vec![set_partitions(n)];
        }
        (0..=1)
            .map(|second| {
                let mut rgs = vec![0; n];
                rgs[1] = second;
                SetPartitionIter {
                    rgs: Some(rgs),
                    fixed: 2,
                }
            })
            .collect()
    }
}

impl Iterator for SetPartitionIter {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        let rgs = self.rgs.as_mut()?;
        let item = SetPartition::from_rgs(rgs);
        // advance: rightmost free position that may still grow
        let mut advanced = false;
        for i in (self.fixed..rgs.len()).rev() {
            let prefix_max = rgs[..i].iter().copied().max().unwrap_or(0);
            if rgs[i] <= prefix_max {
                rgs[i] += 1;
                rgs[i + 1..].fill(0);
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.rgs = None;
        }
        Some(item)
    }
}

pub struct PerfectMatchingIter {
    n_pairs: usize,
    // choices[k] picks the partner of the smallest free vertex at level k,
    // as an index into the remaining free vertices in ascending order
    choices: Option<Vec<usize>>,
    fixed: usize,
}

impl PerfectMatchingIter {
    /// Splits the stream into `2n - 1` shards by the partner of vertex 1.
    pub fn sharded(n: usize) -> Vec<PerfectMatchingIter> {
        if n == 0 {
            return vec![perfect_matchings(0)];
        }
        (0..2 * n - 1)
            .map(|first| {
                let mut choices = vec![0; n];
                choices[0] = first;
                PerfectMatchingIter {
                    n_pairs: n,
                    choices: Some(choices),
                    fixed: 1,
                }
            })
            .collect()
    }
}

impl Iterator for PerfectMatchingIter {
    type Item = PerfectMatching;

    fn next(&mut self) -> Option<PerfectMatching> {
        let choices = self.choices.as_mut()?;
        let item = matching_from_choices(self.n_pairs, choices);
        let mut advanced = false;
        for i in (self.fixed..choices.len()).rev() {
            if choices[i] + 1 < 2 * (self.n_pairs - i) - 1 {
                choices[i] += 1;
                choices[i + 1..].fill(0);
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.choices = None;
        }
        Some(item)
    }
}

fn matching_from_choices(n_pairs: usize, choices: &[usize]) -> PerfectMatching {
    let mut free: Vec<usize> = (1..=2 * n_pairs).collect();
    let mut arcs = Vec::with_capacity(n_pairs);
    for &choice in choices {
        let lo = free.remove(0);
        let hi = free.remove(choice);
        arcs.push(Arc { lo, hi });
    }
    PerfectMatching::new(arcs).expect("choice vector encodes a valid matching")
}

/// Exact counts of objects per statistic tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionTable {
    stats: Vec<Statistic>,
    counts: BTreeMap<Vec<u64>, u64>,
}

impl DistributionTable {
    pub fn stats(&self) -> &[Statistic] {
        &self.stats
    }

    /// Key tuples and counts in ascending key order.
    pub fn entries(&self) -> impl Iterator<Item = (&[u64], u64)> {
        self.counts.iter().map(|(k, &c)| (k.as_slice(), c))
    }

    pub fn count(&self, key: &[u64]) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    /// Total number of objects aggregated.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

/// The generating polynomial `sum_objects q^{statistic(object)}` of one
/// statistic over one family.
pub fn generating_polynomial(
    family: Family,
    n: usize,
    stat: Statistic,
) -> Result<QPolynomial, Error> {
    let mut poly = QPolynomial::zero();
    match family {
        Family::Matchings => {
            for m in perfect_matchings(n) {
                let record = stat_record(&m);
                poly.bump(stat.of_record(&record) as usize, 1)?;
            }
        }
        Family::Partitions => {
            require_partition_stat(stat)?;
            for p in set_partitions(n) {
                let value = partition_stat_value(&p, stat);
                poly.bump(value as usize, 1)?;
            }
        }
    }
    Ok(poly)
}

/// Exact joint counts of several statistics over one family.
pub fn joint_distribution(
    family: Family,
    n: usize,
    stats: &[Statistic],
) -> Result<DistributionTable, Error> {
    let mut counts: BTreeMap<Vec<u64>, u64> = BTreeMap::new();
    match family {
        Family::Matchings => {
            for m in perfect_matchings(n) {
                let record = stat_record(&m);
                let key: Vec<u64> = stats.iter().map(|s| s.of_record(&record)).collect();
                *counts.entry(key).or_insert(0) += 1;
            }
        }
        Family::Partitions => {
            for &stat in stats {
                require_partition_stat(stat)?;
            }
            for p in set_partitions(n) {
                let key: Vec<u64> = stats.iter().map(|&s| partition_stat_value(&p, s)).collect();
                *counts.entry(key).or_insert(0) += 1;
            }
        }
    }
    Ok(DistributionTable {
        stats: stats.to_vec(),
        counts,
    })
}

fn require_partition_stat(stat: Statistic) -> Result<(), Error> {
    if stat.defined_for_partitions() {
        Ok(())
    } else {
        Err(Error::StatisticNotApplicable {
            stat: stat.name().to_string(),
            family: "partitions".to_string(),
        })
    }
}

fn partition_stat_value(p: &SetPartition, stat: Statistic) -> u64 {
    let record = crate::stats::partition_stat_record(p);
    match stat {
        Statistic::Dindex => record.dindex,
        Statistic::Inumber => record.inumber,
        Statistic::Tvd => record.tvd,
        _ => unreachable!("checked by require_partition_stat"),
    }
}
