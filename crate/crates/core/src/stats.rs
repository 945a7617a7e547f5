//! Scalar statistics of arc diagrams: depths, the depth index, the
//! intertwining number, crossings/nestings/alignments, spans, and the
//! length statistic of fixed-point-free involutions.

use serde::Serialize;

use crate::arc::{Arc, GeneralizedArc};
use crate::error::Error;
use crate::matching::PerfectMatching;
use crate::partition::SetPartition;

/// Common view of the two diagram-carrying types. All statistics are pure
/// functions of the ground-set size and the arc list.
pub trait ArcDiagram {
    fn ground_size(&self) -> usize;
    fn arc_list(&self) -> Vec<Arc>;
    fn extended_arc_list(&self) -> Vec<GeneralizedArc>;
}

impl ArcDiagram for SetPartition {
    fn ground_size(&self) -> usize {
        self.ground_size()
    }

    fn arc_list(&self) -> Vec<Arc> {
        self.arcs()
    }

    fn extended_arc_list(&self) -> Vec<GeneralizedArc> {
        self.extended_arcs()
    }
}

impl ArcDiagram for PerfectMatching {
    fn ground_size(&self) -> usize {
        self.ground_size()
    }

    fn arc_list(&self) -> Vec<Arc> {
        self.arcs().to_vec()
    }

    fn extended_arc_list(&self) -> Vec<GeneralizedArc> {
        self.extended_arcs()
    }
}

/// All statistics of one perfect matching.
///
/// The fields satisfy `cro + nst + al = C(n, 2)` and `span_sum = tvd`
/// for every matching; the identity suite in [`crate::verify`] checks
/// these and the rest of the relations exhaustively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StatRecord {
    pub dindex: u64,
    pub inumber: u64,
    pub cro: u64,
    pub nst: u64,
    pub al: u64,
    pub tvd: u64,
    pub ell: u64,
    pub cnumber: u64,
    pub span_sum: u64,
}

/// The statistics that remain meaningful for arbitrary set partitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PartitionStatRecord {
    pub dindex: u64,
    pub inumber: u64,
    pub cnumber: u64,
    pub tvd: u64,
    pub span_sum: u64,
}

/// Number of arcs `(i, j)` with `i < v < j`: how many arcs pass over the
/// vertex.
pub fn vertex_depth<D: ArcDiagram>(diagram: &D, v: usize) -> Result<u64, Error> {
    let n = diagram.ground_size();
    if v < 1 || v > n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    Ok(vertex_depth_in(&diagram.arc_list(), v))
}

/// Number of arcs `(i, j)` strictly covering the arc `a`, i.e. with
/// `i < a.lo < a.hi < j`. Errors if `a` is not an arc of the diagram.
pub fn arc_depth<D: ArcDiagram>(diagram: &D, a: Arc) -> Result<u64, Error> {
    let arcs = diagram.arc_list();
    if !arcs.contains(&a) {
        return Err(Error::NotAnArc { lo: a.lo, hi: a.hi });
    }
    Ok(arc_depth_in(&arcs, a))
}

/// The depth index
/// `sum_{i=1}^{k} (N - i) - sum_v depth(v) + sum_alpha depth(alpha)`,
/// where `N` is the ground-set size and `k` the number of arcs.
pub fn depth_index<D: ArcDiagram>(diagram: &D) -> u64 {
    depth_index_from(diagram.ground_size(), &diagram.arc_list())
}

/// Number of crossing pairs in the extended arc diagram.
pub fn intertwining_number<D: ArcDiagram>(diagram: &D) -> u64 {
    extended_crossings(&diagram.extended_arc_list())
}

/// Sum of all vertex depths; equals the sum of all arc spans.
pub fn total_vertex_depth<D: ArcDiagram>(diagram: &D) -> u64 {
    let arcs = diagram.arc_list();
    (1..=diagram.ground_size())
        .map(|v| vertex_depth_in(&arcs, v))
        .sum()
}

/// Number of crossing pairs in the (non-extended) arc diagram.
pub fn crossing_number<D: ArcDiagram>(diagram: &D) -> u64 {
    crossing_pairs(&diagram.arc_list())
}

/// Classifies every arc pair `(e, f)` with `e.lo < f.lo` of a matching as
/// a crossing `i < k < j < l`, a nesting `i < k < l < j`, or an alignment
/// `i < j < k < l`, and returns the three counts in that order.
pub fn cr_ne_al(m: &PerfectMatching) -> (u64, u64, u64) {
    cr_ne_al_in(m.arcs())
}

/// The length statistic of the matching viewed as a fixed-point-free
/// involution: span sum minus crossing number.
pub fn length_ds(m: &PerfectMatching) -> u64 {
    let arcs = m.arcs();
    let span_sum: u64 = arcs.iter().map(Arc::span).sum();
    span_sum
        .checked_sub(crossing_pairs(arcs))
        .expect("span sum dominates the crossing number")
}

/// Computes every statistic of one matching in a single pass.
pub fn stat_record(m: &PerfectMatching) -> StatRecord {
    stat_record_with_span(m, |a| a.span())
}

/// Like [`stat_record`], but with a pluggable span function. The identity
/// suite uses this to inject a deliberately corrupted span and confirm the
/// registered identities catch it; only the span-derived fields (`span_sum`
/// and `ell`) are affected.
pub(crate) fn stat_record_with_span<F>(m: &PerfectMatching, span_of: F) -> StatRecord
where
    F: Fn(&Arc) -> u64,
{
    let arcs = m.arcs();
    let n = m.ground_size();
    let (cro, nst, al) = cr_ne_al_in(arcs);
    let cnumber = crossing_pairs(arcs);
    let span_sum: u64 = arcs.iter().map(&span_of).sum();
    let tvd: u64 = (1..=n).map(|v| vertex_depth_in(arcs, v)).sum();
    let ell = span_sum
        .checked_sub(cnumber)
        .expect("span sum dominates the crossing number");
    StatRecord {
        dindex: depth_index_from(n, arcs),
        inumber: extended_crossings(&m.extended_arcs()),
        cro,
        nst,
        al,
        tvd,
        ell,
        cnumber,
        span_sum,
    }
}

/// The partition-level statistics of an arbitrary set partition.
pub fn partition_stat_record(p: &SetPartition) -> PartitionStatRecord {
    let arcs = p.arcs();
    PartitionStatRecord {
        dindex: depth_index_from(p.ground_size(), &arcs),
        inumber: extended_crossings(&p.extended_arcs()),
        cnumber: crossing_pairs(&arcs),
        tvd: (1..=p.ground_size())
            .map(|v| vertex_depth_in(&arcs, v))
            .sum(),
        span_sum: arcs.iter().map(Arc::span).sum(),
    }
}

fn vertex_depth_in(arcs: &[Arc], v: usize) -> u64 {
    arcs.iter().filter(|a| a.lo < v && v < a.hi).count() as u64
}

fn arc_depth_in(arcs: &[Arc], a: Arc) -> u64 {
    arcs.iter().filter(|b| b.lo < a.lo && a.hi < b.hi).count() as u64
}

/// Sum of arc depths over the whole diagram; for matchings this equals the
/// nesting count.
pub fn arc_depth_sum<D: ArcDiagram>(diagram: &D) -> u64 {
    let arcs = diagram.arc_list();
    arcs.iter().map(|&a| arc_depth_in(&arcs, a)).sum()
}

fn depth_index_from(ground: usize, arcs: &[Arc]) -> u64 {
    let k = arcs.len() as u64;
    let n = ground as u64;
    // sum_{i=1}^{k} (N - i)
    let base = k * n - k * (k + 1) / 2;
    let tvd: u64 = (1..=ground).map(|v| vertex_depth_in(arcs, v)).sum();
    let depth_sum: u64 = arcs.iter().map(|&a| arc_depth_in(arcs, a)).sum();
    let dindex = base as i64 - tvd as i64 + depth_sum as i64;
    debug_assert!(dindex >= 0, "depth index must be nonnegative");
    dindex as u64
}

fn crossing_pairs(arcs: &[Arc]) -> u64 {
    let mut count = 0;
    for (i, a) in arcs.iter().enumerate() {
        for b in &arcs[i + 1..] {
            if a.crosses(b) {
                count += 1;
            }
        }
    }
    count
}

fn extended_crossings(arcs: &[GeneralizedArc]) -> u64 {
    let mut count = 0;
    for (i, a) in arcs.iter().enumerate() {
        for b in &arcs[i + 1..] {
            if a.crosses(b) {
                count += 1;
            }
        }
    }
    count
}

fn cr_ne_al_in(arcs: &[Arc]) -> (u64, u64, u64) {
    let (mut cro, mut nst, mut al) = (0, 0, 0);
    for (i, e) in arcs.iter().enumerate() {
        for f in &arcs[i + 1..] {
            // arcs are sorted by lo, so e.lo < f.lo
            if f.lo < e.hi && e.hi < f.hi {
                cro += 1;
            } else if f.hi < e.hi {
                nst += 1;
            } else {
                al += 1;
            }
        }
    }
    (cro, nst, al)
}
