//! Set partitions of `[n]` in standard form and their arc diagrams.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arc::{Arc, GeneralizedArc};
use crate::error::Error;

/// A set partition of `{1, ..., n}` kept in standard form: elements ascend
/// within a block and blocks are ordered by ascending minimum.
///
/// The bar notation `1378|26|45` denotes the partition of `[8]` with blocks
/// `{1,3,7,8}`, `{2,6}`, `{4,5}`. For ground sets with elements `>= 10` the
/// elements of a block are comma-separated (`1,11|2,10|...`), since bare
/// digit strings would be ambiguous.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSetPartition")]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawSetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<RawSetPartition> for SetPartition {
    type Error = Error;

    fn try_from(raw: RawSetPartition) -> Result<Self, Error> {
        SetPartition::new(raw.n, raw.blocks)
    }
}

impl SetPartition {
    /// Validates that `blocks` partition `{1, ..., n}` and stores them in
    /// standard form.
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self, Error> {
        let mut seen = vec![false; n + 1];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::EmptyBlock);
            }
            for &element in block {
                if element < 1 || element > n {
                    return Err(Error::ElementOutOfRange { element, n });
                }
                if seen[element] {
                    return Err(Error::DuplicateElement(element));
                }
                seen[element] = true;
            }
        }
        if let Some(missing) = (1..=n).find(|&v| !seen[v]) {
            return Err(Error::MissingElement(missing));
        }
        for block in &mut blocks {
            block.sort_unstable();
        }
        blocks.sort_unstable_by_key(|block| block[0]);
        Ok(SetPartition { n, blocks })
    }

    /// Parses bar notation against an explicit ground-set size.
    ///
    /// Blocks are separated by `|`. A block containing a comma is read as
    /// comma-separated elements; otherwise it is read digit-by-digit when
    /// `n <= 9` and as a single multi-digit element when `n >= 10`.
    pub fn parse(text: &str, n: usize) -> Result<Self, Error> {
        let blocks = tokenize(text, n >= 10)?;
        SetPartition::new(n, blocks)
    }

    /// Parses bar notation, inferring the ground-set size as the largest
    /// element mentioned. Comma-free input is read digit-by-digit, so ground
    /// sets with elements `>= 10` must use commas for inference to work.
    pub fn parse_infer(text: &str) -> Result<Self, Error> {
        let multi_digit = text.contains(',');
        let blocks = tokenize(text, multi_digit)?;
        let n = blocks.iter().flatten().copied().max().unwrap_or(0);
        SetPartition::new(n, blocks)
    }

    /// Rebuilds a partition from a restricted growth string: `rgs[i]` is the
    /// 0-based block index of element `i + 1`.
    pub(crate) fn from_rgs(rgs: &[usize]) -> Self {
        let block_count = rgs.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); block_count];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        // an RGS labels blocks by first appearance, which is standard form
        debug_assert!(blocks.iter().all(|b| !b.is_empty()));
        SetPartition {
            n: rgs.len(),
            blocks,
        }
    }

    /// Size of the ground set.
    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// Blocks in standard form.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Minimal elements of the blocks, ascending.
    pub fn openers(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b[0]).collect()
    }

    /// Maximal elements of the blocks, in ascending order.
    pub fn closers(&self) -> Vec<usize> {
        let mut closers: Vec<usize> = self.blocks.iter().map(|b| *b.last().unwrap()).collect();
        closers.sort_unstable();
        closers
    }

    /// Arcs of the arc diagram: consecutive elements of each block, sorted
    /// by left endpoint. Singleton blocks contribute nothing.
    pub fn arcs(&self) -> Vec<Arc> {
        let mut arcs = Vec::new();
        for block in &self.blocks {
            for pair in block.windows(2) {
                arcs.push(Arc {
                    lo: pair[0],
                    hi: pair[1],
                });
            }
        }
        arcs.sort_unstable();
        arcs
    }

    /// Arcs of the extended diagram: the regular arcs plus a half-arc from
    /// far left into every opener and from every closer out to far right.
    pub fn extended_arcs(&self) -> Vec<GeneralizedArc> {
        extend_arcs(&self.arcs(), &self.openers(), &self.closers())
    }
}

/// Extends a regular arc list with opener and closer half-arcs.
pub(crate) fn extend_arcs(
    arcs: &[Arc],
    openers: &[usize],
    closers: &[usize],
) -> Vec<GeneralizedArc> {
    let mut extended: Vec<GeneralizedArc> =
        arcs.iter().copied().map(GeneralizedArc::full).collect();
    extended.extend(openers.iter().map(|&o| GeneralizedArc::from_left(o)));
    extended.extend(closers.iter().map(|&c| GeneralizedArc::to_right(c)));
    extended
}

fn tokenize(text: &str, multi_digit: bool) -> Result<Vec<Vec<usize>>, Error> {
    let mut blocks = Vec::new();
    for raw_block in text.split('|') {
        let raw_block = raw_block.trim();
        if raw_block.is_empty() {
            return Err(Error::EmptyBlock);
        }
        let block = if raw_block.contains(',') {
            raw_block
                .split(',')
                .map(|token| parse_element(token.trim()))
                .collect::<Result<Vec<usize>, Error>>()?
        } else if multi_digit {
            vec![parse_element(raw_block)?]
        } else {
            raw_block
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::BadToken(c.to_string()))
                })
                .collect::<Result<Vec<usize>, Error>>()?
        };
        blocks.push(block);
    }
    Ok(blocks)
}

fn parse_element(token: &str) -> Result<usize, Error> {
    token
        .parse::<usize>()
        .map_err(|_| Error::BadToken(token.to_string()))
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comma = self.n >= 10;
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (j, element) in block.iter().enumerate() {
                if j > 0 && comma {
                    write!(f, ",")?;
                }
                write!(f, "{element}")?;
            }
        }
        Ok(())
    }
}
