//! Exhaustive ground truth for small graphs.
//!
//! Both searches work on 64-bit vertex masks, so the hard ceiling on the
//! order is 64 regardless of the configured limit.

use thiserror::Error;

use crate::certificate::{Method, RemovalCertificate};
use crate::dp::Value;
use crate::graph::Graph;

pub const DEFAULT_LIMIT: usize = 18;
const MASK_BITS: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph of order {n} exceeds the exhaustive-search limit {limit}")]
    OrderExceedsLimit { n: usize, limit: usize },
    #[error("k must be at least 2, got {0}")]
    InvalidK(usize),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(usize),
}

struct Masks {
    adj: Vec<u64>,
    full: u64,
}

impl Masks {
    fn new(g: &Graph, limit: usize) -> Result<Self, OracleError> {
        let n = g.order();
        if n > limit.min(MASK_BITS) {
            return Err(OracleError::OrderExceedsLimit { n, limit: limit.min(MASK_BITS) });
        }
        let adj = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | 1 << w))
            .collect();
        let full = if n == MASK_BITS { u64::MAX } else { (1u64 << n) - 1 };
        Ok(Masks { adj, full })
    }

    #[inline]
    fn degree_in(&self, v: usize, keep: u64) -> u32 {
        (self.adj[v] & keep).count_ones()
    }

    /// Whether the subgraph induced by `keep` satisfies the f_k condition.
    fn satisfies(&self, keep: u64, k: u32) -> bool {
        if keep.count_ones() < k {
            return true;
        }
        let (mut top, mut count) = (0, 0);
        let mut rest = keep;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = self.degree_in(v, keep);
            if d > top {
                top = d;
                count = 1;
            } else if d == top {
                count += 1;
            }
        }
        count >= k
    }
}

/// Advances `idx` to the next `r`-combination of `0..n` in lexicographic order.
pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let r = idx.len();
    let Some(i) = (0..r).rev().find(|&i| idx[i] < n - r + i) else {
        return false;
    };
    idx[i] += 1;
    for j in i + 1..r {
        idx[j] = idx[j - 1] + 1;
    }
    true
}

/// Number of deletion sets the search may visit, for cost warnings.
pub fn search_space(n: usize) -> f64 {
    2f64.powi(n as i32)
}

/// `f_k(G)` by trying deletion sets in order of size, then lexicographically.
/// The certificate records the first minimizer.
pub fn brute_force_fk(
    g: &Graph,
    k: usize,
    limit: usize,
) -> Result<(usize, RemovalCertificate), OracleError> {
    if k < 2 {
        return Err(OracleError::InvalidK(k));
    }
    let masks = Masks::new(g, limit)?;
    let n = g.order();
    let kk = k as u32;
    for size in 0..=n {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let removed = idx.iter().fold(0u64, |acc, &v| acc | 1 << v);
            if masks.satisfies(masks.full & !removed, kk) {
                let cert = RemovalCertificate::build(g, idx.iter().copied(), k, Method::Brute)
                    .expect("mask search and certificate builder agree");
                return Ok((size, cert));
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    unreachable!("deleting every vertex always satisfies the condition")
}

/// Largest induced subgraph containing `specials`, with maximum degree at
/// most `delta` and every special vertex at degree exactly `delta`.
pub fn brute_force_subforest(
    g: &Graph,
    specials: &[usize],
    delta: usize,
    limit: usize,
) -> Result<Value, OracleError> {
    let masks = Masks::new(g, limit)?;
    let mut must = 0u64;
    for &s in specials {
        if s >= g.order() {
            return Err(OracleError::UnknownVertex(s));
        }
        must |= 1 << s;
    }
    let free = masks.full & !must;
    let delta = delta as u32;
    let mut best = Value::NegInf;
    let mut sub = free;
    loop {
        let keep = must | sub;
        let size = keep.count_ones() as usize;
        if Value::Finite(size) > best {
            let mut ok = true;
            let mut rest = keep;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let d = masks.degree_in(v, keep);
                if d > delta || (must >> v & 1 == 1 && d != delta) {
                    ok = false;
                    break;
                }
            }
            if ok {
                best = Value::Finite(size);
            }
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & free;
    }
    Ok(best)
}
