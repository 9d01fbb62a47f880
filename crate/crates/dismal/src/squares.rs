//! Squares under the max-min product: per-length censuses, square roots,
//! and the count of roots of the all-ones numbers in base 2.

use std::collections::HashMap;

use crate::arith::{all_of_len, Num};
use crate::error::{Error, Result};

pub fn square(n: &Num) -> Num {
    n.mul(n)
}

/// Distinct squares arising from roots of length (L+1)/2, with the number
/// of roots behind each. L = 1 also admits the root 0.
pub struct SquareCensus {
    pub base: u8,
    pub length: usize,
    pub multiplicity: HashMap<Num, u32>,
}

impl SquareCensus {
    pub fn distinct(&self) -> usize {
        self.multiplicity.len()
    }

    pub fn root_total(&self) -> u64 {
        self.multiplicity.values().map(|&m| m as u64).sum()
    }

    /// Squares with more than one root, ascending by value.
    pub fn collisions(&self) -> Vec<(Num, u32)> {
        let mut out: Vec<(Num, u32)> =
            self.multiplicity.iter().filter(|(_, &m)| m > 1).map(|(s, &m)| (s.clone(), m)).collect();
        out.sort_by(|a, b| a.0.cmp_value(&b.0));
        out
    }
}

pub fn square_census(base: u8, length: usize) -> Result<SquareCensus> {
    if length % 2 == 0 {
        return Err(Error::Parse(format!("census length {length} must be odd")));
    }
    let m = (length + 1) / 2;
    let budget = (base as u64).checked_pow(m as u32).filter(|&c| c <= 4_000_000);
    if budget.is_none() {
        return Err(Error::Budget(format!("census of base {base} root length {m}")));
    }
    let mut multiplicity = HashMap::new();
    if m == 1 {
        *multiplicity.entry(Num::zero(base)?).or_insert(0) += 1;
    }
    for root in all_of_len(base, m) {
        *multiplicity.entry(square(&root)).or_insert(0) += 1;
    }
    Ok(SquareCensus { base, length, multiplicity })
}

/// All p with p squared = n, ascending, plus the root dominating every other
/// when one exists. Root lengths are pinned by the square's length, so the
/// enumeration is complete.
pub struct RootReport {
    pub roots: Vec<Num>,
    pub dominating: Option<Num>,
}

pub fn roots(n: &Num) -> Result<RootReport> {
    let mut roots = Vec::new();
    if n.is_zero() {
        roots.push(Num::zero(n.base())?);
    } else if n.len() % 2 == 1 {
        let m = (n.len() + 1) / 2;
        let budget = (n.base() as u64).checked_pow(m as u32).filter(|&c| c <= 4_000_000);
        if budget.is_none() {
            return Err(Error::Budget(format!("root search of length {m}")));
        }
        for p in all_of_len(n.base(), m) {
            if &square(&p) == n {
                roots.push(p);
            }
        }
    }
    let dominating = roots
        .iter()
        .find(|cand| roots.iter().all(|r| r.dominated_by(cand)))
        .cloned();
    Ok(RootReport { roots, dominating })
}

pub fn dominating_root(n: &Num) -> Result<Option<Num>> {
    Ok(roots(n)?.dominating)
}

/// Number of square roots of the base-2 all-ones number of length 2k+1.
/// A root is a length-(k+1) binary number whose support A holds 0 and k
/// with A+A covering 0..2k; the search walks positions 1..k-1, failing a
/// branch as soon as a column of the product is stuck at 0.
pub fn allones_sqrt_count(k: usize) -> Result<u64> {
    if k > 34 {
        return Err(Error::Budget(format!("root DFS for k = {k}")));
    }
    if k == 0 {
        return Ok(1);
    }
    let full: u128 = (1 << (2 * k + 1)) - 1;
    let start: u64 = 1 | 1 << k;
    let covered: u128 = 1 | 1 << k | 1 << (2 * k);
    fn walk(t: usize, mask: u64, covered: u128, k: usize, full: u128) -> u64 {
        if t == k {
            return u64::from(covered == full);
        }
        // column t is fixed once position t is decided
        let mut total = 0;
        let with = covered | (mask as u128 | 1 << t) << t;
        if with >> t & 1 == 1 {
            total += walk(t + 1, mask | 1 << t, with, k, full);
        }
        if covered >> t & 1 == 1 {
            total += walk(t + 1, mask, covered, k, full);
        }
        total
    }
    Ok(walk(1, start, covered, k, full))
}
