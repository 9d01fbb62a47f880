//! Divisibility: p divides n when p*q = n for some q. There is no division
//! algorithm, so everything here rests on one fact: among all candidate
//! cofactors of p there is a digitwise-largest one, and p divides n exactly
//! when that candidate works.

use std::collections::BTreeSet;

use crate::arith::{all_of_len, Num};
use crate::error::{Error, Result};

/// The digitwise-largest q that could possibly satisfy p*q = n.
///
/// Position j of the candidate is min over i of n[i+j], restricted to the i
/// where p[i] > n[i+j]; positions with no such i are free and get b-1. Every
/// actual cofactor is dominated by this one, and raising any digit of a
/// cofactor keeps it a cofactor, so p | n iff p * max_cofactor(p,n) = n.
///
/// Returns None when p is longer than n, or either argument is zero.
pub fn max_cofactor(p: &Num, n: &Num) -> Option<Num> {
    if p.base() != n.base() || p.is_zero() || n.is_zero() || p.len() > n.len() {
        return None;
    }
    let beta = p.base() - 1;
    let qlen = n.len() - p.len() + 1;
    let mut q = vec![beta; qlen];
    for (j, qj) in q.iter_mut().enumerate() {
        for i in 0..p.len() {
            let nd = n.digit(i + j);
            if p.digit(i) > nd && nd < *qj {
                *qj = nd;
            }
        }
    }
    Some(Num::from_digits_lsb(q, p.base()).expect("digits below base"))
}

/// Whether p*q = n for some q. Zero divides only zero; zero is divisible by
/// everything (q = 0).
pub fn divides(p: &Num, n: &Num) -> bool {
    assert_eq!(p.base(), n.base(), "mixed bases");
    if n.is_zero() {
        return true;
    }
    if p.is_zero() {
        return false;
    }
    match max_cofactor(p, n) {
        Some(q) => p.mul(&q) == *n,
        None => false,
    }
}

/// Divisors of n in increasing order, with their count and dismal sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorReport {
    pub n: Num,
    pub divisors: Vec<Num>,
    pub sigma: Num,
}

impl DivisorReport {
    pub fn count(&self) -> usize {
        self.divisors.len()
    }
}

/// Every divisor of n, by trying all numbers of length 1..=len(n).
///
/// Cost is on the order of base^len(n); callers with large n should build a
/// `BulkDivisors` sweep instead.
pub fn divisor_list(n: &Num) -> Result<DivisorReport> {
    if n.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let mut divisors = Vec::new();
    for len in 1..=n.len() {
        for p in all_of_len(n.base(), len) {
            if divides(&p, n) {
                divisors.push(p);
            }
        }
    }
    let sigma = dismal_sum(&divisors, n.base());
    Ok(DivisorReport { n: n.clone(), divisors, sigma })
}

fn dismal_sum(terms: &[Num], base: u8) -> Num {
    let mut acc = Num::zero(base).expect("valid base");
    for t in terms {
        acc = acc.add(t);
    }
    acc
}

/// Number of divisors of n.
pub fn d(n: &Num) -> Result<usize> {
    Ok(divisor_list(n)?.count())
}

/// Dismal sum of the divisors of n.
pub fn sigma(n: &Num) -> Result<Num> {
    Ok(divisor_list(n)?.sigma)
}

/// Where sigma(n) lands. It always satisfies n <= sigma(n) <= the all-(b-1)
/// number of the same length; the endpoints are the interesting cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaClass {
    /// sigma(n) = n, which happens exactly when n ends in the digit b-1.
    FixedPoint,
    /// sigma(n) is all (b-1)s, the maximum for its length.
    AllOnesMax,
    Other,
}

pub fn classify_sigma(n: &Num) -> Result<SigmaClass> {
    let s = sigma(n)?;
    if s == *n {
        return Ok(SigmaClass::FixedPoint);
    }
    let beta = n.base() - 1;
    if s.len() == n.len() && s.digits().iter().all(|&d| d == beta) {
        return Ok(SigmaClass::AllOnesMax);
    }
    Ok(SigmaClass::Other)
}

/// Whether sigma_3(n) = 2 *_3 n, i.e. n is perfect in base 3. Since 2 is the
/// base-3 multiplicative unit this is the same as sigma_3(n) = n.
pub fn base3_perfect(n: &Num) -> Result<bool> {
    if n.base() != 3 {
        return Err(Error::Parse(format!("base3_perfect needs base 3, got {}", n.base())));
    }
    let two = Num::from_u64(2, 3)?;
    Ok(sigma(n)? == two.mul(n))
}

/// Divisor sets for every value below base^max_len at once, built by sweeping
/// all products p*q instead of testing divisibility value by value. This is
/// the workhorse for range scans and doubles as an independent check on
/// `divides`, since it never calls it.
pub struct BulkDivisors {
    base: u8,
    max_len: usize,
    // sets[v] lists the divisors of v as u64 values, sorted. Index 0 unused.
    sets: Vec<Vec<u64>>,
}

impl BulkDivisors {
    /// Covers every n with 1 <= len(n) <= max_len. Memory and time are about
    /// base^max_len entries, so keep base^max_len within ~10^7.
    pub fn build(base: u8, max_len: usize) -> Result<BulkDivisors> {
        let total = (base as u64).checked_pow(max_len as u32).ok_or(Error::Overflow)?;
        if total > 20_000_000 {
            return Err(Error::Budget(format!(
                "bulk sweep of base {base} up to length {max_len} needs {total} slots"
            )));
        }
        let mut sets: Vec<Vec<u64>> = vec![Vec::new(); total as usize];
        // Numbers of each length, paired with their values.
        let mut by_len: Vec<Vec<(Num, u64)>> = Vec::with_capacity(max_len + 1);
        by_len.push(Vec::new());
        for len in 1..=max_len {
            let nums: Vec<(Num, u64)> = all_of_len(base, len)
                .map(|n| {
                    let v = n.to_u64().expect("bounded by budget");
                    (n, v)
                })
                .collect();
            by_len.push(nums);
        }
        for la in 1..=max_len {
            for lb in la..=max_len {
                if la + lb - 1 > max_len {
                    break;
                }
                for (p, pv) in &by_len[la] {
                    for (q, qv) in &by_len[lb] {
                        if la == lb && qv < pv {
                            continue;
                        }
                        let prod = p.mul(q).to_u64().expect("product length <= max_len");
                        let set = &mut sets[prod as usize];
                        set.push(*pv);
                        set.push(*qv);
                    }
                }
            }
        }
        for set in &mut sets {
            set.sort_unstable();
            set.dedup();
        }
        Ok(BulkDivisors { base, max_len, sets })
    }

    pub fn base(&self) -> u8 {
        self.base
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// Largest value covered by the sweep.
    pub fn max_value(&self) -> u64 {
        self.sets.len() as u64 - 1
    }

    /// Sorted divisor values of v. Panics if v = 0 or out of range.
    pub fn divisors(&self, v: u64) -> &[u64] {
        assert!(v > 0 && (v as usize) < self.sets.len(), "value out of sweep range");
        &self.sets[v as usize]
    }

    pub fn d(&self, v: u64) -> usize {
        self.divisors(v).len()
    }

    pub fn sigma(&self, v: u64) -> u64 {
        let mut acc = Num::zero(self.base).expect("valid base");
        for &dv in self.divisors(v) {
            acc = acc.add(&Num::from_u64(dv, self.base).expect("value in range"));
        }
        acc.to_u64().expect("sigma no longer than n")
    }

    /// Distinct divisor values across a whole range, for intersection work.
    pub fn divisor_set(&self, v: u64) -> BTreeSet<u64> {
        self.divisors(v).iter().copied().collect()
    }
}
