//! Order-theoretic structure: the divisibility poset with its rank function,
//! meets and joins, the totient, and additive partitions.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::arith::{all_of_len, Num};
use crate::divisors::{divides, divisor_list, BulkDivisors};
use crate::error::{Error, Result};

/// Divisors shared by a and b, ascending.
pub fn common_divisors(a: &Num, b: &Num) -> Result<Vec<Num>> {
    if a.base() != b.base() {
        return Err(Error::MixedBase(a.base(), b.base()));
    }
    let da = divisor_list(a)?.divisors;
    let db = divisor_list(b)?.divisors;
    Ok(da.into_iter().filter(|d| db.contains(d)).collect())
}

/// Only the unit beta in common.
pub fn is_rel_prime(a: &Num, b: &Num) -> Result<bool> {
    let unit = Num::unit(a.base())?;
    Ok(common_divisors(a, b)? == vec![unit])
}

/// Greatest common divisor under the divisibility order: the common divisor
/// every other common divisor divides. The common divisors are computed
/// exhaustively, so None is a proof of absence, not a search failure.
pub fn meet(a: &Num, b: &Num) -> Result<Option<Num>> {
    let cd = common_divisors(a, b)?;
    for m in cd.iter().rev() {
        if cd.iter().all(|d| divides(d, m)) {
            return Ok(Some(m.clone()));
        }
    }
    Ok(None)
}

/// Result of a least-common-multiple search. Multiples are only enumerated up
/// to a length bound, which leaves three honest answers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JoinOutcome {
    /// A common multiple dividing every common multiple found within the
    /// bound. Any join that exists must equal it.
    LeastWithinBound(Num),
    /// No join exists at any length: a join would divide every common
    /// multiple, hence be one of the bounded ones and divide all of them,
    /// and no bounded multiple does. Carries incomparable minimal multiples
    /// as evidence.
    ProvenAbsent(Vec<Num>),
    /// No common multiple within the bound at all; nothing can be concluded.
    UnknownWithinBound,
}

/// Search for the least common multiple among multiples of length <= max_len.
pub fn join(a: &Num, b: &Num, max_len: usize) -> Result<JoinOutcome> {
    if a.base() != b.base() {
        return Err(Error::MixedBase(a.base(), b.base()));
    }
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let base = a.base();
    let budget = (base as u64).checked_pow(max_len as u32).filter(|&c| c <= 20_000_000);
    if budget.is_none() {
        return Err(Error::Budget(format!("join scan of base {base} to length {max_len}")));
    }
    let mut multiples = Vec::new();
    for len in a.len().max(b.len())..=max_len {
        for m in all_of_len(base, len) {
            if divides(a, &m) && divides(b, &m) {
                multiples.push(m);
            }
        }
    }
    if multiples.is_empty() {
        return Ok(JoinOutcome::UnknownWithinBound);
    }
    for m0 in &multiples {
        if multiples.iter().all(|m| divides(m0, m)) {
            return Ok(JoinOutcome::LeastWithinBound(m0.clone()));
        }
    }
    let minimal: Vec<Num> = multiples
        .iter()
        .filter(|m| multiples.iter().all(|d| d == *m || !divides(d, m)))
        .take(4)
        .cloned()
        .collect();
    Ok(JoinOutcome::ProvenAbsent(minimal))
}

/// Totient: how many m with 1 <= m < base^len(n) share no divisor with n
/// beyond the unit beta.
pub fn phi(n: &Num) -> Result<u64> {
    if n.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let base = n.base();
    let k = n.len();
    let budget = (base as u64).checked_pow(k as u32).filter(|&c| c <= 2_000_000);
    if budget.is_none() {
        return Err(Error::Budget(format!("totient scan of base {base} length {k}")));
    }
    let unit = Num::unit(base)?;
    let divs: Vec<Num> =
        divisor_list(n)?.divisors.into_iter().filter(|d| *d != unit).collect();
    let mut count = 0u64;
    for len in 1..=k {
        for m in all_of_len(base, len) {
            if !divs.iter().any(|d| divides(d, &m)) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// The divisibility poset on all nonzero numbers of length <= bound, with
/// rank(n) = length of the longest divisor chain below n. The unit beta is
/// the unique rank-0 element; rank 1 holds the primes plus, in bases > 2,
/// the digit beta - 1 (whose only proper divisor is beta).
pub struct PosetView {
    base: u8,
    bound: usize,
    ranks: Vec<u32>,
}

impl PosetView {
    pub fn build(base: u8, bound: usize) -> Result<PosetView> {
        let bulk = BulkDivisors::build(base, bound)?;
        let total = (bulk.max_value() + 1) as usize;
        let mut ranks: Vec<Option<u32>> = vec![None; total];
        fn rank_of(v: u64, bulk: &BulkDivisors, ranks: &mut Vec<Option<u32>>) -> u32 {
            if let Some(r) = ranks[v as usize] {
                return r;
            }
            let mut best = 0;
            // chains cannot cycle: proper divisibility is strict
            for &d in bulk.divisors(v) {
                if d != v {
                    best = best.max(1 + rank_of(d, bulk, ranks));
                }
            }
            ranks[v as usize] = Some(best);
            best
        }
        for v in 1..total as u64 {
            rank_of(v, &bulk, &mut ranks);
        }
        Ok(PosetView {
            base,
            bound,
            ranks: ranks.into_iter().map(|r| r.unwrap_or(0)).collect(),
        })
    }

    pub fn base(&self) -> u8 {
        self.base
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn rank(&self, n: &Num) -> Result<u32> {
        if n.base() != self.base {
            return Err(Error::MixedBase(n.base(), self.base));
        }
        if n.is_zero() {
            return Err(Error::ZeroArgument);
        }
        if n.len() > self.bound {
            return Err(Error::Budget(format!(
                "{n} exceeds the view bound of {} digits",
                self.bound
            )));
        }
        Ok(self.ranks[n.to_u64()? as usize])
    }

    /// All values of a given rank, ascending.
    pub fn with_rank(&self, rank: u32) -> Vec<Num> {
        (1..self.ranks.len() as u64)
            .filter(|&v| self.ranks[v as usize] == rank)
            .map(|v| Num::from_u64(v, self.base).expect("in range"))
            .collect()
    }
}

/// Number of sets of distinct nonzero numbers dominated by n whose dismal sum
/// is n. Evaluated by inclusion-exclusion over digit positions:
/// p(n) = (1/2) sum over S of (-1)^|S| 2^(prod (n_i + eps_i)) with eps_i = 0
/// on S and 1 off S. Exact in big integers.
pub fn partition_count(n: &Num) -> Result<BigUint> {
    let k = n.len();
    let mut full = 1u64;
    for &d in n.digits() {
        full = full.saturating_mul(d as u64 + 1);
    }
    if k > 24 || full > 4096 {
        return Err(Error::Budget(format!("partition exponent {full} with {k} digits")));
    }
    let mut acc = BigInt::zero();
    for mask in 0u32..1 << k {
        let mut exp = 1u64;
        for (i, &d) in n.digits().iter().enumerate() {
            exp *= d as u64 + u64::from(mask >> i & 1 == 0);
        }
        let term = BigInt::one() << exp;
        if mask.count_ones() % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    debug_assert!(acc.is_positive() && (&acc % 2) == BigInt::zero());
    (acc >> 1u32).to_biguint().ok_or(Error::Overflow)
}

/// The same count by exhaustive enumeration: list every nonzero x dominated
/// by n and count subsets with dismal sum n. Usable when the box
/// prod (n_i + 1) has at most 21 cells.
pub fn partition_count_bruteforce(n: &Num) -> Result<u64> {
    let mut box_size = 1u64;
    for &d in n.digits() {
        box_size = box_size.saturating_mul(d as u64 + 1);
    }
    if box_size > 21 {
        return Err(Error::Budget(format!("dominated box of {box_size} numbers")));
    }
    // enumerate the dominated digit vectors, dropping the zero vector
    let mut doms: Vec<Vec<u8>> = Vec::new();
    let mut cur = vec![0u8; n.len()];
    'outer: loop {
        if cur.iter().any(|&d| d > 0) {
            doms.push(cur.clone());
        }
        let mut i = 0;
        loop {
            if i == cur.len() {
                break 'outer;
            }
            if cur[i] < n.digit(i) {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
    let mut count = 0u64;
    for mask in 0u32..1 << doms.len() {
        let mut sum = vec![0u8; n.len()];
        for (j, x) in doms.iter().enumerate() {
            if mask >> j & 1 == 1 {
                for (s, &d) in sum.iter_mut().zip(x) {
                    *s = (*s).max(d);
                }
            }
        }
        if sum == n.digits() {
            count += 1;
        }
    }
    Ok(count)
}

/// Number of covers of a labeled w-set by distinct nonempty subsets,
/// (1/2) sum of (-1)^(w-i) C(w,i) 2^(2^i); coincides with the partition
/// count of the base 2 repunit of length w.
pub fn setcover_count(w: usize) -> Result<BigUint> {
    if w == 0 || w > 12 {
        return Err(Error::Budget(format!("setcover_count for w = {w}")));
    }
    let mut acc = BigInt::zero();
    let mut binom = BigInt::one();
    for i in 0..=w {
        // binom = C(w, i)
        let term = &binom * (BigInt::one() << (1u64 << i));
        if (w - i) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        binom = binom * BigInt::from(w - i) / BigInt::from(i + 1);
    }
    debug_assert!(acc.is_positive() && (&acc % 2) == BigInt::zero());
    (acc >> 1u32).to_biguint().ok_or(Error::Overflow)
}

/// Numbers with exactly one partition (the trivial one) are 0, 1, 10, 100,
/// ...; everything else is the dismal sum of numbers strictly dominated
/// by it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdditiveClass {
    AdditivePrime,
    AdditivePerfect,
}

pub fn additive_classification(n: &Num) -> AdditiveClass {
    let ones = n.digits().iter().filter(|&&d| d == 1).count();
    let nonzero = n.digits().iter().filter(|&&d| d > 0).count();
    if nonzero == 0 || (nonzero == 1 && ones == 1) {
        AdditiveClass::AdditivePrime
    } else {
        AdditiveClass::AdditivePerfect
    }
}
