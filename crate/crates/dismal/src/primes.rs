//! Primes, prime counting, factorization into primes, and the template
//! machinery that transfers primality between bases.
//!
//! The multiplicative unit is the single digit b-1 (written beta), so beta
//! plays the role of 1: a prime is a number other than beta whose only
//! factorizations are beta times itself. Equivalently, n is prime iff it is a
//! pseudoprime (no factorization into two factors of length >= 2) and
//! contains the digit beta.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;

use crate::arith::{all_of_len, Num};
use crate::divisors::{divides, max_cofactor};
use crate::error::{Error, Result};

/// Pseudoprimality of a digit string (least significant digit first), valid
/// in every base larger than the largest digit. Capping candidate factor
/// digits at the largest digit of n loses nothing: pushing a factor digit
/// above the digits of n it meets never changes the product.
fn pseudoprime_digits(digits: &[u8]) -> bool {
    let k = digits.len();
    if k < 2 {
        return false;
    }
    debug_assert!(*digits.last().unwrap() > 0, "leading zero");
    let base = (digits.iter().max().unwrap() + 1).max(2);
    let n = Num::from_digits_lsb(digits.to_vec(), base).expect("digits below base");
    for r in 2..=(k + 1) / 2 {
        for p in all_of_len(base, r) {
            if divides(&p, &n) {
                return false;
            }
        }
    }
    true
}

/// No factorization into two factors that both have at least two digits.
/// Every 2-digit number qualifies; single digits do not (by convention).
pub fn is_pseudoprime(n: &Num) -> bool {
    n.len() >= 2 && pseudoprime_digits(n.digits())
}

pub fn is_prime(n: &Num) -> bool {
    n.len() >= 2 && n.contains_digit(n.base() - 1) && pseudoprime_digits(n.digits())
}

/// All primes with exactly k digits, ascending. Sieve: mark every product of
/// two factors of lengths >= 2 (lengths la + lb = k + 1), then keep unmarked
/// numbers containing beta.
pub fn primes_of_length(base: u8, k: usize) -> Result<Vec<Num>> {
    if k < 2 {
        return Ok(Vec::new());
    }
    if base == 2 {
        return sieve_binary(k);
    }
    sieve_generic(base, k)
}

fn sieve_binary(k: usize) -> Result<Vec<Num>> {
    if k > 26 {
        return Err(Error::Budget(format!("binary sieve for length {k} needs 2^{k} slots")));
    }
    let offset = 1u64 << (k - 1);
    let mut composite = vec![false; offset as usize];
    for la in 2..=(k + 1) / 2 {
        let lb = k + 1 - la;
        for p in (1u64 << (la - 1))..(1u64 << la) {
            let bits: Vec<u32> = (0..la as u32).filter(|i| p >> i & 1 == 1).collect();
            for q in (1u64 << (lb - 1))..(1u64 << lb) {
                // Base 2 product is the OR of shifted copies of q.
                let mut s = 0u64;
                for &i in &bits {
                    s |= q << i;
                }
                composite[(s - offset) as usize] = true;
            }
        }
    }
    // Every k-digit binary number contains beta = 1.
    let mut out = Vec::new();
    for (i, &c) in composite.iter().enumerate() {
        if !c {
            out.push(Num::from_u64(offset + i as u64, 2)?);
        }
    }
    Ok(out)
}

fn sieve_generic(base: u8, k: usize) -> Result<Vec<Num>> {
    let b = base as u64;
    let total = b
        .checked_pow(k as u32)
        .filter(|&t| t <= 20_000_000)
        .ok_or_else(|| Error::Budget(format!("sieve of base {base} length {k} is too large")))?;
    let offset = b.pow(k as u32 - 1);
    let mut composite = vec![false; (total - offset) as usize];
    // Digit strings of each needed length, flattened LSB-first.
    let flat = |len: usize| -> Vec<u8> {
        let mut buf = Vec::new();
        for n in all_of_len(base, len) {
            buf.extend_from_slice(n.digits());
        }
        buf
    };
    for la in 2..=(k + 1) / 2 {
        let lb = k + 1 - la;
        let pa = flat(la);
        let pb = if lb == la { pa.clone() } else { flat(lb) };
        let (ca, cb) = (pa.len() / la, pb.len() / lb);
        let mut prod = vec![0u8; k];
        for ia in 0..ca {
            let p = &pa[ia * la..ia * la + la];
            let start = if la == lb { ia } else { 0 };
            for ib in start..cb {
                let q = &pb[ib * lb..ib * lb + lb];
                prod.iter_mut().for_each(|d| *d = 0);
                for (i, &pi) in p.iter().enumerate() {
                    for (j, &qj) in q.iter().enumerate() {
                        let m = pi.min(qj);
                        if m > prod[i + j] {
                            prod[i + j] = m;
                        }
                    }
                }
                let mut v = 0u64;
                for &d in prod.iter().rev() {
                    v = v * b + d as u64;
                }
                composite[(v - offset) as usize] = true;
            }
        }
    }
    let beta = base - 1;
    let mut out = Vec::new();
    for (i, &c) in composite.iter().enumerate() {
        if !c {
            let n = Num::from_u64(offset + i as u64, base)?;
            if n.contains_digit(beta) {
                out.push(n);
            }
        }
    }
    Ok(out)
}

/// Prime count for one length, along with the count of numbers passing the
/// quick necessary conditions (contains beta; for k > 2, does not end in 0),
/// which the prime count is conjectured to approach.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiReport {
    pub base: u8,
    pub k: usize,
    pub count: u64,
    pub candidate_bound: BigUint,
}

pub fn candidate_bound(base: u8, k: usize) -> BigUint {
    if k < 2 {
        return BigUint::from(0u32);
    }
    let b = BigUint::from(base);
    let b1 = BigUint::from(base - 1);
    let b2 = BigUint::from(base - 2);
    &b1 * &b1 * b.pow(k as u32 - 2) - b2 * b1.pow(k as u32 - 2)
}

pub fn pi(base: u8, k: usize) -> Result<PiReport> {
    let count = primes_of_length(base, k)?.len() as u64;
    Ok(PiReport { base, k, count, candidate_bound: candidate_bound(base, k) })
}

/// One way of writing n as a single digit times a product of primes. The
/// empty product stands for beta, so single digits get scale = themselves.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Factorization {
    pub scale: u8,
    pub primes: Vec<Num>,
}

/// All q with p*q = n. Any such q is dominated by max_cofactor(p, n), so the
/// candidates form a box which is enumerated outright.
pub fn all_cofactors(p: &Num, n: &Num) -> Result<Vec<Num>> {
    if p.is_zero() || n.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let want_len = match n.len().checked_sub(p.len()) {
        Some(diff) => diff + 1,
        None => return Ok(Vec::new()),
    };
    let qmax = max_cofactor(p, n).expect("lengths checked");
    if qmax.len() < want_len {
        // The top position is forced to 0, so no full-length cofactor exists.
        return Ok(Vec::new());
    }
    let mut box_size = 1u64;
    for j in 0..want_len {
        box_size = box_size.saturating_mul(qmax.digit(j) as u64 + 1);
    }
    if box_size > 2_000_000 {
        return Err(Error::Budget(format!("cofactor box of {box_size} candidates")));
    }
    let mut out = Vec::new();
    let mut cur = vec![0u8; want_len];
    loop {
        if let Ok(q) = Num::from_digits_lsb(cur.clone(), n.base()) {
            if q.len() == want_len && p.mul(&q) == *n {
                out.push(q);
            }
        }
        // odometer over the box 0..=qmax[j]
        let mut j = 0;
        loop {
            if j == want_len {
                return Ok(out);
            }
            if cur[j] < qmax.digit(j) {
                cur[j] += 1;
                break;
            }
            cur[j] = 0;
            j += 1;
        }
    }
}

/// Multisets of primes whose product is n, for n containing beta. The single
/// digit beta gets the empty multiset.
fn prime_multisets(
    n: &Num,
    primes_by_len: &mut HashMap<usize, Vec<Num>>,
    memo: &mut HashMap<Num, BTreeSet<Vec<Num>>>,
) -> Result<BTreeSet<Vec<Num>>> {
    if let Some(hit) = memo.get(n) {
        return Ok(hit.clone());
    }
    let mut out: BTreeSet<Vec<Num>> = BTreeSet::new();
    if n.is_unit() {
        out.insert(Vec::new());
    } else {
        if is_prime(n) {
            out.insert(vec![n.clone()]);
        }
        for lp in 2..n.len() {
            let primes = match primes_by_len.get(&lp) {
                Some(v) => v.clone(),
                None => {
                    let v = primes_of_length(n.base(), lp)?;
                    primes_by_len.insert(lp, v.clone());
                    v
                }
            };
            for p in &primes {
                if !divides(p, n) {
                    continue;
                }
                for q in all_cofactors(p, n)? {
                    // both factors of a beta-containing number contain beta
                    debug_assert!(q.contains_digit(n.base() - 1));
                    for tail in prime_multisets(&q, primes_by_len, memo)? {
                        let mut ms = Vec::with_capacity(tail.len() + 1);
                        ms.push(p.clone());
                        ms.extend(tail);
                        ms.sort();
                        out.insert(ms);
                    }
                }
            }
        }
    }
    memo.insert(n.clone(), out.clone());
    Ok(out)
}

/// Every way of writing n as scale * (product of primes). The scale is forced
/// to be the largest digit of n; when n lacks a beta digit, the prime part
/// ranges over the "lifts" of n that raise digits equal to the scale.
pub fn factorizations(n: &Num) -> Result<Vec<Factorization>> {
    if n.is_zero() {
        return Err(Error::ZeroArgument);
    }
    if n.len() == 1 {
        return Ok(vec![Factorization { scale: n.digit(0), primes: Vec::new() }]);
    }
    let beta = n.base() - 1;
    let mut primes_by_len = HashMap::new();
    let mut memo = HashMap::new();
    let mut out: BTreeSet<Factorization> = BTreeSet::new();
    if n.contains_digit(beta) {
        for ms in prime_multisets(n, &mut primes_by_len, &mut memo)? {
            out.insert(Factorization { scale: beta, primes: ms });
        }
    } else {
        let g = n.max_digit();
        let spots: Vec<usize> =
            (0..n.len()).filter(|&i| n.digit(i) == g).collect();
        let lifts = ((beta - g) as u64 + 1).checked_pow(spots.len() as u32);
        if !lifts.is_some_and(|l| l <= 1_000_000) {
            return Err(Error::Budget(format!("{} liftable positions", spots.len())));
        }
        // raise each scale-digit position independently to anything in g..=beta
        let mut choice = vec![g; spots.len()];
        loop {
            let mut digits = n.digits().to_vec();
            for (s, &c) in spots.iter().zip(&choice) {
                digits[*s] = c;
            }
            let m = Num::from_digits_lsb(digits, n.base())?;
            if m.contains_digit(beta) {
                for ms in prime_multisets(&m, &mut primes_by_len, &mut memo)? {
                    out.insert(Factorization { scale: g, primes: ms });
                }
            }
            let mut j = 0;
            loop {
                if j == choice.len() {
                    return Ok(out.into_iter().collect());
                }
                if choice[j] < beta {
                    choice[j] += 1;
                    break;
                }
                choice[j] = g;
                j += 1;
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Distinct primes dividing n, ascending.
pub fn prime_divisors(n: &Num) -> Result<Vec<Num>> {
    if n.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let mut out = Vec::new();
    for len in 2..=n.len() {
        for p in primes_of_length(n.base(), len)? {
            if divides(&p, n) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// Dismal sum of the distinct primes dividing n. Equals n exactly when n is
/// prime.
pub fn prime_divisor_sum(n: &Num) -> Result<Num> {
    let mut acc = Num::zero(n.base())?;
    for p in prime_divisors(n)? {
        acc = acc.add(&p);
    }
    Ok(acc)
}

/// A minimal pseudoprime digit pattern: applying any nondecreasing digit map
/// to a pseudoprime yields a template (or the map collapses it), and
/// conversely anything mapping onto a template is a pseudoprime. Digits are
/// stored least significant first, like Num.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Template {
    digits: Vec<u8>,
}

impl Template {
    pub fn parse(text: &str) -> Result<Template> {
        let mut digits = Vec::new();
        for ch in text.chars() {
            let d = ch.to_digit(10).ok_or_else(|| Error::Parse(format!("bad digit {ch}")))? as u8;
            digits.push(d);
        }
        digits.reverse();
        if digits.is_empty() || *digits.last().unwrap() == 0 {
            return Err(Error::Parse(format!("not a template: {text}")));
        }
        Ok(Template { digits })
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Only digits 0 and 1, so the pattern already lives in base 2.
    pub fn is_binary(&self) -> bool {
        self.digits.iter().all(|&d| d <= 1)
    }

    /// Most significant digit first.
    pub fn text(&self) -> String {
        self.digits.iter().rev().map(|d| char::from(b'0' + d)).collect()
    }

    fn msb(&self) -> Vec<u8> {
        self.digits.iter().rev().copied().collect()
    }
}

impl std::fmt::Display for Template {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.text())
    }
}

// Templates are ranked by (number of distinct digits, digits read from the
// most significant end); the minimal pattern under this key is the template.
fn template_key(digits: &[u8]) -> (usize, Vec<u8>) {
    let distinct: BTreeSet<u8> = digits.iter().copied().collect();
    (distinct.len(), digits.iter().rev().copied().collect())
}

fn reducible(digits: &[u8], alphabet: u8) -> bool {
    let dist: Vec<u8> = digits.iter().copied().collect::<BTreeSet<u8>>().into_iter().collect();
    let key = template_key(digits);
    // nondecreasing assignments of alphabet digits to the distinct digits
    let mut vals = vec![0u8; dist.len()];
    loop {
        let image: Vec<u8> = digits
            .iter()
            .map(|d| vals[dist.binary_search(d).unwrap()])
            .collect();
        if image != digits && *image.last().unwrap() != 0 {
            let ikey = template_key(&image);
            if ikey < key && pseudoprime_digits(&image) {
                return true;
            }
        }
        // next nondecreasing tuple over 0..alphabet
        let mut j = vals.len();
        loop {
            if j == 0 {
                return false;
            }
            j -= 1;
            if vals[j] + 1 < alphabet {
                let v = vals[j] + 1;
                vals[j..].iter_mut().for_each(|x| *x = v);
                break;
            }
        }
    }
}

/// All templates of length k, in increasing digit-string order. Digits never
/// need to exceed max(2, k-1) values.
pub fn templates(k: usize) -> Vec<Template> {
    if k < 2 {
        return Vec::new();
    }
    let alphabet = usize::max(2, k - 1) as u8;
    let mut out = Vec::new();
    for cand in all_of_len(alphabet, k) {
        if k > 2 && cand.digit(0) == 0 {
            continue;
        }
        if !pseudoprime_digits(cand.digits()) {
            continue;
        }
        if reducible(cand.digits(), alphabet) {
            continue;
        }
        out.push(Template { digits: cand.digits().to_vec() });
    }
    out
}

/// Templates of length k with reversals folded out: of a template and its
/// reversal, only the numerically smaller pattern is kept.
pub fn reduced_templates(k: usize) -> Vec<Template> {
    let mut keep: BTreeSet<Vec<u8>> = BTreeSet::new();
    for t in templates(k) {
        let fwd = t.msb();
        let rev: Vec<u8> = fwd.iter().rev().copied().collect();
        keep.insert(fwd.min(rev));
    }
    keep.into_iter()
        .map(|msb| Template { digits: msb.into_iter().rev().collect() })
        .collect()
}

/// Whether some nondecreasing digit map sends n onto the pattern t. True iff
/// whenever t has a strictly smaller digit at position u than at v, n does
/// too; n then inherits pseudoprimality from t.
pub fn promotes(n: &Num, t: &Template) -> bool {
    if n.len() != t.digits.len() {
        return false;
    }
    // For each template digit class, the n-digits it covers must sit in
    // disjoint increasing ranges.
    let mut span: HashMap<u8, (u8, u8)> = HashMap::new();
    for (i, &td) in t.digits.iter().enumerate() {
        let nd = n.digit(i);
        let e = span.entry(td).or_insert((nd, nd));
        e.0 = e.0.min(nd);
        e.1 = e.1.max(nd);
    }
    let mut classes: Vec<(u8, (u8, u8))> = span.into_iter().collect();
    classes.sort();
    classes.windows(2).all(|w| w[0].1 .1 < w[1].1 .0)
}

/// Every base b number promoting from t.
pub fn promotions(t: &Template, base: u8) -> Result<Vec<Num>> {
    let k = t.len();
    let total = (base as u64).checked_pow(k as u32).filter(|&c| c <= 2_000_000);
    if total.is_none() {
        return Err(Error::Budget(format!("promotion scan of base {base} length {k}")));
    }
    Ok(all_of_len(base, k).filter(|n| promotes(n, t)).collect())
}

/// How many k-digit base b primes promote from some length-k template
/// (optionally only binary templates). Promotion certifies pseudoprimality,
/// so these counts are lower bounds for the prime count; with all templates
/// they match it exactly as far as anyone has checked.
pub fn promoted_prime_count(base: u8, k: usize, binary_only: bool) -> Result<u64> {
    let ts: Vec<Template> =
        templates(k).into_iter().filter(|t| !binary_only || t.is_binary()).collect();
    let total = (base as u64).checked_pow(k as u32).filter(|&c| c <= 20_000_000);
    if total.is_none() {
        return Err(Error::Budget(format!("promotion count of base {base} length {k}")));
    }
    let beta = base - 1;
    let mut count = 0u64;
    for n in all_of_len(base, k) {
        if !n.contains_digit(beta) {
            continue;
        }
        // a multi-digit pattern ending in 0 is divisible by 10, so no
        // template ends in its lowest digit class and n may skip the scan
        if k > 2 && n.digit(0) == 0 {
            continue;
        }
        if ts.iter().any(|t| promotes(&n, t)) {
            count += 1;
        }
    }
    Ok(count)
}
