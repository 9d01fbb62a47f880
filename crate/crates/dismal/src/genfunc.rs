//! Divisor counts of binary numbers near a power of two, their rational
//! generating functions, and the composition-counting triangle behind the
//! divisors of repunits.
//!
//! Everything here is exact: series coefficients are big integers because the
//! divisor counts grow like 2^k/k.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::Num;
use crate::error::{Error, Result};

/// Coefficients 0..n_terms of num(z)/den(z) as power series, den[0] = 1.
fn series_quotient(num: &[i64], den: &[i64], n_terms: usize) -> Vec<BigInt> {
    assert_eq!(den.first(), Some(&1), "denominator must start with 1");
    let mut out: Vec<BigInt> = Vec::with_capacity(n_terms);
    for k in 0..n_terms {
        let mut a = BigInt::from(*num.get(k).unwrap_or(&0));
        for j in 1..den.len().min(k + 1) {
            a -= den[j] * &out[k - j];
        }
        out.push(a);
    }
    out
}

fn unsigned(series: Vec<BigInt>) -> Vec<BigUint> {
    series
        .into_iter()
        .map(|a| {
            debug_assert!(!a.is_negative());
            a.to_biguint().expect("nonnegative coefficient")
        })
        .collect()
}

// Shared denominator for the D and M series of parameter l >= 3:
// 1 - (z + z^2 + ... + z^(l-2) + z^l + z^(l+1)), i.e. the run of powers with
// z^(l-1) skipped.
fn dm_denominator(l: usize) -> Vec<i64> {
    let mut den = vec![0i64; l + 2];
    den[0] = 1;
    for (j, d) in den.iter_mut().enumerate().skip(1) {
        if j != l - 1 {
            *d = -1;
        }
    }
    den
}

/// Counts of binary strings x_1..x_n with x_n = 1 avoiding the substring
/// patterns 0^l and 0^(l-2)10 and not ending in 0^(l-2)1; term n = 0 is 1.
/// Generating function 1/(1 - (z + ... + z^(l-2) + z^l + z^(l+1))), l >= 3.
pub fn d_series(l: usize, n_terms: usize) -> Result<Vec<BigUint>> {
    if l < 3 {
        return Err(Error::Parse(format!("d_series needs l >= 3, got {l}")));
    }
    Ok(unsigned(series_quotient(&[1], &dm_denominator(l), n_terms)))
}

/// Coefficients of M^(l)(z) = z(1-z)/(1 - (z + ... + z^(l-2) + z^l + z^(l+1)))
/// for l >= 3; M^(1) = z + z^3/(1-z); M^(2) = 0. Ties divisor counts of
/// 2^k - 3 to the D strings: M_h^(l) counts the h-digit binary p with
/// p * (2^l - 3 pattern) = 2^(h+l-1) - 3 pattern.
pub fn m_series(l: usize, n_terms: usize) -> Result<Vec<BigUint>> {
    if l == 0 {
        return Err(Error::Parse("m_series needs l >= 1".into()));
    }
    if l == 1 {
        // 1, 0, 1, 1, 1, ... from h = 1
        let mut out = vec![BigUint::from(0u32); n_terms];
        if n_terms > 1 {
            out[1] = BigUint::one();
        }
        for a in out.iter_mut().skip(3) {
            *a = BigUint::one();
        }
        return Ok(out);
    }
    if l == 2 {
        return Ok(vec![BigUint::from(0u32); n_terms]);
    }
    Ok(unsigned(series_quotient(&[0, 1, -1], &dm_denominator(l), n_terms)))
}

/// M^(3) in closed form via Fibonacci numbers with F(-1) = 1, F(0) = 0:
/// F((h-2)/2) F(h/2) for even h, F((h-3)/2) F((h+1)/2) for odd h.
pub fn m3_closed_form(h: usize) -> BigUint {
    let fib = |i: i64| -> BigUint {
        // F(-1) = 1, F(0) = 0, F(1) = 1, ...
        if i <= -1 {
            return BigUint::one();
        }
        let (mut a, mut b) = (BigUint::zero(), BigUint::one());
        for _ in 0..i {
            let c = &a + &b;
            a = b;
            b = c;
        }
        a
    };
    let h = h as i64;
    if h % 2 == 0 {
        fib((h - 2) / 2) * fib(h / 2)
    } else {
        fib((h - 3) / 2) * fib((h + 1) / 2)
    }
}

/// M in terms of D: M_h = D_(h-3) + ... + D_(h-l+1) + D_(h-l-1) + D_(h-l-2),
/// valid once h >= l + 2.
pub fn m_from_d(l: usize, h: usize) -> Result<BigUint> {
    if l < 3 || h < l + 2 {
        return Err(Error::Parse("m_from_d needs l >= 3 and h >= l + 2".into()));
    }
    let d = d_series(l, h)?;
    let mut acc = BigUint::zero();
    for i in (h - l + 1..=h - 3).chain([h - l - 1, h - l - 2]) {
        acc += &d[i];
    }
    Ok(acc)
}

/// Divisor counts of the all-ones binary numbers: term k is d_2(2^k - 1),
/// from the generating function sum over l >= 1 of z^l/(1 - (z + ... + z^l)).
/// Term 0 is 0.
pub fn repunit_divisor_series(n_terms: usize) -> Vec<BigUint> {
    let mut out = vec![BigInt::zero(); n_terms];
    for l in 1..n_terms {
        let mut den = vec![-1i64; l + 1];
        den[0] = 1;
        let mut num = vec![0i64; l + 1];
        num[l] = 1;
        let term = series_quotient(&num, &den, n_terms);
        for (o, t) in out.iter_mut().zip(term) {
            *o += t;
        }
    }
    unsigned(out)
}

/// Divisor counts of the binary numbers 2^k - 3 (pattern 1...101):
/// term k is the window sum of the M series, d_2(2^k - 3) =
/// sum of M^(l)_(k-l+1) over l = 1..k, giving 1, 0, 2, 2, 2, 4, 6, 10, ...
/// from k = 1.
pub fn near_repunit_divisor_series(n_terms: usize) -> Result<Vec<BigUint>> {
    let mut out = vec![BigUint::zero(); n_terms];
    for l in 1..n_terms {
        let m = m_series(l, n_terms)?;
        for k in l..n_terms {
            out[k] += &m[k - l + 1];
        }
    }
    Ok(out)
}

/// gamma(k, t, m): compositions of k into exactly t parts with first part m
/// and every later part between 1 and m.
pub fn gamma(k: usize, t: usize, m: usize) -> BigUint {
    fn go(k: usize, t: usize, m: usize, memo: &mut HashMap<(usize, usize, usize), BigUint>) -> BigUint {
        if t == 0 || m == 0 || k == 0 {
            return BigUint::zero();
        }
        if t == 1 {
            return if k == m { BigUint::one() } else { BigUint::zero() };
        }
        if let Some(hit) = memo.get(&(k, t, m)) {
            return hit.clone();
        }
        // strip the last part j; what remains is a shorter composition
        let mut acc = BigUint::zero();
        for j in 1..=m.min(k.saturating_sub(m + t - 2)) {
            acc += go(k - j, t - 1, m, memo);
        }
        memo.insert((k, t, m), acc.clone());
        acc
    }
    go(k, t, m, &mut HashMap::new())
}

/// T(k, t): compositions of k into exactly t parts none of which exceeds the
/// first. Row sums over t give 2^(k-1), all compositions of k.
pub fn t_count(k: usize, t: usize) -> BigUint {
    (1..=k).map(|m| gamma(k, t, m)).sum()
}

/// Divisor count of the length-k repunit in base b:
/// sum over t of T(k, t) (b-1)^t.
pub fn repunit_divisor_count(base: u8, k: usize) -> BigUint {
    let b1 = BigUint::from(base - 1);
    (1..=k).map(|t| t_count(k, t) * b1.pow(t as u32)).sum()
}

/// The divisor pair of the base 2 repunit of length k encoded by a
/// composition of k whose first part is largest: parts c_1, ..., c_t map to
/// p = 1 0^(c_2-1) 1 0^(c_3-1) 1 ... and q = the repunit of length c_1, with
/// p * q equal to the repunit of length k.
pub fn composition_to_divisor(parts: &[usize]) -> Result<(Num, Num)> {
    if parts.is_empty() || parts.iter().any(|&c| c == 0) {
        return Err(Error::Parse("parts must be positive".into()));
    }
    let first = parts[0];
    if parts.iter().any(|&c| c > first) {
        return Err(Error::Parse("first part must be largest".into()));
    }
    let mut msb: Vec<u8> = vec![1];
    for &c in &parts[1..] {
        msb.extend(std::iter::repeat(0).take(c - 1));
        msb.push(1);
    }
    let p = Num::from_digits_msb(msb, 2)?;
    let q = Num::from_digits_msb(vec![1; first], 2)?;
    Ok((p, q))
}

/// How the exact divisor counts track their limiting forms
/// d_2(2^k - 1) ~ 2^k/(k ln 2) and d_2(2^k - 3) ~ 2^k/(5k ln 2).
#[derive(Debug, Clone)]
pub struct AsymptoticRow {
    pub k: usize,
    pub repunit_count: BigUint,
    pub near_count: BigUint,
    /// d_2(2^k - 3) / d_2(2^k - 1), which tends to 1/5
    pub ratio: f64,
    /// d_2(2^k - 1) k ln2 / 2^k - 1, the relative deviation from the limit
    pub theta: f64,
}

pub fn asymptotic_rows(max_k: usize) -> Result<Vec<AsymptoticRow>> {
    let d1 = repunit_divisor_series(max_k + 1);
    let d3 = near_repunit_divisor_series(max_k + 1)?;
    let ln2 = std::f64::consts::LN_2;
    let mut out = Vec::new();
    for k in 1..=max_k {
        let a = d1[k].to_f64().expect("finite");
        let b = d3[k].to_f64().expect("finite");
        out.push(AsymptoticRow {
            k,
            repunit_count: d1[k].clone(),
            near_count: d3[k].clone(),
            ratio: b / a,
            theta: a * (k as f64) * ln2 / (k as f64).exp2() - 1.0,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn d_series_table() {
        // rows l = 3..6, terms n = 0..8
        let want: [[u64; 9]; 4] = [
            [1, 1, 1, 2, 4, 6, 9, 15, 25],
            [1, 1, 2, 3, 6, 11, 20, 36, 65],
            [1, 1, 2, 4, 7, 14, 27, 51, 98],
            [1, 1, 2, 4, 8, 15, 30, 59, 115],
        ];
        for (i, row) in want.iter().enumerate() {
            let got = d_series(i + 3, 9).unwrap();
            let row: Vec<BigUint> = row.iter().map(|&v| u(v)).collect();
            assert_eq!(got, row, "l = {}", i + 3);
        }
    }

    #[test]
    fn m_series_table() {
        // rows h = 1..12, columns l = 1..8
        let want: [[u64; 8]; 12] = [
            [1, 0, 1, 1, 1, 1, 1, 1],
            [0, 0, 0, 0, 0, 0, 0, 0],
            [1, 0, 0, 1, 1, 1, 1, 1],
            [1, 0, 1, 1, 2, 2, 2, 2],
            [1, 0, 2, 3, 3, 4, 4, 4],
            [1, 0, 2, 5, 7, 7, 8, 8],
            [1, 0, 3, 9, 13, 15, 15, 16],
            [1, 0, 6, 16, 24, 29, 31, 31],
            [1, 0, 10, 29, 47, 56, 61, 63],
            [1, 0, 15, 53, 89, 110, 120, 125],
            [1, 0, 24, 96, 170, 216, 238, 248],
            [1, 0, 40, 174, 326, 422, 471, 494],
        ];
        for l in 1..=8usize {
            let got = m_series(l, 13).unwrap();
            for h in 1..=12usize {
                assert_eq!(got[h], u(want[h - 1][l - 1]), "l = {l}, h = {h}");
            }
        }
    }

    #[test]
    fn m_series_counts_actual_divisor_pairs() {
        // M_h^(l) = number of h-digit binary p with p * (1^(l-2) 0 1 pattern)
        // = 1^(h+l-3) 0 1 pattern; check the table region by brute force.
        let pattern = |len: usize| -> Num {
            // 2^len - 3 in binary: 1^(len-2) 0 1
            Num::from_u64((1u64 << len) - 3, 2).unwrap()
        };
        for l in 2..=6usize {
            let m = m_series(l, 9).unwrap();
            for h in 2..=8usize {
                let target = pattern(h + l - 1);
                let q = pattern(l);
                let count = crate::arith::all_of_len(2, h)
                    .filter(|p| p.mul(&q) == target)
                    .count();
                assert_eq!(u(count as u64), m[h], "l = {l}, h = {h}");
            }
        }
    }

    #[test]
    fn d_series_counts_restricted_strings() {
        // D_n^(l) = binary strings of length n ending in 1, avoiding 0^l and
        // 0^(l-2)10 everywhere and 0^(l-2)1 as a suffix.
        fn count(l: usize, n: usize) -> u64 {
            if n == 0 {
                return 1;
            }
            let forbidden_tail: Vec<u8> = {
                let mut v = vec![0u8; l - 2];
                v.push(1);
                v
            };
            let mut total = 0u64;
            for bits in 0..(1u64 << n) {
                let s: Vec<u8> = (0..n).map(|i| (bits >> (n - 1 - i) & 1) as u8).collect();
                if s[n - 1] != 1 {
                    continue;
                }
                let has = |pat: &[u8]| s.windows(pat.len()).any(|w| w == pat);
                if has(&vec![0u8; l]) {
                    continue;
                }
                let mut pat = vec![0u8; l - 2];
                pat.extend([1, 0]);
                if has(&pat) {
                    continue;
                }
                if n >= l - 1 && s[n - (l - 1)..] == forbidden_tail[..] {
                    continue;
                }
                total += 1;
            }
            total
        }
        for l in 3..=6usize {
            let d = d_series(l, 9).unwrap();
            for n in 0..=8usize {
                assert_eq!(d[n], u(count(l, n)), "l = {l}, n = {n}");
            }
        }
    }

    #[test]
    fn m3_matches_fibonacci_products() {
        let m = m_series(3, 40).unwrap();
        for h in 1..40usize {
            assert_eq!(m[h], m3_closed_form(h), "h = {h}");
        }
    }

    #[test]
    fn m_reduces_to_d_sums() {
        for l in 3..=8usize {
            let m = m_series(l, 30).unwrap();
            for h in l + 2..30 {
                assert_eq!(m_from_d(l, h).unwrap(), m[h], "l = {l}, h = {h}");
            }
        }
    }

    #[test]
    fn repunit_divisor_counts_in_base_two() {
        let want: Vec<u64> =
            vec![0, 1, 2, 3, 5, 8, 14, 24, 43, 77, 140, 256, 472, 874, 1628, 3045, 5719];
        let got = repunit_divisor_series(17);
        assert_eq!(got, want.into_iter().map(u).collect::<Vec<_>>());
    }

    #[test]
    fn near_repunit_divisor_counts() {
        // d_2(2^k - 3) for k = 1..8: 1, 0, 2, 2, 2, 4, 6, 10
        let got = near_repunit_divisor_series(9).unwrap();
        let want: Vec<u64> = vec![0, 1, 0, 2, 2, 2, 4, 6, 10];
        assert_eq!(got, want.into_iter().map(u).collect::<Vec<_>>());
    }

    #[test]
    fn series_match_direct_divisor_counts() {
        use crate::divisors::d;
        let d1 = repunit_divisor_series(15);
        let d3 = near_repunit_divisor_series(15).unwrap();
        for k in 2..15usize {
            let ones = Num::from_u64((1u64 << k) - 1, 2).unwrap();
            assert_eq!(u(d(&ones).unwrap() as u64), d1[k], "2^{k}-1");
            // k = 2 degenerates: 2^2 - 3 = 1 is a single digit, not a 1..101
            // pattern, and the series assigns it 0
            if k >= 3 {
                let near = Num::from_u64((1u64 << k) - 3, 2).unwrap();
                assert_eq!(u(d(&near).unwrap() as u64), d3[k], "2^{k}-3");
            }
        }
    }

    #[test]
    fn composition_triangle() {
        let want: [&[u64]; 8] = [
            &[1],
            &[1, 1],
            &[1, 1, 1],
            &[1, 2, 1, 1],
            &[1, 2, 3, 1, 1],
            &[1, 3, 4, 4, 1, 1],
            &[1, 3, 6, 7, 5, 1, 1],
            &[1, 4, 8, 11, 11, 6, 1, 1],
        ];
        for (k, row) in want.iter().enumerate() {
            let k = k + 1;
            let got: Vec<BigUint> = (1..=k).map(|t| t_count(k, t)).collect();
            assert_eq!(got, row.iter().map(|&v| u(v)).collect::<Vec<_>>(), "k = {k}");
        }
    }

    #[test]
    fn triangle_rows_sum_to_repunit_counts() {
        // In base 2 the weights (b-1)^t collapse to 1, so each row of the
        // triangle sums to d_2 of the repunit; this pits the composition
        // counting against the generating function.
        let d1 = repunit_divisor_series(17);
        for k in 1..=16usize {
            let total: BigUint = (1..=k).map(|t| t_count(k, t)).sum();
            assert_eq!(total, d1[k], "k = {k}");
        }
    }

    #[test]
    fn triangle_entries_sit_between_binomial_bounds() {
        fn binom(n: usize, r: usize) -> BigUint {
            let mut acc = BigUint::one();
            for i in 0..r {
                acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
            }
            acc
        }
        for k in 1..=30usize {
            for t in 1..=k {
                let tk = t_count(k, t);
                let c = binom(k - 1, t - 1);
                assert!(&tk * BigUint::from(t as u64) >= c, "lower bound k={k} t={t}");
                assert!(tk <= c, "upper bound k={k} t={t}");
            }
        }
    }

    #[test]
    fn repunit_divisor_count_table() {
        // rows k = 1..7, columns base 2..10
        let want: [[u64; 9]; 7] = [
            [1, 2, 3, 4, 5, 6, 7, 8, 9],
            [2, 6, 12, 20, 30, 42, 56, 72, 90],
            [3, 14, 39, 84, 155, 258, 399, 584, 819],
            [5, 34, 129, 356, 805, 1590, 2849, 4744, 7461],
            [8, 82, 426, 1508, 4180, 9798, 20342, 38536, 67968],
            [14, 206, 1434, 6452, 21830, 60594, 145586, 313544, 619902],
            [24, 526, 4890, 27828, 114580, 375954, 1044246, 2555080, 5660208],
        ];
        for (i, row) in want.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(
                    repunit_divisor_count(j as u8 + 2, i + 1),
                    u(v),
                    "k = {}, base = {}",
                    i + 1,
                    j + 2
                );
            }
        }
    }

    #[test]
    fn repunit_divisor_count_bounds() {
        for base in 2..=10u8 {
            for k in 1..=12usize {
                let dk = repunit_divisor_count(base, k);
                let bk = BigUint::from(base).pow(k as u32);
                assert!(&dk * BigUint::from(k as u64) >= bk - BigUint::one(), "b={base} k={k}");
                assert!(
                    dk <= BigUint::from(base - 1) * BigUint::from(base).pow(k as u32 - 1),
                    "b={base} k={k}"
                );
            }
        }
    }

    #[test]
    fn repunit_count_matches_direct_enumeration() {
        use crate::divisors::d;
        for base in [2u8, 3, 7, 10] {
            for k in 1..=4usize {
                let ones = Num::from_digits_lsb(vec![1; k], base).unwrap();
                assert_eq!(u(d(&ones).unwrap() as u64), repunit_divisor_count(base, k));
            }
        }
    }

    #[test]
    fn compositions_encode_repunit_divisor_pairs() {
        // (4,2,1): p = 1 01 1 reading the later parts, q = 1111
        let (p, q) = composition_to_divisor(&[4, 2, 1]).unwrap();
        assert_eq!(p.to_string(), "1011@2");
        assert_eq!(q.to_string(), "1111@2");
        let ones7 = Num::from_digits_lsb(vec![1; 7], 2).unwrap();
        assert_eq!(p.mul(&q), ones7);
        assert!(composition_to_divisor(&[1, 3]).is_err());
        assert!(composition_to_divisor(&[2, 0]).is_err());

        // compositions whose first part is largest biject with the divisors
        // of the repunit: the p side runs over them all, once each
        fn compositions(k: usize) -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            fn go(rest: usize, first: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                if rest == 0 {
                    out.push(cur.clone());
                    return;
                }
                for c in 1..=first.min(rest) {
                    cur.push(c);
                    go(rest - c, first, cur, out);
                    cur.pop();
                }
            }
            for first in 1..=k {
                let mut cur = vec![first];
                go(k - first, first, &mut cur, &mut out);
            }
            out
        }
        use crate::divisors::divisor_list;
        for k in 1..=10usize {
            let ones = Num::from_digits_lsb(vec![1; k], 2).unwrap();
            let mut ps = std::collections::BTreeSet::new();
            for c in compositions(k) {
                let (p, q) = composition_to_divisor(&c).unwrap();
                assert_eq!(p.mul(&q), ones, "{c:?}");
                assert_eq!(p.digits().iter().filter(|&&d| d == 1).count(), c.len(), "{c:?}");
                assert!(ps.insert(p), "duplicate divisor from {c:?}");
            }
            let all: std::collections::BTreeSet<Num> =
                divisor_list(&ones).unwrap().divisors.into_iter().collect();
            assert_eq!(ps, all, "k = {k}");
            assert_eq!(BigUint::from(ps.len() as u64), repunit_divisor_count(2, k));
        }
    }

    #[test]
    fn asymptotic_deviations_shrink() {
        let rows = asymptotic_rows(40).unwrap();
        let r40 = rows.last().unwrap();
        assert_eq!(r40.k, 40);
        assert_eq!(r40.repunit_count, u(39127877886));
        assert!((r40.ratio - 0.205588).abs() < 1e-6);
        assert!((r40.theta + 0.013330).abs() < 1e-6);
    }
}
