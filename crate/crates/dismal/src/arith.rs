//! Carryless base-b arithmetic on digit vectors: addition is digitwise max,
//! multiplication is the max-min convolution.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

pub const MIN_BASE: u8 = 2;
pub const MAX_BASE: u8 = 36;

const DIGIT_CHARS: &[u8; 36] = b"0123456789abcdefghijklmnopqrstuvwxyz";

/// A number in a fixed base, stored as digits with the least significant
/// first. Canonical form never has a most-significant zero digit, so the
/// number zero is the empty digit vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Num {
    base: u8,
    digits: Vec<u8>,
}

impl Num {
    pub fn zero(base: u8) -> Result<Num> {
        check_base(base)?;
        Ok(Num { base, digits: Vec::new() })
    }

    /// The multiplicative unit: the single digit base-1.
    pub fn unit(base: u8) -> Result<Num> {
        check_base(base)?;
        Ok(Num { base, digits: vec![base - 1] })
    }

    /// Builds from digits given least-significant first.
    pub fn from_digits_lsb(digits: Vec<u8>, base: u8) -> Result<Num> {
        check_base(base)?;
        for &d in &digits {
            if d >= base {
                return Err(Error::DigitOutOfRange { digit: d, base });
            }
        }
        let mut n = Num { base, digits };
        n.canonicalize();
        Ok(n)
    }

    /// Builds from digits written in the usual order, most significant first.
    pub fn from_digits_msb(mut digits: Vec<u8>, base: u8) -> Result<Num> {
        digits.reverse();
        Num::from_digits_lsb(digits, base)
    }

    /// Radix expansion of an ordinary integer.
    pub fn from_u64(mut value: u64, base: u8) -> Result<Num> {
        check_base(base)?;
        let mut digits = Vec::new();
        while value > 0 {
            digits.push((value % base as u64) as u8);
            value /= base as u64;
        }
        Ok(Num { base, digits })
    }

    /// Reads the digit string back as an ordinary integer.
    pub fn to_u64(&self) -> Result<u64> {
        let mut acc: u64 = 0;
        for &d in self.digits.iter().rev() {
            acc = acc
                .checked_mul(self.base as u64)
                .and_then(|v| v.checked_add(d as u64))
                .ok_or(Error::Overflow)?;
        }
        Ok(acc)
    }

    /// Parses "<digits>" or "<digits>@<base>"; a bare literal is read in
    /// `default_base`. Digits use 0-9 then a-z.
    pub fn parse_with_default(text: &str, default_base: u8) -> Result<Num> {
        let (digit_part, base) = match text.split_once('@') {
            Some((d, b)) => {
                let base: u32 = b.parse().map_err(|_| Error::Parse(text.to_string()))?;
                if base < MIN_BASE as u32 || base > MAX_BASE as u32 {
                    return Err(Error::InvalidBase(base));
                }
                (d, base as u8)
            }
            None => (text, default_base),
        };
        if digit_part.is_empty() {
            return Err(Error::Parse(text.to_string()));
        }
        let mut digits = Vec::with_capacity(digit_part.len());
        for c in digit_part.chars() {
            let d = c
                .to_digit(36)
                .ok_or_else(|| Error::Parse(text.to_string()))? as u8;
            if d >= base {
                return Err(Error::DigitOutOfRange { digit: d, base });
            }
            digits.push(d);
        }
        Num::from_digits_msb(digits, base)
    }

    pub fn parse(text: &str) -> Result<Num> {
        Num::parse_with_default(text, 10)
    }

    fn canonicalize(&mut self) {
        while self.digits.last() == Some(&0) {
            self.digits.pop();
        }
    }

    pub fn base(&self) -> u8 {
        self.base
    }

    /// Number of digits; zero has length 0.
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.digits.len() == 1 && self.digits[0] == self.base - 1
    }

    /// Digit at position `i` (position 0 is least significant); 0 beyond the end.
    pub fn digit(&self, i: usize) -> u8 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    /// Digits least-significant first.
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn max_digit(&self) -> u8 {
        self.digits.iter().copied().max().unwrap_or(0)
    }

    pub fn contains_digit(&self, d: u8) -> bool {
        self.digits.contains(&d)
    }

    fn check_same_base(&self, other: &Num) -> Result<()> {
        if self.base != other.base {
            return Err(Error::MixedBase(self.base, other.base));
        }
        Ok(())
    }

    /// Digitwise max. Panics on mixed bases; callers mixing user input go
    /// through `checked_add`.
    pub fn add(&self, other: &Num) -> Num {
        self.checked_add(other).expect("mixed bases")
    }

    pub fn checked_add(&self, other: &Num) -> Result<Num> {
        self.check_same_base(other)?;
        let n = self.digits.len().max(other.digits.len());
        let digits = (0..n).map(|i| self.digit(i).max(other.digit(i))).collect();
        // max of two canonical digit vectors cannot gain a zero top digit
        Ok(Num { base: self.base, digits })
    }

    /// Max-min convolution of the digit vectors.
    pub fn mul(&self, other: &Num) -> Num {
        self.checked_mul(other).expect("mixed bases")
    }

    pub fn checked_mul(&self, other: &Num) -> Result<Num> {
        self.check_same_base(other)?;
        if self.is_zero() || other.is_zero() {
            return Num::zero(self.base);
        }
        let mut digits = vec![0u8; self.digits.len() + other.digits.len() - 1];
        for (i, &a) in self.digits.iter().enumerate() {
            for (j, &b) in other.digits.iter().enumerate() {
                let m = a.min(b);
                if m > digits[i + j] {
                    digits[i + j] = m;
                }
            }
        }
        let mut n = Num { base: self.base, digits };
        n.canonicalize();
        Ok(n)
    }

    /// Dominance: every digit of `self` is <= the matching digit of `other`.
    /// Equivalent to `self.add(other) == other`.
    pub fn dominated_by(&self, other: &Num) -> bool {
        if self.base != other.base || self.digits.len() > other.digits.len() {
            return false;
        }
        self.digits
            .iter()
            .zip(other.digits.iter())
            .all(|(a, b)| a <= b)
    }

    /// Reverses the digit order. Trailing zeros of the value become leading
    /// zeros and drop, so this is not an involution on numbers ending in 0.
    pub fn reverse(&self) -> Num {
        let digits: Vec<u8> = self.digits.iter().rev().copied().collect();
        let mut n = Num { base: self.base, digits };
        n.canonicalize();
        n
    }

    /// Reinterprets the same digit string in a larger base.
    pub fn rebase(&self, new_base: u8) -> Result<Num> {
        check_base(new_base)?;
        if new_base <= self.max_digit() {
            return Err(Error::DigitOutOfRange { digit: self.max_digit(), base: new_base });
        }
        Ok(Num { base: new_base, digits: self.digits.clone() })
    }

    pub fn apply(&self, map: &DigitMap) -> Result<Num> {
        if map.base != self.base {
            return Err(Error::MixedBase(self.base, map.base));
        }
        let digits = self.digits.iter().map(|&d| map.image[d as usize]).collect();
        let mut n = Num { base: self.base, digits };
        n.canonicalize();
        Ok(n)
    }

    /// Numeric comparison; only meaningful between numbers of the same base.
    pub fn cmp_value(&self, other: &Num) -> Ordering {
        self.digits
            .len()
            .cmp(&other.digits.len())
            .then_with(|| self.digits.iter().rev().cmp(other.digits.iter().rev()))
    }
}

impl Ord for Num {
    fn cmp(&self, other: &Self) -> Ordering {
        self.base.cmp(&other.base).then_with(|| self.cmp_value(other))
    }
}

impl PartialOrd for Num {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")?;
        } else {
            for &d in self.digits.iter().rev() {
                write!(f, "{}", DIGIT_CHARS[d as usize] as char)?;
            }
        }
        if self.base != 10 {
            write!(f, "@{}", self.base)?;
        }
        Ok(())
    }
}

/// Iterates every number of exactly `len` digits (most significant digit
/// nonzero) in increasing numeric order. `len` must be >= 1.
pub fn all_of_len(base: u8, len: usize) -> impl Iterator<Item = Num> {
    Odometer::new(base, len)
}

struct Odometer {
    base: u8,
    digits: Option<Vec<u8>>, // LSB-first; None once exhausted
}

impl Odometer {
    fn new(base: u8, len: usize) -> Odometer {
        assert!(len >= 1 && base >= MIN_BASE && base <= MAX_BASE);
        let mut digits = vec![0u8; len];
        digits[len - 1] = 1;
        Odometer { base, digits: Some(digits) }
    }
}

impl Iterator for Odometer {
    type Item = Num;

    fn next(&mut self) -> Option<Num> {
        let digits = self.digits.as_mut()?;
        let out = Num { base: self.base, digits: digits.clone() };
        let mut i = 0;
        loop {
            if digits[i] + 1 < self.base {
                digits[i] += 1;
                break;
            }
            digits[i] = 0;
            i += 1;
            if i == digits.len() {
                self.digits = None;
                break;
            }
        }
        Some(out)
    }
}

/// A nondecreasing self-map of the digit alphabet; a homomorphism for both
/// operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitMap {
    base: u8,
    image: Vec<u8>,
}

impl DigitMap {
    pub fn new(image: Vec<u8>, base: u8) -> Result<DigitMap> {
        check_base(base)?;
        if image.len() != base as usize {
            return Err(Error::MapNotMonotone);
        }
        for w in image.windows(2) {
            if w[0] > w[1] {
                return Err(Error::MapNotMonotone);
            }
        }
        for &d in &image {
            if d >= base {
                return Err(Error::DigitOutOfRange { digit: d, base });
            }
        }
        Ok(DigitMap { base, image })
    }

    pub fn base(&self) -> u8 {
        self.base
    }

    pub fn image(&self) -> &[u8] {
        &self.image
    }
}

fn check_base(base: u8) -> Result<()> {
    if !(MIN_BASE..=MAX_BASE).contains(&base) {
        return Err(Error::InvalidBase(base as u32));
    }
    Ok(())
}
