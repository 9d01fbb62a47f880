//! Named sequences emitted as (index, value) pairs. Values that are dismal
//! numbers are rendered as bare digit strings (no @base suffix) so the output
//! doubles as OEIS b-file content; counting sequences are ordinary integers.

use clap::ValueEnum;
use dismal::divisors::BulkDivisors;
use dismal::genfunc::{near_repunit_divisor_series, repunit_divisor_series};
use dismal::primes::primes_of_length;
use dismal::squares::{allones_sqrt_count, square_census};
use dismal::structures::{partition_count, phi};
use dismal::{Error, Num, Result};

/// Emitting more than this many terms in one run counts as exceeding the
/// budget; whatever was produced so far still goes out.
pub const TERM_BUDGET: u64 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SequenceId {
    /// 2 (x) n for n = 0, 1, 2, ...
    #[value(name = "even-2xn")]
    Even2xN,
    /// 1beta (x) n, the smallest prime times n, for n = 0, 1, 2, ...
    #[value(name = "even-smallest-prime")]
    EvenSmallestPrime,
    /// n (x) n for n = 0, 1, 2, ...
    #[value(name = "squares")]
    Squares,
    /// 0 (+) 1 (+) ... (+) n for n = 0, 1, 2, ...
    #[value(name = "triangular")]
    Triangular,
    /// 1 (x) 2 (x) ... (x) n for n = 1, 2, ...
    #[value(name = "factorials")]
    Factorials,
    /// The k-th prime in ascending order, k = 1, 2, ...
    #[value(name = "primes")]
    Primes,
    /// Number of divisors of n, n >= 1.
    #[value(name = "d-count")]
    DCount,
    /// Dismal sum of the divisors of n, n >= 1.
    #[value(name = "sigma")]
    Sigma,
    /// Totient: count of m relatively prime to n with len(m) <= len(n).
    #[value(name = "phi")]
    Phi,
    /// Number of dismal partitions of n, n >= 1.
    #[value(name = "partitions")]
    Partitions,
    /// Distinct squares of roots with m digits, m = 1, 2, ...
    #[value(name = "square-counts")]
    SquareCounts,
    /// Number of binary square roots of the repunit of length 2k+1.
    #[value(name = "sqrt-counts")]
    SqrtCounts,
    /// d_2(2^k - 1): divisor counts of the binary repunits.
    #[value(name = "d-ones-series")]
    DOnesSeries,
    /// d_2(2^k - 3): divisor counts of the near-repunits 11...101.
    #[value(name = "d-minus3-series")]
    DMinus3Series,
}

impl SequenceId {
    pub fn default_range(self) -> (u64, u64) {
        match self {
            SequenceId::Even2xN | SequenceId::EvenSmallestPrime => (0, 30),
            SequenceId::Squares | SequenceId::Triangular => (0, 30),
            SequenceId::Factorials => (1, 20),
            SequenceId::Primes => (1, 30),
            SequenceId::DCount | SequenceId::Sigma => (1, 31),
            SequenceId::Phi | SequenceId::Partitions => (1, 20),
            SequenceId::SquareCounts => (1, 6),
            SequenceId::SqrtCounts => (0, 12),
            SequenceId::DOnesSeries | SequenceId::DMinus3Series => (0, 16),
        }
    }

    /// Smallest index the sequence is defined at.
    pub fn first_index(self) -> u64 {
        match self {
            SequenceId::Even2xN
            | SequenceId::EvenSmallestPrime
            | SequenceId::Squares
            | SequenceId::Triangular
            | SequenceId::SqrtCounts
            | SequenceId::DOnesSeries
            | SequenceId::DMinus3Series => 0,
            _ => 1,
        }
    }
}

/// Digit string without the @base suffix.
pub fn digit_text(n: &Num) -> String {
    let full = n.to_string();
    match full.split_once('@') {
        Some((digits, _)) => digits.to_string(),
        None => full,
    }
}

/// Streams the terms with indices in start..=end to `emit`. On a budget
/// error the terms already emitted stand; the caller reports the cutoff.
pub fn generate(
    id: SequenceId,
    base: u8,
    start: u64,
    end: u64,
    emit: &mut dyn FnMut(u64, String),
) -> Result<()> {
    if end < start {
        return Ok(());
    }
    if start < id.first_index() {
        return Err(Error::Parse(format!(
            "sequence is defined from index {}, got range start {start}",
            id.first_index()
        )));
    }
    if end - start + 1 > TERM_BUDGET {
        return Err(Error::Budget(format!("range asks for more than {TERM_BUDGET} terms")));
    }
    match id {
        SequenceId::Even2xN => {
            let two = Num::from_u64(2, base)?;
            for n in start..=end {
                emit(n, digit_text(&two.mul(&Num::from_u64(n, base)?)));
            }
        }
        SequenceId::EvenSmallestPrime => {
            let p = Num::from_digits_lsb(vec![base - 1, 1], base)?;
            for n in start..=end {
                emit(n, digit_text(&p.mul(&Num::from_u64(n, base)?)));
            }
        }
        SequenceId::Squares => {
            for n in start..=end {
                let v = Num::from_u64(n, base)?;
                emit(n, digit_text(&v.mul(&v)));
            }
        }
        SequenceId::Triangular => {
            let mut acc = Num::zero(base)?;
            for n in 0..=end {
                acc = acc.add(&Num::from_u64(n, base)?);
                if n >= start {
                    emit(n, digit_text(&acc));
                }
            }
        }
        SequenceId::Factorials => {
            let mut acc = Num::from_u64(1, base)?;
            for n in 1..=end {
                acc = acc.mul(&Num::from_u64(n, base)?);
                if n >= start {
                    emit(n, digit_text(&acc));
                }
            }
        }
        SequenceId::Primes => {
            let mut ordinal = 0u64;
            for k in 2.. {
                for p in primes_of_length(base, k)? {
                    ordinal += 1;
                    if ordinal > end {
                        return Ok(());
                    }
                    if ordinal >= start {
                        emit(ordinal, digit_text(&p));
                    }
                }
            }
        }
        SequenceId::DCount | SequenceId::Sigma => {
            let max_len = Num::from_u64(end, base)?.len();
            let bulk = BulkDivisors::build(base, max_len)?;
            for n in start..=end {
                let value = match id {
                    SequenceId::DCount => bulk.d(n).to_string(),
                    _ => digit_text(&Num::from_u64(bulk.sigma(n), base)?),
                };
                emit(n, value);
            }
        }
        SequenceId::Phi => {
            for n in start..=end {
                emit(n, phi(&Num::from_u64(n, base)?)?.to_string());
            }
        }
        SequenceId::Partitions => {
            for n in start..=end {
                emit(n, partition_count(&Num::from_u64(n, base)?)?.to_string());
            }
        }
        SequenceId::SquareCounts => {
            for m in start..=end {
                let census = square_census(base, 2 * m as usize - 1)?;
                emit(m, census.distinct().to_string());
            }
        }
        SequenceId::SqrtCounts => {
            for k in start..=end {
                emit(k, allones_sqrt_count(k as usize)?.to_string());
            }
        }
        SequenceId::DOnesSeries | SequenceId::DMinus3Series => {
            if end > 2048 {
                return Err(Error::Budget(format!("series index {end} is past the cap of 2048")));
            }
            let n_terms = end as usize + 1;
            let coeffs = match id {
                SequenceId::DOnesSeries => repunit_divisor_series(n_terms),
                _ => near_repunit_divisor_series(n_terms)?,
            };
            for k in start..=end {
                emit(k, coeffs[k as usize].to_string());
            }
        }
    }
    Ok(())
}

/// Collects instead of streaming; used where the whole prefix is compared.
pub fn collect(id: SequenceId, base: u8, start: u64, end: u64) -> Result<Vec<(u64, String)>> {
    let mut out = Vec::new();
    generate(id, base, start, end, &mut |i, v| out.push((i, v)))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(id: SequenceId, base: u8, start: u64, end: u64) -> Vec<String> {
        collect(id, base, start, end).unwrap().into_iter().map(|(_, v)| v).collect()
    }

    #[test]
    fn even_two_times_n() {
        assert_eq!(
            values(SequenceId::Even2xN, 10, 0, 23),
            [
                "0", "1", "2", "2", "2", "2", "2", "2", "2", "2", "10", "11", "12", "12", "12",
                "12", "12", "12", "12", "12", "20", "21", "22", "22"
            ]
        );
    }

    #[test]
    fn even_via_smallest_prime() {
        assert_eq!(
            values(SequenceId::EvenSmallestPrime, 10, 0, 12),
            ["0", "11", "12", "13", "14", "15", "16", "17", "18", "19", "110", "111", "112"]
        );
    }

    #[test]
    fn squares_prefix() {
        assert_eq!(
            values(SequenceId::Squares, 10, 0, 12),
            ["0", "1", "2", "3", "4", "5", "6", "7", "8", "9", "100", "111", "112"]
        );
    }

    #[test]
    fn triangular_prefix() {
        let got = values(SequenceId::Triangular, 10, 0, 25);
        assert_eq!(got[9], "9");
        assert_eq!(&got[10..20], ["19"; 10]);
        assert_eq!(&got[20..26], ["29"; 6]);
    }

    #[test]
    fn factorials_prefix() {
        let got = values(SequenceId::Factorials, 10, 1, 20);
        assert_eq!(&got[..9], ["1"; 9]);
        assert_eq!(got[9], "10");
        assert_eq!(got[10], "110");
        assert_eq!(got[18], "11111111110");
        assert_eq!(got[19], "111111111100");
    }

    #[test]
    fn prime_listing_starts_at_nineteen() {
        assert_eq!(
            values(SequenceId::Primes, 10, 1, 12),
            ["19", "29", "39", "49", "59", "69", "79", "89", "90", "91", "92", "93"]
        );
        assert_eq!(values(SequenceId::Primes, 2, 1, 5), ["10", "11", "101", "1001", "1011"]);
    }

    #[test]
    fn counting_sequences() {
        assert_eq!(
            values(SequenceId::DCount, 2, 1, 8),
            ["1", "2", "2", "3", "2", "4", "3", "4"]
        );
        assert_eq!(values(SequenceId::Sigma, 10, 9, 12), ["9", "99", "99", "19"]);
        assert_eq!(values(SequenceId::Phi, 10, 9, 12), ["9", "18", "2", "18"]);
        assert_eq!(values(SequenceId::Partitions, 10, 9, 11), ["256", "1", "5"]);
        assert_eq!(values(SequenceId::SqrtCounts, 2, 0, 8), [
            "1", "1", "1", "1", "2", "3", "5", "9", "15"
        ]);
        assert_eq!(values(SequenceId::SquareCounts, 2, 1, 6), ["2", "2", "4", "8", "15", "29"]);
        assert_eq!(values(SequenceId::DOnesSeries, 2, 0, 8), [
            "0", "1", "2", "3", "5", "8", "14", "24", "43"
        ]);
        assert_eq!(values(SequenceId::DMinus3Series, 2, 0, 8), [
            "0", "1", "0", "2", "2", "2", "4", "6", "10"
        ]);
    }

    #[test]
    fn range_rules() {
        assert!(collect(SequenceId::Factorials, 10, 0, 5).is_err());
        assert!(collect(SequenceId::Squares, 10, 7, 3).unwrap().is_empty());
        assert!(matches!(
            collect(SequenceId::Squares, 10, 0, TERM_BUDGET + 1),
            Err(Error::Budget(_))
        ));
    }
}
