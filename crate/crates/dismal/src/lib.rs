//! Base-b carryless arithmetic where digit addition is max and digit
//! multiplication is min, together with the number theory that grows out of
//! it: divisors, primes and prime templates, divisor-count generating
//! functions, the divisibility poset, partitions, and squares.

pub mod arith;
pub mod divisors;
pub mod error;
pub mod genfunc;
pub mod primes;
pub mod squares;
pub mod structures;

pub use arith::{all_of_len, DigitMap, Num};
pub use error::{Error, Result};
