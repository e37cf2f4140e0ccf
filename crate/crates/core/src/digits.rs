//! Base-b numeral kernel.
//!
//! Digit expansions are stored least-significant first, so `digits[i]` is the
//! coefficient of `b^i`. Zero expands to the single digit `[0]`.

use std::fmt;

use crate::error::{Error, Result};

/// A validated radix, always at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Base(u32);

impl Base {
    pub const BINARY: Base = Base(2);
    pub const TERNARY: Base = Base(3);

    pub fn new(b: u32) -> Result<Self> {
        if b < 2 {
            return Err(Error::InvalidBase(b));
        }
        Ok(Base(b))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// The largest digit, `b - 1`.
    pub fn max_digit(self) -> u32 {
        self.0 - 1
    }

    /// `b^exp`, or `None` on overflow.
    pub fn checked_pow(self, exp: u32) -> Option<u64> {
        u64::from(self.0).checked_pow(exp)
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<u32> for Base {
    type Error = Error;

    fn try_from(b: u32) -> Result<Self> {
        Base::new(b)
    }
}

/// A non-negative integer together with its base-b digits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseBExpansion {
    base: Base,
    value: u64,
    digits: Vec<u32>,
}

impl BaseBExpansion {
    pub fn base(&self) -> Base {
        self.base
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// Digits, least-significant first. Never empty.
    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// Number of stored digits (at least 1).
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `d_i(n)`, with positions past the top digit reading as zero.
    pub fn digit(&self, i: usize) -> u32 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    /// Digits zero-padded (or kept) to at least `len` positions.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        let mut d = self.digits.clone();
        if d.len() < len {
            d.resize(len, 0);
        }
        d
    }

    pub fn digit_sum(&self) -> u64 {
        self.digits.iter().map(|&d| u64::from(d)).sum()
    }
}

pub fn to_digits(n: u64, base: Base) -> BaseBExpansion {
    let b = u64::from(base.get());
    let mut digits = Vec::new();
    let mut rest = n;
    loop {
        digits.push((rest % b) as u32);
        rest /= b;
        if rest == 0 {
            break;
        }
    }
    BaseBExpansion {
        base,
        value: n,
        digits,
    }
}

/// Inverse of [`to_digits`]: `Σ digits[i]·b^i`.
pub fn from_digits(digits: &[u32], base: Base) -> u64 {
    let b = u64::from(base.get());
    digits
        .iter()
        .rev()
        .fold(0u64, |acc, &d| acc * b + u64::from(d))
}

/// Iterator over the base-b digits of `n`, least-significant first.
/// Yields nothing for `n == 0`.
fn digit_iter(mut n: u64, base: Base) -> impl Iterator<Item = u32> {
    let b = u64::from(base.get());
    std::iter::from_fn(move || {
        if n == 0 {
            None
        } else {
            let d = (n % b) as u32;
            n /= b;
            Some(d)
        }
    })
}

/// `s(n)`, the sum of the base-b digits of `n`.
pub fn digit_sum(n: u64, base: Base) -> u64 {
    digit_iter(n, base).map(u64::from).sum()
}

/// Generalized Prouhet-Thue-Morse value `u_b(n) = s(n) mod b`.
pub fn ptm(n: u64, base: Base) -> u32 {
    (digit_sum(n, base) % u64::from(base.get())) as u32
}

/// Parity of the base-3 digit sum.
pub fn parity_w(n: u64) -> u32 {
    (digit_sum(n, Base::TERNARY) % 2) as u32
}

/// Digital dominance `m ⪯ n`: every digit of `m` is at most the matching digit of `n`.
pub fn dominates(m: u64, n: u64, base: Base) -> bool {
    let b = u64::from(base.get());
    let (mut m, mut n) = (m, n);
    while m > 0 {
        if m % b > n % b {
            return false;
        }
        m /= b;
        n /= b;
    }
    true
}

/// True when adding `j` and `k` in base b produces no carries.
pub fn carry_free(j: u64, k: u64, base: Base) -> bool {
    digit_sum(j, base) + digit_sum(k, base) == digit_sum(j + k, base)
}

/// `μ_j(n)`, the number of positions whose digit equals `j`. `j` must lie in `1..b`.
pub fn multiplicity(n: u64, j: u32, base: Base) -> Result<u64> {
    if j == 0 || j > base.max_digit() {
        return Err(Error::DigitOutOfRange {
            digit: j,
            max: base.max_digit(),
        });
    }
    Ok(digit_iter(n, base).filter(|&d| d == j).count() as u64)
}

/// `I_b(n)`: every `k ⪯ n`, in increasing order.
pub fn dominated_set(n: u64, base: Base) -> Vec<u64> {
    let expansion = to_digits(n, base);
    let b = u64::from(base.get());
    let mut out = vec![0u64];
    let mut place = 1u64;
    for &d in expansion.digits() {
        let mut next = Vec::with_capacity(out.len() * (d as usize + 1));
        for &prefix in &out {
            for digit in 0..=u64::from(d) {
                next.push(prefix + digit * place);
            }
        }
        out = next;
        place = place.saturating_mul(b);
    }
    out.sort_unstable();
    out
}
