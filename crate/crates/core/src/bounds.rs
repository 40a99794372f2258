//! Closed-form and recursive bounds on the rectilinear crossing number of
//! `K_n`, in exact arbitrary-precision arithmetic.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Known exact values of the rectilinear crossing number for `n = 3..=10`.
pub const KNOWN_VALUES: [(u64, u64); 8] = [(3, 0), (4, 0), (5, 1), (6, 3), (7, 9), (8, 19), (9, 36), (10, 62)];

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn ceil_div(num: &BigInt, den: &BigInt) -> BigInt {
    num.div_ceil(den)
}

/// Crossings of the explicit drawing family
/// `floor((7n^4 - 56n^3 + 128n^2 + 48n*floor((n-7)/3) + 108) / 432)`.
pub fn jensen_upper(n: u64) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::DomainError(format!("jensen bound needs n >= 3, got {n}")));
    }
    let nb = BigInt::from(n);
    let third = BigInt::from(n as i64 - 7).div_floor(&BigInt::from(3));
    let num = BigInt::from(7) * nb.pow(4) - BigInt::from(56) * nb.pow(3) + BigInt::from(128) * nb.pow(2)
        + BigInt::from(48) * &nb * third
        + BigInt::from(108);
    Ok(num.div_floor(&BigInt::from(432)))
}

/// `ceil(cr_a * C(n, a) / C(n - 4, a - 4))`: every `K_a` sub-drawing carries
/// at least `cr_a` crossings and each crossing lies in `C(n-4, a-4)` of them.
pub fn subgraph_lower_bound(n: u64, a: u64, cr_a: &BigInt) -> Result<BigInt> {
    if a < 5 || a > n {
        return Err(Error::DomainError(format!("need 5 <= a <= n, got a = {a}, n = {n}")));
    }
    if cr_a.is_negative() {
        return Err(Error::DomainError("negative crossing number".into()));
    }
    Ok(ceil_div(&(cr_a * binomial(n, a)), &binomial(n - 4, a - 4)))
}

/// `lower / C(n, 4)`.
pub fn ratio_lower_bound(n: u64, cr_lower: &BigInt) -> Result<BigRational> {
    if n < 4 {
        return Err(Error::DomainError(format!("ratio needs n >= 4, got {n}")));
    }
    Ok(BigRational::new(cr_lower.clone(), binomial(n, 4)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsRow {
    pub n: u64,
    pub lower: BigInt,
    pub jensen_upper: BigInt,
    pub choose4: BigInt,
    pub ratio_lower: BigRational,
}

impl BoundsRow {
    /// `lower/C(n,4)` without reduction, e.g. `315356975/1050739900`.
    pub fn ratio_fraction(&self) -> String {
        format!("{}/{}", self.lower, self.choose4)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsTable {
    pub rows: Vec<BoundsRow>,
}

impl BoundsTable {
    pub fn get(&self, n: u64) -> Option<&BoundsRow> {
        self.rows.iter().find(|r| r.n == n)
    }

    pub fn last(&self) -> &BoundsRow {
        self.rows.last().expect("table has at least the base row")
    }

    /// Comma-separated export: `n,lower,jensen_upper,ratio_decimal,ratio_fraction`.
    pub fn to_delimited(&self) -> String {
        let mut out = String::from("n,lower,jensen_upper,ratio_decimal,ratio_fraction\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                r.n,
                r.lower,
                r.jensen_upper,
                decimal(&r.ratio_lower, 10),
                r.ratio_fraction()
            );
        }
        out
    }
}

/// `b(base_n) = base_cr`, `b(n) = ceil(b(n-1) * n / (n - 4))`.
pub fn recursive_lower_bound(n_max: u64, base_n: u64, base_cr: u64) -> Result<BoundsTable> {
    if base_n < 5 || n_max < base_n {
        return Err(Error::DomainError(format!("need 5 <= base_n <= n_max, got {base_n}, {n_max}")));
    }
    let mut rows = Vec::with_capacity((n_max - base_n + 1) as usize);
    let mut lower = BigInt::from(base_cr);
    for n in base_n..=n_max {
        if n > base_n {
            lower = subgraph_lower_bound(n, n - 1, &lower)?;
        }
        rows.push(BoundsRow {
            n,
            jensen_upper: jensen_upper(n)?,
            choose4: binomial(n, 4),
            ratio_lower: ratio_lower_bound(n, &lower)?,
            lower: lower.clone(),
        });
    }
    Ok(BoundsTable { rows })
}

/// Best available lower bound: exact known values up to 10, the recursive
/// ceiling bound above.
pub fn known_lower_bound(n: u64) -> BigInt {
    if let Some(&(_, v)) = KNOWN_VALUES.iter().find(|&&(m, _)| m == n) {
        return BigInt::from(v);
    }
    if n < 3 {
        return BigInt::zero();
    }
    recursive_lower_bound(n, 10, 62).expect("n > 10").last().lower.clone()
}

/// Bracket on the limit of `cr(K_n) / C(n,4)`.
pub fn nu_star_bracket() -> (BigRational, BigRational) {
    (
        BigRational::new(BigInt::from(315_356_975u64), BigInt::from(1_050_739_900u64)),
        BigRational::new(BigInt::from(6467), BigInt::from(16848)),
    )
}

/// Even integers between the recursive lower bound and the Jensen upper
/// bound for `K_11`.
pub fn k11_candidates() -> BTreeSet<u64> {
    let lo = recursive_lower_bound(11, 10, 62).expect("valid").last().lower.clone();
    let hi = jensen_upper(11).expect("n >= 3");
    let (lo, hi): (u64, u64) = (lo.try_into().expect("small"), hi.try_into().expect("small"));
    (lo..=hi).filter(|v| v % 2 == 0).collect()
}

/// Decimal expansion truncated to `places` digits.
pub fn decimal(r: &BigRational, places: usize) -> String {
    let scale = BigInt::from(10).pow(places as u32);
    let neg = r.is_negative();
    let scaled = (r.numer().abs() * &scale) / r.denom().abs();
    let (int, frac) = scaled.div_rem(&scale);
    let frac = frac.to_string();
    let mut s = String::new();
    if neg {
        s.push('-');
    }
    let _ = write!(s, "{int}");
    if places > 0 {
        let _ = write!(s, ".{}{}", "0".repeat(places - frac.len()), frac);
    }
    s
}
