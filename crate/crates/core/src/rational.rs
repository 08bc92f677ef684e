//! Exact rational helpers shared by the metric, bound and certificate code.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn int<T: Into<BigInt>>(v: T) -> Rational {
    Rational::from_integer(v.into())
}

/// `num / den` reduced. Panics on a zero denominator.
pub fn ratio<T: Into<BigInt>, U: Into<BigInt>>(num: T, den: U) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Exact ceiling as an unsigned integer; `None` for negative values.
pub fn ceil_to_u64(r: &Rational) -> Option<u64> {
    if r.is_negative() {
        return None;
    }
    r.ceil().to_integer().to_u64()
}

/// Integer ceiling division for nonnegative numerators and positive denominators.
pub fn ceil_div(a: i64, b: i64) -> i64 {
    Integer::div_ceil(&a, &b)
}

/// Decimal rendering used only for human convenience columns.
pub fn approx(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Renders a rational as `p/q` (or `p` when the denominator is 1).
pub fn render(r: &Rational) -> String {
    r.to_string()
}

pub fn sum<'a, I: IntoIterator<Item = &'a Rational>>(items: I) -> Rational {
    items.into_iter().fold(Rational::zero(), |acc, x| acc + x)
}

/// Parses `p`, `p/q`, or a finite decimal such as `2.75` into an exact rational.
pub fn parse(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = whole.starts_with('-');
        let whole: BigInt = if whole.is_empty() || whole == "-" {
            BigInt::zero()
        } else {
            whole.parse().ok()?
        };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac: BigInt = frac.parse().ok()?;
        let magnitude = Rational::new(whole.abs() * &scale + frac, scale);
        return Some(if negative { -magnitude } else { magnitude });
    }
    text.parse::<BigInt>().ok().map(Rational::from_integer)
}
