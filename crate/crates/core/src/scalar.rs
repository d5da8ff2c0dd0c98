//! Number fields the geometry runs over.
//!
//! Every geometric routine is generic over [`Scalar`]. Two implementations
//! exist: [`Rational`] (arbitrary-precision fractions, exact comparisons) and
//! [`Float`] (`f64` whose comparisons treat differences within a global
//! tolerance as equal).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number.
pub type Rational = BigRational;

/// Default comparison tolerance for [`Float`].
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Arithmetic and ordering required by the geometry.
///
/// `compare` is the only ordering used by predicates. It is exact for
/// [`Rational`] and tolerance-aware for [`Float`].
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// True when arithmetic and comparisons are exact.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    /// `num / den`; panics if `den == 0`.
    fn from_ratio(num: i64, den: i64) -> Self;
    fn from_f64(v: f64) -> Self;
    fn to_f64(&self) -> f64;
    fn compare(&self, other: &Self) -> Ordering;
    /// Square root. Exact for rational perfect squares, otherwise a close
    /// approximation (about 128 fractional bits for [`Rational`]).
    fn sqrt(&self) -> Self;
    fn parse_str(s: &str) -> Result<Self>;

    fn sign(&self) -> Ordering {
        self.compare(&Self::zero())
    }
    fn is_zero(&self) -> bool {
        self.sign() == Ordering::Equal
    }
    fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }
    fn is_negative(&self) -> bool {
        self.sign() == Ordering::Less
    }
    fn approx_eq(&self, other: &Self) -> bool {
        self.compare(other) == Ordering::Equal
    }
    fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }
    fn max_of(self, other: Self) -> Self {
        if other.compare(&self) == Ordering::Greater {
            other
        } else {
            self
        }
    }
    fn min_of(self, other: Self) -> Self {
        if other.compare(&self) == Ordering::Less {
            other
        } else {
            self
        }
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn from_f64(v: f64) -> Self {
        BigRational::from_float(v).unwrap_or_else(Zero::zero)
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn compare(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
    fn sign(&self) -> Ordering {
        match self.numer().sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn sqrt(&self) -> Self {
        assert!(!Signed::is_negative(self), "sqrt of negative rational");
        let (n, d) = (self.numer(), self.denom());
        let (rn, rd) = (n.sqrt(), d.sqrt());
        if &(&rn * &rn) == n && &(&rd * &rd) == d {
            return BigRational::new(rn, rd);
        }
        // floor(sqrt(n/d) * 2^128) / 2^128
        let shift = BigInt::one() << 256usize;
        let scaled = (n * shift) / d;
        BigRational::new(scaled.sqrt(), BigInt::one() << 128usize)
    }
    fn parse_str(s: &str) -> Result<Self> {
        parse_rational(s)
    }
}

fn parse_int(s: &str) -> Result<BigInt> {
    BigInt::from_str(s).map_err(|_| Error::Parse(format!("invalid integer `{s}`")))
}

/// Parses `p/q`, an integer, or a decimal with optional exponent, exactly.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    if let Some((p, q)) = s.split_once('/') {
        let (p, q) = (parse_rational(p)?, parse_rational(q)?);
        if Zero::is_zero(&q) {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        return Ok(p / q);
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i32 = s[i + 1..]
                .parse()
                .map_err(|_| Error::Parse(format!("invalid exponent in `{s}`")))?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(Error::Parse(format!("invalid number `{s}`")));
    }
    let digits = format!("{int_part}{frac_part}");
    if !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(Error::Parse(format!("invalid number `{s}`")));
    }
    let mut value = BigRational::from_integer(parse_int(&digits)?);
    let scale = exponent - frac_part.len() as i32;
    let ten = BigRational::from_integer(BigInt::from(10));
    if scale >= 0 {
        value *= num_traits::pow(ten, scale as usize);
    } else {
        value /= num_traits::pow(ten, (-scale) as usize);
    }
    Ok(if neg { -value } else { value })
}

static TOLERANCE_BITS: AtomicU64 = AtomicU64::new(0x3E11_2E0B_E826_D695); // 1e-9

/// `f64` with tolerance-aware comparisons.
#[derive(Clone, Copy, Debug, Default, PartialEq, PartialOrd)]
pub struct Float(pub f64);

impl Float {
    /// Current comparison tolerance shared by all `Float` values.
    pub fn tolerance() -> f64 {
        f64::from_bits(TOLERANCE_BITS.load(AtomicOrdering::Relaxed))
    }

    /// Sets the process-wide comparison tolerance.
    pub fn set_tolerance(tol: f64) {
        assert!(
            tol >= 0.0 && tol.is_finite(),
            "tolerance must be finite and >= 0"
        );
        TOLERANCE_BITS.store(tol.to_bits(), AtomicOrdering::Relaxed);
    }
}

impl fmt::Display for Float {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

macro_rules! float_binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr for Float {
            type Output = Float;
            #[inline]
            fn $m(self, rhs: Float) -> Float {
                Float(self.0 $op rhs.0)
            }
        }
    };
}
float_binop!(Add, add, +);
float_binop!(Sub, sub, -);
float_binop!(Mul, mul, *);
float_binop!(Div, div, /);

impl Neg for Float {
    type Output = Float;
    fn neg(self) -> Float {
        Float(-self.0)
    }
}

impl Scalar for Float {
    const EXACT: bool = false;

    fn zero() -> Self {
        Float(0.0)
    }
    fn one() -> Self {
        Float(1.0)
    }
    fn from_i64(v: i64) -> Self {
        Float(v as f64)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Float(num as f64 / den as f64)
    }
    fn from_f64(v: f64) -> Self {
        Float(v)
    }
    fn to_f64(&self) -> f64 {
        self.0
    }
    fn compare(&self, other: &Self) -> Ordering {
        let d = self.0 - other.0;
        if d.abs() <= Float::tolerance() {
            Ordering::Equal
        } else if d > 0.0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
    fn sqrt(&self) -> Self {
        Float(self.0.max(0.0).sqrt())
    }
    fn parse_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.contains('/') {
            return Ok(Float(Scalar::to_f64(&parse_rational(t)?)));
        }
        t.parse::<f64>()
            .map(Float)
            .map_err(|_| Error::Parse(format!("invalid number `{t}`")))
    }
}

/// Converts between scalar fields (through `f64` when the target is inexact).
pub fn convert<A: Scalar, B: Scalar>(value: &A) -> B {
    if A::EXACT && B::EXACT {
        // Rational -> Rational: round-trip through the string form is exact.
        B::parse_str(&value.to_string()).expect("rational display parses")
    } else {
        B::from_f64(value.to_f64())
    }
}
