//! Exact rational scalars.
//!
//! Every coordinate, squared length and line coefficient in this crate is a
//! [`Scalar`]: an arbitrary-precision rational kept in canonical form
//! (reduced, positive denominator). Comparisons are exact.
//!
//! Values whose numerator and denominator fit in an `i64` are stored inline
//! and combined in `i128`; anything larger falls back to `BigRational`.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::ParseScalarError;

#[derive(Clone)]
enum Repr {
    /// Reduced, denominator positive.
    Small(i64, i64),
    /// Reduced and never representable as `Small`.
    Big(BigRational),
}

/// Arbitrary-precision rational number.
#[derive(Clone)]
pub struct Scalar(Repr);

impl Scalar {
    /// Reduces `num / den` (`den ≠ 0`) into canonical form.
    fn from_i128(num: i128, den: i128) -> Self {
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Scalar(Repr::Small(n, d)),
            _ => Scalar(Repr::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))),
        }
    }

    /// Canonical form of an already reduced rational.
    fn from_rational(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Scalar(Repr::Small(n, d)),
            _ => Scalar(Repr::Big(r)),
        }
    }

    fn to_rational(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn zero() -> Self {
        Scalar(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Scalar(Repr::Small(1, 1))
    }

    pub fn from_int(v: i64) -> Self {
        Scalar(Repr::Small(v, 1))
    }

    /// `num / den`, reduced. Panics when `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::from_i128(num as i128, den as i128)
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(Scalar::from_rational(BigRational::new(num, den)))
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    pub fn signum(&self) -> Ordering {
        match &self.0 {
            Repr::Small(n, _) => n.cmp(&0),
            Repr::Big(r) if r.is_positive() => Ordering::Greater,
            Repr::Big(r) if r.is_negative() => Ordering::Less,
            Repr::Big(_) => Ordering::Equal,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self
        } else {
            self.clone()
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        match &self.0 {
            Repr::Small(0, _) => None,
            Repr::Small(n, d) => Some(Scalar::from_i128(*d as i128, *n as i128)),
            Repr::Big(r) => Some(Scalar::from_rational(r.recip())),
        }
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    /// Nearest `f64`, for display only.
    pub fn to_f64(&self) -> f64 {
        let r = match &self.0 {
            Repr::Small(n, d) => return *n as f64 / *d as f64,
            Repr::Big(r) => r,
        };
        if let Some(v) = r.to_f64() {
            return v;
        }
        // Fall back on a scaled quotient when numerator or denominator overflow.
        let (n, d) = (r.numer(), r.denom());
        let shift = n.bits().max(d.bits()).saturating_sub(960);
        let n = (n >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (d >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    }

    pub fn to_big_rational(&self) -> BigRational {
        self.to_rational()
    }

    /// Integer or `p/q` text; the inverse of [`FromStr`].
    pub fn to_exact_string(&self) -> String {
        alloc::format!("{}", self)
    }

    fn combine(
        &self,
        rhs: &Scalar,
        small: impl Fn(i128, i128, i128, i128) -> Option<(i128, i128)>,
        big: impl Fn(BigRational, BigRational) -> BigRational,
    ) -> Scalar {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &rhs.0) {
            if let Some((n, m)) = small(*a as i128, *b as i128, *c as i128, *d as i128) {
                return Scalar::from_i128(n, m);
            }
        }
        Scalar::from_rational(big(self.to_rational(), rhs.to_rational()))
    }

    fn add_ref(&self, rhs: &Scalar) -> Scalar {
        self.combine(rhs, |a, b, c, d| Some((a.checked_mul(d)?.checked_add(c.checked_mul(b)?)?, b.checked_mul(d)?)), |x, y| x + y)
    }

    fn sub_ref(&self, rhs: &Scalar) -> Scalar {
        self.combine(rhs, |a, b, c, d| Some((a.checked_mul(d)?.checked_sub(c.checked_mul(b)?)?, b.checked_mul(d)?)), |x, y| x - y)
    }

    fn mul_ref(&self, rhs: &Scalar) -> Scalar {
        self.combine(rhs, |a, b, c, d| Some((a.checked_mul(c)?, b.checked_mul(d)?)), |x, y| x * y)
    }

    fn div_ref(&self, rhs: &Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        self.combine(rhs, |a, b, c, d| Some((a.checked_mul(d)?, b.checked_mul(c)?)), |x, y| x / y)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(n, d) => (0u8, n, d).hash(state),
            Repr::Big(r) => (1u8, r).hash(state),
        }
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128)),
            _ => self.to_rational().cmp(&other.to_rational()),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_int(v)
    }
}

impl From<BigRational> for Scalar {
    fn from(v: BigRational) -> Self {
        Scalar::from_rational(v)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// Accepts `"-12"`, `"3/4"`, `"-3/4"`; surrounding whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt, ParseScalarError> {
            let t = t.trim();
            let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
                return Err(ParseScalarError::Malformed);
            }
            BigInt::from_str(t).map_err(|_| ParseScalarError::Malformed)
        };
        match s.split_once('/') {
            None => Ok(Scalar::from_rational(BigRational::from_integer(parse_int(s)?))),
            Some((n, d)) => {
                let n = parse_int(n)?;
                let d = parse_int(d)?;
                Scalar::from_big(n, d).ok_or(ParseScalarError::ZeroDenominator)
            }
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$imp(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                self.$imp(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$imp(&rhs)
            }
        }
        impl<'a, 'b> $tr<&'b Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'b Scalar) -> Scalar {
                self.$imp(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = self.sub_ref(rhs);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = self.mul_ref(rhs);
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Small(n, d) => Scalar::from_i128(-(*n as i128), *d as i128),
            Repr::Big(r) => Scalar::from_rational(-r),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parses_integers_and_ratios() {
        assert_eq!("7".parse::<Scalar>().unwrap(), Scalar::from_int(7));
        assert_eq!("-3/6".parse::<Scalar>().unwrap(), Scalar::ratio(-1, 2));
        assert_eq!(" 4/-8 ".parse::<Scalar>().unwrap(), Scalar::ratio(-1, 2));
        assert_eq!("1/0".parse::<Scalar>(), Err(ParseScalarError::ZeroDenominator));
        assert!("1.5".parse::<Scalar>().is_err());
        assert!("".parse::<Scalar>().is_err());
        assert!("1/2/3".parse::<Scalar>().is_err());
        assert!("--1".parse::<Scalar>().is_err());
    }

    #[test]
    fn canonical_display() {
        assert_eq!(Scalar::ratio(6, -4).to_exact_string(), "-3/2");
        assert_eq!(Scalar::ratio(8, 4).to_exact_string(), "2");
        assert_eq!(Scalar::zero().to_exact_string(), "0");
    }

    #[test]
    fn arithmetic_is_exact() {
        let third = Scalar::ratio(1, 3);
        let sum = &third + &third + &third;
        assert_eq!(sum, Scalar::one());
        assert_eq!((Scalar::ratio(3, 2) * Scalar::ratio(2, 3)), Scalar::one());
        assert_eq!(Scalar::ratio(1, 2).to_f64(), 0.5);
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let m = Scalar::from_int(i64::MAX);
        let big = &m + &m;
        assert_eq!(big.to_exact_string(), "18446744073709551614");
        let back = &big - &m;
        assert_eq!(back, m);
        assert!(matches!(back.0, Repr::Small(..)));
        assert!(big > m && -&big < -&m);
        let tiny = Scalar::ratio(1, i64::MAX) * Scalar::ratio(1, 3);
        assert!(tiny > Scalar::zero() && tiny < Scalar::ratio(1, i64::MAX));
        assert_eq!(tiny * Scalar::from_int(3), Scalar::ratio(1, i64::MAX));
        assert_eq!(Scalar::from_int(i64::MIN).abs(), "9223372036854775808".parse().unwrap());
    }

    #[test]
    fn huge_values_still_approximate() {
        let big = "1".to_string() + &"0".repeat(400);
        let s: Scalar = alloc::format!("{}/{}", big, big.clone() + "0").parse().unwrap();
        assert!((s.to_f64() - 0.1).abs() < 1e-12);
    }
}
