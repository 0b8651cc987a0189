//! Exact Gaussian rationals `a/b + (c/d)·i`.
//!
//! Every number in the library is a [`Scalar`]. Both parts are kept as fully
//! reduced big rationals, so equality is structural and zero has exactly one
//! representation.
//!
//! The literal grammar accepted by [`Scalar::from_str`] (and produced by
//! `Display`) is
//!
//! ```text
//! p        p/q        r/s*i        p/q+r/s*i        -p/q-r/s*i
//! ```
//!
//! with an optional leading sign on each part and arbitrary interior
//! whitespace. A bare `i` (or `-i`) is also accepted.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::LiteralError;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    /// `num/den` as a real scalar. Panics if `den == 0`.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::new(BigRational::new(num.into(), den.into()), BigRational::zero())
    }

    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `|z|^2 = re^2 + im^2`, always a nonnegative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self::new(&self.re / &n, -&self.im / &n))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Sign of a real scalar: `Some(-1 | 0 | 1)`, `None` if the imaginary part is nonzero.
    pub fn real_sign(&self) -> Option<i32> {
        if !self.is_real() {
            return None;
        }
        Some(if self.re.is_positive() {
            1
        } else if self.re.is_negative() {
            -1
        } else {
            0
        })
    }

    /// Lowest common denominator of both parts.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.re.denom().lcm(self.im.denom())
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Self::new(r, BigRational::zero())
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar::new(&self.re * &rhs.re, BigRational::zero());
        }
        Scalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        let inv = rhs.inv().expect("division by zero scalar");
        self * &inv
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar { (&self).$m(rhs) }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-&self.re, -&self.im)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self += &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self -= &rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => fmt_rational(&self.re, f),
            (true, false) => {
                fmt_rational(&self.im, f)?;
                f.write_str("*i")
            }
            (false, false) => {
                fmt_rational(&self.re, f)?;
                if self.im.is_negative() {
                    f.write_str("-")?;
                    fmt_rational(&-self.im.clone(), f)?;
                } else {
                    f.write_str("+")?;
                    fmt_rational(&self.im, f)?;
                }
                f.write_str("*i")
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Byte-level cursor over a whitespace-stripped literal.
struct LiteralCursor<'a> {
    src: &'a [u8],
    pos: usize,
    original: &'a str,
}

impl<'a> LiteralCursor<'a> {
    fn err(&self, msg: &str) -> LiteralError {
        LiteralError {
            literal: self.original.to_string(),
            position: self.pos,
            message: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<Option<BigInt>, LiteralError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits
            .parse::<BigInt>()
            .map(Some)
            .map_err(|_| self.err("invalid integer"))
    }

    /// One signed term: `[+-] ( digits [/ digits] [*i] | i )`.
    /// Returns the value and whether it was imaginary.
    fn term(&mut self, sign_required: bool) -> Result<(BigRational, bool), LiteralError> {
        let negative = if self.eat(b'-') {
            true
        } else if self.eat(b'+') {
            false
        } else if sign_required {
            return Err(self.err("expected '+' or '-'"));
        } else {
            false
        };
        let value = if self.eat(b'i') {
            return Ok((signed(BigRational::one(), negative), true));
        } else {
            let num = self.integer()?.ok_or_else(|| self.err("expected digits"))?;
            if self.eat(b'/') {
                let den = self
                    .integer()?
                    .ok_or_else(|| self.err("expected denominator digits"))?;
                if den.is_zero() {
                    return Err(self.err("zero denominator"));
                }
                BigRational::new(num, den)
            } else {
                BigRational::from_integer(num)
            }
        };
        let imaginary = if self.eat(b'*') {
            if !self.eat(b'i') {
                return Err(self.err("expected 'i' after '*'"));
            }
            true
        } else {
            false
        };
        Ok((signed(value, negative), imaginary))
    }
}

fn signed(r: BigRational, negative: bool) -> BigRational {
    if negative {
        -r
    } else {
        r
    }
}

impl FromStr for Scalar {
    type Err = LiteralError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut cur = LiteralCursor {
            src: compact.as_bytes(),
            pos: 0,
            original: s,
        };
        if compact.is_empty() {
            return Err(cur.err("empty literal"));
        }
        let (first, first_im) = cur.term(false)?;
        let mut out = if first_im {
            Scalar::new(BigRational::zero(), first)
        } else {
            Scalar::new(first, BigRational::zero())
        };
        if cur.peek().is_some() {
            if first_im {
                return Err(cur.err("real part must come before imaginary part"));
            }
            let (second, second_im) = cur.term(true)?;
            if !second_im {
                return Err(cur.err("second term must be imaginary"));
            }
            out.im = second;
        }
        if cur.peek().is_some() {
            return Err(cur.err("trailing characters"));
        }
        Ok(out)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lit(s: &str) -> Scalar {
        s.parse().unwrap()
    }

    #[test]
    fn parses_grammar_forms() {
        assert_eq!(lit("3"), Scalar::from_int(3));
        assert_eq!(lit("-3/6"), Scalar::frac(-1, 2));
        assert_eq!(lit("1/2*i"), Scalar::frac(1, 2) * Scalar::i());
        assert_eq!(lit(" 1/2 + 3/4 * i "), Scalar::frac(1, 2) + Scalar::frac(3, 4) * Scalar::i());
        assert_eq!(lit("1-2*i"), Scalar::from_int(1) - Scalar::from_int(2) * Scalar::i());
        assert_eq!(lit("-i"), -Scalar::i());
        assert_eq!(lit("+5"), Scalar::from_int(5));
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "1/0", "1/", "x", "1+2", "2*i+1", "1*", "1/2*i*i", "--1"] {
            let err = bad.parse::<Scalar>();
            assert!(err.is_err(), "{bad:?} should fail");
        }
        let e = "12/x".parse::<Scalar>().unwrap_err();
        assert_eq!(e.position, 3);
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(lit("0/5").to_string(), "0");
        assert_eq!(lit("-0*i").to_string(), "0");
        assert_eq!(lit("4/8").to_string(), "1/2");
        assert_eq!(lit("i").to_string(), "1*i");
        assert_eq!(lit("1/2-1/3*i").to_string(), "1/2-1/3*i");
    }

    #[test]
    fn gaussian_inverse() {
        let z = lit("1+1*i");
        assert_eq!(&z * &z.inv().unwrap(), Scalar::one());
        assert_eq!(z.inv().unwrap(), lit("1/2-1/2*i"));
        assert!(Scalar::zero().inv().is_none());
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20).prop_map(|(a, b, c, d)| {
            Scalar::frac(a, b) + Scalar::frac(c, d) * Scalar::i()
        })
    }

    proptest! {
        #[test]
        fn add_then_sub_is_exact(a in arb_scalar(), b in arb_scalar()) {
            prop_assert_eq!(&(&a + &b) - &b, a);
        }

        #[test]
        fn display_round_trips(a in arb_scalar()) {
            prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
        }

        #[test]
        fn division_inverts_multiplication(a in arb_scalar(), b in arb_scalar()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!(&(&a * &b) / &b, a);
        }
    }
}
