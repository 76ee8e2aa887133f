//! Exact scalars: arbitrary-precision rationals and the Gaussian field ℚ(i).
//!
//! Every coefficient in the crate is a [`GaussianRational`]. Values are kept
//! in canonical form at construction, so `==` is structural equality.
//!
//! The text form is `R`, `Ri`, `R+Ri` or `R-Ri` where `R` is `[-]p[/q]`.
//! Whitespace is ignored. A bare `i` (or `-i`, `2+i`) is accepted as a unit
//! imaginary coefficient.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("malformed scalar {text:?}: unexpected token {token:?}")]
    Parse { text: String, token: String },
    #[error("division by zero")]
    DivisionByZero,
}

/// An exact rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numerator: i64, denominator: i64) -> Result<Self, ScalarError> {
        if denominator == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numerator.into(), denominator.into())))
    }

    pub fn from_big(numerator: BigInt, denominator: BigInt) -> Result<Self, ScalarError> {
        if denominator.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numerator, denominator)))
    }

    pub fn integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self * &other.inv()?)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl FromStr for Rational {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_rational(s, s)
    }
}

fn parse_rational(token: &str, whole: &str) -> Result<Rational, ScalarError> {
    let bad = |tok: &str| ScalarError::Parse {
        text: whole.to_string(),
        token: tok.to_string(),
    };
    let (negative, body) = match token.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, token),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) {
        return Err(bad(token));
    }
    let mut numerator: BigInt = num.parse().map_err(|_| bad(num))?;
    if negative {
        numerator = -numerator;
    }
    let denominator: BigInt = match den {
        Some(d) if digits(d) => d.parse().map_err(|_| bad(d))?,
        Some(d) => return Err(bad(d)),
        None => BigInt::one(),
    };
    Rational::from_big(numerator, denominator)
}

macro_rules! forward_binop {
    ($ty:ident, $trait:ident, $method:ident, $assign_trait:ident, $assign:ident) => {
        impl $trait<&$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                self.clone().$method(rhs)
            }
        }
        impl $trait<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$method(&rhs)
            }
        }
        impl $trait<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.clone().$method(&rhs)
            }
        }
        impl $assign_trait<&$ty> for $ty {
            fn $assign(&mut self, rhs: &$ty) {
                let lhs = std::mem::take(self);
                *self = lhs.$method(rhs);
            }
        }
        impl $assign_trait<$ty> for $ty {
            fn $assign(&mut self, rhs: $ty) {
                let lhs = std::mem::take(self);
                *self = lhs.$method(&rhs);
            }
        }
    };
}

impl Add<&Rational> for Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational(self.0 + &rhs.0)
    }
}

impl Sub<&Rational> for Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational(self.0 - &rhs.0)
    }
}

impl Mul<&Rational> for Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational(self.0 * &rhs.0)
    }
}

forward_binop!(Rational, Add, add, AddAssign, add_assign);
forward_binop!(Rational, Sub, sub, SubAssign, sub_assign);
forward_binop!(Rational, Mul, mul, MulAssign, mul_assign);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// An element `re + im·i` of ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(Rational::integer(n))
    }

    /// `p/q` as a real scalar. Panics if `q == 0`; use [`Rational::new`] for a checked path.
    pub fn ratio(p: i64, q: i64) -> Self {
        Self::real(Rational::new(p, q).expect("nonzero denominator"))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.im.is_zero() && self.re == Rational::one()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `|z|² = re² + im²`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        let n = self.norm_sqr().inv()?;
        Ok(GaussianRational {
            re: &self.re * &n,
            im: -(&self.im * &n),
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self * &other.inv()?)
    }

    /// Multiplication by `i`, cheaper than a general product.
    pub fn mul_i(&self) -> Self {
        GaussianRational {
            re: -&self.im,
            im: self.re.clone(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GaussianRational {
            re: &self.re * r,
            im: &self.im * r,
        }
    }
}

impl Add<&GaussianRational> for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: self.re + &rhs.re,
            im: self.im + &rhs.im,
        }
    }
}

impl Sub<&GaussianRational> for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: self.re - &rhs.re,
            im: self.im - &rhs.im,
        }
    }
}

impl Mul<&GaussianRational> for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::real(self.re * &rhs.re);
        }
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: self.re * &rhs.im + self.im * &rhs.re,
        }
    }
}

forward_binop!(GaussianRational, Add, add, AddAssign, add_assign);
forward_binop!(GaussianRational, Sub, sub, SubAssign, sub_assign);
forward_binop!(GaussianRational, Mul, mul, MulAssign, mul_assign);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        Self::real(r)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}i", self.re, sign, self.im.abs())
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GaussianRational {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_scalar(s)
    }
}

impl serde::Serialize for GaussianRational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parses the scalar text grammar into canonical form.
pub fn parse_scalar(text: &str) -> Result<GaussianRational, ScalarError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(ScalarError::Parse {
            text: text.to_string(),
            token: String::new(),
        });
    }
    let Some(body) = compact.strip_suffix('i') else {
        return Ok(GaussianRational::real(parse_rational(&compact, text)?));
    };
    // the real/imaginary split is the last sign that is not a leading one
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(k, _)| k)
        .last();
    let (re_text, im_text) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };
    let re = if re_text.is_empty() {
        Rational::zero()
    } else {
        parse_rational(re_text, text)?
    };
    let im_text = im_text.strip_prefix('+').unwrap_or(im_text);
    let im = match im_text {
        "" => Rational::one(),
        "-" => -Rational::one(),
        t => parse_rational(t, text)?,
    };
    Ok(GaussianRational { re, im })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p, d).unwrap()
    }

    fn g(a: (i64, i64), b: (i64, i64)) -> GaussianRational {
        GaussianRational::new(q(a.0, a.1), q(b.0, b.1))
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_scalar("0").unwrap(), GaussianRational::zero());
        assert_eq!(parse_scalar("-1/2+3i").unwrap(), g((-1, 2), (3, 1)));
        assert_eq!(parse_scalar("2/4").unwrap(), g((1, 2), (0, 1)));
        assert_eq!(parse_scalar("-1/2i").unwrap(), g((0, 1), (-1, 2)));
        assert_eq!(parse_scalar("1 - 2/3 i").unwrap(), g((1, 1), (-2, 3)));
        assert_eq!(parse_scalar("i").unwrap(), GaussianRational::i());
        assert_eq!(parse_scalar("-i").unwrap(), -GaussianRational::i());
        assert_eq!(parse_scalar("-3/6").unwrap().to_string(), "-1/2");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_scalar("1/0"), Err(ScalarError::DivisionByZero));
        assert_eq!(parse_scalar("3+0/0i"), Err(ScalarError::DivisionByZero));
        for bad in ["", "x", "1/", "/2", "1//2", "1.5", "1--2i", "2i+1", "1/-2"] {
            match parse_scalar(bad) {
                Err(ScalarError::Parse { .. }) => {}
                other => panic!("{bad:?} parsed as {other:?}"),
            }
        }
        let Err(ScalarError::Parse { token, .. }) = parse_scalar("1/2x") else {
            panic!()
        };
        assert_eq!(token, "2x");
    }

    #[test]
    fn field_examples() {
        let a = g((1, 1), (1, 1));
        assert_eq!(&a * &a.conj(), GaussianRational::from_int(2));
        assert_eq!(GaussianRational::i().inv().unwrap(), -GaussianRational::i());
        assert_eq!(
            GaussianRational::ratio(1, 3) + GaussianRational::ratio(1, 6),
            GaussianRational::ratio(1, 2)
        );
        assert_eq!(GaussianRational::zero().inv(), Err(ScalarError::DivisionByZero));
        assert_eq!(
            a.checked_div(&GaussianRational::zero()),
            Err(ScalarError::DivisionByZero)
        );
        assert_eq!(GaussianRational::i().mul_i(), GaussianRational::from_int(-1));
    }

    #[test]
    fn arbitrary_precision_does_not_overflow() {
        let mut x = GaussianRational::new(q(3, 7), q(-5, 11));
        for _ in 0..8 {
            x = &x * &x;
        }
        let back = x.inv().unwrap().inv().unwrap();
        assert_eq!(back, x);
        assert!(x.re.numerator().bits() > 64);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..20).prop_map(|(p, d)| q(p, d))
    }

    fn gaussian() -> impl Strategy<Value = GaussianRational> {
        (small_rational(), small_rational()).prop_map(|(re, im)| GaussianRational::new(re, im))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn field_axioms(a in gaussian(), b in gaussian(), c in gaussian()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!((&a * &b).conj(), a.conj() * b.conj());
            prop_assert_eq!(a.conj().conj(), a.clone());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn format_parse_roundtrip(a in gaussian()) {
            prop_assert_eq!(parse_scalar(&a.to_string()).unwrap(), a);
        }
    }
}
