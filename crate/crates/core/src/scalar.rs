//! Exact scalars: arbitrary-precision rationals and Gaussian rationals.
//!
//! `Rational` is `num_rational::BigRational`; it already maintains the
//! invariants we need (reduced fraction, positive denominator). The field
//! Q(i) is provided by [`GaussianRational`], closed under the four
//! arithmetic operations, conjugation, and inversion of nonzero elements.
//!
//! Literal syntax, used by every text interface of the workspace:
//!
//! * rational: `a/b`, the `/b` omitted when the denominator is 1 (`"-3/2"`,
//!   `"2"`);
//! * Gaussian rational: `a/b+c/d*i` with optional signs, either component
//!   omitted when zero (`"-3/2+1*i"`, `"2"`, `"i"`).

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// Error parsing a rational or Gaussian-rational literal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseScalarError {
    pub input: String,
}

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid scalar literal: `{}`", self.input)
    }
}

/// Shorthand constructor for small rationals. Panics on a zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rational {
    assert!(denom != 0, "zero denominator");
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `a/b` (or plain `a`). Rejects zero denominators instead of panicking.
pub fn parse_rational(s: &str) -> Result<Rational, ParseScalarError> {
    let err = || ParseScalarError {
        input: String::from(s),
    };
    let s = s.trim();
    if s.is_empty() {
        return Err(err());
    }
    match s.split_once('/') {
        None => {
            let n = BigInt::from_str(s).map_err(|_| err())?;
            Ok(Rational::from_integer(n))
        }
        Some((a, b)) => {
            let n = BigInt::from_str(a.trim()).map_err(|_| err())?;
            let d = BigInt::from_str(b.trim()).map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Formats a rational as `a/b`, omitting `/b` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    use alloc::format;
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// An element of Q(i), stored as exact real and imaginary parts.
#[derive(Clone, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::zero(),
        }
    }

    pub fn one() -> Self {
        GaussianRational {
            re: Rational::one(),
            im: Rational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational {
            re: Rational::from_integer(BigInt::from(n)),
            im: Rational::zero(),
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        GaussianRational {
            re: r,
            im: Rational::zero(),
        }
    }

    /// `a + b*i` from integer parts; test and table convenience.
    pub fn from_parts(re: i64, im: i64) -> Self {
        GaussianRational {
            re: Rational::from_integer(BigInt::from(re)),
            im: Rational::from_integer(BigInt::from(im)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_purely_imaginary(&self) -> bool {
        self.re.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `|z|^2 = re^2 + im^2`, a rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussianRational {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GaussianRational {
            re: &self.re * r,
            im: &self.im * r,
        }
    }

    /// Multiplication by `i` in place of building `i` and multiplying.
    pub fn mul_i(&self) -> Self {
        GaussianRational {
            re: -self.im.clone(),
            im: self.re.clone(),
        }
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: GaussianRational) -> GaussianRational {
        &self + &rhs
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: GaussianRational) -> GaussianRational {
        &self - &rhs
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: GaussianRational) -> GaussianRational {
        &self * &rhs
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut wrote_re = false;
        if !self.re.is_zero() {
            write!(f, "{}", format_rational(&self.re))?;
            wrote_re = true;
        }
        if !self.im.is_zero() {
            if wrote_re && self.im.is_positive() {
                write!(f, "+")?;
            }
            write!(f, "{}*i", format_rational(&self.im))?;
        }
        Ok(())
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GaussianRational {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_gaussian(s)
    }
}

/// Parses `a/b+c/d*i`; accepts `a/b`, `c/d*i`, `i`, `-i` as degenerate forms.
pub fn parse_gaussian(s: &str) -> Result<GaussianRational, ParseScalarError> {
    let err = || ParseScalarError {
        input: String::from(s),
    };
    let t = s.trim();
    if t.is_empty() {
        return Err(err());
    }
    if !t.contains('i') {
        return Ok(GaussianRational::from_rational(parse_rational(t)?));
    }
    // Split off the real part: the separating sign is a '+'/'-' that is not
    // the leading sign. The imaginary tail must contain the 'i'.
    let bytes = t.as_bytes();
    let mut split = None;
    for (idx, &b) in bytes.iter().enumerate().skip(1) {
        if b == b'+' || b == b'-' {
            split = Some(idx);
            break;
        }
    }
    let (re_str, im_str) = match split {
        Some(idx) => (&t[..idx], &t[idx..]),
        None => ("", t),
    };
    if re_str.contains('i') {
        return Err(err());
    }
    let re = if re_str.is_empty() {
        Rational::zero()
    } else {
        parse_rational(re_str)?
    };
    let im_str = im_str.trim();
    let im_body = im_str.strip_suffix('i').ok_or_else(err)?;
    let im = match im_body {
        "" | "+" => Rational::one(),
        "-" => -Rational::one(),
        _ => {
            let coeff = im_body.strip_suffix('*').ok_or_else(err)?;
            match coeff {
                "+" => Rational::one(),
                "-" => -Rational::one(),
                _ => parse_rational(coeff)?,
            }
        }
    };
    Ok(GaussianRational::new(re, im))
}

/// Sum of a slice of Gaussian rationals.
pub fn gaussian_sum<'a, I: IntoIterator<Item = &'a GaussianRational>>(iter: I) -> GaussianRational {
    let mut acc = GaussianRational::zero();
    for x in iter {
        acc = &acc + x;
    }
    acc
}

/// Orders Gaussian rationals lexicographically by (re, im); used only for
/// deterministic dedup/sort, not as a field order.
pub fn lex_cmp(a: &GaussianRational, b: &GaussianRational) -> core::cmp::Ordering {
    a.re.cmp(&b.re).then_with(|| a.im.cmp(&b.im))
}

/// Deduplicates a candidate list in place using the lexicographic order.
pub fn dedup_gaussians(v: &mut Vec<GaussianRational>) {
    v.sort_by(lex_cmp);
    v.dedup();
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parse_and_format_rationals() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-4/2").unwrap(), rat(-2, 1));
        assert_eq!(format_rational(&rat(-3, 2)), "-3/2");
        assert_eq!(format_rational(&rat(2, 1)), "2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn parse_gaussian_literals() {
        let z = parse_gaussian("-3/2+1*i").unwrap();
        assert_eq!(z.re, rat(-3, 2));
        assert_eq!(z.im, rat(1, 1));
        assert_eq!(parse_gaussian("2").unwrap(), GaussianRational::from_int(2));
        assert_eq!(parse_gaussian("i").unwrap(), GaussianRational::i());
        assert_eq!(parse_gaussian("-i").unwrap(), -GaussianRational::i());
        assert_eq!(
            parse_gaussian("1/2-2/3*i").unwrap(),
            GaussianRational::new(rat(1, 2), rat(-2, 3))
        );
        assert!(parse_gaussian("1*i+2").is_err());
        assert!(parse_gaussian("2i").is_err());
    }

    #[test]
    fn display_round_trips() {
        let samples = [
            GaussianRational::zero(),
            GaussianRational::from_int(-7),
            GaussianRational::i(),
            GaussianRational::new(rat(-3, 2), rat(1, 1)),
            GaussianRational::new(rat(0, 1), rat(-5, 3)),
            GaussianRational::new(rat(2, 7), rat(2, 7)),
        ];
        for z in &samples {
            let s = z.to_string();
            assert_eq!(&parse_gaussian(&s).unwrap(), z, "round trip of `{s}`");
        }
    }

    #[test]
    fn field_operations() {
        let z = GaussianRational::new(rat(3, 2), rat(-1, 3));
        let w = GaussianRational::new(rat(-2, 5), rat(7, 4));
        let prod = &z * &w;
        let back = &prod * &w.inv().unwrap();
        assert_eq!(back, z);
        assert_eq!(&z * &z.conj(), GaussianRational::from_rational(z.norm_sqr()));
        assert!(GaussianRational::zero().inv().is_none());
        assert_eq!(z.mul_i(), &z * &GaussianRational::i());
    }
}
