//! Univariate polynomials over the Gaussian rationals.
//!
//! Besides ring arithmetic this module carries the root machinery the
//! eigenvalue criteria rest on:
//!
//! * [`sturm_distinct_real_roots`]: exact count of distinct real roots of a
//!   real-coefficient polynomial via a Sturm chain evaluated at -inf/+inf;
//! * [`all_roots_real`] / [`all_roots_purely_imaginary`]: spectral
//!   classification without root extraction, valid for any polynomial over
//!   Q(i);
//! * [`gaussian_spectrum`]: complete root extraction when the polynomial
//!   splits over Q(i), reporting `Unsplittable` otherwise. Unsplittable is a
//!   capability boundary, not a failure: the classification predicates above
//!   never need it.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::{dedup_gaussians, GaussianRational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyError {
    ZeroPolynomial,
    NonRealCoefficients,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ZeroPolynomial => write!(f, "zero polynomial"),
            PolyError::NonRealCoefficients => write!(f, "polynomial has non-real coefficients"),
        }
    }
}

/// Marker error for polynomials that do not split over Q(i).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Unsplittable;

impl fmt::Display for Unsplittable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "polynomial does not split over Q(i)")
    }
}

/// Polynomial over Q(i), coefficients lowest degree first.
///
/// The zero polynomial is the empty coefficient vector; otherwise the leading
/// coefficient is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<GaussianRational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![GaussianRational::one()],
        }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Poly::new(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: GaussianRational, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![GaussianRational::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// Builds a polynomial from integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| GaussianRational::from_int(c)).collect())
    }

    /// `t - root`.
    pub fn linear(root: &GaussianRational) -> Self {
        Poly::new(vec![-root, GaussianRational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&Rational::from_integer(BigInt::from(k))))
            .collect();
        Poly::new(coeffs)
    }

    pub fn scale(&self, c: &GaussianRational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient; panics on the zero polynomial.
    pub fn monic(&self) -> Poly {
        let lc = self.leading().expect("monic of zero polynomial");
        let inv = lc.inv().expect("leading coefficient is nonzero");
        self.scale(&inv)
    }

    /// `p(c * t)`: substitutes a scalar multiple of the variable.
    pub fn compose_scale(&self, c: &GaussianRational) -> Poly {
        let mut power = GaussianRational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let out = a * &power;
                power = &power * c;
                out
            })
            .collect();
        Poly::new(coeffs)
    }

    /// Quotient and remainder; panics if `divisor` is zero.
    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dlc = divisor.leading().unwrap().inv().unwrap();
        let ddeg = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let qlen = rem.len() - ddeg;
        let mut quot = vec![GaussianRational::zero(); qlen];
        for k in (0..qlen).rev() {
            let factor = &rem[k + ddeg] * &dlc;
            if factor.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let sub = &factor * dc;
                rem[k + j] = &rem[k + j] - &sub;
            }
            quot[k] = factor;
        }
        rem.truncate(ddeg);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Monic product of the distinct irreducible factors: `p / gcd(p, p')`.
    pub fn squarefree_part(&self) -> Poly {
        assert!(!self.is_zero(), "squarefree part of zero polynomial");
        let g = self.gcd(&self.derivative());
        let (q, r) = self.divrem(&g);
        debug_assert!(r.is_zero());
        q.monic()
    }

    /// True when every coefficient lies in Q.
    pub fn has_real_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_real())
    }

    fn real_coeffs(&self) -> Option<Vec<Rational>> {
        if !self.has_real_coeffs() {
            return None;
        }
        Some(self.coeffs.iter().map(|c| c.re.clone()).collect())
    }
}

impl core::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(&self.coeff(k) + &rhs.coeff(k));
        }
        Poly::new(coeffs)
    }
}

impl core::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(&self.coeff(k) - &rhs.coeff(k));
        }
        Poly::new(coeffs)
    }
}

impl core::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs =
            vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (j, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in rhs.coeffs.iter().enumerate() {
                let prod = a * b;
                coeffs[j + k] = &coeffs[j + k] + &prod;
            }
        }
        Poly::new(coeffs)
    }
}

impl core::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// Real-coefficient internals for the Sturm chain.
// ---------------------------------------------------------------------------

fn rp_trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn rp_derivative(p: &[Rational]) -> Vec<Rational> {
    if p.len() <= 1 {
        return Vec::new();
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
        .collect()
}

/// Remainder of `a` by `b`, `b` nonzero.
fn rp_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut rem: Vec<Rational> = a.to_vec();
    rp_trim(&mut rem);
    let bdeg = b.len() - 1;
    let blc = b.last().unwrap();
    while rem.len() > bdeg {
        let k = rem.len() - 1 - bdeg;
        let factor = rem.last().unwrap() / blc;
        for (j, bc) in b.iter().enumerate() {
            let sub = &factor * bc;
            rem[k + j] = &rem[k + j] - &sub;
        }
        rp_trim(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    rem
}

/// Scales so all coefficients are coprime integers; the factor is positive,
/// so signs everywhere on the real line are unchanged.
fn rp_normalize_content(p: &mut [Rational]) {
    if p.is_empty() {
        return;
    }
    let mut denom_lcm = BigInt::one();
    for c in p.iter() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let mut numer_gcd = BigInt::zero();
    for c in p.iter() {
        let scaled = c * Rational::from_integer(denom_lcm.clone());
        debug_assert!(scaled.denom().is_one());
        numer_gcd = numer_gcd.gcd(scaled.numer());
    }
    if numer_gcd.is_zero() {
        return;
    }
    let factor = Rational::new(denom_lcm, numer_gcd);
    for c in p.iter_mut() {
        *c = &*c * &factor;
    }
}

fn rational_sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Sign of `p` at +inf (`dir = 1`) or -inf (`dir = -1`).
fn rp_sign_at_infinity(p: &[Rational], dir: i8) -> i8 {
    match p.last() {
        None => 0,
        Some(lc) => {
            let s = rational_sign(lc);
            if dir > 0 || (p.len() - 1).is_multiple_of(2) {
                s
            } else {
                -s
            }
        }
    }
}

fn sign_variations(signs: &[i8]) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for &s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of a real-coefficient polynomial.
///
/// Counts over the whole real line by the classical Sturm chain; multiple
/// roots are counted once (the chain ends at a gcd multiple, which scales all
/// signs uniformly at any non-root, so the variation count is unaffected).
pub fn sturm_distinct_real_roots(p: &Poly) -> Result<usize, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let coeffs = p.real_coeffs().ok_or(PolyError::NonRealCoefficients)?;
    Ok(sturm_count_real(&coeffs))
}

fn sturm_count_real(coeffs: &[Rational]) -> usize {
    let mut p0 = coeffs.to_vec();
    rp_trim(&mut p0);
    if p0.len() <= 1 {
        // Nonzero constant: no roots.
        return 0;
    }
    rp_normalize_content(&mut p0);
    let mut chain = vec![p0];
    let mut p1 = rp_derivative(&chain[0]);
    rp_normalize_content(&mut p1);
    chain.push(p1);
    loop {
        let n = chain.len();
        if chain[n - 1].is_empty() {
            chain.pop();
            break;
        }
        if chain[n - 1].len() == 1 {
            break;
        }
        let mut r = rp_rem(&chain[n - 2], &chain[n - 1]);
        for c in r.iter_mut() {
            *c = -c.clone();
        }
        rp_normalize_content(&mut r);
        if r.is_empty() {
            break;
        }
        chain.push(r);
    }
    let at_minus: Vec<i8> = chain.iter().map(|q| rp_sign_at_infinity(q, -1)).collect();
    let at_plus: Vec<i8> = chain.iter().map(|q| rp_sign_at_infinity(q, 1)).collect();
    sign_variations(&at_minus) - sign_variations(&at_plus)
}

/// True iff every complex root of `p` is real.
///
/// If all roots are real then `p` divided by its leading coefficient has real
/// coefficients, so a non-real coefficient ratio settles the question without
/// any root counting. Otherwise the squarefree part is compared against its
/// Sturm count.
pub fn all_roots_real(p: &Poly) -> Result<bool, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let monic = p.monic();
    if !monic.has_real_coeffs() {
        return Ok(false);
    }
    let q = monic.squarefree_part();
    let deg = q.degree().unwrap();
    Ok(sturm_distinct_real_roots(&q)? == deg)
}

/// True iff every complex root of `p` has zero real part.
///
/// Substitutes `t = i*s` and defers to [`all_roots_real`]: the roots of
/// `p(i*s)` are real exactly when those of `p` are purely imaginary.
pub fn all_roots_purely_imaginary(p: &Poly) -> Result<bool, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    all_roots_real(&p.compose_scale(&GaussianRational::i()))
}

// ---------------------------------------------------------------------------
// Root extraction over Q(i): Gaussian-integer divisor search.
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn new(re: BigInt, im: BigInt) -> Self {
        GaussInt { re, im }
    }

    fn zero() -> Self {
        GaussInt::new(BigInt::zero(), BigInt::zero())
    }

    fn one() -> Self {
        GaussInt::new(BigInt::one(), BigInt::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    fn mul(&self, rhs: &GaussInt) -> GaussInt {
        GaussInt::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }

    fn conj(&self) -> GaussInt {
        GaussInt::new(self.re.clone(), -self.im.clone())
    }

    /// Euclidean division: quotient with both components rounded to nearest.
    fn div_round(&self, rhs: &GaussInt) -> GaussInt {
        let n = rhs.norm();
        let num = self.mul(&rhs.conj());
        GaussInt::new(round_div(&num.re, &n), round_div(&num.im, &n))
    }

    fn sub(&self, rhs: &GaussInt) -> GaussInt {
        GaussInt::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }

    fn divides_exactly(&self, dividend: &GaussInt) -> Option<GaussInt> {
        let q = dividend.div_round(self);
        if q.mul(self) == *dividend {
            Some(q)
        } else {
            None
        }
    }
}

fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    // Round a/b to the nearest integer: floor((floor(2a/b) + 1) / 2).
    let two_a: BigInt = a * BigInt::from(2);
    let q = two_a.div_mod_floor(b).0;
    (q + BigInt::one()).div_mod_floor(&BigInt::from(2)).0
}

fn factor_integer(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut push = |p: BigInt, e: u32| {
        if e > 0 {
            out.push((p, e));
        }
    };
    let mut e2 = 0;
    while n.is_even() {
        n /= 2;
        e2 += 1;
    }
    push(BigInt::from(2), e2);
    let mut d = BigInt::from(3);
    while &d * &d <= n {
        let mut e = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        push(d.clone(), e);
        d += 2;
    }
    if n > BigInt::one() {
        push(n, 1);
    }
    out
}

/// A Gaussian prime above the rational prime `p`.
fn gaussian_prime_above(p: &BigInt) -> GaussInt {
    if *p == BigInt::from(2) {
        return GaussInt::new(BigInt::one(), BigInt::one());
    }
    if (p % 4u8) == BigInt::from(3) {
        return GaussInt::new(p.clone(), BigInt::zero());
    }
    // p = 1 mod 4: find a^2 + b^2 = p by search.
    let bound = num_integer::Roots::sqrt(p);
    let mut a = BigInt::one();
    while a <= bound {
        let b2 = p - &a * &a;
        let b = b2.sqrt();
        if &b * &b == b2 {
            return GaussInt::new(a, b);
        }
        a += 1;
    }
    unreachable!("prime 1 mod 4 is a sum of two squares");
}

/// All divisors of a nonzero Gaussian integer, one per associate class.
fn gaussian_divisors(z: &GaussInt) -> Vec<GaussInt> {
    let mut primes: Vec<(GaussInt, u32)> = Vec::new();
    let mut rest = z.clone();
    for (p, _) in factor_integer(&z.norm()) {
        for pi in [gaussian_prime_above(&p), gaussian_prime_above(&p).conj()] {
            let mut e = 0;
            while let Some(q) = pi.divides_exactly(&rest) {
                rest = q;
                e += 1;
            }
            if e > 0 {
                primes.push((pi.clone(), e));
            }
        }
    }
    debug_assert_eq!(rest.norm(), BigInt::one(), "unit should remain");
    let mut divisors = vec![GaussInt::one()];
    for (pi, e) in primes {
        let mut next = Vec::with_capacity(divisors.len() * (e as usize + 1));
        for d in &divisors {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..e {
                acc = acc.mul(&pi);
                next.push(acc.clone());
            }
        }
        divisors = next;
    }
    divisors
}

fn gaussint_to_rational(z: &GaussInt) -> GaussianRational {
    GaussianRational::new(
        Rational::from_integer(z.re.clone()),
        Rational::from_integer(z.im.clone()),
    )
}

/// Clears denominators and content: returns the coefficients of a primitive
/// Gaussian-integer multiple of `p`.
fn primitive_gauss_int_coeffs(p: &Poly) -> Vec<GaussInt> {
    let mut denom_lcm = BigInt::one();
    for c in p.coeffs() {
        denom_lcm = denom_lcm.lcm(c.re.denom());
        denom_lcm = denom_lcm.lcm(c.im.denom());
    }
    let scale = Rational::from_integer(denom_lcm);
    let mut ints: Vec<GaussInt> = p
        .coeffs()
        .iter()
        .map(|c| {
            let re = &c.re * &scale;
            let im = &c.im * &scale;
            debug_assert!(re.denom().is_one() && im.denom().is_one());
            GaussInt::new(re.numer().clone(), im.numer().clone())
        })
        .collect();
    // Remove the Gaussian-integer content by Euclid.
    let mut g = GaussInt::zero();
    for c in &ints {
        g = gauss_gcd(&g, c);
    }
    if !g.is_zero() && g.norm() != BigInt::one() {
        for c in ints.iter_mut() {
            *c = g.divides_exactly(c).expect("content divides");
        }
    }
    ints
}

fn gauss_gcd(a: &GaussInt, b: &GaussInt) -> GaussInt {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let q = a.div_round(&b);
        let r = a.sub(&q.mul(&b));
        a = b;
        b = r;
    }
    a
}

/// All roots of a monic `p` in Q(i) with multiplicities, if `p` splits there.
///
/// Candidates come from the rational-root theorem over the UFD Z\[i\]: after
/// clearing denominators, a root in lowest terms has numerator dividing the
/// constant term and denominator dividing the leading coefficient, up to
/// units. Each root found is deflated out and the search restarts on the
/// quotient; a nonconstant rootless quotient means `p` does not split.
pub fn gaussian_spectrum(p: &Poly) -> Result<Vec<(GaussianRational, usize)>, Unsplittable> {
    assert!(!p.is_zero(), "spectrum of the zero polynomial");
    assert!(p.is_monic(), "gaussian_spectrum requires a monic polynomial");
    let mut roots: Vec<(GaussianRational, usize)> = Vec::new();
    let mut q = p.clone();

    // Roots at zero first so the constant term below is nonzero.
    let mut zero_mult = 0;
    while !q.is_zero() && q.coeff(0).is_zero() && q.degree() != Some(0) {
        let (quot, rem) = q.divrem(&Poly::monomial(GaussianRational::one(), 1));
        debug_assert!(rem.is_zero());
        q = quot;
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((GaussianRational::zero(), zero_mult));
    }

    'outer: while q.degree().unwrap_or(0) > 0 {
        let ints = primitive_gauss_int_coeffs(&q);
        let a0 = ints.first().unwrap().clone();
        let an = ints.last().unwrap().clone();
        debug_assert!(!a0.is_zero());
        let units = [
            GaussianRational::one(),
            -GaussianRational::one(),
            GaussianRational::i(),
            -GaussianRational::i(),
        ];
        let mut candidates = Vec::new();
        for r in gaussian_divisors(&a0) {
            for s in gaussian_divisors(&an) {
                let num = gaussint_to_rational(&r);
                let den = gaussint_to_rational(&s);
                let base = &num * &den.inv().expect("divisor of leading coeff is nonzero");
                for u in &units {
                    candidates.push(&base * u);
                }
            }
        }
        dedup_gaussians(&mut candidates);
        for lambda in candidates {
            if q.eval(&lambda).is_zero() {
                let mut mult = 0;
                let lin = Poly::linear(&lambda);
                loop {
                    let (quot, rem) = q.divrem(&lin);
                    if rem.is_zero() {
                        q = quot;
                        mult += 1;
                        if q.eval(&lambda).is_zero() && q.degree().unwrap_or(0) > 0 {
                            continue;
                        }
                    }
                    break;
                }
                roots.push((lambda, mult));
                continue 'outer;
            }
        }
        return Err(Unsplittable);
    }
    Ok(roots)
}
