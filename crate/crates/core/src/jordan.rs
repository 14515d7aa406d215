//! Complete Jordan decomposition and exactness of the Kostant-Kirillov form.
//!
//! Any square matrix over Q(i) splits uniquely as `M = S + N` with `S`
//! semisimple, `N` nilpotent, `SN = NS` ([`jordan_chevalley`]; a Newton lift
//! against the squarefree part of the characteristic polynomial, exact at
//! every step). When the spectrum of `S` lies in Q(i) the semisimple part
//! splits further into commuting compact and hyperbolic pieces
//! `S = K + H` with `K` having purely imaginary and `H` real spectrum
//! ([`compact_hyperbolic_split`], by exact Lagrange spectral projectors).
//! Together: `M = N + K + H`, the complete decomposition.
//!
//! Exactness of the Kostant-Kirillov form on the adjoint orbit of `M` is
//! decided by the spectrum of `ad(M)`: the real part of the form is exact
//! iff all eigenvalues of `ad(M)` are real, the imaginary part iff all are
//! purely imaginary. [`kk_verdict`] decides both through the Sturm-based
//! classifiers, which need no root extraction, so the verdict is available
//! for every rational input even when Q(i) does not split the spectrum; the
//! spectral split, when it exists, is a bonus witness, not the decision
//! procedure.
//!
//! For inputs with real rational entries, [`real_form_verdict`] applies the
//! real-case criterion: the form is exact iff the compact part vanishes,
//! equivalently iff `ad(M)` has real spectrum. The underlying theorem
//! assumes a semisimple maximal compact subgroup and finite center; the
//! verdict applies the eigenvalue criterion to matrix inputs without
//! checking those group hypotheses.

use alloc::vec::Vec;
use core::fmt;

use crate::lie::{LieAlgebraSpec, LieError};
use crate::matrix::ExactMatrix;
use crate::poly::{all_roots_purely_imaginary, all_roots_real, gaussian_spectrum, Poly};
use crate::scalar::GaussianRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JordanError {
    /// The minimal polynomial of the semisimple part does not split over
    /// Q(i); a capability boundary, not a failure of the input.
    UnsplittableSpectrum,
    /// `compact_hyperbolic_split` was handed a non-semisimple matrix.
    NotSemisimple,
    NotInAlgebra,
    /// `real_form_verdict` requires real rational entries.
    NotRealEntries,
}

impl fmt::Display for JordanError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JordanError::UnsplittableSpectrum => {
                write!(f, "spectrum does not split over Q(i)")
            }
            JordanError::NotSemisimple => write!(f, "matrix is not semisimple"),
            JordanError::NotInAlgebra => write!(f, "matrix is not in the algebra"),
            JordanError::NotRealEntries => write!(f, "matrix entries are not real"),
        }
    }
}

impl From<LieError> for JordanError {
    fn from(e: LieError) -> Self {
        match e {
            LieError::NotInAlgebra => JordanError::NotInAlgebra,
            _ => JordanError::NotInAlgebra,
        }
    }
}

/// `M = S + N`, `S` semisimple with squarefree minimal polynomial, `N`
/// nilpotent, `SN = NS`. Exists for every square matrix over Q(i).
///
/// Newton lift: with `q` the squarefree part of the characteristic
/// polynomial and `v` the Bezout inverse of `q'` mod `q`, iterate
/// `S <- S - q(S) v(S)` until `q(S) = 0`; each iterate is a polynomial in
/// `M`, so commutation is automatic.
pub fn jordan_chevalley(m: &ExactMatrix) -> (ExactMatrix, ExactMatrix) {
    assert!(m.is_square(), "jordan_chevalley needs a square matrix");
    let n = m.rows();
    let p = m.charpoly().expect("square");
    let q = p.squarefree_part();
    let mut s = m.clone();
    if q.degree() == Some(0) {
        // Zero-dimensional corner: nothing to lift.
        return (s, ExactMatrix::zero(n, n));
    }
    // gcd(q, q') = 1, so u q + v q' = 1 for some u, v.
    let (_, v) = bezout(&q, &q.derivative());
    let mut guard = 0;
    loop {
        let qs = s.eval_poly(&q);
        if qs.is_zero() {
            break;
        }
        let step = qs.mul(&s.eval_poly(&v));
        s = s.sub(&step);
        guard += 1;
        assert!(guard <= n + 1, "Newton lift failed to converge");
    }
    let nil = m.sub(&s);
    (s, nil)
}

/// Extended Euclid specialized to coprime inputs: returns `(u, v)` with
/// `u a + v b = 1`.
fn bezout(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut u0 = Poly::one();
    let mut u1 = Poly::zero();
    let mut v0 = Poly::zero();
    let mut v1 = Poly::one();
    while !r1.is_zero() {
        let (quot, rem) = r0.divrem(&r1);
        let nu = &u0 - &(&quot * &u1);
        let nv = &v0 - &(&quot * &v1);
        r0 = r1;
        r1 = rem;
        u0 = u1;
        u1 = nu;
        v0 = v1;
        v1 = nv;
    }
    // r0 = gcd = u0 a + v0 b; scale to make it 1.
    let lc = r0.leading().expect("gcd of coprime polys is nonzero");
    let inv = lc.inv().expect("nonzero");
    assert!(r0.degree() == Some(0), "inputs were not coprime");
    (u0.scale(&inv), v0.scale(&inv))
}

/// Splits a semisimple matrix into compact + hyperbolic parts via exact
/// spectral projectors, provided the spectrum lies in Q(i).
///
/// Returns `(compact, hyperbolic)`: `compact = sum i Im(l) P_l` and
/// `hyperbolic = sum Re(l) P_l` over the distinct eigenvalues `l`.
pub fn compact_hyperbolic_split(
    s: &ExactMatrix,
) -> Result<(ExactMatrix, ExactMatrix), JordanError> {
    assert!(s.is_square(), "split needs a square matrix");
    let n = s.rows();
    let min_poly = s.charpoly().expect("square").squarefree_part();
    if !s.eval_poly(&min_poly).is_zero() {
        return Err(JordanError::NotSemisimple);
    }
    let spectrum =
        gaussian_spectrum(&min_poly).map_err(|_| JordanError::UnsplittableSpectrum)?;
    let mut compact = ExactMatrix::zero(n, n);
    let mut hyperbolic = ExactMatrix::zero(n, n);
    for (lam, _) in &spectrum {
        // Lagrange projector P = prod_{mu != lam} (S - mu I) / (lam - mu).
        let mut projector = ExactMatrix::identity(n);
        for (mu, _) in &spectrum {
            if mu == lam {
                continue;
            }
            let denom = (lam - mu).inv().expect("distinct eigenvalues");
            let mut shifted = s.clone();
            for i in 0..n {
                let v = shifted.at(i, i) - mu;
                shifted.set(i, i, v);
            }
            projector = projector.mul(&shifted.scale(&denom));
        }
        let re_part = GaussianRational::from_rational(lam.re.clone());
        let im_part = GaussianRational::new(crate::scalar::rat(0, 1), lam.im.clone());
        hyperbolic = hyperbolic.add(&projector.scale(&re_part));
        compact = compact.add(&projector.scale(&im_part));
    }
    debug_assert_eq!(compact.add(&hyperbolic), *s);
    Ok((compact, hyperbolic))
}

/// The three commuting pieces `M = nilpotent + compact + hyperbolic`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompleteDecomposition {
    pub nilpotent: ExactMatrix,
    pub compact: ExactMatrix,
    pub hyperbolic: ExactMatrix,
}

/// Complete Jordan decomposition, when the semisimple spectrum splits.
pub fn complete_decomposition(m: &ExactMatrix) -> Result<CompleteDecomposition, JordanError> {
    let (s, nilpotent) = jordan_chevalley(m);
    let (compact, hyperbolic) = compact_hyperbolic_split(&s)?;
    Ok(CompleteDecomposition {
        nilpotent,
        compact,
        hyperbolic,
    })
}

/// Classification of the ad-spectrum behind an exactness verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumClass {
    Nilpotent,
    AllReal,
    AllImaginary,
    Mixed,
}

impl SpectrumClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            SpectrumClass::Nilpotent => "nilpotent",
            SpectrumClass::AllReal => "all-real",
            SpectrumClass::AllImaginary => "all-imaginary",
            SpectrumClass::Mixed => "mixed",
        }
    }
}

impl fmt::Display for SpectrumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// Exactness of `Re w` and `Im w` on the adjoint orbit of the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactnessVerdict {
    pub re_exact: bool,
    pub im_exact: bool,
    pub spectrum_class: SpectrumClass,
}

/// Decides exactness of the real and imaginary parts of the
/// Kostant-Kirillov form on the orbit of `m` inside the given algebra.
///
/// `Re w` is exact iff all eigenvalues of `ad(m)` are real; `Im w` iff all
/// are purely imaginary; both hold iff `ad(m)` is nilpotent (the charpoly is
/// `t^dim`). Decided by Sturm classification of `charpoly(ad m)`, so no
/// eigenvalue extraction is ever needed.
pub fn kk_verdict(spec: &LieAlgebraSpec, m: &ExactMatrix) -> Result<ExactnessVerdict, LieError> {
    let ad = spec.ad_matrix(m)?;
    let p = ad.charpoly().expect("ad matrix is square");
    let re_exact = all_roots_real(&p).expect("charpoly is nonzero");
    let im_exact = all_roots_purely_imaginary(&p).expect("charpoly is nonzero");
    let dim = ad.rows();
    let nilpotent = (0..dim).all(|k| p.coeff(k).is_zero());
    let spectrum_class = match (nilpotent, re_exact, im_exact) {
        (true, _, _) => SpectrumClass::Nilpotent,
        (false, true, false) => SpectrumClass::AllReal,
        (false, false, true) => SpectrumClass::AllImaginary,
        (false, false, false) => SpectrumClass::Mixed,
        (false, true, true) => unreachable!("real and imaginary spectrum means nilpotent"),
    };
    Ok(ExactnessVerdict {
        re_exact,
        im_exact,
        spectrum_class,
    })
}

/// Real-case criterion for a matrix with real rational entries: the
/// Kostant-Kirillov form on the real orbit is exact iff all eigenvalues of
/// `ad(m)` are real (equivalently, the compact part of `m` vanishes).
///
/// Whenever the spectrum splits over Q(i) the compact-part criterion is also
/// evaluated and the two answers are asserted equal.
pub fn real_form_verdict(spec: &LieAlgebraSpec, m: &ExactMatrix) -> Result<bool, JordanError> {
    if !m.is_real() {
        return Err(JordanError::NotRealEntries);
    }
    if !spec.contains(m) {
        return Err(JordanError::NotInAlgebra);
    }
    let ad = spec.ad_matrix(m)?;
    let p = ad.charpoly().expect("square");
    let verdict = all_roots_real(&p).expect("charpoly is nonzero");
    let (s, _) = jordan_chevalley(m);
    if let Ok((compact, _)) = compact_hyperbolic_split(&s) {
        assert_eq!(
            verdict,
            compact.is_zero(),
            "eigenvalue criterion and compact-part criterion disagree"
        );
    }
    Ok(verdict)
}

/// Distinct eigenvalues of `m` when they lie in Q(i); used by interfaces
/// that want the witness decomposition alongside a verdict.
pub fn matrix_spectrum(m: &ExactMatrix) -> Result<Vec<(GaussianRational, usize)>, JordanError> {
    let p = m.charpoly().map_err(|_| JordanError::NotSemisimple)?;
    gaussian_spectrum(&p).map_err(|_| JordanError::UnsplittableSpectrum)
}
