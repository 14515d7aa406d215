//! Explicit matrix models of the classical Lie algebras over Q(i).
//!
//! A [`LieAlgebraSpec`] is `sl_n` (no form) or a form algebra
//! `{M : M^t J + J M = 0}` for an invertible symmetric (`so_n`) or
//! alternating (`sp_n`) matrix `J`. Canonical forms are antidiagonal: all
//! ones for `so`, `+1/-1` split at the middle for `sp`.
//!
//! Nilpotent representatives come from partitions. Each part `k` contributes
//! the integral weight-basis block
//!
//! ```text
//!   E = diag(k-1, k-3, ..., 1-k),   Y = lower shift (unit entries),
//!   X = upper shift with X[i][i+1] = (i+1)(k-1-i),
//! ```
//!
//! so the triple relations hold exactly with integer entries and no square
//! roots. For the form families the invariant form is assembled blockwise:
//! a block of size `k` carries the antidiagonal form `F_k` with entries
//! `(-1)^i`, symmetric for odd `k` and alternating for even `k`; blocks
//! whose own form has the wrong parity are paired (the parity conditions on
//! the partition sets guarantee pairing is possible) with the hyperbolic
//! form `[[0, F], [-F, 0]]` on each pair. The resulting form depends on the
//! partition; [`triple_from_partition`] conjugates the triple into whatever
//! signed-permutation form the caller's spec fixes, so canonical-form specs
//! work too.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::catalog::ClassicalFamily;
use crate::matrix::{ExactMatrix, SpanSolver};
use crate::partitions::Partition;
use crate::scalar::GaussianRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LieError {
    BadSpec,
    BadPartition,
    NotInAlgebra,
}

impl fmt::Display for LieError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieError::BadSpec => write!(f, "invalid Lie algebra specification"),
            LieError::BadPartition => write!(f, "partition does not label an orbit here"),
            LieError::NotInAlgebra => write!(f, "matrix is not in the algebra"),
        }
    }
}

/// A classical matrix Lie algebra: family, matrix size, and the invariant
/// bilinear form (absent for type A).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebraSpec {
    family: ClassicalFamily,
    n: usize,
    form: Option<ExactMatrix>,
}

impl LieAlgebraSpec {
    /// `sl_n`, n >= 2.
    pub fn sl(n: usize) -> Self {
        assert!(n >= 2, "sl_n needs n >= 2");
        LieAlgebraSpec {
            family: ClassicalFamily::A,
            n,
            form: None,
        }
    }

    /// `so_n` with the canonical antidiagonal-ones form.
    pub fn so(n: usize) -> Self {
        assert!(n >= 2, "so_n needs n >= 2");
        let form = ExactMatrix::from_fn(n, n, |r, c| {
            if r + c == n - 1 {
                GaussianRational::one()
            } else {
                GaussianRational::zero()
            }
        });
        let family = if n % 2 == 1 {
            ClassicalFamily::B
        } else {
            ClassicalFamily::D
        };
        LieAlgebraSpec {
            family,
            n,
            form: Some(form),
        }
    }

    /// `sp_n` (n even) with the canonical antidiagonal `+1/-1` form.
    pub fn sp(n: usize) -> Self {
        assert!(n >= 2 && n.is_multiple_of(2), "sp_n needs even n >= 2");
        let form = ExactMatrix::from_fn(n, n, |r, c| {
            if r + c == n - 1 {
                if r < n / 2 {
                    GaussianRational::one()
                } else {
                    -GaussianRational::one()
                }
            } else {
                GaussianRational::zero()
            }
        });
        LieAlgebraSpec {
            family: ClassicalFamily::C,
            n,
            form: Some(form),
        }
    }

    /// Standard spec for a classical family at the given matrix size.
    pub fn standard(family: ClassicalFamily, n: usize) -> Result<Self, LieError> {
        match family {
            ClassicalFamily::A => {
                if n < 2 {
                    return Err(LieError::BadSpec);
                }
                Ok(LieAlgebraSpec::sl(n))
            }
            ClassicalFamily::B => {
                if n < 3 || n.is_multiple_of(2) {
                    return Err(LieError::BadSpec);
                }
                Ok(LieAlgebraSpec::so(n))
            }
            ClassicalFamily::D => {
                if n < 2 || n % 2 == 1 {
                    return Err(LieError::BadSpec);
                }
                Ok(LieAlgebraSpec::so(n))
            }
            ClassicalFamily::C => {
                if n < 2 || n % 2 == 1 {
                    return Err(LieError::BadSpec);
                }
                Ok(LieAlgebraSpec::sp(n))
            }
        }
    }

    /// A form algebra with an explicit invariant form. The form must be
    /// invertible and symmetric (B/D) or alternating (C), with the size
    /// parity matching the family.
    pub fn with_form(family: ClassicalFamily, form: ExactMatrix) -> Result<Self, LieError> {
        if !form.is_square() || form.rows() < 2 {
            return Err(LieError::BadSpec);
        }
        let n = form.rows();
        let transpose = form.transpose();
        let ok = match family {
            ClassicalFamily::A => false,
            ClassicalFamily::B => n % 2 == 1 && transpose == form,
            ClassicalFamily::D => n.is_multiple_of(2) && transpose == form,
            ClassicalFamily::C => n.is_multiple_of(2) && transpose == form.neg(),
        };
        if !ok {
            return Err(LieError::BadSpec);
        }
        if form.inverse().map_err(|_| LieError::BadSpec)?.is_none() {
            return Err(LieError::BadSpec);
        }
        Ok(LieAlgebraSpec { family, n, form: Some(form) })
    }

    pub fn family(&self) -> ClassicalFamily {
        self.family
    }

    pub fn matrix_size(&self) -> usize {
        self.n
    }

    pub fn form(&self) -> Option<&ExactMatrix> {
        self.form.as_ref()
    }

    /// Dimension as a complex Lie algebra.
    pub fn dim(&self) -> usize {
        let n = self.n;
        match self.family {
            ClassicalFamily::A => n * n - 1,
            ClassicalFamily::C => n * (n + 1) / 2,
            ClassicalFamily::B | ClassicalFamily::D => n * (n - 1) / 2,
        }
    }

    /// Exact membership test: traceless (A) or `M^t J + J M = 0` (B/C/D).
    pub fn contains(&self, m: &ExactMatrix) -> bool {
        if m.rows() != self.n || m.cols() != self.n {
            return false;
        }
        match &self.form {
            None => m.trace().is_zero(),
            Some(j) => m.transpose().mul(j).add(&j.mul(m)).is_zero(),
        }
    }

    /// Exact basis of the algebra as a vector space; deterministic order.
    pub fn basis(&self) -> Vec<ExactMatrix> {
        let n = self.n;
        match &self.form {
            None => {
                let mut out = Vec::with_capacity(n * n - 1);
                for r in 0..n {
                    for c in 0..n {
                        if r != c {
                            let mut m = ExactMatrix::zero(n, n);
                            m.set(r, c, GaussianRational::one());
                            out.push(m);
                        }
                    }
                }
                for k in 0..n - 1 {
                    let mut m = ExactMatrix::zero(n, n);
                    m.set(k, k, GaussianRational::one());
                    m.set(k + 1, k + 1, -GaussianRational::one());
                    out.push(m);
                }
                out
            }
            Some(j) => {
                // M = J^{-1} S with S antisymmetric (so) or symmetric (sp).
                let j_inv = j.inverse().unwrap().expect("form is invertible");
                let symmetric_s = self.family == ClassicalFamily::C;
                let mut out = Vec::new();
                for r in 0..n {
                    for c in r..n {
                        if r == c && !symmetric_s {
                            continue;
                        }
                        let mut s = ExactMatrix::zero(n, n);
                        s.set(r, c, GaussianRational::one());
                        if r != c {
                            let v = if symmetric_s {
                                GaussianRational::one()
                            } else {
                                -GaussianRational::one()
                            };
                            s.set(c, r, v);
                        }
                        out.push(j_inv.mul(&s));
                    }
                }
                out
            }
        }
    }

    /// Matrix of `ad(M): Z -> [M, Z]` in the basis of [`Self::basis`].
    ///
    /// Builds a fresh coordinate solver; for repeated calls on one algebra
    /// use [`AlgebraContext`].
    pub fn ad_matrix(&self, m: &ExactMatrix) -> Result<ExactMatrix, LieError> {
        AlgebraContext::new(self.clone()).ad_matrix(m)
    }

    /// Killing form `B(M1, M2) = tr(ad M1 . ad M2)`; Gaussian-rational in
    /// general (the algebras are complex).
    pub fn killing_form(
        &self,
        m1: &ExactMatrix,
        m2: &ExactMatrix,
    ) -> Result<GaussianRational, LieError> {
        let ctx = AlgebraContext::new(self.clone());
        ctx.killing_form(m1, m2)
    }
}

/// A spec together with its basis and a coordinate solver, so repeated ad
/// computations against one algebra row-reduce only once.
pub struct AlgebraContext {
    spec: LieAlgebraSpec,
    basis: Vec<ExactMatrix>,
    solver: SpanSolver,
}

impl AlgebraContext {
    pub fn new(spec: LieAlgebraSpec) -> Self {
        let basis = spec.basis();
        let vectors: Vec<_> = basis.iter().map(|b| b.vectorize()).collect();
        let solver = SpanSolver::new(&vectors).expect("algebra basis is independent");
        AlgebraContext { spec, basis, solver }
    }

    pub fn spec(&self) -> &LieAlgebraSpec {
        &self.spec
    }

    pub fn basis(&self) -> &[ExactMatrix] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a matrix in the algebra basis; `None` outside the span.
    pub fn coords(&self, m: &ExactMatrix) -> Option<Vec<GaussianRational>> {
        self.solver.coords(&m.vectorize())
    }

    /// Reconstructs a matrix from basis coordinates.
    pub fn from_coords(&self, coords: &[GaussianRational]) -> ExactMatrix {
        let n = self.spec.matrix_size();
        let mut acc = ExactMatrix::zero(n, n);
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = acc.add(&b.scale(c));
            }
        }
        acc
    }

    pub fn ad_matrix(&self, m: &ExactMatrix) -> Result<ExactMatrix, LieError> {
        if !self.spec.contains(m) {
            return Err(LieError::NotInAlgebra);
        }
        let dim = self.dim();
        let mut out = ExactMatrix::zero(dim, dim);
        for (j, b) in self.basis.iter().enumerate() {
            let bracket = m.bracket(b);
            let coords = self
                .coords(&bracket)
                .expect("bracket with an algebra element stays in the algebra");
            for (i, v) in coords.into_iter().enumerate() {
                out.set(i, j, v);
            }
        }
        Ok(out)
    }

    pub fn killing_form(
        &self,
        m1: &ExactMatrix,
        m2: &ExactMatrix,
    ) -> Result<GaussianRational, LieError> {
        let a1 = self.ad_matrix(m1)?;
        let a2 = self.ad_matrix(m2)?;
        let dim = self.dim();
        let mut acc = GaussianRational::zero();
        for i in 0..dim {
            for j in 0..dim {
                if !a1.at(i, j).is_zero() && !a2.at(j, i).is_zero() {
                    let prod = a1.at(i, j) * a2.at(j, i);
                    acc = &acc + &prod;
                }
            }
        }
        Ok(acc)
    }
}

/// An sl2-triple `[E, X] = 2X`, `[E, Y] = -2Y`, `[X, Y] = E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Triple {
    pub x: ExactMatrix,
    pub e: ExactMatrix,
    pub y: ExactMatrix,
}

impl Sl2Triple {
    /// Exact check of the three bracket relations.
    pub fn relations_hold(&self) -> bool {
        self.e.bracket(&self.x) == self.x.scale(&GaussianRational::from_int(2))
            && self.e.bracket(&self.y) == self.y.scale(&GaussianRational::from_int(-2))
            && self.x.bracket(&self.y) == self.e
    }

    fn conjugate(&self, q: &ExactMatrix, q_inv: &ExactMatrix) -> Sl2Triple {
        Sl2Triple {
            x: q.mul(&self.x).mul(q_inv),
            e: q.mul(&self.e).mul(q_inv),
            y: q.mul(&self.y).mul(q_inv),
        }
    }
}

/// How a group of equal-size blocks sits in the invariant form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    /// Type A: no form at all.
    Plain,
    /// Each block carries its own form `F_k` (O-factor parity class).
    OwnForm,
    /// Consecutive copies are paired by the hyperbolic form (Sp-factor
    /// parity class); multiplicity is even.
    HyperbolicPaired,
}

/// All blocks of one part value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueGroup {
    pub value: usize,
    pub kind: GroupKind,
    /// Start offset of each copy, in order.
    pub offsets: Vec<usize>,
}

/// Block layout of an adapted realization, grouped by part value ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockLayout {
    pub groups: Vec<ValueGroup>,
}

impl BlockLayout {
    pub fn group_for_value(&self, value: usize) -> Option<&ValueGroup> {
        self.groups.iter().find(|g| g.value == value)
    }
}

/// Triple and form in the block-adapted basis, plus the layout.
#[derive(Debug, Clone)]
pub struct AdaptedRealization {
    pub spec: LieAlgebraSpec,
    pub triple: Sl2Triple,
    pub layout: BlockLayout,
}

fn write_block_triple(x: &mut ExactMatrix, e: &mut ExactMatrix, y: &mut ExactMatrix, k: usize, o: usize) {
    for i in 0..k {
        e.set(o + i, o + i, GaussianRational::from_int(k as i64 - 1 - 2 * i as i64));
    }
    for i in 0..k.saturating_sub(1) {
        x.set(
            o + i,
            o + i + 1,
            GaussianRational::from_int((i as i64 + 1) * (k as i64 - 1 - i as i64)),
        );
        y.set(o + i + 1, o + i, GaussianRational::one());
    }
}

fn block_form_sign(i: usize) -> GaussianRational {
    if i.is_multiple_of(2) {
        GaussianRational::one()
    } else {
        -GaussianRational::one()
    }
}

/// Triple with Jordan type `d` in the block-adapted form.
///
/// For type A the partition may be arbitrary; for B/D it must lie in `P1`,
/// for C in `P-1`. The layout groups parts by value, ascending; own-form
/// blocks are the odd parts for so and the even parts for sp, the others are
/// paired consecutively.
pub fn adapted_realization(
    family: ClassicalFamily,
    d: &Partition,
) -> Result<AdaptedRealization, LieError> {
    let n = d.total();
    let valid = match family {
        ClassicalFamily::A => n >= 2,
        ClassicalFamily::B => n % 2 == 1 && d.in_p1() && n >= 3,
        ClassicalFamily::D => n.is_multiple_of(2) && d.in_p1() && n >= 2,
        ClassicalFamily::C => n.is_multiple_of(2) && d.in_pminus1().unwrap_or(false) && n >= 2,
    };
    if !valid {
        return Err(LieError::BadPartition);
    }

    let mut groups = Vec::new();
    let mut cursor = 0;
    for value in d.distinct_parts() {
        let mult = d.multiplicity(value);
        let kind = match family {
            ClassicalFamily::A => GroupKind::Plain,
            ClassicalFamily::B | ClassicalFamily::D => {
                if value % 2 == 1 {
                    GroupKind::OwnForm
                } else {
                    GroupKind::HyperbolicPaired
                }
            }
            ClassicalFamily::C => {
                if value % 2 == 0 {
                    GroupKind::OwnForm
                } else {
                    GroupKind::HyperbolicPaired
                }
            }
        };
        let offsets: Vec<usize> = (0..mult).map(|c| cursor + c * value).collect();
        cursor += mult * value;
        groups.push(ValueGroup {
            value,
            kind,
            offsets,
        });
    }
    let layout = BlockLayout { groups };

    let mut x = ExactMatrix::zero(n, n);
    let mut e = ExactMatrix::zero(n, n);
    let mut y = ExactMatrix::zero(n, n);
    for g in &layout.groups {
        for &o in &g.offsets {
            write_block_triple(&mut x, &mut e, &mut y, g.value, o);
        }
    }
    let triple = Sl2Triple { x, e, y };

    let spec = if family == ClassicalFamily::A {
        LieAlgebraSpec::sl(n)
    } else {
        let mut form = ExactMatrix::zero(n, n);
        for g in &layout.groups {
            let k = g.value;
            match g.kind {
                GroupKind::Plain => {}
                GroupKind::OwnForm => {
                    for &o in &g.offsets {
                        for i in 0..k {
                            form.set(o + i, o + k - 1 - i, block_form_sign(i));
                        }
                    }
                }
                GroupKind::HyperbolicPaired => {
                    debug_assert!(g.offsets.len() % 2 == 0);
                    for pair in g.offsets.chunks(2) {
                        let (o1, o2) = (pair[0], pair[1]);
                        for i in 0..k {
                            form.set(o1 + i, o2 + k - 1 - i, block_form_sign(i));
                            form.set(o2 + i, o1 + k - 1 - i, -block_form_sign(i));
                        }
                    }
                }
            }
        }
        LieAlgebraSpec::with_form(family, form)?
    };

    debug_assert!(spec.contains(&triple.x), "X lies in the algebra");
    debug_assert!(spec.contains(&triple.e), "E lies in the algebra");
    debug_assert!(spec.contains(&triple.y), "Y lies in the algebra");
    Ok(AdaptedRealization {
        spec,
        triple,
        layout,
    })
}

/// True when every row and column has exactly one nonzero entry, equal to
/// +1 or -1.
fn is_signed_permutation(j: &ExactMatrix) -> bool {
    let n = j.rows();
    if n != j.cols() {
        return false;
    }
    let one = GaussianRational::one();
    let neg = -GaussianRational::one();
    let mut col_seen = vec![false; n];
    for r in 0..n {
        let mut hits = 0;
        for (c, seen) in col_seen.iter_mut().enumerate() {
            let v = j.at(r, c);
            if v.is_zero() {
                continue;
            }
            if *v != one && *v != neg {
                return false;
            }
            if *seen {
                return false;
            }
            *seen = true;
            hits += 1;
        }
        if hits != 1 {
            return false;
        }
    }
    true
}

/// For a signed-permutation form `J` of the family's parity, produces `P`
/// with `P^t J_can P = J`, where `J_can` is the canonical antidiagonal form
/// of the same size and parity. Conjugation by `P` then carries
/// `J`-preservers to `J_can`-preservers.
fn canonical_adapter(j: &ExactMatrix, symmetric: bool) -> Result<ExactMatrix, LieError> {
    if !is_signed_permutation(j) {
        return Err(LieError::BadSpec);
    }
    let n = j.rows();
    // Orbit structure of the pairing.
    let mut sigma = vec![0usize; n];
    let mut sign = vec![GaussianRational::zero(); n];
    for p in 0..n {
        let q = (0..n).find(|&c| !j.at(p, c).is_zero()).unwrap();
        sigma[p] = q;
        sign[p] = j.at(p, q).clone();
    }
    for p in 0..n {
        if sigma[sigma[p]] != p {
            // Symmetric or alternating forms pair involutively.
            return Err(LieError::BadSpec);
        }
    }

    let half = GaussianRational::new(crate::scalar::rat(1, 2), crate::scalar::rat(0, 1));
    let mut columns: Vec<Vec<GaussianRational>> = vec![Vec::new(); n];
    let mut next_slot = 0usize; // pair slots (t, n-1-t), t < n/2
    let mut take_slot = || {
        let t = next_slot;
        next_slot += 1;
        (t, n - 1 - t)
    };
    let unit = |t: usize, coeff: GaussianRational| {
        let mut v = vec![GaussianRational::zero(); n];
        v[t] = coeff;
        v
    };
    let two_unit = |t1: usize, c1: GaussianRational, t2: usize, c2: GaussianRational| {
        let mut v = vec![GaussianRational::zero(); n];
        v[t1] = c1;
        v[t2] = c2;
        v
    };

    let mut fixed: Vec<usize> = Vec::new();
    let mut seen = vec![false; n];
    for p in 0..n {
        if seen[p] {
            continue;
        }
        let q = sigma[p];
        if q == p {
            if !symmetric {
                return Err(LieError::BadSpec);
            }
            fixed.push(p);
            seen[p] = true;
            continue;
        }
        seen[p] = true;
        seen[q] = true;
        let (t, t2) = take_slot();
        // v_p^t J_can v_q must equal J[p][q]; J_can[t][t2] = 1 in both the
        // symmetric and the alternating canonical form for t < n/2.
        columns[p] = unit(t, GaussianRational::one());
        columns[q] = unit(t2, sign[p].clone());
    }
    // Pair leftover fixed points two at a time; over Q(i) equal signs are
    // handled by an i coefficient.
    let mut it = fixed.into_iter().peekable();
    while let Some(p) = it.next() {
        match it.next() {
            Some(q) => {
                let (t, t2) = take_slot();
                let sp = sign[p].clone();
                let sq = sign[q].clone();
                let c = if (&sp * &sq) == -GaussianRational::one() {
                    GaussianRational::one()
                } else {
                    GaussianRational::i()
                };
                columns[p] = two_unit(t, GaussianRational::one(), t2, &sp * &half);
                let second = -&(&(&sp * &c) * &half);
                columns[q] = two_unit(t, c, t2, second);
            }
            None => {
                // Middle slot of an odd-size symmetric form; J_can there is 1.
                debug_assert!(n % 2 == 1);
                let mid = (n - 1) / 2;
                let coeff = if sign[p] == GaussianRational::one() {
                    GaussianRational::one()
                } else {
                    GaussianRational::i()
                };
                columns[p] = unit(mid, coeff);
            }
        }
    }
    ExactMatrix::from_columns(&columns).map_err(|_| LieError::BadSpec)
}

/// Builds an sl2-triple of Jordan type `d` inside the given spec.
///
/// For the form families the spec's form must be a signed-permutation matrix
/// (the canonical forms and every adapted form qualify); the block-adapted
/// triple is conjugated into the requested form.
pub fn triple_from_partition(spec: &LieAlgebraSpec, d: &Partition) -> Result<Sl2Triple, LieError> {
    if d.total() != spec.matrix_size() {
        return Err(LieError::BadPartition);
    }
    let adapted = adapted_realization(spec.family(), d)?;
    match (&spec.form, &adapted.spec.form) {
        (None, None) => Ok(adapted.triple),
        (Some(target), Some(built)) => {
            if target == built {
                return Ok(adapted.triple);
            }
            let symmetric = spec.family() != ClassicalFamily::C;
            let p_target = canonical_adapter(target, symmetric)?;
            let p_built = canonical_adapter(built, symmetric)?;
            // M preserves `built`; P_built M P_built^{-1} preserves the
            // canonical form; pulling back through P_target lands in `target`.
            let q = p_target
                .inverse()
                .map_err(|_| LieError::BadSpec)?
                .expect("adapter is invertible")
                .mul(&p_built);
            let q_inv = q
                .inverse()
                .map_err(|_| LieError::BadSpec)?
                .expect("adapter is invertible");
            let triple = adapted.triple.conjugate(&q, &q_inv);
            debug_assert!(spec.contains(&triple.x));
            debug_assert!(spec.contains(&triple.e));
            debug_assert!(spec.contains(&triple.y));
            Ok(triple)
        }
        _ => Err(LieError::BadSpec),
    }
}
