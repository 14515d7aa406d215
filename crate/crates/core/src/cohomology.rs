//! `dim H^2(O, R)` for every nilpotent adjoint orbit.
//!
//! The general statement: for a nonzero nilpotent orbit through `X` with
//! sl2-triple `(X, E, Y)`, the second de Rham cohomology is the part of the
//! center of `Lie Z_G(X, E, Y)` fixed by the component group of
//! `Z_G(X, E, Y)`. Specialized per family this becomes:
//!
//! * `sl_n`:   `|d| - 1` (the component group acts trivially);
//! * `sp_2n`:  `0` (every so2 summand of the center is negated by the
//!   determinant flip of its O2 factor);
//! * `so_n`:   `1` when exactly one odd value `m` occurs in `d`, with
//!   multiplicity exactly 2, and no other odd value occurs (then
//!   `S((O_2)^m) = SO_2` and the so2 survives); `0` otherwise;
//! * exceptional: finitely many table rows; all zero except nine e6 orbits.
//!
//! [`h2`] always computes the family formula *and* the invariant-center count
//! from the Springer-Steinberg structure, and panics if the two routes ever
//! disagree: the redundancy is deliberate.
//!
//! All dimensions are real dimensions of `H^2(O, R)`; these equal the
//! complex dimensions of the invariant centers they are computed from.
//!
//! The zero orbit `[1, ..., 1]` is a point and gets `H^2 = 0` by convention
//! (the sl2-triple machinery needs a nonzero nilpotent); the family formulas
//! extend to it consistently.

use alloc::format;
use core::fmt;

use crate::catalog::{
    exceptional_orbit, springer_steinberg, AlgebraType, CatalogError, CentralizerStructure,
    ClassicalFamily, FactorKind, OrbitKey, OrbitLabel,
};
use crate::partitions::Partition;

/// Which theorem route produced a dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum H2Route {
    AFormula,
    CVanishing,
    BdCase,
    ExceptionalTable,
    LeviStructure,
}

impl H2Route {
    pub fn as_str(&self) -> &'static str {
        match self {
            H2Route::AFormula => "a-formula",
            H2Route::CVanishing => "c-vanishing",
            H2Route::BdCase => "bd-case",
            H2Route::ExceptionalTable => "exceptional-table",
            H2Route::LeviStructure => "levi-structure",
        }
    }
}

impl fmt::Display for H2Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// Centralizer attached to an H^2 answer: full Springer-Steinberg data for
/// classical orbits, the table descriptor for exceptional ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CentralizerDescription {
    Classical(CentralizerStructure),
    Exceptional(&'static str),
}

impl fmt::Display for CentralizerDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CentralizerDescription::Classical(c) => write!(f, "{c}"),
            CentralizerDescription::Exceptional(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H2Result {
    pub dim: usize,
    pub route: H2Route,
    pub centralizer: CentralizerDescription,
}

/// `dim H^2` for an `sl_n` orbit: `|d| - 1`.
pub fn h2_sl(d: &Partition) -> Result<usize, CatalogError> {
    // Every partition of n labels an sl_n orbit.
    Ok(d.distinct_count() - 1)
}

/// `dim H^2` for an `sp_2n` orbit: always 0.
pub fn h2_sp(d: &Partition) -> Result<usize, CatalogError> {
    if !d.in_pminus1().map_err(|_| CatalogError::BadPartition)? {
        return Err(CatalogError::BadPartition);
    }
    Ok(0)
}

/// `dim H^2` for an `so_n` orbit: 1 in the single-odd-value case, else 0.
pub fn h2_so(d: &Partition) -> Result<usize, CatalogError> {
    if !d.in_p1() {
        return Err(CatalogError::BadPartition);
    }
    let odd_values: alloc::vec::Vec<usize> = d
        .distinct_parts()
        .into_iter()
        .filter(|m| m % 2 == 1)
        .collect();
    let single = odd_values.len() == 1 && d.multiplicity(odd_values[0]) == 2;
    Ok(if single { 1 } else { 0 })
}

/// `dim H^2` for an exceptional orbit, from the static table.
pub fn h2_exceptional(label: &OrbitLabel) -> Result<usize, CatalogError> {
    Ok(exceptional_orbit(label)?.h2)
}

/// Dimension of the component-group-invariant part of the center, computed
/// from the Springer-Steinberg structure alone.
///
/// GL centers survive in full (the adjoint action of the centralizer on them
/// is trivial). An so2 summand coming from an O2 factor survives only when no
/// determinant flip reaches it: with no `S(...)` constraint the O2 factor
/// flips itself; under the constraint a flip needs a second O factor to fix
/// the determinant, so the so2 survives exactly when its O2 is the only O
/// factor.
pub fn h2_from_levi(c: &CentralizerStructure, family: ClassicalFamily) -> usize {
    debug_assert!(match family {
        ClassicalFamily::A => c.factors.iter().all(|f| f.kind == FactorKind::GL),
        _ => c.factors.iter().all(|f| f.kind != FactorKind::GL),
    });
    let gl = c
        .factors
        .iter()
        .filter(|f| f.kind == FactorKind::GL)
        .count();
    let gl_center = if c.det_constrained && gl > 0 { gl - 1 } else { gl };
    let o_total = c.o_factor_count();
    let o2 = c
        .factors
        .iter()
        .filter(|f| f.kind == FactorKind::O && f.size == 2)
        .count();
    let surviving_so2 = if c.det_constrained && o_total == 1 { o2 } else { 0 };
    gl_center + surviving_so2
}

/// `dim H^2(O, R)` for any orbit label, with the route that produced it.
///
/// For classical labels the family formula and the structural route of
/// [`h2_from_levi`] are both evaluated; a disagreement is a bug in one of
/// them and panics.
pub fn h2(label: &OrbitLabel) -> Result<H2Result, CatalogError> {
    match (&label.algebra, &label.key) {
        (AlgebraType::Classical(fam, rank), OrbitKey::Partition(d)) => {
            let n = fam.matrix_size(*rank);
            if !fam.admits(n, d) {
                return Err(CatalogError::BadPartition);
            }
            let structure = springer_steinberg(label.algebra, d)?;
            let (dim, route) = match fam {
                ClassicalFamily::A => (h2_sl(d)?, H2Route::AFormula),
                ClassicalFamily::C => (h2_sp(d)?, H2Route::CVanishing),
                ClassicalFamily::B | ClassicalFamily::D => (h2_so(d)?, H2Route::BdCase),
            };
            let via_levi = h2_from_levi(&structure, *fam);
            assert_eq!(
                dim, via_levi,
                "h2 route disagreement for {label}: formula {dim}, levi {via_levi}"
            );
            Ok(H2Result {
                dim,
                route,
                centralizer: CentralizerDescription::Classical(structure),
            })
        }
        (AlgebraType::Exceptional(_), OrbitKey::Row(_)) => {
            let row = exceptional_orbit(label)?;
            Ok(H2Result {
                dim: row.h2,
                route: H2Route::ExceptionalTable,
                centralizer: CentralizerDescription::Exceptional(row.centralizer),
            })
        }
        _ => Err(CatalogError::UnknownLabel(format!("{label}"))),
    }
}

/// Same dimension by the structural route alone; exposed so the two paths can
/// be compared from outside as well.
pub fn h2_via_levi(label: &OrbitLabel) -> Result<H2Result, CatalogError> {
    let (AlgebraType::Classical(fam, _), OrbitKey::Partition(d)) = (&label.algebra, &label.key)
    else {
        return Err(CatalogError::NotClassical);
    };
    let structure = springer_steinberg(label.algebra, d)?;
    let dim = h2_from_levi(&structure, *fam);
    Ok(H2Result {
        dim,
        route: H2Route::LeviStructure,
        centralizer: CentralizerDescription::Classical(structure),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{classical_orbits, exceptional_orbits};
    use crate::partitions::{enumerate_all, enumerate_p1, enumerate_pminus1};

    fn label(s: &str) -> OrbitLabel {
        s.parse().unwrap()
    }

    #[test]
    fn sl_formula() {
        assert_eq!(h2_sl(&Partition::of(&[2, 2, 3])).unwrap(), 1);
        assert_eq!(h2_sl(&Partition::of(&[1, 2, 2, 3])).unwrap(), 2);
        // Regular orbit [n] has vanishing H^2 for every n.
        for n in 1..=12 {
            assert_eq!(h2_sl(&Partition::of(&[n])).unwrap(), 0);
        }
    }

    #[test]
    fn sp_vanishing() {
        for d in [&[2usize, 2][..], &[1, 1, 2], &[4]] {
            assert_eq!(h2_sp(&Partition::of(d)).unwrap(), 0);
        }
        assert!(h2_sp(&Partition::of(&[1, 3])).is_err());
    }

    #[test]
    fn so_case_split() {
        assert_eq!(h2_so(&Partition::of(&[2, 2, 3, 3])).unwrap(), 1);
        assert_eq!(h2_so(&Partition::of(&[1, 1, 3, 3])).unwrap(), 0);
        assert_eq!(h2_so(&Partition::of(&[1, 1, 1, 1])).unwrap(), 0);
        assert_eq!(h2_so(&Partition::of(&[3, 3])).unwrap(), 1);
        assert!(h2_so(&Partition::of(&[1, 1, 2])).is_err());
    }

    #[test]
    fn exceptional_values() {
        for row in exceptional_orbits("G2".parse().unwrap()).unwrap() {
            assert_eq!(h2_exceptional(&row.label).unwrap(), 0);
        }
        assert_eq!(h2_exceptional(&label("E6:r11")).unwrap(), 0); // t2 with S3
        assert_eq!(h2_exceptional(&label("E6:r02")).unwrap(), 1); // b3+t1
        let total: usize = exceptional_orbits("E6".parse().unwrap())
            .unwrap()
            .iter()
            .map(|r| h2_exceptional(&r.label).unwrap())
            .sum();
        assert_eq!(total, 9);
    }

    #[test]
    fn levi_rule_examples() {
        use crate::catalog::Factor;
        let s = CentralizerStructure {
            factors: alloc::vec![
                Factor { kind: FactorKind::GL, size: 1, delta_exponent: 1 },
                Factor { kind: FactorKind::GL, size: 2, delta_exponent: 2 },
            ],
            det_constrained: true,
            double_cover: false,
        };
        assert_eq!(h2_from_levi(&s, ClassicalFamily::A), 1);

        let c_o2 = CentralizerStructure {
            factors: alloc::vec![Factor { kind: FactorKind::O, size: 2, delta_exponent: 2 }],
            det_constrained: false,
            double_cover: false,
        };
        assert_eq!(h2_from_levi(&c_o2, ClassicalFamily::C), 0);

        let bd_single_o2 = CentralizerStructure {
            factors: alloc::vec![
                Factor { kind: FactorKind::Sp, size: 2, delta_exponent: 2 },
                Factor { kind: FactorKind::O, size: 2, delta_exponent: 3 },
            ],
            det_constrained: true,
            double_cover: true,
        };
        assert_eq!(h2_from_levi(&bd_single_o2, ClassicalFamily::D), 1);
    }

    #[test]
    fn dispatcher_examples() {
        let r = h2(&label("A4:[1,2,2]")).unwrap();
        assert_eq!((r.dim, r.route), (1, H2Route::AFormula));
        let r = h2(&label("C2:[2,2]")).unwrap();
        assert_eq!((r.dim, r.route), (0, H2Route::CVanishing));
        let r = h2(&label("D5:[2,2,3,3]")).unwrap();
        assert_eq!((r.dim, r.route), (1, H2Route::BdCase));
        let r = h2(&label("E6:r14")).unwrap();
        assert_eq!((r.dim, r.route), (1, H2Route::ExceptionalTable));
        // Zero orbits are points.
        assert_eq!(h2(&label("A2:[1,1,1]")).unwrap().dim, 0);
        assert_eq!(h2(&label("D2:[1,1,1,1]")).unwrap().dim, 0);
    }

    #[test]
    fn formula_matches_levi_structure_at_cutoffs() {
        // A: n <= 10.
        for n in 2..=10 {
            let algebra = AlgebraType::Classical(ClassicalFamily::A, n - 1);
            for d in enumerate_all(n) {
                let s = springer_steinberg(algebra, &d).unwrap();
                assert_eq!(h2_sl(&d).unwrap(), h2_from_levi(&s, ClassicalFamily::A), "{d:?}");
            }
        }
        // C: 2n <= 12.
        for rank in 1..=6 {
            let algebra = AlgebraType::Classical(ClassicalFamily::C, rank);
            for d in enumerate_pminus1(2 * rank) {
                let s = springer_steinberg(algebra, &d).unwrap();
                assert_eq!(h2_sp(&d).unwrap(), h2_from_levi(&s, ClassicalFamily::C), "{d:?}");
            }
        }
        // B/D: n <= 12.
        for n in 4..=12 {
            let fam = if n % 2 == 1 { ClassicalFamily::B } else { ClassicalFamily::D };
            let algebra = AlgebraType::Classical(fam, n / 2);
            for d in enumerate_p1(n) {
                let s = springer_steinberg(algebra, &d).unwrap();
                assert_eq!(h2_so(&d).unwrap(), h2_from_levi(&s, fam), "{fam:?} {d:?}");
            }
        }
    }

    #[test]
    fn dispatcher_accepts_every_catalog_label() {
        for tag in ["A3", "B2", "C3", "D3"] {
            let algebra: AlgebraType = tag.parse().unwrap();
            for l in classical_orbits(algebra).unwrap() {
                let r = h2(&l).unwrap();
                let via = h2_via_levi(&l).unwrap();
                assert_eq!(r.dim, via.dim, "{l}");
                assert_eq!(via.route, H2Route::LeviStructure);
            }
        }
    }

    #[test]
    fn part_order_independence() {
        let a: OrbitLabel = "D5:[3,2,3,2]".parse().unwrap();
        let b: OrbitLabel = "D5:[2,2,3,3]".parse().unwrap();
        assert_eq!(h2(&a).unwrap(), h2(&b).unwrap());
    }
}
