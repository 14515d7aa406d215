//! Orbit labels and centralizer structure.
//!
//! Classical nilpotent orbits are labeled by partitions: `P(n)` for `sl_n`,
//! `P-1(2n)` for `sp_2n`, `P1(n)` for `so_n`. For an orbit with label `d`,
//! the reductive centralizer `Z_G(X, E, Y)` of an sl2-triple through the
//! orbit is given by the Springer-Steinberg theorem:
//!
//! * `sl_n`: `S(prod_i (GL_{r_i})^i)`,
//! * `sp_2n`: `prod_{i odd} (Sp_{r_i})^i x prod_{i even} (O_{r_i})^i`,
//! * `so_n`: a double cover of
//!   `S(prod_{i even} (Sp_{r_i})^i x prod_{i odd} (O_{r_i})^i)`,
//!
//! where `r_i = r_i(d)` and the superscript records the diagonal-embedding
//! exponent of the factor. Factors with `r_i = 0` are omitted.
//!
//! Exceptional orbits are a fixed finite catalog (4, 15, 20, 44 and 69 rows
//! for g2, f4, e6, e7, e8). Rows whose reductive centralizer has a nontrivial
//! center carry an explicit descriptor and component group; the bulk rows
//! have semisimple centralizers and contribute nothing to H^2, so they are
//! stored in aggregate as `semisimple`. For e6, rows 2, 5, 7, 8, 10 and 12
//! carry centralizers with a one-dimensional center and trivial component
//! group; the per-row semisimple parts follow the standard tables.
//!
//! D-family partitions with all parts even ("very even") label a single
//! catalog entry; the two orbits they classically split into share one
//! centralizer structure and one H^2 value.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::partitions::{enumerate_all, Partition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogError {
    NotClassical,
    NotExceptional,
    BadPartition,
    UnknownLabel(String),
    BadAlgebraTag(String),
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::NotClassical => write!(f, "not a classical algebra"),
            CatalogError::NotExceptional => write!(f, "not an exceptional algebra"),
            CatalogError::BadPartition => write!(f, "partition is not a valid orbit label here"),
            CatalogError::UnknownLabel(s) => write!(f, "unknown orbit label: `{s}`"),
            CatalogError::BadAlgebraTag(s) => write!(f, "unknown algebra tag: `{s}`"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassicalFamily {
    A,
    B,
    C,
    D,
}

impl ClassicalFamily {
    pub fn letter(&self) -> char {
        match self {
            ClassicalFamily::A => 'A',
            ClassicalFamily::B => 'B',
            ClassicalFamily::C => 'C',
            ClassicalFamily::D => 'D',
        }
    }

    /// Matrix size of the defining representation at the given rank:
    /// `sl_{r+1}`, `so_{2r+1}`, `sp_{2r}`, `so_{2r}`.
    pub fn matrix_size(&self, rank: usize) -> usize {
        match self {
            ClassicalFamily::A => rank + 1,
            ClassicalFamily::B => 2 * rank + 1,
            ClassicalFamily::C => 2 * rank,
            ClassicalFamily::D => 2 * rank,
        }
    }

    pub fn min_rank(&self) -> usize {
        match self {
            ClassicalFamily::A | ClassicalFamily::C => 1,
            ClassicalFamily::B | ClassicalFamily::D => 2,
        }
    }

    /// Partition membership for orbit labels of this family acting on the
    /// given matrix size.
    pub fn admits(&self, n: usize, d: &Partition) -> bool {
        if d.total() != n {
            return false;
        }
        match self {
            ClassicalFamily::A => true,
            ClassicalFamily::B | ClassicalFamily::D => d.in_p1(),
            ClassicalFamily::C => d.in_pminus1().unwrap_or(false),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExceptionalFamily {
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl ExceptionalFamily {
    pub fn tag(&self) -> &'static str {
        match self {
            ExceptionalFamily::G2 => "G2",
            ExceptionalFamily::F4 => "F4",
            ExceptionalFamily::E6 => "E6",
            ExceptionalFamily::E7 => "E7",
            ExceptionalFamily::E8 => "E8",
        }
    }

    /// Number of nonzero nilpotent orbits.
    pub fn orbit_count(&self) -> usize {
        match self {
            ExceptionalFamily::G2 => 4,
            ExceptionalFamily::F4 => 15,
            ExceptionalFamily::E6 => 20,
            ExceptionalFamily::E7 => 44,
            ExceptionalFamily::E8 => 69,
        }
    }
}

/// A simple algebra: classical family plus rank, or an exceptional type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraType {
    Classical(ClassicalFamily, usize),
    Exceptional(ExceptionalFamily),
}

impl AlgebraType {
    pub fn classical(family: ClassicalFamily, rank: usize) -> Result<Self, CatalogError> {
        if rank < family.min_rank() {
            return Err(CatalogError::BadAlgebraTag(format!(
                "{}{rank}",
                family.letter()
            )));
        }
        Ok(AlgebraType::Classical(family, rank))
    }

    /// Matrix size of the defining representation (classical only).
    pub fn matrix_size(&self) -> Option<usize> {
        match self {
            AlgebraType::Classical(fam, rank) => Some(fam.matrix_size(*rank)),
            AlgebraType::Exceptional(_) => None,
        }
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraType::Classical(fam, rank) => write!(f, "{}{rank}", fam.letter()),
            AlgebraType::Exceptional(e) => write!(f, "{}", e.tag()),
        }
    }
}

impl FromStr for AlgebraType {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || CatalogError::BadAlgebraTag(String::from(s));
        let s = s.trim();
        match s {
            "G2" => return Ok(AlgebraType::Exceptional(ExceptionalFamily::G2)),
            "F4" => return Ok(AlgebraType::Exceptional(ExceptionalFamily::F4)),
            "E6" => return Ok(AlgebraType::Exceptional(ExceptionalFamily::E6)),
            "E7" => return Ok(AlgebraType::Exceptional(ExceptionalFamily::E7)),
            "E8" => return Ok(AlgebraType::Exceptional(ExceptionalFamily::E8)),
            _ => {}
        }
        let mut chars = s.chars();
        let fam = match chars.next() {
            Some('A') => ClassicalFamily::A,
            Some('B') => ClassicalFamily::B,
            Some('C') => ClassicalFamily::C,
            Some('D') => ClassicalFamily::D,
            _ => return Err(err()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| err())?;
        AlgebraType::classical(fam, rank).map_err(|_| err())
    }
}

/// Key of an orbit inside its algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OrbitKey {
    Partition(Partition),
    /// 1-based row index in the fixed exceptional table.
    Row(usize),
}

impl fmt::Display for OrbitKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitKey::Partition(d) => write!(f, "[{d}]"),
            OrbitKey::Row(r) => write!(f, "r{r:02}"),
        }
    }
}

/// A fully qualified orbit label such as `A4:[1,2,2]` or `E6:r07`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrbitLabel {
    pub algebra: AlgebraType,
    pub key: OrbitKey,
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.algebra, self.key)
    }
}

/// Parse failure detail: syntax versus semantics, used by the CLI to pick
/// exit codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelParseError {
    /// Text does not scan as a label at all.
    Syntax(String),
    /// Well-formed text naming no orbit (wrong sum, failed parity, bad row).
    Unknown(String),
}

impl fmt::Display for LabelParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabelParseError::Syntax(s) => write!(f, "malformed orbit label: `{s}`"),
            LabelParseError::Unknown(s) => write!(f, "no such orbit: `{s}`"),
        }
    }
}

impl FromStr for OrbitLabel {
    type Err = LabelParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = || LabelParseError::Syntax(String::from(s));
        let unknown = || LabelParseError::Unknown(String::from(s));
        let (alg_str, key_str) = s.split_once(':').ok_or_else(syntax)?;
        let algebra: AlgebraType = alg_str.trim().parse().map_err(|_| unknown())?;
        let key_str = key_str.trim();
        let key = match algebra {
            AlgebraType::Classical(fam, rank) => {
                let inner = key_str
                    .strip_prefix('[')
                    .and_then(|t| t.strip_suffix(']'))
                    .ok_or_else(syntax)?;
                let d: Partition = inner.parse().map_err(|_| syntax())?;
                if !fam.admits(fam.matrix_size(rank), &d) {
                    return Err(unknown());
                }
                OrbitKey::Partition(d)
            }
            AlgebraType::Exceptional(ex) => {
                let row_str = key_str.strip_prefix('r').ok_or_else(syntax)?;
                let row: usize = row_str.parse().map_err(|_| syntax())?;
                if row == 0 || row > ex.orbit_count() {
                    return Err(unknown());
                }
                OrbitKey::Row(row)
            }
        };
        Ok(OrbitLabel { algebra, key })
    }
}

// ---------------------------------------------------------------------------
// Centralizer structure.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorKind {
    GL,
    Sp,
    O,
}

impl fmt::Display for FactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorKind::GL => write!(f, "GL"),
            FactorKind::Sp => write!(f, "Sp"),
            FactorKind::O => write!(f, "O"),
        }
    }
}

/// One factor `kind_size^delta_exponent` of a Springer-Steinberg product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub kind: FactorKind,
    pub size: usize,
    pub delta_exponent: usize,
}

/// Springer-Steinberg data for a classical orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralizerStructure {
    pub factors: Vec<Factor>,
    /// The `S(...)` determinant constraint wrapper.
    pub det_constrained: bool,
    pub double_cover: bool,
}

impl CentralizerStructure {
    /// Dimension of the center of the Lie algebra of the reductive part.
    ///
    /// Each GL factor contributes 1, minus one dimension when the `S(...)`
    /// constraint cuts the GL centers; each O factor of size exactly 2
    /// contributes its so2. When the constrained product contains no GL
    /// factor the constraint is a finite-index condition and removes nothing
    /// at the Lie algebra level.
    pub fn center_dim(&self) -> usize {
        let gl = self
            .factors
            .iter()
            .filter(|f| f.kind == FactorKind::GL)
            .count();
        let gl_center = if self.det_constrained && gl > 0 { gl - 1 } else { gl };
        let so2 = self
            .factors
            .iter()
            .filter(|f| f.kind == FactorKind::O && f.size == 2)
            .count();
        gl_center + so2
    }

    pub fn o_factor_count(&self) -> usize {
        self.factors
            .iter()
            .filter(|f| f.kind == FactorKind::O)
            .count()
    }

    /// Component group of the reductive centralizer, derived from the factor
    /// kinds: every O factor contributes one independent flip, and the
    /// determinant constraint kills one of them. Powers of Z/2 beyond the
    /// first are reported as `Unknown` (the descriptor enum is deliberately
    /// small).
    pub fn component_group(&self) -> ComponentGroupInfo {
        let o = self.o_factor_count();
        let flips = if self.det_constrained {
            o.saturating_sub(1)
        } else {
            o
        };
        let description = match flips {
            0 => ComponentGroup::Trivial,
            1 => ComponentGroup::Z2,
            _ => ComponentGroup::Unknown,
        };
        ComponentGroupInfo {
            description,
            splits: flips <= 1,
        }
    }
}

impl fmt::Display for CentralizerStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.double_cover {
            write!(f, "double cover of ")?;
        }
        if self.det_constrained {
            write!(f, "S(")?;
        }
        if self.factors.is_empty() {
            write!(f, "1")?;
        }
        for (k, factor) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, " x ")?;
            }
            write!(f, "{}{}^{}", factor.kind, factor.size, factor.delta_exponent)?;
        }
        if self.det_constrained {
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentGroup {
    Trivial,
    Z2,
    S3,
    Unknown,
}

impl fmt::Display for ComponentGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentGroup::Trivial => write!(f, "trivial"),
            ComponentGroup::Z2 => write!(f, "Z/2"),
            ComponentGroup::S3 => write!(f, "S3"),
            ComponentGroup::Unknown => write!(f, "unknown"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentGroupInfo {
    pub description: ComponentGroup,
    /// Whether a semidirect complement is known to exist; meaningful only
    /// when `description` is not `Unknown`.
    pub splits: bool,
}

// ---------------------------------------------------------------------------
// Classical catalog.
// ---------------------------------------------------------------------------

/// All orbit labels of a classical algebra, zero orbit `[1,...,1]` included.
pub fn classical_orbits(algebra: AlgebraType) -> Result<Vec<OrbitLabel>, CatalogError> {
    let AlgebraType::Classical(fam, rank) = algebra else {
        return Err(CatalogError::NotClassical);
    };
    let n = fam.matrix_size(rank);
    let labels = enumerate_all(n)
        .into_iter()
        .filter(|d| fam.admits(n, d))
        .map(|d| OrbitLabel {
            algebra,
            key: OrbitKey::Partition(d),
        })
        .collect();
    Ok(labels)
}

/// Springer-Steinberg centralizer structure of the orbit labeled `d`.
pub fn springer_steinberg(
    algebra: AlgebraType,
    d: &Partition,
) -> Result<CentralizerStructure, CatalogError> {
    let AlgebraType::Classical(fam, rank) = algebra else {
        return Err(CatalogError::NotClassical);
    };
    let n = fam.matrix_size(rank);
    if !fam.admits(n, d) {
        return Err(CatalogError::BadPartition);
    }
    let mut factors = Vec::new();
    for i in d.distinct_parts() {
        let r = d.multiplicity(i);
        let kind = match fam {
            ClassicalFamily::A => FactorKind::GL,
            ClassicalFamily::C => {
                if i % 2 == 1 {
                    FactorKind::Sp
                } else {
                    FactorKind::O
                }
            }
            ClassicalFamily::B | ClassicalFamily::D => {
                if i % 2 == 0 {
                    FactorKind::Sp
                } else {
                    FactorKind::O
                }
            }
        };
        factors.push(Factor {
            kind,
            size: r,
            delta_exponent: i,
        });
    }
    let (det_constrained, double_cover) = match fam {
        ClassicalFamily::A => (true, false),
        ClassicalFamily::C => (false, false),
        ClassicalFamily::B | ClassicalFamily::D => (true, true),
    };
    Ok(CentralizerStructure {
        factors,
        det_constrained,
        double_cover,
    })
}

// ---------------------------------------------------------------------------
// Exceptional catalog.
// ---------------------------------------------------------------------------

/// One row of the exceptional catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalOrbit {
    pub label: OrbitLabel,
    /// Reductive centralizer of the sl2-triple; `"semisimple"` for the bulk
    /// rows whose centers vanish.
    pub centralizer: &'static str,
    pub component_group: ComponentGroupInfo,
    pub h2: usize,
}

struct RowOverride {
    row: usize,
    centralizer: &'static str,
    group: ComponentGroup,
    h2: usize,
}

const E6_OVERRIDES: &[RowOverride] = &[
    RowOverride { row: 2, centralizer: "b3+t1", group: ComponentGroup::Trivial, h2: 1 },
    RowOverride { row: 5, centralizer: "a2+t1", group: ComponentGroup::Trivial, h2: 1 },
    RowOverride { row: 7, centralizer: "a1+t1", group: ComponentGroup::Trivial, h2: 1 },
    RowOverride { row: 8, centralizer: "b2+t1", group: ComponentGroup::Trivial, h2: 1 },
    RowOverride { row: 10, centralizer: "a1+t1", group: ComponentGroup::Trivial, h2: 1 },
    RowOverride { row: 11, centralizer: "t2", group: ComponentGroup::S3, h2: 0 },
    RowOverride { row: 12, centralizer: "a1+t1", group: ComponentGroup::Trivial, h2: 1 },
    RowOverride { row: 14, centralizer: "t1", group: ComponentGroup::Trivial, h2: 1 },
    RowOverride { row: 15, centralizer: "t1", group: ComponentGroup::Trivial, h2: 1 },
    RowOverride { row: 18, centralizer: "t1", group: ComponentGroup::Trivial, h2: 1 },
];

const E7_OVERRIDES: &[RowOverride] = &[
    RowOverride { row: 7, centralizer: "a3+t1", group: ComponentGroup::Z2, h2: 0 },
    RowOverride { row: 19, centralizer: "a1+t1", group: ComponentGroup::Z2, h2: 0 },
    RowOverride { row: 21, centralizer: "a2+t1", group: ComponentGroup::Z2, h2: 0 },
    RowOverride { row: 24, centralizer: "t2", group: ComponentGroup::Z2, h2: 0 },
    RowOverride { row: 26, centralizer: "a1+t1", group: ComponentGroup::Z2, h2: 0 },
    RowOverride { row: 38, centralizer: "t1", group: ComponentGroup::Z2, h2: 0 },
];

const E8_OVERRIDES: &[RowOverride] = &[
    RowOverride { row: 18, centralizer: "b2+t1", group: ComponentGroup::Z2, h2: 0 },
    RowOverride { row: 24, centralizer: "a2+t1", group: ComponentGroup::Z2, h2: 0 },
    RowOverride { row: 26, centralizer: "a1+t1", group: ComponentGroup::Z2, h2: 0 },
    RowOverride { row: 46, centralizer: "t1", group: ComponentGroup::Z2, h2: 0 },
    RowOverride { row: 49, centralizer: "t1", group: ComponentGroup::Z2, h2: 0 },
    RowOverride { row: 52, centralizer: "t1", group: ComponentGroup::Z2, h2: 0 },
    RowOverride { row: 55, centralizer: "t1", group: ComponentGroup::Z2, h2: 0 },
];

fn overrides_for(family: ExceptionalFamily) -> &'static [RowOverride] {
    match family {
        ExceptionalFamily::G2 | ExceptionalFamily::F4 => &[],
        ExceptionalFamily::E6 => E6_OVERRIDES,
        ExceptionalFamily::E7 => E7_OVERRIDES,
        ExceptionalFamily::E8 => E8_OVERRIDES,
    }
}

/// The fixed list of nonzero nilpotent orbits of an exceptional algebra.
pub fn exceptional_orbits(algebra: AlgebraType) -> Result<Vec<ExceptionalOrbit>, CatalogError> {
    let AlgebraType::Exceptional(family) = algebra else {
        return Err(CatalogError::NotExceptional);
    };
    let overrides = overrides_for(family);
    let mut out = Vec::with_capacity(family.orbit_count());
    for row in 1..=family.orbit_count() {
        let label = OrbitLabel {
            algebra,
            key: OrbitKey::Row(row),
        };
        match overrides.iter().find(|o| o.row == row) {
            Some(o) => out.push(ExceptionalOrbit {
                label,
                centralizer: o.centralizer,
                component_group: ComponentGroupInfo {
                    description: o.group,
                    splits: true,
                },
                h2: o.h2,
            }),
            None => out.push(ExceptionalOrbit {
                label,
                centralizer: "semisimple",
                component_group: ComponentGroupInfo {
                    description: ComponentGroup::Unknown,
                    splits: false,
                },
                h2: 0,
            }),
        }
    }
    Ok(out)
}

/// Looks up one exceptional row.
pub fn exceptional_orbit(label: &OrbitLabel) -> Result<ExceptionalOrbit, CatalogError> {
    let rows = exceptional_orbits(label.algebra)?;
    let OrbitKey::Row(row) = label.key else {
        return Err(CatalogError::UnknownLabel(format!("{label}")));
    };
    rows.into_iter()
        .find(|o| o.label.key == OrbitKey::Row(row))
        .ok_or_else(|| CatalogError::UnknownLabel(format!("{label}")))
}
