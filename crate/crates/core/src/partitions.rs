//! Partition combinatorics behind the classical orbit classification.
//!
//! A [`Partition`] stores its parts nondecreasing, mirroring the labeling
//! convention of the orbit catalog; any input order is canonicalized on
//! construction. The sets driving the classification are
//!
//! * `P(n)`: all partitions of `n` (labels for the `sl_n` orbits),
//! * `P1(n)`: `r_m` even for every even `m` (labels for `so_n`),
//! * `P-1(2n)`: `r_m` even for every odd `m` (labels for `sp_2n`),
//!
//! where `r_m` is the multiplicity of the part `m`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionError {
    /// A part was zero (or the list was empty).
    InvalidPart,
    /// Membership in P-1 was asked of a partition of an odd integer.
    OddTotal,
    /// Unparseable text form.
    Parse(String),
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::InvalidPart => write!(f, "partition parts must be positive"),
            PartitionError::OddTotal => write!(f, "partition of an odd integer"),
            PartitionError::Parse(s) => write!(f, "invalid partition literal: `{s}`"),
        }
    }
}

/// A partition: nondecreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Canonicalizes (sorts) the parts; rejects zero parts and empty input.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(PartitionError::InvalidPart);
        }
        parts.sort_unstable();
        Ok(Partition { parts })
    }

    /// Infallible constructor for literals in code; panics on invalid parts.
    pub fn of(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("invalid partition literal")
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `r_m`: the number of parts equal to `m`.
    pub fn multiplicity(&self, m: usize) -> usize {
        self.parts.iter().filter(|&&p| p == m).count()
    }

    /// `|d|`: the number of distinct parts.
    pub fn distinct_count(&self) -> usize {
        let mut count = 0;
        let mut last = 0;
        for &p in &self.parts {
            if p != last {
                count += 1;
                last = p;
            }
        }
        count
    }

    /// Distinct part values in increasing order.
    pub fn distinct_parts(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for &p in &self.parts {
            if out.last() != Some(&p) {
                out.push(p);
            }
        }
        out
    }

    /// Membership in P1: every even part occurs an even number of times.
    pub fn in_p1(&self) -> bool {
        self.distinct_parts()
            .into_iter()
            .filter(|m| m % 2 == 0)
            .all(|m| self.multiplicity(m).is_multiple_of(2))
    }

    /// Membership in P-1: every odd part occurs an even number of times.
    /// Errors when the partitioned integer is odd.
    pub fn in_pminus1(&self) -> Result<bool, PartitionError> {
        if !self.total().is_multiple_of(2) {
            return Err(PartitionError::OddTotal);
        }
        Ok(self
            .distinct_parts()
            .into_iter()
            .filter(|m| m % 2 == 1)
            .all(|m| self.multiplicity(m).is_multiple_of(2)))
    }

    /// True for the zero-orbit label `[1, 1, ..., 1]`.
    pub fn is_all_ones(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Parses `"1,2,2,3"`; any order, canonicalized.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PartitionError::Parse(String::from(s));
        let parts = s
            .split(',')
            .map(|tok| tok.trim().parse::<usize>().map_err(|_| err()))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in lexicographic order (deterministic).
pub fn enumerate_all(n: usize) -> Vec<Partition> {
    assert!(n >= 1, "partitions of n >= 1");
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(remaining: usize, min: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        for k in min..=remaining {
            current.push(k);
            go(remaining - k, k, current, out);
            current.pop();
        }
    }
    go(n, 1, &mut current, &mut out);
    out
}

/// P1(n): partitions of `n` with even multiplicities on even parts.
pub fn enumerate_p1(n: usize) -> Vec<Partition> {
    enumerate_all(n).into_iter().filter(|d| d.in_p1()).collect()
}

/// P-1(2n): partitions of an even integer with even multiplicities on odd
/// parts. Panics if `total` is odd.
pub fn enumerate_pminus1(total: usize) -> Vec<Partition> {
    assert!(total.is_multiple_of(2), "P-1 is defined for even totals");
    enumerate_all(total)
        .into_iter()
        .filter(|d| d.in_pminus1().unwrap())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplicities() {
        let d = Partition::of(&[1, 2, 2, 3]);
        assert_eq!(d.multiplicity(2), 2);
        assert_eq!(d.multiplicity(4), 0);
        assert_eq!(Partition::of(&[3, 3, 3]).multiplicity(3), 3);
    }

    #[test]
    fn distinct_counts() {
        assert_eq!(Partition::of(&[1, 2, 2, 3]).distinct_count(), 3);
        assert_eq!(Partition::of(&[5]).distinct_count(), 1);
        assert_eq!(Partition::of(&[2, 2, 2, 2]).distinct_count(), 1);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_all(4).len(), 5);
        assert_eq!(enumerate_all(1), alloc::vec![Partition::of(&[1])]);
        assert_eq!(enumerate_all(7).len(), 15);
    }

    #[test]
    fn enumeration_is_lexicographic_and_duplicate_free() {
        for n in 1..=10 {
            let all = enumerate_all(n);
            for w in all.windows(2) {
                assert!(w[0].parts() < w[1].parts());
            }
            for d in &all {
                assert_eq!(d.total(), n);
            }
        }
    }

    #[test]
    fn parity_class_membership() {
        assert!(Partition::of(&[2, 2]).in_p1());
        assert!(!Partition::of(&[1, 1, 2]).in_p1());
        assert!(Partition::of(&[1, 3]).in_p1());

        assert!(!Partition::of(&[1, 3]).in_pminus1().unwrap());
        assert!(Partition::of(&[2, 2]).in_pminus1().unwrap());
        assert_eq!(
            Partition::of(&[1, 1, 3]).in_pminus1(),
            Err(PartitionError::OddTotal)
        );
        let p4: Vec<_> = enumerate_pminus1(4);
        assert_eq!(p4.len(), 4);
        assert!(p4.contains(&Partition::of(&[1, 1, 1, 1])));
        assert!(p4.contains(&Partition::of(&[1, 1, 2])));
        assert!(p4.contains(&Partition::of(&[2, 2])));
        assert!(p4.contains(&Partition::of(&[4])));
    }

    #[test]
    fn parse_canonicalizes_any_order() {
        let d: Partition = "3,1,2,2".parse().unwrap();
        assert_eq!(d, Partition::of(&[1, 2, 2, 3]));
        assert_eq!(alloc::format!("{d}"), "1,2,2,3");
        assert!("".parse::<Partition>().is_err());
        assert!("1,0".parse::<Partition>().is_err());
        assert!("1,x".parse::<Partition>().is_err());
    }

    #[test]
    fn multiplicity_sum_recovers_total() {
        for n in 1..=20 {
            for d in enumerate_all(n) {
                let sum: usize = d
                    .distinct_parts()
                    .into_iter()
                    .map(|m| m * d.multiplicity(m))
                    .sum();
                assert_eq!(sum, n);
            }
        }
    }

    /// Independent DP oracle for p(n).
    fn partition_count_dp(n: usize) -> u64 {
        let mut table = alloc::vec![0u64; n + 1];
        table[0] = 1;
        for part in 1..=n {
            for total in part..=n {
                table[total] += table[total - part];
            }
        }
        table[n]
    }

    #[test]
    fn counts_match_dp_oracle() {
        for n in 1..=30 {
            assert_eq!(enumerate_all(n).len() as u64, partition_count_dp(n), "n = {n}");
        }
    }

    /// Constrained generator: enforces the parity rule during generation
    /// instead of filtering afterwards.
    fn enumerate_with_parity(n: usize, even_parts_constrained: bool) -> Vec<Partition> {
        // Choose multiplicities value by value, descending remaining total.
        fn go(
            remaining: usize,
            min_value: usize,
            even_constrained: bool,
            current: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if remaining == 0 {
                out.push(Partition::new(current.clone()).unwrap());
                return;
            }
            for value in min_value..=remaining {
                let constrained = if even_constrained {
                    value % 2 == 0
                } else {
                    value % 2 == 1
                };
                let max_mult = remaining / value;
                let mut mult = 1;
                while mult <= max_mult {
                    if !constrained || mult % 2 == 0 {
                        for _ in 0..mult {
                            current.push(value);
                        }
                        go(remaining - value * mult, value + 1, even_constrained, current, out);
                        for _ in 0..mult {
                            current.pop();
                        }
                    }
                    mult += 1;
                }
            }
        }
        let mut out = Vec::new();
        let mut current = Vec::new();
        go(n, 1, even_parts_constrained, &mut current, &mut out);
        out.sort();
        out
    }

    #[test]
    fn two_path_equivalence_for_parity_classes() {
        for n in 1..=16 {
            let filtered = enumerate_p1(n);
            let direct = enumerate_with_parity(n, true);
            assert_eq!(filtered, direct, "P1({n})");
            if n % 2 == 0 {
                let filtered = enumerate_pminus1(n);
                let direct = enumerate_with_parity(n, false);
                assert_eq!(filtered, direct, "P-1({n})");
            }
        }
    }
}
