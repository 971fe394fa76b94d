//! Canonical semigroup representation and the dynamic-programming oracle.
//!
//! Everything here is deliberately plain: reachability tables of the form
//! `r[n] = r[n - a1] || ... || r[n - ak]` answer membership, and every
//! invariant is read off such a table. The Groebner route in the rest of
//! the crate is verified against these functions, so they must stay simple
//! enough to trust by inspection.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A validated generator list `a1 < a2 < ... < ak` with `gcd = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SemigroupSpec {
    generators: Vec<u64>,
}

/// Every classical invariant of a semigroup, computed in one pass.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    /// Largest integer not in `S`; `-1` when `S` is all of the nonnegative
    /// integers (generator 1 present).
    pub frobenius: i64,
    /// Number of gaps.
    pub genus: u64,
    /// `frobenius + 1`; from here on every integer is in `S`.
    pub conductor: u64,
    /// Smallest positive element.
    pub multiplicity: u64,
    /// Size of the minimal generating set.
    pub embedding_dimension: u64,
    /// All gaps, ascending.
    pub gaps: Vec<u64>,
    /// Elements of `S` not exceeding the Frobenius number, ascending.
    pub sporadic: Vec<u64>,
    /// `|sporadic|`, counting 0.
    pub sporadic_count_with_zero: u64,
    /// `|sporadic|` without 0.
    pub sporadic_count_without_zero: u64,
}

/// Outcome of checking `c(S) <= e(S) * n(S)` on one semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WilfReport {
    pub conductor: u64,
    pub embedding_dimension: u64,
    pub sporadic_count_with_zero: u64,
    pub holds: bool,
}

fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Reachability table over `[0, len)`: `table[n]` is true iff `n` is a
/// nonnegative integral combination of `gens`.
fn reach_table(gens: &[u64], len: usize) -> Vec<bool> {
    let mut table = vec![false; len];
    if len > 0 {
        table[0] = true;
    }
    for n in 1..len {
        table[n] = gens.iter().any(|&a| {
            let a = a as usize;
            a <= n && table[n - a]
        });
    }
    table
}

impl SemigroupSpec {
    /// Sorts, deduplicates and validates a raw generator list.
    pub fn new(raw: &[u64]) -> Result<Self, Error> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        if raw.contains(&0) {
            return Err(Error::NonPositiveGenerator);
        }
        let mut generators = raw.to_vec();
        generators.sort_unstable();
        generators.dedup();
        let d = generators.iter().copied().fold(0u64, gcd);
        if d != 1 {
            return Err(Error::GcdNotOne(d));
        }
        Ok(Self { generators })
    }

    /// The normalized generators, ascending.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Number of generators in this (not necessarily minimal) presentation.
    pub fn dimension(&self) -> usize {
        self.generators.len()
    }

    /// Smallest generator, which is also the multiplicity of `S`.
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// True iff `n` is representable as a nonnegative combination of the
    /// generators.
    pub fn is_member(&self, n: u64) -> bool {
        let len = n as usize + 1;
        reach_table(&self.generators, len)[n as usize]
    }

    /// Number of elements of `S` in `[0, alpha]`, counting 0.
    pub fn n_of_alpha(&self, alpha: u64) -> u64 {
        let len = alpha as usize + 1;
        reach_table(&self.generators, len)
            .iter()
            .filter(|&&m| m)
            .count() as u64
    }

    /// Number of tuples `(y1,...,yk)` of nonnegative integers with
    /// `sum yi * ai = n`.
    pub fn denumerant(&self, n: u64) -> BigUint {
        let n = n as usize;
        let mut ways = vec![BigUint::zero(); n + 1];
        ways[0] = BigUint::one();
        for &a in &self.generators {
            let a = a as usize;
            for v in a..=n {
                let prev = ways[v - a].clone();
                ways[v] += prev;
            }
        }
        ways[n].clone()
    }

    /// The unique minimal generating set: `ai` is kept iff it is not
    /// representable by the other generators.
    pub fn minimal_generators(&self) -> SemigroupSpec {
        let mut keep = Vec::new();
        for (i, &a) in self.generators.iter().enumerate() {
            let others: Vec<u64> = self
                .generators
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &g)| g)
                .collect();
            let redundant =
                !others.is_empty() && reach_table(&others, a as usize + 1)[a as usize];
            if !redundant {
                keep.push(a);
            }
        }
        SemigroupSpec { generators: keep }
    }

    /// Computes every invariant from one reachability table.
    ///
    /// The table covers `[0, a1*a2 + max generator]`, which is enough: the
    /// Frobenius number never exceeds `a1*a2`.
    pub fn invariants(&self) -> InvariantReport {
        let embedding_dimension = self.minimal_generators().dimension() as u64;
        if self.generators[0] == 1 {
            // S is all of the nonnegative integers.
            return InvariantReport {
                frobenius: -1,
                genus: 0,
                conductor: 0,
                multiplicity: 1,
                embedding_dimension,
                gaps: Vec::new(),
                sporadic: Vec::new(),
                sporadic_count_with_zero: 0,
                sporadic_count_without_zero: 0,
            };
        }
        let a1 = self.generators[0];
        let a2 = self.generators[1];
        let a_max = *self.generators.last().unwrap();
        let len = (a1 as usize) * (a2 as usize) + a_max as usize + 1;
        let table = reach_table(&self.generators, len);

        let frobenius = table
            .iter()
            .rposition(|&m| !m)
            .expect("a1 > 1, so 1 is a gap") as u64;
        let gaps: Vec<u64> = (1..=frobenius).filter(|&n| !table[n as usize]).collect();
        let sporadic: Vec<u64> = (0..=frobenius).filter(|&n| table[n as usize]).collect();
        let n_with_zero = sporadic.len() as u64;

        InvariantReport {
            frobenius: frobenius as i64,
            genus: gaps.len() as u64,
            conductor: frobenius + 1,
            multiplicity: a1,
            embedding_dimension,
            gaps,
            sporadic,
            sporadic_count_with_zero: n_with_zero,
            sporadic_count_without_zero: n_with_zero - 1,
        }
    }

    /// Checks `c(S) <= e(S) * n(S)` with `n(S)` counting 0.
    pub fn wilf_check(&self) -> WilfReport {
        let report = self.invariants();
        let product = report.embedding_dimension * report.sporadic_count_with_zero;
        WilfReport {
            conductor: report.conductor,
            embedding_dimension: report.embedding_dimension,
            sporadic_count_with_zero: report.sporadic_count_with_zero,
            holds: report.conductor <= product,
        }
    }
}

impl std::fmt::Display for SemigroupSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "<")?;
        for (i, a) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ">")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(gens: &[u64]) -> SemigroupSpec {
        SemigroupSpec::new(gens).unwrap()
    }

    #[test]
    fn normalize_sorts_and_dedups() {
        assert_eq!(spec(&[7, 5]).generators(), &[5, 7]);
        assert_eq!(spec(&[7, 11, 23, 17]).generators(), &[7, 11, 17, 23]);
        assert_eq!(spec(&[5, 5, 7]).generators(), &[5, 7]);
    }

    #[test]
    fn normalize_rejects_bad_input() {
        assert_eq!(SemigroupSpec::new(&[]), Err(Error::EmptyInput));
        assert_eq!(SemigroupSpec::new(&[3, 0]), Err(Error::NonPositiveGenerator));
        assert_eq!(SemigroupSpec::new(&[4, 6]), Err(Error::GcdNotOne(2)));
        assert_eq!(SemigroupSpec::new(&[6, 10, 15]).unwrap().generators(), &[6, 10, 15]);
    }

    #[test]
    fn membership_5_7() {
        let s = spec(&[5, 7]);
        assert!(!s.is_member(13));
        assert!(s.is_member(0));
        assert!(s.is_member(35));
    }

    #[test]
    fn invariants_5_7() {
        let r = spec(&[5, 7]).invariants();
        assert_eq!(r.frobenius, 23);
        assert_eq!(r.genus, 12);
        assert_eq!(r.conductor, 24);
        assert_eq!(r.multiplicity, 5);
        assert_eq!(r.embedding_dimension, 2);
        assert_eq!(r.gaps, vec![1, 2, 3, 4, 6, 8, 9, 11, 13, 16, 18, 23]);
        assert_eq!(r.sporadic_count_with_zero, 12);
    }

    #[test]
    fn invariants_7_9_11() {
        let r = spec(&[7, 9, 11]).invariants();
        assert_eq!(r.frobenius, 26);
        assert_eq!(r.genus, 15);
        assert_eq!(
            r.gaps,
            vec![1, 2, 3, 4, 5, 6, 8, 10, 12, 13, 15, 17, 19, 24, 26]
        );
    }

    #[test]
    fn invariants_2_3() {
        let r = spec(&[2, 3]).invariants();
        assert_eq!(r.frobenius, 1);
        assert_eq!(r.gaps, vec![1]);
        assert_eq!(r.genus, 1);
    }

    #[test]
    fn whole_line_semigroup() {
        let r = spec(&[1]).invariants();
        assert_eq!(r.frobenius, -1);
        assert_eq!(r.conductor, 0);
        assert_eq!(r.genus, 0);
        assert!(r.gaps.is_empty());
        assert_eq!(r.sporadic_count_with_zero, 0);
    }

    #[test]
    fn n_of_alpha_values() {
        let s = spec(&[5, 7]);
        assert_eq!(s.n_of_alpha(23), 12);
        assert_eq!(s.n_of_alpha(0), 1);
        assert_eq!(s.n_of_alpha(35), 24);
    }

    #[test]
    fn denumerant_values() {
        let s = spec(&[5, 7]);
        assert_eq!(s.denumerant(100), BigUint::from(3u32));
        assert_eq!(s.denumerant(327), BigUint::from(10u32));
        assert_eq!(s.denumerant(0), BigUint::one());
        assert_eq!(s.denumerant(13), BigUint::zero());
    }

    /// Brute-force enumeration of representations, independent of the
    /// counting table in `denumerant`.
    fn denumerant_brute(gens: &[u64], n: u64) -> u64 {
        fn go(gens: &[u64], rem: u64) -> u64 {
            match gens {
                [] => u64::from(rem == 0),
                [a, rest @ ..] => (0..=rem / a).map(|y| go(rest, rem - y * a)).sum(),
            }
        }
        go(gens, n)
    }

    #[test]
    fn denumerant_matches_brute_force() {
        let s = spec(&[5, 7]);
        for n in 0..60 {
            assert_eq!(s.denumerant(n), BigUint::from(denumerant_brute(&[5, 7], n)));
        }
        let s = spec(&[3, 5, 7]);
        for n in 0..40 {
            assert_eq!(
                s.denumerant(n),
                BigUint::from(denumerant_brute(&[3, 5, 7], n))
            );
        }
    }

    #[test]
    fn minimal_generators_drop_redundant() {
        assert_eq!(spec(&[2, 3, 4]).minimal_generators().generators(), &[2, 3]);
        assert_eq!(
            spec(&[7, 9, 11]).minimal_generators().generators(),
            &[7, 9, 11]
        );
        assert_eq!(spec(&[5, 7, 12]).minimal_generators().generators(), &[5, 7]);
    }

    #[test]
    fn wilf_examples() {
        let w = spec(&[5, 7]).wilf_check();
        assert_eq!((w.conductor, w.embedding_dimension, w.sporadic_count_with_zero), (24, 2, 12));
        assert!(w.holds);

        let w = spec(&[7, 9, 11]).wilf_check();
        assert_eq!((w.conductor, w.embedding_dimension, w.sporadic_count_with_zero), (27, 3, 12));
        assert!(w.holds);

        let w = spec(&[2, 3]).wilf_check();
        assert_eq!((w.conductor, w.embedding_dimension, w.sporadic_count_with_zero), (2, 2, 1));
        assert!(w.holds);
    }

    #[test]
    fn gaps_and_sporadic_partition_conductor_range() {
        for gens in [&[5u64, 7][..], &[7, 9, 11], &[2, 3], &[4, 9, 13]] {
            let r = SemigroupSpec::new(gens).unwrap().invariants();
            let mut merged: Vec<u64> = r.gaps.iter().chain(r.sporadic.iter()).copied().collect();
            merged.sort_unstable();
            let expected: Vec<u64> = (0..=r.frobenius as u64).collect();
            assert_eq!(merged, expected);
        }
    }

    #[test]
    fn stopping_rule_is_sound() {
        // Everything at or beyond the detected conductor is a member, even
        // when the table is extended well past it.
        for gens in [&[5u64, 7][..], &[7, 9, 11], &[4, 9, 13]] {
            let s = SemigroupSpec::new(gens).unwrap();
            let r = s.invariants();
            let len = 2 * r.conductor + 10;
            let table = reach_table(s.generators(), len as usize);
            for n in r.conductor..len {
                assert!(table[n as usize], "{n} must be a member of {s}");
            }
        }
    }
}
