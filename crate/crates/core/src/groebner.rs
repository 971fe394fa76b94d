//! Buchberger's algorithm specialized to the pure-difference binomial ideal
//! `I = <y1 - x^{a1}, ..., yk - x^{ak}>`.
//!
//! Every polynomial that ever appears is a difference of two monomials with
//! coefficients +1/-1, so a [`Binomial`] stores just the two exponent
//! vectors, oriented so that `lead > tail`. Normal forms of monomials stay
//! monomials: reducing `m` by `lead - tail` replaces `m` with
//! `m - lead + tail`. S-pair formation and reduction therefore never leave
//! the binomial world, and the reduced basis comes out as a set of oriented
//! exponent-vector pairs.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::monomials::{ExponentVector, MonomialOrder};
use crate::semigroup::SemigroupSpec;

/// Hard ceiling on single-monomial reduction chains. The order is
/// well-founded so reduction always terminates; the fuel only turns a
/// hypothetical non-termination bug into a loud panic.
const REDUCTION_FUEL: usize = 50_000_000;

/// Pure-difference binomial `lead - tail` with `lead > tail`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Binomial {
    lead: ExponentVector,
    tail: ExponentVector,
}

impl Binomial {
    /// Orients a pair of monomials by the canonical order; `None` when the
    /// monomials coincide (the difference is zero).
    pub fn oriented(a: ExponentVector, b: ExponentVector) -> Option<Self> {
        match MonomialOrder.compare(&a, &b) {
            std::cmp::Ordering::Greater => Some(Self { lead: a, tail: b }),
            std::cmp::Ordering::Less => Some(Self { lead: b, tail: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn lead(&self) -> &ExponentVector {
        &self.lead
    }

    pub fn tail(&self) -> &ExponentVector {
        &self.tail
    }
}

impl std::fmt::Display for Binomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} - {}",
            self.lead.monomial_string(),
            self.tail.monomial_string()
        )
    }
}

/// Caps that keep pathological inputs from hanging the process.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuchbergerConfig {
    /// Maximum number of S-pairs taken off the queue.
    pub max_pairs: usize,
    /// Maximum number of basis elements accumulated before interreduction.
    pub max_basis: usize,
}

impl Default for BuchbergerConfig {
    fn default() -> Self {
        Self {
            max_pairs: 1_000_000,
            max_basis: 100_000,
        }
    }
}

/// The reduced Groebner basis of the semigroup ideal, elements sorted by
/// lead, descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    elements: Vec<Binomial>,
    spec: SemigroupSpec,
}

/// The defining generators `y_i - x^{a_i}`, oriented for the canonical
/// order (`x^{a_i}` is always the lead).
pub fn ideal_generators(spec: &SemigroupSpec) -> Vec<Binomial> {
    let len = spec.dimension() + 1;
    spec.generators()
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            Binomial::oriented(
                ExponentVector::x_power(a, len),
                ExponentVector::unit(len, i + 1),
            )
            .expect("generator binomial is never degenerate")
        })
        .collect()
}

/// S-pair of two binomials: with `L = lcm(lead_f, lead_g)` the candidate is
/// the difference of `L - lead_f + tail_f` and `L - lead_g + tail_g`;
/// `None` when the two monomials coincide.
pub fn s_pair(f: &Binomial, g: &Binomial) -> Option<Binomial> {
    let l = f.lead.lcm(&g.lead);
    let a = l.sub(&f.lead).mul(&f.tail);
    let b = l.sub(&g.lead).mul(&g.tail);
    Binomial::oriented(a, b)
}

/// Exhaustively reduces the monomial `m` by the given binomials: while some
/// element's lead divides `m`, replace `m` by `m - lead + tail`. When the
/// set is a Groebner basis the result is the unique normal form. Divisor
/// choice is the first applicable element in slice order.
pub fn reduce_monomial(elements: &[Binomial], m: &ExponentVector) -> ExponentVector {
    let mut current = m.clone();
    let mut fuel = REDUCTION_FUEL;
    'outer: loop {
        for b in elements {
            if b.lead.divides(&current) {
                current = current.sub(&b.lead).mul(&b.tail);
                fuel -= 1;
                assert!(fuel > 0, "reduction fuel exhausted");
                continue 'outer;
            }
        }
        return current;
    }
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Elements sorted by lead, descending.
    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn spec(&self) -> &SemigroupSpec {
        &self.spec
    }

    /// Lead exponents sorted ascending.
    pub fn corners(&self) -> Vec<ExponentVector> {
        let mut corners: Vec<ExponentVector> =
            self.elements.iter().map(|b| b.lead.clone()).collect();
        corners.sort();
        corners
    }

    /// Normal form of an arbitrary monomial. Reduction preserves the
    /// weight `s0 + sum si*ai`.
    pub fn normal_form(&self, m: &ExponentVector) -> ExponentVector {
        let reduced = reduce_monomial(&self.elements, m);
        debug_assert_eq!(reduced.weight(&self.spec), m.weight(&self.spec));
        reduced
    }

    /// Normal form of `x^n`. The result `(s0, s1, ..., sk)` always
    /// satisfies `n = s0 + sum si*ai` and `s0 < a1`; `s0 = 0` exactly when
    /// `n` is an element of the semigroup.
    pub fn normal_form_of_power(&self, n: u64) -> ExponentVector {
        let m = ExponentVector::x_power(n, self.spec.dimension() + 1);
        let nf = self.normal_form(&m);
        debug_assert!(nf.x_exp() < self.spec.multiplicity() || self.spec.multiplicity() == 1);
        nf
    }
}

/// Runs Buchberger's algorithm with default resource caps.
pub fn buchberger(spec: &SemigroupSpec) -> Result<GroebnerBasis, Error> {
    buchberger_with(spec, &BuchbergerConfig::default())
}

/// A queued S-pair with its precomputed lcm.
struct Pair {
    lcm: ExponentVector,
    i: usize,
    j: usize,
}

/// Reduction restricted to elements still marked live. Dead elements have
/// their lead divisible by a live one, so skipping them loses no divisor.
fn reduce_live(basis: &[Binomial], alive: &[bool], m: &ExponentVector) -> ExponentVector {
    let mut current = m.clone();
    let mut fuel = REDUCTION_FUEL;
    'outer: loop {
        for (b, &live) in basis.iter().zip(alive) {
            if live && b.lead.divides(&current) {
                current = current.sub(&b.lead).mul(&b.tail);
                fuel -= 1;
                assert!(fuel > 0, "reduction fuel exhausted");
                continue 'outer;
            }
        }
        return current;
    }
}

/// Gebauer-Moeller pair update for the new element at index `t`: prunes
/// existing pairs by the chain criterion, filters the new pairs down to
/// divisibility-minimal lcms (one representative per equal-lcm class,
/// preferring a coprime one), applies the product criterion last, and
/// retires elements whose lead the new lead divides.
fn update_pairs(basis: &[Binomial], alive: &mut [bool], pairs: &mut Vec<Pair>, t: usize) {
    let new_lead = &basis[t].lead;

    // Chain criterion: (i, j) is subsumed when the new lead divides its lcm
    // and both mixed lcms are proper.
    pairs.retain(|p| {
        if !new_lead.divides(&p.lcm) {
            return true;
        }
        basis[p.i].lead.lcm(new_lead) == p.lcm || basis[p.j].lead.lcm(new_lead) == p.lcm
    });

    struct Candidate {
        lcm: ExponentVector,
        i: usize,
        coprime: bool,
    }
    let candidates: Vec<Candidate> = (0..t)
        .filter(|&i| alive[i])
        .map(|i| Candidate {
            lcm: basis[i].lead.lcm(new_lead),
            i,
            coprime: basis[i].lead.is_coprime_with(new_lead),
        })
        .collect();

    // Keep only divisibility-minimal lcms.
    let minimal: Vec<&Candidate> = candidates
        .iter()
        .filter(|c| {
            !candidates
                .iter()
                .any(|d| d.lcm != c.lcm && d.lcm.divides(&c.lcm))
        })
        .collect();

    // One representative per equal-lcm class; a coprime member, when there
    // is one, represents the class so the product criterion removes it.
    let mut kept: Vec<&Candidate> = Vec::new();
    for c in &minimal {
        match kept.iter_mut().find(|k| k.lcm == c.lcm) {
            Some(k) => {
                if c.coprime {
                    *k = c;
                }
            }
            None => kept.push(c),
        }
    }

    for c in kept {
        if c.coprime {
            continue;
        }
        pairs.push(Pair {
            lcm: c.lcm.clone(),
            i: c.i,
            j: t,
        });
    }

    // The new lead strictly divides any lead it divides (it is irreducible
    // against the live set), so superseded elements can retire.
    for i in 0..t {
        if alive[i] && new_lead.divides(&basis[i].lead) {
            alive[i] = false;
        }
    }
}

/// Runs Buchberger's algorithm on the semigroup ideal and interreduces the
/// result into the unique reduced basis for the canonical order.
///
/// Pairs are processed smallest-lcm first and pruned with the
/// Gebauer-Moeller criteria.
pub fn buchberger_with(
    spec: &SemigroupSpec,
    config: &BuchbergerConfig,
) -> Result<GroebnerBasis, Error> {
    let mut basis = ideal_generators(spec);
    let mut alive = vec![true; basis.len()];
    let mut pairs: Vec<Pair> = Vec::new();
    for t in 0..basis.len() {
        update_pairs(&basis, &mut alive, &mut pairs, t);
    }

    let mut processed = 0usize;
    while !pairs.is_empty() {
        processed += 1;
        if processed > config.max_pairs {
            return Err(Error::ResourceLimit(format!(
                "more than {} S-pairs for {spec}",
                config.max_pairs
            )));
        }
        // Normal selection: smallest lcm first, ties by index.
        let next = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| (&a.lcm, a.i, a.j).cmp(&(&b.lcm, b.i, b.j)))
            .map(|(idx, _)| idx)
            .unwrap();
        let Pair { i, j, .. } = pairs.swap_remove(next);
        let Some(candidate) = s_pair(&basis[i], &basis[j]) else {
            continue;
        };
        // A binomial reduces componentwise: normal forms of both monomials.
        let lead_nf = reduce_live(&basis, &alive, &candidate.lead);
        let tail_nf = reduce_live(&basis, &alive, &candidate.tail);
        let Some(reduced) = Binomial::oriented(lead_nf, tail_nf) else {
            continue;
        };
        basis.push(reduced);
        alive.push(true);
        if basis.len() > config.max_basis {
            return Err(Error::ResourceLimit(format!(
                "more than {} basis elements for {spec}",
                config.max_basis
            )));
        }
        update_pairs(&basis, &mut alive, &mut pairs, basis.len() - 1);
    }

    let live: Vec<Binomial> = basis
        .into_iter()
        .zip(alive)
        .filter_map(|(b, live)| live.then_some(b))
        .collect();
    Ok(GroebnerBasis {
        order: MonomialOrder,
        elements: interreduce(live),
        spec: spec.clone(),
    })
}

/// Minimalizes (drops elements whose lead another lead divides) and reduces
/// every tail to normal form, yielding the reduced basis sorted by lead,
/// descending.
fn interreduce(mut basis: Vec<Binomial>) -> Vec<Binomial> {
    basis.sort_by(|a, b| a.lead.cmp(&b.lead));
    basis.dedup_by(|a, b| a.lead == b.lead);
    // Ascending lead order means only earlier elements can divide later ones.
    let mut minimal: Vec<Binomial> = Vec::new();
    'next: for b in basis {
        for kept in &minimal {
            if kept.lead.divides(&b.lead) {
                continue 'next;
            }
        }
        minimal.push(b);
    }
    let reduced: Vec<Binomial> = minimal
        .iter()
        .map(|b| {
            let tail_nf = reduce_monomial(&minimal, &b.tail);
            Binomial::oriented(b.lead.clone(), tail_nf)
                .expect("tail reduction cannot reach the lead")
        })
        .collect();
    let mut reduced = reduced;
    reduced.sort_by(|a, b| b.lead.cmp(&a.lead));
    reduced
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(gens: &[u64]) -> SemigroupSpec {
        SemigroupSpec::new(gens).unwrap()
    }

    fn ev(exps: &[u64]) -> ExponentVector {
        ExponentVector::new(exps.to_vec())
    }

    #[test]
    fn ideal_generators_5_7() {
        let gens = ideal_generators(&spec(&[5, 7]));
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[0].lead(), &ev(&[5, 0, 0]));
        assert_eq!(gens[0].tail(), &ev(&[0, 1, 0]));
        assert_eq!(gens[1].lead(), &ev(&[7, 0, 0]));
        assert_eq!(gens[1].tail(), &ev(&[0, 0, 1]));
    }

    #[test]
    fn ideal_generators_trivial() {
        let gens = ideal_generators(&spec(&[1]));
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].lead(), &ev(&[1, 0]));
        assert_eq!(gens[0].tail(), &ev(&[0, 1]));
    }

    #[test]
    fn s_pair_of_defining_generators() {
        let gens = ideal_generators(&spec(&[5, 7]));
        let sp = s_pair(&gens[0], &gens[1]).unwrap();
        assert_eq!(sp.lead(), &ev(&[2, 1, 0]));
        assert_eq!(sp.tail(), &ev(&[0, 0, 1]));
    }

    #[test]
    fn s_pair_with_self_is_zero() {
        let gens = ideal_generators(&spec(&[5, 7]));
        assert!(s_pair(&gens[0], &gens[0]).is_none());
    }

    #[test]
    fn reduced_basis_5_7() {
        let basis = buchberger(&spec(&[5, 7])).unwrap();
        let expected = [
            (ev(&[0, 7, 0]), ev(&[0, 0, 5])),
            (ev(&[1, 0, 2]), ev(&[0, 3, 0])),
            (ev(&[1, 4, 0]), ev(&[0, 0, 3])),
            (ev(&[2, 1, 0]), ev(&[0, 0, 1])),
            (ev(&[3, 0, 1]), ev(&[0, 2, 0])),
            (ev(&[5, 0, 0]), ev(&[0, 1, 0])),
        ];
        let mut got: Vec<(ExponentVector, ExponentVector)> = basis
            .elements()
            .iter()
            .map(|b| (b.lead().clone(), b.tail().clone()))
            .collect();
        got.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn reduced_basis_trivial() {
        let basis = buchberger(&spec(&[1])).unwrap();
        assert_eq!(basis.elements().len(), 1);
        assert_eq!(basis.elements()[0].lead(), &ev(&[1, 0]));
        assert_eq!(basis.elements()[0].tail(), &ev(&[0, 1]));
    }

    #[test]
    fn normal_forms_5_7() {
        let basis = buchberger(&spec(&[5, 7])).unwrap();
        assert_eq!(basis.normal_form(&ev(&[6, 0, 0])), ev(&[1, 1, 0]));
        assert_eq!(basis.normal_form_of_power(35), ev(&[0, 0, 5]));
        assert_eq!(basis.normal_form_of_power(23), ev(&[1, 3, 1]));
        assert_eq!(basis.normal_form_of_power(0), ev(&[0, 0, 0]));
        // Standard monomials are fixed points.
        assert_eq!(basis.normal_form(&ev(&[1, 3, 1])), ev(&[1, 3, 1]));
    }

    #[test]
    fn normal_form_7_9_11() {
        let basis = buchberger(&spec(&[7, 9, 11])).unwrap();
        assert_eq!(basis.normal_form_of_power(13), ev(&[2, 0, 0, 1]));
    }

    #[test]
    fn reduction_is_idempotent() {
        let basis = buchberger(&spec(&[7, 9, 11])).unwrap();
        for n in 0..90 {
            let once = basis.normal_form_of_power(n);
            assert_eq!(basis.normal_form(&once), once);
        }
    }

    #[test]
    fn basis_is_reduced_and_eliminates_x() {
        for gens in [&[5u64, 7][..], &[7, 9, 11], &[2, 3], &[4, 9, 13], &[1]] {
            let s = spec(gens);
            let basis = buchberger(&s).unwrap();
            let elements = basis.elements();
            for (i, b) in elements.iter().enumerate() {
                // Orientation and weight conservation.
                assert_eq!(MonomialOrder.compare(b.lead(), b.tail()), std::cmp::Ordering::Greater);
                assert_eq!(b.lead().weight(&s), b.tail().weight(&s));
                // Elimination property: leads free of x have tails free of x.
                if b.lead().x_exp() == 0 {
                    assert_eq!(b.tail().x_exp(), 0);
                }
                for (j, other) in elements.iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    assert!(!other.lead().divides(b.lead()), "lead not minimal in {s}");
                    assert!(!other.lead().divides(b.tail()), "tail not reduced in {s}");
                }
            }
            // The lead x^{a1} is always present.
            let len = s.dimension() + 1;
            let x_a1 = ExponentVector::x_power(s.multiplicity(), len);
            assert!(elements.iter().any(|b| b.lead() == &x_a1));
        }
    }

    #[test]
    fn resource_cap_reports() {
        let config = BuchbergerConfig {
            max_pairs: 1,
            max_basis: 100,
        };
        let err = buchberger_with(&spec(&[7, 9, 11]), &config).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit(_)));
    }
}
