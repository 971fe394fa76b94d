//! The staircase of the basis leads and its standard-monomial complement.
//!
//! Each lead exponent `q` of the reduced basis spans an upward orthant
//! `K_q = q + Z_{>=0}^{k+1}`; a point is *standard* when it lies in no such
//! orthant, i.e. no corner divides it. Standard points off the wall
//! `s0 = 0` are in bijection with the gaps of the semigroup, standard
//! points on the wall with its elements, in both cases through
//! `p -> s0 + sum si*ai`.

use std::collections::{BTreeMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::groebner::GroebnerBasis;
use crate::monomials::{ExponentVector, MonomialOrder};
use crate::semigroup::SemigroupSpec;

/// Tripwire against a broken standardness test; the enumerated sets are
/// finite (gap points biject with the finitely many gaps).
const MAX_ENUMERATED_POINTS: usize = 50_000_000;

/// Corner model of a reduced basis: the minimal antichain of lead
/// exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaircaseModel {
    corners: Vec<ExponentVector>,
    spec: SemigroupSpec,
    order: MonomialOrder,
}

/// Membership verdict together with the normal-form certificate.
///
/// The certificate `(s0, s1, ..., sk)` satisfies `n = s0 + sum si*ai`, and
/// `member` holds exactly when `s0 = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedMembership {
    pub n: u64,
    pub member: bool,
    pub certificate: ExponentVector,
}

/// Extracts the corner model from a reduced basis; reducedness guarantees
/// the corners form an antichain under divisibility.
pub fn build_staircase(basis: &GroebnerBasis) -> StaircaseModel {
    StaircaseModel {
        corners: basis.corners(),
        spec: basis.spec().clone(),
        order: basis.order(),
    }
}

impl StaircaseModel {
    /// Corners (lead exponents) sorted ascending.
    pub fn corners(&self) -> &[ExponentVector] {
        &self.corners
    }

    pub fn spec(&self) -> &SemigroupSpec {
        &self.spec
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// True iff no corner divides `p`.
    pub fn is_standard(&self, p: &ExponentVector) -> bool {
        self.corners.iter().all(|q| !q.divides(p))
    }

    /// All standard points with `s0 >= 1`, sorted by their mapped value.
    ///
    /// The standard set is downward closed, so a breadth-first search from
    /// the seeds `(s0, 0, ..., 0)`, `1 <= s0 < a1`, expanding by unit
    /// increments through standard points, visits all of them.
    pub fn gap_points(&self) -> Vec<ExponentVector> {
        let len = self.spec.dimension() + 1;
        let a1 = self.spec.multiplicity();
        let mut visited: HashSet<ExponentVector> = HashSet::new();
        let mut queue: VecDeque<ExponentVector> = VecDeque::new();
        for s0 in 1..a1 {
            let seed = ExponentVector::x_power(s0, len);
            debug_assert!(self.is_standard(&seed));
            if visited.insert(seed.clone()) {
                queue.push_back(seed);
            }
        }
        while let Some(p) = queue.pop_front() {
            for idx in 0..len {
                let next = p.mul(&ExponentVector::unit(len, idx));
                if visited.contains(&next) || !self.is_standard(&next) {
                    continue;
                }
                visited.insert(next.clone());
                queue.push_back(next);
                assert!(
                    visited.len() <= MAX_ENUMERATED_POINTS,
                    "gap enumeration exceeded the point cap"
                );
            }
        }
        self.sorted_by_value(visited)
    }

    /// Gap points grouped by their `x` level.
    pub fn gap_points_by_level(&self) -> BTreeMap<u64, Vec<ExponentVector>> {
        let mut levels: BTreeMap<u64, Vec<ExponentVector>> = BTreeMap::new();
        for p in self.gap_points() {
            levels.entry(p.x_exp()).or_default().push(p);
        }
        levels
    }

    /// The gap values of the semigroup, ascending.
    pub fn gaps(&self) -> Vec<u64> {
        self.gap_points()
            .iter()
            .map(|p| p.weight(&self.spec))
            .collect()
    }

    /// All standard points on the wall `s0 = 0` with `sum si*ai <= alpha`,
    /// sorted by their mapped value.
    pub fn element_points(&self, alpha: u64) -> Vec<ExponentVector> {
        let len = self.spec.dimension() + 1;
        let origin = ExponentVector::zeros(len);
        let mut visited: HashSet<ExponentVector> = HashSet::new();
        let mut queue: VecDeque<ExponentVector> = VecDeque::new();
        visited.insert(origin.clone());
        queue.push_back(origin);
        while let Some(p) = queue.pop_front() {
            for idx in 1..len {
                let next = p.mul(&ExponentVector::unit(len, idx));
                if visited.contains(&next)
                    || next.weight(&self.spec) > alpha
                    || !self.is_standard(&next)
                {
                    continue;
                }
                visited.insert(next.clone());
                queue.push_back(next);
                assert!(
                    visited.len() <= MAX_ENUMERATED_POINTS,
                    "element enumeration exceeded the point cap"
                );
            }
        }
        self.sorted_by_value(visited)
    }

    /// Elements of the semigroup in `[0, alpha]`, ascending.
    pub fn elements(&self, alpha: u64) -> Vec<u64> {
        self.element_points(alpha)
            .iter()
            .map(|p| p.weight(&self.spec))
            .collect()
    }

    /// Sorts points by mapped value; the bijections make values distinct.
    fn sorted_by_value(&self, points: HashSet<ExponentVector>) -> Vec<ExponentVector> {
        let mut with_values: Vec<(u64, ExponentVector)> = points
            .into_iter()
            .map(|p| (p.weight(&self.spec), p))
            .collect();
        with_values.sort();
        for pair in with_values.windows(2) {
            assert_ne!(pair[0].0, pair[1].0, "standard points must map injectively");
        }
        with_values.into_iter().map(|(_, p)| p).collect()
    }
}

/// Certified membership via the normal form of `x^n`.
pub fn certify(basis: &GroebnerBasis, n: u64) -> CertifiedMembership {
    let certificate = basis.normal_form_of_power(n);
    assert_eq!(
        certificate.weight(basis.spec()),
        n,
        "certificate decomposition must recover n"
    );
    CertifiedMembership {
        n,
        member: certificate.x_exp() == 0,
        certificate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::buchberger;

    fn model(gens: &[u64]) -> StaircaseModel {
        let spec = SemigroupSpec::new(gens).unwrap();
        build_staircase(&buchberger(&spec).unwrap())
    }

    fn ev(exps: &[u64]) -> ExponentVector {
        ExponentVector::new(exps.to_vec())
    }

    #[test]
    fn corners_5_7() {
        let m = model(&[5, 7]);
        let expected = [
            ev(&[0, 7, 0]),
            ev(&[1, 0, 2]),
            ev(&[1, 4, 0]),
            ev(&[2, 1, 0]),
            ev(&[3, 0, 1]),
            ev(&[5, 0, 0]),
        ];
        assert_eq!(m.corners(), expected);
    }

    #[test]
    fn corners_7_9_11() {
        let m = model(&[7, 9, 11]);
        assert_eq!(m.corners().len(), 17);
    }

    #[test]
    fn corners_trivial() {
        let m = model(&[1]);
        assert_eq!(m.corners(), [ev(&[1, 0])]);
    }

    #[test]
    fn standard_points_5_7() {
        let m = model(&[5, 7]);
        assert!(m.is_standard(&ev(&[1, 3, 1])));
        assert!(!m.is_standard(&ev(&[5, 0, 0])));
        assert!(m.is_standard(&ev(&[0, 0, 0])));
    }

    #[test]
    fn gaps_5_7() {
        let m = model(&[5, 7]);
        assert_eq!(m.gaps(), vec![1, 2, 3, 4, 6, 8, 9, 11, 13, 16, 18, 23]);
    }

    #[test]
    fn gaps_7_9_11() {
        let m = model(&[7, 9, 11]);
        assert_eq!(
            m.gaps(),
            vec![1, 2, 3, 4, 5, 6, 8, 10, 12, 13, 15, 17, 19, 24, 26]
        );
    }

    #[test]
    fn gaps_trivial() {
        assert!(model(&[1]).gaps().is_empty());
    }

    #[test]
    fn elements_5_7() {
        let m = model(&[5, 7]);
        assert_eq!(
            m.elements(23),
            vec![0, 5, 7, 10, 12, 14, 15, 17, 19, 20, 21, 22]
        );
        assert_eq!(m.elements(0), vec![0]);
    }

    #[test]
    fn elements_7_9_11() {
        let m = model(&[7, 9, 11]);
        assert_eq!(
            m.elements(26),
            vec![0, 7, 9, 11, 14, 16, 18, 20, 21, 22, 23, 25]
        );
    }

    #[test]
    fn certify_examples() {
        let spec = SemigroupSpec::new(&[5, 7]).unwrap();
        let basis = buchberger(&spec).unwrap();
        let c = certify(&basis, 13);
        assert!(!c.member);
        assert_eq!(c.certificate, ev(&[1, 1, 1]));
        let c = certify(&basis, 10);
        assert!(c.member);
        assert_eq!(c.certificate, ev(&[0, 2, 0]));
        let c = certify(&basis, 0);
        assert!(c.member);
        assert_eq!(c.certificate, ev(&[0, 0, 0]));
    }

    #[test]
    fn gap_points_are_downward_closed() {
        let m = model(&[7, 9, 11]);
        for p in m.gap_points() {
            for idx in 0..p.len() {
                if p.exps()[idx] == 0 {
                    continue;
                }
                let down = p.sub(&ExponentVector::unit(p.len(), idx));
                assert!(m.is_standard(&down));
            }
        }
    }

    #[test]
    fn gap_count_equals_genus() {
        for gens in [&[5u64, 7][..], &[7, 9, 11], &[2, 3], &[4, 9, 13]] {
            let spec = SemigroupSpec::new(gens).unwrap();
            let m = build_staircase(&buchberger(&spec).unwrap());
            assert_eq!(m.gap_points().len() as u64, spec.invariants().genus);
        }
    }

    #[test]
    fn pure_powers_land_in_one_orthant_only() {
        // d(100) = 3 and d(327) = 10 for <5,7>, yet both x^100 and x^327
        // lie in the single orthant of the corner (5,0,0): representation
        // counts and orthant counts are unrelated.
        let m = model(&[5, 7]);
        for n in [100u64, 327] {
            let p = ExponentVector::x_power(n, 3);
            let containing: Vec<&ExponentVector> =
                m.corners().iter().filter(|q| q.divides(&p)).collect();
            assert_eq!(containing, [&ev(&[5, 0, 0])]);
        }
    }

    #[test]
    fn levels_7_9_11() {
        let m = model(&[7, 9, 11]);
        let levels = m.gap_points_by_level();
        // Gap levels run from 1 up to at most a1 - 1 = 6.
        assert!(levels.keys().all(|&l| l >= 1 && l < 7));
        // The corner ceiling for x sits at level 7.
        assert!(m.corners().iter().any(|q| q.x_exp() == 7));
    }
}
