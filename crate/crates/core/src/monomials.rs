//! Exponent vectors and the x-elimination monomial order.
//!
//! A monomial `x^{s0} y1^{s1} ... yk^{sk}` is stored as its exponent vector
//! `(s0, s1, ..., sk)`, index 0 always belonging to `x`. The one order used
//! throughout the crate is lexicographic with precedence
//! `x > y1 > y2 > ... > yk`; scanning index 0 first makes it an elimination
//! order for `x`: a monomial free of `x` can never beat one that contains it.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::semigroup::SemigroupSpec;

/// Exponent vector of a monomial in `x, y1, ..., yk` (length `k + 1`).
///
/// The derived `Ord` is exactly the canonical order: `Vec` comparison is
/// lexicographic and entry 0 is scanned first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ExponentVector(Vec<u64>);

/// The fixed lexicographic order with `x` greatest.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialOrder;

impl MonomialOrder {
    /// Lexicographic comparison, index 0 (the `x` exponent) first.
    ///
    /// Panics if the lengths differ.
    pub fn compare(&self, u: &ExponentVector, v: &ExponentVector) -> Ordering {
        assert_eq!(u.len(), v.len(), "exponent length mismatch");
        u.cmp(v)
    }
}

impl ExponentVector {
    pub fn new(exps: Vec<u64>) -> Self {
        Self(exps)
    }

    /// The zero vector (the monomial 1).
    pub fn zeros(len: usize) -> Self {
        Self(vec![0; len])
    }

    /// `n * e_x`, the vector of the monomial `x^n`.
    pub fn x_power(n: u64, len: usize) -> Self {
        let mut exps = vec![0; len];
        exps[0] = n;
        Self(exps)
    }

    /// Unit vector for the variable at `index` (0 is `x`, `i >= 1` is `y_i`).
    pub fn unit(len: usize, index: usize) -> Self {
        let mut exps = vec![0; len];
        exps[index] = 1;
        Self(exps)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exps(&self) -> &[u64] {
        &self.0
    }

    /// The `x` exponent.
    pub fn x_exp(&self) -> u64 {
        self.0[0]
    }

    /// Exponents of the `y` variables only.
    pub fn y_exps(&self) -> &[u64] {
        &self.0[1..]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// True iff `self <= other` componentwise, i.e. the monomial of `self`
    /// divides the monomial of `other`.
    ///
    /// Panics if the lengths differ.
    pub fn divides(&self, other: &Self) -> bool {
        assert_eq!(self.len(), other.len(), "exponent length mismatch");
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum (lcm of the monomials).
    pub fn lcm(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "exponent length mismatch");
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    /// Componentwise sum (product of the monomials). Overflow panics.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "exponent length mismatch");
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Componentwise difference (quotient of the monomials).
    ///
    /// Panics unless `other` divides `self`.
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "exponent length mismatch");
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.checked_sub(b).expect("exponent underflow"))
                .collect(),
        )
    }

    /// True iff the monomials share no variable (componentwise min is 0).
    pub fn is_coprime_with(&self, other: &Self) -> bool {
        assert_eq!(self.len(), other.len(), "exponent length mismatch");
        self.0.iter().zip(&other.0).all(|(&a, &b)| a.min(b) == 0)
    }

    /// `s0 + s1*a1 + ... + sk*ak` under the given generators. Reduction by
    /// any binomial of the semigroup ideal preserves this value.
    pub fn weight(&self, spec: &SemigroupSpec) -> u64 {
        debug_assert_eq!(self.len(), spec.dimension() + 1);
        let mut w = self.0[0];
        for (&s, &a) in self.0[1..].iter().zip(spec.generators()) {
            w = w
                .checked_add(s.checked_mul(a).expect("weight overflow"))
                .expect("weight overflow");
        }
        w
    }

    /// Renders the monomial with variables `x, y1, ..., yk`; the empty
    /// monomial renders as `1`.
    pub fn monomial_string(&self) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let var = if i == 0 {
                "x".to_string()
            } else {
                format!("y{i}")
            };
            if e == 1 {
                parts.push(var);
            } else {
                parts.push(format!("{var}^{e}"));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" ")
        }
    }
}

impl std::fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(exps: &[u64]) -> ExponentVector {
        ExponentVector::new(exps.to_vec())
    }

    #[test]
    fn compare_puts_x_first() {
        let order = MonomialOrder;
        // x y2^2 beats y1^3: the x-bearing monomial wins.
        assert_eq!(order.compare(&ev(&[1, 0, 2]), &ev(&[0, 7, 0])), Ordering::Greater);
        assert_eq!(order.compare(&ev(&[1, 0, 2]), &ev(&[1, 0, 2])), Ordering::Equal);
        // y1 precedes y2.
        assert_eq!(order.compare(&ev(&[0, 1, 0]), &ev(&[0, 0, 5])), Ordering::Greater);
    }

    #[test]
    #[should_panic(expected = "length mismatch")]
    fn compare_rejects_length_mismatch() {
        MonomialOrder.compare(&ev(&[1, 0]), &ev(&[1, 0, 0]));
    }

    #[test]
    fn divides_is_componentwise() {
        assert!(ev(&[1, 0, 2]).divides(&ev(&[1, 3, 5])));
        assert!(!ev(&[5, 0, 0]).divides(&ev(&[4, 9, 9])));
        assert!(ev(&[0, 0, 0]).divides(&ev(&[7, 0, 3])));
    }

    #[test]
    fn lcm_mul_sub() {
        assert_eq!(ev(&[1, 0, 2]).lcm(&ev(&[0, 7, 0])), ev(&[1, 7, 2]));
        assert_eq!(ev(&[1, 1, 0]).mul(&ev(&[0, 2, 1])), ev(&[1, 3, 1]));
        assert_eq!(ev(&[1, 3, 5]).sub(&ev(&[1, 0, 2])), ev(&[0, 3, 3]));
    }

    #[test]
    #[should_panic(expected = "underflow")]
    fn sub_underflow_panics() {
        ev(&[1, 0, 2]).sub(&ev(&[0, 1, 0]));
    }

    #[test]
    fn weight_uses_generators() {
        let spec = SemigroupSpec::new(&[5, 7]).unwrap();
        assert_eq!(ev(&[1, 3, 1]).weight(&spec), 1 + 3 * 5 + 7);
        assert_eq!(ev(&[0, 0, 0]).weight(&spec), 0);
    }

    #[test]
    fn monomial_strings() {
        assert_eq!(ev(&[0, 0, 0]).monomial_string(), "1");
        assert_eq!(ev(&[1, 3, 1]).monomial_string(), "x y1^3 y2");
        assert_eq!(ev(&[5, 0, 0]).monomial_string(), "x^5");
    }
}
