//! Seeded verification sweeps.
//!
//! Each property pits the Groebner route against the dynamic-programming
//! oracle (or pits a closed form against brute-force enumeration) on
//! randomly drawn inputs. The sweeps are deterministic for a given seed and
//! are reused by both the `selftest` CLI command and the acceptance tests.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds;
use crate::groebner::buchberger;
use crate::semigroup::SemigroupSpec;
use crate::staircase::{build_staircase, certify};
use crate::{Int, Rational};

/// Default seed for reproducible runs.
pub const DEFAULT_SEED: u64 = 1;

/// First failure of a sweep: which property broke and on what input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub property: &'static str,
    pub detail: String,
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.property, self.detail)
    }
}

/// Outcome of one property sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failure: Option<Failure>,
}

fn fail(property: &'static str, detail: String) -> Failure {
    Failure { property, detail }
}

/// Draws a random valid spec with `2..=max_k` generators in `[2, max_gen]`
/// (an occasional draw includes 1 to cover the degenerate semigroup).
pub fn random_spec(rng: &mut ChaCha8Rng, max_k: usize, max_gen: u64) -> SemigroupSpec {
    loop {
        let k = rng.gen_range(2..=max_k);
        let mut gens: Vec<u64> = (0..k).map(|_| rng.gen_range(2..=max_gen)).collect();
        if rng.gen_range(0..40) == 0 {
            gens[0] = 1;
        }
        gens.sort_unstable();
        gens.dedup();
        if gens.len() < 2 {
            continue;
        }
        if let Ok(spec) = SemigroupSpec::new(&gens) {
            return spec;
        }
    }
}

/// Gap sets and truncated element lists from the staircase equal the
/// oracle's, case by case.
pub fn gap_equivalence(seed: u64, cases: usize) -> Result<usize, Failure> {
    let name = "gap_equivalence";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case in 0..cases {
        let spec = random_spec(&mut rng, 5, 50);
        let basis = buchberger(&spec)
            .map_err(|e| fail(name, format!("case {case}: basis for {spec} failed: {e}")))?;
        let model = build_staircase(&basis);
        let report = spec.invariants();
        if model.gaps() != report.gaps {
            return Err(fail(name, format!("case {case}: gap sets differ for {spec}")));
        }
        let alpha = 2 * report.conductor;
        let elements = model.elements(alpha);
        let expected: Vec<u64> = (0..=alpha).filter(|&n| spec.is_member(n)).collect();
        if elements != expected {
            return Err(fail(
                name,
                format!("case {case}: element lists differ for {spec} at alpha = {alpha}"),
            ));
        }
    }
    Ok(cases)
}

/// Certificates decompose correctly, agree with the oracle verdict, and
/// are pairwise distinct over `[0, 3 * conductor]`.
///
/// The whole range is walked incrementally (the normal form of `x^n` is
/// the normal form of `x` times the previous one); sampled values are
/// additionally certified from scratch and must agree with the walk.
pub fn certificates(seed: u64, cases: usize) -> Result<usize, Failure> {
    let name = "certificates";
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
    for case in 0..cases {
        let spec = random_spec(&mut rng, 5, 50);
        let basis = buchberger(&spec)
            .map_err(|e| fail(name, format!("case {case}: basis for {spec} failed: {e}")))?;
        let report = spec.invariants();
        let is_member = |n: u64| n >= report.conductor || report.sporadic.binary_search(&n).is_ok();
        let limit = 3 * report.conductor;
        let len = spec.dimension() + 1;
        let x = crate::monomials::ExponentVector::unit(len, 0);
        let mut walk = Vec::with_capacity(limit as usize + 1);
        let mut seen = HashSet::new();
        for n in 0..=limit {
            let nf = match walk.last() {
                None => crate::monomials::ExponentVector::zeros(len),
                Some(prev) => basis.normal_form(&prev.mul(&x)),
            };
            if nf.weight(&spec) != n {
                return Err(fail(
                    name,
                    format!("case {case}: certificate for {n} in {spec} does not decompose"),
                ));
            }
            if (nf.x_exp() == 0) != is_member(n) {
                return Err(fail(
                    name,
                    format!("case {case}: verdicts differ for {n} in {spec}"),
                ));
            }
            if !seen.insert(nf.clone()) {
                return Err(fail(
                    name,
                    format!("case {case}: duplicate normal form at {n} in {spec}"),
                ));
            }
            walk.push(nf);
        }
        for _ in 0..12 {
            let n = rng.gen_range(0..=limit);
            let cert = certify(&basis, n);
            if cert.certificate != walk[n as usize] || cert.member != is_member(n) {
                return Err(fail(
                    name,
                    format!("case {case}: from-scratch certificate differs at {n} in {spec}"),
                ));
            }
        }
    }
    Ok(cases)
}

/// Every applicable closed-form bound dominates the true count.
pub fn bound_soundness(seed: u64, cases: usize) -> Result<usize, Failure> {
    let name = "bound_soundness";
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(2));
    for case in 0..cases {
        let spec = random_spec(&mut rng, 5, 60);
        let a1 = spec.generators()[0];
        let a2 = spec.generators()[1];
        let cutoff = a1 * a2;
        for _ in 0..4 {
            let alpha = rng.gen_range(0..=cutoff);
            let bound = bounds::prism_pyramid_low(&spec, alpha)
                .map_err(|e| fail(name, format!("case {case}: {e}")))?;
            let truth = Int::from(spec.n_of_alpha(alpha));
            if bound < truth {
                return Err(fail(
                    name,
                    format!("case {case}: low bound {bound} < {truth} for {spec}, alpha = {alpha}"),
                ));
            }
        }
        for _ in 0..4 {
            let alpha = rng.gen_range(cutoff..=3 * cutoff);
            let bound = bounds::prism_pyramid_high(&spec, alpha)
                .map_err(|e| fail(name, format!("case {case}: {e}")))?;
            let truth = Int::from(spec.n_of_alpha(alpha));
            if bound < truth {
                return Err(fail(
                    name,
                    format!("case {case}: high bound {bound} < {truth} for {spec}, alpha = {alpha}"),
                ));
            }
        }
        if spec.dimension() >= 3 {
            let bound = bounds::gly_based_bound(&spec)
                .map_err(|e| fail(name, format!("case {case}: {e}")))?;
            let truth = Int::from(spec.invariants().sporadic_count_with_zero);
            if bound < truth {
                return Err(fail(
                    name,
                    format!("case {case}: product bound {bound} < {truth} for {spec}"),
                ));
            }
        }
    }
    Ok(cases)
}

/// The prism-plus-pyramid bound never exceeds the coarse prism bound.
pub fn monotone_chain(seed: u64, cases: usize) -> Result<usize, Failure> {
    let name = "monotone_chain";
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(3));
    for case in 0..cases {
        let spec = random_spec(&mut rng, 5, 60);
        let a1 = spec.generators()[0];
        let a2 = spec.generators()[1];
        let cutoff = a1 * a2;
        for _ in 0..4 {
            let alpha = rng.gen_range(cutoff..=3 * cutoff);
            let sharp = bounds::prism_pyramid_high(&spec, alpha)
                .map_err(|e| fail(name, format!("case {case}: {e}")))?;
            let coarse = bounds::simple_corollary_bound(&spec, alpha)
                .map_err(|e| fail(name, format!("case {case}: {e}")))?;
            if sharp > coarse {
                return Err(fail(
                    name,
                    format!("case {case}: {sharp} > {coarse} for {spec}, alpha = {alpha}"),
                ));
            }
        }
    }
    Ok(cases)
}

fn random_rational(rng: &mut ChaCha8Rng, max: i64) -> Rational {
    let den = rng.gen_range(1..=max);
    let num = rng.gen_range(1..=max);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// The shift identity between the two simplex counters holds exactly.
pub fn shift_lemma(seed: u64, cases: usize) -> Result<usize, Failure> {
    let name = "shift_lemma";
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(4));
    for case in 0..cases {
        let n = rng.gen_range(1..=4);
        let alphas: Vec<Rational> = (0..n).map(|_| random_rational(&mut rng, 20)).collect();
        if !bounds::shift_lemma_check(&alphas) {
            return Err(fail(name, format!("case {case}: identity fails for {alphas:?}")));
        }
    }
    Ok(cases)
}

/// The factorial simplex inequality holds on every drawn tuple (it is a
/// theorem; failures expose counter bugs), including the equality case
/// where the smallest parameter is 1.
pub fn gly_weak(seed: u64, cases: usize) -> Result<usize, Failure> {
    let name = "gly_weak";
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(5));
    for case in 0..cases {
        let n = rng.gen_range(3..=5);
        let mut alphas: Vec<Rational> = (0..n)
            .map(|_| Rational::one() + random_rational(&mut rng, 19))
            .collect();
        if case % 5 == 0 {
            alphas[n - 1] = Rational::one();
        }
        alphas.sort_by(|a, b| b.cmp(a));
        let holds = bounds::gly_weak_holds(&alphas)
            .map_err(|e| fail(name, format!("case {case}: {e}")))?;
        if !holds {
            return Err(fail(name, format!("case {case}: inequality fails for {alphas:?}")));
        }
        if alphas.last() == Some(&Rational::one())
            && !bounds::count_p(&alphas).is_zero()
        {
            return Err(fail(
                name,
                format!("case {case}: equality case has positive points for {alphas:?}"),
            ));
        }
    }
    Ok(cases)
}

/// Two-generator closed forms: Frobenius number, genus, and the exact
/// product-bound equality.
pub fn sylvester_closed_forms(seed: u64, cases: usize) -> Result<usize, Failure> {
    let name = "sylvester_closed_forms";
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(6));
    for case in 0..cases {
        let (a, b) = loop {
            let a = rng.gen_range(2..=60u64);
            let b = rng.gen_range(2..=60u64);
            if a != b && num_integer::gcd(a, b) == 1 {
                break (a.min(b), a.max(b));
            }
        };
        let spec = SemigroupSpec::new(&[a, b]).unwrap();
        let report = spec.invariants();
        if report.frobenius != (a * b - a - b) as i64 {
            return Err(fail(name, format!("case {case}: Frobenius formula fails for {spec}")));
        }
        if report.genus != (a - 1) * (b - 1) / 2 {
            return Err(fail(name, format!("case {case}: genus formula fails for {spec}")));
        }
        let bound = bounds::gly_based_bound(&spec)
            .map_err(|e| fail(name, format!("case {case}: {e}")))?;
        if bound != Int::from(report.sporadic_count_with_zero) {
            return Err(fail(
                name,
                format!("case {case}: product bound is not exact for {spec}"),
            ));
        }
    }
    Ok(cases)
}

/// A positive denumerant is the same thing as membership.
pub fn denumerant_positivity(seed: u64, cases: usize) -> Result<usize, Failure> {
    let name = "denumerant_positivity";
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(7));
    for case in 0..cases {
        let spec = random_spec(&mut rng, 4, 30);
        let conductor = spec.invariants().conductor;
        for _ in 0..8 {
            let n = rng.gen_range(0..=2 * conductor.max(8));
            let positive = !spec.denumerant(n).is_zero();
            if positive != spec.is_member(n) {
                return Err(fail(
                    name,
                    format!("case {case}: denumerant and membership disagree at {n} for {spec}"),
                ));
            }
        }
    }
    Ok(cases)
}

/// Runs every sweep at the given scale, collecting one outcome per
/// property; sweeps after a failure still run.
pub fn run_all(seed: u64, cases: usize) -> Vec<PropertyOutcome> {
    let runners: Vec<(&'static str, fn(u64, usize) -> Result<usize, Failure>)> = vec![
        ("gap_equivalence", gap_equivalence),
        ("certificates", certificates),
        ("bound_soundness", bound_soundness),
        ("monotone_chain", monotone_chain),
        ("shift_lemma", shift_lemma),
        ("gly_weak", gly_weak),
        ("sylvester_closed_forms", sylvester_closed_forms),
        ("denumerant_positivity", denumerant_positivity),
    ];
    runners
        .into_iter()
        .map(|(name, run)| match run(seed, cases) {
            Ok(cases) => PropertyOutcome {
                name,
                cases,
                failure: None,
            },
            Err(failure) => PropertyOutcome {
                name,
                cases,
                failure: Some(failure),
            },
        })
        .collect()
}
