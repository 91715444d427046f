//! The set M of minimal nonzero dominant coweights: classification into
//! minuscule and quasi-minuscule, the simple roots conjugate to a maximal
//! root, and the short-coroot descent that writes any dominant coweight as a
//! sum over M with a dominant witness path.

use crate::error::{Error, Result};
use crate::linalg;
use crate::paths::PathSpec;
use crate::root_datum::{Coweight, Root, RootDatum};
use crate::weights;
use crate::weyl;

/// Where a dominant coweight sits relative to M.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinimalClass {
    /// Minimal, with every root pairing in {0, +-1}; weight set one orbit.
    Minuscule,
    /// Minimal of the form gamma_vee for the maximal root gamma of its
    /// factor; weight set is the orbit plus zero.
    QuasiMinuscule(Root),
    /// Not minimal: the witness is dominant, nonzero and strictly below.
    NotMinimal(Coweight),
    Zero,
}

impl MinimalClass {
    pub fn is_minimal(&self) -> bool {
        matches!(self, MinimalClass::Minuscule | MinimalClass::QuasiMinuscule(_))
    }
}

/// Classifies a dominant coweight.
pub fn classify(datum: &RootDatum, mu: &Coweight) -> Result<MinimalClass> {
    if !weyl::is_dominant(datum, mu) {
        return Err(Error::NotDominant);
    }
    if mu.is_zero() {
        return Ok(MinimalClass::Zero);
    }
    // the maximum pairing against a dominant coweight is attained at the
    // highest root of each factor
    let all_small = datum
        .factors()
        .iter()
        .all(|f| datum.pair(&f.theta, mu).expect("rank match") <= 1);
    if all_small {
        return Ok(MinimalClass::Minuscule);
    }
    for f in datum.factors() {
        let theta_vee = datum.coroot_of(&f.theta).expect("theta is a root");
        if *mu == theta_vee {
            return Ok(MinimalClass::QuasiMinuscule(f.theta.clone()));
        }
    }
    let beta = descent_coroot(datum, mu)
        .expect("a non-minimal dominant coweight admits a short-coroot descent");
    Ok(MinimalClass::NotMinimal(mu.sub(&beta)))
}

/// All elements of M with their classes, in canonical order. Minuscule
/// elements are the lattice points among sums of one minuscule-node
/// fundamental coweight per factor; quasi-minuscule elements are the coroots
/// of the factor-wise maximal roots.
pub fn minimal_elements(datum: &RootDatum) -> Vec<(Coweight, MinimalClass)> {
    let mut out: Vec<(Coweight, MinimalClass)> = Vec::new();

    // choices per factor: none, or one node with theta-coefficient 1; the
    // sum must land in the lattice even when the summands individually do not
    let node_options: Vec<Vec<Option<usize>>> = datum
        .factors()
        .iter()
        .map(|f| {
            let mut opts: Vec<Option<usize>> = vec![None];
            opts.extend(f.minuscule_nodes.iter().map(|&i| Some(i)));
            opts
        })
        .collect();
    let mut combos: Vec<Vec<usize>> = vec![Vec::new()];
    for opts in &node_options {
        let mut next = Vec::new();
        for combo in &combos {
            for opt in opts {
                let mut c = combo.clone();
                if let Some(i) = opt {
                    c.push(*i);
                }
                next.push(c);
            }
        }
        combos = next;
    }
    for combo in combos {
        if combo.is_empty() {
            continue;
        }
        let mut sum = vec![linalg::rat(0); datum.rank()];
        for &i in &combo {
            for (k, v) in datum.fundamental_rat(i).iter().enumerate() {
                sum[k] += v;
            }
        }
        if let Some(coords) = linalg::rat_vec_to_int(&sum) {
            out.push((Coweight::new(coords), MinimalClass::Minuscule));
        }
    }
    for f in datum.factors() {
        let theta_vee = datum.coroot_of(&f.theta).expect("theta is a root");
        out.push((theta_vee, MinimalClass::QuasiMinuscule(f.theta.clone())));
    }
    out.sort_by(|a, b| datum.canonical_cmp(&a.0, &b.0));
    out
}

/// Simple roots conjugate to a maximal root: those of its factor with the
/// same length, ascending by index.
pub fn delta_gamma(datum: &RootDatum, gamma: &Root) -> Result<Vec<Root>> {
    Ok(delta_gamma_indices(datum, gamma)?
        .into_iter()
        .map(|i| datum.simple_root(i))
        .collect())
}

/// Indices of the simple roots in `delta_gamma`.
pub fn delta_gamma_indices(datum: &RootDatum, gamma: &Root) -> Result<Vec<usize>> {
    let factor = datum
        .factors()
        .iter()
        .find(|f| f.theta == *gamma)
        .ok_or(Error::NotMaximalRoot)?;
    // the maximal root is long, so its coroot is short: conjugate simple
    // roots are exactly those whose coroot has squared length 2
    Ok((factor.offset..factor.offset + factor.rank)
        .filter(|&i| datum.coroot_d(i) == 1)
        .collect())
}

/// The subset of `delta_gamma` pairing strictly positively with a dominant
/// coweight. Empty for the zero coweight.
pub fn delta_gamma_sigma(datum: &RootDatum, gamma: &Root, sigma: &Coweight) -> Result<Vec<Root>> {
    if !weyl::is_dominant(datum, sigma) {
        return Err(Error::NotDominant);
    }
    Ok(delta_gamma_indices(datum, gamma)?
        .into_iter()
        .filter(|&i| datum.simple_pair(i, sigma) > 0)
        .map(|i| datum.simple_root(i))
        .collect())
}

/// Scans the short positive coroots for one whose difference from the input
/// stays dominant; ties broken by the lexicographically greatest difference.
fn descent_coroot(datum: &RootDatum, lambda: &Coweight) -> Option<Coweight> {
    let mut best: Option<(Coweight, Coweight)> = None;
    for p in datum.positive_roots() {
        if datum.coroot_norm2_q(&p.coroot_q) != 2 {
            continue;
        }
        let beta = datum.coroot_q_to_coweight(&p.coroot_q);
        let diff = lambda.sub(&beta);
        if weyl::is_dominant(datum, &diff) {
            let better = match &best {
                Some((_, cur)) => diff.coords() > cur.coords(),
                None => true,
            };
            if better {
                best = Some((beta, diff));
            }
        }
    }
    best.map(|(beta, _)| beta)
}

/// For dominant input outside M and nonzero, a short coroot whose
/// subtraction stays dominant; nothing when the input is already in M or 0.
pub fn short_coroot_descent(datum: &RootDatum, lambda: &Coweight) -> Result<Option<Coweight>> {
    let class = classify(datum, lambda)?;
    match class {
        MinimalClass::Zero | MinimalClass::Minuscule | MinimalClass::QuasiMinuscule(_) => Ok(None),
        MinimalClass::NotMinimal(_) => {
            let beta = descent_coroot(datum, lambda)
                .expect("descent exists for dominant coweights outside M");
            Ok(Some(beta))
        }
    }
}

/// A dominant coweight written as a sequence over M, with a dominant path
/// from 0 witnessing it.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub mu_seq: Vec<Coweight>,
    pub witness: PathSpec,
}

/// Iterated short-coroot descent. The sequence lists the final minimal
/// element first and then the dominant representatives of the descent
/// coroots in reverse discovery order, so the witness climbs through the
/// dominant chain 0, lambda_K, ..., lambda.
pub fn decompose(datum: &RootDatum, lambda: &Coweight) -> Result<Decomposition> {
    if !weyl::is_dominant(datum, lambda) {
        return Err(Error::NotDominant);
    }
    let mut current = lambda.clone();
    let mut descent: Vec<Coweight> = Vec::new();
    while let Some(beta) = short_coroot_descent(datum, &current)? {
        current = current.sub(&beta);
        descent.push(beta);
    }
    let mut mu_seq = Vec::new();
    let mut steps = Vec::new();
    if !current.is_zero() {
        mu_seq.push(current.clone());
        steps.push(current.clone());
    }
    for beta in descent.iter().rev() {
        let (rep, _) = weyl::dominant_representative(datum, beta);
        mu_seq.push(rep);
        steps.push(beta.clone());
    }
    let witness = PathSpec::new(datum, mu_seq.clone(), steps, Default::default())?;
    Ok(Decomposition { mu_seq, witness })
}

/// True when some element of M lies below the coweight in dominance order.
pub fn dominates_some_minimal(datum: &RootDatum, nu: &Coweight) -> bool {
    minimal_elements(datum)
        .iter()
        .any(|(m, _)| weights::dominance_leq(datum, m, nu))
}
