//! Dominance order, the weight set of a highest coweight, weight
//! multiplicities via Freudenthal recursion over the dual root system, and
//! the Weyl dimension formula.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{rat, Rat};
use crate::root_datum::{Coweight, RootDatum};
use crate::weyl;

/// True iff `upper - lower` is a nonnegative integer combination of simple
/// coroots.
pub fn dominance_leq(datum: &RootDatum, lower: &Coweight, upper: &Coweight) -> bool {
    match datum.coweight_to_coroot_coords(&upper.sub(lower)) {
        Some(q) => q.iter().all(|&c| c >= 0),
        None => false,
    }
}

/// All dominant coweights below or equal to a dominant coweight. These are
/// exactly the dominant weights of the irreducible module with that highest
/// coweight. Canonical order.
pub fn dominant_weights_below(datum: &RootDatum, lambda: &Coweight) -> Result<Vec<Coweight>> {
    if !weyl::is_dominant(datum, lambda) {
        return Err(Error::NotDominant);
    }
    // lambda - w0 lambda bounds the coroot coordinates of lambda - nu for
    // every dominant nu <= lambda, giving a finite complete search box
    let lowest = {
        let w0 = weyl::longest_element(datum);
        weyl::act(datum, &w0, lambda)
    };
    let bound = datum
        .coweight_to_coroot_coords(&lambda.sub(&lowest))
        .expect("lambda - w0 lambda lies in the coroot lattice");
    let mut out = Vec::new();
    let mut c = vec![0i64; datum.rank()];
    loop {
        let nu = lambda.sub(&datum.coroot_q_to_coweight(&c));
        if weyl::is_dominant(datum, &nu) {
            out.push(nu);
        }
        // odometer over the box
        let mut k = 0;
        loop {
            if k == datum.rank() {
                datum.sort_canonical(&mut out);
                return Ok(out);
            }
            if c[k] < bound[k] {
                c[k] += 1;
                break;
            }
            c[k] = 0;
            k += 1;
        }
    }
}

/// The full weight set of the irreducible module: the dominant shell closed
/// under the Weyl group, in canonical order.
pub fn omega_set(datum: &RootDatum, lambda: &Coweight) -> Result<Vec<Coweight>> {
    let mut out = Vec::new();
    for nu in dominant_weights_below(datum, lambda)? {
        out.extend(weyl::orbit(datum, &nu));
    }
    datum.sort_canonical(&mut out);
    Ok(out)
}

/// Weight-set membership: the dominant representative is below the highest
/// coweight.
pub fn omega_contains(datum: &RootDatum, lambda: &Coweight, nu: &Coweight) -> bool {
    let (rep, _) = weyl::dominant_representative(datum, nu);
    dominance_leq(datum, &rep, lambda)
}

/// Weight multiplicities of an irreducible module, stored on dominant
/// weights only; the rest of the diagram follows by Weyl invariance.
#[derive(Debug, Clone)]
pub struct WeightDiagram {
    highest: Coweight,
    dominant: BTreeMap<Coweight, u64>,
}

impl WeightDiagram {
    pub fn highest(&self) -> &Coweight {
        &self.highest
    }

    /// Multiplicity of an arbitrary coweight; zero outside the weight set.
    pub fn multiplicity(&self, datum: &RootDatum, nu: &Coweight) -> u64 {
        let (rep, _) = weyl::dominant_representative(datum, nu);
        self.dominant.get(&rep).copied().unwrap_or(0)
    }

    /// Dominant weights with multiplicities, canonical order.
    pub fn dominant_entries(&self, datum: &RootDatum) -> Vec<(Coweight, u64)> {
        let mut entries: Vec<(Coweight, u64)> =
            self.dominant.iter().map(|(k, v)| (k.clone(), *v)).collect();
        entries.sort_by(|a, b| datum.canonical_cmp(&a.0, &b.0));
        entries
    }

    /// Every weight with its multiplicity, canonical order.
    pub fn full_entries(&self, datum: &RootDatum) -> Vec<(Coweight, u64)> {
        let mut entries = Vec::new();
        for (nu, &m) in &self.dominant {
            for w in weyl::orbit(datum, nu) {
                entries.push((w, m));
            }
        }
        entries.sort_by(|a, b| datum.canonical_cmp(&a.0, &b.0));
        entries
    }

    /// Total dimension: sum of multiplicities over the full weight set.
    pub fn dimension(&self, datum: &RootDatum) -> u64 {
        self.dominant
            .iter()
            .map(|(nu, &m)| m * weyl::orbit(datum, nu).len() as u64)
            .sum()
    }
}

/// Freudenthal recursion over the positive coroots, descending from the
/// highest weight. Every division is checked to be exact.
pub fn weight_diagram(datum: &RootDatum, lambda: &Coweight) -> Result<WeightDiagram> {
    let shell = dominant_weights_below(datum, lambda)?;
    let rho_dual2 = datum.two_rho_dual();
    let lambda2 = lambda.scale(2).add(&rho_dual2);
    let lambda2_norm = datum.norm2(&lambda2);

    let coroots: Vec<Coweight> = datum
        .positive_roots()
        .iter()
        .map(|p| datum.coroot_q_to_coweight(&p.coroot_q))
        .collect();

    let mut mults: BTreeMap<Coweight, u64> = BTreeMap::new();
    // canonical order descends in dominance, so every lookup below is ready
    for nu in &shell {
        if nu == lambda {
            mults.insert(nu.clone(), 1);
            continue;
        }
        let mut sum = Rat::zero();
        for beta in &coroots {
            let mut k = 1i64;
            loop {
                let up = nu.add(&beta.scale(k));
                let (rep, _) = weyl::dominant_representative(datum, &up);
                match mults.get(&rep) {
                    Some(&m) if m > 0 => {
                        sum += datum.form(&up, beta) * rat(m as i64);
                    }
                    _ => break,
                }
                k += 1;
            }
        }
        let nu2 = nu.scale(2).add(&rho_dual2);
        // denominators divided by 4 cancel against the doubled vectors
        let denom = (lambda2_norm - datum.norm2(&nu2)) / rat(4);
        let value = rat(2) * sum / denom;
        assert!(value.is_integer() && value > Rat::zero(), "Freudenthal division must be exact");
        mults.insert(nu.clone(), value.to_integer() as u64);
    }
    Ok(WeightDiagram { highest: lambda.clone(), dominant: mults })
}

/// Multiplicity of a single weight.
pub fn weight_multiplicity(datum: &RootDatum, lambda: &Coweight, nu: &Coweight) -> Result<u64> {
    Ok(weight_diagram(datum, lambda)?.multiplicity(datum, nu))
}

/// Weyl dimension formula over the dual root system, with big-integer
/// products. The result must fit in u64.
pub fn weyl_dimension(datum: &RootDatum, lambda: &Coweight) -> Result<u64> {
    if !weyl::is_dominant(datum, lambda) {
        return Err(Error::NotDominant);
    }
    let rho_dual2 = datum.two_rho_dual();
    let shifted = lambda.scale(2).add(&rho_dual2);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for p in datum.positive_roots() {
        let beta = datum.coroot_q_to_coweight(&p.coroot_q);
        let top = datum.form(&shifted, &beta);
        let bottom = datum.form(&rho_dual2, &beta);
        num *= BigInt::from(*top.numer()) * BigInt::from(*bottom.denom());
        den *= BigInt::from(*top.denom()) * BigInt::from(*bottom.numer());
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    assert!(r.is_zero(), "Weyl dimension must be an integer");
    assert!(q.is_positive());
    u64::try_from(q).map_err(|_| Error::Parse("dimension exceeds u64".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::parse_type_string;

    fn datum(s: &str) -> RootDatum {
        let (t, iso) = parse_type_string(s).unwrap();
        RootDatum::build(t, iso).unwrap()
    }

    #[test]
    fn dominance_order_basics() {
        let d = datum("A1:sc");
        let a = d.coweight(&[1]).unwrap();
        let b = d.coweight(&[2]).unwrap();
        assert!(dominance_leq(&d, &a, &a));
        assert!(dominance_leq(&d, &a, &b));
        assert!(!dominance_leq(&d, &b, &a));

        let d = datum("A2:adj");
        let omega1 = d.fundamental_coweight(0).unwrap();
        let omega2 = d.fundamental_coweight(1).unwrap();
        assert!(!dominance_leq(&d, &omega1, &omega2));
        assert!(!dominance_leq(&d, &omega2, &omega1));
    }

    #[test]
    fn omega_of_quasi_minuscule_is_orbit_plus_zero() {
        let d = datum("A1:sc");
        let alpha_vee = d.coweight(&[1]).unwrap();
        let omega = omega_set(&d, &alpha_vee).unwrap();
        assert_eq!(omega, vec![alpha_vee.clone(), d.zero_coweight(), alpha_vee.neg()]);
    }

    #[test]
    fn omega_of_minuscule_is_single_orbit() {
        let d = datum("A1:adj");
        let omega_cw = d.fundamental_coweight(0).unwrap();
        let omega = omega_set(&d, &omega_cw).unwrap();
        assert_eq!(omega, vec![omega_cw.clone(), omega_cw.neg()]);
    }

    #[test]
    fn omega_of_twice_alpha_vee() {
        let d = datum("A1:sc");
        let lam = d.coweight(&[2]).unwrap();
        let omega = omega_set(&d, &lam).unwrap();
        let expect: Vec<Coweight> = [2, 1, 0, -1, -2]
            .iter()
            .map(|&k| d.coweight(&[k]).unwrap())
            .collect();
        assert_eq!(omega, expect);
    }

    #[test]
    fn omega_rejects_non_dominant() {
        let d = datum("A1:sc");
        assert_eq!(
            omega_set(&d, &d.coweight(&[-1]).unwrap()).unwrap_err(),
            Error::NotDominant
        );
    }

    #[test]
    fn highest_weight_has_multiplicity_one() {
        let d = datum("A2:sc");
        let theta_vee = d.coweight(&[1, 1]).unwrap();
        assert_eq!(weight_multiplicity(&d, &theta_vee, &theta_vee).unwrap(), 1);
    }

    #[test]
    fn sl2_string_multiplicities() {
        let d = datum("A1:sc");
        let alpha_vee = d.coweight(&[1]).unwrap();
        assert_eq!(weight_multiplicity(&d, &alpha_vee, &d.zero_coweight()).unwrap(), 1);
    }

    #[test]
    fn adjoint_zero_weight_multiplicity_is_rank() {
        let d = datum("A2:sc");
        let theta_vee = d.coweight(&[1, 1]).unwrap();
        assert_eq!(weight_multiplicity(&d, &theta_vee, &d.zero_coweight()).unwrap(), 2);
    }

    #[test]
    fn weyl_dimensions_rank_one() {
        let d = datum("A1:sc");
        assert_eq!(weyl_dimension(&d, &d.zero_coweight()).unwrap(), 1);
        assert_eq!(weyl_dimension(&d, &d.coweight(&[1]).unwrap()).unwrap(), 3);
        assert_eq!(weyl_dimension(&d, &d.coweight(&[2]).unwrap()).unwrap(), 5);
    }

    #[test]
    fn dimension_matches_diagram_sum() {
        for (t, lam) in [("A2:sc", vec![1, 1]), ("B2:sc", vec![1, 1]), ("G2:sc", vec![1, 2])] {
            let d = datum(t);
            let l = d.coweight(&lam).unwrap();
            let diag = weight_diagram(&d, &l).unwrap();
            assert_eq!(diag.dimension(&d), weyl_dimension(&d, &l).unwrap(), "{t}");
        }
    }

    #[test]
    fn classical_dimension_table() {
        // textbook dimensions of small fundamental and adjoint modules of
        // the dual group
        let cases: [(&str, Vec<i64>, u64); 8] = [
            ("A3:adj", vec![1, 0, 0], 4),
            ("A3:adj", vec![0, 1, 0], 6),
            ("A2:sc", vec![2, 2], 27),
            ("B2:adj", vec![1, 0], 4),
            ("D4:adj", vec![1, 0, 0, 0], 8),
            ("G2:sc", vec![1, 2], 7),
            ("E6:adj", vec![1, 0, 0, 0, 0, 0], 27),
            ("E7:adj", vec![0, 0, 0, 0, 0, 0, 1], 56),
        ];
        for (t, coords, dim) in cases {
            let d = datum(t);
            let lam = d.coweight(&coords).unwrap();
            assert_eq!(weyl_dimension(&d, &lam).unwrap(), dim, "{t} {coords:?}");
        }
    }

    #[test]
    fn zero_weight_multiplicity_of_27_is_three() {
        // the 27-dimensional module with highest coweight twice the adjoint
        // one has a three-dimensional zero weight space
        let d = datum("A2:sc");
        let lam = d.coweight(&[2, 2]).unwrap();
        assert_eq!(weight_multiplicity(&d, &lam, &d.zero_coweight()).unwrap(), 3);
    }

    #[test]
    fn dimension_multiplicative_over_factors() {
        let d = datum("A1xA1:sc");
        let l = d.coweight(&[1, 2]).unwrap();
        assert_eq!(weyl_dimension(&d, &l).unwrap(), 3 * 5);
    }

    #[test]
    fn diagram_is_weyl_invariant_and_supported_on_omega() {
        let d = datum("B2:sc");
        let lam = d.coweight(&[1, 1]).unwrap();
        let diag = weight_diagram(&d, &lam).unwrap();
        let omega = omega_set(&d, &lam).unwrap();
        for nu in &omega {
            assert!(diag.multiplicity(&d, nu) > 0);
            for i in 0..d.rank() {
                let refl = d.simple_reflect(i, nu);
                assert_eq!(diag.multiplicity(&d, nu), diag.multiplicity(&d, &refl));
            }
        }
        // outside the weight set the multiplicity vanishes
        let outside = lam.add(&d.coroot_to_coweight(0));
        assert_eq!(diag.multiplicity(&d, &outside), 0);
    }

    #[test]
    fn stratum_parity_invariant() {
        // 2<rho, lambda + nu> is even for nu in Omega(lambda)
        for t in ["A2:adj", "B2:sc", "G2:sc"] {
            let d = datum(t);
            let lam = d.coroot_q_to_coweight(&vec![1; d.rank()]);
            let (lam, _) = weyl::dominant_representative(&d, &lam);
            for nu in omega_set(&d, &lam).unwrap() {
                assert_eq!(d.rho_pair2(&lam.add(&nu)) % 2, 0, "{t}");
            }
        }
    }
}
