//! Kostka-Foulkes q-analogs via the alternating Weyl sum over a q-graded
//! partition function on positive coroots, and the numerical prediction
//! tables they certify: Euler characteristics, stratum dimensions, constant
//! terms and Whittaker coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::par;
use crate::root_datum::{Coweight, RootDatum};
use crate::weights;
use crate::weyl::{self, WeylWord};

/// Integer polynomial in q; index = exponent, no trailing zeros, zero is the
/// empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPolynomial {
    coeffs: Vec<i64>,
}

impl QPolynomial {
    pub fn zero() -> QPolynomial {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> QPolynomial {
        QPolynomial { coeffs: vec![1] }
    }

    pub fn monomial(k: usize) -> QPolynomial {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        QPolynomial { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> QPolynomial {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn add_assign(&mut self, other: &QPolynomial) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), 0);
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i] += c;
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn sub_assign(&mut self, other: &QPolynomial) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), 0);
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i] -= c;
        }
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    /// Multiply by q^k.
    pub fn shift(&self, k: usize) -> QPolynomial {
        if self.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        QPolynomial { coeffs }
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let body = match k {
                0 => c.to_string(),
                1 if c == 1 => "q".to_string(),
                1 => format!("{c}*q"),
                _ if c == 1 => format!("q^{k}"),
                _ => format!("{c}*q^{k}"),
            };
            terms.push(body);
        }
        write!(f, "{}", terms.join(" + "))
    }
}

/// A value of the form `sign * q^(half_exponent / 2) * scalar`, the shape of
/// the predicted constant-term and Whittaker entries. Scalar 0 forces the
/// canonical zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedHalfPower {
    pub sign: i64,
    pub half_exponent: i64,
    pub scalar: u64,
}

impl SignedHalfPower {
    pub fn zero() -> SignedHalfPower {
        SignedHalfPower { sign: 1, half_exponent: 0, scalar: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.scalar == 0
    }

    fn normalized(sign: i64, half_exponent: i64, scalar: u64) -> SignedHalfPower {
        if scalar == 0 {
            SignedHalfPower::zero()
        } else {
            SignedHalfPower { sign, half_exponent, scalar }
        }
    }
}

impl fmt::Display for SignedHalfPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let sign = if self.sign < 0 { "-" } else { "+" };
        let q = if self.half_exponent % 2 == 0 {
            format!("q^{}", self.half_exponent / 2)
        } else {
            format!("q^{}/2", self.half_exponent)
        };
        write!(f, "{sign}{q}*{}", self.scalar)
    }
}

/// q-graded partition count: coefficient of q^k is the number of multisets
/// of exactly k positive coroots summing to the given vector.
pub fn q_partition(datum: &RootDatum, chi: &Coweight) -> QPolynomial {
    let q = match datum.coweight_to_coroot_coords(chi) {
        Some(q) => q,
        None => return QPolynomial::zero(),
    };
    if q.iter().any(|&c| c < 0) {
        return QPolynomial::zero();
    }
    let coroots: Vec<Vec<i64>> =
        datum.positive_roots().iter().map(|p| p.coroot_q.clone()).collect();
    let mut memo: BTreeMap<(usize, Vec<i64>), QPolynomial> = BTreeMap::new();
    fn go(
        coroots: &[Vec<i64>],
        idx: usize,
        rest: Vec<i64>,
        memo: &mut BTreeMap<(usize, Vec<i64>), QPolynomial>,
    ) -> QPolynomial {
        if rest.iter().all(|&c| c == 0) {
            return QPolynomial::one();
        }
        if idx == coroots.len() {
            return QPolynomial::zero();
        }
        if let Some(hit) = memo.get(&(idx, rest.clone())) {
            return hit.clone();
        }
        let mut acc = QPolynomial::zero();
        let mut current = rest.clone();
        let mut k = 0usize;
        loop {
            let tail = go(coroots, idx + 1, current.clone(), memo);
            acc.add_assign(&tail.shift(k));
            // subtract one more copy of this coroot while coordinates allow
            let next: Vec<i64> =
                current.iter().zip(&coroots[idx]).map(|(a, b)| a - b).collect();
            if next.iter().any(|&c| c < 0) {
                break;
            }
            current = next;
            k += 1;
        }
        memo.insert((idx, rest), acc.clone());
        acc
    }
    go(&coroots, 0, q, &mut memo)
}

/// Kostka-Foulkes polynomial: alternating Weyl sum of the q-partition count
/// of `w(lambda + rho_vee) - (mu + rho_vee)`, in doubled coordinates.
pub fn kostka_foulkes(datum: &RootDatum, lambda: &Coweight, mu: &Coweight) -> Result<QPolynomial> {
    let elements = weyl::elements(datum)?;
    kostka_foulkes_with_elements(datum, lambda, mu, &elements)
}

/// Same, reusing an enumerated Weyl group across many pairs.
pub fn kostka_foulkes_with_elements(
    datum: &RootDatum,
    lambda: &Coweight,
    mu: &Coweight,
    elements: &[WeylWord],
) -> Result<QPolynomial> {
    for cw in [lambda, mu] {
        if !weyl::is_dominant(datum, cw) {
            return Err(Error::NotDominant);
        }
    }
    let rho_dual2 = datum.two_rho_dual();
    let shifted2 = lambda.scale(2).add(&rho_dual2);
    let target2 = mu.scale(2).add(&rho_dual2);
    let mut acc = QPolynomial::zero();
    for w in elements {
        let moved2 = weyl::act(datum, w, &shifted2).sub(&target2);
        // halve exactly or the term has no partitions at all
        if moved2.coords().iter().any(|c| c % 2 != 0) {
            continue;
        }
        let chi: Vec<i64> = moved2.coords().iter().map(|c| c / 2).collect();
        let part = q_partition(datum, &Coweight::new(chi));
        if part.is_zero() {
            continue;
        }
        if w.sign() > 0 {
            acc.add_assign(&part);
        } else {
            acc.sub_assign(&part);
        }
    }
    Ok(acc)
}

/// One row of the Kostka identity report.
#[derive(Debug, Clone)]
pub struct KostkaViolation {
    pub lambda: Coweight,
    pub mu: Coweight,
    pub kostka_at_one: i64,
    pub multiplicity: u64,
}

#[derive(Debug, Clone)]
pub struct KostkaReport {
    pub pairs_checked: usize,
    pub violations: Vec<KostkaViolation>,
}

/// Enumerates all dominant coweights with doubled rho-pairing at most the
/// bound, in canonical order.
pub fn dominant_shell(datum: &RootDatum, bound2: i64) -> Vec<Coweight> {
    // dominant coweights correspond to nonnegative pairing vectors; the
    // doubled rho-pairing is a positive combination of those pairings
    let rank = datum.rank();
    let weights_of_p: Vec<i64> = (0..rank)
        .map(|i| {
            // contribution of pairing p_i to 2<rho, nu>: coefficient of
            // alpha_i in 2rho
            datum.two_rho().coords()[i]
        })
        .collect();
    let mut out = Vec::new();
    let mut p = vec![0i64; rank];
    'outer: loop {
        let total: i64 = p.iter().zip(&weights_of_p).map(|(a, b)| a * b).sum();
        if total <= bound2 {
            // solve for the coweight with this pairing vector, if integral
            let mut coords = vec![crate::linalg::rat(0); rank];
            let mut ok = true;
            for k in 0..rank {
                let mut acc = crate::linalg::rat(0);
                for (i, &pi) in p.iter().enumerate() {
                    acc += datum.fundamental_rat(i)[k] * crate::linalg::rat(pi);
                }
                coords[k] = acc;
                if !acc.is_integer() {
                    ok = false;
                }
            }
            if ok {
                let cw = Coweight::new(coords.iter().map(|c| c.to_integer()).collect());
                debug_assert!(weyl::is_dominant(datum, &cw));
                out.push(cw);
            }
        }
        // odometer with early reset: once the total exceeds the bound at a
        // digit, larger values of that digit only grow it
        let mut k = 0;
        loop {
            if k == rank {
                break 'outer;
            }
            p[k] += 1;
            let t: i64 = p.iter().zip(&weights_of_p).map(|(a, b)| a * b).sum();
            if t <= bound2 {
                break;
            }
            p[k] = 0;
            k += 1;
        }
    }
    datum.sort_canonical(&mut out);
    out
}

/// Checks `K(1) = multiplicity` over every dominant pair in the shell.
/// The violation list of the report must come back empty.
pub fn verify_kostka_weight_identity(datum: &RootDatum, shell_bound2: i64) -> Result<KostkaReport> {
    let shell = dominant_shell(datum, shell_bound2);
    let elements = weyl::elements(datum)?;
    let rows = par::map_collect(shell.clone(), |lambda| -> Result<(usize, Vec<KostkaViolation>)> {
        let diagram = weights::weight_diagram(datum, &lambda)?;
        let mut pairs = 0usize;
        let mut violations = Vec::new();
        for mu in &shell {
            let k = kostka_foulkes_with_elements(datum, &lambda, mu, &elements)?;
            let m = diagram.multiplicity(datum, mu);
            pairs += 1;
            if k.eval_at_one() != m as i64 {
                violations.push(KostkaViolation {
                    lambda: lambda.clone(),
                    mu: mu.clone(),
                    kostka_at_one: k.eval_at_one(),
                    multiplicity: m,
                });
            }
        }
        Ok((pairs, violations))
    });
    let mut report = KostkaReport { pairs_checked: 0, violations: Vec::new() };
    for row in rows {
        let (pairs, violations) = row?;
        report.pairs_checked += pairs;
        report.violations.extend(violations);
    }
    Ok(report)
}

/// 1 when the second coweight is Weyl-conjugate to the first, else 0.
pub fn euler_char_predicted(datum: &RootDatum, lambda: &Coweight, nu: &Coweight) -> i64 {
    let (rep, _) = weyl::dominant_representative(datum, nu);
    i64::from(rep == *lambda)
}

/// Dimension of the stratum indexed by a weight of the module: the
/// rho-pairing of the sum, an exact integer.
pub fn stratum_dim(datum: &RootDatum, lambda: &Coweight, nu: &Coweight) -> Result<i64> {
    if !weights::omega_contains(datum, lambda, nu) {
        return Err(Error::NotInOmega);
    }
    let doubled = datum.rho_pair2(&lambda.add(nu));
    assert!(doubled % 2 == 0, "parity of rho-pairings on a weight set");
    Ok(doubled / 2)
}

/// Predicted constant term: sign (-1)^(2<rho,nu>), power q^<rho,nu>, scalar
/// the weight multiplicity. Zero outside the weight set.
pub fn constant_term_predicted(
    datum: &RootDatum,
    lambda: &Coweight,
    nu: &Coweight,
) -> Result<SignedHalfPower> {
    if !weyl::is_dominant(datum, lambda) {
        return Err(Error::NotDominant);
    }
    if !weights::omega_contains(datum, lambda, nu) {
        return Ok(SignedHalfPower::zero());
    }
    let doubled = datum.rho_pair2(nu);
    let mult = weights::weight_multiplicity(datum, lambda, nu)?;
    let sign = if doubled.rem_euclid(2) == 0 { 1 } else { -1 };
    Ok(SignedHalfPower::normalized(sign, doubled, mult))
}

/// Predicted Whittaker coefficient: zero off the diagonal, and on it the
/// sign and half-power at the doubled rho-pairing with scalar one.
pub fn whittaker_predicted(
    datum: &RootDatum,
    lambda: &Coweight,
    nu: &Coweight,
) -> Result<SignedHalfPower> {
    for cw in [lambda, nu] {
        if !weyl::is_dominant(datum, cw) {
            return Err(Error::NotDominant);
        }
    }
    if lambda != nu {
        return Ok(SignedHalfPower::zero());
    }
    let doubled = datum.rho_pair2(lambda);
    let sign = if doubled.rem_euclid(2) == 0 { 1 } else { -1 };
    Ok(SignedHalfPower::normalized(sign, doubled, 1))
}

/// Rank prediction for the quasi-minuscule stratum: the number of simple
/// roots conjugate to the maximal root, filtered by strictly positive
/// pairing against the optional dominant twist.
pub fn quasi_minuscule_ranks(
    datum: &RootDatum,
    gamma: &crate::root_datum::Root,
    sigma: Option<&Coweight>,
) -> Result<usize> {
    match sigma {
        None => Ok(crate::minimal::delta_gamma(datum, gamma)?.len()),
        Some(s) => Ok(crate::minimal::delta_gamma_sigma(datum, gamma, s)?.len()),
    }
}
