//! Step paths over minimal coweights: dominance testing, enumeration and
//! counting of dominant paths, and the minuscule/quasi-minuscule tensor
//! rules whose multiplicities the dominant-path counts reproduce.
//!
//! A path takes one step per entry of `mu_seq`, each step drawn from the
//! weight set of its entry. A zero step is realized as a dip by half a
//! labelled simple coroot and back, so it carries a label from the set of
//! simple roots conjugate to the maximal root of its entry's factor.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::minimal::{self, MinimalClass};
use crate::root_datum::{Coweight, RootDatum};
use crate::weights;
use crate::weyl;

/// A step sequence with labels for its zero steps and derived vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSpec {
    mu_seq: Vec<Coweight>,
    steps: Vec<Coweight>,
    /// step index -> simple-root index, defined exactly on zero steps
    zero_labels: BTreeMap<usize, usize>,
    vertices: Vec<Coweight>,
}

impl PathSpec {
    /// Validates the combinatorial invariants: every entry of `mu_seq` is
    /// minimal, every step lies in the entry's weight set, and zero steps
    /// carry exactly the labels allowed for their entry.
    pub fn new(
        datum: &RootDatum,
        mu_seq: Vec<Coweight>,
        steps: Vec<Coweight>,
        zero_labels: BTreeMap<usize, usize>,
    ) -> Result<PathSpec> {
        if mu_seq.len() != steps.len() {
            return Err(Error::InvalidPath(format!(
                "{} entries vs {} steps",
                mu_seq.len(),
                steps.len()
            )));
        }
        for (i, (mu, step)) in mu_seq.iter().zip(&steps).enumerate() {
            let class = minimal::classify(datum, mu)?;
            if !class.is_minimal() {
                return Err(Error::ElementNotMinimal);
            }
            if !weights::omega_contains(datum, mu, step) {
                return Err(Error::StepNotInOmega { index: i });
            }
            if step.is_zero() {
                let gamma = match &class {
                    MinimalClass::QuasiMinuscule(g) => g,
                    _ => {
                        return Err(Error::InvalidPath(format!(
                            "zero step {i} on a minuscule entry"
                        )))
                    }
                };
                let label = zero_labels.get(&i).ok_or_else(|| {
                    Error::InvalidPath(format!("zero step {i} is missing its label"))
                })?;
                if !minimal::delta_gamma_indices(datum, gamma)?.contains(label) {
                    return Err(Error::InvalidPath(format!(
                        "label of zero step {i} is not conjugate to the maximal root"
                    )));
                }
            } else if zero_labels.contains_key(&i) {
                return Err(Error::InvalidPath(format!("label on nonzero step {i}")));
            }
        }
        let mut vertices = vec![datum.zero_coweight()];
        for step in &steps {
            vertices.push(vertices.last().unwrap().add(step));
        }
        Ok(PathSpec { mu_seq, steps, zero_labels, vertices })
    }

    pub fn mu_seq(&self) -> &[Coweight] {
        &self.mu_seq
    }

    pub fn steps(&self) -> &[Coweight] {
        &self.steps
    }

    pub fn zero_labels(&self) -> &BTreeMap<usize, usize> {
        &self.zero_labels
    }

    /// sigma_0 = 0, sigma_i = sigma_{i-1} + step_i.
    pub fn vertices(&self) -> &[Coweight] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn endpoint(&self) -> &Coweight {
        self.vertices.last().unwrap()
    }
}

/// True iff the path stays in the dominant cone: straight segments between
/// dominant vertices stay in the (convex) cone, and the dip of a zero step
/// at vertex sigma leaves it iff the label pairs with sigma below 1.
pub fn is_dominant_path(datum: &RootDatum, path: &PathSpec) -> bool {
    for v in path.vertices() {
        if !weyl::is_dominant(datum, v) {
            return false;
        }
    }
    for (&i, &label) in path.zero_labels() {
        if datum.simple_pair(label, &path.vertices()[i]) < 1 {
            return false;
        }
    }
    true
}

struct StepTable {
    mu: Coweight,
    /// weight set in canonical order
    omega: Vec<Coweight>,
    /// simple-root indices usable as zero-step labels (quasi-minuscule only)
    labels: Vec<usize>,
    /// partial sums of the remaining entries, for reachability pruning
    suffix_hi: Coweight,
    suffix_lo: Coweight,
}

fn step_tables(datum: &RootDatum, mu_seq: &[Coweight]) -> Result<Vec<StepTable>> {
    let w0 = weyl::longest_element(datum);
    let mut tables: Vec<StepTable> = Vec::with_capacity(mu_seq.len());
    for mu in mu_seq {
        let class = minimal::classify(datum, mu)?;
        let labels = match &class {
            MinimalClass::Minuscule => Vec::new(),
            MinimalClass::QuasiMinuscule(gamma) => minimal::delta_gamma_indices(datum, gamma)?,
            _ => return Err(Error::ElementNotMinimal),
        };
        tables.push(StepTable {
            omega: weights::omega_set(datum, mu)?,
            labels,
            mu: mu.clone(),
            suffix_hi: datum.zero_coweight(),
            suffix_lo: datum.zero_coweight(),
        });
    }
    // suffix bounds: every step from an entry onward is squeezed between
    // the sums of the lowest and highest weights of the remaining entries
    let mut hi = datum.zero_coweight();
    let mut lo = datum.zero_coweight();
    for t in tables.iter_mut().rev() {
        hi = hi.add(&t.mu);
        lo = lo.add(&weyl::act(datum, &w0, &t.mu));
        t.suffix_hi = hi.clone();
        t.suffix_lo = lo.clone();
    }
    Ok(tables)
}

/// The target minus the current vertex must stay between the extreme sums
/// of the remaining entries.
fn reachable(datum: &RootDatum, table: &StepTable, sigma: &Coweight, target: &Coweight) -> bool {
    let need = target.sub(sigma);
    weights::dominance_leq(datum, &need, &table.suffix_hi)
        && weights::dominance_leq(datum, &table.suffix_lo, &need)
}

/// Every path over `mu_seq` from 0 to the target, dominant ones only when
/// requested, in canonical enumeration order.
pub fn enumerate_paths(
    datum: &RootDatum,
    mu_seq: &[Coweight],
    target: &Coweight,
    dominant_only: bool,
) -> Result<Vec<PathSpec>> {
    let tables = step_tables(datum, mu_seq)?;
    let mut out = Vec::new();
    let mut steps: Vec<Coweight> = Vec::with_capacity(mu_seq.len());
    let mut labels: BTreeMap<usize, usize> = BTreeMap::new();
    #[allow(clippy::too_many_arguments)]
    fn go(
        datum: &RootDatum,
        tables: &[StepTable],
        i: usize,
        sigma: Coweight,
        target: &Coweight,
        dominant_only: bool,
        steps: &mut Vec<Coweight>,
        labels: &mut BTreeMap<usize, usize>,
        out: &mut Vec<PathSpec>,
    ) {
        if i == tables.len() {
            if sigma == *target {
                let mu_seq: Vec<Coweight> = tables.iter().map(|t| t.mu.clone()).collect();
                out.push(
                    PathSpec::new(datum, mu_seq, steps.clone(), labels.clone())
                        .expect("enumerated paths are valid by construction"),
                );
            }
            return;
        }
        let table = &tables[i];
        if !reachable(datum, table, &sigma, target) {
            return;
        }
        for nu in &table.omega {
            let next = sigma.add(nu);
            if dominant_only && !weyl::is_dominant(datum, &next) {
                continue;
            }
            if nu.is_zero() {
                for &label in &table.labels {
                    if dominant_only && datum.simple_pair(label, &sigma) < 1 {
                        continue;
                    }
                    steps.push(nu.clone());
                    labels.insert(i, label);
                    go(datum, tables, i + 1, next.clone(), target, dominant_only, steps, labels, out);
                    labels.remove(&i);
                    steps.pop();
                }
            } else {
                steps.push(nu.clone());
                go(datum, tables, i + 1, next, target, dominant_only, steps, labels, out);
                steps.pop();
            }
        }
    }
    go(
        datum,
        &tables,
        0,
        datum.zero_coweight(),
        target,
        dominant_only,
        &mut steps,
        &mut labels,
        &mut out,
    );
    Ok(out)
}

/// Number of dominant paths from 0 to a dominant target, computed by
/// dynamic programming over (step index, vertex). Zero steps at vertex sigma
/// contribute one branch per label pairing at least 1 with sigma.
pub fn count_dominant_paths(
    datum: &RootDatum,
    mu_seq: &[Coweight],
    target: &Coweight,
) -> Result<u64> {
    if !weyl::is_dominant(datum, target) {
        return Err(Error::NotDominant);
    }
    let tables = step_tables(datum, mu_seq)?;
    let mut layer: BTreeMap<Coweight, u64> = BTreeMap::new();
    layer.insert(datum.zero_coweight(), 1);
    for table in &tables {
        let mut next: BTreeMap<Coweight, u64> = BTreeMap::new();
        for (sigma, count) in &layer {
            if !reachable(datum, table, sigma, target) {
                continue;
            }
            for nu in &table.omega {
                if nu.is_zero() {
                    let branches = table
                        .labels
                        .iter()
                        .filter(|&&label| datum.simple_pair(label, sigma) >= 1)
                        .count() as u64;
                    if branches > 0 {
                        *next.entry(sigma.clone()).or_insert(0) += count * branches;
                    }
                } else {
                    let vertex = sigma.add(nu);
                    if weyl::is_dominant(datum, &vertex) {
                        *next.entry(vertex).or_insert(0) += count;
                    }
                }
            }
        }
        layer = next;
    }
    Ok(layer.get(target).copied().unwrap_or(0))
}

/// Dominant-path counts to every reachable dominant endpoint at once.
pub fn count_dominant_paths_all(
    datum: &RootDatum,
    mu_seq: &[Coweight],
) -> Result<BTreeMap<Coweight, u64>> {
    let tables = step_tables(datum, mu_seq)?;
    let mut layer: BTreeMap<Coweight, u64> = BTreeMap::new();
    layer.insert(datum.zero_coweight(), 1);
    for table in &tables {
        let mut next: BTreeMap<Coweight, u64> = BTreeMap::new();
        for (sigma, count) in &layer {
            for nu in &table.omega {
                if nu.is_zero() {
                    let branches = table
                        .labels
                        .iter()
                        .filter(|&&label| datum.simple_pair(label, sigma) >= 1)
                        .count() as u64;
                    if branches > 0 {
                        *next.entry(sigma.clone()).or_insert(0) += count * branches;
                    }
                } else {
                    let vertex = sigma.add(nu);
                    if weyl::is_dominant(datum, &vertex) {
                        *next.entry(vertex).or_insert(0) += count;
                    }
                }
            }
        }
        layer = next;
    }
    Ok(layer)
}

/// Multiset of dominant coweights with positive multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Multiset {
    entries: BTreeMap<Coweight, u64>,
}

impl Multiset {
    pub fn singleton(cw: Coweight) -> Multiset {
        let mut entries = BTreeMap::new();
        entries.insert(cw, 1);
        Multiset { entries }
    }

    pub fn add(&mut self, cw: Coweight, mult: u64) {
        if mult > 0 {
            *self.entries.entry(cw).or_insert(0) += mult;
        }
    }

    pub fn get(&self, cw: &Coweight) -> u64 {
        self.entries.get(cw).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Coweight, u64)> {
        self.entries.iter().map(|(k, &v)| (k, v))
    }

    /// Entries in decreasing dominance-compatible canonical order.
    pub fn entries_canonical(&self, datum: &RootDatum) -> Vec<(Coweight, u64)> {
        let mut v: Vec<(Coweight, u64)> =
            self.entries.iter().map(|(k, &m)| (k.clone(), m)).collect();
        v.sort_by(|a, b| datum.canonical_cmp(&a.0, &b.0));
        v
    }

    /// Sum of multiplicity times irreducible dimension.
    pub fn total_dimension(&self, datum: &RootDatum) -> Result<u64> {
        let mut total = 0u64;
        for (cw, m) in self.iter() {
            total += m * weights::weyl_dimension(datum, cw)?;
        }
        Ok(total)
    }
}

/// Decomposition of (minimal tensor highest-weight) into irreducibles.
///
/// Minuscule entries contribute one summand per orbit element landing
/// dominant after translation; quasi-minuscule entries additionally keep one
/// copy of the input per conjugate simple root pairing at least 1 with it.
pub fn tensor_with_minimal(
    datum: &RootDatum,
    mu: &Coweight,
    lambda: &Coweight,
) -> Result<Multiset> {
    if !weyl::is_dominant(datum, lambda) {
        return Err(Error::NotDominant);
    }
    let class = minimal::classify(datum, mu)?;
    if !class.is_minimal() {
        return Err(Error::ElementNotMinimal);
    }
    let mut out = Multiset::default();
    for nu in weyl::orbit(datum, mu) {
        let sum = lambda.add(&nu);
        if weyl::is_dominant(datum, &sum) {
            out.add(sum, 1);
        }
    }
    if let MinimalClass::QuasiMinuscule(gamma) = &class {
        for label in minimal::delta_gamma_indices(datum, gamma)? {
            if datum.simple_pair(label, lambda) >= 1 {
                out.add(lambda.clone(), 1);
            }
        }
    }
    Ok(out)
}

/// Left fold of `tensor_with_minimal` over the sequence, starting from the
/// trivial module.
pub fn iterated_tensor(datum: &RootDatum, mu_seq: &[Coweight]) -> Result<Multiset> {
    let mut acc = Multiset::singleton(datum.zero_coweight());
    for mu in mu_seq {
        let mut next = Multiset::default();
        for (lambda, mult) in acc.iter() {
            for (key, m) in tensor_with_minimal(datum, mu, lambda)?.iter() {
                next.add(key.clone(), m * mult);
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// The common dimension of the strata indexed by a step sequence: the
/// rho-pairing of the sum of steps plus entries, an integer by parity.
pub fn stratum_dims_product(
    datum: &RootDatum,
    mu_seq: &[Coweight],
    nu_seq: &[Coweight],
) -> Result<i64> {
    if mu_seq.len() != nu_seq.len() {
        return Err(Error::DimensionMismatch { expected: mu_seq.len(), got: nu_seq.len() });
    }
    let mut total = datum.zero_coweight();
    for (i, (mu, nu)) in mu_seq.iter().zip(nu_seq).enumerate() {
        if !weights::omega_contains(datum, mu, nu) {
            return Err(Error::StepNotInOmega { index: i });
        }
        total = total.add(mu).add(nu);
    }
    let doubled = datum.rho_pair2(&total);
    assert!(doubled % 2 == 0, "parity: steps stay congruent to entries mod coroots");
    Ok(doubled / 2)
}
