//! Weyl group action on coweights: reflections, orbits, dominant
//! representatives, stabilizers, full enumeration for small groups, and the
//! partial root sum attached to a group element.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::linalg;
use crate::root_datum::{Coweight, Root, RootDatum};

/// Word in the simple reflections; empty means the identity. Words produced
/// by this module are reduced and lexicographically least for their element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WeylWord {
    letters: Vec<usize>,
}

impl WeylWord {
    pub fn identity() -> WeylWord {
        WeylWord { letters: Vec::new() }
    }

    pub fn new(letters: Vec<usize>) -> WeylWord {
        WeylWord { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Word of the inverse element.
    pub fn inverse(&self) -> WeylWord {
        WeylWord { letters: self.letters.iter().rev().copied().collect() }
    }

    /// Parity sign (-1)^length; well defined on the underlying element.
    pub fn sign(&self) -> i64 {
        if self.letters.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Applies a word to a coweight, rightmost letter first, so that
/// `act(w1 w2, nu) = act(w1, act(w2, nu))`.
pub fn act(datum: &RootDatum, w: &WeylWord, nu: &Coweight) -> Coweight {
    let mut v = nu.clone();
    for &i in w.letters.iter().rev() {
        v = datum.simple_reflect(i, &v);
    }
    v
}

/// Applies a word to a root-lattice vector, rightmost letter first.
pub fn act_on_root(datum: &RootDatum, w: &WeylWord, root: &Root) -> Root {
    let mut v = root.clone();
    for &i in w.letters.iter().rev() {
        v = datum.simple_reflect_root(i, &v);
    }
    v
}

/// True iff all simple pairings are nonnegative.
pub fn is_dominant(datum: &RootDatum, nu: &Coweight) -> bool {
    (0..datum.rank()).all(|i| datum.simple_pair(i, nu) >= 0)
}

/// Orbit of a coweight under the full Weyl group, in canonical order.
pub fn orbit(datum: &RootDatum, nu: &Coweight) -> Vec<Coweight> {
    let mut seen: BTreeSet<Coweight> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(nu.clone());
    queue.push_back(nu.clone());
    while let Some(v) = queue.pop_front() {
        for i in 0..datum.rank() {
            let w = datum.simple_reflect(i, &v);
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    let mut out: Vec<Coweight> = seen.into_iter().collect();
    datum.sort_canonical(&mut out);
    out
}

/// The dominant element of the orbit together with a word sending the input
/// to it. Identity word on dominant input.
pub fn dominant_representative(datum: &RootDatum, nu: &Coweight) -> (Coweight, WeylWord) {
    let mut v = nu.clone();
    let mut applied: Vec<usize> = Vec::new();
    while let Some(i) = (0..datum.rank()).find(|&i| datum.simple_pair(i, &v) < 0) {
        v = datum.simple_reflect(i, &v);
        applied.push(i);
    }
    // letters act rightmost first, so reverse the application order
    applied.reverse();
    (v, WeylWord::new(applied))
}

/// Order of the stabilizer, as |W| / |orbit|.
pub fn stabilizer_order(datum: &RootDatum, nu: &Coweight) -> u128 {
    let orbit_len = orbit(datum, nu).len() as u128;
    datum.weyl_order() / orbit_len
}

/// Sum over the positive roots kept positive by w. Equals `rho + w^{-1} rho`,
/// an identity checked by the test suite in doubled coordinates.
pub fn partial_root_sum(datum: &RootDatum, w: &WeylWord) -> Root {
    let mut sum = vec![0i64; datum.rank()];
    for p in datum.positive_roots() {
        let image = act_on_root(datum, w, &p.root);
        if image.is_positive() {
            sum = linalg::add(&sum, p.root.coords());
        }
    }
    Root::new(sum)
}

pub const DEFAULT_ENUMERATION_CAP: u128 = 51_840;

/// Every element of W as a lexicographically least reduced word, in order of
/// increasing length. Errors when |W| exceeds the cap.
pub fn elements(datum: &RootDatum) -> Result<Vec<WeylWord>> {
    elements_with_cap(datum, DEFAULT_ENUMERATION_CAP)
}

pub fn elements_with_cap(datum: &RootDatum, cap: u128) -> Result<Vec<WeylWord>> {
    let order = datum.weyl_order();
    if order > cap {
        return Err(Error::WeylGroupTooLarge { order, cap });
    }
    let rank = datum.rank();
    // an element is determined by its matrix action on simple roots
    let identity: Vec<Root> = (0..rank).map(|i| datum.simple_root(i)).collect();
    let key = |images: &[Root]| -> Vec<Vec<i64>> {
        images.iter().map(|r| r.coords().to_vec()).collect()
    };
    let mut seen: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
    seen.insert(key(&identity));
    let mut queue: VecDeque<(Vec<Root>, Vec<usize>)> = VecDeque::new();
    queue.push_back((identity, Vec::new()));
    let mut out = Vec::with_capacity(order as usize);
    while let Some((images, word)) = queue.pop_front() {
        out.push(WeylWord::new(word.clone()));
        for i in 0..rank {
            // append s_i on the right: new images are w(s_i(alpha_j))
            let next: Vec<Root> = (0..rank)
                .map(|j| {
                    let refl = datum.simple_reflect_root(i, &datum.simple_root(j));
                    let mut acc = vec![0i64; rank];
                    for (k, &c) in refl.coords().iter().enumerate() {
                        acc = linalg::add(&acc, &linalg::scale(c, images[k].coords()));
                    }
                    Root::new(acc)
                })
                .collect();
            if seen.insert(key(&next)) {
                let mut next_word = word.clone();
                next_word.push(i);
                queue.push_back((next, next_word));
            }
        }
    }
    debug_assert_eq!(out.len() as u128, order);
    Ok(out)
}

/// The longest element, as a reduced word.
pub fn longest_element(datum: &RootDatum) -> WeylWord {
    // send -2rho_vee (antidominant) to the dominant chamber
    let lowest = datum.two_rho_dual().neg();
    dominant_representative(datum, &lowest).1
}
