//! Split semisimple root data at a chosen isogeny type.
//!
//! A [`RootDatum`] fixes a Cartan type, a coweight lattice between the coroot
//! and fundamental-coweight lattices, the set of positive roots with their
//! coroots, the pairing matrix for the chosen lattice basis, the doubled
//! half-sums `2rho` / `2rho_vee`, and the invariant bilinear form normalized
//! so short coroots have squared length 2 in every irreducible factor.
//!
//! Coordinate conventions, used everywhere in the crate:
//! * coweights are integer vectors in the stored lattice basis (simple
//!   coroots when simply connected, fundamental coweights when adjoint);
//! * roots are integer vectors in the simple-root basis;
//! * coroots are integer vectors in the simple-coroot basis and embed into
//!   the coweight lattice through [`RootDatum::coroot_to_coweight`].

use std::fmt;

use num_traits::Zero;

use crate::cartan::{CartanType, Family, Isogeny};
use crate::error::{Error, Result};
use crate::linalg::{self, Rat};

/// Integer coordinate vector in the coweight-lattice basis of its datum.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coweight {
    coords: Vec<i64>,
}

impl Coweight {
    pub fn new(coords: Vec<i64>) -> Coweight {
        Coweight { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Coweight) -> Coweight {
        Coweight::new(linalg::add(&self.coords, &other.coords))
    }

    pub fn sub(&self, other: &Coweight) -> Coweight {
        Coweight::new(linalg::sub(&self.coords, &other.coords))
    }

    pub fn neg(&self) -> Coweight {
        Coweight::new(linalg::neg(&self.coords))
    }

    pub fn scale(&self, k: i64) -> Coweight {
        Coweight::new(linalg::scale(k, &self.coords))
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Integer coordinate vector in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    coords: Vec<i64>,
}

impl Root {
    pub fn new(coords: Vec<i64>) -> Root {
        Root { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && self.coords.iter().any(|&c| c > 0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// One irreducible factor of the datum.
#[derive(Debug, Clone)]
pub struct FactorInfo {
    pub family: Family,
    pub rank: usize,
    /// index of the factor's first simple root
    pub offset: usize,
    /// highest root of the factor, in full-rank simple-root coordinates
    pub theta: Root,
    /// global simple indices with theta-coefficient 1; the corresponding
    /// fundamental coweights need not lie in the lattice individually
    pub minuscule_nodes: Vec<usize>,
}

/// A positive root together with its coroot in simple-coroot coordinates.
#[derive(Debug, Clone)]
pub struct PositiveRoot {
    pub root: Root,
    pub coroot_q: Vec<i64>,
}

#[derive(Debug, Clone)]
pub struct RootDatum {
    cartan: CartanType,
    isogeny: Isogeny,
    rank: usize,
    cartan_matrix: Vec<Vec<i64>>,
    factors: Vec<FactorInfo>,
    /// pairing[i][j] = pairing of simple root i with lattice basis vector j
    pairing: Vec<Vec<i64>>,
    /// coroot_x[j] = lattice coordinates of simple coroot j
    coroot_x: Vec<Vec<i64>>,
    /// fundamental_x[i] = lattice coordinates of fundamental coweight i,
    /// when it lies in the lattice
    fundamental_x: Vec<Option<Vec<i64>>>,
    positive: Vec<PositiveRoot>,
    /// 2rho in simple-root coordinates
    rho2_root: Vec<i64>,
    /// 2rho_vee in lattice coordinates
    rho_dual2_x: Vec<i64>,
    /// d[i] = half the squared length of simple coroot i
    coroot_d: Vec<i64>,
    /// gram[i][j] = (alpha_i_vee, alpha_j_vee)
    coroot_gram: Vec<Vec<i64>>,
    /// invariant form on the lattice basis
    form_x: Vec<Vec<Rat>>,
    /// coroot-lattice coordinates of the lattice basis vectors
    x_to_q: Vec<Vec<Rat>>,
    /// inverse of the pairing matrix; column i solves for fundamental
    /// coweight i in lattice coordinates (entries may be non-integral)
    pairing_inv: Vec<Vec<Rat>>,
    weyl_order: u128,
}

impl RootDatum {
    /// Builds the datum, generating positive roots by reflection closure and
    /// validating the lattice sits between the coroot and coweight lattices.
    pub fn build(cartan: CartanType, isogeny: Isogeny) -> Result<RootDatum> {
        let rank = cartan.rank();
        let a = cartan.cartan_matrix();

        // lattice basis rows, in fundamental-coweight coordinates
        let basis: Vec<Vec<i64>> = match &isogeny {
            Isogeny::SimplyConnected => {
                // basis = simple coroots; row i = column i of the Cartan matrix
                (0..rank).map(|i| (0..rank).map(|k| a[k][i]).collect()).collect()
            }
            Isogeny::Adjoint => (0..rank)
                .map(|i| (0..rank).map(|k| i64::from(k == i)).collect())
                .collect(),
            Isogeny::Custom(rows) => {
                if rows.len() != rank || rows.iter().any(|r| r.len() != rank) {
                    return Err(Error::InvalidLattice(format!(
                        "basis must be a {rank}x{rank} integer matrix"
                    )));
                }
                rows.clone()
            }
        };

        // pairing of simple root i with basis vector j: basis is given in
        // fundamental-coweight coordinates, so this is just a transpose
        let pairing: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| basis[j][i]).collect())
            .collect();

        // coroot j in lattice coordinates: solve pairing-transpose system
        let basis_t_rat: Vec<Vec<Rat>> = (0..rank)
            .map(|i| (0..rank).map(|j| linalg::rat(basis[j][i])).collect())
            .collect();
        let basis_t_inv = linalg::rat_inverse(&basis_t_rat)
            .ok_or_else(|| Error::InvalidLattice("basis is singular".into()))?;
        let solve_x = |target: &[i64]| -> Option<Vec<i64>> {
            let rhs = linalg::to_rat_vec(target);
            linalg::rat_vec_to_int(&linalg::rat_mat_vec(&basis_t_inv, &rhs))
        };

        let mut coroot_x = Vec::with_capacity(rank);
        for j in 0..rank {
            let omega_coords: Vec<i64> = (0..rank).map(|k| a[k][j]).collect();
            let x = solve_x(&omega_coords).ok_or_else(|| {
                Error::InvalidLattice(format!("simple coroot {} is not in the lattice", j + 1))
            })?;
            coroot_x.push(x);
        }

        let fundamental_x: Vec<Option<Vec<i64>>> = (0..rank)
            .map(|i| {
                let e: Vec<i64> = (0..rank).map(|k| i64::from(k == i)).collect();
                solve_x(&e)
            })
            .collect();

        // positive roots by closure under simple reflections
        let positive = generate_positive_roots(&a, rank);
        if positive.len() != cartan.positive_root_count() {
            return Err(Error::InvalidLattice(format!(
                "generated {} positive roots, expected {}",
                positive.len(),
                cartan.positive_root_count()
            )));
        }

        let mut rho2_root = vec![0i64; rank];
        let mut rho_dual2_q = vec![0i64; rank];
        for p in &positive {
            rho2_root = linalg::add(&rho2_root, p.root.coords());
            rho_dual2_q = linalg::add(&rho_dual2_q, &p.coroot_q);
        }
        let rho_dual2_x = {
            let mut v = vec![0i64; rank];
            for (j, &c) in rho_dual2_q.iter().enumerate() {
                v = linalg::add(&v, &linalg::scale(c, &coroot_x[j]));
            }
            v
        };

        let factors = split_factors(&cartan, &a, &positive)?;

        let coroot_d = coroot_normalization(&a, &factors);
        let mut coroot_gram = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                coroot_gram[i][j] = coroot_d[j] * a[j][i];
            }
        }
        debug_assert!((0..rank).all(|i| (0..rank).all(|j| coroot_gram[i][j] == coroot_gram[j][i])));

        // form on the lattice basis: express basis vectors in coroot
        // coordinates and pull the coroot gram matrix back
        let q_to_x_rat: Vec<Vec<Rat>> = (0..rank)
            .map(|i| (0..rank).map(|j| linalg::rat(coroot_x[j][i])).collect())
            .collect();
        let x_to_q = linalg::rat_inverse(&q_to_x_rat)
            .ok_or_else(|| Error::InvalidLattice("coroots do not span".into()))?;
        let mut form_x = vec![vec![Rat::zero(); rank]; rank];
        for s in 0..rank {
            for t in 0..rank {
                let mut acc = Rat::zero();
                for i in 0..rank {
                    for j in 0..rank {
                        acc += x_to_q[i][s] * x_to_q[j][t] * linalg::rat(coroot_gram[i][j]);
                    }
                }
                form_x[s][t] = acc;
            }
        }

        let datum = RootDatum {
            weyl_order: cartan.weyl_order(),
            cartan,
            isogeny,
            rank,
            cartan_matrix: a,
            factors,
            pairing,
            coroot_x,
            fundamental_x,
            positive,
            rho2_root,
            rho_dual2_x,
            coroot_d,
            coroot_gram,
            form_x,
            x_to_q,
            pairing_inv: basis_t_inv,
        };
        datum.validate()?;
        Ok(datum)
    }

    fn validate(&self) -> Result<()> {
        // <rho, alpha_vee> = 1 for every simple alpha
        for j in 0..self.rank {
            let cw = self.coroot_to_coweight(j);
            if self.rho_pair2(&cw) != 2 {
                return Err(Error::InvalidLattice(format!(
                    "2<rho, alpha_{}vee> != 2",
                    j + 1
                )));
            }
        }
        // pairing/coroot compatibility over all positive roots
        for p in &self.positive {
            let cw = self.coroot_q_to_coweight(&p.coroot_q);
            if self.pair(&p.root, &cw)? != 2 {
                return Err(Error::InvalidLattice("<alpha, alpha_vee> != 2".into()));
            }
        }
        Ok(())
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan
    }

    pub fn isogeny(&self) -> &Isogeny {
        &self.isogeny
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan_matrix
    }

    pub fn factors(&self) -> &[FactorInfo] {
        &self.factors
    }

    pub fn weyl_order(&self) -> u128 {
        self.weyl_order
    }

    /// Positive roots in canonical order (height, then lexicographic).
    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let mut coords = vec![0i64; self.rank];
        coords[i] = 1;
        Root::new(coords)
    }

    pub fn coweight(&self, coords: &[i64]) -> Result<Coweight> {
        if coords.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: coords.len() });
        }
        Ok(Coweight::new(coords.to_vec()))
    }

    pub fn zero_coweight(&self) -> Coweight {
        Coweight::new(vec![0; self.rank])
    }

    /// Lattice coordinates of simple coroot j.
    pub fn coroot_to_coweight(&self, j: usize) -> Coweight {
        Coweight::new(self.coroot_x[j].clone())
    }

    /// Embeds a vector in simple-coroot coordinates into the lattice.
    pub fn coroot_q_to_coweight(&self, q: &[i64]) -> Coweight {
        let mut v = vec![0i64; self.rank];
        for (j, &c) in q.iter().enumerate() {
            if c != 0 {
                v = linalg::add(&v, &linalg::scale(c, &self.coroot_x[j]));
            }
        }
        Coweight::new(v)
    }

    /// Fundamental coweight i, when it lies in the lattice.
    pub fn fundamental_coweight(&self, i: usize) -> Option<Coweight> {
        self.fundamental_x[i].clone().map(Coweight::new)
    }

    /// Exact lattice coordinates of fundamental coweight i, integral or not.
    pub fn fundamental_rat(&self, i: usize) -> Vec<Rat> {
        (0..self.rank).map(|k| self.pairing_inv[k][i]).collect()
    }

    /// Natural pairing of a root-lattice vector with a coweight.
    pub fn pair(&self, root: &Root, cw: &Coweight) -> Result<i64> {
        if root.coords().len() != self.rank || cw.coords().len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: root.coords().len().max(cw.coords().len()),
            });
        }
        let through = linalg::mat_vec(&self.pairing, cw.coords());
        Ok(linalg::dot(root.coords(), &through))
    }

    /// Pairing of simple root i with a coweight. Hot path, no validation.
    pub fn simple_pair(&self, i: usize, cw: &Coweight) -> i64 {
        linalg::dot(&self.pairing[i], cw.coords())
    }

    /// The integer `2<rho, nu>`; `<rho, nu>` itself may be half-integral.
    pub fn rho_pair2(&self, cw: &Coweight) -> i64 {
        let through = linalg::mat_vec(&self.pairing, cw.coords());
        linalg::dot(&self.rho2_root, &through)
    }

    /// 2rho in simple-root coordinates.
    pub fn two_rho(&self) -> Root {
        Root::new(self.rho2_root.clone())
    }

    /// 2rho_vee in lattice coordinates.
    pub fn two_rho_dual(&self) -> Coweight {
        Coweight::new(self.rho_dual2_x.clone())
    }

    /// Coroot of a root of this datum, as a coweight.
    pub fn coroot_of(&self, root: &Root) -> Result<Coweight> {
        let p = self.find_root(root).ok_or(Error::NotARoot)?;
        Ok(if p.0 {
            self.coroot_q_to_coweight(&p.1.coroot_q)
        } else {
            self.coroot_q_to_coweight(&p.1.coroot_q).neg()
        })
    }

    fn find_root(&self, root: &Root) -> Option<(bool, &PositiveRoot)> {
        if root.coords().len() != self.rank {
            return None;
        }
        let neg = Root::new(linalg::neg(root.coords()));
        self.positive
            .iter()
            .find(|p| p.root == *root)
            .map(|p| (true, p))
            .or_else(|| self.positive.iter().find(|p| p.root == neg).map(|p| (false, p)))
    }

    pub fn is_root(&self, root: &Root) -> bool {
        self.find_root(root).is_some()
    }

    /// Squared length of a coroot given in simple-coroot coordinates.
    pub fn coroot_norm2_q(&self, q: &[i64]) -> i64 {
        let mut acc = 0i64;
        for i in 0..self.rank {
            for j in 0..self.rank {
                acc += q[i] * q[j] * self.coroot_gram[i][j];
            }
        }
        acc
    }

    /// True iff the coweight is a short coroot, i.e. has squared length 2 in
    /// the normalization of its irreducible factor.
    pub fn is_short_coroot(&self, cw: &Coweight) -> Result<bool> {
        let q = self
            .coweight_to_coroot_coords(cw)
            .ok_or(Error::NotACoroot)?;
        let found = self
            .positive
            .iter()
            .any(|p| p.coroot_q == q || p.coroot_q == linalg::neg(&q));
        if !found {
            return Err(Error::NotACoroot);
        }
        Ok(self.coroot_norm2_q(&q) == 2)
    }

    /// Simple-coroot coordinates of a coweight, when it lies in the coroot
    /// lattice.
    pub fn coweight_to_coroot_coords(&self, cw: &Coweight) -> Option<Vec<i64>> {
        linalg::rat_vec_to_int(&self.coroot_coords_rat(cw))
    }

    /// Exact simple-coroot coordinates of a coweight, as rationals.
    pub fn coroot_coords_rat(&self, cw: &Coweight) -> Vec<Rat> {
        linalg::rat_mat_vec(&self.x_to_q, &linalg::to_rat_vec(cw.coords()))
    }

    /// Invariant form of two coweights, normalized so short coroots have
    /// squared length 2 per irreducible factor.
    pub fn form(&self, a: &Coweight, b: &Coweight) -> Rat {
        linalg::rat_bilinear(&self.form_x, a.coords(), b.coords())
    }

    pub fn norm2(&self, a: &Coweight) -> Rat {
        self.form(a, a)
    }

    /// Half squared length of simple coroot i.
    pub fn coroot_d(&self, i: usize) -> i64 {
        self.coroot_d[i]
    }

    /// Simple reflection s_i applied to a coweight.
    pub fn simple_reflect(&self, i: usize, cw: &Coweight) -> Coweight {
        let k = self.simple_pair(i, cw);
        if k == 0 {
            return cw.clone();
        }
        Coweight::new(linalg::sub(cw.coords(), &linalg::scale(k, &self.coroot_x[i])))
    }

    /// Simple reflection s_i applied to a root-lattice vector.
    pub fn simple_reflect_root(&self, i: usize, root: &Root) -> Root {
        // <alpha, alpha_i_vee> in simple-root coordinates
        let k: i64 = root
            .coords()
            .iter()
            .enumerate()
            .map(|(j, &c)| c * self.cartan_matrix[j][i])
            .sum();
        let mut coords = root.coords().to_vec();
        coords[i] -= k;
        Root::new(coords)
    }

    /// Canonical total order on coweights: descending `2<rho, .>` first,
    /// then ascending lexicographic. Compatible with dominance.
    pub fn canonical_cmp(&self, a: &Coweight, b: &Coweight) -> std::cmp::Ordering {
        self.rho_pair2(b)
            .cmp(&self.rho_pair2(a))
            .then_with(|| a.coords().cmp(b.coords()))
    }

    pub fn sort_canonical(&self, list: &mut [Coweight]) {
        list.sort_by(|a, b| self.canonical_cmp(a, b));
    }

    /// The factor whose simple-root range contains global index i.
    pub fn factor_of_simple(&self, i: usize) -> usize {
        self.factors
            .iter()
            .position(|f| i >= f.offset && i < f.offset + f.rank)
            .expect("simple index out of range")
    }
}

fn generate_positive_roots(a: &[Vec<i64>], rank: usize) -> Vec<PositiveRoot> {
    use std::collections::BTreeSet;
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    for i in 0..rank {
        let mut root = vec![0i64; rank];
        root[i] = 1;
        let mut coroot = vec![0i64; rank];
        coroot[i] = 1;
        seen.insert(root.clone());
        queue.push((root, coroot));
    }
    let mut out: Vec<PositiveRoot> = Vec::new();
    while let Some((root, coroot)) = queue.pop() {
        out.push(PositiveRoot { root: Root::new(root.clone()), coroot_q: coroot.clone() });
        for i in 0..rank {
            // reflect the root and its coroot together
            let k_root: i64 = (0..rank).map(|j| root[j] * a[j][i]).sum();
            let mut new_root = root.clone();
            new_root[i] -= k_root;
            if new_root.iter().all(|&c| c >= 0) && !seen.contains(&new_root) {
                let k_co: i64 = (0..rank).map(|j| coroot[j] * a[i][j]).sum();
                let mut new_coroot = coroot.clone();
                new_coroot[i] -= k_co;
                seen.insert(new_root.clone());
                queue.push((new_root, new_coroot));
            }
        }
    }
    out.sort_by(|x, y| {
        x.root
            .height()
            .cmp(&y.root.height())
            .then_with(|| x.root.coords().cmp(y.root.coords()))
    });
    out
}

fn split_factors(
    cartan: &CartanType,
    a: &[Vec<i64>],
    positive: &[PositiveRoot],
) -> Result<Vec<FactorInfo>> {
    let rank = cartan.rank();
    let mut factors = Vec::new();
    let mut offset = 0;
    for &(family, n) in cartan.factors() {
        let in_factor = |root: &Root| {
            root.coords().iter().enumerate().all(|(j, &c)| c == 0 || (j >= offset && j < offset + n))
        };
        // highest root: the unique positive root of maximal height in the
        // factor (the highest short root is also dominant but sits lower)
        let theta = positive
            .iter()
            .map(|p| &p.root)
            .filter(|r| in_factor(r))
            .max_by_key(|r| r.height())
            .cloned()
            .ok_or_else(|| Error::InvalidLattice("no highest root found".into()))?;
        debug_assert!((0..rank).all(|i| {
            let k: i64 = (0..rank).map(|j| theta.coords()[j] * a[j][i]).sum();
            k >= 0
        }));
        let minuscule_nodes = (offset..offset + n).filter(|&i| theta.coords()[i] == 1).collect();
        factors.push(FactorInfo { family, rank: n, offset, theta, minuscule_nodes });
        offset += n;
    }
    Ok(factors)
}

/// Half squared lengths of the simple coroots, normalized so the minimum in
/// each irreducible factor is 1 (short coroots there have squared length 2).
fn coroot_normalization(a: &[Vec<i64>], factors: &[FactorInfo]) -> Vec<i64> {
    let rank = a.len();
    let mut d = vec![Rat::zero(); rank];
    for f in factors {
        let range = f.offset..f.offset + f.rank;
        d[f.offset] = linalg::rat(1);
        // propagate along Dynkin edges: d_j * a_ji = d_i * a_ij
        let mut changed = true;
        while changed {
            changed = false;
            for i in range.clone() {
                for j in range.clone() {
                    if i != j && a[i][j] != 0 && !d[i].is_zero() && d[j].is_zero() {
                        d[j] = d[i] * linalg::rat(a[i][j]) / linalg::rat(a[j][i]);
                        changed = true;
                    }
                }
            }
        }
        let min = range.clone().map(|i| d[i]).min().expect("nonempty factor");
        for i in range {
            d[i] /= min;
        }
    }
    d.into_iter()
        .map(|x| {
            debug_assert!(x.is_integer());
            x.to_integer()
        })
        .collect()
}
