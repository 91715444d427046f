//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//! Every assertion is an exact integer or polynomial identity; there are no
//! tolerances anywhere.
//!
//! Run with `cargo test -p satcomb-cli --test acceptance -- --nocapture`.

use std::collections::BTreeMap;

use satcomb::cartan::parse_type_string;
use satcomb::{check, minimal, paths, tables, weights, weyl};
use satcomb::{Coweight, MinimalClass, RootDatum};

fn datum(spec: &str) -> RootDatum {
    let (t, iso) = parse_type_string(spec).unwrap();
    RootDatum::build(t, iso).unwrap()
}

fn report(number: usize, name: &str, ok: bool, details: &str) {
    let status = if ok { "PASS" } else { "FAIL" };
    println!("acceptance {number:02} ({name}): {status} - {details}");
    assert!(ok, "acceptance {number:02} ({name}) failed: {details}");
}

#[test]
fn criterion_01_kostka_identity() {
    let types = ["A1:sc", "A1:adj", "A2:sc", "A2:adj", "A3:sc", "B2:sc", "C2:sc", "G2:sc"];
    let mut ok = true;
    let mut pairs = 0usize;
    for t in types {
        let d = datum(t);
        let r = tables::verify_kostka_weight_identity(&d, 12).unwrap();
        ok &= r.violations.is_empty();
        pairs += r.pairs_checked;
    }
    report(1, "kostka identity K(1)=m", ok, &format!("{pairs} dominant pairs over {} types", types.len()));
}

#[test]
fn criterion_02_root_sum_identity() {
    let types = ["A1:sc", "A2:sc", "A3:sc", "B2:sc", "B3:sc", "C3:sc", "G2:sc"];
    let mut ok = true;
    let mut elements = 0usize;
    for t in types {
        let d = datum(t);
        for w in weyl::elements(&d).unwrap() {
            let sum = weyl::partial_root_sum(&d, &w);
            let doubled: Vec<i64> = sum.coords().iter().map(|c| 2 * c).collect();
            let winv_rho2 = weyl::act_on_root(&d, &w.inverse(), &d.two_rho());
            let expected: Vec<i64> = d
                .two_rho()
                .coords()
                .iter()
                .zip(winv_rho2.coords())
                .map(|(a, b)| a + b)
                .collect();
            ok &= doubled == expected;
            elements += 1;
        }
    }
    report(2, "root sum = rho + w^-1 rho", ok, &format!("{elements} Weyl elements over {} types", types.len()));
}

const RANK_LE_3: &[&str] = &[
    "A1:sc", "A1:adj", "A1xA1:adj", "A2:sc", "A2:adj", "B2:sc", "B2:adj", "C2:sc", "G2:sc",
    "A3:sc", "A3:adj", "B3:sc", "B3:adj", "C3:sc", "C3:adj", "A1xA2:adj",
];

#[test]
fn criterion_03_minimality_dichotomy() {
    let mut ok = true;
    let mut dominants = 0usize;
    for t in RANK_LE_3 {
        let d = datum(t);
        let shell = check::dominant_norm_shell(&d, 12);
        dominants += shell.len();
        for mu in &shell {
            let brute = check::is_minimal_brute_force(&d, &shell, mu);
            let class = minimal::classify(&d, mu).unwrap();
            ok &= brute == class.is_minimal();
            match &class {
                MinimalClass::Minuscule => {
                    for p in d.positive_roots() {
                        ok &= d.pair(&p.root, mu).unwrap() <= 1;
                    }
                }
                MinimalClass::QuasiMinuscule(gamma) => {
                    // mu = gamma_vee, gamma the unique maximal root pairing >= 2
                    ok &= d.coroot_of(gamma).unwrap() == *mu;
                    ok &= d.factors().iter().any(|f| f.theta == *gamma);
                    let big: Vec<_> = d
                        .positive_roots()
                        .iter()
                        .filter(|p| d.pair(&p.root, mu).unwrap() >= 2)
                        .collect();
                    ok &= big.len() == 1 && big[0].root == *gamma;
                }
                _ => {}
            }
        }
        // dichotomy on the enumerated M itself
        for (cw, class) in minimal::minimal_elements(&d) {
            let minuscule = matches!(class, MinimalClass::Minuscule);
            let quasi = matches!(class, MinimalClass::QuasiMinuscule(_));
            ok &= minuscule ^ quasi;
            ok &= minimal::classify(&d, &cw).unwrap() == class;
        }
    }
    report(3, "minimality dichotomy vs brute force", ok, &format!("{dominants} dominants in norm shell 12, {} types", RANK_LE_3.len()));
}

#[test]
fn criterion_04_short_coroot_descent() {
    let mut ok = true;
    let mut descents = 0usize;
    for t in RANK_LE_3 {
        let d = datum(t);
        for lam in check::dominant_norm_shell(&d, 12) {
            let class = minimal::classify(&d, &lam).unwrap();
            match class {
                MinimalClass::NotMinimal(_) => {
                    let beta = minimal::short_coroot_descent(&d, &lam).unwrap();
                    ok &= beta.is_some();
                    if let Some(beta) = beta {
                        ok &= d.is_short_coroot(&beta).unwrap();
                        ok &= weyl::is_dominant(&d, &lam.sub(&beta));
                    }
                }
                _ => ok &= minimal::short_coroot_descent(&d, &lam).unwrap().is_none(),
            }
            // the full descent chain has strictly decreasing norm
            let mut current = lam.clone();
            let mut norm = d.norm2(&current);
            while let Some(beta) = minimal::short_coroot_descent(&d, &current).unwrap() {
                current = current.sub(&beta);
                let next = d.norm2(&current);
                ok &= next < norm;
                norm = next;
                descents += 1;
            }
        }
    }
    report(4, "short-coroot descent exists and terminates", ok, &format!("{descents} descent steps over {} types", RANK_LE_3.len()));
}

#[test]
fn criterion_05_path_counts_equal_tensor_multiplicities() {
    let rank_le_2 = ["A1:sc", "A1:adj", "A2:sc", "A2:adj", "B2:sc", "B2:adj", "G2:sc"];
    let rank_3 = ["A3:sc", "A3:adj", "B3:sc", "C3:sc"];
    let mut ok = true;
    let mut sequences = 0usize;
    for (types, max_len) in [(&rank_le_2[..], 4), (&rank_3[..], 3)] {
        for t in types {
            let d = datum(t);
            for seq in check::minimal_sequences(&d, max_len) {
                let counts = paths::count_dominant_paths_all(&d, &seq).unwrap();
                let tensor = paths::iterated_tensor(&d, &seq).unwrap();
                let tensor_map: BTreeMap<Coweight, u64> =
                    tensor.iter().map(|(k, v)| (k.clone(), v)).collect();
                ok &= counts == tensor_map;
                let mut product = 1u64;
                for mu in &seq {
                    product *= weights::weyl_dimension(&d, mu).unwrap();
                }
                ok &= tensor.total_dimension(&d).unwrap() == product;
                sequences += 1;
            }
        }
    }
    // concrete anchor: three quasi-minuscule factors in rank one
    let d = datum("A1:sc");
    let a = d.coweight(&[1]).unwrap();
    let tensor = paths::iterated_tensor(&d, &[a.clone(), a.clone(), a.clone()]).unwrap();
    let expected: Vec<(Vec<i64>, u64)> =
        vec![(vec![3], 1), (vec![2], 2), (vec![1], 3), (vec![0], 1)];
    let got: Vec<(Vec<i64>, u64)> = tensor
        .entries_canonical(&d)
        .into_iter()
        .map(|(k, m)| (k.coords().to_vec(), m))
        .collect();
    ok &= got == expected;
    ok &= tensor.total_dimension(&d).unwrap() == 27;
    report(5, "dominant path count = tensor multiplicity", ok, &format!("{sequences} sequences, dimension checks exact"));
}

#[test]
fn criterion_06_decompose_witness() {
    let mut ok = true;
    let mut dominants = 0usize;
    for t in RANK_LE_3 {
        let d = datum(t);
        for lam in tables::dominant_shell(&d, 12) {
            let dec = minimal::decompose(&d, &lam).unwrap();
            for mu in &dec.mu_seq {
                ok &= minimal::classify(&d, mu).unwrap().is_minimal();
            }
            ok &= paths::is_dominant_path(&d, &dec.witness);
            ok &= dec.witness.endpoint() == &lam;
            ok &= paths::count_dominant_paths(&d, &dec.mu_seq, &lam).unwrap() >= 1;
            dominants += 1;
        }
    }
    report(6, "decomposition witness is a dominant path", ok, &format!("{dominants} dominants with 2<rho,.> <= 12 over {} types", RANK_LE_3.len()));
}

#[test]
fn criterion_07_quasi_minuscule_rank() {
    let types = ["A1:sc", "A2:sc", "A3:sc", "B2:sc", "B3:sc", "C3:sc", "D4:sc", "G2:sc", "A1xB2:sc"];
    let mut ok = true;
    let mut factors = 0usize;
    for t in types {
        let d = datum(t);
        for f in d.factors() {
            let theta_vee = d.coroot_of(&f.theta).unwrap();
            let mult =
                weights::weight_multiplicity(&d, &theta_vee, &d.zero_coweight()).unwrap();
            let predicted = tables::quasi_minuscule_ranks(&d, &f.theta, None).unwrap();
            ok &= mult as usize == predicted;
            factors += 1;
        }
    }
    report(7, "zero-weight multiplicity = conjugate simple count", ok, &format!("{factors} irreducible factors"));
}

#[test]
fn criterion_08_coset_representatives() {
    let types = ["A1:adj", "A2:adj", "A3:adj", "B2:adj", "B3:adj", "C3:adj", "D4:adj", "G2:adj", "A1xA1:adj"];
    let mut ok = true;
    let mut classes = 0usize;
    for t in types {
        let d = datum(t);
        let (covered, got, all) = check::minimal_covers_cosets(&d);
        ok &= covered && got == all;
        classes += all;
        // the quasi-minuscule members sit in the trivial class
        for (cw, class) in minimal::minimal_elements(&d) {
            if matches!(class, MinimalClass::QuasiMinuscule(_)) {
                ok &= d.coweight_to_coroot_coords(&cw).is_some();
            }
        }
    }
    report(8, "minimal set covers coweight/coroot cosets", ok, &format!("{classes} cosets over {} adjoint types", types.len()));
}

#[test]
fn criterion_09_prediction_tables() {
    let types = ["A1:sc", "A1:adj", "A2:sc", "A2:adj", "B2:sc", "G2:sc", "A3:sc"];
    let mut ok = true;
    let mut strata = 0usize;
    for t in types {
        let d = datum(t);
        let shell = tables::dominant_shell(&d, 8);
        let elements = weyl::elements(&d).unwrap();
        let w0 = weyl::longest_element(&d);
        for lam in &shell {
            // Whittaker coefficients vanish exactly off the diagonal
            for nu in &shell {
                let w = tables::whittaker_predicted(&d, lam, nu).unwrap();
                if lam == nu {
                    ok &= w.scalar == 1
                        && w.half_exponent == d.rho_pair2(lam)
                        && w.sign == if d.rho_pair2(lam) % 2 == 0 { 1 } else { -1 };
                } else {
                    ok &= w.is_zero();
                }
            }
            // constant-term support is exactly the weight set
            let omega = weights::omega_set(&d, lam).unwrap();
            let omega_set: std::collections::BTreeSet<&Coweight> = omega.iter().collect();
            for nu in &omega {
                let ct = tables::constant_term_predicted(&d, lam, nu).unwrap();
                ok &= !ct.is_zero();
                ok &= ct.half_exponent == d.rho_pair2(nu);
                ok &= ct.scalar == weights::weight_multiplicity(&d, lam, nu).unwrap();
                for j in 0..d.rank() {
                    let outside = nu.add(&d.coroot_to_coweight(j));
                    if !omega_set.contains(&outside) {
                        ok &= tables::constant_term_predicted(&d, lam, &outside)
                            .unwrap()
                            .is_zero();
                    }
                }
            }
            // orbit strata: two independent routes to the dimension, plus
            // complementarity under the longest element
            for w in &elements {
                let moved = weyl::act(&d, w, lam);
                let dim = tables::stratum_dim(&d, lam, &moved).unwrap();
                ok &= 2 * dim == d.rho_pair2(&lam.add(&moved));
                let kept: i64 = d
                    .positive_roots()
                    .iter()
                    .filter(|p| weyl::act_on_root(&d, w, &p.root).is_positive())
                    .map(|p| d.pair(&p.root, lam).unwrap())
                    .sum();
                ok &= dim == kept;
                let opposite = weyl::act(&d, &w0, &moved);
                ok &= dim + tables::stratum_dim(&d, lam, &opposite).unwrap()
                    == d.rho_pair2(lam);
                strata += 1;
            }
        }
    }
    report(9, "prediction tables exact", ok, &format!("{strata} orbit strata over {} types", types.len()));
}

#[test]
fn criterion_10_selfcheck_determinism() {
    let bin = env!("CARGO_BIN_EXE_satcomb");
    let run = |threads: &str| {
        let out = std::process::Command::new(bin)
            .args([
                "selfcheck",
                "--types",
                "A1:sc,A1:adj,A2:adj,A2:sc,B2:sc,A3:sc",
                "--shell",
                "4",
            ])
            .env("SATCOMB_THREADS", threads)
            .output()
            .expect("selfcheck runs");
        (out.status.code(), out.stdout)
    };
    let (code1, bytes1) = run("1");
    let (code4, bytes4) = run("4");
    let ok = code1 == Some(0) && code4 == Some(0) && bytes1 == bytes4 && !bytes1.is_empty();
    report(10, "selfcheck byte-identical across thread counts", ok, &format!("{} output bytes", bytes1.len()));
}
