//! Cartan types: families, rank bounds, Cartan matrices and the string
//! syntax `"A2:sc"`, `"B3:adj"`, `"A1xA1:adj"`,
//! `"A2:lattice=1,0;0,1"` used by the CLI.

use crate::error::{Error, Result};

/// Irreducible family letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        match c {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }

    fn rank_ok(self, n: usize) -> bool {
        match self {
            Family::A => n >= 1,
            Family::B | Family::C => n >= 2,
            Family::D => n >= 3,
            Family::E => (6..=8).contains(&n),
            Family::F => n == 4,
            Family::G => n == 2,
        }
    }
}

/// Product of irreducible factors, e.g. `A2` or `A1xA1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanType {
    factors: Vec<(Family, usize)>,
}

/// Choice of the coweight lattice between the coroot and fundamental-coweight
/// lattices. `Custom` rows are basis vectors in fundamental-coweight
/// coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Isogeny {
    SimplyConnected,
    Adjoint,
    Custom(Vec<Vec<i64>>),
}

impl CartanType {
    pub fn new(factors: Vec<(Family, usize)>) -> Result<CartanType> {
        if factors.is_empty() {
            return Err(Error::Parse("empty Cartan type".into()));
        }
        for &(family, rank) in &factors {
            if !family.rank_ok(rank) {
                return Err(Error::InvalidRank { family: family.letter(), rank });
            }
        }
        Ok(CartanType { factors })
    }

    pub fn factors(&self) -> &[(Family, usize)] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|&(_, n)| n).sum()
    }

    /// Full Cartan matrix, `[i][j]` = pairing of simple root i with simple
    /// coroot j. Block diagonal over the factors.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let rank = self.rank();
        let mut m = vec![vec![0i64; rank]; rank];
        let mut offset = 0;
        for &(family, n) in &self.factors {
            let block = irreducible_cartan(family, n);
            for i in 0..n {
                for j in 0..n {
                    m[offset + i][offset + j] = block[i][j];
                }
            }
            offset += n;
        }
        m
    }

    /// Number of positive roots, summed over factors.
    pub fn positive_root_count(&self) -> usize {
        self.factors.iter().map(|&(f, n)| irreducible_positive_count(f, n)).sum()
    }

    /// Weyl group order, multiplied over factors.
    pub fn weyl_order(&self) -> u128 {
        self.factors.iter().map(|&(f, n)| irreducible_weyl_order(f, n)).product()
    }

    pub fn to_string_plain(&self) -> String {
        self.factors
            .iter()
            .map(|&(f, n)| format!("{}{}", f.letter(), n))
            .collect::<Vec<_>>()
            .join("x")
    }

    /// Parses `"A2"`, `"B3"`, `"A1xA1"`.
    pub fn parse(s: &str) -> Result<CartanType> {
        let mut factors = Vec::new();
        for part in s.split('x') {
            let mut chars = part.chars();
            let letter = chars
                .next()
                .and_then(Family::from_letter)
                .ok_or_else(|| Error::Parse(format!("bad factor {part:?}")))?;
            let rank: usize = chars
                .as_str()
                .parse()
                .map_err(|_| Error::Parse(format!("bad rank in {part:?}")))?;
            factors.push((letter, rank));
        }
        CartanType::new(factors)
    }
}

/// Parses the full `TYPE[:ISOGENY]` syntax. Defaults to `:sc`.
pub fn parse_type_string(s: &str) -> Result<(CartanType, Isogeny)> {
    let (type_part, iso_part) = match s.find(':') {
        Some(k) => (&s[..k], Some(&s[k + 1..])),
        None => (s, None),
    };
    let cartan = CartanType::parse(type_part)?;
    let isogeny = match iso_part {
        None | Some("sc") => Isogeny::SimplyConnected,
        Some("adj") => Isogeny::Adjoint,
        Some(spec) => {
            let rest = spec
                .strip_prefix("lattice=")
                .ok_or_else(|| Error::Parse(format!("unknown isogeny {spec:?}")))?;
            let rows: Vec<Vec<i64>> = rest
                .split(';')
                .map(|row| {
                    row.split(',')
                        .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad lattice entry {x:?}"))))
                        .collect()
                })
                .collect::<Result<_>>()?;
            Isogeny::Custom(rows)
        }
    };
    Ok((cartan, isogeny))
}

fn irreducible_cartan(family: Family, n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        m[i][i] = 2;
    }
    let mut chain = |i: usize, j: usize| {
        m[i][j] = -1;
        m[j][i] = -1;
    };
    match family {
        Family::A => {
            for i in 1..n {
                chain(i - 1, i);
            }
        }
        Family::B => {
            // last simple root short: <alpha_{n-1}, alpha_n_vee> = -2
            for i in 1..n.saturating_sub(1) {
                chain(i - 1, i);
            }
            m[n - 2][n - 1] = -2;
            m[n - 1][n - 2] = -1;
        }
        Family::C => {
            // last simple root long: <alpha_n, alpha_{n-1}_vee> = -2
            for i in 1..n.saturating_sub(1) {
                chain(i - 1, i);
            }
            m[n - 2][n - 1] = -1;
            m[n - 1][n - 2] = -2;
        }
        Family::D => {
            for i in 1..n - 1 {
                chain(i - 1, i);
            }
            // both end nodes attach to node n-3 (0-based)
            chain(n - 3, n - 1);
        }
        Family::E => {
            // Bourbaki numbering: chain 1-3-4-5-6(-7-8), node 2 hangs off 4.
            let edges: &[(usize, usize)] = match n {
                6 => &[(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)],
                7 => &[(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)],
                8 => &[(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)],
                _ => unreachable!(),
            };
            for &(a, b) in edges {
                chain(a - 1, b - 1);
            }
        }
        Family::F => {
            chain(0, 1);
            chain(2, 3);
            m[1][2] = -2;
            m[2][1] = -1;
        }
        Family::G => {
            // alpha_1 short, alpha_2 long
            m[0][1] = -1;
            m[1][0] = -3;
        }
    }
    m
}

fn irreducible_positive_count(family: Family, n: usize) -> usize {
    match family {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Family::F => 24,
        Family::G => 6,
    }
}

fn irreducible_weyl_order(family: Family, n: usize) -> u128 {
    let fact = |k: usize| -> u128 { (1..=k as u128).product() };
    match family {
        Family::A => fact(n + 1),
        Family::B | Family::C => (1u128 << n) * fact(n),
        Family::D => (1u128 << (n - 1)) * fact(n),
        Family::E => match n {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Family::F => 1_152,
        Family::G => 12,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_products_and_isogenies() {
        let (t, iso) = parse_type_string("A1xA1:adj").unwrap();
        assert_eq!(t.rank(), 2);
        assert_eq!(iso, Isogeny::Adjoint);
        let (t, iso) = parse_type_string("B3").unwrap();
        assert_eq!(t.to_string_plain(), "B3");
        assert_eq!(iso, Isogeny::SimplyConnected);
        let (_, iso) = parse_type_string("A2:lattice=1,0;0,1").unwrap();
        assert_eq!(iso, Isogeny::Custom(vec![vec![1, 0], vec![0, 1]]));
    }

    #[test]
    fn rank_bounds_enforced() {
        assert!(CartanType::parse("B1").is_err());
        assert!(CartanType::parse("D2").is_err());
        assert!(CartanType::parse("E5").is_err());
        assert!(CartanType::parse("F3").is_err());
        assert!(CartanType::parse("G1").is_err());
        assert!(CartanType::parse("A1").is_ok());
        assert!(CartanType::parse("D3").is_ok());
    }

    #[test]
    fn cartan_determinants_match_fundamental_groups() {
        // det over Q via rational elimination
        use crate::linalg::{rat, rat_inverse};
        let det = |t: &CartanType| -> i64 {
            let m = t.cartan_matrix();
            let n = m.len();
            // product of pivots from LU without pivot scaling: do simple
            // fraction-free expansion via rationals
            let mut a: Vec<Vec<crate::linalg::Rat>> =
                m.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
            let mut det = rat(1);
            for col in 0..n {
                let piv = (col..n).find(|&r| a[r][col] != rat(0)).unwrap();
                if piv != col {
                    a.swap(col, piv);
                    det = -det;
                }
                det *= a[col][col];
                let p = a[col][col];
                for r in col + 1..n {
                    let f = a[r][col] / p;
                    for j in col..n {
                        let v = a[col][j];
                        a[r][j] -= f * v;
                    }
                }
            }
            assert!(det.is_integer());
            // sanity: matrix invertible
            assert!(rat_inverse(&m.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect::<Vec<_>>()).is_some());
            det.to_integer()
        };
        let cases = [
            ("A1", 2),
            ("A3", 4),
            ("B2", 2),
            ("C3", 2),
            ("D4", 4),
            ("E6", 3),
            ("E7", 2),
            ("E8", 1),
            ("F4", 1),
            ("G2", 1),
            ("A1xA2", 6),
        ];
        for (name, expected) in cases {
            assert_eq!(det(&CartanType::parse(name).unwrap()), expected, "{name}");
        }
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(CartanType::parse("A3").unwrap().weyl_order(), 24);
        assert_eq!(CartanType::parse("B3").unwrap().weyl_order(), 48);
        assert_eq!(CartanType::parse("G2").unwrap().weyl_order(), 12);
        assert_eq!(CartanType::parse("E6").unwrap().weyl_order(), 51_840);
        assert_eq!(CartanType::parse("A1xG2").unwrap().weyl_order(), 24);
    }
}
