//! Finite groups by multiplication table.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
    labels: Vec<String>,
}

impl Group {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Group> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Group("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Group(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::Group(format!("row {i} contains {bad}, outside 0..{n}")));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::Group("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::Group(format!("element {g} has no inverse")))?;
            inverses.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::Group(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let labels = (0..n).map(|i| format!("g{i}")).collect();
        Ok(Group { table, identity, inverses, labels })
    }

    pub fn cyclic(n: usize) -> Result<Group> {
        Group::abelian(&[n])
    }

    /// `C_{n_1} × … × C_{n_r}`, elements enumerated in mixed radix with the
    /// first factor most significant.
    pub fn abelian(factors: &[usize]) -> Result<Group> {
        if factors.contains(&0) {
            return Err(Error::Group("invariant factors must be positive".into()));
        }
        let n: usize = factors.iter().product();
        let digits = |mut x: usize| {
            let mut d = vec![0; factors.len()];
            for (slot, &f) in d.iter_mut().zip(factors).rev() {
                *slot = x % f;
                x /= f;
            }
            d
        };
        let number = |d: &[usize]| d.iter().zip(factors).fold(0, |acc, (&x, &f)| acc * f + x);
        let table = (0..n)
            .map(|a| {
                let da = digits(a);
                (0..n)
                    .map(|b| {
                        let s: Vec<usize> = digits(b).iter().zip(&da).zip(factors).map(|((x, y), f)| (x + y) % f).collect();
                        number(&s)
                    })
                    .collect()
            })
            .collect();
        let mut g = Group::from_table(table)?;
        if factors.len() == 1 {
            g.labels = (0..n).map(|i| if i == 0 { "1".into() } else if i == 1 { "g".into() } else { format!("g^{i}") }).collect();
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Subgroup generated by `gens`, sorted.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut set = vec![self.identity];
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !set.contains(&y) {
                    set.push(y);
                    frontier.push(y);
                }
            }
        }
        set.sort_unstable();
        set
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_and_product() {
        let c4 = Group::cyclic(4).unwrap();
        assert_eq!(c4.mul(3, 3), 2);
        assert_eq!(c4.inverse(1), 3);
        assert_eq!(c4.generated(&[2]), vec![0, 2]);
        let k = Group::abelian(&[2, 2]).unwrap();
        assert_eq!(k.order(), 4);
        assert!((0..4).all(|g| k.mul(g, g) == 0));
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(Group::from_table(vec![vec![0, 1], vec![0, 1]]).is_err());
        assert!(Group::from_table(vec![vec![0, 2], vec![1, 0]]).is_err());
    }
}
