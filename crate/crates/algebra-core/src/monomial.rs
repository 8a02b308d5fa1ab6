//! Exponent vectors and term orders.

use std::cmp::Ordering;

pub const MAX_VARS: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Monomial {
    exps: [u32; MAX_VARS],
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS);
        let mut m = Self::default();
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    pub fn var(i: usize, e: u32) -> Self {
        let mut m = Self::default();
        m.exps[i] = e;
        m
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u32; MAX_VARS] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        for (a, b) in r.exps.iter_mut().zip(o.exps.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        r
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let mut r = *self;
        for a in r.exps.iter_mut() {
            *a = a.checked_mul(k).expect("exponent overflow");
        }
        r
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.exps.iter().zip(o.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self` divides `o`.
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        let mut r = *o;
        for (a, b) in r.exps.iter_mut().zip(self.exps.iter()) {
            *a -= *b;
        }
        r
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        for (a, b) in r.exps.iter_mut().zip(o.exps.iter()) {
            *a = (*a).max(*b);
        }
        r
    }

    pub fn gcd_is_one(&self, o: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(o.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum TermOrder {
    #[default]
    Grevlex,
    Lex,
}

impl std::str::FromStr for TermOrder {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "grevlex" => Ok(TermOrder::Grevlex),
            "lex" => Ok(TermOrder::Lex),
            other => Err(format!("unknown term order `{other}`")),
        }
    }
}

impl std::fmt::Display for TermOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TermOrder::Grevlex => "grevlex",
            TermOrder::Lex => "lex",
        })
    }
}

/// A term order together with the variable count and grading weights.
/// Grevlex compares weighted degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: TermOrder,
    pub nvars: usize,
    pub weights: Vec<u32>,
}

impl MonomialOrder {
    pub fn new(kind: TermOrder, nvars: usize, weights: Option<&[u32]>) -> Self {
        let weights = match weights {
            Some(w) => w.to_vec(),
            None => vec![1; nvars],
        };
        Self {
            kind,
            nvars,
            weights,
        }
    }

    pub fn degree(&self, m: &Monomial) -> i64 {
        (0..self.nvars)
            .map(|i| self.weights[i] as i64 * m.exp(i) as i64)
            .sum()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            TermOrder::Grevlex => {
                let da = self.degree(a);
                let db = self.degree(b);
                if da != db {
                    return da.cmp(&db);
                }
                for i in (0..self.nvars).rev() {
                    let (x, y) = (a.exp(i), b.exp(i));
                    if x != y {
                        return y.cmp(&x);
                    }
                }
                Ordering::Equal
            }
            TermOrder::Lex => {
                for i in 0..self.nvars {
                    let (x, y) = (a.exp(i), b.exp(i));
                    if x != y {
                        return x.cmp(&y);
                    }
                }
                Ordering::Equal
            }
        }
    }
}
