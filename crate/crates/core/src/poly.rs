//! Univariate polynomials over a [`Field`], just enough to split minimal
//! polynomials into coprime factors.
//!
//! Coefficients are stored lowest degree first with no trailing zeros.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::{Field, Scalar};

/// Largest integer whose divisors we enumerate when looking for rational roots.
const DIVISOR_SEARCH_LIMIT: u64 = 1_000_000_000_000;
/// Largest prime for which roots are found by exhaustive search.
const ROOT_SEARCH_PRIME_LIMIT: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn constant(field: Field, c: Scalar) -> Poly {
        Poly::new(field, vec![c])
    }

    /// `T - r`
    pub fn linear(field: Field, r: &Scalar) -> Poly {
        Poly::new(field, vec![-r, field.one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> &Scalar {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn monic(&self) -> Poly {
        let inv = self.lead().inv().expect("nonzero lead");
        Poly::new(self.field, self.coeffs.iter().map(|c| c * &inv).collect())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::new(self.field, vec![]);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(self.field, out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = self.field.zero();
        let out = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z) - other.coeffs.get(i).unwrap_or(&z))
            .collect();
        Poly::new(self.field, out)
    }

    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let inv = divisor.lead().inv().expect("nonzero lead");
        let mut rem = self.coeffs.clone();
        let mut quo = vec![self.field.zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let top = rem.len() - 1;
            let c = &rem[top] * &inv;
            if !c.is_zero() {
                for (k, dc) in divisor.coeffs.iter().enumerate() {
                    rem[top - d + k] -= &(&c * dc);
                }
            }
            quo[top - d] = c;
            rem.pop();
        }
        (Poly::new(self.field, quo), Poly::new(self.field, rem))
    }

    /// `(g, s, t)` with `s·self + t·other = g = gcd`, `g` monic.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::constant(f, f.one()), Poly::new(f, vec![]));
        let (mut t0, mut t1) = (Poly::new(f, vec![]), Poly::constant(f, f.one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = Poly::constant(f, r0.lead().inv().expect("gcd is nonzero"));
        (r0.mul(&inv), s0.mul(&inv), t0.mul(&inv))
    }

    /// Roots lying in the ground field. Complete for rationals whose
    /// numerator and denominator candidates are small enough to enumerate
    /// and for small primes; otherwise best-effort.
    pub fn roots(&self) -> Vec<Scalar> {
        if self.degree().unwrap_or(0) == 0 {
            return vec![];
        }
        let mut found = Vec::new();
        match self.field {
            Field::Prime(p) => {
                if p <= ROOT_SEARCH_PRIME_LIMIT {
                    for r in 0..p {
                        let x = Scalar::Mod(r, p);
                        if self.eval(&x).is_zero() {
                            found.push(x);
                        }
                    }
                }
            }
            Field::Rational => {
                let ints = self.integer_coefficients();
                if ints[0].is_zero() {
                    found.push(self.field.zero());
                }
                let low = ints.iter().find(|c| !c.is_zero()).expect("nonzero poly");
                let high = ints.last().expect("nonzero poly");
                let (Some(nums), Some(dens)) = (divisors(low), divisors(high)) else {
                    return found;
                };
                for a in &nums {
                    for b in &dens {
                        for sign in [1i64, -1] {
                            let r = BigRational::new(BigInt::from(*a) * sign, BigInt::from(*b));
                            let x = Scalar::Rat(r);
                            if !found.contains(&x) && self.eval(&x).is_zero() {
                                found.push(x);
                            }
                        }
                    }
                }
            }
        }
        found
    }

    fn integer_coefficients(&self) -> Vec<BigInt> {
        let rats: Vec<&BigRational> = self.coeffs.iter().map(|c| c.as_rational().expect("rational field")).collect();
        let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        rats.iter().map(|r| (*r * BigRational::from_integer(lcm.clone())).to_integer()).collect()
    }
}

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > DIVISOR_SEARCH_LIMIT {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out)
}

/// Splits a monic polynomial into pairwise coprime factors: one power of
/// `T - r` per root `r` in the field, plus the root-free remainder.
pub fn coprime_split(m: &Poly) -> Vec<Poly> {
    let f = m.field;
    let mut rest = m.clone();
    let mut parts = Vec::new();
    for r in m.roots() {
        let lin = Poly::linear(f, &r);
        let mut power = Poly::constant(f, f.one());
        loop {
            let (q, rem) = rest.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            rest = q;
            power = power.mul(&lin);
        }
        parts.push(power);
    }
    if rest.degree().unwrap_or(0) > 0 {
        parts.push(rest.monic());
    }
    parts
}
