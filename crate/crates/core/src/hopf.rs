//! Finite-dimensional Hopf algebras by structure constants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{diff_detail, tensor_mul, tensor_vec, Algebra};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::linalg::{add_scaled, basis_vector, fmt_vector, kernel, scaled, zero_vector, Matrix, Subspace, Tensor3, Vector};
use crate::report::{first_failure, pairs, singles, Report};
use crate::scalar::{Field, Scalar};

/// `comult[i]` holds the coefficients of `Δ(e_i)`, with `e_j ⊗ e_k` at
/// index `j · dim + k`. The antipode matrix has `S(e_i)` as column `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    alg: Algebra,
    comult: Vec<Vector>,
    counit: Vector,
    antipode: Matrix,
}

/// Left and right integrals and the modular function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralData {
    pub left_integrals: Subspace,
    pub right_integrals: Subspace,
    /// Normalized left integral.
    pub t: Vector,
    /// `alpha[i] = α(e_i)` where `t e_i = α(e_i) t`.
    pub alpha: Vector,
    pub semisimple: bool,
    pub unimodular: bool,
}

impl HopfAlgebra {
    pub fn new(alg: Algebra, comult: Vec<Vector>, counit: Vector, antipode: Matrix) -> Result<HopfAlgebra> {
        let n = alg.dim();
        if comult.len() != n || comult.iter().any(|c| c.len() != n * n) {
            return Err(Error::Dimension(format!("comultiplication must list {n} vectors of length {}", n * n)));
        }
        if counit.len() != n {
            return Err(Error::Dimension(format!("counit has {} entries, expected {n}", counit.len())));
        }
        if antipode.rows() != n || antipode.cols() != n {
            return Err(Error::Dimension(format!("antipode must be {n}×{n}")));
        }
        Ok(HopfAlgebra { alg, comult, counit, antipode })
    }

    /// `kG` with group-like basis.
    pub fn group_algebra(field: Field, group: &Group) -> HopfAlgebra {
        let n = group.order();
        let mult = Tensor3::from_fn(field, n, n, n, |a, b| basis_vector(field, n, group.mul(a, b)));
        let alg = Algebra::new(mult, basis_vector(field, n, group.identity()), group.labels().to_vec()).expect("shapes agree");
        let comult = (0..n).map(|g| basis_vector(field, n * n, g * n + g)).collect();
        let antipode = Matrix::from_columns(field, n, &(0..n).map(|g| basis_vector(field, n, group.inverse(g))).collect::<Vec<_>>());
        HopfAlgebra { alg, comult, counit: vec![field.one(); n], antipode }
    }

    /// `kG*` in the basis of point indicators `p_g`.
    pub fn dual_group_algebra(field: Field, group: &Group) -> HopfAlgebra {
        let names = group.labels().iter().map(|l| format!("p_{l}")).collect();
        HopfAlgebra::group_algebra(field, group).dual().with_names(names).expect("same dimension")
    }

    /// Sweedler's four-dimensional algebra with basis `1, g, x, xg`, where
    /// `g² = 1`, `x² = 0`, `gx = -xg`, `Δg = g⊗g` and `Δx = x⊗1 + g⊗x`.
    pub fn sweedler(field: Field) -> HopfAlgebra {
        // Basis element x^a g^b sits at index 2a + b.
        let word = |i: usize| (i / 2, i % 2);
        let mult = Tensor3::from_fn(field, 4, 4, 4, |i, j| {
            let ((a, b), (c, d)) = (word(i), word(j));
            if a + c > 1 {
                return zero_vector(field, 4);
            }
            let sign = if b * c == 1 { -field.one() } else { field.one() };
            scaled(&sign, &basis_vector(field, 4, 2 * (a + c) + (b + d) % 2))
        });
        let names = ["1", "g", "x", "xg"].iter().map(|s| s.to_string()).collect();
        let alg = Algebra::new(mult, basis_vector(field, 4, 0), names).expect("shapes agree");
        let t = |pairs: &[(usize, usize)]| {
            let mut v = zero_vector(field, 16);
            for &(j, k) in pairs {
                v[j * 4 + k] = field.one();
            }
            v
        };
        let comult = vec![t(&[(0, 0)]), t(&[(1, 1)]), t(&[(2, 0), (1, 2)]), t(&[(3, 1), (0, 3)])];
        let counit = vec![field.one(), field.one(), field.zero(), field.zero()];
        let antipode = Matrix::from_columns(
            field,
            4,
            &[basis_vector(field, 4, 0), basis_vector(field, 4, 1), basis_vector(field, 4, 3), scaled(&-field.one(), &basis_vector(field, 4, 2))],
        );
        HopfAlgebra { alg, comult, counit, antipode }
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn names(&self) -> &[String] {
        self.alg.names()
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<HopfAlgebra> {
        self.alg = self.alg.with_names(names)?;
        Ok(self)
    }

    pub fn comult(&self) -> &[Vector] {
        &self.comult
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn unit(&self) -> &Vector {
        self.alg.unit()
    }

    pub fn basis(&self, i: usize) -> Vector {
        self.alg.basis(i)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.alg.mul(x, y)
    }

    /// `Δ(v)` as a flat vector in `H ⊗ H`.
    pub fn delta(&self, v: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = zero_vector(self.field(), n * n);
        for (i, c) in v.iter().enumerate() {
            add_scaled(&mut out, c, &self.comult[i]);
        }
        out
    }

    pub fn eps(&self, v: &[Scalar]) -> Scalar {
        dot(&self.counit, v)
    }

    pub fn s(&self, v: &[Scalar]) -> Vector {
        self.antipode.apply(v)
    }

    /// Nonzero terms `(j, k, c)` of `Δ(e_i) = Σ c e_j ⊗ e_k`.
    pub fn delta_terms(&self, i: usize) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        let n = self.dim();
        self.comult[i].iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(jk, c)| (jk / n, jk % n, c))
    }

    /// Same structure constants, ignoring basis names.
    pub fn same_structure(&self, other: &HopfAlgebra) -> bool {
        self.alg.mult() == other.alg.mult()
            && self.alg.unit() == other.alg.unit()
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim();
        self.comult.iter().all(|c| (0..n).all(|j| (0..n).all(|k| c[j * n + k] == c[k * n + j])))
    }

    /// Checks every Hopf axiom on basis elements.
    pub fn verify(&self) -> Report {
        let n = self.dim();
        let f = self.field();
        let mut r = Report::new();
        r.absorb("", self.alg.verify());

        let coassoc = first_failure(singles(n), |i| {
            let mut left = zero_vector(f, n * n * n);
            let mut right = zero_vector(f, n * n * n);
            for (j, k, c) in self.delta_terms(i[0]) {
                for (p, q, d) in self.delta_terms(j) {
                    left[(p * n + q) * n + k] += &(c * d);
                }
                for (p, q, d) in self.delta_terms(k) {
                    right[j * n * n + p * n + q] += &(c * d);
                }
            }
            (left != right).then(|| diff_detail(&left, &right))
        });
        r.record("coassociativity (Δ⊗I)Δ = (I⊗Δ)Δ", "hopf.coassoc", coassoc);

        let counit = first_failure(singles(n), |i| {
            let mut left = zero_vector(f, n);
            let mut right = zero_vector(f, n);
            for (j, k, c) in self.delta_terms(i[0]) {
                left[k] += &(c * &self.counit[j]);
                right[j] += &(c * &self.counit[k]);
            }
            let e = self.basis(i[0]);
            (left != e || right != e).then(|| format!("(ε⊗I)Δ = {}, (I⊗ε)Δ = {}", fmt_vector(&left), fmt_vector(&right)))
        });
        r.record("counit (ε⊗I)Δ = I = (I⊗ε)Δ", "hopf.counit", counit);

        let delta_unit = self.delta(self.unit());
        let one_one = tensor_vec(self.unit(), self.unit());
        let delta_mult = if delta_unit != one_one {
            Some(crate::report::Witness::new(&[], format!("Δ(1) = {}", fmt_vector(&delta_unit))))
        } else {
            first_failure(pairs(n, n), |ij| {
                let lhs = self.delta(&self.mul(&self.basis(ij[0]), &self.basis(ij[1])));
                let rhs = tensor_mul(&self.alg, &self.alg, &self.comult[ij[0]], &self.comult[ij[1]]);
                (lhs != rhs).then(|| diff_detail(&lhs, &rhs))
            })
        };
        r.record("Δ is an algebra map", "hopf.bialgebra", delta_mult);

        let eps_mult = if !self.eps(self.unit()).is_one() {
            Some(crate::report::Witness::new(&[], format!("ε(1) = {}", self.eps(self.unit()))))
        } else {
            first_failure(pairs(n, n), |ij| {
                let lhs = self.eps(&self.mul(&self.basis(ij[0]), &self.basis(ij[1])));
                let rhs = &self.counit[ij[0]] * &self.counit[ij[1]];
                (lhs != rhs).then(|| format!("ε(e_i e_j) = {lhs}, ε(e_i)ε(e_j) = {rhs}"))
            })
        };
        r.record("ε is an algebra map", "hopf.bialgebra", eps_mult);

        let antipode = first_failure(singles(n), |i| {
            let mut left = zero_vector(f, n);
            let mut right = zero_vector(f, n);
            for (j, k, c) in self.delta_terms(i[0]) {
                add_scaled(&mut left, c, &self.mul(&self.antipode.column(j), &self.basis(k)));
                add_scaled(&mut right, c, &self.mul(&self.basis(j), &self.antipode.column(k)));
            }
            let target = scaled(&self.counit[i[0]], self.unit());
            (left != target || right != target).then(|| {
                format!("Σ S(h₁)h₂ = {}, Σ h₁S(h₂) = {}, ε(h)1 = {}", fmt_vector(&left), fmt_vector(&right), fmt_vector(&target))
            })
        });
        r.record("antipode Σ S(h₁)h₂ = ε(h)1 = Σ h₁S(h₂)", "hopf.antipode", antipode);
        r
    }

    /// The dual Hopf algebra in the coordinate dual basis.
    pub fn dual(&self) -> HopfAlgebra {
        let n = self.dim();
        let f = self.field();
        let mult = Tensor3::from_fn(f, n, n, n, |i, j| (0..n).map(|k| self.comult[k][i * n + j].clone()).collect());
        let comult = (0..n).map(|k| (0..n * n).map(|ij| self.alg.mult().get(ij / n, ij % n)[k].clone()).collect()).collect();
        let names = self.names().iter().map(|s| format!("{s}*")).collect();
        let alg = Algebra::new(mult, self.counit.clone(), names).expect("shapes agree");
        HopfAlgebra { alg, comult, counit: self.unit().clone(), antipode: self.antipode.transpose() }
    }

    /// Re-expresses the structure in the basis given by the columns of `change`.
    pub fn change_basis(&self, change: &Matrix, names: Vec<String>) -> Result<HopfAlgebra> {
        let n = self.dim();
        let inv = change.inverse().ok_or_else(|| Error::Dimension("change of basis is singular".into()))?;
        let alg = self.alg.change_basis(change, names)?;
        let comult = (0..n)
            .map(|i| {
                let d = self.delta(&change.column(i));
                let mut out = zero_vector(self.field(), n * n);
                for (jk, c) in d.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (a, b) = (inv.column(jk / n), inv.column(jk % n));
                    add_scaled(&mut out, c, &tensor_vec(&a, &b));
                }
                out
            })
            .collect();
        let counit = (0..n).map(|i| self.eps(&change.column(i))).collect();
        let antipode = inv.mul(&self.antipode).mul(change);
        HopfAlgebra::new(alg, comult, counit, antipode)
    }

    pub fn antipode_inverse(&self) -> Result<Matrix> {
        self.antipode.inverse().ok_or(Error::SingularAntipode)
    }

    /// Integral spaces, a normalized left integral and the modular function.
    pub fn integrals(&self) -> Result<IntegralData> {
        let n = self.dim();
        let f = self.field();
        let id = Matrix::identity(f, n);
        let shifted = |m: Matrix, i: usize| {
            let mut e = id.clone();
            for d in 0..n {
                e.set(d, d, self.counit[i].clone());
            }
            m.sub(&e)
        };
        let left_blocks: Vec<Matrix> = (0..n).map(|i| shifted(self.alg.left_mul(&self.basis(i)), i)).collect();
        let right_blocks: Vec<Matrix> = (0..n).map(|i| shifted(self.alg.right_mul(&self.basis(i)), i)).collect();
        let left = kernel(&Matrix::vstack(f, n, &left_blocks)?);
        let right = kernel(&Matrix::vstack(f, n, &right_blocks)?);
        if left.dim() != 1 {
            return Err(Error::IntegralDimension(left.dim()));
        }
        let t = normalize(&left.basis_vector(0));
        let pivot = t.iter().position(|c| !c.is_zero()).expect("integral is nonzero");
        let mut alpha = Vec::with_capacity(n);
        for i in 0..n {
            let th = self.mul(&t, &self.basis(i));
            let a = th[pivot].checked_div(&t[pivot])?;
            if th != scaled(&a, &t) {
                return Err(Error::Invariant(format!("t·e_{i} is not a multiple of t")));
            }
            alpha.push(a);
        }
        let semisimple = !self.eps(&t).is_zero();
        let unimodular = left == right;
        Ok(IntegralData { left_integrals: left, right_integrals: right, t, alpha, semisimple, unimodular })
    }

    /// `S(t) = Σ α(t₂) t₁`.
    pub fn radford_check(&self, data: &IntegralData) -> bool {
        let n = self.dim();
        let d = self.delta(&data.t);
        let mut rhs = zero_vector(self.field(), n);
        for (jk, c) in d.iter().enumerate() {
            if !c.is_zero() {
                rhs[jk / n] += &(c * &data.alpha[jk % n]);
            }
        }
        self.s(&data.t) == rhs
    }

    /// Convolution algebra `Hom(H, A)`. The map sending `e_i` to the `a`-th
    /// basis element of `A` and every other `e_j` to 0 sits at index
    /// `i · dim A + a`.
    pub fn convolution_algebra(&self, a: &Algebra) -> Algebra {
        let (nh, na) = (self.dim(), a.dim());
        let n = nh * na;
        let f = self.field();
        let mult = Tensor3::from_fn(f, n, n, n, |x, y| {
            let (i, p) = (x / na, x % na);
            let (j, q) = (y / na, y % na);
            let prod = a.mult().get(p, q);
            let mut out = zero_vector(f, n);
            for m in 0..nh {
                let c = &self.comult[m][i * nh + j];
                if !c.is_zero() {
                    add_scaled(&mut out[m * na..(m + 1) * na], c, prod);
                }
            }
            out
        });
        let unit = tensor_vec(&self.counit, a.unit());
        let names = (0..n).map(|x| format!("[{}↦{}]", self.names()[x / na], a.names()[x % na])).collect();
        Algebra::new(mult, unit, names).expect("shapes agree")
    }
}

pub fn verify_hopf(h: &HopfAlgebra) -> Report {
    h.verify()
}

pub fn dual_hopf(h: &HopfAlgebra) -> HopfAlgebra {
    h.dual()
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len(), "dot: length mismatch");
    let field = a.first().map(Scalar::field).unwrap_or(Field::Rational);
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

/// Scales a nonzero vector to a deterministic representative: over `Q`
/// integer entries with gcd 1 and positive first nonzero entry, over `GF(p)`
/// first nonzero entry 1.
pub fn normalize(v: &[Scalar]) -> Vector {
    let lead = v.iter().find(|c| !c.is_zero()).expect("nonzero vector");
    match lead.field() {
        Field::Prime(_) => scaled(&lead.inv().expect("nonzero"), v),
        Field::Rational => {
            let rats: Vec<&BigRational> = v.iter().map(|c| c.as_rational().expect("rational")).collect();
            let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
            let ints: Vec<BigInt> = rats.iter().map(|r| (*r * BigRational::from_integer(lcm.clone())).to_integer()).collect();
            let mut g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if ints.iter().find(|x| !x.is_zero()).expect("nonzero").is_negative() {
                g = -g;
            }
            ints.into_iter().map(|x| Scalar::Rat(BigRational::new(x, g.clone()))).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn q() -> Field {
        Field::Rational
    }

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| q().int(x)).collect()
    }

    fn kc(n: usize) -> HopfAlgebra {
        HopfAlgebra::group_algebra(q(), &Group::cyclic(n).unwrap())
    }

    #[test]
    fn catalog_hopf_algebras_verify() {
        assert!(kc(2).verify().all_passed());
        assert!(kc(6).verify().all_passed());
        assert!(HopfAlgebra::sweedler(q()).verify().all_passed());
        assert!(HopfAlgebra::dual_group_algebra(q(), &Group::cyclic(4).unwrap()).verify().all_passed());
        assert!(HopfAlgebra::sweedler(q()).dual().verify().all_passed());
        assert!(HopfAlgebra::sweedler(Field::prime(7).unwrap()).verify().all_passed());
    }

    #[test]
    fn broken_antipode_detected_at_g() {
        let h = kc(2);
        let mut s = h.antipode().clone();
        s.set(0, 1, q().one());
        s.set(1, 1, q().zero());
        let bad = HopfAlgebra::new(h.algebra().clone(), h.comult().to_vec(), h.counit().clone(), s).unwrap();
        let r = bad.verify();
        let c = r.find("antipode Σ S(h₁)h₂ = ε(h)1 = Σ h₁S(h₂)").unwrap();
        assert_eq!(c.status, Status::Fail);
        assert_eq!(c.witness.as_ref().unwrap().indices, vec![1]);
    }

    #[test]
    fn dual_of_kc2_is_pointwise() {
        let d = HopfAlgebra::dual_group_algebra(q(), &Group::cyclic(2).unwrap());
        assert_eq!(d.mul(&d.basis(0), &d.basis(0)), d.basis(0));
        assert_eq!(d.mul(&d.basis(0), &d.basis(1)), v(&[0, 0]));
        assert_eq!(d.unit(), &v(&[1, 1]));
    }

    #[test]
    fn biduality() {
        let h = kc(4);
        assert!(h.dual().dual().same_structure(&h));
        let s = HopfAlgebra::sweedler(q());
        assert!(s.dual().dual().same_structure(&s));
    }

    #[test]
    fn integrals_kc2() {
        let i = kc(2).integrals().unwrap();
        assert_eq!(i.t, v(&[1, 1]));
        assert!(i.semisimple && i.unimodular);
        assert_eq!(i.alpha, v(&[1, 1]));
        assert!(!kc(2).integrals().unwrap().left_integrals.is_full());
    }

    #[test]
    fn integrals_kc2_in_char_2_not_semisimple() {
        let h = HopfAlgebra::group_algebra(Field::prime(2).unwrap(), &Group::cyclic(2).unwrap());
        assert!(!h.integrals().unwrap().semisimple);
    }

    #[test]
    fn integrals_dual_kc4() {
        let h = HopfAlgebra::dual_group_algebra(q(), &Group::cyclic(4).unwrap());
        let i = h.integrals().unwrap();
        assert_eq!(i.t, v(&[1, 0, 0, 0]));
        assert_eq!(h.eps(&i.t), q().one());
        assert!(i.semisimple && i.unimodular);
    }

    #[test]
    fn integrals_sweedler() {
        let h = HopfAlgebra::sweedler(q());
        let i = h.integrals().unwrap();
        // x + gx = x - xg
        assert_eq!(i.t, v(&[0, 0, 1, -1]));
        assert!(h.eps(&i.t).is_zero());
        assert!(!i.semisimple && !i.unimodular);
        assert_eq!(i.alpha, v(&[1, -1, 0, 0]));
        assert_eq!(h.mul(&h.basis(1), &i.t), i.t);
        assert_eq!(h.mul(&h.basis(2), &i.t), v(&[0, 0, 0, 0]));
    }

    #[test]
    fn radford_identity() {
        for h in [kc(2), HopfAlgebra::dual_group_algebra(q(), &Group::cyclic(4).unwrap()), HopfAlgebra::sweedler(q())] {
            let i = h.integrals().unwrap();
            assert!(h.radford_check(&i));
        }
    }

    #[test]
    fn antipode_inverse_sweedler_is_conjugated_antipode() {
        let h = HopfAlgebra::sweedler(q());
        let inv = h.antipode_inverse().unwrap();
        assert_eq!(inv.mul(h.antipode()), Matrix::identity(q(), 4));
        let g = h.basis(1);
        for i in 0..4 {
            let conj = h.mul(&h.mul(&g, &h.basis(i)), &g);
            assert_eq!(inv.column(i), h.s(&conj));
        }
        assert_eq!(kc(3).antipode_inverse().unwrap(), *kc(3).antipode());
    }

    #[test]
    fn convolution_algebras() {
        let h = kc(2);
        let k = Algebra::ground(q());
        let c = h.convolution_algebra(&k);
        assert!(c.verify().all_passed());
        assert_eq!(c.mult(), h.dual().algebra().mult());
        let c2 = h.convolution_algebra(h.algebra());
        assert_eq!(c2.dim(), 4);
        assert!(c2.verify().all_passed());
        assert_eq!(c2.unit(), &v(&[1, 0, 1, 0]));
    }

    #[test]
    fn change_basis_round_trip() {
        let h = HopfAlgebra::sweedler(q());
        let p = Matrix::from_columns(q(), 4, &[v(&[1, 1, 0, 0]), v(&[1, -1, 0, 0]), v(&[0, 0, 1, 1]), v(&[0, 0, 1, -1])]);
        let h2 = h.change_basis(&p, (0..4).map(|i| format!("b{i}")).collect()).unwrap();
        assert!(h2.verify().all_passed());
        let back = h2.change_basis(&p.inverse().unwrap(), h.names().to_vec()).unwrap();
        assert!(back.same_structure(&h));
    }

    #[test]
    fn normalize_examples() {
        let f = q();
        let x = vec![f.ratio(-1, 2).unwrap(), f.ratio(1, 3).unwrap()];
        assert_eq!(normalize(&x), v(&[3, -2]));
    }
}
