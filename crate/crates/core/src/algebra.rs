//! Finite-dimensional unital associative algebras given by structure
//! constants.

use crate::error::{Error, Result};
use crate::linalg::{add_scaled, basis_vector, fmt_vector, is_zero, kernel, sub, zero_vector, Matrix, Subspace, Tensor3, Vector};
use crate::poly::{coprime_split, Poly};
use crate::report::{first_failure, singles, triples, Report, Witness};
use crate::scalar::{Field, Scalar};

/// Primitive idempotents beyond this count are not expanded into all subset sums.
const MAX_PRIMITIVE_IDEMPOTENTS: usize = 16;

/// `mult.get(i, j)` holds the coordinates of `e_i · e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    mult: Tensor3,
    unit: Vector,
    names: Vec<String>,
}

impl Algebra {
    pub fn new(mult: Tensor3, unit: Vector, names: Vec<String>) -> Result<Algebra> {
        let (r, c, o) = mult.shape();
        if r != c || c != o {
            return Err(Error::Dimension(format!("multiplication table has shape {r}×{c}→{o}")));
        }
        if unit.len() != r {
            return Err(Error::Dimension(format!("unit has {} coordinates, algebra has dimension {r}", unit.len())));
        }
        if names.len() != r {
            return Err(Error::Dimension(format!("{} basis names for dimension {r}", names.len())));
        }
        Ok(Algebra { field: mult.field(), mult, unit, names })
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: Field) -> Algebra {
        let mult = Tensor3::from_fn(field, 1, 1, 1, |_, _| vec![field.one()]);
        Algebra { field, mult, unit: vec![field.one()], names: vec!["1".into()] }
    }

    /// `k^n` with componentwise product.
    pub fn diagonal(field: Field, n: usize) -> Algebra {
        let mult = Tensor3::from_fn(field, n, n, n, |i, j| {
            if i == j {
                basis_vector(field, n, i)
            } else {
                zero_vector(field, n)
            }
        });
        let unit = vec![field.one(); n];
        Algebra { field, mult, unit, names: (0..n).map(|i| format!("d{i}")).collect() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    pub fn mult(&self) -> &Tensor3 {
        &self.mult
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Algebra> {
        if names.len() != self.dim() {
            return Err(Error::Dimension("wrong number of basis names".into()));
        }
        self.names = names;
        Ok(self)
    }

    pub fn basis(&self, i: usize) -> Vector {
        basis_vector(self.field, self.dim(), i)
    }

    pub fn zero(&self) -> Vector {
        zero_vector(self.field, self.dim())
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.mult.apply(x, y)
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_mul(&self, x: &[Scalar]) -> Matrix {
        self.mult.left_matrix(x)
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_mul(&self, x: &[Scalar]) -> Matrix {
        self.mult.right_matrix(x)
    }

    pub fn commutes(&self, x: &[Scalar], y: &[Scalar]) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.mult.get(i, j) == self.mult.get(j, i)))
    }

    /// Associativity and unit axioms on basis elements.
    pub fn verify(&self) -> Report {
        let mut r = Report::new();
        r.record("associativity (e_i e_j) e_k = e_i (e_j e_k)", "algebra.assoc", associativity_failure(&self.mult));
        let n = self.dim();
        let fail = first_failure(singles(n), |i| {
            let e = self.basis(i[0]);
            let (l, rr) = (self.mul(&self.unit, &e), self.mul(&e, &self.unit));
            (l != e || rr != e).then(|| format!("1·e = {}, e·1 = {}", fmt_vector(&l), fmt_vector(&rr)))
        });
        r.record("unit 1·e_i = e_i = e_i·1", "algebra.unit", fail);
        r
    }

    /// Smallest subspace containing `gens` and closed under multiplication.
    /// The unit is not added.
    pub fn subalgebra_closure(&self, gens: &[Vector]) -> Subspace {
        let mut span = Subspace::span(self.field, self.dim(), gens);
        loop {
            let basis = span.basis_vectors();
            let mut vecs = basis.clone();
            for x in &basis {
                for y in &basis {
                    vecs.push(self.mul(x, y));
                }
            }
            let next = Subspace::span(self.field, self.dim(), &vecs);
            if next.dim() == span.dim() {
                return span;
            }
            span = next;
        }
    }

    /// Transports the structure to a subalgebra with its own unit, using the
    /// canonical echelon basis of `sub`.
    pub fn restrict_structure(&self, sub: &Subspace, unit: &[Scalar]) -> Result<Algebra> {
        let basis = sub.basis_vectors();
        let names = (0..basis.len()).map(|i| format!("u{i}")).collect();
        self.restrict_to_basis(&basis, unit, names)
    }

    /// Transports the structure to the subalgebra spanned by `basis`, which
    /// must be linearly independent, closed under multiplication, and have
    /// `unit` as a two-sided unit.
    pub fn restrict_to_basis(&self, basis: &[Vector], unit: &[Scalar], names: Vec<String>) -> Result<Algebra> {
        let mult = transport(&self.mult, basis)?;
        let sub = Subspace::span(self.field, self.dim(), basis);
        let unit_coords = coordinates_in_basis(&sub, basis, unit)
            .ok_or_else(|| Error::NotUnit("unit candidate does not lie in the subspace".into()))?;
        for (i, b) in basis.iter().enumerate() {
            if &self.mul(unit, b) != b || &self.mul(b, unit) != b {
                return Err(Error::NotUnit(format!("unit candidate fails on basis vector {i}")));
            }
        }
        Algebra::new(mult, unit_coords, names)
    }

    /// Re-expresses the algebra in a new basis given by the columns of `change`.
    pub fn change_basis(&self, change: &Matrix, names: Vec<String>) -> Result<Algebra> {
        if change.inverse().is_none() {
            return Err(Error::Dimension("change of basis is singular".into()));
        }
        self.restrict_to_basis(&change.columns(), &self.unit, names)
    }

    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let blocks: Vec<Matrix> = (0..n).map(|i| self.right_mul(&self.basis(i)).sub(&self.left_mul(&self.basis(i)))).collect();
        kernel(&Matrix::vstack(self.field, n, &blocks).expect("square blocks"))
    }

    pub fn is_idempotent(&self, v: &[Scalar]) -> bool {
        self.mul(v, v) == v
    }

    pub fn is_central(&self, v: &[Scalar]) -> bool {
        (0..self.dim()).all(|i| self.commutes(v, &self.basis(i)))
    }

    /// Exact and total test whether `v` is a central idempotent.
    pub fn is_central_idempotent(&self, v: &[Scalar]) -> bool {
        v.len() == self.dim() && self.is_idempotent(v) && self.is_central(v)
    }

    /// Central idempotents found inside the center. Includes `0` and `1`.
    pub fn central_idempotents(&self) -> Vec<Vector> {
        self.idempotents_in(&self.center()).expect("the center is a commutative subalgebra")
    }

    /// Idempotents lying in a commutative subalgebra `sub`.
    ///
    /// Orthogonal idempotents are refined by splitting minimal polynomials of
    /// elements into coprime factors over the ground field, and all subset
    /// sums of the resulting primitive ones are returned. The search is
    /// complete whenever every relevant minimal polynomial splits into
    /// coprime parts through its roots in the field (e.g. group algebras of
    /// abelian groups over `Q`); otherwise it may miss some.
    pub fn idempotents_in(&self, sub: &Subspace) -> Result<Vec<Vector>> {
        let prims = self.primitive_idempotents_in(sub)?;
        let mut out = Vec::with_capacity(1 << prims.len());
        for mask in 0u32..(1 << prims.len()) {
            let mut v = self.zero();
            for (k, p) in prims.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    add_scaled(&mut v, &self.field.one(), p);
                }
            }
            if sub.contains(&v) {
                out.push(v);
            }
        }
        Ok(out)
    }

    /// Pairwise orthogonal idempotents summing to `1` that the refinement in
    /// [`Algebra::idempotents_in`] cannot split further.
    pub fn primitive_central_idempotents(&self) -> Vec<Vector> {
        self.primitive_idempotents_in(&self.center()).expect("the center is a commutative subalgebra")
    }

    fn primitive_idempotents_in(&self, sub: &Subspace) -> Result<Vec<Vector>> {
        let basis = sub.basis_vectors();
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                if !sub.contains(&self.mul(x, y)) {
                    return Err(Error::NotClosed(i, j));
                }
                if !self.commutes(x, y) {
                    return Err(Error::Precondition("subalgebra is not commutative".into()));
                }
            }
        }
        let with_unit = sub.sum(&Subspace::span(self.field, self.dim(), [&self.unit]));
        let gens = with_unit.basis_vectors();
        let mut prims = vec![self.unit.clone()];
        loop {
            let mut changed = false;
            for x in &gens {
                let mut next = Vec::with_capacity(prims.len());
                for e in &prims {
                    let parts = self.split_idempotent(e, x);
                    changed |= parts.len() > 1;
                    next.extend(parts);
                }
                prims = next;
            }
            if !changed || prims.len() > MAX_PRIMITIVE_IDEMPOTENTS {
                break;
            }
        }
        prims.truncate(MAX_PRIMITIVE_IDEMPOTENTS);
        Ok(prims)
    }

    /// Splits idempotent `e` using the minimal polynomial of `e x` in `eAe`.
    fn split_idempotent(&self, e: &Vector, x: &Vector) -> Vec<Vector> {
        let y = self.mul(e, x);
        let m = self.minimal_polynomial(&y, e);
        let parts = coprime_split(&m);
        if parts.len() < 2 {
            return vec![e.clone()];
        }
        parts
            .iter()
            .map(|f| {
                let (cofactor, _) = m.div_rem(f);
                let (_, s, _) = cofactor.ext_gcd(f);
                let (_, idem) = s.mul(&cofactor).div_rem(&m);
                self.eval_poly(&idem, &y, e)
            })
            .filter(|v| !is_zero(v))
            .collect()
    }

    /// Minimal polynomial of `y` in the algebra with unit `e`.
    fn minimal_polynomial(&self, y: &Vector, e: &Vector) -> Poly {
        let mut powers = vec![e.clone()];
        loop {
            let next = self.mul(powers.last().unwrap(), y);
            let m = Matrix::from_columns(self.field, self.dim(), &powers);
            let sol = crate::linalg::solve(&m, &next).expect("shapes agree");
            if let Some(c) = sol.particular {
                let mut coeffs: Vec<Scalar> = c.iter().map(|x| -x).collect();
                coeffs.push(self.field.one());
                return Poly::new(self.field, coeffs);
            }
            powers.push(next);
        }
    }

    fn eval_poly(&self, p: &Poly, y: &Vector, e: &Vector) -> Vector {
        let mut acc = self.zero();
        for c in p.coeffs().iter().rev() {
            acc = self.mul(&acc, y);
            add_scaled(&mut acc, c, e);
        }
        acc
    }
}

pub fn verify_algebra(alg: &Algebra) -> Report {
    alg.verify()
}

/// First basis triple violating associativity of a bilinear product.
pub fn associativity_failure(mult: &Tensor3) -> Option<Witness> {
    let (n, _, _) = mult.shape();
    let field = mult.field();
    // Products of pairs are reused across the triple loop.
    let pairs: Vec<Vector> = (0..n * n).map(|ij| mult.get(ij / n, ij % n).clone()).collect();
    first_failure(triples(n, n, n), |t| {
        let (i, j, k) = (t[0], t[1], t[2]);
        let ek = basis_vector(field, n, k);
        let ei = basis_vector(field, n, i);
        let left = mult.apply(&pairs[i * n + j], &ek);
        let right = mult.apply(&ei, &pairs[j * n + k]);
        (left != right).then(|| format!("(e_i e_j) e_k = {}, e_i (e_j e_k) = {}", fmt_vector(&left), fmt_vector(&right)))
    })
}

/// Structure constants of a bilinear product restricted to the span of
/// `basis`, expressed in that basis.
pub fn transport(mult: &Tensor3, basis: &[Vector]) -> Result<Tensor3> {
    let (n, _, _) = mult.shape();
    let field = mult.field();
    let sub = Subspace::span(field, n, basis);
    if sub.dim() != basis.len() {
        return Err(Error::Dimension("basis vectors are linearly dependent".into()));
    }
    let d = basis.len();
    let mut t = Tensor3::zeros(field, d, d, d);
    for i in 0..d {
        for j in 0..d {
            let p = mult.apply(&basis[i], &basis[j]);
            let c = coordinates_in_basis(&sub, basis, &p).ok_or(Error::NotClosed(i, j))?;
            t.set(i, j, c);
        }
    }
    Ok(t)
}

/// A two-sided unit for the product `mult`, if one exists.
pub fn unit_of(mult: &Tensor3) -> Option<Vector> {
    let (n, _, _) = mult.shape();
    let field = mult.field();
    // Unknown u: rows for u·e_j = e_j and e_j·u = e_j.
    let mut rows = Vec::with_capacity(2 * n * n);
    let mut rhs = Vec::with_capacity(2 * n * n);
    for j in 0..n {
        for k in 0..n {
            rows.push((0..n).map(|i| mult.get(i, j)[k].clone()).collect::<Vector>());
            rhs.push(if j == k { field.one() } else { field.zero() });
            rows.push((0..n).map(|i| mult.get(j, i)[k].clone()).collect::<Vector>());
            rhs.push(if j == k { field.one() } else { field.zero() });
        }
    }
    let m = Matrix::from_rows(field, n, &rows);
    crate::linalg::solve(&m, &rhs).ok()?.particular
}

/// Coordinates of `v` with respect to an arbitrary basis of `sub`.
fn coordinates_in_basis(sub: &Subspace, basis: &[Vector], v: &[Scalar]) -> Option<Vector> {
    let echelon = sub.coordinates(v)?;
    if sub.basis_vectors().as_slice() == basis {
        return Some(echelon);
    }
    let cols: Vec<Vector> = basis.iter().map(|b| sub.coordinates(b).expect("basis lies in span")).collect();
    let change = Matrix::from_columns(sub.field(), basis.len(), &cols);
    Some(change.inverse()?.apply(&echelon))
}

/// Product in the tensor product algebra `A ⊗ B`, with `e_a ⊗ f_b` at index
/// `a · dim B + b`.
pub fn tensor_mul(a: &Algebra, b: &Algebra, x: &[Scalar], y: &[Scalar]) -> Vector {
    let (na, nb) = (a.dim(), b.dim());
    assert_eq!(x.len(), na * nb);
    assert_eq!(y.len(), na * nb);
    let field = a.field();
    let mut out = zero_vector(field, na * nb);
    for (p, xp) in x.iter().enumerate() {
        if xp.is_zero() {
            continue;
        }
        for (q, yq) in y.iter().enumerate() {
            if yq.is_zero() {
                continue;
            }
            let c = xp * yq;
            let left = a.mult.get(p / nb, q / nb);
            let right = b.mult.get(p % nb, q % nb);
            for (i, li) in left.iter().enumerate() {
                if li.is_zero() {
                    continue;
                }
                let cl = &c * li;
                add_scaled(&mut out[i * nb..(i + 1) * nb], &cl, right);
            }
        }
    }
    out
}

/// `x ⊗ y` as a flat vector.
pub fn tensor_vec(x: &[Scalar], y: &[Scalar]) -> Vector {
    x.iter().flat_map(|a| y.iter().map(move |b| a * b)).collect()
}

/// Difference of two vectors, formatted for witnesses.
pub fn diff_detail(lhs: &[Scalar], rhs: &[Scalar]) -> String {
    format!("lhs = {}, rhs = {}, lhs - rhs = {}", fmt_vector(lhs), fmt_vector(rhs), fmt_vector(&sub(lhs, rhs)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> Algebra {
        let q = Field::Rational;
        let mult = Tensor3::from_fn(q, n, n, n, |i, j| basis_vector(q, n, (i + j) % n));
        Algebra::new(mult, basis_vector(q, n, 0), (0..n).map(|i| format!("g{i}")).collect()).unwrap()
    }

    fn v(xs: &[(i64, i64)]) -> Vector {
        xs.iter().map(|&(a, b)| Field::Rational.ratio(a, b).unwrap()).collect()
    }

    #[test]
    fn ground_and_group_algebras_verify() {
        assert!(Algebra::ground(Field::Rational).verify().all_passed());
        assert!(cyclic(2).verify().all_passed());
    }

    #[test]
    fn broken_unit_detected() {
        let q = Field::Rational;
        let mult = Tensor3::from_fn(q, 1, 1, 1, |_, _| vec![q.int(2)]);
        let alg = Algebra::new(mult, vec![q.one()], vec!["1".into()]).unwrap();
        let r = alg.verify();
        assert_eq!(r.find("unit 1·e_i = e_i = e_i·1").unwrap().status, crate::report::Status::Fail);
    }

    #[test]
    fn closure_examples() {
        let k2 = cyclic(2);
        assert_eq!(k2.subalgebra_closure(&[k2.unit().clone()]).dim(), 1);
        assert_eq!(k2.subalgebra_closure(&[k2.basis(1)]).dim(), 2);
        // e_N kC4 with N = {1, g²}: spanned by e_N and e_N g.
        let k4 = cyclic(4);
        let en = v(&[(1, 2), (0, 1), (1, 2), (0, 1)]);
        let eng = v(&[(0, 1), (1, 2), (0, 1), (1, 2)]);
        let c = k4.subalgebra_closure(&[en.clone(), eng]);
        assert_eq!(c.dim(), 2);
        assert_eq!(k4.subalgebra_closure(&c.basis_vectors()), c);
        let a = k4.restrict_structure(&c, &en).unwrap();
        assert_eq!(a.dim(), 2);
        assert!(a.verify().all_passed());
    }

    #[test]
    fn restrict_rejects_non_unit() {
        let k4 = cyclic(4);
        let c = Subspace::span(Field::Rational, 4, [&v(&[(1, 1), (0, 1), (1, 1), (0, 1)]), &v(&[(0, 1), (1, 1), (0, 1), (1, 1)])]);
        assert!(matches!(k4.restrict_structure(&c, &k4.unit().clone()), Err(Error::NotUnit(_))));
    }

    #[test]
    fn restrict_to_idempotent_line() {
        let k2 = cyclic(2);
        let sub = Subspace::span(Field::Rational, 2, [&v(&[(1, 1), (1, 1)])]);
        let a = k2.restrict_structure(&sub, &v(&[(1, 2), (1, 2)])).unwrap();
        assert_eq!(a.dim(), 1);
        assert!(a.verify().all_passed());
        assert_eq!(a.unit(), &v(&[(1, 2)]));
    }

    #[test]
    fn idempotents_of_kc2() {
        // (λ + μg)² = λ + μg  ⇔  λ² + μ² = λ, 2λμ = μ: (0,0), (1,0), (½,±½).
        let mut found: Vec<String> = cyclic(2).central_idempotents().iter().map(|x| fmt_vector(x)).collect();
        found.sort();
        assert_eq!(found, vec!["[0, 0]", "[1, 0]", "[1/2, -1/2]", "[1/2, 1/2]"]);
    }

    #[test]
    fn idempotents_of_kc4_contain_en() {
        let k4 = cyclic(4);
        let found = k4.central_idempotents();
        assert_eq!(found.len(), 8);
        assert!(found.contains(&v(&[(1, 2), (0, 1), (1, 2), (0, 1)])));
        for u in &found {
            assert!(k4.is_central_idempotent(u));
        }
    }

    #[test]
    fn kc6_has_sixteen_rational_idempotents() {
        // Q C6 ≅ Q × Q × Q(ζ3) × Q(ζ6): four primitive idempotents.
        assert_eq!(cyclic(6).central_idempotents().len(), 16);
    }

    #[test]
    fn tensor_mul_matches_componentwise() {
        let k2 = cyclic(2);
        let g = k2.basis(1);
        let x = tensor_vec(&g, &g);
        assert_eq!(tensor_mul(&k2, &k2, &x, &x), tensor_vec(k2.unit(), k2.unit()));
    }
}
