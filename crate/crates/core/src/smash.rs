//! The partial smash product `A#H = (A ⊗ H)(1_A ⊗ 1_H)`.

use crate::algebra::{diff_detail, tensor_vec, transport, Algebra};
use crate::error::{Error, Result};
use crate::hopf::IntegralData;
use crate::linalg::{add_scaled, fmt_vector, is_zero, Matrix, Subspace, Tensor3, Vector};
use crate::paction::PartialAction;
use crate::report::{first_failure, pairs, Report, Witness};
use crate::scalar::Scalar;

/// Elements of `A ⊗ H` put `a_a ⊗ h_i` at index `a · dim H + i`. Elements
/// of the smash product are kept both in these ambient coordinates and in
/// coordinates of the echelon basis of the carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmashAlgebra {
    pub action: PartialAction,
    /// `(a ⊗ h)(b ⊗ k) = Σ a(h₁·b) ⊗ h₂k`. It has `1 ⊗ 1` as a left unit only.
    pub ambient: Tensor3,
    pub unit_elt: Vector,
    pub carrier: Subspace,
    pub smash: Algebra,
    /// `a ↦ a#1`, into carrier coordinates.
    pub embed_a: Matrix,
    /// `h ↦ 1#h`, into carrier coordinates.
    pub lift_h: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceIdempotent {
    /// `e = (1#t)(c#1)` in ambient coordinates.
    pub e: Vector,
    pub corner_dim: usize,
    pub checks: Report,
}

pub fn smash_product(p: &PartialAction) -> SmashAlgebra {
    let h = p.hopf();
    let a = p.algebra();
    let (na, nh) = (a.dim(), h.dim());
    let n = na * nh;
    let f = a.field();
    let shifted: Vec<Vec<Vector>> = (0..nh).map(|q| (0..nh).map(|k| h.mul(&h.basis(q), &h.basis(k))).collect()).collect();
    let ambient = Tensor3::from_fn(f, n, n, n, |x, y| {
        let (ax, i) = (x / nh, x % nh);
        let (by, k) = (y / nh, y % nh);
        let mut out = vec![f.zero(); n];
        for (pp, q, c) in h.delta_terms(i) {
            let left = a.mul(&a.basis(ax), &p.act_basis(pp, &a.basis(by)));
            if is_zero(&left) {
                continue;
            }
            add_scaled(&mut out, c, &tensor_vec(&left, &shifted[q][k]));
        }
        out
    });
    let unit_elt = tensor_vec(a.unit(), h.unit());
    // Images of basis vectors under right multiplication by 1⊗1.
    let images: Vec<Vector> = (0..n).map(|x| ambient.apply(&crate::linalg::basis_vector(f, n, x), &unit_elt)).collect();
    let carrier = Subspace::span(f, n, &images);
    let basis = carrier.basis_vectors();
    let mult = transport(&ambient, &basis).expect("the carrier is closed under multiplication");
    let unit = carrier.coordinates(&unit_elt).expect("1⊗1 lies in the carrier");
    let names = (0..basis.len()).map(|i| format!("s{i}")).collect();
    let smash = Algebra::new(mult, unit, names).expect("shapes agree");
    let mut s = SmashAlgebra {
        action: p.clone(),
        ambient,
        unit_elt,
        carrier,
        smash,
        embed_a: Matrix::zeros(f, 0, 0),
        lift_h: Matrix::zeros(f, 0, 0),
    };
    let d = s.carrier.dim();
    s.embed_a = Matrix::from_columns(f, d, &(0..na).map(|x| s.coords(&s.sym(&a.basis(x), h.unit()))).collect::<Vec<_>>());
    s.lift_h = Matrix::from_columns(f, d, &(0..nh).map(|i| s.coords(&s.sym(a.unit(), &h.basis(i)))).collect::<Vec<_>>());
    s
}

impl SmashAlgebra {
    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    fn na(&self) -> usize {
        self.action.adim()
    }

    fn nh(&self) -> usize {
        self.action.hdim()
    }

    /// Product in ambient coordinates.
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.ambient.apply(x, y)
    }

    /// `a#h = (a ⊗ h)(1 ⊗ 1)` in ambient coordinates.
    pub fn sym(&self, a: &[Scalar], h: &[Scalar]) -> Vector {
        self.mul(&tensor_vec(a, h), &self.unit_elt)
    }

    pub fn sym_basis(&self, a: usize, i: usize) -> Vector {
        self.sym(&self.action.algebra().basis(a), &self.action.hopf().basis(i))
    }

    /// Carrier coordinates of an element of the carrier.
    pub fn coords(&self, x: &[Scalar]) -> Vector {
        self.carrier.coordinates(x).expect("element lies in the carrier")
    }

    pub fn element(&self, coords: &[Scalar]) -> Vector {
        self.carrier.element(coords)
    }

    /// `a#1` in ambient coordinates.
    pub fn a1(&self, a: &[Scalar]) -> Vector {
        self.sym(a, self.action.hopf().unit())
    }

    /// `1#h` in ambient coordinates.
    pub fn one_h(&self, h: &[Scalar]) -> Vector {
        self.sym(self.action.algebra().unit(), h)
    }

    pub fn verify(&self) -> Report {
        let p = &self.action;
        let a = p.algebra();
        let h = p.hopf();
        let (na, nh) = (self.na(), self.nh());
        let mut r = Report::new();
        r.absorb("smash algebra", self.smash.verify());

        let law = first_failure(pairs(na * nh, na * nh), |xy| {
            let (x, y) = (xy[0], xy[1]);
            let lhs = self.mul(&self.sym_basis(x / nh, x % nh), &self.sym_basis(y / nh, y % nh));
            let mut sum = vec![a.field().zero(); na * nh];
            for (pp, q, c) in h.delta_terms(x % nh) {
                let left = a.mul(&a.basis(x / nh), &p.act_basis(pp, &a.basis(y / nh)));
                add_scaled(&mut sum, c, &tensor_vec(&left, &h.mul(&h.basis(q), &h.basis(y % nh))));
            }
            let rhs = self.mul(&sum, &self.unit_elt);
            (lhs != rhs).then(|| diff_detail(&lhs, &rhs))
        });
        r.record("(a#h)(b#k) = Σ a(h₁·b) # h₂k", "smash.product", law);

        let embed = if self.embed_a.rank() != na {
            Some(Witness::new(&[], format!("rank of a ↦ a#1 is {}", self.embed_a.rank())))
        } else {
            first_failure(pairs(na, na), |xy| {
                let (x, y) = (a.basis(xy[0]), a.basis(xy[1]));
                let lhs = self.a1(&a.mul(&x, &y));
                let rhs = self.mul(&self.a1(&x), &self.a1(&y));
                (lhs != rhs).then(|| diff_detail(&lhs, &rhs))
            })
        };
        r.record("a ↦ a#1 is an injective algebra map", "smash.embedding", embed);

        let s_cols: Vec<Vector> = (0..nh).map(|i| h.s(&h.basis(i))).collect();
        let internal = first_failure(pairs(nh, na), |ix| {
            let x = a.basis(ix[1]);
            let ax = self.a1(&x);
            let mut lhs = vec![a.field().zero(); na * nh];
            for (pp, q, c) in h.delta_terms(ix[0]) {
                let term = self.mul(&self.mul(&self.one_h(&h.basis(pp)), &ax), &self.one_h(&s_cols[q]));
                add_scaled(&mut lhs, c, &term);
            }
            let rhs = self.a1(&p.act_basis(ix[0], &x));
            (lhs != rhs).then(|| diff_detail(&lhs, &rhs))
        });
        r.record("Σ (1#h₁)(a#1)(1#S(h₂)) = (h·a)#1", "smash.internal", internal);

        if h.antipode_inverse().is_err() {
            r.skip("A#H = (1#H)(A#1)", "smash.factorization", "antipode is not invertible");
        } else {
            let mut prods = Vec::with_capacity(na * nh);
            for i in 0..nh {
                let hi = self.one_h(&h.basis(i));
                for x in 0..na {
                    prods.push(self.mul(&hi, &self.a1(&a.basis(x))));
                }
            }
            let span = Subspace::span(a.field(), na * nh, &prods);
            r.expect("A#H = (1#H)(A#1)", "smash.factorization", span == self.carrier, || {
                Witness::new(&[], format!("span has dim {}, carrier has dim {}", span.dim(), self.carrier.dim()))
            });
        }
        r
    }

    /// `e = (1#t)(c#1)` for `c` with `t · c = 1_A`, and the corner `e(A#H)e`.
    pub fn trace_idempotent(&self, integrals: &IntegralData, c: &[Scalar]) -> Result<TraceIdempotent> {
        let p = &self.action;
        let a = p.algebra();
        if &p.act(&integrals.t, c) != a.unit() {
            return Err(Error::Precondition(format!("tr(c) ≠ 1_A for c = {}", fmt_vector(c))));
        }
        let f = a.field();
        let n = self.na() * self.nh();
        let e = self.mul(&self.one_h(&integrals.t), &self.a1(c));
        let mut r = Report::new();
        let e2 = self.mul(&e, &e);
        r.expect("e² = e", "smash.idempotent", e2 == e && !is_zero(&e), || Witness::new(&[], diff_detail(&e2, &e)));

        let corner = Subspace::span(f, n, &self.carrier.basis_vectors().iter().map(|s| self.mul(&self.mul(&e, s), &e)).collect::<Vec<_>>());
        let inv = p.invariants().basis_vectors();
        let ae: Vec<Vector> = inv.iter().map(|b| self.mul(&self.a1(b), &e)).collect();
        let ah_e = Subspace::span(f, n, &ae);
        r.expect("e(A#H)e = (A^H#1)e", "smash.idempotent", corner == ah_e, || {
            Witness::new(&[], format!("dim e(A#H)e = {}, dim (A^H#1)e = {}", corner.dim(), ah_e.dim()))
        });
        r.expect("b ↦ (b#1)e is injective on A^H", "smash.idempotent", ah_e.dim() == inv.len(), || {
            Witness::new(&[], format!("image has dim {}, A^H has dim {}", ah_e.dim(), inv.len()))
        });
        let hom = first_failure(pairs(inv.len(), inv.len()), |ij| {
            let lhs = self.mul(&ae[ij[0]], &ae[ij[1]]);
            let rhs = self.mul(&self.a1(&a.mul(&inv[ij[0]], &inv[ij[1]])), &e);
            (lhs != rhs).then(|| diff_detail(&lhs, &rhs))
        });
        r.record("((a#1)e)((b#1)e) = (ab#1)e", "smash.idempotent", hom);
        Ok(TraceIdempotent { e, corner_dim: corner.dim(), checks: r })
    }
}

pub fn verify_smash(s: &SmashAlgebra) -> Report {
    s.verify()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;
    use crate::hopf::HopfAlgebra;
    use crate::paction::from_partial_group_action;
    use crate::scalar::Field;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn classical_smash_of_trivial_kc2() {
        let h = HopfAlgebra::group_algebra(q(), &Group::cyclic(2).unwrap());
        let p = PartialAction::trivial(h.clone(), h.algebra().clone());
        let s = smash_product(&p);
        assert_eq!(s.dim(), 4);
        assert!(s.carrier.is_full());
        assert!(s.verify().all_passed());
        // (a#h)(b#k) = ab#hk: basis index a·2 + h.
        for x in 0..4 {
            for y in 0..4 {
                let (a, hh, b, k) = (x / 2, x % 2, y / 2, y % 2);
                let expected = crate::linalg::basis_vector(q(), 4, ((a + b) % 2) * 2 + (hh + k) % 2);
                assert_eq!(s.mul(&s.sym_basis(a, hh), &s.sym_basis(b, k)), expected);
            }
        }
    }

    #[test]
    fn null_smash_is_k() {
        let k = Algebra::ground(q());
        let p = from_partial_group_action(&Group::cyclic(2).unwrap(), &k, &[vec![q().one()], vec![q().zero()]], &[Matrix::identity(q(), 1), Matrix::zeros(q(), 1, 1)])
            .unwrap();
        let s = smash_product(&p);
        assert_eq!(s.dim(), 1);
        assert!(s.verify().all_passed());
        let i = p.hopf().integrals().unwrap();
        let e = s.trace_idempotent(&i, &[q().one()]).unwrap();
        assert!(e.checks.all_passed());
        assert_eq!(e.corner_dim, 1);
    }

    #[test]
    fn trivial_k_over_kc2_idempotent() {
        let h = HopfAlgebra::group_algebra(q(), &Group::cyclic(2).unwrap());
        let p = PartialAction::trivial(h.clone(), Algebra::ground(q()));
        let s = smash_product(&p);
        let mut i = h.integrals().unwrap();
        i.t = crate::linalg::scaled(&q().ratio(1, 2).unwrap(), &i.t);
        let e = s.trace_idempotent(&i, &[q().one()]).unwrap();
        assert!(e.checks.all_passed());
        let half = q().ratio(1, 2).unwrap();
        assert_eq!(e.e, vec![half.clone(), half]);
        assert!(s.trace_idempotent(&h.integrals().unwrap(), &[q().one()]).is_err());
    }
}
