//! The standard enveloping action inside `Hom(H, A)`.

use crate::algebra::{diff_detail, transport, unit_of, Algebra};
use crate::error::{Error, Result};
use crate::linalg::{add_scaled, fmt_vector, kernel, solve, zero_vector, Matrix, Subspace, Tensor3, Vector};
use crate::paction::PartialAction;
use crate::report::{first_failure, pairs, singles, triples, Report, Witness};
use crate::scalar::Scalar;

/// Elements of `Hom(H, A)` are vectors whose block `i` (of length `dim A`)
/// holds the value on `h_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Envelope {
    pub action: PartialAction,
    pub hom_space: Algebra,
    /// `φ(a)(h) = h · a`, a `dim H · dim A × dim A` matrix.
    pub phi: Matrix,
    pub b: Subspace,
    /// `(h ▷ f)(k) = f(kh)` on all of `Hom(H, A)`.
    pub hom_action: Tensor3,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvelopeInvariants {
    /// `B^H = {b : h ▷ b = ε(h) b}`, in `Hom(H, A)` coordinates.
    pub bh: Subspace,
    /// `φ⁻¹(φ(1_A) B^H)`, in `A` coordinates.
    pub ubh: Subspace,
    pub equals_ah: bool,
}

pub fn standard_envelope(p: &PartialAction) -> Result<Envelope> {
    let h = p.hopf();
    let a = p.algebra();
    let (nh, na) = (h.dim(), a.dim());
    let n = nh * na;
    let f = a.field();
    let hom_space = h.convolution_algebra(a);
    let phi_cols: Vec<Vector> = (0..na)
        .map(|x| {
            let mut v = zero_vector(f, n);
            for i in 0..nh {
                v[i * na..(i + 1) * na].clone_from_slice(&p.act_basis(i, &a.basis(x)));
            }
            v
        })
        .collect();
    let phi = Matrix::from_columns(f, n, &phi_cols);
    if phi.rank() != na {
        return Err(Error::Invariant("φ is not injective".into()));
    }
    let hom_action = Tensor3::from_fn(f, nh, n, n, |j, y| {
        // f = E_{m, c}: (h_j ▷ f)(e_i) = f(e_i h_j) = coefficient of e_m in e_i h_j, times a_c.
        let (m, c) = (y / na, y % na);
        let mut v = zero_vector(f, n);
        for i in 0..nh {
            v[i * na + c] = h.algebra().mult().get(i, j)[m].clone();
        }
        v
    });
    let env = Envelope { action: p.clone(), hom_space, phi, b: Subspace::zero(f, n), hom_action };
    let span = env.orbit_span();
    let b = env.hom_space.subalgebra_closure(&span.basis_vectors());
    Ok(Envelope { b, ..env })
}

impl Envelope {
    fn hdim(&self) -> usize {
        self.action.hdim()
    }

    pub fn hom_act(&self, j: usize, f: &[Scalar]) -> Vector {
        self.hom_action.apply(&self.action.hopf().basis(j), f)
    }

    /// `span{h ▷ φ(a)}`.
    pub fn orbit_span(&self) -> Subspace {
        let mut vecs = Vec::new();
        for j in 0..self.hdim() {
            for col in self.phi.columns() {
                vecs.push(self.hom_act(j, &col));
            }
        }
        Subspace::span(self.hom_space.field(), self.hom_space.dim(), &vecs)
    }

    pub fn phi_image(&self) -> Subspace {
        Subspace::span(self.hom_space.field(), self.hom_space.dim(), &self.phi.columns())
    }

    /// Structure constants of `B` in its echelon basis.
    pub fn b_structure(&self) -> Tensor3 {
        transport(self.hom_space.mult(), &self.b.basis_vectors()).expect("B is a subalgebra")
    }

    /// `B` as a unital algebra, when it has a unit.
    pub fn b_algebra(&self) -> Option<Algebra> {
        let mult = self.b_structure();
        let unit = unit_of(&mult)?;
        let names = (0..self.b.dim()).map(|i| format!("b{i}")).collect();
        Algebra::new(mult, unit, names).ok()
    }

    fn phi_inverse(&self, v: &[Scalar]) -> Option<Vector> {
        solve(&self.phi, v).ok()?.particular
    }

    /// Items (i)–(v) of the enveloping action definition.
    pub fn verify(&self) -> Report {
        let p = &self.action;
        let h = p.hopf();
        let a = p.algebra();
        let hom = &self.hom_space;
        let nh = self.hdim();
        let bb = self.b.basis_vectors();
        let nb = bb.len();
        let mut r = Report::new();

        let stable = first_failure(pairs(nh, nb), |jx| {
            let y = self.hom_act(jx[0], &bb[jx[1]]);
            (!self.b.contains(&y)).then(|| format!("h ▷ b = {} leaves B", fmt_vector(&y)))
        });
        r.record("(i) H ▷ B ⊆ B", "envelope.i", stable);
        let unital = first_failure(singles(nb), |x| {
            let y = self.hom_action.apply(h.unit(), &bb[x[0]]);
            (y != bb[x[0]]).then(|| diff_detail(&y, &bb[x[0]]))
        });
        r.record("(i) 1 ▷ b = b", "envelope.i", unital);
        let assoc = first_failure(triples(nh, nh, nb), |t| {
            let lhs = self.hom_act(t[0], &self.hom_act(t[1], &bb[t[2]]));
            let rhs = self.hom_action.apply(&h.mul(&h.basis(t[0]), &h.basis(t[1])), &bb[t[2]]);
            (lhs != rhs).then(|| diff_detail(&lhs, &rhs))
        });
        r.record("(i) h ▷ (g ▷ b) = hg ▷ b", "envelope.i", assoc);
        let mult = first_failure(triples(nh, nb, nb), |t| {
            let (x, y) = (&bb[t[1]], &bb[t[2]]);
            let lhs = self.hom_act(t[0], &hom.mul(x, y));
            let mut rhs = hom.zero();
            for (p1, q1, c) in h.delta_terms(t[0]) {
                add_scaled(&mut rhs, c, &hom.mul(&self.hom_act(p1, x), &self.hom_act(q1, y)));
            }
            (lhs != rhs).then(|| diff_detail(&lhs, &rhs))
        });
        r.record("(i) h ▷ (bc) = Σ (h₁ ▷ b)(h₂ ▷ c)", "envelope.i", mult);

        let na = a.dim();
        let mono = if self.phi.rank() != na {
            Some(Witness::new(&[], format!("rank φ = {} < dim A = {na}", self.phi.rank())))
        } else {
            first_failure(pairs(na, na), |xy| {
                let (x, y) = (a.basis(xy[0]), a.basis(xy[1]));
                let lhs = self.phi.apply(&a.mul(&x, &y));
                let rhs = hom.mul(&self.phi.apply(&x), &self.phi.apply(&y));
                (lhs != rhs).then(|| diff_detail(&lhs, &rhs))
            })
        };
        r.record("(ii) φ is an injective algebra map", "envelope.ii", mono);

        let image = self.phi_image();
        let ideal = first_failure(pairs(na, nb), |xy| {
            let prod = hom.mul(&self.phi.column(xy[0]), &bb[xy[1]]);
            (!image.contains(&prod)).then(|| format!("φ(a)·b = {} is not in φ(A)", fmt_vector(&prod)))
        });
        let inside = image.is_subspace_of(&self.b);
        r.record(
            "(iii) φ(A) ⊆ B is a right ideal",
            "envelope.iii",
            if inside { ideal } else { Some(Witness::new(&[], "φ(A) is not contained in B")) },
        );

        let one = self.phi.apply(a.unit());
        let equiv = first_failure(pairs(nh, na), |ix| {
            let x = a.basis(ix[1]);
            let lhs = self.phi.apply(&p.act_basis(ix[0], &x));
            let rhs = hom.mul(&one, &self.hom_act(ix[0], &self.phi.apply(&x)));
            (lhs != rhs).then(|| diff_detail(&lhs, &rhs))
        });
        r.record("(iv) φ(h·a) = φ(1_A)(h ▷ φ(a))", "envelope.iv", equiv);

        let span = self.orbit_span();
        r.expect("(v) B = H ▷ φ(A)", "envelope.v", span == self.b, || {
            Witness::new(&[], format!("dim span(H ▷ φ(A)) = {}, dim B = {}", span.dim(), self.b.dim()))
        });
        r
    }

    /// `B^H` and its image `φ⁻¹(φ(1_A) B^H)` in `A`.
    pub fn invariants(&self) -> Result<EnvelopeInvariants> {
        let p = &self.action;
        let h = p.hopf();
        let field = self.hom_space.field();
        let incl = self.b.inclusion();
        let n = self.hom_space.dim();
        let blocks: Vec<Matrix> = (0..self.hdim())
            .map(|j| {
                let cols: Vec<Vector> = incl
                    .columns()
                    .iter()
                    .map(|b| {
                        let mut y = self.hom_act(j, b);
                        add_scaled(&mut y, &-&h.counit()[j], b);
                        y
                    })
                    .collect();
                Matrix::from_columns(field, n, &cols)
            })
            .collect();
        let coords = kernel(&Matrix::vstack(field, self.b.dim(), &blocks)?);
        let bh = Subspace::span(field, n, &coords.basis_vectors().iter().map(|c| incl.apply(c)).collect::<Vec<_>>());
        let one = self.phi.apply(p.algebra().unit());
        let mut pulled = Vec::new();
        for b in bh.basis_vectors() {
            let prod = self.hom_space.mul(&one, &b);
            pulled.push(self.phi_inverse(&prod).ok_or_else(|| Error::Invariant("φ(1_A) B^H leaves φ(A)".into()))?);
        }
        let ubh = Subspace::span(field, p.adim(), &pulled);
        let ah = p.invariants();
        if !ubh.is_subspace_of(&ah) {
            return Err(Error::Invariant("1_A B^H is not contained in A^H".into()));
        }
        let equals_ah = ubh == ah;
        Ok(EnvelopeInvariants { bh, ubh, equals_ah })
    }
}

pub fn verify_envelope(e: &Envelope) -> Report {
    e.verify()
}

pub fn envelope_invariants(e: &Envelope) -> Result<EnvelopeInvariants> {
    e.invariants()
}
