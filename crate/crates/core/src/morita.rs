//! The Morita context between `A^H` and `A#H`.

use crate::algebra::{diff_detail, tensor_vec, Algebra};
use crate::error::{Error, Result};
use crate::hopf::IntegralData;
use crate::linalg::{add_scaled, basis_vector, kernel, quotient, solve, zero_vector, Matrix, QuotientSpace, Subspace, Tensor3, Vector};
use crate::report::{first_failure, pairs, singles, triples, Report, Witness};
use crate::scalar::Scalar;
use crate::smash::SmashAlgebra;

/// Smash elements are in carrier coordinates throughout; `A ⊗ A` puts
/// `a_a ⊗ a_b` at index `a · dim A + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoritaContext {
    pub smash: SmashAlgebra,
    pub integrals: IntegralData,
    pub inv: Subspace,
    /// `lmod.get(s, b) = s ⊳ b`, with `(a#h) ⊳ b = a(h·b)`.
    pub lmod: Tensor3,
    /// `rmod.get(b, s) = b ⊲ s`, with `b ⊲ (a#h) = Σ α(h₂) S⁻¹(h₁)·(ba)`.
    pub rmod: Tensor3,
    pub tensor_ah: QuotientSpace,
    pub tensor_s: QuotientSpace,
    /// `[a, b] = (a#1)(1#t)(b#1)` on `A ⊗ A`, into the smash product.
    pub bracket: Matrix,
    /// `⟨a, b⟩ = t·(ab)` on `A ⊗ A`, into `A`.
    pub pairing: Matrix,
    /// Kernel of the symbol map is killed by both module structures.
    pub well_defined: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Strictness {
    pub bracket_surjective: bool,
    pub pairing_surjective: bool,
}

impl Strictness {
    pub fn strict(&self) -> bool {
        self.bracket_surjective && self.pairing_surjective
    }
}

/// The symbol map `a ⊗ h ↦ a#h` as a matrix into ambient coordinates, and a
/// right inverse on the carrier (columns are preimages of carrier basis vectors).
fn symbol_map(s: &SmashAlgebra) -> (Matrix, Matrix) {
    let p = &s.action;
    let (na, nh) = (p.adim(), p.hdim());
    let f = p.algebra().field();
    let n = na * nh;
    let sigma = Matrix::from_columns(f, n, &(0..n).map(|x| s.sym_basis(x / nh, x % nh)).collect::<Vec<_>>());
    let section = Matrix::from_columns(
        f,
        n,
        &s.carrier
            .basis_vectors()
            .iter()
            .map(|v| solve(&sigma, v).expect("shapes agree").particular.expect("carrier is the image of the symbol map"))
            .collect::<Vec<_>>(),
    );
    (sigma, section)
}

/// Left `A#H`-module structure on `A`, and whether it is well defined on
/// the carrier.
pub fn left_module(s: &SmashAlgebra) -> (Tensor3, bool) {
    let p = &s.action;
    let a = p.algebra();
    let (na, nh) = (p.adim(), p.hdim());
    let sym = |x: usize, b: &Vector| a.mul(&a.basis(x / nh), &p.act_basis(x % nh, b));
    descend(s, na, sym)
}

/// `x ↦ (b ↦ F(x, b))` from `A ⊗ H` pushed to the carrier.
fn descend<F: Fn(usize, &Vector) -> Vector>(s: &SmashAlgebra, na: usize, sym: F) -> (Tensor3, bool) {
    let a = s.action.algebra();
    let f = a.field();
    let (sigma, section) = symbol_map(s);
    let on = |x: &[Scalar], b: &Vector| {
        let mut out = zero_vector(f, na);
        for (k, c) in x.iter().enumerate() {
            if !c.is_zero() {
                add_scaled(&mut out, c, &sym(k, b));
            }
        }
        out
    };
    let ker = kernel(&sigma);
    let well_defined = ker.basis_vectors().iter().all(|k| (0..na).all(|b| crate::linalg::is_zero(&on(k, &a.basis(b)))));
    let d = s.dim();
    let t = Tensor3::from_fn(f, d, na, na, |j, b| on(&section.column(j), &a.basis(b)));
    (t, well_defined)
}

/// `A ⊗_{A^H} A` as the quotient of `A ⊗ A` by `ac ⊗ b - a ⊗ cb`.
pub fn balanced_tensor(a: &Algebra, inv: &Subspace) -> QuotientSpace {
    let f = a.field();
    let na = a.dim();
    let mut rel = Vec::new();
    for c in inv.basis_vectors() {
        for x in 0..na {
            for y in 0..na {
                let (ax, ay) = (a.basis(x), a.basis(y));
                let mut v = tensor_vec(&a.mul(&ax, &c), &ay);
                add_scaled(&mut v, &-f.one(), &tensor_vec(&ax, &a.mul(&c, &ay)));
                rel.push(v);
            }
        }
    }
    quotient(&Subspace::full(f, na * na), &Subspace::span(f, na * na, &rel)).expect("relations lie in A ⊗ A")
}

pub fn morita_context(s: &SmashAlgebra, integrals: &IntegralData) -> Result<MoritaContext> {
    let p = &s.action;
    let h = p.hopf();
    let a = p.algebra();
    let (_, profile) = p.verify();
    if !profile.symmetric || !profile.central_unit_orbit {
        return Err(Error::Precondition("the Morita context needs a symmetric action with central h·1".into()));
    }
    let s_inv = h.antipode_inverse()?;
    let (na, nh) = (p.adim(), p.hdim());
    let f = a.field();
    let d = s.dim();

    let (lmod, left_ok) = left_module(s);
    let s_inv_cols: Vec<Vector> = (0..nh).map(|i| s_inv.column(i)).collect();
    let right_sym = |x: usize, b: &Vector| {
        let ba = a.mul(b, &a.basis(x / nh));
        let mut out = zero_vector(f, na);
        for (pp, q, c) in h.delta_terms(x % nh) {
            let coeff = c * &integrals.alpha[q];
            if !coeff.is_zero() {
                add_scaled(&mut out, &coeff, &p.act(&s_inv_cols[pp], &ba));
            }
        }
        out
    };
    let (rmod_t, right_ok) = descend(s, na, right_sym);
    // Reorder to rmod.get(b, s).
    let rmod = Tensor3::from_fn(f, na, d, na, |b, j| rmod_t.get(j, b).clone());

    let inv = p.invariants();
    let nn = na * na;
    let full = Subspace::full(f, nn);
    let tensor_ah = balanced_tensor(a, &inv);
    let mut rel_s = Vec::new();
    for j in 0..d {
        for x in 0..na {
            for y in 0..na {
                let mut v = tensor_vec(rmod.get(x, j), &a.basis(y));
                add_scaled(&mut v, &-f.one(), &tensor_vec(&a.basis(x), lmod.get(j, y)));
                rel_s.push(v);
            }
        }
    }
    let tensor_s = quotient(&full, &Subspace::span(f, nn, &rel_s))?;

    let one_t = s.one_h(&integrals.t);
    let bracket_cols: Vec<Vector> = (0..nn)
        .map(|xy| {
            let v = s.mul(&s.mul(&s.a1(&a.basis(xy / na)), &one_t), &s.a1(&a.basis(xy % na)));
            s.coords(&v)
        })
        .collect();
    let bracket = Matrix::from_columns(f, d, &bracket_cols);
    let trace = p.matrix_of(&integrals.t);
    let pairing_cols: Vec<Vector> = (0..nn).map(|xy| trace.apply(a.mult().get(xy / na, xy % na))).collect();
    let pairing = Matrix::from_columns(f, na, &pairing_cols);
    Ok(MoritaContext {
        smash: s.clone(),
        integrals: integrals.clone(),
        inv,
        lmod,
        rmod,
        tensor_ah,
        tensor_s,
        bracket,
        pairing,
        well_defined: left_ok && right_ok,
    })
}

impl MoritaContext {
    fn na(&self) -> usize {
        self.smash.action.adim()
    }

    pub fn left(&self, s: &[Scalar], b: &[Scalar]) -> Vector {
        self.lmod.apply(s, b)
    }

    pub fn right(&self, b: &[Scalar], s: &[Scalar]) -> Vector {
        self.rmod.apply(b, s)
    }

    pub fn bracket_of(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.bracket.apply(&tensor_vec(a, b))
    }

    pub fn pairing_of(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.pairing.apply(&tensor_vec(a, b))
    }

    /// Bracket on `A ⊗_{A^H} A`, in quotient coordinates.
    pub fn bracket_on_quotient(&self) -> Matrix {
        self.bracket.mul(&self.tensor_ah.section)
    }

    /// Pairing on `A ⊗_{A#H} A`, in quotient coordinates.
    pub fn pairing_on_quotient(&self) -> Matrix {
        self.pairing.mul(&self.tensor_s.section)
    }

    pub fn verify(&self) -> Report {
        let alg = self.smash.action.algebra();
        let sm = &self.smash.smash;
        let n = self.na();
        let d = sm.dim();
        let inv = self.inv.basis_vectors();
        let ni = inv.len();
        let sb = |j: usize| sm.basis(j);
        let ab = |x: usize| alg.basis(x);
        let mut r = Report::new();

        r.expect("module structures are well defined on A#H", "morita.modules", self.well_defined, || {
            Witness::new(&[], "a symbol in the kernel of a ⊗ h ↦ a#h acts nontrivially")
        });
        let lassoc = first_failure(triples(d, d, n), |t| {
            let lhs = self.left(&sb(t[0]), &self.left(&sb(t[1]), &ab(t[2])));
            let rhs = self.left(&sm.mul(&sb(t[0]), &sb(t[1])), &ab(t[2]));
            (lhs != rhs).then(|| diff_detail(&lhs, &rhs))
        });
        r.record("s ⊳ (s′ ⊳ b) = (ss′) ⊳ b", "morita.modules", lassoc);
        let lunit = first_failure(singles(n), |x| {
            let y = self.left(sm.unit(), &ab(x[0]));
            (y != ab(x[0])).then(|| diff_detail(&y, &ab(x[0])))
        });
        r.record("1 ⊳ b = b", "morita.modules", lunit);
        let rassoc = first_failure(triples(n, d, d), |t| {
            let lhs = self.right(&self.right(&ab(t[0]), &sb(t[1])), &sb(t[2]));
            let rhs = self.right(&ab(t[0]), &sm.mul(&sb(t[1]), &sb(t[2])));
            (lhs != rhs).then(|| diff_detail(&lhs, &rhs))
        });
        r.record("(b ⊲ s) ⊲ s′ = b ⊲ (ss′)", "morita.modules", rassoc);
        let runit = first_failure(singles(n), |x| {
            let y = self.right(&ab(x[0]), sm.unit());
            (y != ab(x[0])).then(|| diff_detail(&y, &ab(x[0])))
        });
        r.record("b ⊲ 1 = b", "morita.modules", runit);
        let lbi = first_failure(triples(d, n, ni), |t| {
            let lhs = alg.mul(&self.left(&sb(t[0]), &ab(t[1])), &inv[t[2]]);
            let rhs = self.left(&sb(t[0]), &alg.mul(&ab(t[1]), &inv[t[2]]));
            (lhs != rhs).then(|| diff_detail(&lhs, &rhs))
        });
        r.record("(s ⊳ b)c = s ⊳ (bc) for c ∈ A^H", "morita.bimodules", lbi);
        let rbi = first_failure(triples(ni, n, d), |t| {
            let lhs = alg.mul(&inv[t[0]], &self.right(&ab(t[1]), &sb(t[2])));
            let rhs = self.right(&alg.mul(&inv[t[0]], &ab(t[1])), &sb(t[2]));
            (lhs != rhs).then(|| diff_detail(&lhs, &rhs))
        });
        r.record("c(b ⊲ s) = (cb) ⊲ s for c ∈ A^H", "morita.bimodules", rbi);

        let kills = |m: &Matrix, q: &QuotientSpace| q.sub.basis_vectors().iter().position(|v| !crate::linalg::is_zero(&m.apply(v)));
        r.record(
            "[ac, b] = [a, cb] for c ∈ A^H",
            "morita.balanced",
            kills(&self.bracket, &self.tensor_ah).map(|i| Witness::new(&[i], "relation vector not killed by the bracket")),
        );
        r.record(
            "⟨a ⊲ s, b⟩ = ⟨a, s ⊳ b⟩",
            "morita.balanced",
            kills(&self.pairing, &self.tensor_s).map(|i| Witness::new(&[i], "relation vector not killed by the pairing")),
        );
        r.record(
            "⟨ac, b⟩ = ⟨a, cb⟩ for c ∈ A^H",
            "morita.balanced",
            kills(&self.pairing, &self.tensor_ah).map(|i| Witness::new(&[i], "relation vector not killed by the pairing")),
        );
        let in_inv = first_failure(pairs(n, n), |xy| {
            let v = self.pairing_of(&ab(xy[0]), &ab(xy[1]));
            (!self.inv.contains(&v)).then(|| format!("⟨a, b⟩ = {} is not invariant", crate::linalg::fmt_vector(&v)))
        });
        r.record("⟨a, b⟩ ∈ A^H", "morita.pairing", in_inv);

        let bl = first_failure(triples(d, n, n), |t| {
            let lhs = self.bracket_of(&self.left(&sb(t[0]), &ab(t[1])), &ab(t[2]));
            let rhs = sm.mul(&sb(t[0]), &self.bracket_of(&ab(t[1]), &ab(t[2])));
            (lhs != rhs).then(|| diff_detail(&lhs, &rhs))
        });
        r.record("[s ⊳ a, b] = s[a, b]", "morita.bimodule-maps", bl);
        let br = first_failure(triples(n, n, d), |t| {
            let lhs = self.bracket_of(&ab(t[0]), &self.right(&ab(t[1]), &sb(t[2])));
            let rhs = sm.mul(&self.bracket_of(&ab(t[0]), &ab(t[1])), &sb(t[2]));
            (lhs != rhs).then(|| diff_detail(&lhs, &rhs))
        });
        r.record("[a, b ⊲ s] = [a, b]s", "morita.bimodule-maps", br);
        let pl = first_failure(triples(ni, n, n), |t| {
            let lhs = self.pairing_of(&alg.mul(&inv[t[0]], &ab(t[1])), &ab(t[2]));
            let rhs = alg.mul(&inv[t[0]], &self.pairing_of(&ab(t[1]), &ab(t[2])));
            (lhs != rhs).then(|| diff_detail(&lhs, &rhs))
        });
        r.record("⟨ca, b⟩ = c⟨a, b⟩ for c ∈ A^H", "morita.bimodule-maps", pl);
        let pr = first_failure(triples(n, n, ni), |t| {
            let lhs = self.pairing_of(&ab(t[0]), &alg.mul(&ab(t[1]), &inv[t[2]]));
            let rhs = alg.mul(&self.pairing_of(&ab(t[0]), &ab(t[1])), &inv[t[2]]);
            (lhs != rhs).then(|| diff_detail(&lhs, &rhs))
        });
        r.record("⟨a, bc⟩ = ⟨a, b⟩c for c ∈ A^H", "morita.bimodule-maps", pr);

        let m1 = first_failure(triples(n, n, n), |t| {
            let lhs = self.left(&self.bracket_of(&ab(t[0]), &ab(t[1])), &ab(t[2]));
            let rhs = alg.mul(&ab(t[0]), &self.pairing_of(&ab(t[1]), &ab(t[2])));
            (lhs != rhs).then(|| diff_detail(&lhs, &rhs))
        });
        r.record("[a, b] ⊳ c = a⟨b, c⟩", "morita.associativity", m1);
        let m2 = first_failure(triples(n, n, n), |t| {
            let lhs = self.right(&ab(t[0]), &self.bracket_of(&ab(t[1]), &ab(t[2])));
            let rhs = alg.mul(&self.pairing_of(&ab(t[0]), &ab(t[1])), &ab(t[2]));
            (lhs != rhs).then(|| diff_detail(&lhs, &rhs))
        });
        r.record("a ⊲ [b, c] = ⟨a, b⟩c", "morita.associativity", m2);
        r
    }

    pub fn strictness(&self) -> Strictness {
        let f = self.smash.action.algebra().field();
        let bracket_surjective = self.bracket.rank() == self.smash.dim();
        let img = Subspace::span(f, self.na(), &self.pairing.columns());
        Strictness { bracket_surjective, pairing_surjective: img == self.inv }
    }
}

pub fn verify_morita(m: &MoritaContext) -> Report {
    m.verify()
}

pub fn strictness(m: &MoritaContext) -> Strictness {
    m.strictness()
}

/// Compares `End(_{A#H} A)` with `A^H` acting by right multiplication.
pub fn end_module_check(s: &SmashAlgebra) -> Report {
    let p = &s.action;
    let a = p.algebra();
    let f = a.field();
    let n = a.dim();
    let d = s.dim();
    let (lmod, _) = left_module(s);
    let lmats: Vec<Matrix> = (0..d).map(|j| lmod.left_matrix(&basis_vector(f, d, j))).collect();
    // F is flattened row-major: entry (r, c) at r·n + c.
    let unflatten = |v: &[Scalar]| {
        let mut m = Matrix::zeros(f, n, n);
        for (k, x) in v.iter().enumerate() {
            m.set(k / n, k % n, x.clone());
        }
        m
    };
    let flatten = |m: &Matrix| (0..n * n).map(|k| m.get(k / n, k % n).clone()).collect::<Vector>();
    let blocks: Vec<Matrix> = lmats
        .iter()
        .map(|l| {
            let cols: Vec<Vector> = (0..n * n)
                .map(|k| {
                    let e = unflatten(&basis_vector(f, n * n, k));
                    flatten(&e.mul(l).sub(&l.mul(&e)))
                })
                .collect();
            Matrix::from_columns(f, n * n, &cols)
        })
        .collect();
    let end = kernel(&Matrix::vstack(f, n * n, &blocks).expect("square blocks"));
    let inv = p.invariants();
    let sigma: Vec<Vector> = inv.basis_vectors().iter().map(|b| flatten(&a.right_mul(b))).collect();
    let span = Subspace::span(f, n * n, &sigma);
    let mut r = Report::new();
    r.expect("dim End(_{A#H}A) = dim A^H", "end.dimension", end.dim() == inv.dim(), || {
        Witness::new(&[], format!("dim End = {}, dim A^H = {}", end.dim(), inv.dim()))
    });
    r.expect("σ(b): a ↦ ab is A#H-linear for b ∈ A^H", "end.sigma", span.is_subspace_of(&end), || {
        Witness::new(&[], "some right multiplication does not commute with ⊳")
    });
    r.expect("σ is injective on A^H", "end.sigma", span.dim() == inv.dim(), || Witness::new(&[], format!("rank {}", span.dim())));
    r.expect("σ(A^H) = End(_{A#H}A)", "end.sigma", span == end, || Witness::new(&[], "σ does not span the endomorphisms"));
    let ib = inv.basis_vectors();
    let rev = first_failure(pairs(ib.len(), ib.len()), |ij| {
        let lhs = a.right_mul(&a.mul(&ib[ij[0]], &ib[ij[1]]));
        let rhs = a.right_mul(&ib[ij[1]]).mul(&a.right_mul(&ib[ij[0]]));
        (lhs != rhs).then(|| "σ(bb′) ≠ σ(b′)σ(b)".to_string())
    });
    r.record("σ(bb′) = σ(b′) ∘ σ(b)", "end.sigma", rev);
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;
    use crate::hopf::HopfAlgebra;
    use crate::paction::{from_partial_group_action, PartialAction};
    use crate::scalar::Field;
    use crate::smash::smash_product;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn null_context() {
        let k = Algebra::ground(q());
        let p = from_partial_group_action(&Group::cyclic(2).unwrap(), &k, &[vec![q().one()], vec![q().zero()]], &[Matrix::identity(q(), 1), Matrix::zeros(q(), 1, 1)])
            .unwrap();
        let s = smash_product(&p);
        let i = p.hopf().integrals().unwrap();
        let m = morita_context(&s, &i).unwrap();
        assert!(m.verify().all_passed(), "{}", m.verify().to_text());
        assert_eq!(m.tensor_ah.dim(), 1);
        assert_eq!(m.pairing_of(&[q().one()], &[q().one()]), vec![q().one()]);
        assert!(m.strictness().pairing_surjective);
        assert!(end_module_check(&s).all_passed());
    }

    #[test]
    fn sweedler_on_k_is_not_strict() {
        let h = HopfAlgebra::sweedler(q());
        let p = PartialAction::trivial(h.clone(), Algebra::ground(q()));
        let s = smash_product(&p);
        let m = morita_context(&s, &h.integrals().unwrap()).unwrap();
        assert!(m.verify().all_passed(), "{}", m.verify().to_text());
        assert!(!m.strictness().pairing_surjective);
    }

    #[test]
    fn trivial_kc3_on_kc3() {
        let h = HopfAlgebra::group_algebra(q(), &Group::cyclic(3).unwrap());
        let p = PartialAction::trivial(h.clone(), h.algebra().clone());
        let s = smash_product(&p);
        let m = morita_context(&s, &h.integrals().unwrap()).unwrap();
        assert!(m.verify().all_passed(), "{}", m.verify().to_text());
        assert!(end_module_check(&s).all_passed());
    }
}
