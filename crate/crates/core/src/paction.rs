//! Partial module-algebra structures.

use crate::algebra::{diff_detail, Algebra};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::hopf::{HopfAlgebra, IntegralData};
use crate::linalg::{add_scaled, basis_vector, fmt_vector, is_zero, kernel, solve, zero_vector, Matrix, Subspace, Tensor3, Vector};
use crate::report::{first_failure, pairs, singles, triples, Report, Witness};
use crate::scalar::Scalar;

/// `act.get(i, a)` holds the coordinates of `h_i · a_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialAction {
    hopf: HopfAlgebra,
    alg: Algebra,
    act: Tensor3,
    mats: Vec<Matrix>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Profile {
    pub symmetric: bool,
    pub central_unit_orbit: bool,
    pub global: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceData {
    /// Matrix of `a ↦ t · a`.
    pub matrix: Matrix,
    pub image: Subspace,
    pub invariants: Subspace,
    pub surjective: bool,
    /// Some `c` with `tr(c) = 1_A`, when the trace is surjective.
    pub preimage_of_unit: Option<Vector>,
}

impl PartialAction {
    pub fn new(hopf: HopfAlgebra, alg: Algebra, act: Tensor3) -> Result<PartialAction> {
        let (r, c, o) = act.shape();
        if r != hopf.dim() || c != alg.dim() || o != alg.dim() {
            return Err(Error::Dimension(format!(
                "action tensor has shape {r}×{c}→{o}, expected {}×{}→{}",
                hopf.dim(),
                alg.dim(),
                alg.dim()
            )));
        }
        let mats = (0..r).map(|i| act.left_matrix(&hopf.basis(i))).collect();
        Ok(PartialAction { hopf, alg, act, mats })
    }

    /// `h · a = ε(h) a`.
    pub fn trivial(hopf: HopfAlgebra, alg: Algebra) -> PartialAction {
        let f = alg.field();
        let act = Tensor3::from_fn(f, hopf.dim(), alg.dim(), alg.dim(), |i, a| {
            let mut v = zero_vector(f, alg.dim());
            v[a] = hopf.counit()[i].clone();
            v
        });
        PartialAction::new(hopf, alg, act).expect("shapes agree")
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn tensor(&self) -> &Tensor3 {
        &self.act
    }

    /// Matrix of `a ↦ h_i · a`.
    pub fn matrix(&self, i: usize) -> &Matrix {
        &self.mats[i]
    }

    /// Matrix of `a ↦ h · a` for arbitrary `h`.
    pub fn matrix_of(&self, h: &[Scalar]) -> Matrix {
        self.act.left_matrix(h)
    }

    pub fn act(&self, h: &[Scalar], a: &[Scalar]) -> Vector {
        self.act.apply(h, a)
    }

    pub fn act_basis(&self, i: usize, a: &[Scalar]) -> Vector {
        self.mats[i].apply(a)
    }

    /// `h_i · 1_A`.
    pub fn unit_orbit(&self, i: usize) -> Vector {
        self.act_basis(i, self.alg.unit())
    }

    pub fn hdim(&self) -> usize {
        self.hopf.dim()
    }

    pub fn adim(&self) -> usize {
        self.alg.dim()
    }

    /// Axioms (i)–(iii) as a report, and the profile flags.
    pub fn verify(&self) -> (Report, Profile) {
        let (nh, na) = (self.hdim(), self.adim());
        let a = &self.alg;
        let h = &self.hopf;
        let mut r = Report::new();

        let mult = first_failure(triples(nh, na, na), |t| {
            let (i, x, y) = (t[0], a.basis(t[1]), a.basis(t[2]));
            let lhs = self.act_basis(i, &a.mul(&x, &y));
            let mut rhs = a.zero();
            for (p, q, c) in h.delta_terms(i) {
                add_scaled(&mut rhs, c, &a.mul(&self.act_basis(p, &x), &self.act_basis(q, &y)));
            }
            (lhs != rhs).then(|| diff_detail(&lhs, &rhs))
        });
        r.record("(i) h·(ab) = Σ (h₁·a)(h₂·b)", "partial-action.i", mult);

        let unit_h = self.matrix_of(h.unit());
        let unital = first_failure(singles(na), |x| {
            let lhs = unit_h.apply(&a.basis(x[0]));
            (lhs != a.basis(x[0])).then(|| format!("1_H · a = {}", fmt_vector(&lhs)))
        });
        r.record("(ii) 1_H·a = a", "partial-action.ii", unital);

        let orbits: Vec<Vector> = (0..nh).map(|i| self.unit_orbit(i)).collect();
        // (h_q g)· as matrices, indexed [q][g].
        let shifted: Vec<Vec<Matrix>> =
            (0..nh).map(|q| (0..nh).map(|g| self.matrix_of(&h.mul(&h.basis(q), &h.basis(g)))).collect()).collect();
        let weak = first_failure(triples(nh, nh, na), |t| {
            let (i, g, x) = (t[0], t[1], a.basis(t[2]));
            let lhs = self.act_basis(i, &self.act_basis(g, &x));
            let mut rhs = a.zero();
            for (p, q, c) in h.delta_terms(i) {
                add_scaled(&mut rhs, c, &a.mul(&orbits[p], &shifted[q][g].apply(&x)));
            }
            (lhs != rhs).then(|| diff_detail(&lhs, &rhs))
        });
        r.record("(iii) h·(g·a) = Σ (h₁·1)((h₂g)·a)", "partial-action.iii", weak);

        let symmetric = first_failure(triples(nh, nh, na), |t| {
            let (i, g, x) = (t[0], t[1], a.basis(t[2]));
            let lhs = self.act_basis(i, &self.act_basis(g, &x));
            let mut rhs = a.zero();
            for (p, q, c) in h.delta_terms(i) {
                let pg = self.matrix_of(&h.mul(&h.basis(p), &h.basis(g)));
                add_scaled(&mut rhs, c, &a.mul(&pg.apply(&x), &orbits[q]));
            }
            (lhs != rhs).then(String::new)
        })
        .is_none();
        let central = orbits.iter().all(|o| a.is_central(o));
        let global = (0..nh).all(|i| orbits[i] == crate::linalg::scaled(&h.counit()[i], a.unit()));
        (r, Profile { symmetric, central_unit_orbit: central, global })
    }

    /// `{a : h·a = a (h·1_A) for all h}`.
    pub fn invariants(&self) -> Subspace {
        let na = self.adim();
        let blocks: Vec<Matrix> = (0..self.hdim()).map(|i| self.mats[i].sub(&self.alg.right_mul(&self.unit_orbit(i)))).collect();
        kernel(&Matrix::vstack(self.alg.field(), na, &blocks).expect("square blocks"))
    }

    /// Classical invariants `{a : h·a = ε(h) a}`.
    pub fn classical_invariants(&self) -> Subspace {
        let na = self.adim();
        let id = Matrix::identity(self.alg.field(), na);
        let blocks: Vec<Matrix> = (0..self.hdim())
            .map(|i| {
                let mut e = id.clone();
                for d in 0..na {
                    e.set(d, d, self.hopf.counit()[i].clone());
                }
                self.mats[i].sub(&e)
            })
            .collect();
        kernel(&Matrix::vstack(self.alg.field(), na, &blocks).expect("square blocks"))
    }

    /// The partial trace `a ↦ t · a`. Requires a symmetric action with
    /// central `h · 1_A`.
    pub fn trace(&self, integrals: &IntegralData) -> Result<TraceData> {
        let (_, profile) = self.verify();
        if !profile.symmetric || !profile.central_unit_orbit {
            return Err(Error::Precondition("the partial trace needs a symmetric action with central h·1".into()));
        }
        let matrix = self.matrix_of(&integrals.t);
        let image = Subspace::span(self.alg.field(), self.adim(), &matrix.columns());
        let invariants = self.invariants();
        if !image.is_subspace_of(&invariants) {
            return Err(Error::Invariant("trace image is not contained in the invariants".into()));
        }
        let surjective = image == invariants;
        let preimage_of_unit = if surjective { solve(&matrix, self.alg.unit())?.particular } else { None };
        Ok(TraceData { matrix, image, invariants, surjective, preimage_of_unit })
    }

    /// `tr(ab) = tr(a) b` and `tr(ba) = b tr(a)` for basis `a` and `b` in a
    /// basis of the invariants.
    pub fn trace_bimodule_report(&self, data: &TraceData) -> Report {
        let a = &self.alg;
        let inv = data.invariants.basis_vectors();
        let tr = |x: &Vector| data.matrix.apply(x);
        let mut r = Report::new();
        let right = first_failure(pairs(a.dim(), inv.len()), |ij| {
            let x = a.basis(ij[0]);
            let b = &inv[ij[1]];
            let (lhs, rhs) = (tr(&a.mul(&x, b)), a.mul(&tr(&x), b));
            (lhs != rhs).then(|| diff_detail(&lhs, &rhs))
        });
        r.record("tr(ab) = tr(a)b for b ∈ A^H", "trace.bimodule", right);
        let left = first_failure(pairs(a.dim(), inv.len()), |ij| {
            let x = a.basis(ij[0]);
            let b = &inv[ij[1]];
            let (lhs, rhs) = (tr(&a.mul(b, &x)), a.mul(b, &tr(&x)));
            (lhs != rhs).then(|| diff_detail(&lhs, &rhs))
        });
        r.record("tr(ba) = b tr(a) for b ∈ A^H", "trace.bimodule", left);
        r.expect("image of tr lies in A^H", "trace.bimodule", data.image.is_subspace_of(&data.invariants), || {
            Witness::new(&[], "trace image leaves the invariants")
        });
        r
    }

    /// Transports the action to a new basis of `A` given by the columns of `change`.
    pub fn rebase_algebra(&self, change: &Matrix, names: Vec<String>) -> Result<PartialAction> {
        let inv = change.inverse().ok_or_else(|| Error::Dimension("change of basis is singular".into()))?;
        let alg = self.alg.change_basis(change, names)?;
        let n = self.adim();
        let act = Tensor3::from_fn(self.alg.field(), self.hdim(), n, n, |i, a| inv.apply(&self.mats[i].apply(&change.column(a))));
        PartialAction::new(self.hopf.clone(), alg, act)
    }

    /// Replaces the Hopf algebra by an isomorphic copy in the basis given by
    /// the columns of `change`.
    pub fn rebase_hopf(&self, change: &Matrix, names: Vec<String>) -> Result<PartialAction> {
        let hopf = self.hopf.change_basis(change, names)?;
        let n = self.adim();
        let act = Tensor3::from_fn(self.alg.field(), self.hdim(), n, n, |i, a| self.act.apply(&change.column(i), &self.alg.basis(a)));
        PartialAction::new(hopf, self.alg.clone(), act)
    }
}

pub fn verify_partial_action(p: &PartialAction) -> (Report, Profile) {
    p.verify()
}

pub fn invariants(p: &PartialAction) -> Subspace {
    p.invariants()
}

pub fn trace(p: &PartialAction, integrals: &IntegralData) -> Result<TraceData> {
    p.trace(integrals)
}

/// The induced partial action `h · a = u (h ▷ a)` on `A = uB`, for a global
/// action on `B` and a nonzero central idempotent `u`.
pub fn induce_partial(global: &PartialAction, u: &[Scalar]) -> Result<PartialAction> {
    let (report, profile) = global.verify();
    if !report.all_passed() || !profile.global {
        return Err(Error::Precondition("induction needs a global action".into()));
    }
    let b = global.algebra();
    if !b.is_central_idempotent(u) {
        return Err(Error::NotCentralIdempotent(fmt_vector(u)));
    }
    if is_zero(u) {
        return Err(Error::NotCentralIdempotent("u = 0 gives the zero algebra".into()));
    }
    let f = b.field();
    let images: Vec<Vector> = (0..b.dim()).map(|i| b.mul(u, &b.basis(i))).collect();
    let sub = Subspace::span(f, b.dim(), &images);
    let basis = sub.basis_vectors();
    let names = basis
        .iter()
        .enumerate()
        .map(|(i, v)| (0..b.dim()).find(|&k| *v == basis_vector(f, b.dim(), k)).map_or_else(|| format!("u{i}"), |k| b.names()[k].clone()))
        .collect();
    let alg = b.restrict_to_basis(&basis, u, names)?;
    let n = basis.len();
    let act = Tensor3::from_fn(f, global.hdim(), n, n, |i, a| {
        let image = b.mul(u, &global.act_basis(i, &basis[a]));
        sub.coordinates(&image).expect("uB is an ideal")
    });
    PartialAction::new(global.hopf.clone(), alg, act)
}

/// The partial action of `kG` given by unital ideals `D_g = A 1_g` and
/// isomorphisms `α_g : D_{g⁻¹} → D_g`, as `g · a = α_g(a 1_{g⁻¹})`.
///
/// `maps[g]` is any matrix on `A` whose restriction to `D_{g⁻¹}` is `α_g`.
pub fn from_partial_group_action(group: &Group, alg: &Algebra, domains: &[Vector], maps: &[Matrix]) -> Result<PartialAction> {
    let n = group.order();
    let f = alg.field();
    let na = alg.dim();
    if domains.len() != n || maps.len() != n {
        return Err(Error::Dimension(format!("expected {n} domains and maps")));
    }
    for (g, m) in maps.iter().enumerate() {
        if m.rows() != na || m.cols() != na || domains[g].len() != na {
            return Err(Error::Dimension(format!("domain or map of element {g} has the wrong size")));
        }
    }
    let err = |axiom: &str, g: usize, h: usize, detail: String| Error::GroupAction { axiom: axiom.into(), g, h, detail };
    for (g, u) in domains.iter().enumerate() {
        if !alg.is_central_idempotent(u) {
            return Err(err("central idempotent 1_g", g, g, fmt_vector(u)));
        }
    }
    let e = group.identity();
    if &domains[e] != alg.unit() || maps[e] != Matrix::identity(f, na) {
        return Err(err("(i) D_e = A, α_e = id", e, e, "identity element must act as the identity".into()));
    }
    let ideal = |u: &Vector| Subspace::span(f, na, &(0..na).map(|a| alg.mul(&alg.basis(a), u)).collect::<Vec<_>>());
    let ideals: Vec<Subspace> = domains.iter().map(ideal).collect();
    for g in 0..n {
        let gi = group.inverse(g);
        let src = &ideals[gi];
        let m = &maps[g];
        let img = src.map(m);
        if img != ideals[g] || img.dim() != src.dim() {
            return Err(err("α_g is a bijection D_{g⁻¹} → D_g", g, gi, format!("dim D_g⁻¹ = {}, dim α_g(D_g⁻¹) = {}", src.dim(), img.dim())));
        }
        let basis = src.basis_vectors();
        for x in &basis {
            for y in &basis {
                let (lhs, rhs) = (m.apply(&alg.mul(x, y)), alg.mul(&m.apply(x), &m.apply(y)));
                if lhs != rhs {
                    return Err(err("α_g is multiplicative", g, g, diff_detail(&lhs, &rhs)));
                }
            }
        }
        if m.apply(&domains[gi]) != domains[g] {
            return Err(err("α_g(1_{g⁻¹}) = 1_g", g, g, fmt_vector(&m.apply(&domains[gi]))));
        }
    }
    for g in 0..n {
        for h in 0..n {
            let gi = group.inverse(g);
            let gh = group.mul(g, h);
            let left = ideal(&alg.mul(&domains[gi], &domains[h])).map(&maps[g]);
            let right = ideal(&alg.mul(&domains[g], &domains[gh]));
            if left != right {
                return Err(err("(ii) α_g(D_{g⁻¹} ∩ D_h) = D_g ∩ D_{gh}", g, h, format!("dimensions {} and {}", left.dim(), right.dim())));
            }
            let hi = group.inverse(h);
            let ghi = group.inverse(gh);
            for x in ideal(&alg.mul(&domains[hi], &domains[ghi])).basis_vectors() {
                let (lhs, rhs) = (maps[g].apply(&maps[h].apply(&x)), maps[gh].apply(&x));
                if lhs != rhs {
                    return Err(err("(iii) α_g α_h = α_{gh} on D_{h⁻¹} ∩ D_{(gh)⁻¹}", g, h, diff_detail(&lhs, &rhs)));
                }
            }
        }
    }
    let hopf = HopfAlgebra::group_algebra(f, group);
    let act = Tensor3::from_fn(f, n, na, na, |g, a| maps[g].apply(&alg.mul(&alg.basis(a), &domains[group.inverse(g)])));
    PartialAction::new(hopf, alg.clone(), act)
}
