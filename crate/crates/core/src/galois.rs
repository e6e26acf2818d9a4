//! Induced partial coactions and the partial Hopf–Galois canonical map.

use crate::algebra::{diff_detail, tensor_mul, tensor_vec, Algebra};
use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, IntegralData};
use crate::linalg::{add_scaled, fmt_vector, is_zero, kernel, solve, zero_vector, Matrix, QuotientSpace, Subspace, Vector};
use crate::morita::{balanced_tensor, morita_context, Strictness};
use crate::paction::PartialAction;
use crate::report::{first_failure, pairs, singles, Report, Witness};
use crate::scalar::Scalar;
use crate::smash::smash_product;

/// `ρ : A → A ⊗ H*`, with `a_b ⊗ f_g` at index `b · dim H* + g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialCoaction {
    pub alg: Algebra,
    pub hstar: HopfAlgebra,
    pub rho: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theta {
    /// `θ(f) = Σ f(t₁) t₂`, from `H*` to `H`.
    pub theta: Matrix,
    /// `θ⁻¹(1_H)`.
    pub t_inv: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisReport {
    pub coaction: PartialCoaction,
    pub coinv: Subspace,
    pub underline: Subspace,
    /// `A ⊗_{A^H} A`.
    pub source: QuotientSpace,
    /// `can` on `A ⊗ A`, into `A ⊗ H*`.
    pub can_full: Matrix,
    /// `can` in quotient coordinates.
    pub can_matrix: Matrix,
    pub can_surjective: bool,
    pub can_bijective: bool,
    pub theta: Theta,
    pub proj_basis: Vec<(Vector, Vector)>,
    pub strictness: Option<Strictness>,
    pub trace_surjective: Option<bool>,
    pub equivalences_consistent: bool,
    pub checks: Report,
}

impl PartialCoaction {
    fn nh(&self) -> usize {
        self.hstar.dim()
    }

    pub fn rho_of(&self, a: &[Scalar]) -> Vector {
        self.rho.apply(a)
    }

    /// Product in `A ⊗ H*`.
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        tensor_mul(&self.alg, self.hstar.algebra(), x, y)
    }

    pub fn rho_one(&self) -> Vector {
        self.rho_of(self.alg.unit())
    }

    /// `(ρ(1) ⊗ 1) x` for `x ∈ A ⊗ H* ⊗ H*`.
    fn rho_one_times(&self, x: &[Scalar]) -> Vector {
        let (na, nh) = (self.alg.dim(), self.nh());
        let one = self.rho_one();
        let f = self.alg.field();
        let mut out = zero_vector(f, na * nh * nh);
        for (k, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (bg, h) = (k / nh, k % nh);
            let prod = self.mul(&one, &crate::linalg::basis_vector(f, na * nh, bg));
            for (m, d) in prod.iter().enumerate() {
                if !d.is_zero() {
                    out[m * nh + h] += &(c * d);
                }
            }
        }
        out
    }

    pub fn verify(&self) -> Report {
        let a = &self.alg;
        let (na, nh) = (a.dim(), self.nh());
        let hs = &self.hstar;
        let mut r = Report::new();
        let mult = first_failure(pairs(na, na), |xy| {
            let (x, y) = (a.basis(xy[0]), a.basis(xy[1]));
            let lhs = self.rho_of(&a.mul(&x, &y));
            let rhs = self.mul(&self.rho_of(&x), &self.rho_of(&y));
            (lhs != rhs).then(|| diff_detail(&lhs, &rhs))
        });
        r.record("(i) ρ(ab) = ρ(a)ρ(b)", "partial-coaction.i", mult);
        let counit = first_failure(singles(na), |x| {
            let rx = self.rho_of(&a.basis(x[0]));
            let mut lhs = a.zero();
            for (k, c) in rx.iter().enumerate() {
                lhs[k / nh] += &(c * &hs.counit()[k % nh]);
            }
            (lhs != a.basis(x[0])).then(|| diff_detail(&lhs, &a.basis(x[0])))
        });
        r.record("(ii) (I⊗ε)ρ(a) = a", "partial-coaction.ii", counit);
        let coassoc = first_failure(singles(na), |x| {
            let rx = self.rho_of(&a.basis(x[0]));
            let f = a.field();
            let mut left = zero_vector(f, na * nh * nh);
            let mut delta = zero_vector(f, na * nh * nh);
            for (k, c) in rx.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (b, g) = (k / nh, k % nh);
                for (m, d) in self.rho_of(&a.basis(b)).iter().enumerate() {
                    if !d.is_zero() {
                        left[m * nh + g] += &(c * d);
                    }
                }
                for (pp, q, d) in hs.delta_terms(g) {
                    delta[(b * nh + pp) * nh + q] += &(c * d);
                }
            }
            let right = self.rho_one_times(&delta);
            (left != right).then(|| diff_detail(&left, &right))
        });
        r.record("(iii) (ρ⊗I)ρ(a) = (ρ(1)⊗1)(I⊗Δ)ρ(a)", "partial-coaction.iii", coassoc);
        r
    }

    /// `{a : ρ(a) = (a ⊗ 1)ρ(1)}`.
    pub fn coinvariants(&self) -> Subspace {
        let a = &self.alg;
        let one = self.rho_one();
        let cols: Vec<Vector> = (0..a.dim())
            .map(|x| {
                let ax = tensor_vec(&a.basis(x), self.hstar.unit());
                let mut v = self.rho_of(&a.basis(x));
                add_scaled(&mut v, &-a.field().one(), &self.mul(&ax, &one));
                v
            })
            .collect();
        kernel(&Matrix::from_columns(a.field(), a.dim() * self.nh(), &cols))
    }

    /// `(A ⊗ H*)ρ(1)`.
    pub fn underline_tensor(&self) -> Subspace {
        let n = self.alg.dim() * self.nh();
        let f = self.alg.field();
        let one = self.rho_one();
        Subspace::span(f, n, &(0..n).map(|k| self.mul(&crate::linalg::basis_vector(f, n, k), &one)).collect::<Vec<_>>())
    }
}

/// `ρ(a) = Σ (h_i · a) ⊗ h_i*` into `A ⊗ H*`.
pub fn induced_coaction(p: &PartialAction) -> PartialCoaction {
    let a = p.algebra();
    let (na, nh) = (p.adim(), p.hdim());
    let f = a.field();
    let cols: Vec<Vector> = (0..na)
        .map(|x| {
            let mut v = zero_vector(f, na * nh);
            for i in 0..nh {
                for (b, c) in p.act_basis(i, &a.basis(x)).into_iter().enumerate() {
                    v[b * nh + i] = c;
                }
            }
            v
        })
        .collect();
    PartialCoaction { alg: a.clone(), hstar: p.hopf().dual(), rho: Matrix::from_columns(f, na * nh, &cols) }
}

pub fn verify_partial_coaction(c: &PartialCoaction) -> Report {
    c.verify()
}

pub fn coinvariants(c: &PartialCoaction) -> Subspace {
    c.coinvariants()
}

pub fn underline_tensor(c: &PartialCoaction) -> Subspace {
    c.underline_tensor()
}

/// `θ(f) = Σ f(t₁) t₂` and `T = θ⁻¹(1_H)`.
pub fn theta_iso(h: &HopfAlgebra, integrals: &IntegralData) -> Result<Theta> {
    let n = h.dim();
    let f = h.field();
    let d = h.delta(&integrals.t);
    let cols: Vec<Vector> = (0..n).map(|j| (0..n).map(|q| d[j * n + q].clone()).collect()).collect();
    let theta = Matrix::from_columns(f, n, &cols);
    let inv = theta.inverse().ok_or_else(|| Error::Invariant("θ is singular".into()))?;
    let t_inv = inv.apply(h.unit());
    Ok(Theta { theta, t_inv })
}

/// `can(a ⊗ b) = (a ⊗ 1)ρ(b)` on `A ⊗ A`.
fn can_full(c: &PartialCoaction) -> Matrix {
    let a = &c.alg;
    let na = a.dim();
    let cols: Vec<Vector> = (0..na * na)
        .map(|xy| c.mul(&tensor_vec(&a.basis(xy / na), c.hstar.unit()), &c.rho_of(&a.basis(xy % na))))
        .collect();
    Matrix::from_columns(a.field(), na * c.nh(), &cols)
}

/// Pairs `(a_i, b_i)` with `a = Σ a_i (t · (b_i a))`, from a preimage of
/// `(1 ⊗ T)ρ(1)` under `can`.
pub fn projective_basis(p: &PartialAction) -> Result<Vec<(Vector, Vector)>> {
    let integrals = p.hopf().integrals()?;
    let theta = theta_iso(p.hopf(), &integrals)?;
    let coaction = induced_coaction(p);
    let source = balanced_tensor(p.algebra(), &p.invariants());
    let full = can_full(&coaction);
    let under = coaction.underline_tensor();
    let image = Subspace::span(p.algebra().field(), full.rows(), &full.columns());
    if image != under {
        return Err(Error::Precondition("the canonical map is not surjective".into()));
    }
    solve_projective(p, &coaction, &source, &full, &theta)
}

fn solve_projective(p: &PartialAction, c: &PartialCoaction, source: &QuotientSpace, full: &Matrix, theta: &Theta) -> Result<Vec<(Vector, Vector)>> {
    let a = p.algebra();
    let na = a.dim();
    let target = c.mul(&tensor_vec(a.unit(), &theta.t_inv), &c.rho_one());
    let can_q = full.mul(&source.section);
    let x = solve(&can_q, &target)?.particular.ok_or_else(|| Error::Invariant("(1⊗T)ρ(1) is not in the image of can".into()))?;
    let rep = source.lift(&x);
    let mut out = Vec::new();
    for i in 0..na {
        let b = rep[i * na..(i + 1) * na].to_vec();
        if !is_zero(&b) {
            out.push((a.basis(i), b));
        }
    }
    Ok(out)
}

/// Runs every construction above and checks the statements tying
/// surjectivity of `can`, of the Morita brackets and of the trace together.
pub fn galois_report(p: &PartialAction) -> Result<GaloisReport> {
    let h = p.hopf();
    let a = p.algebra();
    let f = a.field();
    let (na, nh) = (p.adim(), p.hdim());
    let integrals = h.integrals()?;
    let coaction = induced_coaction(p);
    let mut r = Report::new();
    r.absorb("", coaction.verify());

    let inv = p.invariants();
    let coinv = coaction.coinvariants();
    r.expect("A^coH* = A^H", "galois.coinvariants", coinv == inv, || {
        Witness::new(&[], format!("dim A^coH* = {}, dim A^H = {}", coinv.dim(), inv.dim()))
    });

    let underline = coaction.underline_tensor();
    let ub = underline.basis_vectors();
    let left_closed = first_failure(pairs(na, ub.len()), |ij| {
        let v = coaction.mul(&tensor_vec(&a.basis(ij[0]), coaction.hstar.unit()), &ub[ij[1]]);
        (!underline.contains(&v)).then(|| fmt_vector(&v))
    });
    r.record("(a ⊗ 1)·(A ⊗ H*)ρ(1) ⊆ (A ⊗ H*)ρ(1)", "galois.underline", left_closed);
    let right_closed = first_failure(pairs(ub.len(), na), |ij| {
        let v = coaction.mul(&ub[ij[0]], &coaction.rho_of(&a.basis(ij[1])));
        (!underline.contains(&v)).then(|| fmt_vector(&v))
    });
    r.record("(A ⊗ H*)ρ(1)·ρ(b) ⊆ (A ⊗ H*)ρ(1)", "galois.underline", right_closed);

    let source = balanced_tensor(a, &inv);
    let full = can_full(&coaction);
    let killed = source.sub.basis_vectors().iter().position(|v| !is_zero(&full.apply(v)));
    if let Some(i) = killed {
        return Err(Error::Invariant(format!("can does not kill balancing relation {i}")));
    }
    r.pass("can is A^H-balanced", "galois.can");
    let can_bi = first_failure(crate::report::triples(na, na, na), |t| {
        let (x, y, z) = (a.basis(t[0]), a.basis(t[1]), a.basis(t[2]));
        let lhs = full.apply(&tensor_vec(&a.mul(&z, &x), &y));
        let rhs = coaction.mul(&tensor_vec(&z, coaction.hstar.unit()), &full.apply(&tensor_vec(&x, &y)));
        let lhs2 = full.apply(&tensor_vec(&x, &a.mul(&y, &z)));
        let rhs2 = coaction.mul(&full.apply(&tensor_vec(&x, &y)), &coaction.rho_of(&z));
        (lhs != rhs || lhs2 != rhs2).then(|| format!("{}; {}", diff_detail(&lhs, &rhs), diff_detail(&lhs2, &rhs2)))
    });
    r.record("can is an A-A bimodule map", "galois.can", can_bi);
    let can_matrix = full.mul(&source.section);
    let image = Subspace::span(f, na * nh, &can_matrix.columns());
    if !image.is_subspace_of(&underline) {
        return Err(Error::Invariant("can leaves (A ⊗ H*)ρ(1)".into()));
    }
    let can_surjective = image == underline;
    let can_bijective = can_surjective && can_matrix.rank() == source.dim();

    let theta = theta_iso(h, &integrals)?;
    r.pass("θ is bijective", "galois.theta");

    let proj_basis = if can_surjective { solve_projective(p, &coaction, &source, &full, &theta)? } else { Vec::new() };
    if can_surjective {
        let tr = p.matrix_of(&integrals.t);
        let recon = first_failure(singles(na), |x| {
            let ax = a.basis(x[0]);
            let mut sum = a.zero();
            for (ai, bi) in &proj_basis {
                add_scaled(&mut sum, &f.one(), &a.mul(ai, &tr.apply(&a.mul(bi, &ax))));
            }
            (sum != ax).then(|| diff_detail(&sum, &ax))
        });
        r.record("a = Σ a_i (t·(b_i a))", "galois.projective", recon);
        let lands = first_failure(pairs(proj_basis.len(), na), |ix| {
            let v = tr.apply(&a.mul(&proj_basis[ix[0]].1, &a.basis(ix[1])));
            (!inv.contains(&v)).then(|| fmt_vector(&v))
        });
        r.record("t·(b_i a) ∈ A^H", "galois.projective", lands);
    } else {
        r.skip("a = Σ a_i (t·(b_i a))", "galois.projective", "can is not surjective");
    }
    r.expect("can surjective ⟹ can bijective", "galois.bijective", !can_surjective || can_bijective, || {
        Witness::new(&[], format!("rank {} < dim A ⊗_{{A^H}} A = {}", can_matrix.rank(), source.dim()))
    });

    let (_, profile) = p.verify();
    let mut strictness = None;
    let mut trace_surjective = None;
    let mut consistent = !can_surjective || can_bijective;
    if !profile.symmetric || !profile.central_unit_orbit {
        let why = "action is not symmetric with central h·1";
        r.skip("[a, b] = (I⊗θ) can(a ⊗ b)", "galois.bracket", why);
        r.skip("can surjective ⟺ [,] surjective", "galois.equivalence", why);
        r.skip("trace surjective ⟹ (strict ⟺ Galois)", "galois.equivalence", why);
    } else if h.antipode_inverse().is_err() {
        let why = "antipode is not invertible";
        r.skip("[a, b] = (I⊗θ) can(a ⊗ b)", "galois.bracket", why);
        r.skip("can surjective ⟺ [,] surjective", "galois.equivalence", why);
        r.skip("trace surjective ⟹ (strict ⟺ Galois)", "galois.equivalence", why);
    } else {
        let s = smash_product(p);
        let m = morita_context(&s, &integrals)?;
        let embedded = s.carrier.inclusion().mul(&m.bracket);
        let mut i_theta = Matrix::zeros(f, na * nh, na * nh);
        for x in 0..na {
            for u in 0..nh {
                for v in 0..nh {
                    i_theta.set(x * nh + u, x * nh + v, theta.theta.get(u, v).clone());
                }
            }
        }
        let rhs = i_theta.mul(&full);
        let bad = (0..na * na).find(|&k| embedded.column(k) != rhs.column(k));
        r.record(
            "[a, b] = (I⊗θ) can(a ⊗ b)",
            "galois.bracket",
            bad.map(|k| Witness::new(&[k / na, k % na], diff_detail(&embedded.column(k), &rhs.column(k)))),
        );
        let st = m.strictness();
        let eq_a = st.bracket_surjective == can_surjective;
        r.expect("can surjective ⟺ [,] surjective", "galois.equivalence", eq_a, || {
            Witness::new(&[], format!("can surjective = {can_surjective}, bracket surjective = {}", st.bracket_surjective))
        });
        let trace = p.trace(&integrals)?;
        let eq_c = !trace.surjective || (st.strict() == can_bijective);
        r.expect("trace surjective ⟹ (strict ⟺ Galois)", "galois.equivalence", eq_c, || {
            Witness::new(&[], format!("strict = {}, bijective = {can_bijective}", st.strict()))
        });
        consistent &= eq_a && eq_c && bad.is_none();
        strictness = Some(st);
        trace_surjective = Some(trace.surjective);
    }
    r.flag("galois", can_bijective);
    Ok(GaloisReport {
        coaction,
        coinv,
        underline,
        source,
        can_full: full,
        can_matrix,
        can_surjective,
        can_bijective,
        theta,
        proj_basis,
        strictness,
        trace_surjective,
        equivalences_consistent: consistent,
        checks: r,
    })
}

/// `can` as a partially filled report.
pub fn canonical_map(p: &PartialAction) -> Result<GaloisReport> {
    galois_report(p)
}
